import io

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_graph
from nbsmooth.errors import FormatError
from nbsmooth.fileio import parse_edge_list, read_matrix_csv, write_edge_list, write_matrix_csv
from nbsmooth.nbs import estimate_nbs


def test_parse_zero_indexed_path():
    A = parse_edge_list(io.StringIO("0 1\n1 2\n"))
    np.testing.assert_array_equal(A, [[0, 1, 0], [1, 0, 1], [0, 1, 0]])


def test_parse_one_indexed_dedup():
    A = parse_edge_list(io.StringIO("1 2\n2 1\n"), "one")
    np.testing.assert_array_equal(A, [[0, 1], [1, 0]])


def test_parse_self_loop_dropped():
    A, dropped = parse_edge_list(io.StringIO("0 1\n3 3\n"), return_dropped=True)
    assert dropped == 1
    assert A.shape == (4, 4) and A.sum() == 2


def test_parse_comments_commas_declared_size():
    text = "# header\n\n0,2\n  1 , 2 \n"
    A = parse_edge_list(io.StringIO(text), n=5)
    assert A.shape == (5, 5)
    assert A[0, 2] == A[2, 1] == 1


@pytest.mark.parametrize("text, line", [("0 1\n1 x\n", 2), ("0 1 2\n", 1), ("0 -1\n", 1), ("1\n", 1)])
def test_parse_errors_report_line(text, line):
    with pytest.raises(FormatError, match=f"line {line}"):
        parse_edge_list(io.StringIO(text))


def test_parse_zero_id_one_indexed_is_negative():
    with pytest.raises(FormatError):
        parse_edge_list(io.StringIO("0 1\n"), "one")


@given(st.integers(2, 25), st.floats(0, 1), st.integers(0, 1000), st.sampled_from(["zero", "one"]))
def test_edge_list_roundtrip(n, p, seed, indexing):
    A = random_graph(n, p, seed)
    buf = io.StringIO()
    write_edge_list(A, buf, indexing)
    buf.seek(0)
    np.testing.assert_array_equal(parse_edge_list(buf, indexing, n=n), A)


def test_identity_roundtrip(tmp_path):
    p = tmp_path / "eye.csv"
    write_matrix_csv(np.eye(2), p)
    assert p.read_text().startswith("# n=2\n")
    np.testing.assert_array_equal(read_matrix_csv(p), np.eye(2))


def test_estimate_roundtrip(tmp_path):
    P = estimate_nbs(random_graph(30, 0.3, 1))
    p = tmp_path / "p.csv"
    write_matrix_csv(P, p, header=False)
    np.testing.assert_allclose(read_matrix_csv(p), P, atol=1e-12, rtol=0)
    # 17 significant digits make the round trip exact in practice
    np.testing.assert_array_equal(read_matrix_csv(p), P)


def test_empty_and_ragged(tmp_path):
    p = tmp_path / "x.csv"
    p.write_text("")
    with pytest.raises(FormatError):
        read_matrix_csv(p)
    p.write_text("1,2\n3\n")
    with pytest.raises(FormatError, match="ragged"):
        read_matrix_csv(p)
    p.write_text("1,a\n")
    with pytest.raises(FormatError):
        read_matrix_csv(p)


def test_write_rejects_nonfinite(tmp_path):
    with pytest.raises(FormatError):
        write_matrix_csv(np.array([[np.nan]]), tmp_path / "x.csv")
