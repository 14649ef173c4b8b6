import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nbsmooth.errors import InvalidSpecError, ModelViolationError
from nbsmooth.graphons import (
    custom_graphon,
    eval_graphon,
    from_identifier,
    g1_blocks,
    load_blockmodel,
    make_blockmodel_spec,
    table1_graphon,
)

unit = st.floats(0.0, 1.0, allow_nan=False)
BUILTINS = [table1_graphon(1, 2000), table1_graphon(2), table1_graphon(3), table1_graphon(4)]


def test_g1_block_count_uses_natural_log():
    assert g1_blocks(2000) == 7


def test_g1_values():
    f = table1_graphon(1, 2000)
    assert eval_graphon(f, 0.10, 0.05) == pytest.approx(1 / 8)
    assert eval_graphon(f, 0.10, 0.20) == pytest.approx(0.3 / 8)
    # last bin is closed
    assert eval_graphon(f, 1.0, 0.99) == pytest.approx(7 / 8)


def test_g2_values():
    f = table1_graphon(2)
    assert eval_graphon(f, 0.5, 0.5) == pytest.approx(math.sin(1) / 2 + 0.5)
    assert eval_graphon(f, 0.5, 0.5) == pytest.approx(0.920735, abs=1e-6)
    assert eval_graphon(f, 0.5, 0.3) == pytest.approx(0.079265, abs=1e-6)


def test_g3_values():
    f = table1_graphon(3)
    for u in (0.0, 0.3, 1.0):
        assert eval_graphon(f, u, u) == pytest.approx(0.475021, abs=1e-6)
    assert abs(eval_graphon(f, 0.0, 1.0) - 1) < 1e-5


def test_g4_values():
    f = table1_graphon(4)
    assert eval_graphon(f, 1.0, 1.0) == pytest.approx(2 / 3 * math.cos(0.5) + 0.15)
    assert eval_graphon(f, 1.0, 1.0) == pytest.approx(0.735055, abs=1e-6)
    assert eval_graphon(f, 0.0, 0.0) == 0.15
    assert eval_graphon(f, 1e-200, 0.0) == 0.15


@pytest.mark.parametrize("spec", BUILTINS, ids=["g1", "g2", "g3", "g4"])
@given(u=unit, v=unit)
def test_builtin_symmetry(spec, u, v):
    assert eval_graphon(spec, u, v) == eval_graphon(spec, v, u)


@pytest.mark.parametrize("spec", BUILTINS, ids=["g1", "g2", "g3", "g4"])
def test_builtin_range_on_grid(spec):
    g = np.linspace(0, 1, 100)
    vals = eval_graphon(spec, g[:, None], g[None, :])
    assert vals.shape == (100, 100)
    assert np.all((vals >= 0) & (vals <= 1))


@given(k=st.integers(1, 7), a=st.floats(0.02, 0.98), b=st.floats(0.02, 0.98))
def test_g1_constant_inside_block(k, a, b):
    f = table1_graphon(1, 2000)
    lo, hi = (k - 1) / 7, k / 7
    u, v = lo + a * (hi - lo), lo + b * (hi - lo)
    assert eval_graphon(f, u, v) == k / 8


def test_blockmodel_single_block_is_constant():
    f = make_blockmodel_spec([[0.4]])
    g = np.linspace(0, 1, 11)
    assert np.all(eval_graphon(f, g[:, None], g[None, :]) == 0.4)


def test_blockmodel_two_blocks():
    f = make_blockmodel_spec([[0.9, 0.1], [0.1, 0.9]])
    assert eval_graphon(f, 0.25, 0.25) == 0.9
    assert eval_graphon(f, 0.25, 0.75) == 0.1
    assert eval_graphon(f, 1.0, 1.0) == 0.9


def test_g1_equals_its_blockmodel():
    K = g1_blocks(2000)
    B = np.full((K, K), 0.3 / (K + 1))
    np.fill_diagonal(B, np.arange(1, K + 1) / (K + 1))
    bm = make_blockmodel_spec(B)
    g = np.linspace(0, 1, 100)
    np.testing.assert_array_equal(
        eval_graphon(bm, g[:, None], g[None, :]),
        eval_graphon(table1_graphon(1, 2000), g[:, None], g[None, :]),
    )


@pytest.mark.parametrize(
    "B, bounds",
    [
        ([[0.5, 0.1], [0.2, 0.5]], None),
        ([[0.5, 0.1], [0.1, 0.5]], [0, 0.7, 0.3]),
        ([[0.5, 0.1], [0.1, 0.5]], [0.1, 0.5, 1.0]),
        ([[1.5]], None),
        ([[0.5, 0.1], [0.1, 0.5]], [0, 1]),
    ],
)
def test_blockmodel_invalid(B, bounds):
    with pytest.raises(InvalidSpecError):
        make_blockmodel_spec(B, bounds)


def test_custom_out_of_range():
    f = custom_graphon(lambda u, v: u + v)
    assert eval_graphon(f, 0.2, 0.3) == pytest.approx(0.5)
    with pytest.raises(ModelViolationError):
        eval_graphon(f, 0.8, 0.8)


def test_identifiers(tmp_path):
    assert from_identifier("3").kind == "table1_g3"
    assert from_identifier("1", 500).n_ref == 500
    with pytest.raises(InvalidSpecError):
        from_identifier("1")
    with pytest.raises(InvalidSpecError):
        from_identifier("7")
    p = tmp_path / "bm.json"
    p.write_text('{"B": [[0.6, 0.1], [0.1, 0.3]], "boundaries": [0, 0.4, 1]}')
    spec = from_identifier(f"blockmodel:{p}")
    assert eval_graphon(spec, 0.5, 0.9) == 0.3
    assert load_blockmodel(p).n_blocks == 2
    p.write_text("not json")
    with pytest.raises(InvalidSpecError):
        load_blockmodel(p)
