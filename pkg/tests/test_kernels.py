import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from permclass import _kernels, perms
from permclass._kernels import get_backend

PY = get_backend("python")
try:
    CY = get_backend("cython")
except ImportError:  # extension not built; parity tests degenerate
    CY = PY

perm_lists = st.permutations(range(1, 9))
values = st.integers(min_value=1, max_value=9)


def _child(p, v):
    v = min(v, len(p) + 1)
    q = [x + 1 if x >= v else x for x in p]
    q.append(v)
    return q, v


@given(perm_lists, values)
def test_class_a_backends_agree(p, v):
    q, v = _child(list(p), v)
    assert PY.class_a_child_ok(q, v) == CY.class_a_child_ok(q, v)


@given(perm_lists, values)
def test_class_b_backends_agree(p, v):
    q, v = _child(list(p), v)
    assert PY.class_b_child_ok(q, v) == CY.class_b_child_ok(q, v)


@given(perm_lists, values)
def test_class_a_check_matches_generic_containment(p, v):
    q, v = _child(list(p), v)
    parent = perms.Perm(tuple(p))
    if not perms.avoids_basis(parent, perms.CLASS_A_BASIS):
        return
    want = perms.avoids_basis(perms.Perm(q), perms.CLASS_A_BASIS)
    assert PY.class_a_child_ok(q, v) == want


@given(perm_lists, values)
def test_class_b_check_matches_generic_containment(p, v):
    q, v = _child(list(p), v)
    parent = perms.Perm(tuple(p))
    if not perms.avoids_basis(parent, perms.CLASS_B_BASIS):
        return
    want = perms.avoids_basis(perms.Perm(q), perms.CLASS_B_BASIS)
    assert PY.class_b_child_ok(q, v) == want


coeff_lists = st.lists(
    st.one_of(st.integers(-9, 9),
              st.fractions(min_value=-3, max_value=3, max_denominator=6)),
    min_size=1, max_size=6)


@given(coeff_lists, coeff_lists)
def test_tpoly_mul_acc_backends_agree(p, q):
    a1 = [0] * (len(p) + len(q) - 1)
    a2 = [0] * (len(p) + len(q) - 1)
    PY.tpoly_mul_acc(a1, p, q)
    CY.tpoly_mul_acc(a2, list(p), list(q))
    assert a1 == a2


@given(coeff_lists, coeff_lists, st.integers(0, 8))
def test_series_mul_backends_agree(a, b, order):
    assert PY.series_mul(a, b, order) == CY.series_mul(list(a), list(b),
                                                      order)


def test_get_backend_unknown():
    with pytest.raises(ValueError):
        get_backend("fortran")


def test_no_ext_env_forces_python_backend():
    code = ("from permclass import _kernels; print(_kernels.BACKEND)")
    env = dict(os.environ, PERMCLASS_NO_EXT="1")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_active_backend_exposed():
    assert _kernels.BACKEND in ("python", "cython")
