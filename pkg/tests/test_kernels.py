import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import BACKENDS

from pbei import _purekernels, kernels
from pbei.combinatorics import pbei
from pbei.fixtures import TAILED_TRIANGLE
from pbei.poly import GF2, GF3, QQ

try:
    from pbei import _ckernels
except ImportError:
    _ckernels = None

_mono = st.lists(st.integers(0, 2), min_size=4, max_size=4).map(tuple)


def test_backend_flag():
    assert kernels.BACKEND in ("compiled", "python")


def test_pure_python_override():
    env = {**os.environ, "PBEI_PURE_PYTHON": "1"}
    out = subprocess.run(
        [sys.executable, "-c", "from pbei import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("backend", BACKENDS)
@given(_mono, _mono)
def test_monomial_divides(backend, a, b):
    assert backend.monomial_divides(a, b) == all(x <= y for x, y in zip(a, b))


def _basis_data(fld):
    return [(b.leading_monomial, b.terms) for b in pbei(TAILED_TRIANGLE, fld).basis]


@settings(max_examples=60, deadline=None)
@given(
    st.dictionaries(st.lists(st.integers(0, 2), min_size=12, max_size=12).map(tuple), st.integers(-4, 4).filter(bool), max_size=6),
    st.sampled_from([QQ, GF2, GF3]),
)
def test_reduce_agrees_across_backends(terms, fld):
    f = {m: fld.coerce(c) for m, c in terms.items()}
    f = {m: c for m, c in f.items() if c}
    data = _basis_data(fld)
    ref = _purekernels.reduce_full(dict(f), data, fld.modulus)
    if _ckernels is not None:
        assert _ckernels.reduce_full(dict(f), data, fld.modulus) == ref


def test_reduce_large_modulus(backend):
    p = 1_000_003
    basis = [((1, 0), {(1, 0): 1, (0, 1): p - 2})]
    assert backend.reduce_full({(2, 0): 1}, basis, p) == {(0, 2): 4}
    assert backend.reduce_full({(1, 0): Fraction(1, 3)}, [((1, 0), {(1, 0): 1, (0, 1): -1})], 0) == {(0, 1): Fraction(1, 3)}


@pytest.mark.parametrize("backend", BACKENDS)
@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=4))
def test_snf_agrees_across_backends(backend, rows):
    assert backend.snf_diagonal([r[:] for r in rows]) == _purekernels.snf_diagonal([r[:] for r in rows])
