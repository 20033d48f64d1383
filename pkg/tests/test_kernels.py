import numpy as np
import pytest

from caminakit import kernels
from caminakit.catalog import make_group

from conftest import group

backends = kernels.available_backends()
needs_both = pytest.mark.skipif(len(backends) < 2, reason="compiled backend not built")

SPECS = ["cyclic:7", "dihedral:12", "quaternion:16", "symmetric:4", "frobenius:7:3:6",
         "extraspecial:2:4:2"]


def test_selected_backend_is_available():
    assert kernels.BACKEND in backends


@needs_both
@pytest.mark.parametrize("spec", SPECS)
def test_backends_agree(spec):
    G = group(spec)
    py, cy = backends["python"], backends["cython"]
    t, inv = G.table, G.inverse
    assert py.is_associative(t) == cy.is_associative(t) is True
    assert np.array_equal(py.conjugacy_labels(t, inv), cy.conjugacy_labels(t, inv))
    cls = G.classes.class_of
    r = len(G.classes)
    a1, ok1 = py.class_mult_coeffs(t, inv, cls, r)
    a2, ok2 = cy.class_mult_coeffs(t, inv, cls, r)
    assert ok1 and ok2 and np.array_equal(a1, a2)

    sub = np.array([0], dtype=np.int64)
    for gens in ([1], [1, 2], list(range(1, G.order, 3))):
        g = np.array(gens, dtype=np.int64)
        m1, m2 = py.closure(t, g), cy.closure(t, g)
        assert np.array_equal(m1, m2)
        sub = np.nonzero(m1)[0].astype(np.int64)
    outside = np.setdiff1d(np.arange(G.order), sub).astype(np.int64)
    assert py.coset_in_class(t, cls, outside, sub) == cy.coset_in_class(t, cls, outside, sub)
    assert py.commutators_cover(t, inv, outside, sub) == cy.commutators_cover(t, inv, outside, sub)


@needs_both
def test_non_associative_detected_by_both():
    rows = np.array([[0, 1, 2, 3, 4],
                     [1, 0, 3, 4, 2],
                     [2, 4, 0, 1, 3],
                     [3, 2, 4, 0, 1],
                     [4, 3, 1, 2, 0]], dtype=np.int64)
    for b in backends.values():
        assert not b.is_associative(rows)


@needs_both
@pytest.mark.parametrize("p", [5, 7, 31])
def test_rref_agrees(p):
    rng = np.random.default_rng(p)
    for shape in ((4, 6), (6, 4), (5, 5)):
        a = rng.integers(0, p, size=shape).astype(np.int64)
        a[-1] = (a[0] * 2 + a[1]) % p  # force a dependency
        R1, piv1 = backends["python"].rref_mod_p(a.copy(), p)
        R2, piv2 = backends["cython"].rref_mod_p(a.copy(), p)
        assert np.array_equal(R1, R2) and list(piv1) == list(piv2)


def test_python_backend_env(monkeypatch):
    import importlib
    monkeypatch.setenv("CAMINAKIT_BACKEND", "python")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
        assert make_group("symmetric:3").order == 6
    finally:
        monkeypatch.delenv("CAMINAKIT_BACKEND")
        importlib.reload(kernels)
