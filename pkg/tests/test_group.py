import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from caminakit.errors import MalformedInput, NotAGroup, OrderCapExceeded
from caminakit.group import (Permutations, build_group, cayley_text, center, centralizer,
                             class_size, commutator, conjugacy_classes, element_order,
                             exponent, from_cayley, parse_group_text, read_group_file)

from conftest import brute_conjugate, group


def test_trivial_group():
    G = from_cayley([[0]])
    assert G.order == 1
    assert exponent(G) == 1


def test_permutation_closure_s3():
    G = build_group(Permutations(3, ((1, 2, 0), (1, 0, 2))))
    assert G.order == 6
    assert not G.is_abelian


def test_permutation_closure_matches_brute_force():
    gens = ((1, 2, 0, 3), (1, 0, 2, 3), (0, 1, 3, 2))
    seen = {tuple(range(4))}
    frontier = list(seen)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = tuple(g[k] for k in x)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    assert build_group(Permutations(4, gens)).order == len(seen) == 24


def test_non_associative_rejected():
    # a Latin square with identity 0 that is not associative (order 5 loop)
    rows = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroup):
        from_cayley(rows)


def test_latin_and_identity_checks():
    with pytest.raises(NotAGroup):
        from_cayley([[0, 1], [1, 1]])
    with pytest.raises(NotAGroup):
        from_cayley([[1, 0], [0, 1]])


def test_malformed_and_cap():
    with pytest.raises(MalformedInput):
        from_cayley([[0, 1]])
    with pytest.raises(MalformedInput):
        from_cayley([[0, 5], [5, 0]])
    with pytest.raises(OrderCapExceeded):
        from_cayley(np.arange(4)[None, :].repeat(4, 0), max_order=3)
    with pytest.raises(OrderCapExceeded):
        build_group(Permutations(5, ((1, 2, 3, 4, 0), (1, 0, 2, 3, 4))), max_order=100)
    with pytest.raises(MalformedInput):
        build_group(Permutations(3, ((0, 0, 1),)))


def test_file_formats(tmp_path):
    G = group("dihedral:8")
    p = tmp_path / "d8.txt"
    p.write_text("# dihedral of order 8\n" + cayley_text(G))
    H = read_group_file(p)
    assert np.array_equal(H.table, G.table)
    q = tmp_path / "s3.txt"
    q.write_text("degree 3\n# generators\n1 2 0\n\n1 0 2\n")
    assert read_group_file(q).order == 6
    with pytest.raises(MalformedInput):
        parse_group_text("3\n0 1 2\n1 2 0\n")
    with pytest.raises(MalformedInput):
        parse_group_text("2\n0 x\n1 0\n")
    with pytest.raises(MalformedInput):
        parse_group_text("")
    with pytest.raises(MalformedInput):
        read_group_file(tmp_path / "missing.txt")


def test_deterministic_indexing():
    gens = Permutations(4, ((1, 2, 3, 0), (1, 0, 2, 3)))
    assert np.array_equal(build_group(gens).table, build_group(gens).table)


def test_element_orders():
    C4 = group("cyclic:4")
    assert element_order(C4, 0) == 1
    assert element_order(C4, 1) == 4
    D8 = group("dihedral:8")
    r = 1
    assert D8.power(r, 4) == 0 and D8.power(r, 2) != 0
    assert element_order(D8, r) == 4
    with pytest.raises(IndexError):
        element_order(D8, 8)


def test_class_examples():
    assert conjugacy_classes(group("cyclic:4")).sizes == (1, 1, 1, 1)
    assert sorted(conjugacy_classes(group("symmetric:3")).sizes) == [1, 2, 3]
    assert sorted(conjugacy_classes(group("dihedral:8")).sizes) == [1, 1, 2, 2, 2]


def test_classes_ordered_by_smallest_member():
    P = conjugacy_classes(group("symmetric:4"))
    mins = [min(c) for c in P.classes]
    assert mins == sorted(mins)
    assert all(P.reps[k] == min(c) for k, c in enumerate(P.classes))


def test_centralizer_examples():
    C6 = group("cyclic:6")
    assert all(len(centralizer(C6, x)) == 6 for x in range(6))
    D8 = group("dihedral:8")
    s = next(x for x in range(8) if D8.element_orders[x] == 2 and x not in center(D8))
    C = centralizer(D8, s)
    r2 = next(x for x in center(D8) if x)
    assert len(C) == 4 and set(C) == {0, r2, s, D8.mul(s, r2)}
    S3 = group("symmetric:3")
    c3 = next(x for x in range(6) if S3.element_orders[x] == 3)
    assert len(centralizer(S3, c3)) == 3


def test_center_examples():
    assert len(center(group("cyclic:9"))) == 9
    D8 = group("dihedral:8")
    Z = center(D8)
    assert len(Z) == 2 and D8.element_orders[Z.members[1]] == 2
    assert center(group("symmetric:3")).members == (0,)


def test_commutator_examples():
    D8 = group("dihedral:8")
    r = 1
    s = 4
    assert commutator(D8, r, D8.power(r, 3)) == 0
    # s^-1 r^-1 s r by hand
    t, inv = D8.table, D8.inverse
    expected = t[t[t[inv[s], inv[r]], s], r]
    assert commutator(D8, s, r) == expected == D8.power(r, 2)
    S3 = group("symmetric:3")
    tr = next(x for x in range(6) if S3.element_orders[x] == 2)
    cyc = next(x for x in range(6) if S3.element_orders[x] == 3)
    assert S3.element_orders[commutator(S3, tr, cyc)] == 3


def test_exponent_examples():
    assert exponent(group("symmetric:3")) == 6
    assert exponent(group("quaternion:8")) == 4


SPECS = ["cyclic:6", "dihedral:8", "dihedral:12", "quaternion:8", "symmetric:4",
         "alternating:4", "extraspecial:3:3", "frobenius:5:2:4"]


@pytest.mark.parametrize("spec", SPECS)
def test_class_invariants(spec):
    G = group(spec)
    P = conjugacy_classes(G)
    assert sum(P.sizes) == G.order
    for x in range(G.order):
        assert class_size(G, x) * len(centralizer(G, x)) == G.order
    singletons = sorted(c[0] for c in P.classes if len(c) == 1)
    assert list(center(G).members) == singletons
    assert G.order % exponent(G) == 0


@pytest.mark.parametrize("spec", ["dihedral:8", "symmetric:3", "quaternion:8"])
def test_classes_match_brute_force(spec):
    G = group(spec)
    for x in range(G.order):
        for y in range(G.order):
            same = G.classes.class_of[x] == G.classes.class_of[y]
            assert same == brute_conjugate(G.table, x, y)


@pytest.mark.parametrize("spec", ["dihedral:12", "symmetric:4", "quaternion:16"])
def test_commutator_iff_centralizer(spec):
    G = group(spec)
    for g in range(G.order):
        C = centralizer(G, g)
        for y in range(G.order):
            assert (commutator(G, g, y) == 0) == (y in C)


perm5 = st.permutations(range(5)).map(tuple)


@settings(max_examples=30, deadline=None)
@given(st.lists(perm5, min_size=1, max_size=3))
def test_random_permutation_groups(gens):
    G = build_group(Permutations(5, tuple(gens)))
    assert 120 % G.order == 0
    assert sum(G.classes.sizes) == G.order
    for x in range(G.order):
        assert G.order % element_order(G, x) == 0
        assert G.mul(x, G.inv(x)) == 0
