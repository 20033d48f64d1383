import pytest

from caminakit import camina as cm
from caminakit.errors import InvalidQuery, TheoremViolation
from caminakit.group import center
from caminakit.structure import derived_subgroup, normal_subgroups

from conftest import brute_camina, context, cyclic_normal, group, normal_of_order


def query(spec, N, M=None):
    return cm.TripleQuery(group(spec), N, N if M is None else M)


def verdicts(spec, N, M=None):
    ctx = context(spec)
    return cm.is_camina_triple(query(spec, N, M), ctx.table, ctx=ctx)


def all_five(v):
    return (v.conjugacy, v.centralizer, v.vanishing, v.vanishing_off, v.commutator)


def Z(spec):
    return center(group(spec))


def R(spec="dihedral:8"):
    return cyclic_normal(spec, 4)


def test_query_validation():
    G = group("dihedral:8")
    with pytest.raises(InvalidQuery):
        cm.TripleQuery(G, G.whole, Z("dihedral:8"))
    with pytest.raises(InvalidQuery):
        cm.TripleQuery(G, R(), G.trivial)
    with pytest.raises(InvalidQuery):
        cm.TripleQuery(G, Z("dihedral:8"), R())
    s = G.element_set([0, 4])
    with pytest.raises(InvalidQuery):
        cm.TripleQuery(G, s, s)


def test_c4_negative():
    C2 = normal_of_order("cyclic:4", 2)
    v = verdicts("cyclic:4", C2)
    assert all_five(v) == (False,) * 5


def test_d8_rotation_center():
    q = query("dihedral:8", R(), Z("dihedral:8"))
    T = context("dihedral:8").table
    assert cm.camina_condition_conjugacy(q)
    assert cm.camina_condition_centralizer(q)
    assert cm.camina_condition_vanishing(q, T)
    assert cm.camina_condition_vanishing_off(q, T)
    assert cm.camina_condition_commutator(q)


def test_s4_a4_v4_all_false():
    spec = "symmetric:4"
    v = verdicts(spec, normal_of_order(spec, 12), normal_of_order(spec, 4))
    assert all_five(v) == (False,) * 5


def test_pair_examples():
    assert verdicts("quaternion:8", Z("quaternion:8")).consensus
    assert verdicts("alternating:4", normal_of_order("alternating:4", 4)).consensus
    assert not verdicts("dihedral:8", R()).consensus
    assert verdicts("symmetric:3", normal_of_order("symmetric:3", 3)).consensus
    assert verdicts("extraspecial:3:3", Z("extraspecial:3:3")).consensus


def test_vanishing_off_examples():
    D8 = group("dihedral:8")
    T = context("dihedral:8").table
    assert cm.vanishing_off(D8, Z("dihedral:8"), T).members == Z("dihedral:8").members
    S3 = group("symmetric:3")
    A3 = normal_of_order("symmetric:3", 3)
    assert cm.vanishing_off(S3, A3, context("symmetric:3").table).members == A3.members
    C4 = group("cyclic:4")
    assert len(cm.vanishing_off(C4, normal_of_order("cyclic:4", 2),
                                context("cyclic:4").table)) == 4


@pytest.mark.parametrize("spec", ["cyclic:12", "cyclic:2*cyclic:4", "cyclic:3*cyclic:3"])
def test_abelian_has_no_triples(spec):
    ctx = context(spec)
    assert cm.enumerate_camina_triples(group(spec), ctx.table, ctx=ctx) == []


def test_d8_enumeration():
    ctx = context("dihedral:8")
    reps = cm.enumerate_camina_triples(group("dihedral:8"), ctx.table, ctx=ctx)
    z = Z("dihedral:8").members
    assert len(reps) == 4
    assert all(r.query.M.members == z for r in reps)
    assert sorted(len(r.query.N) for r in reps) == [2, 4, 4, 4]
    assert all(r.lemmas["intersection"] for r in reps)


def test_s3_enumeration():
    ctx = context("symmetric:3")
    reps = cm.enumerate_camina_triples(group("symmetric:3"), ctx.table, ctx=ctx)
    assert [(len(r.query.N), len(r.query.M)) for r in reps] == [(3, 3)]


@pytest.mark.parametrize("spec", ["dihedral:8", "quaternion:8", "symmetric:4", "dihedral:12",
                                  "frobenius:5:2:4", "extraspecial:3:9", "metacyclic:9:2:6",
                                  "alternating:4", "quaternion:16"])
def test_verdicts_match_brute_force(spec):
    G = group(spec)
    ctx = context(spec)
    for q in cm.valid_queries(G, ctx.normals):
        v = cm.is_camina_triple(q, ctx.table, ctx=ctx)
        assert v.consensus == brute_camina(G.table, q.N.members, q.M.members)


def test_theorem1_examples():
    spec = "dihedral:8"
    ctx = context(spec)
    rec = cm.verify_theorem1(query(spec, R(), Z(spec)), ctx.table, ctx=ctx)
    assert rec.pi == (2,) and len(rec.Q) == 1 and rec.passed

    spec = "symmetric:3"
    ctx = context(spec)
    A3 = normal_of_order(spec, 3)
    rec = cm.verify_theorem1(query(spec, A3), ctx.table, ctx=ctx)
    assert rec.pi == (2,) and rec.Q.members == A3.members and rec.passed

    spec = "frobenius:5:2:4"
    ctx = context(spec)
    C5 = normal_of_order(spec, 5)
    rec = cm.verify_theorem1(query(spec, C5), ctx.table, ctx=ctx)
    assert rec.pi == (2,) and rec.Q.members == C5.members and rec.m_mod_q_nilpotent


def test_theorem2_examples():
    spec = "dihedral:8"
    ctx = context(spec)
    rec = cm.classify_theorem2(query(spec, R(), Z(spec)), ctx.table, ctx=ctx)
    assert rec.alt1_pgroup == 2 and rec.alt2_nilpotent_quotient is not None
    assert rec.alt4_abelian and rec.disjunction_holds

    spec = "frobenius:7:3:6"
    ctx = context(spec)
    C7 = normal_of_order(spec, 7)
    rec = cm.classify_theorem2(query(spec, C7), ctx.table, ctx=ctx)
    assert rec.alt1_pgroup is None
    assert rec.alt2_nilpotent_quotient is not None and rec.alt4_abelian

    spec = "extraspecial:3:3"
    ctx = context(spec)
    rec = cm.classify_theorem2(query(spec, Z(spec)), ctx.table, ctx=ctx)
    assert rec.alt1_pgroup == 3 and rec.alt4_abelian and rec.disjunction_holds


def test_theorem2_frobenius_alternative():
    # catalog triples all have abelian M, so probe the Frobenius branch on M = A_4
    spec = "symmetric:4"
    ctx = context(spec)
    A4 = normal_of_order(spec, 12)
    rec = cm.classify_theorem2(query(spec, A4), ctx.table, ctx=ctx)
    K, fs = rec.alt3_frobenius_quotient
    assert len(K) == 1 and len(fs.kernel) == 4 and len(fs.complement) == 3
    assert rec.alt3_complement_elementary_abelian
    assert rec.alt3_kernel_is_derived_elementary_abelian
    assert not rec.alt4_abelian


def test_lemma_examples():
    spec = "dihedral:8"
    ctx = context(spec)
    G = group(spec)
    triples = [q for q, _ in cm.find_camina_triples(G, ctx.table, ctx=ctx)]
    out = cm.verify_lemma_suite(query(spec, R(), Z(spec)), triples, ctx.table, ctx=ctx)
    assert set(out) == set(cm.LEMMA_NAMES) and all(out.values())


def test_lemma_quotient_in_order_54():
    spec = "metacyclic:9:2:6"
    ctx = context(spec)
    G = group(spec)
    found = cm.find_camina_triples(G, ctx.table, ctx=ctx)
    triples = [q for q, _ in found]
    q = next(q for q in triples if len(q.N) == 27 and len(q.M) == 9)
    out = cm.verify_lemma_suite(q, triples, ctx.table, ctx=ctx)
    assert out["quotient"] and out["center_intersection"]
    # G/N has order 2 here, so the center clause is vacuous; check a non-p-group quotient
    q3 = next(q for q in triples if len(q.N) == 3)
    assert len(q3.M & center(G)) == 1
    assert cm.verify_lemma_suite(q3, triples, ctx.table, ctx=ctx)["center_intersection"]


def test_hypothesis_examples():
    for spec, N, const in (("symmetric:3", normal_of_order("symmetric:3", 3), -2),
                           ("quaternion:8", Z("quaternion:8"), -4),
                           ("alternating:4", normal_of_order("alternating:4", 4), -3)):
        ctx = context(spec)
        rec = cm.verify_camina_hypothesis(group(spec), N, ctx.table, ctx=ctx)
        assert rec.constant_value == const and rec.passed


def test_hypothesis_requires_pair():
    ctx = context("dihedral:8")
    with pytest.raises(InvalidQuery):
        cm.verify_camina_hypothesis(group("dihedral:8"), R(), ctx.table, ctx=ctx)


def test_pair_characterization_examples():
    spec = "symmetric:3"
    ctx = context(spec)
    rec = cm.verify_pair_characterizations(group(spec), normal_of_order(spec, 3), ctx.table, ctx=ctx)
    assert rec.pair and rec.vanishing_off_equals_n and rec.zero_pattern
    assert rec.n_is_p_group == 3 and rec.quotient_is_p_group == 2 and rec.frobenius_with_kernel_n

    spec = "dihedral:8"
    ctx = context(spec)
    rec = cm.verify_pair_characterizations(group(spec), R(), ctx.table, ctx=ctx)
    assert not rec.pair and not rec.vanishing_off_equals_n and not rec.zero_pattern

    spec = "frobenius:5:2:4"
    ctx = context(spec)
    rec = cm.verify_pair_characterizations(group(spec), normal_of_order(spec, 5), ctx.table, ctx=ctx)
    assert rec.pair and rec.n_is_p_group == 5 and rec.frobenius_with_kernel_n


def test_vanishing_off_global_examples():
    for spec in ("symmetric:3", "dihedral:8", "extraspecial:3:3", "quaternion:8"):
        G = group(spec)
        ctx = context(spec)
        rec = cm.vanishing_off_global(G, ctx.table, ctx=ctx)
        assert rec.proper and rec.verdicts.consensus
        assert rec.derived.members == derived_subgroup(G).members
    assert cm.vanishing_off_global(group("dihedral:8"), context("dihedral:8").table).V.members \
        == Z("dihedral:8").members
    with pytest.raises(InvalidQuery):
        cm.vanishing_off_global(group("cyclic:6"), context("cyclic:6").table)


def test_vanishing_off_global_full_case():
    # A_5 is perfect, so every nontrivial row is over G' = G and V(G) = G
    ctx = context("alternating:5")
    rec = cm.vanishing_off_global(group("alternating:5"), ctx.table, ctx=ctx)
    assert not rec.proper and rec.verdicts is None


def test_suites_raise_on_non_triple():
    spec = "symmetric:4"
    ctx = context(spec)
    q = query(spec, normal_of_order(spec, 12), normal_of_order(spec, 4))
    with pytest.raises((TheoremViolation, InvalidQuery)):
        cm.verify_theorem1(q, ctx.table, ctx=ctx)


def test_context_cache_consistency():
    G = group("extraspecial:3:9")
    fresh = cm.GroupContext(G)
    for q in cm.valid_queries(G, normal_subgroups(G)):
        a = cm.is_camina_triple(q, fresh.table, ctx=fresh)
        b = cm.is_camina_triple(q, fresh.table)
        assert a == b
