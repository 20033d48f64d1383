"""Camina triples and pairs: the five equivalent conditions and the theorem suites.

A triple (G, N, M) with normal subgroups 1 < M <= N < G is a Camina triple
when every g outside N is conjugate to every element of the coset gM; the
pair (G, N) is the case M = N. Five independent checkers decide the
property and must agree; the ``verify_*`` functions then test the structural
consequences on each triple found, raising :class:`TheoremViolation` when
one fails.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import kernels
from .character import (CharacterTable, character_table, conjugate_characters,
                        induce_from_normal, inertia_group, inner_product, irr_over)
from .cyclotomic import embed_array, integer_value
from .errors import EquivalenceViolation, InvalidQuery, TheoremViolation
from .group import ElementSet, Embedded, Group, as_group, center
from .structure import (FrobeniusStructure, QuotientGroup, SeriesReport, derived_subgroup,
                        frobenius_kernel, frobenius_structure, is_p_group,
                        normal_pi_complement, normal_subgroups, primes_dividing,
                        quotient, series, subgroup_generated)


class GroupContext:
    """Per-group cache of the expensive derived data (table, lattice, quotients)."""

    def __init__(self, G: Group, T: CharacterTable | None = None) -> None:
        self.G = G
        if T is not None:
            self.__dict__["table"] = T
        self._quotients: dict[tuple[int, ...], QuotientGroup] = {}
        self._quotient_tables: dict[tuple[int, ...], CharacterTable] = {}
        self._subs: dict[tuple[int, ...], Embedded] = {}
        self._sub_tables: dict[tuple[int, ...], CharacterTable] = {}
        self._sub_normals: dict[tuple[int, ...], list[ElementSet]] = {}
        self.verdict_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], "ConditionVerdicts"] = {}

    @cached_property
    def table(self) -> CharacterTable:
        return character_table(self.G)

    @cached_property
    def normals(self) -> list[ElementSet]:
        return normal_subgroups(self.G)

    @cached_property
    def series(self) -> SeriesReport:
        return series(self.G)

    @cached_property
    def center(self) -> ElementSet:
        return center(self.G)

    @cached_property
    def centralizer_orders(self) -> np.ndarray:
        t = self.G.table
        return (t == t.T).sum(axis=1)

    def quotient(self, K: ElementSet) -> QuotientGroup:
        if K.members not in self._quotients:
            self._quotients[K.members] = quotient(self.G, K)
        return self._quotients[K.members]

    def quotient_table(self, K: ElementSet) -> CharacterTable:
        if K.members not in self._quotient_tables:
            self._quotient_tables[K.members] = character_table(self.quotient(K).group)
        return self._quotient_tables[K.members]

    def sub(self, H: ElementSet) -> Embedded:
        if H.members not in self._subs:
            self._subs[H.members] = as_group(self.G, H)
        return self._subs[H.members]

    def sub_table(self, H: ElementSet) -> CharacterTable:
        if H.members not in self._sub_tables:
            self._sub_tables[H.members] = character_table(self.sub(H).group)
        return self._sub_tables[H.members]

    def sub_normals(self, H: ElementSet) -> list[ElementSet]:
        """Normal subgroups of H, in H's local indexing."""
        if H.members not in self._sub_normals:
            self._sub_normals[H.members] = normal_subgroups(self.sub(H).group)
        return self._sub_normals[H.members]

    def lift(self, H: ElementSet, local: ElementSet) -> ElementSet:
        """Map a subgroup of the standalone H back into G's indexing."""
        members = self.sub(H).to_parent(local.array)
        return self.G.element_set(members.tolist())


def _ctx(G: Group, T: CharacterTable | None, ctx: GroupContext | None) -> GroupContext:
    if ctx is not None:
        return ctx
    return GroupContext(G, T)


@dataclass(frozen=True, eq=False)
class TripleQuery:
    G: Group
    N: ElementSet
    M: ElementSet

    def __post_init__(self) -> None:
        G, N, M = self.G, self.N, self.M
        if not 1 < len(M) or not len(N) < G.order:
            raise InvalidQuery("need 1 < M and N < G")
        if not M.issubset(N):
            raise InvalidQuery("M must be contained in N")
        for H in (M, N):
            if not G.element_set(H.members).is_normal:
                raise InvalidQuery(f"subgroup of order {len(H)} is not normal")

    @property
    def outside(self) -> np.ndarray:
        """Elements of G outside N."""
        return np.nonzero(~self.N.mask(self.G.order))[0].astype(np.int64)

    @property
    def is_pair(self) -> bool:
        return self.M.members == self.N.members


@dataclass(frozen=True)
class ConditionVerdicts:
    conjugacy: bool
    centralizer: bool
    vanishing: bool
    vanishing_off: bool
    commutator: bool
    consensus: bool


@dataclass(frozen=True)
class Theorem1Record:
    m_solvable: bool
    pi: tuple[int, ...]
    Q: ElementSet | None
    m_mod_q_nilpotent: bool
    support_cover: bool
    vanishing_outside: bool
    degree_divisibility: bool

    @property
    def passed(self) -> bool:
        return all((self.m_solvable, self.Q is not None, self.m_mod_q_nilpotent,
                    self.support_cover, self.vanishing_outside, self.degree_divisibility))


@dataclass(frozen=True)
class Theorem2Record:
    alt1_pgroup: int | None
    alt2_nilpotent_quotient: ElementSet | None
    alt3_frobenius_quotient: tuple[ElementSet, FrobeniusStructure] | None
    alt3_complement_elementary_abelian: bool
    alt3_kernel_is_derived_elementary_abelian: bool
    alt4_abelian: bool
    disjunction_holds: bool

    @property
    def alternatives(self) -> dict[str, bool]:
        return {
            "alt1": self.alt1_pgroup is not None,
            "alt2": self.alt2_nilpotent_quotient is not None,
            "alt3": self.alt3_complement_elementary_abelian,
            "alt3_proof_variant": self.alt3_kernel_is_derived_elementary_abelian,
            "alt4": self.alt4_abelian,
        }


LEMMA_NAMES = ("intersection", "center", "quotient", "upper_central",
               "order_divisibility", "center_intersection", "nilpotent_case")


@dataclass(frozen=True)
class CaminaReport:
    query: TripleQuery
    verdicts: ConditionVerdicts
    theorem1: Theorem1Record | None = None
    theorem2: Theorem2Record | None = None
    lemmas: dict[str, bool] = field(default_factory=dict)


# -- the five conditions ---------------------------------------------------

def camina_condition_conjugacy(q: TripleQuery) -> bool:
    """Every g outside N has its coset gM inside its conjugacy class."""
    G = q.G
    return bool(kernels.coset_in_class(G.table, G.classes.class_of, q.outside, q.M.array))


def camina_condition_centralizer(q: TripleQuery, *, ctx: GroupContext | None = None) -> bool:
    """|C_G(g)| = |C_{G/M}(gM)| for every g outside N."""
    ctx = _ctx(q.G, None, ctx)
    Q = ctx.quotient(q.M)
    qt = Q.group.table
    c_quot = (qt == qt.T).sum(axis=1)
    out = q.outside
    return bool(np.array_equal(ctx.centralizer_orders[out], c_quot[Q.projection[out]]))


def _outside_classes(T: CharacterTable, N: ElementSet) -> list[int]:
    return [k for k, rep in enumerate(T.classes.reps) if rep not in N]


def camina_condition_vanishing(q: TripleQuery, T: CharacterTable) -> bool:
    """Every character in Irr(G|M) is zero on G minus N."""
    rows = list(irr_over(T, q.M).rows)
    cols = _outside_classes(T, q.N)
    return bool(T.zero_mask[np.ix_(rows, cols)].all())


def vanishing_off(G: Group, M: ElementSet, T: CharacterTable) -> ElementSet:
    """V(G|M): generated by the elements where some row of Irr(G|M) is nonzero."""
    rows = list(irr_over(T, M).rows)
    live = ~T.zero_mask[rows].all(axis=0)
    support = [x for k in np.nonzero(live)[0] for x in T.classes.classes[k]]
    return subgroup_generated(G, support)


def camina_condition_vanishing_off(q: TripleQuery, T: CharacterTable) -> bool:
    return vanishing_off(q.G, q.M, T).issubset(q.N)


def camina_condition_commutator(q: TripleQuery) -> bool:
    """For all g outside N and z in M some y has [g, y] = z."""
    G = q.G
    return bool(kernels.commutators_cover(G.table, G.inverse, q.outside, q.M.array))


def is_camina_triple(q: TripleQuery, T: CharacterTable, *,
                     ctx: GroupContext | None = None) -> ConditionVerdicts:
    ctx = _ctx(q.G, T, ctx)
    key = (q.N.members, q.M.members)
    cacheable = q.G is ctx.G and T is ctx.table
    if cacheable and key in ctx.verdict_cache:
        return ctx.verdict_cache[key]
    v = (
        camina_condition_conjugacy(q),
        camina_condition_centralizer(q, ctx=ctx),
        camina_condition_vanishing(q, T),
        camina_condition_vanishing_off(q, T),
        camina_condition_commutator(q),
    )
    if len(set(v)) != 1:
        raise EquivalenceViolation(
            f"{q.G.name}: N of order {len(q.N)}, M of order {len(q.M)}: verdicts {v}")
    verdicts = ConditionVerdicts(*v, consensus=v[0])
    if cacheable:
        ctx.verdict_cache[key] = verdicts
    return verdicts


def is_camina_pair(G: Group, N: ElementSet, T: CharacterTable, *,
                   ctx: GroupContext | None = None) -> ConditionVerdicts:
    return is_camina_triple(TripleQuery(G, N, N), T, ctx=ctx)


def valid_queries(G: Group, normals: Sequence[ElementSet]) -> list[TripleQuery]:
    """Every (N, M) with 1 < M <= N < G, in lattice order."""
    proper = [H for H in normals if 1 < len(H) < G.order]
    return [TripleQuery(G, N, M) for N in proper for M in proper
            if len(M) <= len(N) and M.issubset(N)]


def find_camina_triples(G: Group, T: CharacterTable, *,
                        ctx: GroupContext | None = None) -> list[tuple[TripleQuery, ConditionVerdicts]]:
    ctx = _ctx(G, T, ctx)
    out = []
    for q in valid_queries(G, ctx.normals):
        v = is_camina_triple(q, T, ctx=ctx)
        if v.consensus:
            out.append((q, v))
    return out


def enumerate_camina_triples(G: Group, T: CharacterTable, *,
                             ctx: GroupContext | None = None,
                             with_suites: bool = True) -> list[CaminaReport]:
    ctx = _ctx(G, T, ctx)
    found = find_camina_triples(G, T, ctx=ctx)
    if not with_suites:
        return [CaminaReport(q, v) for q, v in found]
    triples = [q for q, _ in found]
    return [
        CaminaReport(
            q, v,
            theorem1=verify_theorem1(q, T, ctx=ctx),
            theorem2=classify_theorem2(q, T, ctx=ctx),
            lemmas=verify_lemma_suite(q, triples, T, ctx=ctx),
        )
        for q, v in found
    ]


# -- theorem suites ----------------------------------------------------------

def _require_triple(q: TripleQuery, T: CharacterTable, ctx: GroupContext) -> None:
    if not is_camina_triple(q, T, ctx=ctx).consensus:
        raise InvalidQuery("query is not a Camina triple")


def verify_theorem1(q: TripleQuery, T: CharacterTable, *,
                    ctx: GroupContext | None = None) -> Theorem1Record:
    ctx = _ctx(q.G, T, ctx)
    G, N, M = q.G, q.N, q.M
    Mg = ctx.sub(M).group
    m_solvable = series(Mg).is_solvable
    pi = tuple(primes_dividing(G.order // len(N)))
    Q_local = normal_pi_complement(Mg, pi, ctx.sub_normals(M))
    if Q_local is None:
        Q, nilpotent = None, False
    else:
        Q = ctx.lift(M, Q_local)
        nilpotent = series(quotient(Mg, Q_local).group).is_nilpotent

    rows = list(irr_over(T, M).rows)
    zero = T.zero_mask[rows]
    m_classes = sorted({int(T.classes.class_of[x]) for x in M})
    support_cover = bool((~zero[:, m_classes]).any(axis=0).all())
    vanishing_outside = bool(zero[:, _outside_classes(T, N)].all())
    degree_div = all(T.degrees[i] % p == 0 for i in rows for p in pi)

    rec = Theorem1Record(m_solvable, pi, Q, nilpotent, support_cover,
                         vanishing_outside, degree_div)
    if not rec.passed:
        raise TheoremViolation(f"{G.name}: first theorem fails for |N|={len(N)}, |M|={len(M)}: {rec}")
    return rec


def classify_theorem2(q: TripleQuery, T: CharacterTable, *,
                      ctx: GroupContext | None = None) -> Theorem2Record:
    ctx = _ctx(q.G, T, ctx)
    G, N, M = q.G, q.N, q.M
    alt1 = is_p_group(ctx.quotient(N).group)
    alt1 = alt1 if isinstance(alt1, int) else None

    Mg = ctx.sub(M).group
    m_normals = ctx.sub_normals(M)
    proper = [K for K in m_normals if len(K) < Mg.order]

    residual = series(Mg).lower_central[-1]
    if len(residual) < Mg.order:
        alt2_local = residual
    else:
        alt2_local = next((K for K in proper
                           if series(quotient(Mg, K).group).is_nilpotent), None)
    alt2 = ctx.lift(M, alt2_local) if alt2_local is not None else None

    witness, comp_ea, derived_ea = None, False, False
    for K in proper:
        MK = quotient(Mg, K).group
        fs = frobenius_structure(MK)
        if fs is None:
            continue
        c_ea = isinstance(fs.complement_is_elementary_abelian_p, int)
        d_ea = (fs.complement_is_abelian
                and derived_subgroup(MK).members == fs.kernel.members
                and isinstance(fs.kernel_is_elementary_abelian_p, int))
        if witness is None or (c_ea and not comp_ea):
            witness = (ctx.lift(M, K), fs)
            comp_ea = c_ea
        derived_ea = derived_ea or d_ea
        if comp_ea and derived_ea:
            break

    alt4 = Mg.is_abelian
    holds = alt1 is not None or alt2 is not None or comp_ea or alt4
    rec = Theorem2Record(alt1, alt2, witness, comp_ea, derived_ea, alt4, holds)
    if not holds:
        raise TheoremViolation(f"{G.name}: no alternative of the second theorem holds: {rec}")
    return rec


def verify_lemma_suite(q: TripleQuery, all_triples: Sequence[TripleQuery], T: CharacterTable,
                       *, ctx: GroupContext | None = None) -> dict[str, bool]:
    ctx = _ctx(q.G, T, ctx)
    G, N, M = q.G, q.N, q.M
    out: dict[str, bool] = {}

    ok = True
    for other in all_triples:
        if other.M.members != M.members or other.N.members == N.members:
            continue
        inter = G.element_set(N & other.N)
        if not is_camina_triple(TripleQuery(G, inter, M), T, ctx=ctx).consensus:
            ok = False
    out["intersection"] = ok

    out["center"] = ctx.center.issubset(N)

    ok = True
    for K in ctx.normals:
        if not (K.issubset(M) and len(K) < len(M)):
            continue
        Qk = ctx.quotient(K)
        QG = Qk.group
        image = lambda H: QG.element_set(np.unique(Qk.projection[H.array]).tolist())
        qq = TripleQuery(QG, image(N), image(M))
        if not is_camina_triple(qq, ctx.quotient_table(K)).consensus:
            ok = False
    out["quotient"] = ok

    upper = ctx.series.upper_central
    ok = True
    for m, Z in enumerate(upper):
        if Z.issubset(M) and len(Z) < len(M):
            nxt = upper[min(m + 1, len(upper) - 1)]
            ok = ok and nxt.issubset(N)
    out["upper_central"] = ok

    t = G.table
    out_el = q.outside
    m_arr = M.array
    commute = t[np.ix_(out_el, m_arr)] == t[np.ix_(m_arr, out_el)].T
    orders = G.element_orders
    bad = (orders[out_el][:, None] % orders[m_arr][None, :]) != 0
    out["order_divisibility"] = not bool((commute & bad).any())

    gn_p = is_p_group(ctx.quotient(N).group)
    if isinstance(gn_p, int):
        out["center_intersection"] = True
    else:
        out["center_intersection"] = len(M & ctx.center) == 1

    if ctx.series.is_nilpotent:
        mp = is_p_group(ctx.sub(M).group)
        out["nilpotent_case"] = isinstance(mp, int) and mp == gn_p
    else:
        out["nilpotent_case"] = True

    failed = [k for k, v in out.items() if not v]
    if failed:
        raise TheoremViolation(f"{G.name}: lemmas {failed} fail for |N|={len(N)}, |M|={len(M)}")
    return out


@dataclass(frozen=True)
class HypothesisRecord:
    vanishing_set_is_irr_over: bool
    constant_value: int | None
    index: int
    unique_constituent: bool
    induced_is_multiple: bool
    induced_matches_inertia_formula: bool
    induced_vanishes_off_n: bool
    inertia_indices: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return (self.vanishing_set_is_irr_over and self.constant_value == -self.index
                and self.unique_constituent and self.induced_is_multiple
                and self.induced_matches_inertia_formula and self.induced_vanishes_off_n)


def verify_camina_hypothesis(G: Group, N: ElementSet, T: CharacterTable, *,
                             ctx: GroupContext | None = None) -> HypothesisRecord:
    ctx = _ctx(G, T, ctx)
    if not is_camina_pair(G, N, T, ctx=ctx).consensus:
        raise InvalidQuery("(G, N) is not a Camina pair")
    over = set(irr_over(T, N).rows)
    outside = _outside_classes(T, N)
    vanishing = {i for i in range(len(T))
                 if i != T.trivial_row and T.zero_mask[i, outside].all()}
    a_ok = vanishing == over

    rows = sorted(over)
    weighted = (np.array([T.degrees[i] for i in rows])[:, None, None] * T.values[rows]).sum(axis=0)
    inside = [k for k, rep in enumerate(T.classes.reps) if rep in N and rep != 0]
    consts = {integer_value(weighted[k]) for k in inside}
    constant = consts.pop() if len(consts) == 1 else None

    T_N = ctx.sub_table(N)
    unique = multiple = formula = vanish = True
    indices = []
    out_mask = np.array([rep not in N for rep in T.classes.reps])
    for theta in range(len(T_N)):
        if theta == T_N.trivial_row:
            continue
        ind = induce_from_normal(T_N, theta, G, N)
        vanish = vanish and not ind[out_mask].any()
        mults = [integer_value(inner_product(T, ind, T.values[i]).array) for i in range(len(T))]
        hits = [i for i, m in enumerate(mults) if m]
        if len(hits) != 1 or hits[0] not in over:
            unique = False
            continue
        c = mults[hits[0]]
        multiple = multiple and np.array_equal(ind, c * T.values[hits[0]])
        inert = inertia_group(T_N, theta, G, N)
        t_index = len(inert) // len(N)
        indices.append(t_index)
        conj_sum = T_N.values[conjugate_characters(T_N, theta, G, N)].sum(axis=0)
        emb = ctx.sub(N)
        expected = np.zeros_like(ind)
        on_n = embed_array(t_index * conj_sum, T.e)
        for k, rep in enumerate(T.classes.reps):
            if rep in N:
                local = emb.from_parent([rep])[0]
                expected[k] = on_n[T_N.classes.class_of[local]]
        formula = formula and np.array_equal(ind, expected)

    rec = HypothesisRecord(a_ok, constant, G.order // len(N), unique, multiple, formula,
                           vanish, tuple(indices))
    if not rec.passed:
        raise TheoremViolation(f"{G.name}: Camina hypothesis check fails for |N|={len(N)}: {rec}")
    return rec


@dataclass(frozen=True)
class PairCharacterization:
    pair: bool
    vanishing_off_equals_n: bool
    zero_pattern: bool
    n_is_p_group: int | None
    quotient_is_p_group: int | None
    frobenius_with_kernel_n: bool

    @property
    def trichotomy(self) -> bool:
        return (self.n_is_p_group is not None or self.quotient_is_p_group is not None
                or self.frobenius_with_kernel_n)


def verify_pair_characterizations(G: Group, N: ElementSet, T: CharacterTable, *,
                                  ctx: GroupContext | None = None) -> PairCharacterization:
    ctx = _ctx(G, T, ctx)
    pair = is_camina_pair(G, N, T, ctx=ctx).consensus
    v_eq = vanishing_off(G, N, T).members == N.members
    rows = list(irr_over(T, N).rows)
    zero = T.zero_mask[rows]
    in_n = np.array([rep in N for rep in T.classes.reps])
    pattern = bool((~zero[:, in_n]).any(axis=0).all() and zero[:, ~in_n].all())
    if len({pair, v_eq, pattern}) != 1:
        raise EquivalenceViolation(
            f"{G.name}: pair characterizations disagree for |N|={len(N)}: {(pair, v_eq, pattern)}")
    n_p = is_p_group(ctx.sub(N).group)
    gn_p = is_p_group(ctx.quotient(N).group)
    K = frobenius_kernel(G, ctx.normals)
    rec = PairCharacterization(
        pair, v_eq, pattern,
        n_p if isinstance(n_p, int) else None,
        gn_p if isinstance(gn_p, int) else None,
        K is not None and K.members == N.members,
    )
    if pair and not rec.trichotomy:
        raise TheoremViolation(f"{G.name}: Camina pair with |N|={len(N)} fails the trichotomy")
    return rec


@dataclass(frozen=True)
class VanishingOffGlobal:
    V: ElementSet
    derived: ElementSet
    proper: bool
    verdicts: ConditionVerdicts | None


def vanishing_off_global(G: Group, T: CharacterTable, *,
                         ctx: GroupContext | None = None) -> VanishingOffGlobal:
    ctx = _ctx(G, T, ctx)
    D = derived_subgroup(G)
    if len(D) == 1:
        raise InvalidQuery(f"{G.name} is abelian")
    V = vanishing_off(G, D, T)
    if len(V) == G.order:
        return VanishingOffGlobal(V, D, False, None)
    verdicts = is_camina_triple(TripleQuery(G, V, D), T, ctx=ctx)
    if not verdicts.consensus:
        raise TheoremViolation(f"{G.name}: (G, V(G), G') is not a Camina triple")
    return VanishingOffGlobal(V, D, True, verdicts)
