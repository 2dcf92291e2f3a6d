"""Independent predicates for each published cut-property characterization.

Every predicate evaluates its stated hypotheses (applicability) and, when
applicable, predicts the cut verdict from its own condition clauses,
without consulting the decision engine.  ``verify_equivalences`` then runs
all predicates against the engine; a disagreement on an applicable group
signals an implementation bug and is reported rather than raised.

All per-element conditions are evaluated on class representatives only,
which is equivalent because conjugate elements have conjugate powers.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .errors import CenterTooLarge, HypothesisViolated
from .group_core import (
    FiniteGroup,
    _closure_members,
    center,
    commutator_of_element,
    direct_product,
    quotient,
)
from .cut_engine import decide_cut


@dataclass(frozen=True)
class TraceEntry:
    """One checked condition: what was examined, which clause, verdict."""

    subject: str
    clause: str
    ok: bool


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one characterization on one group.

    ``predicted`` and ``agrees_with_decider`` are present exactly when the
    hypotheses hold (``applicable``).  For the product-based checks the
    agreement field compares the prediction against the decider on the
    constructed products.
    """

    name: str
    applicable: bool
    predicted: bool | None
    trace: tuple[TraceEntry, ...]
    agrees_with_decider: bool | None = None


def _power_class(G: FiniteGroup, x: int, k: int) -> int:
    return int(G.conjugacy.class_of[G.power(x, k)])


def _is_power_of(m: int, q: int) -> bool:
    while m % q == 0:
        m //= q
    return m == 1


def _two_group_clause(G: FiniteGroup) -> tuple[bool, list[TraceEntry]]:
    """Every x has x^3 conjugate to x or to x^-1."""
    part = G.conjugacy
    trace, ok_all = [], True
    for c in range(part.num_classes):
        x = int(part.representatives[c])
        ok = _power_class(G, x, 3) in (c, int(part.inverse_class[c]))
        trace.append(TraceEntry(G.label(x), "x^3 ~ x or x^-1", ok))
        ok_all &= ok
    return ok_all, trace


def _three_group_clause(G: FiniteGroup) -> tuple[bool, list[TraceEntry]]:
    """Every x has x^2 conjugate to x^-1."""
    part = G.conjugacy
    trace, ok_all = [], True
    for c in range(part.num_classes):
        x = int(part.representatives[c])
        ok = _power_class(G, x, 2) == int(part.inverse_class[c])
        trace.append(TraceEntry(G.label(x), "x^2 ~ x^-1", ok))
        ok_all &= ok
    return ok_all, trace


def thm_odd(G: FiniteGroup) -> TheoremReport:
    """Odd-order criterion: x^5 ~ x^-1 and o(x) is 7 or a power of 3."""
    if G.order % 2 == 0:
        return TheoremReport("thm_odd", False, None, ())
    part = G.conjugacy
    trace, ok_all = [], True
    for c in range(part.num_classes):
        x = int(part.representatives[c])
        m = G.element_order(x)
        pow_ok = _power_class(G, x, 5) == int(part.inverse_class[c])
        ord_ok = m == 7 or _is_power_of(m, 3)
        if not ord_ok:
            clause = f"o(x)={m} is neither 7 nor a power of 3"
        elif not pow_ok:
            clause = "x^5 !~ x^-1"
        else:
            clause = "x^5 ~ x^-1 and admissible order"
        ok = pow_ok and ord_ok
        trace.append(TraceEntry(G.label(x), clause, ok))
        ok_all &= ok
    return TheoremReport("thm_odd", True, ok_all, tuple(trace))


def thm_solvable_eppo(G: FiniteGroup) -> TheoremReport:
    """Solvable prime-power-order criterion, three order-dependent clauses."""
    profile = G.profile
    if not (profile.is_solvable and profile.is_eppo):
        return TheoremReport("thm_solvable_eppo", False, None, ())
    part = G.conjugacy
    trace, ok_all = [], True
    for c in range(part.num_classes):
        x = int(part.representatives[c])
        m = G.element_order(x)
        inv_c = int(part.inverse_class[c])
        if _is_power_of(m, 2):
            ok = _power_class(G, x, 3) in (c, inv_c)
            clause = "(i) o(x)=2^a and x^3 ~ x or x^-1"
        elif m == 7 or (m % 3 == 0 and _is_power_of(m, 3)):
            ok = _power_class(G, x, 5) == inv_c
            clause = "(ii) o(x)=7 or 3^b and x^5 ~ x^-1"
        elif m == 5:
            ok = _power_class(G, x, 3) == inv_c
            clause = "(iii) o(x)=5 and x^3 ~ x^-1"
        else:
            ok = False
            clause = f"o(x)={m} admitted by no clause"
        trace.append(TraceEntry(G.label(x), clause, ok))
        ok_all &= ok
    return TheoremReport("thm_solvable_eppo", True, ok_all, tuple(trace))


def thm_nilpotent(G: FiniteGroup) -> TheoremReport:
    """Nilpotent criterion: 2-group clause, 3-group clause, or a 2x3 split."""
    profile = G.profile
    if not profile.is_nilpotent:
        return TheoremReport("thm_nilpotent", False, None, ())
    pi = set(profile.pi)
    if pi <= {2}:
        ok, trace = _two_group_clause(G)
        return TheoremReport("thm_nilpotent", True, ok, tuple(trace))
    if pi == {3}:
        ok, trace = _three_group_clause(G)
        return TheoremReport("thm_nilpotent", True, ok, tuple(trace))
    if pi == {2, 3}:
        H = profile.sylow_subgroups[2].as_group(name="sylow2")
        K = profile.sylow_subgroups[3].as_group(name="sylow3")
        real_ok = H.profile.is_real_group
        two_ok, two_trace = _two_group_clause(H)
        three_ok, three_trace = _three_group_clause(K)
        trace = [TraceEntry("sylow 2-subgroup", "is a real group", real_ok)]
        trace += two_trace + three_trace
        ok = real_ok and two_ok and three_ok
        return TheoremReport("thm_nilpotent", True, ok, tuple(trace))
    trace = (TraceEntry("group", f"pi={sorted(pi)} not within {{2,3}}", False),)
    return TheoremReport("thm_nilpotent", True, False, trace)


def _class2_applicable(G: FiniteGroup) -> bool:
    profile = G.profile
    return (
        profile.is_p_group
        and profile.nilpotency_class is not None
        and profile.nilpotency_class <= 2
    )


def cor_class2(G: FiniteGroup) -> TheoremReport:
    """Power-in-commutator criterion for p-groups of class at most 2.

    The class-1 (abelian) case is admitted as the degenerate form: every
    [x,G] is trivial and the condition reduces to the exponent condition.
    """
    if not _class2_applicable(G):
        return TheoremReport("cor_class2", False, None, ())
    profile = G.profile
    trace: list[TraceEntry] = []
    if profile.nilpotency_class is not None and profile.nilpotency_class < 2:
        trace.append(
            TraceEntry("group", f"degenerate case: class {profile.nilpotency_class}", True)
        )
    if G.order == 1:
        return TheoremReport("cor_class2", True, True, tuple(trace))
    if profile.p == 2:
        exponent = 4
    elif profile.p == 3:
        exponent = 3
    else:
        trace.append(TraceEntry("group", f"p={profile.p} not 2 or 3", False))
        return TheoremReport("cor_class2", True, False, tuple(trace))
    part = G.conjugacy
    ok_all = True
    for c in range(part.num_classes):
        x = int(part.representatives[c])
        comm_set, _ = commutator_of_element(G, x)
        ok = bool(np.isin(G.power(x, exponent), comm_set))
        trace.append(TraceEntry(G.label(x), f"x^{exponent} in [x,G]", ok))
        ok_all &= ok
    return TheoremReport("cor_class2", True, ok_all, tuple(trace))


def _central_subgroup_families(A: FiniteGroup, cap: int) -> list[np.ndarray]:
    """All subgroups of an abelian group, as sorted member arrays.

    Walk the subgroup lattice by extending each known subgroup with one
    outside element and closing.  Every subgroup is reached through the
    chain that always adjoins its smallest missing element; along such a
    chain the adjoined elements strictly increase, so extensions are
    restricted to elements larger than the last one adjoined.  Raises
    CenterTooLarge past ``cap``.
    """
    seen = {(0,)}
    queue: list[tuple[np.ndarray, int]] = [(np.array([0], dtype=np.int32), 0)]
    out = [queue[0][0]]
    while queue:
        H, last = queue.pop()
        inside = set(int(v) for v in H)
        for x in range(last + 1, A.order):
            if x in inside:
                continue
            new = _closure_members(A, inside | {x})
            key = tuple(int(v) for v in new)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > cap:
                raise CenterTooLarge(
                    f"center has more than {cap} subgroups; raise the cap to enumerate"
                )
            queue.append((new, x))
            out.append(new)
    out.sort(key=lambda arr: (len(arr), tuple(arr.tolist())))
    return out


def prop_class2_factor(
    G: FiniteGroup,
    mode: str = "per_element",
    max_center_subgroups: int = 1024,
) -> TheoremReport:
    """Factor criterion for class-at-most-2 p-groups.

    ``per_element``: every [x,G] and every G/[x,G] must have the
    cut-property.  ``central_subgroups``: every subgroup N of the center
    (all of them normal) and every G/N must have it; the subgroups of the
    abelian center are enumerated exhaustively.
    """
    if mode not in ("per_element", "central_subgroups"):
        raise ValueError(f"unknown mode {mode!r}")
    name = f"prop_class2_factor[{mode}]"
    if not _class2_applicable(G):
        return TheoremReport(name, False, None, ())
    trace: list[TraceEntry] = []
    nc = G.profile.nilpotency_class
    if nc is not None and nc < 2:
        trace.append(TraceEntry("group", f"degenerate case: class {nc}", True))
    ok_all = True
    if mode == "per_element":
        part = G.conjugacy
        checked: dict[bytes, bool] = {}
        for c in range(part.num_classes):
            x = int(part.representatives[c])
            _, sub = commutator_of_element(G, x)
            key = sub.members.tobytes()
            if key not in checked:
                sub_ok = decide_cut(sub.as_group()).has_cut
                quot_ok = decide_cut(quotient(G, sub)).has_cut
                checked[key] = sub_ok and quot_ok
            ok = checked[key]
            trace.append(
                TraceEntry(G.label(x), f"[x,G] (order {sub.order}) and G/[x,G] have cut", ok)
            )
            ok_all &= ok
    else:
        Z = center(G)
        A = Z.as_group(name="center")
        for sub_members in _central_subgroup_families(A, max_center_subgroups):
            parent_members = Z.members[sub_members]
            N = G.subgroup(parent_members)
            sub_ok = decide_cut(N.as_group()).has_cut
            quot_ok = decide_cut(quotient(G, N)).has_cut
            ok = sub_ok and quot_ok
            trace.append(
                TraceEntry(
                    f"N of order {N.order}",
                    "N and G/N have cut",
                    ok,
                )
            )
            ok_all &= ok
    return TheoremReport(name, True, ok_all, tuple(trace))


def remark_two_group_sum(H: FiniteGroup, K: FiniteGroup) -> TheoremReport:
    """Failure criterion for a direct sum of two cut 2-groups.

    The sum loses the cut-property exactly when non-real elements h, k
    exist with h^3 ~ h and k^3 ~ k^-1 (or symmetrically).  The report's
    ``predicted`` is the predicted cut verdict of the product and the
    agreement field compares it against the decider on the product.
    """
    for part_name, P in (("H", H), ("K", K)):
        if P.profile.p != 2:
            raise HypothesisViolated(f"{part_name} is not a nontrivial 2-group")
        if not decide_cut(P).has_cut:
            raise HypothesisViolated(f"{part_name} does not have the cut-property")

    def split_nonreal(P: FiniteGroup):
        part = P.conjugacy
        cube_self, cube_inverse = [], []
        for c in range(part.num_classes):
            if int(part.inverse_class[c]) == c:
                continue
            x = int(part.representatives[c])
            cube_class = _power_class(P, x, 3)
            if cube_class == c:
                cube_self.append(x)
            elif cube_class == int(part.inverse_class[c]):
                cube_inverse.append(x)
        return cube_self, cube_inverse

    h_self, h_inv = split_nonreal(H)
    k_self, k_inv = split_nonreal(K)
    trace = []
    predicted_failure = False
    if h_self and k_inv:
        predicted_failure = True
        trace.append(
            TraceEntry(
                f"(h,k)=({H.label(h_self[0])},{K.label(k_inv[0])})",
                "non-real pair: h^3 ~ h and k^3 ~ k^-1",
                True,
            )
        )
    if k_self and h_inv:
        predicted_failure = True
        trace.append(
            TraceEntry(
                f"(h,k)=({H.label(h_inv[0])},{K.label(k_self[0])})",
                "non-real pair: h^3 ~ h^-1 and k^3 ~ k",
                True,
            )
        )
    if not predicted_failure:
        trace.append(TraceEntry("pairs", "no qualifying non-real pair exists", True))
    actual = decide_cut(direct_product(H, K)).has_cut
    return TheoremReport(
        "remark_two_group_sum",
        True,
        not predicted_failure,
        tuple(trace),
        agrees_with_decider=(not predicted_failure) == actual,
    )


@lru_cache(maxsize=1)
def _p6_check_set():
    from .constructors import abelian, construct, cyclic, dicyclic, metacyclic

    return (
        ("C2", construct(cyclic(2))),
        ("C2xC2", construct(abelian([2, 2]))),
        ("D8", construct(metacyclic(4, 2, 3))),
        ("Q8", construct(dicyclic(2))),
    )


def verify_equivalences(G: FiniteGroup) -> list[TheoremReport]:
    """Run every characterization on G and record agreement with the decider.

    When G is nilpotent with the cut-property, additionally checks that
    direct products with a fixed set of real cut 2-groups keep the
    property (the preservation corollary for trivial central units).
    """
    actual = decide_cut(G).has_cut
    reports = []
    for fn in (thm_odd, thm_solvable_eppo, thm_nilpotent, cor_class2):
        reports.append(_fill_agreement(fn(G), actual))
    for mode in ("per_element", "central_subgroups"):
        try:
            report = prop_class2_factor(G, mode)
        except CenterTooLarge as exc:
            report = TheoremReport(
                f"prop_class2_factor[{mode}]",
                False,
                None,
                (TraceEntry("center", f"skipped: {exc}", True),),
            )
        reports.append(_fill_agreement(report, actual))
    if G.profile.is_nilpotent and actual:
        trace = []
        all_ok = True
        for rname, R in _p6_check_set():
            ok = decide_cut(direct_product(G, R)).has_cut
            trace.append(TraceEntry(f"G x {rname}", "product keeps cut", ok))
            all_ok &= ok
        reports.append(
            TheoremReport(
                "cor_p6_products", True, True, tuple(trace), agrees_with_decider=all_ok
            )
        )
    return reports


def _fill_agreement(report: TheoremReport, actual: bool) -> TheoremReport:
    if not report.applicable:
        return report
    return replace(report, agrees_with_decider=report.predicted == actual)
