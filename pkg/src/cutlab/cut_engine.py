"""Decide the cut-property and classify groups by power-map conjugacy.

A group has the cut-property exactly when, for every element x and every
exponent j coprime to the order of x, x^j is conjugate to x or to x^-1.
``decide_cut`` scans class representatives using the eagerly built
conjugacy partition; ``decide_cut_bruteforce`` is the independent oracle:
it scans every element and recomputes each conjugacy class from scratch,
sharing no cached state with the fast path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .group_core import FiniteGroup


@dataclass(frozen=True)
class ClassPowerResidues:
    """Coprime power residues of one class representative x.

    ``self_residues`` holds the canonical residues j mod o(x) (coprime to
    o(x)) with x^j conjugate to x; it always contains 1 mod o(x) and is
    closed under multiplication, i.e. a subgroup of the units mod o(x).
    ``hits_inverse`` records whether some coprime j lands in the class of
    x^-1.
    """

    representative: int
    order: int
    self_residues: tuple[int, ...]
    hits_inverse: bool


@dataclass(frozen=True)
class CutVerdict:
    """Outcome of a cut-property scan.

    ``witnesses`` holds (element, exponent) pairs where the power escapes
    both the element's class and its inverse's class; empty iff the group
    has the property.  ``per_class`` is populated only when residue
    collection was requested.
    """

    has_cut: bool
    witnesses: tuple[tuple[int, int], ...]
    per_class: tuple[ClassPowerResidues, ...] | None = None


@dataclass(frozen=True)
class Classification:
    """Cut verdict plus the derived group-class labels."""

    cut: bool
    inverse_semi_rational: bool
    real_group: bool
    rational: bool
    central_height_label: int | None


def decide_cut(G: FiniteGroup, collect_residues: bool = False) -> CutVerdict:
    """Scan class representatives for coprime powers escaping x and x^-1.

    Scanning representatives only is sound: conjugate elements have
    conjugate powers.  Witnesses are reported as the first failing
    exponent per failing representative, in ascending representative
    order.  With ``collect_residues`` the scan does not short-circuit and
    records the full residue data per class.
    """
    part = G.conjugacy
    witnesses: list[tuple[int, int]] = []
    per_class: list[ClassPowerResidues] = []
    for c in range(part.num_classes):
        x = int(part.representatives[c])
        m = G.element_order(x)
        inv_c = int(part.inverse_class[c])
        first_fail = None
        residues = {1 % m}
        hits_inverse = inv_c == c
        y = x
        for j in range(2, m):
            y = G.mul(y, x)
            if math.gcd(j, m) != 1:
                continue
            cls = int(part.class_of[y])
            if cls == c:
                residues.add(j)
            elif cls == inv_c:
                hits_inverse = True
            elif first_fail is None:
                first_fail = j
                if not collect_residues:
                    break
        if first_fail is not None:
            witnesses.append((x, first_fail))
        if collect_residues:
            per_class.append(
                ClassPowerResidues(x, m, tuple(sorted(residues)), hits_inverse)
            )
    return CutVerdict(
        has_cut=not witnesses,
        witnesses=tuple(witnesses),
        per_class=tuple(per_class) if collect_residues else None,
    )


def decide_cut_bruteforce(G: FiniteGroup) -> CutVerdict:
    """Oracle path: exhaustive scan over every element, no shared caches.

    Materializes the multiplication table, derives inverses from it, and
    recomputes the conjugacy class of each element (and of its inverse) by
    conjugating with all group elements.  Witnesses are the first failing
    exponent per failing element in ascending element order.
    """
    table = G.dense_table()
    inv = np.argmax(table == 0, axis=1).astype(np.int32)
    wx, wj = _kernels.cut_witness_scan(table, inv)
    witnesses = tuple((int(x), int(j)) for x, j in zip(wx, wj))
    return CutVerdict(has_cut=not witnesses, witnesses=witnesses, per_class=None)


def classify(G: FiniteGroup, verdict: CutVerdict | None = None) -> Classification:
    """Cut flag, realness, rationality, and the odd-order height label.

    The central-height label applies to odd-order groups only: 0 in the
    exceptional case (cut-property together with an element of order 7),
    1 otherwise.  It is a statement-level label, never checked against
    any unit-group computation.
    """
    if verdict is None:
        verdict = decide_cut(G)
    cut = verdict.has_cut
    part = G.conjugacy
    real = bool((part.inverse_class == np.arange(part.num_classes)).all())
    label = None
    if G.order % 2 == 1:
        has_order_seven = bool((G.element_orders == 7).any())
        label = 0 if (cut and has_order_seven) else 1
    return Classification(
        cut=cut,
        inverse_semi_rational=cut,
        real_group=real,
        rational=cut and real,
        central_height_label=label,
    )
