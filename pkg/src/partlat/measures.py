"""The six distance measures between partitions and their normalization.

Raw values are non-negative integers.  The [0,1) normalization of a raw
value d is 1 - 1/(1+d) = d/(1+d), carried as an exact fraction; ranking
comparisons between measures must stay exact, so no float sneaks in before
rendering.

A note on `delta_ih`: it counts the pair positions where the two indicator
bit sequences disagree.  The plain scalar product of the two indicators is
a different quantity (it counts the shared pairs, i.e. the size of the
meet) and is deliberately not offered as a distance here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core import Partition


class MeasureId(enum.Enum):
    """Closed enumeration of the supported distance measures."""

    PD = "pd"    # partition-distance: minimum elements to delete/move
    SD = "sd"    # symmetric difference of the block collections
    RB = "rb"    # rank gap between join and meet
    RBP = "rbp"  # modified rank-based: r(P)+r(Q)-2r(meet)
    SB = "sb"    # size gap between join and meet
    IH = "ih"    # Hamming distance between pair indicators

    @classmethod
    def parse(cls, name: str) -> "MeasureId":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown measure {name!r}; expected one of {valid}") from None


@dataclass(frozen=True)
class DistanceValue:
    """A raw integer distance plus its exact [0,1) normalization."""

    raw: int
    normalized: Fraction

    def decimal(self, places: int = 6) -> str:
        return f"{float(self.normalized):.{places}f}"

    def render_normalized(self) -> str:
        f = self.normalized
        return f"{f.numerator}/{f.denominator} ({self.decimal()})"


def normalize(raw: int) -> Fraction:
    return Fraction(raw, raw + 1)


def pd_distance(p: Partition, q: Partition) -> int:
    """Partition-distance: n minus the weight of a maximum-weight matching
    between the blocks of the two partitions, weighted by intersection size.

    Equivalent to the minimum number of elements whose deletion makes the
    induced partitions coincide; the subset-enumeration form of that
    definition lives in the oracle module and cross-checks this one.
    Only the distance is returned: the maximizing matching is not unique
    and no witness is committed to.
    """
    p._check(q)
    if p.blocks == q.blocks:
        return 0
    weights = np.zeros((len(p.blocks), len(q.blocks)), dtype=np.int64)
    bp, bq = p.block_of, q.block_of
    for e in range(p.n):
        weights[bp[e], bq[e]] += 1
    rows, cols = linear_sum_assignment(weights, maximize=True)
    return p.n - int(weights[rows, cols].sum())


def pd_distance_comparable(coarser: Partition, finer: Partition) -> int:
    """Partition-distance for a comparable pair (finer <= coarser).

    Each block of the finer partition sits inside one block of the coarser;
    a maximum matching keeps the heaviest inner block per outer block, so
    the distance is n minus the sum of those maxima.
    """
    coarser._check(finer)
    best = [0] * len(coarser.blocks)
    bo = coarser.block_of
    for block in finer.blocks:
        outer = bo[block[0] - 1]
        if len(block) > best[outer]:
            best[outer] = len(block)
    return coarser.n - sum(best)


def delta_sd(p: Partition, q: Partition) -> int:
    """Number of blocks (as element sets) lying in exactly one partition."""
    p._check(q)
    common = len(p.block_set & q.block_set)
    return len(p.blocks) + len(q.blocks) - 2 * common


def delta_rb(p: Partition, q: Partition) -> int:
    """Rank of the join minus rank of the meet."""
    p._check(q)
    return len(p.meet(q).blocks) - len(p.join(q).blocks)


def delta_rb_plus(p: Partition, q: Partition) -> int:
    """r(P) + r(Q) - 2 r(P meet Q); dominates delta_rb, with equality
    exactly on modular pairs."""
    p._check(q)
    nblocks_meet = len(p.meet(q).blocks)
    return 2 * nblocks_meet - len(p.blocks) - len(q.blocks)


def delta_sb(p: Partition, q: Partition) -> int:
    """Size of the join minus size of the meet."""
    p._check(q)
    return p.join(q).size - p.meet(q).size


def delta_ih(p: Partition, q: Partition) -> int:
    """Hamming distance between the two pair-indicator bit sequences."""
    p._check(q)
    d = (p.pair_mask ^ q.pair_mask).bit_count()
    # second formulation via sizes; stripped under python -O
    assert d == p.size + q.size - 2 * p.meet(q).size
    return d


_DISPATCH = {
    MeasureId.PD: pd_distance,
    MeasureId.SD: delta_sd,
    MeasureId.RB: delta_rb,
    MeasureId.RBP: delta_rb_plus,
    MeasureId.SB: delta_sb,
    MeasureId.IH: delta_ih,
}


def raw_distance(measure: MeasureId, p: Partition, q: Partition) -> int:
    return _DISPATCH[measure](p, q)


def distance(measure: MeasureId, p: Partition, q: Partition) -> DistanceValue:
    raw = raw_distance(measure, p, q)
    return DistanceValue(raw, normalize(raw))


def comparable_distance(measure: MeasureId, coarser: Partition, finer: Partition) -> int:
    """Distance of a comparable pair (finer <= coarser), using the cheap
    closed forms available when the pair order is known.

    For comparable pairs meet and join are the pair itself, so the four
    lattice-derived measures reduce to direct expressions; PD reduces to a
    per-block maximum.  Used by exhaustive scans on (meet, join) pairs.
    """
    if measure is MeasureId.PD:
        return pd_distance_comparable(coarser, finer)
    if measure is MeasureId.SD:
        return delta_sd(coarser, finer)
    if measure is MeasureId.RB:
        return len(finer.blocks) - len(coarser.blocks)
    if measure is MeasureId.RBP:
        # meet of a comparable pair is its finer member
        return len(finer.blocks) - len(coarser.blocks)
    if measure is MeasureId.SB:
        return coarser.size - finer.size
    if measure is MeasureId.IH:
        return coarser.size - finer.size
    raise ValueError(f"unknown measure {measure!r}")
