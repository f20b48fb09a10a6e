"""Bounds on the indicator-Hamming distance for a fixed partition-distance.

For partitions of an n-set at partition-distance k, the attainable
indicator-Hamming values lie between `min_ih_given_d(n, k)` and
`max_ih_given_d(n, k)`.  The minimum splits into four regimes (see
`MinCase`); the mid regime distributes k linking pairs as evenly as
possible over the n-k kept elements and splits each element's pairs as
evenly as possible between the two partitions.

The constrained variants fix, in addition, the block-cardinality class of
the common induced partition on the kept elements.  The constrained
minimum beyond the trivial regime is produced by a greedy bipartite
construction (`run_greedy`): blocks on one side, the k removed elements on
the other, edges added one at a time, alternating which partition the new
edge extends, always picking a cheapest extension.

Everything here is exact integer arithmetic; no floats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

from .core import ClassVector, Partition, atom, bottom

__all__ = [
    "MinCase", "BoundResult", "GreedyState",
    "max_ih_given_d", "min_ih_given_d", "mid_range_min_ih", "balanced_min_ih",
    "constrained_max", "constrained_min", "run_greedy",
    "bounds_table", "render_bounds_text", "render_bounds_csv",
    "minimal_pair_witness",
]


class MinCase(enum.Enum):
    ZERO = "zero"          # k = 0: identical partitions
    TOP_K = "top_k"        # k = n-1: forced to (top, bottom)
    SMALL_K = "small_k"    # k <= 2(n-k): one linking pair per removed element
    MID_K = "mid_k"        # 2(n-k) < k < n-1: balanced-split minimum


@dataclass(frozen=True)
class BoundResult:
    n: int
    k: int
    min_ih: int
    max_ih: int
    min_case: MinCase


def _check_k(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not (0 <= k <= n - 1):
        raise ValueError(f"k={k} out of range 0..{n - 1}")


def max_ih_given_d(n: int, k: int) -> int:
    """Largest indicator-Hamming value over pairs at partition-distance k."""
    _check_k(n, k)
    return comb(n, 2) - comb(n - k, 2)


def classify_min_case(n: int, k: int) -> MinCase:
    _check_k(n, k)
    if k == 0:
        return MinCase.ZERO
    if k == n - 1:
        return MinCase.TOP_K
    if k <= 2 * (n - k):
        return MinCase.SMALL_K
    return MinCase.MID_K


def min_ih_given_d(n: int, k: int) -> int:
    """Smallest indicator-Hamming value over pairs at partition-distance k.

    The k = n-1 regime takes precedence over the k <= 2(n-k) one: distance
    n-1 forces the pair (top, bottom), whose indicator-Hamming value is
    C(n,2) regardless of the small-k construction.
    """
    case = classify_min_case(n, k)
    if case is MinCase.ZERO:
        return 0
    if case is MinCase.TOP_K:
        return comb(n, 2)
    if case is MinCase.SMALL_K:
        return k
    return mid_range_min_ih(n, k)


def mid_range_min_ih(n: int, k: int) -> int:
    """Balanced-split minimum for 2(n-k) < k < n-1.

    Each of the n-k kept elements is linked to either a = floor(k/(n-k)) or
    b = ceil(k/(n-k)) removed elements, and its links are divided as evenly
    as possible between the two partitions; an element with t links then
    contributes C(floor(t/2)+1, 2) + C(ceil(t/2)+1, 2).
    """
    _check_k(n, k)
    t = n - k
    if not (2 * t < k < n - 1):
        raise ValueError(f"(n={n}, k={k}) outside the mid regime 2(n-k) < k < n-1")
    a, b = k // t, -(-k // t)
    heavy = k - t * a          # elements linked b times
    light = n - 2 * k + t * a  # elements linked a times

    def split_cost(links: int) -> int:
        return comb(links // 2 + 1, 2) + comb(-(-links // 2) + 1, 2)

    return heavy * split_cost(b) + light * split_cost(a)


def balanced_min_ih(n: int, k: int) -> int:
    """Exhaustively confirmed minimum indicator-Hamming value at
    partition-distance k, for any 0 <= k <= n-1.

    A pair at distance k is a pair whose disagreement graph (pairs counted
    by the indicator-Hamming distance, viewed as edges on the ground set)
    has independence number exactly n-k, because a subset is a coincidence
    set exactly when it spans no disagreement edge.  The edge-minimal graphs
    with independence number at most n-k are disjoint unions of n-k
    near-equal cliques, and such a graph is realized by pairing a partition
    into n-k balanced blocks with the all-singletons partition.  Hence the
    minimum is the summed pair count of the balanced block sizes.

    Agrees with `min_ih_given_d` for k <= floor(n/2) and at k in {0, n-1};
    strictly exceeds it in between, where the stated case formulas
    undercount (the brute-force oracle confirms this function instead).
    """
    _check_k(n, k)
    if k == 0:
        return 0
    t = n - k
    q, r = divmod(n, t)
    return r * comb(q + 1, 2) + (t - r) * comb(q, 2)


# -- constrained bounds -------------------------------------------------------


def constrained_max(base_class: ClassVector, k: int) -> int:
    """Maximum indicator-Hamming value when the common induced partition on
    the kept elements has the given class and k elements were removed.

    One partition attaches all removed elements to a largest block, the
    other to a second-largest block; the result is the summed size growth of
    those two blocks.  Requires at least two blocks.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    sizes = sorted(base_class.sizes(), reverse=True)
    if len(sizes) < 2:
        raise ValueError("constrained maximum needs at least two base blocks")
    b1, b2 = sizes[0], sizes[1]
    return (comb(b1 + k, 2) - comb(b1, 2)) + (comb(b2 + k, 2) - comb(b2, 2))


def constrained_min(base_class: ClassVector, k: int) -> int:
    """Minimum indicator-Hamming value under the same constraint.

    With enough singleton base blocks (k <= 2*c_1) every removed element can
    be absorbed at unit cost, giving exactly k; otherwise the greedy
    construction provides the value.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    c1 = base_class.counts[0] if base_class.counts else 0
    if k <= 2 * c1:
        return k
    _, objective = run_greedy(base_class, k)
    return objective


@dataclass(frozen=True)
class GreedyState:
    """Snapshot of the greedy bipartite construction after `step` edges.

    `degrees_p[b]` / `degrees_q[b]` count the removed elements attached to
    base block b on each side; `covered` counts removed elements assigned so
    far and always equals `step`.
    """

    base_class: ClassVector
    k: int
    degrees_p: tuple[int, ...]
    degrees_q: tuple[int, ...]
    step: int
    covered: int


def run_greedy(base_class: ClassVector, k: int, *,
               reversed_ties: bool = False) -> tuple[list[GreedyState], int]:
    """Run the k-step greedy edge construction; return the state trace
    (including the initial empty state) and the final objective.

    Steps 1, 3, 5, ... extend the first partition, steps 2, 4, 6, ... the
    second.  The candidate edge (B, j) for any uncovered removed element j
    costs C(|B| + 1 + side_degree(B), 2); a cheapest edge is added, breaking
    ties by smallest block index then smallest j (largest under
    `reversed_ties`; the objective must not depend on this and tests assert
    it does not).

    Base blocks are indexed by ascending cardinality, matching the canonical
    partition whose smallest blocks hold the smallest elements.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    sizes = base_class.sizes()
    deg_p = [0] * len(sizes)
    deg_q = [0] * len(sizes)
    trace = [GreedyState(base_class, k, tuple(deg_p), tuple(deg_q), 0, 0)]
    block_order = range(len(sizes) - 1, -1, -1) if reversed_ties else range(len(sizes))
    for m in range(k):
        side = deg_p if m % 2 == 0 else deg_q
        best_block, best_weight = -1, None
        for b in block_order:
            w = comb(sizes[b] + 1 + side[b], 2)
            if best_weight is None or w < best_weight:
                best_block, best_weight = b, w
        side[best_block] += 1
        trace.append(GreedyState(base_class, k, tuple(deg_p), tuple(deg_q),
                                 m + 1, m + 1))
    objective = sum(
        comb(sizes[b] + deg_p[b], 2) + comb(sizes[b] + deg_q[b], 2)
        - 2 * comb(sizes[b], 2)
        for b in range(len(sizes)))
    return trace, objective


# -- witnesses ---------------------------------------------------------------


def minimal_pair_witness(n: int, k: int) -> tuple[Partition, Partition]:
    """An explicit pair at distance k attaining indicator-Hamming value k,
    for 1 <= k <= floor(n/2).

    Kept elements are 1..n-k; each removed element n-k+1..n is linked to
    exactly one kept element, one linking pair per kept element, alternating
    which partition receives the link.  Beyond floor(n/2) a kept element
    would need two links, and the two removed endpoints then join the
    coincidence structure, shrinking the realized distance below k; no pair
    at distance k with value k exists there, so the domain stops here.
    """
    _check_k(n, k)
    if not (1 <= k <= n // 2):
        raise ValueError(f"(n={n}, k={k}) outside 1 <= k <= floor(n/2)")
    p_atoms, q_atoms = [], []
    for slot in range(k):
        target = p_atoms if slot % 2 == 0 else q_atoms
        target.append((slot + 1, n - k + slot + 1))
    p = bottom(n)
    for i, jj in p_atoms:
        p = p.join(atom(n, i, jj))
    q = bottom(n)
    for i, jj in q_atoms:
        q = q.join(atom(n, i, jj))
    return p, q


# -- tables and rendering ------------------------------------------------------


def bounds_table(n: int) -> list[BoundResult]:
    if n < 2:
        raise ValueError(f"bounds table needs n >= 2, got {n}")
    return [BoundResult(n, k, min_ih_given_d(n, k), max_ih_given_d(n, k),
                        classify_min_case(n, k))
            for k in range(n)]


def render_bounds_text(rows: list[BoundResult],
                       oracle: dict[int, tuple[int, int]] | None = None) -> str:
    header = ["n", "k", "min_ih", "max_ih", "case"]
    if oracle is not None:
        header += ["oracle_min", "oracle_max", "agree"]
    lines = [header]
    for r in rows:
        line = [str(r.n), str(r.k), str(r.min_ih), str(r.max_ih), r.min_case.value]
        if oracle is not None:
            omin, omax = oracle[r.k]
            line += [str(omin), str(omax),
                     "yes" if (omin, omax) == (r.min_ih, r.max_ih) else "NO"]
        lines.append(line)
    widths = [max(len(row[c]) for row in lines) for c in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in lines)


def render_bounds_csv(rows: list[BoundResult],
                      oracle: dict[int, tuple[int, int]] | None = None) -> str:
    header = "n,k,min_ih,max_ih,case"
    if oracle is not None:
        header += ",oracle_min,oracle_max,agree"
    out = [header]
    for r in rows:
        line = f"{r.n},{r.k},{r.min_ih},{r.max_ih},{r.min_case.value}"
        if oracle is not None:
            omin, omax = oracle[r.k]
            agree = "yes" if (omin, omax) == (r.min_ih, r.max_ih) else "no"
            line += f",{omin},{omax},{agree}"
        out.append(line)
    return "\n".join(out)
