"""Canonical set partitions of {1..n} and the lattice operations on them.

A partition is stored in canonical form: blocks sorted ascending by their
minimum element, elements ascending inside each block.  All equality tests,
hashes and emitted literals rely on that form.  Values are immutable and
safe to share across workers.

Pairs (i, j) with 1 <= i < j <= n are indexed lexicographically:
(1,2), (1,3), ..., (1,n), (2,3), ...  The closed form is

    index(i, j) = (i-1)*n - i*(i-1)//2 + (j-i-1)

since the rows for 1..i-1 contribute (n-1) + (n-2) + ... + (n-i+1) entries.
Every bit mask over pairs in this module uses that indexing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import comb
from typing import Iterable, Iterator, NamedTuple

DEFAULT_ENUMERATION_LIMIT = 12


class PartitionError(Exception):
    """Base class for every error raised by this package."""


class InvalidPartitionError(PartitionError, ValueError):
    """Structural validation failure; names the offending element or block."""

    def __init__(self, message: str, *, element: int | None = None,
                 block: tuple[int, ...] | None = None):
        super().__init__(message)
        self.element = element
        self.block = block


class GroundSetMismatchError(PartitionError, ValueError):
    """Two partitions over different ground sets were combined."""


class CapacityError(PartitionError, RuntimeError):
    """An enumeration was requested beyond the configured size limit."""


class LiteralParseError(PartitionError, ValueError):
    """A partition literal could not be parsed."""


def pair_count(n: int) -> int:
    return comb(n, 2)


def pair_index(n: int, i: int, j: int) -> int:
    """Index of pair (i, j), 1 <= i < j <= n, in lexicographic order."""
    if not (1 <= i < j <= n):
        raise ValueError(f"pair ({i},{j}) out of range for n={n}")
    return (i - 1) * n - i * (i - 1) // 2 + (j - i - 1)


@lru_cache(maxsize=32)
def _pair_table(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs (i, j) in index order."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


@dataclass(frozen=True)
class PairIndicator:
    """Bit sequence over the C(n,2) element pairs of {1..n}.

    Bit index(i,j) is 1 iff i and j are in a common block.  Any indicator
    produced from a partition is transitively closed; `from_bits` enforces
    closure on raw input.
    """

    n: int
    mask: int

    @classmethod
    def from_bits(cls, n: int, bits: Iterable[int]) -> "PairIndicator":
        seq = tuple(bits)
        if len(seq) != pair_count(n):
            raise ValueError(f"expected {pair_count(n)} bits, got {len(seq)}")
        mask = 0
        for pos, b in enumerate(seq):
            if b not in (0, 1):
                raise ValueError(f"bit {pos} is {b!r}, want 0 or 1")
            mask |= b << pos
        ind = cls(n, mask)
        if ind.to_partition().pair_mask != mask:
            raise ValueError("bit sequence is not transitively closed")
        return ind

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> p) & 1 for p in range(pair_count(self.n)))

    def bit(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return (self.mask >> pair_index(self.n, i, j)) & 1

    def popcount(self) -> int:
        return self.mask.bit_count()

    def _check(self, other: "PairIndicator") -> None:
        if self.n != other.n:
            raise GroundSetMismatchError(f"n mismatch: {self.n} != {other.n}")

    def __xor__(self, other: "PairIndicator") -> "PairIndicator":
        self._check(other)
        return PairIndicator(self.n, self.mask ^ other.mask)

    def __and__(self, other: "PairIndicator") -> "PairIndicator":
        self._check(other)
        return PairIndicator(self.n, self.mask & other.mask)

    def __or__(self, other: "PairIndicator") -> "PairIndicator":
        self._check(other)
        return PairIndicator(self.n, self.mask | other.mask)

    def to_partition(self) -> "Partition":
        """Partition generated by the marked pairs (disjoint-set closure)."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for pos, (i, j) in enumerate(_pair_table(self.n)):
            if (self.mask >> pos) & 1:
                parent[find(i - 1)] = find(j - 1)
        groups: dict[int, list[int]] = {}
        for e in range(1, self.n + 1):
            groups.setdefault(find(e - 1), []).append(e)
        return _from_groups(self.n, groups.values())


@dataclass(frozen=True)
class ClassVector:
    """Block-cardinality histogram: counts[k-1] blocks of cardinality k."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts or any(c < 0 for c in self.counts):
            raise ValueError(f"invalid class counts {self.counts!r}")

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> "ClassVector":
        sizes = tuple(sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise ValueError(f"invalid block sizes {sizes!r}")
        counts = [0] * max(sizes)
        for s in sizes:
            counts[s - 1] += 1
        return cls(tuple(counts))

    @property
    def ground_n(self) -> int:
        return sum(k * c for k, c in enumerate(self.counts, start=1))

    @property
    def num_blocks(self) -> int:
        return sum(self.counts)

    def sizes(self) -> tuple[int, ...]:
        """Block cardinalities, ascending."""
        out: list[int] = []
        for k, c in enumerate(self.counts, start=1):
            out.extend([k] * c)
        return tuple(out)


@dataclass(frozen=True)
class Partition:
    """A canonical partition of {1..n}.

    `blocks` holds the canonical block tuples; `block_of[e-1]` is the index
    of the block containing element e.  Use :func:`from_blocks`,
    :func:`from_labels` or :func:`parse_literal` to construct validated
    instances.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...] = field(compare=False)

    def __len__(self) -> int:
        return len(self.blocks)

    # -- derived structure, cached per instance ---------------------------

    @cached_property
    def pair_mask(self) -> int:
        """Indicator bits as an int; bit index(i,j) set iff i,j co-blocked."""
        n, mask = self.n, 0
        for block in self.blocks:
            for a in range(len(block)):
                i = block[a]
                base = (i - 1) * n - i * (i - 1) // 2 - i - 1
                for b in range(a + 1, len(block)):
                    mask |= 1 << (base + block[b])
        return mask

    @cached_property
    def block_masks(self) -> tuple[int, ...]:
        """Each block as an element bit mask (bit e-1 for element e)."""
        out = []
        for block in self.blocks:
            m = 0
            for e in block:
                m |= 1 << (e - 1)
            out.append(m)
        return tuple(out)

    @cached_property
    def block_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.blocks)

    # -- order and lattice structure ---------------------------------------

    def _check(self, other: "Partition") -> None:
        if self.n != other.n:
            raise GroundSetMismatchError(
                f"ground sets differ: n={self.n} vs n={other.n}")

    def finer_or_equal(self, other: "Partition") -> bool:
        """True iff every block of self lies inside a block of other."""
        self._check(other)
        bo = other.block_of
        for block in self.blocks:
            b = bo[block[0] - 1]
            if any(bo[e - 1] != b for e in block):
                return False
        return True

    __le__ = finer_or_equal

    def covers(self, other: "Partition") -> bool:
        """True iff self is coarser than other with rank exactly one higher."""
        self._check(other)
        return (len(other.blocks) == len(self.blocks) + 1
                and other.finer_or_equal(self))

    def meet(self, other: "Partition") -> "Partition":
        """Coarsest common refinement: non-empty pairwise block intersections."""
        self._check(other)
        groups: dict[tuple[int, int], list[int]] = {}
        bp, bq = self.block_of, other.block_of
        for e in range(1, self.n + 1):
            groups.setdefault((bp[e - 1], bq[e - 1]), []).append(e)
        return _from_groups(self.n, groups.values())

    __and__ = meet

    def join(self, other: "Partition") -> "Partition":
        """Finest common coarsening: disjoint-set closure over both block sets."""
        self._check(other)
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for part in (self, other):
            for block in part.blocks:
                r = find(block[0] - 1)
                for e in block[1:]:
                    parent[find(e - 1)] = r
                    r = find(r)
        groups: dict[int, list[int]] = {}
        for e in range(1, self.n + 1):
            groups.setdefault(find(e - 1), []).append(e)
        return _from_groups(self.n, groups.values())

    __or__ = join

    # -- numeric attributes -------------------------------------------------

    @property
    def rank(self) -> int:
        """Level in the Hasse diagram: n minus the number of blocks."""
        return self.n - len(self.blocks)

    @cached_property
    def size(self) -> int:
        """Number of element pairs lying inside blocks: sum of C(|B|, 2)."""
        return sum(comb(len(b), 2) for b in self.blocks)

    def class_vector(self) -> ClassVector:
        counts = [0] * self.n
        for b in self.blocks:
            counts[len(b) - 1] += 1
        return ClassVector(tuple(counts))

    def indicator(self) -> PairIndicator:
        return PairIndicator(self.n, self.pair_mask)

    def is_modular(self) -> bool:
        """True iff at most one block has two or more elements."""
        return sum(1 for b in self.blocks if len(b) >= 2) <= 1

    # -- restriction ---------------------------------------------------------

    def induce(self, elements: Iterable[int]) -> "InducedPartition":
        """Partition of a subset, re-indexed 1..|A| by ascending element.

        Returns the induced partition together with the old-to-new element
        map, so callers can translate pairs back to the original ground set.
        """
        subset = sorted(set(elements))
        if not subset:
            raise InvalidPartitionError("cannot induce on an empty subset")
        for e in subset:
            if not (1 <= e <= self.n):
                raise InvalidPartitionError(
                    f"element {e} outside ground set 1..{self.n}", element=e)
        index_map = {old: new for new, old in enumerate(subset, start=1)}
        groups: dict[int, list[int]] = {}
        for old in subset:
            groups.setdefault(self.block_of[old - 1], []).append(index_map[old])
        induced = _from_groups(len(subset), groups.values())
        return InducedPartition(induced, index_map)

    # -- complements ----------------------------------------------------------

    def complements(self, *, limit: int | None = None) -> list["Partition"]:
        """All partitions with meet bottom and join top against self."""
        out = []
        for q in enumerate_partitions(self.n, limit=limit):
            if _meet_is_bottom(self, q) and _join_is_top(self, q):
                out.append(q)
        return out

    # -- rendering -------------------------------------------------------------

    def to_literal(self) -> str:
        """Textual form: compressed digits for n <= 9, space-separated above."""
        if self.n <= 9:
            return "|".join("".join(str(e) for e in b) for b in self.blocks)
        return "|".join(" ".join(str(e) for e in b) for b in self.blocks)

    def __str__(self) -> str:
        return self.to_literal()

    def __repr__(self) -> str:
        return f"Partition({self.to_literal()!r})"


class InducedPartition(NamedTuple):
    partition: Partition
    index_map: dict[int, int]


# -- construction ----------------------------------------------------------


def _from_groups(n: int, groups: Iterable[Iterable[int]]) -> Partition:
    """Canonicalize trusted groups (disjoint, covering) into a Partition."""
    blocks = sorted((tuple(sorted(g)) for g in groups), key=lambda b: b[0])
    block_of = [0] * n
    for idx, block in enumerate(blocks):
        for e in block:
            block_of[e - 1] = idx
    return Partition(n, tuple(blocks), tuple(block_of))


def from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> Partition:
    """Validated construction from arbitrary block collections."""
    if n < 1:
        raise InvalidPartitionError(f"ground set must be non-empty, got n={n}")
    mats = [tuple(sorted(set(b))) for b in blocks]
    seen: dict[int, tuple[int, ...]] = {}
    for block in mats:
        if not block:
            raise InvalidPartitionError("empty block", block=())
        for e in block:
            if not isinstance(e, int) or not (1 <= e <= n):
                raise InvalidPartitionError(
                    f"element {e!r} outside ground set 1..{n}",
                    element=e if isinstance(e, int) else None, block=block)
            if e in seen:
                raise InvalidPartitionError(
                    f"element {e} occurs in two blocks {seen[e]} and {block}",
                    element=e, block=block)
            seen[e] = block
    missing = [e for e in range(1, n + 1) if e not in seen]
    if missing:
        raise InvalidPartitionError(
            f"elements {missing} not covered by any block", element=missing[0])
    return _from_groups(n, mats)


def from_labels(pairs: Iterable[tuple[str, str]]) -> Partition:
    """Partition from (element-name, cluster-label) pairs.

    Names map to 1..n in ascending lexicographic (codepoint) order; equal
    labels share a block.  Distances computed downstream depend on this
    shared mapping, so it is fixed here once for every ingestion path.
    """
    items = list(pairs)
    if not items:
        raise InvalidPartitionError("no elements given")
    names = [name for name, _ in items]
    if len(set(names)) != len(names):
        dup = sorted({x for x in names if names.count(x) > 1})
        raise InvalidPartitionError(f"duplicate element name(s): {dup}")
    order = {name: idx for idx, name in enumerate(sorted(names), start=1)}
    groups: dict[str, list[int]] = {}
    for name, label in items:
        groups.setdefault(label, []).append(order[name])
    return _from_groups(len(items), groups.values())


def parse_literal(text: str) -> Partition:
    """Parse a partition literal.

    Two forms are accepted: compressed single-digit elements ("12|34|567")
    and space-separated elements ("1 2|3 4|5 6 7").  The ground set size is
    the total element count; elements must cover 1..n exactly.
    """
    body = text.strip()
    if not body:
        raise LiteralParseError("empty partition literal")
    blocks: list[list[int]] = []
    for raw in body.split("|"):
        token = raw.strip()
        if not token:
            raise LiteralParseError(f"empty block in literal {text!r}")
        if any(c.isspace() for c in token):
            try:
                block = [int(t) for t in token.split()]
            except ValueError:
                raise LiteralParseError(
                    f"non-integer element in block {token!r}") from None
        else:
            if not token.isdigit():
                raise LiteralParseError(f"non-digit characters in {token!r}")
            if "0" in token:
                raise LiteralParseError(
                    f"digit 0 in compressed block {token!r}; elements start at 1")
            block = [int(c) for c in token]
        blocks.append(block)
    n = sum(len(b) for b in blocks)
    try:
        return from_blocks(n, blocks)
    except InvalidPartitionError as exc:
        raise LiteralParseError(f"invalid literal {text!r}: {exc}") from exc


def bottom(n: int) -> Partition:
    return _from_groups(n, ([e] for e in range(1, n + 1)))


def top(n: int) -> Partition:
    return _from_groups(n, [range(1, n + 1)])


def atoms_of(n: int) -> list[Partition]:
    """The C(n,2) partitions with a single 2-block, in pair index order.

    For n=2 the only atom is the top element itself; callers that assume
    atoms lie strictly below the top must special-case that ground set.
    """
    if n < 2:
        raise ValueError(f"atoms need n >= 2, got {n}")
    return [atom(n, i, j) for i, j in _pair_table(n)]


def atom(n: int, i: int, j: int) -> Partition:
    """The partition whose only non-singleton block is {i, j}."""
    if i > j:
        i, j = j, i
    if not (1 <= i < j <= n):
        raise ValueError(f"invalid atom pair ({i},{j}) for n={n}")
    groups = [[i, j]] + [[e] for e in range(1, n + 1) if e != i and e != j]
    return _from_groups(n, groups)


def modular_partition(n: int, block: Iterable[int]) -> Partition:
    """The partition {A} plus singletons for a non-empty A within {1..n}."""
    a = sorted(set(block))
    if not a:
        raise InvalidPartitionError("modular block must be non-empty")
    rest = [[e] for e in range(1, n + 1) if e not in set(a)]
    return from_blocks(n, [a] + rest)


# -- enumeration -------------------------------------------------------------


def _check_capacity(n: int, limit: int | None) -> None:
    cap = DEFAULT_ENUMERATION_LIMIT if limit is None else limit
    if n > cap:
        raise CapacityError(
            f"enumeration requested for n={n}, above the limit {cap}; "
            "pass an explicit limit to override")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")


def enumerate_partitions(n: int, *, limit: int | None = None) -> Iterator[Partition]:
    """Every partition of {1..n} once, in lexicographic order of its
    restricted-growth sequence (the block index of each element, with new
    blocks numbered in order of first appearance).

    The stream starts at the single-block partition (sequence 00...0) and
    ends at the all-singletons one (012...).  The order is total and stable,
    so it doubles as the tie-breaking order for witnesses in reports.
    """
    _check_capacity(n, limit)
    rgs = [0] * n

    def rec(i: int, mx: int) -> Iterator[Partition]:
        if i == n:
            yield _from_rgs(n, rgs)
            return
        for v in range(mx + 2):
            rgs[i] = v
            yield from rec(i + 1, mx if v <= mx else v)

    yield from rec(1, 0) if n > 1 else iter([_from_rgs(1, [0])])


def _from_rgs(n: int, rgs: list[int]) -> Partition:
    nblocks = max(rgs) + 1
    groups: list[list[int]] = [[] for _ in range(nblocks)]
    for e, b in enumerate(rgs, start=1):
        groups[b].append(e)
    # first occurrences ascend with the block label, so this is canonical
    blocks = tuple(tuple(g) for g in groups)
    return Partition(n, blocks, tuple(rgs))


def enumerate_modular(n: int, *, limit: int | None = None) -> Iterator[Partition]:
    """All 2**n - n partitions with at most one non-singleton block.

    Order: the all-singletons partition first, then one partition per
    subset A with |A| >= 2, by ascending |A| and lexicographic A.
    """
    _check_capacity(n, limit)
    yield bottom(n)
    for size in range(2, n + 1):
        for combo in itertools.combinations(range(1, n + 1), size):
            rest = ([e] for e in range(1, n + 1) if e not in combo)
            yield _from_groups(n, itertools.chain([combo], rest))


@lru_cache(maxsize=6)
def partition_list(n: int) -> tuple[Partition, ...]:
    """Materialized enumeration for repeated exhaustive scans (small n)."""
    if n > 9:
        raise CapacityError(f"refusing to materialize all partitions of n={n}")
    return tuple(enumerate_partitions(n))


# -- scan helpers (no object construction) -----------------------------------


def _meet_is_bottom(p: Partition, q: Partition) -> bool:
    return (p.pair_mask & q.pair_mask) == 0


def _join_is_top(p: Partition, q: Partition) -> bool:
    parent = list(range(p.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merged = p.n
    for part in (p, q):
        for block in part.blocks:
            r = find(block[0] - 1)
            for e in block[1:]:
                s = find(e - 1)
                if s != r:
                    parent[s] = r
                    merged -= 1
                    r = find(r)
    return merged == 1
