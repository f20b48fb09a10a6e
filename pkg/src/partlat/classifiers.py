"""Exhaustive verification of lattice-theoretic properties per measure.

Each property of a distance measure is decided by a full scan over all
unordered partition pairs at the requested ground-set size (capacity-capped),
sharing one meet/join computation per pair across all measures.  Verdicts
carry re-checkable witnesses: a counterexample when the property fails, a
maximizing pair for maximality properties, and a strictness witness for the
one-sided modularity properties.

The maximum-growth properties (strong monotonicity / convexity of the
maximum as a function of n) are evaluated on a three-point window of
exhaustive maxima.  The window is anchored forward ({n, n+1, n+2}) while
that stays within cheap territory and backward ({n-2, n-1, n}) otherwise,
so a full classification at n=6 never needs a scan beyond n=6.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .core import CapacityError, Partition, partition_list
from .measures import MeasureId, comparable_distance, pd_distance

SCAN_LIMIT = 7
_FORWARD_WINDOW_CAP = 6


class PropertyId(enum.Enum):
    ANTISYMMETRY = "antisymmetry"
    F_MAXIMALITY = "f_maximality"
    F_MONOTONE = "f_monotone"
    F_CONVEX = "f_convex"
    MOD_MAX = "mod_max"
    BOTTOP_MAX = "bottop_max"
    CO_MAX = "co_max"
    SUPERMODULAR = "supermodular"
    SUBMODULAR = "submodular"
    MODULAR = "modular"

    @classmethod
    def parse(cls, name: str) -> "PropertyId":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(p.value for p in cls)
            raise ValueError(f"unknown property {name!r}; expected one of {valid}") from None


@dataclass(frozen=True)
class Verdict:
    property: PropertyId
    holds: bool
    witness: tuple[Partition, Partition] | None
    observed_max: int | None


@dataclass
class _MeasureStats:
    """Scan accumulators for one measure.  `super_viol` is the first pair
    whose meet/join value drops below the pair value (a supermodularity
    violation, equivalently a strict submodularity instance); `sub_viol` is
    the mirror image."""
    max_val: int = -1
    max_pair: tuple[int, int] | None = None
    modmax_val: int = -1
    modmax_pair: tuple[int, int] | None = None
    bottop_val: int = 0
    comp_vals: list[int] | None = None
    comp_pairs: list[tuple[int, int]] | None = None
    super_viol: tuple[int, int] | None = None
    sub_viol: tuple[int, int] | None = None
    antisym_viol: tuple[int, int] | None = None


def _pair_values(measure: MeasureId, p: Partition, q: Partition,
                 meet: Partition, join: Partition) -> tuple[int, int]:
    """(value on the pair, value on its meet/join pair)."""
    if measure is MeasureId.PD:
        return pd_distance(p, q), comparable_distance(MeasureId.PD, join, meet)
    if measure is MeasureId.SD:
        common = len(p.block_set & q.block_set)
        v = len(p.blocks) + len(q.blocks) - 2 * common
        common_mj = len(meet.block_set & join.block_set)
        return v, len(meet.blocks) + len(join.blocks) - 2 * common_mj
    if measure is MeasureId.RB:
        v = len(meet.blocks) - len(join.blocks)
        return v, v
    if measure is MeasureId.RBP:
        return (2 * len(meet.blocks) - len(p.blocks) - len(q.blocks),
                len(meet.blocks) - len(join.blocks))
    if measure is MeasureId.SB:
        v = join.size - meet.size
        return v, v
    if measure is MeasureId.IH:
        return ((p.pair_mask ^ q.pair_mask).bit_count(), join.size - meet.size)
    raise ValueError(f"unknown measure {measure!r}")


@lru_cache(maxsize=8)
def _scan(n: int, measures: frozenset[MeasureId]) -> dict[MeasureId, _MeasureStats]:
    if n > SCAN_LIMIT:
        raise CapacityError(f"classifier scans limited to n<={SCAN_LIMIT}, got {n}")
    parts = partition_list(n)
    modular = [p.is_modular() for p in parts]
    comp_pairs: list[tuple[int, int]] = []
    stats = {m: _MeasureStats(comp_vals=[], comp_pairs=comp_pairs)
             for m in measures}
    for i in range(len(parts)):
        p = parts[i]
        for j in range(i, len(parts)):
            q = parts[j]
            meet = p.meet(q)
            join = p.join(q)
            is_comp = len(meet.blocks) == n and len(join.blocks) == 1
            if is_comp:
                comp_pairs.append((i, j))
            both_modular = modular[i] and modular[j]
            for m, st in stats.items():
                v, vmj = _pair_values(m, p, q, meet, join)
                if v > st.max_val:
                    st.max_val, st.max_pair = v, (i, j)
                if both_modular and v > st.modmax_val:
                    st.modmax_val, st.modmax_pair = v, (i, j)
                if is_comp:
                    st.comp_vals.append(v)
                if vmj < v and st.super_viol is None:
                    st.super_viol = (i, j)
                if vmj > v and st.sub_viol is None:
                    st.sub_viol = (i, j)
                if st.antisym_viol is None and ((i == j) != (v == 0)):
                    st.antisym_viol = (i, j)
    top_p, bot_p = parts[0], parts[-1]
    for m, st in stats.items():
        st.bottop_val = _pair_values(m, top_p, bot_p, bot_p, top_p)[0]
    return stats


def _stat(measure: MeasureId, n: int) -> _MeasureStats:
    return _scan(n, frozenset([measure]))[measure]


def max_profile(measure: MeasureId, n_lo: int, n_hi: int) -> list[int]:
    """Exact maximum of the measure over all pairs, for each n in the
    inclusive interval."""
    if n_lo < 1 or n_hi < n_lo:
        raise ValueError(f"bad interval {n_lo}..{n_hi}")
    return [_stat(measure, n).max_val for n in range(n_lo, n_hi + 1)]


def _profile_window(n: int) -> tuple[int, int, int]:
    if n + 2 <= _FORWARD_WINDOW_CAP or n < 4:
        return (n, n + 1, n + 2)
    return (n - 2, n - 1, n)


def check(measure: MeasureId, prop: PropertyId, n: int) -> Verdict:
    """Exhaustive verdict for one measure/property at ground-set size n."""
    parts = partition_list(n)

    def pair(idx):
        return None if idx is None else (parts[idx[0]], parts[idx[1]])

    if prop in (PropertyId.F_MONOTONE, PropertyId.F_CONVEX):
        w = _profile_window(n)
        f = [_stat(measure, m).max_val for m in w]
        if prop is PropertyId.F_MONOTONE:
            diffs = [f[1] - f[0], f[2] - f[1]]
            return Verdict(prop, min(diffs) > 0, None, min(diffs))
        gap = f[2] + f[0] - 2 * f[1]
        return Verdict(prop, gap > 0, None, gap)

    st = _stat(measure, n)
    if prop is PropertyId.ANTISYMMETRY:
        return Verdict(prop, st.antisym_viol is None, pair(st.antisym_viol), None)
    if prop is PropertyId.F_MAXIMALITY:
        return Verdict(prop, True, pair(st.max_pair), st.max_val)
    if prop is PropertyId.MOD_MAX:
        holds = st.modmax_val == st.max_val
        witness = pair(st.modmax_pair) if holds else pair(st.max_pair)
        return Verdict(prop, holds, witness, st.modmax_val)
    if prop is PropertyId.BOTTOP_MAX:
        holds = st.bottop_val == st.max_val
        witness = (parts[0], parts[-1]) if holds else pair(st.max_pair)
        return Verdict(prop, holds, witness, st.bottop_val)
    if prop is PropertyId.CO_MAX:
        deficit = None
        comp_min = None
        for (i, j), v in zip(st.comp_pairs, st.comp_vals):
            if comp_min is None or v < comp_min:
                comp_min = v
            if v < st.max_val and deficit is None:
                deficit = (i, j)
        holds = deficit is None
        witness = pair(st.comp_pairs[0]) if holds and st.comp_pairs else pair(deficit)
        return Verdict(prop, holds, witness, comp_min)
    if prop is PropertyId.SUPERMODULAR:
        holds = st.super_viol is None
        # when it holds, the witness is a strict instance (if any exists)
        return Verdict(prop, holds,
                       pair(st.super_viol) if not holds else pair(st.sub_viol),
                       None)
    if prop is PropertyId.SUBMODULAR:
        holds = st.sub_viol is None
        return Verdict(prop, holds,
                       pair(st.sub_viol) if not holds else pair(st.super_viol),
                       None)
    if prop is PropertyId.MODULAR:
        viol = st.super_viol if st.super_viol is not None else st.sub_viol
        return Verdict(prop, viol is None, pair(viol), None)
    raise ValueError(f"unknown property {prop!r}")


@dataclass(frozen=True)
class ClassifyReport:
    n: int
    verdicts: dict[MeasureId, dict[PropertyId, Verdict]]

    def to_json(self) -> dict:
        out: dict = {"n": self.n, "measures": {}}
        for m, props in self.verdicts.items():
            entry = {}
            for prop, v in props.items():
                entry[prop.value] = {
                    "holds": v.holds,
                    "witness": [v.witness[0].to_literal(), v.witness[1].to_literal()]
                    if v.witness else None,
                    "observed_max": v.observed_max,
                }
            out["measures"][m.value] = entry
        return out

    def to_text(self) -> str:
        props = list(PropertyId)
        short = {
            PropertyId.ANTISYMMETRY: "antisym",
            PropertyId.F_MAXIMALITY: "fmax",
            PropertyId.F_MONOTONE: "fmono",
            PropertyId.F_CONVEX: "fconvex",
            PropertyId.MOD_MAX: "modmax",
            PropertyId.BOTTOP_MAX: "bottop",
            PropertyId.CO_MAX: "comax",
            PropertyId.SUPERMODULAR: "super",
            PropertyId.SUBMODULAR: "sub",
            PropertyId.MODULAR: "modular",
        }
        rows = [["measure"] + [short[p] for p in props]]
        for m, verdicts in self.verdicts.items():
            row = [m.value]
            for p in props:
                v = verdicts[p]
                cell = "yes" if v.holds else "no"
                if p is PropertyId.F_MAXIMALITY:
                    cell += f"({v.observed_max})"
                row.append(cell)
            rows.append(row)
        widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
        return "\n".join(
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
            for row in rows)


def classify_all(n: int, measures: list[MeasureId] | None = None) -> ClassifyReport:
    """Full measure-by-property verdict matrix at ground-set size n."""
    targets = measures if measures is not None else list(MeasureId)
    verdicts = {m: {p: check(m, p, n) for p in PropertyId} for m in targets}
    return ClassifyReport(n, verdicts)


# -- expected assignments -----------------------------------------------------


@lru_cache(maxsize=1)
def _expectations() -> dict:
    with resources.files("partlat").joinpath("expectations.json").open() as fh:
        return json.load(fh)


def _expected_max(formula: str, n: int) -> int:
    if formula == "n-1":
        return n - 1
    if formula == "binom2":
        return n * (n - 1) // 2
    raise ValueError(f"unknown max formula {formula!r}")


def expectation_mismatches(report: ClassifyReport) -> list[str]:
    """Compare a classification against the recorded expected assignments;
    return human-readable mismatch descriptions (empty when consistent)."""
    n = report.n
    exp = _expectations()
    problems = []
    for m, props in report.verdicts.items():
        entry = exp.get(m.value)
        if entry is None:
            continue
        for prop_name, spec in entry.get("properties", {}).items():
            prop = PropertyId(prop_name)
            if prop not in props or n < spec.get("min_n", 1):
                continue
            got = props[prop].holds
            if got != spec["holds"]:
                problems.append(
                    f"{m.value}.{prop.value} at n={n}: expected "
                    f"{'holds' if spec['holds'] else 'fails'}, classifier found "
                    f"{'holds' if got else 'fails'}")
        formula = entry.get("max_formula")
        if formula is not None and PropertyId.F_MAXIMALITY in props:
            want = _expected_max(formula, n)
            got_max = props[PropertyId.F_MAXIMALITY].observed_max
            if got_max != want:
                problems.append(
                    f"{m.value} maximum at n={n}: expected {want}, observed {got_max}")
        gap = entry.get("convexity_gap")
        if gap is not None and PropertyId.F_CONVEX in props:
            got_gap = props[PropertyId.F_CONVEX].observed_max
            if got_gap != gap:
                problems.append(
                    f"{m.value} convexity gap at n={n}: expected {gap}, observed {got_gap}")
    return problems
