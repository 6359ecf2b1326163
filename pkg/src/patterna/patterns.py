"""Patterns of consistency and inconsistency over a finite index set.

An n-pattern is a pair (C, I) of sets of conditions, where a condition is a
pair (pos, neg) of subsets of [0, n), not both empty.  C-conditions request a
common point inside the positive sets and outside the negative ones;
I-conditions forbid such a point.  This module defines the combinatorial
objects, their classification (reasonable / positive / complete / fully
complete / k-bounded), the classical dividing-line families as concrete
patterns, the CNF-to-pattern reduction, and the positive doubling transform.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .bounds import SUBSET_PATTERN_N, TREE_NODES, enumeration_bound
from .errors import (
    DuplicateCondition,
    EmptyCondition,
    IndexOutOfRange,
    NotConsistencyPattern,
    UnsupportedParams,
)
from .sat import CnfFormula


@dataclass(frozen=True, order=True)
class Condition:
    """A pair (pos, neg) of index sets, stored as sorted duplicate-free tuples.

    Comparison is lexicographic on (pos, neg), which is the canonical
    condition order used everywhere (serialization, witness synthesis,
    failure reporting).
    """

    pos: tuple[int, ...]
    neg: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pos", tuple(sorted(set(self.pos))))
        object.__setattr__(self, "neg", tuple(sorted(set(self.neg))))

    @property
    def indices(self) -> frozenset[int]:
        return frozenset(self.pos) | frozenset(self.neg)


def _coerce_condition(raw) -> Condition:
    if isinstance(raw, Condition):
        return raw
    pos, neg = raw
    return Condition(tuple(pos), tuple(neg))


def _canonical_side(raw_conditions, n: int, side: str) -> tuple[Condition, ...]:
    conditions = []
    for raw in raw_conditions:
        cond = _coerce_condition(raw)
        if not cond.pos and not cond.neg:
            raise EmptyCondition(f"{side} contains the empty condition (∅, ∅)")
        for i in cond.indices:
            if not 0 <= i < n:
                raise IndexOutOfRange(f"index {i} in {side} outside [0, {n})")
        conditions.append(cond)
    return tuple(sorted(set(conditions)))


@dataclass(frozen=True)
class Pattern:
    """An n-pattern.  Construction canonicalizes: conditions are deduplicated
    and sorted, and index-range / nonemptiness violations raise immediately."""

    n: int
    consistency: tuple[Condition, ...] = ()
    inconsistency: tuple[Condition, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise IndexOutOfRange(f"index count must be a nonnegative integer, got {self.n!r}")
        object.__setattr__(
            self, "consistency", _canonical_side(self.consistency, self.n, "consistency")
        )
        object.__setattr__(
            self, "inconsistency", _canonical_side(self.inconsistency, self.n, "inconsistency")
        )

    @property
    def conditions(self) -> tuple[Condition, ...]:
        return self.consistency + self.inconsistency


def validate_pattern(data, *, strict: bool = True) -> Pattern:
    """Normalize candidate pattern data into a canonical Pattern.

    `data` is a Pattern or a mapping with keys n / consistency / inconsistency.
    Strict mode rejects duplicate conditions within a side; lenient mode
    deduplicates silently.  Idempotent: validating a validated pattern is a
    no-op.
    """
    if isinstance(data, Pattern):
        return data  # already canonical by construction
    try:
        n = data["n"]
        raw_c = data.get("consistency", ())
        raw_i = data.get("inconsistency", ())
    except (TypeError, KeyError) as exc:
        raise IndexOutOfRange(f"pattern data must provide n/consistency/inconsistency: {exc}") from exc
    if strict:
        for side, raw in (("consistency", raw_c), ("inconsistency", raw_i)):
            seen = set()
            for item in raw:
                cond = _coerce_condition(item)
                if cond in seen:
                    raise DuplicateCondition(f"duplicate {side} condition {cond.pos}/{cond.neg}")
                seen.add(cond)
    return Pattern(n, tuple(_coerce_condition(c) for c in raw_c),
                   tuple(_coerce_condition(c) for c in raw_i))


@dataclass(frozen=True)
class PatternFlags:
    reasonable: bool
    positive: bool
    complete: bool
    fully_complete: bool
    k_bounded: int | None
    k_bounded_at_most: int | None


def classify(p: Pattern) -> PatternFlags:
    """Compute the classification flags literally from the definitions.

    reasonable: no inconsistency condition is coordinatewise contained in a
    consistency condition, and every condition has disjoint pos/neg parts.
    positive: every condition has empty neg.  complete: every condition is a
    split (X, n∖X) and there is at least one condition.  fully complete:
    complete, C nonempty, and each split lies in exactly one of C, I.
    k_bounded: all inconsistency conditions are positive of one size k.
    """
    conds = p.conditions
    disjoint = all(set(c.pos).isdisjoint(c.neg) for c in conds)
    contained = any(
        set(z.pos) <= set(y.pos) and set(z.neg) <= set(y.neg)
        for z in p.inconsistency
        for y in p.consistency
    )
    reasonable = disjoint and not contained
    positive = all(not c.neg for c in conds)
    full = list(range(p.n))
    complete = bool(conds) and all(sorted(c.pos + c.neg) == full for c in conds)
    fully_complete = (
        complete
        and bool(p.consistency)
        and not set(p.consistency) & set(p.inconsistency)
        and len(p.consistency) + len(p.inconsistency) == 2**p.n
    )
    k_bounded = None
    k_bounded_at_most = None
    if p.inconsistency and all(not z.neg for z in p.inconsistency):
        sizes = {len(z.pos) for z in p.inconsistency}
        k_bounded_at_most = max(sizes)
        if len(sizes) == 1:
            k_bounded = k_bounded_at_most
    return PatternFlags(reasonable, positive, complete, fully_complete,
                        k_bounded, k_bounded_at_most)


def is_k_bounded(p: Pattern, k: int) -> bool:
    """True iff every inconsistency condition is positive of size exactly k.

    Vacuously true when I = ∅ (such a pattern qualifies for every k)."""
    return all(not z.neg and len(z.pos) == k for z in p.inconsistency)


# ---------------------------------------------------------------------------
# Dividing-line pattern families
# ---------------------------------------------------------------------------


def op_pattern(n: int) -> Pattern:
    """Order property: C = {({i..n-1}, {0..i-1}) : i < n}, I = ∅."""
    _require(n >= 0, "n must be nonnegative")
    return Pattern(n, tuple(Condition(range(i, n), range(0, i)) for i in range(n)))


def ip_pattern(n: int) -> Pattern:
    """Independence property: every complete split (X, n∖X) is consistent."""
    _require(n >= 0, "n must be nonnegative")
    if n == 0:
        return Pattern(0)  # the only split would be (∅, ∅), which is illegal
    everything = frozenset(range(n))
    conds = []
    for size in range(n + 1):
        for pos in itertools.combinations(range(n), size):
            conds.append(Condition(pos, everything - set(pos)))
    return Pattern(n, tuple(conds))


def cm_pattern(n: int) -> Pattern:
    """Consistency-maximality family; identical to the independence family."""
    return ip_pattern(n)


def sop_pattern(n: int) -> Pattern:
    """Strict order property: C = {({i+1},{i})}, I = {({i},{i+1})} for i < n-1."""
    _require(n >= 0, "n must be nonnegative")
    return Pattern(
        n,
        tuple(Condition((i + 1,), (i,)) for i in range(n - 1)),
        tuple(Condition((i,), (i + 1,)) for i in range(n - 1)),
    )


def _tree_nodes(branching: int, depth: int):
    """Strings over [0, branching) of length <= depth, in level order (root first)."""
    _require(branching >= 1, "branching must be >= 1")
    _require(depth >= 0, "depth must be >= 0")
    nodes = [()]
    level = [()]
    for _ in range(depth):
        level = [node + (c,) for node in level for c in range(branching)]
        nodes.extend(level)
    if len(nodes) > enumeration_bound(TREE_NODES):
        raise UnsupportedParams(f"tree with {len(nodes)} nodes exceeds the bound")
    return nodes, {node: i for i, node in enumerate(nodes)}


def _tree_paths(branching, depth, index):
    paths = []
    for leaf in itertools.product(range(branching), repeat=depth):
        paths.append(tuple(index[leaf[:length]] for length in range(depth + 1)))
    return paths


def ktp_pattern(branching: int, depth: int, k: int) -> Pattern:
    """k-tree property on the tree of strings of length <= depth.

    Paths (root included) are consistent; every k-subset of a sibling set is
    inconsistent.  Requires 2 <= k <= branching, else no level condition is
    expressible.
    """
    _require(2 <= k, "k must be at least 2")
    _require(k <= branching, "k must not exceed the branching (no k-subsets of a level)")
    nodes, index = _tree_nodes(branching, depth)
    consistency = [Condition(path, ()) for path in _tree_paths(branching, depth, index)]
    inconsistency = []
    for node in nodes:
        if len(node) == depth:
            continue
        children = [index[node + (c,)] for c in range(branching)]
        for combo in itertools.combinations(children, k):
            inconsistency.append(Condition(combo, ()))
    return Pattern(len(nodes), tuple(consistency), tuple(inconsistency))


def tp1_pattern(branching: int, depth: int) -> Pattern:
    """Tree property of the first kind: paths consistent, incomparable pairs inconsistent."""
    nodes, index = _tree_nodes(branching, depth)
    consistency = [Condition(path, ()) for path in _tree_paths(branching, depth, index)]
    inconsistency = []
    for a, b in itertools.combinations(nodes, 2):
        if a != b[: len(a)] and b != a[: len(b)]:
            inconsistency.append(Condition((index[a], index[b]), ()))
    return Pattern(len(nodes), tuple(consistency), tuple(inconsistency))


def ktp2_pattern(branching: int, depth: int, k: int) -> Pattern:
    """k-tree property of the second kind on a (depth x branching) array.

    Index (row i, column j) maps to i*branching + j.  One choice per row is
    consistent (all branching**depth choice functions); every k-subset of a
    row is inconsistent.
    """
    _require(2 <= k, "k must be at least 2")
    _require(k <= branching, "k must not exceed the row width")
    _require(branching >= 1 and depth >= 0, "array dimensions must be nonnegative")
    if branching**depth > enumeration_bound(TREE_NODES):
        raise UnsupportedParams(f"{branching}**{depth} choice functions exceed the bound")
    consistency = [
        Condition(tuple(i * branching + f[i] for i in range(depth)), ())
        for f in itertools.product(range(branching), repeat=depth)
        if depth > 0
    ]
    inconsistency = []
    for i in range(depth):
        row = range(i * branching, (i + 1) * branching)
        for combo in itertools.combinations(row, k):
            inconsistency.append(Condition(combo, ()))
    return Pattern(branching * depth, tuple(consistency), tuple(inconsistency))


def subset_index(subset) -> int:
    """Binary encoding of a subset of [0, n): X -> sum of 2**i over i in X."""
    out = 0
    for i in subset:
        out |= 1 << i
    return out


def _bits(mask: int):
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def cooper_pattern(n: int) -> Pattern:
    """The fully complete 2**n-pattern whose consistent complete types are
    exactly the principal up-sets ↑{i} = {X ⊆ n : i ∈ X}.

    Indices are subsets of [0, n) in binary encoding.  Any witness is forced
    to consist of points whose complete type is some encoded ↑{i}; the base
    sets (one per singleton) come out pairwise disjoint with all their unions
    traced, i.e. a disjoint union-closed family.
    """
    _require(n >= 1, "n must be at least 1")
    if n > enumeration_bound(SUBSET_PATTERN_N):
        raise UnsupportedParams(f"2**(2**{n}) conditions exceed the bound")
    count = 1 << n
    up_masks = set()
    for i in range(n):
        mask = 0
        for e in range(count):
            if e >> i & 1:
                mask |= 1 << e
        up_masks.add(mask)
    all_indices = frozenset(range(count))
    consistency, inconsistency = [], []
    for mask in range(1 << count):
        pos = _bits(mask)
        cond = Condition(pos, all_indices - set(pos))
        (consistency if mask in up_masks else inconsistency).append(cond)
    return Pattern(count, tuple(consistency), tuple(inconsistency))


def pmchar_pattern(n: int) -> Pattern:
    """Positive-maximality characterization family on 2**n indices.

    For each nonempty family Z of subsets of [0, n) (encoded as a subset of
    [0, 2**n)): consistent iff the members of Z have a common element,
    inconsistent otherwise.
    """
    _require(n >= 0, "n must be nonnegative")
    if n > enumeration_bound(SUBSET_PATTERN_N):
        raise UnsupportedParams(f"2**(2**{n}) conditions exceed the bound")
    count = 1 << n
    full = (1 << n) - 1
    consistency, inconsistency = [], []
    for mask in range(1, 1 << count):
        meet = full
        for e in _bits(mask):
            meet &= e  # a subset's encoding is its own membership mask
        cond = Condition(_bits(mask), ())
        (consistency if meet else inconsistency).append(cond)
    return Pattern(count, tuple(consistency), tuple(inconsistency))


_GENERATORS = {
    "op": lambda n=None, **_: op_pattern(_need(n, "n")),
    "ip": lambda n=None, **_: ip_pattern(_need(n, "n")),
    "sop": lambda n=None, **_: sop_pattern(_need(n, "n")),
    "cm": lambda n=None, **_: cm_pattern(_need(n, "n")),
    "ktp": lambda b=None, d=None, k=None, **_: ktp_pattern(_need(b, "b"), _need(d, "d"), _need(k, "k")),
    "tp1": lambda b=None, d=None, **_: tp1_pattern(_need(b, "b"), _need(d, "d")),
    "ktp2": lambda b=None, d=None, k=None, **_: ktp2_pattern(_need(b, "b"), _need(d, "d"), _need(k, "k")),
    "cooper": lambda n=None, **_: cooper_pattern(_need(n, "n")),
    "pmchar": lambda n=None, **_: pmchar_pattern(_need(n, "n")),
}

GEN_KINDS = tuple(sorted(_GENERATORS))


def gen_divline(kind: str, **params) -> Pattern:
    """Generate a named dividing-line pattern family member.

    kind is one of op, ip, sop, ktp, tp1, ktp2, cm, cooper, pmchar (case
    insensitive).  Size parameters: n for op/ip/sop/cm/cooper/pmchar;
    b (branching), d (depth) and, where applicable, k for the tree families.
    """
    try:
        generator = _GENERATORS[kind.lower()]
    except KeyError:
        raise UnsupportedParams(f"unknown pattern kind {kind!r}; choose from {GEN_KINDS}") from None
    return generator(**params)


def _need(value, name):
    if value is None:
        raise UnsupportedParams(f"missing required parameter {name!r}")
    return value


def _require(ok: bool, message: str):
    if not ok:
        raise UnsupportedParams(message)


# ---------------------------------------------------------------------------
# Reductions and transforms
# ---------------------------------------------------------------------------


def pattern_from_cnf(formula: CnfFormula) -> Pattern:
    """Encode CNF satisfiability as pattern exhibitability.

    For a formula on m variables, build the (m+1)-pattern with a single
    consistency condition ({m}, ∅) and, per clause, the inconsistency
    condition (negated-variable indices, positive-variable indices).  A
    complete type X avoiding all inconsistency conditions is exactly a
    satisfying assignment (i in X <-> variable i true), so the pattern is
    exhibitable iff the formula is satisfiable; it is reasonable whenever the
    formula has no empty clause.  An empty clause is accepted but flagged: it
    becomes the inconsistency condition ({m}, ∅), directly contradicting the
    consistency side.
    """
    m = formula.variable_count
    inconsistency = []
    for clause in formula.clauses:
        if not clause:
            warnings.warn("empty clause: encoding is trivially non-exhibitable", stacklevel=2)
            inconsistency.append(Condition((m,), ()))
            continue
        pos = tuple(lit.variable for lit in clause if lit.negated)
        neg = tuple(lit.variable for lit in clause if not lit.negated)
        inconsistency.append(Condition(pos, neg))
    return Pattern(m + 1, (Condition((m,), ()),), tuple(inconsistency))


def double_positive(p: Pattern) -> Pattern:
    """Turn a reasonable consistency pattern on n indices into a reasonable
    positive 2n-pattern: each (pos, neg) becomes (pos ∪ (n + neg), ∅), and
    every pair {i, i+n} is declared inconsistent.

    A witness of the doubled pattern, truncated to its first n sets, is a
    witness of the original (membership in set i+n forces non-membership in
    set i).
    """
    if p.inconsistency:
        raise NotConsistencyPattern("input must have an empty inconsistency side")
    if not classify(p).reasonable:
        raise NotConsistencyPattern("input must be reasonable (disjoint pos/neg parts)")
    n = p.n
    doubled = tuple(
        Condition(c.pos + tuple(n + j for j in c.neg), ()) for c in p.consistency
    )
    pairs = tuple(Condition((i, i + n), ()) for i in range(n))
    return Pattern(2 * n, doubled, pairs)
