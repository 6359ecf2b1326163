"""Executable finite witness constructions.

Each function here materializes, at desk scale, one of the constructions used
to prove an exhibitability statement: the atoms-over-a-Boolean-algebra witness
for fully complete patterns, the disjoint-pieces witness for reasonable
positive patterns, the reduction through an intersection-characterizing
family, the doubling truncation, the full independence family, disjoint
union-closed families in two presentations, and the two-sorted membership
structure with its homomorphism check.  Every construction re-verifies its
output against its contract before returning it; a failure raises, loudly,
because it can only mean a transcription bug.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bounds import IP_FAMILY_N, MEMBERSHIP_N, enumeration_bound
from .errors import (
    ArityMismatch,
    BoundExceeded,
    CharacterizationPropertyViolated,
    NotFullyComplete,
    NotReasonablePositive,
    PreconditionFailure,
    UnsupportedParams,
    VerificationFailure,
)
from .patterns import Pattern, classify, double_positive, subset_index
from .semantics import SetFamily, UnionClosedFamily, check_exhibits, check_one_n


def _self_check(fam: SetFamily, p: Pattern, what: str) -> SetFamily:
    report = check_exhibits(fam, p)
    if not report.ok:
        raise VerificationFailure(f"{what} failed self-verification: {report}")
    return fam


def powerset_sm_witness(p: Pattern) -> SetFamily:
    """Witness a fully complete pattern over a tiny atomic-algebra shadow.

    The universe holds one point per consistency condition (its "atom"), one
    extra fresh atom, and one non-atom point.  With C enumerated canonically
    as splits (A_j, rest):

    * if (∅, everything) is not forbidden, set i traces the atoms of the
      conditions containing i;
    * otherwise the sets for i in A_0 flip to the complement-style trace
      (same atoms plus the fresh atom and the non-atom point), which is what
      keeps every stray point's type equal to A_0, a consistent one.
    """
    if not classify(p).fully_complete:
        raise NotFullyComplete("input pattern is not fully complete")
    splits = [frozenset(c.pos) for c in p.consistency]
    k = len(splits)
    fresh_atom, non_atom = k, k + 1
    empty_forbidden = any(not z.pos for z in p.inconsistency)
    sets = []
    for i in range(p.n):
        atoms = frozenset(j for j in range(k) if i in splits[j])
        if empty_forbidden and i in splits[0]:
            atoms |= {fresh_atom, non_atom}
        sets.append(atoms)
    fam = SetFamily(k + 2, tuple(sets))
    return _self_check(fam, p, "powerset witness")


def atomless_pm_witness(p: Pattern) -> SetFamily:
    """Witness a reasonable positive pattern with pairwise-disjoint pieces.

    One point per consistency condition; set i collects the conditions whose
    positive part contains i.  An inconsistency condition (Z, ∅) would need a
    condition containing all of Z, which reasonableness rules out.  With no
    consistency conditions every set is empty over a single point.
    """
    flags = classify(p)
    if not (flags.reasonable and flags.positive):
        raise NotReasonablePositive("input pattern must be reasonable and positive")
    if not p.consistency:
        fam = SetFamily(1, tuple(frozenset() for _ in range(p.n)))
    else:
        fam = SetFamily(
            len(p.consistency),
            tuple(
                frozenset(j for j, c in enumerate(p.consistency) if i in c.pos)
                for i in range(p.n)
            ),
        )
    return _self_check(fam, p, "disjoint-pieces witness")


def canonical_char_family(k: int) -> SetFamily:
    """The family indexed by subsets of [0, k) with B_X = X itself.

    Trivially satisfies the intersection characterization: the traces of a
    family of subsets intersect exactly where the subsets do.
    """
    if k < 0:
        raise UnsupportedParams("k must be nonnegative")
    return SetFamily(max(k, 1), tuple(frozenset(_bits(e)) for e in range(1 << k)))


def check_char_property(char_fam: SetFamily, k: int) -> bool:
    """Brute-force the characterization property: for every nonempty family Z
    of subsets of [0, k), the traces of Z intersect iff the subsets of Z do."""
    if char_fam.n != 1 << k:
        raise ArityMismatch(f"need {1 << k} sets for k={k}, got {char_fam.n}")
    full = (1 << k) - 1
    for family_mask in range(1, 1 << (1 << k)):
        members = _bits(family_mask)
        meet_subsets = full
        trace = char_fam.universe
        for e in members:
            meet_subsets &= e
            trace &= char_fam.sets[e]
        if bool(trace) != bool(meet_subsets):
            return False
    return True


def pm_char_reduction(char_fam: SetFamily, p: Pattern, *, property_check_bound: int = 4) -> SetFamily:
    """Witness a reasonable positive pattern through a characterizing family.

    char_fam must be indexed by subsets of [0, k), k = |C|, and satisfy the
    intersection characterization (brute-force pre-checked up to
    property_check_bound).  Set i is the family's set for the subset
    {j : condition j's positive part contains i}.
    """
    flags = classify(p)
    if not (flags.reasonable and flags.positive):
        raise NotReasonablePositive("input pattern must be reasonable and positive")
    k = len(p.consistency)
    if char_fam.n != 1 << k:
        raise ArityMismatch(f"characterizing family needs {1 << k} sets, got {char_fam.n}")
    if k <= property_check_bound and not check_char_property(char_fam, k):
        raise CharacterizationPropertyViolated(
            "family does not satisfy the intersection characterization"
        )
    sets = tuple(
        char_fam.sets[subset_index(j for j, c in enumerate(p.consistency) if i in c.pos)]
        for i in range(p.n)
    )
    fam = SetFamily(char_fam.universe_size, sets)
    report = check_exhibits(fam, p)
    if not report.ok:
        raise CharacterizationPropertyViolated(
            f"reduction output fails to exhibit the pattern: {report}"
        )
    return fam


def cm_from_doubled_witness(witness: SetFamily, p: Pattern) -> SetFamily:
    """Truncate a witness of double_positive(p) to the first n sets.

    Disjointness of each pair {i, i+n} forces the truncation to satisfy the
    original negative parts, so the result exhibits p; re-verified.
    """
    doubled = double_positive(p)
    if witness.n != doubled.n or not check_exhibits(witness, doubled).ok:
        raise PreconditionFailure("family does not exhibit the doubled pattern")
    fam = SetFamily(witness.universe_size, witness.sets[: p.n])
    return _self_check(fam, p, "doubling truncation")


def ip_family(n: int, bound: int | None = None) -> SetFamily:
    """The full independence family: universe = all subsets of [0, n) in
    binary encoding, set i = the subsets containing i.

    Exhibits every reasonable consistency n-pattern: the trace of (pos, neg)
    contains the point encoding pos itself.
    """
    limit = enumeration_bound(IP_FAMILY_N) if bound is None else bound
    if n > limit:
        raise BoundExceeded(f"n={n} exceeds independence-family bound {limit}")
    if n < 0:
        raise UnsupportedParams("n must be nonnegative")
    return SetFamily(
        1 << n,
        tuple(frozenset(e for e in range(1 << n) if e >> i & 1) for i in range(n)),
    )


def first_primes(n: int) -> list[int]:
    primes: list[int] = []
    candidate = 2
    while len(primes) < n:
        if all(candidate % q for q in primes):
            primes.append(candidate)
        candidate += 1
    return primes


def disjoint_one1_family(n: int, flavor: str = "atoms") -> UnionClosedFamily:
    """A union-closed family of n pairwise-disjoint singletons over [0, n).

    Flavors label the same trace family two ways: "atoms" names the points
    a0..a(n-1) and each union by its atoms; "skolem" names point i by the
    i-th prime and each union by the product of its primes.  Labels are
    metadata only; check_one_n(result, 1) holds either way.
    """
    if n < 1:
        raise UnsupportedParams("n must be at least 1")
    if flavor not in ("atoms", "skolem"):
        raise UnsupportedParams(f"unknown flavor {flavor!r}; choose atoms or skolem")
    singles = [frozenset({i}) for i in range(n)]
    if flavor == "atoms":
        point_labels = tuple(f"a{i}" for i in range(n))
        set_labels = tuple(
            "∪".join(f"a{i}" for i in _bits(mask)) or "0" for mask in range(1 << n)
        )
    else:
        primes = first_primes(n)
        point_labels = tuple(str(q) for q in primes)
        set_labels = tuple(
            str(_product(primes[i] for i in _bits(mask))) for mask in range(1 << n)
        )
    ufam = UnionClosedFamily.from_singletons(n, singles, point_labels, set_labels)
    if not check_one_n(ufam, 1):
        raise VerificationFailure("disjoint singleton family failed its threshold check")
    return ufam


@dataclass(frozen=True)
class MembershipStructure:
    """Two sorts — points [0, s_size) and an algebra of subsets — related by
    membership.  algebra_elements is indexed by binary subset encoding;
    relation holds (point, element_index) pairs.  Not self-validating, so
    corrupted instances can be built and fed to check_membership_structure.
    """

    s_size: int
    algebra_elements: tuple[frozenset[int], ...]
    relation: frozenset[tuple[int, int]]


def membership_structure(n: int, bound: int | None = None) -> MembershipStructure:
    """The full membership structure on n points: algebra = all 2**n subsets,
    relation = actual membership.  Self-checked: the induced map
    b -> {points related to b} must be a homomorphism of Boolean algebras and
    the singleton columns must form a disjoint union-closed family."""
    limit = enumeration_bound(MEMBERSHIP_N) if bound is None else bound
    if n > limit:
        raise BoundExceeded(f"n={n} exceeds membership bound {limit}")
    if n < 1:
        raise UnsupportedParams("n must be at least 1")
    elements = tuple(frozenset(_bits(mask)) for mask in range(1 << n))
    relation = frozenset(
        (i, idx) for idx, element in enumerate(elements) for i in element
    )
    structure = MembershipStructure(n, elements, relation)
    problems = check_membership_structure(structure)
    if problems:
        raise VerificationFailure(f"membership structure failed its checks: {problems}")
    if not check_one_n(membership_column_family(structure), 1):
        raise VerificationFailure("membership columns are not a disjoint union-closed family")
    return structure


def membership_column_family(structure: MembershipStructure) -> UnionClosedFamily:
    """The relation's columns, bundled as a union-closed family over the point
    sort (set for subset X = column of the element encoding X)."""
    count = len(structure.algebra_elements)
    k = count.bit_length() - 1
    columns = tuple(
        frozenset(i for i in range(structure.s_size) if (i, idx) in structure.relation)
        for idx in range(count)
    )
    return UnionClosedFamily(k, SetFamily(structure.s_size, columns))


def check_membership_structure(structure: MembershipStructure) -> list[str]:
    """Verify algebra closure, membership agreement, and the homomorphism
    property of b -> {points related to b}.  Returns human-readable
    violations; empty means pass."""
    problems = []
    elements = structure.algebra_elements
    lookup = {element: idx for idx, element in enumerate(elements)}
    points = frozenset(range(structure.s_size))
    if points not in lookup:
        problems.append("algebra does not contain the full point set")
    for a, b in itertools.combinations_with_replacement(range(len(elements)), 2):
        if elements[a] & elements[b] not in lookup:
            problems.append(f"algebra not closed under intersection of #{a} and #{b}")
    for a in range(len(elements)):
        if points - elements[a] not in lookup:
            problems.append(f"algebra not closed under complement of #{a}")
    for point, idx in structure.relation:
        if not 0 <= point < structure.s_size or not 0 <= idx < len(elements):
            problems.append(f"relation pair ({point}, {idx}) out of range")
    column = [
        frozenset(i for i in range(structure.s_size) if (i, idx) in structure.relation)
        for idx in range(len(elements))
    ]
    for idx, element in enumerate(elements):
        if column[idx] != element:
            problems.append(f"relation disagrees with membership on element #{idx}")
    # homomorphism surrogate for the term-agreement axioms
    full_idx = lookup.get(points)
    if full_idx is not None and column[full_idx] != points:
        problems.append("image of the top element is not the full point set")
    for a, b in itertools.combinations_with_replacement(range(len(elements)), 2):
        meet = lookup.get(elements[a] & elements[b])
        if meet is not None and column[meet] != column[a] & column[b]:
            problems.append(f"map fails to preserve intersection of #{a} and #{b}")
    for a in range(len(elements)):
        comp = lookup.get(points - elements[a])
        if comp is not None and column[comp] != points - column[a]:
            problems.append(f"map fails to preserve complement of #{a}")
    return problems


def _bits(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _product(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out
