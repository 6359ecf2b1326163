"""Shared oracles and enumeration helpers.

The oracles here deliberately share no code with the library paths they
check: truth-table SAT for the DPLL solver, direct subset scans for clique
and trace logic.
"""

from __future__ import annotations

import itertools

from patterna import CnfFormula, Condition, Pattern


def truth_table_sat(formula: CnfFormula) -> bool:
    """Ground-truth satisfiability by scanning all assignments."""
    n = formula.variable_count
    for bits in itertools.product((False, True), repeat=n):
        if all(
            any(bits[lit.variable] != lit.negated for lit in clause)
            for clause in formula.clauses
        ):
            return True
    return not formula.clauses if n == 0 else False


def all_conditions(n: int) -> list[Condition]:
    """Every legal condition over [0, n): nonempty (pos, neg) pairs,
    overlap allowed."""
    out = []
    subsets = list(
        itertools.chain.from_iterable(
            itertools.combinations(range(n), size) for size in range(n + 1)
        )
    )
    for pos in subsets:
        for neg in subsets:
            if pos or neg:
                out.append(Condition(pos, neg))
    return out


def disjoint_conditions(n: int) -> list[Condition]:
    """Every condition with disjoint pos/neg (3**n - 1 of them)."""
    out = []
    for assignment in itertools.product((0, 1, 2), repeat=n):
        pos = tuple(i for i, a in enumerate(assignment) if a == 1)
        neg = tuple(i for i, a in enumerate(assignment) if a == 2)
        if pos or neg:
            out.append(Condition(pos, neg))
    return out


def complete_conditions(n: int) -> list[Condition]:
    everything = frozenset(range(n))
    return [
        Condition(pos, everything - set(pos))
        for size in range(n + 1)
        for pos in itertools.combinations(range(n), size)
    ]


def fully_complete_patterns(n: int):
    splits = complete_conditions(n)
    for mask in range(1, 1 << len(splits)):
        yield Pattern(
            n,
            tuple(c for i, c in enumerate(splits) if mask >> i & 1),
            tuple(c for i, c in enumerate(splits) if not mask >> i & 1),
        )


# Named instances used across test modules.

#: Not exhibitable: requires set 0 empty and its complement empty.
NO_POINT = Pattern(1, (), (Condition((0,), ()), Condition((), (0,))))

#: Exhibitable: two nonempty disjoint sets whose union is the third.
UNION_SPLIT = Pattern(
    3,
    (Condition((0,), ()), Condition((1,), ())),
    (
        Condition((0, 1), ()),
        Condition((0,), (2,)),
        Condition((1,), (2,)),
        Condition((2,), (0, 1)),
    ),
)
