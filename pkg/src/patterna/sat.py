"""Propositional CNF, a deterministic DPLL solver, and DIMACS interchange.

The solver is deliberately plain: unit propagation, pure-literal elimination,
and branching on the lowest-index variable still occurring in the residual
formula, trying True first.  Instances in this library are tiny, and the fixed
strategy makes every produced assignment (and hence every synthesized witness
downstream) bit-for-bit reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import IndexOutOfRange, ParseError


@dataclass(frozen=True, order=True)
class Literal:
    variable: int
    negated: bool = False

    def negate(self) -> "Literal":
        return Literal(self.variable, not self.negated)


def _normalize_clauses(clauses, variable_count):
    out = set()
    for clause in clauses:
        lits = frozenset(clause)
        for lit in lits:
            if not 0 <= lit.variable < variable_count:
                raise IndexOutOfRange(
                    f"variable {lit.variable} outside [0, {variable_count})"
                )
        if any(lit.negate() in lits for lit in lits):
            continue  # tautological clause carries no constraint
        out.add(tuple(sorted(lits)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula in canonical form.

    Construction normalizes: duplicate literals and clauses collapse,
    tautological clauses are dropped, and literals/clauses are sorted by
    (variable, negated).  Two formulas are equal iff they normalize alike.
    """

    variable_count: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self):
        if self.variable_count < 0:
            raise IndexOutOfRange("variable count must be nonnegative")
        object.__setattr__(
            self, "clauses", _normalize_clauses(self.clauses, self.variable_count)
        )


def _encode(lit: Literal) -> int:
    # 1-based signed encoding, as in DIMACS
    return -(lit.variable + 1) if lit.negated else lit.variable + 1


def _simplify(clauses, lit):
    """Drop clauses satisfied by lit, remove -lit elsewhere; None on empty clause."""
    out = []
    for clause in clauses:
        if lit in clause:
            continue
        if -lit in clause:
            clause = frozenset(x for x in clause if x != -lit)
            if not clause:
                return None
        out.append(clause)
    return out


def _dpll(clauses, assignment):
    while True:
        # unit propagation, first unit in clause order
        unit = next((next(iter(c)) for c in clauses if len(c) == 1), None)
        if unit is not None:
            assignment[abs(unit) - 1] = unit > 0
            clauses = _simplify(clauses, unit)
            if clauses is None:
                return None
            continue
        # pure literal elimination, lowest variable first
        polarity = {}
        for clause in clauses:
            for lit in clause:
                var = abs(lit)
                polarity[var] = lit if polarity.setdefault(var, lit) == lit else 0
        pures = sorted(lit for lit in polarity.values() if lit != 0)
        if pures:
            for lit in pures:
                assignment[abs(lit) - 1] = lit > 0
                clauses = _simplify(clauses, lit)
                # pure literals never shrink a clause, so no conflict here
            continue
        break
    if not clauses:
        return assignment
    branch_var = min(abs(lit) for clause in clauses for lit in clause)
    for lit in (branch_var, -branch_var):
        trial = dict(assignment)
        trial[abs(lit) - 1] = lit > 0
        reduced = _simplify(clauses, lit)
        if reduced is None:
            continue
        result = _dpll(reduced, trial)
        if result is not None:
            return result
    return None


def sat_solve(formula: CnfFormula) -> dict[int, bool] | None:
    """Return a total satisfying assignment {variable: bool}, or None if unsat.

    Deterministic: variables never mentioned by any clause default to True.
    """
    clauses = [frozenset(_encode(lit) for lit in clause) for clause in formula.clauses]
    if any(not c for c in clauses):
        return None
    partial = _dpll(clauses, {})
    if partial is None:
        return None
    return {v: partial.get(v, True) for v in range(formula.variable_count)}


def export_dimacs(formula: CnfFormula) -> str:
    """Serialize in DIMACS CNF format; byte-deterministic for canonical input."""
    lines = [f"p cnf {formula.variable_count} {len(formula.clauses)}"]
    for clause in formula.clauses:
        lines.append(" ".join([str(_encode(lit)) for lit in clause] + ["0"]))
    return "\n".join(lines) + "\n"


_HEADER = re.compile(r"p\s+cnf\s+(\d+)\s+(\d+)\s*$")


def import_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text.  Raises ParseError with a line number."""
    header = None
    clauses: list[list[Literal]] = []
    pending: list[Literal] = []
    last_line = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if header is None:
            m = _HEADER.match(line)
            if m is None:
                raise ParseError(f"expected 'p cnf <vars> <clauses>', got {line!r}", lineno)
            header = (int(m.group(1)), int(m.group(2)))
            continue
        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                raise ParseError(f"bad literal {token!r}", lineno) from None
            if value == 0:
                clauses.append(pending)
                pending = []
            else:
                var = abs(value) - 1
                if var >= header[0]:
                    raise ParseError(
                        f"variable {abs(value)} exceeds declared count {header[0]}", lineno
                    )
                pending.append(Literal(var, value < 0))
    if header is None:
        raise ParseError("missing 'p cnf' header", last_line or None)
    if pending:
        raise ParseError("unterminated clause (missing trailing 0)", last_line)
    if len(clauses) != header[1]:
        raise ParseError(
            f"header declares {header[1]} clauses, found {len(clauses)}", last_line
        )
    return CnfFormula(header[0], tuple(tuple(c) for c in clauses))
