"""3-CNF formulas: validation, DIMACS parsing, assignments.

Clauses carry exactly three literals over three distinct variables (so no
clause repeats a variable or contains a complementary pair); the reductions
built on top rely on both restrictions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class CnfError(Exception):
    """Malformed formula text or clause structure."""


@dataclass(frozen=True)
class CnfFormula:
    """A 3-CNF formula; variables are 1..num_vars, literals signed ints."""

    num_vars: int
    clauses: tuple

    def __post_init__(self):
        if self.num_vars < 0:
            raise CnfError("negative variable count")
        object.__setattr__(self, "clauses",
                           tuple(tuple(c) for c in self.clauses))
        for idx, clause in enumerate(self.clauses, start=1):
            if len(clause) != 3:
                raise CnfError("clause %d has %d literals, want exactly 3"
                               % (idx, len(clause)))
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise CnfError("clause %d: literal %d out of range"
                                   % (idx, lit))
            if len({abs(lit) for lit in clause}) != 3:
                raise CnfError("clause %d repeats a variable" % idx)

    @property
    def num_clauses(self):
        return len(self.clauses)

    def satisfied_by(self, assignment):
        """True when every clause has a literal made true by `assignment`."""
        for clause in self.clauses:
            if not any(assignment[abs(lit)] == (lit > 0) for lit in clause):
                return False
        return True


def parse_dimacs(text):
    """Parse DIMACS CNF text into a CnfFormula.

    Accepts 'c' comment lines and blank lines; requires a 'p cnf <vars>
    <clauses>' header and zero-terminated clauses.
    """
    header = None
    literals = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise CnfError("line %d: duplicate header" % lineno)
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise CnfError("line %d: malformed header %r" % (lineno, raw))
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise CnfError("line %d: non-numeric header counts" % lineno) from None
            continue
        if header is None:
            raise CnfError("line %d: clause before header" % lineno)
        for tok in line.split():
            try:
                literals.append(int(tok))
            except ValueError:
                raise CnfError("line %d: bad literal %r" % (lineno, tok)) from None
    if header is None:
        raise CnfError("missing 'p cnf' header")
    num_vars, num_clauses = header
    clauses = []
    current = []
    for lit in literals:
        if lit == 0:
            clauses.append(tuple(current))
            current = []
        else:
            current.append(lit)
    if current:
        raise CnfError("final clause is not zero-terminated")
    if len(clauses) != num_clauses:
        raise CnfError("header promises %d clauses, found %d"
                       % (num_clauses, len(clauses)))
    return CnfFormula(num_vars, tuple(clauses))


def format_dimacs(formula):
    """Serialize to DIMACS text; parse(format(f)) == f."""
    lines = ["p cnf %d %d" % (formula.num_vars, formula.num_clauses)]
    for clause in formula.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def all_assignments(num_vars):
    """Every assignment as {var: bool}, in canonical counter order
    (variable 1 is the most significant position, False before True)."""
    for values in product((False, True), repeat=num_vars):
        yield {i + 1: values[i] for i in range(num_vars)}
