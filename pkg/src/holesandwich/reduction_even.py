"""3-SAT to even-hole-free sandwich instances.

Per variable there are two shoulder vertices (one per polarity); per
occurrence of a variable in a clause there are two knee vertices.  Each
incidence contributes a forced six-cycle head, positive shoulder, negative
knee, foot, positive knee, negative shoulder; each clause adds a forced
3-sun: a triangle on its active knees (the knees of the literals as written)
with pendant forced edges to the inactive knees.  A four-vertex forced path
head-W1-W2-foot, with every other pair touching W1 or W2 forbidden, turns
each incidence six-cycle into an even-hole obligation: the six-hole (head,
W1, W2, foot, knee, shoulder) closes through any forced or present
knee-shoulder edge and can only be broken by one of the two optional chords
head-knee or foot-shoulder.  Those chords come in exactly two bundles per
incidence (the positive and negative orientation), uniform per variable, and
a clause whose three literals all get the wrong orientation forces a chain of
completions ending in an induced four-hole on two active and two inactive
knees.  Satisfying assignments instead extend to an even-hole-free sandwich
graph by cliquing the true shoulders and true knees and joining every true
shoulder to every knee.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .budget import Budget, BudgetExhausted
from .graph import Cycle, Graph
from .recognition import check
from .sandwich import (Completion, SandwichInstance, SolveResult,
                       normalized_edge, solve)

IN, OUT, UND = 1, 0, 2

POSITIVE, NEGATIVE = "positive", "negative"

DEFAULT_ORIENTATION_BUDGET = 10 ** 5


class OrientationError(Exception):
    """A sandwich graph whose orientations do not define an assignment."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MixedOrientationError(OrientationError):
    """Some variable carries both orientations; witness is the four-hole
    (head, positive shoulder, foot, negative shoulder) in cycle order."""


class IncompleteOrientationError(OrientationError):
    """Some incidence carries neither orientation; witness is the
    (variable, clause) pair."""


@dataclass
class EvenGadgetMap:
    """Vertex roles of a built instance.

    shoulder is keyed by signed variable (+i positive, -i negative), knee by
    (signed variable, clause index).  incidences lists (variable, clause)
    pairs in construction order; clause indices are 1-based.  instance is a
    back-reference to the built SandwichInstance.
    """

    num_vars: int
    clauses: tuple
    head: int = 0
    foot: int = 0
    w1: int = 0
    w2: int = 0
    shoulder: dict = field(default_factory=dict)
    knee: dict = field(default_factory=dict)
    incidences: tuple = ()
    instance: SandwichInstance | None = None

    def orientation_edges(self, var, clause, positive):
        """The three optional edges of one orientation of one incidence."""
        lit = var if positive else -var
        k = self.knee[(lit, clause)]
        s = self.shoulder[lit]
        return (normalized_edge(self.head, k),
                normalized_edge(k, s),
                normalized_edge(s, self.foot))

    def clause_knees(self, clause):
        """(active, inactive) knee tuples of a clause, in literal order."""
        lits = self.clauses[clause - 1]
        active = tuple(self.knee[(lit, clause)] for lit in lits)
        inactive = tuple(self.knee[(-lit, clause)] for lit in lits)
        return active, inactive

    def variable_incidences(self, var):
        return tuple(j for v, j in self.incidences if v == var)

    def knees(self):
        return tuple(sorted(self.knee.values()))

    def shoulders(self):
        return tuple(sorted(self.shoulder.values()))


def build_even_instance(formula):
    """Build the even-hole-free sandwich instance for a 3-CNF formula.

    Returns (instance, gadget_map).  The instance has an even-hole-free
    sandwich graph exactly when the formula is satisfiable.
    """
    names = ["H", "F", "W1", "W2"]
    gmap = EvenGadgetMap(formula.num_vars, formula.clauses,
                         head=0, foot=1, w1=2, w2=3)

    def lit_name(lit):
        return ("x%d" if lit > 0 else "!x%d") % abs(lit)

    for i in range(1, formula.num_vars + 1):
        for lit in (i, -i):
            gmap.shoulder[lit] = len(names)
            names.append("S_" + lit_name(lit))

    incidences = []
    for j, clause in enumerate(formula.clauses, start=1):
        for lit in clause:
            i = abs(lit)
            for signed in (i, -i):
                gmap.knee[(signed, j)] = len(names)
                names.append("K_%s.c%d" % (lit_name(signed), j))
            incidences.append((i, j))
    gmap.incidences = tuple(incidences)

    forced = set()
    for i, j in incidences:
        six = (gmap.head, gmap.shoulder[i], gmap.knee[(-i, j)],
               gmap.foot, gmap.knee[(i, j)], gmap.shoulder[-i])
        for idx in range(6):
            forced.add(normalized_edge(six[idx], six[(idx + 1) % 6]))
    for j, clause in enumerate(formula.clauses, start=1):
        active, inactive = gmap.clause_knees(j)
        for q in range(3):
            forced.add(normalized_edge(active[q], active[(q + 1) % 3]))
            # Pendants: inactive knee of slot q+1 hangs off active knee q.
            forced.add(normalized_edge(inactive[(q + 1) % 3], active[q]))
    forced.add(normalized_edge(gmap.head, gmap.w1))
    forced.add(normalized_edge(gmap.w1, gmap.w2))
    forced.add(normalized_edge(gmap.w2, gmap.foot))

    n = len(names)
    forbidden = {normalized_edge(gmap.head, gmap.foot)}
    for i in range(1, formula.num_vars + 1):
        forbidden.add(normalized_edge(gmap.shoulder[i], gmap.shoulder[-i]))
    for i, j in incidences:
        forbidden.add(normalized_edge(gmap.knee[(i, j)], gmap.knee[(-i, j)]))
    for w in (gmap.w1, gmap.w2):
        for v in range(n):
            if v != w:
                e = normalized_edge(w, v)
                if e not in forced:
                    forbidden.add(e)

    optional = set()
    for u in range(n):
        for v in range(u + 1, n):
            e = (u, v)
            if e not in forced and e not in forbidden:
                optional.add(e)

    inst = SandwichInstance.build(n, forced, optional, names)
    gmap.instance = inst
    return inst, gmap


def chosen_edges_for_assignment(formula, assignment, gmap):
    """The optional edges the canonical completion picks for an assignment.

    Per incidence the orientation bundle matching the assignment, then a
    clique on true shoulders, a clique on true knees, and every
    true-shoulder-knee pair (pairs that are already forced are dropped).
    """
    if set(assignment) != set(range(1, formula.num_vars + 1)):
        raise ValueError("assignment must cover variables 1..%d"
                         % formula.num_vars)
    edges = set()
    for i, j in gmap.incidences:
        edges.update(gmap.orientation_edges(i, j, assignment[i]))
    true_shoulders = [gmap.shoulder[i if assignment[i] else -i]
                      for i in range(1, gmap.num_vars + 1)]
    true_knees = [gmap.knee[(i if assignment[i] else -i, j)]
                  for i, j in gmap.incidences]
    for u, v in itertools.combinations(sorted(true_shoulders), 2):
        edges.add(normalized_edge(u, v))
    for u, v in itertools.combinations(sorted(true_knees), 2):
        edges.add(normalized_edge(u, v))
    for s in true_shoulders:
        for k in gmap.knees():
            edges.add(normalized_edge(s, k))
    return edges & gmap.instance.optional


def completion_from_assignment(formula, assignment, gmap):
    """The canonical sandwich graph realizing an assignment.

    Even-hole-free exactly when the assignment satisfies the formula; a
    falsified clause leaves a four-hole on two of its active and two of its
    inactive knees.
    """
    chosen = chosen_edges_for_assignment(formula, assignment, gmap)
    return gmap.instance.realize(chosen)


@dataclass(frozen=True)
class Orientation:
    """Per-incidence orientation statuses: positive, negative, both, none."""

    status: dict

    def value(self, var, clause):
        return self.status[(var, clause)]


def read_orientation(gmap, g, var, clause):
    """Orientation of one incidence in a realized graph.

    positive/negative when exactly that bundle of three edges is fully
    present, both/none otherwise.
    """
    pos = all(g.has_edge(*e) for e in gmap.orientation_edges(var, clause, True))
    neg = all(g.has_edge(*e) for e in gmap.orientation_edges(var, clause, False))
    if pos and neg:
        return "both"
    if pos:
        return POSITIVE
    if neg:
        return NEGATIVE
    return "none"


def read_orientations(gmap, g):
    return Orientation({(i, j): read_orientation(gmap, g, i, j)
                        for i, j in gmap.incidences})


def extract_assignment(gmap, g):
    """Read the assignment off a realized sandwich graph's orientations.

    All incidences of a variable must carry the same orientation.  Raises
    MixedOrientationError (witness: the four-hole head, S_X, foot, S_X-bar)
    when both polarities occur, IncompleteOrientationError (witness: the
    (variable, clause) pair) when an incidence has neither.  Variables with
    no occurrences are read off the true-shoulder clique against the first
    oriented variable's shoulder, defaulting to false when the instance has
    no clauses.
    """
    orientation = read_orientations(gmap, g)
    assignment = {}
    anchor = None
    for i in range(1, gmap.num_vars + 1):
        incidences = gmap.variable_incidences(i)
        if not incidences:
            continue
        statuses = {orientation.value(i, j) for j in incidences}
        if "both" in statuses or (POSITIVE in statuses and NEGATIVE in statuses):
            witness = (gmap.head, gmap.shoulder[i], gmap.foot,
                       gmap.shoulder[-i])
            raise MixedOrientationError(
                "variable %d carries both orientations" % i, witness=witness)
        if "none" in statuses:
            j = next(j for j in incidences
                     if orientation.value(i, j) == "none")
            raise IncompleteOrientationError(
                "incidence (%d, clause %d) has no orientation" % (i, j),
                witness=(i, j))
        assignment[i] = statuses == {POSITIVE}
        if anchor is None:
            anchor = i
    for i in range(1, gmap.num_vars + 1):
        if i in assignment:
            continue
        if anchor is None:
            assignment[i] = False
        else:
            t = gmap.shoulder[anchor if assignment[anchor] else -anchor]
            assignment[i] = g.has_edge(gmap.shoulder[i], t)
    return assignment


@dataclass(frozen=True)
class PropagationResult:
    """Outcome of orientation propagation.

    status is "ok" or "contradiction"; forced maps optional edges to the
    decisions derived beyond the input ones; pending lists the unresolved
    at-least-one constraints (head-knee edge, foot-shoulder edge); on
    contradiction, certificate is an even hole (in cycle order) induced in
    the graph of forced plus decided-in edges.
    """

    status: str
    forced: dict
    pending: tuple
    certificate: Cycle | None = None


def propagate_orientations(inst, gmap, decided):
    """Close a partial decision under the construction's implication rules.

    Two rule families, applied in synchronous rounds to a fixpoint:

    * four-cycle completion, over every 4-subset avoiding W1/W2 and each of
      its three pairings: a present 4-cycle with both diagonals excluded is a
      contradiction; with one diagonal excluded the other is forced in; a
      present 3-path whose closing edge is undecided and whose diagonals are
      both excluded forces the closing edge out;
    * six-hole rule: a present knee-shoulder edge (kappa, sigma) closes the
      six-cycle through W1/W2, so head-kappa or foot-sigma must be in; with
      one out the other is forced, with both out the six-hole itself is the
      contradiction certificate.

    Contradictions found in the same round are ranked by (length, sorted
    vertex tuple) and the smallest is reported.  Decisions derived in rounds
    before the contradiction are reported in forced either way.
    """
    state = {}
    for e in inst.forced:
        state[e] = IN
    for e in inst.optional:
        state[e] = UND
    for e, val in decided.items():
        e = normalized_edge(*e)
        if e in inst.forced:
            if not val:
                raise ValueError("decision excludes forced edge %r" % (e,))
            continue
        if e not in inst.optional:
            if val:
                raise ValueError("decision includes forbidden edge %r" % (e,))
            continue
        state[e] = IN if val else OUT

    def lookup(u, v):
        return state.get(normalized_edge(u, v), OUT)

    core = [v for v in range(inst.n) if v not in (gmap.w1, gmap.w2)]
    knees = gmap.knees()
    shoulders = gmap.shoulders()
    forced_log = {}

    while True:
        batch = {}
        contradictions = []
        pending = []

        def force(u, v, val):
            e = normalized_edge(u, v)
            if state[e] != UND:
                return
            if e in batch and batch[e] != val:
                # Conflicting derivations: keep the in-decision; the
                # out-derivation's structure then completes to a four-cycle
                # caught as a contradiction next round.
                batch[e] = True
                return
            batch[e] = val

        for quad in itertools.combinations(core, 4):
            for cycle in _pairings(quad):
                a, b, c, d = cycle
                edges = ((a, b), (b, c), (c, d), (d, a))
                states = [lookup(*e) for e in edges]
                diag1, diag2 = lookup(a, c), lookup(b, d)
                present = states.count(IN)
                if present == 4:
                    if diag1 == OUT and diag2 == OUT:
                        contradictions.append(Cycle(cycle))
                    elif diag1 == OUT and diag2 == UND:
                        force(b, d, True)
                    elif diag2 == OUT and diag1 == UND:
                        force(a, c, True)
                elif (present == 3 and UND in states
                      and diag1 == OUT and diag2 == OUT):
                    u, v = edges[states.index(UND)]
                    force(u, v, False)

        for k in knees:
            for s in shoulders:
                if lookup(k, s) != IN:
                    continue
                hk = lookup(gmap.head, k)
                fs = lookup(gmap.foot, s)
                if hk == IN or fs == IN:
                    continue
                if hk == OUT and fs == OUT:
                    contradictions.append(Cycle(
                        (gmap.head, gmap.w1, gmap.w2, gmap.foot, k, s)))
                elif hk == OUT:
                    force(gmap.foot, s, True)
                elif fs == OUT:
                    force(gmap.head, k, True)
                else:
                    pending.append((normalized_edge(gmap.head, k),
                                    normalized_edge(gmap.foot, s)))

        if contradictions:
            cert = min(contradictions,
                       key=lambda c: (len(c.vertices), tuple(sorted(c.vertices))))
            return PropagationResult("contradiction", forced_log,
                                     tuple(sorted(set(pending))), cert)
        if not batch:
            return PropagationResult("ok", forced_log,
                                     tuple(sorted(set(pending))))
        for e, val in batch.items():
            state[e] = IN if val else OUT
            forced_log[e] = val


def solve_with_orientations(formula, inst, gmap,
                            budget=DEFAULT_ORIENTATION_BUDGET,
                            check_budget=None):
    """Sandwich search for even-hole-free seeded by orientation branching.

    Depth-first over variables, deciding one orientation bundle per branch
    and propagating after each decision; a leaf realizes the canonical
    completion for the branch assignment and re-checks it.  If every branch
    is pruned, the generic solver finishes the job on the instance reduced
    by the root propagation, so UNSAT stays exact.
    """
    tracker = Budget(budget)
    order = list(range(1, formula.num_vars + 1))

    def descend(decided, assignment, idx):
        tracker.spend()
        result = propagate_orientations(inst, gmap, decided)
        if result.status == "contradiction":
            return None
        merged = dict(decided)
        merged.update(result.forced)
        if idx == len(order):
            g = completion_from_assignment(formula, assignment, gmap)
            ok, _ = check(g, "even-hole-free", budget=check_budget)
            if ok:
                chosen = frozenset(e for e in inst.optional
                                   if g.has_edge(*e))
                return SolveResult("SAT", Completion(chosen), tracker.spent)
            return None
        var = order[idx]
        for positive in (True, False):
            trial = dict(merged)
            conflict = False
            for j in gmap.variable_incidences(var):
                for e in gmap.orientation_edges(var, j, positive):
                    if trial.get(e, True) is False:
                        conflict = True
                    trial[e] = True
            if conflict:
                continue
            found = descend(trial, {**assignment, var: positive}, idx + 1)
            if found is not None:
                return found
        return None

    try:
        found = descend({}, {}, 0)
    except BudgetExhausted:
        return SolveResult("BUDGET", None, tracker.spent, frontier=1)
    if found is not None:
        return found

    root = propagate_orientations(inst, gmap, {})
    if root.status == "contradiction":
        return SolveResult("UNSAT", None, tracker.spent)
    reduced = _reduced_instance(inst, root.forced)
    if budget is None:
        fallback = solve(reduced, "even-hole-free", check_budget=check_budget)
    else:
        remaining = budget - tracker.spent
        if remaining <= 0:
            return SolveResult("BUDGET", None, tracker.spent, frontier=1)
        fallback = solve(reduced, "even-hole-free", budget=remaining,
                         check_budget=check_budget)
    completion = fallback.completion
    if fallback.verdict == "SAT":
        extra_in = frozenset(e for e, v in root.forced.items() if v)
        completion = Completion(frozenset(completion.chosen) | extra_in)
    return SolveResult(fallback.verdict, completion,
                       tracker.spent + fallback.nodes, fallback.frontier)


def _reduced_instance(inst, forced_decisions):
    extra_in = {e for e, v in forced_decisions.items() if v}
    out = {e for e, v in forced_decisions.items() if not v}
    return SandwichInstance.build(
        inst.n,
        inst.forced | extra_in,
        (inst.optional - extra_in) - out,
        inst.names)


def _pairings(quad):
    a, b, c, d = quad
    return ((a, b, c, d), (a, b, d, c), (a, c, b, d))
