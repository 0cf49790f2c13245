"""Acceptance suites: desk-scale empirical verification of the library.

Nine numbered checks cover recognition (exhaustive against a local
brute-force oracle), the complement duality of sandwich solvability, solver
exactness against brute force, the structural invariants and end-to-end
behaviour of the five-cycle reduction, and the census, forward direction,
propagation chain, and end-to-end behaviour of the even-hole reduction.

The oracle here is deliberately self-contained (subset scanning over bitmask
adjacency) so the CLI `verify` command shares no logic with the code under
test.  All randomness is seeded and the seed is reported in each result.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .cnf import CnfFormula
from .graph import Graph, find_induced_path
from .recognition import check
from .reduction_even import (build_even_instance, completion_from_assignment,
                             extract_assignment as extract_even,
                             propagate_orientations, solve_with_orientations)
from .reduction_odd import (build_c5_instance, extract_assignment as
                            extract_odd, structural_report)
from .sandwich import (SOLVABLE_PROPERTY_IDS, SandwichInstance,
                       brute_force_solve, complement_instance,
                       is_sandwich_graph, solve)

DEFAULT_SEED = 20240901


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str


# -- local oracle -----------------------------------------------------------

def _adjacency(n, edges):
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _subset_is_hole(adj, subset):
    mask = 0
    for v in subset:
        mask |= 1 << v
    for v in subset:
        if (adj[v] & mask).bit_count() != 2:
            return False
    start = subset[0]
    seen = 1 << start
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for y in subset:
            if seen >> y & 1 == 0 and adj[x] >> y & 1:
                seen |= 1 << y
                frontier.append(y)
    return seen == mask


def _full_hole_lengths(n, edges):
    """Lengths of all chordless cycles of length >= 4, by subset scan."""
    adj = _adjacency(n, edges)
    lengths = set()
    for k in range(4, n + 1):
        for subset in combinations(range(n), k):
            if _subset_is_hole(adj, subset):
                lengths.add(k)
                break
    return lengths


# -- random instance generators ---------------------------------------------

def _random_instance(rng, max_n, max_optional):
    n = rng.randint(4, max_n)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    optional_count = min(rng.randint(0, max_optional),
                         rng.randint(0, max_optional), len(pairs))
    optional = set(pairs[:optional_count])
    forced_prob = rng.uniform(0.1, 0.8)
    forced = {p for p in pairs[optional_count:] if rng.random() < forced_prob}
    if rng.random() < 0.3 and n >= 5:
        # plant an unbreakable ring: forced cycle, every chord forbidden
        k = rng.randint(4, min(7, n))
        ring = rng.sample(range(n), k)
        ring_pairs = {tuple(sorted((ring[i], ring[(i + 1) % k])))
                      for i in range(k)}
        chord_pairs = {tuple(sorted(p))
                       for p in combinations(ring, 2)} - ring_pairs
        forced = (forced - chord_pairs) | ring_pairs
        optional = optional - ring_pairs - chord_pairs
    inst = SandwichInstance.build(n, forced, optional)
    if rng.random() < 0.5:
        inst = complement_instance(inst)
    return inst


def _random_formula(rng, max_vars, max_clauses):
    n = rng.randint(3, max_vars)
    m = rng.randint(1, max_clauses)
    clauses = []
    for _ in range(m):
        variables = rng.sample(range(1, n + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v
                             for v in variables))
    return CnfFormula(n, tuple(clauses))


# -- criteria ---------------------------------------------------------------

def recognition_matches_oracle(seed=DEFAULT_SEED):
    """1: check agrees with the subset-scan oracle on all 6-vertex graphs."""
    pairs = list(combinations(range(6), 2))
    mismatches = 0
    first = ""
    for mask in range(1 << 15):
        edges = [pairs[i] for i in range(15) if mask >> i & 1]
        lengths = _full_hole_lengths(6, edges)
        expected = {
            "chordal": not lengths,
            "c5-free": 5 not in lengths,
            "odd-hole-free": not any(k % 2 for k in lengths),
            "even-hole-free": not any(k % 2 == 0 for k in lengths),
        }
        g = Graph(6, edges)
        for prop, want in expected.items():
            got, _ = check(g, prop)
            if got != want:
                mismatches += 1
                if not first:
                    first = "mask=%d prop=%s" % (mask, prop)
    detail = "32768 graphs x 4 properties, %d mismatches" % mismatches
    if first:
        detail += " (first: %s)" % first
    return CriterionResult(1, "recognition-oracle", mismatches == 0, detail)


def duality_agreement(seed=DEFAULT_SEED):
    """2: brute-force solvability respects the complement transform."""
    rng = random.Random(seed)
    disagreements = 0
    for _ in range(200):
        inst = _random_instance(rng, 10, 12)
        comp = complement_instance(inst)
        for prop, co_prop in (("odd-hole-free", "odd-antihole-free"),
                              ("odd-antihole-free", "odd-hole-free")):
            a = brute_force_solve(inst, prop).verdict
            b = brute_force_solve(comp, co_prop).verdict
            if a != b:
                disagreements += 1
    detail = "200 instances x 2 directions, %d disagreements, seed=%d" % (
        disagreements, seed)
    return CriterionResult(2, "complement-duality", disagreements == 0, detail)


def solver_matches_brute_force(seed=DEFAULT_SEED):
    """3: solve agrees with brute_force_solve; SAT completions re-verify."""
    rng = random.Random(seed)
    failures = []
    cases = 0
    for prop in SOLVABLE_PROPERTY_IDS:
        for _ in range(100):
            inst = _random_instance(rng, 9, 16)
            cases += 1
            fast = solve(inst, prop)
            slow = brute_force_solve(inst, prop)
            if fast.verdict != slow.verdict:
                failures.append("%s verdict %s vs %s" %
                                (prop, fast.verdict, slow.verdict))
                continue
            if fast.verdict == "SAT":
                g = inst.realize(fast.completion.chosen)
                ok, _ = check(g, prop)
                if not (ok and is_sandwich_graph(inst, g)):
                    failures.append("%s SAT completion failed re-check" % prop)
    detail = "%d cases, %d failures, seed=%d" % (cases, len(failures), seed)
    if failures:
        detail += " (first: %s)" % failures[0]
    return CriterionResult(3, "solver-exactness", not failures, detail)


def odd_instance_invariants(seed=DEFAULT_SEED):
    """4: structural_report passes on random formulas' five-cycle instances."""
    rng = random.Random(seed)
    bad = 0
    first = ""
    for _ in range(100):
        formula = _random_formula(rng, 6, 6)
        inst, _ = build_c5_instance(formula)
        report = structural_report(inst)
        if not report.all_ok():
            bad += 1
            if not first:
                first = repr(formula.clauses)
    detail = "100 formulas, %d with failing reports, seed=%d" % (bad, seed)
    if first:
        detail += " (first: %s)" % first
    return CriterionResult(4, "odd-structural-invariants", bad == 0, detail)


def odd_single_clause_end_to_end(seed=DEFAULT_SEED):
    """5: every single-clause formula solves SAT via the five-cycle instance,
    extraction satisfies the clause, and the realized graph is
    odd-antihole-free with no induced complement-of-P6."""
    failures = []
    for signs in product((1, -1), repeat=3):
        clause = tuple(s * v for s, v in zip(signs, (1, 2, 3)))
        formula = CnfFormula(3, (clause,))
        inst, gmap = build_c5_instance(formula)
        result = solve(inst, "c5-free")
        if result.verdict != "SAT":
            failures.append("%s: verdict %s" % (clause, result.verdict))
            continue
        g = inst.realize(result.completion.chosen)
        assignment = extract_odd(gmap, g)
        if not formula.satisfied_by(assignment):
            failures.append("%s: extracted assignment falsifies" % (clause,))
        ok_anti, _ = check(g, "odd-antihole-free")
        if not ok_anti:
            failures.append("%s: realized graph has an odd antihole" % (clause,))
        if find_induced_path(g.complement(), 6) is not None:
            failures.append("%s: complement has an induced P6" % (clause,))
    detail = "8 polarity patterns, %d failures" % len(failures)
    if failures:
        detail += " (first: %s)" % failures[0]
    return CriterionResult(5, "odd-end-to-end", not failures, detail)


def even_forward_direction(seed=DEFAULT_SEED):
    """6: single-clause completions are even-hole-free exactly for satisfying
    assignments; falsifying ones leave a knee four-hole."""
    failures = []
    cases = 0
    for signs in product((1, -1), repeat=3):
        clause = tuple(s * v for s, v in zip(signs, (1, 2, 3)))
        formula = CnfFormula(3, (clause,))
        inst, gmap = build_even_instance(formula)
        active, inactive = gmap.clause_knees(1)
        for bits in product((False, True), repeat=3):
            cases += 1
            assignment = {1: bits[0], 2: bits[1], 3: bits[2]}
            g = completion_from_assignment(formula, assignment, gmap)
            ok, cert = check(g, "even-hole-free")
            satisfied = formula.satisfied_by(assignment)
            if ok != satisfied:
                failures.append("%s %s: even-hole-free=%s satisfied=%s"
                                % (clause, bits, ok, satisfied))
                continue
            if satisfied:
                continue
            hole = _knee_four_hole(g, active, inactive)
            if hole is None:
                failures.append("%s %s: no knee four-hole" % (clause, bits))
            elif not (len(set(hole) & set(active)) == 2
                      and len(set(hole) & set(inactive)) == 2):
                failures.append("%s %s: four-hole not split 2/2" % (clause, bits))
    detail = "64 cases, %d failures" % len(failures)
    if failures:
        detail += " (first: %s)" % failures[0]
    return CriterionResult(6, "even-forward-direction", not failures, detail)


def _knee_four_hole(g, active, inactive):
    knees = sorted(active) + sorted(inactive)
    for subset in combinations(knees, 4):
        mask = 0
        for v in subset:
            mask |= 1 << v
        if all((g.adj[v] & mask).bit_count() == 2 for v in subset):
            return subset
    return None


def even_propagation_chain(seed=DEFAULT_SEED):
    """7: all-negative orientations on one clause force the knee edges and
    end in the contradiction four-hole on the first two variables' knees."""
    formula = CnfFormula(3, ((1, 2, 3),))
    inst, gmap = build_even_instance(formula)
    decided = {}
    for var in (1, 2, 3):
        for e in gmap.orientation_edges(var, 1, False):
            decided[e] = True
    result = propagate_orientations(inst, gmap, decided)
    problems = []
    if result.status != "contradiction":
        problems.append("status=%s" % result.status)
    else:
        need = [
            (gmap.knee[(-3, 1)], gmap.knee[(-1, 1)]),
            (gmap.knee[(-1, 1)], gmap.knee[(-2, 1)]),
            (gmap.knee[(2, 1)], gmap.knee[(-1, 1)]),
        ]
        for u, v in need:
            e = (u, v) if u < v else (v, u)
            if result.forced.get(e) is not True:
                problems.append("edge %s-%s not derived"
                                % (inst.name(u), inst.name(v)))
        expected = {gmap.knee[(1, 1)], gmap.knee[(2, 1)],
                    gmap.knee[(-1, 1)], gmap.knee[(-2, 1)]}
        got = set(result.certificate.vertices)
        if got != expected:
            problems.append("certificate %s" %
                            sorted(inst.name(v) for v in got))
        else:
            present = set(inst.forced)
            present.update(e for e, val in decided.items() if val)
            present.update(e for e, val in result.forced.items() if val)
            adj = _adjacency(inst.n, present)
            if not _subset_is_hole(adj, tuple(sorted(got))):
                problems.append("certificate does not re-verify as a hole")
    detail = "derived edges and contradiction certificate checked"
    if problems:
        detail = "; ".join(problems)
    return CriterionResult(7, "even-propagation-chain", not problems, detail)


def even_instance_census(seed=DEFAULT_SEED):
    """8: the single-clause instance has the exact derived counts and shape."""
    formula = CnfFormula(3, ((1, 2, 3),))
    inst, gmap = build_even_instance(formula)
    problems = []
    counts = (inst.n, len(inst.forced), len(inst.forbidden()),
              len(inst.optional))
    if counts != (16, 27, 33, 60):
        problems.append("counts %r != (16, 27, 33, 60)" % (counts,))
    g2 = inst.g2()
    if (g2.degree(gmap.w1), g2.degree(gmap.w2)) != (2, 2):
        problems.append("W vertices do not have degree 2 in the allowed graph")
    core_forbidden = [e for e in inst.forbidden()
                      if gmap.w1 not in e and gmap.w2 not in e]
    touched = [v for e in core_forbidden for v in e]
    if len(touched) != len(set(touched)):
        problems.append("forbidden pairs off the W path are not a matching")
    detail = ("|V|=%d forced=%d forbidden=%d optional=%d, W degrees 2, "
              "matching of %d" % (counts + (len(core_forbidden),)))
    if problems:
        detail = "; ".join(problems)
    return CriterionResult(8, "even-instance-census", not problems, detail)


def even_end_to_end(seed=DEFAULT_SEED):
    """9: small satisfiable formulas solve SAT through orientation branching
    and the extracted assignment satisfies them."""
    formulas = [CnfFormula(3, (tuple(s * v for s, v in zip(signs, (1, 2, 3))),))
                for signs in product((1, -1), repeat=3)]
    formulas += [
        CnfFormula(3, ((1, 2, 3), (-1, -2, -3))),
        CnfFormula(4, ((1, -2, 3), (2, 3, -4))),
        CnfFormula(5, ((-1, 2, -3), (3, -4, 5))),
        CnfFormula(6, ((1, 2, 3), (4, 5, 6))),
        CnfFormula(6, ((-1, -2, -3), (-4, -5, -6))),
    ]
    failures = []
    for formula in formulas:
        inst, gmap = build_even_instance(formula)
        result = solve_with_orientations(formula, inst, gmap)
        if result.verdict != "SAT":
            failures.append("%s: verdict %s" % (formula.clauses, result.verdict))
            continue
        g = inst.realize(result.completion.chosen)
        ok, _ = check(g, "even-hole-free")
        if not ok:
            failures.append("%s: completion not even-hole-free"
                            % (formula.clauses,))
            continue
        assignment = extract_even(gmap, g)
        if not formula.satisfied_by(assignment):
            failures.append("%s: extracted assignment falsifies"
                            % (formula.clauses,))
    detail = "%d formulas, %d failures" % (len(formulas), len(failures))
    if failures:
        detail += " (first: %s)" % failures[0]
    return CriterionResult(9, "even-end-to-end", not failures, detail)


SUITES = {
    "recognition-oracle": recognition_matches_oracle,
    "complement-duality": duality_agreement,
    "solver-exactness": solver_matches_brute_force,
    "odd-structural-invariants": odd_instance_invariants,
    "odd-end-to-end": odd_single_clause_end_to_end,
    "even-forward-direction": even_forward_direction,
    "even-propagation-chain": even_propagation_chain,
    "even-instance-census": even_instance_census,
    "even-end-to-end": even_end_to_end,
}


def run_suite(name, seed=DEFAULT_SEED):
    """Run one named suite (or 'all'); returns a list of CriterionResult."""
    if name == "all":
        return [fn(seed) for fn in SUITES.values()]
    if name not in SUITES:
        raise ValueError("unknown suite %r; choose from %s or 'all'"
                         % (name, ", ".join(sorted(SUITES))))
    return [SUITES[name](seed)]
