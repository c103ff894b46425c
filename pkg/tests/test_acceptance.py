"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines live.
The desk-scale theorem sweep (criterion 1) is shared with the claim-level
checks (criterion 7) through a session fixture.
"""

import random
import subprocess
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest

import twotrail as tt
from twotrail import (
    BuildFailure,
    CoverSubgraph,
    DeficientSet,
    TwoTrail,
    build_cover,
    build_extremal,
    check_certificate,
    exterior_bipartite,
    extremal_toughness_value,
    find_dominating_longest_cycle,
    find_induced_2k2,
    find_spanning_2trail,
    no_trail_certificate,
    oracle_exists_2trail,
    structured_toughness,
    tightness_family,
    toughness_exact,
    verify_2trail,
)
from twotrail.cover import BipartiteInstance
from twotrail.smallgraphs import (
    iter_theorem_candidates,
    random_connected_graph,
    random_graph,
    random_split_graph,
    sample_is_theorem_candidate,
)
from twotrail.trail import _decompose, assemble_case2
from twotrail.errors import NoCycle

from oracles import brute_cover_exists, brute_longest_cycle_length

SEED = 20260809
THREE_HALVES = Fraction(3, 2)

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

# graphs that drive the builder into its non-Hamiltonian branches; every
# random 3/2-tough 2K2-free graph at this scale is Hamiltonian, so these
# constructed inputs supply the missing coverage
BRANCH_FIXTURES = [
    ("p0", 10, [(8, 0), (8, 4), (9, 0), (9, 4)], 8),
    ("case1", 10, [(8, 0), (8, 2), (9, 4), (9, 6), (0, 4), (2, 6)], 8),
    ("case2_i", 10, [(8, 0), (8, 3), (9, 3), (9, 6), (8, 6)], 8),
    ("case2_ii", 8, [(7, 0), (7, 3), (0, 4)], 7),
    ("case2_iii", 9, [(8, 0), (8, 2), (8, 5), (0, 6)], 8),
]


def ring_graph(n, m, extra):
    return tt.Graph.from_edges(n, [(i, (i + 1) % m) for i in range(m)] + extra)


def criterion_line(number, ok, summary):
    print(f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {summary}")
    assert ok, f"criterion {number} failed: {summary}"


@pytest.fixture(scope="module")
def theorem_sweep():
    """Criterion 1 run, with the per-graph cycle data criterion 7 needs."""
    telemetry = Counter()
    failures = []
    checked = 0
    nonspanning = []

    def drive(g):
        nonlocal checked
        checked += 1
        result = find_spanning_2trail(g, telemetry=telemetry)
        if isinstance(result, BuildFailure):
            failures.append((g.edges(), f"builder failed: {result.tag.value}"))
            return
        verdict = verify_2trail(g, result.edges)
        if not verdict.ok:
            failures.append((g.edges(), f"bad trail: {verdict.reason}"))
            return
        exists, _ = oracle_exists_2trail(g)
        if not exists:
            failures.append((g.edges(), "oracle denies existence"))
            return
        cycle = find_dominating_longest_cycle(g)
        if not cycle.spans(g):
            nonspanning.append((g, cycle))

    for n in range(3, 8):
        for g in iter_theorem_candidates(n):
            drive(g)
    exhaustive_count = checked

    rng = random.Random(SEED)
    sampled = passing = 0
    while sampled < 500:
        sampled += 1
        g = random_connected_graph(rng.choice([8, 9]), rng.uniform(0.45, 0.85), rng)
        if sample_is_theorem_candidate(g):
            passing += 1
            drive(g)

    return {
        "telemetry": telemetry,
        "failures": failures,
        "checked": checked,
        "exhaustive": exhaustive_count,
        "random_passing": passing,
        "nonspanning": nonspanning,
    }


def test_criterion_1_theorem_desk_scale(theorem_sweep):
    data = theorem_sweep
    ok = not data["failures"] and data["exhaustive"] > 40000 and data["random_passing"] >= 50
    criterion_line(
        1,
        ok,
        f"{data['checked']} tough 2K2-free graphs (exhaustive n<=7: {data['exhaustive']}, "
        f"random 8-9 passing: {data['random_passing']}) all yield verified trails; "
        f"oracle concurs; failures: {len(data['failures'])}",
    )


def test_criterion_2_toughness_numbers():
    formula_ok = all(
        structured_toughness(build_extremal(n))[0] == Fraction(5 * n - 2, 4 * n)
        for n in range(2, 51)
    )
    g2 = build_extremal(2).graph
    exact_value, cut = toughness_exact(g2, prune=False)
    brute_ok = exact_value == 1 and cut.verify(g2)
    limit_ok = abs(extremal_toughness_value(10**6) - Fraction(5, 4)) < Fraction(1, 10**6)
    criterion_line(
        2,
        formula_ok and brute_ok and limit_ok,
        "structured toughness = (5n-2)/4n for n in [2,50]; full 2^17 enumeration "
        f"gives tau = {exact_value}; value at n=10^6 within 1e-6 of 5/4",
    )


def test_criterion_3_no_trail_family():
    cert_ok = all(
        check_certificate(build_extremal(n).graph, no_trail_certificate(build_extremal(n)))
        for n in range(2, 51)
    )
    g2 = build_extremal(2).graph
    build_result = find_spanning_2trail(g2)
    build_ok = isinstance(build_result, BuildFailure) and build_result.verify(g2)
    oracle_exists, _ = oracle_exists_2trail(g2, vertex_limit=17, edge_limit=52)
    criterion_line(
        3,
        cert_ok and build_ok and not oracle_exists,
        "certificates check for n in [2,50]; builder returns a verified "
        f"{build_result.tag.value} failure on the n=2 member; oracle agrees no trail exists",
    )


def test_criterion_4_cover_oracle_equivalence():
    rng = random.Random(SEED + 4)
    successes = failures = 0
    mismatches = []
    for _ in range(1000):
        nx, ny = rng.randrange(1, 7), rng.randrange(1, 8)
        xs, ys = tuple(range(nx)), tuple(range(100, 100 + ny))
        density = rng.choice((0.25, 0.45, 0.65, 0.9))
        edges = frozenset((x, y) for x in xs for y in ys if rng.random() < density)
        inst = BipartiteInstance.make(xs, ys, edges)
        result = build_cover(inst)
        exists = brute_cover_exists(xs, ys, edges)
        if isinstance(result, CoverSubgraph):
            successes += 1
            if not exists:
                mismatches.append((inst, "cover built but oracle denies"))
            degrees_ok = all(result.x_degree(x) == 2 for x in xs) and all(
                result.y_degree(y) <= 2 for y in ys
            )
            if not degrees_ok:
                mismatches.append((inst, "cover degrees broken"))
        else:
            failures += 1
            if exists:
                mismatches.append((inst, "cover denied but oracle finds one"))
            s = set(result.vertices)
            if not (s and len(inst.neighborhood(s)) < THREE_HALVES * len(s)):
                mismatches.append((inst, "deficient set is not deficient"))
    criterion_line(
        4,
        not mismatches and successes and failures,
        f"1000 random instances: {successes} covers, {failures} deficiency "
        f"certificates, 0 oracle mismatches",
    )


def test_criterion_5_tightness():
    problems = []
    for k in range(1, 5):
        fam = tightness_family(k)
        if not isinstance(build_cover(fam), CoverSubgraph):
            problems.append((k, "full family has no cover"))
        for y in fam.y_side:
            reduced = fam.without_y(y)
            result = build_cover(reduced)
            if not isinstance(result, DeficientSet) or not result.verify(reduced):
                problems.append((k, y))
    criterion_line(
        5,
        not problems,
        "for k in [1,4] the family admits a cover and every one of its 3k "
        "single-Y deletions is certified coverless",
    )


def test_criterion_6_dominating_cycles():
    rng = random.Random(SEED + 6)
    qualified = 0
    problems = []
    while qualified < 500:
        if rng.random() < 0.5:
            g = random_graph(rng.randrange(4, 9), rng.uniform(0.3, 0.7), rng)
        else:
            n = rng.randrange(5, 11)
            g = random_split_graph(n, min(rng.randrange(3, 7), n - 1), rng.uniform(0.3, 0.8), rng)
        if not tt.is_connected(g) or find_induced_2k2(g) is not None:
            continue
        try:
            cycle = find_dominating_longest_cycle(g)
        except NoCycle:
            continue
        except tt.LemmaViolation:
            problems.append((g.edges(), "lemma violation"))
            qualified += 1
            continue
        qualified += 1
        if len(cycle) != brute_longest_cycle_length(g):
            problems.append((g.edges(), "not maximum length"))
        if not tt.is_dominating(g, cycle):
            problems.append((g.edges(), "not dominating"))
    criterion_line(
        6,
        not problems,
        "500 random connected 2K2-free graphs with cycles: no LemmaViolation, "
        "every returned cycle dominating and of exhaustive-maximum length",
    )


def test_criterion_7_claim_checks_and_branch_coverage(theorem_sweep):
    telemetry = Counter(theorem_sweep["telemetry"])
    claim_problems = []

    def check_claims(g, cycle):
        if len(cycle) < 7:
            claim_problems.append((g.edges(), "cycle shorter than 7"))
        on_cycle = cycle.vertex_set()
        for x in range(g.n):
            if x in on_cycle:
                continue
            for y in g.neighbors(x):
                if cycle.successor(y) in g.neighbors(x):
                    claim_problems.append((g.edges(), f"consecutive neighbors at {x}"))

    for g, cycle in theorem_sweep["nonspanning"]:
        check_claims(g, cycle)

    # constructed fixtures: non-Hamiltonian pipelines for each builder branch
    for name, n, extra, m in BRANCH_FIXTURES:
        g = ring_graph(n, m, extra)
        result = find_spanning_2trail(g, telemetry=telemetry)
        assert isinstance(result, TwoTrail), (name, result)
        assert verify_2trail(g, result.edges).ok
        check_claims(g, find_dominating_longest_cycle(g))

    # branch (iv) through the public single-path assembler: a cover cycle is
    # opened at its pivot and the merge machinery finishes the trail
    g = ring_graph(
        12,
        9,
        [(9, 0), (9, 2), (10, 4), (10, 6), (11, 4), (11, 6), (11, 8), (0, 4), (2, 8)],
    )
    cycle = find_dominating_longest_cycle(g)
    check_claims(g, cycle)
    decomp = _decompose(
        exterior_bipartite(g, cycle),
        frozenset({(9, 0), (9, 2), (10, 4), (10, 6), (11, 4), (11, 6)}),
    )
    trail = assemble_case2(g, cycle, decomp, telemetry)
    assert verify_2trail(g, trail.edges).ok

    branches = ["case2_i", "case2_ii", "case2_iii", "case2_iv"]
    coverage_ok = all(telemetry[b] >= 1 for b in branches)
    criterion_line(
        7,
        coverage_ok and not claim_problems,
        f"claim checks hold on every non-spanning dominating cycle "
        f"({len(theorem_sweep['nonspanning']) + len(BRANCH_FIXTURES) + 1} checked); "
        "branch telemetry " + ", ".join(f"{b}={telemetry[b]}" for b in branches),
    )


def test_criterion_8_cli_contract(tmp_path):
    def run(*argv):
        proc = subprocess.run(
            [sys.executable, "-m", "twotrail", *argv], capture_output=True
        )
        return proc.returncode, proc.stdout

    problems = []
    code, out = run("gen", "extremal", "2", str(tmp_path / "g2.txt"))
    if code != 0 or out != (GOLDEN / "gen_extremal_2.txt").read_bytes():
        problems.append("gen extremal 2")
    if (tmp_path / "g2.txt").read_bytes() != (GOLDEN / "gen_extremal_2_edges.txt").read_bytes():
        problems.append("gen extremal 2 edge list")
    code, out = run("check", "tough", "--t", "3/2", str(DATA / "c5.txt"))
    if code != 1 or out != (GOLDEN / "check_tough_c5.txt").read_bytes():
        problems.append("check tough c5")
    code, out = run("trail", "build", str(DATA / "k4.txt"))
    if code != 0 or out != (GOLDEN / "trail_build_k4.txt").read_bytes():
        problems.append("trail build k4")
    criterion_line(
        8,
        not problems,
        "gen extremal 2 (17 vertices / 52 edges), check tough on C5 (violating "
        "cut, exit 1), trail build on K4 (4-edge trail, exit 0) all byte-identical to golden files",
    )
