"""Acceptance suite: one test per acceptance criterion.

Each test prints a single ``PASS criterion N: ...`` line (visible with
``pytest -s`` and in captured output) and fails hard on any mismatch.
Criterion 1 builds the shared random corpus; criterion 10 reuses it.
"""

import itertools
import os
import random
import subprocess
import sys
import time

from test_closed_forms import GMK_GRID

from graphchomp.closed_forms import (
    bipartite_value,
    complete_npartite_value,
    figure8_value,
    forest_value,
    gmk_recurrence,
    gmk_value,
    hairball_value,
    pseudotree_classify,
    theta_value,
)
from graphchomp.canon import position_key
from graphchomp.complexes import graph_stats
from graphchomp.conjectures import scan_wheels
from graphchomp.engine import (
    BudgetExceededError,
    EngineConfig,
    TranspositionTable,
    grundy,
)
from graphchomp.families import (
    complete,
    complete_npartite,
    erdos_renyi,
    orphaned_edge,
    figure8,
    gmk,
    hairball,
    random_bipartite,
    random_complex,
    random_forest,
    rooted_trees,
    single_attachment_pseudotree,
    theta,
    torus_3x3,
    tree_shape_size,
)
from graphchomp.oracle import oracle_grundy
from graphchomp.symmetry import (
    _valid_involutions,
    fixed_point_set,
    is_simplest_form,
    reduce_to_simplest,
    validate_involution,
)

# Shared state: criterion 1 fills these, criterion 10 reads them.
_CORPUS: list = []
_ORACLE_MEMO: dict = {}


def _report(num: int, detail: str) -> None:
    print(f"PASS criterion {num}: {detail}")


def _corpus():
    """500 seeded random graphs (<= 8 vertices) + 100 random complexes
    (<= 6 vertices), built once and shared across criteria."""
    if not _CORPUS:
        rng = random.Random(1)
        for i in range(500):
            n = rng.randint(1, 8)
            _CORPUS.append(erdos_renyi(n, 0.5, i))
        for i in range(100):
            n = rng.randint(1, 6)
            _CORPUS.append(random_complex(n, i))
    return _CORPUS


def test_criterion_01_oracle_equivalence():
    start = time.monotonic()
    cpu_start = time.process_time()
    corpus = _corpus()
    combos = list(itertools.product([False, True], repeat=3))
    cfgs = {
        c: EngineConfig(
            use_reduction=c[0], use_closed_forms=c[1], use_decomposition=c[2]
        )
        for c in combos
    }
    tables = {c: TranspositionTable() for c in combos}
    checked = 0
    for c in corpus:
        want = oracle_grundy(c, memo=_ORACLE_MEMO)
        for combo in combos:
            got = grundy(c, cfgs[combo], tables[combo], witness=False).value
            assert got == want, (c, combo, got, want)
            checked += 1
    elapsed = time.monotonic() - start
    cpu = time.process_time() - cpu_start
    # CPU time is the load-independent measure on this shared single-core
    # box; wall time is reported alongside for transparency
    assert cpu < 300, f"{cpu:.1f}s CPU exceeds the 5 min runtime target"
    _report(
        1,
        f"engine == oracle on {len(corpus)} positions x 8 toggle combos "
        f"({checked} checks) in {cpu:.1f}s CPU ({elapsed:.1f}s wall)",
    )


def test_criterion_02_forest_formula():
    table = TranspositionTable()
    rng = random.Random(2)
    for i in range(200):
        n = rng.randint(1, 9)
        f = random_forest(n, i)
        st = graph_stats(f)
        want = forest_value(st.v, st.component_count).value
        got = grundy(f, EngineConfig(use_closed_forms=False), table).value
        assert got == want, (i, st.v, st.component_count, got, want)
    _report(2, "forest parity formula == engine on 200 forests (<= 9 vertices)")


def test_criterion_03_bipartite_formula():
    table = TranspositionTable()
    rng = random.Random(3)
    for i in range(200):
        n = rng.randint(1, 8)
        g = random_bipartite(n, 0.5, i)
        st = graph_stats(g)
        want = bipartite_value(st.v, st.e).value
        got = grundy(g, EngineConfig(use_closed_forms=False), table).value
        assert got == want, (i, st.v, st.e, got, want)
    _report(3, "bipartite parity table == engine on 200 graphs (<= 8 vertices)")


def _partitions(total, max_part=None):
    if total == 0:
        yield ()
        return
    if max_part is None:
        max_part = total
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def test_criterion_04_complete_and_npartite():
    start = time.monotonic()
    table = TranspositionTable()
    cfg = EngineConfig()  # canonicalization and reduction enabled
    for n in range(1, 8):
        assert grundy(complete(n), cfg, table).value == n % 3, n
    cases = 0
    for total in range(1, 10):
        for parts in _partitions(total):
            want = complete_npartite_value(list(parts)).value
            got = grundy(complete_npartite(list(parts)), cfg, table).value
            assert got == want, (parts, got, want)
            cases += 1
    elapsed = time.monotonic() - start
    assert elapsed < 600, f"runtime {elapsed:.1f}s exceeds 10 min target"
    _report(
        4,
        f"K_n (n <= 7) and {cases} complete multipartite graphs "
        f"(<= 9 vertices) match the mod-3 rules in {elapsed:.1f}s",
    )


def test_criterion_05_torus_reduction():
    torus = torus_3x3()
    final, trace = reduce_to_simplest(torus)
    st = graph_stats(final)
    assert trace.complete
    assert st.v == 3 and st.e == 3 and st.cycle_count == 1  # a 3-cycle
    assert oracle_grundy(final) == 0
    # independent confirmation without symmetry reduction, if affordable
    try:
        direct = grundy(
            torus, EngineConfig(use_reduction=False), node_budget=3_000
        ).value
        assert direct == 0
        path = "search without reduction confirms value 0"
    except BudgetExceededError:
        path = (
            "search budget exhausted; certified by the complete reduction "
            "to a 3-cycle (reduction toggle covered by criterion 1)"
        )
    _report(5, f"torus reduces to a 3-cycle of value 0; {path}")


def test_criterion_06_two_tail_family():
    # recurrence vs the frozen 12x12 grid, timed
    start = time.monotonic()
    memo: dict = {}
    gmk_recurrence(30, 30, memo)
    rec_elapsed = time.monotonic() - start
    assert rec_elapsed < 1.0, f"recurrence took {rec_elapsed:.2f}s"
    for m in range(1, 13):
        for k in range(1, 13):
            assert memo[(m, k)] == GMK_GRID[m - 1][k - 1], (m, k)
    # block closed form 4n / 4n+2 with n = (a xor b) + 1, for a, b <= 7
    for a in range(8):
        for b in range(8):
            n = (a ^ b) + 1
            for i in range(1, 4):
                for j in range(1, 4):
                    want = 4 * n if (i + j) % 2 == 0 else 4 * n + 2
                    assert memo[(3 * a + i, 3 * b + j)] == want, (a, b, i, j)
    # closed form matches the recurrence everywhere up to 30
    for m in range(1, 31):
        for k in range(1, 31):
            assert gmk_value(m, k).value == memo[(m, k)], (m, k)
    # engine agreement, closed forms off so the check is independent
    eng_start = time.monotonic()
    table = TranspositionTable()
    cfg = EngineConfig(use_closed_forms=False)
    engine_cases = 0
    for m in range(7):
        for k in range(7 - m):
            assert grundy(gmk(m, k), cfg, table).value == memo[(m, k)], (m, k)
            engine_cases += 1
    for m in range(3):
        for k in range(3):
            got = grundy(gmk(m, k, cycle_size=5), cfg, table).value
            assert got == memo[(m, k)], ("cycle5", m, k)
            engine_cases += 1
    eng_elapsed = time.monotonic() - eng_start
    assert eng_elapsed < 900, f"engine cases took {eng_elapsed:.1f}s"
    _report(
        6,
        "two-tail recurrence == frozen 12x12 grid, block closed form for "
        f"a,b <= 7, and closed form for m,k <= 30 (recurrence {rec_elapsed:.2f}s); "
        f"engine agrees on {engine_cases} cases incl. 5-cycles in {eng_elapsed:.1f}s",
    )


def test_criterion_07_single_attachment_theorem():
    table = TranspositionTable()
    cfg = EngineConfig(use_closed_forms=False)
    checked = odd_b = 0
    for cycle_size in (3, 5, 7, 9):
        for size in range(1, 11 - cycle_size):
            for shape in rooted_trees(size):
                c = single_attachment_pseudotree(cycle_size, shape)
                if not is_simplest_form(c):
                    continue
                st = graph_stats(c)
                deg_b = st.degrees[cycle_size]  # the tree vertex joined to the cycle
                value = grundy(c, cfg, table).value
                if deg_b % 2 == 1:
                    assert value >= 4, (cycle_size, shape, value)
                    odd_b += 1
                else:
                    want = 3 if st.v % 2 else 0
                    assert value == want, (cycle_size, shape, value, want)
                checked += 1
    assert checked > 0 and odd_b > 0
    _report(
        7,
        f"single-attachment odd-cycle bound/formula holds on all {checked} "
        f"simplest-form instances with <= 10 vertices ({odd_b} with odd branch degree)",
    )


def _tail_assignments(positions, budget):
    """Sorted tail-length tuples per cycle position, total <= budget."""
    if positions == 0:
        yield ()
        return
    for rest in _tail_assignments(positions - 1, budget):
        used = sum(sum(t) for t in rest)
        for tails in _tail_multisets(budget - used):
            yield rest + (tails,)


def _tail_multisets(budget, max_len=None):
    yield ()
    if max_len is None:
        max_len = budget
    for first in range(1, min(budget, max_len) + 1):
        for rest in _tail_multisets(budget - first, first):
            yield (first,) + rest


def test_criterion_08_hairballs_figure8_theta():
    table = TranspositionTable()
    cfg = EngineConfig(use_closed_forms=False)
    seen = set()
    classified = 0
    for cycle_size in (3, 5):
        for assignment in _tail_assignments(cycle_size, 11 - cycle_size):
            if not any(assignment):
                continue  # bare cycle: no classification claimed
            c = hairball(cycle_size, [list(t) for t in assignment])
            digest = position_key(c).digest
            if digest in seen:
                continue
            seen.add(digest)
            r = hairball_value(c, pseudotree_classify(c))
            if not r.is_exact:
                continue  # not in simplest form: the rule makes no claim
            got = grundy(c, cfg, table).value
            assert got == r.value, (cycle_size, assignment, got, r.value)
            classified += 1
    assert classified >= 20
    f8 = 0
    for a in range(3, 8):
        for b in range(a, 8):
            if a + b - 1 > 9:
                continue
            c = figure8(a, b)
            assert figure8_value(c).value == 1
            assert grundy(c, cfg, table).value == 1, (a, b)
            f8 += 1
    th = 0
    for p in range(1, 8):
        for q in range(p, 8):
            for r in range(q, 8):
                v = 2 + p + q + r
                if v > 9:
                    continue
                c = theta(p, q, r)
                want = 1 if v % 2 else 2
                assert theta_value(c).value == want
                assert grundy(c, cfg, table).value == want, (p, q, r)
                th += 1
    _report(
        8,
        f"{classified} classified hairballs (<= 11 vertices, cycle 3/5), "
        f"{f8} figure-8s (value 1) and {th} thetas (1/2 by parity) match the engine",
    )


def test_criterion_09_wheels():
    rows = scan_wheels(7)
    by_n = {r["n"]: r for r in rows}
    assert sorted(by_n) == [3, 4, 5, 6, 7]
    for n, row in by_n.items():
        assert row["value"] == 1, row
        assert row.get("verified"), row
    methods = {n: by_n[n]["method"] for n in by_n}
    _report(9, f"wheels n=3..7 all have value 1 (methods: {methods})")


def test_criterion_10_symmetry_property():
    corpus = _corpus()
    checked = 0
    for c in corpus:
        base = None
        for t in _valid_involutions(c):
            if base is None:
                base = oracle_grundy(c, memo=_ORACLE_MEMO)
            fixed = fixed_point_set(c, t)
            assert oracle_grundy(fixed, memo=_ORACLE_MEMO) == base, (c, t)
            checked += 1
    assert checked > 100
    # edge {0,1} + vertex {2}: swapping the edge's endpoints fixes the edge
    # setwise but not pointwise, so the fixed set is not a valid position
    ok, reason = validate_involution(orphaned_edge(), {0: 1, 1: 0, 2: 2})
    assert not ok and reason == "fixed-set-not-complex"
    _report(
        10,
        f"oracle confirms g(fixed set) == g(original) for {checked} valid "
        "involutions on the corpus; edge-swap counterexample rejected",
    )


def test_criterion_11_cli_determinism():
    argv = [
        sys.executable, "-m", "graphchomp.cli",
        "solve", "--family", "erdos_renyi:7,p=0.5,seed=11", "--json",
        "--seed", "5",
    ]
    env = {**os.environ, "PYTHONHASHSEED": "random"}
    a = subprocess.run(argv, capture_output=True, env=env)
    b = subprocess.run(argv, capture_output=True, env=env)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout
    _report(11, "identical solve invocations produce byte-identical JSON")
