"""The acceptance gate: ten checks, one printed pass/fail line each.

Each test prints its verdict line (visible under -s; the -v test status
carries the same information) and then asserts, so a red line and a red test
always coincide.
"""

import random

from conftest import random_graph
from hedcex import counterexample as cex
from hedcex.counterexample import chain_check, params_for, verify_counterexample
from hedcex.families import (
    complete_graph,
    gamma_power,
    n_exact,
    omega_sets,
    omega_tuple_vertices,
    omega_tuples,
    omega_vertex_count,
)
from hedcex.graphs import iter_bits
from hedcex.solver import NONE, ColoringResult, chromatic_number, verify_coloring
from hedcex.widecolor import (
    WideColoring,
    adjunction_holds,
    check_wide,
    zero_position_coloring,
)


def announce(num: int, name: str, ok: bool, extra: str = "") -> None:
    state = "pass" if ok else "FAIL"
    suffix = f" ({extra})" if extra else ""
    print(f"criterion {num:2d} {name}: {state}{suffix}")
    assert ok, f"criterion {num} {name}{suffix}"


def test_criterion_01_pinned_counts(omega63, omega82):
    ok = (
        omega63.graph.n == 4686
        and omega63.graph.edge_count == 36015
        and omega82.graph.n == 16472
        and omega_vertex_count(6, 6) == 54186
    )
    announce(1, "host graph counts", ok, "4686/36015, 16472, 54186")


def test_criterion_02_vertex_count_formula():
    bad = [
        (n, d)
        for n in range(2, 7)
        for d in range(1, 5)
        if len(omega_tuple_vertices(n, d)) != omega_vertex_count(n, d)
    ]
    announce(2, "closed-form order matches enumeration", not bad, "n in 2..6, d in 1..4")


def test_criterion_03_h_shapes(c5_report, c7_report):
    b5, b7 = c5_report.build, c7_report.build
    distinct = len({v.table.tobytes() for v in b5.vertices}) == 30
    reading = c5_report.item("reading")
    ok = (
        b5.h.n == 30
        and b5.h.edge_count == 108
        and distinct
        and b7.h.n == 32
        and reading.ok is True
        and reading.detail["matching"] == ["q"]
    )
    announce(3, "H shapes and selector reading", ok, "30/108 + 32, reading q")


def test_criterion_04_h_not_colorable(c5_report, c7_report):
    i5, i7 = c5_report.item("chi_h"), c7_report.item("chi_h")
    ok = i5.ok is True and i7.ok is True
    announce(
        4,
        "H admits no c-coloring",
        ok,
        f"refusal trees {i5.detail['nodes']} and {i7.detail['nodes']} nodes",
    )


def test_criterion_05_product_coloring(c5_report, c7_report):
    i5, i7 = c5_report.item("product_coloring"), c7_report.item("product_coloring")
    ok = (
        i5.ok is True
        and i5.detail["ordered_checks"] == 2 * 108 * 36015
        and i7.ok is True
        and i7.detail["ordered_checks"] == 2 * 168 * 437500
    )
    announce(5, "product coloring proper", ok, "7779240 and 147000000 ordered checks")


def test_criterion_06_wide_colorings(omega63, omega82):
    wc6 = zero_position_coloring(omega63, 6, 1)
    wc8 = zero_position_coloring(omega82, 8, 1)
    ok = (
        wc6.d == 3
        and wc8.d == 2
        and check_wide(omega63.graph, wc6, condition=2, threads=4)
        and check_wide(omega82.graph, wc8, condition=2, threads=4)
    )
    announce(6, "zero-position colorings wide", ok, "6 classes at d=3, 8 at d=2")


def test_criterion_07_desk_scale_chromatic():
    om41 = omega_tuples(4, 1)
    upper = verify_coloring(om41.graph, [p + 1 for p in om41.zero_positions()], 4)
    r41 = chromatic_number(om41.graph)
    r32 = chromatic_number(omega_tuples(3, 2).graph)
    ok = (
        upper
        and r41.status == "value"
        and r41.value == 4
        and r32.status == "value"
        and r32.value == 3
    )
    announce(7, "small adjoints have full chromatic number", ok, "chi=4 on 28, chi=3 on 15")


def test_criterion_08_structural_lemmas(c5_report, c7_report, c5_wide_build):
    ok_chain, pairs, bad = chain_check(c5_wide_build, q=1, depths=range(1, 5))
    ok = (
        c5_report.item("h1_adjacent_f").ok is True
        and c7_report.item("h1_adjacent_f").ok is True
        and c5_report.item("g_clique").ok is True
        and c7_report.item("g_clique").ok is True
        and ok_chain
        and pairs >= 200
    )
    announce(8, "lemma-level edge facts", ok, f"chain pairs checked: {pairs}")


def _suite_shell_agreement() -> tuple[int, int]:
    rng = random.Random(901)
    checked = failures = 0
    while checked < 110:
        g = random_graph(rng, rng.randint(1, 10), 0.4)
        d = rng.randint(1, 4)
        power = gamma_power(g, d)
        for v in range(g.n):
            if n_exact(g, 1 << v, d) != power.adj[v]:
                failures += 1
        checked += 1
    return checked, failures


def _suite_four_way() -> tuple[int, int]:
    rng = random.Random(902)
    checked = failures = 0
    while checked < 110:
        g = random_graph(rng, rng.randint(2, 11), 0.4)
        if any(g.adj[v] == 0 for v in range(g.n)):
            continue
        n, k = rng.choice([(2, 1), (3, 1), (2, 2)])
        wc = WideColoring(
            n=n,
            k=k,
            d=rng.randint(0, 3),
            pairs=tuple((rng.randint(1, n), rng.randint(1, k)) for _ in range(g.n)),
        )
        answers = {check_wide(g, wc, condition) for condition in (1, 2, 3, 4)}
        if len(answers) != 1:
            failures += 1
        checked += 1
    return checked, failures


def _suite_adjunction() -> tuple[int, int]:
    rng = random.Random(903)
    targets = [complete_graph(2), complete_graph(3), complete_graph(4)]
    checked = failures = 0
    while checked < 110:
        g = random_graph(rng, rng.randint(1, 7), 0.5)
        h = rng.choice(targets)
        d = rng.choice([1, 3, 5])
        if not adjunction_holds(g, h, d):
            failures += 1
        checked += 1
    return checked, failures


def _chain_of(x, d):
    return tuple(
        sum(1 << p for p, xp in enumerate(x) if xp <= i and (xp - i) % 2 == 0)
        for i in range(d + 1)
    )


def _suite_set_vs_tuple() -> tuple[int, int]:
    # one instance per vertex: its chain lands in the set form and carries
    # the same neighborhood across; every buildable (m, d) pair enumerated
    checked = failures = 0
    for m in range(2, 6):
        for d in range(1, 4):
            tup = omega_tuples(m, d)
            st = omega_sets(complete_graph(m), d)
            index = {c: i for i, c in enumerate(st.tuples)}
            perm = [index.get(_chain_of(x, d)) for x in tup.tuples]
            bijective = None not in perm and sorted(perm) == list(range(st.graph.n))
            for v in range(tup.graph.n):
                good = bijective and {
                    perm[u] for u in iter_bits(tup.graph.adj[v])
                } == set(iter_bits(st.graph.adj[perm[v]]))
                if not good:
                    failures += 1
                checked += 1
    return checked, failures


def test_criterion_09_property_suites():
    results = {
        "power-vs-shell": _suite_shell_agreement(),
        "four-way": _suite_four_way(),
        "adjunction": _suite_adjunction(),
        "set-vs-tuple": _suite_set_vs_tuple(),
    }
    ok = all(c >= 100 and f == 0 for c, f in results.values())
    extra = ", ".join(f"{name} {c}/{f}" for name, (c, f) in results.items())
    announce(9, "property suites (instances/failures)", ok, extra)


def test_criterion_10_host_excess_attribution(c5_report, monkeypatch):
    # default budget: the search exhausts and the report leans on the
    # published identity, still passing
    item = c5_report.item("chi_g")
    defaulted = (
        c5_report.status == "PASS"
        and item.ok is True
        and item.detail["status"] == "external_theorem"
        and "not machine-checked" in item.detail["attribution"]
    )

    # a search that does resolve must upgrade the same item
    real = cex.find_coloring

    def resolved(g, c, budget=None):
        if g.n == 4686 and c == 5:
            return ColoringResult(NONE, c, None, 123)
        return real(g, c, budget) if budget is not None else real(g, c)

    monkeypatch.setattr(cex, "find_coloring", resolved)
    upgraded_report = verify_counterexample(
        params_for("c5_refined"), compare_readings=False, threads=4
    )
    up = upgraded_report.item("chi_g")
    upgraded = (
        upgraded_report.status == "PASS"
        and up.ok is True
        and up.detail["status"] == "machine_checked"
    )
    announce(10, "host excess attributed or machine-checked", defaulted and upgraded)
