"""End-to-end acceptance checks, one test per criterion.

Each test prints a single [PASS]/[FAIL] line through the ``criterion``
fixture; the terminal summary repeats them. Budgets are wall-clock limits.
"""

import json
import time

import jsonschema
import pytest

from cliquepoly.analyze import turan_check
from cliquepoly.chordal import (
    clique_tree,
    closed_form_clique_polynomial,
    fast_chordal_polynomial,
    pasting_polynomial,
    peo_or_raise,
)
from cliquepoly.clique import clique_polynomial, count_cliques
from cliquepoly.gen import derive_seed, enumerate_graphs, generate_random_connected, SplitMix64
from cliquepoly.graph import k4_plus
from cliquepoly.poly import IntPolynomial, X_PLUS_ONE, analyze_roots, divide_out_root, has_root_in_unit_negative_interval
from cliquepoly.reduce import quadratic_factor, triangle_free_reduction
from cliquepoly.scan import SCAN_REPORT_SCHEMA, ScanConfig, run_scan
from corpus import CORPUS_SEED, k4_free_chordal, random_chordal, random_paste_case
from oracles import naive_clique_counts, naive_clique_polynomial_coeffs, sympy_real_roots

pytestmark = pytest.mark.acceptance


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


@pytest.fixture(scope="module")
def chordal_corpus():
    return list(random_chordal(500, CORPUS_SEED, max_n=40))


def test_c01_k4_plus_golden(criterion):
    with Timer() as t:
        c = clique_polynomial(k4_plus())
        quotient, mult = divide_out_root(c, -1)
        ra = analyze_roots(c)
    ok = (
        c == IntPolynomial.of(1, 5, 7, 4, 1)
        and c.coeffs == naive_clique_polynomial_coeffs(k4_plus())
        and (mult, quotient) == (1, IntPolynomial.of(1, 4, 3, 1))
        and ra.distinct_real_roots == 2
        and ra.is_real_rooted is False
        and t.seconds < 1
    )
    criterion("1 K4+ golden", ok, f"C={c} mult={mult} q={quotient} distinct={ra.distinct_real_roots} ({t.seconds:.3f}s)")


def test_c02_k4_free_chordal_exhaustive(criterion):
    bad = []
    with Timer() as t:
        corpus = k4_free_chordal(7)
        for g in corpus:
            ra = analyze_roots(clique_polynomial(g))
            if not (ra.is_real_rooted and ra.multiplicity_at_minus_one >= 1):
                bad.append(g)
            # independent root count from the subset-filter polynomial
            ref = sympy_real_roots(naive_clique_polynomial_coeffs(g))
            if len(ref) != len(naive_clique_polynomial_coeffs(g)) - 1:
                bad.append(g)
    ok = not bad and len(corpus) == 178 and t.seconds < 300
    criterion("2 K4-free chordal real-rooted n<=7", ok, f"{len(corpus)} graphs, {len(bad)} counterexamples ({t.seconds:.1f}s)")


def test_c03_pasting_law(criterion):
    bad = 0
    with Timer() as t:
        for i in range(500):
            g1, g2, k, glued = random_paste_case(derive_seed(CORPUS_SEED + 3, i))
            lhs = IntPolynomial(naive_clique_polynomial_coeffs(glued)) if glued.n <= 12 else clique_polynomial(glued)
            if lhs != pasting_polynomial(clique_polynomial(g1), clique_polynomial(g2), k):
                bad += 1
    ok = bad == 0 and t.seconds < 120
    criterion("3 pasting law", ok, f"500 pastings, {bad} mismatches ({t.seconds:.1f}s)")


def test_c04_closed_form(criterion, chordal_corpus):
    bad = 0
    with Timer() as t:
        for g, _ in chordal_corpus:
            peo = peo_or_raise(g)
            enum = clique_polynomial(g)
            if not (closed_form_clique_polynomial(clique_tree(g, peo)) == enum == fast_chordal_polynomial(g, peo)):
                bad += 1
    sizes = [g.n for g, _ in chordal_corpus]
    ok = bad == 0 and len(chordal_corpus) == 500 and max(sizes) <= 40 and t.seconds < 300
    criterion("4 closed form", ok, f"500 graphs n in [{min(sizes)},{max(sizes)}], {bad} mismatches ({t.seconds:.1f}s)")


def test_c05_multiplicity_law(criterion, chordal_corpus):
    bad = 0
    with Timer() as t:
        for g, _ in chordal_corpus:
            d = clique_tree(g, peo_or_raise(g))
            predicted = len(d.summands[0]) if len(d.summands) == 1 else min(len(s) for s in d.separators)
            if analyze_roots(clique_polynomial(g)).multiplicity_at_minus_one != predicted:
                bad += 1
    criterion("5 multiplicity law", bad == 0, f"500 graphs, {bad} exceptions ({t.seconds:.1f}s)")


def test_c06_reduction_suite(criterion):
    bad = []
    runs = 0
    with Timer() as t:
        for g in k4_free_chordal(7):
            c = clique_polynomial(g)
            for root in range(g.n):
                runs += 1
                tr = triangle_free_reduction(g, root)
                h = tr.g_tilde
                q = quadratic_factor(g.n, g.m)
                checks = (
                    not tr.violations,
                    len(naive_clique_counts(h)) < 3,
                    h.n == g.n - 1,
                    h.m == g.m - g.n + 1,
                    IntPolynomial(naive_clique_polynomial_coeffs(h)) == q == tr.q,
                    X_PLUS_ONE * q == c,
                )
                if not all(checks):
                    bad.append((g.sorted_edges(), root))
    ok = not bad and t.seconds < 300
    criterion("6 reduction suite", ok, f"{runs} (graph, root) runs, {len(bad)} failures ({t.seconds:.1f}s)")


def test_c07_turan_suite(criterion):
    bad = 0
    corpus = k4_free_chordal(7)
    with Timer() as t:
        for g in corpus:
            n, m = g.n, g.m
            disc = (n - 1) ** 2 - 4 * (m - n + 1)
            rec = turan_check(g)
            if disc < 0 or 3 * m > n * n or rec.discriminant != disc or not rec.bound_holds:
                bad += 1
    criterion("7 Turan suite", bad == 0, f"{len(corpus)} graphs, {bad} exceptions ({t.seconds:.1f}s)")


def test_c08_clique_root_existence(criterion):
    bad = []
    with Timer() as t:
        for i in range(1000):
            s = derive_seed(CORPUS_SEED + 8, i)
            n = 1 + SplitMix64(s).below(10)
            g = generate_random_connected(n, s)
            p = clique_polynomial(g)
            if not has_root_in_unit_negative_interval(p):
                bad.append(i)
            elif i < 150:
                # spot-check against an independent root finder
                if not any(-1 <= r < 0 for r in sympy_real_roots(p.coeffs)):
                    bad.append(i)
    criterion("8 clique root in [-1,0)", not bad, f"1000 graphs n<=10, {len(bad)} without a root ({t.seconds:.1f}s)")


def _resume_stable(cfg: ScanConfig, tmp_path) -> tuple[str, bool]:
    whole = run_scan(cfg).dumps()
    ck = tmp_path / f"{cfg.conjecture}.ckpt"
    assert run_scan(cfg, checkpoint=ck, checkpoint_every=37, stop_after=211) is None
    resumed = run_scan(cfg, checkpoint=ck, checkpoint_every=37).dumps()
    return whole, whole == resumed


def test_c09_conjecture_scans(criterion, tmp_path):
    notes = []
    ok = True
    with Timer() as t:
        for cfg in (ScanConfig("c1_three_trees", n_max=12, count=500), ScanConfig("c2_k5_free_mult2", count=500)):
            text, stable = _resume_stable(cfg, tmp_path)
            doc = json.loads(text)
            try:
                jsonschema.validate(doc, SCAN_REPORT_SCHEMA)
                valid = True
            except jsonschema.ValidationError:
                valid = False
            hist = doc["counts"]["mult_at_minus_one"]
            shape = doc["total_graphs"] == "500"
            if cfg.conjecture == "c2_k5_free_mult2":
                shape = shape and hist == {"2": "500"}
            ok = ok and valid and stable and shape
            notes.append(f"{cfg.conjecture}: {doc['total_graphs']} graphs, "
                         f"{len(doc['counterexamples'])} counterexamples, schema={valid}, resume={stable}")
    ok = ok and t.seconds < 600
    criterion("9 conjecture scans", ok, "; ".join(notes) + f" ({t.seconds:.1f}s)")


def test_c10_oracle_equivalence(criterion):
    bad = 0
    total = 0
    with Timer() as t:
        for n in range(0, 7):
            for g in enumerate_graphs(n):
                total += 1
                if count_cliques(g).counts != naive_clique_counts(g):
                    bad += 1
    ok = bad == 0 and total == 209 and t.seconds < 120
    criterion("10 oracle equivalence n<=6", ok, f"{total} graphs, {bad} mismatches ({t.seconds:.1f}s)")
