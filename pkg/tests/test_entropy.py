"""Walk entropy, the maximality predicate, and the scan serialization."""

import math

import numpy as np
import pytest

from walkentropy.entropy import (
    entropy_from_diagonal,
    entropy_scan,
    is_entropy_maximal,
    relative_spread,
    scan_csv_lines,
    walk_entropy,
)
from walkentropy.graphs import complete_graph, hm_graph, star_graph
from walkentropy.spectral import (
    CentralityOverflowError,
    centrality_diagonal,
    eigendecompose,
    taylor_diagonal_oracle,
)
from walkentropy.walks import is_walk_regular, vertex_classes

SAMPLED_BETAS = (0.1, 0.5, 1.0, 2.0, 5.0)

# located in test_temperature at bracket width 1e-12; used here only to
# probe the entropy surface near its maxima
H4_ROOTS = (0.499001412933, 1.912023505180)


class TestWalkEntropy:
    def test_complete_graph_flat_at_log_n(self):
        d = eigendecompose(complete_graph(4))
        for beta in SAMPLED_BETAS:
            report = walk_entropy(d, beta)
            assert report.entropy == pytest.approx(math.log(4), abs=1e-12)
            assert report.is_maximal

    def test_beta_zero_uniform(self, corpus):
        for g in corpus[:25]:
            report = walk_entropy(eigendecompose(g), 0.0)
            assert report.entropy == pytest.approx(math.log(g.n), abs=1e-12)
            assert report.is_maximal
            assert report.deficit >= -1e-12

    def test_star_at_beta_one_below_maximum(self):
        g = star_graph(3)
        report = walk_entropy(eigendecompose(g), 1.0)
        assert report.entropy < math.log(4) - 1e-3
        # independent route: entropy from the exact-walk Taylor diagonal
        oracle = entropy_from_diagonal(taylor_diagonal_oracle(g, 1.0))
        assert oracle.entropy == pytest.approx(report.entropy, abs=1e-9)

    def test_bounds_on_corpus(self, corpus):
        for g in corpus[:60]:
            d = eigendecompose(g)
            for beta in SAMPLED_BETAS:
                report = walk_entropy(d, beta)
                assert 0.0 <= report.entropy <= math.log(g.n) + 1e-12
                assert report.probabilities.sum() == pytest.approx(1.0, abs=1e-12)
                assert report.deficit >= -1e-12

    def test_walk_regular_attains_maximum(self, corpus):
        for g in corpus:
            if not is_walk_regular(g).is_walk_regular:
                continue
            d = eigendecompose(g)
            for beta in SAMPLED_BETAS:
                report = walk_entropy(d, beta)
                assert report.deficit == pytest.approx(0.0, abs=1e-12)
                assert report.is_maximal

    def test_entropy_agrees_across_routes(self, corpus):
        for g in corpus[:40]:
            d = eigendecompose(g)
            for beta in (0.25, 1.0, 2.0):
                spectral = walk_entropy(d, beta)
                oracle = entropy_from_diagonal(taylor_diagonal_oracle(g, beta))
                assert oracle.entropy == pytest.approx(spectral.entropy, abs=1e-9)

    def test_negative_beta_rejected(self):
        with pytest.raises(ValueError):
            walk_entropy(eigendecompose(complete_graph(3)), -0.5)


class TestIsEntropyMaximal:
    def test_h4_at_crossing(self):
        d = eigendecompose(hm_graph(4))
        assert is_entropy_maximal(d, H4_ROOTS[0], tol=1e-8)
        assert is_entropy_maximal(d, H4_ROOTS[1], tol=1e-8)

    def test_h4_at_beta_one(self):
        d = eigendecompose(hm_graph(4))
        assert not is_entropy_maximal(d, 1.0)
        cd = centrality_diagonal(d, 1.0)
        assert cd.values.max() - cd.values.min() == pytest.approx(0.6937, abs=1e-3)

    def test_complete_graphs_always_maximal(self):
        for n in (2, 4, 7):
            d = eigendecompose(complete_graph(n))
            for beta in SAMPLED_BETAS:
                assert is_entropy_maximal(d, beta)

    def test_spread_criterion_not_entropy_value(self):
        # decided on the diagonal spread: a spread just above tolerance must
        # flip the verdict even though the entropy deficit is quadratically small
        d = eigendecompose(hm_graph(4))
        beta = H4_ROOTS[0] + 1e-4
        report = walk_entropy(d, beta, tol=1e-8)
        assert not report.is_maximal
        assert report.deficit < 1e-9

    def test_tolerance_must_be_positive(self):
        with pytest.raises(ValueError):
            is_entropy_maximal(eigendecompose(complete_graph(3)), 1.0, tol=0.0)


class TestEntropyScan:
    def test_h4_deficit_dips_only_near_roots(self):
        d = eigendecompose(hm_graph(4))
        reports = entropy_scan(d, 0.0, 3.0, 0.01)
        assert len(reports) == 301
        for report in reports:
            near_root = min(abs(report.beta - r) for r in H4_ROOTS) <= 0.02
            if report.beta == 0.0 or near_root:
                continue
            # smallest deficit away from the roots is ~1.7e-10 (at beta=0.01)
            assert report.deficit > 5e-11
        for root in H4_ROOTS:
            nearest = min(reports, key=lambda r: abs(r.beta - root))
            assert nearest.deficit < 1e-6

    def test_k2_flat_scan(self):
        reports = entropy_scan(eigendecompose(complete_graph(2)), 0.0, 1.0, 0.5)
        assert [r.beta for r in reports] == [0.0, 0.5, 1.0]
        for r in reports:
            assert r.entropy == pytest.approx(math.log(2), abs=1e-12)

    def test_degenerate_range_single_report(self):
        reports = entropy_scan(eigendecompose(complete_graph(3)), 0.5, 0.5, 1.0)
        assert len(reports) == 1
        assert reports[0].beta == 0.5

    def test_invalid_ranges(self):
        d = eigendecompose(complete_graph(3))
        with pytest.raises(ValueError):
            entropy_scan(d, -1.0, 2.0, 0.1)
        with pytest.raises(ValueError):
            entropy_scan(d, 2.0, 1.0, 0.1)
        with pytest.raises(ValueError):
            entropy_scan(d, 0.0, 1.0, 0.0)

    def test_overflow_names_the_offending_beta(self):
        d = eigendecompose(hm_graph(4))
        with pytest.raises(CentralityOverflowError, match="beta=199"):
            entropy_scan(d, 199.0, 201.0, 1.0)


class TestScanCsv:
    def test_column_order_and_formatting(self):
        g = hm_graph(4)
        d = eigendecompose(g)
        reps = [c[0] for c in vertex_classes(g)]
        lines = scan_csv_lines(entropy_scan(d, 0.0, 0.02, 0.01), reps)
        assert lines[0] == "beta,entropy,max_entropy,deficit,spread,f_v0,f_v4"
        assert len(lines) == 4
        row = lines[2].split(",")
        assert float(row[0]) == 0.01
        # the representative columns carry f, not probabilities
        assert float(row[5]) == pytest.approx(1.00025, abs=1e-4)

    def test_round_trips_at_twelve_digits(self):
        g = star_graph(3)
        d = eigendecompose(g)
        reps = [c[0] for c in vertex_classes(g)]
        lines = scan_csv_lines(entropy_scan(d, 0.0, 1.0, 0.25), reps)
        for line in lines[1:]:
            cells = [float(c) for c in line.split(",")]
            assert len(cells) == 5 + len(reps)


def test_relative_spread_constant_vector():
    assert relative_spread(np.ones(5)) == 0.0
