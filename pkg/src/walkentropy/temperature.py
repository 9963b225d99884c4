"""Locating the temperatures at which a graph's walk entropy is maximal.

The diagonal of exp(beta*A) is constant on each vertex class (identical
exact walk profiles), so maximal entropy at beta is equivalent to all
pairwise class differences vanishing there.  Differences are scanned for
sign changes on a uniform beta grid and each bracket is bisected; a root
qualifies as a maximal-entropy temperature only if the *full* diagonal
spread vanishes at it, not just the bisected pair.

Two details guard the endpoints.  As beta -> 0+ every difference tends to
0 (exp(0) = I), so the sign at the left end of the first cell is taken
from the first differing exact walk count of the pair, an integer
comparison immune to floating noise; beta = 0 itself is excluded, every
graph being trivially maximal there.  As beta -> infinity the class whose
grouped-weight vector is lexicographically largest (over distinct
eigenvalues, descending) dominates; :func:`dominance` reports that class
and a horizon beta beyond which its lead is certified by a remainder
bound, so no roots exist past it.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .entropy import relative_spread, is_entropy_maximal
from .graphs import Graph, degree_summary
from .spectral import (
    SpectralDecomposition,
    centrality_diagonal,
    eigendecompose,
    exp_eigenvalues,
)
from .walks import (
    ExactWalkTable,
    WalkRegularityVerdict,
    classes_from_table,
    closed_walk_table,
    is_walk_regular,
)

__all__ = [
    "CROSSING_SPREAD_TOL",
    "BRACKET_WIDTH",
    "CoarseGridWarning",
    "IndistinguishableClassesError",
    "CrossingReport",
    "PairwiseCrossing",
    "CrossingScan",
    "DominanceReport",
    "CounterexampleReport",
    "class_difference",
    "find_crossings",
    "dominance",
    "verify_counterexample",
]

#: A candidate root qualifies only if the relative diagonal spread is below this.
CROSSING_SPREAD_TOL = 1e-8

#: Bisection stops once the bracket is at most this wide.
BRACKET_WIDTH = 1e-12

#: Roots closer than this are reported once.
DEDUPE_TOL = 1e-9

#: |difference| below this multiple of mean f triggers the sub-grid re-scan.
REFINE_TRIGGER = 1e-6

#: Sub-grid resolution of the refinement pass, as a divisor of the grid step.
REFINE_FACTOR = 100


class CoarseGridWarning(UserWarning):
    """A sign change was found only by the sub-grid refinement pass."""


class IndistinguishableClassesError(ValueError):
    """Two distinct vertex classes have equal grouped weights within tolerance."""


@dataclass(frozen=True)
class CrossingReport:
    """A located temperature at which all diagonal entries coincide."""

    beta_star: float
    bracket: tuple[float, float]
    class_values: tuple[float, ...]  # f at each class representative
    max_spread_at_root: float  # relative spread over all vertices
    pair: tuple[int, int]  # representative vertices whose difference was bisected


@dataclass(frozen=True)
class PairwiseCrossing:
    """A pair difference root at which the other classes do not agree."""

    beta: float
    pair: tuple[int, int]
    spread: float


@dataclass(frozen=True)
class CrossingScan:
    """Result of :func:`find_crossings`.

    ``walk_regular`` is the "maximal for all beta" marker: when set, the
    crossing list is empty by construction rather than by absence of roots.
    """

    walk_regular: bool
    classes: tuple[tuple[int, ...], ...]
    crossings: tuple[CrossingReport, ...]
    pairwise_only: tuple[PairwiseCrossing, ...]
    warnings: tuple[str, ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    def as_dict(self) -> dict:
        reps = self.representatives
        return {
            "walk_regular": self.walk_regular,
            "classes": [list(c) for c in self.classes],
            "crossings": [
                {
                    "beta_star": c.beta_star,
                    "bracket_lo": c.bracket[0],
                    "bracket_hi": c.bracket[1],
                    "spread": c.max_spread_at_root,
                    "classes": [
                        {"representative": r, "f": v}
                        for r, v in zip(reps, c.class_values)
                    ],
                }
                for c in self.crossings
            ],
            "pairwise_only": [
                {"beta": p.beta, "pair": list(p.pair), "spread": p.spread}
                for p in self.pairwise_only
            ],
            "warnings": list(self.warnings),
        }


@dataclass(frozen=True)
class DominanceReport:
    """Asymptotically dominant vertex class and a certified horizon."""

    leading_class: int  # index into the class partition
    representative: int  # vertex representing the leading class
    beta_horizon: float  # beyond this beta the leading class strictly leads


@dataclass(frozen=True)
class CounterexampleReport:
    """Combined diagnostic for the 'maximal entropy without walk-regularity' test."""

    verdict: WalkRegularityVerdict
    degree_histogram: dict[int, int]
    scan: CrossingScan
    crossing_count: int
    is_counterexample: bool  # not walk-regular AND at least one crossing
    entropy_maximal_at_beta_one: bool
    crossing_bound: int  # n - 1
    within_crossing_bound: bool

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict.as_dict(),
            "degree_histogram": {str(k): v for k, v in self.degree_histogram.items()},
            "scan": self.scan.as_dict(),
            "crossing_count": self.crossing_count,
            "counterexample": self.is_counterexample,
            "entropy_maximal_at_beta_one": self.entropy_maximal_at_beta_one,
            "crossing_bound": self.crossing_bound,
            "within_crossing_bound": self.within_crossing_bound,
        }


def class_difference(
    d: SpectralDecomposition, i: int, j: int, beta: float
) -> float:
    """f_i(beta) - f_j(beta) for two vertices (typically class representatives)."""
    w = d.weights[i] - d.weights[j]
    return float(w @ exp_eigenvalues(d, beta))


def _zero_plus_sign(table: ExactWalkTable, i: int, j: int) -> int:
    """Sign of f_i - f_j as beta -> 0+, from the first differing walk count."""
    for a, b in zip(table.diag[i], table.diag[j]):
        if a != b:
            return 1 if a > b else -1
    raise ValueError(f"vertices {i} and {j} have identical walk profiles")


def _bisect(
    wdiff: np.ndarray,
    eigenvalues: np.ndarray,
    lo: float,
    hi: float,
    sign_lo: int,
    width: float,
) -> tuple[float, float]:
    """Shrink a sign-change bracket to at most ``width``."""
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        val = float(wdiff @ np.exp(mid * eigenvalues))
        if val == 0.0:
            return mid, mid
        if (1 if val > 0.0 else -1) == sign_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _scan_pair(
    d: SpectralDecomposition,
    betas: np.ndarray,
    diff: np.ndarray,
    mean_f: np.ndarray,
    sign_zero_plus: int,
    grid_step: float,
    pair: tuple[int, int],
) -> tuple[list[tuple[float, float, float, tuple[int, int]]], list[str]]:
    """Brackets and bisected roots for one class pair over the grid."""
    wdiff = d.weights[pair[0]] - d.weights[pair[1]]
    signs = np.sign(diff).astype(int)
    signs[0] = sign_zero_plus  # beta = 0 is an exact tie; use the walk-count sign

    candidates: list[tuple[float, float, float, tuple[int, int]]] = []
    notes: list[str] = []

    for t in np.nonzero(signs[1:] == 0)[0] + 1:  # exact zero on a grid node
        b = float(betas[t])
        candidates.append((b, b, b, pair))

    change = signs[:-1] * signs[1:] < 0
    for t in np.nonzero(change)[0]:
        lo, hi = _bisect(
            wdiff,
            d.eigenvalues,
            float(betas[t]),
            float(betas[t + 1]),
            int(signs[t]),
            BRACKET_WIDTH,
        )
        candidates.append((0.5 * (lo + hi), lo, hi, pair))

    # Refinement: a near-zero local minimum of |diff| without an adjacent
    # sign change may hide a closely-spaced root pair inside one cell.
    absd = np.abs(diff)
    interior = (
        (absd[1:-1] <= absd[:-2])
        & (absd[1:-1] <= absd[2:])
        & (absd[1:-1] < REFINE_TRIGGER * mean_f[1:-1])
        & ~change[:-1]
        & ~change[1:]
    )
    for t in np.nonzero(interior)[0] + 1:
        # spans the two surrounding cells; the last cell may be shorter than
        # grid_step when beta_max is not step-aligned, so interpolate rather
        # than assume a uniform width
        sub = np.linspace(float(betas[t - 1]), float(betas[t + 1]), 2 * REFINE_FACTOR + 1)
        vals = np.exp(np.outer(sub, d.eigenvalues)) @ wdiff
        sub_signs = np.sign(vals).astype(int)
        if betas[t - 1] == 0.0:
            sub_signs[0] = sign_zero_plus
        for s in np.nonzero(sub_signs[:-1] * sub_signs[1:] < 0)[0]:
            lo, hi = _bisect(
                wdiff,
                d.eigenvalues,
                float(sub[s]),
                float(sub[s + 1]),
                int(sub_signs[s]),
                BRACKET_WIDTH,
            )
            root = 0.5 * (lo + hi)
            candidates.append((root, lo, hi, pair))
            notes.append(
                f"grid step {grid_step:g} too coarse near beta={root:.9g}: "
                f"sign change of pair {pair} found only at step/{REFINE_FACTOR}"
            )
    return candidates, notes


def find_crossings(
    g: Graph,
    beta_max: float = 10.0,
    grid_step: float = 0.01,
    spread_tol: float = CROSSING_SPREAD_TOL,
) -> CrossingScan:
    """Locate every beta in (0, beta_max] at which walk entropy is maximal.

    Walk-regular graphs short-circuit to the "maximal for all beta" marker.
    Otherwise every pair of vertex-class representatives is scanned for
    sign changes of its centrality difference, each bracket is bisected to
    width <= 1e-12, and bisected roots where the remaining classes do not
    agree are reported separately as pairwise-only crossings.  Roots the
    main grid missed but the refinement pass caught are accompanied by a
    :class:`CoarseGridWarning`.
    """
    if beta_max <= 0:
        raise ValueError(f"beta_max must be positive, got {beta_max}")
    if grid_step <= 0:
        raise ValueError(f"grid_step must be positive, got {grid_step}")

    table = closed_walk_table(g, max(1, g.n - 1))
    classes = classes_from_table(table)
    if len(classes) == 1:
        return CrossingScan(True, classes, (), (), ())

    d = eigendecompose(g)
    exp_eigenvalues(d, beta_max)  # fail fast on overflow before scanning
    reps = [c[0] for c in classes]

    steps = int(math.floor(beta_max / grid_step + 1e-9))
    betas = grid_step * np.arange(steps + 1)
    if betas[-1] < beta_max - 1e-12 * max(1.0, beta_max):
        betas = np.append(betas, beta_max)

    exps = np.exp(np.outer(betas, d.eigenvalues))  # (grid, n)
    f_reps = exps @ d.weights[reps].T  # (grid, classes)
    mean_f = exps.sum(axis=1) / g.n  # trace / n on the grid

    candidates: list[tuple[float, float, float, tuple[int, int]]] = []
    notes: list[str] = []
    for a in range(len(reps)):
        for b in range(a + 1, len(reps)):
            pair = (reps[a], reps[b])
            cand, pair_notes = _scan_pair(
                d,
                betas,
                f_reps[:, a] - f_reps[:, b],
                mean_f,
                _zero_plus_sign(table, *pair),
                grid_step,
                pair,
            )
            candidates.extend(cand)
            notes.extend(pair_notes)

    for note in notes:
        warnings.warn(note, CoarseGridWarning, stacklevel=2)

    candidates.sort(key=lambda c: c[0])
    merged: list[tuple[float, float, float, tuple[int, int]]] = []
    for cand in candidates:
        if merged and cand[0] - merged[-1][0] <= DEDUPE_TOL:
            continue
        merged.append(cand)

    crossings: list[CrossingReport] = []
    pairwise: list[PairwiseCrossing] = []
    for beta_star, lo, hi, pair in merged:
        cd = centrality_diagonal(d, beta_star)
        spread = relative_spread(cd.values)
        if spread <= spread_tol:
            crossings.append(
                CrossingReport(
                    beta_star=beta_star,
                    bracket=(lo, hi),
                    class_values=tuple(float(cd.values[r]) for r in reps),
                    max_spread_at_root=spread,
                    pair=pair,
                )
            )
        else:
            pairwise.append(PairwiseCrossing(beta_star, pair, spread))

    return CrossingScan(False, classes, tuple(crossings), tuple(pairwise), tuple(notes))


def _lex_compare(x: np.ndarray, y: np.ndarray, tol: float) -> int:
    """Lexicographic comparison treating entries within ``tol`` as equal."""
    for a, b in zip(x, y):
        if abs(a - b) > tol:
            return 1 if a > b else -1
    return 0


def _logsumexp(values: np.ndarray) -> float:
    if values.size == 0:
        return -math.inf
    m = float(values.max())
    return m + math.log(float(np.exp(values - m).sum()))


def _log_centrality(row: np.ndarray, lam_hat: np.ndarray, beta: float) -> float:
    mask = row > 0.0
    return _logsumexp(np.log(row[mask]) + beta * lam_hat[mask])


def _certified_lead(
    lead_row: np.ndarray,
    other_row: np.ndarray,
    lam_hat: np.ndarray,
    beta: float,
    tol: float,
) -> bool:
    """Leader strictly ahead at beta, with the tail unable to overturn the gap."""
    delta = lead_row - other_row
    over = np.nonzero(np.abs(delta) > tol)[0]
    if over.size == 0:
        raise IndistinguishableClassesError(
            "grouped weights coincide within tolerance"
        )
    j0 = int(over[0])
    gap_log = math.log(delta[j0]) + beta * lam_hat[j0]
    tail = delta[j0 + 1 :]
    nz = np.nonzero(tail != 0.0)[0] + j0 + 1
    tail_log = _logsumexp(np.log(np.abs(delta[nz])) + beta * lam_hat[nz])
    if gap_log <= tail_log:
        return False
    return _log_centrality(lead_row, lam_hat, beta) > _log_centrality(
        other_row, lam_hat, beta
    )


def dominance(
    d: SpectralDecomposition,
    classes: Sequence[Sequence[int]],
    tol: float = 1e-10,
) -> DominanceReport:
    """Identify the class whose centrality dominates as beta -> infinity.

    Grouped-weight rows (over distinct eigenvalues, descending) are compared
    lexicographically; the largest row wins because its first differing
    coefficient multiplies the fastest-growing exponential.  The horizon
    doubles geometrically from 1 until, for every other class, the leader
    is strictly ahead and the first differing term alone exceeds the sum of
    all later terms (checked in log space, so no overflow).

    Raises :class:`IndistinguishableClassesError` when two distinct classes
    have grouped weights equal within ``tol``: genuinely distinct classes
    always differ, so this flags a clustering-tolerance problem.
    """
    reps = [c[0] for c in classes]
    if not reps:
        raise ValueError("need at least one vertex class")
    rows = d.grouped_weights[reps]
    lead = 0
    for c in range(1, len(reps)):
        cmp = _lex_compare(rows[c], rows[lead], tol)
        if cmp == 0:
            raise IndistinguishableClassesError(
                f"classes with representatives {reps[c]} and {reps[lead]} are "
                f"indistinguishable at spectral tolerance {tol:g}"
            )
        if cmp > 0:
            lead = c
    if len(reps) == 1:
        return DominanceReport(0, reps[0], 0.0)

    lam_hat = d.distinct_eigenvalues
    beta = 1.0
    while not all(
        _certified_lead(rows[lead], rows[c], lam_hat, beta, tol)
        for c in range(len(reps))
        if c != lead
    ):
        beta *= 2.0
        if beta > 2.0**60:
            raise RuntimeError("dominance horizon search did not terminate")
    return DominanceReport(lead, reps[lead], beta)


def verify_counterexample(
    g: Graph,
    beta_max: float = 10.0,
    grid_step: float = 0.01,
    spread_tol: float = CROSSING_SPREAD_TOL,
    beta_one_tol: float = 1e-10,
) -> CounterexampleReport:
    """Full diagnostic: exact walk-regularity, crossings, and conjecture checks.

    A graph "is a counterexample" when it is not walk-regular yet attains
    maximal walk entropy at some located beta > 0.  The report also records
    whether entropy is maximal at beta = 1 and whether the number of located
    crossings stays within n - 1, the two open conjectures worth tracking.
    """
    verdict = is_walk_regular(g)
    scan = find_crossings(g, beta_max, grid_step, spread_tol)
    d = eigendecompose(g)
    count = len(scan.crossings)
    return CounterexampleReport(
        verdict=verdict,
        degree_histogram=degree_summary(g).histogram,
        scan=scan,
        crossing_count=count,
        is_counterexample=(not verdict.is_walk_regular) and count >= 1,
        entropy_maximal_at_beta_one=is_entropy_maximal(d, 1.0, beta_one_tol),
        crossing_bound=g.n - 1,
        within_crossing_bound=count <= g.n - 1,
    )
