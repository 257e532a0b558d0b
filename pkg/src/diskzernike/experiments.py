"""Projection-error sharpness experiments and rate sweeps.

The sharpness family ``t(alpha, l, j)`` is an (l+1)-mode polynomial on the
diagonal m = n whose projection residual past degree N = 2j + 2l - 1 is a
single mode. Seminorm ratios of residual to polynomial, tracked over a
geometric sequence of j, expose the power of N in the projection error
bounds. Everything here runs in coefficient space.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .basis import WirtingerDirection, change_parameter, series_expansion, to_parameter
from .calculus import (
    SeminormConvention,
    norm_sq,
    sobolev_norm_sq,
    sobolev_seminorm_sq,
    wirtinger_derivative,
)
from .core import ZernikePoly, check_alpha, mode_norm_sq_array
from .errors import ArgumentError
from .projection import expand_function, residual, residual_norm_quadrature
from .quadrature import rule_for_degree
from .special import LogScaled, gamma_ratio, log_gamma_shift, pochhammer


# --------------------------------------------------------------------------
# The sharpness family and closed forms
# --------------------------------------------------------------------------


def _check_lj(l: int, j: int) -> None:
    if l < 1:
        raise ArgumentError(f"l must be a positive integer, got {l!r}")
    if j < l:
        raise ArgumentError(f"need j >= l, got j={j}, l={l}")


def truncation_degree(l: int, j: int) -> int:
    return 2 * j + 2 * l - 1


def build_t(alpha: float, l: int, j: int) -> ZernikePoly:
    """The sharpness polynomial, supported on modes (j+l-k, j+l-k), k = 0..l."""
    alpha = check_alpha(alpha)
    _check_lj(l, j)
    ms, cs = [], []
    for k in range(l + 1):
        top = j + l - k
        coeff = (
            pochhammer(-l, k)
            * LogScaled(1, 2 * log_gamma_shift(top + 1, alpha))
            * LogScaled.from_float(alpha + 2 * top + 1)
            / gamma_ratio(k + 1, 1.0)
            / pochhammer(alpha + 2 * j + l - k + 1, l + 1)
        )
        ms.append(top)
        cs.append(float(coeff))
    return ZernikePoly(alpha, ms, ms, cs)


def sharpness_residual(alpha: float, l: int, j: int):
    """``(N, t - truncate(t, N))`` with N = 2j + 2l - 1."""
    t = build_t(alpha, l, j)
    N = truncation_degree(l, j)
    return N, residual(t, N)


def closed_form_R_L2(alpha: float, l: int, j: int) -> float:
    """Squared weighted L2 norm of the sharpness residual."""
    alpha = check_alpha(alpha)
    _check_lj(l, j)
    log_val = (
        math.log(math.pi)
        + 2 * math.lgamma(alpha + 1)
        - math.log(2 * j + 2 * l + alpha + 1)
        + 2 * log_gamma_shift(j + l + 1, alpha)
        - 2 * log_gamma_shift(alpha + 2 * j + l + 1, l)
    )
    return math.exp(log_val)


def closed_form_R_H1(alpha: float, l: int, j: int) -> float:
    """Squared first-order (Cartesian) seminorm of the sharpness residual."""
    alpha = check_alpha(alpha)
    _check_lj(l, j)
    log_val = (
        math.log(4 * math.pi)
        + 2 * math.lgamma(alpha + 1)
        + 2 * log_gamma_shift(j + l + 1, alpha)
        + 2 * math.log(alpha + 2 * j + 2 * l + 1)
        + math.log(j + l)
        + math.log(alpha + j + l + 1)
        - math.log(alpha + 1)
        - 2 * pochhammer(alpha + 2 * j + l + 1, l + 1).logmag
    )
    return math.exp(log_val)


def closed_form_t_seminorm_complex(alpha: float, l: int, j: int) -> float:
    """Order-l ComplexPair seminorm squared of the sharpness polynomial."""
    alpha = check_alpha(alpha)
    _check_lj(l, j)
    terms = [
        log_gamma_shift(j + l - q + 1, alpha)
        + log_gamma_shift(j + q + 1, alpha)
        for q in range(l + 1)
    ]
    top = max(terms)
    log_sum = top + math.log(sum(math.exp(x - top) for x in terms))
    log_val = (
        math.log(math.pi)
        + 2 * math.lgamma(alpha + 1)
        - math.log(2 * j + l + alpha + 1)
        + log_sum
    )
    return math.exp(log_val)


def reference_exponent(l: int, r: float) -> float:
    """Predicted power of N for the order-r error of an order-l function."""
    if r < 0 or r > l:
        raise ArgumentError(f"need 0 <= r <= l, got r={r}, l={l}")
    if r <= 1:
        return 1.5 * r - l
    return -0.5 + 2 * r - l


# --------------------------------------------------------------------------
# Rate tables
# --------------------------------------------------------------------------


@dataclass
class RateRow:
    N: int
    j: int
    rat: list
    egr: list = field(default_factory=list)


@dataclass
class RateTable:
    alpha: float
    l: int
    convention: str
    use_norms: bool
    rows: list

    def column(self, name: str, r: int) -> np.ndarray:
        return np.array([getattr(row, name)[r] for row in self.rows], dtype=float)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["N"]
        for r in range(self.l + 1):
            header += [f"rat{r}", f"egr{r}"]
        writer.writerow(header)
        for row in self.rows:
            cells = [str(row.N)]
            for r in range(self.l + 1):
                egr = row.egr[r]
                cells += [repr(row.rat[r]), "" if egr is None else repr(egr)]
            writer.writerow(cells)
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def default_j_list(l: int = 3, count: int = 12) -> list:
    """j = l + 2**i for i = 1..count; for l = 3 this gives N = 15, 19, 27, ..., 8203."""
    return [l + 2 ** i for i in range(1, count + 1)]


def growth_rate(rat: float, rat_prev: float, N: int, N_prev: int) -> float:
    return math.log(rat / rat_prev) / math.log(N / N_prev)


def _seminorm_ratios(alpha: float, l: int, j: int, convention: SeminormConvention,
                     use_norms: bool) -> list:
    N, R = sharpness_residual(alpha, l, j)
    t = build_t(alpha, l, j)
    measure = sobolev_norm_sq if use_norms else sobolev_seminorm_sq
    denom = measure(t, l, convention)
    return [math.sqrt(measure(R, r, convention) / denom) for r in range(l + 1)]


def rate_table(alpha: float, l: int, j_list: Sequence[int],
               convention: SeminormConvention = SeminormConvention.Cartesian,
               use_norms: bool = False, workers: int = 1) -> RateTable:
    """Seminorm ratios |R|_r / |t|_l and their growth rates in N for each j."""
    alpha = check_alpha(alpha)
    convention = SeminormConvention(convention)
    j_list = [int(j) for j in j_list]
    for j in j_list:
        _check_lj(l, j)
    if any(b <= a for a, b in zip(j_list, j_list[1:])):
        raise ArgumentError("j_list must be strictly increasing")

    def row(j):
        return _seminorm_ratios(alpha, l, j, convention, use_norms)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rats = list(pool.map(row, j_list))
    else:
        rats = [row(j) for j in j_list]

    rows = []
    for i, (j, rat) in enumerate(zip(j_list, rats)):
        N = truncation_degree(l, j)
        if i == 0:
            egr = [None] * (l + 1)
        else:
            prev = rows[-1]
            egr = [growth_rate(rat[r], prev.rat[r], N, prev.N) for r in range(l + 1)]
        rows.append(RateRow(N=N, j=j, rat=rat, egr=egr))
    return RateTable(alpha=alpha, l=l, convention=convention.value,
                     use_norms=use_norms, rows=rows)


def fitted_growth_rate(table: RateTable, r: int, last: int = 3) -> float:
    """Least-squares slope of log rat_r against log N over the last ``last`` rows."""
    rows = table.rows[-last:]
    x = np.log([row.N for row in rows])
    y = np.log([row.rat[r] for row in rows])
    return float(np.polyfit(x, y, 1)[0])


# Reference values for alpha = 9.9, l = 3 under the default j list:
# N -> (rat_0..rat_3, egr_0..egr_3), egr None on the first row.
REFERENCE_ALPHA = 9.9
REFERENCE_L = 3
REFERENCE_ROWS = {
    15: ((3.11e-05, 1.20e-03, 4.55e-02, 1.61e+00), None),
    19: ((1.66e-05, 8.06e-04, 4.06e-02, 1.96e+00), (-2.665, -1.687, -0.480, 0.820)),
    27: ((6.29e-06, 4.44e-04, 3.57e-02, 2.83e+00), (-2.754, -1.698, -0.369, 1.041)),
    43: ((1.67e-06, 2.02e-04, 3.25e-02, 5.28e+00), (-2.847, -1.692, -0.205, 1.342)),
    75: ((3.29e-07, 8.02e-05, 3.23e-02, 1.34e+01), (-2.921, -1.661, -0.008, 1.677)),
    139: ((5.29e-08, 2.96e-05, 3.60e-02, 4.54e+01), (-2.965, -1.615, 0.174, 1.977)),
    267: ((7.53e-09, 1.06e-05, 4.41e-02, 1.91e+02), (-2.986, -1.571, 0.311, 2.197)),
    523: ((1.01e-09, 3.77e-06, 5.75e-02, 9.17e+02), (-2.994, -1.540, 0.397, 2.336)),
    1035: ((1.30e-10, 1.33e-06, 7.80e-02, 4.76e+03), (-2.997, -1.522, 0.446, 2.414)),
    2059: ((1.65e-11, 4.72e-07, 1.08e-01, 2.58e+04), (-2.999, -1.511, 0.472, 2.456)),
    4107: ((2.08e-12, 1.67e-07, 1.51e-01, 1.43e+05), (-2.999, -1.506, 0.486, 2.478)),
    8203: ((2.61e-13, 5.90e-08, 2.12e-01, 7.99e+05), (-3.000, -1.503, 0.493, 2.489)),
}
RAT_RTOL = 5e-3
EGR_ATOL = 2e-3


@dataclass
class ReferenceComparison:
    convention: str
    max_rat_rel_error: float
    max_egr_abs_error: float
    rows_checked: int
    rounding_mismatches: int


    @property
    def matches(self) -> bool:
        return (
            self.rows_checked == len(REFERENCE_ROWS)
            and self.max_rat_rel_error <= RAT_RTOL
            and self.max_egr_abs_error <= EGR_ATOL
        )


def compare_with_reference(table: RateTable) -> ReferenceComparison:
    """Worst deviations of ``table`` from the reference alpha = 9.9, l = 3 values."""
    rat_err = 0.0
    egr_err = 0.0
    checked = 0
    mismatches = 0
    for row in table.rows:
        if row.N not in REFERENCE_ROWS:
            continue
        checked += 1
        ref_rat, ref_egr = REFERENCE_ROWS[row.N]
        for r in range(4):
            rat_err = max(rat_err, abs(row.rat[r] - ref_rat[r]) / abs(ref_rat[r]))
            # the reference values carry three significant figures
            mismatches += float(f"{row.rat[r]:.2e}") != ref_rat[r]
            if ref_egr is not None:
                egr_err = max(egr_err, abs(row.egr[r] - ref_egr[r]))
    return ReferenceComparison(table.convention, rat_err, egr_err, checked, mismatches)


def reproduce_reference(workers: int = 1):
    """Run both conventions on the reference configuration.

    Returns ``{convention: (table, comparison)}``.
    """
    out = {}
    for conv in SeminormConvention:
        table = rate_table(REFERENCE_ALPHA, REFERENCE_L, default_j_list(REFERENCE_L),
                           conv, workers=workers)
        out[conv.value] = (table, compare_with_reference(table))
    return out


def plot_data(table: RateTable) -> list:
    """Rows of (N, rat_0..rat_l, ref_0..ref_l) for log-log plotting.

    ``ref_r`` is C * N**e(l, r) with C chosen so it meets rat_r at the last row.
    """
    last = table.rows[-1]
    exps = [reference_exponent(table.l, r) for r in range(table.l + 1)]
    out = []
    for row in table.rows:
        refs = [last.rat[r] * (row.N / last.N) ** exps[r] for r in range(table.l + 1)]
        out.append([row.N, *row.rat, *refs])
    return out


def plot_data_csv(table: RateTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["N"] + [f"rat{r}" for r in range(table.l + 1)]
    header += [f"ref{r}" for r in range(table.l + 1)]
    writer.writerow(header)
    for row in plot_data(table):
        writer.writerow([str(row[0])] + [repr(float(x)) for x in row[1:]])
    return buf.getvalue()


# --------------------------------------------------------------------------
# L2 projection rates
# --------------------------------------------------------------------------


def _inv_fact2(a, b, scale=0.5):
    # scale**(a+b) / (a! b!) without overflowing for large a, b
    return math.exp((a + b) * math.log(scale) - math.lgamma(a + 1) - math.lgamma(b + 1))


def _exp_x1_weight(a, b):
    # exp(x1) = exp((z + conj z) / 2)
    return _inv_fact2(a, b)


def _exp_x2_weight(a, b):
    # exp(x2) = exp((z - conj z) / (2i)), so the z^a conj(z)^b term carries (-i)^a i^b
    return _inv_fact2(a, b) * (1j) ** ((b - a) % 4)


def _gaussian_weight(a, b):
    # exp(-|x|^2) = exp(-z conj z)
    if a != b:
        return 0.0
    return (-1.0) ** a * math.exp(-math.lgamma(a + 1))


NAMED_FUNCTIONS = {
    "exp_x1": (lambda x1, x2: np.exp(x1), _exp_x1_weight),
    "exp_x2": (lambda x1, x2: np.exp(x2), _exp_x2_weight),
    "gaussian": (lambda x1, x2: np.exp(-(x1 * x1 + x2 * x2)), _gaussian_weight),
}

# extra series degrees beyond the largest N; the factorial tail past this is
# far below double precision relative to the smallest residual of interest
SERIES_EXTRA_DEGREE = 40
# extra exactness degrees for the quadrature path
QUADRATURE_OVERSAMPLE = 40


@dataclass
class RateSweep:
    u_spec: str
    alpha: float
    k: int
    method: str
    degrees: list
    errors: list
    local_slopes: list
    scaled_errors: list
    fitted_slope: float

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["N", "error", "local_slope", "scaled_error"])
        for N, e, s, c in zip(self.degrees, self.errors, self.local_slopes, self.scaled_errors):
            writer.writerow([N, repr(e), "" if s is None else repr(s), repr(c)])
        return buf.getvalue()


def named_function_series(name: str, alpha: float, max_degree: int) -> ZernikePoly:
    """Coefficient-space expansion of a named function up to ``max_degree``."""
    if name not in NAMED_FUNCTIONS:
        raise ArgumentError(f"unknown function {name!r}; choose from {sorted(NAMED_FUNCTIONS)}")
    return series_expansion(alpha, NAMED_FUNCTIONS[name][1], max_degree)


def l2_rate_sweep(u_spec, alpha: float, k: int, degrees: Sequence[int],
                  method: str = "series") -> RateSweep:
    """Weighted L2 projection error of ``u_spec`` for each N in ``degrees``.

    ``u_spec`` is a :class:`ZernikePoly`, a name from :data:`NAMED_FUNCTIONS`,
    or ``"sharpness"`` (the sharpness family with l = k; each N must equal
    2j + 2k - 1, and the error is normalized by the order-k ComplexPair
    seminorm of t). Named functions use an exact coefficient series by
    default or, with ``method="quadrature"``, quadrature for both the
    coefficients and the residual.
    """
    alpha = check_alpha(alpha)
    degrees = [int(N) for N in degrees]
    if isinstance(u_spec, ZernikePoly):
        u = to_parameter(u_spec, alpha)
        errors = [math.sqrt(norm_sq(residual(u, N))) for N in degrees]
        label = "polynomial"
    elif u_spec == "sharpness":
        errors = []
        for N in degrees:
            if (N + 1) % 2 or (N + 1) // 2 - k < k:
                raise ArgumentError(f"N={N} is not a truncation degree 2j+2k-1 with j >= k")
            j = (N + 1) // 2 - k
            _, R = sharpness_residual(alpha, k, j)
            t = build_t(alpha, k, j)
            errors.append(math.sqrt(norm_sq(R) / sobolev_seminorm_sq(
                t, k, SeminormConvention.ComplexPair)))
        label = "sharpness"
    elif method == "series":
        u = named_function_series(u_spec, alpha, max(degrees) + SERIES_EXTRA_DEGREE)
        errors = [math.sqrt(norm_sq(residual(u, N))) for N in degrees]
        label = u_spec
    elif method == "quadrature":
        if u_spec not in NAMED_FUNCTIONS:
            raise ArgumentError(f"unknown function {u_spec!r}")
        f = NAMED_FUNCTIONS[u_spec][0]
        errors = []
        for N in degrees:
            # f is not a polynomial: a rule that is merely exact to degree 2N
            # aliases its higher frequencies into the kept modes, so oversample
            rule = rule_for_degree(alpha, 2 * N + QUADRATURE_OVERSAMPLE)
            proj = expand_function(f, alpha, N, rule)
            errors.append(residual_norm_quadrature(f, proj, rule))
        label = u_spec
    else:
        raise ArgumentError(f"unknown method {method!r}")

    slopes = [None]
    for i in range(1, len(degrees)):
        slopes.append(
            math.log(errors[i] / errors[i - 1]) / math.log((degrees[i] + 1) / (degrees[i - 1] + 1))
            if errors[i] > 0 and errors[i - 1] > 0 else None
        )
    positive = [(N, e) for N, e in zip(degrees, errors) if e > 0]
    if len(positive) >= 2:
        fit = float(np.polyfit(np.log([N + 1 for N, _ in positive]),
                               np.log([e for _, e in positive]), 1)[0])
    else:
        fit = float("nan")
    scaled = [e * (N + 1) ** k for N, e in zip(degrees, errors)]
    return RateSweep(label, alpha, k, method, degrees, errors, slopes, scaled, fit)


# --------------------------------------------------------------------------
# Markov inequality sweep
# --------------------------------------------------------------------------


@dataclass
class MarkovReport:
    alpha: float
    max_degree: int
    trials: int
    seed: int
    max_ratio: float
    argmax_degree: int
    bernstein_holds: bool
    degrees: list = field(repr=False)
    ratios: list = field(repr=False)

    def max_by_degree(self) -> dict:
        out = {}
        for N, r in zip(self.degrees, self.ratios):
            out[N] = max(out.get(N, 0.0), r)
        return dict(sorted(out.items()))

    def to_json(self) -> str:
        return json.dumps({
            "alpha": self.alpha, "max_degree": self.max_degree, "trials": self.trials,
            "seed": self.seed, "max_ratio": self.max_ratio,
            "argmax_degree": self.argmax_degree, "bernstein_holds": self.bernstein_holds,
            "max_by_degree": {str(k): v for k, v in self.max_by_degree().items()},
        }, indent=2)


def _modes_up_to(degree: int):
    ms, ns = [], []
    for d in range(degree + 1):
        for m in range(d + 1):
            ms.append(m)
            ns.append(d - m)
    return np.array(ms, dtype=np.int64), np.array(ns, dtype=np.int64)


def random_poly(rng: np.random.Generator, alpha: float, degree: int) -> ZernikePoly:
    """Random polynomial of exact degree ``degree``.

    Coefficients are standard complex normals in the orthonormalized basis,
    i.e. c = g / sqrt(h), so every mode carries comparable weight.
    """
    ms, ns = _modes_up_to(degree)
    g = rng.standard_normal(ms.size) + 1j * rng.standard_normal(ms.size)
    return ZernikePoly(alpha, ms, ns, g / np.sqrt(mode_norm_sq_array(alpha, ms, ns)))


def markov_ratio(p: ZernikePoly) -> float:
    """||grad p|| / (N^2 ||p||), both norms with the weight of ``p``'s own parameter."""
    N = p.degree
    if N == 0:
        return 0.0
    a = p.alpha
    dz = wirtinger_derivative(p, WirtingerDirection.Dz)
    dzs = wirtinger_derivative(p, WirtingerDirection.Dzstar)
    grad = 2.0 * (norm_sq(change_parameter(dz, a)) + norm_sq(change_parameter(dzs, a)))
    return math.sqrt(grad / norm_sq(p)) / N ** 2


class _GradientOperator:
    """Dense maps from the coefficients of degree-<=N polynomials to the
    parameter-alpha coefficients of dz p and dz* p, plus the norms needed to
    evaluate Markov ratios and the Bernstein bound for many polynomials at once.
    """

    def __init__(self, alpha: float, degree: int):
        from .basis import _log_leading_coefficient
        from .kernels import connection_terms

        ms, ns = _modes_up_to(degree)
        self.h = mode_norm_sq_array(alpha, ms, ns)
        self.maps = []
        self.upper = []
        index = {(int(m), int(n)): i for i, (m, n) in enumerate(zip(ms, ns))}
        mf, nf = ms.astype(float), ns.astype(float)
        for direction in WirtingerDirection:
            if direction is WirtingerDirection.Dz:
                keep = ms > 0
                factor = mf * (nf + alpha + 1) / (alpha + 1)
                dm, dn = ms[keep] - 1, ns[keep]
            else:
                keep = ns > 0
                factor = (mf + alpha + 1) * nf / (alpha + 1)
                dm, dn = ms[keep], ns[keep] - 1
            src = np.flatnonzero(keep)
            # ||d p||^2 in the alpha + 1 weight, already diagonal
            self.upper.append((src, factor[keep] ** 2 * mode_norm_sq_array(alpha + 1, dm, dn)))
            logc0 = _log_leading_coefficient(dm, dn, alpha + 1, alpha)
            om, on, w = connection_terms(dm, dn, np.ones(dm.size, complex), logc0,
                                         alpha + 1, alpha)
            rows = np.repeat(src, np.minimum(dm, dn) + 1)
            dst = np.array([index[(int(a), int(b))] for a, b in zip(om, on)], dtype=np.int64)
            A = np.zeros((ms.size, ms.size))
            np.add.at(A, (dst, rows), w.real * factor[rows])
            self.maps.append(A)

    def evaluate(self, coeffs: np.ndarray):
        """``(grad_sq_alpha, grad_sq_alpha_plus_one, norm_sq)`` per row of ``coeffs``."""
        norm = np.abs(coeffs) ** 2 @ self.h
        grad = np.zeros(coeffs.shape[0])
        grad_up = np.zeros(coeffs.shape[0])
        for A, (src, hu) in zip(self.maps, self.upper):
            grad += np.abs(coeffs @ A.T) ** 2 @ self.h
            grad_up += np.abs(coeffs[:, src]) ** 2 @ hu
        return 2.0 * grad, 2.0 * grad_up, norm


def markov_sweep(alpha: float, max_degree: int = 40, trials: int = 1000,
                 seed: int = 42) -> MarkovReport:
    """Random-polynomial sweep of the Markov ratio; also checks the Bernstein bound.

    Polynomials come from :func:`random_poly` with degrees uniform on
    1..max_degree. Trials of equal degree are evaluated together through a
    precomputed linear operator; :func:`markov_ratio` is the per-polynomial
    equivalent.
    """
    alpha = check_alpha(alpha)
    if max_degree < 1 or trials < 1:
        raise ArgumentError("need max_degree >= 1 and trials >= 1")
    rng = np.random.default_rng(seed)
    degrees = rng.integers(1, max_degree + 1, size=trials)
    size = (max_degree + 1) * (max_degree + 2) // 2
    g = rng.standard_normal((trials, size)) + 1j * rng.standard_normal((trials, size))
    ratios = np.empty(trials)
    bernstein_ok = True
    for N in np.unique(degrees):
        N = int(N)
        sel = np.flatnonzero(degrees == N)
        op = _GradientOperator(alpha, N)
        coeffs = g[sel, : op.h.size] / np.sqrt(op.h)
        grad, grad_up, norm = op.evaluate(coeffs)
        ratios[sel] = np.sqrt(grad / norm) / N ** 2
        if np.any(grad_up > N * (N + 2 + 2 * alpha) * norm * (1 + 1e-12)):
            bernstein_ok = False
    i = int(np.argmax(ratios))
    return MarkovReport(alpha, max_degree, trials, seed, float(ratios[i]), int(degrees[i]),
                        bernstein_ok, degrees.tolist(), ratios.tolist())
