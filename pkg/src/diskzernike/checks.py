"""Self-checks behind the ``verify`` command.

Each check returns a :class:`CheckResult` holding the measured quantities
next to the tolerances they were held to, so callers can both report and
re-assert them.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .basis import WirtingerDirection, change_parameter, derivative_coeffs
from .calculus import (
    SeminormConvention,
    angular_derivative,
    bernstein_sum,
    cartesian_derivative,
    gradient_norm_sq,
    norm_sq,
    sobolev_seminorm_sq,
    wirtinger_derivative,
)
from .core import ZernikePoly, eigenvalue, evaluate, mode_norm_sq_array
from .experiments import (
    build_t,
    closed_form_R_H1,
    closed_form_R_L2,
    closed_form_t_seminorm_complex,
    compare_with_reference,
    default_j_list,
    fitted_growth_rate,
    l2_rate_sweep,
    markov_sweep,
    rate_table,
    reference_exponent,
    sharpness_residual,
    REFERENCE_ALPHA,
    REFERENCE_L,
    RAT_RTOL,
    EGR_ATOL,
)
from .quadrature import rule_for_degree

GRAM_ALPHAS = (-0.5, 0.0, 1.0, 9.9)


@dataclass
class CheckResult:
    name: str
    passed: bool
    metrics: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        shown = ", ".join(f"{k}={_fmt(v)}" for k, v in self.metrics.items())
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name} ({self.seconds:.2f}s) {shown}"


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.3g}"
    return str(v)


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        result = fn(*args, **kwargs)
        result.seconds = time.perf_counter() - t0
        return result
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _random_poly(rng, alpha, max_degree):
    degree = int(rng.integers(0, max_degree + 1))
    ms, ns = [], []
    for d in range(degree + 1):
        for m in range(d + 1):
            ms.append(m)
            ns.append(d - m)
    size = len(ms)
    c = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    return ZernikePoly(alpha, ms, ns, c)


def _max_abs_diff(p: ZernikePoly, q: ZernikePoly) -> float:
    d = p - q
    return float(np.abs(d.c).max()) if not d.is_zero() else 0.0


def _scale(p: ZernikePoly) -> float:
    return float(np.abs(p.c).max()) if not p.is_zero() else 1.0


def _basis_values(alpha, degree, x1, x2):
    modes = [(m, d - m) for d in range(degree + 1) for m in range(d + 1)]
    values = np.array([evaluate(ZernikePoly.basis(alpha, m, n), (x1, x2)) for m, n in modes])
    return modes, values


@_timed
def check_reference_table() -> CheckResult:
    """The reference alpha = 9.9, l = 3 seminorm-ratio table, both conventions."""
    metrics = {}
    passed = False
    for conv in SeminormConvention:
        table = rate_table(REFERENCE_ALPHA, REFERENCE_L, default_j_list(REFERENCE_L), conv)
        cmp = compare_with_reference(table)
        metrics[f"{conv.value}_rat_rel"] = cmp.max_rat_rel_error
        metrics[f"{conv.value}_egr_abs"] = cmp.max_egr_abs_error
        metrics[f"{conv.value}_matches"] = cmp.matches
        passed = passed or cmp.matches
    metrics["rat_rtol"] = RAT_RTOL
    metrics["egr_atol"] = EGR_ATOL
    return CheckResult("reference table reproduction", passed, metrics)


@_timed
def check_closed_forms(instances: int = 20, seed: int = 2024, rtol: float = 1e-9) -> CheckResult:
    """Closed-form residual and seminorm values against coefficient-space sums."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(instances):
        alpha = float(rng.uniform(-0.9, 10.0))
        l = int(rng.integers(1, 5))
        j = int(rng.integers(l, 51))
        _, R = sharpness_residual(alpha, l, j)
        t = build_t(alpha, l, j)
        pairs = (
            (norm_sq(R), closed_form_R_L2(alpha, l, j)),
            (sobolev_seminorm_sq(R, 1, SeminormConvention.Cartesian),
             closed_form_R_H1(alpha, l, j)),
            (sobolev_seminorm_sq(t, l, SeminormConvention.ComplexPair),
             closed_form_t_seminorm_complex(alpha, l, j)),
        )
        for got, want in pairs:
            worst = max(worst, abs(got - want) / abs(want))
    return CheckResult("closed-form identities", worst <= rtol,
                       {"instances": instances, "max_rel_error": worst, "rtol": rtol})


@_timed
def check_rate_sharpness(cases=((9.9, 3), (0.0, 2), (-0.5, 1)), tol0: float = 0.01,
                         tol1: float = 0.02) -> CheckResult:
    """Fitted growth rates of the L2 and first-order ratios over the last three rows."""
    metrics = {}
    passed = True
    for alpha, l in cases:
        table = rate_table(alpha, l, default_j_list(l))
        e0 = fitted_growth_rate(table, 0) - reference_exponent(l, 0)
        e1 = fitted_growth_rate(table, 1) - reference_exponent(l, 1)
        metrics[f"dev0({alpha},{l})"] = e0
        metrics[f"dev1({alpha},{l})"] = e1
        passed &= abs(e0) <= tol0 and abs(e1) <= tol1
    return CheckResult("proved rate sharpness", passed, metrics)


def gram_errors(alpha: float, degree: int = 8):
    """(max relative diagonal error, max off-diagonal / max h) of the quadrature Gram matrix."""
    rule = rule_for_degree(alpha, 2 * degree)
    x1, x2, w = rule.nodes()
    modes, B = _basis_values(alpha, degree, x1, x2)
    G = (B * w) @ B.conj().T
    h = mode_norm_sq_array(alpha, [m for m, _ in modes], [n for _, n in modes])
    diag = float(np.max(np.abs(np.diag(G) - h) / h))
    off = G - np.diag(np.diag(G))
    return diag, float(np.abs(off).max() / h.max())


@_timed
def check_gram(alphas=GRAM_ALPHAS, degree: int = 8, tol: float = 1e-10) -> CheckResult:
    """Quadrature Gram matrix of the basis against the closed-form norms."""
    metrics = {}
    passed = True
    for a in alphas:
        diag, off = gram_errors(a, degree)
        metrics[f"diag({a})"] = diag
        metrics[f"off({a})"] = off
        passed &= diag <= tol and off <= tol
    return CheckResult("quadrature Gram oracle", passed, metrics)


@_timed
def check_coefficient_identities(seed: int = 7, tol_bernstein: float = 1e-11,
                                 tol_deriv: float = 1e-10,
                                 tol_roundtrip: float = 1e-10) -> CheckResult:
    """Bernstein equality, derivative-coefficient sums and parameter round trips."""
    rng = np.random.default_rng(seed)
    bern = 0.0
    for _ in range(200):
        alpha = float(rng.uniform(-0.9, 10.0))
        q = _random_poly(rng, alpha, 12)
        lhs = gradient_norm_sq(q) + norm_sq(angular_derivative(q))
        rhs = bernstein_sum(q)
        if rhs:
            bern = max(bern, abs(lhs - rhs) / rhs)
    deriv = 0.0
    for _ in range(100):
        alpha = float(rng.uniform(-0.9, 10.0))
        p = _random_poly(rng, alpha, 20)
        for direction in WirtingerDirection:
            a = derivative_coeffs(p, direction)
            b = change_parameter(wirtinger_derivative(p, direction), alpha)
            deriv = max(deriv, _max_abs_diff(a, b) / max(_scale(b), 1e-300))
    trip = 0.0
    for _ in range(50):
        alpha = float(rng.uniform(-0.9, 10.0))
        p = _random_poly(rng, alpha, 20)
        back = change_parameter(change_parameter(p, alpha + 2), alpha)
        trip = max(trip, _max_abs_diff(back, p) / _scale(p))
    passed = bern <= tol_bernstein and deriv <= tol_deriv and trip <= tol_roundtrip
    return CheckResult("exact coefficient identities", passed,
                       {"bernstein_rel": bern, "derivative_rel": deriv, "roundtrip_rel": trip})


def weak_form_errors(alpha: float, degree: int = 3):
    """(max relative diagonal error, max off-diagonal / max lambda h) of the weak form."""
    rule = rule_for_degree(alpha, 2 * degree + 4)
    x1, x2, w = rule.nodes()
    rho = 1.0 - (x1 * x1 + x2 * x2)
    modes = [(m, d - m) for d in range(degree + 1) for m in range(d + 1)]
    grads, angs = [], []
    for m, n in modes:
        P = ZernikePoly.basis(alpha, m, n)
        d1 = evaluate(cartesian_derivative(P, 1), (x1, x2))
        d2 = evaluate(cartesian_derivative(P, 2), (x1, x2))
        grads.append((d1, d2))
        angs.append(x2 * d1 - x1 * d2)
    size = len(modes)
    B = np.empty((size, size), dtype=complex)
    for i in range(size):
        for k in range(size):
            gi, gk = grads[i], grads[k]
            dot = gi[0] * np.conj(gk[0]) + gi[1] * np.conj(gk[1])
            B[i, k] = np.sum(w * (rho * dot + angs[i] * np.conj(angs[k])))
    lam_h = np.array([eigenvalue(alpha, m, n) for m, n in modes]) * mode_norm_sq_array(
        alpha, [m for m, _ in modes], [n for _, n in modes])
    nz = lam_h > 0
    diag = float(np.max(np.abs(np.diag(B)[nz] - lam_h[nz]) / lam_h[nz]))
    diag_zero = float(np.max(np.abs(np.diag(B)[~nz]))) if (~nz).any() else 0.0
    off = B - np.diag(np.diag(B))
    scale = lam_h.max()
    return diag, max(float(np.abs(off).max()), diag_zero) / scale


@_timed
def check_weak_form(alphas=GRAM_ALPHAS, degree: int = 3, tol: float = 1e-8) -> CheckResult:
    """Quadrature of the variational form on basis pairs against lambda h."""
    metrics = {}
    passed = True
    for a in alphas:
        diag, off = weak_form_errors(a, degree)
        metrics[f"diag({a})"] = diag
        metrics[f"off({a})"] = off
        passed &= diag <= tol and off < tol
    return CheckResult("weak-form eigenpairs", passed, metrics)


@_timed
def check_markov(alphas=(0.0, 9.9), seeds=(42, 43, 44), max_degree: int = 40,
                 trials: int = 1000, spread: float = 0.10) -> CheckResult:
    """Markov ratio maxima are finite, the Bernstein bound holds, seeds agree to +-10%."""
    metrics = {}
    passed = True
    for a in alphas:
        maxima = []
        for s in seeds:
            rep = markov_sweep(a, max_degree, trials, s)
            maxima.append(rep.max_ratio)
            passed &= rep.bernstein_holds and math.isfinite(rep.max_ratio)
        mean = float(np.mean(maxima))
        dev = float(np.max(np.abs(np.array(maxima) - mean)) / mean)
        metrics[f"max({a})"] = mean
        metrics[f"seed_spread({a})"] = dev
        passed &= dev <= spread
    return CheckResult("Markov property sweep", passed, metrics)


@_timed
def check_l2_rate(degrees=(4, 8, 12, 16)) -> CheckResult:
    """Superalgebraic L2 projection decay for exp(x1) at alpha = 0."""
    sweep = l2_rate_sweep("exp_x1", 0.0, 2, degrees)
    slopes = sweep.local_slopes[1:]
    decreasing = all(b < a for a, b in zip(slopes, slopes[1:]))
    # quadrature cross-check where the error is well above roundoff
    quad = l2_rate_sweep("exp_x1", 0.0, 2, degrees[:2], method="quadrature")
    agree = max(abs(q - s) / s for q, s in zip(quad.errors, sweep.errors))
    metrics = {f"slope{i + 1}": s for i, s in enumerate(slopes)}
    metrics["quadrature_rel"] = agree
    return CheckResult("L2 projection rate", decreasing and agree < 1e-6, metrics)


@_timed
def check_table_consistency() -> CheckResult:
    """Growth rates recompute bitwise from neighbouring ratios; higher orders trend to theory."""
    table = rate_table(REFERENCE_ALPHA, REFERENCE_L, default_j_list(REFERENCE_L))
    exact = True
    for prev, row in zip(table.rows, table.rows[1:]):
        for r in range(table.l + 1):
            exact &= row.egr[r] == math.log(row.rat[r] / prev.rat[r]) / math.log(row.N / prev.N)
    trend = True
    for r in range(2, table.l + 1):
        e = reference_exponent(table.l, r)
        trend &= abs(table.rows[-1].egr[r] - e) < abs(table.rows[1].egr[r] - e)
    return CheckResult("rate table consistency", exact and trend,
                       {"egr_bitwise": exact, "conjectured_trend": trend})


@_timed
def check_backends() -> CheckResult:
    """Compiled and numpy kernels agree."""
    from .basis import _log_leading_coefficient
    from .kernels import available_backends

    backends = available_backends()
    rng = np.random.default_rng(3)
    m = rng.integers(0, 60, 40)
    n = rng.integers(0, 60, 40)
    c = rng.standard_normal(40) + 1j * rng.standard_normal(40)
    t = np.linspace(-1, 1, 33)
    outs = {}
    for name, mod in backends.items():
        conn = mod.connection_terms(m, n, c, _log_leading_coefficient(m, n, 9.9, 0.5), 9.9, 0.5)
        outs[name] = (conn, mod.jacobi_eval_array(25, 1.5, 3.0, t))
    ref = outs["python"]
    worst = 0.0
    for name, (conn, jac) in outs.items():
        if not (np.array_equal(conn[0], ref[0][0]) and np.array_equal(conn[1], ref[0][1])):
            worst = math.inf
            continue
        worst = max(worst, float(np.max(np.abs(conn[2] - ref[0][2]) / np.abs(ref[0][2]))),
                    float(np.max(np.abs(jac - ref[1]) / np.maximum(np.abs(ref[1]), 1.0))))
    return CheckResult("kernel backend parity", worst <= 1e-12,
                       {"backends": "+".join(sorted(backends)), "max_rel": worst})


ALL_CHECKS = (
    check_reference_table,
    check_closed_forms,
    check_rate_sharpness,
    check_gram,
    check_coefficient_identities,
    check_weak_form,
    check_markov,
    check_l2_rate,
    check_table_consistency,
    check_backends,
)


def run_all(stream=None) -> bool:
    """Run every check, printing one line each; True if all pass."""
    ok = True
    for check in ALL_CHECKS:
        result = check()
        ok &= result.passed
        if stream is not None:
            print(result.line(), file=stream, flush=True)
    return ok
