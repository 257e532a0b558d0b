"""Independent reference implementations used only by the tests.

Polynomials are dicts {(a, b): coeff} in the monomials z^a conj(z)^b with
mpmath coefficients. Basis polynomials come from the explicit Jacobi sum,
derivatives act on monomials directly and integrals use the moments

    int_B z^a conj(z)^b (1 - |z|^2)^alpha = pi a! Gamma(alpha+1) / Gamma(a+alpha+2)  (a == b)

so nothing here shares a code path with the package.
"""

import mpmath as mp

DPS = 60


def _add(out, key, val):
    out[key] = out.get(key, 0) + val


def basis(alpha, m, n):
    """P[alpha]_{m,n} as a monomial dict."""
    with mp.workdps(DPS):
        alpha = mp.mpf(alpha)
        k = min(m, n)
        mu = m - n
        pre = mp.factorial(k) * mp.gamma(alpha + 1) / mp.gamma(k + alpha + 1)
        out = {}
        # J_k^(alpha,|mu|)(2w-1) = sum_s C(k+alpha, k-s) C(k+|mu|, s) (w-1)^s w^(k-s)
        for s in range(k + 1):
            c = mp.binomial(k + alpha, k - s) * mp.binomial(k + abs(mu), s)
            for i in range(s + 1):
                # (w-1)^s = sum_i C(s,i) w^i (-1)^(s-i)
                power = i + k - s
                coef = pre * c * mp.binomial(s, i) * (-1) ** (s - i)
                a, b = power + max(mu, 0), power + max(-mu, 0)
                _add(out, (a, b), coef)
        return out


def combine(terms):
    out = {}
    for w, p in terms:
        for key, v in p.items():
            _add(out, key, w * v)
    return out


def dz(p):
    out = {}
    for (a, b), v in p.items():
        if a:
            _add(out, (a - 1, b), a * v)
    return out


def dzs(p):
    out = {}
    for (a, b), v in p.items():
        if b:
            _add(out, (a, b - 1), b * v)
    return out


def d1(p):
    return combine([(1, dz(p)), (1, dzs(p))])


def d2(p):
    return combine([(1j, dz(p)), (-1j, dzs(p))])


def inner(p, q, alpha):
    """<p, q> with weight (1 - |x|^2)^alpha."""
    with mp.workdps(DPS):
        alpha = mp.mpf(alpha)
        ga = mp.gamma(alpha + 1)
        acc = mp.mpc(0)
        qb = {}
        for (a, b), v in q.items():
            qb.setdefault(a - b, []).append((a, b, v))
        for (a, b), v in p.items():
            for a2, b2, w in qb.get(a - b, ()):
                s = a + b2
                acc += v * mp.conj(w) * mp.pi * mp.factorial(s) * ga / mp.gamma(s + alpha + 2)
        return acc


def norm_sq(p, alpha):
    return mp.re(inner(p, p, alpha))


def seminorm_sq(p, k, alpha, cartesian=True):
    total = mp.mpf(0)
    for k1 in range(k + 1):
        q = p
        for _ in range(k1):
            q = d1(q) if cartesian else dz(q)
        for _ in range(k - k1):
            q = d2(q) if cartesian else dzs(q)
        total += norm_sq(q, alpha)
    return total


def evaluate(p, x1, x2):
    z = mp.mpc(x1, x2)
    return sum(v * z ** a * mp.conj(z) ** b for (a, b), v in p.items())


def from_modes(alpha, coeffs):
    """Monomial dict of sum c_{m,n} P[alpha]_{m,n}."""
    return combine([(c, basis(alpha, m, n)) for (m, n), c in coeffs.items()])


def t_poly(alpha, l, j):
    """The sharpness polynomial, coefficients by direct mpmath products."""
    with mp.workdps(DPS):
        a = mp.mpf(alpha)
        coeffs = {}
        for k in range(l + 1):
            top = j + l - k
            coeffs[(top, top)] = (
                mp.rf(-l, k) * mp.gamma(a + top + 1) ** 2 * (a + 2 * top + 1)
                / (mp.factorial(k) * mp.factorial(top) ** 2 * mp.rf(a + 2 * j + l - k + 1, l + 1))
            )
        return coeffs
