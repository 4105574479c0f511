"""Analytic tail plans for slowly decaying line integrands.

A plan evaluates ``int_{|v|>V} F(v) dv`` for integrands built from Dirichlet
ratios such as beta^(iv) zeta(a +- iv)/(a +- iv).  Each Dirichlet component
c * base^(iv) r(v) is either integrated in closed form (base = 1, where the
symmetric tails combine to pi - 2*arctan(V/a)) or rotated into the complex
half-plane where base^(iv) decays exponentially; the non-elementary
remainder of the zeta series is rotated the same way.  Rotation is valid
because all rational factors used here have poles only on the imaginary
axis and zeta enters these entries in the numerator (or, for the
reciprocal-zeta plan, stays in a zero-free half plane along the rays).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from scipy.special import exp1, sici

from . import specfun as sf
from .quadrature import IntegrationSettings, integrate_ray

__all__ = [
    "TailPlan",
    "RayPiece",
    "zeta_ratio_plan",
    "reciprocal_zeta_plan",
    "osc_rational_tail",
    "osc_inverse_v_tail",
]


@dataclass
class RayPiece:
    """One contour-rotated tail component.

    ``g`` maps complex v arrays to complex values; ``direction`` is +1 to
    rotate the tail rays upward (integrand decays for Im v -> +inf) and -1
    downward; ``rate`` is the exponential decay constant along the ray.
    """

    g: Callable[[np.ndarray], np.ndarray]
    direction: int
    rate: float


@dataclass
class TailPlan:
    exact: list[Callable[[float], complex]] = field(default_factory=list)
    rays: list[RayPiece] = field(default_factory=list)

    def __add__(self, other: "TailPlan") -> "TailPlan":
        return TailPlan(self.exact + other.exact, self.rays + other.rays)

    def __call__(self, V: float, settings: IntegrationSettings) -> tuple[complex, float]:
        value = 0.0 + 0.0j
        err = 0.0
        for piece in self.exact:
            value += piece(V)
        for ray in self.rays:
            t_max = min(600.0, 45.0 / ray.rate)
            for side in (1.0, -1.0):
                factor = 1j * ray.direction * side
                base = side * V

                def g_line(t, _b=base, _d=ray.direction):
                    return ray.g(_b + 1j * _d * np.asarray(t))

                res = integrate_ray(g_line, t_max, settings)
                value += factor * res.value
                err += res.error_estimate + abs(ray.g(np.array([base + 1j * ray.direction * t_max]))[0]) / ray.rate
        return value, err


def _arctan_exact(coef: complex, a: float) -> Callable[[float], complex]:
    # int_{|v|>V} dv/(a +- i v) = pi - 2 arctan(V/a), either sign
    def piece(V: float) -> complex:
        return coef * (math.pi - 2.0 * math.atan(V / a))
    return piece


def osc_rational_tail(beta, c: float, sign_iv: int, V: float):
    """Exact int_{|v|>V} beta^(iv) / (c + sign_iv * i v) dv for c > 0.

    Closed form in the exponential integral: with lam = ln(beta),
    int_V^inf e^(i v lam)/(c - i v) dv = i e^(c lam) E1(lam (c - i V)) for
    lam > 0; the remaining side/sign cases follow by conjugation and the
    substitution v -> -v.  beta may be an array.
    """
    beta = np.asarray(beta, dtype=float)
    lam = np.log(beta)
    out = np.empty(beta.shape, dtype=complex)
    unit = np.abs(lam) < 1e-14
    out[unit] = math.pi - 2.0 * math.atan(V / c)

    def right_minus(lmb):
        # int_V^inf e^{i v l}/(c - i v) dv, valid for l > 0
        return 1j * np.exp(c * lmb) * exp1(lmb * (c - 1j * V))

    def right_plus(lmb):
        # int_V^inf e^{i v l}/(c + i v) dv, valid for l > 0
        return -1j * np.exp(-c * lmb) * exp1(-lmb * (c + 1j * V))

    if sign_iv not in (-1, 1):
        raise ValueError("sign_iv must be +-1")
    # the left tail is the conjugate of the right tail, so the symmetric
    # total is 2 Re of the appropriate one-sided formula
    use_minus = (~unit) & (np.sign(lam) * sign_iv < 0)
    use_plus = (~unit) & (np.sign(lam) * sign_iv > 0)
    if np.any(use_minus):
        out[use_minus] = 2.0 * np.real(right_minus(np.abs(lam[use_minus])))
    if np.any(use_plus):
        out[use_plus] = 2.0 * np.real(right_plus(np.abs(lam[use_plus])))
    return out if out.shape else complex(out)


def osc_inverse_v_tail(beta, V: float):
    """Exact int_{|v|>V} beta^(iv) * (i/v) dv = -2 sign(lam) (pi/2 - Si(V |lam|))."""
    beta = np.asarray(beta, dtype=float)
    lam = np.log(beta)
    si, _ = sici(V * np.abs(lam))
    out = -2.0 * np.sign(lam) * (math.pi / 2.0 - si)
    return out if out.shape else complex(out)


def zeta_ratio_plan(scale: complex, beta: float, a: float, eps: int,
                    ctx: sf.SpecialFunctionContext = sf.DEFAULT_CTX) -> TailPlan:
    """Tail plan for F(v) = scale * beta^(iv) * zeta(s)/s with s = a + eps*i*v.

    Requires a > 0 and beta > 0.  The Dirichlet component with unit base is
    integrated exactly; finitely many components rotate against their own
    phase; the zeta-series remainder (uniform exponential decay in the
    rotated variable) rotates as one piece.
    """
    if a <= 0 or beta <= 0 or eps not in (-1, 1):
        raise ValueError("zeta_ratio_plan requires a > 0, beta > 0, eps = +-1")
    plan = TailPlan()
    if eps == 1:
        n_split = max(1, math.ceil(beta))
    else:
        n_split = max(1, math.ceil(1.0 / beta))

    for n in range(1, n_split + 1):
        base = beta * float(n) ** (-eps)
        lam = math.log(base)
        coef = scale * float(n) ** (-a)
        if abs(lam) < 1e-12:
            plan.exact.append(_arctan_exact(coef, a))
        else:
            def g(v, _c=coef, _b=base):
                v = np.asarray(v, dtype=complex)
                return _c * np.power(_b, 1j * v) / (a + eps * 1j * v)
            plan.rays.append(RayPiece(g, 1 if lam > 0 else -1, abs(lam)))

    rem_base = beta * float(n_split + 1) ** (-eps)
    rem_rate = abs(math.log(rem_base))

    def g_rem(v):
        v = np.asarray(v, dtype=complex)
        s = a + eps * 1j * v
        return scale * np.power(beta, 1j * v) * sf.riemann_zeta_tail(s, n_split, ctx) / s

    plan.rays.append(RayPiece(g_rem, 1 if math.log(rem_base) > 0 else -1, rem_rate))
    return plan


def _mobius_sieve(n: int) -> np.ndarray:
    mu = np.ones(n + 1, dtype=np.int64)
    is_prime = np.ones(n + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, n + 1):
        if is_prime[p]:
            is_prime[2 * p::p] = False
            mu[p::p] *= -1
            mu[p * p::p * p] = 0
    return mu


def reciprocal_zeta_plan(a: float, b: float, cut_n: int = 4000, cut_m: int = 400,
                         ctx: sf.SpecialFunctionContext = sf.DEFAULT_CTX) -> TailPlan:
    """Tail plan for F(v) = (2v+ib) / [zeta(a+iv) (b-iv) zeta(a+b-iv) v].

    Needs a >= 1 and b > 0.  With R = i/v + 1/(b-iv) (partial fractions of
    the rational factor) and D1 = 1/zeta(a+iv) - 1, D2 = 1/zeta(a+b-iv) - 1:

        F = R + R D1 + R D2 + R D1 D2.

    * tail(R) is the exact arctan form (the odd i/v part cancels);
    * R D1 rotates DOWN: images of the zeros of zeta(a+iv) sit on
      Im v = a - 1/2 > 0, so the lower quarter planes are pole-free and
      D1 decays like 2^(-t) there (evaluated cancellation-free);
    * R D2 rotates UP (its zero images sit on Im v = 1/2 - a - b < 0);
    * R D1 D2 cannot rotate either way (zero images on both sides), but its
      Moebius double Dirichlet series
      sum_{n,m>=2} mu(n) mu(m) n^(-a) m^(-a-b) (m/n)^(iv) R(v)
      has every term's tail exact in E1/Si closed forms.  The n-side cut
      relies on Mertens-type cancellation when a = 1, so ``cut_n`` should be
      large (1e5) there; for a > 1 modest cuts converge absolutely.
    """
    if a < 1 or b <= 0:
        raise ValueError("reciprocal_zeta_plan requires a >= 1 and b > 0")
    plan = TailPlan()
    plan.exact.append(_arctan_exact(1.0, b))

    def rational(v):
        return (2.0 * v + 1j * b) / (v * (b - 1j * v))

    def g_d1(v):
        v = np.asarray(v, dtype=complex)
        s1 = a + 1j * v
        return -rational(v) * sf.riemann_zeta_tail(s1, 1, ctx) / sf.riemann_zeta(s1, ctx)

    def g_d2(v):
        v = np.asarray(v, dtype=complex)
        s2 = a + b - 1j * v
        return -rational(v) * sf.riemann_zeta_tail(s2, 1, ctx) / sf.riemann_zeta(s2, ctx)

    plan.rays.append(RayPiece(g_d1, -1, math.log(2.0)))
    plan.rays.append(RayPiece(g_d2, 1, math.log(2.0)))

    mu = _mobius_sieve(max(cut_n, cut_m))
    ns = np.arange(2, cut_n + 1)
    ms = np.arange(2, cut_m + 1)
    coefs_n = mu[ns] * ns.astype(float) ** (-a)
    coefs_m = mu[ms] * ms.astype(float) ** (-(a + b))
    n_idx = ns[coefs_n != 0]
    m_idx = ms[coefs_m != 0]
    cn = coefs_n[coefs_n != 0]
    cm = coefs_m[coefs_m != 0]

    def cross_tail(V: float) -> complex:
        total = 0.0 + 0.0j
        block = max(1, 2_000_000 // max(1, m_idx.size))
        for i in range(0, n_idx.size, block):
            nb = n_idx[i:i + block].astype(float)
            cb = cn[i:i + block]
            beta = m_idx[None, :] / nb[:, None]
            coef = cb[:, None] * cm[None, :]
            tails_ = (osc_inverse_v_tail(beta.ravel(), V)
                      + osc_rational_tail(beta.ravel(), b, -1, V))
            total += complex(np.sum(coef.ravel() * tails_))
        return total

    plan.exact.append(cross_tail)
    return plan
