"""Adaptive Gauss-Kronrod quadrature tuned for exponentially damped complex
integrands on the line/half-line, finite intervals with endpoint
singularities, and slowly decaying tails.

Integrand callables must accept numpy arrays (real or complex) and return
complex arrays; panels are evaluated in batches.  Tail strategies:

* exponential kernels: truncate at V where the kernel envelope is below
  ``tail_cutoff_eps`` and add the analytic envelope bound to the error;
* structured slow tails: a caller-supplied tail plan (see
  :mod:`zetamaster.tails`) evaluated at the truncation point;
* smooth algebraic tails: the substitution v = V/u^2 on [V, inf);
* mixed oscillatory algebraic tails: partial integrals on a window ladder
  extrapolated against an inverse-power model (``power_fit``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "IntegrationSettings",
    "IntegrationResult",
    "NonConvergence",
    "SingularSample",
    "DomainError",
    "integrate_real_line",
    "integrate_half_line",
    "real_part_integral",
    "integrate_finite",
    "integrate_ray",
    "integrate_half_line_algebraic",
    "power_fit_half_line",
]


class NonConvergence(RuntimeError):
    """Subdivision budget exhausted before reaching the tolerance."""


class SingularSample(ValueError):
    """Non-finite sample in the retained component of the integrand."""


class DomainError(ValueError):
    """Invalid integration domain or singularity declaration."""


@dataclass(frozen=True)
class IntegrationSettings:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-9
    max_subdivisions: int = 6000
    tail_cutoff_eps: float = 1e-16
    mode: str = "full_value"  # real_part_only | imaginary_part_only
    panel_cap: float = 0.5

    def __post_init__(self) -> None:
        if min(self.abs_tol, self.rel_tol, self.tail_cutoff_eps) <= 0:
            raise DomainError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")
        if self.mode not in ("full_value", "real_part_only", "imaginary_part_only"):
            raise DomainError(f"unknown mode {self.mode!r}")


@dataclass
class IntegrationResult:
    value: complex
    error_estimate: float
    evaluations: int
    converged: bool


# 15-point Kronrod nodes / weights and embedded 7-point Gauss weights
# (QUADPACK dqk15 constants).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])  # ascending, 15 nodes
_WK = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS_IDX = np.arange(1, 15, 2)  # Gauss nodes sit at the odd positions
_WGFULL = np.concatenate([_WG[:-1], _WG[::-1]])


def _project(y: np.ndarray, mode: str) -> np.ndarray:
    if mode == "real_part_only":
        return y.real.astype(complex)
    if mode == "imaginary_part_only":
        return y.imag.astype(complex)
    return y


def _gk_apply(f, lo: np.ndarray, hi: np.ndarray, mode: str):
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x = mid[:, None] + half[:, None] * _NODES[None, :]
    y = np.asarray(f(x.ravel()), dtype=complex).reshape(x.shape)
    y = _project(y, mode)
    if not np.all(np.isfinite(y)):
        bad = x.ravel()[~np.isfinite(y.ravel())]
        raise SingularSample(f"non-finite integrand sample near v={bad[0]!r}")
    k15 = half * (y @ _WK)
    g7 = half * (y[:, _GAUSS_IDX] @ _WGFULL)
    diff = np.abs(k15 - g7)
    mean = k15 / np.where(hi - lo == 0, 1.0, hi - lo)
    resasc = half * (np.abs(y - mean[:, None]) @ _WK)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * diff / np.where(resasc > 0, resasc, 1.0)) ** 1.5)
    err = np.where(resasc > 0, scaled, diff)
    err = np.maximum(err, np.abs(k15) * 5e-16)
    return k15, err


def _adaptive(f, segments: Sequence[tuple[float, float]], settings: IntegrationSettings,
              mode: str) -> tuple[complex, float, int, bool]:
    lo = np.array([s[0] for s in segments], dtype=float)
    hi = np.array([s[1] for s in segments], dtype=float)
    vals, errs = _gk_apply(f, lo, hi, mode)
    neval = 15 * lo.size
    converged = True
    while True:
        total = vals.sum()
        err = errs.sum()
        target = max(settings.abs_tol, settings.rel_tol * abs(total))
        if err <= target:
            break
        if lo.size >= settings.max_subdivisions:
            converged = False
            break
        nsplit = max(1, min(lo.size // 6 + 1, settings.max_subdivisions - lo.size))
        order = np.argsort(errs)[::-1]
        idx = order[:nsplit]
        idx = idx[errs[idx] > target / (4.0 * lo.size)]
        if idx.size == 0:
            idx = order[:1]
        mid = 0.5 * (lo[idx] + hi[idx])
        keep = (mid > lo[idx]) & (mid < hi[idx])
        if not np.any(keep):
            converged = False
            break
        idx = idx[keep]
        mid = mid[keep]
        k = idx.size
        right_hi = hi[idx].copy()
        sub_lo = np.concatenate([lo[idx], mid])
        sub_hi = np.concatenate([mid, right_hi])
        v2, e2 = _gk_apply(f, sub_lo, sub_hi, mode)
        neval += 15 * sub_lo.size
        hi[idx] = mid  # panel idx becomes its left half
        vals[idx] = v2[:k]
        errs[idx] = e2[:k]
        lo = np.concatenate([lo, mid])
        hi = np.concatenate([hi, right_hi])
        vals = np.concatenate([vals, v2[k:]])
        errs = np.concatenate([errs, e2[k:]])
    return complex(vals.sum()), float(errs.sum()), neval, converged


def _segments(breaks: Sequence[float], cap: float) -> list[tuple[float, float]]:
    segs = []
    pts = sorted(set(float(b) for b in breaks))
    for a, b in zip(pts[:-1], pts[1:]):
        if b <= a:
            continue
        n = max(1, int(math.ceil((b - a) / cap)))
        edges = np.linspace(a, b, n + 1)
        segs.extend(zip(edges[:-1], edges[1:]))
    return segs


def _auto_v(f, decay_rate: float, settings: IntegrationSettings,
            sides: tuple[int, ...]) -> float:
    if decay_rate <= 0:
        raise DomainError("decay_rate must be positive")
    v = (-math.log(settings.tail_cutoff_eps) + 15.0) / decay_rate
    for _ in range(40):
        probe = np.array([side * v * (1.0 + 0.01 * k) for side in sides for k in range(3)])
        y = np.asarray(f(probe), dtype=complex)
        env = float(np.max(np.abs(y))) if y.size else 0.0
        if not math.isfinite(env) or env / decay_rate > 0.25 * settings.abs_tol:
            v *= 1.2
        else:
            return v
    return v


def _tail_envelope(f, v: float, decay_rate: float, sides: tuple[int, ...]) -> float:
    probe = np.array([side * v for side in sides], dtype=float)
    y = np.asarray(f(probe), dtype=complex)
    y = y[np.isfinite(y)]
    env = float(np.sum(np.abs(y))) if y.size else 0.0
    return env / decay_rate


def _line_integral(f, lo_end: float, hi_end: float, settings: IntegrationSettings,
                   singular_points: Sequence[float], pv_points: Sequence[float],
                   decay_rate: float | None, tail, sides) -> IntegrationResult:
    cap = settings.panel_cap
    pv = [p for p in pv_points if lo_end < p < hi_end]
    sing = [p for p in singular_points if lo_end < p < hi_end]
    eps = 1e-6
    breaks = [lo_end, hi_end] + sing
    for p in pv:
        breaks += [p - 2 * eps, p - eps, p + eps, p + 2 * eps]
    core_breaks = sorted(breaks)
    # base panels exclude (p-eps, p+eps); the collar [p-2e,p-e]+[p+e,p+2e]
    # doubles under Richardson extrapolation of the symmetric exclusion
    segs: list[tuple[float, float]] = []
    collar: list[tuple[float, float]] = []
    for a, b in zip(core_breaks[:-1], core_breaks[1:]):
        inside_excl = any(p - eps <= a and b <= p + eps for p in pv)
        if inside_excl:
            continue
        is_collar = any(
            (abs(a - (p - 2 * eps)) < 1e-18 and abs(b - (p - eps)) < 1e-18)
            or (abs(a - (p + eps)) < 1e-18 and abs(b - (p + 2 * eps)) < 1e-18)
            for p in pv
        )
        n = max(1, int(math.ceil((b - a) / cap)))
        edges = np.linspace(a, b, n + 1)
        pieces = list(zip(edges[:-1], edges[1:]))
        (collar if is_collar else segs).extend(pieces)
    val, err, neval, conv = _adaptive(f, segs, settings, settings.mode)
    if collar:
        cval, cerr, cnev, cconv = _adaptive(f, collar, settings, settings.mode)
        val += 2.0 * cval  # Richardson: I ~ 2 I(eps) - I(2 eps)
        err += 2.0 * cerr
        neval += cnev
        conv = conv and cconv
    if tail is not None:
        tval, terr = tail(abs(hi_end) if hi_end > -lo_end else abs(lo_end), settings)
        val += tval
        err += terr
    elif decay_rate is not None:
        err += _tail_envelope(f, max(abs(lo_end), abs(hi_end)), decay_rate, sides)
    return IntegrationResult(val, err, neval, conv)


def _finish(res: IntegrationResult, settings: IntegrationSettings, strict: bool) -> IntegrationResult:
    if strict and not res.converged:
        raise NonConvergence(
            f"integral did not converge: err={res.error_estimate:.3g} after {res.evaluations} evaluations")
    return res


def integrate_real_line(f, decay_rate: float, settings: IntegrationSettings = IntegrationSettings(),
                        *, V: float | None = None, tail=None,
                        singular_points: Sequence[float] = (), pv_points: Sequence[float] = (),
                        strict: bool = True) -> IntegrationResult:
    """Integrate f over (-inf, inf), truncating at +-V.

    ``decay_rate`` is the exponential constant of the kernel envelope (for
    example pi/b for sech(pi v/b)); it picks the truncation point and bounds
    the discarded tail.  Entries with slower decay pass an explicit ``V``
    plus a ``tail`` callable ``tail(V, settings) -> (value, err)``.
    """
    v = float(V) if V is not None else _auto_v(f, decay_rate, settings, (-1, 1))
    return _finish(_line_integral(f, -v, v, settings, singular_points, pv_points,
                                  None if tail is not None else decay_rate, tail, (-1, 1)),
                   settings, strict)


def integrate_half_line(f, decay_rate: float, settings: IntegrationSettings = IntegrationSettings(),
                        *, V: float | None = None, tail=None,
                        singular_points: Sequence[float] = (), pv_points: Sequence[float] = (),
                        strict: bool = True) -> IntegrationResult:
    """Integrate f over [0, inf); same contract as integrate_real_line."""
    v = float(V) if V is not None else _auto_v(f, decay_rate, settings, (1,))
    return _finish(_line_integral(f, 0.0, v, settings, singular_points, pv_points,
                                  None if tail is not None else decay_rate, tail, (1,)),
                   settings, strict)


def real_part_integral(f, decay_rate: float, settings: IntegrationSettings = IntegrationSettings(),
                       *, half: bool = False, **kw) -> IntegrationResult:
    """Integrate Re(f) while the full complex f may be singular on the path."""
    s = replace(settings, mode="real_part_only")
    fn = integrate_half_line if half else integrate_real_line
    return fn(f, decay_rate, s, **kw)


def integrate_finite(f, lo: float, hi: float, endpoint_singularity: str = "none",
                     settings: IntegrationSettings = IntegrationSettings(),
                     *, singular_points: Sequence[float] = (), strict: bool = True,
                     power: float | None = None) -> IntegrationResult:
    """Integrate f on [lo, hi].

    ``endpoint_singularity``: 'none', 'inverse_sqrt_both', or 'inverse_power'
    (exponent ``power`` < 1 per endpoint, or < 2 combined with the arcsine
    substitution used here).  Singular endpoints are mapped through
    v = c + h sin(u) so sampled integrands stay integrable; remaining weak
    endpoint behaviour is handled by adaptive bisection.
    """
    if not lo < hi:
        raise DomainError("integrate_finite requires lo < hi")
    if endpoint_singularity not in ("none", "inverse_sqrt_both", "inverse_power"):
        raise DomainError(f"unknown endpoint_singularity {endpoint_singularity!r}")
    if endpoint_singularity == "inverse_power" and power is not None and power >= 2:
        raise DomainError("non-integrable endpoint exponent")
    c = 0.5 * (hi + lo)
    h = 0.5 * (hi - lo)
    if endpoint_singularity == "none":
        segs = _segments([lo, hi] + [p for p in singular_points if lo < p < hi],
                         max((hi - lo) / 16.0, 1e-12))
        res = _adaptive(f, segs, settings, settings.mode)
    else:
        def g(u):
            return f(c + h * np.sin(u)) * (h * np.cos(u))
        inner = [math.asin(min(1.0, max(-1.0, (p - c) / h)))
                 for p in singular_points if lo < p < hi]
        # clamp so c + h*sin(u) never rounds onto the singular endpoints,
        # then add a rectangle estimate of the clipped slivers
        umax = math.pi / 2 - 4e-8
        segs = _segments([-umax, umax] + inner, math.pi / 24)
        val, err, nev, conv = _adaptive(g, segs, settings, settings.mode)
        delta = math.pi / 2 - umax
        edge = _project(np.asarray(g(np.array([-umax, umax])), dtype=complex), settings.mode)
        sliver = complex(edge.sum()) * delta
        res = (val + sliver, err + abs(sliver), nev + 2, conv)
    out = IntegrationResult(*res)
    return _finish(out, settings, strict)


def integrate_ray(g, t_max: float, settings: IntegrationSettings = IntegrationSettings(),
                  cap: float | None = None) -> IntegrationResult:
    """Integrate g on the real parameter interval [0, t_max] (used for
    contour rays after rotating a tail into a decaying direction)."""
    segs = _segments([0.0, t_max], cap if cap is not None else max(0.5, t_max / 48.0))
    val, err, neval, conv = _adaptive(g, segs, settings, "full_value")
    return IntegrationResult(val, err, neval, conv)


def integrate_half_line_algebraic(f, settings: IntegrationSettings = IntegrationSettings(),
                                  *, v_break: float = 40.0, sqrt_origin: bool = False,
                                  strict: bool = True) -> IntegrationResult:
    """Integral over [0, inf) of a smoothly (algebraically) decaying f.

    The head [0, v_break] is integrated directly (optionally through v = u^2
    to absorb an inverse-sqrt singularity at 0); the tail is mapped by
    v = v_break / u^2 onto (0, 1], which is smooth for decay faster than
    v^(-3/2).
    """
    if sqrt_origin:
        def head(u):
            return f(u * u) * (2.0 * u)
        r1 = _adaptive(head, _segments([0.0, math.sqrt(v_break)], 0.25), settings, settings.mode)
    else:
        r1 = _adaptive(f, _segments([0.0, v_break], settings.panel_cap), settings, settings.mode)

    def tail_sub(u):
        v = v_break / (u * u)
        return f(v) * (2.0 * v_break / u ** 3)

    r2 = _adaptive(tail_sub, _segments([0.0, 1.0], 1.0 / 16.0), settings, settings.mode)
    res = IntegrationResult(r1[0] + r2[0], r1[1] + r2[1], r1[2] + r2[2], r1[3] and r2[3])
    return _finish(res, settings, strict)


def power_fit_half_line(f, settings: IntegrationSettings = IntegrationSettings(),
                        *, v0: float = 220.0, step: float | None = None, windows: int = 12,
                        powers: tuple[int, ...] = (1, 2, 3, 4),
                        singular_points: Sequence[float] = (),
                        strict: bool = True) -> IntegrationResult:
    """Half-line integral of an oscillatory algebraically decaying integrand.

    Partial integrals I(V_k) are computed on a ladder V_k = v0 + k*step and
    extrapolated against I_inf - sum_p c_p V^-p by least squares; the window
    step defaults to one period of the dominant ln-2 Dirichlet oscillation so
    residual oscillatory terms average out.
    """
    if step is None:
        step = 2.0 * math.pi / math.log(2.0)
    sing = [p for p in singular_points if 0.0 < p < v0]
    head = _adaptive(f, _segments([0.0, v0] + sing, settings.panel_cap), settings, settings.mode)
    partials = [head[0]]
    errs = head[1]
    neval = head[2]
    conv = head[3]
    edges = [v0 + k * step for k in range(windows)]
    for a, b in zip(edges[:-1], edges[1:]):
        r = _adaptive(f, _segments([a, b], settings.panel_cap), settings, settings.mode)
        partials.append(partials[-1] + r[0])
        errs += r[1]
        neval += r[2]
        conv = conv and r[3]
    vs = np.array(edges, dtype=float)
    design = np.column_stack([np.ones_like(vs)] + [vs ** (-p) for p in powers])
    sol_re, *_ = np.linalg.lstsq(design, np.array([p.real for p in partials]), rcond=None)
    sol_im, *_ = np.linalg.lstsq(design, np.array([p.imag for p in partials]), rcond=None)
    value = complex(sol_re[0], sol_im[0])
    resid = design @ sol_re - np.array([p.real for p in partials])
    resid_im = design @ sol_im - np.array([p.imag for p in partials])
    fit_err = 10.0 * float(np.max(np.hypot(resid, resid_im))) + float(np.abs(value - partials[-1])) * 1e-3
    res = IntegrationResult(value, errs + fit_err, neval, conv)
    return _finish(res, settings, strict)
