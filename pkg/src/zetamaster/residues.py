"""Residues of catalog integrands: numeric contour-circle evaluation,
closed-form residue tables for the additive zeta family, and pole
enumerators (with strip membership and boundary half-weights) for the
product, four-pole, multiplicative, and trigonometric kernels.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import specfun as sf

__all__ = [
    "StripSpec",
    "PoleSpec",
    "NonConvergence",
    "DomainError",
    "numeric_residue",
    "indicator_H",
    "appendix_a_residues",
    "poles_product_kernel",
    "poles_fgen_kernel",
    "poles_multiplicative",
    "poles_trig",
    "zeta_prime_trivial",
]

BOUNDARY_TOL = 1e-12


class NonConvergence(RuntimeError):
    """Contour-circle estimates failed to stabilize."""


class DomainError(ValueError):
    """Parameters outside the family's admissible set."""


@dataclass(frozen=True)
class StripSpec:
    """Horizontal strip enclosed by the verification contour.

    For b > 0 the strip is -b < Im(v) < 0; for b < 0 the contour encloses
    the mirrored strip 0 < Im(v) < |b| and runs the other way, recorded by
    ``orientation_sign``.
    """

    b: float

    def __post_init__(self) -> None:
        if self.b == 0:
            raise DomainError("strip width b must be nonzero")

    @property
    def orientation_sign(self) -> int:
        return 1 if self.b > 0 else -1

    def weight(self, location: complex, tol: float = BOUNDARY_TOL) -> float:
        """1 strictly inside, 1/2 exactly on Im = 0 or Im = -b, else 0."""
        im = location.imag
        lo, hi = sorted((0.0, -self.b))
        if abs(im - lo) <= tol or abs(im - hi) <= tol:
            return 0.5
        return 1.0 if lo < im < hi else 0.0


@dataclass
class PoleSpec:
    location: complex
    order: int = 1
    boundary_weight: float = 1.0
    analytic_residue: complex | None = None
    label: str = ""

    def __post_init__(self) -> None:
        if self.order < 1:
            raise DomainError("pole order must be >= 1")
        if self.boundary_weight not in (0.0, 0.5, 1.0):
            raise DomainError("boundary_weight must be 0, 1/2, or 1")


def _gated(strip: StripSpec, location: complex, order: int = 1,
           analytic: complex | None = None, label: str = "") -> PoleSpec | None:
    w = strip.weight(location)
    if w == 0.0:
        return None
    return PoleSpec(location, order, w, analytic, label)


def numeric_residue(f, v0: complex, radius: float, samples: int = 32,
                    tol: float = 1e-12, max_doublings: int = 9) -> complex:
    """Residue of f at v0 by the trapezoidal rule on |v - v0| = radius.

    The trapezoidal rule is spectrally accurate on circles; the sample count
    doubles until two successive estimates agree to ``tol`` (relative to the
    local scale).
    """
    if radius <= 0:
        raise DomainError("radius must be positive")
    prev = None
    m = samples
    for _ in range(max_doublings):
        theta = 2.0 * math.pi * (np.arange(m) + 0.5) / m
        z = v0 + radius * np.exp(1j * theta)
        vals = np.asarray(f(z), dtype=complex)
        if not np.all(np.isfinite(vals)):
            raise sf.DomainError(f"singular sample on residue circle around {v0}")
        est = complex(radius * np.mean(vals * np.exp(1j * theta)))
        if prev is not None and abs(est - prev) <= tol * max(1.0, abs(est)):
            return est
        prev = est
        m *= 2
    raise NonConvergence(f"residue estimates at {v0} did not stabilize")


def indicator_H(a: float, b: float) -> float:
    """Case flag selecting the zeta-pole residues of the additive family.

    b > 0: 1 if 0 < a < 1 and a + b > 1 strictly, 1/2 if one constraint
    holds with equality while the rest hold, 0 otherwise.  For b < 0 the
    inequalities reverse to 1 < a < 1 - b.
    """
    if b == 0:
        raise DomainError("b must be nonzero")
    tol = BOUNDARY_TOL
    if b > 0:
        margins = (a, 1.0 - a, a + b - 1.0)
    else:
        margins = (a - 1.0, 1.0 - b - a)
    if any(m < -tol for m in margins):
        return 0.0
    if any(abs(m) <= tol for m in margins):
        return 0.5
    return 1.0


def zeta_prime_trivial(n: int, ctx: sf.SpecialFunctionContext = sf.DEFAULT_CTX) -> float:
    """zeta'(-2n) = (-1)^n (2n)! zeta(2n+1) / (2^(2n+1) pi^(2n)) for n >= 1."""
    if n < 1:
        raise DomainError("n must be >= 1")
    z = sf.riemann_zeta(float(2 * n + 1), ctx).real
    return (-1) ** n * math.factorial(2 * n) * z / (2 ** (2 * n + 1) * math.pi ** (2 * n))


def appendix_a_residues(n: int, a: float, b: float,
                        ctx: sf.SpecialFunctionContext = sf.DEFAULT_CTX
                        ) -> list[tuple[PoleSpec, complex]]:
    """Closed-form residues of the additive family integrand
    [zeta(a+iv)^n + zeta(a+b-iv)^n] / cosh(pi v / b) for n <= 4.

    Returns (pole, residue) pairs: the kernel pole at -ib/2 always, and the
    two zeta-pole residues weighted by indicator_H.  A = pi (a-1)/b.
    """
    if n < 1 or n > 4:
        raise DomainError("appendix table covers 1 <= n <= 4")
    if b == 0:
        raise DomainError("b must be nonzero")
    g = ctx.stieltjes_cache
    gamma0, gamma1, gamma2 = g[0], g[1], g[2]
    strip = StripSpec(b)
    out: list[tuple[PoleSpec, complex]] = []

    r_kernel = 2j * b / math.pi * sf.riemann_zeta(a + b / 2.0, ctx) ** n
    out.append((PoleSpec(-1j * b / 2.0, 1, 1.0, r_kernel, "kernel"), r_kernel))

    h = indicator_H(a, b)
    if h > 0.0:
        A = math.pi * (a - 1.0) / b
        cA = math.cos(A)
        if abs(cA) < 1e-12:
            raise DomainError("cos(pi (a-1)/b) vanishes while the residue contributes")
        sA = math.sin(A)
        if n == 1:
            r = -1j / cA
        elif n == 2:
            r = 1j * (-2.0 * gamma0 / cA + math.pi * sA / (b * cA ** 2))
        elif n == 3:
            r = 1j * (
                (3.0 * gamma1 - 3.0 * gamma0 ** 2 + math.pi ** 2 / (2.0 * b * b)) / cA
                + 3.0 * sA * math.pi * gamma0 / (b * cA ** 2)
                - math.pi ** 2 / (b * b * cA ** 3)
            )
        else:
            r = 1j * (
                (12.0 * gamma1 * gamma0 - 2.0 * gamma2 - 4.0 * gamma0 ** 3
                 + 2.0 * gamma0 * math.pi ** 2 / (b * b)) / cA
                - math.pi * sA * (-36.0 * gamma0 ** 2 * b * b + 24.0 * gamma1 * b * b
                                  + math.pi ** 2) / (6.0 * b ** 3 * cA ** 2)
                - 4.0 * math.pi ** 2 * gamma0 / (b * b * cA ** 3)
                + math.pi ** 3 * sA / (b ** 3 * cA ** 4)
            )
        for loc, lbl in (((a - 1.0) * 1j, "zeta_left"), ((1.0 - a - b) * 1j, "zeta_right")):
            w = strip.weight(loc)
            # indicator_H and strip membership agree on the catalog's
            # validity regions; the half-weight comes from the strip edge
            out.append((PoleSpec(loc, n, w if w > 0 else h, r, lbl), r))
    return out


def poles_product_kernel(a: float, b: float,
                         ctx: sf.SpecialFunctionContext = sf.DEFAULT_CTX) -> list[PoleSpec]:
    """Poles of zeta(a+iv) zeta(a+b-iv) / cosh(pi v/b) inside the strip."""
    if b == 0:
        raise DomainError("b must be nonzero")
    strip = StripSpec(b)
    out: list[PoleSpec] = []
    r3 = 1j * sf.riemann_zeta(a + b / 2.0, ctx) ** 2 * b / math.pi
    out.append(PoleSpec(-1j * b / 2.0, 1, 1.0, r3, "P3"))
    for loc, lbl in ((1j * (a - 1.0), "P1"), (1j * (1.0 - a - b), "P2")):
        w = strip.weight(loc)
        if w == 0.0:
            continue
        A = math.pi * (a - 1.0) / b
        if abs(math.cos(A)) < 1e-12:
            raise DomainError("sec(pi (a-1)/b) singular while the pole contributes")
        r12 = -1j * sf.riemann_zeta(2.0 * a + b - 1.0, ctx) / math.cos(A)
        out.append(PoleSpec(loc, 1, w, r12, lbl))
    return out


def poles_fgen_kernel(a: float, b: float,
                      ctx: sf.SpecialFunctionContext = sf.DEFAULT_CTX) -> list[PoleSpec]:
    """Poles of zeta(a+iv) zeta(a+b-iv) [sech(pi b v) - sec(pi b (iv-b))]
    inside the strip (the four-pole construction, all kernel branches)."""
    if b == 0:
        raise DomainError("b must be nonzero")
    strip = StripSpec(b)
    out: list[PoleSpec] = []

    def zprod(v: complex) -> complex:
        return complex(sf.riemann_zeta(a + 1j * v, ctx) * sf.riemann_zeta(a + b - 1j * v, ctx))

    def kernel_diff(v: complex) -> complex:
        return 1.0 / cmath.cosh(math.pi * b * v) - 1.0 / cmath.cos(math.pi * b * (1j * v - b))

    for loc, lbl in ((1j * (a - 1.0), "P1"), (1j * (1.0 - a - b), "P2")):
        w = strip.weight(loc)
        if w == 0.0:
            continue
        z = sf.riemann_zeta(2.0 * a + b - 1.0, ctx)
        sign = -1j if lbl == "P1" else 1j
        r = sign * z * kernel_diff(loc)
        out.append(PoleSpec(loc, 1, w, r, lbl))
    # sech(pi b v) zeros: v = -i (1/2 + k)/b ; sec branch: v = i[(1/2+k)/b - b]
    for k in range(-3, 4):
        loc = -1j * (0.5 + k) / b
        w = strip.weight(loc)
        if w > 0.0:
            r = 1j * (-1) ** k * zprod(loc) / (math.pi * b)
            out.append(PoleSpec(loc, 1, w, r, f"P3[{k}]"))
        loc = 1j * ((0.5 + k) / b - b)
        w = strip.weight(loc)
        if w > 0.0:
            r = 1j * (-1) ** k * zprod(loc) / (math.pi * b)
            out.append(PoleSpec(loc, 1, w, r, f"P4[{k}]"))
    return out


def poles_multiplicative(a: float, b: float, p: int, q: int, r: int,
                         ctx: sf.SpecialFunctionContext = sf.DEFAULT_CTX) -> list[PoleSpec]:
    """Poles inside the strip of
    F = zeta(a+iv)^r zeta(a+b-iv)^r / [(b-iv)^p (a+b-iv)^q].

    p, q must be nonnegative integers here (positive real non-integers are
    branch points, not poles).  For r = -1 the trivial zeros of the
    denominator zetas contribute; nontrivial zeros never lie in the strip.
    """
    if b <= 0:
        raise DomainError("this enumerator assumes b > 0")
    if (p > 0 and int(p) != p) or (q > 0 and int(q) != q):
        raise DomainError("positive p, q must be integers for residues to exist")
    strip = StripSpec(b)
    out: list[PoleSpec] = []

    if p > 0:
        # v = -ib sits exactly on the lower strip edge: half weight always
        res = None
        if p == 1:
            res = 1j * sf.riemann_zeta(a + b, ctx) ** r * sf.riemann_zeta(a, ctx) ** r / a ** q
        out.append(PoleSpec(-1j * b, p, 0.5, res, "P3"))
    if q > 0:
        loc = -1j * (a + b)
        w = strip.weight(loc)
        if w > 0.0:
            res = None
            if q == 1:
                res = 1j * sf.riemann_zeta(2.0 * a + b, ctx) ** r \
                    * sf.riemann_zeta(0.0, ctx) ** r / (-a) ** p
            out.append(PoleSpec(loc, q, w, res, "P4"))
    if r > 0:
        for loc, lbl, sign in ((1j * (a - 1.0), "P1", -1j), (-1j * (a + b - 1.0), "P2", 1j)):
            w = strip.weight(loc)
            if w == 0.0:
                continue
            res = None
            if r == 1:
                z = sf.riemann_zeta(2.0 * a + b - 1.0, ctx)
                if lbl == "P1":
                    res = -1j * z / ((a + b - 1.0) ** p * (2.0 * a + b - 1.0) ** q)
                else:
                    res = 1j * z / (1.0 - a) ** p
            out.append(PoleSpec(loc, abs(r), w, res, lbl))
    if r < 0:
        # trivial zeros of zeta(a+iv) at a+iv = -2n and of zeta(a+b-iv)
        for n in range(1, 40):
            loc = 1j * (2 * n + a)
            if strip.weight(loc) > 0.0:
                zp = zeta_prime_trivial(n, ctx)
                rest = sf.riemann_zeta(a + b - 1j * loc, ctx) ** r \
                    / ((b - 1j * loc) ** p * (a + b - 1j * loc) ** q)
                if r != -1:
                    out.append(PoleSpec(loc, abs(r), strip.weight(loc), None, f"Pz1[{n}]"))
                else:
                    out.append(PoleSpec(loc, 1, strip.weight(loc),
                                        complex(-1j / zp * rest), f"Pz1[{n}]"))
            loc = -1j * (2 * n + a + b)
            if strip.weight(loc) > 0.0:
                zp = zeta_prime_trivial(n, ctx)
                rest = sf.riemann_zeta(a + 1j * loc, ctx) ** r / \
                    ((b - 1j * loc) ** p * 1.0)
                # the q-factor at this point: (a+b-iv)^q with a+b-iv = -2n
                rest = rest / (-2.0 * n) ** q
                if r != -1:
                    out.append(PoleSpec(loc, abs(r), strip.weight(loc), None, f"Pz2[{n}]"))
                else:
                    out.append(PoleSpec(loc, 1, strip.weight(loc),
                                        complex(1j / zp * rest), f"Pz2[{n}]"))
            if 2 * n > abs(a) + abs(b) + 2:
                break
    return out


def poles_trig(b: float, s: float, kind: str = "cosine",
               ctx: sf.SpecialFunctionContext = sf.DEFAULT_CTX) -> list[PoleSpec]:
    """Poles inside the strip of cos^s or sin^s (pi(b/2 - iv)) / cosh(pi v/b).

    For s > 0 (cosine only) the requirement is s < 1/|b| and the kernel pole
    at -ib/2 is the single pole, with residue i b/pi.  For negative s the
    exponent must be a negative integer so the trig zeros are poles; the
    sine kernel obeys the antisymmetry criterion only for even s.
    """
    if b == 0:
        raise DomainError("b must be nonzero")
    if s > 0:
        if kind != "cosine":
            raise DomainError("positive powers are catalogued for the cosine kernel only")
        if s >= 1.0 / abs(b):
            raise DomainError("require s < 1/|b| for convergence")
    elif s < 0:
        if int(s) != s:
            raise DomainError("negative s must be a negative integer")
        if kind == "sine" and int(s) % 2 != 0:
            raise DomainError("sine kernel requires even s")
    strip = StripSpec(b)
    out: list[PoleSpec] = []
    n_pow = int(-s) if s < 0 else 0

    merged_kernel = False
    if kind == "sine" and s < 0:
        # sin zeros: v = -i(b/2 - k); k = 0 merges with the kernel pole
        kmax = int(math.floor(abs(b) / 2.0 + 1.0))
        for k in range(-kmax - 1, kmax + 2):
            loc = -1j * (b / 2.0 - k)
            w = strip.weight(loc)
            if w == 0.0:
                continue
            if k == 0:
                merged_kernel = True
                out.append(PoleSpec(loc, n_pow + 1, w, None, "S0"))
            else:
                res = -1j * math.cos(math.pi * k / b) / (
                    math.sin(math.pi * k / b) ** 2 * math.pi * b) if n_pow == 2 else None
                out.append(PoleSpec(loc, n_pow, w, res, f"S[{k}]"))
    if kind == "cosine" and s < 0:
        # cos zeros: v = -i(b/2 - 1/2 - k)
        kmax = int(math.floor(abs(b) / 2.0 + 1.0))
        for k in range(-kmax - 2, kmax + 2):
            loc = -1j * (b / 2.0 - 0.5 - k)
            w = strip.weight(loc)
            if w == 0.0:
                continue
            out.append(PoleSpec(loc, n_pow, w, None, f"C[{k}]"))
    if not merged_kernel:
        val = 1.0 if kind == "cosine" else None
        res = 1j * b / math.pi if kind == "cosine" else None
        loc = -1j * b / 2.0
        out.append(PoleSpec(loc, 1, strip.weight(loc), res, "kernel"))
    return out
