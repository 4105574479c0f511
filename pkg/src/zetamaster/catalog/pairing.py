"""Entries with not-so-obvious convergence: zeta paired with a convergent
partner through the strip map, and the shifted-base variants from the
half-offset Hurwitz specialization.  Their integrands decay only
algebraically with oscillation, so the truncated core is completed by
contour-rotated analytic tails.
"""

from __future__ import annotations

import math

import numpy as np

from .. import specfun as sf
from ..master import QuadSpec
from ..residues import PoleSpec, StripSpec
from ..tails import zeta_ratio_plan
from ._common import C, PI, Z, antisym, entry

V_CUT = 45.7  # clear of zeta-zero ordinates 43.33 and 48.01
SQRT2 = math.sqrt(2.0)


def _ratio_term(a, eps):
    def term(v):
        s = a + eps * 1j * v
        return Z(s) / s
    return term


def _weighted_term(scale, beta, a, eps):
    def term(v):
        s = a + eps * 1j * v
        return scale * np.power(beta, 1j * v) * Z(s) / s
    return term


# --- the zeta family ----------------------------------------------------------

entry(
    "T1", "pairing_convergence", "4.1",
    integrand=lambda p: lambda v: _ratio_term(p["a"], 1)(C(v)) - _ratio_term(p["a"] + p["b"], -1)(C(v)),
    closed_form=lambda p, ctx: -2.0 * PI,
    quad=lambda p: QuadSpec(domain="line", decay_rate=1.0, V=V_CUT,
                            tail=zeta_ratio_plan(1.0, 1.0, p["a"], 1)
                            + zeta_ratio_plan(-1.0, 1.0, p["a"] + p["b"], -1)),
    params={"a": 0.4, "b": 1.2},
    ranges={"a": (0.0, 1.0), "b": (0.0, 3.0)},
    strip=lambda p: StripSpec(p["b"]),
    criterion=antisym,
    poles=lambda p: [
        PoleSpec(1j * (p["a"] - 1.0), 1,
                 StripSpec(p["b"]).weight(1j * (p["a"] - 1.0)), -1j, "P1"),
        PoleSpec(1j * (1.0 - p["a"] - p["b"]), 1,
                 StripSpec(p["b"]).weight(1j * (1.0 - p["a"] - p["b"])), -1j, "P2"),
    ],
    validity=lambda p: 1.0 - p["b"] < p["a"] < 1.0,
    expr="-2 pi",
)

entry(
    "IntF6", "pairing_convergence", "4.1",
    integrand=lambda p: lambda v: _ratio_term(0.5, 1)(C(v)) - _ratio_term(1.5, -1)(C(v)),
    closed_form=lambda p, ctx: -2.0 * PI,
    quad=lambda p: QuadSpec(domain="line", decay_rate=1.0, V=V_CUT,
                            tail=zeta_ratio_plan(1.0, 1.0, 0.5, 1)
                            + zeta_ratio_plan(-1.0, 1.0, 1.5, -1)),
    strip=lambda p: StripSpec(1.0),
    criterion=antisym,
    poles=lambda p: [PoleSpec(-0.5j, 1, 1.0, -2j, "merged")],
    expr="-2 pi",
)

entry(
    "JaJbx", "pairing_convergence", "4.1",
    integrand=lambda p: lambda v: _ratio_term(p["a"] + p["b"], -1)(C(v)),
    closed_form=lambda p, ctx: PI,
    quad=lambda p: QuadSpec(domain="line", decay_rate=1.0, V=V_CUT,
                            tail=zeta_ratio_plan(1.0, 1.0, p["a"] + p["b"], -1)),
    params={"a": 0.5, "b": 1.0},
    ranges={"a": (0.0, 3.0), "b": (0.0, 3.0)},
    rhs_residues_override=lambda p, ctx: __import__(
        "zetamaster.oracles", fromlist=["appendix_b_value"]).appendix_b_value(p["a"], p["b"]),
    validity=lambda p: p["a"] + p["b"] > 1.0,
    expr="pi",
    symmetries=("constant_in_a_b",),
    notes="Absolutely convergent partner: the telescoped Dirichlet double "
          "sum (the independent oracle) gives pi exactly, for any a+b > 1.",
)

entry(
    "JA1", "pairing_convergence", "4.1",
    integrand=lambda p: lambda v: _ratio_term(p["a"], 1)(C(v)),
    closed_form=lambda p, ctx: -PI,
    quad=lambda p: QuadSpec(domain="line", decay_rate=1.0, V=V_CUT,
                            tail=zeta_ratio_plan(1.0, 1.0, p["a"], 1)),
    params={"a": 0.7}, ranges={"a": (0.0, 1.0)},
    rhs_residues_override=lambda p, ctx: -2.0 * PI + PI,
    validity=lambda p: 0.0 < p["a"] < 1.0,
    expr="-pi",
    notes="The strip-paired combination of T1 (residue sum -2 pi) and the "
          "convergent partner (+pi).",
)

entry(
    "Jh", "pairing_convergence", "4.1",
    integrand=lambda p: lambda v: _ratio_term(0.5, 1)(C(v)),
    closed_form=lambda p, ctx: -PI,
    quad=lambda p: QuadSpec(domain="line", decay_rate=1.0, V=V_CUT,
                            tail=zeta_ratio_plan(1.0, 1.0, 0.5, 1)),
    rhs_residues_override=lambda p, ctx: -2.0 * PI + PI,
    expr="-pi",
    notes="Critical-line instance: converges although the real part of "
          "zeta(1/2+iv) is usually positive.",
)

entry(
    "Jh1", "pairing_convergence", "4.1",
    integrand=lambda p: lambda v: ((2.0 * C(v) * Z(0.5 + 1j * C(v)).imag
                                    + Z(0.5 + 1j * C(v)).real)
                                   / (0.25 + C(v) ** 2)),
    closed_form=lambda p, ctx: -PI,
    quad=lambda p: QuadSpec(domain="half", decay_rate=1.0, V=V_CUT,
                            tail=zeta_ratio_plan(1.0, 1.0, 0.5, 1)),
    rhs_residues_override=lambda p, ctx: -2.0 * PI + PI,
    expr="-pi",
    notes="Half-line real form of Jh; the displayed integrand equals "
          "F(v) + F(-v), so the tail of the half-line integral is the full "
          "symmetric tail of F.",
)

# --- the half-offset (Hurwitz w = 0) family ----------------------------------


def _aa_integrand(p):
    def f(v):
        v = C(v)
        s1 = 0.5 + 1j * v
        s2 = 1.5 - 1j * v
        return ((np.power(2.0, s1) - 1.0) * Z(s1) / s1
                - (np.power(2.0, s2) - 1.0) * Z(s2) / s2)
    return f


_AA_PLAN = None
_AAE1_PLAN = None


def _aa_quad(p):
    global _AA_PLAN
    if _AA_PLAN is None:
        _AA_PLAN = (zeta_ratio_plan(SQRT2, 2.0, 0.5, 1)
                    + zeta_ratio_plan(-1.0, 1.0, 0.5, 1)
                    + zeta_ratio_plan(-2.0 * SQRT2, 0.5, 1.5, -1)
                    + zeta_ratio_plan(1.0, 1.0, 1.5, -1))
    return QuadSpec(domain="line", decay_rate=1.0, V=V_CUT, tail=_AA_PLAN)


entry(
    "AA", "hurwitz", "4.2",
    integrand=_aa_integrand,
    closed_form=lambda p, ctx: -2.0 * PI,
    quad=_aa_quad,
    strip=lambda p: StripSpec(1.0),
    criterion=antisym,
    poles=lambda p: [PoleSpec(-0.5j, 1, 1.0, -2j, "merged")],
    expr="-2 pi",
    notes="The half-offset Hurwitz specialization (2^s - 1) zeta(s) paired "
          "across the strip; the factor (2-1) leaves residue -2i at -i/2.",
)


def _aae1_integrand(p):
    def f(v):
        v = C(v)
        s1 = 0.5 + 1j * v
        s2 = 1.5 - 1j * v
        return (Z(s1) * np.power(2.0, 1j * v) / s1
                - Z(s2) * np.power(2.0, 1.0 - 1j * v) / s2)
    return f


def _aae1_quad(p):
    global _AAE1_PLAN
    if _AAE1_PLAN is None:
        _AAE1_PLAN = (zeta_ratio_plan(1.0, 2.0, 0.5, 1)
                      + zeta_ratio_plan(-2.0, 0.5, 1.5, -1))
    return QuadSpec(domain="line", decay_rate=1.0, V=V_CUT, tail=_AAE1_PLAN)


entry(
    "AAE1", "hurwitz", "4.2",
    integrand=_aae1_integrand,
    closed_form=lambda p, ctx: -2.0 * PI * SQRT2,
    quad=_aae1_quad,
    strip=lambda p: StripSpec(1.0),
    criterion=antisym,
    poles=lambda p: [PoleSpec(-0.5j, 1, 1.0, -2j * SQRT2, "merged")],
    expr="-2 pi sqrt(2)",
)

entry(
    "J5e6", "hurwitz", "4.2",
    integrand=lambda p: lambda v: Z(1.5 - 1j * C(v)) * np.power(2.0, -1j * C(v))
    / (1.5 - 1j * C(v)),
    closed_form=lambda p, ctx: 3.0 * PI * SQRT2 / 4.0,
    quad=lambda p: QuadSpec(domain="line", decay_rate=1.0, V=V_CUT,
                            tail=zeta_ratio_plan(1.0, 0.5, 1.5, -1)),
    rhs_residues_override=lambda p, ctx: __import__(
        "zetamaster.oracles", fromlist=["dirichlet_perron_value"])
    .dirichlet_perron_value(1.5, 0.5),
    expr="3 pi sqrt(2)/4",
    notes="Absolutely convergent partner with 2^(-iv) weight; the "
          "Dirichlet-Perron oracle sums the j = 1, 2 survivors.",
)

entry(
    "J8b", "hurwitz", "4.2",
    integrand=lambda p: lambda v: Z(0.5 + 1j * C(v)) * np.power(2.0, 1j * C(v))
    / (0.5 + 1j * C(v)),
    closed_form=lambda p, ctx: -PI * SQRT2 / 2.0,
    quad=lambda p: QuadSpec(domain="line", decay_rate=1.0, V=V_CUT,
                            tail=zeta_ratio_plan(1.0, 2.0, 0.5, 1)),
    rhs_residues_override=lambda p, ctx: -2.0 * PI * SQRT2 + 3.0 * PI * SQRT2 / 2.0,
    expr="-pi sqrt(2)/2",
    notes="AAE1 plus twice the convergent J5e6 partner.",
)
