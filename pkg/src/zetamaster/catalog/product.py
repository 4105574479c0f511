"""Product-kernel variations: zeta(a+iv) zeta(a+b-iv)/cosh(pi v/b) with its
three-pole structure, the functional-equation rewrites, and the
zeta(a-iv) zeta(a-1+iv)/cosh(pi v) family with its case flag.
"""

from __future__ import annotations

import math

import numpy as np

from .. import specfun as sf
from ..master import QuadSpec
from ..residues import PoleSpec, StripSpec, poles_product_kernel
from ._common import C, PI, Z, antisym, entry, take_imag, take_real

TWO_PI = 2.0 * PI
_G = sf.DEFAULT_CTX.stieltjes_cache


def _line_re(rate_of, **kw):
    def make(p):
        return QuadSpec(domain="line", mode="real_part_only", decay_rate=rate_of(p), **kw)
    return make


# --- 3.4: variations of the product kernel -----------------------------------

entry(
    "Ctx2m", "product_kernel", "3.4",
    integrand=lambda p: lambda v: Z(1.0 + 1j * C(v)) * Z(0.5 - 1j * C(v))
    / np.cosh(TWO_PI * C(v)),
    closed_form=lambda p, ctx: Z(0.5).real * PI + Z(0.75).real ** 2 / 2.0,
    quad=_line_re(lambda p: TWO_PI, singular_points=(0.0,)),
    strip=lambda p: StripSpec(0.5),
    criterion=antisym,
    residue_basis=lambda p: lambda v: Z(0.5 + 1j * C(v)) * Z(1.0 - 1j * C(v))
    / np.cosh(TWO_PI * C(v)),
    poles=lambda p: poles_product_kernel(0.5, 0.5),
    residues_to_value=take_real,
    criterion_avoid=lambda p: (0.0,),
    expr="zeta(1/2) pi + zeta(3/4)^2/2",
    notes="a = b = 1/2 (equivalently a = 1, b = -1/2): both zeta-pole "
          "residues sit exactly on the strip edges and are halved.",
)

entry(
    "Ctx3", "product_kernel", "3.4",
    integrand=lambda p: lambda v: Z(0.5 - p["b"] + 1j * C(v)) * Z(0.5 - 1j * C(v))
    / np.cosh(PI * C(v) / p["b"]),
    closed_form=lambda p, ctx: p["b"] * Z(0.5 - p["b"] / 2.0).real ** 2,
    quad=lambda p: QuadSpec(domain="line", decay_rate=PI / abs(p["b"])),
    params={"b": 0.4}, ranges={"b": (0.0, 1.0)},
    strip=lambda p: StripSpec(p["b"]),
    criterion=antisym,
    poles=lambda p: poles_product_kernel(0.5 - p["b"], p["b"]),
    expr="b zeta(1/2-b/2)^2",
    notes="a = 1/2 - b keeps only the kernel pole inside the strip.",
)


def _ctx4_x(b: float) -> float:
    # weight of the zeta-pole pair: it crosses the strip edges at |b| = 1
    a = 0.5 - b / 2.0
    return StripSpec(b).weight(1j * (a - 1.0))


def _ctx4_closed(p, ctx) -> complex:
    b = p["b"]
    x = _ctx4_x(b)
    val = b * Z(0.5).real ** 2
    if x > 0.0:
        val += x * PI / math.cos(PI * (-1.0 - b) / (2.0 * b))
    return math.copysign(1.0, b) * val


entry(
    "Ctx4", "product_kernel", "3.4",
    integrand=lambda p: lambda v: Z(0.5 - p["b"] / 2.0 + 1j * C(v))
    * Z(0.5 + p["b"] / 2.0 - 1j * C(v)) / np.cosh(PI * C(v) / p["b"]),
    closed_form=_ctx4_closed,
    quad=lambda p: QuadSpec(domain="line", mode="real_part_only",
                            decay_rate=PI / abs(p["b"]),
                            singular_points=(0.0,) if abs(abs(p["b"]) - 1.0) < 1e-9 else ()),
    params={"b": 1.5}, ranges={"b": (-2.0, 2.0)},
    strip=lambda p: StripSpec(p["b"]),
    criterion=antisym,
    poles=lambda p: poles_product_kernel(0.5 - p["b"] / 2.0, p["b"]),
    residues_to_value=take_real,
    criterion_avoid=lambda p: (0.0,) if abs(abs(p["b"]) - 1.0) < 1e-9 else (),
    validity=lambda p: p["b"] != 0.0,
    expr="sign(b)(b zeta(1/2)^2 + X pi sec(pi(1+b)/(2b))), X = 0, 1/2, 1 "
         "as |b| <, =, > 1",
    symmetries=("b_negation",),
    notes="Correlation of zeta on diagonally opposite sides of the critical "
          "line; the overall sign of the right side follows the sign of b "
          "(the reading that verifies numerically).",
)


def _cty1a_integrand(p):
    b = p["b"]

    def f(v):
        v = C(v)
        s2 = 0.5 + b / 2.0 - 1j * v
        return (Z(s2) ** 2 * sf.gamma(s2) * np.power(TWO_PI, 1j * v)
                * np.sin(PI * (0.25 - b / 4.0 + 0.5j * v)) / np.cosh(PI * v / b))
    return f


def _cty1a_closed(p, ctx) -> complex:
    b = p["b"]
    x = _ctx4_x(b)
    val = Z(0.5).real ** 2 * b
    if x > 0.0:
        val += x * PI / math.cos(PI * (-1.0 - b) / (2.0 * b))
    return TWO_PI ** ((1.0 + b) / 2.0) / 2.0 * val


def _ctx4_pole_locations(b: float):
    a = 0.5 - b / 2.0
    strip = StripSpec(b)
    out = [PoleSpec(-0.5j * b, 1, 1.0, None, "kernel")]
    for loc, lbl in ((1j * (a - 1.0), "P1"), (1j * (1.0 - a - b), "P2")):
        w = strip.weight(loc)
        if w > 0.0:
            out.append(PoleSpec(loc, 1, w, None, lbl))
    return out


entry(
    "CTy1a", "product_kernel", "3.4",
    integrand=_cty1a_integrand,
    closed_form=_cty1a_closed,
    quad=_line_re(lambda p: PI / abs(p["b"])),
    params={"b": 0.5}, ranges={"b": (0.0, 1.0)},
    strip=lambda p: StripSpec(p["b"]),
    criterion=antisym,
    poles=lambda p: _ctx4_pole_locations(p["b"]),
    residues_to_value=take_real,
    validity=lambda p: 0.0 < p["b"] < 1.0 - 1e-9,
    expr="(2 pi)^((1+b)/2)/2 (zeta(1/2)^2 b + X pi sec(pi(-1-b)/(2b)))",
    notes="Functional-equation rewrite of Ctx4; the integrand is pointwise "
          "a constant multiple of the Ctx4 integrand.",
)

entry(
    "Ct4b1", "product_kernel", "3.4",
    integrand=lambda p: lambda v: (np.power(TWO_PI, 1j * C(v)) * Z(1.0 - 1j * C(v)) ** 2
                                   * sf.gamma(1.0 - 1j * C(v))
                                   * np.sinh(PI * C(v) / 2.0) / np.cosh(PI * C(v))),
    closed_form=lambda p, ctx: PI * (PI / 2.0 - Z(0.5).real ** 2),
    quad=lambda p: QuadSpec(domain="line", mode="imaginary_part_only",
                            decay_rate=PI / 2.0, singular_points=(0.0,)),
    strip=lambda p: StripSpec(1.0),
    criterion=antisym,
    poles=lambda p: [
        PoleSpec(0.0 + 0j, 1, 0.5, None, "axis"),
        PoleSpec(-0.5j, 1, 1.0, None, "kernel"),
        PoleSpec(-1j, 1, 0.5, None, "edge"),
    ],
    residues_to_value=take_imag,
    criterion_avoid=lambda p: (0.0,),
    expr="pi (pi/2 - zeta(1/2)^2)",
    notes="b = 1 functional-equation form: pointwise -i pi times "
          "zeta(iv) zeta(1-iv)/cosh(pi v), so the imaginary part is "
          "integrated while the real part carries the v = 0 divergence.",
)

entry(
    "Ct4bm1", "product_kernel", "3.4",
    integrand=lambda p: lambda v: (np.power(TWO_PI, 1j * C(v)) * Z(-1j * C(v)) ** 2
                                   * sf.gamma(-1j * C(v))
                                   * np.cosh(PI * C(v) / 2.0) / np.cosh(PI * C(v))),
    closed_form=lambda p, ctx: Z(0.5).real ** 2 / 2.0 - PI / 4.0,
    quad=lambda p: QuadSpec(domain="line", mode="real_part_only",
                            decay_rate=PI / 2.0, singular_points=(0.0,)),
    strip=lambda p: StripSpec(-1.0),
    criterion=antisym,
    poles=lambda p: [
        PoleSpec(0.0 + 0j, 1, 0.5, None, "axis"),
        PoleSpec(0.5j, 1, 1.0, None, "kernel"),
        PoleSpec(1j, 1, 0.5, None, "edge"),
    ],
    residues_to_value=take_real,
    criterion_avoid=lambda p: (0.0,),
    expr="zeta(1/2)^2/2 - pi/4",
    notes="b = -1 partner: the mirrored strip 0 < Im v < 1 with reversed "
          "contour orientation; pointwise half the a = 1 shifted-pair "
          "integrand.",
)

# --- 3.6: the shifted-pair family zeta(a-iv) zeta(a-1+iv) --------------------


def _ct2_closed(p, ctx) -> complex:
    a = p["a"]
    if abs(a - 1.5) < 1e-9:
        # limit value: the two divergent terms cancel into the b = 1
        # product identity
        return 2.0 * ctx.stieltjes_cache[1] + ctx.stieltjes_cache[0] ** 2 - PI ** 2 / 6.0
    x = StripSpec(1.0).weight(1j * (a - 2.0))
    val = Z(a - 0.5) ** 2
    if x > 0.0:
        val = val - 2.0 * PI * x * Z(2.0 * a - 2.0) / math.cos(PI * a)
    return complex(val).real


def _ct2_poles(p):
    a = p["a"]
    if abs(a - 1.5) < 1e-9:
        return [PoleSpec(-0.5j, 3, 1.0,
                         1j / PI * (2.0 * _G[1] + _G[0] ** 2 - PI ** 2 / 6.0), "merged")]
    return poles_product_kernel(a - 1.0, 1.0)


entry(
    "Ct2", "crit2_family", "3.6",
    integrand=lambda p: lambda v: Z(p["a"] - 1j * C(v)) * Z(p["a"] - 1.0 + 1j * C(v))
    / np.cosh(PI * C(v)),
    closed_form=_ct2_closed,
    quad=lambda p: QuadSpec(domain="line", mode="real_part_only", decay_rate=PI,
                            singular_points=(0.0,) if abs(p["a"] - 1.0) < 1e-9 else ()),
    params={"a": 1.2}, ranges={"a": (0.0, 2.0, True, False)},
    strip=lambda p: StripSpec(1.0),
    criterion=antisym,
    poles=_ct2_poles,
    residues_to_value=take_real,
    criterion_avoid=lambda p: (0.0,) if abs(p["a"] - 1.0) < 1e-9 else (),
    expr="zeta(a-1/2)^2 - 2 pi X zeta(2a-2) sec(pi a), X = 1 on 1 < a < 2, "
         "1/2 at the endpoints, else 0",
    notes="Obeys both the antisymmetric criterion and the difference "
          "corollary.  a = 3/2 is stored as its post-limit value; a = 1 "
          "uses the half case flag with only the imaginary part divergent.",
)

entry(
    "Ct2d", "crit2_family", "3.6",
    integrand=lambda p: lambda v: Z(0.5 - 1j * C(v)) * Z(-0.5 + 1j * C(v))
    / np.cosh(PI * C(v)),
    closed_form=lambda p, ctx: 0.25,
    quad=lambda p: QuadSpec(domain="line", decay_rate=PI),
    strip=lambda p: StripSpec(1.0),
    criterion=antisym,
    poles=lambda p: poles_product_kernel(-0.5, 1.0),
    expr="1/4",
)

entry(
    "Ct2e", "crit2_family", "3.6",
    integrand=lambda p: lambda v: Z(1.0 - 1j * C(v)) * Z(1j * C(v))
    / np.cosh(PI * C(v)),
    closed_form=lambda p, ctx: Z(0.5).real ** 2 - PI / 2.0,
    quad=lambda p: QuadSpec(domain="line", mode="real_part_only", decay_rate=PI,
                            singular_points=(0.0,)),
    strip=lambda p: StripSpec(1.0),
    criterion=antisym,
    poles=lambda p: poles_product_kernel(0.0, 1.0),
    residues_to_value=take_real,
    criterion_avoid=lambda p: (0.0,),
    expr="zeta(1/2)^2 - pi/2",
    notes="The a = 1 boundary case: X = 1/2 and only the imaginary part of "
          "the integrand diverges at v = 0.",
)
