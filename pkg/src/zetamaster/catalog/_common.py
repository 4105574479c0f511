"""Shared shorthand for catalog entry definitions."""

from __future__ import annotations

import math

import numpy as np

from .. import specfun as sf
from ..master import CriterionKind, IdentitySpec, QuadSpec
from ..residues import PoleSpec, StripSpec
from . import CatalogEntry, ParamRange, register

PI = math.pi
EULER = sf.DEFAULT_CTX.stieltjes_cache[0]


def C(v):
    return np.asarray(v, dtype=complex)


def Z(s, ctx=sf.DEFAULT_CTX):
    return sf.riemann_zeta(s, ctx)


def sech(x):
    return 1.0 / np.cosh(x)


def halve_real(params, master_value: complex) -> complex:
    """Displayed half-line real-part value from the full-line master value."""
    return complex(master_value.real) / 2.0


def take_real(params, master_value: complex) -> complex:
    return complex(master_value.real)


def take_imag_half(params, master_value: complex) -> complex:
    return complex(master_value.imag) / 2.0


def take_imag(params, master_value: complex) -> complex:
    return complex(master_value.imag)


def antisym(params) -> CriterionKind:
    return CriterionKind("antisymmetric")


def entry(id: str, family: str, section: str, *, integrand, closed_form, quad,
          params: dict | None = None, ranges: dict | None = None,
          strip=None, criterion=None, poles=None, validity=None,
          residue_basis=None, residue_scale=None, rhs_residues_override=None,
          residues_to_value=None, criterion_avoid=None, kind="equality",
          approx_check=None, expr="", notes="", symmetries=()) -> CatalogEntry:
    spec = IdentitySpec(
        id=id, integrand=integrand, closed_form=closed_form, quad=quad,
        paper_eq=id, strip=strip, criterion=criterion, poles=poles,
        validity=validity, residue_basis=residue_basis,
        residue_scale=residue_scale, rhs_residues_override=rhs_residues_override,
        residues_to_value=residues_to_value, kind=kind, approx_check=approx_check,
        criterion_avoid=criterion_avoid,
    )
    return register(CatalogEntry(
        id=id, family=family, section=section, spec=spec,
        default_params=dict(params or {}),
        param_ranges={k: ParamRange(*v) for k, v in (ranges or {}).items()},
        closed_form_expr=expr, notes=notes, symmetries=tuple(symmetries),
    ))
