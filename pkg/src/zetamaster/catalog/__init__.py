"""Declarative registry of every identity in the catalog, keyed by the
equation label of the source identity collection.

Each entry binds an integrand builder, a pole catalog, a validity region,
and a closed form; ``load_catalog`` returns the full list and
``headline_suite`` the eighteen showcase identities.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from ..master import IdentitySpec

__all__ = [
    "CatalogEntry",
    "ValidationError",
    "load_catalog",
    "get_entry",
    "headline_suite",
    "build_integrand",
    "catalog_json",
    "HEADLINE_IDS",
]


class ValidationError(ValueError):
    """Catalog integrity violation (duplicate ids, malformed ranges)."""


@dataclass
class ParamRange:
    lo: float
    hi: float
    open_lo: bool = True
    open_hi: bool = True

    def contains(self, x: float) -> bool:
        if self.open_lo:
            if not x > self.lo:
                return False
        elif not x >= self.lo:
            return False
        if self.open_hi:
            if not x < self.hi:
                return False
        elif not x <= self.hi:
            return False
        return True


@dataclass
class CatalogEntry:
    id: str
    family: str
    section: str
    spec: IdentitySpec
    default_params: dict[str, float] = field(default_factory=dict)
    param_ranges: dict[str, ParamRange] = field(default_factory=dict)
    closed_form_expr: str = ""
    notes: str = ""
    symmetries: tuple[str, ...] = ()
    headline: bool = False

    @property
    def paper_eq(self) -> str:
        return self.spec.paper_eq or self.id


_REGISTRY: dict[str, CatalogEntry] = {}

FAMILIES = (
    "b1_specific", "general_ex6", "product_kernel", "fgen_fourpole",
    "crit2_family", "pairing_convergence", "hurwitz", "multiplicative_h",
    "trig_cosine", "trig_sine", "trig_differentiated", "approximation",
)

# the seventeen showcase displays plus Intf1 (quoted alongside them in the
# acceptance values) make up the headline suite of eighteen
HEADLINE_IDS = (
    "Intf1", "IntG3", "IntG5b", "K1d", "Ex6ApB", "DiffSq", "ScMin", "J1ab",
    "Zid", "Ct4bm1", "CritLim", "Ct2d", "FintG3", "Jh", "J8b", "FintBx",
    "CR2b", "Test2G",
)


def register(entry: CatalogEntry) -> CatalogEntry:
    if entry.id in _REGISTRY:
        raise ValidationError(f"duplicate catalog id {entry.id!r}")
    if entry.family not in FAMILIES:
        raise ValidationError(f"unknown family {entry.family!r} for {entry.id}")
    for name, rng in entry.param_ranges.items():
        if not rng.lo < rng.hi:
            raise ValidationError(f"malformed range for {entry.id}.{name}")
        if name in entry.default_params and not rng.contains(entry.default_params[name]):
            raise ValidationError(f"default {name} outside range for {entry.id}")
    entry.headline = entry.id in HEADLINE_IDS
    _REGISTRY[entry.id] = entry
    return entry


def _populate() -> None:
    if _REGISTRY:
        return
    from . import b1, ex6, product, fourpole, pairing, multiplicative, trig  # noqa: F401


def load_catalog() -> list[CatalogEntry]:
    """All catalog entries, ordered by id for determinism."""
    _populate()
    return [_REGISTRY[k] for k in sorted(_REGISTRY)]


def get_entry(entry_id: str) -> CatalogEntry:
    _populate()
    try:
        return _REGISTRY[entry_id]
    except KeyError:
        raise ValidationError(f"no catalog entry named {entry_id!r}") from None


def headline_suite() -> list[CatalogEntry]:
    """Exactly the eighteen headline identities, in catalog order."""
    _populate()
    return [_REGISTRY[i] for i in sorted(HEADLINE_IDS)]


def build_integrand(entry: CatalogEntry, params: dict | None = None):
    """The entry's integrand closed over parameters (validated)."""
    p = dict(entry.default_params)
    p.update(params or {})
    for name, value in p.items():
        rng = entry.param_ranges.get(name)
        if rng is not None and not rng.contains(value):
            raise ValidationError(f"{entry.id}: parameter {name}={value} outside range")
    if entry.spec.validity is not None and not entry.spec.validity(p):
        raise ValidationError(f"{entry.id}: parameters {p} violate the validity predicate")
    return entry.spec.integrand(p)


def catalog_json() -> str:
    """The audit surface: ids, sections, families, parameter boxes, and the
    textual closed forms (the executable ones live in code, keyed by id)."""
    rows = []
    for e in load_catalog():
        rows.append({
            "id": e.id,
            "paper_eq": e.paper_eq,
            "section": e.section,
            "family": e.family,
            "headline": e.headline,
            "params": {
                k: {
                    "default": e.default_params.get(k),
                    "min": r.lo, "max": r.hi,
                    "open_min": r.open_lo, "open_max": r.open_hi,
                } for k, r in e.param_ranges.items()
            },
            "closed_form_expr": e.closed_form_expr,
            "symmetries": list(e.symmetries),
            "notes": e.notes,
        })
    return json.dumps(rows, indent=2)
