"""Verification engine for the extended Glasser master theorem.

Evaluates a catalog of improper integrals with Riemann-zeta (and
trigonometric) integrands three ways: high-accuracy quadrature, the
theorem's residue sum, and the published closed form.
"""

__version__ = "0.1.0"
