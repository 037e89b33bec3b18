"""Second-order jets along one-parameter subgroup curves.

A jet (f0, f1, f2) holds the value and the first two derivatives of
s -> f(x exp(sZ)) at s = 0.  Entry functions seed the arithmetic exactly:
f0 = x_ij, f1 = (xZ)_ij, f2 = (xZ^2)_ij, and the ring operations propagate
derivatives through any polynomial or rational expression without
truncation error.

The components may be scalars or numpy arrays; :class:`BasisCurves` stacks
the seeds of a whole signed frame so one expression walk differentiates
along every frame vector at once.  The tension field tau and the
conformality operator kappa are then signed sums over that frame.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError
from .matrices import SignedBasis, SignedBasisVector


@dataclass
class Jet2:
    f0: object
    f1: object
    f2: object

    def __add__(self, other: "Jet2") -> "Jet2":
        return Jet2(self.f0 + other.f0, self.f1 + other.f1, self.f2 + other.f2)

    def __sub__(self, other: "Jet2") -> "Jet2":
        return Jet2(self.f0 - other.f0, self.f1 - other.f1, self.f2 - other.f2)

    def __neg__(self) -> "Jet2":
        return Jet2(-self.f0, -self.f1, -self.f2)

    def __mul__(self, other: "Jet2") -> "Jet2":
        # Leibniz: (fg)'' = f''g + 2f'g' + fg''
        return Jet2(
            self.f0 * other.f0,
            self.f1 * other.f0 + self.f0 * other.f1,
            self.f2 * other.f0 + 2.0 * self.f1 * other.f1 + self.f0 * other.f2,
        )

    def __truediv__(self, other: "Jet2") -> "Jet2":
        g0 = np.asarray(other.f0)
        if np.any(g0 == 0):
            raise DomainError("jet division by zero value", value=other.f0)
        f0, f1, f2 = self.f0, self.f1, self.f2
        h0, h1, h2 = other.f0, other.f1, other.f2
        num1 = f1 * h0 - f0 * h1
        num2 = h0 * h0 * f2 - 2.0 * h0 * f1 * h1 + 2.0 * f0 * h1 * h1 - f0 * h0 * h2
        return Jet2(f0 / h0, num1 / (h0 * h0), num2 / (h0 * h0 * h0))

    def scaled(self, c) -> "Jet2":
        return Jet2(c * self.f0, c * self.f1, c * self.f2)


def jet_add(a: Jet2, b: Jet2) -> Jet2:
    return a + b


def jet_mul(a: Jet2, b: Jet2) -> Jet2:
    return a * b


def jet_div(a: Jet2, b: Jet2) -> Jet2:
    return a / b


def jet_scale(a: Jet2, c) -> Jet2:
    return a.scaled(c)


def constant_jet(value) -> Jet2:
    return Jet2(complex(value), 0.0, 0.0)


class CurvePoint:
    """Base point x and direction (Z, sign): the curve s -> x exp(sZ).

    Caches x Z and x Z^2, the seeds of every entry jet along the curve.
    """

    def __init__(self, base: np.ndarray, direction: SignedBasisVector):
        base = np.asarray(base, dtype=complex)
        z = direction.matrix
        if base.shape != z.shape:
            raise ValidationError("base point and direction have different dimensions")
        self.base = base
        self.direction = direction
        self.m1 = base @ z
        self.m2 = self.m1 @ z

    @property
    def dim(self) -> int:
        return self.base.shape[0]


class BasisCurves:
    """Curves along every vector of a signed basis at one base point.

    Seeds are stacked over the leading axis, so an expression jet evaluated
    here carries the derivatives along the whole frame in its components.
    """

    def __init__(self, base: np.ndarray, basis: SignedBasis):
        base = np.asarray(base, dtype=complex)
        zs = basis.matrices
        if zs.shape[0] and base.shape != zs.shape[1:]:
            raise ValidationError("base point and basis have different dimensions")
        self.base = base
        self.basis = basis
        self.m1 = base @ zs if zs.shape[0] else zs
        self.m2 = self.m1 @ zs if zs.shape[0] else zs
        self.signs = basis.signs

    @property
    def dim(self) -> int:
        return self.base.shape[0]


def entry_jet(curve, i: int, j: int) -> Jet2:
    """Jet of the matrix-entry coordinate x_ij along a curve, 1-based."""
    n = curve.dim
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValidationError(f"entry ({i},{j}) out of range for dimension {n}")
    return Jet2(
        curve.base[i - 1, j - 1],
        curve.m1[..., i - 1, j - 1],
        curve.m2[..., i - 1, j - 1],
    )


def _signed_sum(signs: np.ndarray, values) -> complex:
    return complex(np.sum(signs * values))


def tau(f, x: np.ndarray, basis: SignedBasis) -> complex:
    """Tension field: the signed sum of second derivatives over the frame."""
    jet = f.eval_jet(BasisCurves(x, basis))
    return _signed_sum(basis.signs, jet.f2)


def kappa(f, g, x: np.ndarray, basis: SignedBasis) -> complex:
    """Conformality operator: signed sum of first-derivative products.

    Complex bilinear in both slots; no conjugation anywhere.
    """
    curves = BasisCurves(x, basis)
    jf = f.eval_jet(curves)
    jg = g.eval_jet(curves) if g is not f else jf
    return _signed_sum(basis.signs, jf.f1 * jg.f1)
