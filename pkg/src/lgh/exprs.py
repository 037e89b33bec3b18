"""Expression trees over matrix-entry coordinates.

Nodes evaluate on points (complex value) and on curves (second-order jet);
both walks perform the same arithmetic in the same order, so the value
component of a jet agrees bitwise with point evaluation for polynomial
nodes.
"""

from __future__ import annotations

import numbers

import numpy as np

from .errors import DomainError, ValidationError
from .jets import Jet2, constant_jet, entry_jet
from .serialize import (
    complex_to_pair,
    matrix_from_json,
    matrix_to_json,
    pair_to_complex,
)


def _as_expr(obj) -> "Expr":
    if isinstance(obj, Expr):
        return obj
    if isinstance(obj, numbers.Number):
        return Const(obj)
    raise TypeError(f"cannot treat {obj!r} as an expression")


def _pow_value(v, k: int):
    # repeated multiplication, mirrored by the jet walk for bitwise agreement
    out = v
    for _ in range(k - 1):
        out = out * v
    return out


class Expr:
    """Base expression node."""

    def eval_point(self, x: np.ndarray) -> complex:
        raise NotImplementedError

    def eval_jet(self, curve) -> Jet2:
        raise NotImplementedError

    def children(self) -> tuple:
        return ()

    def to_dict(self) -> dict:
        raise NotImplementedError

    def __add__(self, other):
        return Sum([self, _as_expr(other)])

    def __radd__(self, other):
        return Sum([_as_expr(other), self])

    def __mul__(self, other):
        return Product([self, _as_expr(other)])

    def __rmul__(self, other):
        return Product([_as_expr(other), self])

    def __sub__(self, other):
        return Sum([self, Product([Const(-1.0), _as_expr(other)])])

    def __pow__(self, k: int):
        return Power(self, k)

    def __truediv__(self, other):
        return Quotient(self, _as_expr(other))


class Const(Expr):
    def __init__(self, value):
        self.value = complex(value)

    def eval_point(self, x):
        return self.value

    def eval_jet(self, curve):
        return constant_jet(self.value)

    def to_dict(self):
        return {"type": "const", "value": complex_to_pair(self.value)}

    def __repr__(self):
        return f"Const({self.value})"


class Entry(Expr):
    """Matrix-entry coordinate x_ij, 1-based."""

    def __init__(self, i: int, j: int):
        if i < 1 or j < 1:
            raise ValidationError("entry indices are 1-based")
        self.i = int(i)
        self.j = int(j)

    def eval_point(self, x):
        n = x.shape[0]
        if self.i > n or self.j > n:
            raise ValidationError(f"entry ({self.i},{self.j}) out of range for dimension {n}")
        return complex(x[self.i - 1, self.j - 1])

    def eval_jet(self, curve):
        return entry_jet(curve, self.i, self.j)

    def to_dict(self):
        return {"type": "entry", "i": self.i, "j": self.j}

    def __repr__(self):
        return f"Entry({self.i},{self.j})"


class LinearTrace(Expr):
    """trace(A x^t) = sum_ij A_ij x_ij for a fixed coefficient matrix A."""

    def __init__(self, matrix: np.ndarray):
        a = np.array(matrix, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValidationError("LinearTrace needs a square coefficient matrix")
        a.setflags(write=False)
        self.matrix = a

    def eval_point(self, x):
        if x.shape != self.matrix.shape:
            raise ValidationError("dimension mismatch in LinearTrace")
        return complex(np.einsum("ij,ij->", self.matrix, x))

    def eval_jet(self, curve):
        a = self.matrix
        return Jet2(
            np.einsum("ij,ij->", a, curve.base),
            np.einsum("ij,...ij->...", a, curve.m1),
            np.einsum("ij,...ij->...", a, curve.m2),
        )

    def to_dict(self):
        return {"type": "linear_trace", "matrix": matrix_to_json(self.matrix)}

    def __repr__(self):
        return f"LinearTrace({self.matrix.shape[0]}x{self.matrix.shape[0]})"


class Sum(Expr):
    def __init__(self, terms):
        self.terms = [_as_expr(t) for t in terms]
        if not self.terms:
            raise ValidationError("empty sum")

    def eval_point(self, x):
        total = self.terms[0].eval_point(x)
        for t in self.terms[1:]:
            total = total + t.eval_point(x)
        return total

    def eval_jet(self, curve):
        total = self.terms[0].eval_jet(curve)
        for t in self.terms[1:]:
            total = total + t.eval_jet(curve)
        return total

    def children(self):
        return tuple(self.terms)

    def to_dict(self):
        return {"type": "sum", "terms": [t.to_dict() for t in self.terms]}


class Product(Expr):
    def __init__(self, factors):
        self.factors = [_as_expr(f) for f in factors]
        if not self.factors:
            raise ValidationError("empty product")

    def eval_point(self, x):
        total = self.factors[0].eval_point(x)
        for f in self.factors[1:]:
            total = total * f.eval_point(x)
        return total

    def eval_jet(self, curve):
        total = self.factors[0].eval_jet(curve)
        for f in self.factors[1:]:
            total = total * f.eval_jet(curve)
        return total

    def children(self):
        return tuple(self.factors)

    def to_dict(self):
        return {"type": "product", "factors": [f.to_dict() for f in self.factors]}


class Power(Expr):
    def __init__(self, base, k: int):
        if not isinstance(k, int) or k < 1:
            raise ValidationError("power exponent must be an integer >= 1")
        self.base = _as_expr(base)
        self.k = k

    def eval_point(self, x):
        return _pow_value(self.base.eval_point(x), self.k)

    def eval_jet(self, curve):
        return _pow_value(self.base.eval_jet(curve), self.k)

    def children(self):
        return (self.base,)

    def to_dict(self):
        return {"type": "power", "base": self.base.to_dict(), "k": self.k}


class Quotient(Expr):
    """num/den with the implicit domain predicate |den(x)| > floor."""

    def __init__(self, num, den, floor: float = 1e-3):
        self.num = _as_expr(num)
        self.den = _as_expr(den)
        self.floor = float(floor)

    def eval_point(self, x):
        d = self.den.eval_point(x)
        if abs(d) <= self.floor:
            raise DomainError(
                f"denominator {abs(d):.3e} below domain floor {self.floor:.1e}",
                node=self,
                value=d,
            )
        return self.num.eval_point(x) / d

    def eval_jet(self, curve):
        jd = self.den.eval_jet(curve)
        if float(np.min(np.abs(np.asarray(jd.f0)))) <= self.floor:
            raise DomainError(
                "denominator below domain floor along curve",
                node=self,
                value=jd.f0,
            )
        return self.num.eval_jet(curve) / jd

    def children(self):
        return (self.num, self.den)

    def to_dict(self):
        return {
            "type": "quotient",
            "numerator": self.num.to_dict(),
            "denominator": self.den.to_dict(),
            "floor": self.floor,
        }


class HomPoly(Expr):
    """Homogeneous polynomial in a fixed argument list.

    ``coeffs`` maps exponent multi-indices (one entry per argument) to
    complex coefficients; every multi-index must have the same total degree.
    """

    def __init__(self, coeffs, args, degree: int | None = None):
        self.args = [_as_expr(a) for a in args]
        items = {}
        degrees = set()
        for expo, c in coeffs.items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != len(self.args):
                raise ValidationError(
                    f"exponent vector {expo} does not match {len(self.args)} arguments"
                )
            if any(e < 0 for e in expo):
                raise ValidationError(f"negative exponent in {expo}")
            items[expo] = complex(c)
            degrees.add(sum(expo))
        if not items:
            raise ValidationError("empty homogeneous polynomial")
        if len(degrees) != 1:
            raise ValidationError(f"mixed total degrees {sorted(degrees)} in homogeneous polynomial")
        self.degree = degrees.pop()
        if degree is not None and degree != self.degree:
            raise ValidationError(f"declared degree {degree} but terms have degree {self.degree}")
        if self.degree < 1:
            raise ValidationError("homogeneous polynomial needs degree >= 1")
        self.coeffs = items
        self._order = sorted(items)

    def _fold(self, values, one):
        total = None
        for expo in self._order:
            term = one(self.coeffs[expo])
            for v, e in zip(values, expo):
                for _ in range(e):
                    term = term * v
            total = term if total is None else total + term
        return total

    def eval_point(self, x):
        vals = [a.eval_point(x) for a in self.args]
        return self._fold(vals, complex)

    def eval_jet(self, curve):
        vals = [a.eval_jet(curve) for a in self.args]
        return self._fold(vals, constant_jet)

    def children(self):
        return tuple(self.args)

    def coefficient_vector(self) -> np.ndarray:
        return np.array([self.coeffs[e] for e in self._order], dtype=complex)

    def to_dict(self):
        return {
            "type": "hom_poly",
            "coefficients": [
                {"exponents": list(e), "coeff": complex_to_pair(self.coeffs[e])}
                for e in self._order
            ],
            "args": [a.to_dict() for a in self.args],
        }


# ---------------------------------------------------------------------------
# block coordinates of the quaternionic embedding
# ---------------------------------------------------------------------------

def z_entry(i: int, j: int, n: int) -> Entry:
    """z_ij of a 2n x 2n quaternionic matrix [[z, w], [-conj w, conj z]]."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValidationError(f"block entry ({i},{j}) out of range for n={n}")
    return Entry(i, j)


def w_entry(i: int, j: int, n: int) -> Entry:
    """w_ij of a 2n x 2n quaternionic matrix: column offset by n."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValidationError(f"block entry ({i},{j}) out of range for n={n}")
    return Entry(i, n + j)


def scale_action_check(f: Expr, theta: float, x: np.ndarray) -> tuple[complex, complex]:
    """Evaluate f at x and at e^{i theta} x.

    Quotients of equal-degree homogeneous polynomials are invariant under
    this circle action; a bare degree-d homogeneous polynomial picks up the
    factor e^{i d theta} instead.
    """
    scaled = np.exp(1j * theta) * np.asarray(x, dtype=complex)
    return f.eval_point(np.asarray(x, dtype=complex)), f.eval_point(scaled)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def expr_from_dict(d: dict) -> Expr:
    kind = d.get("type")
    if kind == "const":
        return Const(pair_to_complex(d["value"]))
    if kind == "entry":
        return Entry(d["i"], d["j"])
    if kind == "linear_trace":
        return LinearTrace(matrix_from_json(d["matrix"]))
    if kind == "sum":
        return Sum([expr_from_dict(t) for t in d["terms"]])
    if kind == "product":
        return Product([expr_from_dict(t) for t in d["factors"]])
    if kind == "power":
        return Power(expr_from_dict(d["base"]), d["k"])
    if kind == "quotient":
        return Quotient(
            expr_from_dict(d["numerator"]),
            expr_from_dict(d["denominator"]),
            d.get("floor", 1e-3),
        )
    if kind == "hom_poly":
        coeffs = {
            tuple(item["exponents"]): pair_to_complex(item["coeff"])
            for item in d["coefficients"]
        }
        return HomPoly(coeffs, [expr_from_dict(a) for a in d["args"]])
    raise ValidationError(f"unknown expression node type {kind!r}")
