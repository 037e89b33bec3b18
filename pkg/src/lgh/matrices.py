"""Complex dense matrices: canonical generators, orthonormal Lie-algebra bases,
the quaternionic embedding, and Gram-Schmidt for an indefinite trace form.

Conventions
-----------
All matrices are square ``complex128`` numpy arrays.  Indices in the public
API are 1-based, matching the usual E_ij notation.  Two real bilinear forms
appear throughout:

* the Riemannian form      ``Re trace(Z W*)``  (positive definite),
* the semi-Riemannian form ``Re trace(Z W)``   (indefinite in general).

A basis vector carries the sign of the semi-Riemannian form on itself, so a
``SignedBasis`` describes an orthonormal frame of a possibly semi-Riemannian
metric Lie algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DegeneracyError, ValidationError
from .report import VerificationReport, timed_report

COMPACT_FAMILIES = ("SO", "U", "SU", "Sp")
NONCOMPACT_FAMILIES = ("SLR", "SUstar", "SpR", "SOstar", "SOpq", "SUpq", "Sppq")
ALL_FAMILIES = COMPACT_FAMILIES + ("GLC-split",) + NONCOMPACT_FAMILIES

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class GroupId:
    """A classical group tag: family name plus size parameters.

    ``n`` is the defining parameter (SO(n), U(n), Sp(n), SL(n,R), SU*(n),
    SO*(n), Sp(n,R)); the indefinite families use ``(p, q)`` instead.
    """

    family: str
    n: int | None = None
    p: int | None = None
    q: int | None = None

    def __post_init__(self):
        if self.family not in ALL_FAMILIES:
            raise ValidationError(f"unknown group family {self.family!r}")
        if self.family in ("SOpq", "SUpq", "Sppq"):
            if self.n is not None:
                raise ValidationError(f"{self.family} takes (p, q), not n")
            if not (self.p and self.q and self.p >= 1 and self.q >= 1):
                raise ValidationError(f"{self.family} needs positive (p, q)")
        else:
            if self.p is not None or self.q is not None:
                raise ValidationError(f"{self.family} takes n, not (p, q)")
            if not (self.n and self.n >= 1):
                raise ValidationError(f"{self.family} needs positive n")
            if self.family in ("SUstar", "SOstar") and self.n % 2:
                raise ValidationError(f"{self.family} needs even n")

    @property
    def matrix_dim(self) -> int:
        """Size of the ambient square matrices realizing the group."""
        if self.family in ("Sp", "SpR"):
            return 2 * self.n
        if self.family == "Sppq":
            return 2 * (self.p + self.q)
        if self.family in ("SOpq", "SUpq"):
            return self.p + self.q
        return self.n

    @property
    def algebra_dim(self) -> int:
        """Real dimension of the Lie algebra (compact families only)."""
        n = self.n
        if self.family == "SO":
            return n * (n - 1) // 2
        if self.family == "U":
            return n * n
        if self.family == "SU":
            return n * n - 1
        if self.family == "Sp":
            return n * (2 * n + 1)
        raise ValidationError(f"algebra_dim undefined for {self.family}")

    def __str__(self) -> str:
        f = self.family
        if f in ("SO", "U", "SU", "Sp"):
            return f"{f}({self.n})"
        if f == "GLC-split":
            return f"GL({self.n},C)-split"
        return {
            "SLR": f"SL({self.n},R)",
            "SUstar": f"SU*({self.n})",
            "SpR": f"Sp({self.n},R)",
            "SOstar": f"SO*({self.n})",
            "SOpq": f"SO({self.p},{self.q})",
            "SUpq": f"SU({self.p},{self.q})",
            "Sppq": f"Sp({self.p},{self.q})",
        }[f]


def SO(n: int) -> GroupId:
    return GroupId("SO", n)


def U(n: int) -> GroupId:
    return GroupId("U", n)


def SU(n: int) -> GroupId:
    return GroupId("SU", n)


def Sp(n: int) -> GroupId:
    return GroupId("Sp", n)


def sl_r(n: int) -> GroupId:
    return GroupId("SLR", n)


def su_star(n: int) -> GroupId:
    return GroupId("SUstar", n)


def sp_r(n: int) -> GroupId:
    return GroupId("SpR", n)


def so_star(n: int) -> GroupId:
    return GroupId("SOstar", n)


def so_pq(p: int, q: int) -> GroupId:
    return GroupId("SOpq", p=p, q=q)


def su_pq(p: int, q: int) -> GroupId:
    return GroupId("SUpq", p=p, q=q)


def sp_pq(p: int, q: int) -> GroupId:
    return GroupId("Sppq", p=p, q=q)


@dataclass(frozen=True)
class SignedBasisVector:
    """A basis matrix together with the sign of Re trace(Z Z) on it."""

    matrix: np.ndarray
    sign: int


@dataclass
class SignedBasis:
    """Orthonormal frame of a metric Lie algebra, one sign per vector."""

    group: GroupId
    vectors: list[SignedBasisVector] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    @cached_property
    def matrices(self) -> np.ndarray:
        """Basis matrices stacked along the leading axis, shape (B, n, n)."""
        if not self.vectors:
            n = self.group.matrix_dim
            return np.zeros((0, n, n), dtype=complex)
        return np.stack([v.matrix for v in self.vectors])

    @cached_property
    def signs(self) -> np.ndarray:
        return np.array([float(v.sign) for v in self.vectors])


# ---------------------------------------------------------------------------
# bilinear forms
# ---------------------------------------------------------------------------

def trace_form(z: np.ndarray, w: np.ndarray) -> float:
    """Semi-Riemannian form Re trace(Z W)."""
    return float(np.einsum("ij,ji->", z, w).real)


def hermitian_form(z: np.ndarray, w: np.ndarray) -> float:
    """Riemannian form Re trace(Z W*)."""
    return float(np.einsum("ij,ij->", z, w.conj()).real)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def generator(kind: str, indices, n: int) -> np.ndarray:
    """Canonical gl(n) generators, 1-based indices.

    kind 'E', (i, j): the single-entry matrix with (E_ij)_kl = delta_ik delta_jl.
    kind 'D', t:      the diagonal unit E_tt.
    kind 'X', (r, s): (E_rs + E_sr)/sqrt(2), requires r < s.
    kind 'Y', (r, s): (E_rs - E_sr)/sqrt(2), requires r < s.
    """
    m = np.zeros((n, n), dtype=complex)
    if kind == "E":
        i, j = indices
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValidationError(f"E index ({i},{j}) out of range for n={n}")
        m[i - 1, j - 1] = 1.0
        return m
    if kind == "D":
        t = indices if isinstance(indices, int) else indices[0]
        if not 1 <= t <= n:
            raise ValidationError(f"D index {t} out of range for n={n}")
        m[t - 1, t - 1] = 1.0
        return m
    if kind in ("X", "Y"):
        r, s = indices
        if not (1 <= r < s <= n):
            raise ValidationError(f"{kind} indices ({r},{s}) need 1 <= r < s <= n={n}")
        m[r - 1, s - 1] = 1.0 / _SQRT2
        m[s - 1, r - 1] = (1.0 if kind == "X" else -1.0) / _SQRT2
        return m
    raise ValidationError(f"unknown generator kind {kind!r}")


def _pairs(n):
    return [(r, s) for r in range(1, n + 1) for s in range(r + 1, n + 1)]


def _su_diagonal_set(n: int) -> list[np.ndarray]:
    # i(D_1 + ... + D_k - k D_{k+1}) / sqrt(k(k+1)): orthonormal traceless
    # completion of the diagonal direction, 1 <= k <= n-1.
    out = []
    for k in range(1, n):
        d = np.zeros((n, n), dtype=complex)
        for t in range(k):
            d[t, t] = 1.0
        d[k, k] = -float(k)
        out.append(1j * d / math.sqrt(k * (k + 1)))
    return out


def _sp_basis_matrices(n: int) -> list[np.ndarray]:
    """Orthonormal basis of sp(n) as 2n x 2n blocks, in three groups."""

    def block(a, b, c, d):
        return np.block([[a, b], [c, d]]) / _SQRT2

    z = np.zeros((n, n), dtype=complex)
    out = []
    for r, s in _pairs(n):
        y = generator("Y", (r, s), n)
        x = generator("X", (r, s), n)
        out.append(block(y, z, z, y))
        out.append(block(1j * x, z, z, -1j * x))
    for r, s in _pairs(n):
        x = generator("X", (r, s), n)
        out.append(block(z, 1j * x, 1j * x, z))
        out.append(block(z, x, -x, z))
    for t in range(1, n + 1):
        d = generator("D", t, n)
        out.append(block(1j * d, z, z, -1j * d))
        out.append(block(z, 1j * d, 1j * d, z))
        out.append(block(z, d, -d, z))
    return out


def compact_basis(group: GroupId) -> SignedBasis:
    """The canonical orthonormal basis of a compact Lie algebra, all signs +1.

    so(n): { Y_rs };  u(n): { Y_rs, iX_rs, iD_t };
    su(n): { Y_rs, iX_rs } plus the traceless diagonal completion;
    sp(n): the standard 2n x 2n block basis.
    """
    n = group.n
    if group.family == "SO":
        mats = [generator("Y", p, n) for p in _pairs(n)]
    elif group.family == "U":
        mats = [generator("Y", p, n) for p in _pairs(n)]
        mats += [1j * generator("X", p, n) for p in _pairs(n)]
        mats += [1j * generator("D", t, n) for t in range(1, n + 1)]
    elif group.family == "SU":
        mats = [generator("Y", p, n) for p in _pairs(n)]
        mats += [1j * generator("X", p, n) for p in _pairs(n)]
        mats += _su_diagonal_set(n)
    elif group.family == "Sp":
        mats = _sp_basis_matrices(n)
    else:
        raise ValidationError(f"no compact basis for family {group.family!r}")
    for m in mats:
        m.setflags(write=False)
    return SignedBasis(group, [SignedBasisVector(m, +1) for m in mats])


def glc_split_basis(n: int) -> tuple[SignedBasis, SignedBasis]:
    """Orthogonal split of gl(n,C) under Re trace(Z W).

    Returns (plus, minus): the Hermitian part { X_rs, D_t, iY_rs } where the
    form is positive definite, and the skew-Hermitian part { Y_rs, iX_rs,
    iD_t } where it is negative definite.
    """
    if n < 1:
        raise ValidationError("glc_split_basis needs n >= 1")
    gid = GroupId("GLC-split", n)
    plus = [generator("X", p, n) for p in _pairs(n)]
    plus += [generator("D", t, n) for t in range(1, n + 1)]
    plus += [1j * generator("Y", p, n) for p in _pairs(n)]
    minus = [generator("Y", p, n) for p in _pairs(n)]
    minus += [1j * generator("X", p, n) for p in _pairs(n)]
    minus += [1j * generator("D", t, n) for t in range(1, n + 1)]
    for m in plus + minus:
        m.setflags(write=False)
    return (
        SignedBasis(gid, [SignedBasisVector(m, +1) for m in plus]),
        SignedBasis(gid, [SignedBasisVector(m, -1) for m in minus]),
    )


# ---------------------------------------------------------------------------
# generator identities
# ---------------------------------------------------------------------------

def verify_matrix_identities(n: int, tol: float = 1e-12) -> VerificationReport:
    """Check the six summation identities of the X/Y/D generator sets.

    Residuals are max absolute entry deviations; the sandwich sums
    sum_b G E_jl G^t are checked for every 1 <= j, l <= n.
    """
    if n < 2:
        raise ValidationError("identities need n >= 2")
    with timed_report() as clock:
        X = np.stack([generator("X", p, n) for p in _pairs(n)])
        Y = np.stack([generator("Y", p, n) for p in _pairs(n)])
        D = np.stack([generator("D", t, n) for t in range(1, n + 1)])
        eye = np.eye(n)

        def dev(a, b):
            return float(np.max(np.abs(a - b)))

        half = (n - 1) / 2.0
        res = {
            "sum_X_squares": dev(np.einsum("bij,bjk->ik", X, X), half * eye),
            "sum_Y_squares": dev(np.einsum("bij,bjk->ik", Y, Y), -half * eye),
            "sum_D_squares": dev(np.einsum("bij,bjk->ik", D, D), eye),
        }
        # (G E_jl G^t)_uv = G_uj G_vl, so the sandwich sum over the whole
        # generator set is a single contraction per set.
        sx = np.einsum("buj,bvl->jluv", X, X)
        sy = np.einsum("buj,bvl->jluv", Y, Y)
        sd = np.einsum("buj,bvl->jluv", D, D)
        elj = np.einsum("ul,vj->jluv", eye, eye)  # (E_lj)_uv = d_ul d_vj
        dlj_eye = np.einsum("jl,uv->jluv", eye, eye)  # delta_lj I
        dlj_elj = np.einsum("jl,jluv->jluv", eye, elj)  # delta_lj E_lj
        tx = 0.5 * (elj + dlj_eye - 2.0 * dlj_elj)
        ty = -0.5 * (elj - dlj_eye)
        td = dlj_elj
        res["X_conjugation_sum"] = dev(sx, tx)
        res["Y_conjugation_sum"] = dev(sy, ty)
        res["D_conjugation_sum"] = dev(sd, td)
    return VerificationReport(
        check="matrix-identities",
        target=f"gl({n})",
        params={"n": n},
        residuals=res,
        tol=tol,
        wall_time=clock.elapsed,
    )


# ---------------------------------------------------------------------------
# quaternionic embedding and structure matrices
# ---------------------------------------------------------------------------

def quaternion_embed(z: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Embed the quaternionic matrix z + jw as [[z, w], [-conj(w), conj(z)]]."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    if z.shape != w.shape or z.ndim != 2 or z.shape[0] != z.shape[1]:
        raise ValidationError("quaternion_embed needs two square blocks of equal size")
    return np.block([[z, w], [-w.conj(), z.conj()]])


def signature_matrix(p: int, q: int) -> np.ndarray:
    """I_pq = diag(-I_p, I_q)."""
    return np.diag(np.concatenate([-np.ones(p), np.ones(q)])).astype(complex)


def symplectic_matrix(n: int) -> np.ndarray:
    """J_n = [[0, I_n], [-I_n, 0]]."""
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]]).astype(complex)


# ---------------------------------------------------------------------------
# Gram-Schmidt for the indefinite form
# ---------------------------------------------------------------------------

def gram_schmidt_indefinite(
    spanning,
    group: GroupId | None = None,
    *,
    null_tol: float = 1e-9,
    drop_dependent: bool = False,
) -> SignedBasis:
    """Orthonormalize a real spanning set under B(Z, W) = Re trace(Z W).

    Pivots on the remaining vector with the largest |B(v, v)| after
    projection, which keeps isotropic directions from ever becoming pivots.
    Each accepted vector is scaled to |B(Z, Z)| = 1 and stored with
    sign(B(Z, Z)).

    With ``drop_dependent`` the routine treats a vanishing pivot as linear
    dependence and stops (valid when the form is definite on the span);
    otherwise a vanishing pivot raises :class:`DegeneracyError`.
    """
    supplied = [np.array(m, dtype=complex) for m in spanning]
    if group is None:
        dim = supplied[0].shape[0] if supplied else 1
        group = GroupId("GLC-split", dim)
    remaining = [m for m in supplied if np.max(np.abs(m)) > 1e-14]
    accepted: list[SignedBasisVector] = []
    while remaining:
        projected = []
        for v in remaining:
            w = v.copy()
            for u in accepted:
                w -= u.sign * trace_form(w, u.matrix) * u.matrix
            projected.append(w)
        norms = [abs(trace_form(w, w)) for w in projected]
        best = max(range(len(norms)), key=norms.__getitem__)
        if norms[best] < null_tol:
            if drop_dependent:
                break
            raise DegeneracyError(
                f"null direction: |B(v,v)| = {norms[best]:.3e} after orthogonalization"
            )
        w = projected[best]
        b = trace_form(w, w)
        w = w / math.sqrt(abs(b))
        w.setflags(write=False)
        accepted.append(SignedBasisVector(w, +1 if b > 0 else -1))
        remaining.pop(best)
    return SignedBasis(group, accepted)
