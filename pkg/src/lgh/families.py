"""Eigenfamilies of complex-valued functions on the compact classical groups.

An eigenfamily is a set of functions with tau(phi) = lambda phi and
kappa(phi, psi) = mu phi psi for fixed constants and all members phi, psi.
The constructors below realize the linear families on SO(n), U(n)/SU(n) and
Sp(n); the verifier measures both defining equations by exact jets at seeded
group samples.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import ValidationError
from .exprs import Expr, LinearTrace
from .jets import BasisCurves
from .matrices import GroupId, SignedBasis, compact_basis
from .report import VerificationReport, timed_report
from .sampling import SampleSet, sample_compact

# (lambda, mu) for the linear coordinate families, per compact family.
# SU values follow from removing the trace direction i I/sqrt(n) from the
# u(n) frame: tau gains + z/n, kappa gains + (phi psi)/n.
def eigen_constants(family: str, n: int) -> tuple[complex, complex]:
    if family == "SO":
        return complex(-(n - 1) / 2.0), complex(-0.5)
    if family == "U":
        return complex(-n), complex(-1.0)
    if family == "SU":
        return complex(-(n * n - 1) / n), complex(-(n - 1) / n)
    if family == "Sp":
        return complex(-(2 * n + 1) / 2.0), complex(-0.5)
    raise ValidationError(f"no eigenfamily constants for family {family!r}")


@dataclass
class Eigenfamily:
    group: GroupId
    members: list
    lam: complex
    mu: complex
    provenance: str
    dual_continuable: bool = True

    def __post_init__(self):
        if not self.members:
            raise ValidationError("eigenfamily needs at least one member")


def bilinear(u, v) -> complex:
    """Complex-bilinear pairing (u, v) = sum_k u_k v_k, no conjugation."""
    return complex(np.sum(np.asarray(u, dtype=complex) * np.asarray(v, dtype=complex)))


def coefficient_outer(p, a) -> np.ndarray:
    """The matrix p^t a with entries p_i a_j."""
    p = np.asarray(p, dtype=complex)
    a = np.asarray(a, dtype=complex)
    return np.outer(p, a)


def maximal_isotropic_basis(n: int) -> list[np.ndarray]:
    """span{ e_{2k-1} + i e_{2k} } for k = 1..floor(n/2)."""
    out = []
    for k in range(n // 2):
        v = np.zeros(n, dtype=complex)
        v[2 * k] = 1.0
        v[2 * k + 1] = 1j
        out.append(v)
    return out


def _check_isotropic_set(V, tol: float = 1e-12):
    for i, a in enumerate(V):
        for j, b in enumerate(V):
            if j < i:
                continue
            val = bilinear(a, b)
            if abs(val) > tol:
                raise ValidationError(
                    f"subspace not isotropic: (v_{i}, v_{j}) = {val:.3e}"
                )


def so_family_V(n: int, p, V) -> Eigenfamily:
    """Members trace(p^t a x^t), a running over a basis of an isotropic
    subspace V of C^n; valid on SO(n) for any nonzero p."""
    p = np.asarray(p, dtype=complex)
    if p.shape != (n,) or not np.any(p):
        raise ValidationError("p must be a nonzero vector of length n")
    V = [np.asarray(a, dtype=complex) for a in V]
    if not V:
        raise ValidationError("V needs at least one spanning vector")
    _check_isotropic_set(V)
    lam, mu = eigen_constants("SO", n)
    members = [LinearTrace(coefficient_outer(p, a)) for a in V]
    return Eigenfamily(GroupId("SO", n), members, lam, mu, "so-isotropic-subspace")


def so_family_special(n: int, p) -> Eigenfamily:
    """Members trace(p^t a x^t) for a over the full standard basis of C^n,
    requiring (p, p) = 0.

    The defining identities use x x^t = I, so this family does not continue
    to the non-compact dual groups; it is constructed with
    ``dual_continuable=False``.
    """
    p = np.asarray(p, dtype=complex)
    if p.shape != (n,):
        raise ValidationError("p must be a vector of length n")
    pp = bilinear(p, p)
    if abs(pp) > 1e-12:
        raise ValidationError(f"p is not isotropic: (p, p) = {pp:.3e}")
    if not np.any(p):
        raise ValidationError("p must be nonzero")
    lam, mu = eigen_constants("SO", n)
    members = [LinearTrace(coefficient_outer(p, e)) for e in np.eye(n, dtype=complex)]
    return Eigenfamily(
        GroupId("SO", n), members, lam, mu, "so-isotropic-point", dual_continuable=False
    )


def so4_deformation(z: complex, w: complex) -> np.ndarray:
    """Two-parameter isotropic vector (1+zw, i(1-zw), i(z+w), z-w) in C^4."""
    z = complex(z)
    w = complex(w)
    return np.array([1 + z * w, 1j * (1 - z * w), 1j * (z + w), z - w], dtype=complex)


def u_family(n: int, p) -> Eigenfamily:
    """Members trace(p^t a z^t) for a over the standard basis; eigenfamily
    on U(n) with constants (-n, -1)."""
    p = np.asarray(p, dtype=complex)
    if p.shape != (n,) or not np.any(p):
        raise ValidationError("p must be a nonzero vector of length n")
    lam, mu = eigen_constants("U", n)
    members = [LinearTrace(coefficient_outer(p, e)) for e in np.eye(n, dtype=complex)]
    return Eigenfamily(GroupId("U", n), members, lam, mu, "u-linear")


def su_family(n: int, p) -> Eigenfamily:
    """The u_family member list retargeted to SU(n).

    Constants become (-(n^2-1)/n, -(n-1)/n): dropping the trace direction
    i I/sqrt(n) removes -z/n from tau and -(phi psi)/n from kappa.
    """
    fam = u_family(n, p)
    lam, mu = eigen_constants("SU", n)
    return replace(fam, group=GroupId("SU", n), lam=lam, mu=mu, provenance="su-linear")


def sp_family(n: int, p) -> Eigenfamily:
    """Members trace(p^t a z^t) and trace(p^t b w^t) over the two blocks of
    the quaternionic embedding, (a, b) over {(e_i, 0)} and {(0, e_i)}."""
    p = np.asarray(p, dtype=complex)
    if p.shape != (n,) or not np.any(p):
        raise ValidationError("p must be a nonzero vector of length n")
    lam, mu = eigen_constants("Sp", n)
    members = []
    for e in np.eye(n, dtype=complex):
        m = np.zeros((2 * n, 2 * n), dtype=complex)
        m[:n, :n] = coefficient_outer(p, e)
        members.append(LinearTrace(m))
    for e in np.eye(n, dtype=complex):
        m = np.zeros((2 * n, 2 * n), dtype=complex)
        m[:n, n:] = coefficient_outer(p, e)
        members.append(LinearTrace(m))
    return Eigenfamily(GroupId("Sp", n), members, lam, mu, "sp-linear")


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _member_tables(members, curves: BasisCurves):
    """Stack member jets: values (m,), first/second derivatives (m, B)."""
    b = len(curves.signs)
    f0 = np.empty(len(members), dtype=complex)
    f1 = np.empty((len(members), b), dtype=complex)
    f2 = np.empty((len(members), b), dtype=complex)
    for k, member in enumerate(members):
        jet = member.eval_jet(curves)
        f0[k] = complex(jet.f0)
        f1[k] = np.broadcast_to(np.asarray(jet.f1, dtype=complex), (b,))
        f2[k] = np.broadcast_to(np.asarray(jet.f2, dtype=complex), (b,))
    return f0, f1, f2


def verify_eigenfamily(
    fam: Eigenfamily,
    basis: SignedBasis,
    samples,
    tol: float = 1e-8,
    check_name: str = "eigenfamily",
) -> VerificationReport:
    """Measure max |tau(phi) - lambda phi| and |kappa(phi, psi) - mu phi psi|
    over all samples and all ordered member pairs (diagonal included)."""
    if basis.group != fam.group:
        raise ValidationError(
            f"basis of {basis.group} does not match family on {fam.group}"
        )
    with timed_report() as clock:
        tau_res = 0.0
        kappa_res = 0.0
        signs = basis.signs
        count = 0
        for x in samples:
            curves = BasisCurves(x, basis)
            f0, f1, f2 = _member_tables(fam.members, curves)
            tau_vals = f2 @ signs
            tau_res = max(tau_res, float(np.max(np.abs(tau_vals - fam.lam * f0))))
            kap = (f1 * signs) @ f1.T
            kappa_res = max(
                kappa_res, float(np.max(np.abs(kap - fam.mu * np.outer(f0, f0))))
            )
            count += 1
    notes = {"lambda": [fam.lam.real, fam.lam.imag], "mu": [fam.mu.real, fam.mu.imag]}
    if isinstance(samples, SampleSet):
        notes["max_group_defect"] = samples.max_defect
    return VerificationReport(
        check=check_name,
        target=str(fam.group),
        params={
            "members": len(fam.members),
            "provenance": fam.provenance,
            "basis_size": len(basis),
        },
        residuals={"tau": tau_res, "kappa": kappa_res},
        tol=tol,
        samples_used=count,
        wall_time=clock.elapsed,
        notes=notes,
    )


def _coordinate_tables(x, basis: SignedBasis):
    """tau table T_ij = sum_b eps (x Z_b^2)_ij and kappa 4-tensor
    K[i,j,k,l] = sum_b eps (x Z_b)_ij (x Z_b)_kl."""
    curves = BasisCurves(x, basis)
    t = np.einsum("b,bij->ij", basis.signs, curves.m2)
    k4 = np.einsum("b,bij,bkl->ijkl", basis.signs, curves.m1, curves.m1)
    return t, k4


def verify_coordinate_lemmas(
    group: GroupId, samples, tol: float = 1e-8
) -> VerificationReport:
    """Check every stated tau/kappa relation of the coordinate functions on
    SO(n), U(n) or Sp(n), for all index combinations at every sample."""
    basis = compact_basis(group)
    n = group.n
    eye = np.eye(n)
    res: dict[str, float] = {}

    def bump(key, val):
        res[key] = max(res.get(key, 0.0), float(np.max(np.abs(val))))

    with timed_report() as clock:
        count = 0
        for x in samples:
            t, k4 = _coordinate_tables(x, basis)
            if group.family == "SO":
                bump("tau", t + (n - 1) / 2.0 * x)
                gram = x @ x.T
                general = -0.5 * (
                    np.einsum("il,kj->ijkl", x, x)
                    - np.einsum("ik,jl->ijkl", gram, eye)
                )
                bump("kappa_general", k4 - general)
                on_group = 0.5 * (
                    np.einsum("ik,jl->ijkl", eye, eye)
                    - np.einsum("il,kj->ijkl", x, x)
                )
                bump("kappa_on_group", k4 - on_group)
            elif group.family == "U":
                bump("tau", t + n * x)
                bump("kappa", k4 + np.einsum("il,kj->ijkl", x, x))
            elif group.family == "Sp":
                zb = x[:n, :n]
                wb = x[:n, n:]
                lam = (2 * n + 1) / 2.0
                bump("tau_z", t[:n, :n] + lam * zb)
                bump("tau_w", t[:n, n:] + lam * wb)
                bump("kappa_zz", k4[:n, :n, :n, :n] + 0.5 * np.einsum("il,kj->ijkl", zb, zb))
                bump("kappa_ww", k4[:n, n:, :n, n:] + 0.5 * np.einsum("il,kj->ijkl", wb, wb))
                anti = zb @ wb.T - wb @ zb.T
                target = -0.5 * (
                    np.einsum("il,kj->ijkl", wb, zb)
                    - np.einsum("ik,jl->ijkl", anti, eye)
                )
                bump("kappa_zw", k4[:n, :n, :n, n:] - target)
                bump("zw_antisymmetry", anti)
            else:
                raise ValidationError(f"no coordinate relations for {group.family!r}")
            count += 1
    notes = {}
    if isinstance(samples, SampleSet):
        notes["max_group_defect"] = samples.max_defect
    return VerificationReport(
        check="coordinate-lemmas",
        target=str(group),
        params={"n": n, "basis_size": len(basis)},
        residuals=res,
        tol=tol,
        samples_used=count,
        wall_time=clock.elapsed,
        notes=notes,
    )


def measure_constants_residual(
    fam: Eigenfamily, basis: SignedBasis, samples, value_floor: float = 0.1
) -> dict:
    """Compare the stored constants against direct jet measurements.

    Returns max |tau(phi)/phi - lambda| and |kappa(phi,phi)/phi^2 - mu| over
    members and samples, skipping points where |phi| <= value_floor.
    """
    signs = basis.signs
    lam_dev = 0.0
    mu_dev = 0.0
    for x in samples:
        curves = BasisCurves(x, basis)
        f0, f1, f2 = _member_tables(fam.members, curves)
        tau_vals = f2 @ signs
        kap_diag = np.einsum("mb,b,mb->m", f1, signs, f1)
        mask = np.abs(f0) > value_floor
        if np.any(mask):
            lam_dev = max(lam_dev, float(np.max(np.abs(tau_vals[mask] / f0[mask] - fam.lam))))
            mu_dev = max(mu_dev, float(np.max(np.abs(kap_diag[mask] / (f0[mask] * f0[mask]) - fam.mu))))
    return {"lambda_measurement": lam_dev, "mu_measurement": mu_dev}


def default_samples(group: GroupId, count: int, radius: float = 0.5, seed: int = 42) -> SampleSet:
    return sample_compact(group, count, radius, seed)
