"""Compact/non-compact duality for eigenfamilies.

Each non-compact classical group G is realized as the aligned real form
inside the ambient complex matrices of its compact partner U: a Cartan
involution theta on the compact algebra u splits it into k = fix(theta) and
the anti-fixed part m, and the algebra of G is k + i m.  Frames of k carry
sign -1 and frames of i m carry sign +1 under Re trace(Z W), so the signed
tau/kappa sums of :mod:`lgh.jets` evaluate the semi-Riemannian operators of
G directly.

Polynomial eigenfamilies continue across the duality unchanged as
expressions; their constants flip sign.  Families whose defining identities
hold only on the compact group (those built from an isotropic point via
x x^t = I) do not continue; the probe records how far off they land.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import ConstructionError, ValidationError
from .exprs import Const, Entry, Expr, HomPoly, LinearTrace, Power, Product, Quotient, Sum
from .families import (
    Eigenfamily,
    maximal_isotropic_basis,
    so_family_V,
    sp_family,
    su_family,
    verify_eigenfamily,
)
from .matrices import (
    GroupId,
    SignedBasis,
    SignedBasisVector,
    compact_basis,
    gram_schmidt_indefinite,
    signature_matrix,
    symplectic_matrix,
    trace_form,
)
from .report import VerificationReport, timed_report
from .sampling import GroupSampler, SampleSet


@dataclass
class DualPair:
    """A non-compact group, its compact partner, and the aligned frames."""

    noncompact: GroupId
    compact: GroupId
    ambient: int
    involution: object  # callable on (stacked) matrices
    k_basis: SignedBasis  # fix(theta), signs -1
    p_basis: SignedBasis  # i * antifix(theta), signs +1
    residuals: dict

    @property
    def frame(self) -> SignedBasis:
        """The full signed orthonormal frame k (-1) then p (+1)."""
        return SignedBasis(self.noncompact, list(self.k_basis.vectors) + list(self.p_basis.vectors))


def _compact_partner(gid: GroupId) -> GroupId:
    f = gid.family
    if f == "SLR":
        return GroupId("SU", gid.n)
    if f == "SUstar":
        return GroupId("SU", gid.n)
    if f == "SpR":
        return GroupId("Sp", gid.n)
    if f == "SOstar":
        return GroupId("SO", gid.n)
    if f == "SOpq":
        return GroupId("SO", gid.p + gid.q)
    if f == "SUpq":
        return GroupId("SU", gid.p + gid.q)
    if f == "Sppq":
        return GroupId("Sp", gid.p + gid.q)
    raise ValidationError(f"{gid} is not a recognized non-compact family")


def _involution(gid: GroupId):
    f = gid.family
    if f in ("SLR", "SpR"):
        return lambda z: z.conj()
    if f == "SUstar":
        j = symplectic_matrix(gid.n // 2)
        jinv = -j
        return lambda z: j @ z.conj() @ jinv
    if f == "SOstar":
        j = symplectic_matrix(gid.n // 2)
        jinv = -j
        return lambda z: j @ z @ jinv
    if f in ("SOpq", "SUpq"):
        ipq = signature_matrix(gid.p, gid.q)
        return lambda z: ipq @ z @ ipq
    if f == "Sppq":
        k = np.kron(np.eye(2), signature_matrix(gid.p, gid.q))
        return lambda z: k @ z @ k
    raise ValidationError(f"no Cartan involution for family {f!r}")


def _bracket(a, b):
    return a @ b - b @ a


def _pair_residuals(theta, base: SignedBasis, k: SignedBasis, p: SignedBasis) -> dict:
    zs = base.matrices
    res = {}
    res["involution"] = float(np.max(np.abs(theta(theta(zs)) - zs))) if len(base) else 0.0
    # automorphism on compact basis pairs: theta[Z, W] = [theta Z, theta W]
    auto = 0.0
    tz = theta(zs)
    for a in range(len(base)):
        lhs = theta(_bracket(zs[a], zs))
        rhs = _bracket(tz[a], tz)
        auto = max(auto, float(np.max(np.abs(lhs - rhs))))
    res["automorphism"] = auto

    def wrong_component(brackets, wrong: SignedBasis) -> float:
        if not len(wrong) or not brackets.size:
            return 0.0
        coords = np.einsum("...ij,cji->...c", brackets, wrong.matrices).real
        coords = coords * wrong.signs
        return float(np.sqrt(np.max(np.sum(coords**2, axis=-1)))) if coords.size else 0.0

    km = k.matrices
    pm = p.matrices
    closure = 0.0
    if len(k):
        kk = np.einsum("aij,bjk->abik", km, km) - np.einsum("bij,ajk->abik", km, km)
        closure = max(closure, wrong_component(kk, p))
    if len(k) and len(p):
        kp = np.einsum("aij,bjk->abik", km, pm) - np.einsum("bij,ajk->abik", pm, km)
        closure = max(closure, wrong_component(kp, k))
    if len(p):
        pp = np.einsum("aij,bjk->abik", pm, pm) - np.einsum("bij,ajk->abik", pm, pm)
        closure = max(closure, wrong_component(pp, p))
    res["bracket_closure"] = closure

    sign_dev = 0.0
    for v in list(k.vectors) + list(p.vectors):
        sign_dev = max(sign_dev, abs(trace_form(v.matrix, v.matrix) - v.sign))
    res["sign_normalization"] = sign_dev

    ortho = 0.0
    frame = list(k.vectors) + list(p.vectors)
    for a in range(len(frame)):
        for b in range(a + 1, len(frame)):
            ortho = max(ortho, abs(trace_form(frame[a].matrix, frame[b].matrix)))
    res["orthogonality"] = ortho
    return res


_TOLERANCES = {
    "involution": 1e-12,
    "automorphism": 1e-10,
    "bracket_closure": 1e-9,
    "sign_normalization": 1e-10,
    "orthogonality": 1e-10,
}


def _build_pair(noncompact: GroupId, compact: GroupId, theta) -> DualPair:
    base = compact_basis(compact)
    zs = base.matrices
    tz = theta(zs)
    fix = [(zs[i] + tz[i]) / 2.0 for i in range(len(base))]
    anti = [(zs[i] - tz[i]) / 2.0 for i in range(len(base))]
    k = gram_schmidt_indefinite(fix, noncompact, drop_dependent=True)
    p = gram_schmidt_indefinite([1j * m for m in anti], noncompact, drop_dependent=True)
    if len(k) + len(p) != len(base):
        raise ConstructionError(
            f"{noncompact}: dim k + dim p = {len(k)} + {len(p)} != dim u = {len(base)}"
        )
    if any(v.sign != -1 for v in k) or any(v.sign != +1 for v in p):
        raise ConstructionError(f"{noncompact}: unexpected frame signs")
    res = _pair_residuals(theta, base, k, p)
    bad = {key: val for key, val in res.items() if val >= _TOLERANCES[key]}
    if bad:
        raise ConstructionError(f"{noncompact}: frame checks out of tolerance: {bad}")
    return DualPair(noncompact, compact, compact.matrix_dim, theta, k, p, res)


def dual_pair(gid: GroupId) -> DualPair:
    """Construct the aligned dual pair for a non-compact classical group."""
    compact = _compact_partner(gid)
    return _build_pair(gid, compact, _involution(gid))


def identity_pair(compact: GroupId) -> DualPair:
    """Degenerate pair with theta = id: k is the whole compact algebra.

    The signed tau/kappa sums then equal minus the compact ones, so a
    compact eigenfamily 'dualizes' to itself with negated constants; used to
    cross-check sign conventions.
    """
    return _build_pair(compact, compact, lambda z: z)


# ---------------------------------------------------------------------------
# holomorphic continuation
# ---------------------------------------------------------------------------

_HOLOMORPHIC_NODES = (Const, Entry, LinearTrace, Sum, Product, Power, Quotient, HomPoly)


def continue_function(f: Expr) -> Expr:
    """Holomorphic continuation of an entry-polynomial expression.

    Polynomials and their quotients are their own continuation, so the tree
    is returned unchanged; any node outside the holomorphic vocabulary
    (anything involving entrywise conjugation) is rejected.
    """
    if not isinstance(f, _HOLOMORPHIC_NODES):
        raise ValidationError(
            f"{type(f).__name__} is not a holomorphic expression node"
        )
    for child in f.children():
        continue_function(child)
    return f


# ---------------------------------------------------------------------------
# sampling the non-compact side
# ---------------------------------------------------------------------------

def _maxabs(m) -> float:
    return float(np.max(np.abs(m))) if np.asarray(m).size else 0.0


def aligned_defect(pair: DualPair, x: np.ndarray) -> float:
    """Violation of the invariants of the aligned real form at a point."""
    f = pair.noncompact.family
    n = x.shape[0]
    eye = np.eye(n)
    if f == "SLR":
        return max(_maxabs(x.imag), abs(np.linalg.det(x) - 1.0))
    if f == "SUstar":
        j = symplectic_matrix(n // 2)
        return max(_maxabs(j @ x.conj() @ (-j) - x), abs(np.linalg.det(x) - 1.0))
    if f == "SpR":
        j = symplectic_matrix(n // 2)
        return max(_maxabs(x.imag), _maxabs(x @ j @ x.T - j))
    if f == "SOstar":
        j = symplectic_matrix(n // 2)
        return max(_maxabs(x @ x.T - eye), _maxabs(x @ j @ x.conj().T - j))
    if f == "SOpq":
        return max(_maxabs(x @ x.T - eye), abs(np.linalg.det(x) - 1.0))
    if f == "SUpq":
        ipq = signature_matrix(pair.noncompact.p, pair.noncompact.q)
        return max(_maxabs(x @ ipq @ x.conj().T - ipq), abs(np.linalg.det(x) - 1.0))
    if f == "Sppq":
        j = symplectic_matrix(n // 2)
        k = np.kron(np.eye(2), signature_matrix(pair.noncompact.p, pair.noncompact.q))
        return max(_maxabs(x @ j @ x.T - j), _maxabs(x @ k @ x.conj().T - k))
    # identity pair: the compact group itself
    from .sampling import compact_defect

    return compact_defect(pair.noncompact, x)


def aligned_sampler(pair: DualPair, radius: float = 0.5, seed: int = 42) -> GroupSampler:
    return GroupSampler(
        str(pair.noncompact),
        pair.frame.matrices,
        radius,
        seed,
        defect_fn=lambda x: aligned_defect(pair, x),
    )


def sample_noncompact(pair: DualPair, count: int, radius: float = 0.5, seed: int = 42) -> SampleSet:
    """Seeded points exp(A1) exp(A2) with A in the aligned algebra k + i m."""
    return aligned_sampler(pair, radius, seed).take(count)


# ---------------------------------------------------------------------------
# dual verification
# ---------------------------------------------------------------------------

def dual_family(pair: DualPair, fam: Eigenfamily) -> Eigenfamily:
    """Continue a compact-side family to the non-compact side: members are
    unchanged polynomials, constants flip sign."""
    if fam.group != pair.compact:
        raise ValidationError(
            f"family lives on {fam.group}, pair expects compact side {pair.compact}"
        )
    if not fam.dual_continuable:
        raise ValidationError(
            f"family {fam.provenance!r} relies on compact-only identities and "
            "does not continue across the duality"
        )
    for member in fam.members:
        continue_function(member)
    return replace(
        fam,
        group=pair.noncompact,
        lam=-fam.lam,
        mu=-fam.mu,
        provenance=fam.provenance + "-dual",
    )


def verify_dual_eigenfamily(
    pair: DualPair,
    fam: Eigenfamily,
    samples,
    tol: float = 1e-8,
    check_name: str = "dual-eigenfamily",
) -> VerificationReport:
    """Verify the continued family on non-compact samples with the signed
    frame: tau and kappa must hit the negated compact constants."""
    dfam = dual_family(pair, fam)
    rep = verify_eigenfamily(dfam, pair.frame, samples, tol=tol, check_name=check_name)
    rep.target = f"{pair.noncompact} ~ {pair.compact}"
    rep.notes["compact_lambda"] = [fam.lam.real, fam.lam.imag]
    rep.notes["compact_mu"] = [fam.mu.real, fam.mu.imag]
    rep.notes.update({f"frame_{k}": v for k, v in pair.residuals.items()})
    return rep


def probe_noncontinuable(
    pair: DualPair, fam: Eigenfamily, samples
) -> VerificationReport:
    """Record (without judging) the dual residuals of a family built from an
    isotropic point.

    The construction of this family leans on x x^t = I, an identity of the
    compact group, so it is excluded from :func:`verify_dual_eigenfamily`.
    The probe evaluates the dual equations anyway and reports the residual
    magnitudes.  Note that the aligned real form lives inside the complex
    orthogonal group, where x x^t = I continues to hold; the recorded
    residuals stay small there even though the constructing argument does
    not transfer.  The report is informational: tol is +inf.
    """
    if fam.provenance != "so-isotropic-point":
        raise ValidationError("probe expects a family built from an isotropic point")
    if fam.group != pair.compact:
        raise ValidationError(
            f"family lives on {fam.group}, pair expects compact side {pair.compact}"
        )
    target = replace(
        fam,
        group=pair.noncompact,
        lam=-fam.lam,
        mu=-fam.mu,
        provenance=fam.provenance + "-probe",
    )
    with timed_report() as clock:
        points = list(samples)
        if points:
            rep = verify_eigenfamily(target, pair.frame, points, tol=np.inf, check_name="probe")
            residuals = rep.residuals
        else:
            residuals = {}
    out = VerificationReport(
        check="probe-noncontinuable",
        target=f"{pair.noncompact} ~ {pair.compact}",
        params={"members": len(fam.members), "provenance": fam.provenance},
        residuals=residuals,
        tol=float("inf"),
        samples_used=len(points),
        wall_time=clock.elapsed,
        notes={"informational": True},
    )
    return out


# ---------------------------------------------------------------------------
# default compact families per pair (used by the CLI and the suite)
# ---------------------------------------------------------------------------

def default_compact_family(pair: DualPair) -> Eigenfamily:
    """A canonical continuable eigenfamily on the compact partner."""
    g = pair.compact
    e1 = np.zeros(g.n, dtype=complex)
    e1[0] = 1.0
    if g.family == "SU":
        return su_family(g.n, e1)
    if g.family == "Sp":
        return sp_family(g.n, e1)
    if g.family == "SO":
        V = maximal_isotropic_basis(g.n)
        if not V:
            raise ValidationError(f"no isotropic directions in C^{g.n}")
        return so_family_V(g.n, e1, V)
    raise ValidationError(f"no default family for compact group {g}")
