"""Harmonic morphisms built from eigenfamilies.

A quotient P/Q of two independent homogeneous polynomials of equal degree
in the members of one eigenfamily is harmonic and horizontally conformal
wherever Q does not vanish: tau(P/Q) = 0 and kappa(P/Q, P/Q) = 0.  Power
families supply the constants of the degree-d polynomials, and orthogonal
families (lambda = mu = 0) stay closed under polynomial composition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InconclusiveError, ValidationError
from .exprs import Const, Expr, HomPoly, Quotient, Sum
from .families import Eigenfamily, verify_eigenfamily
from .jets import BasisCurves
from .matrices import SignedBasis
from .report import VerificationReport, timed_report
from .sampling import SampleSet, SplitMix64


def power_constants(lam: complex, mu: complex, k: int) -> tuple[complex, complex]:
    """(lambda_k, mu_k) = (k lambda + k(k-1) mu, k^2 mu) for degree-k products."""
    return k * lam + k * (k - 1) * mu, k * k * mu


@dataclass
class PowerFamily:
    """All degree-k monomials in the members of a base eigenfamily."""

    base: Eigenfamily
    k: int
    members: list
    lambda_k: complex
    mu_k: complex

    def as_eigenfamily(self) -> Eigenfamily:
        return Eigenfamily(
            group=self.base.group,
            members=self.members,
            lam=self.lambda_k,
            mu=self.mu_k,
            provenance=f"{self.base.provenance}-power-{self.k}",
            dual_continuable=self.base.dual_continuable,
        )


def power_family(fam: Eigenfamily, k: int) -> PowerFamily:
    if k < 1:
        raise ValidationError("power family needs k >= 1")
    m = len(fam.members)
    members = []
    for combo in itertools.combinations_with_replacement(range(m), k):
        expo = [0] * m
        for i in combo:
            expo[i] += 1
        members.append(HomPoly({tuple(expo): 1.0}, fam.members))
    lam_k, mu_k = power_constants(fam.lam, fam.mu, k)
    return PowerFamily(fam, k, members, lam_k, mu_k)


@dataclass
class RationalMorphism:
    """Quotient P/Q of equal-degree homogeneous polynomials in a family."""

    family: Eigenfamily
    numerator: HomPoly
    denominator: HomPoly
    floor: float = 1e-3

    @property
    def degree(self) -> int:
        return self.numerator.degree

    @property
    def expr(self) -> Quotient:
        return Quotient(self.numerator, self.denominator, self.floor)

    def in_domain(self, x) -> bool:
        return abs(self.denominator.eval_point(np.asarray(x, dtype=complex))) > self.floor


def _coeff_table(p: HomPoly, q: HomPoly):
    keys = sorted(set(p.coeffs) | set(q.coeffs))
    u = np.array([p.coeffs.get(k, 0.0) for k in keys], dtype=complex)
    v = np.array([q.coeffs.get(k, 0.0) for k in keys], dtype=complex)
    return u, v


def _proportional(p: HomPoly, q: HomPoly, tol: float = 1e-12) -> bool:
    u, v = _coeff_table(p, q)
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        return True
    gram = (nu * nv) ** 2 - abs(np.vdot(u, v)) ** 2
    return gram <= tol * (nu * nv) ** 2


def _as_hompoly(p, members) -> HomPoly:
    if isinstance(p, HomPoly):
        return p
    return HomPoly(p, members)


def quotient_morphism(fam: Eigenfamily, P, Q, floor: float = 1e-3) -> RationalMorphism:
    """Build P/Q over the family members; P, Q may be coefficient maps
    (exponent tuple -> coefficient) or ready HomPoly nodes."""
    pn = _as_hompoly(P, fam.members)
    qn = _as_hompoly(Q, fam.members)
    if pn.degree != qn.degree:
        raise ValidationError(
            f"degrees differ: numerator {pn.degree}, denominator {qn.degree}"
        )
    if _proportional(pn, qn):
        raise ValidationError("numerator and denominator are proportional")
    return RationalMorphism(fam, pn, qn, floor)


def mobius_transform(m: RationalMorphism, a, b, c, d) -> RationalMorphism:
    """Post-compose with (a t + b)/(c t + d): same-degree pair
    (aP + bQ, cP + dQ)."""
    if abs(a * d - b * c) < 1e-12:
        raise ValidationError("singular Mobius coefficients")
    keys = sorted(set(m.numerator.coeffs) | set(m.denominator.coeffs))
    pc = {k: a * m.numerator.coeffs.get(k, 0.0) + b * m.denominator.coeffs.get(k, 0.0) for k in keys}
    qc = {k: c * m.numerator.coeffs.get(k, 0.0) + d * m.denominator.coeffs.get(k, 0.0) for k in keys}
    pc = {k: v for k, v in pc.items() if v != 0.0}
    qc = {k: v for k, v in qc.items() if v != 0.0}
    return quotient_morphism(m.family, pc, qc, m.floor)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _collect_in_domain(in_domain, samples, sampler, min_samples):
    points = list(samples)
    target = min_samples if min_samples is not None else len(points)
    kept = [x for x in points if in_domain(x)]
    discarded = len(points) - len(kept)
    drawn = len(points)
    budget = max(10 * max(target, 1), drawn)
    while sampler is not None and len(kept) < target and drawn < budget:
        batch = sampler(min(target, budget - drawn))
        drawn += len(batch)
        for x in batch:
            if in_domain(x):
                kept.append(x)
            else:
                discarded += 1
    return kept, discarded


def verify_harmonic_morphism(
    m,
    basis: SignedBasis,
    samples,
    tol: float = 1e-8,
    min_samples: int | None = None,
    sampler=None,
    check_name: str = "harmonic-morphism",
) -> VerificationReport:
    """Measure max |tau(m)| and |kappa(m, m)| over in-domain samples.

    ``m`` is a :class:`RationalMorphism` or any expression.  Samples where a
    denominator falls below its domain floor are discarded; when a
    ``sampler(count)`` callable is supplied the verifier draws replacements,
    up to ten times the requested count, before declaring the run
    inconclusive.
    """
    if isinstance(m, RationalMorphism):
        expr = m.expr
        in_domain = m.in_domain
        target = str(m.family.group)
        params = {"degree": m.degree, "floor": m.floor, "members": len(m.family.members)}
    else:
        expr = m

        def in_domain(x):
            try:
                expr.eval_point(np.asarray(x, dtype=complex))
            except DomainError:
                return False
            return True

        target = str(basis.group)
        params = {}
    with timed_report() as clock:
        kept, discarded = _collect_in_domain(in_domain, samples, sampler, min_samples)
        if not kept:
            raise InconclusiveError(
                "no sample cleared the domain floor; cannot verify the morphism"
            )
        signs = basis.signs
        tau_res = 0.0
        kappa_res = 0.0
        for x in kept:
            jet = expr.eval_jet(BasisCurves(x, basis))
            tau_res = max(tau_res, abs(complex(np.sum(signs * jet.f2))))
            kappa_res = max(kappa_res, abs(complex(np.sum(signs * jet.f1 * jet.f1))))
    return VerificationReport(
        check=check_name,
        target=target,
        params=params,
        residuals={"tau": tau_res, "kappa": kappa_res},
        tol=tol,
        samples_used=len(kept),
        samples_discarded=discarded,
        wall_time=clock.elapsed,
    )


def verify_quotient_condition(
    fam: Eigenfamily,
    P,
    Q,
    basis: SignedBasis,
    samples,
    tol: float = 1e-7,
    check_name: str = "quotient-condition",
) -> VerificationReport:
    """Check Q^2 kappa(P,P) = PQ kappa(P,Q) = P^2 kappa(Q,Q) at each sample,
    plus the eigen-equations tau(P) = lambda_d P and tau(Q) = lambda_d Q with
    the degree-d power constants."""
    pn = _as_hompoly(P, fam.members)
    qn = _as_hompoly(Q, fam.members)
    lam_p, _ = power_constants(fam.lam, fam.mu, pn.degree)
    lam_q, _ = power_constants(fam.lam, fam.mu, qn.degree)
    signs = basis.signs
    res = {"triple_left": 0.0, "triple_right": 0.0, "tau_numerator": 0.0, "tau_denominator": 0.0}
    with timed_report() as clock:
        count = 0
        for x in samples:
            curves = BasisCurves(x, basis)
            jp = pn.eval_jet(curves)
            jq = qn.eval_jet(curves)
            p0 = complex(jp.f0)
            q0 = complex(jq.f0)
            kpp = complex(np.sum(signs * jp.f1 * jp.f1))
            kpq = complex(np.sum(signs * jp.f1 * jq.f1))
            kqq = complex(np.sum(signs * jq.f1 * jq.f1))
            tp = complex(np.sum(signs * jp.f2))
            tq = complex(np.sum(signs * jq.f2))
            res["triple_left"] = max(res["triple_left"], abs(q0 * q0 * kpp - p0 * q0 * kpq))
            res["triple_right"] = max(res["triple_right"], abs(p0 * p0 * kqq - p0 * q0 * kpq))
            res["tau_numerator"] = max(res["tau_numerator"], abs(tp - lam_p * p0))
            res["tau_denominator"] = max(res["tau_denominator"], abs(tq - lam_q * q0))
            count += 1
    return VerificationReport(
        check=check_name,
        target=str(fam.group),
        params={"degree_P": pn.degree, "degree_Q": qn.degree},
        residuals=res,
        tol=tol,
        samples_used=count,
        wall_time=clock.elapsed,
    )


# ---------------------------------------------------------------------------
# orthogonal harmonic families and composition
# ---------------------------------------------------------------------------

def orthogonal_family(group, members) -> Eigenfamily:
    """An eigenfamily with lambda = mu = 0: every member is harmonic and all
    gradients pairwise isotropic."""
    return Eigenfamily(group, list(members), 0j, 0j, "orthogonal")


def compose_orthogonal(
    family: Eigenfamily,
    h: dict,
    basis: SignedBasis | None = None,
    samples=None,
    tol: float = 1e-8,
) -> Expr:
    """Compose a polynomial h (exponent map, any total degrees) with the
    members of an orthogonal harmonic family.

    The result is again harmonic with isotropic gradient.  When a basis and
    samples are supplied the family is verified first; otherwise only the
    structural lambda = mu = 0 requirement is enforced.
    """
    if family.lam != 0 or family.mu != 0:
        raise ValidationError("composition requires an orthogonal family (lambda = mu = 0)")
    if basis is not None and samples is not None:
        rep = verify_eigenfamily(family, basis, samples, tol=tol)
        if not rep.passed:
            raise ValidationError(
                f"family failed orthogonality verification: residuals {rep.residuals}"
            )
    by_degree: dict[int, dict] = {}
    constant = 0j
    for expo, c in h.items():
        expo = tuple(int(e) for e in expo)
        if len(expo) != len(family.members):
            raise ValidationError("exponent length does not match family size")
        d = sum(expo)
        if d == 0:
            constant += complex(c)
        else:
            by_degree.setdefault(d, {})[expo] = complex(c)
    parts: list[Expr] = [
        HomPoly(coeffs, family.members) for _, coeffs in sorted(by_degree.items())
    ]
    if constant != 0 or not parts:
        parts.insert(0, Const(constant))
    return parts[0] if len(parts) == 1 else Sum(parts)


# ---------------------------------------------------------------------------
# seeded polynomial factory for property checks
# ---------------------------------------------------------------------------

def _monomials(m: int, degree: int):
    return list(itertools.combinations_with_replacement(range(m), degree))


def random_hompoly(members, degree: int, rng: SplitMix64) -> HomPoly:
    """Dense homogeneous polynomial with coefficients uniform on the unit disc."""
    m = len(members)
    coeffs = {}
    for combo in _monomials(m, degree):
        expo = [0] * m
        for i in combo:
            expo[i] += 1
        coeffs[tuple(expo)] = rng.complex_disc()
    return HomPoly(coeffs, members)


def random_morphism(
    fam: Eigenfamily, degree: int, rng: SplitMix64, floor: float = 1e-3
) -> RationalMorphism:
    p = random_hompoly(fam.members, degree, rng)
    q = random_hompoly(fam.members, degree, rng)
    while _proportional(p, q):  # vanishing-probability event, retry keeps stream seeded
        q = random_hompoly(fam.members, degree, rng)
    return RationalMorphism(fam, p, q, floor)
