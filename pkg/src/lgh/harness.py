"""Run configuration, check orchestration, and the full verification suite.

Configs and reports are plain JSON: complex numbers as two-element
[re, im] arrays, matrices as nested row arrays, polynomial coefficients as
{"exponents": [...], "coeff": [re, im]} lists.  Identical configs (seed
included) produce bit-identical residuals; wall-clock fields are the only
run-dependent output.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import duality as du
from . import families as fa
from . import morphisms as mo
from .errors import ConfigError, ValidationError
from .exprs import HomPoly
from .jets import BasisCurves
from .matrices import GroupId, compact_basis, verify_matrix_identities
from .report import VerificationReport, timed_report
from .sampling import SplitMix64, compact_sampler
from .serialize import pair_to_complex, vector_from_json

DEFAULT_SEED = 42

_FAMILY_ALIASES = {
    "so": "SO",
    "u": "U",
    "su": "SU",
    "sp": "Sp",
    "glc_split": "GLC-split",
    "sl_r": "SLR",
    "su_star": "SUstar",
    "sp_r": "SpR",
    "so_star": "SOstar",
    "so_pq": "SOpq",
    "su_pq": "SUpq",
    "sp_pq": "Sppq",
}
_ALIAS_BY_FAMILY = {v: k for k, v in _FAMILY_ALIASES.items()}


@dataclass
class RunConfig:
    check: str | None = None
    group: dict | None = None
    pair: dict | None = None
    family: dict | None = None
    morphism: dict | None = None
    n: int | None = None
    samples: int = 100
    seed: int = DEFAULT_SEED
    radius: float = 0.5
    tol: float = 1e-8
    floor: float = 1e-3

    def validate(self) -> "RunConfig":
        if self.samples < 1:
            raise ConfigError("samples must be >= 1", field="samples")
        if not (0.0 < self.radius <= 1.0):
            raise ConfigError("radius must lie in (0, 1]", field="radius")
        if not self.tol > 0.0:
            raise ConfigError("tol must be positive", field="tol")
        if self.floor < 0.0:
            raise ConfigError("floor must be nonnegative", field="floor")
        return self

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        known = set(cls.__dataclass_fields__)
        for key in d:
            if key not in known:
                raise ConfigError(f"unknown config key {key!r}", field=key)
        return cls(**d).validate()


def load_config(path: str) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}", field="config") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}", field="config") from exc
    if not isinstance(data, dict):
        raise ConfigError("config root must be a JSON object", field="config")
    return RunConfig.from_dict(data)


# ---------------------------------------------------------------------------
# spec blocks -> objects
# ---------------------------------------------------------------------------

def group_from_spec(d: dict) -> GroupId:
    if not isinstance(d, dict) or "family" not in d:
        raise ConfigError("group spec needs a 'family' entry", field="group.family")
    alias = d["family"]
    fam = _FAMILY_ALIASES.get(alias, alias)
    try:
        if fam in ("SOpq", "SUpq", "Sppq"):
            return GroupId(fam, p=d.get("p"), q=d.get("q"))
        return GroupId(fam, n=d.get("n"))
    except ValidationError as exc:
        raise ConfigError(str(exc), field="group") from exc


def group_to_spec(gid: GroupId) -> dict:
    alias = _ALIAS_BY_FAMILY[gid.family]
    if gid.family in ("SOpq", "SUpq", "Sppq"):
        return {"family": alias, "p": gid.p, "q": gid.q}
    return {"family": alias, "n": gid.n}


def family_from_spec(d: dict) -> fa.Eigenfamily:
    if not isinstance(d, dict):
        raise ConfigError("family spec must be an object", field="family")
    gid = group_from_spec(d.get("group", {}))
    n = gid.n
    if "p" in d:
        p = vector_from_json(d["p"])
    elif "deformation" in d:
        z = pair_to_complex(d["deformation"].get("z", 0.0))
        w = pair_to_complex(d["deformation"].get("w", 0.0))
        if n != 4:
            raise ConfigError("the (z, w) deformation is a C^4 construction", field="family.deformation")
        p = fa.so4_deformation(z, w)
    else:
        p = np.zeros(n, dtype=complex)
        p[0] = 1.0
    try:
        if gid.family == "U":
            return fa.u_family(n, p)
        if gid.family == "SU":
            return fa.su_family(n, p)
        if gid.family == "Sp":
            return fa.sp_family(n, p)
        if gid.family == "SO":
            if "V" in d and d["V"] != "standard":
                V = [vector_from_json(v) for v in d["V"]]
                return fa.so_family_V(n, p, V)
            if d.get("V") == "standard" or ("p" not in d and "deformation" not in d):
                return fa.so_family_V(n, p, fa.maximal_isotropic_basis(n))
            return fa.so_family_special(n, p)
    except ValidationError as exc:
        raise ConfigError(str(exc), field="family") from exc
    raise ConfigError(f"no family constructor for group {gid}", field="family.group")


def _coeff_map(items, field_name: str) -> dict:
    if not isinstance(items, list) or not items:
        raise ConfigError(f"{field_name} must be a nonempty list of terms", field=field_name)
    out = {}
    for item in items:
        try:
            out[tuple(int(e) for e in item["exponents"])] = pair_to_complex(item["coeff"])
        except (KeyError, TypeError) as exc:
            raise ConfigError(
                f"{field_name} terms need 'exponents' and 'coeff'", field=field_name
            ) from exc
    return out


def morphism_from_spec(fam: fa.Eigenfamily, d: dict, floor: float) -> mo.RationalMorphism:
    if not isinstance(d, dict):
        raise ConfigError("morphism spec must be an object", field="morphism")
    p = _coeff_map(d.get("P"), "morphism.P")
    q = _coeff_map(d.get("Q"), "morphism.Q")
    try:
        return mo.quotient_morphism(fam, p, q, floor=floor)
    except ValidationError as exc:
        raise ConfigError(str(exc), field="morphism") from exc


def pair_from_spec(d: dict) -> du.DualPair:
    gid = group_from_spec(d)
    if gid.family not in ("SLR", "SUstar", "SpR", "SOstar", "SOpq", "SUpq", "Sppq"):
        raise ConfigError(f"{gid} is not a non-compact dual group", field="pair.family")
    return du.dual_pair(gid)


# ---------------------------------------------------------------------------
# command runners
# ---------------------------------------------------------------------------

def run_identities(cfg: RunConfig) -> VerificationReport:
    n = cfg.n if cfg.n is not None else 5
    return verify_matrix_identities(n, tol=min(cfg.tol, 1e-12))


def run_lemma(cfg: RunConfig) -> VerificationReport:
    gid = group_from_spec(cfg.group or {})
    if gid.family not in ("SO", "U", "Sp"):
        raise ConfigError("coordinate relations exist for so, u, sp", field="group.family")
    samples = compact_sampler(gid, cfg.radius, cfg.seed).take(cfg.samples)
    return fa.verify_coordinate_lemmas(gid, samples, tol=cfg.tol)


def run_family(cfg: RunConfig) -> VerificationReport:
    if cfg.family is None:
        raise ConfigError("missing family spec", field="family")
    fam = family_from_spec(cfg.family)
    basis = compact_basis(fam.group)
    samples = compact_sampler(fam.group, cfg.radius, cfg.seed).take(cfg.samples)
    return fa.verify_eigenfamily(fam, basis, samples, tol=cfg.tol)


def run_morphism(cfg: RunConfig) -> VerificationReport:
    if cfg.family is None or cfg.morphism is None:
        raise ConfigError("morphism run needs family and morphism specs", field="morphism")
    fam = family_from_spec(cfg.family)
    morph = morphism_from_spec(fam, cfg.morphism, cfg.floor)
    basis = compact_basis(fam.group)
    sampler = compact_sampler(fam.group, cfg.radius, cfg.seed)
    first = sampler.take(cfg.samples)
    return mo.verify_harmonic_morphism(
        morph,
        basis,
        first,
        tol=cfg.tol,
        min_samples=cfg.samples,
        sampler=lambda k: sampler.take(k).points,
    )


def run_duality(cfg: RunConfig) -> VerificationReport:
    if cfg.pair is None:
        raise ConfigError("missing pair spec", field="pair")
    pair = pair_from_spec(cfg.pair)
    fam = family_from_spec(cfg.family) if cfg.family else du.default_compact_family(pair)
    samples = du.sample_noncompact(pair, cfg.samples, cfg.radius, cfg.seed)
    rep = du.verify_dual_eigenfamily(pair, fam, samples, tol=cfg.tol)
    rep.residuals.update({f"frame_{k}": v for k, v in pair.residuals.items()})
    return rep


def run_probe(cfg: RunConfig) -> VerificationReport:
    if cfg.pair is None:
        raise ConfigError("missing pair spec", field="pair")
    pair = pair_from_spec(cfg.pair)
    if cfg.family:
        fam = family_from_spec(cfg.family)
    else:
        n = pair.compact.n
        p = fa.so4_deformation(0.0, 0.0) if n == 4 else _first_isotropic(n)
        fam = fa.so_family_special(n, p)
    samples = du.sample_noncompact(pair, cfg.samples, cfg.radius, cfg.seed)
    return du.probe_noncontinuable(pair, fam, samples)


def _first_isotropic(n: int) -> np.ndarray:
    if n < 2:
        raise ConfigError("isotropic vectors need n >= 2", field="family")
    p = np.zeros(n, dtype=complex)
    p[0] = 1.0
    p[1] = 1j
    return p


COMMANDS = {
    "verify-identities": run_identities,
    "verify-lemma": run_lemma,
    "verify-family": run_family,
    "verify-morphism": run_morphism,
    "verify-duality": run_duality,
    "probe-duality": run_probe,
}


# ---------------------------------------------------------------------------
# the full suite
# ---------------------------------------------------------------------------

def _unit(n: int, k: int = 0) -> np.ndarray:
    e = np.zeros(n, dtype=complex)
    e[k] = 1.0
    return e


def _criterion5_families():
    """The eigenfamily verification matrix: (name, family) pairs."""
    out = []
    for n in (4, 5, 6):
        out.append(
            (f"eigenfamily-SO({n})-subspace", fa.so_family_V(n, _unit(n), fa.maximal_isotropic_basis(n)))
        )
    for n in (2, 3):
        out.append((f"eigenfamily-U({n})", fa.u_family(n, _unit(n))))
        out.append((f"eigenfamily-SU({n})", fa.su_family(n, _unit(n))))
    for n in (1, 2):
        out.append((f"eigenfamily-Sp({n})", fa.sp_family(n, _unit(n))))
    return out


def _factory_families():
    fams = []
    for n in (4, 5, 6):
        fams.append(fa.so_family_V(n, _unit(n), fa.maximal_isotropic_basis(n)))
    fams.append(fa.so_family_special(4, fa.so4_deformation(0.0, 0.0)))
    for n in (2, 3):
        fams.append(fa.u_family(n, _unit(n)))
        fams.append(fa.su_family(n, _unit(n)))
    for n in (1, 2):
        fams.append(fa.sp_family(n, _unit(n)))
    return fams


DUALITY_PAIRS = (
    ("sl_r", {"n": 2}),
    ("sl_r", {"n": 3}),
    ("su_star", {"n": 4}),
    ("sp_r", {"n": 1}),
    ("sp_r", {"n": 2}),
    ("so_star", {"n": 4}),
    ("so_pq", {"p": 1, "q": 2}),
    ("so_pq", {"p": 2, "q": 2}),
    ("su_pq", {"p": 1, "q": 1}),
    ("su_pq", {"p": 1, "q": 2}),
    ("sp_pq", {"p": 1, "q": 1}),
)


def _check_deformed_families(seed: int, tol: float) -> VerificationReport:
    """Ten seeded (z, w) deformations of the isotropic-point family on SO(4)."""
    rng = SplitMix64(seed ^ 0x5EED5EED)
    residuals = {"tau": 0.0, "kappa": 0.0, "isotropy": 0.0}
    basis = compact_basis(GroupId("SO", 4))
    with timed_report() as clock:
        samples = compact_sampler(GroupId("SO", 4), 0.5, seed).take(100)
        for _ in range(10):
            z = rng.complex_uniform(1.0)
            w = rng.complex_uniform(1.0)
            p = fa.so4_deformation(z, w)
            residuals["isotropy"] = max(residuals["isotropy"], abs(fa.bilinear(p, p)))
            fam = fa.so_family_special(4, p)
            rep = fa.verify_eigenfamily(fam, basis, samples, tol=tol)
            residuals["tau"] = max(residuals["tau"], rep.residuals["tau"])
            residuals["kappa"] = max(residuals["kappa"], rep.residuals["kappa"])
    return VerificationReport(
        check="eigenfamily-deformations",
        target="SO(4)",
        params={"deformations": 10},
        residuals=residuals,
        tol=tol,
        samples_used=100,
        wall_time=clock.elapsed,
    )


def _check_constants_crosscheck(tol: float) -> VerificationReport:
    sp1 = fa.eigen_constants("Sp", 1)
    su2 = fa.eigen_constants("SU", 2)
    res = {
        "lambda_match": abs(sp1[0] - su2[0]),
        "mu_match": abs(sp1[1] - su2[1]),
        "lambda_value": abs(sp1[0] + 1.5),
        "mu_value": abs(sp1[1] + 0.5),
    }
    return VerificationReport(
        check="constants-crosscheck",
        target="Sp(1)/SU(2)",
        params={},
        residuals=res,
        tol=tol,
    )


def _check_family_negative_control(seed: int, tol: float) -> VerificationReport:
    """A wrong lambda must be detected with residual |dlambda| * max|phi|."""
    fam = fa.u_family(2, _unit(2))
    broken = fa.Eigenfamily(fam.group, fam.members, fam.lam + 0.1, fam.mu, "control")
    basis = compact_basis(fam.group)
    with timed_report() as clock:
        samples = compact_sampler(fam.group, 0.5, seed).take(100)
        rep = fa.verify_eigenfamily(broken, basis, samples, tol=tol)
        peak = max(
            abs(m.eval_point(x)) for x in samples for m in fam.members
        )
        predicted = 0.1 * peak
        deviation = abs(rep.residuals["tau"] - predicted)
        failed_as_expected = 0.0 if rep.residuals["tau"] > tol else 1.0
    return VerificationReport(
        check="family-negative-control",
        target=str(fam.group),
        params={"lambda_shift": 0.1},
        residuals={"deviation_from_prediction": deviation, "control_must_fail": failed_as_expected},
        tol=max(tol, 1e-10),
        samples_used=len(samples),
        wall_time=clock.elapsed,
        notes={"observed_tau_residual": rep.residuals["tau"], "predicted": predicted},
    )


FACTORY_FLOOR = 0.05  # keeps quotient jets away from the 1/Q^4 rounding blow-up
FACTORY_TOL = 1e-7
HOPF_TOL = 1e-9


def _check_morphism_factory(fam: fa.Eigenfamily, seed: int, pairs: int = 20, min_samples: int = 50):
    """Random same-degree (P, Q) quotients must all verify; the quotient
    condition triple equality is measured on the same instances."""
    basis = compact_basis(fam.group)
    rng = SplitMix64(seed ^ 0xFAC7041)
    factory_res = {"tau": 0.0, "kappa": 0.0}
    triple_res: dict = {}
    used = 0
    discarded = 0
    with timed_report() as clock:
        sampler = compact_sampler(fam.group, 0.5, seed)
        base_samples = sampler.take(min_samples)
        for _ in range(pairs):
            degree = 1 + (rng.next_u64() % 3)
            morph = mo.random_morphism(fam, int(degree), rng, floor=FACTORY_FLOOR)
            rep = mo.verify_harmonic_morphism(
                morph,
                basis,
                base_samples,
                tol=FACTORY_TOL,
                min_samples=min_samples,
                sampler=lambda k: sampler.take(k).points,
            )
            factory_res["tau"] = max(factory_res["tau"], rep.residuals["tau"])
            factory_res["kappa"] = max(factory_res["kappa"], rep.residuals["kappa"])
            used += rep.samples_used
            discarded += rep.samples_discarded
            qrep = mo.verify_quotient_condition(
                fam, morph.numerator, morph.denominator, basis, base_samples, tol=FACTORY_TOL
            )
            for key, val in qrep.residuals.items():
                triple_res[key] = max(triple_res.get(key, 0.0), val)
    factory = VerificationReport(
        check="morphism-factory",
        target=str(fam.group),
        params={"pairs": pairs, "floor": FACTORY_FLOOR, "provenance": fam.provenance},
        residuals=factory_res,
        tol=FACTORY_TOL,
        samples_used=used,
        samples_discarded=discarded,
        wall_time=clock.elapsed,
    )
    triple = VerificationReport(
        check="quotient-condition",
        target=str(fam.group),
        params={"pairs": pairs, "provenance": fam.provenance},
        residuals=triple_res,
        tol=FACTORY_TOL,
        samples_used=len(base_samples),
    )
    return factory, triple


def _check_hopf(seed: int) -> VerificationReport:
    fam = fa.su_family(2, _unit(2))
    morph = mo.quotient_morphism(fam, {(1, 0): 1.0}, {(0, 1): 1.0}, floor=0.1)
    basis = compact_basis(fam.group)
    sampler = compact_sampler(fam.group, 0.5, seed)
    rep = mo.verify_harmonic_morphism(
        morph,
        basis,
        sampler.take(100),
        tol=HOPF_TOL,
        min_samples=100,
        sampler=lambda k: sampler.take(k).points,
        check_name="morphism-hopf",
    )
    return rep


def _check_morphism_negative_control(seed: int, tol: float) -> VerificationReport:
    """tau(z_11) = -2 z_11 on U(2), so the 'quotient' z_11/1 must fail with
    tau residual 2 max|z_11| and kappa residual max|z_11|^2."""
    gid = GroupId("U", 2)
    basis = compact_basis(gid)
    member = fa.u_family(2, _unit(2)).members[0]
    with timed_report() as clock:
        samples = compact_sampler(gid, 0.5, seed).take(100)
        signs = basis.signs
        tau_res = 0.0
        kappa_res = 0.0
        peak = 0.0
        for x in samples:
            jet = member.eval_jet(BasisCurves(x, basis))
            tau_res = max(tau_res, abs(complex(np.sum(signs * jet.f2))))
            kappa_res = max(kappa_res, abs(complex(np.sum(signs * jet.f1 * jet.f1))))
            peak = max(peak, abs(complex(jet.f0)))
        dev_tau = abs(tau_res - 2.0 * peak)
        dev_kappa = abs(kappa_res - peak * peak)
        must_fail = 0.0 if tau_res > tol and kappa_res > tol else 1.0
    return VerificationReport(
        check="morphism-negative-control",
        target=str(gid),
        params={},
        residuals={
            "tau_deviation_from_prediction": dev_tau,
            "kappa_deviation_from_prediction": dev_kappa,
            "control_must_fail": must_fail,
        },
        tol=max(tol, 1e-10),
        samples_used=len(samples),
        wall_time=clock.elapsed,
        notes={"observed_tau_residual": tau_res, "predicted": 2.0 * peak},
    )


def _check_power_family(fam: fa.Eigenfamily, k: int, seed: int, tol: float) -> VerificationReport:
    power = mo.power_family(fam, k)
    pfam = power.as_eigenfamily()
    basis = compact_basis(fam.group)
    with timed_report() as clock:
        samples = compact_sampler(fam.group, 0.5, seed).take(100)
        rep = fa.verify_eigenfamily(pfam, basis, samples, tol=tol)
        measured = fa.measure_constants_residual(pfam, basis, samples, value_floor=0.1)
        res = dict(rep.residuals)
        res.update(measured)
    return VerificationReport(
        check=f"power-family-k{k}",
        target=str(fam.group),
        params={
            "k": k,
            "members": len(pfam.members),
            "lambda_k": [power.lambda_k.real, power.lambda_k.imag],
            "mu_k": [power.mu_k.real, power.mu_k.imag],
        },
        residuals=res,
        tol=tol,
        samples_used=len(samples),
        wall_time=clock.elapsed,
    )


def _check_duality(alias: str, params: dict, seed: int, tol: float) -> VerificationReport:
    spec = {"family": alias, **params}
    pair = pair_from_spec(spec)
    fam = du.default_compact_family(pair)
    samples = du.sample_noncompact(pair, 100, 0.5, seed)
    rep = du.verify_dual_eigenfamily(pair, fam, samples, tol=tol, check_name="duality")
    rep.residuals.update({f"frame_{k}": v for k, v in pair.residuals.items()})
    rep.notes["max_aligned_defect"] = samples.max_defect
    return rep


def _check_probe(seed: int) -> VerificationReport:
    pair = du.dual_pair(GroupId("SOpq", p=2, q=2))
    fam = fa.so_family_special(4, fa.so4_deformation(0.0, 0.0))
    samples = du.sample_noncompact(pair, 100, 0.5, seed)
    return du.probe_noncontinuable(pair, fam, samples)


def suite_checks(seed: int = DEFAULT_SEED, tol: float = 1e-8):
    """The acceptance matrix as (name, thunk) pairs."""
    checks = []
    for n in range(2, 11):
        checks.append((f"identities-n{n}", lambda n=n: verify_matrix_identities(n, tol=min(tol, 1e-12))))
    for n in range(2, 7):
        cfg = RunConfig(group={"family": "so", "n": n}, samples=200, seed=seed, tol=tol)
        checks.append((f"coordinate-lemmas-SO({n})", lambda c=cfg: run_lemma(c)))
    for n in range(2, 5):
        cfg = RunConfig(group={"family": "u", "n": n}, samples=200, seed=seed, tol=tol)
        checks.append((f"coordinate-lemmas-U({n})", lambda c=cfg: run_lemma(c)))
    for n in range(1, 4):
        cfg = RunConfig(group={"family": "sp", "n": n}, samples=200, seed=seed, tol=tol)
        checks.append((f"coordinate-lemmas-Sp({n})", lambda c=cfg: run_lemma(c)))

    for name, fam in _criterion5_families():
        def thunk(f=fam):
            basis = compact_basis(f.group)
            samples = compact_sampler(f.group, 0.5, seed).take(100)
            return fa.verify_eigenfamily(f, basis, samples, tol=tol)

        checks.append((name, thunk))
    checks.append(("eigenfamily-deformations", lambda: _check_deformed_families(seed, tol)))
    checks.append(("constants-crosscheck", lambda: _check_constants_crosscheck(tol)))
    checks.append(("family-negative-control", lambda: _check_family_negative_control(seed, tol)))

    for i, fam in enumerate(_factory_families()):
        def thunk(f=fam, off=i):
            return _check_morphism_factory(f, seed + off)

        checks.append((f"morphism-factory[{fam.provenance}-{fam.group}]", thunk))
    checks.append(("morphism-hopf", lambda: _check_hopf(seed)))
    checks.append(("morphism-negative-control", lambda: _check_morphism_negative_control(seed, tol)))

    for fam_name, fam in (("U(2)", fa.u_family(2, _unit(2))), ("SO(4)", fa.so_family_V(4, _unit(4), fa.maximal_isotropic_basis(4)))):
        for k in (2, 3):
            checks.append(
                (f"power-family-{fam_name}-k{k}", lambda f=fam, kk=k: _check_power_family(f, kk, seed, tol))
            )

    for alias, params in DUALITY_PAIRS:
        label = "duality-" + str(group_from_spec({"family": alias, **params}))
        checks.append((label, lambda a=alias, p=params: _check_duality(a, p, seed, tol)))
    checks.append(("probe-noncontinuable-SO(2,2)", lambda: _check_probe(seed)))
    return checks


def _thread_count() -> int:
    raw = os.environ.get("LGH_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suite(seed: int = DEFAULT_SEED, tol: float = 1e-8) -> dict:
    """Run the whole acceptance matrix; an aggregate JSON-ready document.

    Checks are independent; LGH_THREADS > 1 runs them on a thread pool.
    Results are ordered by the check list, never by completion time.
    """
    checks = suite_checks(seed, tol)

    def run_one(item):
        name, thunk = item
        result = thunk()
        reports = result if isinstance(result, tuple) else (result,)
        return [(name, rep) for rep in reports]

    threads = _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            grouped = list(pool.map(run_one, checks))
    else:
        grouped = [run_one(item) for item in checks]
    flat = [rep for group in grouped for _, rep in group]
    return {
        "suite": "lgh",
        "seed": seed,
        "tol": tol,
        "passed": all(rep.passed for rep in flat),
        "checks": [rep.to_dict() for rep in flat],
    }
