"""Deterministic identity suite backing the `check` CLI command.

Every check compares two independent routes to the same quantity (engine vs
closed form, fine vs coarse context, grouped vs composed propagator) over a
fixed parameter sample, so the suite is reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .closedform import (
    bob_reduced_entries,
    pair_correlator_reference,
    pair_normalization_reference,
    unitary_l13,
    unitary_v3,
    uu_dagger_reference,
)
from .errors import UsageError
from .lgexpr import correlator, l123_and_beta, l13, v123_and_delta, variant_v
from .macrodiag import (
    decomposition_residual_standard,
    decomposition_residual_variant,
    degree_report,
)
from .nosignal import bob_reduced, signaling_deviation
from .protocol import (
    MeasurementContext,
    distribution,
    pt_standard,
    pt_variant,
    unitary_standard,
    unitary_variant,
    unnormalized_chain,
)
from .ptdyn import PTParams, composition_check, eigensystem, propagator


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


def _sample(n: int, alpha_max: float, seed: int = 20240917):
    rng = np.random.default_rng(seed)
    alphas = rng.uniform(-alpha_max, alpha_max, n)
    ts = rng.uniform(0.05, np.pi - 0.05, n)
    return list(zip(alphas, ts))


def _biorthogonal_reconstruction_residual(p: PTParams) -> float:
    es = eigensystem(p)
    v = np.column_stack([es.v_plus, es.v_minus])
    w = np.linalg.inv(v)
    tau = p.t / (p.s * np.cos(p.alpha))
    u_spec = (np.exp(-1j * es.e_plus * tau) * np.outer(v[:, 0], w[0, :])
              + np.exp(-1j * es.e_minus * tau) * np.outer(v[:, 1], w[1, :]))
    return float(np.max(np.abs(u_spec - propagator(p))))


def run_identity_suite(sample_size: int = 16, fault: float = 0.0,
                       include_pair_forms: bool = False) -> list[CheckResult]:
    if sample_size < 1:
        raise UsageError(f"sample size must be >= 1, got {sample_size}")
    pts = _sample(sample_size, 2 * np.pi / 5)
    results: list[CheckResult] = []

    res = max(composition_check(PTParams(a, 0.1), abs(t) / 2, abs(t) / 3) for a, t in pts)
    results.append(CheckResult("propagator-composition", res, 1e-12))

    res = 0.0
    for a, t in pts:
        u = propagator(PTParams(a, t)) + fault * np.array([[1.0, 0.0], [0.0, 0.0]])
        res = max(res, float(np.max(np.abs(u @ u.conj().T - uu_dagger_reference(a, t)))))
    results.append(CheckResult("uu-dagger-closed-form", res, 1e-10))

    res = max(_biorthogonal_reconstruction_residual(PTParams(a, t)) for a, t in pts)
    results.append(CheckResult("eigensystem-reconstruction", res, 1e-9))

    presets = []
    for i, (a, t) in enumerate(pts):
        theta, phi = 0.3 + 0.1 * i, 0.2 + 0.35 * i
        presets.append(pt_standard(a, t))
        presets.append(pt_variant(a, t, theta, phi))
        presets.append(unitary_standard(t))
        presets.append(unitary_variant(t, theta, phi))

    res = max(abs(l123_and_beta(pr)[0] - (1 - 4 * l123_and_beta(pr)[1])) for pr in presets)
    results.append(CheckResult("three-time-beta-identity", res, 1e-12))

    res = max(abs(v123_and_delta(pr)[0] - (1 - 4 * v123_and_delta(pr)[1])) for pr in presets)
    results.append(CheckResult("three-time-delta-identity", res, 1e-12))

    res = max(decomposition_residual_standard(pr) for pr in presets)
    results.append(CheckResult("decomposition-standard", res, 1e-10))

    res = max(decomposition_residual_variant(pr) for pr in presets)
    results.append(CheckResult("decomposition-variant", res, 1e-10))

    res = 0.0
    for _, t in pts:
        rep = degree_report(unitary_variant(t, 1.1, 0.7))
        res = max(res, rep.max_aot())
    results.append(CheckResult("unitary-aot-exact", res, 1e-12))

    res = 0.0
    for a, t in pts:
        b1, b2, b3, _, n1 = bob_reduced_entries(a, t)
        rho = bob_reduced(PTParams(a, t)).mat
        tot = b1 + b2
        res = max(res,
                  abs(rho[0, 0].real - b1 / tot),
                  abs(rho[1, 1].real - b2 / tot),
                  abs(abs(rho[0, 1]) - abs(b3) / tot),
                  abs(tot - 2 * n1))
    results.append(CheckResult("partner-state-closed-form", res, 1e-9))

    res = 0.0
    for a, t in pts:
        res = max(res, signaling_deviation(PTParams(0.0, abs(t))))
        res = max(res, signaling_deviation(PTParams(a, np.pi)))
    interior = min(signaling_deviation(PTParams(a, t)) for a, t in pts if abs(a) > 0.3)
    if interior <= 1e-6:
        res = max(res, 1.0)
    results.append(CheckResult("signaling-iff-trivial", res, 1e-12))

    res = max(abs(l13(unitary_standard(t)) - unitary_l13(t)) for _, t in pts)
    results.append(CheckResult("unitary-standard-closed-form", res, 1e-10))

    res = 0.0
    for i, (_, t) in enumerate(pts):
        theta, phi = 0.3 + 0.1 * i, 0.2 + 0.35 * i
        res = max(res, abs(variant_v(3, unitary_variant(t, theta, phi))
                           - unitary_v3(t, theta, phi)))
    results.append(CheckResult("unitary-variant-closed-form", res, 1e-10))

    res = 0.0
    for pr in presets:
        for times in [(1,), (2,), (3,), (1, 2), (2, 3), (1, 3), (1, 2, 3)]:
            d = distribution(MeasurementContext(preset=pr, measured_times=times))
            total = sum(d.probs.values())
            res = max(res, abs(total - 1.0))
            res = max(res, max(max(-p, p - 1.0, 0.0) for p in d.probs.values()))
    results.append(CheckResult("probability-sanity", res, 1e-12))

    if include_pair_forms:
        res = 0.0
        for a, t in pts:
            preset = pt_standard(a, t)
            for pair in ((1, 2), (2, 3), (1, 3)):
                d = distribution(MeasurementContext(preset=preset, measured_times=pair))
                c = correlator(d, pair)
                res = max(res, abs(c - pair_correlator_reference(a, t, pair)))
                ctx = MeasurementContext(preset=preset, measured_times=pair)
                raw = sum(unnormalized_chain(ctx, oc) for oc in product((+1, -1), repeat=2))
                res = max(res, abs(raw - pair_normalization_reference(a, t, pair)))
        results.append(CheckResult("pair-closed-forms", res, 1e-9))

    return results
