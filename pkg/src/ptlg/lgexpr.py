"""Temporal correlators and the Leggett-Garg expressions built from them.

Each correlator is evaluated in its own minimal measurement context (pairwise
correlators from two-time contexts, single expectations from one-time
contexts, the triple product from the full context).  The *_123 variants
recompute every ingredient from the full three-measurement context instead;
the gap between the two families is what the macrorealism diagnostics
decompose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError
from .protocol import MeasurementContext, OutcomeDistribution, ScenarioPreset, distribution

VARIANT_PAIR = {1: (2, 3), 2: (1, 3), 3: (1, 2)}


@dataclass(frozen=True)
class CorrelatorSet:
    """Minimal-context correlators for one scenario."""

    c12: float
    c23: float
    c13: float
    c123: float
    c1: float
    c2: float
    c3: float


@dataclass(frozen=True)
class LGReport:
    l13: float
    v1: float
    v2: float
    v3: float
    l123: float
    v123: float
    beta: float
    delta: float


def correlator(dist: OutcomeDistribution, which: tuple[int, ...]) -> float:
    """Expectation of the product of outcomes at the selected measured times."""
    measured = dist.context.measured_times
    if any(j not in measured for j in which):
        raise UsageError(f"times {which} not all measured in context {measured}")
    pos = [measured.index(j) for j in which]
    total = 0.0
    for oc, p in dist.probs.items():
        sign = 1
        for i in pos:
            sign *= oc[i]
        total += sign * p
    return total


def _dist(preset: ScenarioPreset, *times: int) -> OutcomeDistribution:
    return distribution(MeasurementContext(preset=preset, measured_times=times))


def correlator_set(preset: ScenarioPreset) -> CorrelatorSet:
    return CorrelatorSet(
        c12=correlator(_dist(preset, 1, 2), (1, 2)),
        c23=correlator(_dist(preset, 2, 3), (2, 3)),
        c13=correlator(_dist(preset, 1, 3), (1, 3)),
        c123=correlator(_dist(preset, 1, 2, 3), (1, 2, 3)),
        c1=correlator(_dist(preset, 1), (1,)),
        c2=correlator(_dist(preset, 2), (2,)),
        c3=correlator(_dist(preset, 3), (3,)),
    )


def l13(preset: ScenarioPreset) -> float:
    """c12 + c23 - c13 from pairwise contexts; macrorealism bounds this by 1."""
    return (correlator(_dist(preset, 1, 2), (1, 2))
            + correlator(_dist(preset, 2, 3), (2, 3))
            - correlator(_dist(preset, 1, 3), (1, 3)))


def variant_v(k: int, preset: ScenarioPreset) -> float:
    """-<M1 M2 M3> + <Mi Mj> + <Mk> with (i, j) the pair complementary to k."""
    if k not in VARIANT_PAIR:
        raise UsageError(f"k must be 1, 2 or 3, got {k}")
    i, j = VARIANT_PAIR[k]
    triple = correlator(_dist(preset, 1, 2, 3), (1, 2, 3))
    pair = correlator(_dist(preset, i, j), (i, j))
    single = correlator(_dist(preset, k), (k,))
    return -triple + pair + single


def l123_and_beta(preset: ScenarioPreset) -> tuple[float, float]:
    """Full-context analogue of l13 and beta = P(+,-,+) + P(-,+,-).

    The identity l123 = 1 - 4 beta holds exactly for any normalized
    distribution, because m1 m2 + m2 m3 - m1 m3 equals 1 on every outcome
    except the two beta outcomes, where it equals -3.
    """
    d = _dist(preset, 1, 2, 3)
    l123 = correlator(d, (1, 2)) + correlator(d, (2, 3)) - correlator(d, (1, 3))
    beta = d.probs[(+1, -1, +1)] + d.probs[(-1, +1, -1)]
    return l123, beta


def v123_and_delta(preset: ScenarioPreset) -> tuple[float, float]:
    """Full-context analogue of variant_v(1) and delta = P(-,+,-) + P(-,-,+).

    v123 = 1 - 4 delta exactly, by the same per-outcome argument.
    """
    d = _dist(preset, 1, 2, 3)
    v123 = -correlator(d, (1, 2, 3)) + correlator(d, (2, 3)) + correlator(d, (1,))
    delta = d.probs[(-1, +1, -1)] + d.probs[(-1, -1, +1)]
    return v123, delta


def lg_report(preset: ScenarioPreset) -> LGReport:
    l123, beta = l123_and_beta(preset)
    v123, delta = v123_and_delta(preset)
    return LGReport(
        l13=l13(preset),
        v1=variant_v(1, preset),
        v2=variant_v(2, preset),
        v3=variant_v(3, preset),
        l123=l123,
        v123=v123,
        beta=beta,
        delta=delta,
    )
