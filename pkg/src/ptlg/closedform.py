"""Closed-form reference expressions used as independent cross-checks.

These are evaluated directly from trigonometric formulas, never through the
matrix engine, so tests and the `check` command can compare the two routes.
"""

from __future__ import annotations

import numpy as np

from .errors import UsageError


def uu_dagger_coefficients(alpha: float, t: float) -> tuple[float, float, float]:
    """(d1, d2, d3) with U U^dagger = [[d1, i d2], [-i d2, d3]]."""
    sec = 1.0 / np.cos(alpha)
    d1 = sec**2 * (np.cos(t - alpha) ** 2 + np.sin(t) ** 2)
    d2 = 2.0 * sec * np.sin(t) ** 2 * np.tan(alpha)
    d3 = sec**2 * (np.cos(t + alpha) ** 2 + np.sin(t) ** 2)
    return d1, d2, d3


def uu_dagger_reference(alpha: float, t: float) -> np.ndarray:
    d1, d2, d3 = uu_dagger_coefficients(alpha, t)
    return np.array([[d1, 1j * d2], [-1j * d2, d3]], dtype=complex)


def bob_reduced_entries(alpha: float, t: float):
    """Closed-form entries (b1, b2, b3, b4) and constant n1 of the partner state.

    The normalized 2x2 state is [[b1, b4], [b3, b2]] / (b1 + b2); note that
    b1 + b2 = 2 * n1 identically, so n1 is half the closed form's trace.
    """
    sec = 1.0 / np.cos(alpha)
    b1 = 0.5 * sec**2 * (np.cos(2 * (alpha - t)) - np.cos(2 * t) + 2.0)
    b2 = 0.5 * sec**2 * (np.cos(2 * (alpha + t)) - np.cos(2 * t) + 2.0)
    b3 = -2j * np.tan(alpha) * sec * np.sin(t) ** 2
    b4 = 2j * np.tan(alpha) * sec * np.sin(t) ** 2
    n1 = 2.0 * sec**2 * np.sin(t) ** 2 + np.cos(2 * t)
    return b1, b2, b3, b4, n1


def unitary_l13(t: float) -> float:
    """State-independent three-time LG value under unitary steps: 2cos2t - cos4t."""
    return 2.0 * np.cos(2 * t) - np.cos(4 * t)


def unitary_v3(t: float, theta: float, phi: float) -> float:
    """Closed form of the three-time variant expression V3 for unitary steps."""
    return (
        np.cos(2 * t) * (1.0 + 4.0 * np.sin(t) ** 2 * np.cos(2 * theta))
        + 2.0 * np.sin(t) ** 2 * np.cos(2 * theta)
        - np.sin(4 * t) * np.sin(2 * theta) * np.sin(phi)
    )


def pair_normalization_reference(alpha: float, t: float, pair: tuple[int, int]) -> float:
    """Published per-pair normalization constants for the mixed-state sigma_y protocol.

    Retained verbatim for diagnostic comparison; see README for how far these
    deviate from the sequential per-context constants this package computes.
    """
    sec = 1.0 / np.cos(alpha)
    s, c = np.sin(t), np.cos(t)
    cos = np.cos
    if pair == (1, 2):
        return 0.5 * (
            1024 * sec**6 * s**6 * c**4
            + 64 * sec**4 * s**4 * c**2 * (2 * cos(2 * t) + 5 * cos(4 * t) - 1)
            + 4 * sec**2 * s**2 * (2 * cos(2 * t) - cos(4 * t)
                                   + 4 * (cos(6 * t) + cos(8 * t) + 1))
            + cos(2 * t) + cos(10 * t)
        )
    if pair == (2, 3):
        return (
            128 * sec**6 * s**6 * (2 * c + cos(3 * t)) ** 2
            + 8 * sec**4 * s**4 * cos(4 * t) * (24 * cos(2 * t) + 10 * cos(4 * t) + 15)
            + 2 * sec**2 * s**2 * (2 * cos(4 * t) - 1)
            * (7 * cos(2 * t) + 4 * cos(4 * t) + 4 * cos(6 * t) + 3)
            + cos(6 * t) ** 2
        )
    if pair == (1, 3):
        return 0.5 * (
            256 * sec**6 * s**6 * (2 * c + cos(3 * t)) ** 2
            + 16 * sec**4 * s**4 * (6 * cos(2 * t) + 13 * cos(4 * t)
                                    + 12 * cos(6 * t) + 5 * cos(8 * t) + 1)
            + 4 * sec**2 * s**2 * (7 * cos(2 * t) + cos(6 * t)
                                   + 4 * (cos(8 * t) + cos(10 * t) + 1))
            + cos(4 * t) + cos(12 * t)
        )
    raise UsageError(f"unknown pair {pair}")


def pair_correlator_reference(alpha: float, t: float, pair: tuple[int, int]) -> float:
    """Published pairwise sigma_y correlators paired with the constants above."""
    sec = 1.0 / np.cos(alpha)
    s, c = np.sin(t), np.cos(t)
    cos = np.cos
    n = pair_normalization_reference(alpha, t, pair)
    if pair == (1, 2):
        num = (
            cos(4 * t)
            + 2**9 * sec**6 * s**6 * c**4
            + 2**7 * sec**4 * s**4 * c**4 * (4 * cos(2 * t) - 3)
            + 2 * sec**2 * s**2 * (2 * cos(4 * t) - 1)
            * (2 * cos(2 * t) + 2 * cos(4 * t) - 1)
        )
    elif pair == (2, 3):
        num = (
            2**7 * sec**6 * s**6 * (2 * c + cos(3 * t)) ** 2
            + 8 * sec**4 * s**4 * (6 * cos(2 * t) + 10 * cos(4 * t)
                                   + 10 * cos(6 * t) + 4 * cos(8 * t) + 1)
            + cos(6 * t)
            + 4 * sec**2 * s**2 * (cos(2 * t) + cos(4 * t) - cos(6 * t)
                                   + cos(8 * t) + cos(10 * t) + 1)
        )
    elif pair == (1, 3):
        num = (
            128 * sec**6 * s**6 * (2 * c + cos(3 * t)) ** 2
            + 8 * sec**4 * s**4 * (4 * cos(2 * t) + 12 * cos(4 * t)
                                   + 10 * cos(6 * t) + 4 * cos(8 * t) - 1)
            + cos(4 * t)
            - 8 * sec**2 * s**4 * (8 * cos(2 * t) + 10 * cos(4 * t)
                                   + 6 * cos(6 * t) + 2 * cos(8 * t) + 3)
        )
    else:
        raise UsageError(f"unknown pair {pair}")
    return num / n
