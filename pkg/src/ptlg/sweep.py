"""Parameter-space scans, local refinement, and figure-data generation.

Grids are evaluated in deterministic lexicographic order over the parameter
axes (t, alpha, theta, phi).  Domain errors at individual grid points are
recorded per row instead of aborting the scan, so near-exceptional-point
grids still produce complete figures.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .errors import DegenerateWeightError, DomainError, UsageError
from .lgexpr import l13, variant_v
from .macrodiag import degree_report
from .protocol import ScenarioPreset, pt_standard, pt_variant, unitary_standard, unitary_variant

PARAM_ORDER = ("t", "alpha", "theta", "phi")
EXPRESSIONS = ("L13", "V1", "V2", "V3")
DEFAULT_ALPHAS = (0.0, np.pi / 3, 2 * np.pi / 5, np.pi / 2.05)
DEFAULT_THETA = 5 * np.pi / 6
DEFAULT_PHI = np.pi / 2
_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise UsageError(f"grid count must be >= 1, got {self.count}")
        if self.hi < self.lo:
            raise UsageError(f"grid bounds reversed: [{self.lo}, {self.hi}]")

    def values(self) -> np.ndarray:
        if self.count == 1:
            return np.array([self.lo])
        return np.linspace(self.lo, self.hi, self.count)

    def spacing(self) -> float:
        if self.count == 1:
            return 0.0
        return (self.hi - self.lo) / (self.count - 1)


@dataclass(frozen=True)
class SweepConfig:
    """What to evaluate and where.

    `grids` lists the swept parameters; anything else comes from `fixed` or
    the defaults (theta = 5 pi / 6, phi = pi / 2, alpha required only for the
    non-unitary kind).
    """

    expression: str
    kind: str  # "unitary" | "pt"
    grids: dict[str, GridSpec] = field(default_factory=dict)
    fixed: dict[str, float] = field(default_factory=dict)
    s: float = 1.0
    pre_evolution: bool | None = None
    refine: bool = False
    refine_tolerance: float = 1e-7
    workers: int = 1

    def __post_init__(self):
        if self.expression not in EXPRESSIONS:
            raise UsageError(f"expression must be one of {EXPRESSIONS}")
        if self.kind not in ("unitary", "pt"):
            raise UsageError("kind must be 'unitary' or 'pt'")
        unknown = set(self.grids) | set(self.fixed) - set(PARAM_ORDER)
        unknown -= set(PARAM_ORDER)
        if unknown:
            raise UsageError(f"unknown parameters {sorted(unknown)}")
        if "t" not in self.grids and "t" not in self.fixed:
            raise UsageError("parameter 't' must be gridded or fixed")
        if self.kind == "pt" and "alpha" not in self.grids and "alpha" not in self.fixed:
            raise UsageError("non-unitary sweeps need 'alpha' gridded or fixed")


@dataclass(frozen=True)
class SweepRow:
    params: dict[str, float]
    value: float
    error: str | None = None


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    rows: list[SweepRow]
    argmax_params: dict[str, float]
    argmax_value: float


def build_preset(cfg: SweepConfig, params: dict[str, float]) -> ScenarioPreset:
    t = params["t"]
    theta = params.get("theta", DEFAULT_THETA)
    phi = params.get("phi", DEFAULT_PHI)
    if cfg.kind == "unitary":
        if cfg.expression == "L13":
            return unitary_standard(t)
        return unitary_variant(t, theta, phi)
    alpha = params["alpha"]
    pre = True if cfg.pre_evolution is None else cfg.pre_evolution
    if cfg.expression == "L13":
        return pt_standard(alpha, t, s=cfg.s, pre_evolution=pre)
    return pt_variant(alpha, t, theta, phi, s=cfg.s, pre_evolution=pre)


def evaluate_expression(cfg: SweepConfig, params: dict[str, float]) -> float:
    preset = build_preset(cfg, params)
    if cfg.expression == "L13":
        return l13(preset)
    return variant_v(int(cfg.expression[1]), preset)


def _param_axes(cfg: SweepConfig) -> list[tuple[str, np.ndarray]]:
    axes = []
    for name in PARAM_ORDER:
        if name in cfg.grids:
            axes.append((name, cfg.grids[name].values()))
    return axes


def scan(cfg: SweepConfig) -> SweepResult:
    """Dense evaluation over the Cartesian grid, then optional local refinement."""
    axes = _param_axes(cfg)
    names = [n for n, _ in axes]
    points = [dict(cfg.fixed) | dict(zip(names, combo))
              for combo in product(*(vals for _, vals in axes))]

    def one(params: dict[str, float]) -> SweepRow:
        try:
            return SweepRow(params=params, value=evaluate_expression(cfg, params))
        except (DomainError, DegenerateWeightError) as exc:
            return SweepRow(params=params, value=float("nan"), error=str(exc))

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            rows = list(pool.map(one, points))
    else:
        rows = [one(p) for p in points]

    valid = [r for r in rows if r.error is None]
    if not valid:
        raise DomainError("every grid point failed; nothing to maximize")
    best = max(valid, key=lambda r: r.value)
    argmax_params, argmax_value = dict(best.params), best.value
    if cfg.refine:
        argmax_params, argmax_value = refine_max(cfg, argmax_params)
    return SweepResult(config=cfg, rows=rows, argmax_params=argmax_params,
                       argmax_value=argmax_value)


def _golden_max(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def refine_max(cfg: SweepConfig, seed: dict[str, float]) -> tuple[dict[str, float], float]:
    """Cyclic per-coordinate golden-section ascent from a seed point.

    Each swept coordinate is refined inside a bracket of one grid spacing
    around the current point (clipped to the grid bounds), cycling until a
    full pass improves no coordinate by more than the tolerance.  The result
    never falls below the seed's value.
    """
    params = dict(cfg.fixed) | {k: float(v) for k, v in seed.items()}
    best = evaluate_expression(cfg, params)
    if not np.isfinite(best):
        raise UsageError(f"objective not finite at seed {seed}")
    sweepable = [(n, g) for n, g in cfg.grids.items() if g.count >= 2]
    for _ in range(60):
        moved = 0.0
        for name, grid in sweepable:
            radius = grid.spacing()

            def f(x, _name=name):
                trial = dict(params)
                trial[_name] = x
                try:
                    return evaluate_expression(cfg, trial)
                except (DomainError, DegenerateWeightError):
                    return -np.inf

            lo = max(grid.lo, params[name] - radius)
            hi = min(grid.hi, params[name] + radius)
            if hi <= lo:
                continue
            x, fx = _golden_max(f, lo, hi, cfg.refine_tolerance)
            if fx > best:
                moved = max(moved, abs(x - params[name]))
                params[name], best = x, fx
        if moved < cfg.refine_tolerance:
            break
    return params, best


@dataclass(frozen=True)
class FigureData:
    columns: tuple[str, ...]
    rows: list[tuple[float, ...]]


_D123_COLS = ("D123_pp", "D123_pm", "D123_mp", "D123_mm")
_D1_2_3_COLS = ("D1_2_3_pp", "D1_2_3_pm", "D1_2_3_mp", "D1_2_3_mm")
_R12_3_COLS = ("R12_3_pp", "R12_3_pm", "R12_3_mp", "R12_3_mm")
_OUTCOME_ORDER = ((+1, +1), (+1, -1), (-1, +1), (-1, -1))


def figure_data(fig: int, t_steps: int = 512, alphas=DEFAULT_ALPHAS,
                theta: float = DEFAULT_THETA, phi: float = DEFAULT_PHI,
                s: float = 1.0, pre_evolution: bool = True,
                t_min: float = 0.0, t_max: float = np.pi) -> FigureData:
    """Plot-ready curve data for the four diagnostic figures.

    1: standard LG value vs t per alpha.
    2: variant V3 vs t per alpha (pure-state preset).
    3: standard LG value plus all NSIT/AOT degree curves per alpha.
    4: variant V1 plus its NSIT and AOT degree curves per alpha.
    """
    if fig not in (1, 2, 3, 4):
        raise UsageError(f"figure index must be 1..4, got {fig}")
    if t_steps < 1:
        raise UsageError(f"t_steps must be >= 1, got {t_steps}")
    ts = np.linspace(t_min, t_max, t_steps)
    rows: list[tuple[float, ...]] = []

    if fig == 1:
        columns = ("alpha", "t", "L13")
        for alpha in alphas:
            for t in ts:
                try:
                    val = l13(pt_standard(alpha, t, s=s, pre_evolution=pre_evolution))
                except (DomainError, DegenerateWeightError):
                    val = float("nan")
                rows.append((alpha, t, val))
        return FigureData(columns, rows)

    if fig == 2:
        columns = ("alpha", "t", "V3", "theta", "phi")
        for alpha in alphas:
            for t in ts:
                try:
                    val = variant_v(3, pt_variant(alpha, t, theta, phi, s=s,
                                                  pre_evolution=pre_evolution))
                except (DomainError, DegenerateWeightError):
                    val = float("nan")
                rows.append((alpha, t, val, theta, phi))
        return FigureData(columns, rows)

    if fig == 3:
        columns = ("alpha", "t", "L13") + _D123_COLS + _D1_2_3_COLS + _R12_3_COLS
        for alpha in alphas:
            for t in ts:
                try:
                    preset = pt_standard(alpha, t, s=s, pre_evolution=pre_evolution)
                    rep = degree_report(preset)
                    row = (alpha, t, l13(preset))
                    row += tuple(rep.d_123[oc] for oc in _OUTCOME_ORDER)
                    row += tuple(rep.d_1_2_3[oc] for oc in _OUTCOME_ORDER)
                    row += tuple(rep.r_12_3[oc] for oc in _OUTCOME_ORDER)
                except (DomainError, DegenerateWeightError):
                    row = (alpha, t) + (float("nan"),) * (len(columns) - 2)
                rows.append(row)
        return FigureData(columns, rows)

    columns = ("alpha", "t", "V1") + _D123_COLS + ("R1_23_p", "R1_23_m")
    for alpha in alphas:
        for t in ts:
            try:
                preset = pt_variant(alpha, t, theta, phi, s=s, pre_evolution=pre_evolution)
                rep = degree_report(preset)
                row = (alpha, t, variant_v(1, preset))
                row += tuple(rep.d_123[oc] for oc in _OUTCOME_ORDER)
                row += (rep.r_1_23[+1], rep.r_1_23[-1])
            except (DomainError, DegenerateWeightError):
                row = (alpha, t) + (float("nan"),) * (len(columns) - 2)
            rows.append(row)
    return FigureData(columns, rows)
