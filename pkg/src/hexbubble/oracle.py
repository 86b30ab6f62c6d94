"""Brute-force cross-checks for the closed-form solvers.

grid_refine_min scans a dense feasible grid and polishes the best point
with cyclic direction descent under a shrinking step.  It is deliberately
independent of every closed form in this package: tests compare the two
routes and neither is ever replaced by the other.

perturb_local_min jiggles a configuration's free parameters and reports
whether any feasible jiggle beats the claimed minimum.  Randomness comes
from a self-contained linear congruential generator,

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64
    uniform = (state >> 11) / 2^53

so trial sequences can be replayed bit-for-bit in any language.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import hexnorm

LCG_MULT = 6364136223846793005
LCG_INC = 1442695040888963407
LCG_MASK = (1 << 64) - 1

MIN_GRID = 16
IMPROVE_TOL = 1e-10  # perturbation must beat the baseline by more than this


class Lcg:
    """64-bit linear congruential generator (documented in module docstring)."""

    def __init__(self, seed: int = 0) -> None:
        self.state = seed & LCG_MASK

    def next_u64(self) -> int:
        self.state = (self.state * LCG_MULT + LCG_INC) & LCG_MASK
        return self.state

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        u = (self.next_u64() >> 11) / float(1 << 53)
        return lo + (hi - lo) * u


@dataclass(frozen=True)
class BoxSpec:
    """Axis-aligned search box with an optional feasibility predicate.

    A feasibility witness is required at construction whenever a predicate
    is supplied, so an empty feasible region is rejected up front.
    """

    lower: tuple[float, ...]
    upper: tuple[float, ...]
    feasible: Optional[Callable[[tuple[float, ...]], bool]] = None
    witness: Optional[tuple[float, ...]] = None

    def __post_init__(self) -> None:
        lo = tuple(float(v) for v in self.lower)
        hi = tuple(float(v) for v in self.upper)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)
        if len(lo) != len(hi) or not lo:
            raise ValueError("lower/upper must be nonempty and equal length")
        for a, b in zip(lo, hi):
            if not (math.isfinite(a) and math.isfinite(b)) or a >= b:
                raise ValueError("need finite lower < upper per axis")
        if self.feasible is not None:
            if self.witness is None:
                raise ValueError("feasibility predicate requires a witness point")
            w = tuple(float(v) for v in self.witness)
            object.__setattr__(self, "witness", w)
            if len(w) != len(lo) or not self._inside(w) or not self.feasible(w):
                raise ValueError("witness is not a feasible point of the box")

    @property
    def dim(self) -> int:
        return len(self.lower)

    def _inside(self, p: Sequence[float]) -> bool:
        return all(
            lo - 1e-15 <= v <= hi + 1e-15
            for v, lo, hi in zip(p, self.lower, self.upper)
        )

    def admits(self, p: tuple[float, ...]) -> bool:
        if not self._inside(p):
            return False
        return self.feasible is None or bool(self.feasible(p))


def grid_refine_min(
    objective: Callable[[tuple[float, ...]], float],
    box: BoxSpec,
    grid: int = 64,
    refine_iters: int = 60,
    directions: Optional[Sequence[tuple[float, ...]]] = None,
) -> tuple[tuple[float, ...], float]:
    """Dense grid scan followed by cyclic direction descent.

    Returns (argmin, value).  The scan uses an inclusive grid of `grid`
    points per axis (grid >= 16); descent then walks the best point along
    +/- each direction with per-axis steps equal to the grid spacing,
    halving the steps after every cycle that yields no improvement, for
    `refine_iters` cycles.  Fully deterministic.

    `directions` defaults to the coordinate axes; extra unit directions
    (e.g. the diagonal, for objectives with a valley along it) may be
    supplied and are used with the same per-axis step scaling.
    """
    if grid < MIN_GRID:
        raise ValueError(f"grid must be >= {MIN_GRID}")
    dim = box.dim
    axes = [
        [box.lower[i] + (box.upper[i] - box.lower[i]) * j / (grid - 1) for j in range(grid)]
        for i in range(dim)
    ]

    best_x: Optional[tuple[float, ...]] = None
    best_f = math.inf
    idx = [0] * dim
    while True:
        p = tuple(axes[i][idx[i]] for i in range(dim))
        if box.admits(p):
            f = objective(p)
            if f < best_f:
                best_f, best_x = f, p
        k = dim - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < grid:
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            break
    if best_x is None:
        raise ValueError("no feasible grid point in the box")

    if directions is None:
        dirs: list[tuple[float, ...]] = []
    else:
        dirs = [tuple(float(c) for c in d) for d in directions]
    for i in range(dim):
        e = [0.0] * dim
        e[i] = 1.0
        dirs.append(tuple(e))
    signed = [d for base in dirs for d in (base, tuple(-c for c in base))]

    step = [(box.upper[i] - box.lower[i]) / (grid - 1) for i in range(dim)]
    x, fx = best_x, best_f
    for _ in range(refine_iters):
        improved = False
        for d in signed:
            for _walk in range(64):  # bounded greedy walk along d
                cand = tuple(x[i] + step[i] * d[i] for i in range(dim))
                if not box.admits(cand):
                    break
                fc = objective(cand)
                if fc < fx:
                    x, fx = cand, fc
                    improved = True
                else:
                    break
        if not improved:
            step = [s * 0.5 for s in step]
    return x, fx


def perturb_local_min(
    geometry_a: "hexnorm.PolyChain",
    geometry_b: "hexnorm.PolyChain",
    rebuild: Callable[[tuple[float, ...]], Optional[tuple["hexnorm.PolyChain", "hexnorm.PolyChain"]]],
    params: Sequence[float],
    trials: int = 500,
    eps: float = 1e-3,
    seed: int = 0,
) -> bool:
    """True iff no feasible perturbed rebuild beats the given configuration.

    `rebuild(params)` reconstructs a volume-consistent configuration from
    free parameters (or returns None / raises ValueError when the
    parameters are infeasible; such trials are skipped).  Each trial
    multiplies every parameter by (1 + eps*u) with u drawn uniformly from
    [-1, 1] via the documented LCG, and the perturbed double-bubble
    perimeter must not undercut the baseline by more than 1e-10.
    """
    if not (0.0 < eps <= 1e-2):
        raise ValueError("eps must be in (0, 1e-2]")
    if trials < 1:
        raise ValueError("trials must be positive")
    base = list(float(v) for v in params)
    baseline, _ = hexnorm.double_bubble_perimeter(geometry_a, geometry_b)
    rng = Lcg(seed)
    for _ in range(trials):
        cand = tuple(v * (1.0 + eps * rng.uniform(-1.0, 1.0)) for v in base)
        try:
            built = rebuild(cand)
        except ValueError:
            continue
        if built is None:
            continue
        total, _ = hexnorm.double_bubble_perimeter(built[0], built[1])
        if total < baseline - IMPROVE_TOL:
            return False
    return True
