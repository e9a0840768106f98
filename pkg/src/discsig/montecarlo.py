"""Statistical oracle: simulate the exit signature and compare to exact values.

Paths are piecewise-linear interpolations of Brownian motion (Gaussian steps
of variance dt per coordinate); their signatures converge to the Stratonovich
signature as dt -> 0, and at dt = 1e-4 the discretization bias sits well
below the Monte-Carlo noise for the path counts used here (the bias/variance
trade-off is the caller's to configure via dt and paths).  A path ends at the
first grid point outside the disc; the final step is cut back to the exact
segment-circle intersection, which removes the sqrt(dt) overshoot bias.

Reproducibility: path p draws from its own PCG64 stream seeded with
SeedSequence((seed, p)), in fixed blocks of ``BLOCK_STEPS`` steps, and the
per-path signatures are reduced single-threaded with numpy's pairwise
summation in path order.  Identical configs therefore give bit-identical
estimates.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np
from numba import njit

#: per-path RNG block: each draw requests this many steps at a time
BLOCK_STEPS = 4096
#: hard cap per path; hitting it means the configuration is broken
MAX_STEPS_PER_PATH = 10**9
#: paths buffered between pairwise reductions
_CHUNK_PATHS = 4096


@dataclass(frozen=True)
class SimConfig:
    """Start point, step size, path count, truncation depth and seed."""

    start: tuple[float, float]
    dt: float
    paths: int
    level: int
    seed: int

    def __post_init__(self):
        x, y = self.start
        if x * x + y * y >= 1.0:
            raise ValueError("start point must lie strictly inside the unit disc")
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        if self.paths < 1:
            raise ValueError("need at least one path")
        if self.level < 0:
            raise ValueError("level must be >= 0")
        if self.seed < 0:
            raise ValueError("seed must be a nonnegative integer")


@dataclass(frozen=True)
class SignatureEstimate:
    """Componentwise mean and standard error of the simulated exit signature."""

    config: SimConfig
    means: list
    stderrs: list

    @property
    def level(self) -> int:
        return self.config.level


def segment_signature(delta, depth: int) -> list:
    """Signature of a straight segment: the truncated tensor exponential.

    Level k is delta^(tensor k) / k! as a dense array of shape (2,)*k.
    """
    d = np.asarray(delta, dtype=float)
    levels = [np.ones(())]
    for k in range(1, depth + 1):
        levels.append(np.multiply.outer(levels[-1], d) / k)
    return levels


def chen_product(a: list, b: list) -> list:
    """Concatenation (Chen) product of two dense truncated signatures."""
    depth = len(a) - 1
    out = []
    for k in range(depth + 1):
        acc = np.zeros((2,) * k)
        for m in range(k + 1):
            acc = acc + np.multiply.outer(a[k - m], b[m])
        out.append(acc)
    return out


def path_signature(points, depth: int) -> list:
    """Signature of the piecewise-linear path through the given points."""
    pts = np.asarray(points, dtype=float)
    sig = segment_signature(np.zeros(2), depth)
    for i in range(len(pts) - 1):
        sig = chen_product(sig, segment_signature(pts[i + 1] - pts[i], depth))
    return sig


@njit(cache=True)
def _apply_increment(sig, pw, inv_fact, dx, dy, depth):
    # pw[off_m + w] = product of increment coordinates along word w
    pw[0] = 1.0
    for m in range(1, depth + 1):
        base_m = (1 << m) - 1
        base_prev = (1 << (m - 1)) - 1
        for w in range(1 << m):
            d = dx if (w & 1) == 0 else dy
            pw[base_m + w] = pw[base_prev + (w >> 1)] * d
    # Chen product with the segment exponential, updating top level first so
    # lower levels still hold their pre-step values.
    for k in range(depth, 0, -1):
        base_k = (1 << k) - 1
        for m in range(1, k + 1):
            base_s = (1 << (k - m)) - 1
            base_p = (1 << m) - 1
            f = inv_fact[m]
            for w1 in range(1 << (k - m)):
                sv = sig[base_s + w1]
                if sv == 0.0:
                    continue
                sf = sv * f
                row = base_k + (w1 << m)
                for w2 in range(1 << m):
                    sig[row + w2] += sf * pw[base_p + w2]


@njit(cache=True)
def _advance_path(pos, sig, pw, inv_fact, steps, depth):
    """Walk one path through a block of increments.

    Returns (1, steps_used) if the path left the disc (with the final
    increment cut to the circle crossing already applied), else (0, block length).
    """
    for s in range(steps.shape[0]):
        dx = steps[s, 0]
        dy = steps[s, 1]
        nx = pos[0] + dx
        ny = pos[1] + dy
        if nx * nx + ny * ny >= 1.0:
            a = dx * dx + dy * dy
            b = pos[0] * dx + pos[1] * dy
            c = pos[0] * pos[0] + pos[1] * pos[1] - 1.0
            t = (-b + np.sqrt(b * b - a * c)) / a
            dx *= t
            dy *= t
            _apply_increment(sig, pw, inv_fact, dx, dy, depth)
            pos[0] += dx
            pos[1] += dy
            return 1, s + 1
        _apply_increment(sig, pw, inv_fact, dx, dy, depth)
        pos[0] = nx
        pos[1] = ny
    return 0, steps.shape[0]


def simulate_exit_signature(cfg: SimConfig) -> SignatureEstimate:
    """Estimate the expected exit signature by simulation; deterministic per seed."""
    depth = cfg.level
    siglen = 2 ** (depth + 1) - 1
    inv_fact = np.array([1.0 / factorial(m) for m in range(depth + 1)])
    pw = np.empty(siglen)
    scale = np.sqrt(cfg.dt)
    start = np.array(cfg.start, dtype=float)

    buf = np.empty((min(_CHUNK_PATHS, cfg.paths), siglen))
    filled = 0
    partial_sums = []
    partial_sqs = []

    def _flush():
        nonlocal filled
        if filled:
            partial_sums.append(buf[:filled].sum(axis=0))
            partial_sqs.append((buf[:filled] ** 2).sum(axis=0))
            filled = 0

    for p in range(cfg.paths):
        rng = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence((cfg.seed, p)))
        )
        pos = start.copy()
        sig = np.zeros(siglen)
        sig[0] = 1.0
        used = 0
        while True:
            steps = rng.normal(0.0, scale, size=(BLOCK_STEPS, 2))
            exited, n = _advance_path(pos, sig, pw, inv_fact, steps, depth)
            used += n
            if exited:
                break
            if used >= MAX_STEPS_PER_PATH:
                raise RuntimeError(
                    f"path {p} exceeded {MAX_STEPS_PER_PATH} steps; "
                    "the configuration is likely broken"
                )
        buf[filled] = sig
        filled += 1
        if filled == buf.shape[0]:
            _flush()
    _flush()

    total = np.sum(partial_sums, axis=0)
    total_sq = np.sum(partial_sqs, axis=0)
    m = cfg.paths
    mean = total / m
    if m > 1:
        var = np.maximum(total_sq - m * mean**2, 0.0) / (m - 1)
    else:
        var = np.zeros_like(mean)
    stderr = np.sqrt(var / m)

    means, errs = [], []
    for k in range(depth + 1):
        base = (1 << k) - 1
        shape = (2,) * k
        means.append(mean[base : base + (1 << k)].reshape(shape))
        errs.append(stderr[base : base + (1 << k)].reshape(shape))
    return SignatureEstimate(cfg, means, errs)


def mc_compare(est: SignatureEstimate, exact_values, sigmas: float) -> dict:
    """Componentwise z-scores of an estimate against exact values.

    ``exact_values`` is a list of dense per-level arrays covering at least the
    estimate's depth.  Components with zero standard error score 0 when equal
    and inf otherwise.  Returns a JSON-ready report.
    """
    if len(exact_values) < est.level + 1:
        raise ValueError("exact values cover fewer levels than the estimate")
    rows = []
    flagged = 0
    max_abs = 0.0
    for k in range(est.level + 1):
        mean = np.asarray(est.means[k]).reshape(-1)
        err = np.asarray(est.stderrs[k]).reshape(-1)
        exact = np.asarray(exact_values[k], dtype=float).reshape(-1)
        for flat in range(1 << k):
            word = "".join(
                "12"[(flat >> (k - 1 - pos)) & 1] for pos in range(k)
            )
            if err[flat] > 0.0:
                z = (mean[flat] - exact[flat]) / err[flat]
            else:
                z = 0.0 if mean[flat] == exact[flat] else float("inf")
            bad = abs(z) > sigmas
            flagged += bad
            max_abs = max(max_abs, abs(z))
            rows.append(
                {
                    "level": k,
                    "word": word,
                    "mean": float(mean[flat]),
                    "stderr": float(err[flat]),
                    "exact": float(exact[flat]),
                    "zscore": float(z),
                    "flagged": bool(bad),
                }
            )
    return {
        "sigmas": float(sigmas),
        "paths": est.config.paths,
        "dt": est.config.dt,
        "seed": est.config.seed,
        "start": [est.config.start[0], est.config.start[1]],
        "flagged": int(flagged),
        "max_abs_zscore": float(max_abs),
        "rows": rows,
    }
