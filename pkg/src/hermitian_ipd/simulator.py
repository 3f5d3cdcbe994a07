"""Monte-Carlo estimation of decoding failure rates.

Each trial draws a uniform message, encodes it, adds exactly ``tau`` random
errors and decodes. Trials are seeded independently from
``SeedSequence([master_seed, trial_index])`` feeding numpy's PCG64, so the
result does not depend on the order or the process in which trials run.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.stats import beta

from .code import HermitianCode, code_new, hamming_distance
from .decoder import decode, decode_with_sweep
from .galois import DTYPE, ConfigurationError
from .key_equations import validate_decoder_params
from .pade_solver import radius_practical

CSV_COLUMNS = ("q", "m", "n", "k", "d_star", "ell", "s", "tau", "trials", "failures",
               "miscorrections", "failure_rate", "ci_low", "ci_high", "seed", "seconds")


@dataclass(frozen=True)
class TrialConfig:
    q: int
    m: int
    s: int
    ell: int
    tau: int | None = None  # None: practical radius
    trials: int = 100
    master_seed: int = 0
    sweep: bool = False

    def resolved_tau(self) -> int:
        if self.tau is None:
            return radius_practical(self.q, self.m, self.s, self.ell)
        return self.tau

    def validate(self) -> HermitianCode:
        code = code_new(self.q, self.m)
        validate_decoder_params(self.s, self.ell)
        if not isinstance(self.trials, int) or self.trials < 1:
            raise ConfigurationError(f"trials must be a positive integer, got {self.trials}")
        if not 0 <= self.master_seed < 2 ** 64:
            raise ConfigurationError("master seed must fit in 64 bits")
        tau = self.resolved_tau()
        if not 0 <= tau <= code.n:
            raise ConfigurationError(f"tau must lie in [0, n={code.n}], got {tau}")
        return code


@dataclass
class Miscorrection:
    trial: int
    sent: list[int]
    decoded: list[int]
    received: list[int]


@dataclass
class TrialStats:
    trials: int = 0
    decode_failures: int = 0
    miscorrections: int = 0
    successes: int = 0
    wall_time: float = 0.0
    miscorrection_records: list[Miscorrection] = field(default_factory=list, repr=False)

    @property
    def failure_rate(self) -> Fraction:
        """Decode failures and miscorrections together, over all trials."""
        if not self.trials:
            return Fraction(0)
        return Fraction(self.decode_failures + self.miscorrections, self.trials)

    def confidence_interval(self, level: float = 0.95) -> tuple[float, float]:
        """Clopper-Pearson interval for the merged failure rate."""
        n = self.trials
        x = self.decode_failures + self.miscorrections
        if n == 0:
            return 0.0, 1.0
        a = (1 - level) / 2
        lo = 0.0 if x == 0 else float(beta.ppf(a, x, n - x + 1))
        hi = 1.0 if x == n else float(beta.ppf(1 - a, x + 1, n - x))
        return lo, hi

    def merge(self, other: "TrialStats") -> "TrialStats":
        return TrialStats(
            trials=self.trials + other.trials,
            decode_failures=self.decode_failures + other.decode_failures,
            miscorrections=self.miscorrections + other.miscorrections,
            successes=self.successes + other.successes,
            wall_time=self.wall_time + other.wall_time,
            miscorrection_records=sorted(self.miscorrection_records + other.miscorrection_records,
                                         key=lambda r: r.trial),
        )

    def counts(self) -> tuple[int, int, int, int]:
        """The deterministic part of the statistics."""
        return self.trials, self.decode_failures, self.miscorrections, self.successes


def random_error(code: HermitianCode, tau: int, rng: np.random.Generator) -> np.ndarray:
    """Error vector of weight exactly ``tau``: uniform support, uniform nonzero values."""
    if not 0 <= tau <= code.n:
        raise ConfigurationError(f"error weight must lie in [0, {code.n}], got {tau}")
    e = np.zeros(code.n, dtype=DTYPE)
    support = rng.choice(code.n, size=tau, replace=False)
    e[support] = rng.integers(1, code.field.order, size=tau)
    return e


def trial_rng(master_seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([master_seed, index])))


def _run_range(config: TrialConfig, start: int, stop: int) -> TrialStats:
    code = code_new(config.q, config.m)
    tau = config.resolved_tau()
    F = code.field
    stats = TrialStats()
    t0 = time.perf_counter()
    for idx in range(start, stop):
        rng = trial_rng(config.master_seed, idx)
        sent = code.encode(code.random_message(rng))
        r = F.add_table[sent, random_error(code, tau, rng)]
        if config.sweep:
            out = decode_with_sweep(code, r, config.s, config.ell, tau)
        else:
            out = decode(code, r, config.s, config.ell, tau)
        stats.trials += 1
        if not out.success:
            stats.decode_failures += 1
        elif np.array_equal(out.codeword, sent):
            stats.successes += 1
        else:
            # the decoder already re-encodes, check membership and distance once more
            if not code.is_codeword(out.codeword) or hamming_distance(out.codeword, r) > tau:
                raise RuntimeError("decoder returned an invalid codeword")
            stats.miscorrections += 1
            stats.miscorrection_records.append(
                Miscorrection(idx, sent.tolist(), out.codeword.tolist(), r.tolist()))
    stats.wall_time = time.perf_counter() - t0
    return stats


def run_trials(config: TrialConfig, workers: int = 1) -> TrialStats:
    config.validate()
    if workers <= 1 or config.trials < 2 * workers:
        return _run_range(config, 0, config.trials)
    bounds = np.linspace(0, config.trials, workers + 1).astype(int)
    t0 = time.perf_counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_range, [config] * workers, bounds[:-1].tolist(), bounds[1:].tolist()))
    total = TrialStats()
    for p in parts:
        total = total.merge(p)
    total.wall_time = time.perf_counter() - t0
    return total


def stats_row(config: TrialConfig, stats: TrialStats) -> dict:
    code = code_new(config.q, config.m)
    lo, hi = stats.confidence_interval()
    return {
        "q": config.q, "m": config.m, "n": code.n, "k": code.k, "d_star": code.d_star,
        "ell": config.ell, "s": config.s, "tau": config.resolved_tau(),
        "trials": stats.trials, "failures": stats.decode_failures,
        "miscorrections": stats.miscorrections,
        "failure_rate": float(stats.failure_rate), "ci_low": lo, "ci_high": hi,
        "seed": config.master_seed, "seconds": round(stats.wall_time, 3),
    }


# One row per reference code at its practical radius, with desk-scale trial counts.
TABLE_ROWS = (
    (4, 15, 2, 4, 29, 200),
    (5, 55, 2, 3, 36, 50),
    (5, 20, 2, 5, 68, 30),
    (7, 70, 2, 3, 161, 5),
    (7, 70, 2, 4, 169, 3),
    (7, 55, 2, 4, 184, 3),
)


def default_rows(seed: int = 0, scale: float = 1.0) -> list[TrialConfig]:
    return [TrialConfig(q, m, s, ell, tau, max(1, round(n * scale)), seed)
            for q, m, s, ell, tau, n in TABLE_ROWS]


def reproduce_table(rows: Iterable[TrialConfig] | None = None, workers: int = 1) -> list[dict]:
    """Run every row and return one report dict per row (keys as in CSV_COLUMNS)."""
    if rows is None:
        rows = default_rows()
    return [stats_row(cfg, run_trials(cfg, workers)) for cfg in rows]


def format_rows(rows: Sequence[dict], fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps([{k: r[k] for k in CSV_COLUMNS} for r in rows], indent=2) + "\n"
    if fmt != "csv":
        raise ConfigurationError(f"unknown output format {fmt!r}")
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: r[k] for k in CSV_COLUMNS})
    return buf.getvalue()
