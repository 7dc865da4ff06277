"""Run counters: wedge traversal, synchronization rounds, recounts, phase timings."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field


@dataclass
class PeelStats:
    """Monotone counters accumulated over one decomposition run.

    ``wedges_traversed`` is the total across phases; ``phase_wedges`` keeps the
    per-phase split (keys like "count", "cd", "fd", "bup", "parb").
    ``sync_rounds`` counts barrier-delimited peeling iterations of the batch
    algorithms; the sequential peels and the fine phase never increment it.
    """

    wedges_traversed: int = 0
    sync_rounds: int = 0
    recount_invocations: int = 0
    phase_wedges: dict[str, int] = field(default_factory=dict)
    phase_times: dict[str, float] = field(default_factory=dict)

    def add_wedges(self, phase: str, n: int) -> None:
        if n < 0:
            raise ValueError("wedge counts are non-negative")
        self.wedges_traversed += int(n)
        self.phase_wedges[phase] = self.phase_wedges.get(phase, 0) + int(n)

    def add_time(self, phase: str, seconds: float) -> None:
        self.phase_times[phase] = self.phase_times.get(phase, 0.0) + seconds

    @contextmanager
    def timing(self, phase: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.add_time(phase, time.perf_counter() - t0)

    def merge(self, other: "PeelStats") -> None:
        """Fold another run's counters into this one (integer sums)."""
        self.wedges_traversed += other.wedges_traversed
        self.sync_rounds += other.sync_rounds
        self.recount_invocations += other.recount_invocations
        for k, v in other.phase_wedges.items():
            self.phase_wedges[k] = self.phase_wedges.get(k, 0) + v
        for k, v in other.phase_times.items():
            self.phase_times[k] = self.phase_times.get(k, 0.0) + v
