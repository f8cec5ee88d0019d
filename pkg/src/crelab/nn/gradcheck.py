"""Central finite-difference verification of tape gradients."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .tape import Tensor

STEP_SCALE = 1e-5
TINY_GRAD = 1e-8


@dataclass
class GradCheckEntry:
    tensor_name: str
    index: tuple
    analytic: float
    numeric: float
    rel_err: float
    ok: bool


@dataclass
class GradCheckReport:
    tolerance: float
    entries: list[GradCheckEntry] = field(default_factory=list)

    @property
    def failures(self) -> list[GradCheckEntry]:
        return [e for e in self.entries if not e.ok]

    @property
    def max_rel_err(self) -> float:
        return max((e.rel_err for e in self.entries), default=0.0)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return (
            f"checked {len(self.entries)} entries, "
            f"max rel err {self.max_rel_err:.3e}, "
            f"{len(self.failures)} above tolerance {self.tolerance:g}"
        )


def _relative_error(analytic: float, numeric: float) -> float:
    scale = max(abs(analytic), abs(numeric))
    if scale < TINY_GRAD:
        return abs(analytic - numeric)
    return abs(analytic - numeric) / scale


def grad_check(
    loss_fn,
    params,
    tolerance: float = 1e-4,
    max_entries_per_param: int | None = None,
    rng: np.random.Generator | None = None,
) -> GradCheckReport:
    """Compare tape gradients of loss_fn() against central differences.

    loss_fn must rebuild the forward pass from the live `params` tensors and
    return a scalar Tensor. The step is h = 1e-5 * max(1, |theta|) per entry.
    Entries above tolerance are flagged in the report, never raised.
    """
    params = [p for p in params if isinstance(p, Tensor)]
    report = GradCheckReport(tolerance=tolerance)
    if not params:
        return report

    for p in params:
        p.grad = None
    loss = loss_fn()
    loss.backward()
    analytic_grads = [
        np.zeros_like(p.data) if p.grad is None else p.grad.copy() for p in params
    ]

    for p, analytic in zip(params, analytic_grads):
        flat = p.data.reshape(-1)
        indices = np.arange(flat.size)
        if max_entries_per_param is not None and flat.size > max_entries_per_param:
            sampler = rng if rng is not None else np.random.default_rng(0)
            indices = sampler.choice(flat.size, size=max_entries_per_param, replace=False)
        for j in sorted(int(j) for j in indices):
            original = flat[j]
            h = STEP_SCALE * max(1.0, abs(original))
            flat[j] = original + h
            f_plus = loss_fn().item()
            flat[j] = original - h
            f_minus = loss_fn().item()
            flat[j] = original
            numeric = (f_plus - f_minus) / (2.0 * h)
            a = float(analytic.reshape(-1)[j])
            rel = _relative_error(a, numeric)
            report.entries.append(
                GradCheckEntry(
                    tensor_name=p.name or "unnamed",
                    index=np.unravel_index(j, p.data.shape),
                    analytic=a,
                    numeric=numeric,
                    rel_err=rel,
                    ok=rel <= tolerance,
                )
            )
    return report
