"""Adam optimizer over tape tensors."""

from __future__ import annotations

import numpy as np

from ..errors import NumericalInstabilityError
from .tape import Tensor


class Adam:
    """Adam with bias correction; moments live per parameter tensor.

    step_count increments by exactly one per update, gradients must be
    finite, and a missing gradient is treated as zero.
    """

    def __init__(self, params, learning_rate=1e-3, beta1=0.9, beta2=0.999, epsilon=1e-8):
        self.params: list[Tensor] = list(params)
        self.learning_rate = float(learning_rate)
        self.beta1 = float(beta1)
        self.beta2 = float(beta2)
        self.epsilon = float(epsilon)
        self.step_count = 0
        self.first_moment = [np.zeros_like(p.data) for p in self.params]
        self.second_moment = [np.zeros_like(p.data) for p in self.params]

    def zero_grad(self):
        for p in self.params:
            p.grad = None

    def step(self):
        self.step_count += 1
        t = self.step_count
        correction1 = 1.0 - self.beta1**t
        correction2 = 1.0 - self.beta2**t
        for i, p in enumerate(self.params):
            grad = p.grad
            if grad is None:
                grad = np.zeros_like(p.data)
            elif not np.isfinite(grad).all():
                name = p.name or f"parameter[{i}]"
                raise NumericalInstabilityError(f"non-finite gradient in {name}")
            m = self.first_moment[i]
            v = self.second_moment[i]
            m *= self.beta1
            m += (1.0 - self.beta1) * grad
            v *= self.beta2
            v += (1.0 - self.beta2) * grad**2
            m_hat = m / correction1
            v_hat = v / correction2
            p.data -= self.learning_rate * m_hat / (np.sqrt(v_hat) + self.epsilon)

    def state_dict(self) -> dict:
        return {
            "learning_rate": self.learning_rate,
            "beta1": self.beta1,
            "beta2": self.beta2,
            "epsilon": self.epsilon,
            "step_count": self.step_count,
            "first_moment": [m.copy() for m in self.first_moment],
            "second_moment": [v.copy() for v in self.second_moment],
        }

    def load_state_dict(self, state: dict):
        self.learning_rate = float(state["learning_rate"])
        self.beta1 = float(state["beta1"])
        self.beta2 = float(state["beta2"])
        self.epsilon = float(state["epsilon"])
        self.step_count = int(state["step_count"])
        self.first_moment = [np.array(m, dtype=np.float64) for m in state["first_moment"]]
        self.second_moment = [np.array(v, dtype=np.float64) for v in state["second_moment"]]
