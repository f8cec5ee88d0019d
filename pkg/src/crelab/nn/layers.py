"""Dense layers with deterministic initialization."""

from __future__ import annotations

import numpy as np

from ..errors import ShapeError
from .tape import Tensor, as_tensor


class DenseLayer:
    """Affine layer y = x @ W.T + b with W stored as (out, in)."""

    def __init__(self, weight: Tensor, bias: Tensor):
        if weight.data.ndim != 2 or bias.data.ndim != 1:
            raise ShapeError(
                f"dense layer wants 2-D weight and 1-D bias, got "
                f"{weight.data.shape} and {bias.data.shape}"
            )
        if weight.data.shape[0] != bias.data.shape[0]:
            raise ShapeError(
                f"weight rows {weight.data.shape[0]} and bias length "
                f"{bias.data.shape[0]} disagree"
            )
        if not (np.isfinite(weight.data).all() and np.isfinite(bias.data).all()):
            raise ShapeError("dense layer parameters must be finite")
        self.weight = weight
        self.bias = bias

    @property
    def in_dim(self) -> int:
        return self.weight.data.shape[1]

    @property
    def out_dim(self) -> int:
        return self.weight.data.shape[0]

    def __call__(self, x) -> Tensor:
        return dense_forward(self, x)

    def parameters(self):
        return [self.weight, self.bias]


def init_dense(n_in: int, n_out: int, rng: np.random.Generator, name: str) -> DenseLayer:
    """Uniform(-a, a) weights with a = sqrt(6 / (fan_in + fan_out)); zero bias."""
    bound = np.sqrt(6.0 / (n_in + n_out))
    weight = rng.uniform(-bound, bound, size=(n_out, n_in))
    return DenseLayer(
        Tensor(weight, requires_grad=True, name=f"{name}.weight"),
        Tensor(np.zeros(n_out), requires_grad=True, name=f"{name}.bias"),
    )


def dense_forward(layer: DenseLayer, x) -> Tensor:
    x = as_tensor(x)
    if x.data.ndim != 2 or x.data.shape[1] != layer.in_dim:
        raise ShapeError(
            f"input shape {x.data.shape} incompatible with dense layer "
            f"({layer.out_dim}, {layer.in_dim})"
        )
    return x @ layer.weight.T + layer.bias
