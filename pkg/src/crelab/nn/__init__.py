"""Minimal differentiable substrate: tape, dense layers, losses, Adam."""

from .gradcheck import GradCheckReport, grad_check
from .layers import DenseLayer, dense_forward, init_dense
from .losses import bce_loss, loss, mse_loss
from .optim import Adam
from .tape import (
    Tensor,
    activation,
    as_tensor,
    clip,
    concat,
    constant,
    exp,
    gradient_reversal,
    log,
    relu,
    sigmoid,
)

__all__ = [
    "Adam",
    "DenseLayer",
    "GradCheckReport",
    "Tensor",
    "activation",
    "as_tensor",
    "bce_loss",
    "clip",
    "concat",
    "constant",
    "dense_forward",
    "exp",
    "grad_check",
    "gradient_reversal",
    "init_dense",
    "log",
    "loss",
    "mse_loss",
    "relu",
    "sigmoid",
]
