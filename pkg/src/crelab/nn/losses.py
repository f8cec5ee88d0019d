"""Scalar training losses."""

from __future__ import annotations

import numpy as np

from ..errors import ShapeError
from .tape import Tensor, as_tensor, clip, log

BCE_CLAMP = 1e-7


def _check_shapes(prediction: Tensor, target: Tensor, kind: str):
    if prediction.data.shape != target.data.shape:
        raise ShapeError(
            f"{kind} loss shapes differ: prediction {prediction.data.shape} "
            f"vs target {target.data.shape}"
        )


def mse_loss(prediction, target) -> Tensor:
    """Mean squared difference over all entries."""
    prediction, target = as_tensor(prediction), as_tensor(target)
    _check_shapes(prediction, target, "mse")
    diff = prediction - target
    return (diff * diff).mean()


def bce_loss(prediction, target) -> Tensor:
    """Mean binary cross-entropy; probabilities clamped away from {0, 1}."""
    prediction, target = as_tensor(prediction), as_tensor(target)
    _check_shapes(prediction, target, "bce")
    t = target.data
    if not np.isin(t, (0.0, 1.0)).all():
        raise ValueError("bce targets must be 0 or 1")
    p = clip(prediction, BCE_CLAMP, 1.0 - BCE_CLAMP)
    return -(target * log(p) + (1.0 - target) * log(1.0 - p)).mean()


def loss(kind: str, prediction, target) -> Tensor:
    if kind == "mse":
        return mse_loss(prediction, target)
    if kind == "bce":
        return bce_loss(prediction, target)
    raise ValueError(f"unknown loss kind {kind!r}")
