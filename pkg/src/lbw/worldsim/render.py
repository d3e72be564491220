"""Two renderers over a shared scene geometry.

The demonstrator domain draws a two-segment arm silhouette on a warm textured
background; the robot domain draws a square gripper glyph on a cool textured
background. Object and target sprites are identical in both domains, which
makes the translation problem about restyling the agent and the backdrop, not
about inventing scene content.

Rendering is a pure function of (state, domain): all sprites are painted with
finite-support antialiased masks inside their bounding boxes, and the final
canvas is quantized to 8-bit levels so PNG round-trips are lossless.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..common import ConfigurationError
from .env import WorldState
from .tasks import DOMAIN_DEMONSTRATOR, DOMAIN_ROBOT, DOMAINS


@dataclass(frozen=True)
class Observation:
    pixels: np.ndarray  # (H, W, 3) float32 in [0, 1]
    domain_tag: str


# edge feather width in pixels (on each side of a sprite boundary)
_FEATHER_PX = 1.5

_OBJECT_COLOR = (0.82, 0.12, 0.10)
_OBJECT_RADIUS = 0.05
_TARGET_COLOR = (0.10, 0.68, 0.24)
_TARGET_RING_RADIUS = 0.045
_TARGET_RING_WIDTH = 0.022

_ROBOT_BG = (0.79, 0.80, 0.84)
_ROBOT_BODY_COLOR = (0.22, 0.42, 0.78)
_ROBOT_BODY_HALF = 0.052
_ROBOT_DOT_COLOR = (0.95, 0.95, 0.97)
_ROBOT_DOT_RADIUS = 0.016

_DEMO_BG = (0.91, 0.86, 0.78)
_ARM_COLOR = (0.82, 0.62, 0.45)
_HAND_COLOR = (0.70, 0.48, 0.33)
_ARM_SHOULDER = np.array([-0.08, 0.50])
_ARM_LINK = 0.75  # both segments; max reach 1.5 covers the workspace from the shoulder
_ARM_UPPER_HALFWIDTH = 0.030
_ARM_LOWER_HALFWIDTH = 0.024
_HAND_RADIUS = 0.034


def _grids(size: int) -> tuple[np.ndarray, np.ndarray]:
    centers = (np.arange(size, dtype=np.float64) + 0.5) / size
    ys, xs = np.meshgrid(centers, centers, indexing="ij")
    return xs, ys


def _bbox(size: int, cx: float, cy: float, rx: float, ry: float) -> tuple[slice, slice]:
    j0 = max(0, int(np.floor((cx - rx) * size)) - 1)
    j1 = min(size, int(np.ceil((cx + rx) * size)) + 1)
    i0 = max(0, int(np.floor((cy - ry) * size)) - 1)
    i1 = min(size, int(np.ceil((cy + ry) * size)) + 1)
    return slice(i0, i1), slice(j0, j1)


def _paint(canvas: np.ndarray, rows: slice, cols: slice, alpha: np.ndarray, color) -> None:
    if alpha.size == 0:
        return
    region = canvas[rows, cols]
    a = alpha[..., None]
    canvas[rows, cols] = region * (1.0 - a) + np.asarray(color, dtype=np.float64) * a


def _disk(canvas: np.ndarray, xs, ys, center, radius: float, color) -> None:
    size = canvas.shape[0]
    f = _FEATHER_PX / size
    rows, cols = _bbox(size, center[0], center[1], radius + f, radius + f)
    d = np.hypot(xs[rows, cols] - center[0], ys[rows, cols] - center[1])
    alpha = np.clip((radius + f / 2 - d) / f, 0.0, 1.0)
    _paint(canvas, rows, cols, alpha, color)


def _ring(canvas: np.ndarray, xs, ys, center, radius: float, width: float, color) -> None:
    size = canvas.shape[0]
    f = _FEATHER_PX / size
    ext = radius + width / 2 + f
    rows, cols = _bbox(size, center[0], center[1], ext, ext)
    d = np.hypot(xs[rows, cols] - center[0], ys[rows, cols] - center[1])
    alpha = np.clip((width / 2 + f / 2 - np.abs(d - radius)) / f, 0.0, 1.0)
    _paint(canvas, rows, cols, alpha, color)


def _square(canvas: np.ndarray, xs, ys, center, half: float, color) -> None:
    size = canvas.shape[0]
    f = _FEATHER_PX / size
    rows, cols = _bbox(size, center[0], center[1], half + f, half + f)
    dx = np.abs(xs[rows, cols] - center[0]) - half
    dy = np.abs(ys[rows, cols] - center[1]) - half
    d = np.maximum(dx, dy)
    alpha = np.clip((f / 2 - d) / f, 0.0, 1.0)
    _paint(canvas, rows, cols, alpha, color)


def _capsule(canvas: np.ndarray, xs, ys, p0, p1, halfwidth: float, color) -> None:
    size = canvas.shape[0]
    f = _FEATHER_PX / size
    cx = (p0[0] + p1[0]) / 2
    cy = (p0[1] + p1[1]) / 2
    rx = abs(p0[0] - p1[0]) / 2 + halfwidth + f
    ry = abs(p0[1] - p1[1]) / 2 + halfwidth + f
    rows, cols = _bbox(size, cx, cy, rx, ry)
    px = xs[rows, cols] - p0[0]
    py = ys[rows, cols] - p0[1]
    vx, vy = p1[0] - p0[0], p1[1] - p0[1]
    vv = vx * vx + vy * vy
    if vv < 1e-18:
        t = np.zeros_like(px)
    else:
        t = np.clip((px * vx + py * vy) / vv, 0.0, 1.0)
    d = np.hypot(px - t * vx, py - t * vy)
    alpha = np.clip((halfwidth + f / 2 - d) / f, 0.0, 1.0)
    _paint(canvas, rows, cols, alpha, color)


def _arm_joints(effector: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Two-link IK with a fixed elbow branch; pure function of the effector."""
    v = effector - _ARM_SHOULDER
    d = float(np.linalg.norm(v))
    d = min(max(d, 1e-6), 2 * _ARM_LINK - 1e-6)
    unit = v / np.linalg.norm(v) if np.linalg.norm(v) > 1e-12 else np.array([1.0, 0.0])
    mid = _ARM_SHOULDER + unit * (d / 2)
    h = np.sqrt(max(_ARM_LINK**2 - (d / 2) ** 2, 0.0))
    perp = np.array([-unit[1], unit[0]])
    elbow = mid + perp * h
    return _ARM_SHOULDER.copy(), elbow


def _background(size: int, xs: np.ndarray, ys: np.ndarray, domain: str) -> np.ndarray:
    canvas = np.empty((size, size, 3), dtype=np.float64)
    if domain == DOMAIN_DEMONSTRATOR:
        base = np.array(_DEMO_BG)
        wave = np.sin(2 * np.pi * (2.0 * xs + 0.7 * ys))
        amp = np.array([0.030, 0.024, 0.012])
    else:
        base = np.array(_ROBOT_BG)
        wave = np.sin(2 * np.pi * (3.0 * ys))
        amp = np.array([0.012, 0.016, 0.026])
    canvas[:] = base
    canvas += wave[..., None] * amp
    return canvas


def render(state: WorldState, domain: str, size: int = 84) -> Observation:
    if domain not in DOMAINS:
        raise ConfigurationError(f"unknown domain {domain!r}; expected one of {DOMAINS}")
    xs, ys = _grids(size)
    canvas = _background(size, xs, ys, domain)

    _ring(canvas, xs, ys, state.target_pos, _TARGET_RING_RADIUS, _TARGET_RING_WIDTH, _TARGET_COLOR)
    if state.object_pos is not None:
        _disk(canvas, xs, ys, state.object_pos, _OBJECT_RADIUS, _OBJECT_COLOR)

    if domain == DOMAIN_ROBOT:
        _square(canvas, xs, ys, state.effector_pos, _ROBOT_BODY_HALF, _ROBOT_BODY_COLOR)
        _disk(canvas, xs, ys, state.effector_pos, _ROBOT_DOT_RADIUS, _ROBOT_DOT_COLOR)
    else:
        shoulder, elbow = _arm_joints(state.effector_pos)
        _capsule(canvas, xs, ys, shoulder, elbow, _ARM_UPPER_HALFWIDTH, _ARM_COLOR)
        _capsule(canvas, xs, ys, elbow, state.effector_pos, _ARM_LOWER_HALFWIDTH, _ARM_COLOR)
        _disk(canvas, xs, ys, state.effector_pos, _HAND_RADIUS, _HAND_COLOR)

    np.clip(canvas, 0.0, 1.0, out=canvas)
    pixels = (np.round(canvas * 255.0) / 255.0).astype(np.float32)
    return Observation(pixels=pixels, domain_tag=domain)


def object_sprite_color() -> np.ndarray:
    """Reference color of the object sprite (shared by both domains)."""
    return np.array(_OBJECT_COLOR, dtype=np.float64)


def workspace_to_pixel(pos, size: int) -> np.ndarray:
    """Continuous (col, row) pixel coordinates of a workspace position."""
    p = np.asarray(pos, dtype=np.float64)
    return p * size - 0.5
