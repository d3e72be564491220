"""Trajectory-matching reward on keypoint representations.

Given the demonstration keypoint trajectory {z_i^E}, the per-step reward is a
weighted sum of two non-positive terms: the negated distance from the current
keypoint set to the nearest demonstration keypoint set, and the negated
distance from the current keypoint step (z_{t+1} - z_t) to the nearest
demonstration step. Distances are L2 over the flattened (K, 2) arrays.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .common import ConfigurationError, ShapeError

INDEX_UPPER_N_MINUS_1 = "n_minus_1"
INDEX_UPPER_N = "n"


@dataclass(frozen=True)
class RewardConfig:
    lambda_r1: float = 1.0
    lambda_r2: float = 5.0
    index_upper: str = INDEX_UPPER_N_MINUS_1

    def __post_init__(self) -> None:
        if self.lambda_r1 < 0 or self.lambda_r2 < 0:
            raise ConfigurationError("reward weights must be nonnegative")
        if self.lambda_r1 + self.lambda_r2 <= 0:
            raise ConfigurationError("at least one reward weight must be positive")
        if self.index_upper not in (INDEX_UPPER_N_MINUS_1, INDEX_UPPER_N):
            raise ConfigurationError(
                f"index_upper must be {INDEX_UPPER_N_MINUS_1!r} or {INDEX_UPPER_N!r}"
            )


class KeypointTrajectory:
    """Ordered keypoint sets extracted from the translated demonstration."""

    def __init__(self, points: np.ndarray):
        points = np.asarray(points, dtype=np.float64)
        if points.ndim != 3 or points.shape[2] != 2:
            raise ShapeError(f"trajectory must have shape (N, K, 2), got {points.shape}")
        if points.shape[0] < 2:
            raise ShapeError("trajectory needs at least 2 keypoint sets")
        self.points = points

    def __len__(self) -> int:
        return self.points.shape[0]

    @property
    def num_keypoints(self) -> int:
        return self.points.shape[1]

    def save(self, path: str | Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            for i, kp in enumerate(self.points):
                f.write(json.dumps({"frame_index": i, "keypoints": kp.tolist()}) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "KeypointTrajectory":
        records = []
        with open(path) as f:
            for line in f:
                line = line.strip()
                if line:
                    records.append(json.loads(line))
        records.sort(key=lambda r: r["frame_index"])
        return cls(np.asarray([r["keypoints"] for r in records]))


def _as_keypoints(z, k: int) -> np.ndarray:
    z = np.asarray(z, dtype=np.float64)
    if z.shape != (k, 2):
        raise ShapeError(f"keypoint set must have shape ({k}, 2), got {z.shape}")
    return z


def _traj_points(traj) -> np.ndarray:
    return traj.points if isinstance(traj, KeypointTrajectory) else np.asarray(traj, np.float64)


def r1(z_t, traj, cfg: RewardConfig) -> float:
    """Negated distance to the closest demonstration keypoint set z_p^E."""
    points = _traj_points(traj)
    n = points.shape[0]
    z = _as_keypoints(z_t, points.shape[1])
    upper = n - 1 if cfg.index_upper == INDEX_UPPER_N_MINUS_1 else n
    diffs = points[:upper] - z
    dists = np.sqrt(np.sum(diffs * diffs, axis=(1, 2)))
    return -float(np.min(dists))


def r2(z_t, z_t1, traj, cfg: RewardConfig) -> float:
    """Negated distance from the agent's step to the closest demonstration step.

    The minimization over q is independent of r1's minimization over p; q+1
    must index a valid frame, so all N-1 consecutive differences are candidates.
    """
    points = _traj_points(traj)
    z = _as_keypoints(z_t, points.shape[1])
    z1 = _as_keypoints(z_t1, points.shape[1])
    demo_steps = points[1:] - points[:-1]
    diffs = demo_steps - (z1 - z)
    dists = np.sqrt(np.sum(diffs * diffs, axis=(1, 2)))
    return -float(np.min(dists))


def reward(z_t, z_t1, traj, cfg: RewardConfig) -> float:
    """Weighted combination lambda_r1 * r1 + lambda_r2 * r2; always <= 0."""
    return cfg.lambda_r1 * r1(z_t, traj, cfg) + cfg.lambda_r2 * r2(z_t, z_t1, traj, cfg)
