"""Deterministic point-effector dynamics on the unit-square workspace."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..common import InvalidActionError
from .tasks import TaskSpec, get_task


@dataclass(frozen=True, eq=False)
class WorldState:
    """Full simulator state. Positions live in the [0,1]^2 workspace."""

    effector_pos: np.ndarray
    target_pos: np.ndarray
    object_pos: np.ndarray | None = None
    step_count: int = 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WorldState):
            return NotImplemented
        if (self.object_pos is None) != (other.object_pos is None):
            return False
        return (
            np.array_equal(self.effector_pos, other.effector_pos)
            and np.array_equal(self.target_pos, other.target_pos)
            and (self.object_pos is None or np.array_equal(self.object_pos, other.object_pos))
            and self.step_count == other.step_count
        )


@dataclass(frozen=True)
class Perturbation:
    """Optional reset-time jitter. Disabled by default: the demonstration is a
    single video shot from one fixed configuration, so resets are canonical
    unless a stage explicitly opts in (data diversity, robust evaluation)."""

    enabled: bool = False
    scale: float = 0.0
    perturb_effector: bool = True
    perturb_object: bool = True
    perturb_target: bool = False


def _as_pos(p) -> np.ndarray:
    return np.asarray(p, dtype=np.float64).copy()


class ToyWorld:
    """A single task instance. Dynamics are a pure function of (state, action);
    all randomness enters through reset() seeds."""

    def __init__(self, task: str | TaskSpec, perturbation: Perturbation | None = None):
        self.task = get_task(task)
        self.perturbation = perturbation or Perturbation()

    def reset(self, seed: int = 0) -> WorldState:
        t = self.task
        effector = _as_pos(t.effector_start)
        target = _as_pos(t.target)
        obj = _as_pos(t.object_start) if t.has_object else None
        p = self.perturbation
        if p.enabled and p.scale > 0.0:
            rng = np.random.default_rng(np.random.SeedSequence(seed))
            # draws happen in a fixed order so partial perturbation stays reproducible
            d_eff = rng.uniform(-p.scale, p.scale, 2)
            d_obj = rng.uniform(-p.scale, p.scale, 2)
            d_tgt = rng.uniform(-p.scale, p.scale, 2)
            if p.perturb_effector:
                effector = np.clip(effector + d_eff, 0.0, 1.0)
            if p.perturb_object and obj is not None:
                obj = np.clip(obj + d_obj, 0.0, 1.0)
            if p.perturb_target:
                target = np.clip(target + d_tgt, 0.0, 1.0)
        return WorldState(effector_pos=effector, target_pos=target, object_pos=obj, step_count=0)

    def step(self, state: WorldState, action) -> tuple[WorldState, bool]:
        """Apply a clamped delta-position action.

        Contact rule (pushing): if the effector and object disks overlap at the
        start of the step, the object translates by the positive part of the
        action's projection onto the center-to-center direction, then both are
        clipped to the workspace.
        """
        t = self.task
        delta = np.asarray(action, dtype=np.float64)
        if delta.shape != (2,):
            raise InvalidActionError(f"action must have shape (2,), got {delta.shape}")
        if not np.all(np.isfinite(delta)):
            raise InvalidActionError("action contains NaN/Inf components")
        delta = np.clip(delta, -t.a_max, t.a_max)

        obj = state.object_pos
        if obj is not None:
            gap = obj - state.effector_pos
            dist = float(np.linalg.norm(gap))
            if dist < t.effector_radius + t.object_radius and dist > 1e-12:
                direction = gap / dist
                push = max(0.0, float(delta @ direction))
                obj = np.clip(obj + push * direction, 0.0, 1.0)
            else:
                obj = obj.copy()

        effector = np.clip(state.effector_pos + delta, 0.0, 1.0)
        new_state = WorldState(
            effector_pos=effector,
            target_pos=state.target_pos.copy(),
            object_pos=obj,
            step_count=state.step_count + 1,
        )
        done = self.success(new_state) or new_state.step_count >= t.horizon
        return new_state, done

    def success(self, state: WorldState) -> bool:
        t = self.task
        if t.has_object:
            dist = np.linalg.norm(state.object_pos - state.target_pos)
        else:
            dist = np.linalg.norm(state.effector_pos - state.target_pos)
        return float(dist) < t.success_radius


def reset(task: str | TaskSpec, seed: int, perturbation: Perturbation | None = None) -> WorldState:
    return ToyWorld(task, perturbation).reset(seed)
