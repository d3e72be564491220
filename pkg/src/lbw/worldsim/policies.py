"""Data-collection policies: uniform random actions and per-task scripted experts."""
from __future__ import annotations

import numpy as np

from ..common import ConfigurationError
from .env import WorldState
from .tasks import TaskSpec

POLICY_RANDOM = "random"
POLICY_EXPERT = "scripted-expert"


class RandomPolicy:
    """Uniform actions over the box [-a_max, a_max]^2."""

    def __init__(self, task: TaskSpec, rng: np.random.Generator):
        self.a_max = task.a_max
        self.rng = rng

    def action(self, state: WorldState) -> np.ndarray:
        return self.rng.uniform(-self.a_max, self.a_max, 2)


def _straight_step(frm: np.ndarray, to: np.ndarray, a_max: float) -> np.ndarray:
    """Largest step along frm->to whose components respect the action box."""
    diff = to - frm
    biggest = np.max(np.abs(diff))
    if biggest < 1e-12:
        return np.zeros(2)
    return diff * min(1.0, a_max / biggest)


class ReachExpert:
    """Walks straight at the target; strictly shrinks the distance each step."""

    def __init__(self, task: TaskSpec, rng: np.random.Generator | None = None):
        self.task = task

    def action(self, state: WorldState) -> np.ndarray:
        t = self.task
        if np.linalg.norm(state.effector_pos - state.target_pos) < t.success_radius:
            return np.zeros(2)
        return _straight_step(state.effector_pos, state.target_pos, t.a_max)


class PushExpert:
    """Moves behind the object along the object->target line, then pushes.

    The contact point sits inside the overlap band so the contact rule stays
    engaged while pushing; steering at the behind-point keeps the push aligned
    even when resets are perturbed.
    """

    def __init__(self, task: TaskSpec, rng: np.random.Generator | None = None):
        self.task = task
        self.contact_offset = 0.6 * (task.effector_radius + task.object_radius)

    def action(self, state: WorldState) -> np.ndarray:
        t = self.task
        obj = state.object_pos
        to_target = state.target_pos - obj
        dist = np.linalg.norm(to_target)
        if dist < t.success_radius:
            return np.zeros(2)
        push_dir = to_target / dist
        behind = obj - push_dir * self.contact_offset
        if np.linalg.norm(state.effector_pos - behind) > 0.02:
            return _straight_step(state.effector_pos, behind, t.a_max)
        return push_dir * t.a_max


_EXPERTS = {"reach": ReachExpert, "push": PushExpert}


def make_policy(kind: str, task: TaskSpec, rng: np.random.Generator):
    if kind == POLICY_RANDOM:
        return RandomPolicy(task, rng)
    if kind == POLICY_EXPERT:
        expert = _EXPERTS.get(task.name)
        if expert is None:
            raise ConfigurationError(f"no scripted expert for task {task.name!r}")
        return expert(task, rng)
    raise ConfigurationError(
        f"unknown policy kind {kind!r}; expected {POLICY_RANDOM!r} or {POLICY_EXPERT!r}"
    )
