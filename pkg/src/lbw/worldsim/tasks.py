"""Task definitions for the toy two-domain tabletop world.

Each task pins a canonical initial configuration (the demonstration is a
single video, so start and goal are fixed unless reset perturbation is
explicitly enabled), the step-size limit, the episode horizon, and the
disk radii used by the contact rule and the success predicate.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..common import ConfigurationError

DOMAIN_DEMONSTRATOR = "demonstrator"
DOMAIN_ROBOT = "robot"
DOMAINS = (DOMAIN_DEMONSTRATOR, DOMAIN_ROBOT)


@dataclass(frozen=True)
class TaskSpec:
    name: str
    has_object: bool
    effector_start: tuple[float, float]
    target: tuple[float, float]
    object_start: tuple[float, float] | None = None
    horizon: int = 50
    a_max: float = 0.05
    success_radius: float = 0.05
    effector_radius: float = 0.05
    object_radius: float = 0.05


TASKS: dict[str, TaskSpec] = {
    "reach": TaskSpec(
        name="reach",
        has_object=False,
        effector_start=(0.20, 0.30),
        target=(0.75, 0.70),
    ),
    "push": TaskSpec(
        name="push",
        has_object=True,
        effector_start=(0.18, 0.42),
        object_start=(0.34, 0.50),
        target=(0.78, 0.56),
    ),
}


def get_task(task: str | TaskSpec) -> TaskSpec:
    if isinstance(task, TaskSpec):
        return task
    try:
        return TASKS[task]
    except KeyError:
        raise ConfigurationError(
            f"unknown task {task!r}; available: {sorted(TASKS)}"
        ) from None
