from .dataset import Dataset, collect_dataset, dataset_dir, load_dataset, save_dataset
from .env import Perturbation, ToyWorld, WorldState, reset
from .policies import POLICY_EXPERT, POLICY_RANDOM, make_policy
from .render import Observation, object_sprite_color, render, workspace_to_pixel
from .tasks import DOMAIN_DEMONSTRATOR, DOMAIN_ROBOT, DOMAINS, TASKS, TaskSpec, get_task

__all__ = [
    "Dataset",
    "DOMAIN_DEMONSTRATOR",
    "DOMAIN_ROBOT",
    "DOMAINS",
    "Observation",
    "POLICY_EXPERT",
    "POLICY_RANDOM",
    "Perturbation",
    "TASKS",
    "TaskSpec",
    "ToyWorld",
    "WorldState",
    "collect_dataset",
    "dataset_dir",
    "get_task",
    "load_dataset",
    "make_policy",
    "object_sprite_color",
    "render",
    "reset",
    "save_dataset",
    "workspace_to_pixel",
]
