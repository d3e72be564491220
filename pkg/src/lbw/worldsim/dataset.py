"""Frame datasets: collection, lossless PNG storage, and manifests.

On-disk layout (one dataset per root):

    <root>/<task>/<domain>/manifest.json
    <root>/<task>/<domain>/ep<e>/frame<t>.png
    <root>/<task>/<domain>/ep<e>/states.json   (ground-truth positions, tests only)

The manifest carries exactly: task, domain, seed, episodes, frame_count,
horizon. Per-frame simulator states ride along in states.json so tests can
build paired ground truth; no training code reads them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from PIL import Image

from ..common import ConfigurationError, read_json, write_json
from .env import Perturbation, ToyWorld, WorldState
from .policies import make_policy
from .render import render
from .tasks import DOMAINS, get_task


@dataclass
class Dataset:
    frames: np.ndarray  # (N, H, W, 3) float32 in [0, 1]
    episode_boundaries: list[int]  # start index of each episode; first is 0
    manifest: dict
    states: list[dict] | None = None  # aligned with frames when available

    def __post_init__(self) -> None:
        n = len(self.frames)
        b = self.episode_boundaries
        if not b or b[0] != 0:
            raise ValueError("episode_boundaries must start at 0")
        if any(b[i] >= b[i + 1] for i in range(len(b) - 1)) or b[-1] >= n:
            raise ValueError("episode_boundaries must be strictly increasing and < frame count")
        if self.manifest.get("frame_count") != n:
            raise ValueError(
                f"manifest frame_count {self.manifest.get('frame_count')} != {n} frames"
            )
        if self.states is not None and len(self.states) != n:
            raise ValueError("states must align with frames")

    def __len__(self) -> int:
        return len(self.frames)

    @property
    def num_episodes(self) -> int:
        return len(self.episode_boundaries)

    def episode_slices(self) -> list[slice]:
        b = self.episode_boundaries + [len(self.frames)]
        return [slice(b[i], b[i + 1]) for i in range(len(b) - 1)]

    def episode_frames(self, e: int) -> np.ndarray:
        return self.frames[self.episode_slices()[e]]


def _state_record(state: WorldState) -> dict:
    return {
        "effector": [float(x) for x in state.effector_pos],
        "object": None if state.object_pos is None else [float(x) for x in state.object_pos],
        "target": [float(x) for x in state.target_pos],
        "step": state.step_count,
    }


def collect_dataset(
    task: str,
    domain: str,
    policy: str,
    episodes: int,
    seed: int,
    perturbation: Perturbation | None = None,
    image_size: int = 84,
) -> Dataset:
    """Roll out `episodes` seeded episodes and record rendered frames.

    Each episode contributes the initial observation plus one frame per step;
    stepping stops at success or after horizon-1 steps, so an episode yields
    at most `horizon` frames.
    """
    spec = get_task(task)
    if domain not in DOMAINS:
        raise ConfigurationError(f"unknown domain {domain!r}; expected one of {DOMAINS}")
    if episodes < 1:
        raise ConfigurationError("episodes must be >= 1")

    world = ToyWorld(spec, perturbation)
    frames: list[np.ndarray] = []
    states: list[dict] = []
    boundaries: list[int] = []
    children = np.random.SeedSequence(seed).spawn(episodes)
    for ep_ss in children:
        ep_seed = int(ep_ss.generate_state(1)[0])
        rng = np.random.default_rng(ep_ss)
        pol = make_policy(policy, spec, rng)
        state = world.reset(ep_seed)
        boundaries.append(len(frames))
        frames.append(render(state, domain, image_size).pixels)
        states.append(_state_record(state))
        done = False
        while not done and state.step_count < spec.horizon - 1:
            state, done = world.step(state, pol.action(state))
            frames.append(render(state, domain, image_size).pixels)
            states.append(_state_record(state))

    manifest = {
        "task": spec.name,
        "domain": domain,
        "seed": seed,
        "episodes": episodes,
        "frame_count": len(frames),
        "horizon": spec.horizon,
    }
    return Dataset(
        frames=np.stack(frames), episode_boundaries=boundaries, manifest=manifest, states=states
    )


def dataset_dir(root: str | Path, task: str, domain: str) -> Path:
    return Path(root) / task / domain


def save_dataset(ds: Dataset, root: str | Path) -> Path:
    out = dataset_dir(root, ds.manifest["task"], ds.manifest["domain"])
    out.mkdir(parents=True, exist_ok=True)
    write_json(out / "manifest.json", ds.manifest)
    slices = ds.episode_slices()
    for e, sl in enumerate(slices):
        ep_dir = out / f"ep{e}"
        ep_dir.mkdir(exist_ok=True)
        for t in range(sl.stop - sl.start):
            frame = ds.frames[sl.start + t]
            img = Image.fromarray(np.round(frame.astype(np.float64) * 255.0).astype(np.uint8))
            img.save(ep_dir / f"frame{t}.png")
        if ds.states is not None:
            write_json(ep_dir / "states.json", ds.states[sl])
    return out


def load_dataset(path: str | Path) -> Dataset:
    """Load a dataset directory (the one containing manifest.json)."""
    path = Path(path)
    manifest_path = path / "manifest.json"
    if not manifest_path.exists():
        raise FileNotFoundError(f"no manifest.json under {path}")
    manifest = read_json(manifest_path)
    frames: list[np.ndarray] = []
    states: list[dict] = []
    boundaries: list[int] = []
    have_states = True
    e = 0
    while (path / f"ep{e}").is_dir():
        ep_dir = path / f"ep{e}"
        boundaries.append(len(frames))
        t = 0
        while (ep_dir / f"frame{t}.png").exists():
            arr = np.asarray(Image.open(ep_dir / f"frame{t}.png"), dtype=np.float64)
            frames.append((arr / 255.0).astype(np.float32))
            t += 1
        states_path = ep_dir / "states.json"
        if states_path.exists():
            states.extend(read_json(states_path))
        else:
            have_states = False
        e += 1
    if not frames:
        raise FileNotFoundError(f"no frames found under {path}")
    return Dataset(
        frames=np.stack(frames),
        episode_boundaries=boundaries,
        manifest=manifest,
        states=states if have_states else None,
    )
