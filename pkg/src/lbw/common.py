"""Shared plumbing: error taxonomy, seeding, JSONL logs, and npz checkpoints."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable, Iterator

import numpy as np


class ConfigurationError(ValueError):
    """Bad or unknown configuration: unknown task ids, invalid keys, sigma <= 0, ..."""


class DependencyError(RuntimeError):
    """A pipeline stage was asked to run before the stage it depends on."""


class NumericError(ArithmeticError):
    """NaN/Inf appeared where a finite value is required (losses, forward passes)."""


class ShapeError(ValueError):
    """Array shape does not match the declared contract."""


class InvalidActionError(ValueError):
    """Action contains NaN/Inf components."""


class InvalidStateError(ValueError):
    """State vector contains NaN/Inf components."""


class PairingError(ValueError):
    """A dataset episode is too short to form a training frame pair."""


class EmptyBufferError(RuntimeError):
    """Sampling was requested from an empty replay buffer."""


# exit codes for the CLI, see pipeline.cli
EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DEPENDENCY = 3
EXIT_NUMERIC = 4


def spawn_seeds(seed: int, n: int) -> list[int]:
    """Derive n independent 32-bit child seeds from one master seed."""
    ss = np.random.SeedSequence(seed)
    return [int(s.generate_state(1)[0]) for s in ss.spawn(n)]


def require_finite(arr: np.ndarray, what: str, error: type[Exception] = NumericError) -> None:
    if not np.all(np.isfinite(arr)):
        raise error(f"{what} contains non-finite values")


def write_jsonl(path: str | Path, records: Iterable[dict[str, Any]]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        for rec in records:
            f.write(json.dumps(rec) + "\n")


def append_jsonl(path: str | Path, record: dict[str, Any]) -> None:
    with open(path, "a") as f:
        f.write(json.dumps(record) + "\n")


def read_jsonl(path: str | Path) -> Iterator[dict[str, Any]]:
    with open(path) as f:
        for line in f:
            line = line.strip()
            if line:
                yield json.loads(line)


def write_json(path: str | Path, obj: Any) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(obj, f, indent=2, sort_keys=True)
        f.write("\n")


def read_json(path: str | Path) -> Any:
    with open(path) as f:
        return json.load(f)


# --------------------------------------------------------------------------
# Checkpoint archive: one .npz with named parameter arrays, a JSON-encoded
# config echo, and the training iteration count. Framework-agnostic on disk.
# --------------------------------------------------------------------------

_CONFIG_KEY = "__config_json__"
_ITERATION_KEY = "__iteration__"


def save_checkpoint(
    path: str | Path,
    arrays: dict[str, np.ndarray],
    config: dict[str, Any],
    iteration: int,
) -> None:
    for key in arrays:
        if key.startswith("__"):
            raise ValueError(f"parameter name {key!r} collides with reserved keys")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = dict(arrays)
    payload[_CONFIG_KEY] = np.frombuffer(
        json.dumps(config, sort_keys=True).encode(), dtype=np.uint8
    )
    payload[_ITERATION_KEY] = np.asarray(iteration, dtype=np.int64)
    np.savez(path, **payload)


def load_checkpoint(path: str | Path) -> tuple[dict[str, np.ndarray], dict[str, Any], int]:
    with np.load(path) as data:
        config = json.loads(bytes(data[_CONFIG_KEY]).decode())
        iteration = int(data[_ITERATION_KEY])
        arrays = {k: data[k] for k in data.files if not k.startswith("__")}
    return arrays, config, iteration
