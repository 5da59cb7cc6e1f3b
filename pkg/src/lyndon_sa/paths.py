from __future__ import annotations

from pathlib import Path

from platformdirs import user_state_dir

APP_NAME = "lyndon-sa"


def default_state_dir() -> Path:
    return Path(user_state_dir(APP_NAME))


def events_path() -> Path:
    return default_state_dir() / "events.jsonl"
