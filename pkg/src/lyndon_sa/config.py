from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from lyndon_sa.text import SentinelPolicy

SaFormat = Literal["raw32", "raw64", "text", "auto"]
DumpKind = Literal["pss", "nss", "lyndon", "flags", "grouping", "sa"]


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="ignore", frozen=True)
    queue_capacity: int = Field(default=1024, ge=1, description="Phase II queue bound")
    forced_width: Literal[32, 64] | None = Field(default=None, description="Index cell width; None picks the narrowest")
    debug: bool = Field(default=False, description="Validate the text and check that every SA cell was written")


class GenConfig(BaseModel):
    model_config = ConfigDict(extra="ignore")
    kind: Literal["fibonacci", "random", "periodic"] = "random"
    size: int = Field(default=0, ge=0)
    sigma: int = Field(default=4, ge=1, le=255)
    seed: int = Field(default=0, ge=0)
    period: int = Field(default=64, ge=1, description="Block length for the periodic generator")


class CliConfig(BaseModel):
    model_config = ConfigDict(extra="ignore", populate_by_name=True)
    command: Literal["build", "verify", "bench", "inspect", "gen"]
    input_path: Path | None = None
    output_path: Path | None = None
    sa_path: Path | None = None
    format: SaFormat = "auto"
    sentinel_policy: SentinelPolicy = SentinelPolicy.STRICT
    iterations: int = Field(default=5, ge=1)
    warmup: int = Field(default=0, ge=0)
    json_output: bool = Field(default=False, alias="json")
    dumps: list[DumpKind] = Field(default_factory=list)
    oracle: bool = False
    run: RunConfig = Field(default_factory=RunConfig)
    gen: GenConfig | None = None

    @field_validator("dumps")
    @classmethod
    def dedupe_dumps(cls, v: list[str]) -> list[str]:
        seen: list[str] = []
        for item in v:
            if item not in seen:
                seen.append(item)
        return seen
