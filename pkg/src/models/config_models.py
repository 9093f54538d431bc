from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

"""Config dataclasses for the knot-width pipeline.

``PipelineConfig`` is what ``config/pipeline.yml`` (plus environment overrides) provides;
``RunConfig`` is one CLI invocation after command-line flags are applied on top.
Precedence: CLI flag > environment > YAML > default.
"""

__all__ = [
    "OutputFormat",
    "GridFamily",
    "PipelineConfig",
    "RunConfig",
]

DEFAULT_EXACT_CAP = 16


class OutputFormat(str, Enum):
    JSON = "json"
    DOT = "dot"
    SVG = "svg"
    CSV = "csv"
    MD = "md"


class GridFamily(str, Enum):
    TORUS = "torus"
    PRETZEL = "pretzel"
    SUM = "sum"
    TRIANGULATION = "triangulation"


@dataclass(frozen=True)
class PipelineConfig:
    """Defaults shared by every subcommand."""

    exact_cap: int = DEFAULT_EXACT_CAP
    bond: bool = False
    exact_only: bool = False
    fmt: OutputFormat = OutputFormat.JSON
    seed: int = 0
    threads: int = 1
    out_dir: Path = Path("out")
    # grid family -> largest parameter
    grid_max: dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    exact_cap: int = DEFAULT_EXACT_CAP
    bond: bool = False
    exact_only: bool = False
    fmt: OutputFormat = OutputFormat.JSON
    seed: int = 0
    threads: int = 1
    out_dir: Path = Path("out")
    k: int | None = None  # tree-width bound; None -> upper end of the cw interval
    grid_family: GridFamily | None = None
    grid_max: int | None = None

    def problems(self) -> list[str]:
        out = []
        if self.exact_cap < 2:
            out.append(f"exact_cap must be >= 2, got {self.exact_cap}")
        if self.threads < 1:
            out.append(f"threads must be >= 1, got {self.threads}")
        if self.k is not None and self.k < 0:
            out.append(f"k must be >= 0, got {self.k}")
        if self.grid_max is not None and self.grid_max < 0:
            out.append(f"grid max must be >= 0, got {self.grid_max}")
        return out
