from __future__ import annotations
from dataclasses import dataclass, field
from ..oracle.brute import OracleBudget, default_max_vertices

DEFAULT_SEED = 0x5EED
OUTPUT_FORMATS = ("human", "structured")


@dataclass(frozen=True)
class RunConfig:
    command: str
    seed: int = DEFAULT_SEED
    output_format: str = "human"
    jobs: int = 1
    budget: OracleBudget = field(default_factory=OracleBudget)

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"Unknown output format {self.output_format!r}; choose from {OUTPUT_FORMATS}."
            )
        if self.jobs < 1:
            raise ValueError(f"--jobs must be at least 1, got {self.jobs}.")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"--seed must fit in 64 bits, got {self.seed}.")

    @classmethod
    def from_args(cls, args) -> RunConfig:
        max_vertices = getattr(args, "budget", None)
        if max_vertices is None:
            max_vertices = default_max_vertices()
        budget = OracleBudget(max_vertices=max_vertices, timeout=getattr(args, "timeout", None))
        return cls(args.subcommand, args.seed, args.format, args.jobs, budget)
