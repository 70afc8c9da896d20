from dataclasses import dataclass

from common.errors import InputError
from common.settings import get_settings


@dataclass(frozen=True)
class SolveConfig:
    max_edges: int = 26
    symmetry_pruning: bool = True
    bound_pruning: bool = True
    parallel_width: int = 0

    def __post_init__(self):
        if self.max_edges < 1:
            raise InputError(f"max_edges must be at least 1, got {self.max_edges}")
        if self.parallel_width < 0:
            raise InputError(f"parallel_width must be nonnegative, got {self.parallel_width}")

    @classmethod
    def from_settings(cls, settings=None, **overrides):
        settings = settings or get_settings()
        values = {"max_edges": settings.solver_max_edges, "parallel_width": settings.parallel_width}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass(frozen=True)
class SolveReport:
    optimum: int
    certificate: object
    nodes_explored: int
    pruned_symmetry: int
    pruned_bound: int
    pruned_feasibility: int
    exhausted: bool
    elapsed_seconds: float
    initial_incumbent: int

    @property
    def params(self):
        return self.certificate.params

    def to_dict(self):
        return {
            "m": self.params.m,
            "n": self.params.n,
            "p": self.params.p,
            "optimum": self.optimum,
            "exhausted": self.exhausted,
            "initial_incumbent": self.initial_incumbent,
            "nodes_explored": self.nodes_explored,
            "pruned_symmetry": self.pruned_symmetry,
            "pruned_bound": self.pruned_bound,
            "pruned_feasibility": self.pruned_feasibility,
            "elapsed_seconds": round(self.elapsed_seconds, 6),
            "certificate": self.certificate.to_dict(),
        }
