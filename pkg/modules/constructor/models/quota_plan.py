from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from common.errors import ConstructionError, QuotaGapError
from modules.graph_core.models.params import PART_NAMES, U, V, W, Vertex
from modules.oracle.case_tags import CaseTag


@dataclass(frozen=True)
class VertexClass:
    """Vertices of one part that share a negative-edge quota."""
    name: str
    part: int
    indices: tuple
    quota: int

    @property
    def size(self):
        return len(self.indices)


@dataclass(frozen=True)
class QuotaPlan:
    """
    Per-vertex negative-edge targets for one explicit construction.

    forced_blocks lists pairs of class names whose connecting edges must all
    be negative. published_uv_totals holds (label, value) pairs of the
    closed-form 2*N_UV expressions printed with the construction, kept only
    for comparison with the derived total.
    """
    params: object
    case: CaseTag
    classes: tuple
    forced_blocks: tuple = field(default_factory=tuple)
    published_uv_totals: tuple = field(default_factory=tuple)
    notes: tuple = field(default_factory=tuple)

    def class_named(self, name):
        for vertex_class in self.classes:
            if vertex_class.name == name:
                return vertex_class
        raise KeyError(name)

    def classes_of(self, part):
        return [c for c in self.classes if c.part == part]

    @cached_property
    def quota_array(self):
        """Quota of every vertex, indexed in U, V, W order"""
        quotas = np.full(self.params.vertex_count, -1, dtype=np.int64)
        for vertex_class in self.classes:
            for index in vertex_class.indices:
                quotas[self.params.global_index(Vertex(vertex_class.part, index))] = vertex_class.quota
        return quotas

    @property
    def quota(self):
        return {vertex: int(self.quota_array[self.params.global_index(vertex)])
                for vertex in self.params.vertices()}

    def class_weight(self, vertex_class):
        """Vertex weight f(x) = deg(x) - 2*quota for every vertex of the class"""
        return self.params.degree(vertex_class.part) - 2 * vertex_class.quota

    @property
    def v_split(self):
        groups = [c.indices for c in self.classes_of(V)]
        return tuple(groups) if len(groups) > 1 else None

    @property
    def w_split(self):
        groups = [c.indices for c in self.classes_of(W)]
        return tuple(groups) if len(groups) > 1 else None

    @property
    def part_totals(self):
        return tuple(int(sum(c.quota * c.size for c in self.classes_of(part))) for part in (U, V, W))

    @property
    def block_totals(self):
        """(N_UV, N_UW, N_VW) solved from the per-part quota sums"""
        sum_u, sum_v, sum_w = self.part_totals
        doubled = sum_u + sum_v - sum_w
        if doubled % 2:
            raise ConstructionError(f"{self.case} plan for {self.params}: odd 2*N_UV = {doubled}")
        n_uv = doubled // 2
        return n_uv, sum_u - n_uv, sum_v - n_uv

    @property
    def planned_weight(self):
        return sum(self.class_weight(c) * c.size for c in self.classes) // 2

    def validate(self):
        """Check partition, quota ranges, block totals and forced-block capacity."""
        params = self.params
        for part in (U, V, W):
            seen = sorted(i for c in self.classes_of(part) for i in c.indices)
            if seen != list(range(params.part_size(part))):
                raise ConstructionError(
                    f"{self.case} plan for {params}: classes do not partition {PART_NAMES[part]}")
        for c in self.classes:
            if not 0 <= c.quota <= params.degree(c.part):
                raise ConstructionError(f"{self.case} plan for {params}: quota {c.quota} of {c.name} out of range")

        n_uv, n_uw, n_vw = self.block_totals
        limits = (params.m * params.n, params.m * params.p, params.n * params.p)
        for name, total, limit in zip(("N_UV", "N_UW", "N_VW"), (n_uv, n_uw, n_vw), limits):
            if not 0 <= total <= limit:
                raise ConstructionError(f"{self.case} plan for {params}: {name} = {total} outside 0..{limit}")

        forced = {c.name: 0 for c in self.classes}
        for a, b in self.forced_blocks:
            first, second = self.class_named(a), self.class_named(b)
            if first.part == second.part:
                raise ConstructionError(f"forced block {a}x{b} joins one part")
            forced[a] += second.size
            forced[b] += first.size
        for c in self.classes:
            if forced[c.name] > c.quota:
                raise ConstructionError(
                    f"{self.case} plan for {params}: {forced[c.name]} forced negatives at {c.name} "
                    f"exceed its quota {c.quota}")

        for (a, b), name, total in zip(((U, V), (U, W), (V, W)), ("N_UV", "N_UW", "N_VW"), (n_uv, n_uw, n_vw)):
            count = self.forced_edge_count(a, b)
            if count > total:
                raise QuotaGapError(
                    f"{self.case} quotas for {params} are not realizable: {count} forced "
                    f"{PART_NAMES[a]}{PART_NAMES[b]} edges but {name} = {total}")
        return self

    def forced_edge_count(self, a, b):
        """Edges between parts a and b that lie in some forced block"""
        count = 0
        for x, y in self.forced_blocks:
            first, second = self.class_named(x), self.class_named(y)
            if {first.part, second.part} == {a, b}:
                count += first.size * second.size
        return count

    def uv_total_discrepancies(self):
        """Displayed 2*N_UV expressions that differ from the derived total."""
        derived = 2 * self.block_totals[0]
        return [(label, value, derived) for label, value in self.published_uv_totals if value != derived]

    def describe(self):
        lines = [f"{self.case} plan for {self.params}"]
        for c in self.classes:
            lines.append(f"  {c.name:<4} {PART_NAMES[c.part]} x{c.size}: quota {c.quota}, weight {self.class_weight(c)}")
        if self.forced_blocks:
            lines.append("  forced: " + ", ".join(f"{a}x{b}" for a, b in self.forced_blocks))
        n_uv, n_uw, n_vw = self.block_totals
        lines.append(f"  N_UV={n_uv} N_UW={n_uw} N_VW={n_vw}")
        lines.extend(f"  note: {note}" for note in self.notes)
        return "\n".join(lines)


def merge_forced(explicit, derived):
    blocks = list(explicit)
    for pair in derived:
        if pair not in blocks and pair[::-1] not in blocks:
            blocks.append(pair)
    return tuple(blocks)