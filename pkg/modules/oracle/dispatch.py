import logging
from dataclasses import dataclass
from typing import Optional

from common.errors import GammaConflictError, UncoveredError
from modules.graph_core.models.params import TripartiteParams
from modules.oracle import formulas

logger = logging.getLogger(__name__)

# Exhaustively solved optima below the closed-form value at the same triple.
# The closed forms are still reported; these values are what the solver proves.
PROVEN_OPTIMA = {
    (1, 3, 3): 3,
    (2, 2, 5): 6,
}


@dataclass(frozen=True)
class Canonical:
    """Sorted parameters plus the part order used to get them.

    Part k of `params` is part `order[k]` of `original`.
    """
    params: TripartiteParams
    order: tuple
    original: TripartiteParams

    @property
    def inverse(self):
        inverse = [0, 0, 0]
        for k, old in enumerate(self.order):
            inverse[old] = k
        return tuple(inverse)

    def to_original(self, labeling):
        """Map a labeling of the canonical graph back to the caller's part order."""
        return labeling.relabel_parts(self.inverse)

    def to_canonical(self, labeling):
        return labeling.relabel_parts(self.order)


def canonicalize(params):
    """Sort the part sizes ascending (stable) and remember the permutation."""
    if not isinstance(params, TripartiteParams):
        params = TripartiteParams.of(params)
    sizes = params.sizes
    order = tuple(sorted(range(3), key=lambda k: sizes[k]))
    return Canonical(TripartiteParams(*(sizes[k] for k in order)), order, params)


@dataclass(frozen=True)
class GammaResult:
    params: TripartiteParams
    canonical: TripartiteParams
    branches: tuple
    value: Optional[int] = None
    proven_optimum: Optional[int] = None

    @property
    def tags(self):
        return tuple(branch.tag for branch in self.branches)

    @property
    def is_conflict(self):
        return self.value is None

    @property
    def is_disputed(self):
        """True when exhaustive search proves a smaller optimum than the closed form"""
        return self.proven_optimum is not None

    @property
    def best_known(self):
        """Proven optimum where one is recorded, else the closed-form value"""
        return self.proven_optimum if self.is_disputed else self.value

    @property
    def conflict(self):
        """(tag, value) pairs when the applicable closed forms disagree, else None"""
        if not self.is_conflict:
            return None
        return tuple((branch.tag, branch.value) for branch in self.branches)

    @property
    def formula_text(self):
        return "; ".join(f"{b.tag}: {b.formula_text} = {b.value}" for b in self.branches)

    def value_for(self, tag):
        for branch in self.branches:
            if branch.tag == tag:
                return branch.value
        return None

    def values(self):
        return sorted({branch.value for branch in self.branches})

    def marker(self):
        """Short text for tables: the value, or conflict(a|b)"""
        if self.is_conflict:
            return "conflict(" + "|".join(str(v) for v in self.values()) + ")"
        return str(self.value)

    def to_dict(self):
        data = {"m": self.params.m, "n": self.params.n, "p": self.params.p}
        if self.is_conflict:
            data["conflict"] = [{"tag": str(tag), "value": value} for tag, value in self.conflict]
        else:
            data["value"] = self.value
        data["tags"] = [str(tag) for tag in self.tags]
        data["formula_text"] = self.formula_text
        if self.is_disputed:
            data["proven_optimum"] = self.proven_optimum
        return data


def gamma(params):
    """
    Closed-form signed edge domination number of K_{m,n,p}.

    At p = m+n every applicable closed form is evaluated; if they disagree the
    result is a conflict carrying all of them rather than a chosen value.
    """
    canonical = canonicalize(params)
    m, n, p = canonical.params.sizes
    branches = tuple(formulas.branch_values(m, n, p))
    if not branches:
        raise UncoveredError(f"no closed form covers {canonical.params}")

    values = {branch.value for branch in branches}
    value = values.pop() if len(values) == 1 else None
    proven = PROVEN_OPTIMA.get((m, n, p))
    result = GammaResult(canonical.original, canonical.params, branches, value, proven)
    if proven is not None:
        logger.info("[GAMMA] %s: closed form gives %s, exhaustive search proves %d",
                    canonical.params, result.marker(), proven)
    if result.is_conflict:
        logger.info("[GAMMA] %s: closed forms disagree (%s)", canonical.params, result.formula_text)
    return result


@dataclass(frozen=True)
class XuBound:
    gamma: int
    bound: int
    tight: bool

    @property
    def slack(self):
        return self.bound - self.gamma

    @property
    def holds(self):
        return self.gamma <= self.bound


def xu_bound(params):
    """Compare gamma (the proven optimum where one is recorded) with the conjectured bound |V| - 1."""
    result = gamma(params)
    if result.is_conflict:
        raise GammaConflictError(result)
    bound = result.params.vertex_count - 1
    value = result.best_known
    return XuBound(value, bound, value == bound)


def in_tight_family(params):
    """K(1,n,n+3) with n odd, the family known to meet the bound"""
    m, n, p = canonicalize(params).params.sizes
    return m == 1 and n % 2 == 1 and p == n + 3

