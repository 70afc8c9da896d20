"""
Vertex-weight lower bounds at optima, checked on solver certificates.

For canonical m <= n <= p the largest part W obeys, at any minimum SEDF
whose parts are balanced:

  all even or all odd                         f(w) >= 0
  m, n one parity, p the other, n < p         f(w) >= 0
  m odd, n, p even or m, p even, n odd; m < n f(w) >= -1
  m, p odd, n even or m even, n, p odd; m < n f(w) >= -1

Violations are reported, never raised.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from common.errors import ContractError
from modules.graph_core.models.params import PART_NAMES, U, V, W
from modules.graph_core.rebalance import rebalance_all
from modules.oracle.dispatch import canonicalize

logger = logging.getLogger(__name__)

OK = "ok"
VIOLATION = "violation"
NOT_APPLICABLE = "not applicable"


@dataclass(frozen=True)
class WBound:
    parity_class: str
    bound: int


def w_weight_bound(m, n, p):
    """Lower bound on f(w) for the parity class of a canonical triple, or None."""
    pattern = "".join("eo"[x % 2] for x in (m, n, p))
    if pattern in ("eee", "ooo"):
        return WBound("eee/ooo", 0)
    if pattern in ("eeo", "ooe") and n < p:
        return WBound("eeo/ooe", 0)
    if pattern in ("oee", "eoe") and m < n:
        return WBound("oee/eoe", -1)
    if pattern in ("oeo", "eoo") and m < n:
        return WBound("oeo/eoo", -1)
    return None


@dataclass(frozen=True)
class VertexWeightScan:
    params: object
    minima: dict
    raw_minima: dict
    bound: Optional[WBound]
    status: str
    raw_status: str

    def to_dict(self):
        return {
            "m": self.params.m,
            "n": self.params.n,
            "p": self.params.p,
            "minima": self.minima,
            "raw_minima": self.raw_minima,
            "parity_class": self.bound.parity_class if self.bound else None,
            "w_bound": self.bound.bound if self.bound else None,
            "status": self.status,
            "raw_status": self.raw_status,
        }


def _part_minima(labeling):
    params = labeling.params
    weights = labeling.vertex_weight_array()
    minima = {}
    for part in (U, V, W):
        start = params.part_offsets[part]
        minima[PART_NAMES[part]] = int(weights[start:start + params.part_size(part)].min())
    return minima


def _status(bound, minimum):
    if bound is None:
        return NOT_APPLICABLE
    return OK if minimum >= bound.bound else VIOLATION


def optimum_vertex_weight_scan(report):
    """Per-part minimum vertex weight of a proven optimum, before and after rebalancing."""
    if not report.exhausted:
        raise ContractError("the vertex-weight scan needs an exhausted search")
    canonical = canonicalize(report.params)
    certificate = canonical.to_canonical(report.certificate)
    balanced = rebalance_all(certificate)

    raw_minima = _part_minima(certificate)
    minima = _part_minima(balanced)
    bound = w_weight_bound(*canonical.params.sizes)
    scan = VertexWeightScan(
        params=canonical.params,
        minima=minima,
        raw_minima=raw_minima,
        bound=bound,
        status=_status(bound, minima["W"]),
        raw_status=_status(bound, raw_minima["W"]),
    )
    if scan.status == VIOLATION:
        logger.warning("[LEMMA] %s: balanced optimum has min f(w) = %d below %d (%s)",
                       scan.params, minima["W"], bound.bound, bound.parity_class)
    elif scan.raw_status == VIOLATION:
        logger.info("[LEMMA] %s: unbalanced optimum has min f(w) = %d below %d; balanced form is fine",
                    scan.params, raw_minima["W"], bound.bound)
    return scan
