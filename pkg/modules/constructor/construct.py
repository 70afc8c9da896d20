import logging

from common.errors import CertificateMismatchError, InternalError
from modules.constructor.plans import quota_plan
from modules.constructor.realize import realize
from modules.graph_core.verifier import verify
from modules.oracle.dispatch import canonicalize, gamma

logger = logging.getLogger(__name__)


def construct(params):
    """
    Verified labeling from the construction covering params.

    Returns (labeling, case tag) with the labeling in the caller's part order.
    The weight must equal the closed form of the plan's own case and, when
    the closed forms agree, the gamma value. Where exhaustive search has
    proven a smaller optimum the labeling is still returned, with a warning
    that it is not minimum.
    """
    canonical = canonicalize(params)
    plan = quota_plan(canonical.params)
    labeling = realize(plan)

    report = verify(labeling)
    if not report.is_sedf:
        raise CertificateMismatchError(
            f"{plan.case} labeling of {plan.params} is not an SEDF: "
            f"{len(report.violations)} violations, min f[e] = {report.min_closed_sum}")

    result = gamma(plan.params)
    claimed = result.value_for(plan.case)
    if claimed is None:
        raise InternalError(f"{plan.case} planned for {plan.params} but not among {result.tags}")
    if report.weight != claimed:
        raise CertificateMismatchError(
            f"{plan.case} labeling of {plan.params} has weight {report.weight}, closed form gives {claimed}")
    if not result.is_conflict and result.value != report.weight:
        raise CertificateMismatchError(
            f"{plan.case} labeling of {plan.params} has weight {report.weight}, gamma is {result.value}")
    if result.is_disputed:
        logger.warning("[CONSTRUCT] %s: %s weight %d is above the proven optimum %d",
                       canonical.original, plan.case, report.weight, result.proven_optimum)

    logger.debug("[CONSTRUCT] %s: %s weight %d", canonical.original, plan.case, report.weight)
    return canonical.to_original(labeling), plan.case
