"""
Oracle - closed-form signed edge domination numbers with conflict detection
"""
from modules.oracle.case_tags import CaseTag, Region
from modules.oracle.dispatch import (
    Canonical,
    PROVEN_OPTIMA,
    GammaResult,
    XuBound,
    canonicalize,
    gamma,
    in_tight_family,
    xu_bound,
)
