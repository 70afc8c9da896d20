"""Exception hierarchy shared by every sedn-lab module.

Each class carries the process exit code the command line reports for it.
"""

EXIT_OK = 0
EXIT_INVALID_LABELING = 1
EXIT_CONFLICT = 2
EXIT_UNCOVERED = 3
EXIT_MISMATCH = 4
EXIT_IO = 5


class SednError(Exception):
    """Base class for all sedn-lab errors"""
    exit_code = EXIT_MISMATCH


class InputError(SednError, ValueError):
    """Malformed parameters, edge ids, vertices or labeling dimensions"""
    exit_code = EXIT_IO


class LabelingParseError(InputError):
    """A labeling file could not be read or does not match the schema"""
    exit_code = EXIT_IO


class ContractError(SednError):
    """A documented precondition was violated by the caller"""
    exit_code = EXIT_INVALID_LABELING


class UncoveredError(SednError):
    """No closed-form branch claims the triple"""
    exit_code = EXIT_UNCOVERED


class GammaConflictError(SednError):
    """Two applicable closed forms disagree and a single value was required"""
    exit_code = EXIT_CONFLICT

    def __init__(self, result):
        self.result = result
        pairs = ", ".join(f"{tag}: {value}" for tag, value in result.conflict)
        super().__init__(f"conflicting closed forms for {result.params.as_tuple()}: {pairs}")


class NoConstructionError(SednError):
    """The triple lies outside every explicit construction"""
    exit_code = EXIT_UNCOVERED


class QuotaGapError(NoConstructionError):
    """The case's quotas force more negative edges into a block than its totals allow"""
    exit_code = EXIT_UNCOVERED


class ConstructionError(SednError):
    """A quota plan could not be realized; this is a plan bug, not user error"""
    exit_code = EXIT_MISMATCH

    def __init__(self, message, deficits=None):
        self.deficits = dict(deficits or {})
        if self.deficits:
            message = f"{message} (residual deficits: {self.deficits})"
        super().__init__(message)


class CertificateMismatchError(SednError):
    """A verified certificate disagrees with the closed form it should match"""
    exit_code = EXIT_MISMATCH


class SolverRefusal(SednError):
    """The instance is larger than the configured edge cap"""
    exit_code = EXIT_UNCOVERED


class InternalError(SednError):
    """Two independent computations of the same quantity disagree"""
    exit_code = EXIT_MISMATCH
