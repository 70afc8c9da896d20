"""
Closed forms for the signed edge domination number of K_{m,n,p}.

All functions take a canonical triple m <= n <= p. Selection functions only
decide which case applies; FORMULAS evaluates a case in exact integers.
"""
from dataclasses import dataclass

from common.errors import InternalError
from modules.oracle.case_tags import CaseTag


@dataclass(frozen=True)
class Branch:
    tag: CaseTag
    value: int
    formula_text: str


def exact_div(numerator, denominator):
    if numerator % denominator:
        raise InternalError(f"{numerator}/{denominator} is not an integer; case dispatch is wrong")
    return numerator // denominator


FORMULAS = {
    "S.K111": ("1", lambda m, n, p: 1),
    "S.K235": ("5", lambda m, n, p: 5),

    "T11.A1": ("(m+n+p)/2", lambda m, n, p: exact_div(m + n + p, 2)),
    "T11.A2": ("(m+n+p+2)/2", lambda m, n, p: exact_div(m + n + p + 2, 2)),
    "T11.B1": ("(m+n+p+1)/2", lambda m, n, p: exact_div(m + n + p + 1, 2)),
    "T11.B2": ("(m+n+p+3)/2", lambda m, n, p: exact_div(m + n + p + 3, 2)),
    "T11.C1": ("(m+n)/2+p+1", lambda m, n, p: exact_div(m + n, 2) + p + 1),
    "T11.C2": ("(m+n)/2+p", lambda m, n, p: exact_div(m + n, 2) + p),
    "T11.D1": ("(m+p)/2+n+1", lambda m, n, p: exact_div(m + p, 2) + n + 1),
    "T11.D2": ("(m+p)/2+n", lambda m, n, p: exact_div(m + p, 2) + n),
    "T11.E1": ("(n+p)/2+m+1", lambda m, n, p: exact_div(n + p, 2) + m + 1),
    "T11.E2": ("(n+p)/2+m", lambda m, n, p: exact_div(n + p, 2) + m),

    "MAIN.A": ("m+n", lambda m, n, p: m + n),
    "MAIN.B": ("m+n+1", lambda m, n, p: m + n + 1),
    "MAIN.C1": ("(3m+3n+2)/2", lambda m, n, p: exact_div(3 * m + 3 * n + 2, 2)),
    "MAIN.C2": ("(3m+3n)/2", lambda m, n, p: exact_div(3 * m + 3 * n, 2)),
    "MAIN.D1": ("(3m+3n)/2", lambda m, n, p: exact_div(3 * m + 3 * n, 2)),
    "MAIN.D2": ("(3m+3n+2)/2", lambda m, n, p: exact_div(3 * m + 3 * n + 2, 2)),
    "MAIN.E1": ("(3m+2n+1)/2", lambda m, n, p: exact_div(3 * m + 2 * n + 1, 2)),
    "MAIN.E2": ("(3m+2n-1)/2", lambda m, n, p: exact_div(3 * m + 2 * n - 1, 2)),
    "MAIN.F1": ("(2m+3n+1)/2", lambda m, n, p: exact_div(2 * m + 3 * n + 1, 2)),
    "MAIN.F2": ("(2m+3n-1)/2", lambda m, n, p: exact_div(2 * m + 3 * n - 1, 2)),
    "MAIN.G1": ("(2m+3n)/2", lambda m, n, p: exact_div(2 * m + 3 * n, 2)),
    "MAIN.G2": ("(2m+3n-2)/2", lambda m, n, p: exact_div(2 * m + 3 * n - 2, 2)),
    "MAIN.H1": ("(3m+2n)/2", lambda m, n, p: exact_div(3 * m + 2 * n, 2)),
    "MAIN.H2": ("(3m+2n-2)/2", lambda m, n, p: exact_div(3 * m + 2 * n - 2, 2)),

    "S.K1np.1": ("n+2", lambda m, n, p: n + 2),
    "S.K1np.2": ("n+2", lambda m, n, p: n + 2),
    "S.K1np.3": ("2n+1", lambda m, n, p: 2 * n + 1),
    "S.K1np.4": ("2n+3", lambda m, n, p: 2 * n + 3),
    "S.K22p": ("8", lambda m, n, p: 8),
}


def evaluate(case_id, m, n, p):
    """Branch for a named case at (m, n, p), without checking that the case applies."""
    text, formula = FORMULAS[str(case_id)]
    return Branch(CaseTag(str(case_id)), formula(m, n, p), text)


def _parity(x):
    return "eo"[x % 2]


def exception_case(m, n, p):
    if (m, n, p) == (1, 1, 1):
        return "S.K111"
    if (m, n, p) == (2, 3, 5):
        return "S.K235"
    return None


def t11_case(m, n, p):
    """Case of the p <= m+n closed forms."""
    pattern = _parity(m) + _parity(n) + _parity(p)
    s = m + n + p
    if pattern == "eee":
        return "T11.A1" if s % 4 == 0 else "T11.A2"
    if pattern == "ooo":
        return "T11.B1" if s % 4 == 1 else "T11.B2"
    if m % 2 == n % 2:
        return "T11.C1" if (m + n) % 4 == 0 else "T11.C2"
    if m % 2 == p % 2:
        return "T11.D1" if (m + p) % 4 == 0 else "T11.D2"
    return "T11.E1" if (n + p) % 4 == 0 else "T11.E2"


def main_case(m, n, p):
    """Case of the p >= m+n closed forms (m >= 2, not K(2,2,odd))."""
    pattern = _parity(m) + _parity(n) + _parity(p)
    if pattern == "eee":
        return "MAIN.A"
    if pattern == "ooo":
        return "MAIN.B"
    if pattern == "ooe":
        return "MAIN.C1" if (m + n) % 4 == 0 else "MAIN.C2"
    if pattern == "eeo":
        return "MAIN.D1" if (m + n) % 4 == 0 else "MAIN.D2"
    if pattern == "oee":
        return "MAIN.E1" if m % 4 == 1 else "MAIN.E2"
    if pattern == "eoe":
        return "MAIN.F1" if n % 4 == 1 else "MAIN.F2"
    if pattern == "oeo":
        return "MAIN.G1" if n % 4 == 0 else "MAIN.G2"
    return "MAIN.H1" if m % 4 == 0 else "MAIN.H2"


def k1np_case(n, p):
    """Case of K(1,n,p) with p >= n+1."""
    if n % 2 and p % 2:
        return "S.K1np.1"
    if not n % 2 and not p % 2:
        return "S.K1np.2"
    if not n % 2:
        return "S.K1np.3"
    return "S.K1np.4"


def is_k22p(m, n, p):
    return (m, n) == (2, 2) and p % 2 == 1 and p >= 5


def main_applies(m, n, p):
    return m >= 2 and p >= m + n and not ((m, n) == (2, 2) and p % 2 == 1)


def applicable_cases(m, n, p):
    """Every case whose hypotheses hold at a canonical triple, in dispatch order."""
    exception = exception_case(m, n, p)
    if exception:
        return [exception]
    cases = []
    if m == 1 and p >= n + 1:
        cases.append(k1np_case(n, p))
    if is_k22p(m, n, p):
        cases.append("S.K22p")
    if p <= m + n:
        cases.append(t11_case(m, n, p))
    if main_applies(m, n, p):
        cases.append(main_case(m, n, p))
    return cases


def branch_values(m, n, p):
    return [evaluate(case_id, m, n, p) for case_id in applicable_cases(m, n, p)]
