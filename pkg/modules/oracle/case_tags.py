from dataclasses import dataclass
from enum import Enum

from common.errors import InputError


class Region(Enum):
    T11 = "T11"          # p <= m+n closed forms
    MAIN = "MAIN"        # p >= m+n closed forms
    SPECIAL = "SPECIAL"  # K(1,n,p), K(2,2,p) and the two exceptions


T11_CASES = tuple(f"T11.{c}{k}" for c in "ABCDE" for k in (1, 2))
MAIN_CASES = ("MAIN.A", "MAIN.B") + tuple(f"MAIN.{c}{k}" for c in "CDEFGH" for k in (1, 2))
SPECIAL_CASES = ("S.K1np.1", "S.K1np.2", "S.K1np.3", "S.K1np.4", "S.K22p", "S.K111", "S.K235")
ALL_CASES = T11_CASES + MAIN_CASES + SPECIAL_CASES


@dataclass(frozen=True, order=True)
class CaseTag:
    case_id: str

    def __post_init__(self):
        if self.case_id not in ALL_CASES:
            raise InputError(f"unknown case tag {self.case_id!r}")

    @property
    def region(self):
        if self.case_id.startswith("T11."):
            return Region.T11
        if self.case_id.startswith("MAIN."):
            return Region.MAIN
        return Region.SPECIAL

    def __str__(self):
        return self.case_id
