"""Data-related information"""

from enum import IntEnum
from typing import NamedTuple, Generic, TypeVar

T = TypeVar("T")

SPEC_GRAMMAR = (
    "Spec literals look like 'S3^3' or 'S4^2*S3^2' "
    "(degree >= 3, optional ^multiplicity, factors joined by '*'; '1' is trivial)"
)


class ExitCode(IntEnum):
    """Process exit codes"""

    OK = 0
    ERR = 1
    PARSE = 2
    BOUND = 3
    MISMATCH = 4


class ChainPosition(IntEnum):
    """Position inside the chain N(S_k); the integer order is inclusion"""

    TRIV = 0
    V = 1
    ALT = 2
    FULL = 3

    @property
    def short(self) -> str:
        """Name used in JSON and text output"""
        return _POSITION_NAMES[self]

    @classmethod
    def from_short(cls, name: str) -> "ChainPosition":
        """Inverse of `short`"""
        for pos, label in _POSITION_NAMES.items():
            if label == name:
                return pos
        raise ValueError(f"unknown chain position {name!r}")


_POSITION_NAMES = {
    ChainPosition.TRIV: "Triv",
    ChainPosition.V: "V",
    ChainPosition.ALT: "Alt",
    ChainPosition.FULL: "Full",
}


class SlotClass(IntEnum):
    """Slot classes; A holds the S_4 copies"""

    A = 0
    B = 1


class Family(IntEnum):
    """The three disjoint families of normal subgroups"""

    SUB_PRODUCT = 0
    SIGN_PARITY = 1
    MIXED = 2

    @property
    def short(self) -> str:
        """Label for Hasse diagrams and reports"""
        return ("sub", "parity", "mixed")[self]


class ReturnInfo(Generic[T], NamedTuple):
    """Return info"""
    type: ExitCode
    reason: str
    additional_info: T
