"""Errors"""
from .data import ExitCode


class LatTowerError(Exception):
    """Base class of every error raised by this package"""

    exit_code = ExitCode.ERR

    def __init__(self, *args: object) -> None:
        super().__init__(*args)
        self._code = self.exit_code

    @property
    def code(self):
        """ExitCode"""
        return self._code


class ConfigError(LatTowerError):
    """Malformed configuration or bound override"""


class SpecParseError(LatTowerError):
    """Spec literal could not be parsed"""

    exit_code = ExitCode.PARSE

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class DegreeTooSmall(LatTowerError):
    """A factor degree below 3"""

    exit_code = ExitCode.PARSE


class NegativeExponent(LatTowerError):
    """A negative multiplicity"""

    exit_code = ExitCode.PARSE


class ChainLengthMismatch(LatTowerError):
    """Chains of distinct lengths are not isomorphic"""


class WidthMismatch(LatTowerError):
    """GF(2) objects of different widths were combined"""


class BadCoordinate(LatTowerError):
    """Coordinate outside 0..width-1"""


class UnitVectorInH(LatTowerError):
    """Admissibility condition (i) fails at a slot"""

    def __init__(self, slot: object) -> None:
        super().__init__(f"unit vector at slot {slot} lies in H")
        self.slot = slot


class DeadCoordinate(LatTowerError):
    """Admissibility condition (ii) fails at a slot"""

    def __init__(self, slot: object) -> None:
        super().__init__(f"no element of H is odd at slot {slot}")
        self.slot = slot


class IllegalChainPosition(LatTowerError):
    """A chain position that does not exist for the slot's degree"""


class InvalidProfile(LatTowerError):
    """Profile violating the support or activity condition"""


class SpecMismatch(LatTowerError):
    """Elements of lattices of different groups were combined"""


class NotMixed(LatTowerError):
    """decompose_mixed called on a sub-product or sign-parity element"""


class NotTowerGroup(LatTowerError):
    """Concrete group has a factor of degree below 3"""


class TooLarge(LatTowerError):
    """A configured bound was exceeded"""

    exit_code = ExitCode.BOUND


class ClassViolation(LatTowerError):
    """A slot permutation mixes the A and B classes"""

    exit_code = ExitCode.MISMATCH


class MismatchReport(LatTowerError):
    """Two independent computations disagree"""

    exit_code = ExitCode.MISMATCH


class NonTermination(LatTowerError):
    """The tower did not reach the trivial group within the cap"""

    exit_code = ExitCode.MISMATCH
