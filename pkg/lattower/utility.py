"""Utility"""

import sys
from typing import Callable, Iterable, Iterator, TypeVar
from functools import wraps

from tqdm import tqdm

from .data import ExitCode
from .errors import LatTowerError

T = TypeVar("T")

_PROGRESS = {"enabled": False}


def set_progress(enabled: bool):
    """Globally enable or disable progress bars"""
    _PROGRESS["enabled"] = enabled


def progress(data: Iterable[T], desc: str, total: int | None = None) -> Iterator[T]:
    """Wrap an iterable in a tqdm bar on stderr (disabled by default)"""
    return iter(
        tqdm(
            data,
            desc=desc,
            total=total,
            file=sys.stderr,
            leave=False,
            disable=not _PROGRESS["enabled"],
        )
    )


def supress(exclist: tuple[type[LatTowerError], ...] = (LatTowerError,)):
    """Turn package errors into a one-line reason and an exit code"""

    def outer(fn: Callable[..., ExitCode]):
        @wraps(fn)
        def inner(*args, **kwargs) -> ExitCode:
            try:
                return fn(*args, **kwargs)
            except exclist as exc:
                reason = " ".join(str(exc).split())
                print(f"error: {type(exc).__name__}: {reason}", file=sys.stderr)
                return exc.code

        return inner

    return outer


def iter_bits(bits: int) -> Iterator[int]:
    """Indices of the set bits, ascending"""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def cycle_notation(mapping: tuple[int, ...], offset: int = 0) -> str:
    """Cycle notation of a permutation of 0..n-1, '()' for the identity"""
    seen: set[int] = set()
    cycles = []
    for start in range(len(mapping)):
        if start in seen or mapping[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = mapping[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = mapping[nxt]
        cycles.append("(" + " ".join(str(i + offset) for i in cycle) + ")")
    return "".join(cycles) or "()"
