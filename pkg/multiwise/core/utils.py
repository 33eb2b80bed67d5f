from __future__ import annotations

__all__ = ["iter_bits", "modules_are_available"]

import importlib.util
from typing import Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Iterate over the indices of the set bits of `mask`, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def modules_are_available(modules: list[str]):
    return all(importlib.util.find_spec(m) is not None for m in modules)
