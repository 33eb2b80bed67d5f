from __future__ import annotations

__all__ = ["CoverageIndex"]

from typing import Iterable


class CoverageIndex:
    """Literal-indexed bitsets over a growing list of (partial) configurations.

    Bit `i` of the mask of a literal is set when configuration `i` decides
    that literal, so that the configurations containing a whole tuple are
    obtained with a few integer ANDs.
    """

    def __init__(self, configurations: Iterable[Iterable[int]] = ()):
        self._masks: dict[int, int] = {}
        self._literals: list[frozenset[int]] = []
        for literals in configurations:
            self.add(literals)

    def __len__(self) -> int:
        return len(self._literals)

    @property
    def all_mask(self) -> int:
        return (1 << len(self._literals)) - 1

    def add(self, literals: Iterable[int]) -> int:
        """Index a new configuration and return its position."""
        position = len(self._literals)
        self._literals.append(frozenset())
        self.update(position, literals)
        return position

    def update(self, position: int, literals: Iterable[int]):
        """Replace the literals of the configuration at `position`."""
        bit = 1 << position
        literals = frozenset(literals)
        for lit in self._literals[position] - literals:
            self._masks[lit] &= ~bit
        for lit in literals - self._literals[position]:
            self._masks[lit] = self._masks.get(lit, 0) | bit
        self._literals[position] = literals

    def matching(self, literals: Iterable[int]) -> int:
        """Mask of the configurations deciding every literal."""
        mask = self.all_mask
        for lit in literals:
            mask &= self._masks.get(lit, 0)
            if not mask:
                break
        return mask

    def covers(self, literals: Iterable[int]) -> bool:
        return self.matching(literals) != 0

    def conflicting(self, literals: Iterable[int]) -> int:
        """Mask of the configurations deciding the opposite of some literal."""
        mask = 0
        for lit in literals:
            mask |= self._masks.get(-lit, 0)
        return mask
