"""Internal DPLL solver with two-watched-literal unit propagation."""

from __future__ import annotations

__all__ = ["DPLLEngine"]

import logging
from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel

logger = logging.getLogger(__name__)


class DPLLEngine:
    """Incremental DPLL solver answering queries under assumptions.

    Decisions are taken on unassigned variables by ascending index, using the
    phase recorded for each variable (deselection by default). Every query
    starts from the root level and the solver always returns to it, so that
    successive queries are independent. Search uses chronological
    backtracking, which is enough for feature models where unit propagation
    does most of the work.

    Parameters
    ----------
    model : FeatureModel
        Model whose clauses are loaded in the solver
    """

    def __init__(self, model: FeatureModel):
        self.nb_vars = model.nb_vars
        self.nb_features = model.nb_features
        self.nb_calls = 0

        self._values = [0] * (self.nb_vars + 1)
        self._phases = [False] * (self.nb_vars + 1)
        self._watches: list[list[int]] = [[] for _ in range(2 * self.nb_vars + 2)]
        self._clauses: list[list[int]] = []
        self._trail: list[int] = []
        self._trail_lim: list[int] = []
        self._qhead = 0
        self._model: list[int] | None = None
        self._root_conflict = False

        for clause in model.clauses:
            self.add_clause(clause)

    # literal helpers
    def _watch_index(self, lit: int) -> int:
        return 2 * lit if lit > 0 else -2 * lit + 1

    def _value(self, lit: int) -> int:
        value = self._values[abs(lit)]
        return value if lit > 0 else -value

    def _assign(self, lit: int):
        self._values[abs(lit)] = 1 if lit > 0 else -1
        self._trail.append(lit)

    def add_clause(self, clause: Iterable[int]):
        """Add a permanent clause, simplified against the root assignment."""
        self._cancel_until(0)
        literals = []
        for lit in dict.fromkeys(clause):
            value = self._value(lit)
            if value > 0:
                return
            if value == 0:
                literals.append(lit)
        if self._root_conflict:
            return
        if not literals:
            self._root_conflict = True
        elif len(literals) == 1:
            self._assign(literals[0])
            if not self._propagate():
                self._root_conflict = True
        else:
            index = len(self._clauses)
            self._clauses.append(literals)
            self._watches[self._watch_index(literals[0])].append(index)
            self._watches[self._watch_index(literals[1])].append(index)

    def set_phases(self, literals: Iterable[int]):
        """Set the preferred value of the variables of `literals`."""
        for lit in literals:
            self._phases[abs(lit)] = lit > 0

    def reset_phases(self, selected: bool = False):
        self._phases = [selected] * (self.nb_vars + 1)

    def solve(self, assumptions: Sequence[int] = ()) -> bool:
        """Check satisfiability of the clauses under `assumptions`.

        On success, the satisfying assignment is available with `get_model`.
        """
        self.nb_calls += 1
        self._model = None
        if not self._assume(assumptions):
            self._cancel_until(0)
            return False

        base = len(self._trail_lim)
        flipped: list[bool] = []
        next_var = 1
        while True:
            if not self._propagate():
                # chronological backtracking on the last non-flipped decision
                while True:
                    if len(self._trail_lim) == base:
                        self._cancel_until(0)
                        return False
                    decision = self._trail[self._trail_lim[-1]]
                    was_flipped = flipped.pop()
                    self._cancel_until(len(self._trail_lim) - 1)
                    if not was_flipped:
                        self._trail_lim.append(len(self._trail))
                        flipped.append(True)
                        self._assign(-decision)
                        break
                next_var = 1
                continue

            while next_var <= self.nb_vars and self._values[next_var] != 0:
                next_var += 1
            if next_var > self.nb_vars:
                self._model = [v if self._values[v] > 0 else -v for v in range(1, self.nb_vars + 1)]
                self._cancel_until(0)
                return True

            self._trail_lim.append(len(self._trail))
            flipped.append(False)
            self._assign(next_var if self._phases[next_var] else -next_var)

    def get_model(self) -> list[int] | None:
        """Assignment of all variables found by the last successful `solve`."""
        return self._model

    def propagate(self, assumptions: Sequence[int] = ()) -> list[int] | None:
        """Return the literals implied by unit propagation of `assumptions`.

        The result holds the feature literals among the assumptions and their
        implications (root-level ones included), sorted by variable. Returns None when propagation hits a conflict.
        """
        if not self._assume(assumptions) or not self._propagate():
            self._cancel_until(0)
            return None
        implied = sorted((lit for lit in self._trail if abs(lit) <= self.nb_features), key=abs)
        self._cancel_until(0)
        return implied

    def _assume(self, assumptions: Sequence[int]) -> bool:
        self._cancel_until(0)
        if self._root_conflict:
            return False
        self._trail_lim.append(len(self._trail))
        for lit in assumptions:
            value = self._value(lit)
            if value < 0:
                return False
            if value == 0:
                self._assign(lit)
        return True

    def _propagate(self) -> bool:
        trail = self._trail
        while self._qhead < len(trail):
            false_lit = -trail[self._qhead]
            self._qhead += 1
            watch_list = self._watches[self._watch_index(false_lit)]
            kept = []
            for position, index in enumerate(watch_list):
                clause = self._clauses[index]
                if clause[0] == false_lit:
                    clause[0], clause[1] = clause[1], clause[0]
                other = clause[0]
                if self._value(other) > 0:
                    kept.append(index)
                    continue
                for k in range(2, len(clause)):
                    if self._value(clause[k]) >= 0:
                        clause[1], clause[k] = clause[k], clause[1]
                        self._watches[self._watch_index(clause[1])].append(index)
                        break
                else:
                    kept.append(index)
                    if self._value(other) < 0:
                        kept.extend(watch_list[position + 1 :])
                        watch_list[:] = kept
                        return False
                    self._assign(other)
            watch_list[:] = kept
        return True

    def _cancel_until(self, level: int):
        if len(self._trail_lim) <= level:
            return
        start = self._trail_lim[level]
        for lit in self._trail[start:]:
            self._values[abs(lit)] = 0
        del self._trail[start:]
        del self._trail_lim[level:]
        self._qhead = min(self._qhead, len(self._trail))
