from __future__ import annotations

__all__ = ["PySatEngine"]

from typing import TYPE_CHECKING, Iterable, Sequence

from pysat.solvers import Solver

from multiwise.sat.dpll import DPLLEngine

if TYPE_CHECKING:
    from multiwise.core.feature_model import FeatureModel


class PySatEngine:
    """Engine backed by a MiniSat 2.2 solver from `python-sat`.

    Parameters
    ----------
    model : FeatureModel
        Model whose clauses are loaded in the solver
    solver_name : str, default="m22"
        Name of the pysat solver to use
    """

    def __init__(self, model: FeatureModel, solver_name: str = "m22"):
        self.nb_vars = model.nb_vars
        self.nb_features = model.nb_features
        self.nb_calls = 0
        self._solver = Solver(name=solver_name, bootstrap_with=[list(c) for c in model.clauses])
        self.reset_phases()
        # pysat only reports literals implied at the assumption level
        self._root_literals = DPLLEngine(model).propagate(()) or []

    def solve(self, assumptions: Sequence[int] = ()) -> bool:
        self.nb_calls += 1
        return self._solver.solve(assumptions=list(assumptions))

    def get_model(self) -> list[int] | None:
        model = self._solver.get_model()
        if model is None:
            return None
        # variables absent from every clause are not reported by the solver
        values = {abs(lit): lit for lit in model}
        return [values.get(v, -v) for v in range(1, self.nb_vars + 1)]

    def propagate(self, assumptions: Sequence[int] = ()) -> list[int] | None:
        status, implied = self._solver.propagate(assumptions=list(assumptions))
        if not status:
            return None
        literals = {lit for lit in implied if abs(lit) <= self.nb_features}
        literals.update(assumptions)
        literals.update(self._root_literals)
        return sorted(literals, key=abs)

    def set_phases(self, literals: Iterable[int]):
        self._solver.set_phases(literals=list(literals))

    def reset_phases(self, selected: bool = False):
        self.set_phases(v if selected else -v for v in range(1, self.nb_vars + 1))

    def add_clause(self, clause: Iterable[int]):
        self._solver.add_clause(list(clause))

    def __del__(self):
        solver = getattr(self, "_solver", None)
        if solver is not None:
            solver.delete()
