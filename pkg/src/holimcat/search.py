"""Budgeted backtracking over finite domains.

Every exhaustive enumeration in the package (functors, natural families,
modifications, simplicial maps) goes through :func:`solve`, so a single
node budget bounds the total work of a run.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

DEFAULT_BUDGET = 10**7


class SearchBudgetExceeded(RuntimeError):
    pass


# short alias
BudgetExceeded = SearchBudgetExceeded


class Budget:
    """Mutable node counter shared between searches."""

    def __init__(self, limit: int = DEFAULT_BUDGET):
        if limit <= 0:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.used = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise SearchBudgetExceeded(
                f"search exceeded node budget of {self.limit}")


def as_budget(budget) -> Budget:
    if budget is None:
        return Budget()
    if isinstance(budget, Budget):
        return budget
    return Budget(int(budget))


Check = Callable[[Mapping], bool]


def solve(variables: Sequence[Hashable],
          candidates: Callable[[Hashable, Mapping], Iterable],
          checks: Mapping[Hashable, Sequence[Check]] | None = None,
          budget=None) -> Iterator[dict]:
    """Yield every assignment of ``variables`` passing all checks.

    ``candidates(var, partial)`` proposes values for ``var`` given the values
    already fixed for earlier variables.  ``checks[var]`` run right after
    ``var`` is assigned; register each constraint under the last of its
    variables in ``variables`` order.  Solutions come out in lexicographic
    candidate order, so the enumeration is deterministic.
    """
    budget = as_budget(budget)
    checks = checks or {}
    n = len(variables)
    if n == 0:
        yield {}
        return
    assignment: dict = {}
    stack = [iter(candidates(variables[0], assignment))]
    while stack:
        depth = len(stack) - 1
        var = variables[depth]
        for value in stack[-1]:
            budget.tick()
            assignment[var] = value
            if all(chk(assignment) for chk in checks.get(var, ())):
                break
        else:
            assignment.pop(var, None)
            stack.pop()
            continue
        if depth + 1 == n:
            yield dict(assignment)
        else:
            stack.append(iter(candidates(variables[depth + 1], assignment)))
