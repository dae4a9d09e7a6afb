"""Catalog sweep: first criterion failure, or a bounded consistency certificate."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from ..grouptheory.epimorphisms import enumerate_epimorphisms
from ..grouptheory.perms import FiniteGroup, group_catalog
from .criteria import CriterionResult, ManifoldInput, check_epi


@dataclass
class SweepCounts:
    groups: int = 0
    epimorphisms: int = 0
    per_group: dict = field(default_factory=dict)
    orders: dict = field(default_factory=dict)
    current_order: int = 0

    def as_dict(self) -> dict:
        return {"groups": self.groups, "epimorphisms": self.epimorphisms,
                "per_group": dict(self.per_group)}


@dataclass(frozen=True)
class ObstructionFound:
    witness: CriterionResult
    max_order: int
    counts: dict
    failures: tuple[CriterionResult, ...]
    results: tuple[CriterionResult, ...]
    kind: str = "ObstructionFound"


@dataclass(frozen=True)
class ConsistentUpTo:
    max_order: int
    counts: dict
    results: tuple[CriterionResult, ...]
    kind: str = "ConsistentUpTo"


class BudgetExceeded(RuntimeError):
    def __init__(self, reason: str, counts: dict, results: Sequence[CriterionResult], max_order: int = 0):
        super().__init__(f"budget exceeded ({reason}) after {counts['epimorphisms']} epimorphisms")
        self.reason = reason
        self.counts = counts
        self.results = tuple(results)
        self.max_order = max_order
        self.current_order = 0
        self.group_orders: dict = {}


def sweep(inp: ManifoldInput, groups: Sequence[FiniteGroup], dedupe: bool = False,
          counts: SweepCounts | None = None,
          guard: Callable[[], None] | None = None,
          content_monic: bool = False) -> Iterator[CriterionResult]:
    """Results for every epimorphism onto every group, in canonical order."""
    counts = counts if counts is not None else SweepCounts()
    for G in groups:
        counts.groups += 1
        counts.current_order = G.order
        counts.orders[G.name] = G.order
        epis = enumerate_epimorphisms(inp.presentation, G, dedupe_conjugacy=dedupe)
        counts.per_group[G.name] = len(epis)
        for alpha in epis:
            if guard is not None:
                guard()
            counts.epimorphisms += 1
            yield check_epi(inp, alpha, content_monic)


def search_obstruction(inp: ManifoldInput, max_order: int = 24, dedupe: bool = False,
                       budget_seconds: float | None = None, max_epimorphisms: int | None = None,
                       exhaustive: bool = False, groups: Sequence[FiniteGroup] | None = None,
                       clock: Callable[[], float] = time.monotonic,
                       on_result: Callable[[CriterionResult], None] | None = None,
                       content_monic: bool = False):
    """Return ObstructionFound for the first failing alpha, else ConsistentUpTo.

    With ``exhaustive`` the sweep runs to the end and all failures are kept;
    the witness is still the first one.  Budgets are checked between
    epimorphisms and raise BudgetExceeded with the partial counts.
    """
    if groups is None:
        groups = group_catalog(max_order)
    else:
        groups = [G for G in groups if G.order <= max_order]
    counts = SweepCounts()
    start = clock()
    results: list[CriterionResult] = []
    failures: list[CriterionResult] = []

    def guard():
        if budget_seconds is not None and clock() - start > budget_seconds:
            _over("time")
        if max_epimorphisms is not None and counts.epimorphisms >= max_epimorphisms:
            _over("epimorphisms")

    def _over(reason):
        exc = BudgetExceeded(reason, counts.as_dict(), results, max_order)
        exc.current_order = counts.current_order
        exc.group_orders = dict(counts.orders)
        raise exc

    for res in sweep(inp, groups, dedupe, counts, guard, content_monic):
        results.append(res)
        if on_result is not None:
            on_result(res)
        if res.failed:
            failures.append(res)
            if not exhaustive:
                break
    if failures:
        return ObstructionFound(failures[0], max_order, counts.as_dict(), tuple(failures), tuple(results))
    return ConsistentUpTo(max_order, counts.as_dict(), tuple(results))


def escalate(inp: ManifoldInput, max_order: int = 120, budget_seconds: float | None = None,
             dedupe: bool = True, content_monic: bool = False,
             clock: Callable[[], float] = time.monotonic,
             on_result: Callable[[CriterionResult], None] | None = None):
    """Sweep orders 1, 2, ... up to max_order until a failure appears.

    Sweeping the catalog in canonical order is the same as escalating the bound
    one order at a time.  When the budget runs out the answer is ConsistentUpTo
    for the largest order whose groups were all finished.
    """
    try:
        return search_obstruction(inp, max_order, dedupe=dedupe, budget_seconds=budget_seconds,
                                  clock=clock, on_result=on_result, content_monic=content_monic)
    except BudgetExceeded as exc:
        done = exc.current_order - 1
        results = tuple(r for r in exc.results if r.alpha.target.order <= done)
        per_group = {name: n for name, n in exc.counts["per_group"].items()
                     if exc.group_orders[name] <= done}
        counts = {"groups": len(per_group), "epimorphisms": sum(per_group.values()),
                  "per_group": per_group}
        return ConsistentUpTo(max(done, 0), counts, results)

