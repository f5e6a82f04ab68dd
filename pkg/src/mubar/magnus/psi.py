"""The Magnus expansion of words and the arc-series fixed point of a presentation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping

from ..errors import ComputationError, ConvergenceError
from ..freegroup import GroupWord
from ..wirtinger import ArcGen, Presentation
from .series import TruncatedSeries, series_inverse_of_one_plus


@dataclass
class ArcSeriesMap:
    """Series assigned to each generator, with inverses cached on demand."""

    series: dict[Hashable, TruncatedSeries]
    cap: int
    nvars: int
    iterations: int = 0
    _inv: dict[Hashable, TruncatedSeries] = field(default_factory=dict, repr=False)

    def __getitem__(self, g: Hashable) -> TruncatedSeries:
        return self.series[g]

    def __contains__(self, g: Hashable) -> bool:
        return g in self.series

    def power(self, g: Hashable, e: int) -> TruncatedSeries:
        if e > 0:
            return self.series[g]
        inv = self._inv.get(g)
        if inv is None:
            inv = self._inv[g] = series_inverse_of_one_plus(self.series[g])
        return inv


def base_meridian_map(k: int, cap: int) -> ArcSeriesMap:
    """``a_{i0} -> 1 + x_i`` for each of ``k`` components."""
    return ArcSeriesMap(
        {ArcGen(i, 0): TruncatedSeries.one_plus_variable(i, cap, k) for i in range(k)}, cap, k
    )


def psi_word(w: GroupWord, base_map: ArcSeriesMap | Mapping[Hashable, TruncatedSeries]
             ) -> TruncatedSeries:
    if not isinstance(base_map, ArcSeriesMap):
        first = next(iter(base_map.values()))
        base_map = ArcSeriesMap(dict(base_map), first.cap, first.nvars)
    out = TruncatedSeries.one(base_map.cap, base_map.nvars)
    for g, e in w.letters:
        if g not in base_map:
            raise ComputationError(f"generator {g} has no series")
        out = out * base_map.power(g, e)
    return out


def rho_fixpoint(p: Presentation, n: int) -> ArcSeriesMap:
    """Express every arc as a series in the base meridians, exact below degree ``n``.

    Base arcs are pinned to ``1 + x_i``; each other arc is rewritten through
    its incoming Wirtinger relation until a full sweep changes nothing.
    """
    if n < 2:
        raise ValueError("cap must be at least 2")
    k = p.n_components
    series = {g: TruncatedSeries.one_plus_variable(g.component, n, k) for g in p.generators}
    updates = [rel for rel in p.crossings if not rel.closing]
    for sweep in range(1, n + 1):
        changed = False
        inv: dict[ArcGen, TruncatedSeries] = {}
        for rel in updates:
            r = series[rel.over]
            if rel.over not in inv:
                inv[rel.over] = series_inverse_of_one_plus(r)
            ri = inv[rel.over]
            if rel.sign > 0:
                new = r * series[rel.incoming] * ri
            else:
                new = ri * series[rel.incoming] * r
            if new != series[rel.outgoing]:
                series[rel.outgoing] = new
                inv.pop(rel.outgoing, None)
                changed = True
        if not changed:
            return ArcSeriesMap(series, n, k, iterations=sweep)
    raise ConvergenceError(f"arc series did not stabilise within {n} sweeps")
