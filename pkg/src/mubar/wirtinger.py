"""Wirtinger presentations and longitudes of link diagrams.

Arcs of component ``i`` are numbered from its base point: arc 0 contains the
base point, arc ``j`` runs from the ``j``-th to the ``(j+1)``-th
under-passage.  The under-passage at which the last arc ends closes the
component back onto arc 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

from .diagram import UNDER, Diagram, _check_component, component_letter
from .freegroup import GroupWord, commutator, render_word


class ArcGen(NamedTuple):
    component: int
    arc: int

    def __str__(self) -> str:
        return f"{component_letter(self.component)}{self.arc}"


class WirtingerRelation(NamedTuple):
    """``outgoing = over^sign incoming over^-sign`` at one under-passage."""

    crossing: int
    over: ArcGen
    sign: int
    incoming: ArcGen
    outgoing: ArcGen

    @property
    def closing(self) -> bool:
        return self.outgoing.arc == 0

    def relator(self) -> GroupWord:
        r = GroupWord.gen(self.over, self.sign)
        return r * GroupWord.gen(self.incoming) * ~r * GroupWord.gen(self.outgoing, -1)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[ArcGen, ...]
    crossings: tuple[WirtingerRelation, ...]
    longitudes: tuple[GroupWord, ...]
    base_arcs: tuple[ArcGen, ...]
    extra_relators: tuple[GroupWord, ...] = field(default=())

    @property
    def n_components(self) -> int:
        return len(self.base_arcs)

    @property
    def relations(self) -> tuple[GroupWord, ...]:
        return tuple(rel.relator() for rel in self.crossings) + self.extra_relators

    def arcs_of(self, i: int) -> list[ArcGen]:
        return [g for g in self.generators if g.component == i]

    def to_records(self) -> dict:
        return {
            "generators": [str(g) for g in self.generators],
            "relators": [render_word(r) for r in self.relations],
            "longitudes": {
                component_letter(i): render_word(w) for i, w in enumerate(self.longitudes)
            },
            "base_arcs": [str(g) for g in self.base_arcs],
        }

    def render(self) -> str:
        lines = ["generators: " + " ".join(str(g) for g in self.generators)]
        lines.append("relators:")
        lines.extend("  " + render_word(r) for r in self.relations)
        lines.append("longitudes:")
        lines.extend(
            f"  w_{component_letter(i)} = {render_word(w)}" for i, w in enumerate(self.longitudes)
        )
        return "\n".join(lines)


def _arc_index(n_under_before: int, n_under: int) -> int:
    return 0 if n_under == 0 or n_under_before == n_under else n_under_before


def presentation(d: Diagram) -> Presentation:
    loc = d.locate()
    unders_before = []
    n_under = []
    for comp in d.components:
        counts = []
        seen = 0
        for p in comp:
            counts.append(seen)
            if p.kind == UNDER:
                seen += 1
        unders_before.append(counts)
        n_under.append(seen)

    def over_arc(crossing: int) -> ArcGen:
        ci, pos = loc[(crossing, "O")]
        return ArcGen(ci, _arc_index(unders_before[ci][pos], n_under[ci]))

    generators = []
    relations = []
    longitudes = []
    for i, comp in enumerate(d.components):
        m = n_under[i]
        generators.extend(ArcGen(i, j) for j in range(max(m, 1)))
        factors = []
        j = 0
        for p in comp:
            if p.kind != UNDER:
                continue
            r = over_arc(p.crossing)
            relations.append(
                WirtingerRelation(p.crossing, r, p.sign, ArcGen(i, j), ArcGen(i, (j + 1) % m))
            )
            factors.append((r, p.sign))
            j += 1
        longitudes.append(GroupWord(tuple(reversed(factors))))
    return Presentation(
        generators=tuple(generators),
        crossings=tuple(relations),
        longitudes=tuple(longitudes),
        base_arcs=tuple(ArcGen(i, 0) for i in range(d.n_components)),
    )


def longitude(d: Diagram, i: int) -> GroupWord:
    """Over-arc generators met at the under-passages of ``i``, read against the orientation."""
    _check_component(d, i)
    return presentation(d).longitudes[i]


def link_group_presentation(d: Diagram) -> Presentation:
    """Wirtinger presentation plus ``[a_ij, a_ik]`` for every same-component arc pair."""
    p = presentation(d)
    extra = []
    for i in range(d.n_components):
        for g, h in combinations(p.arcs_of(i), 2):
            extra.append(commutator(GroupWord.gen(g), GroupWord.gen(h)))
    return Presentation(p.generators, p.crossings, p.longitudes, p.base_arcs, tuple(extra))
