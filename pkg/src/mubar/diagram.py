"""Oriented virtual link diagrams as signed Gauss codes.

Only classical crossings are stored.  A diagram is a tuple of components,
each a cyclic sequence of passages ``(kind, crossing, sign)`` where ``kind``
is ``"O"`` (the component passes over) or ``"U"`` (it passes under).  The
start of each sequence marks the component's base point.

Braid convention: ``s<i>`` puts the strand at position ``i`` over the strand
at ``i+1`` with sign +1; ``S<i>`` puts the strand at ``i+1`` over the strand
at ``i`` with sign -1; ``v<i>`` is a virtual crossing.  Strands run top to
bottom and bottom position ``p`` closes up to top position ``p``.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import (
    BraidIndexError,
    BraidSyntaxError,
    ComponentError,
    GaussSyntaxError,
    GaussValidationError,
)

OVER = "O"
UNDER = "U"
FLAT = "F"

LETTERS = string.ascii_lowercase


def component_letter(i: int) -> str:
    if not 0 <= i < len(LETTERS):
        raise ComponentError(f"no letter for component {i}")
    return LETTERS[i]


def component_index(letter: str) -> int:
    i = LETTERS.find(letter)
    if i < 0 or len(letter) != 1:
        raise ComponentError(f"unknown component letter {letter!r}")
    return i


class Passage(NamedTuple):
    kind: str
    crossing: int
    sign: int

    def __str__(self) -> str:
        return f"{self.kind}{self.crossing}{'+' if self.sign > 0 else '-'}"


class CrossingRef(NamedTuple):
    id: int
    sign: int
    over_component: int
    under_component: int


@dataclass(frozen=True)
class Diagram:
    """A validated signed Gauss code.

    An empty component sequence is a crossing-free unknot component.
    """

    components: tuple[tuple[Passage, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(Passage(*p) for p in c) for c in self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise GaussValidationError("a diagram needs at least one component")
        seen: dict[tuple[int, str], int] = {}
        signs: dict[int, int] = {}
        for comp in comps:
            for p in comp:
                if p.kind not in (OVER, UNDER):
                    raise GaussValidationError(f"bad passage kind {p.kind!r}")
                if p.sign not in (1, -1):
                    raise GaussValidationError(f"bad sign {p.sign!r} at crossing {p.crossing}")
                key = (p.crossing, p.kind)
                if key in seen:
                    raise GaussValidationError(
                        f"crossing {p.crossing} has two {p.kind} passages"
                    )
                seen[key] = 1
                if signs.setdefault(p.crossing, p.sign) != p.sign:
                    raise GaussValidationError(
                        f"sign mismatch between the two passages of crossing {p.crossing}"
                    )
        for c in signs:
            for kind in (OVER, UNDER):
                if (c, kind) not in seen:
                    raise GaussValidationError(f"crossing {c} is missing its {kind} passage")

    @property
    def n_components(self) -> int:
        return len(self.components)

    def crossings(self) -> dict[int, CrossingRef]:
        over: dict[int, int] = {}
        under: dict[int, int] = {}
        sign: dict[int, int] = {}
        for i, comp in enumerate(self.components):
            for p in comp:
                (over if p.kind == OVER else under)[p.crossing] = i
                sign[p.crossing] = p.sign
        return {
            c: CrossingRef(c, sign[c], over[c], under[c]) for c in sorted(sign)
        }

    def locate(self) -> dict[tuple[int, str], tuple[int, int]]:
        """Map ``(crossing, kind)`` to ``(component, position)``."""
        return {
            (p.crossing, p.kind): (i, j)
            for i, comp in enumerate(self.components)
            for j, p in enumerate(comp)
        }

    def crossing_ids(self) -> list[int]:
        return sorted({p.crossing for comp in self.components for p in comp})

    def writhe(self) -> int:
        return sum(ref.sign for ref in self.crossings().values())

    def __str__(self) -> str:
        return render_gauss(self)


@dataclass(frozen=True)
class FlatDiagram:
    components: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return " | ".join(" ".join(f"{FLAT}{c}" for c in comp) for comp in self.components)


# -- braids ---------------------------------------------------------------


class Letter(NamedTuple):
    kind: str  # "s", "S" or "v"
    index: int

    @property
    def classical(self) -> bool:
        return self.kind != "v"

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(Letter(*x) for x in self.letters))
        if self.strands < 1:
            raise BraidIndexError("strand count must be positive", 0)
        for pos, letter in enumerate(self.letters):
            if letter.kind not in ("s", "S", "v"):
                raise BraidSyntaxError(f"unknown generator {letter.kind!r}", 0)
            if not 1 <= letter.index <= self.strands - 1:
                raise BraidIndexError(
                    f"generator index {letter.index} out of range for {self.strands} strands",
                    pos,
                )

    def permutation(self) -> list[int]:
        """``perm[p]`` is the top position of the strand ending at bottom position ``p``."""
        pos = list(range(self.strands))
        for letter in self.letters:
            i = letter.index - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        return pos

    def strand_components(self) -> list[int]:
        """Component index of each strand (by top position)."""
        perm = self.permutation()
        nxt = [0] * self.strands
        for bottom, strand in enumerate(perm):
            nxt[strand] = bottom
        comp = [-1] * self.strands
        k = 0
        for s in range(self.strands):
            if comp[s] >= 0:
                continue
            t = s
            while comp[t] < 0:
                comp[t] = k
                t = nxt[t]
            k += 1
        return comp

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


_BRAID_TOKEN = re.compile(r"([sSv])(\d+)")


def parse_braid(text: str, strands: int) -> BraidWord:
    letters = []
    raw = text.encode()
    for pos, m in enumerate(re.finditer(rb"\S+", raw)):
        tok = m.group().decode(errors="replace")
        tm = _BRAID_TOKEN.fullmatch(tok)
        if tm is None:
            raise BraidSyntaxError(f"bad braid token {tok!r}", m.start())
        idx = int(tm.group(2))
        if not 1 <= idx <= strands - 1:
            raise BraidIndexError(
                f"generator {tok} out of range for {strands} strands", pos
            )
        letters.append(Letter(tm.group(1), idx))
    if strands < 1:
        raise BraidIndexError("strand count must be positive", 0)
    return BraidWord(strands, tuple(letters))


def braid_crossings(b: BraidWord) -> list[tuple[int, int, int, int]]:
    """Per classical letter: ``(letter index, over strand, under strand, sign)``.

    Strands are named by their top position.
    """
    pos = list(range(b.strands))
    out = []
    for n, letter in enumerate(b.letters):
        i = letter.index - 1
        left, right = pos[i], pos[i + 1]
        if letter.kind == "s":
            out.append((n, left, right, 1))
        elif letter.kind == "S":
            out.append((n, right, left, -1))
        pos[i], pos[i + 1] = right, left
    return out


def close_braid(b: BraidWord) -> Diagram:
    passages: list[list[Passage]] = [[] for _ in range(b.strands)]
    for cid, (_, over, under, sign) in enumerate(braid_crossings(b), start=1):
        passages[over].append(Passage(OVER, cid, sign))
        passages[under].append(Passage(UNDER, cid, sign))
    comp_of = b.strand_components()
    perm = b.permutation()
    nxt = [0] * b.strands
    for bottom, strand in enumerate(perm):
        nxt[strand] = bottom
    components = []
    for k in range(max(comp_of) + 1):
        start = comp_of.index(k)
        seq: list[Passage] = []
        s = start
        while True:
            seq.extend(passages[s])
            s = nxt[s]
            if s == start:
                break
        components.append(tuple(seq))
    return Diagram(tuple(components))


# -- Gauss codes ----------------------------------------------------------

_PASSAGE = re.compile(rb"([OU])(\d+)([+-])")


def parse_gauss(text: str) -> Diagram:
    raw = text.encode()
    components = []
    start = 0
    for chunk in raw.split(b"|"):
        comp = []
        for m in re.finditer(rb"[^\s,]+", chunk):
            pm = _PASSAGE.fullmatch(m.group())
            if pm is None:
                raise GaussSyntaxError(
                    f"bad passage {m.group().decode(errors='replace')!r}", start + m.start()
                )
            kind, cid, sgn = pm.groups()
            comp.append(Passage(kind.decode(), int(cid), 1 if sgn == b"+" else -1))
        components.append(tuple(comp))
        start += len(chunk) + 1
    return Diagram(tuple(components))


def render_gauss(d: Diagram) -> str:
    return " | ".join(" ".join(str(p) for p in comp) for comp in d.components)


def flatten(d: Diagram | FlatDiagram) -> FlatDiagram:
    if isinstance(d, FlatDiagram):
        return d
    return FlatDiagram(tuple(tuple(p.crossing for p in comp) for comp in d.components))


def _check_component(d: Diagram, *indices: int) -> None:
    for i in indices:
        if not 0 <= i < d.n_components:
            raise ComponentError(f"component {i} out of range (0..{d.n_components - 1})")


def linking_number(d: Diagram, b: int, a: int) -> int:
    """Signed count of crossings where component ``a`` passes under ``b``."""
    _check_component(d, a, b)
    if a == b:
        raise ComponentError("linking number needs two distinct components")
    return sum(
        ref.sign
        for ref in d.crossings().values()
        if ref.over_component == b and ref.under_component == a
    )


def linking_matrix(d: Diagram) -> list[list[int]]:
    """``m[b][a] = link(b, a)``; the diagonal holds the self-writhe of each component."""
    k = d.n_components
    m = [[0] * k for _ in range(k)]
    for ref in d.crossings().values():
        m[ref.over_component][ref.under_component] += ref.sign
    return m


def unlink(k: int) -> Diagram:
    return Diagram(tuple(() for _ in range(k)))


def relabel(d: Diagram, mapping: dict[int, int] | None = None) -> Diagram:
    """Renumber crossings densely in order of first appearance."""
    if mapping is None:
        mapping = {}
        for comp in d.components:
            for p in comp:
                mapping.setdefault(p.crossing, len(mapping) + 1)
    return Diagram(
        tuple(tuple(Passage(p.kind, mapping[p.crossing], p.sign) for p in comp)
              for comp in d.components)
    )


def diagram_from_passages(components: Iterable[Iterable[tuple[str, int, int]]]) -> Diagram:
    return Diagram(tuple(tuple(Passage(*p) for p in comp) for comp in components))
