"""Freely reduced words in a free group.

Generators are opaque hashable objects.  A word is stored as a tuple of
``(generator, exponent)`` letters with exponent +1 or -1; construction always
reduces, so equality of words is equality of group elements.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .errors import WordSyntaxError

Gen = Hashable


def _reduce(letters: Iterable[tuple[Gen, int]]) -> tuple[tuple[Gen, int], ...]:
    out: list[tuple[Gen, int]] = []
    for g, e in letters:
        if e == 0:
            continue
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            if out and out[-1][0] == g and out[-1][1] == -step:
                out.pop()
            else:
                out.append((g, step))
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[tuple[Gen, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def gen(cls, g: Gen, exponent: int = 1) -> "GroupWord":
        return cls(((g, exponent),))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return multiply(self, other)

    def __pow__(self, n: int) -> "GroupWord":
        if n < 0:
            return inverse(self) ** -n
        return GroupWord(self.letters * n)

    def __invert__(self) -> "GroupWord":
        return inverse(self)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def generators(self) -> set[Gen]:
        return {g for g, _ in self.letters}

    def exponent_sum(self, pred: Callable[[Gen], bool]) -> int:
        return sum(e for g, e in self.letters if pred(g))

    def __str__(self) -> str:
        return render_word(self)


IDENTITY = GroupWord()


def multiply(u: GroupWord, v: GroupWord) -> GroupWord:
    return GroupWord(u.letters + v.letters)


def inverse(u: GroupWord) -> GroupWord:
    return GroupWord(tuple((g, -e) for g, e in reversed(u.letters)))


def conjugate(u: GroupWord, g: GroupWord) -> GroupWord:
    """``g u g^-1``."""
    return GroupWord(g.letters + u.letters + inverse(g).letters)


def commutator(u: GroupWord, v: GroupWord) -> GroupWord:
    return GroupWord(u.letters + v.letters + inverse(u).letters + inverse(v).letters)


def product(words: Iterable[GroupWord]) -> GroupWord:
    letters: list[tuple[Gen, int]] = []
    for w in words:
        letters.extend(w.letters)
    return GroupWord(tuple(letters))


def is_freely_reduced(letters: Sequence[tuple[Gen, int]]) -> bool:
    return all(
        not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(letters, letters[1:])
    )


def render_word(w: GroupWord, name: Callable[[Gen], str] = str) -> str:
    """Render as ``a2^-1 b0 a2``; the identity renders as ``1``."""
    if not w.letters:
        return "1"
    return " ".join(name(g) + ("^-1" if e < 0 else "") for g, e in w.letters)


_TOKEN = re.compile(rb"\s*(?:([a-z])(\d*)(?:\^(-?\d+))?|(1)(?![\d^]))")


def parse_word(text: str, resolve: Callable[[str, int | None], Gen]) -> GroupWord:
    """Parse a product such as ``b^-1 c^-1 b c`` or ``a2^-1 b0 a2``.

    ``resolve(letter, arc)`` maps a component letter and optional arc index
    to a generator.  Integer exponents are accepted; ``1`` is the identity.
    """
    raw = text.encode()
    letters: list[tuple[Gen, int]] = []
    pos = 0
    raw = raw.rstrip()
    while pos < len(raw):
        m = _TOKEN.match(raw, pos)
        if m is None or m.end() == pos:
            while raw[pos:pos + 1].isspace():
                pos += 1
            raise WordSyntaxError(f"unexpected {raw[pos:pos + 8].decode(errors='replace')!r}", pos)
        if m.group(1):
            arc = int(m.group(2)) if m.group(2) else None
            exp = int(m.group(3)) if m.group(3) else 1
            letters.append((resolve(m.group(1).decode(), arc), exp))
        pos = m.end()
    return GroupWord(tuple(letters))


def random_word(generators: Sequence[Gen], length: int, rng: random.Random) -> GroupWord:
    return GroupWord(tuple((rng.choice(generators), rng.choice((1, -1))) for _ in range(length)))


def sample_lcs_element(generators: Sequence[Gen], depth: int, rng_seed: int,
                       max_length: int = 4) -> GroupWord:
    """Pseudo-random element of the ``depth``-th lower central series term.

    Depth 1 is any word; depth ``d`` is ``[u, m]`` with ``u`` random and ``m``
    drawn recursively at depth ``d - 1``.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if not generators:
        raise ValueError("need at least one generator")
    rng = random.Random(rng_seed)
    return _sample(list(generators), depth, rng, max_length)


def _sample(gens: list[Gen], depth: int, rng: random.Random, max_length: int) -> GroupWord:
    if depth == 1:
        w = IDENTITY
        while not w:
            w = random_word(gens, rng.randint(1, max_length), rng)
        return w
    # a trivial commutator is still in the subgroup; retry a few times for a nonempty one
    for _ in range(32):
        w = commutator(random_word(gens, rng.randint(1, max_length), rng),
                       _sample(gens, depth - 1, rng, max_length))
        if w or len(gens) < 2:
            return w
    return w
