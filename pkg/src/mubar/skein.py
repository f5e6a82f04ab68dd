"""Skein relations for mu at a marked classical crossing of a braid.

Braids are read as string links: strand ``s`` (named by its top position)
carries the top meridian ``t_s`` and every position's current meridian is a
conjugate ``g t_k g^-1``.  A strand's longitude is the product of the
meridians it passes under, latest first, so it matches the Wirtinger
longitude of a pure braid closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .diagram import BraidWord, Letter, close_braid, component_letter
from .errors import InputError
from .freegroup import IDENTITY, GroupWord
from .magnus import TruncatedSeries, monomials, psi_word
from .milnor import mu_table


class Strand(NamedTuple):
    index: int

    def __str__(self) -> str:
        return component_letter(self.index)


def _t(s: int) -> GroupWord:
    return GroupWord.gen(Strand(s))


class _Factor(NamedTuple):
    letter: int
    conj: GroupWord   # g, so the over meridian is g t_k g^-1
    k: int
    sign: int


def _walk(b: BraidWord) -> list[list[_Factor]]:
    """Under-passage factors of each strand in top-to-bottom order."""
    pos = list(range(b.strands))
    conj = [IDENTITY] * b.strands
    factors: list[list[_Factor]] = [[] for _ in range(b.strands)]
    for n, letter in enumerate(b.letters):
        i = letter.index - 1
        left, right = pos[i], pos[i + 1]
        if letter.classical:
            over, under, sign = (left, right, 1) if letter.kind == "s" else (right, left, -1)
            g = conj[over]
            factors[under].append(_Factor(n, g, over, sign))
            r = g * _t(over) ** sign * ~g
            conj[under] = r * conj[under]
        pos[i], pos[i + 1] = right, left
    return factors


def _word(f: _Factor) -> GroupWord:
    return f.conj * _t(f.k) ** f.sign * ~f.conj


def strand_longitudes(b: BraidWord) -> list[GroupWord]:
    out = []
    for fs in _walk(b):
        w = IDENTITY
        for f in fs:
            w = _word(f) * w
        out.append(w)
    return out


@dataclass(frozen=True)
class MarkedBraid:
    braid: BraidWord
    mark: int

    def __post_init__(self):
        if not 0 <= self.mark < len(self.braid.letters):
            raise InputError(f"mark {self.mark} is outside the braid word")
        if not self.braid.letters[self.mark].classical:
            raise InputError(f"letter {self.mark} ({self.braid.letters[self.mark]}) is virtual")

    @property
    def sign(self) -> int:
        return 1 if self.braid.letters[self.mark].kind == "s" else -1

    @property
    def case(self) -> int:
        return 1 if self.sign > 0 else 2

    def switched(self) -> "MarkedBraid":
        letters = list(self.braid.letters)
        old = letters[self.mark]
        letters[self.mark] = Letter("S" if old.kind == "s" else "s", old.index)
        return MarkedBraid(BraidWord(self.braid.strands, tuple(letters)), self.mark)

    def positive(self) -> "MarkedBraid":
        return self if self.sign > 0 else self.switched()


class Variants(NamedTuple):
    plus: GroupWord
    minus: GroupWord
    zero: GroupWord
    infinity: GroupWord
    over: int
    under: int
    case: int


def variants(mb: MarkedBraid) -> Variants:
    """The four skein words at the mark.

    The under strand's longitude factors as ``v (g t_k^e g^-1) w`` at the
    marked crossing, giving ``l0 = v g`` and ``l_inf = g^-1 w``.  For a
    positive mark (case 1) the longitude is ``l+`` and ``l- = v w``; for a
    negative mark (case 2) it is ``l-`` and ``l+ = v w``.
    """
    walk = _walk(mb.braid)
    for under, fs in enumerate(walk):
        for j, f in enumerate(fs):
            if f.letter == mb.mark:
                break
        else:
            continue
        break
    else:  # pragma: no cover - a classical letter always has an under strand
        raise InputError(f"mark {mb.mark} has no under-passage")
    v = IDENTITY
    for f in fs[j + 1:]:
        v = _word(f) * v
    w = IDENTITY
    for f in fs[:j]:
        w = _word(f) * w
    g = f.conj
    actual = v * _word(f) * w
    return Variants(
        plus=actual if f.sign > 0 else v * w,
        minus=v * w if f.sign > 0 else actual,
        zero=v * g,
        infinity=~g * w,
        over=f.k,
        under=under,
        case=mb.case,
    )


class SkeinCheck(NamedTuple):
    family: str
    sequence: tuple[int, ...]
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        seq = ",".join(component_letter(i) for i in self.sequence)
        return f"{status} lhs={self.lhs} rhs={self.rhs} family={self.family} J={seq}"


@dataclass
class SkeinReport:
    marked: MarkedBraid
    variants: Variants
    checks: list[SkeinCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        v = self.variants
        head = (f"# mark={self.marked.mark} case={v.case} over={component_letter(v.over)} "
                f"under={component_letter(v.under)}")
        return "\n".join([head, *(str(c) for c in self.checks)])


def _strand_map(strands: int, cap: int) -> dict[Strand, TruncatedSeries]:
    return {Strand(s): TruncatedSeries.one_plus_variable(s, cap, strands) for s in range(strands)}


def family_of(seq: tuple[int, ...], k: int) -> str:
    p = seq.index(k)
    if len(seq) == 1:
        return "base"
    if p == len(seq) - 1:
        return "terminal"
    if p == 0:
        return "leading"
    return "interior"


def check_skein(mb: MarkedBraid, n: int = 2) -> SkeinReport:
    """Compare mu(J, l+) - mu(J, l-) with the split product over l0 and l_inf.

    Every sequence shorter than ``n`` containing the over strand's index
    exactly once is checked.
    """
    if n < 2:
        raise ValueError("cap must be at least 2")
    var = variants(mb)
    m = _strand_map(mb.braid.strands, n)
    diff = psi_word(var.plus, m) - psi_word(var.minus, m)
    zero = psi_word(var.zero, m)
    inf = psi_word(var.infinity, m)
    k = var.over
    checks = []
    for seq in monomials(mb.braid.strands, n):
        if seq.count(k) != 1:
            continue
        p = seq.index(k)
        head, tail = seq[:p], seq[p + 1:]
        rhs = (zero.coefficient(head) if head else zero.constant) * (
            inf.coefficient(tail) if tail else inf.constant)
        checks.append(SkeinCheck(family_of(seq, k), seq, diff.coefficient(seq), rhs))
    return SkeinReport(mb, var, checks)


class ParityCheck(NamedTuple):
    component: int
    mu_plus: int
    mu_minus: int

    @property
    def passed(self) -> bool:
        return (self.mu_plus - self.mu_minus) % 2 == 0

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        i = component_letter(self.component)
        return f"{status} mu({i},w_{i}+)={self.mu_plus} mu({i},w_{i}-)={self.mu_minus} family=parity"


def self_crossing_parity(mb: MarkedBraid) -> ParityCheck | None:
    """Parity of mu(i, w_i) across the switch, or None if the mark joins two components."""
    comps = mb.braid.strand_components()
    letter = mb.braid.letters[mb.mark]
    # strands at the marked letter
    pos = list(range(mb.braid.strands))
    for x in mb.braid.letters[:mb.mark]:
        i = x.index - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    left, right = pos[letter.index - 1], pos[letter.index]
    if comps[left] != comps[right]:
        return None
    i = comps[left]
    plus = mb.positive()
    minus = plus.switched()
    tp = mu_table(close_braid(plus.braid), 2)
    tm = mu_table(close_braid(minus.braid), 2)
    return ParityCheck(i, tp.mu((i,), i), tm.mu((i,), i))
