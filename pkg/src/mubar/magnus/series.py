"""Truncated power series in non-commuting variables with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from ..diagram import LETTERS
from ..errors import SeriesMismatchError
from . import _kernel
from ._pykernel import key_length, powers

Monomial = tuple[int, ...]


def _pack(seq: Sequence[int], base: int) -> int:
    k = 0
    for i in seq:
        k = k * base + i + 1
    return k


def _unpack(key: int, base: int) -> Monomial:
    digits = []
    while key:
        key, d = divmod(key, base)
        digits.append(d - 1)
    return tuple(reversed(digits))


class TruncatedSeries:
    """An element of Z<<x_0..x_{k-1}>> modulo monomials of length >= ``cap``.

    Values are immutable.  ``terms`` maps index tuples to nonzero integer
    coefficients; the empty tuple is the constant term.
    """

    __slots__ = ("cap", "nvars", "_t")

    def __init__(self, cap: int, nvars: int, terms: Mapping[Sequence[int], int] | None = None):
        if cap < 1:
            raise ValueError("cap must be at least 1")
        self.cap = cap
        self.nvars = nvars
        base = nvars + 1
        t: dict[int, int] = {}
        for seq, c in (terms or {}).items():
            seq = tuple(seq)
            if len(seq) >= cap or not c:
                continue
            if any(not 0 <= i < nvars for i in seq):
                raise ValueError(f"variable index out of range in {seq}")
            k = _pack(seq, base)
            t[k] = t.get(k, 0) + c
        self._t = {k: c for k, c in t.items() if c}

    @classmethod
    def _packed(cls, cap: int, nvars: int, t: dict[int, int]) -> "TruncatedSeries":
        s = object.__new__(cls)
        s.cap = cap
        s.nvars = nvars
        s._t = t
        return s

    @classmethod
    def one(cls, cap: int, nvars: int) -> "TruncatedSeries":
        return cls._packed(cap, nvars, {0: 1})

    @classmethod
    def zero(cls, cap: int, nvars: int) -> "TruncatedSeries":
        return cls._packed(cap, nvars, {})

    @classmethod
    def variable(cls, i: int, cap: int, nvars: int) -> "TruncatedSeries":
        return cls(cap, nvars, {(i,): 1})

    @classmethod
    def one_plus_variable(cls, i: int, cap: int, nvars: int) -> "TruncatedSeries":
        return cls(cap, nvars, {(): 1, (i,): 1})

    # -- access --------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        base = self.nvars + 1
        items = [(_unpack(k, base), c) for k, c in self._t.items()]
        items.sort(key=lambda kv: (len(kv[0]), kv[0]))
        return dict(items)

    @property
    def constant(self) -> int:
        return self._t.get(0, 0)

    def coefficient(self, seq: Sequence[int]) -> int:
        seq = tuple(seq)
        if len(seq) >= self.cap:
            raise ValueError(f"monomial {seq} is at or beyond the cap {self.cap}")
        return self._t.get(_pack(seq, self.nvars + 1), 0)

    def __len__(self) -> int:
        return len(self._t)

    def __iter__(self):
        return iter(self.terms.items())

    def truncate(self, cap: int) -> "TruncatedSeries":
        if cap > self.cap:
            raise ValueError("cannot raise the cap of a truncated series")
        pw = powers(self.nvars + 1, cap)
        return TruncatedSeries._packed(cap, self.nvars,
                                       {k: c for k, c in self._t.items() if k < pw[cap]})

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "TruncatedSeries") -> None:
        if self.cap != other.cap or self.nvars != other.nvars:
            raise SeriesMismatchError(
                f"series mismatch: cap {self.cap}/{other.cap}, variables {self.nvars}/{other.nvars}"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries._packed(self.cap, self.nvars, {0: other} if other else {})
        self._check(other)
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return TruncatedSeries._packed(self.cap, self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._packed(self.cap, self.nvars, {k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return TruncatedSeries.zero(self.cap, self.nvars)
            return TruncatedSeries._packed(self.cap, self.nvars,
                                           {k: c * other for k, c in self._t.items()})
        return series_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            return series_inverse_of_one_plus(self) ** -n
        out = TruncatedSeries.one(self.cap, self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "TruncatedSeries":
        return series_inverse_of_one_plus(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TruncatedSeries._packed(self.cap, self.nvars, {0: other} if other else {})
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.cap, self.nvars, self._t) == (other.cap, other.nvars, other._t)

    def __hash__(self) -> int:
        return hash((self.cap, self.nvars, frozenset(self._t.items())))

    def __repr__(self) -> str:
        return f"TruncatedSeries(cap={self.cap}, nvars={self.nvars}, {render_series(self)!r})"

    def __str__(self) -> str:
        return render_series(self)


def series_mul(u: TruncatedSeries, v: TruncatedSeries) -> TruncatedSeries:
    u._check(v)
    return TruncatedSeries._packed(u.cap, u.nvars, _kernel.mul(u._t, v._t, u.nvars + 1, u.cap))


def series_inverse_of_one_plus(w: TruncatedSeries) -> TruncatedSeries:
    """Inverse of a series with constant term 1: ``1 - d + d^2 - ...`` where ``d = w - 1``."""
    if w.constant != 1:
        raise ValueError(f"constant term must be 1, got {w.constant}")
    d = w - 1
    s = TruncatedSeries.one(w.cap, w.nvars)
    for _ in range(w.cap - 1):
        s = 1 - d * s
    return s


def min_nonconstant_degree(s: TruncatedSeries) -> int:
    """Length of the shortest nonconstant monomial; ``s.cap`` if there is none below the cap."""
    pw = powers(s.nvars + 1, s.cap)
    lengths = [key_length(k, pw) for k in s._t if k]
    return min(lengths) if lengths else s.cap


def variable_names(nvars: int, names: Sequence[str] | None = None) -> list[str]:
    if names is not None:
        return list(names)
    if nvars <= len(LETTERS):
        return [f"x_{LETTERS[i]}" for i in range(nvars)]
    return [f"x_{i}" for i in range(nvars)]


def render_series(s: TruncatedSeries, names: Sequence[str] | None = None) -> str:
    """Render as ``1 + 2*x_a + x_a.x_a``; monomials are dot-separated and ordered by degree."""
    names = variable_names(s.nvars, names)
    parts: list[str] = []
    for seq, c in s.terms.items():
        mono = ".".join(names[i] for i in seq)
        if not seq:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def monomials(nvars: int, max_length: int, min_length: int = 1) -> Iterable[Monomial]:
    """All index sequences with ``min_length <= len < max_length`` in graded lexicographic order."""
    from itertools import product

    for s in range(min_length, max_length):
        yield from product(range(nvars), repeat=s)
