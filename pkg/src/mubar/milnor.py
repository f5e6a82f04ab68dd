"""Milnor mu and mu-bar tables computed from longitude series."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, NamedTuple, Sequence

from .diagram import Diagram, component_index, component_letter, linking_number
from .errors import InputError, WordSyntaxError
from .freegroup import GroupWord, parse_word
from .magnus import TruncatedSeries, base_meridian_map, monomials, psi_word, rho_fixpoint
from .wirtinger import ArcGen, presentation

DELTA_MODES = ("subsequence", "cyclic")


class MuEntry(NamedTuple):
    target: int
    sequence: tuple[int, ...]
    mu: int
    delta: int
    mubar: int

    @property
    def repeated(self) -> bool:
        return len(set(self.sequence)) < len(self.sequence)

    @property
    def contains_target(self) -> bool:
        return self.target in self.sequence

    @property
    def flags(self) -> list[str]:
        out = []
        if self.repeated:
            out.append("repeated")
        if self.contains_target:
            out.append("target")
        if len(self.sequence) >= 2:
            # raw mu of length >= 2 depends on the base point choice
            out.append("basepoint")
        return out

    def mubar_agrees(self, value: int) -> bool:
        """True when ``value`` lies in the residue class of this entry's mu-bar."""
        if self.delta:
            return (value - self.mubar) % self.delta == 0
        return value == self.mubar


def _seq_key(seq: str | Sequence[int | str]) -> tuple[int, ...]:
    if isinstance(seq, str):
        seq = [c for c in seq if c not in ", "]
    return tuple(component_index(x) if isinstance(x, str) else int(x) for x in seq)


def _target_key(i: int | str) -> int:
    return component_index(i) if isinstance(i, str) else i


def _delta_subsequence(mu: Mapping[tuple[int, ...], int], seq: tuple[int, ...]) -> int:
    g = 0
    for r in range(1, len(seq)):
        for idx in combinations(range(len(seq)), r):
            g = gcd(g, mu[tuple(seq[j] for j in idx)])
    return g


def _delta_cyclic(mus: Sequence[Mapping[tuple[int, ...], int]], seq: tuple[int, ...],
                  target: int) -> int:
    full = seq + (target,)
    g = 0
    for r in range(2, len(full)):
        for idx in combinations(range(len(full)), r):
            sub = tuple(full[j] for j in idx)
            for rot in range(len(sub)):
                cyc = sub[rot:] + sub[:rot]
                g = gcd(g, mus[cyc[-1]][cyc[:-1]])
    return g


@dataclass
class MuTable:
    cap: int
    n_components: int
    series: tuple[TruncatedSeries, ...]
    entries: dict[tuple[int, tuple[int, ...]], MuEntry]
    delta_mode: str = "subsequence"

    def entry(self, seq, target) -> MuEntry:
        return self.entries[(_target_key(target), _seq_key(seq))]

    def mu(self, seq, target) -> int:
        return self.entry(seq, target).mu

    def delta(self, seq, target) -> int:
        return self.entry(seq, target).delta

    def mubar(self, seq, target) -> int:
        return self.entry(seq, target).mubar

    def rows(self) -> list[MuEntry]:
        return [self.entries[k] for k in sorted(
            self.entries, key=lambda k: (k[0], len(k[1]), k[1]))]

    def distinct_rows(self) -> list[MuEntry]:
        """Rows with pairwise distinct indices not containing the target."""
        return [e for e in self.rows() if not e.repeated and not e.contains_target]

    def linking_slice(self) -> list[list[int]]:
        """``m[b][a] = mu(b, w_a)``."""
        k = self.n_components
        return [[self.mu((b,), a) for a in range(k)] for b in range(k)]

    def to_records(self) -> list[dict]:
        return [
            {
                "target": component_letter(e.target),
                "sequence": [component_letter(i) for i in e.sequence],
                "mu": e.mu,
                "delta": e.delta,
                "mubar": e.mubar,
                "flags": e.flags,
            }
            for e in self.rows()
        ]

    def render(self, mubar_only: bool = False) -> str:
        rows = self.distinct_rows() if mubar_only else self.rows()
        if mubar_only:
            header = ("J", "i", "mubar", "mod")
            body = [(",".join(component_letter(x) for x in e.sequence), component_letter(e.target),
                     str(e.mubar), str(e.delta)) for e in rows]
        else:
            header = ("J", "i", "mu", "delta", "mubar", "flags")
            body = [(",".join(component_letter(x) for x in e.sequence), component_letter(e.target),
                     str(e.mu), str(e.delta), str(e.mubar), ",".join(e.flags))
                    for e in rows]
        widths = [max(len(r[c]) for r in [header, *body]) for c in range(len(header))]
        lines = ["  ".join(col.ljust(w) for col, w in zip(r, widths)).rstrip()
                 for r in [header, *body]]
        return "\n".join(lines)


def _build(series: Sequence[TruncatedSeries], cap: int, delta_mode: str) -> MuTable:
    if delta_mode not in DELTA_MODES:
        raise ValueError(f"delta_mode must be one of {DELTA_MODES}")
    k = len(series)
    mus = []
    for s in series:
        mu = {(): s.constant}
        for seq in monomials(k, cap):
            mu[seq] = s.coefficient(seq)
        mus.append(mu)
    entries = {}
    for i in range(k):
        for seq in monomials(k, cap):
            mu = mus[i][seq]
            if delta_mode == "subsequence":
                delta = _delta_subsequence(mus[i], seq)
            else:
                delta = _delta_cyclic(mus, seq, i)
            if i in seq:
                mubar = 0
            elif delta:
                mubar = mu % delta
            else:
                mubar = mu
            entries[(i, seq)] = MuEntry(i, seq, mu, delta, mubar)
    return MuTable(cap, k, tuple(series), entries, delta_mode)


def longitude_series(d: Diagram, n: int) -> tuple[TruncatedSeries, ...]:
    p = presentation(d)
    arcs = rho_fixpoint(p, n)
    return tuple(psi_word(w, arcs) for w in p.longitudes)


def mu_table(d: Diagram, n: int | None = None, delta_mode: str = "subsequence") -> MuTable:
    """mu, Delta and mu-bar for every index sequence shorter than ``n`` (default k + 1)."""
    if n is None:
        n = d.n_components + 1
    if n < 2:
        raise ValueError("cap must be at least 2")
    return _build(longitude_series(d, n), n, delta_mode)


def mu_from_longitudes(longitudes: Sequence[GroupWord] | Mapping[int | str, GroupWord],
                       n: int | None = None, delta_mode: str = "subsequence") -> MuTable:
    """Same as :func:`mu_table` for longitudes already written in base meridians."""
    if isinstance(longitudes, Mapping):
        keyed = {_target_key(k): w for k, w in longitudes.items()}
        if sorted(keyed) != list(range(len(keyed))):
            raise InputError("longitudes must be given for components a, b, c, ... without gaps")
        longitudes = [keyed[i] for i in range(len(keyed))]
    k = len(longitudes)
    if n is None:
        n = k + 1
    if n < 2:
        raise ValueError("cap must be at least 2")
    base = base_meridian_map(k, n)
    for w in longitudes:
        for g in w.generators():
            if g not in base:
                raise InputError(f"unknown generator {g} in longitude")
    return _build([psi_word(w, base) for w in longitudes], n, delta_mode)


def _base_resolver(k: int | None = None):
    def resolve(letter: str, arc: int | None):
        i = component_index(letter)
        if k is not None and i >= k:
            raise InputError(f"unknown generator letter {letter!r}")
        if arc not in (None, 0):
            raise InputError(f"longitude words use base meridians only, got {letter}{arc}")
        return ArcGen(i, 0)
    return resolve


_LINE = re.compile(r"\s*w_([a-z])\s*=(.*)")


def parse_longitudes(text: str) -> list[GroupWord]:
    """Parse lines ``w_<letter> = <word>``; blank lines and ``#`` comments are skipped."""
    found: dict[int, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        if not line.strip():
            continue
        m = _LINE.fullmatch(line)
        if m is None:
            raise InputError(f"line {lineno}: expected 'w_<letter> = <word>'")
        i = component_index(m.group(1))
        if i in found:
            raise InputError(f"line {lineno}: duplicate longitude w_{m.group(1)}")
        found[i] = m.group(2)
    if sorted(found) != list(range(len(found))) or not found:
        raise InputError("longitudes must be given for components a, b, c, ... without gaps")
    resolve = _base_resolver(len(found))
    out = []
    for i in range(len(found)):
        try:
            out.append(parse_word(found[i], resolve))
        except WordSyntaxError as exc:
            raise InputError(f"w_{component_letter(i)}: {exc}") from exc
    return out


def reduce_mod_D(t: MuTable, target: int | str) -> TruncatedSeries:
    """Image of the target's longitude series in the quotient by the ideal D.

    Monomials containing the target, with a coefficient divisible by Delta,
    or with too many distinct indices are killed; survivors are reduced
    mod Delta.
    """
    i = _target_key(target)
    s = t.series[i]
    kept = {(): s.constant}
    for seq, c in s.terms.items():
        if not seq or i in seq or len(set(seq)) >= t.cap:
            continue
        delta = t.entries[(i, seq)].delta
        r = c % delta if delta else c
        if r:
            kept[seq] = r
    return TruncatedSeries(s.cap, s.nvars, kept)


def classicality_obstruction(t: MuTable) -> list[tuple[int, int]]:
    """Components whose self-coefficient mu(i, w_i) is nonzero."""
    return [(i, t.mu((i,), i)) for i in range(t.n_components) if t.mu((i,), i)]


class LinkCheck(NamedTuple):
    over: int
    under: int
    mu: int
    link: int

    @property
    def passed(self) -> bool:
        return self.mu == self.link

    def __str__(self) -> str:
        b, a = component_letter(self.over), component_letter(self.under)
        status = "PASS" if self.passed else "FAIL"
        return f"{status} mu({b},w_{a})={self.mu} link({b},{a})={self.link}"


def linking_consistency(d: Diagram, t: MuTable) -> list[LinkCheck]:
    """Compare mu(b, w_a) with link(b, a) for every ordered pair of distinct components."""
    return [
        LinkCheck(b, a, t.mu((b,), a), linking_number(d, b, a))
        for a in range(d.n_components)
        for b in range(d.n_components)
        if a != b
    ]


def records_to_json(t: MuTable) -> str:
    return "\n".join(json.dumps(r, sort_keys=True) for r in t.to_records())


def records_from_json(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def entries_equal(t1: MuTable, t2: MuTable, rows: Iterable[MuEntry] | None = None) -> bool:
    keys = t1.entries.keys() if rows is None else [(e.target, e.sequence) for e in rows]
    return all(t1.entries[k] == t2.entries[k] for k in keys)
