"""Reference implementations written independently of the package internals."""

from __future__ import annotations

import random


def naive_mul(a: dict, b: dict, cap: int) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if len(ma) + len(mb) < cap:
                m = ma + mb
                out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def naive_psi(letters, var_of, cap: int) -> dict:
    """Magnus image of a word given as ``(generator, +-1)`` pairs."""
    out = {(): 1}
    for g, e in letters:
        v = var_of(g)
        if e > 0:
            f = {(): 1, (v,): 1}
        else:
            f = {(v,) * k: (-1) ** k for k in range(cap)}
        out = naive_mul(out, f, cap)
    return out


def random_braid_text(rng: random.Random, strands: int, max_len: int,
                      virtual: bool = True) -> str:
    kinds = "sSv" if virtual else "sS"
    n = rng.randint(0, max_len)
    return " ".join(f"{rng.choice(kinds)}{rng.randint(1, strands - 1)}" for _ in range(n))


def random_pure_braid_text(rng: random.Random, strands: int, max_len: int) -> str:
    """Random classical word followed by a sorting suffix that makes it pure."""
    letters = [f"{rng.choice('sS')}{rng.randint(1, strands - 1)}"
               for _ in range(rng.randint(0, max_len))]
    pos = list(range(strands))
    for tok in letters:
        i = int(tok[1:]) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    changed = True
    while changed:
        changed = False
        for i in range(strands - 1):
            if pos[i] > pos[i + 1]:
                pos[i], pos[i + 1] = pos[i + 1], pos[i]
                letters.append(f"{rng.choice('sS')}{i + 1}")
                changed = True
    return " ".join(letters)


def braid_strand_data(text: str, strands: int):
    """Component of each strand and ordered linking numbers, straight from the word.

    ``link[b][a]`` sums the signs of letters where a strand of ``a`` passes
    under a strand of ``b``.
    """
    toks = text.split()
    pos = list(range(strands))
    crossings = []
    for tok in toks:
        kind, i = tok[0], int(tok[1:]) - 1
        left, right = pos[i], pos[i + 1]
        if kind == "s":
            crossings.append((left, right, 1))
        elif kind == "S":
            crossings.append((right, left, -1))
        pos[i], pos[i + 1] = right, left
    # strand at top position s continues to top position nxt[s]
    nxt = {pos[p]: p for p in range(strands)}
    comp = {}
    k = 0
    for s in range(strands):
        if s in comp:
            continue
        t = s
        while t not in comp:
            comp[t] = k
            t = nxt[t]
        k += 1
    link = [[0] * k for _ in range(k)]
    for over, under, sign in crossings:
        link[comp[over]][comp[under]] += sign
    return comp, k, link


def artin_longitudes(text: str, strands: int):
    """Longitude words of a braid's strands in the top meridians ``t_0 .. t_{n-1}``.

    Each position carries the word of its current meridian; a strand passing
    under picks up the over meridian (to the sign) on the left of its
    longitude and is conjugated by it.
    """
    pos = list(range(strands))
    label = [[(s, 1)] for s in range(strands)]
    longs = [[] for _ in range(strands)]

    def inv(w):
        return [(g, -e) for g, e in reversed(w)]

    def red(w):
        out = []
        for x in w:
            if out and out[-1][0] == x[0] and out[-1][1] == -x[1]:
                out.pop()
            else:
                out.append(x)
        return out

    for tok in text.split():
        kind, i = tok[0], int(tok[1:]) - 1
        left, right = pos[i], pos[i + 1]
        if kind != "v":
            over, under, e = (left, right, 1) if kind == "s" else (right, left, -1)
            r = label[over] if e > 0 else inv(label[over])
            label[under] = red(r + label[under] + inv(r))
            longs[under] = red(r + longs[under])
        pos[i], pos[i + 1] = right, left
    return longs
