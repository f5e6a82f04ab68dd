"""Reidemeister, forbidden and self-crossing moves on signed Gauss codes.

Sites never wrap around a component's base point: an "adjacent pair" means
positions ``p`` and ``p + 1`` of the stored sequence.  Virtual moves leave the
Gauss code untouched and appear in logs as the no-op ``V``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .diagram import OVER, UNDER, Diagram, Passage
from .errors import InputError, MoveError

KINDS = ("R1+", "R1-", "R2+", "R2-", "R3", "Forbidden", "SelfCrossingChange", "V")
SKIP = "SKIP"

_ISOTOPY = ("R1+", "R1-", "R2+", "R2-", "R3", "V")
CLASSES = {
    "isotopy": _ISOTOPY,
    "welded": _ISOTOPY + ("Forbidden",),
    "homotopy": _ISOTOPY + ("SelfCrossingChange",),
    "welded-homotopy": _ISOTOPY + ("Forbidden", "SelfCrossingChange"),
}

# random candidates tried for the kinds that create crossings
_INSERT_TRIES = 48


@dataclass(frozen=True)
class Move:
    kind: str
    site: dict = field(default_factory=dict)

    def __str__(self) -> str:
        return " ".join([self.kind, *(f"{k}={v}" for k, v in self.site.items())])


def _normalize_kind(kind: str) -> str:
    kind = kind.replace("−", "-")
    if kind not in KINDS and kind != SKIP:
        raise InputError(f"unknown move kind {kind!r}")
    return kind


def _comps(d: Diagram) -> list[list[Passage]]:
    return [list(c) for c in d.components]


def fresh_id(d: Diagram) -> int:
    return max(d.crossing_ids(), default=0) + 1


def _find(comps: list[list[Passage]], crossing: int, kind: str) -> tuple[int, int]:
    for i, comp in enumerate(comps):
        for j, p in enumerate(comp):
            if p.crossing == crossing and p.kind == kind:
                return i, j
    raise MoveError(f"crossing {crossing} has no {kind} passage")


def _next(comps: list[list[Passage]], loc: tuple[int, int]) -> Passage | None:
    i, j = loc
    return comps[i][j + 1] if j + 1 < len(comps[i]) else None


def _prev(comps: list[list[Passage]], loc: tuple[int, int]) -> Passage | None:
    i, j = loc
    return comps[i][j - 1] if j > 0 else None


def _check_gap(comps: list[list[Passage]], comp: int, pos: int) -> None:
    if not 0 <= comp < len(comps):
        raise MoveError(f"component {comp} out of range")
    if not 0 <= pos <= len(comps[comp]):
        raise MoveError(f"gap {pos} out of range for component {comp}")


def _check_pair(comps: list[list[Passage]], comp: int, pos: int) -> tuple[Passage, Passage]:
    if not 0 <= comp < len(comps):
        raise MoveError(f"component {comp} out of range")
    if not 0 <= pos < len(comps[comp]) - 1:
        raise MoveError(f"no adjacent pair at component {comp} position {pos}")
    return comps[comp][pos], comps[comp][pos + 1]


def _new_ids(d: Diagram, site: dict, names: Sequence[str]) -> list[int]:
    used = set(d.crossing_ids())
    nxt = fresh_id(d)
    out = []
    for name in names:
        if name in site:
            cid = int(site[name])
        else:
            while nxt in used or nxt in out:
                nxt += 1
            cid = nxt
        if cid in used or cid in out or cid < 1:
            raise MoveError(f"crossing id {cid} is not fresh")
        out.append(cid)
    return out


def _r3_shape(comps: list[list[Passage]], x: int, y: int, z: int):
    """Pairs ``[(comp, pos), ...]`` for an R3 triangle on crossings x, y, z, or None."""
    if len({x, y, z}) < 3:
        return None
    try:
        ox, ux = _find(comps, x, OVER), _find(comps, x, UNDER)
        oy, uy = _find(comps, y, OVER), _find(comps, y, UNDER)
        oz, uz = _find(comps, z, OVER), _find(comps, z, UNDER)
    except MoveError:
        return None
    signs = {comps[i][j].sign for i, j in (ox, oy, oz)}
    if len(signs) != 1:
        return None

    def follows(a, b):
        return a[0] == b[0] and a[1] + 1 == b[1]

    # shape A: (Ox Oy) (Ux Oz) (Uy Uz)
    if follows(ox, oy) and follows(ux, oz) and follows(uy, uz):
        return [ox, ux, uy]
    # shape B: (Oy Oz) (Ox Uz) (Ux Uy)
    if follows(oy, oz) and follows(ox, uz) and follows(ux, uy):
        return [oy, ox, ux]
    return None


def _apply(d: Diagram, m: Move) -> tuple[Diagram, Move]:
    kind = _normalize_kind(m.kind)
    site = dict(m.site)
    comps = _comps(d)
    try:
        if kind in ("V", SKIP):
            return d, Move(kind, site)

        if kind == "R1+":
            c, pos = int(site["comp"]), int(site["pos"])
            sign = int(site.get("sign", 1))
            order = str(site.get("order", "OU"))
            if sign not in (1, -1) or order not in ("OU", "UO"):
                raise MoveError("R1+ needs sign=+-1 and order=OU|UO")
            _check_gap(comps, c, pos)
            (cid,) = _new_ids(d, site, ["id"])
            pair = [Passage(k, cid, sign) for k in order]
            comps[c][pos:pos] = pair
            site.update(comp=c, pos=pos, order=order, sign=sign, id=cid)

        elif kind == "R1-":
            c, pos = int(site["comp"]), int(site["pos"])
            p, q = _check_pair(comps, c, pos)
            if p.crossing != q.crossing:
                raise MoveError(f"R1- site {c}:{pos} is not a kink ({p} {q})")
            del comps[c][pos:pos + 2]

        elif kind == "R2+":
            oc, op = int(site["over_comp"]), int(site["over_pos"])
            uc, up = int(site["under_comp"]), int(site["under_pos"])
            parallel = int(site.get("parallel", 1))
            sign = int(site.get("sign", 1))
            if sign not in (1, -1):
                raise MoveError("R2+ needs sign=+-1")
            _check_gap(comps, oc, op)
            _check_gap(comps, uc, up)
            if oc == uc and op == up:
                raise MoveError("R2+ needs distinct gaps on a single component")
            x, y = _new_ids(d, site, ["x", "y"])
            over = [Passage(OVER, x, sign), Passage(OVER, y, -sign)]
            under = [Passage(UNDER, x, sign), Passage(UNDER, y, -sign)]
            if not parallel:
                under.reverse()
            inserts = sorted([(oc, op, over), (uc, up, under)], key=lambda t: (t[0], t[1]),
                             reverse=True)
            for c, pos, seg in inserts:
                comps[c][pos:pos] = seg
            site.update(over_comp=oc, over_pos=op, under_comp=uc, under_pos=up,
                        parallel=1 if parallel else 0, sign=sign, x=x, y=y)

        elif kind == "R2-":
            oc, op = int(site["over_comp"]), int(site["over_pos"])
            p, q = _check_pair(comps, oc, op)
            if p.kind != OVER or q.kind != OVER or p.sign != -q.sign:
                raise MoveError(f"R2- site {oc}:{op} is not an over pair of opposite signs")
            ux = _find(comps, p.crossing, UNDER)
            uy = _find(comps, q.crossing, UNDER)
            if ux[0] != uy[0] or abs(ux[1] - uy[1]) != 1:
                raise MoveError(f"R2- site {oc}:{op}: under passages are not adjacent")
            lo = min(ux[1], uy[1])
            spans = sorted([(oc, op), (ux[0], lo)], reverse=True)
            for c, pos in spans:
                del comps[c][pos:pos + 2]

        elif kind == "R3":
            x, y, z = int(site["x"]), int(site["y"]), int(site["z"])
            pairs = _r3_shape(comps, x, y, z)
            if pairs is None:
                raise MoveError(f"crossings {x},{y},{z} do not form an R3 triangle")
            for c, pos in pairs:
                comps[c][pos], comps[c][pos + 1] = comps[c][pos + 1], comps[c][pos]

        elif kind == "Forbidden":
            c, pos = int(site["comp"]), int(site["pos"])
            p, q = _check_pair(comps, c, pos)
            if p.kind != OVER or q.kind != OVER:
                raise MoveError(f"Forbidden site {c}:{pos} is not two over passages ({p} {q})")
            comps[c][pos], comps[c][pos + 1] = q, p

        elif kind == "SelfCrossingChange":
            cid = int(site["id"])
            oi, oj = _find(comps, cid, OVER)
            ui, uj = _find(comps, cid, UNDER)
            if oi != ui:
                raise MoveError(f"crossing {cid} joins components {oi} and {ui}")
            s = comps[oi][oj].sign
            comps[oi][oj] = Passage(UNDER, cid, -s)
            comps[ui][uj] = Passage(OVER, cid, -s)
    except KeyError as exc:
        raise MoveError(f"{kind} is missing site parameter {exc.args[0]!r}") from None
    except ValueError as exc:
        if isinstance(exc, MoveError):
            raise
        raise MoveError(f"{kind}: bad site parameter ({exc})") from None
    return Diagram(tuple(tuple(c) for c in comps)), Move(kind, site)


def apply(d: Diagram, m: Move) -> Diagram:
    """Rewrite ``d`` by ``m``; raises :class:`MoveError` if the site does not fit."""
    return _apply(d, m)[0]


# -- base point safety ------------------------------------------------------


def over_classes(d: Diagram) -> dict[int, str]:
    """``top``, ``inner`` or ``bottom`` for each over passage, relative to its component's
    under passages; ``base`` when the component has none."""
    out = {}
    for comp in d.components:
        unders = [j for j, p in enumerate(comp) if p.kind == UNDER]
        for j, p in enumerate(comp):
            if p.kind != OVER:
                continue
            if not unders:
                out[p.crossing] = "base"
            elif j < unders[0]:
                out[p.crossing] = "top"
            elif j > unders[-1]:
                out[p.crossing] = "bottom"
            else:
                out[p.crossing] = "inner"
    return out


def is_base_safe(before: Diagram, after: Diagram) -> bool:
    """True if no surviving over passage moves into or out of the stretch after its
    component's last under passage.

    Over passages there sit on the base arc by closure, so shifting them
    across that boundary changes raw mu coefficients though not mu-bar.
    """
    a, b = over_classes(before), over_classes(after)
    for cid, cls in a.items():
        new = b.get(cid)
        if new is None or "base" in (cls, new):
            continue
        if (cls == "bottom") != (new == "bottom"):
            return False
    return True


# -- site enumeration -------------------------------------------------------


def sites(d: Diagram, kind: str) -> list[Move]:
    """Every valid site of a removal or rearrangement kind, in a fixed order."""
    kind = _normalize_kind(kind)
    comps = _comps(d)
    out: list[Move] = []
    if kind == "R1-":
        for c, comp in enumerate(comps):
            for pos in range(len(comp) - 1):
                if comp[pos].crossing == comp[pos + 1].crossing:
                    out.append(Move(kind, {"comp": c, "pos": pos}))
    elif kind == "R2-":
        for c, comp in enumerate(comps):
            for pos in range(len(comp) - 1):
                p, q = comp[pos], comp[pos + 1]
                if p.kind == OVER == q.kind and p.sign == -q.sign:
                    ux = _find(comps, p.crossing, UNDER)
                    uy = _find(comps, q.crossing, UNDER)
                    if ux[0] == uy[0] and abs(ux[1] - uy[1]) == 1:
                        out.append(Move(kind, {"over_comp": c, "over_pos": pos}))
    elif kind == "R3":
        seen = set()
        for comp in comps:
            for pos in range(len(comp) - 1):
                p, q = comp[pos], comp[pos + 1]
                if not (p.kind == OVER == q.kind):
                    continue
                # as the top pair of shape A
                nx = _next(comps, _find(comps, p.crossing, UNDER))
                if nx is not None and nx.kind == OVER:
                    cand = (p.crossing, q.crossing, nx.crossing)
                    if cand not in seen and _r3_shape(comps, *cand):
                        seen.add(cand)
                        out.append(Move(kind, dict(zip("xyz", cand))))
                # as the top pair of shape B
                pv = _prev(comps, _find(comps, q.crossing, UNDER))
                if pv is not None and pv.kind == OVER:
                    cand = (pv.crossing, p.crossing, q.crossing)
                    if cand not in seen and _r3_shape(comps, *cand):
                        seen.add(cand)
                        out.append(Move(kind, dict(zip("xyz", cand))))
    elif kind == "Forbidden":
        for c, comp in enumerate(comps):
            for pos in range(len(comp) - 1):
                if comp[pos].kind == OVER == comp[pos + 1].kind:
                    out.append(Move(kind, {"comp": c, "pos": pos}))
    elif kind == "SelfCrossingChange":
        for ref in d.crossings().values():
            if ref.over_component == ref.under_component:
                out.append(Move(kind, {"id": ref.id}))
    elif kind == "V":
        out.append(Move(kind, {}))
    else:
        raise ValueError(f"{kind} sites are sampled, not enumerated")
    return out


def _random_insertion(d: Diagram, kind: str, rng: random.Random, next_id: int) -> Move:
    k = d.n_components
    if kind == "R1+":
        c = rng.randrange(k)
        return Move(kind, {"comp": c, "pos": rng.randrange(len(d.components[c]) + 1),
                           "order": rng.choice(("OU", "UO")), "sign": rng.choice((1, -1)),
                           "id": next_id})
    oc, uc = rng.randrange(k), rng.randrange(k)
    return Move(kind, {"over_comp": oc, "over_pos": rng.randrange(len(d.components[oc]) + 1),
                       "under_comp": uc, "under_pos": rng.randrange(len(d.components[uc]) + 1),
                       "parallel": rng.randrange(2), "sign": rng.choice((1, -1)),
                       "x": next_id, "y": next_id + 1})


def fuzz(d: Diagram, cls: str = "isotopy", steps: int = 10, seed: int = 0,
         kinds: Iterable[str] | None = None, base_safe: bool = True
         ) -> tuple[Diagram, list[Move]]:
    """Apply ``steps`` random moves drawn from a move class.

    Each step samples a kind uniformly, then a site of that kind; when no
    site applies the step is logged as ``SKIP``.  With ``base_safe`` only
    moves accepted by :func:`is_base_safe` are used.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if kinds is None:
        if cls not in CLASSES:
            raise InputError(f"unknown move class {cls!r}; choose from {sorted(CLASSES)}")
        pool = list(CLASSES[cls])
    else:
        pool = [_normalize_kind(k) for k in kinds]
    rng = random.Random(seed)
    counter = fresh_id(d)
    log: list[Move] = []
    for _ in range(steps):
        kind = rng.choice(pool)
        chosen = None
        if kind in ("R1+", "R2+"):
            for _ in range(_INSERT_TRIES):
                cand = _random_insertion(d, kind, rng, counter)
                try:
                    new, done = _apply(d, cand)
                except MoveError:
                    continue
                if not base_safe or is_base_safe(d, new):
                    chosen = (new, done)
                    break
        else:
            options = sites(d, kind)
            rng.shuffle(options)
            for cand in options:
                new, done = _apply(d, cand)
                if not base_safe or is_base_safe(d, new):
                    chosen = (new, done)
                    break
        if chosen is None:
            log.append(Move(SKIP, {"kind": kind}))
            continue
        d, done = chosen
        log.append(done)
        counter = max(counter, fresh_id(d))
    return d, log


# -- logs -------------------------------------------------------------------


def serialize_log(log: Iterable[Move]) -> str:
    return "".join(f"{m}\n" for m in log)


def parse_log(text: str) -> list[Move]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *params = line.split()
        site: dict = {}
        for item in params:
            key, sep, val = item.partition("=")
            if not sep or not key:
                raise InputError(f"line {lineno}: expected key=value, got {item!r}")
            try:
                site[key] = int(val)
            except ValueError:
                site[key] = val
        try:
            out.append(Move(_normalize_kind(kind), site))
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    return out


def replay(d: Diagram, log: Iterable[Move]) -> Diagram:
    for m in log:
        d = apply(d, m)
    return d
