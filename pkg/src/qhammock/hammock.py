"""Quasi-additive functions on the repetition quiver, by knitting.

The central recurrence: a function f on the repetition quiver is *knitted*
from a starting section and a defect map D by

    f(y) = sum of f over arrows into y  -  f(translate y)  +  D(y),

with f = 0 strictly left of the starting section.  The *defect* of any f is
recovered pointwise as  f(y) + f(τy) − Σ_{w→y} f(w),  so knitting and defect
extraction are mutually inverse; that is what makes presentations by
(generator, delta) pairs exact and cheap to compare.

Two families of knitted functions matter here:

* the hammock generator h_x: defect is the indicator of x (zero left of the
  section through x); on the section through x the values are oriented-path
  indicators, and further right they follow the mesh rule;
* the hom-counting function g_x: defect is the indicator of x plus the
  indicator of the inverse translate of the Serre shift of x; its values
  are dimensions of morphism spaces out of x, supported on the closed band
  between the sections through x and through Serre(x).

Caches are per-process dicts keyed by (quiver, vertex); entries are only
ever replaced by extensions of themselves, so racing writers are harmless.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import TooLarge
from .quiver import DynkinQuiver
from .repetition import ZVertex, check_vertex, section_through, serre, translate

__all__ = [
    "QFun",
    "hammock_fun",
    "qfun_eval",
    "qfun_window",
    "qfun_defect",
    "qfun_equal",
    "preceq",
    "dim_hom",
    "hom_values",
    "qfun_grid_tsv",
]


# ───────────────────────── presentations ─────────────────────────


class QFun:
    """A function presented as  Σ c_v · h_v  +  Σ d_z · (pointwise delta at z).

    Immutable by convention; supports ring-module arithmetic.  Equality of
    presentations is *syntactic*; use qfun_equal for equality of the
    presented functions.
    """

    __slots__ = ("gens", "deltas")

    def __init__(
        self,
        gens: Mapping[ZVertex, int] | None = None,
        deltas: Mapping[ZVertex, int] | None = None,
    ):
        self.gens: dict[ZVertex, int] = {
            ZVertex(*v): c for v, c in (gens or {}).items() if c
        }
        self.deltas: dict[ZVertex, int] = {
            ZVertex(*v): c for v, c in (deltas or {}).items() if c
        }

    def canonical(self) -> tuple:
        return (
            tuple(sorted(self.gens.items())),
            tuple(sorted(self.deltas.items())),
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QFun) and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __add__(self, other: "QFun") -> "QFun":
        g = dict(self.gens)
        for v, c in other.gens.items():
            g[v] = g.get(v, 0) + c
        d = dict(self.deltas)
        for v, c in other.deltas.items():
            d[v] = d.get(v, 0) + c
        return QFun(g, d)

    def __sub__(self, other: "QFun") -> "QFun":
        return self + other.scaled(-1)

    def scaled(self, k: int) -> "QFun":
        return QFun(
            {v: k * c for v, c in self.gens.items()},
            {v: k * c for v, c in self.deltas.items()},
        )

    def shift_deltas(self, extra: Mapping[ZVertex, int]) -> "QFun":
        d = dict(self.deltas)
        for v, c in extra.items():
            d[v] = d.get(v, 0) + c
        return QFun(self.gens, d)

    def __repr__(self) -> str:
        gs = " + ".join(f"{c}*h{tuple(v)}" for v, c in sorted(self.gens.items()))
        ds = " + ".join(f"{c}*e{tuple(v)}" for v, c in sorted(self.deltas.items()))
        return f"QFun({gs or '0'}; {ds or '0'})"

    def to_json_dict(self) -> dict:
        return {
            "gens": [[v.i, v.p, c] for v, c in sorted(self.gens.items())],
            "deltas": [[v.i, v.p, c] for v, c in sorted(self.deltas.items())],
        }


def hammock_fun(q: DynkinQuiver, x: ZVertex) -> QFun:
    """The hammock generator h_x as a presentation."""
    return QFun({check_vertex(q, x): 1}, {})


# ───────────────────────── knitting ─────────────────────────


def _knit(
    q: DynkinQuiver,
    sec: dict[int, int],
    defects: Mapping[ZVertex, int],
    horizon: int,
) -> dict[ZVertex, int]:
    """Knit values on the staircase between `sec` and slot `horizon`."""
    values: dict[ZVertex, int] = {}
    if horizon < min(sec.values()):
        return values
    for p in range(min(sec.values()), horizon + 1):
        for i in q.vertices:
            s = sec[i]
            if p < s or (p - s) % 2:
                continue
            acc = defects.get(ZVertex(i, p), 0)
            for j in q.neighbors(i):
                if p - 1 >= sec[j]:
                    acc += values.get(ZVertex(j, p - 1), 0)
            if p - 2 >= s:
                acc -= values.get(ZVertex(i, p - 2), 0)
            values[ZVertex(i, p)] = acc
    return values


# generator-value cache: (quiver, vertex) -> (horizon, values)
_HCACHE: dict[tuple, tuple[int, dict[ZVertex, int]]] = {}
# hom-function cache: (quiver, vertex) -> values on the support band
_GCACHE: dict[tuple, dict[ZVertex, int]] = {}


def _hvalue(q: DynkinQuiver, v: ZVertex, y: ZVertex) -> int:
    """Value of the hammock generator h_v at y (0 strictly left of v's section)."""
    sec = section_through(q, v)
    if y.p < sec[y.i]:
        return 0
    key = (q, v)
    cached = _HCACHE.get(key)
    if cached is None or cached[0] < y.p:
        horizon = max(y.p, v.p + 4)
        values = _knit(q, sec, {v: 1}, horizon)
        _HCACHE[key] = (horizon, values)
        return values.get(y, 0)
    return cached[1].get(y, 0)


def qfun_eval(q: DynkinQuiver, f: QFun, y: ZVertex) -> int:
    """Evaluate a presented function at one vertex."""
    y = check_vertex(q, y)
    total = f.deltas.get(y, 0)
    for v, c in f.gens.items():
        total += c * _hvalue(q, v, y)
    return total


def qfun_window(
    q: DynkinQuiver, f: QFun, p_min: int, p_max: int
) -> dict[ZVertex, int]:
    """Evaluate on every parity-valid vertex with slot in [p_min, p_max]."""
    from .repetition import window_vertices

    return {y: qfun_eval(q, f, y) for y in window_vertices(q, p_min, p_max)}


def qfun_defect(q: DynkinQuiver, f: QFun) -> dict[ZVertex, int]:
    """Defect map of the presented function, computed symbolically.

    A generator h_v contributes its own indicator; a pointwise delta at z
    contributes +1 at z, +1 at the inverse translate of z, and -1 at every
    head of an arrow out of z.
    """
    out: dict[ZVertex, int] = {}

    def bump(v: ZVertex, c: int) -> None:
        n = out.get(v, 0) + c
        if n:
            out[v] = n
        else:
            out.pop(v, None)

    for v, c in f.gens.items():
        bump(v, c)
    for z, c in f.deltas.items():
        bump(z, c)
        bump(translate(z, -1), c)
        for j in q.neighbors(z.i):
            bump(ZVertex(j, z.p + 1), -c)
    return out


def qfun_equal(q: DynkinQuiver, f: QFun, g: QFun) -> bool:
    """Equality of presented functions.

    Both presentations vanish far enough left, so equality is equivalent to
    the difference having zero defect; the far-left window comparison is
    kept as a cheap independent guard.
    """
    if qfun_defect(q, f - g):
        return False
    slots = [v.p for v in f.gens] + [v.p for v in g.gens]
    slots += [v.p for v in f.deltas] + [v.p for v in g.deltas]
    if slots:
        p0 = min(slots) - 1
        for y, val in qfun_window(q, f, p0 - 1, p0).items():
            if val != qfun_eval(q, g, y):
                return False
    return True


# ───────────────────────── the covering order ─────────────────────────


def preceq(
    q: DynkinQuiver,
    f: QFun,
    g: QFun,
    zmult: Iterable[ZVertex] | Mapping[ZVertex, int] | None = None,
    max_size: int = 8,
) -> bool:
    """Is f below g in the covering order?

    g must exceed f by a finite nonnegative sum of pointwise deltas; the
    order holds when the deltas can be peeled off g one at a time, each
    peel happening at a vertex where the current function's defect is
    positive.  When zmult is given it must match g - f as a presentation.
    Exhaustive search with memoization; multisets larger than max_size
    raise TooLarge.
    """
    diff = g - f
    if diff.gens:
        return False
    multiset = dict(diff.deltas)
    if any(c < 0 for c in multiset.values()):
        return False
    if zmult is not None:
        stated: dict[ZVertex, int] = {}
        items = zmult.items() if isinstance(zmult, Mapping) else ((z, 1) for z in zmult)
        for z, c in items:
            z = ZVertex(*z)
            stated[z] = stated.get(z, 0) + c
        if {v: c for v, c in stated.items() if c} != multiset:
            raise ValueError("stated delta multiset does not match g - f")
    total = sum(multiset.values())
    if total == 0:
        return True
    if total > max_size:
        raise TooLarge(f"covering-order search over {total} deltas (cap {max_size})")

    base_defect = qfun_defect(q, g)
    memo: dict[frozenset, bool] = {}

    def defect_at(removed: dict[ZVertex, int], z: ZVertex) -> int:
        # defect of (g - sum of removed deltas) at z
        val = base_defect.get(z, 0)
        for w, c in removed.items():
            if not c:
                continue
            if w == z:
                val -= c
            if translate(w, -1) == z:
                val -= c
            if z.i in q.neighbors(w.i) and z.p == w.p + 1:
                val += c
        return val

    def search(remaining: dict[ZVertex, int], removed: dict[ZVertex, int]) -> bool:
        key = frozenset((v, c) for v, c in remaining.items() if c)
        if not key:
            return True
        hit = memo.get(key)
        if hit is not None:
            return hit
        ok = False
        for z in sorted(v for v, c in remaining.items() if c):
            if defect_at(removed, z) >= 1:
                remaining[z] -= 1
                removed[z] = removed.get(z, 0) + 1
                if search(remaining, removed):
                    ok = True
                remaining[z] += 1
                removed[z] -= 1
                if ok:
                    break
        memo[key] = ok
        return ok

    return search(multiset, {})


# ───────────────────────── hom dimensions ─────────────────────────


def hom_values(q: DynkinQuiver, x: ZVertex) -> dict[ZVertex, int]:
    """All nonzero morphism-space dimensions out of x, as a vertex -> dim map.

    Knitted once per (quiver, source) and cached.  The support is checked to
    lie in the closed band between the sections through x and through the
    Serre shift of x, with nonnegative values throughout; violations would
    mean a convention bug, so they fail loudly.
    """
    key = (q, x)
    cached = _GCACHE.get(key)
    if cached is not None:
        return cached
    x = check_vertex(q, x)
    sx = serre(q, x)
    sec_x = section_through(q, x)
    sec_sx = section_through(q, sx)
    defects = {x: 1}
    tsx = translate(sx, -1)
    defects[tsx] = defects.get(tsx, 0) + 1
    horizon = max(sec_sx.values()) + 4
    values = _knit(q, sec_x, defects, horizon)
    out: dict[ZVertex, int] = {}
    for v, val in values.items():
        if v.p > sec_sx[v.i]:
            if val != 0:
                raise AssertionError(
                    f"hom function of {x} leaks past the Serre section at {v}"
                )
            continue
        if val < 0:
            raise AssertionError(f"negative hom dimension at {v} from {x}")
        if val:
            out[v] = val
    _GCACHE[key] = out
    return out


def dim_hom(q: DynkinQuiver, x: ZVertex, y: ZVertex) -> int:
    """Dimension of the morphism space from x to y."""
    y = check_vertex(q, y)
    return hom_values(q, x).get(y, 0)


# ───────────────────────── text output ─────────────────────────


def qfun_grid_tsv(q: DynkinQuiver, f: QFun, p_min: int, p_max: int) -> str:
    """Tab-separated value grid: one row per vertex label, one column per slot.

    Invalid-parity cells are rendered as '.', so the mesh texture is visible
    in plain terminals.
    """
    header = ["i\\p"] + [str(p) for p in range(p_min, p_max + 1)]
    rows = ["\t".join(header)]
    for i in q.vertices:
        cells = [str(i)]
        for p in range(p_min, p_max + 1):
            if p % 2 != q.parity_class(i):
                cells.append(".")
            else:
                cells.append(str(qfun_eval(q, f, ZVertex(i, p))))
        rows.append("\t".join(cells))
    return "\n".join(rows) + "\n"
