"""Exchange-pattern enumeration with one frozen shadow per vertex.

This is the independent cross-check lane: no repetition-quiver machinery
at all, just seed mutation.  The seed lives on two levels — a mutable
copy of the vertex set at level 0 and a frozen copy at level 1.  The
initial attachment pattern is

    (i,0) → (i,1)                       for every vertex i,
    (j,0) → (i,0), (j,1) → (i,1),
    (i,1) → (j,0)                       for every arrow i → j,

so each frozen shadow X_i sits over its mutable x_i and the frozen level
repeats the mutable pattern one step out of phase.  Mutation follows the
usual skew-matrix rule; the exchange binomial is divided out exactly in
the initial variables, so the Laurent property is asserted on every step
rather than assumed (a failed division raises InexactDivision and means
the seed bookkeeping is wrong, not that rounding happened).

Enumeration walks the exchange graph breadth-first, deduplicating seeds
by the multiset of mutable cluster entries.  Each discovered variable is
keyed by its denominator vector in the initial mutable variables; the
initial variables themselves get the negated unit vectors.  For the
finite shapes handled here the walk closes up quickly (pentagon for the
rank-2 chain, 14 seeds at rank 3, ...), and the key set is validated
against the positive-root list — that bijection is the actual theorem
being leaned on, so it is checked, not trusted.

Entries both frozen are never stored: no mutation rule ever reads them
(the exchange at a mutable k consumes column k only, and the update of a
pair (u, v) reads b_{uk} and b_{kv} with k mutable), so carrying them
would only add noise to the matrix comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from .errors import InexactDivision, UnknownRoot
from .laurent import LaurentPoly
from .quiver import DynkinQuiver, Root, positive_roots, simple_root

SeedVertex = Tuple[int, int]  # (vertex, level); level 0 mutable, 1 frozen

MUTABLE = 0
FROZEN = 1

__all__ = [
    "SeedVertex",
    "MUTABLE",
    "FROZEN",
    "Seed",
    "initial_seed",
    "mutate",
    "exchange_binomial",
    "enumerate_seeds",
    "enumerate_cluster_variables",
    "cluster_variable_for_root",
]


# ───────────────────────────── seeds ─────────────────────────────


@dataclass(frozen=True, eq=False)
class Seed:
    """A labeled seed: skew arrow-count matrix plus cluster entries.

    ``matrix`` stores every nonzero b_{uv} with at least one endpoint
    mutable, both orientations (b_{vu} = −b_{uv}).  ``cluster`` maps each
    seed vertex to a Laurent polynomial in the initial variables
    ("x", i) and ("X", i); frozen entries never change.
    """

    vertices: Tuple[SeedVertex, ...]
    matrix: Mapping[Tuple[SeedVertex, SeedVertex], int]
    cluster: Mapping[SeedVertex, LaurentPoly]

    def b(self, u: SeedVertex, v: SeedVertex) -> int:
        return self.matrix.get((u, v), 0)

    def mutable_vertices(self) -> Tuple[SeedVertex, ...]:
        return tuple(v for v in self.vertices if v[1] == MUTABLE)

    def key(self) -> tuple:
        """Dedup key: the multiset of mutable cluster entries."""
        return tuple(
            sorted(self.cluster[v].canonical() for v in self.mutable_vertices())
        )


def initial_seed(q: DynkinQuiver) -> Seed:
    verts = tuple((i, lvl) for lvl in (MUTABLE, FROZEN) for i in q.vertices)
    arrows: List[Tuple[SeedVertex, SeedVertex]] = []
    for i in q.vertices:
        arrows.append(((i, MUTABLE), (i, FROZEN)))
    for (i, j) in q.arrows:
        arrows.append(((j, MUTABLE), (i, MUTABLE)))
        arrows.append(((j, FROZEN), (i, FROZEN)))
        arrows.append(((i, FROZEN), (j, MUTABLE)))
    matrix: Dict[Tuple[SeedVertex, SeedVertex], int] = {}
    for (u, v) in arrows:
        if u[1] == FROZEN and v[1] == FROZEN:
            continue
        matrix[(u, v)] = matrix.get((u, v), 0) + 1
        matrix[(v, u)] = matrix.get((v, u), 0) - 1
    matrix = {k: w for k, w in matrix.items() if w}
    cluster: Dict[SeedVertex, LaurentPoly] = {}
    for i in q.vertices:
        cluster[(i, MUTABLE)] = LaurentPoly.variable(("x", i))
        cluster[(i, FROZEN)] = LaurentPoly.variable(("X", i))
    return Seed(verts, matrix, cluster)


def exchange_binomial(seed: Seed, k: SeedVertex) -> Tuple[LaurentPoly, LaurentPoly]:
    """The two exchange products at k: (arrows in, arrows out)."""
    plus = LaurentPoly.one()
    minus = LaurentPoly.one()
    for v in seed.vertices:
        w = seed.b(v, k)
        if w > 0:
            plus = plus * seed.cluster[v] ** w
        elif w < 0:
            minus = minus * seed.cluster[v] ** (-w)
    return plus, minus


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def mutate(seed: Seed, k: SeedVertex) -> Seed:
    """Mutation at a mutable vertex: matrix rule plus exact exchange."""
    if k not in seed.vertices:
        raise ValueError(f"{k} is not a vertex of this seed")
    if k[1] != MUTABLE:
        raise ValueError(f"cannot mutate the frozen vertex {k}")

    new_matrix: Dict[Tuple[SeedVertex, SeedVertex], int] = {}
    for u in seed.vertices:
        for v in seed.vertices:
            if u == v or (u[1] == FROZEN and v[1] == FROZEN):
                continue
            if u == k or v == k:
                w = -seed.b(u, v)
            else:
                buk = seed.b(u, k)
                bkv = seed.b(k, v)
                w = seed.b(u, v) + _sgn(buk) * max(buk * bkv, 0)
            if w:
                new_matrix[(u, v)] = w

    plus, minus = exchange_binomial(seed, k)
    new_var = (plus + minus).exact_div(seed.cluster[k])

    new_cluster = dict(seed.cluster)
    new_cluster[k] = new_var
    return Seed(seed.vertices, new_matrix, new_cluster)


# ──────────────────────── exchange graph walk ────────────────────────


_SEED_CACHE: dict[DynkinQuiver, list[Seed]] = {}


def enumerate_seeds(q: DynkinQuiver) -> list[Seed]:
    """All seeds reachable from the initial one, up to relabeling."""
    cached = _SEED_CACHE.get(q)
    if cached is not None:
        return cached
    start = initial_seed(q)
    seen = {start.key()}
    out = [start]
    frontier = [start]
    while frontier:
        nxt: list[Seed] = []
        for seed in frontier:
            for k in seed.mutable_vertices():
                neighbor = mutate(seed, k)
                key = neighbor.key()
                if key not in seen:
                    seen.add(key)
                    out.append(neighbor)
                    nxt.append(neighbor)
        frontier = nxt
    _SEED_CACHE[q] = out
    return out


def _denominator_vector(q: DynkinQuiver, poly: LaurentPoly) -> Root:
    """Exponent of 1/x_i in lowest terms, per vertex (absence counts 0)."""
    dvec = []
    for i in q.vertices:
        key = ("x", i)
        low = min(dict(mono).get(key, 0) for mono in poly.terms)
        dvec.append(-low)
    return tuple(dvec)


_VARIABLE_CACHE: dict[DynkinQuiver, Dict[Root, LaurentPoly]] = {}


def enumerate_cluster_variables(q: DynkinQuiver) -> Dict[Root, LaurentPoly]:
    """Every cluster variable, keyed by denominator vector.

    Initial variables land on the negated unit vectors, everything else
    on a positive root; the key set is checked against the root system
    and every coefficient is checked positive before returning.
    """
    cached = _VARIABLE_CACHE.get(q)
    if cached is not None:
        return cached

    polys: Dict[tuple, LaurentPoly] = {}
    for seed in enumerate_seeds(q):
        for v in seed.mutable_vertices():
            poly = seed.cluster[v]
            polys.setdefault(poly.canonical(), poly)

    out: Dict[Root, LaurentPoly] = {}
    for poly in polys.values():
        dvec = _denominator_vector(q, poly)
        if dvec in out:
            raise AssertionError(
                f"two cluster variables share the denominator vector {dvec}"
            )
        for _, c in poly.terms.items():
            if c <= 0:
                raise AssertionError("cluster variable with nonpositive coefficient")
        out[dvec] = poly

    expected = {tuple(-v for v in simple_root(q, i)) for i in q.vertices}
    expected |= {tuple(r) for r in positive_roots(q)}
    if set(out) != expected:
        missing = expected - set(out)
        extra = set(out) - expected
        raise AssertionError(
            f"denominator vectors do not match the root system "
            f"(missing {sorted(missing)}, extra {sorted(extra)})"
        )

    _VARIABLE_CACHE[q] = out
    return out


def cluster_variable_for_root(q: DynkinQuiver, beta: Root) -> LaurentPoly:
    """Lookup by denominator vector; UnknownRoot if nothing sits there."""
    table = enumerate_cluster_variables(q)
    key = tuple(beta)
    try:
        return table[key]
    except KeyError:
        raise UnknownRoot(f"no cluster variable has denominator vector {key}") from None
