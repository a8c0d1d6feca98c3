"""Simply laced Dynkin quivers, adapted height functions, and root data.

Vertex labeling conventions (fixed once and for all):

* type A_n: a chain 1 - 2 - ... - n;
* type D_n (n >= 4): a chain 1 - 2 - ... - (n-2) with two fork vertices
  n-1 and n attached to n-2;
* type E_n (n in {6,7,8}): a chain 1 - 2 - ... - (n-1) with the branch
  vertex n attached to chain vertex 3.

An *orientation* turns each tree edge into an arrow.  A height function xi
is adapted when every arrow i -> j satisfies xi(j) = xi(i) - 1; heights are
therefore congruent mod 2 to the two-coloring of the tree, which we anchor
so that vertex 1 gets color (distance-to-1 + 1) mod 2 = 1... more simply:
parity_class(i) = (graph distance from vertex 1 to i + 1) mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import EmptySupport, ParityViolation, Reorientation, WrongShape

Root = tuple  # tuple[int, ...], coefficient vector over the simple roots

__all__ = [
    "Root",
    "DynkinQuiver",
    "HeightFunction",
    "BetaData",
    "expected_edges",
    "build_quiver",
    "all_orientations",
    "sample_orientations",
    "default_height",
    "height_from_values",
    "coxeter_number",
    "nakayama_involution",
    "positive_roots",
    "root_height",
    "root_support",
    "simple_root",
    "root_add",
    "root_sub",
    "is_nonneg",
    "beta_combinatorics",
]


# ───────────────────────── diagram shapes ─────────────────────────


def expected_edges(family: str, rank: int) -> frozenset[frozenset[int]]:
    """Edge set of the Dynkin tree for the given family and rank."""
    if family == "A":
        if rank < 1:
            raise WrongShape(f"A_{rank} is not a Dynkin diagram")
        pairs = [(i, i + 1) for i in range(1, rank)]
    elif family == "D":
        if rank < 4:
            raise WrongShape(f"D_{rank} is not supported (need rank >= 4)")
        pairs = [(i, i + 1) for i in range(1, rank - 2)]
        pairs += [(rank - 2, rank - 1), (rank - 2, rank)]
    elif family == "E":
        if rank not in (6, 7, 8):
            raise WrongShape(f"E_{rank} is not a Dynkin diagram")
        pairs = [(i, i + 1) for i in range(1, rank - 1)]
        pairs.append((3, rank))
    else:
        raise WrongShape(f"unknown family {family!r}")
    return frozenset(frozenset(p) for p in pairs)


@dataclass(frozen=True)
class DynkinQuiver:
    """An oriented simply laced Dynkin diagram.

    arrows are (source, target) pairs; the underlying edge set must equal
    the standard tree for (family, rank).
    """

    family: str
    rank: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        expected = expected_edges(self.family, self.rank)
        got = [frozenset(a) for a in self.arrows]
        if len(got) != len(expected) or set(got) != expected:
            raise Reorientation(
                f"arrows are not an orientation of the {self.family}_{self.rank} tree"
            )
        if len(set(got)) != len(got):
            raise Reorientation("duplicate arrows")

    # -- basic graph queries -------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    def neighbors(self, i: int) -> tuple[int, ...]:
        out = []
        for a, b in self.arrows:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return tuple(sorted(out))

    def arrows_from(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(b for a, b in self.arrows if a == i))

    def arrows_to(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(a for a, b in self.arrows if b == i))

    def has_arrow(self, i: int, j: int) -> bool:
        return (i, j) in self.arrows

    def has_path(self, i: int, j: int) -> bool:
        """Directed reachability i ⇝ j (trivial path included)."""
        if i == j:
            return True
        frontier = [i]
        seen = {i}
        while frontier:
            v = frontier.pop()
            for w in self.arrows_from(v):
                if w == j:
                    return True
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return False

    def reachable_from(self, i: int) -> frozenset[int]:
        """All j with a directed path i ⇝ j, including i itself."""
        seen = {i}
        frontier = [i]
        while frontier:
            v = frontier.pop()
            for w in self.arrows_from(v):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return frozenset(seen)

    def coreachable_to(self, i: int) -> frozenset[int]:
        """All j with a directed path j ⇝ i, including i itself."""
        seen = {i}
        frontier = [i]
        while frontier:
            v = frontier.pop()
            for w in self.arrows_to(v):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return frozenset(seen)

    def sinks(self) -> tuple[int, ...]:
        return tuple(i for i in self.vertices if not self.arrows_from(i))

    def distance(self, i: int, j: int) -> int:
        """Undirected graph distance."""
        if i == j:
            return 0
        frontier = {i}
        seen = {i}
        d = 0
        while frontier:
            d += 1
            nxt = set()
            for v in frontier:
                for w in self.neighbors(v):
                    if w == j:
                        return d
                    if w not in seen:
                        seen.add(w)
                        nxt.add(w)
            frontier = nxt
        raise WrongShape("diagram is not connected")  # unreachable for trees

    def parity_class(self, i: int) -> int:
        """Two-coloring of the tree: (distance to vertex 1 + 1) mod 2."""
        return (self.distance(1, i) + 1) % 2


def build_quiver(
    family: str, rank: int, arrows: Iterable[tuple[int, int]]
) -> DynkinQuiver:
    """Construct and validate a Dynkin quiver from explicit arrows."""
    return DynkinQuiver(family, rank, tuple((int(a), int(b)) for a, b in arrows))


def all_orientations(family: str, rank: int) -> Iterator[DynkinQuiver]:
    """Every orientation of the tree, in a deterministic order."""
    edges = sorted(tuple(sorted(e)) for e in expected_edges(family, rank))
    for choice in product((0, 1), repeat=len(edges)):
        arrows = tuple(
            (a, b) if c == 0 else (b, a) for (a, b), c in zip(edges, choice)
        )
        yield DynkinQuiver(family, rank, arrows)


def sample_orientations(
    family: str, rank: int, count: int, seed: int
) -> list[DynkinQuiver]:
    """Deterministic pseudo-random sample of distinct orientations."""
    import random

    edges = sorted(tuple(sorted(e)) for e in expected_edges(family, rank))
    rng = random.Random(seed)
    seen: set[tuple[int, ...]] = set()
    out: list[DynkinQuiver] = []
    total = 2 ** len(edges)
    count = min(count, total)
    while len(out) < count:
        choice = tuple(rng.randint(0, 1) for _ in edges)
        if choice in seen:
            continue
        seen.add(choice)
        arrows = tuple(
            (a, b) if c == 0 else (b, a) for (a, b), c in zip(edges, choice)
        )
        out.append(DynkinQuiver(family, rank, arrows))
    return out


# ───────────────────────── height functions ─────────────────────────


@dataclass(frozen=True)
class HeightFunction:
    """An adapted height: values[i-1] is the height of vertex i."""

    values: tuple[int, ...]

    def ht(self, i: int) -> int:
        return self.values[i - 1]

    def as_dict(self) -> dict[int, int]:
        return {i + 1: v for i, v in enumerate(self.values)}


def default_height(q: DynkinQuiver) -> HeightFunction:
    """Canonical adapted height: vertex 1 sits at its parity class value.

    Heights propagate along the tree so that every arrow drops the height
    by exactly one; the result is independent of traversal order.
    """
    vals: dict[int, int] = {1: q.parity_class(1)}
    frontier = [1]
    while frontier:
        v = frontier.pop()
        for w in q.neighbors(v):
            if w in vals:
                continue
            if q.has_arrow(v, w):
                vals[w] = vals[v] - 1
            else:
                vals[w] = vals[v] + 1
            frontier.append(w)
    return HeightFunction(tuple(vals[i] for i in q.vertices))


def height_from_values(q: DynkinQuiver, values: dict[int, int]) -> HeightFunction:
    """Validate an explicit height assignment (adaptedness and parity)."""
    missing = [i for i in q.vertices if i not in values]
    if missing:
        raise ParityViolation(f"height missing for vertices {missing}")
    for a, b in q.arrows:
        if values[b] != values[a] - 1:
            raise ParityViolation(
                f"height not adapted on arrow {a}->{b}: {values[a]} vs {values[b]}"
            )
    for i in q.vertices:
        if values[i] % 2 != q.parity_class(i):
            raise ParityViolation(
                f"height parity at vertex {i} disagrees with the two-coloring"
            )
    return HeightFunction(tuple(values[i] for i in q.vertices))


# ───────────────────────── Coxeter data ─────────────────────────


def coxeter_number(q: DynkinQuiver) -> int:
    if q.family == "A":
        return q.rank + 1
    if q.family == "D":
        return 2 * q.rank - 2
    return {6: 12, 7: 18, 8: 30}[q.rank]


def nakayama_involution(q: DynkinQuiver, i: int) -> int:
    """The diagram automorphism induced by the longest Weyl element."""
    n = q.rank
    if q.family == "A":
        return n + 1 - i
    if q.family == "D":
        if n % 2 == 1 and i in (n - 1, n):
            return (2 * n - 1) - i  # swap the two fork vertices
        return i
    if n == 6:  # E_6 chain flip, branch vertex fixed
        return {1: 5, 2: 4, 3: 3, 4: 2, 5: 1, 6: 6}[i]
    return i


# ───────────────────────── root systems ─────────────────────────


def simple_root(q: DynkinQuiver, i: int) -> Root:
    return tuple(1 if j == i else 0 for j in q.vertices)


def root_add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def root_sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def is_nonneg(a: Root) -> bool:
    return all(x >= 0 for x in a)


def root_height(a: Root) -> int:
    return sum(a)


def root_support(a: Root) -> tuple[int, ...]:
    return tuple(i + 1 for i, c in enumerate(a) if c != 0)


@lru_cache(maxsize=None)
def positive_roots(q: DynkinQuiver) -> tuple[Root, ...]:
    """All positive roots, by closing the simples under simple reflections.

    Sorted by (height, coefficient vector) so output order is reproducible.
    """
    n = q.rank
    roots: set[Root] = {simple_root(q, i) for i in q.vertices}
    frontier = list(roots)
    while frontier:
        beta = frontier.pop()
        for i in q.vertices:
            # ⟨beta, alpha_i∨⟩ for a simply laced diagram
            pairing = 2 * beta[i - 1] - sum(beta[j - 1] for j in q.neighbors(i))
            refl = list(beta)
            refl[i - 1] -= pairing
            image = tuple(refl)
            if is_nonneg(image) and any(image) and image not in roots:
                roots.add(image)
                frontier.append(image)
    return tuple(sorted(roots, key=lambda r: (root_height(r), r)))


# ───────────────────────── support combinatorics ─────────────────────────


@dataclass(frozen=True)
class BetaData:
    """Combinatorial data attached to a nonzero nonnegative vector beta.

    All path closures are taken inside the full subquiver on the support.
    dim_proj[i] / dim_inj[i] are the dimension vectors of the projective /
    injective cover at i of the support subquiver, used as the downward
    steps of the two tilting recursions.
    """

    support: tuple[int, ...]
    out_closure: dict[int, frozenset[int]] = field(hash=False)
    in_closure: dict[int, frozenset[int]] = field(hash=False)
    dim_proj: dict[int, Root] = field(hash=False)
    dim_inj: dict[int, Root] = field(hash=False)
    r_full: dict[int, int] = field(hash=False)
    r_sub: dict[int, int] = field(hash=False)
    min_coeff_vertices: tuple[int, ...]
    pivot_candidates: tuple[int, ...]
    pivot: int


def beta_combinatorics(q: DynkinQuiver, xi: HeightFunction, beta: Root) -> BetaData:
    """Support subquiver statistics and the pivot-selection data for beta."""
    if not any(beta) or not is_nonneg(beta):
        raise EmptySupport("need a nonzero nonnegative coefficient vector")
    supp = root_support(beta)
    supp_set = set(supp)

    def sub_out(i: int) -> frozenset[int]:
        seen = {i}
        frontier = [i]
        while frontier:
            v = frontier.pop()
            for w in q.arrows_from(v):
                if w in supp_set and w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return frozenset(seen)

    def sub_in(i: int) -> frozenset[int]:
        seen = {i}
        frontier = [i]
        while frontier:
            v = frontier.pop()
            for w in q.arrows_to(v):
                if w in supp_set and w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return frozenset(seen)

    out_cl = {i: sub_out(i) for i in supp}
    in_cl = {i: sub_in(i) for i in supp}
    dim_proj = {
        i: tuple(
            1 if (j + 1) in out_cl[i] else 0 for j in range(q.rank)
        )
        for i in supp
    }
    dim_inj = {
        i: tuple(1 if (j + 1) in in_cl[i] else 0 for j in range(q.rank))
        for i in supp
    }

    sinks = set(q.sinks())
    r_full = {
        i: sum(
            xi.ht(i) - xi.ht(j)
            for j in q.reachable_from(i)
            if j in sinks
        )
        for i in q.vertices
    }
    r_sub = {i: sum(xi.ht(i) - xi.ht(j) for j in out_cl[i]) for i in supp}

    min_coeff = min(beta[i - 1] for i in supp)
    mset = tuple(sorted(i for i in supp if beta[i - 1] == min_coeff))
    best_r = min(r_sub[i] for i in mset)
    iset = tuple(sorted(i for i in mset if r_sub[i] == best_r))
    return BetaData(
        support=supp,
        out_closure=out_cl,
        in_closure=in_cl,
        dim_proj=dim_proj,
        dim_inj=dim_inj,
        r_full=r_full,
        r_sub=r_sub,
        min_coeff_vertices=mset,
        pivot_candidates=iset,
        pivot=iset[0],
    )
