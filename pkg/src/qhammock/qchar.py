"""Truncated characters three independent ways, plus the dominance order.

The truncated ring for a height assignment ξ is the Laurent ring on the
two base sections only: variables ("Y", i, ξ(i)−2) and ("Y", i, ξ(i))
for every vertex i (plus the ghost symbols ("f", i) before they are
specialized away).  Everything the engine produces lives there, and
``TruncatedRing.check`` enforces it.

Three routes to the same polynomial:

* ``qchar_euler`` — alternating sum over the recursively built complex,
  ghosts specialized to −1, divided by the carried denominator;
* ``qchar_recursion`` — the scalar shadow of the cone construction, a
  two-term recursion over the absorb / tilt split at the pivot (no
  complexes are built, only leading-term bookkeeping);
* ``qchar_cluster`` — the exchange-walk variable with the matching
  denominator vector, pushed into the truncated ring by x_i ↦ Y(i, ξ(i))
  and X_i ↦ Y(i, ξ(i)−2)·Y(i, ξ(i)).

Route agreement on every positive root is the central acceptance check;
``verify_beta`` bundles it with the extremal-monomial and positivity
clauses into one report.

The dominance order compares monomials by whether their ratio is a
product of the root monomials A_i (each a pure monomial here because the
ring is truncated to two sections).  Solving for the exponent vector is
linear algebra against the Cartan matrix — the per-vertex sum of the two
section exponents of A_j is exactly the Cartan pairing row — followed by
an exact reconstruction check, since the section *split* carries more
information than the sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from .errors import Incomparable, NotDominant, NotInSupport, UnknownRoot
from .laurent import (
    MONO_ONE,
    LaurentPoly,
    Mono,
    VarKey,
    mono_div,
    mono_from_dict,
    mono_key_str,
    mono_mul,
    mono_pow,
)
from .quiver import (
    DynkinQuiver,
    HeightFunction,
    Root,
    beta_combinatorics,
    is_nonneg,
    simple_root,
)
from .objects import kr_object, leading_object
from .complexes import build_complex, euler_char
from .cluster import enumerate_cluster_variables

__all__ = [
    "TruncatedRing",
    "variable_A",
    "dominant_monomial",
    "qchar_euler",
    "qchar_recursion",
    "qchar_cluster",
    "nakajima_leq",
    "extremal_monomials",
    "verify_beta",
    "qchar_to_json",
    "qchar_to_tsv",
]


# ───────────────────────── the truncated ring ─────────────────────────


@dataclass(frozen=True)
class TruncatedRing:
    """Variable universe for a quiver with a fixed height assignment."""

    quiver: DynkinQuiver
    height: HeightFunction

    def variables(self, with_ghosts: bool = True) -> frozenset:
        out = set()
        for i in self.quiver.vertices:
            p = self.height.ht(i)
            out.add(("Y", i, p - 2))
            out.add(("Y", i, p))
            if with_ghosts:
                out.add(("f", i))
        return frozenset(out)

    def contains(self, poly: LaurentPoly, with_ghosts: bool = True) -> bool:
        return poly.variables() <= self.variables(with_ghosts)

    def check(self, poly: LaurentPoly, with_ghosts: bool = True) -> LaurentPoly:
        stray = poly.variables() - self.variables(with_ghosts)
        if stray:
            raise ValueError(f"polynomial leaves the truncated ring: {sorted(stray)}")
        return poly


def _y(i: int, p: int, e: int = 1) -> Mono:
    return mono_from_dict({("Y", i, p): e})


def variable_A(q: DynkinQuiver, xi: HeightFunction, i: int) -> Mono:
    """The root monomial at vertex i, sitting between the two sections.

    Both sections of i appear once; each neighbor contributes the inverse
    of whichever of its own two sections lies at height ξ(i) − 1, so the
    monomial never leaves the truncated ring.
    """
    p = xi.ht(i)
    powers: Dict[VarKey, int] = {("Y", i, p - 2): 1, ("Y", i, p): 1}
    for j in q.neighbors(i):
        powers[("Y", j, p - 1)] = powers.get(("Y", j, p - 1), 0) - 1
    return mono_from_dict(powers)


def dominant_monomial(q: DynkinQuiver, xi: HeightFunction, beta: Root) -> Mono:
    """Class of the leading object: the head every route must share."""
    mono = leading_object(q, xi, beta).kclass
    assert mono is not None
    return mono


# ───────────────────────── route 1: Euler sums ─────────────────────────


def qchar_euler(q: DynkinQuiver, xi: HeightFunction, beta: Root) -> LaurentPoly:
    """Alternating class sum of the built complex, ghosts at −1."""
    return euler_char(q, xi, build_complex(q, xi, beta), specialize_f=-1)


# ──────────────────────── route 2: scalar recursion ────────────────────────


_REC_CACHE: dict[tuple, LaurentPoly] = {}


def qchar_recursion(
    q: DynkinQuiver,
    xi: HeightFunction,
    beta: Root,
    pivot: int | None = None,
) -> LaurentPoly:
    """Two-term recursion over the absorb / tilt split — no complexes.

    At the pivot i, with ε and β_inj from the frontier absorption, the
    injective frontier factor H^in, and the iterated-tilt factorization
    (K powers, H powers, remainder β_proj):

        χ(β) · Y(i, ξ(i)) = X_i^ε · mono(H^in) · χ(β_inj)
                            + mono(K) · mono(H) · χ(β_proj)

    with χ(0) = 1 and χ(−α_i) = Y(i, ξ(i)).  The frontier factor on the
    absorb branch is required for the two sides to balance; dropping it
    breaks route agreement on every root whose pivot has an out-frontier
    inside the support.
    """
    beta = tuple(beta)
    memo_key = None
    if pivot is None:
        memo_key = (q, xi, beta)
        hit = _REC_CACHE.get(memo_key)
        if hit is not None:
            return hit

    result = _qchar_recursion_step(q, xi, beta, pivot)
    if memo_key is not None:
        _REC_CACHE[memo_key] = result
    return result


def _qchar_recursion_step(
    q: DynkinQuiver, xi: HeightFunction, beta: Root, pivot: int | None
) -> LaurentPoly:
    from .objects import absorb_frontier, frontier_injection_factor, tilt_leading

    if not any(beta):
        return LaurentPoly.one()
    if not is_nonneg(beta):
        negs = [k + 1 for k, v in enumerate(beta) if v < 0]
        if len(negs) == 1 and beta == tuple(-v for v in simple_root(q, negs[0])):
            return LaurentPoly.variable(("Y", negs[0], xi.ht(negs[0])))
        raise NotDominant(f"{beta} is neither nonnegative nor a negative simple root")

    bd = beta_combinatorics(q, xi, beta)
    i = bd.pivot if pivot is None else pivot
    if i not in bd.support:
        raise NotInSupport(f"pivot {i} outside the support of {beta}")

    eps, beta_inj = absorb_frontier(q, xi, beta, i)
    hin = frontier_injection_factor(q, xi, beta, i)
    fac = tilt_leading(q, xi, beta, i)

    kr_i = kr_object(q, xi, i).kclass
    assert kr_i is not None

    inj_head = mono_pow(kr_i, eps)
    for l, e in sorted(hin.items()):
        inj_head = mono_mul(inj_head, _y(l, xi.ht(l), e))

    proj_head = MONO_ONE
    for k, e in fac.k_exp:
        kk = kr_object(q, xi, k).kclass
        assert kk is not None
        proj_head = mono_mul(proj_head, mono_pow(kk, e))
    for l, e in fac.h_exp:
        proj_head = mono_mul(proj_head, _y(l, xi.ht(l), e))

    total = LaurentPoly.monomial(inj_head) * qchar_recursion(q, xi, beta_inj)
    total = total + LaurentPoly.monomial(proj_head) * qchar_recursion(
        q, xi, fac.remainder
    )
    return total * LaurentPoly.monomial(_y(i, xi.ht(i), -1))


# ──────────────────────── route 3: exchange walk ────────────────────────


def qchar_cluster(q: DynkinQuiver, xi: HeightFunction, beta: Root) -> LaurentPoly:
    """Exchange-walk variable for β, pushed into the truncated ring.

    Raises UnknownRoot when β is not a positive root (or a negated unit
    vector) — the walk only produces those.
    """
    var = enumerate_cluster_variables(q)
    key = tuple(beta)
    if key not in var:
        raise UnknownRoot(f"no cluster variable has denominator vector {key}")
    mapping: Dict[VarKey, LaurentPoly] = {}
    for i in q.vertices:
        p = xi.ht(i)
        mapping[("x", i)] = LaurentPoly.variable(("Y", i, p))
        mapping[("X", i)] = LaurentPoly.monomial(
            mono_from_dict({("Y", i, p - 2): 1, ("Y", i, p): 1})
        )
    return var[key].substitute(mapping)


# ───────────────────────── dominance order ─────────────────────────


def _solve_cartan(q: DynkinQuiver, v: List[int]) -> List[Fraction] | None:
    """Solve C·k = v for the Cartan matrix of the underlying tree."""
    n = q.rank
    rows = []
    for i in q.vertices:
        row = [Fraction(0)] * n
        row[i - 1] = Fraction(2)
        for j in q.neighbors(i):
            row[j - 1] = Fraction(-1)
        row.append(Fraction(v[i - 1]))
        rows.append(row)
    # Gaussian elimination with exact fractions; C is invertible for
    # every Dynkin tree, so a zero pivot means the input was malformed.
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        lead = rows[col][col]
        rows[col] = [x / lead for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


def nakajima_leq(
    q: DynkinQuiver, xi: HeightFunction, lower: Mono, upper: Mono
) -> bool:
    """Dominance: upper / lower is a nonnegative product of root monomials.

    The candidate exponent vector is pinned by the Cartan system on the
    per-vertex section sums, then verified by exact reconstruction — the
    sums alone do not see how exponents split across the two sections.
    """
    ratio = mono_div(upper, lower)
    if ratio == MONO_ONE:
        return True
    powers = dict(ratio)
    if any(k[0] != "Y" for k in powers):
        return False
    sums = [0] * q.rank
    for i in q.vertices:
        p = xi.ht(i)
        sums[i - 1] = powers.get(("Y", i, p - 2), 0) + powers.get(("Y", i, p), 0)
    k_vec = _solve_cartan(q, sums)
    if k_vec is None:
        return False
    if any(k.denominator != 1 or k < 0 for k in k_vec):
        return False
    rebuilt = MONO_ONE
    for i in q.vertices:
        rebuilt = mono_mul(rebuilt, mono_pow(variable_A(q, xi, i), int(k_vec[i - 1])))
    return rebuilt == ratio


def extremal_monomials(
    q: DynkinQuiver, xi: HeightFunction, poly: LaurentPoly
) -> Tuple[Mono, Mono]:
    """(greatest, least) monomial under dominance; Incomparable if either
    fails to exist as a unique extremum."""
    monos = list(poly.terms)
    if not monos:
        raise Incomparable("the zero polynomial has no extremal monomials")
    highest = [m for m in monos if all(nakajima_leq(q, xi, o, m) for o in monos)]
    lowest = [m for m in monos if all(nakajima_leq(q, xi, m, o) for o in monos)]
    if len(highest) != 1 or len(lowest) != 1:
        raise Incomparable(
            f"no unique extremal pair: {len(highest)} maxima, {len(lowest)} minima"
        )
    return highest[0], lowest[0]


# ───────────────────────── the bundled report ─────────────────────────


def verify_beta(
    q: DynkinQuiver,
    xi: HeightFunction,
    beta: Root,
    include_cluster: bool = True,
) -> dict:
    """One root, every invariant; the "ok" key folds the clauses together.

    Clauses: (1) all available routes agree, (2) the greatest monomial is
    the dominant one, (3) the least is the dominant times ∏ A_i^{−β_i},
    (4) every coefficient is positive, (5) the dominant coefficient is 1.
    """
    beta = tuple(beta)
    chi = qchar_euler(q, xi, beta)
    rec = qchar_recursion(q, xi, beta)
    cluster: LaurentPoly | None = None
    if include_cluster:
        try:
            cluster = qchar_cluster(q, xi, beta)
        except UnknownRoot:
            cluster = None

    routes = chi == rec and (cluster is None or cluster == chi)

    dom = dominant_monomial(q, xi, beta)
    try:
        hi, lo = extremal_monomials(q, xi, chi)
        expected_lo = dom
        for i in q.vertices:
            expected_lo = mono_mul(
                expected_lo, mono_pow(variable_A(q, xi, i), -beta[i - 1])
            )
        highest_ok = hi == dom
        lowest_ok = lo == expected_lo
    except Incomparable:
        highest_ok = False
        lowest_ok = False

    positive = all(c > 0 for c in chi.terms.values())
    leading_one = chi.coeff(dom) == 1

    return {
        "beta": list(beta),
        "routes_agree": routes,
        "cluster_available": cluster is not None,
        "highest_is_dominant": highest_ok,
        "lowest_is_antidominant": lowest_ok,
        "coefficients_positive": positive,
        "leading_coefficient_one": leading_one,
        "terms": len(chi),
        "ok": routes and highest_ok and lowest_ok and positive and leading_one,
    }


# ───────────────────────── emission ─────────────────────────


def _mono_json(m: Mono) -> Dict[str, int]:
    return {":".join(str(p) for p in k): e for k, e in m}


def qchar_to_json(poly: LaurentPoly) -> List[dict]:
    """Stable list-of-rows form: [{"coeff": c, "mono": {"Y:i:p": e}}]."""
    return [
        {"coeff": c, "mono": _mono_json(m)}
        for m, c in sorted(poly.terms.items(), key=lambda mc: mono_key_str(mc[0]))
    ]


def qchar_to_tsv(poly: LaurentPoly) -> str:
    """Two sorted columns: monomial string, coefficient."""
    lines = ["monomial\tcoefficient"]
    for m, c in sorted(poly.terms.items(), key=lambda mc: mono_key_str(mc[0])):
        lines.append(f"{mono_key_str(m)}\t{c}")
    return "\n".join(lines) + "\n"
