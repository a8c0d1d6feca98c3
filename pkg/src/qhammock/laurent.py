"""Sparse multivariate Laurent polynomials with integer coefficients.

Monomials are canonical sorted tuples of (variable key, exponent) pairs with
nonzero exponents; variable keys are themselves tuples such as ("Y", i, p),
("f", i), ("x", i) or ("X", i).  Keeping keys structured (instead of strings)
lets the character and cluster layers share one arithmetic core.

Division is exact or it is an error: ``LaurentPoly.exact_div`` clears
denominators, runs ordinary multivariate long division over the rationals,
and raises InexactDivision unless the remainder is zero and every quotient
coefficient is an integer.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import InexactDivision

VarKey = tuple
Mono = tuple  # tuple[tuple[VarKey, int], ...], sorted by key

MONO_ONE: Mono = ()

__all__ = [
    "Mono",
    "MONO_ONE",
    "mono_from_dict",
    "mono_to_dict",
    "mono_mul",
    "mono_pow",
    "mono_div",
    "mono_key_str",
    "LaurentPoly",
]


def mono_from_dict(powers: Mapping[VarKey, int]) -> Mono:
    """Canonical monomial from a {variable key: exponent} mapping."""
    return tuple(sorted((k, e) for k, e in powers.items() if e != 0))


def mono_to_dict(m: Mono) -> dict[VarKey, int]:
    return dict(m)


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    powers = dict(a)
    for k, e in b:
        newe = powers.get(k, 0) + e
        if newe:
            powers[k] = newe
        else:
            del powers[k]
    return tuple(sorted(powers.items()))


def mono_pow(a: Mono, n: int) -> Mono:
    if n == 0 or not a:
        return MONO_ONE
    return tuple((k, e * n) for k, e in a)


def mono_div(a: Mono, b: Mono) -> Mono:
    """a / b as a Laurent monomial (always exact)."""
    return mono_mul(a, tuple((k, -e) for k, e in b))


def mono_key_str(m: Mono) -> str:
    """Stable plain-text key for JSON output, e.g. "Y:2:-1^1 Y:1:0^-1"."""
    if not m:
        return "1"
    parts = []
    for k, e in m:
        name = ":".join(str(piece) for piece in k)
        parts.append(f"{name}^{e}")
    return " ".join(parts)


class LaurentPoly:
    """Integer-coefficient Laurent polynomial in structured variables."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, int] | None = None):
        self.terms: dict[Mono, int] = {}
        if terms:
            for m, c in terms.items():
                # bool is an int subclass but never a sensible coefficient;
                # floats would compare equal to ints and hide exactness bugs
                if type(c) is not int:
                    raise TypeError(f"coefficient {c!r} is not an int")
                if c:
                    self.terms[m] = self.terms.get(m, 0) + c
            self.terms = {m: c for m, c in self.terms.items() if c}

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({MONO_ONE: 1})

    @classmethod
    def monomial(cls, m: Mono, coeff: int = 1) -> "LaurentPoly":
        return cls({m: coeff})

    @classmethod
    def variable(cls, key: VarKey, power: int = 1) -> "LaurentPoly":
        return cls({mono_from_dict({key: power}): 1})

    # -- ring structure ----------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        res = LaurentPoly()
        res.terms = out
        return res

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly()
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            res = LaurentPoly()
            res.terms = {m: c * other for m, c in self.terms.items()}
            return res
        out: dict[Mono, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        res = LaurentPoly()
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative polynomial power; use exact_div")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Mono, int]]:
        return iter(sorted(self.terms.items()))

    # -- queries -----------------------------------------------------

    def canonical(self) -> tuple[tuple[Mono, int], ...]:
        """Hashable canonical form (sorted term list)."""
        return tuple(sorted(self.terms.items()))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def as_monomial(self) -> tuple[Mono, int]:
        """The unique (monomial, coefficient) pair; error if not a monomial."""
        if len(self.terms) != 1:
            raise ValueError("polynomial is not a single monomial")
        return next(iter(self.terms.items()))

    def variables(self) -> set[VarKey]:
        seen: set[VarKey] = set()
        for m in self.terms:
            for k, _ in m:
                seen.add(k)
        return seen

    def coeff(self, m: Mono) -> int:
        return self.terms.get(m, 0)

    # -- substitution ------------------------------------------------

    def substitute(self, mapping: Mapping[VarKey, "LaurentPoly"]) -> "LaurentPoly":
        """Replace each mapped variable by a Laurent polynomial.

        Variables not in the mapping pass through unchanged.  A mapped
        variable raised to a negative power requires the image to be a
        single monomial (otherwise division would be needed), which is the
        only case this routine refuses.
        """
        out = LaurentPoly()
        for m, c in self.terms.items():
            term = LaurentPoly({MONO_ONE: c})
            for k, e in m:
                img = mapping.get(k)
                if img is None:
                    term = term * LaurentPoly.variable(k, e)
                elif e >= 0:
                    term = term * img**e
                else:
                    if not img.is_monomial():
                        raise InexactDivision(
                            "negative power of a non-monomial image"
                        )
                    im, ic = img.as_monomial()
                    if ic * ic != 1:
                        raise InexactDivision(
                            "cannot invert non-unit coefficient in substitution"
                        )
                    # ic is ±1, so its e-th power is ±1 as well; int ** negative
                    # would silently promote to float
                    term = term * LaurentPoly.monomial(
                        mono_pow(im, e), ic if e % 2 else 1
                    )
            out = out + term
        return out

    # -- exact division ----------------------------------------------

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Return self / other, raising InexactDivision unless exact over ℤ.

        Strategy: strip the per-variable minimum exponent from numerator and
        denominator separately (a monomial factor each), divide the two
        resulting honest polynomials by multivariate long division over ℚ in
        graded-lex order, and reattach the monomial difference.  Exactness of
        the original Laurent division is equivalent to exactness of the
        stripped polynomial division, because per-variable minimal degrees
        are additive over products.
        """
        if not other.terms:
            raise ZeroDivisionError("Laurent division by zero")
        if not self.terms:
            return LaurentPoly()
        if other.is_monomial():
            bm, bc = other.as_monomial()
            out: dict[Mono, int] = {}
            for m, c in self.terms.items():
                q, r = divmod(c, bc)
                if r:
                    raise InexactDivision("coefficient not divisible")
                out[mono_div(m, bm)] = q
            res = LaurentPoly()
            res.terms = out
            return res

        vars_sorted = sorted(self.variables() | other.variables())
        index = {k: n for n, k in enumerate(vars_sorted)}
        nv = len(vars_sorted)

        def vec(m: Mono) -> list[int]:
            row = [0] * nv
            for k, e in m:
                row[index[k]] = e
            return row

        def stripped(poly: LaurentPoly) -> tuple[dict[tuple[int, ...], Fraction], list[int]]:
            rows = {tuple(vec(m)): Fraction(c) for m, c in poly.terms.items()}
            mins = [min(r[j] for r in rows) for j in range(nv)]
            shifted = {
                tuple(a - b for a, b in zip(r, mins)): c for r, c in rows.items()
            }
            return shifted, mins

        num, num_shift = stripped(self)
        den, den_shift = stripped(other)

        def order_key(v: tuple[int, ...]) -> tuple:
            return (sum(v), v)

        lead_den = max(den, key=order_key)
        lead_den_c = den[lead_den]

        quo: dict[tuple[int, ...], Fraction] = {}
        work = dict(num)
        while work:
            lead = max(work, key=order_key)
            diff = tuple(a - b for a, b in zip(lead, lead_den))
            if any(d < 0 for d in diff):
                raise InexactDivision("remainder is nonzero")
            coeff = work[lead] / lead_den_c
            quo[diff] = quo.get(diff, Fraction(0)) + coeff
            for dv, dc in den.items():
                tgt = tuple(a + b for a, b in zip(diff, dv))
                newc = work.get(tgt, Fraction(0)) - coeff * dc
                if newc:
                    work[tgt] = newc
                else:
                    work.pop(tgt, None)

        out_terms: dict[Mono, int] = {}
        for v, c in quo.items():
            if c == 0:
                continue
            if c.denominator != 1:
                raise InexactDivision("quotient has fractional coefficient")
            powers = {}
            for j in range(nv):
                e = v[j] + num_shift[j] - den_shift[j]
                if e:
                    powers[vars_sorted[j]] = e
            out_terms[mono_from_dict(powers)] = int(c)
        res = LaurentPoly()
        res.terms = out_terms
        if res * other != self:
            raise InexactDivision("verification of exact division failed")
        return res

    # -- presentation ------------------------------------------------

    def sorted_terms(self) -> list[tuple[Mono, int]]:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            if m == MONO_ONE:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(mono_key_str(m))
            else:
                parts.append(f"{c}*{mono_key_str(m)}")
        return " + ".join(parts)

    def to_json_dict(self) -> dict[str, int]:
        """JSON-friendly {monomial string: coefficient} with sorted keys."""
        return {mono_key_str(m): c for m, c in self.sorted_terms()}
