"""Hecke algebras over integer Laurent polynomials.

Standard basis {h_x}, bar involution, and the Kazhdan-Lusztig basis
{b_x}, for the finite or affine Weyl group of a root datum.  The
normalization is fixed by h_s^2 = h_id + (v^{-1} - v) h_s, so that
b_s = h_s + v is self-dual.

In this normalization every b_x = h_x + sum over y < x of P_{y,x} h_y
where P_{y,x} has nonnegative coefficients supported on exponents in
[1, l(x) - l(y)] of the correct parity.

>>> from weylkit.lattice import build_root_datum
>>> from weylkit.coxeter import generators, multiply
>>> d = build_root_datum("A1")
>>> s1, s0 = generators(d)
>>> print(kl_polynomial(s0, multiply(multiply(s0, s1), s0)))
v^2
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import lru_cache

from weylkit.lattice import RootDatum
from weylkit.coxeter import (
    AffineWeylElement,
    FiniteWeylElement,
    embed_finite,
    generators,
    identity_element,
    length,
    multiply,
    reduced_word,
)

__all__ = [
    "HeckeAlgebra",
    "HeckeElement",
    "LaurentPolynomial",
    "affine_hecke",
    "bar",
    "evaluate_at_one",
    "finite_hecke",
    "kl_basis_element",
    "kl_polynomial",
    "mult_standard_by_gen",
]


def _norm_coeffs(pairs) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = {}
    for exp, c in pairs:
        acc[exp] = acc.get(exp, 0) + c
    return tuple(sorted((e, c) for e, c in acc.items() if c != 0))


@dataclass(frozen=True)
class LaurentPolynomial:
    """Sparse integer Laurent polynomial in v.

    ``coeffs`` holds (exponent, coefficient) pairs, ascending, with no
    zero coefficients.

    >>> p = LaurentPolynomial.v() + LaurentPolynomial.monomial(1, -1)
    >>> print(p)
    v^-1 + v
    >>> print(p * p)
    v^-2 + 2 + v^2
    """

    coeffs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for (e1, c1), (e2, _) in zip(self.coeffs, self.coeffs[1:]):
            if e1 >= e2:
                raise ValueError("exponents must be strictly ascending")
        if any(c == 0 for _, c in self.coeffs):
            raise ValueError("zero coefficients must not be stored")

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls(((0, 1),))

    @classmethod
    def v(cls) -> "LaurentPolynomial":
        return cls(((1, 1),))

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> "LaurentPolynomial":
        if coefficient == 0:
            return cls(())
        return cls(((exponent, coefficient),))

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "LaurentPolynomial":
        return cls(_norm_coeffs(d.items()))

    def coefficient(self, exponent: int) -> int:
        for e, c in self.coeffs:
            if e == exponent:
                return c
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return LaurentPolynomial(_norm_coeffs(self.coeffs + other.coeffs))

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple((e, -c) for e, c in self.coeffs))

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial(
                tuple((e, c * other) for e, c in self.coeffs)
                if other else ())
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial(_norm_coeffs(
            (e1 + e2, c1 * c2)
            for e1, c1 in self.coeffs for e2, c2 in other.coeffs))

    def __rmul__(self, other) -> "LaurentPolynomial":
        return self.__mul__(other)

    def bar(self) -> "LaurentPolynomial":
        """The involution v -> v^{-1}."""
        return LaurentPolynomial(tuple(sorted((-e, c) for e, c in self.coeffs)))

    def to_json_dict(self) -> dict[str, int]:
        return {str(e): c for e, c in self.coeffs}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.coeffs:
            if e == 0:
                term = str(c)
            else:
                power = "v" if e == 1 else f"v^{e}"
                if c == 1:
                    term = power
                elif c == -1:
                    term = f"-{power}"
                else:
                    term = f"{c}*{power}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out


def evaluate_at_one(p: LaurentPolynomial) -> int:
    """Sum of coefficients, i.e. the specialization v = 1.

    >>> evaluate_at_one(LaurentPolynomial.from_dict({-1: 1, 1: 1}))
    2
    """
    return sum(c for _, c in p.coeffs)


_V = LaurentPolynomial.v()
_VINV = LaurentPolynomial.monomial(1, -1)
_VINV_MINUS_V = _VINV - _V
_V_MINUS_VINV = _V - _VINV


@dataclass(frozen=True, eq=False)
class HeckeElement:
    """Finitely supported combination of standard basis elements h_x.

    ``terms`` pairs group elements with nonzero Laurent polynomials,
    sorted by (length, reduced word) for deterministic printing.
    """

    algebra: "HeckeAlgebra"
    terms: tuple[tuple[AffineWeylElement, LaurentPolynomial], ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.terms))

    def _index(self) -> dict[AffineWeylElement, LaurentPolynomial]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = dict(self.terms)
            object.__setattr__(self, "_idx", idx)
        return idx

    def support(self) -> list[AffineWeylElement]:
        return [x for x, _ in self.terms]

    def coefficient(self, x: AffineWeylElement | FiniteWeylElement
                    ) -> LaurentPolynomial:
        if isinstance(x, FiniteWeylElement):
            x = embed_finite(x)
        return self._index().get(x, LaurentPolynomial.zero())

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self.algebra._check_same(other)
        acc = dict(self.terms)
        for x, p in other.terms:
            q = acc.get(x, LaurentPolynomial.zero()) + p
            if q:
                acc[x] = q
            else:
                acc.pop(x, None)
        return self.algebra._from_map(acc)

    def __neg__(self) -> "HeckeElement":
        return self.algebra._from_map({x: -p for x, p in self.terms})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def __mul__(self, other) -> "HeckeElement":
        if isinstance(other, (int, LaurentPolynomial)):
            return self.scale(other)
        if isinstance(other, HeckeElement):
            return self.algebra._product(self, other)
        return NotImplemented

    def __rmul__(self, other) -> "HeckeElement":
        if isinstance(other, (int, LaurentPolynomial)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "HeckeElement":
        if isinstance(c, int):
            c = LaurentPolynomial.monomial(c, 0)
        return self.algebra._from_map(
            {x: p * c for x, p in self.terms})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for x, p in self.terms:
            word = reduced_word(x)
            label = "h_id" if not word else "h_" + "".join(str(i) for i in word)
            if p == LaurentPolynomial.one():
                parts.append(label)
            else:
                body = str(p)
                if len(p.coeffs) > 1:
                    body = f"({body})"
                parts.append(f"{body}*{label}")
        return " + ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"word": reduced_word(x), "poly": p.to_json_dict()}
                for x, p in self.terms
            ]
        }


class HeckeAlgebra:
    """Hecke algebra of the finite or affine Weyl group of a datum.

    The Kazhdan-Lusztig memo cache is shared per algebra handle and
    guarded by a lock, so concurrent reads see a single logical map.
    """

    def __init__(self, datum: RootDatum, affine: bool = True) -> None:
        self.datum = datum
        self.affine = affine
        all_gens = generators(datum)
        self.gens = all_gens if affine else all_gens[:datum.rank]
        self._kl: dict[AffineWeylElement, HeckeElement] = {}
        self._bar_std: dict[AffineWeylElement, HeckeElement] = {}
        self._lock = threading.RLock()

    def _check_same(self, other: HeckeElement) -> None:
        if other.algebra is not self:
            raise ValueError("elements belong to different Hecke algebras")

    def _check_member(self, x: AffineWeylElement) -> AffineWeylElement:
        if isinstance(x, FiniteWeylElement):
            x = embed_finite(x)
        if x.datum != self.datum:
            raise ValueError("element belongs to a different root datum")
        if not self.affine and any(c != 0 for c in x.translation):
            raise ValueError("finite Hecke algebra got an affine element")
        return x

    def _from_map(self, m: dict[AffineWeylElement, LaurentPolynomial]
                  ) -> HeckeElement:
        terms = tuple(sorted(
            ((x, p) for x, p in m.items() if p),
            key=lambda xp: (length(xp[0]), reduced_word(xp[0]))))
        return HeckeElement(self, terms)

    def zero(self) -> HeckeElement:
        return HeckeElement(self, ())

    def unit(self) -> HeckeElement:
        return self.standard_basis_element(identity_element(self.datum))

    def standard_basis_element(self, x) -> HeckeElement:
        x = self._check_member(x)
        return HeckeElement(self, ((x, LaurentPolynomial.one()),))

    def _gen_element(self, s) -> AffineWeylElement:
        if isinstance(s, int):
            if not 0 <= s < len(self.gens):
                raise ValueError(f"generator index {s} out of range")
            return self.gens[s]
        s = self._check_member(s)
        if s not in self.gens:
            raise ValueError("not a generator of this algebra")
        return s

    def mult_standard_by_gen(self, h: HeckeElement, s,
                             side: str = "right") -> HeckeElement:
        """Multiply by h_s, using the quadratic relation when shortening."""
        self._check_same(h)
        if side not in ("right", "left"):
            raise ValueError("side must be 'right' or 'left'")
        se = self._gen_element(s)
        acc: dict[AffineWeylElement, LaurentPolynomial] = {}

        def bump(x, p):
            q = acc.get(x, LaurentPolynomial.zero()) + p
            if q:
                acc[x] = q
            else:
                acc.pop(x, None)

        for x, p in h.terms:
            xs = multiply(x, se) if side == "right" else multiply(se, x)
            bump(xs, p)
            if length(xs) < length(x):
                bump(x, p * _VINV_MINUS_V)
        return self._from_map(acc)

    def _product(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        self._check_same(a)
        self._check_same(b)
        out = self.zero()
        for y, p in b.terms:
            piece = a
            for i in reduced_word(y):
                piece = self.mult_standard_by_gen(piece, self.gens[i])
            out = out + piece.scale(p)
        return out

    def _bar_standard(self, x: AffineWeylElement) -> HeckeElement:
        got = self._bar_std.get(x)
        if got is not None:
            return got
        word = reduced_word(x)
        if not word:
            out = self.unit()
        else:
            s = self.gens[word[-1]]
            shorter = multiply(x, s)  # generators are involutions
            prev = self._bar_standard(shorter)
            out = self.mult_standard_by_gen(prev, s) + prev.scale(_V_MINUS_VINV)
        self._bar_std[x] = out
        return out

    def bar(self, h: HeckeElement) -> HeckeElement:
        """Ring involution: bar(v) = v^{-1}, bar(h_s) = h_s + v - v^{-1}."""
        self._check_same(h)
        with self._lock:
            out = self.zero()
            for x, p in h.terms:
                out = out + self._bar_standard(x).scale(p.bar())
            return out

    def kl_basis_element(self, x) -> HeckeElement:
        """The self-dual basis element b_x = sum_{y <= x} P_{y,x} h_y."""
        x = self._check_member(x)
        with self._lock:
            return self._kl_locked(x)

    def _kl_locked(self, x: AffineWeylElement) -> HeckeElement:
        got = self._kl.get(x)
        if got is not None:
            return got
        word = reduced_word(x)
        if not word:
            out = self.unit()
        else:
            s = self.gens[word[-1]]
            shorter = multiply(x, s)
            b_prev = self._kl_locked(shorter)
            # b_{x'} b_s, then strip the mu-correction terms
            out = self.mult_standard_by_gen(b_prev, s) + b_prev.scale(_V)
            for y, p in b_prev.terms:
                if length(multiply(y, s)) < length(y):
                    mu = p.coefficient(1)
                    if mu:
                        out = out - self._kl_locked(y).scale(mu)
        self._kl[x] = out
        return out

    def kl_polynomial(self, y, x) -> LaurentPolynomial:
        """Coefficient of h_y in b_x; zero unless y <= x in Bruhat order."""
        y = self._check_member(y)
        return self.kl_basis_element(x).coefficient(y)


@lru_cache(maxsize=None)
def affine_hecke(datum: RootDatum) -> HeckeAlgebra:
    """The Hecke algebra of the affine Weyl group, one handle per datum."""
    return HeckeAlgebra(datum, affine=True)


@lru_cache(maxsize=None)
def finite_hecke(datum: RootDatum) -> HeckeAlgebra:
    """The Hecke algebra of the finite Weyl group, one handle per datum."""
    return HeckeAlgebra(datum, affine=False)


def _algebra_for(*elems) -> HeckeAlgebra:
    datum = elems[0].datum
    if all(isinstance(e, FiniteWeylElement) for e in elems):
        return finite_hecke(datum)
    return affine_hecke(datum)


def mult_standard_by_gen(h: HeckeElement, s, side: str = "right"
                         ) -> HeckeElement:
    """h * h_s (or h_s * h): h_x h_s = h_{xs} when xs > x, and
    h_{xs} + (v^{-1} - v) h_x when xs < x.
    """
    return h.algebra.mult_standard_by_gen(h, s, side=side)


def bar(h: HeckeElement) -> HeckeElement:
    """Bar involution of a Hecke element."""
    return h.algebra.bar(h)


def kl_basis_element(x) -> HeckeElement:
    """b_x in the Hecke algebra x belongs to (finite element: finite
    algebra; affine element: affine algebra).

    >>> from weylkit.lattice import build_root_datum
    >>> from weylkit.coxeter import generators
    >>> d = build_root_datum("A1")
    >>> print(kl_basis_element(generators(d)[1]))
    v*h_id + h_1
    """
    return _algebra_for(x).kl_basis_element(x)


def kl_polynomial(y, x) -> LaurentPolynomial:
    """P_{y,x} for y, x in the same Weyl group."""
    return _algebra_for(y, x).kl_polynomial(y, x)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
