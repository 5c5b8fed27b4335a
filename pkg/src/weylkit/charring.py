"""Characters in the group algebra of the weight lattice.

Exact integer maps Weight -> multiplicity, with the Weyl character
formula (by exact leading-term division), Frobenius twist, tensor
product, the SL2 simple characters via the p-adic digit product, and
expansion of an invariant character in the standard-character basis.

>>> from weylkit.lattice import build_root_datum, Weight
>>> d = build_root_datum("A1")
>>> print(weyl_character(d, Weight((2,))))
e^{-2} + e^{0} + e^{2}
>>> dimension(weyl_character(d, Weight((2,))))
3
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from weylkit.lattice import (
    RootDatum,
    Weight,
    build_root_datum,
    is_dominant,
    is_p_restricted,
)
from weylkit.coxeter import enumerate_finite_weyl

__all__ = [
    "Character",
    "DEFAULT_MAX_TERMS",
    "ResourceLimitError",
    "dimension",
    "expand_in_standard_basis",
    "frobenius_twist",
    "is_weyl_invariant",
    "sl2_simple_character",
    "steinberg_digits",
    "tensor",
    "trivial_character",
    "weyl_character",
]

DEFAULT_MAX_TERMS = 10 ** 6


class ResourceLimitError(RuntimeError):
    """Raised when a character operation exceeds its support cap."""


@dataclass(frozen=True)
class Character:
    """Finitely supported integer combination of e^weight terms."""

    terms: tuple[tuple[Weight, int], ...]

    def __post_init__(self) -> None:
        for (w1, c1), (w2, _) in zip(self.terms, self.terms[1:]):
            if w1.coords >= w2.coords:
                raise ValueError("weights must be strictly ascending")
        if any(c == 0 for _, c in self.terms):
            raise ValueError("zero multiplicities must not be stored")

    @classmethod
    def from_dict(cls, d: dict[Weight, int]) -> "Character":
        return cls(tuple(sorted(
            ((w, c) for w, c in d.items() if c != 0),
            key=lambda wc: wc[0].coords)))

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.terms)

    def coefficient(self, w: Weight) -> int:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = dict(self.terms)
            object.__setattr__(self, "_idx", idx)
        return idx.get(w, 0)

    @property
    def rank(self) -> int | None:
        return len(self.terms[0][0].coords) if self.terms else None

    def _check_rank(self, other: "Character") -> None:
        a, b = self.rank, other.rank
        if a is not None and b is not None and a != b:
            raise ValueError("characters live on different lattices")

    def __add__(self, other: "Character") -> "Character":
        self._check_rank(other)
        acc = dict(self.terms)
        for w, c in other.terms:
            acc[w] = acc.get(w, 0) + c
        return Character.from_dict(acc)

    def __neg__(self) -> "Character":
        return Character(tuple((w, -c) for w, c in self.terms))

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other) -> "Character":
        if isinstance(other, int):
            if other == 0:
                return Character(())
            return Character(tuple((w, c * other) for w, c in self.terms))
        if isinstance(other, Character):
            return tensor(self, other)
        return NotImplemented

    def __rmul__(self, other) -> "Character":
        return self.__mul__(other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms:
            if len(w.coords) == 1:
                expo = str(w.coords[0])
            else:
                expo = "(" + ",".join(str(x) for x in w.coords) + ")"
            term = f"e^{{{expo}}}"
            if c != 1 and c != -1:
                term = f"{abs(c)}*{term}"
            parts.append((c < 0, term))
        neg, body = parts[0]
        out = ("-" if neg else "") + body
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_json_list(self) -> list[dict]:
        return [{"weight": list(w.coords), "mult": c} for w, c in self.terms]


def trivial_character(rank: int) -> Character:
    """The character e^0 of the trivial module."""
    return Character(((Weight((0,) * rank), 1),))


def dimension(ch: Character) -> int:
    """Sum of multiplicities.

    >>> dimension(trivial_character(2))
    1
    """
    return sum(c for _, c in ch.terms)


@lru_cache(maxsize=None)
def _alpha_row_sums(datum: RootDatum) -> tuple[Fraction, ...]:
    """Row sums of the inverse Cartan matrix, as Fractions.

    The dot product with fundamental-weight coordinates is the sum of
    the simple-root coordinates, the height used for term ordering.
    """
    n = datum.rank
    aug = [[Fraction(datum.cartan[i][j]) for j in range(n)]
           + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [row[n:] for row in aug]
    return tuple(sum(inv[i][j] for i in range(n)) for j in range(n))


def _height(datum: RootDatum, coords: tuple[int, ...]) -> Fraction:
    rows = _alpha_row_sums(datum)
    return sum((r * c for r, c in zip(rows, coords)), Fraction(0))


def _order_key(datum: RootDatum, coords: tuple[int, ...]):
    """Total order refining dominance: height, then lexicographic."""
    return (_height(datum, coords), coords)


def weyl_character(datum: RootDatum, highest: Weight,
                   max_terms: int = DEFAULT_MAX_TERMS) -> Character:
    """Character of the induced module with the given highest weight.

    Alternating sum over the finite Weyl group divided exactly by the
    same sum at zero; the quotient is the character.

    >>> from weylkit.lattice import build_root_datum, Weight
    >>> d = build_root_datum("A2")
    >>> dimension(weyl_character(d, Weight((1, 1))))
    8
    """
    if datum.variant != "sc":
        raise ValueError("characters need the simply connected variant")
    if len(highest.coords) != datum.rank:
        raise ValueError("weight rank does not match the datum")
    if not is_dominant(highest):
        raise ValueError("highest weight must be dominant")
    rank = datum.rank
    wf = enumerate_finite_weyl(datum)
    rho1 = Weight((1,) * rank)
    lam1 = Weight(tuple(c + 1 for c in highest.coords))
    # denominator terms e^{w(rho)} and numerator terms e^{w(lam+rho)}
    denom = [(w.apply(rho1).coords, -1 if ln % 2 else 1) for w, ln in wf]
    remainder: dict[tuple[int, ...], int] = {}
    for w, ln in wf:
        mu = w.apply(lam1).coords
        remainder[mu] = remainder.get(mu, 0) + (-1 if ln % 2 else 1)
    quotient: dict[tuple[int, ...], int] = {}
    heap = [(-_height(datum, mu), tuple(-c for c in mu)) for mu in remainder]
    heapq.heapify(heap)
    steps = 0
    while heap:
        negh, negc = heapq.heappop(heap)
        mu = tuple(-c for c in negc)
        c = remainder.get(mu, 0)
        if c == 0:
            continue
        steps += 1
        if steps > max_terms:
            raise ResourceLimitError(
                f"character support exceeded {max_terms} terms")
        nu = tuple(m - 1 for m in mu)  # divide the leading term by e^rho
        quotient[nu] = quotient.get(nu, 0) + c
        for wr, sign in denom:
            key = tuple(n + r for n, r in zip(nu, wr))
            old = remainder.get(key, 0)
            new = old - c * sign
            if new:
                remainder[key] = new
                if old == 0:
                    heapq.heappush(
                        heap, (-_height(datum, key), tuple(-x for x in key)))
            else:
                remainder.pop(key, None)
    if remainder:
        raise RuntimeError("character division left a nonzero remainder")
    return Character.from_dict({Weight(k): v for k, v in quotient.items()})


def is_weyl_invariant(datum: RootDatum, ch: Character) -> bool:
    """Is the support-with-multiplicity stable under every simple
    reflection?
    """
    from weylkit.coxeter import generators
    gens = generators(datum)[:datum.rank]
    table = ch.as_dict()
    for g in gens:
        for w, c in table.items():
            if table.get(g.finite.apply(w), 0) != c:
                return False
    return True


def frobenius_twist(ch: Character, p: int) -> Character:
    """Reindex the support by scaling every weight by p.

    >>> frobenius_twist(trivial_character(1), 7) == trivial_character(1)
    True
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    return Character.from_dict(
        {Weight(tuple(p * c for c in w.coords)): m for w, m in ch.terms})


def tensor(a: Character, b: Character,
           max_terms: int = DEFAULT_MAX_TERMS) -> Character:
    """Product of characters (convolution of supports)."""
    a._check_rank(b)
    acc: dict[Weight, int] = {}
    for wa, ca in a.terms:
        for wb, cb in b.terms:
            w = wa + wb
            acc[w] = acc.get(w, 0) + ca * cb
        if len(acc) > max_terms:
            raise ResourceLimitError(
                f"character support exceeded {max_terms} terms")
    return Character.from_dict(acc)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def _a1() -> RootDatum:
    return build_root_datum("A1", "sc")


def sl2_simple_character(n: int, p: int,
                         max_terms: int = DEFAULT_MAX_TERMS) -> Character:
    """Character of the simple SL2 module of highest weight n in
    characteristic p, as the twisted digit product.

    >>> print(sl2_simple_character(5, 5))
    e^{-5} + e^{5}
    """
    if n < 0:
        raise ValueError("highest weight must be nonnegative")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    d = _a1()
    out = trivial_character(1)
    power = 1
    rem = n
    while True:
        digit = rem % p
        out = tensor(
            out,
            frobenius_twist(weyl_character(d, Weight((digit,)), max_terms),
                            power),
            max_terms)
        rem //= p
        power *= p
        if rem == 0:
            return out


def steinberg_digits(lam: Weight, p: int) -> list[Weight]:
    """Coordinatewise base-p digits: restricted weights with
    lam = sum p^i * digit_i.

    >>> steinberg_digits(Weight((10,)), 5)
    [Weight(coords=(0,)), Weight(coords=(2,))]
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not is_dominant(lam):
        raise ValueError("weight must be dominant")
    digits = []
    rem = list(lam.coords)
    while True:
        digits.append(Weight(tuple(c % p for c in rem)))
        rem = [c // p for c in rem]
        if all(c == 0 for c in rem):
            return digits


@lru_cache(maxsize=None)
def _weyl_cached(datum: RootDatum, highest: Weight) -> Character:
    return weyl_character(datum, highest)


def expand_in_standard_basis(datum: RootDatum, ch: Character
                             ) -> dict[Weight, int]:
    """Unique integers c_mu with ch = sum of c_mu * weyl_character(mu).

    Computed by repeatedly stripping the leading (height-maximal)
    term, which must sit at a dominant weight.

    >>> from weylkit.lattice import build_root_datum, Weight
    >>> d = build_root_datum("A1")
    >>> expand_in_standard_basis(d, sl2_simple_character(8, 5))
    {Weight(coords=(8,)): 1, Weight(coords=(0,)): -1}
    """
    if not is_weyl_invariant(datum, ch):
        raise ValueError("character is not Weyl-invariant")
    out: dict[Weight, int] = {}
    rem = ch.as_dict()
    while rem:
        mu = max(rem, key=lambda w: _order_key(datum, w.coords))
        c = rem[mu]
        if not is_dominant(mu):
            raise RuntimeError("leading term of an invariant character "
                               "must be dominant")
        out[mu] = c
        for w, m in _weyl_cached(datum, mu).terms:
            new = rem.get(w, 0) - c * m
            if new:
                rem[w] = new
            else:
                rem.pop(w, None)
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
