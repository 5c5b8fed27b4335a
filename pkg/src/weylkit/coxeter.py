"""Finite and affine Weyl groups of a root datum.

Elements of the affine group W = W_f x ZR are stored as a finite part
(acting on the weight lattice) together with a root-lattice translation,
so equality is a plain component comparison and no word rewriting is
needed.  Words, lengths, Bruhat order and the p-dilated dot action are
all derived from that normal form.

Generator indexing: indices 0 .. rank-1 are the finite simple
reflections, index rank is the extra affine reflection s0.

>>> from weylkit.lattice import build_root_datum, Weight
>>> d = build_root_datum("A1", "sc")
>>> s1, s0 = generators(d)
>>> dot_p(s0, Weight((0,)), 5)
Weight(coords=(8,))
>>> length(multiply(s0, s1))
2
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from weylkit.lattice import (
    Coroot,
    RootDatum,
    Weight,
    coxeter_number,
    is_dominant,
    is_p_restricted,
)

__all__ = [
    "AffineWeylElement",
    "FiniteWeylElement",
    "bruhat_leq",
    "count_p_restricted_in_orbit",
    "dominant_orbit",
    "dot_p",
    "element_to_json",
    "embed_finite",
    "enumerate_finite_weyl",
    "generators",
    "identity_element",
    "inverse",
    "is_min_coset_rep_fW",
    "is_p_regular",
    "jantzen_condition",
    "length",
    "longest_finite_element",
    "multiply",
    "reduced_word",
    "same_block",
]

Matrix = tuple[tuple[int, ...], ...]


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n))


def _mat_vec(a: Matrix, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


@dataclass(frozen=True, eq=False)
class FiniteWeylElement:
    """Finite Weyl group element.

    ``matrix`` acts on fundamental-weight coordinates, ``root_matrix`` on
    simple-root coordinates; both inverses are kept so that group
    inversion and the length formula stay integer matrix arithmetic.
    """

    datum: RootDatum
    matrix: Matrix
    inv_matrix: Matrix
    root_matrix: Matrix
    inv_root_matrix: Matrix

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteWeylElement):
            return NotImplemented
        return self.matrix == other.matrix and (
            self.datum is other.datum or self.datum == other.datum)

    def __hash__(self) -> int:
        cached = self.__dict__.get("_hash")
        if cached is None:
            cached = hash((hash(self.datum), self.matrix))
            object.__setattr__(self, "_hash", cached)
        return cached

    def apply(self, weight: Weight) -> Weight:
        return Weight(_mat_vec(self.matrix, weight.coords))

    @property
    def is_identity(self) -> bool:
        return self.matrix == _identity(self.datum.rank)


@dataclass(frozen=True, eq=False)
class AffineWeylElement:
    """Affine Weyl group element t_gamma * w.

    ``translation`` is gamma in simple-root coordinates (an element of
    the root lattice), ``finite`` is w.
    """

    finite: FiniteWeylElement
    translation: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "translation",
                           tuple(int(c) for c in self.translation))

    @property
    def datum(self) -> RootDatum:
        return self.finite.datum

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineWeylElement):
            return NotImplemented
        return (self.translation == other.translation
                and self.finite == other.finite)

    def __hash__(self) -> int:
        cached = self.__dict__.get("_hash")
        if cached is None:
            cached = hash((hash(self.finite), self.translation))
            object.__setattr__(self, "_hash", cached)
        return cached

    @property
    def is_identity(self) -> bool:
        return (all(c == 0 for c in self.translation)
                and self.finite.is_identity)


def _simple_reflection(datum: RootDatum, i: int) -> FiniteWeylElement:
    rank = datum.rank
    m = [[1 if a == b else 0 for b in range(rank)] for a in range(rank)]
    for a in range(rank):
        m[a][i] -= datum.cartan[a][i]
    n = [[1 if a == b else 0 for b in range(rank)] for a in range(rank)]
    for j in range(rank):
        n[i][j] -= datum.cartan[i][j]
    mt = tuple(tuple(row) for row in m)
    nt = tuple(tuple(row) for row in n)
    return FiniteWeylElement(datum, mt, mt, nt, nt)


def _reflection_for_root(datum: RootDatum, index: int) -> FiniteWeylElement:
    """Reflection in the positive root at ``index``."""
    rank = datum.rank
    wt = datum.positive_roots[index][0].coords
    c = datum.positive_roots[index][1].coords
    alpha = datum.root_alpha[index]
    m = tuple(tuple((1 if a == b else 0) - c[b] * wt[a] for b in range(rank))
              for a in range(rank))
    n = tuple(tuple(
        (1 if a == j else 0)
        - sum(datum.cartan[k][j] * c[k] for k in range(rank)) * alpha[a]
        for j in range(rank)) for a in range(rank))
    return FiniteWeylElement(datum, m, m, n, n)


class _Context:
    """Per-datum caches: generators, root signs, Bruhat memo, W_f list."""

    def __init__(self, datum: RootDatum) -> None:
        self.datum = datum
        rank = datum.rank
        zero = (0,) * rank
        ident = FiniteWeylElement(datum, _identity(rank), _identity(rank),
                                  _identity(rank), _identity(rank))
        self.identity = AffineWeylElement(ident, zero)
        finite_gens = [_simple_reflection(datum, i) for i in range(rank)]
        self.finite_gens = [AffineWeylElement(g, zero) for g in finite_gens]
        # the affine generator reflects in the wall cut out by the
        # highest coroot; its root is the dominant short root
        short_idx = max(range(len(datum.positive_roots)),
                        key=lambda k: sum(datum.positive_roots[k][1].coords))
        s_beta = _reflection_for_root(datum, short_idx)
        self.s0 = AffineWeylElement(s_beta, datum.root_alpha[short_idx])
        self.gens = self.finite_gens + [self.s0]
        self.pos_pairs = [(w.coords, c.coords) for w, c in datum.positive_roots]
        self.root_sign: dict[tuple[int, ...], int] = {}
        for w, _ in datum.positive_roots:
            self.root_sign[w.coords] = 1
            self.root_sign[tuple(-x for x in w.coords)] = -1
        self.bruhat_memo: dict[tuple[AffineWeylElement, AffineWeylElement], bool] = {}
        self._finite_list: list[tuple[FiniteWeylElement, int]] | None = None

    def finite_elements(self) -> list[tuple[FiniteWeylElement, int]]:
        if self._finite_list is None:
            seen = {self.identity.finite: 0}
            frontier = [self.identity.finite]
            depth = 0
            while frontier:
                depth += 1
                nxt = []
                for w in frontier:
                    for g in self.finite_gens:
                        prod = _compose(w, g.finite)
                        if prod not in seen:
                            seen[prod] = depth
                            nxt.append(prod)
                frontier = nxt
            self._finite_list = sorted(seen.items(),
                                       key=lambda wl: (wl[1], wl[0].matrix))
        return self._finite_list


@lru_cache(maxsize=None)
def _context(datum: RootDatum) -> _Context:
    return _Context(datum)


def _compose(a: FiniteWeylElement, b: FiniteWeylElement) -> FiniteWeylElement:
    return FiniteWeylElement(
        a.datum,
        _mat_mul(a.matrix, b.matrix),
        _mat_mul(b.inv_matrix, a.inv_matrix),
        _mat_mul(a.root_matrix, b.root_matrix),
        _mat_mul(b.inv_root_matrix, a.inv_root_matrix),
    )


def identity_element(datum: RootDatum) -> AffineWeylElement:
    return _context(datum).identity


def generators(datum: RootDatum) -> list[AffineWeylElement]:
    """The rank+1 affine generators, finite simples first, then s0.

    >>> from weylkit.lattice import build_root_datum
    >>> len(generators(build_root_datum("A2")))
    3
    """
    return list(_context(datum).gens)


def embed_finite(w: FiniteWeylElement) -> AffineWeylElement:
    """View a finite element as an affine one (zero translation)."""
    return AffineWeylElement(w, (0,) * w.datum.rank)


def multiply(x: AffineWeylElement, y: AffineWeylElement) -> AffineWeylElement:
    """Group law (t_g1 w1)(t_g2 w2) = t_{g1 + w1(g2)} (w1 w2)."""
    if x.datum is not y.datum and x.datum != y.datum:
        raise ValueError("elements belong to different root data")
    moved = _mat_vec(x.finite.root_matrix, y.translation)
    trans = tuple(a + b for a, b in zip(x.translation, moved))
    return AffineWeylElement(_compose(x.finite, y.finite), trans)


def inverse(x: AffineWeylElement) -> AffineWeylElement:
    """Group inverse t_{-w^{-1}(gamma)} w^{-1}."""
    f = x.finite
    finv = FiniteWeylElement(f.datum, f.inv_matrix, f.matrix,
                             f.inv_root_matrix, f.root_matrix)
    trans = tuple(-c for c in _mat_vec(f.inv_root_matrix, x.translation))
    return AffineWeylElement(finv, trans)


def dot_p(x: AffineWeylElement, weight: Weight, p: int) -> Weight:
    """p-dilated dot action: t_gamma w acts by w(l + rho) - rho + p*gamma.

    >>> from weylkit.lattice import build_root_datum, Weight
    >>> d = build_root_datum("A1")
    >>> s1, s0 = generators(d)
    >>> dot_p(s1, Weight((0,)), 5)
    Weight(coords=(-2,))
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    datum = x.datum
    rank = datum.rank
    shifted = tuple(c + 1 for c in weight.coords)
    moved = _mat_vec(x.finite.matrix, shifted)
    gamma_wt = tuple(
        sum(datum.cartan[a][j] * x.translation[j] for j in range(rank))
        for a in range(rank))
    return Weight(tuple(moved[a] - 1 + p * gamma_wt[a] for a in range(rank)))


def _as_affine(x: AffineWeylElement | FiniteWeylElement) -> AffineWeylElement:
    if isinstance(x, FiniteWeylElement):
        return embed_finite(x)
    return x


@lru_cache(maxsize=None)
def _length(x: AffineWeylElement) -> int:
    # Iwahori-Matsumoto: sum over positive roots a of |<gamma, a_check>|
    # when w^{-1}(a) stays positive and |<gamma, a_check> - 1| otherwise.
    ctx = _context(x.datum)
    datum = x.datum
    rank = datum.rank
    gamma_wt = tuple(
        sum(datum.cartan[a][j] * x.translation[j] for j in range(rank))
        for a in range(rank))
    inv = x.finite.inv_matrix
    total = 0
    for wt, c in ctx.pos_pairs:
        n = sum(gamma_wt[k] * c[k] for k in range(rank))
        image = _mat_vec(inv, wt)
        if ctx.root_sign[image] > 0:
            total += abs(n)
        else:
            total += abs(n - 1)
    return total


def length(x: AffineWeylElement | FiniteWeylElement) -> int:
    """Coxeter length, via the translation-and-inversion count.

    >>> from weylkit.lattice import build_root_datum
    >>> d = build_root_datum("A1")
    >>> s1, s0 = generators(d)
    >>> length(multiply(s0, s1))  # the basic translation
    2
    """
    return _length(_as_affine(x))


@lru_cache(maxsize=None)
def _reduced_word_t(x: AffineWeylElement) -> tuple[int, ...]:
    ctx = _context(x.datum)
    word: list[int] = []
    cur = x
    cur_len = _length(cur)
    while cur_len > 0:
        for i, s in enumerate(ctx.gens):
            nxt = multiply(s, cur)
            if _length(nxt) < cur_len:
                word.append(i)
                cur = nxt
                cur_len -= 1
                break
        else:
            raise AssertionError("element of positive length has no descent")
    return tuple(word)


def reduced_word(x: AffineWeylElement | FiniteWeylElement) -> list[int]:
    """One reduced expression, as generator indices, left descents first.

    Multiplying the listed generators in order reproduces the element.
    """
    return list(_reduced_word_t(_as_affine(x)))


def bruhat_leq(x: AffineWeylElement | FiniteWeylElement,
               y: AffineWeylElement | FiniteWeylElement) -> bool:
    """Bruhat order via the descent recursion.

    With s a left descent of y: if s is also a descent of x then
    x <= y iff sx <= sy, otherwise x <= y iff x <= sy.
    """
    x = _as_affine(x)
    y = _as_affine(y)
    if x.datum is not y.datum and x.datum != y.datum:
        raise ValueError("elements belong to different root data")
    ctx = _context(x.datum)
    memo = ctx.bruhat_memo

    def rec(a: AffineWeylElement, b: AffineWeylElement) -> bool:
        if a == b:
            return True
        la, lb = _length(a), _length(b)
        if la >= lb:
            return False
        key = (a, b)
        got = memo.get(key)
        if got is not None:
            return got
        for s in ctx.gens:
            sb = multiply(s, b)
            if _length(sb) < lb:
                sa = multiply(s, a)
                if _length(sa) < la:
                    res = rec(sa, sb)
                else:
                    res = rec(a, sb)
                break
        else:
            raise AssertionError("no descent found")
        memo[key] = res
        return res

    return rec(x, y)


def is_min_coset_rep_fW(x: AffineWeylElement) -> bool:
    """True iff no finite simple reflection shortens x from the left."""
    ctx = _context(x.datum)
    lx = _length(x)
    return all(_length(multiply(s, x)) > lx for s in ctx.finite_gens)


def _elements_up_to_length(datum: RootDatum, max_len: int) -> list[AffineWeylElement]:
    ctx = _context(datum)
    seen = {ctx.identity}
    frontier = [ctx.identity]
    for target in range(1, max_len + 1):
        nxt = []
        for x in frontier:
            for s in ctx.gens:
                y = multiply(x, s)
                if y not in seen and _length(y) == target:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return list(seen)


def dominant_orbit(datum: RootDatum, p: int, max_len: int
                   ) -> list[tuple[AffineWeylElement, Weight]]:
    """Minimal coset representatives with dominant dot-image of zero.

    All x of length <= max_len with no finite left descent and with
    x . 0 dominant, paired with that weight, sorted by length and then
    by reduced word.

    >>> from weylkit.lattice import build_root_datum
    >>> d = build_root_datum("A1")
    >>> [w.coords[0] for _, w in dominant_orbit(d, 5, 6)]
    [0, 8, 10, 18, 20, 28, 30]
    """
    h = coxeter_number(datum)
    if p < h:
        raise ValueError(f"p must be at least the Coxeter number {h}")
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    zero = Weight((0,) * datum.rank)
    out = []
    for x in _elements_up_to_length(datum, max_len):
        if not is_min_coset_rep_fW(x):
            continue
        w = dot_p(x, zero, p)
        if is_dominant(w):
            out.append((x, w))
    out.sort(key=lambda xw: (_length(xw[0]), _reduced_word_t(xw[0])))
    return out


def is_p_regular(datum: RootDatum, weight: Weight, p: int) -> bool:
    """True iff no affine wall contains the weight (rho-shifted, mod p)."""
    if p < 1:
        raise ValueError("p must be at least 1")
    for wt, c in datum.positive_roots:
        val = sum((weight.coords[k] + 1) * c.coords[k]
                  for k in range(datum.rank))
        if val % p == 0:
            return False
    return True


def _canonical_chamber_point(datum: RootDatum, nu: tuple[int, ...], p: int
                             ) -> tuple[int, ...]:
    """Reflect nu into {0 <= <nu, a_i> for all i, <nu, hc> <= p}.

    hc is the highest coroot.  Bounded loop as an internal-error guard.
    """
    ctx = _context(datum)
    rank = datum.rank
    beta_wt, beta_c = datum.highest_coroot()
    cur = list(nu)
    for _ in range(10 ** 6):
        neg = next((i for i in range(rank) if cur[i] < 0), None)
        if neg is not None:
            coeff = cur[neg]
            for a in range(rank):
                cur[a] -= coeff * datum.cartan[a][neg]
            continue
        t = sum(cur[k] * beta_c.coords[k] for k in range(rank))
        if t > p:
            for a in range(rank):
                cur[a] -= (t - p) * beta_wt.coords[a]
            continue
        return tuple(cur)
    raise RuntimeError("wall reflection failed to reach the closed alcove")


def same_block(datum: RootDatum, lam: Weight, mu: Weight, p: int) -> bool:
    """Linkage test: do the p-dilated dot orbits of lam and mu agree?

    Each rho-shifted weight is reflected to its unique representative in
    the closed fundamental alcove and the representatives are compared.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    a = _canonical_chamber_point(
        datum, tuple(c + 1 for c in lam.coords), p)
    b = _canonical_chamber_point(
        datum, tuple(c + 1 for c in mu.coords), p)
    return a == b


def jantzen_condition(x: AffineWeylElement, p: int) -> bool:
    """Bound test <x . 0 + rho, a_check> <= p(p - h + 2) over positive a."""
    datum = x.datum
    w = dot_p(x, Weight((0,) * datum.rank), p)
    if not is_dominant(w):
        raise ValueError("x must have a dominant dot-image of zero")
    h = coxeter_number(datum)
    bound = p * (p - h + 2)
    for wt, c in datum.positive_roots:
        val = sum((w.coords[k] + 1) * c.coords[k] for k in range(datum.rank))
        if val > bound:
            return False
    return True


def count_p_restricted_in_orbit(datum: RootDatum, p: int) -> int:
    """Number of p-restricted weights in the dot orbit of zero.

    Scans the restricted box and compares canonical alcove
    representatives; equals |W_f| / (index of connection).

    >>> from weylkit.lattice import build_root_datum
    >>> count_p_restricted_in_orbit(build_root_datum("A2"), 5)
    2
    """
    h = coxeter_number(datum)
    if p < h:
        raise ValueError(f"p must be at least the Coxeter number {h}")
    target = _canonical_chamber_point(datum, (1,) * datum.rank, p)
    count = 0
    for coords in itertools.product(range(p), repeat=datum.rank):
        nu = tuple(c + 1 for c in coords)
        if _canonical_chamber_point(datum, nu, p) == target:
            count += 1
    return count


def enumerate_finite_weyl(datum: RootDatum) -> list[tuple[FiniteWeylElement, int]]:
    """All finite Weyl group elements with their lengths."""
    return list(_context(datum).finite_elements())


def longest_finite_element(datum: RootDatum) -> FiniteWeylElement:
    """The longest element of the finite Weyl group."""
    elems = _context(datum).finite_elements()
    return max(elems, key=lambda wl: wl[1])[0]


def element_to_json(x: AffineWeylElement) -> dict:
    return {
        "word": reduced_word(x),
        "finite_matrix": [list(row) for row in x.finite.matrix],
        "translation": list(x.translation),
    }


if __name__ == "__main__":
    import doctest

    doctest.testmod()
