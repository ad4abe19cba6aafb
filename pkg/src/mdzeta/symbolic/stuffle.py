"""Infinite-sum (stuffle) expansions of products.

Splitting a product of sums according to how the summation variables
compare gives a sum of nested sums.  Three orderings are covered:

* the integers (classical MZVs): the quasi-shuffle product;
* the upper cone C+ of an imaginary field, totally ordered by
  ``alpha < beta  <=>  beta - alpha in C+``: the same quasi-shuffle on
  two-row exponent letters;
* a real cone, where the mu- and nu-coordinates are compared separately
  and the product splits into 3 x 3 regions.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from ..errors import UnsupportedDepth
from ..field import Signature
from .combo import LinearCombo
from .symbols import Exponent, MdzvSymbol, MzvSymbol, Variant, add_exponents, plain, sub


def _merge_letters(x, y):
    if isinstance(x, tuple):
        return tuple(add_exponents(p, q) for p, q in zip(x, y))
    return add_exponents(x, y)


@lru_cache(maxsize=4096)
def _quasi_shuffle(u: tuple, v: tuple) -> tuple:
    # first letter = smallest summation index
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: Counter = Counter()
    for w, c in _quasi_shuffle(u[1:], v):
        out[(u[0],) + w] += c
    for w, c in _quasi_shuffle(u, v[1:]):
        out[(v[0],) + w] += c
    for w, c in _quasi_shuffle(u[1:], v[1:]):
        out[(_merge_letters(u[0], v[0]),) + w] += c
    return tuple(out.items())


def quasi_shuffle(u, v) -> Counter:
    """Quasi-shuffle of two letter words, as a multiset of words."""
    return Counter(dict(_quasi_shuffle(tuple(u), tuple(v))))


def mzv_stuffle(s1: MzvSymbol, s2: MzvSymbol) -> LinearCombo:
    return LinearCombo((MzvSymbol(w), c) for w, c in quasi_shuffle(s1.exponents, s2.exponents).items())


def _letters(e) -> tuple:
    if isinstance(e, MdzvSymbol):
        if e.variant not in (Variant.PLAIN, Variant.SUP1):
            raise UnsupportedDepth(f"{e.variant.value} is not an ordered sum over C+")
        return tuple(zip(e.top, e.bottom))
    a, c = e
    return ((a, c),)


def _from_letters(word) -> MdzvSymbol:
    top = tuple(t for t, _ in word)
    bottom = tuple(b for _, b in word)
    if len(word) == 1:
        return plain(top[0], bottom[0])
    return MdzvSymbol(Variant.SUP1, top, bottom)


def stuffle_imaginary(e1, e2) -> LinearCombo:
    """Stuffle over the totally ordered upper cone.

    Factors are ``(a, c)`` pairs for ``z(a;c)`` or depth-2 ``z1`` symbols.
    Depth-3 outputs are printable only.
    """
    u, v = _letters(e1), _letters(e2)
    if len(u) > 1 and len(v) > 1:
        raise UnsupportedDepth("stuffle of two depth-2 factors is not supported")
    if len(u) + len(v) > 3:
        raise UnsupportedDepth("factors of depth > 2 are not supported")
    return LinearCombo((_from_letters(w), c) for w, c in quasi_shuffle(u, v).items())


# (mu-comparison, nu-comparison) of alpha against beta -> variant and whether
# the roles of alpha and beta swap to reach the defining inequality
_REAL_REGIONS = {
    ("<", "<"): (Variant.SUB1, False),
    ("=", "<"): (Variant.SUB01, False),
    (">", "<"): (Variant.SUBRHO, False),
    ("<", "="): (Variant.SUB10, False),
    ("=", "="): (Variant.PLAIN, False),
    (">", "="): (Variant.SUB10, True),
    ("<", ">"): (Variant.SUBRHO, True),
    ("=", ">"): (Variant.SUB01, True),
    (">", ">"): (Variant.SUB1, True),
}


def real_regions() -> list[tuple[tuple[str, str], Variant, bool]]:
    return [(k, v, swap) for k, (v, swap) in _REAL_REGIONS.items()]


def stuffle_real(e1: tuple[Exponent, Exponent], e2: tuple[Exponent, Exponent]) -> LinearCombo:
    """Nine-region stuffle of ``z(a;c) * z(b;d)`` on a real cone."""
    (a, c), (b, d) = e1, e2
    terms = []
    for _, variant, swap in real_regions():
        if variant is Variant.PLAIN:
            terms.append((plain(add_exponents(a, b), add_exponents(c, d)), 1))
        elif swap:
            terms.append((sub(variant, b, a, d, c), 1))
        else:
            terms.append((sub(variant, a, b, c, d), 1))
    return LinearCombo(terms)


def lemma_rewrite(c: LinearCombo) -> LinearCombo:
    """Replace every ``s1`` by ``z1`` with the same exponents.

    On a real cone the coordinate-wise ordered sum equals the pair sum by
    the substitution ``gamma = beta - alpha``.
    """

    def swap(sym):
        if isinstance(sym, MdzvSymbol) and sym.variant is Variant.SUB1:
            return MdzvSymbol(Variant.SUP1, sym.top, sym.bottom)
        return sym

    return c.map_symbols(swap)


def stuffle(signature: Signature, e1, e2) -> LinearCombo:
    if signature is Signature.REAL:
        return stuffle_real(e1, e2)
    return stuffle_imaginary(e1, e2)
