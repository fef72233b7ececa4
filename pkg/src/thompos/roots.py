"""Polynomials in formal Chern roots, and the bundles that carry them.

A :class:`BundleSpec` is a list of root symbols; its Chern classes are the
elementary symmetric functions of the roots. A :class:`VirtualPair` stands for
the virtual bundle E - F.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping

from .chernpoly import C, CP, ChernPolynomial, Variable


class NotSymmetricError(ValueError):
    """Raised with the first adjacent transposition that changes the input."""

    def __init__(self, message: str, transposition: tuple[str, str]):
        self.transposition = transposition
        super().__init__(message)


class RootPolynomial:
    """Integer polynomial in an explicit alphabet of root symbols.

    Monomials are dense exponent tuples aligned with ``alphabet``.
    """

    __slots__ = ("alphabet", "_terms", "_index")

    def __init__(self, alphabet: Iterable[str], terms: Mapping[tuple, int] | None = None):
        self.alphabet = tuple(alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError(f"repeated symbol in alphabet {self.alphabet}")
        self._terms = {m: k for m, k in (terms or {}).items() if k}
        self._index = {s: i for i, s in enumerate(self.alphabet)}

    @classmethod
    def constant(cls, alphabet, value: int) -> RootPolynomial:
        alphabet = tuple(alphabet)
        return cls(alphabet, {(0,) * len(alphabet): value})

    @classmethod
    def symbol(cls, alphabet, name: str) -> RootPolynomial:
        alphabet = tuple(alphabet)
        exps = [0] * len(alphabet)
        exps[alphabet.index(name)] = 1
        return cls(alphabet, {tuple(exps): 1})

    @property
    def terms(self) -> dict[tuple, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degrees(self) -> set[int]:
        return {sum(m) for m in self._terms}

    def degree(self) -> int | None:
        degrees = self.degrees()
        if len(degrees) > 1:
            raise ValueError(f"root polynomial has degrees {sorted(degrees)}")
        return degrees.pop() if degrees else None

    def _check(self, other) -> RootPolynomial:
        if isinstance(other, int):
            return RootPolynomial.constant(self.alphabet, other)
        if not isinstance(other, RootPolynomial):
            return NotImplemented
        if other.alphabet != self.alphabet:
            return other.over(self.alphabet)
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, k in other._terms.items():
            terms[m] = terms.get(m, 0) + k
        return RootPolynomial(self.alphabet, terms)

    __radd__ = __add__

    def __neg__(self):
        return RootPolynomial(self.alphabet, {m: -k for m, k in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RootPolynomial(self.alphabet, {m: k * other for m, k in self._terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return other
        terms: dict[tuple, int] = {}
        get = terms.get
        for m1, k1 in self._terms.items():
            for m2, k2 in other._terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                terms[m] = get(m, 0) + k1 * k2
        return RootPolynomial(self.alphabet, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        result = RootPolynomial.constant(self.alphabet, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def over(self, alphabet: Iterable[str]) -> RootPolynomial:
        """Re-express over another alphabet; dropped symbols must not occur."""
        alphabet = tuple(alphabet)
        target = {s: i for i, s in enumerate(alphabet)}
        terms = {}
        for m, k in self._terms.items():
            exps = [0] * len(alphabet)
            for s, e in zip(self.alphabet, m):
                if e:
                    if s not in target:
                        raise ValueError(f"symbol {s} occurs but is not in {alphabet}")
                    exps[target[s]] = e
            terms[tuple(exps)] = k
        return RootPolynomial(alphabet, terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RootPolynomial.constant(self.alphabet, other)
        if not isinstance(other, RootPolynomial):
            return False
        union = self.alphabet + tuple(s for s in other.alphabet if s not in self._index)
        return self.over(union)._terms == other.over(union)._terms

    __hash__ = None

    def substitute_signs(self, symbols: Iterable[str]) -> RootPolynomial:
        """Replace each listed root r by -r."""
        symbols = set(symbols)
        flip = [s in symbols for s in self.alphabet]
        terms = {}
        for m, k in self._terms.items():
            odd = sum(e for e, f in zip(m, flip) if f) % 2
            terms[m] = -k if odd else k
        return RootPolynomial(self.alphabet, terms)

    def swap(self, i: int, j: int) -> RootPolynomial:
        terms = {}
        for m, k in self._terms.items():
            m = list(m)
            m[i], m[j] = m[j], m[i]
            terms[tuple(m)] = k
        return RootPolynomial(self.alphabet, terms)

    def __str__(self) -> str:
        from .chernpoly import format_terms

        def body(m):
            return "*".join(
                s if e == 1 else f"{s}^{e}" for s, e in zip(self.alphabet, m) if e
            )

        ordered = sorted(self._terms.items(), key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))
        return format_terms((k, body(m)) for m, k in ordered)

    def __repr__(self) -> str:
        return f"RootPolynomial({self.alphabet}, {str(self)!r})"


@dataclass(frozen=True)
class BundleSpec:
    """A formal bundle given by its Chern roots; ``dual`` negates every root."""

    roots: tuple[str, ...] = ()
    dual: bool = False

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(self.roots))
        if len(set(self.roots)) != len(self.roots):
            raise ValueError(f"roots must be distinct: {self.roots}")

    @classmethod
    def of_rank(cls, rank: int, prefix: str = "a") -> BundleSpec:
        return cls(tuple(f"{prefix}{i}" for i in range(1, rank + 1)))

    @property
    def rank(self) -> int:
        return len(self.roots)

    @property
    def sign(self) -> int:
        return -1 if self.dual else 1

    def dualized(self) -> BundleSpec:
        return BundleSpec(self.roots, not self.dual)


@dataclass(frozen=True)
class VirtualPair:
    """The virtual bundle ``e - f``."""

    e: BundleSpec = BundleSpec()
    f: BundleSpec = BundleSpec()

    @classmethod
    def of_ranks(cls, m: int, n: int) -> VirtualPair:
        return cls(BundleSpec.of_rank(m, "a"), BundleSpec.of_rank(n, "b"))

    @property
    def alphabet(self) -> tuple[str, ...]:
        seen = dict.fromkeys(self.e.roots)
        seen.update(dict.fromkeys(self.f.roots))
        return tuple(seen)

    def dualized(self) -> VirtualPair:
        return VirtualPair(self.e.dualized(), self.f.dualized())


def complete_homogeneous(alphabet: tuple[str, ...], symbols: tuple[str, ...], k: int) -> RootPolynomial:
    """h_k of the listed symbols, as a polynomial over ``alphabet``."""
    return _symmetric(alphabet, symbols, k, True)


def elementary(alphabet: tuple[str, ...], symbols: tuple[str, ...], k: int) -> RootPolynomial:
    return _symmetric(alphabet, symbols, k, False)


@lru_cache(maxsize=4096)
def _symmetric(alphabet, symbols, k, complete) -> RootPolynomial:
    if k < 0 or (not complete and k > len(symbols)):
        return RootPolynomial(alphabet)
    positions = [alphabet.index(s) for s in symbols]
    chooser = combinations_with_replacement if complete else combinations
    terms: dict[tuple, int] = {}
    for pick in chooser(positions, k):
        exps = [0] * len(alphabet)
        for p in pick:
            exps[p] += 1
        terms[tuple(exps)] = 1
    return RootPolynomial(alphabet, terms)


def segre_coefficient(pair: VirtualPair, i: int, alphabet: tuple[str, ...] | None = None) -> RootPolynomial:
    """Degree-``i`` part of prod_b (1 - b) / prod_a (1 - a) for the pair E - F.

    Equals sum_j h_{i-j}(a) (-1)^j e_j(b), with signs of dual bundles folded in.
    """
    alphabet = pair.alphabet if alphabet is None else tuple(alphabet)
    total = RootPolynomial(alphabet)
    if i < 0:
        return total
    se, sf = pair.e.sign, pair.f.sign
    for j in range(0, min(i, pair.f.rank) + 1):
        h = complete_homogeneous(alphabet, pair.e.roots, i - j)
        if not h:
            continue
        e = elementary(alphabet, pair.f.roots, j)
        sign = (se ** (i - j)) * (sf ** j) * (-1) ** j
        total = total + h * e * sign
    return total


def chern_to_roots(poly: ChernPolynomial, pair: VirtualPair) -> RootPolynomial:
    """Substitute c_i -> c_i(E), cp_j -> c_j(F) in terms of the roots."""
    alphabet = pair.alphabet
    images = {}
    for var in poly.variables():
        if var.kind == C:
            bundle = pair.e
        elif var.kind == CP:
            bundle = pair.f
        else:
            raise ValueError(f"cannot express {var} in Chern roots directly")
        images[var] = elementary(alphabet, bundle.roots, var.index) * (bundle.sign ** var.index)
    result = RootPolynomial(alphabet)
    for mono, k in poly.items():
        term = RootPolynomial.constant(alphabet, k)
        for var, exp in mono:
            term = term * images[var] ** exp
        result = result + term
    return result


def check_symmetric(poly: RootPolynomial, symbols: tuple[str, ...]) -> None:
    """Raise :class:`NotSymmetricError` unless ``poly`` is symmetric in ``symbols``."""
    idx = [poly.alphabet.index(s) for s in symbols if s in poly.alphabet]
    for x, y in zip(idx, idx[1:]):
        if poly.swap(x, y) != poly:
            pair = (poly.alphabet[x], poly.alphabet[y])
            raise NotSymmetricError(
                f"not symmetric under the transposition {pair[0]} <-> {pair[1]}", pair
            )


def roots_to_chern(poly: RootPolynomial, pair: VirtualPair) -> ChernPolynomial:
    """Eliminate roots: rewrite a polynomial symmetric in the roots of E and,
    separately, of F as a polynomial in c_i = c_i(E) and cp_j = c_j(F).

    Repeatedly strips the lexicographically leading monomial a^alpha b^beta
    with a product of elementary symmetric functions.
    """
    e_roots, f_roots = pair.e.roots, pair.f.roots
    if set(e_roots) & set(f_roots):
        raise ValueError("root elimination needs disjoint root sets for E and F")
    alphabet = e_roots + f_roots
    work = poly.over(alphabet)
    m = len(e_roots)
    result: dict[tuple, int] = {}
    elem_cache: dict[tuple[int, int], RootPolynomial] = {}

    def e_poly(side: int, k: int) -> RootPolynomial:
        if (side, k) not in elem_cache:
            roots = e_roots if side == 0 else f_roots
            elem_cache[(side, k)] = elementary(alphabet, roots, k)
        return elem_cache[(side, k)]

    while work:
        lead = max(work.items())
        exps, coeff = lead
        for block, offset, names in ((exps[:m], 0, e_roots), (exps[m:], m, f_roots)):
            for i in range(len(block) - 1):
                if block[i] < block[i + 1]:
                    pair_names = (names[i], names[i + 1])
                    raise NotSymmetricError(
                        f"not symmetric under the transposition {pair_names[0]} <-> {pair_names[1]}",
                        pair_names,
                    )
        product = RootPolynomial.constant(alphabet, coeff)
        mono = []
        for side, block, kind, bundle in ((0, exps[:m], C, pair.e), (1, exps[m:], CP, pair.f)):
            for i in range(len(block)):
                nxt = block[i + 1] if i + 1 < len(block) else 0
                power = block[i] - nxt
                if power:
                    product = product * e_poly(side, i + 1) ** power
                    mono.append((Variable(kind, i + 1), power))
        key = tuple(sorted(mono))
        result[key] = result.get(key, 0) + coeff
        work = work - product
    out = ChernPolynomial(result)
    # c_i of a dual bundle is (-1)^i times c_i of the raw roots
    flips = {}
    for kind, bundle in ((C, pair.e), (CP, pair.f)):
        if bundle.dual:
            for i in range(1, bundle.rank + 1):
                flips[Variable(kind, i)] = ChernPolynomial.variable(Variable(kind, i)) * (-1) ** i
    return out.specialize(flips) if flips else out
