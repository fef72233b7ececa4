"""Sparse graded polynomials over the integers in Chern-type variables.

Variables are ``c[i]`` (Chern classes of E), ``cp[j]`` (Chern classes of F),
``S[i]`` Segre-series atoms, and opaque Schur atoms ``S[I]`` that the
:mod:`thompos.schur_basis` module knows how to expand.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, NamedTuple, Union

from .partitions import ParseError, Partition

C, CP, SEG, SCHUR = 0, 1, 2, 3
_KIND_NAMES = {C: "c", CP: "cp", SEG: "S", SCHUR: "S"}


class MixedBasisError(ValueError):
    pass


class NotHomogeneousError(ValueError):
    pass


class Variable(NamedTuple):
    kind: int
    index: Union[int, Partition]

    @property
    def degree(self) -> int:
        if self.kind == SCHUR:
            return self.index.weight
        return self.index

    def __str__(self) -> str:
        if self.kind == SCHUR:
            return self.index.bracket()
        return f"{_KIND_NAMES[self.kind]}[{self.index}]"


def c(i: int) -> ChernPolynomial:
    return ChernPolynomial.variable(Variable(C, _positive(i)))


def cp(j: int) -> ChernPolynomial:
    return ChernPolynomial.variable(Variable(CP, _positive(j)))


def seg(i: int) -> ChernPolynomial:
    """The Segre atom S_i; S_0 is 1 and negative indices vanish."""
    if i == 0:
        return ChernPolynomial.constant(1)
    if i < 0:
        return ChernPolynomial()
    return ChernPolynomial.variable(Variable(SEG, i))


def schur_atom(parts: Iterable[int]) -> ChernPolynomial:
    part = Partition(parts)
    if not part:
        return ChernPolynomial.constant(1)
    return ChernPolynomial.variable(Variable(SCHUR, part))


def _positive(i: int) -> int:
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    return i


Monomial = tuple  # sorted tuple of (Variable, exponent) pairs


def mono_mul(left: Monomial, right: Monomial) -> Monomial:
    if not left:
        return right
    if not right:
        return left
    powers = dict(left)
    for var, exp in right:
        powers[var] = powers.get(var, 0) + exp
    return tuple(sorted(powers.items()))


def mono_degree(mono: Monomial) -> int:
    return sum(var.degree * exp for var, exp in mono)


class ChernPolynomial:
    """Immutable map from monomials to nonzero ``int`` coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: k for m, k in (terms or {}).items() if k}
        self._hash = None

    @classmethod
    def constant(cls, value: int) -> ChernPolynomial:
        return cls({(): value})

    @classmethod
    def variable(cls, var: Variable) -> ChernPolynomial:
        return cls({((var, 1),): 1})

    @classmethod
    def _coerce(cls, other) -> ChernPolynomial:
        if isinstance(other, ChernPolynomial):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        return NotImplemented

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> set[Variable]:
        return {var for mono in self._terms for var, _ in mono}

    def kinds(self) -> set[int]:
        return {var.kind for var in self.variables()}

    def degrees(self) -> set[int]:
        return {mono_degree(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Degree of a homogeneous polynomial; ``None`` for zero."""
        degrees = self.degrees()
        if len(degrees) > 1:
            raise NotHomogeneousError(f"polynomial has degrees {sorted(degrees)}")
        return degrees.pop() if degrees else None

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for mono, k in other._terms.items():
            terms[mono] = terms.get(mono, 0) + k
        return ChernPolynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return ChernPolynomial({m: -k for m, k in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Monomial, int] = {}
        for m1, k1 in self._terms.items():
            for m2, k2 in other._terms.items():
                mono = mono_mul(m1, m2)
                terms[mono] = terms.get(mono, 0) + k1 * k2
        return ChernPolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        result = ChernPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def specialize(self, assignments: Mapping[Variable, ChernPolynomial | int]) -> ChernPolynomial:
        """Simultaneously substitute variables, then normalize."""
        if not assignments:
            return self
        images = {v: ChernPolynomial._coerce(p) for v, p in assignments.items()}
        out: dict[Monomial, int] = {}
        power_cache: dict[tuple[Variable, int], ChernPolynomial] = {}
        for mono, k in self._terms.items():
            kept = []
            term = ChernPolynomial.constant(k)
            for var, exp in mono:
                if var in images:
                    key = (var, exp)
                    if key not in power_cache:
                        power_cache[key] = images[var] ** exp
                    term = term * power_cache[key]
                    if not term:
                        break
                else:
                    kept.append((var, exp))
            rest = tuple(kept)
            for m, v in term._terms.items():
                m = mono_mul(m, rest)
                out[m] = out.get(m, 0) + v
        return ChernPolynomial(out)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms by total degree, then lexicographically on monomial keys."""
        return sorted(self._terms.items(), key=lambda t: (mono_degree(t[0]), t[0]))

    def __str__(self) -> str:
        return format_terms(
            (k, "*".join(_format_power(v, e) for v, e in mono))
            for mono, k in self.sorted_terms()
        )

    def __repr__(self) -> str:
        return f"ChernPolynomial({str(self)!r})"


def _format_power(var: Variable, exp: int) -> str:
    return str(var) if exp == 1 else f"{var}^{exp}"


def format_terms(terms: Iterable[tuple[int, str]]) -> str:
    """Join ``(coefficient, atom-product)`` pairs as ``2*a - b + 3``.

    An empty atom string denotes a constant term.
    """
    out = []
    for k, body in terms:
        sign = "-" if k < 0 else "+"
        mag = abs(k)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not out:
            out.append(text if sign == "+" else "-" + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out) if out else "0"


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>cp|c|S)|(?P<op>[-+*^\[\],]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}",
                             len(text[:offset].encode()), text)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), len(text[:start].encode())))
        pos = m.end()
    tokens.append(("end", "", len(text.encode())))
    return tokens


class _Parser:
    def __init__(self, text: str, seg_mode: bool):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.seg_mode = seg_mode

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok=None):
        tok = tok or self.peek()
        return ParseError(message, tok[2], self.text)

    def expect(self, value: str):
        tok = self.take()
        if tok[1] != value or tok[0] not in ("op", "name"):
            raise self.error(f"expected {value!r}, got {tok[1] or 'end of input'!r}", tok)
        return tok

    def integer(self) -> int:
        tok = self.take()
        if tok[0] != "int":
            raise self.error(f"expected an integer, got {tok[1] or 'end of input'!r}", tok)
        return int(tok[1])

    def parse(self) -> ChernPolynomial:
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        result = self.term() * sign
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            term = self.term()
            result = result + term if op == "+" else result - term
        if self.peek()[0] != "end":
            raise self.error(f"unexpected token {self.peek()[1]!r}")
        return result

    def term(self) -> ChernPolynomial:
        tok = self.peek()
        coeff = 1
        if tok[0] == "int":
            coeff = self.integer()
            if not (self.peek()[0] == "op" and self.peek()[1] == "*"):
                return ChernPolynomial.constant(coeff)
            self.take()
        result = ChernPolynomial.constant(coeff) * self.atom()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            result = result * self.atom()
        return result

    def atom(self) -> ChernPolynomial:
        tok = self.take()
        if tok[0] != "name":
            raise self.error(f"expected c[..], cp[..] or S[..], got {tok[1] or 'end of input'!r}", tok)
        self.expect("[")
        if tok[1] == "S":
            parts = [self._part()]
            while self.peek()[:2] == ("op", ","):
                self.take()
                part_tok = self.peek()
                parts.append(self._part())
                if parts[-1] < parts[-2]:
                    raise self.error("partition parts must be weakly increasing", part_tok)
            if self.seg_mode and len(parts) == 1:
                base = seg(parts[0])
            else:
                base = schur_atom(parts)
        else:
            index = self._part()
            base = c(index) if tok[1] == "c" else cp(index)
        self.expect("]")
        if self.peek()[:2] == ("op", "^"):
            self.take()
            base = base ** self.integer()
        return base

    def _part(self) -> int:
        tok = self.peek()
        value = self.integer()
        if value < 1:
            raise self.error("index must be >= 1", tok)
        return value


def parse_expr(text: str, seg_mode: bool = False) -> ChernPolynomial:
    """Parse an expression such as ``24*S[4] + 26*S[1,3]`` or ``c[1]^2 + c[2]``.

    By default every ``S[...]`` is an opaque Schur atom. With ``seg_mode``
    single-row atoms ``S[i]`` become Segre variables instead. Expressions
    mixing ``S`` atoms with ``c``/``cp`` raise :class:`MixedBasisError`.
    """
    result = _Parser(text, seg_mode).parse()
    kinds = result.kinds()
    if kinds & {C, CP} and kinds & {SEG, SCHUR}:
        raise MixedBasisError("expression mixes S[...] atoms with c/cp variables")
    return result
