"""Integer partitions indexing the Schur basis.

Parts are stored weakly increasing, ``(1, 2, 2, 3)``, which is the order the
Thom-polynomial tables are written in. Formulas that want the classical
decreasing form use :attr:`Partition.decreasing`.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import groupby
from typing import Iterable


class ParseError(ValueError):
    """Malformed textual input; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int, text: str | None = None):
        self.message = message
        self.offset = offset
        self.text = text
        super().__init__(f"{message} (at byte offset {offset})")


class ContractViolation(ValueError):
    pass


class Partition(tuple):
    """An immutable partition, parts sorted weakly increasing.

    Zero parts are dropped; negative parts are rejected.

    >>> Partition([3, 1, 2, 2])
    Partition(1, 2, 2, 3)
    >>> str(Partition([3, 1, 2, 2]))
    '12^23'
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, sorted(p for p in parts if p))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def decreasing(self) -> tuple[int, ...]:
        return tuple(reversed(self))

    def conjugate(self) -> Partition:
        return conjugate(self)

    def bracket(self) -> str:
        """``S[1,2,2,3]`` literal as used in expression files."""
        return "S[" + ",".join(map(str, self)) + "]"

    def __str__(self) -> str:
        return print_partition(self)

    def __repr__(self) -> str:
        return "Partition(" + ", ".join(map(str, self)) + ")"


def conjugate(partition: Iterable[int]) -> Partition:
    parts = Partition(partition)
    if not parts:
        return parts
    # column j of the diagram has as many cells as there are parts > j
    return Partition(sum(1 for p in parts if p > j) for j in range(parts[-1]))


def dominance_leq(left: Iterable[int], right: Iterable[int]) -> bool:
    """True iff ``left`` is dominated by ``right``.

    Both must have equal weight; partial sums of the decreasing forms are
    compared.
    """
    left, right = Partition(left), Partition(right)
    if left.weight != right.weight:
        raise ContractViolation(
            f"dominance needs equal weights, got {left.weight} and {right.weight}"
        )
    lsum = rsum = 0
    ldec, rdec = left.decreasing, right.decreasing
    for k in range(max(len(ldec), len(rdec))):
        lsum += ldec[k] if k < len(ldec) else 0
        rsum += rdec[k] if k < len(rdec) else 0
        if lsum > rsum:
            return False
    return True


def order_key(partition: Partition) -> tuple:
    """Sort key: by weight, then descending dominance (lex on decreasing form).

    Reverse lexicographic order on decreasing forms is a linear extension of
    dominance, so sorting by this key puts dominating partitions first.
    """
    return (partition.weight, tuple(-p for p in partition.decreasing))


def partitions_of(
    n: int, max_part: int | None = None, max_len: int | None = None
) -> list[Partition]:
    """All partitions of ``n`` within the bounds, dominating ones first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    max_part = n if max_part is None else min(max_part, n)
    max_len = n if max_len is None else min(max_len, n)
    return list(_partitions_of(n, max_part, max_len))


@lru_cache(maxsize=None)
def _partitions_of(n: int, max_part: int, max_len: int) -> tuple[Partition, ...]:
    out = []

    def rec(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_len:
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, max_part, [])
    # generated in lex-descending order on decreasing forms already
    return tuple(out)


def _token(value: int) -> str:
    return str(value) if value < 10 else "{" + str(value) + "}"


def print_partition(partition: Iterable[int]) -> str:
    """Exponent notation: ``(1,1,1,2,2)`` prints as ``1^32^2``.

    Values of ten or more are braced (``{12}``) so juxtaposition stays
    unambiguous. The empty partition prints as ``()``.
    """
    parts = Partition(partition)
    if not parts:
        return "()"
    chunks = []
    for value, run in groupby(parts):
        count = len(list(run))
        chunks.append(_token(value) + ("^" + _token(count) if count > 1 else ""))
    return "".join(chunks)


def parse_partition(text: str) -> Partition:
    """Parse exponent notation (``12^23``, ``1^52``, ``{10}^2 3``) or a bracket
    literal (``S[1,2,2,3]``, ``[1,2,2,3]``).

    In exponent notation each base and exponent is a single digit unless
    written in braces; whitespace separates groups.
    """
    stripped = text.strip()
    lead = len(text.encode()) - len(text.lstrip().encode())
    if stripped in ("()", "S[]", "[]"):
        return Partition()
    if stripped.startswith(("S[", "[")):
        return _parse_bracket(stripped, lead)
    return _parse_exponent(text)


def _parse_bracket(text: str, base_offset: int) -> Partition:
    start = 2 if text.startswith("S[") else 1
    if not text.endswith("]"):
        raise ParseError("expected ']'", base_offset + len(text.encode()), text)
    body = text[start:-1]
    parts = []
    pos = start
    for piece in body.split(","):
        stripped = piece.strip()
        if not stripped.isdigit():
            raise ParseError(f"expected a positive integer, got {piece!r}",
                             base_offset + pos, text)
        value = int(stripped)
        if value < 1:
            raise ParseError("parts must be >= 1", base_offset + pos, text)
        if parts and value < parts[-1]:
            raise ParseError("parts must be weakly increasing", base_offset + pos, text)
        parts.append(value)
        pos += len(piece) + 1
    return Partition(parts)


def _parse_exponent(text: str) -> Partition:
    raw = text.encode()
    parts: list[int] = []
    i = 0
    seen_group = False

    def number(i: int) -> tuple[int, int]:
        if i >= len(raw):
            raise ParseError("expected a digit", i, text)
        ch = chr(raw[i])
        if ch == "{":
            close = raw.find(b"}", i)
            if close < 0:
                raise ParseError("unterminated '{'", i, text)
            digits = raw[i + 1:close].decode()
            if not digits.isdigit():
                raise ParseError("expected digits inside braces", i + 1, text)
            return int(digits), close + 1
        if ch.isdigit():
            return int(ch), i + 1
        raise ParseError(f"unexpected character {ch!r}", i, text)

    while i < len(raw):
        if chr(raw[i]).isspace():
            i += 1
            continue
        start = i
        value, i = number(i)
        if value == 0:
            raise ParseError("parts must be >= 1", start, text)
        count = 1
        if i < len(raw) and raw[i] == ord("^"):
            count, i = number(i + 1)
            if count == 0:
                raise ParseError("exponent must be >= 1", i - 1, text)
        parts.extend([value] * count)
        seen_group = True
    if not seen_group:
        raise ParseError("empty partition text", 0, text)
    return Partition(parts)
