"""Codes, descendant patterns and their flat-file formats.

A code is stored codeword-by-codeword; index ``k`` refers to the ``k``-th
codeword (0-based inside the library).  Symbols are plain integers in
``0..q-1``; codes built over ``Z_s`` plus an absorbing infinity symbol are
relabelled before they reach this module (see :mod:`smippc.construct`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]


class CodeError(ValueError):
    """Malformed code, pattern or file."""


@dataclass(frozen=True)
class Code:
    """An ``(n, M, q)`` code: ``M`` distinct words of length ``n`` over ``0..q-1``."""

    n: int
    q: int
    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise CodeError(f"code length must be positive, got {self.n}")
        if self.q < 2:
            raise CodeError(f"alphabet size must be at least 2, got {self.q}")
        if not self.words:
            raise CodeError("a code needs at least one codeword")
        words = tuple(tuple(int(x) for x in w) for w in self.words)
        object.__setattr__(self, "words", words)
        seen: dict[Word, int] = {}
        for k, w in enumerate(words):
            if len(w) != self.n:
                raise CodeError(f"codeword {k} has length {len(w)}, expected {self.n}")
            for x in w:
                if not 0 <= x < self.q:
                    raise CodeError(f"symbol {x} in codeword {k} is outside 0..{self.q - 1}")
            if w in seen:
                raise CodeError(f"codewords {seen[w]} and {k} are both {w}")
            seen[w] = k

    @classmethod
    def from_words(cls, words: Iterable[Sequence[int]], q: int | None = None) -> "Code":
        """Build a code, inferring ``n`` and (if not given) ``q`` from the words."""
        words = [tuple(w) for w in words]
        if not words:
            raise CodeError("a code needs at least one codeword")
        if q is None:
            q = max(2, 1 + max(max(w) for w in words))
        return cls(len(words[0]), q, tuple(words))

    @property
    def M(self) -> int:
        return len(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __getitem__(self, k: int) -> Word:
        return self.words[k]

    @cached_property
    def index(self) -> dict[Word, int]:
        return {w: k for k, w in enumerate(self.words)}

    @cached_property
    def symbol_masks(self) -> tuple[tuple[int, ...], ...]:
        """``symbol_masks[i][g]`` has bit ``k`` set iff codeword ``k`` has ``g`` at position ``i``."""
        masks = [[0] * self.q for _ in range(self.n)]
        for k, w in enumerate(self.words):
            bit = 1 << k
            for i, x in enumerate(w):
                masks[i][x] |= bit
        return tuple(tuple(row) for row in masks)

    @property
    def full_mask(self) -> int:
        return (1 << self.M) - 1


@dataclass(frozen=True)
class Pattern:
    """Per-position symbol sets; the descendant set is their Cartesian product."""

    sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        for i, s in enumerate(sets):
            if not s:
                raise CodeError(f"pattern position {i} is empty")

    @classmethod
    def of(cls, word: Sequence[int]) -> "Pattern":
        return cls(tuple(frozenset((x,)) for x in word))

    @property
    def n(self) -> int:
        return len(self.sets)

    def size(self) -> int:
        """Number of words in the descendant set."""
        total = 1
        for s in self.sets:
            total *= len(s)
        return total

    def words(self) -> Iterator[Word]:
        return product(*(sorted(s) for s in self.sets))

    def __contains__(self, word: Sequence[int]) -> bool:
        return len(word) == self.n and all(x in s for x, s in zip(word, self.sets))

    def __str__(self) -> str:
        return " ".join(",".join(map(str, sorted(s))) for s in self.sets)


def _check_index(code: Code, k: int) -> None:
    if not 0 <= k < code.M:
        raise IndexError(f"codeword index {k} out of range for M={code.M}")


def desc(code: Code, subset: Iterable[int]) -> Pattern:
    """Positionwise union of the symbols carried by ``subset``."""
    subset = list(subset)
    if not subset:
        raise CodeError("descendant of an empty subset is undefined")
    sets: list[set[int]] = [set() for _ in range(code.n)]
    for k in subset:
        _check_index(code, k)
        for i, x in enumerate(code.words[k]):
            sets[i].add(x)
    return Pattern(tuple(frozenset(s) for s in sets))


def coordinate_set(code: Code, i: int) -> frozenset[int]:
    """Symbols appearing at position ``i`` (0-based)."""
    if not 0 <= i < code.n:
        raise IndexError(f"position {i} out of range for n={code.n}")
    return frozenset(w[i] for w in code.words)


def shortened(code: Code, symbol: int, j: int) -> frozenset[Word]:
    """Codewords with ``symbol`` at position ``j``, with that position deleted."""
    if not 0 <= j < code.n:
        raise IndexError(f"position {j} out of range for n={code.n}")
    return frozenset(w[:j] + w[j + 1:] for w in code.words if w[j] == symbol)


def members_mask(code: Code, r: Pattern) -> int:
    """Bitmask of the codewords lying in the descendant set of ``r``."""
    if r.n != code.n:
        raise CodeError(f"pattern length {r.n} does not match code length {code.n}")
    mask = code.full_mask
    masks = code.symbol_masks
    for i, s in enumerate(r.sets):
        m = 0
        for g in s:
            if 0 <= g < code.q:
                m |= masks[i][g]
        mask &= m
        if not mask:
            break
    return mask


def bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def pattern_members(code: Code, r: Pattern) -> tuple[int, ...]:
    """Indices of all codewords inside desc ``r`` (that is, R ∩ C), ascending."""
    return bits(members_mask(code, r))


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x != y for x, y in zip(a, b))


# -- file formats ------------------------------------------------------------

def serialize(code: Code, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{code.n} {code.M} {code.q}")
    lines.extend(" ".join(map(str, w)) for w in code.words)
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def parse(text: str) -> Code:
    lines = _content_lines(text)
    if not lines:
        raise CodeError("empty code file")
    header = lines[0].split()
    if len(header) != 3:
        raise CodeError(f"header must be 'n M q', got {lines[0]!r}")
    try:
        n, m, q = (int(x) for x in header)
    except ValueError as exc:
        raise CodeError(f"non-integer header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != m:
        raise CodeError(f"header declares {m} codewords, found {len(body)}")
    words = []
    for line in body:
        try:
            words.append(tuple(int(x) for x in line.split()))
        except ValueError as exc:
            raise CodeError(f"bad codeword line {line!r}") from exc
    return Code(n, q, tuple(words))


def serialize_pattern(r: Pattern) -> str:
    return "".join(",".join(map(str, sorted(s))) + "\n" for s in r.sets)


def parse_pattern(text: str, q: int) -> Pattern:
    sets = []
    for line in _content_lines(text):
        if line == "*":
            sets.append(frozenset(range(q)))
            continue
        try:
            syms = frozenset(int(x) for x in line.split(",") if x.strip())
        except ValueError as exc:
            raise CodeError(f"bad pattern line {line!r}") from exc
        bad = [g for g in syms if not 0 <= g < q]
        if bad:
            raise CodeError(f"pattern symbols {sorted(bad)} outside 0..{q - 1}")
        sets.append(syms)
    if not sets:
        raise CodeError("empty pattern file")
    return Pattern(tuple(sets))
