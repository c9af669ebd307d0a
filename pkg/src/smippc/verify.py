"""Brute-force oracles for separable, MIPPC and SMIPPC codes.

Every search over rival parent sets is confined to ``R ∩ C`` for the pattern
``R`` under test: a parent set ``C'`` always satisfies ``C' ⊆ desc(C')``.
Subset enumeration inside ``R ∩ C`` is exhaustive, so a configurable cap on
``|R ∩ C|`` guards against accidental exponential blow-up.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .code import Code, Pattern, Word, bits, desc, members_mask

DEFAULT_CAP = 20

Group = tuple[int, ...]


class EnumerationCapExceeded(RuntimeError):
    """``|R ∩ C|`` is larger than the configured enumeration cap."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"|R ∩ C| = {size} exceeds enumeration cap {cap}")
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a property check.

    ``witness`` is ``None`` when the property holds.  Otherwise it is a tuple
    of codeword-index groups whose meaning depends on the property:

    * ``sc``: two distinct subsets with equal descendant sets;
    * ``mippc``/``smippc``: the coalition first, then parent sets of its
      descendant set whose common intersection with it is empty;
    * ``pairwise``: two disjoint pairs with equal descendant sets;
    * ``type4``: the pair ``(c1, c2)`` followed by the three companions.
    """

    name: str
    holds: bool
    t: int | None = None
    witness: tuple[Group, ...] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def summary(self) -> str:
        """Single-line machine-readable form, with 1-based indices."""
        if self.witness is None:
            wit = "-"
        else:
            wit = "|".join(",".join(str(k + 1) for k in g) for g in self.witness)
        t = "-" if self.t is None else self.t
        result = "pass" if self.holds else "fail"
        return f"{self.name.upper()} t={t} RESULT={result} WITNESS={wit}"


def render_report(code: Code, verdict: PropertyVerdict) -> str:
    lines = [
        f"property: {verdict.name}" + (f" (t={verdict.t})" if verdict.t is not None else ""),
        f"code: n={code.n} M={code.M} q={code.q}",
        f"result: {'holds' if verdict.holds else 'fails'}",
    ]
    if verdict.detail:
        lines.append(f"detail: {verdict.detail}")
    if verdict.witness is not None:
        for g, group in enumerate(verdict.witness):
            words = ", ".join(f"#{k + 1}=({','.join(map(str, code.words[k]))})" for k in group)
            lines.append(f"witness[{g}]: {words}")
    return "\n".join(lines)


# -- enumeration helpers -----------------------------------------------------

def coalitions(M: int, t: int) -> Iterator[Group]:
    """All index sets of size 1..t, by size and then lexicographically."""
    for size in range(1, min(t, M) + 1):
        yield from combinations(range(M), size)


def _target(r_sets: Sequence[frozenset[int]] | Sequence[set[int]]) -> tuple[int, ...]:
    out = []
    for s in r_sets:
        m = 0
        for g in s:
            m |= 1 << g
        out.append(m)
    return tuple(out)


def _covering_masks(code: Code, members: Sequence[int], target: tuple[int, ...],
                    max_size: int | None) -> list[int]:
    """Local bitmasks (over ``members``) of the subsets whose descendant equals ``target``."""
    k = len(members)
    n = code.n
    sym = [[1 << code.words[c][i] for i in range(n)] for c in members]
    unions = [(0,) * n] * (1 << k)
    found = []
    for mask in range(1, 1 << k):
        low = mask & -mask
        prev = unions[mask ^ low]
        s = sym[low.bit_length() - 1]
        cur = tuple(p | x for p, x in zip(prev, s))
        unions[mask] = cur
        if cur == target and (max_size is None or mask.bit_count() <= max_size):
            found.append(mask)
    return found


def _local_to_global(mask: int, members: Sequence[int]) -> Group:
    return tuple(members[j] for j in bits(mask))


def _members_checked(code: Code, r: Pattern, cap: int) -> tuple[int, ...]:
    members = bits(members_mask(code, r))
    if len(members) > cap:
        raise EnumerationCapExceeded(len(members), cap)
    return members


def parent_sets(code: Code, r: Pattern, max_size: int | None = None,
                cap: int = DEFAULT_CAP) -> list[Group]:
    """Subsets ``C'`` of the code with ``desc(C') = r``, in lexicographic order.

    With ``max_size`` this is ``P_t(r)``; without it, the unbounded ``P(r)``.
    """
    members = _members_checked(code, r, cap)
    if not members:
        return []
    masks = _covering_masks(code, members, _target(r.sets), max_size)
    return sorted(_local_to_global(m, members) for m in masks)


def _empty_intersection_witness(c0: Group, rivals: list[Group]) -> tuple[Group, ...]:
    """Pick rivals greedily until the intersection with ``c0`` is empty."""
    inter = set(c0)
    chosen = []
    for rival in rivals:
        if inter & set(rival) != inter:
            chosen.append(rival)
            inter &= set(rival)
            if not inter:
                break
    return (c0, *chosen)


def _check_t(t: int) -> None:
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")


# -- the three defining properties --------------------------------------------

def is_separable(code: Code, t: int, cap: int = DEFAULT_CAP) -> PropertyVerdict:
    """Check that distinct subsets of size ≤ t have distinct descendant sets."""
    _check_t(t)
    for c0 in coalitions(code.M, t):
        r = desc(code, c0)
        members = _members_checked(code, r, cap)
        if len(members) == 1:
            continue
        masks = _covering_masks(code, members, _target(r.sets), t)
        if len(masks) > 1:
            rivals = sorted(g for g in (_local_to_global(m, members) for m in masks) if g != c0)
            return PropertyVerdict("sc", False, t, (c0, rivals[0]))
    return PropertyVerdict("sc", True, t)


def _ipp_check(code: Code, t: int, cap: int, bounded: bool, name: str) -> PropertyVerdict:
    _check_t(t)
    for c0 in coalitions(code.M, t):
        r = desc(code, c0)
        members = _members_checked(code, r, cap)
        if len(members) == 1:
            continue
        masks = _covering_masks(code, members, _target(r.sets), t if bounded else None)
        inter = -1
        for m in masks:
            inter &= m
        if inter == 0:
            rivals = sorted(_local_to_global(m, members) for m in masks)
            return PropertyVerdict(name, False, t, _empty_intersection_witness(c0, rivals))
    return PropertyVerdict(name, True, t)


def is_mippc(code: Code, t: int, cap: int = DEFAULT_CAP) -> PropertyVerdict:
    """Every pattern producible by ≤ t codewords has a common member in all its size-≤t parent sets.

    Each such pattern is ``desc(C0)`` for some coalition ``|C0| ≤ t``, so it is
    enough to scan coalitions.
    """
    return _ipp_check(code, t, cap, bounded=True, name="mippc")


def is_smippc(code: Code, t: int, cap: int = DEFAULT_CAP) -> PropertyVerdict:
    """Like :func:`is_mippc`, but intersecting over parent sets of every size."""
    return _ipp_check(code, t, cap, bounded=False, name="smippc")


# -- length-3 criteria -------------------------------------------------------

def _require_length_3(code: Code) -> None:
    if code.n != 3:
        raise ValueError(f"this check applies to length-3 codes, got n={code.n}")


def _insert(u: Word, j: int, g: int) -> Word:
    return u[:j] + (g,) + u[j:]


def check_pairwise_shortened(code: Code) -> PropertyVerdict:
    """Length-3 separability test: shortened codes pairwise share at most one word."""
    _require_length_3(code)
    for j in range(3):
        carriers: dict[Word, list[int]] = {}
        for w in code.words:
            carriers.setdefault(w[:j] + w[j + 1:], []).append(w[j])
        shared: dict[tuple[int, int], list[Word]] = {}
        for u, syms in carriers.items():
            for g1, g2 in combinations(sorted(syms), 2):
                shared.setdefault((g1, g2), []).append(u)
        for (g1, g2) in sorted(shared):
            us = sorted(shared[(g1, g2)])
            if len(us) >= 2:
                u, v = us[0], us[1]
                idx = code.index
                left = tuple(sorted((idx[_insert(u, j, g1)], idx[_insert(v, j, g2)])))
                right = tuple(sorted((idx[_insert(u, j, g2)], idx[_insert(v, j, g1)])))
                detail = (f"position {j + 1}: symbols {g1},{g2} share shortened words "
                          f"{u} and {v}")
                return PropertyVerdict("pairwise", False, 2, tuple(sorted((left, right))), detail)
    return PropertyVerdict("pairwise", True, 2)


class PairType(enum.Enum):
    NONE = "none"
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"


def _near_words(c1: Word, c2: Word) -> tuple[Word, Word, Word]:
    (a1, b1, e1), (a2, b2, e2) = c1, c2
    return (a1, b1, e2), (a1, b2, e1), (a2, b1, e1)


def _extras(code: Code, i: int, j: int) -> frozenset[Word]:
    r = desc(code, (i, j))
    return frozenset(code.words[k] for k in bits(members_mask(code, r))) - {code.words[i], code.words[j]}


def _classify(extras: frozenset[Word], c1: Word, c2: Word) -> PairType:
    u1, u2, u3 = _near_words(c1, c2)
    templates = {
        frozenset((u1, u2)): PairType.I,
        frozenset((u1, u3)): PairType.II,
        frozenset((u2, u3)): PairType.III,
        frozenset((u1, u2, u3)): PairType.IV,
    }
    return templates.get(extras, PairType.NONE)


def classify_pair_configuration(code: Code, i: int, j: int) -> PairType:
    """Shape of ``desc({c_i, c_j}) ∩ C`` for a pair differing in all three positions.

    Templates are tried with ``c_i`` in the first role and then with the roles
    swapped.
    """
    _require_length_3(code)
    for k in (i, j):
        if not 0 <= k < code.M:
            raise IndexError(f"codeword index {k} out of range for M={code.M}")
    c1, c2 = code.words[i], code.words[j]
    if any(x == y for x, y in zip(c1, c2)):
        return PairType.NONE
    extras = _extras(code, i, j)
    kind = _classify(extras, c1, c2)
    if kind is PairType.NONE:
        kind = _classify(extras, c2, c1)
    return kind


def has_forbidden_type_iv(code: Code) -> PropertyVerdict:
    """Scan all pairs for the Type IV configuration; ``holds`` means clean.

    This matches :func:`is_smippc` with ``t=2`` only on codes that are already
    2-separable; callers should check that first.
    """
    _require_length_3(code)
    words = code.words
    for i, j in combinations(range(code.M), 2):
        c1, c2 = words[i], words[j]
        if any(x == y for x, y in zip(c1, c2)):
            continue
        extras = _extras(code, i, j)
        for a, b in ((c1, c2), (c2, c1)):
            near = _near_words(a, b)
            if extras == frozenset(near):
                companions = tuple(code.index[w] for w in near)
                return PropertyVerdict("type4", False, 2, ((i, j), companions))
    return PropertyVerdict("type4", True, 2)


def max_code_size_bound(q: int) -> int:
    """Largest possible size of a length-3 2-separable (hence 2-SMIPPC) code over q symbols."""
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    return q * q + q * (q - 1) // 2
