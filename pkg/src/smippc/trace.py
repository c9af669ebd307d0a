"""Averaging-attack simulation and colluder tracing."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .code import Code, CodeError, Pattern, bits
from .verify import DEFAULT_CAP, parent_sets


class TraceError(RuntimeError):
    """The observed pattern lies outside the tracing algorithm's premises."""


class NoParentSetError(TraceError):
    """No coalition (within the size bound) produces the pattern."""


class EmptyIntersectionError(TraceError):
    """The parent sets share no member: the code lacks the required property."""


@dataclass(frozen=True)
class DetectionStatistics:
    """Per-position share of colluders carrying a 1, kept as exact counts over ``t``."""

    counts: tuple[int, ...]
    t: int

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.t) for c in self.counts)

    def __str__(self) -> str:
        return " ".join(f"{c}/{self.t}" for c in self.counts)


@dataclass(frozen=True)
class TraceResult:
    """Either an identified set of colluders or an overflow verdict."""

    overflow: bool
    members: tuple[int, ...]
    t: int

    @property
    def kind(self) -> str:
        return "overflow" if self.overflow else "colluders"


def _require_binary(code: Code) -> None:
    if code.q != 2:
        raise CodeError(f"binary code required, got q={code.q}")


def simulate_attack(code: Code, coalition: Iterable[int]) -> tuple[DetectionStatistics, Pattern]:
    """Average the coalition's binary fingerprints and read off the observable pattern."""
    _require_binary(code)
    coalition = sorted(set(coalition))
    if not coalition:
        raise CodeError("coalition must be nonempty")
    t = len(coalition)
    counts = [0] * code.n
    for k in coalition:
        if not 0 <= k < code.M:
            raise IndexError(f"codeword index {k} out of range for M={code.M}")
        for i, x in enumerate(code.words[k]):
            counts[i] += x
    sets = []
    for c in counts:
        if c == t:
            sets.append(frozenset({1}))
        elif c == 0:
            sets.append(frozenset({0}))
        else:
            sets.append(frozenset({0, 1}))
    return DetectionStatistics(tuple(counts), t), Pattern(tuple(sets))


def trace_ssc(code: Code, r: Pattern, t: int, reset_per_position: bool = True) -> TraceResult:
    """Linear-time tracing on a binary t-SMIPPC.

    Codewords contradicting a determined position of ``r`` are discarded; a
    live codeword is then reported whenever it is the only live carrier of a 1
    (or of a 0) at some position.  With ``reset_per_position=False`` the
    carrier sets accumulate across positions instead of being rebuilt.
    """
    _require_binary(code)
    if r.n != code.n:
        raise CodeError(f"pattern length {r.n} does not match code length {code.n}")
    if any(not s <= {0, 1} for s in r.sets):
        raise CodeError("binary pattern required")
    ones = code.symbol_masks
    live = code.full_mask
    for i, s in enumerate(r.sets):
        if s == {1}:
            live &= ones[i][1]
        elif s == {0}:
            live &= ones[i][0]
    found = 0
    acc_a = acc_o = 0
    for i in range(code.n):
        carriers_a = live & ones[i][1]
        carriers_o = live & ones[i][0]
        if reset_per_position:
            acc_a, acc_o = carriers_a, carriers_o
        else:
            acc_a |= carriers_a
            acc_o |= carriers_o
        if acc_a.bit_count() == 1:
            found |= acc_a
        if acc_o.bit_count() == 1:
            found |= acc_o
    members = bits(found)
    if len(members) <= t:
        return TraceResult(False, members, t)
    return TraceResult(True, (), t)


def trace_mippc(code: Code, r: Pattern, t: int, cap: int = DEFAULT_CAP) -> TraceResult:
    """Intersect all parent sets of size ≤ t (exponential in t)."""
    parents = parent_sets(code, r, max_size=t, cap=cap)
    if not parents:
        raise NoParentSetError(f"no coalition of size ≤ {t} produces the pattern")
    inter = set(parents[0])
    for p in parents[1:]:
        inter &= set(p)
    if not inter:
        raise EmptyIntersectionError(f"{len(parents)} parent sets of size ≤ {t} share no member")
    if len(inter) > t:
        return TraceResult(True, (), t)
    return TraceResult(False, tuple(sorted(inter)), t)


def trace_qary(code: Code, r: Pattern, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
    """Intersection of every parent set of ``r``, of any size."""
    parents = parent_sets(code, r, cap=cap)
    if not parents:
        raise NoParentSetError("no subset of the code produces the pattern")
    inter = set(parents[0])
    for p in parents[1:]:
        inter &= set(p)
    if not inter:
        raise EmptyIntersectionError(f"{len(parents)} parent sets share no member")
    return tuple(sorted(inter))


def trace_report(alg: str, t: int | None, result: TraceResult | tuple[int, ...] | None,
                 error: bool = False) -> str:
    """``TRACE alg=<alg> t=<t> result=<colluders|overflow|error> set=<indices|->`` (1-based)."""
    tt = "-" if t is None else t
    if error or result is None:
        return f"TRACE alg={alg} t={tt} result=error set=-"
    if isinstance(result, TraceResult):
        if result.overflow:
            return f"TRACE alg={alg} t={tt} result=overflow set=-"
        members = result.members
    else:
        members = result
    s = ",".join(str(k + 1) for k in members) or "-"
    return f"TRACE alg={alg} t={tt} result=colluders set={s}"


def attack_transcript(coalition: Iterable[int], stats: DetectionStatistics | None, r: Pattern) -> str:
    lines = ["coalition " + " ".join(str(k + 1) for k in sorted(coalition))]
    if stats is not None:
        lines.append(f"T {stats}")
    lines.append(f"R {r}")
    return "\n".join(lines)
