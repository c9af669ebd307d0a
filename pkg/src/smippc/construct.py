"""Optimal 2-SMIPPC(3, M, q) constructions.

Two families cover every ``q ≡ 0, 1, 2, 5 (mod 6)``:

* ``q ≡ 1, 5 (mod 6)``: the union of the ``Z_q``-orbits of the columns of a
  cyclic difference matrix ``(0, y, 2y)`` and of extra columns ``(0, b, 3b)``
  for ``b`` in a chosen set ``A1``;
* ``q ≡ 0, 2 (mod 6)``: the same over ``Z_s`` with ``s = q - 1``, extended by an
  absorbing symbol ``∞`` (relabelled to ``s`` on output), three orbits of
  ``∞``-bearing columns, and the all-``∞`` word.

``q = 2`` uses a fixed four-word code.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .code import Code, CodeError
from .verify import max_code_size_bound


class UncoveredAlphabetError(ValueError):
    """No construction is known for this alphabet size."""


class _Infinity:
    """Absorbing element: ``a + ∞ = ∞ + a = ∞``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        return self

    __radd__ = __add__
    __mul__ = __add__
    __rmul__ = __add__

    def __repr__(self) -> str:
        return "∞"


INF = _Infinity()


def inverse(a: int, modulus: int) -> int:
    """Multiplicative inverse of ``a`` modulo ``modulus``."""
    try:
        return pow(a, -1, modulus)
    except ValueError:
        raise ValueError(f"{a} is not invertible modulo {modulus}") from None


def _require_coprime_to_6(modulus: int, what: str = "q") -> None:
    if modulus < 5 or modulus % 6 not in (1, 5):
        raise ValueError(f"{what}={modulus} must be ≡ 1 or 5 (mod 6)")


# -- cyclic difference matrices ---------------------------------------------

@dataclass(frozen=True)
class CdmMatrix:
    """A 3 x q matrix over ``Z_q``: zero row, ``0..q-1``, then ``x_0..x_{q-1}``."""

    q: int
    rows: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    @property
    def x(self) -> tuple[int, ...]:
        return self.rows[2]


def build_cdm_d1(q: int) -> CdmMatrix:
    _require_coprime_to_6(q)
    return CdmMatrix(q, (
        (0,) * q,
        tuple(range(q)),
        tuple(2 * i % q for i in range(q)),
    ))


def is_cdm(rows: Sequence[Sequence[int]], q: int) -> bool:
    """True iff every pair of rows has columnwise differences covering ``Z_q`` once."""
    if len(rows) < 2 or any(len(r) != q for r in rows):
        raise ValueError(f"expected a k x {q} matrix with k >= 2")
    full = set(range(q))
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            diffs = [(x - y) % q for x, y in zip(rows[a], rows[b])]
            if len(set(diffs)) != q or set(diffs) != full:
                return False
    return True


# -- construction parameters --------------------------------------------------

class Family(enum.Enum):
    MOD6_15 = "MOD6_15"
    MOD6_13DIV = "MOD6_13DIV"
    INF_MOD6_0 = "INF_MOD6_0"
    INF_MOD6_2 = "INF_MOD6_2"
    SPECIAL_6 = "SPECIAL_6"
    SPECIAL_8 = "SPECIAL_8"
    SPECIAL_14 = "SPECIAL_14"
    TABLE_20_26_32_38 = "TABLE_20_26_32_38"
    BINARY_Q2 = "BINARY_Q2"

    @property
    def uses_infinity(self) -> bool:
        return self in _INFINITY_FAMILIES


_INFINITY_FAMILIES = {
    Family.INF_MOD6_0, Family.INF_MOD6_2, Family.SPECIAL_6, Family.SPECIAL_8,
    Family.SPECIAL_14, Family.TABLE_20_26_32_38,
}

# Infinity-bearing base columns for q = 14; they do not follow the uniform-m shape.
Q14_T_COLUMNS = ((INF, 0, 7), (6, INF, 0), (0, 4, INF))

_TABLE = {
    20: ((1, 2, 3, 4, 5, 7, 8, 10, 13), 9),
    26: ((1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13), 24),
    32: ((1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 17), 21),
    38: ((1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 19), 27),
}


@dataclass(frozen=True)
class ConstructionSpec:
    q: int
    family: Family
    A1: tuple[int, ...] = ()
    m: int | None = None

    @property
    def s(self) -> int | None:
        return self.q - 1 if self.family.uses_infinity else None

    @property
    def modulus(self) -> int:
        return self.q - 1 if self.family.uses_infinity else self.q

    @property
    def w(self) -> int:
        return len(self.A1)

    def __str__(self) -> str:
        s = "-" if self.s is None else self.s
        a1 = ",".join(map(str, self.A1)) or "-"
        m = "-" if self.m is None else self.m
        return f"q={self.q} family={self.family.value} s={s} A1={a1} m={m} w={self.w}"


def _thirteen_split_A1(modulus: int) -> tuple[int, ...]:
    """``{1..(modulus-1)/2}`` with ``4r`` swapped for ``9r``, where ``modulus = 13r``."""
    r = modulus // 13
    base = set(range(1, (modulus - 1) // 2 + 1))
    base.discard(4 * r)
    base.add(9 * r)
    return tuple(sorted(base))


def select_parameters(q: int) -> ConstructionSpec:
    """Pick the construction family and its ``(A1, m)`` for alphabet size ``q``."""
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if q == 2:
        return ConstructionSpec(2, Family.BINARY_Q2)
    r6 = q % 6
    if r6 in (3, 4):
        raise UncoveredAlphabetError(f"q={q}: q ≡ 3,4 (mod 6) not covered by any known construction")
    if r6 in (1, 5):
        if q % 13:
            return ConstructionSpec(q, Family.MOD6_15, tuple(range(1, (q - 1) // 2 + 1)))
        # 13 | q together with q ≡ 1,5 (mod 6) forces q ≡ 13, 65 (mod 78)
        return ConstructionSpec(q, Family.MOD6_13DIV, _thirteen_split_A1(q))

    s = q - 1
    if q == 6:
        return ConstructionSpec(q, Family.SPECIAL_6, (1, 2), 3)
    if q == 8:
        return ConstructionSpec(q, Family.SPECIAL_8, (1, 2, 4), 3)
    if q == 14:
        return ConstructionSpec(q, Family.SPECIAL_14, (1, 2, 3, 5, 6, 9), None)
    if q in _TABLE:
        a1, m = _TABLE[q]
        return ConstructionSpec(q, Family.TABLE_20_26_32_38, a1, m)
    if r6 == 0:
        family, m = Family.INF_MOD6_0, (-2) % s
    else:
        # remaining q ≡ 2 (mod 6) are all ≥ 44
        family, m = Family.INF_MOD6_2, (-10) % s
    if q % 13 == 1:
        a1 = _thirteen_split_A1(s)
    else:
        a1 = tuple(range(1, (s - 1) // 2 + 1))
    return ConstructionSpec(q, family, a1, m)


# -- sufficient-condition screens ----------------------------------------------

@dataclass(frozen=True)
class ScreenResult:
    passed: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.passed


def _basic_conditions(modulus: int, A1: Iterable[int]) -> ScreenResult:
    a1 = [a % modulus for a in A1]
    aset = set(a1)
    if len(aset) != len(a1):
        return ScreenResult(False, "A1 has repeated elements")
    if 0 in aset:
        return ScreenResult(False, "I: 0 ∈ A1")
    for a in sorted(aset):
        if (-a) % modulus in aset and a < (-a) % modulus:
            return ScreenResult(False, f"II: {a} + {(-a) % modulus} ≡ 0")
    inv2, inv3 = inverse(2, modulus), inverse(3, modulus)
    for b in range(modulus):
        if (13 * b) % modulus:
            continue
        two_thirds = 2 * b * inv3 % modulus
        half = b * inv2 % modulus
        if b in aset and two_thirds in aset and half in aset:
            return ScreenResult(False, f"III: b={b} with 2b/3={two_thirds}, b/2={half} in A1 and 13b ≡ 0")
    return ScreenResult(True)


def check_mod6_conditions(q: int, A1: Iterable[int]) -> ScreenResult:
    """Sufficient conditions for the ``Z_q`` orbit code to be a 2-SMIPPC."""
    _require_coprime_to_6(q)
    return _basic_conditions(q, A1)


def check_infinity_conditions(s: int, A1: Iterable[int], m: int) -> ScreenResult:
    """Sufficient conditions for the infinity-extended code over ``Z_s`` to be a 2-SMIPPC."""
    _require_coprime_to_6(s, "s")
    A1 = [a % s for a in A1]
    basic = _basic_conditions(s, A1)
    if not basic:
        return basic
    m %= s
    a2 = {2 * b % s for b in A1}
    a3 = {-3 * b % s for b in A1}
    if m == 0:
        return ScreenResult(False, "IV: m = 0")
    if m in set(A1) | a2 | a3:
        return ScreenResult(False, f"IV: m={m} ∈ A1 ∪ A2 ∪ A3")
    neg_half = -m * inverse(2, s) % s
    if neg_half in a2:
        return ScreenResult(False, f"IV: -m/2={neg_half} ∈ A2")
    neg_double = -2 * m % s
    if neg_double in a3:
        return ScreenResult(False, f"IV: -2m={neg_double} ∈ A3")
    return ScreenResult(True)


def check_spec_screen(spec: ConstructionSpec) -> ScreenResult:
    """Run the screen matching the construction's family (bespoke families are reported as such)."""
    if spec.family in (Family.MOD6_15, Family.MOD6_13DIV):
        return check_mod6_conditions(spec.q, spec.A1)
    if spec.family in (Family.SPECIAL_6, Family.SPECIAL_8):
        return check_infinity_conditions(spec.modulus, spec.A1, spec.m)
    if spec.family is Family.SPECIAL_14:
        return ScreenResult(False, "bespoke infinity columns; no screen applies")
    if spec.family is Family.BINARY_Q2:
        return ScreenResult(False, "fixed binary code; no screen applies")
    return check_infinity_conditions(spec.modulus, spec.A1, spec.m)


def _x_solver(x: Sequence[int], q: int) -> tuple[dict[int, int], dict[int, int]]:
    """Inverse maps of ``y -> x_y`` and ``y -> x_y - y``; both must be bijective."""
    by_x = {xv % q: y for y, xv in enumerate(x)}
    by_diff = {(xv - y) % q: y for y, xv in enumerate(x)}
    if len(by_x) != q or len(by_diff) != q:
        raise ValueError("third CDM row is not a bijection with the required differences")
    return by_x, by_diff


def check_equi8_screen(cdm: CdmMatrix, A1: Iterable[int], q: int) -> bool:
    """Pairwise-column test for 2-separability of the orbit code of ``cdm`` and ``(0, b, 3b)``."""
    _require_coprime_to_6(q)
    if cdm.q != q:
        raise ValueError(f"CDM is over Z_{cdm.q}, expected Z_{q}")
    x = cdm.x
    by_x, by_diff = _x_solver(x, q)
    s_vals = [a % q for a in A1]
    t_vals = [3 * a % q for a in s_vals]
    w = len(s_vals)
    if 0 in s_vals:
        return False
    if (len(set(s_vals)) != w or len(set(t_vals)) != w
            or len({(t - s) % q for s, t in zip(s_vals, t_vals)}) != w):
        return False
    for i in range(w):
        for j in range(w):
            if i == j:
                continue
            si, sj, ti, tj = s_vals[i], s_vals[j], t_vals[i], t_vals[j]
            y, z = by_diff[(ti - si) % q], by_diff[(tj - sj) % q]
            yi, yj = by_x[ti], by_x[tj]
            zi, zj = si, sj
            d1, d2 = ti - x[y], tj - x[z]
            e1, e2 = si - yi, sj - yj
            f1, f2 = ti - x[zi], tj - x[zj]
            for a, b in ((d1, d2), (e1, e2), (f1, f2)):
                if a % q == 0 or b % q == 0 or (a + b) % q == 0 or (a - b) % q == 0:
                    return False
    return True


def check_condisesc_screen(cdm: CdmMatrix, A1: Iterable[int], q: int) -> bool:
    """Conditions (I)/(II) excluding Type IV configurations in the orbit code.

    Assumes the orbit code is already 2-separable (see :func:`check_equi8_screen`).
    """
    if cdm.q != q:
        raise ValueError(f"CDM is over Z_{cdm.q}, expected Z_{q}")
    x = cdm.x
    by_x, by_diff = _x_solver(x, q)
    s_vals = [a % q for a in A1]
    t_vals = [3 * a % q for a in s_vals]
    w = len(s_vals)
    E = {(y, x[y] % q) for y in range(q)} | set(zip(s_vals, t_vals))
    t_index: dict[int, list[int]] = {}
    diff_index: dict[int, list[int]] = {}
    for i in range(w):
        t_index.setdefault(t_vals[i], []).append(i)
        diff_index.setdefault((t_vals[i] - s_vals[i]) % q, []).append(i)

    # (I): y = s_i1, x_y = t_i2, x_y - y = t_i3 - s_i3
    for i1 in range(w):
        y = s_vals[i1]
        xy = x[y] % q
        for i2 in t_index.get(xy, ()):
            for i3 in diff_index.get((xy - y) % q, ()):
                if len({i1, i2, i3}) < 3:
                    continue
                pair = ((s_vals[i2] + t_vals[i3] - xy) % q, (t_vals[i1] + t_vals[i3] - xy) % q)
                if pair in E:
                    return False
    # (II): s_i = y1, t_i = x_y2, t_i - s_i = x_y3 - y3
    for i in range(w):
        y1 = s_vals[i]
        y2 = by_x[t_vals[i]]
        y3 = by_diff[(t_vals[i] - s_vals[i]) % q]
        if len({y1, y2, y3}) < 3:
            continue
        pair = ((y2 + x[y3] - t_vals[i]) % q, (x[y1] + x[y3] - t_vals[i]) % q)
        if pair in E:
            return False
    return True


# -- builders -------------------------------------------------------------------

def _translate(column: Sequence, g: int, modulus: int) -> tuple:
    return tuple(c if c is INF else (c + g) % modulus for c in column)


def _orbit_words(columns: Sequence[Sequence], modulus: int) -> list[tuple]:
    """All translates, ordered by (base-column index, translate)."""
    return [_translate(col, g, modulus) for col in columns for g in range(modulus)]


def _assemble(words: list[tuple], q: int) -> Code:
    seen: dict[tuple, int] = {}
    for k, w in enumerate(words):
        if w in seen:
            raise CodeError(f"orbit union repeats codeword {w} (positions {seen[w]} and {k})")
        seen[w] = k
    s = q - 1
    return Code(3, q, tuple(tuple(s if c is INF else c for c in w) for w in words))


def _base_columns(modulus: int, A1: Iterable[int]) -> list[tuple[int, int, int]]:
    a1 = [a % modulus for a in A1]
    cols = [(0, y, 2 * y % modulus) for y in range(modulus)]
    cols += [(0, a, 3 * a % modulus) for a in a1]
    return cols


def build_mod6_code(q: int, A1: Iterable[int]) -> Code:
    """Orbit code of ``D1`` and ``S1`` over ``Z_q``; ``M = q(q + |A1|)``."""
    _require_coprime_to_6(q)
    return _assemble(_orbit_words(_base_columns(q, A1), q), q)


def build_infinity_code(q: int, A1: Iterable[int], m: int | None,
                        t_columns: Sequence[Sequence] | None = None) -> Code:
    """Infinity-extended orbit code; ``∞`` is relabelled to ``s = q - 1``.

    ``t_columns`` replaces the three default columns ``(∞,0,m), (m,∞,0), (0,m,∞)``.
    """
    s = q - 1
    _require_coprime_to_6(s, "s")
    if t_columns is None:
        if m is None:
            raise ValueError("m is required unless t_columns is given")
        m %= s
        t_columns = ((INF, 0, m), (m, INF, 0), (0, m, INF))
    columns = _base_columns(s, A1) + [tuple(c) for c in t_columns]
    words = _orbit_words(columns, s)
    words.append((INF, INF, INF))
    return _assemble(words, q)


BINARY_CODE_Q2 = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))


def build_from_spec(spec: ConstructionSpec) -> Code:
    if spec.family is Family.BINARY_Q2:
        return Code(3, 2, BINARY_CODE_Q2)
    if spec.family in (Family.MOD6_15, Family.MOD6_13DIV):
        return build_mod6_code(spec.q, spec.A1)
    if spec.family is Family.SPECIAL_14:
        return build_infinity_code(spec.q, spec.A1, None, Q14_T_COLUMNS)
    return build_infinity_code(spec.q, spec.A1, spec.m)


def construct_optimal(q: int) -> Code:
    """Optimal 2-SMIPPC(3, M, q): ``M = q² + q(q-1)/2`` for ``q > 2``, ``M = 4`` for ``q = 2``."""
    code = build_from_spec(select_parameters(q))
    if q > 2 and code.M != max_code_size_bound(q):
        raise AssertionError(f"q={q}: built {code.M} codewords, expected {max_code_size_bound(q)}")
    return code


# -- composition ------------------------------------------------------------------

def compose_to_binary(code: Code) -> Code:
    """Replace every symbol ``g`` by the length-q unit vector with its 1 at row ``g``."""
    q = code.q
    words = []
    for w in code.words:
        bits_ = []
        for g in w:
            block = [0] * q
            block[g] = 1
            bits_.extend(block)
        words.append(tuple(bits_))
    return Code(code.n * q, 2, tuple(words))


def compose_pattern(sets: Sequence[Iterable[int]], q: int) -> tuple[frozenset[int], ...]:
    """Binary descendant pattern induced by a q-ary pattern under :func:`compose_to_binary`."""
    out = []
    for s in sets:
        s = frozenset(s)
        for g in range(q):
            present = set()
            if g in s:
                present.add(1)
            if s != {g}:
                present.add(0)
            out.append(frozenset(present))
    return tuple(out)
