"""Acceptance criteria, one test (or parametrized family) per criterion.

Each test carries ``@pytest.mark.criterion(number, title)``; the conftest hook
prints one PASS/FAIL line per criterion at the end of the run.
"""

import random
import time
from itertools import combinations

import pytest

from smippc.code import Code, shortened
from smippc.construct import (
    Family, build_cdm_d1, build_from_spec, check_infinity_conditions, check_mod6_conditions,
    check_spec_screen, compose_to_binary, construct_optimal, is_cdm, select_parameters,
)
from smippc.trace import simulate_attack, trace_ssc
from smippc.verify import (
    check_pairwise_shortened, has_forbidden_type_iv, is_mippc, is_separable, is_smippc,
    max_code_size_bound,
)

SIZE_QS = (5, 7, 11, 13, 17, 19, 25, 6, 8, 12, 14, 20, 26, 32, 38, 44)
ORACLE_QS = (5, 6, 7, 8, 11, 13, 14)
SEED = 0
SWEEP = 1000


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def random_code(rng: random.Random, n: int, max_q: int, max_m: int) -> Code:
    q = rng.randint(2, max_q)
    space = [tuple((k // q ** i) % q for i in range(n)) for k in range(q ** n)]
    m = rng.randint(2, min(max_m, len(space)))
    return Code(n, q, tuple(rng.sample(space, m)))


@pytest.mark.criterion(1, "optimal construction sizes")
def test_criterion_1_sizes():
    with Timer() as timer:
        sizes = {q: construct_optimal(q).M for q in SIZE_QS}
    for q, M in sizes.items():
        assert M == q * q + q * (q - 1) // 2 == max_code_size_bound(q), q
    assert sizes[44] == 2882
    assert timer.elapsed < 1.0, timer.elapsed


@pytest.fixture(scope="module")
def oracle_budget():
    return {"elapsed": 0.0}


@pytest.mark.criterion(2, "constructed codes pass the SMIPPC oracle")
@pytest.mark.parametrize("q", ORACLE_QS)
def test_criterion_2_oracle(q, oracle_budget):
    code = construct_optimal(q)
    with Timer() as timer:
        verdict = is_smippc(code, 2)
    oracle_budget["elapsed"] += timer.elapsed
    assert verdict.holds, verdict.summary()
    assert oracle_budget["elapsed"] < 120.0


@pytest.mark.slow
@pytest.mark.criterion(2, "constructed codes pass the SMIPPC oracle")
def test_criterion_2_oracle_q20():
    assert is_smippc(construct_optimal(20), 2).holds


@pytest.mark.criterion(3, "binary optimality by exhaustion")
def test_criterion_3_binary():
    cube = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    with Timer() as timer:
        five = list(combinations(cube, 5))
        failures = [not is_smippc(Code(3, 2, words), 2).holds for words in five]
        base = is_smippc(construct_optimal(2), 2).holds
    assert len(five) == 56 and all(failures)
    assert base
    assert timer.elapsed < 1.0, timer.elapsed


@pytest.mark.criterion(4, "equivalence suites on random codes")
def test_criterion_4_equivalences():
    rng = random.Random(SEED)
    mismatches = []
    tallies = {}
    with Timer() as timer:
        # (a) length 2: separable, MIPPC and SMIPPC coincide at t = 2
        holds = 0
        for _ in range(SWEEP):
            code = random_code(rng, 2, 5, 8)
            a = (is_smippc(code, 2).holds, is_separable(code, 2).holds, is_mippc(code, 2).holds)
            holds += a[0]
            if len(set(a)) != 1:
                mismatches.append(("a", code))
        tallies["a"] = holds
        # (b) length 2: MIPPC and SMIPPC coincide at t = 3
        holds = 0
        for _ in range(SWEEP):
            code = random_code(rng, 2, 5, 8)
            b = (is_smippc(code, 3).holds, is_mippc(code, 3).holds)
            holds += b[0]
            if b[0] != b[1]:
                mismatches.append(("b", code))
        tallies["b"] = holds
        # (c) length 3: pairwise shortened criterion matches 2-separability
        holds = 0
        for _ in range(SWEEP):
            code = random_code(rng, 3, 4, 8)
            c = (check_pairwise_shortened(code).holds, is_separable(code, 2).holds)
            holds += c[1]
            if c[0] != c[1]:
                mismatches.append(("c", code))
        tallies["c"] = holds
        # (d) length-3 2-separable codes: no Type IV pair iff 2-SMIPPC
        seen = holds = 0
        while seen < SWEEP:
            code = random_code(rng, 3, 4, 8)
            if not is_separable(code, 2).holds:
                continue
            seen += 1
            d = (has_forbidden_type_iv(code).holds, is_smippc(code, 2).holds)
            holds += d[1]
            if d[0] != d[1]:
                mismatches.append(("d", code))
        tallies["d"] = holds
    assert mismatches == []
    # each sweep must exercise both outcomes to be informative
    assert all(0 < v < SWEEP for v in tallies.values()), tallies
    assert timer.elapsed < 60.0, timer.elapsed


@pytest.mark.criterion(5, "tracing soundness on composed codes")
def test_criterion_5_tracing():
    checked = 0
    with Timer() as timer:
        for q, users in ((6, 51), (8, 92)):
            binary = compose_to_binary(construct_optimal(q))
            assert (binary.n, binary.M) == (3 * q, users)
            for size in (1, 2):
                for coalition in combinations(range(binary.M), size):
                    _, r = simulate_attack(binary, coalition)
                    res = trace_ssc(binary, r, 2)
                    assert not res.overflow and res.members, coalition
                    assert set(res.members) <= set(coalition), coalition
                    checked += 1
    assert checked == (1275 + 51) + (4186 + 92)
    assert timer.elapsed < 10.0, timer.elapsed


@pytest.mark.criterion(6, "screen soundness and recorded failures")
def test_criterion_6_screens():
    with Timer() as timer:
        dispatch = [q for q in range(2, 20) if q % 6 in (0, 1, 2, 5) and q > 2]
        screened = 0
        for q in dispatch:
            spec = select_parameters(q)
            if spec.family.uses_infinity and spec.family is not Family.SPECIAL_14:
                passed = check_infinity_conditions(q - 1, spec.A1, spec.m)
            elif spec.family.uses_infinity:
                continue
            else:
                passed = check_mod6_conditions(q, spec.A1)
            assert bool(passed) == bool(check_spec_screen(spec)) or spec.family in (
                Family.SPECIAL_6, Family.SPECIAL_8)
            if passed:
                screened += 1
                assert is_smippc(build_from_spec(spec), 2).holds, q
        r = check_mod6_conditions(13, range(1, 7))
        assert not r and r.reason.startswith("III: b=6")
        r = check_infinity_conditions(5, (1, 2), 3)
        assert not r and r.reason.startswith("IV") and "-2m=4" in r.reason
    assert screened >= 7
    assert timer.elapsed < 120.0, timer.elapsed


@pytest.mark.criterion(7, "CDM validity")
def test_criterion_7_cdm():
    with Timer() as timer:
        qs = [q for q in range(5, 98) if q % 6 in (1, 5)]
        assert all(is_cdm(build_cdm_d1(q).rows, q) for q in qs)
    assert len(qs) == 32
    assert timer.elapsed < 1.0, timer.elapsed


@pytest.mark.criterion(8, "q=14 shortened-code intersections")
def test_criterion_8_appendix():
    with Timer() as timer:
        code = construct_optimal(14)
        inf = 13
        for j in range(3):
            short = {g: shortened(code, g, j) for g in range(14)}
            for g1, g2 in combinations(range(14), 2):
                assert len(short[g1] & short[g2]) <= 1, (j, g1, g2)
        for g in range(13):
            assert shortened(code, g, 0) & shortened(code, inf, 0) == {((g + 7) % 13, (g + 1) % 13)}
        assert check_pairwise_shortened(code).holds
    assert timer.elapsed < 5.0, timer.elapsed
