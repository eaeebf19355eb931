"""Acceptance sweep: ten numbered criteria, one reported line each.

Each criterion prints `[Cnn] PASS/FAIL <detail>` on the real stderr so the
line survives pytest capture, then asserts.  Runtime bounds are asserted
where a criterion states one, with the measured time in the message.
"""

import random
import sys
import time

import numpy as np
import pytest

from conftest import legendre_euler
from powersign import (
    EXPECTED_COUNTS,
    analyze,
    builtin_catalog,
    char_el,
    char_el_explicit,
    char_el_table,
    char_cl_table,
    char_of_discriminant,
    char_on_set,
    chars_equal,
    count_equivariant,
    cyclic_group,
    discriminant_cl,
    discriminant_el,
    discriminant_star,
    enumerate_equivariant,
    is_2group_times_odd,
    is_2n_involution_type,
    kronecker,
    kronecker_column,
    n2_star_exponent,
    parse_spec,
    reduced_cyclic_decomposition,
    shuffled_enumeration,
    symmetric_difference,
    units_mod,
)

EXPECTED_EXCEPTIONS = {
    # name: (order, fundamental discriminant of d, actual character discriminant)
    "C3 x D6": (18, -4, -3),
    "SD(C5,C4,2)": (20, -4, -20),
    "C3 x D10": (30, 1, 5),
    "C5 x D6": (30, -4, -3),
}


@pytest.fixture()
def announce(capfd):
    """One `[Cnn] PASS/FAIL <detail>` line per criterion, outside capture."""

    def _announce(num: int, ok: bool, detail: str) -> None:
        with capfd.disabled():
            print(f"[C{num:02d}] {'PASS' if ok else 'FAIL'} {detail}", file=sys.stderr)

    return _announce


def test_c01_prime_cyclic_base_case(announce):
    t0 = time.perf_counter()
    mismatches = []
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        g = cyclic_group(p)
        for a in range(1, p):
            if char_el(g, a) != legendre_euler(a, p):
                mismatches.append((p, a))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 1.0
    announce(1, ok, f"prime cyclic signs vs Euler criterion, {elapsed:.2f}s")
    assert not mismatches, mismatches[:5]
    assert elapsed < 1.0, f"{elapsed:.2f}s over the 1 s bound"


def test_c02_class_character_identity_everywhere(catalog_entries, announce):
    t0 = time.perf_counter()
    failures = [
        e.name
        for e in catalog_entries
        if not chars_equal(
            char_cl_table(e.group),
            char_of_discriminant(discriminant_cl(e.group), e.order),
        )
    ]
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 30.0
    announce(2, ok, f"class character identity on all 97 groups, {elapsed:.2f}s")
    assert failures == []
    assert elapsed < 30.0, f"{elapsed:.2f}s over the 30 s bound"


def test_c03_element_identity_on_covered_structures(catalog_entries, announce):
    t0 = time.perf_counter()
    covered = 0
    failures = []
    for e in catalog_entries:
        g = e.group
        if not (is_2group_times_odd(g) or is_2n_involution_type(g)):
            continue
        covered += 1
        if not chars_equal(
            char_el_table(g), char_of_discriminant(discriminant_el(g), g.n)
        ):
            failures.append(e.name)
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 30.0
    announce(3, ok, f"element identity on {covered} covered groups, {elapsed:.2f}s")
    assert failures == []
    assert covered > 0
    assert elapsed < 30.0, f"{elapsed:.2f}s over the 30 s bound"


def test_c04_exception_census(catalog_entries, announce):
    failing = {}
    order_24_failures = []
    for e in catalog_entries:
        r = analyze(e.group, name=e.name)
        if not r.main_identity_holds:
            failing[e.name] = (e.order, r.d_el_fundamental, r.el_disc)
            if e.order == 24:
                order_24_failures.append(e.name)
    ok = failing == EXPECTED_EXCEPTIONS and not order_24_failures
    announce(
        4,
        ok,
        "census: "
        + f"{len(failing)} failing groups with orders "
        + str(sorted(v[0] for v in failing.values())),
    )
    assert sorted(v[0] for v in failing.values()) == [18, 20, 30, 30]
    assert failing == EXPECTED_EXCEPTIONS
    assert order_24_failures == []


def test_c05_explicit_formula_everywhere(catalog_entries, announce):
    t0 = time.perf_counter()
    failures = [
        (e.name, a)
        for e in catalog_entries
        for a in units_mod(e.order)
        if char_el_explicit(e.group, a) != char_el(e.group, a)
    ]
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 10.0
    announce(5, ok, f"explicit formula on all groups and units, {elapsed:.2f}s")
    assert failures == []
    assert elapsed < 10.0, f"{elapsed:.2f}s over the 10 s bound"


def test_c06_symmetric_difference_suite(catalog_entries, announce):
    t0 = time.perf_counter()
    failures = []
    for e in catalog_entries:
        g = e.group
        dec = reduced_cyclic_decomposition(g)
        if symmetric_difference(dec.subgroups) != frozenset(range(g.n)):
            failures.append((e.name, "cover"))
        if len(set(dec.subgroups)) != dec.t:
            failures.append((e.name, "distinct"))
        if dec.t % 2 == 0:
            failures.append((e.name, "even t"))
        if g.n > 1 and g.n & (g.n - 1) == 0 and 0 in dec.generators:
            failures.append((e.name, "identity in a 2-group"))
        for a in units_mod(g.n):
            product = 1
            for sub in dec.subgroups:
                product *= char_on_set(g, sub, a)
            if product != char_el(g, a):
                failures.append((e.name, f"product at a={a}"))
                break
        base = frozenset(dec.subgroups)
        rng = random.Random(f"0:{e.name}")
        for _ in range(100):
            redone = reduced_cyclic_decomposition(g, shuffled_enumeration(g, rng))
            if frozenset(redone.subgroups) != base:
                failures.append((e.name, "shuffle"))
                break
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60.0
    announce(6, ok, f"decomposition suite, 100 shuffles per group, {elapsed:.2f}s")
    assert failures == []
    assert elapsed < 60.0, f"{elapsed:.2f}s over the 60 s bound"


def test_c07_star_discriminant_identity(catalog_entries, announce):
    t0 = time.perf_counter()
    failures = []
    exponents = {}
    for e in catalog_entries:
        g = e.group
        if not chars_equal(
            char_el_table(g), char_of_discriminant(discriminant_star(g), g.n)
        ):
            failures.append(e.name)
        exponents[e.name] = n2_star_exponent(g)
    elapsed = time.perf_counter() - t0
    bad_exponents = {n: u for n, u in exponents.items() if u not in (0, 1)}
    ok = not failures and not bad_exponents and elapsed < 10.0
    announce(7, ok, f"star character identity incl. exceptions, {elapsed:.2f}s")
    assert failures == []
    assert bad_exponents == {}
    # the scaling exponent is 1 exactly on the four exceptional groups
    assert {n for n, u in exponents.items() if u == 1} == set(EXPECTED_EXCEPTIONS)
    assert elapsed < 10.0, f"{elapsed:.2f}s over the 10 s bound"


def _cycle_sign(images):
    seen = [False] * len(images)
    swaps = 0
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x]
            length += 1
        swaps += length - 1
    return -1 if swaps % 2 else 1


def test_c08_odd_order_enumeration(catalog_entries, by_name, announce):
    t0 = time.perf_counter()
    odd_nonabelian = [
        e for e in catalog_entries if e.order % 2 and not e.group.is_abelian()
    ]
    assert [e.order for e in odd_nonabelian] == [21, 27, 27]
    disagreements = []
    counts = {}
    for e in odd_nonabelian:
        g = e.group
        part = g.conjugacy_classes()
        class_of, reps = part.class_of, part.representatives
        n_maps = 0
        for f in enumerate_equivariant(g, cap=10**6):
            images = f.permutation.images
            el = _cycle_sign(images)
            # class_of[reps[i]] == i, so this is the induced class permutation
            cl = _cycle_sign(tuple(class_of[images[r]] for r in reps))
            if el != cl:
                disagreements.append((e.name, images))
            n_maps += 1
        counts[e.name] = n_maps
    q8_count = count_equivariant(by_name["Q8"].group)
    s3_count = count_equivariant(parse_spec("S3"))
    elapsed = time.perf_counter() - t0
    ok = (
        not disagreements
        and counts == {"SD(C7,C3,2)": 36, "SD(C9,C3,4)": 629856, "SDP(Ab[3,3],C3,a1)": 629856}
        and q8_count == 16
        and s3_count == 6
        and elapsed < 60.0
    )
    announce(
        8,
        ok,
        f"odd enumeration {sum(counts.values())} maps, "
        f"s3 count {s3_count} (claimed 6), q8 count {q8_count}, {elapsed:.2f}s",
    )
    assert disagreements == []
    assert counts["SD(C7,C3,2)"] == 36
    assert counts["SD(C9,C3,4)"] == 629856
    assert counts["SDP(Ab[3,3],C3,a1)"] == 629856
    assert elapsed < 60.0, f"{elapsed:.2f}s over the 60 s bound"
    assert q8_count == 16
    # the stated count for S3 is 6; the enumeration finds 2.  The filter
    # in tests/test_equivariant.py confirms 2 against all 720 bijections,
    # so this line is expected to fail until the stated count is revised.
    assert s3_count == 6, f"S3 equivariant map count is {s3_count}, not 6"


def test_c09_kronecker_properties(catalog_entries, announce):
    t0 = time.perf_counter()
    span = 200
    cols = {}

    def col(v):
        c = cols.get(v)
        if c is None:
            c = cols[v] = kronecker_column(v, span)
        return c

    bad_pairs = 0
    for a in range(-span, span + 1):
        ca = col(a)
        for b in range(-span, span + 1):
            if not np.array_equal(col(a * b), ca * col(b)):
                bad_pairs += 1
    ns = np.arange(-span, span + 1)
    euler_bad = 0
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        expected = np.array(
            [0 if n % p == 0 else legendre_euler(int(n), p) for n in ns],
            dtype=np.int64,
        )
        if not np.array_equal(col(p), expected):
            euler_bad += 1
    axiom_bad = 0
    for n in ns:
        n = int(n)
        two = 0 if n % 2 == 0 else (1 if n % 8 in (1, 7) else -1)
        if kronecker(n, 2) != two:
            axiom_bad += 1
        if kronecker(n, -1) != (-1 if n < 0 else 1):
            axiom_bad += 1
        if kronecker(n, 0) != (1 if n == 1 else 0):
            axiom_bad += 1
    bad_mod4 = [
        e.name
        for e in catalog_entries
        if discriminant_el(e.group).value_mod(4) not in (0, 1)
    ]
    elapsed = time.perf_counter() - t0
    ok = not (bad_pairs or euler_bad or axiom_bad or bad_mod4) and elapsed < 5.0
    announce(
        9,
        ok,
        f"multiplicativity to {span}, Euler primes to 47, axioms, {elapsed:.2f}s",
    )
    assert bad_pairs == 0
    assert euler_bad == 0
    assert axiom_bad == 0
    assert bad_mod4 == []
    assert elapsed < 5.0, f"{elapsed:.2f}s over the 5 s bound"


def test_c10_catalog_integrity(announce):
    t0 = time.perf_counter()
    first = builtin_catalog()
    second = builtin_catalog()
    elapsed = time.perf_counter() - t0
    counts: dict[int, int] = {}
    for e in first:
        counts[e.order] = counts.get(e.order, 0) + 1
    same = [e.name for e in first] == [e.name for e in second] and all(
        a.group.table == b.group.table for a, b in zip(first, second)
    )
    ok = counts == EXPECTED_COUNTS and same and elapsed < 120.0
    # the order-32 import clause is conditional on user-supplied data;
    # none ships with the repository, so it is not exercised here
    announce(
        10,
        ok,
        f"97 groups, per-order counts exact, deterministic rebuild, {elapsed:.2f}s",
    )
    assert counts == EXPECTED_COUNTS
    assert sum(counts.values()) == 97
    assert same
    assert elapsed < 120.0, f"{elapsed:.2f}s over the 120 s bound"
