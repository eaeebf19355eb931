import pytest

from conftest import brute_classes, brute_sign
from powersign import (
    ClosureTooLarge,
    FiniteGroup,
    NotAGroup,
    NotAnAutomorphism,
    NotCentral,
    Permutation,
    abelian_group,
    are_isomorphic,
    automorphisms,
    cyclic_group,
    cyclic_semidirect,
    dihedral_group,
    direct_product,
    from_generators,
    parse_spec,
    quotient_by_central,
    semidirect_product,
    sign,
    symmetric_group,
)


def test_composition_applies_right_factor_first():
    p = Permutation((1, 2, 0))
    q = Permutation((1, 0, 2))
    assert (p * q).images == tuple(p(q(x)) for x in range(3))


def test_inverse_and_pow():
    p = Permutation((2, 0, 3, 1))
    e = Permutation.identity(4)
    assert p * p.inverse() == e
    assert p**0 == e
    assert p**-2 == p.inverse() * p.inverse()
    assert p ** p.order() == e


def test_cycles_canonical_with_fixed_points():
    p = Permutation((1, 0, 2, 4, 3))
    assert p.cycles() == ((0, 1), (2,), (3, 4))
    assert p.order() == 2


def test_sign_matches_inversion_count():
    from itertools import permutations

    for images in permutations(range(5)):
        assert sign(Permutation(images)) == brute_sign(images)


def test_from_table_relabels_identity_to_zero():
    # C3 written with the identity at index 1
    t = [[2, 0, 1], [0, 1, 2], [1, 2, 0]]
    g = FiniteGroup.from_table(t)
    assert all(g.mul(0, x) == x and g.mul(x, 0) == x for x in range(3))
    assert are_isomorphic(g, cyclic_group(3))


def test_from_table_rejects_non_latin():
    with pytest.raises(NotAGroup) as exc:
        FiniteGroup.from_table([[0, 1], [1, 1]])
    assert exc.value.reason == "not-latin"


def test_from_table_rejects_no_identity():
    # subtraction mod 3 is a quasigroup without a two-sided identity
    t = [[(i - j) % 3 for j in range(3)] for i in range(3)]
    with pytest.raises(NotAGroup) as exc:
        FiniteGroup.from_table(t)
    assert exc.value.reason == "no-identity"


def test_from_table_rejects_non_associative():
    # the smallest non-associative loop, order 5
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 3, 4, 0, 1],
        [3, 4, 1, 2, 0],
        [4, 2, 0, 1, 3],
    ]
    with pytest.raises(NotAGroup) as exc:
        FiniteGroup.from_table(t)
    assert exc.value.reason == "not-associative"


def test_element_orders_s3():
    g = symmetric_group(3)
    assert sorted(g.element_orders()) == [1, 2, 2, 2, 3, 3]


def test_element_orders_divide_group_order(catalog_entries):
    for e in catalog_entries:
        if e.order > 16:
            continue
        assert all(e.order % o == 0 for o in e.group.element_orders())


def test_power_handles_negative_exponents():
    g = cyclic_group(12)
    x = 5
    assert g.power(x, -1) == g.inv(x)
    assert g.power(x, -3) == g.inv(g.power(x, 3))
    assert g.power(x, 12) == 0


@pytest.mark.parametrize(
    "spec, sizes",
    [("S3", [1, 2, 3]), ("Q8", [1, 1, 2, 2, 2]), ("D8", [1, 1, 2, 2, 2])],
)
def test_class_sizes(spec, sizes):
    g = parse_spec(spec)
    part = g.conjugacy_classes()
    assert sorted(part.size_of(c) for c in range(part.class_count)) == sizes


@pytest.mark.parametrize("spec", ["S3", "D8", "A4", "SD(C7,C3,2)", "Dic3"])
def test_classes_match_orbit_oracle(spec):
    g = parse_spec(spec)
    part = g.conjugacy_classes()
    ours = {frozenset(part.members[c]) for c in range(part.class_count)}
    assert ours == set(brute_classes(g))


def test_centralizer_orbit_stabilizer(catalog_entries):
    for e in catalog_entries:
        if e.order > 12:
            continue
        g = e.group
        part = g.conjugacy_classes()
        for x in range(g.n):
            assert g.centralizer(x).order * part.size_of(part.class_of[x]) == g.n


@pytest.mark.parametrize(
    "spec, size", [("Q8", 2), ("D8", 2), ("S3", 1), ("Ab[2,4]", 8)]
)
def test_center_sizes(spec, size):
    assert parse_spec(spec).center().order == size


@pytest.mark.parametrize(
    "spec, n2", [("S3", 3), ("Q8", 1), ("D8", 1), ("S4", 3), ("D12", 3), ("C6", 1)]
)
def test_sylow2_count(spec, n2):
    assert parse_spec(spec).sylow2_count() == n2


@pytest.mark.parametrize(
    "spec, f2", [("S3", 4), ("Q8", 2), ("D8", 6), ("C4", 2), ("Ab[2,2]", 4)]
)
def test_square_root_counts(spec, f2):
    assert parse_spec(spec).count_roots(2) == f2


def test_count_roots_matches_direct_count(catalog_entries):
    for e in catalog_entries:
        if e.order > 12:
            continue
        g = e.group
        for m in (2, 3, g.n):
            direct = sum(1 for x in range(g.n) if g.power(x, m) == 0)
            assert g.count_roots(m) == direct


def test_cyclic_subgroups_c6():
    assert [len(els) for _, els in cyclic_group(6).cyclic_subgroups()] == [6, 3, 2, 1]


def test_cyclic_subgroups_cover_all_elements(catalog_entries):
    for e in catalog_entries:
        if e.order > 16:
            continue
        subs = e.group.cyclic_subgroups()
        union = set().union(*(els for _, els in subs))
        assert union == set(range(e.order))
        # canonical generator really generates its subgroup
        for gen, els in subs:
            assert e.group.element_order(gen) == len(els)


def test_generated_subgroup_lagrange():
    g = symmetric_group(4)
    h = g.generated_subgroup([1, 2])
    assert g.n % h.order == 0
    assert all(g.mul(a, b) in h for a in h for b in h)


def test_direct_product_c2_c3_is_c6():
    g = direct_product(cyclic_group(2), cyclic_group(3))
    assert g.n == 6
    assert g.is_abelian()
    assert are_isomorphic(g, cyclic_group(6))


def test_semidirect_inversion_gives_dihedral():
    c5 = cyclic_group(5)
    inv = Permutation(tuple(c5.inv(x) for x in range(5)))
    g = semidirect_product(c5, cyclic_group(2), [Permutation.identity(5), inv])
    assert are_isomorphic(g, dihedral_group(10))


def test_semidirect_rejects_non_automorphism():
    c5 = cyclic_group(5)
    bad = Permutation((0, 2, 1, 3, 4))  # bijection but not multiplicative
    with pytest.raises(NotAnAutomorphism):
        semidirect_product(c5, cyclic_group(2), [Permutation.identity(5), bad])


def test_quotient_by_central():
    q8 = parse_spec("Q8")
    assert are_isomorphic(quotient_by_central(q8, q8.center()), abelian_group([2, 2]))
    d8 = parse_spec("D8")
    assert are_isomorphic(quotient_by_central(d8, d8.center()), abelian_group([2, 2]))


def test_quotient_rejects_non_central():
    s3 = symmetric_group(3)
    with pytest.raises(NotCentral):
        quotient_by_central(s3, [0, 1])


@pytest.mark.parametrize(
    "a, b, iso",
    [
        ("C4", "Ab[2,2]", False),
        ("D8", "Q8", False),
        ("C6", "S3", False),
        ("D6", "S3", True),
        ("C2 x C2", "Ab[2,2]", True),
    ],
)
def test_are_isomorphic_known_pairs(a, b, iso):
    assert are_isomorphic(parse_spec(a), parse_spec(b)) is iso


def test_conjugate_semidirect_actions_give_isomorphic_groups():
    assert are_isomorphic(cyclic_semidirect(7, 3, 2), cyclic_semidirect(7, 3, 4))


@pytest.mark.parametrize(
    "spec, count", [("Q8", 24), ("S3", 6), ("C6", 2), ("Ab[2,2]", 6)]
)
def test_automorphism_counts(spec, count):
    assert len(automorphisms(parse_spec(spec))) == count


def test_automorphisms_preserve_multiplication():
    g = parse_spec("D8")
    for f in automorphisms(g):
        assert all(
            f(g.mul(a, b)) == g.mul(f(a), f(b)) for a in range(g.n) for b in range(g.n)
        )


def test_from_generators_builds_s3():
    g = from_generators(3, [Permutation((1, 0, 2)), Permutation((0, 2, 1))])
    assert g.n == 6
    assert are_isomorphic(g, symmetric_group(3))


def test_from_generators_respects_cap():
    gens = [Permutation((1, 2, 3, 4, 0)), Permutation((1, 0, 2, 3, 4))]
    with pytest.raises(ClosureTooLarge):
        from_generators(5, gens, cap=10)
