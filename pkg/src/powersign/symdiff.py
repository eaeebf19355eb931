"""Power-invariant sets, cyclic decompositions, and the derived discriminant.

A subset of a group closed under every coprime power map carries its own
restricted sign character.  Signs multiply over symmetric differences of
such sets, and every finite group is the symmetric difference of a unique
reduced family of distinct cyclic subgroups.  Multiplying the cyclic
discriminants over that family gives an integer whose Kronecker character
always reproduces the element-sign character, exceptional groups included.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import NotCoprime, NotPowerInvariant
from .groups import FiniteGroup, Subgroup, cyclic_group, direct_product
from .numtheory import FactoredInt, char_of_discriminant, chars_equal, factor, units_mod
from .powerchar import discriminant_el

ElementSet = Union[Subgroup, Iterable[int]]


def _as_set(xs: ElementSet) -> frozenset[int]:
    if isinstance(xs, Subgroup):
        return xs.element_set
    return frozenset(xs)


def is_power_invariant(g: FiniteGroup, xs: ElementSet) -> bool:
    """Is xs closed under x -> x^a for every a coprime to |g|?"""
    xset = _as_set(xs)
    units = units_mod(g.n)
    return all(g.power(x, a) in xset for x in xset for a in units)


def char_on_set(g: FiniteGroup, xs: ElementSet, a: int) -> int:
    """Sign of x -> x^a restricted to the power-invariant set xs.

    a only has to be coprime to the orders of the elements of xs, not to
    |g|; a power-invariant set is a union of cyclic-generator classes and
    each such class is permuted as soon as its own order is coprime to a.
    For xs = g the two conditions coincide.
    """
    xset = _as_set(xs)
    if not is_power_invariant(g, xset):
        raise NotPowerInvariant(f"set is not closed under coprime powers of {g.name or g.n}")
    a %= g.n
    orders = g.element_orders()
    for x in xset:
        if gcd(a, orders[x]) != 1:
            raise NotCoprime(
                f"gcd({a}, {orders[x]}) > 1: x -> x^{a} does not permute the set"
            )
    seen: set[int] = set()
    cycles = 0
    for x in xset:
        if x in seen:
            continue
        cycles += 1
        y = x
        while y not in seen:
            seen.add(y)
            y = g.power(y, a)
    return -1 if (len(xset) - cycles) % 2 else 1


def symmetric_difference(sets: Sequence[ElementSet]) -> frozenset[int]:
    """Elements lying in an odd number of the given sets."""
    return reduce(lambda acc, s: acc ^ _as_set(s), sets, frozenset())


@dataclass(frozen=True)
class CyclicDecomposition:
    """A group written as the symmetric difference of distinct cyclic subgroups."""

    group: FiniteGroup
    generators: tuple[int, ...]
    subgroups: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        assert len(set(self.subgroups)) == len(self.subgroups)
        assert symmetric_difference(self.subgroups) == frozenset(range(self.group.n))
        assert self.t % 2 == 1

    @property
    def t(self) -> int:
        return len(self.generators)

    def generator_orders(self) -> tuple[int, ...]:
        orders = self.group.element_orders()
        return tuple(orders[x] for x in self.generators)


def reduced_cyclic_decomposition(
    g: FiniteGroup,
    enumeration: Sequence[tuple[int, frozenset[int]]] | None = None,
) -> CyclicDecomposition:
    """Greedy pass over the cyclic subgroups, largest first.

    A subgroup is taken exactly when its generator is not yet covered by
    the running symmetric difference.  The resulting subgroup set is
    independent of the order among subgroups of equal size; `enumeration`
    lets tests feed in reshuffled equal-size blocks to confirm that.
    """
    if enumeration is None:
        enumeration = g.cyclic_subgroups()
    covered: frozenset[int] = frozenset()
    gens: list[int] = []
    subs: list[frozenset[int]] = []
    for gen, elems in enumeration:
        if gen not in covered:
            covered = covered ^ elems
            gens.append(gen)
            subs.append(elems)
    assert covered == frozenset(range(g.n))
    return CyclicDecomposition(g, tuple(gens), tuple(subs))


def shuffled_enumeration(
    g: FiniteGroup, rng: random.Random
) -> tuple[tuple[int, frozenset[int]], ...]:
    """The canonical cyclic-subgroup list with each equal-size block shuffled."""
    subs = g.cyclic_subgroups()
    out: list[tuple[int, frozenset[int]]] = []
    i = 0
    while i < len(subs):
        j = i
        while j < len(subs) and len(subs[j][1]) == len(subs[i][1]):
            j += 1
        block = list(subs[i:j])
        rng.shuffle(block)
        out.extend(block)
        i = j
    return tuple(out)


def discriminant_star(g: FiniteGroup) -> FactoredInt:
    """Product of the cyclic discriminants over the reduced decomposition."""
    cached = g._cache.get("discriminant_star")
    if cached is None:
        dec = reduced_cyclic_decomposition(g)
        d = FactoredInt.one()
        for o in dec.generator_orders():
            d = d * discriminant_el(cyclic_group(o))
        g._cache["discriminant_star"] = cached = d
    return cached


def n2_star_exponent(g: FiniteGroup) -> int | None:
    """Least e in {0, 1} with (n2^e * d)-character equal to the star character.

    Here d is the group's own discriminant and n2 its Sylow 2-count.  None
    when neither exponent matches; no group of order < 36 needs that.
    """
    target = char_of_discriminant(discriminant_star(g), g.n)
    d = discriminant_el(g)
    n2 = factor(g.sylow2_count())
    for e in (0, 1):
        candidate = d if e == 0 else n2 * d
        if chars_equal(char_of_discriminant(candidate, g.n), target):
            return e
    return None


def coprime_product_covers(h: FiniteGroup, k: FiniteGroup) -> bool:
    """In h x k with coprime orders, do the pairwise products of the two
    reduced decompositions symmetric-difference to the whole group?

    The pair subgroups <(h_i, k_j)> need not form a reduced decomposition
    themselves; only the covering identity is at stake.
    """
    if gcd(h.n, k.n) != 1:
        raise NotCoprime(f"|{h.name or 'H'}| = {h.n} and |{k.name or 'K'}| = {k.n} share a factor")
    g = direct_product(h, k)
    dh = reduced_cyclic_decomposition(h)
    dk = reduced_cyclic_decomposition(k)
    sets = [
        g.generated_subgroup([a * k.n + b]).element_set
        for a in dh.generators
        for b in dk.generators
    ]
    return symmetric_difference(sets) == frozenset(range(g.n))
