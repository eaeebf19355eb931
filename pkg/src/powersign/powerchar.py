"""Signature characters of power maps on a finite group.

For gcd(a, |G|) = 1 the map x -> x^a permutes G and also permutes its
conjugacy classes.  Both permutations have a sign, and each sign, viewed as
a function of a, is a quadratic character mod |G|.  This module computes
those characters, the discriminants that induce them, and the handful of
structural flags (odd order, 2-group-times-odd, ...) that the catalog
reports care about.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import IllDefined, NotCoprime
from .groups import FiniteGroup, Permutation, sign
from .numtheory import (
    FactoredInt,
    QuadraticCharacter,
    char_of_discriminant,
    chars_equal,
    divisors,
    euler_phi,
    factor,
    fundamental_discriminant,
    identify_discriminant,
    mult_order,
    units_mod,
)


def _reduced_exponent(g: FiniteGroup, a: int) -> int:
    n = g.n
    a %= n
    if gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1, so x -> x^{a} is not a bijection")
    return a


def power_permutation(g: FiniteGroup, a: int) -> Permutation:
    """The permutation x -> x^a of the elements of g, for gcd(a, |g|) = 1."""
    a = _reduced_exponent(g, a)
    return Permutation(tuple(g.power(x, a) for x in range(g.n)))


def char_el(g: FiniteGroup, a: int) -> int:
    """Sign of x -> x^a as a permutation of elements."""
    return sign(power_permutation(g, a))


def char_el_table(g: FiniteGroup) -> QuadraticCharacter:
    """The element-sign character a -> char_el(g, a), tabulated mod |g|."""
    cached = g._cache.get("char_el_table")
    if cached is None:
        units = units_mod(g.n)
        cached = QuadraticCharacter(g.n, tuple(char_el(g, a) for a in units))
        g._cache["char_el_table"] = cached
    return cached


def class_power_permutation(g: FiniteGroup, a: int) -> Permutation:
    """The permutation that x -> x^a induces on conjugacy classes.

    Raises IllDefined if some class does not land inside a single class,
    which cannot happen for gcd(a, |g|) = 1 but is checked anyway.
    """
    a = _reduced_exponent(g, a)
    part = g.conjugacy_classes()
    images = []
    for cid in range(part.class_count):
        targets = {part.class_of[g.power(x, a)] for x in part.members[cid]}
        if len(targets) != 1:
            raise IllDefined(
                f"class {cid} of {g.name or g.n} is split by x -> x^{a}"
            )
        images.append(targets.pop())
    return Permutation(tuple(images))


def char_cl(g: FiniteGroup, a: int) -> int:
    """Sign of the class permutation induced by x -> x^a."""
    return sign(class_power_permutation(g, a))


def char_cl_table(g: FiniteGroup) -> QuadraticCharacter:
    """The class-sign character a -> char_cl(g, a), tabulated mod |g|."""
    cached = g._cache.get("char_cl_table")
    if cached is None:
        units = units_mod(g.n)
        cached = QuadraticCharacter(g.n, tuple(char_cl(g, a) for a in units))
        g._cache["char_cl_table"] = cached
    return cached


def n2_exponent(g: FiniteGroup) -> int:
    """1 when |g| is exactly twice the number of Sylow 2-subgroups, else 0."""
    return 1 if g.n == 2 * g.sylow2_count() else 0


def discriminant_el(g: FiniteGroup) -> FactoredInt:
    """The integer (-1)^((n - f2)/2) * n^f2 / n2^eps attached to g.

    n = |g|, f2 = number of solutions of x^2 = e, n2 = number of Sylow
    2-subgroups, eps = n2_exponent(g).  Its value can be astronomically
    large (n^f2 with f2 up to n), hence the factored representation.
    """
    cached = g._cache.get("discriminant_el")
    if cached is None:
        n = g.n
        f2 = g.count_roots(2)
        d = factor(n).pow(f2)
        if n2_exponent(g):
            d = d.divide(factor(g.sylow2_count()))
        if ((n - f2) // 2) % 2:
            d = d * FactoredInt(-1, ())
        g._cache["discriminant_el"] = cached = d
    return cached


def discriminant_cl(g: FiniteGroup) -> FactoredInt:
    """The integer (-1)^s * prod |g|/|C| over real classes C.

    A class is real when it contains the inverses of its members; s is the
    number of nonreal classes divided by two.
    """
    cached = g._cache.get("discriminant_cl")
    if cached is None:
        part = g.conjugacy_classes()
        d = FactoredInt.one()
        nonreal = 0
        for cid, rep in enumerate(part.representatives):
            if part.class_of[g.inv(rep)] == cid:
                d = d * factor(g.n // len(part.members[cid]))
            else:
                nonreal += 1
        assert nonreal % 2 == 0
        if (nonreal // 2) % 2:
            d = d * FactoredInt(-1, ())
        g._cache["discriminant_cl"] = cached = d
    return cached


def char_el_explicit(g: FiniteGroup, a: int) -> int:
    """char_el(g, a) computed from element-order counts alone.

    For each divisor d of |g| with d > 2 and G(d) elements of order d, the
    restriction of x -> x^a to those elements contributes
    (-1)^(phi(d)/ord_d(a)) raised to G(d)/phi(d).  Elements of order 1 or 2
    are fixed and contribute nothing.
    """
    a = _reduced_exponent(g, a)
    counts = [0] * (g.n + 1)
    for o in g.element_orders():
        counts[o] += 1
    result = 1
    for d in divisors(g.n):
        gd = counts[d]
        if d <= 2 or gd == 0:
            continue
        phi = euler_phi(d)
        o = mult_order(a, d)
        assert phi % o == 0 and gd % phi == 0
        if ((phi // o) % 2) and ((gd // phi) % 2):
            result = -result
    return result


def is_odd_order(g: FiniteGroup) -> bool:
    return g.n % 2 == 1


def is_2group_times_odd(g: FiniteGroup) -> bool:
    """True when g is a direct product of a 2-group and an odd-order group.

    Equivalent test used here: the Sylow 2-subgroup is normal (n2 = 1) and
    the odd-order elements are closed under multiplication, so both factors
    exist as normal subgroups.
    """
    if g.n % 2 == 1:
        return True
    if g.sylow2_count() != 1:
        return False
    orders = g.element_orders()
    odd = [x for x in range(g.n) if orders[x] % 2 == 1]
    odd_set = set(odd)
    return all(g.table[x][y] in odd_set for x in odd for y in odd)


def is_2n_involution_type(g: FiniteGroup) -> bool:
    """True when |g| = 2m with m odd and every even-order element squares to e."""
    n = g.n
    if n % 2 != 0 or (n // 2) % 2 == 0:
        return False
    return all(o == 2 for o in g.element_orders() if o % 2 == 0)


CSV_FIELDS = (
    "name",
    "order",
    "f2",
    "n2",
    "epsilon",
    "d_el_fundamental",
    "d_cl_fundamental",
    "el_disc",
    "cl_disc",
    "main_holds",
    "odd_order",
    "two_group_times_odd",
    "two_n_involution",
)


@dataclass(frozen=True)
class GroupCharacterReport:
    """Everything the verification sweeps need to know about one group."""

    name: str
    order: int
    f2: int
    n2: int
    epsilon: int
    d_el: FactoredInt
    d_cl: FactoredInt
    char_el: QuadraticCharacter
    char_cl: QuadraticCharacter
    main_identity_holds: bool
    odd_order: bool
    two_group_times_odd: bool
    two_n_involution: bool

    def __post_init__(self) -> None:
        assert self.epsilon == (1 if self.order == 2 * self.n2 else 0)
        assert self.d_el.value_mod(4) in (0, 1)
        assert self.char_el.modulus == self.order
        assert self.char_cl.modulus == self.order

    @property
    def d_el_fundamental(self) -> int:
        return fundamental_discriminant(self.d_el)

    @property
    def d_cl_fundamental(self) -> int:
        return fundamental_discriminant(self.d_cl)

    @property
    def el_disc(self) -> int:
        """Fundamental discriminant recovered from char_el alone."""
        return identify_discriminant(self.char_el)

    @property
    def cl_disc(self) -> int:
        """Fundamental discriminant recovered from char_cl alone."""
        return identify_discriminant(self.char_cl)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "f2": self.f2,
            "n2": self.n2,
            "epsilon": self.epsilon,
            "d_el": str(self.d_el),
            "d_el_fundamental": self.d_el_fundamental,
            "d_cl": str(self.d_cl),
            "d_cl_fundamental": self.d_cl_fundamental,
            "el_disc": self.el_disc,
            "cl_disc": self.cl_disc,
            "char_el": self.char_el.to_json_dict(),
            "char_cl": self.char_cl.to_json_dict(),
            "main_identity_holds": self.main_identity_holds,
            "odd_order": self.odd_order,
            "two_group_times_odd": self.two_group_times_odd,
            "two_n_involution": self.two_n_involution,
        }

    def csv_row(self) -> list[str]:
        flags = (
            self.main_identity_holds,
            self.odd_order,
            self.two_group_times_odd,
            self.two_n_involution,
        )
        return [
            self.name,
            str(self.order),
            str(self.f2),
            str(self.n2),
            str(self.epsilon),
            str(self.d_el_fundamental),
            str(self.d_cl_fundamental),
            str(self.el_disc),
            str(self.cl_disc),
            *("true" if f else "false" for f in flags),
        ]


def main_identity_holds(g: FiniteGroup) -> bool:
    """Does char_el agree with the character of discriminant_el(g)?"""
    return chars_equal(char_el_table(g), char_of_discriminant(discriminant_el(g), g.n))


def analyze(g: FiniteGroup, name: str | None = None) -> GroupCharacterReport:
    """Compute the full report for one group."""
    label = name if name is not None else (g.name or f"order-{g.n} group")
    ce = char_el_table(g)
    cc = char_cl_table(g)
    d_el = discriminant_el(g)
    return GroupCharacterReport(
        name=label,
        order=g.n,
        f2=g.count_roots(2),
        n2=g.sylow2_count(),
        epsilon=n2_exponent(g),
        d_el=d_el,
        d_cl=discriminant_cl(g),
        char_el=ce,
        char_cl=cc,
        main_identity_holds=chars_equal(ce, char_of_discriminant(d_el, g.n)),
        odd_order=is_odd_order(g),
        two_group_times_odd=is_2group_times_odd(g),
        two_n_involution=is_2n_involution_type(g),
    )
