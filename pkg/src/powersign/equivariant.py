"""Bijections of a finite group commuting with every conjugation.

These maps form a group under composition that contains all the coprime
power maps x -> x^a and all multiplications by central elements.  Each such
map permutes the conjugacy classes as well as the elements, so it carries
two signs.  This module enumerates the full set for small groups and checks
sign agreement for groups of odd order.

The enumeration exploits the product structure of the set: a conjugation
commuting bijection sends the class of x to an equal-sized class containing
some y with the same centralizer as x, and is determined on the whole class
by that one choice.  "Same centralizer somewhere in the target class" is a
symmetric and transitive relation on classes, so the classes split into
blocks that any such map permutes independently.  Maps are then exactly the
combinations of per-block options, and their element and class signs are
the products of the per-block signs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterator, NamedTuple, Union

from .errors import (
    EnumerationCapExceeded,
    EvenOrder,
    NotCentral,
    NotEquivariant,
)
from .groups import FiniteGroup, Permutation, _sign_of_images, sign

DEFAULT_ENUMERATION_CAP = 10**6

# n! fits under any sane cap only for tiny n; for abelian groups every
# bijection qualifies, so past this point enumeration is hopeless.
ABELIAN_ORDER_LIMIT = 9


@dataclass(frozen=True)
class EquivariantMap:
    """A bijection f of group elements with f(g^-1 x g) = g^-1 f(x) g."""

    permutation: Permutation

    def __call__(self, x: int) -> int:
        return self.permutation.images[x]


MapLike = Union[EquivariantMap, Permutation]


def _perm_of(f: MapLike) -> Permutation:
    return f.permutation if isinstance(f, EquivariantMap) else f


def is_equivariant(g: FiniteGroup, p: Permutation) -> bool:
    """Exhaustive check of f(t^-1 x t) = t^-1 f(x) t over all pairs."""
    if p.degree != g.n:
        return False
    maps = g.conjugation_maps()
    imgs = p.images
    for t in range(g.n):
        mt = maps[t]
        for x in range(g.n):
            if imgs[mt[x]] != mt[imgs[x]]:
                return False
    return True


def central_mult_map(g: FiniteGroup, z: int) -> EquivariantMap:
    """The map x -> z*x for a central element z."""
    if z not in g.center():
        raise NotCentral(f"element {z} is not central in {g.name or g.n}")
    return EquivariantMap(Permutation(tuple(g.table[z])))


class _BlockOption(NamedTuple):
    """One way to map a block of classes: the full assignment plus signs."""

    assignment: tuple[tuple[int, int], ...]
    el_sign: int
    cl_sign: int


def _parity_sign(images: list[int]) -> int:
    return _sign_of_images(tuple(images))


def _block_options(g: FiniteGroup, cap: int) -> tuple[tuple[tuple[int, ...], tuple[_BlockOption, ...]], ...]:
    """Class blocks and, per block, every admissible restriction of a map.

    Candidates for the image of a representative x inside a target class
    are the y with centralizer(y) = centralizer(x); containment would be
    the bare well-definedness condition, but the classes have equal size,
    so the centralizers have equal order and containment is equality.
    """
    cached = g._cache.get("equivariant_blocks")
    if cached is not None:
        return cached

    part = g.conjugacy_classes()
    maps = g.conjugation_maps()
    k = part.class_count
    cents = tuple(frozenset(g.centralizer(x)) for x in range(g.n))
    reps = part.representatives

    candidates: dict[tuple[int, int], tuple[int, ...]] = {}
    neighbors: list[list[int]] = [[] for _ in range(k)]
    for c in range(k):
        for d in range(k):
            if len(part.members[c]) != len(part.members[d]):
                continue
            ys = tuple(y for y in part.members[d] if cents[y] == cents[reps[c]])
            if ys:
                candidates[(c, d)] = ys
                neighbors[c].append(d)

    blocks: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for c in range(k):
        if c in seen:
            continue
        queue, block = [c], []
        seen.add(c)
        while queue:
            cur = queue.pop()
            block.append(cur)
            for d in neighbors[cur]:
                if d not in seen:
                    seen.add(d)
                    queue.append(d)
        blocks.append(tuple(sorted(block)))

    result = []
    for block in blocks:
        pos = {c: i for i, c in enumerate(block)}
        options: list[_BlockOption] = []
        for targets in itertools.permutations(block):
            pools = [candidates.get((c, t)) for c, t in zip(block, targets)]
            if any(pool is None for pool in pools):
                continue
            cl_sign = _parity_sign([pos[t] for t in targets])
            for choice in itertools.product(*pools):
                assignment: dict[int, int] = {}
                ok = True
                for c, y in zip(block, choice):
                    x = reps[c]
                    for t in range(g.n):
                        src, dst = maps[t][x], maps[t][y]
                        prev = assignment.get(src)
                        if prev is None:
                            assignment[src] = dst
                        elif prev != dst:
                            ok = False
                            break
                    if not ok:
                        break
                # equal centralizers make the extension consistent; the
                # check stays because the enumeration is meant to verify,
                # not trust, that argument
                assert ok, "inconsistent equivariant extension"
                support = sorted(assignment)
                index = {x: i for i, x in enumerate(support)}
                el_sign = _parity_sign([index[assignment[x]] for x in support])
                options.append(
                    _BlockOption(tuple(sorted(assignment.items())), el_sign, cl_sign)
                )
                if len(options) > cap:
                    raise EnumerationCapExceeded(
                        f"more than {cap} maps for {g.name or g.n}"
                    )
        result.append((block, tuple(options)))

    final = tuple(result)
    g._cache["equivariant_blocks"] = final
    return final


def count_equivariant(g: FiniteGroup, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """|Sym(G)^G| without materializing the maps."""
    if g.is_abelian():
        return factorial(g.n)
    total = 1
    for _, options in _block_options(g, cap):
        total *= len(options)
    return total


def enumerate_equivariant(
    g: FiniteGroup, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[EquivariantMap]:
    """Every conjugation-commuting bijection of g, duplicate-free.

    The total is known from the block structure before anything is
    yielded, so exceeding the cap raises up front rather than mid-stream.
    Abelian groups of order > 9 are refused outright: there every
    bijection qualifies and n! is out of reach.
    """
    if g.is_abelian():
        if g.n > ABELIAN_ORDER_LIMIT:
            raise EnumerationCapExceeded(
                f"abelian group of order {g.n}: all {g.n}! bijections qualify"
            )
        total = factorial(g.n)
        if total > cap:
            raise EnumerationCapExceeded(
                f"{total} maps for {g.name or g.n} exceeds cap {cap}"
            )
        return (
            EquivariantMap(Permutation(images))
            for images in itertools.permutations(range(g.n))
        )

    blocks = _block_options(g, cap)
    total = 1
    for _, options in blocks:
        total *= len(options)
    if total > cap:
        raise EnumerationCapExceeded(
            f"{total} maps for {g.name or g.n} exceeds cap {cap}"
        )

    def generate() -> Iterator[EquivariantMap]:
        n = g.n
        for combo in itertools.product(*(options for _, options in blocks)):
            images = [0] * n
            for option in combo:
                for x, y in option.assignment:
                    images[x] = y
            yield EquivariantMap(Permutation(tuple(images)))

    return generate()


def char_elements_of_map(g: FiniteGroup, f: MapLike) -> int:
    """Sign of f as a permutation of elements."""
    p = _perm_of(f)
    if not is_equivariant(g, p):
        raise NotEquivariant("map does not commute with conjugation")
    return sign(p)


def char_classes_of_map(g: FiniteGroup, f: MapLike) -> int:
    """Sign of the permutation f induces on conjugacy classes."""
    p = _perm_of(f)
    if not is_equivariant(g, p):
        raise NotEquivariant("map does not commute with conjugation")
    part = g.conjugacy_classes()
    images = [part.class_of[p.images[rep]] for rep in part.representatives]
    return _parity_sign(images)


def verify_odd_signature_agreement(
    g: FiniteGroup, cap: int = DEFAULT_ENUMERATION_CAP
) -> bool:
    """For odd |g|: do element sign and class sign agree on every map?

    Signs multiply over blocks, so the agreement product can be read off
    the block options directly: if some block offers options with both
    products +1 and -1, toggling that block alone exhibits a map where the
    signs disagree; otherwise every map has the same product, namely the
    product of the per-block constants.
    """
    ok, _ = odd_agreement_report(g, cap)
    return ok


def odd_agreement_report(
    g: FiniteGroup, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[bool, int]:
    """(agreement verdict, number of maps checked) for an odd-order group."""
    if g.n % 2 == 0:
        raise EvenOrder(f"|{g.name or 'G'}| = {g.n} is even")
    if g.is_abelian():
        if g.n > ABELIAN_ORDER_LIMIT:
            raise EnumerationCapExceeded(
                f"abelian group of order {g.n}: all {g.n}! bijections qualify"
            )
        total = factorial(g.n)
        if total > cap:
            raise EnumerationCapExceeded(
                f"{total} maps for {g.name or g.n} exceeds cap {cap}"
            )
        # every class is a singleton, so the class permutation is the
        # element permutation under the identity relabeling
        return True, total

    blocks = _block_options(g, cap)
    total = 1
    for _, options in blocks:
        total *= len(options)
    if total > cap:
        raise EnumerationCapExceeded(
            f"{total} maps for {g.name or g.n} exceeds cap {cap}"
        )
    agreement = 1
    for _, options in blocks:
        products = {o.el_sign * o.cl_sign for o in options}
        if len(products) > 1:
            return False, total
        agreement *= products.pop()
    return agreement == 1, total
