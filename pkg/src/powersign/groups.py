"""Finite groups as validated multiplication tables.

Elements are dense indices 0..n-1 and element 0 is always the identity.
All higher modules speak indices; tables are tuples of tuples so groups
are safe to share, hash by identity, and cache derived data on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .errors import (
    ClosureTooLarge,
    IsomorphismSearchExceeded,
    NotAGroup,
    NotAHomomorphism,
    NotAnAutomorphism,
    NotASubgroup,
    NotCentral,
)

DEFAULT_CLOSURE_CAP = 10_000
ISO_NODE_CAP = 10_000_000


@dataclass(frozen=True)
class Permutation:
    """Bijection on 0..n-1 stored as its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images are not a bijection on 0..n-1")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(x) = self(other(x))."""
        s = self.images
        return Permutation(tuple(s[x] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(len(self.images))
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycle decomposition, fixed points included.

        Each cycle starts at its least element; cycles are ordered by that
        element, so the output is canonical.
        """
        imgs = self.images
        seen = [False] * len(imgs)
        out = []
        for start in range(len(imgs)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = imgs[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = imgs[x]
            out.append(tuple(cyc))
        return tuple(out)

    def order(self) -> int:
        if not self.images:
            return 1
        return lcm(*(len(c) for c in self.cycles()))


def sign(p: Permutation) -> int:
    """Signature of a permutation: (-1)^(n - number of cycles)."""
    return _sign_of_images(p.images)


def _sign_of_images(images) -> int:
    # shared hot path; callers pass any indexable of images
    seen = [False] * len(images)
    cycles = 0
    for start in range(len(images)):
        if not seen[start]:
            cycles += 1
            x = start
            while not seen[x]:
                seen[x] = True
                x = images[x]
    return -1 if (len(images) - cycles) & 1 else 1


class Subgroup:
    """Validated subgroup of a FiniteGroup, stored as sorted element indices."""

    def __init__(self, group: "FiniteGroup", elements):
        elems = sorted(set(elements))
        if any(not (0 <= g < group.n) for g in elems):
            raise NotASubgroup("element index out of range")
        if 0 not in elems:
            raise NotASubgroup("identity missing")
        eset = frozenset(elems)
        table = group.table
        for a in elems:
            row = table[a]
            for b in elems:
                if row[b] not in eset:
                    raise NotASubgroup("set is not closed under multiplication")
        # Lagrange; automatic for a closed subset, asserted all the same
        assert group.n % len(elems) == 0
        self.group = group
        self.elements = tuple(elems)
        self.element_set = eset

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"Subgroup(order={self.order} of n={self.group.n})"


@dataclass(frozen=True, eq=False)
class ConjClassPartition:
    """Conjugacy classes: per-element class id, plus per-class data.

    Class 0 is the identity class; representatives are the least element
    of each class and classes are numbered by representative order.
    """

    class_of: tuple[int, ...]
    representatives: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]

    @property
    def class_count(self) -> int:
        return len(self.representatives)

    def size_of(self, cid: int) -> int:
        return len(self.members[cid])


class FiniteGroup:
    """Group on 0..n-1 given by its full multiplication table.

    The constructor checks every axiom: Latin square, identity at index 0,
    exhaustive associativity, and two-sided inverses. Instances are
    immutable by convention; derived structure (orders, classes, Sylow
    data) is computed lazily and cached.
    """

    def __init__(self, table, name: str | None = None):
        tbl = tuple(tuple(row) for row in table)
        n = len(tbl)
        if n == 0:
            raise NotAGroup("not-latin", "empty table")
        rng = list(range(n))
        for i, row in enumerate(tbl):
            if len(row) != n or sorted(row) != rng:
                raise NotAGroup("not-latin", f"row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            if sorted(row[j] for row in tbl) != rng:
                raise NotAGroup("not-latin", f"column {j} is not a permutation of 0..{n - 1}")
        if tbl[0] != tuple(rng) or any(tbl[i][0] != i for i in range(n)):
            raise NotAGroup("no-identity", "element 0 is not a two-sided identity")
        for a in range(n):
            ra = tbl[a]
            for b in range(n):
                rab = tbl[ra[b]]
                rb = tbl[b]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise NotAGroup(
                            "not-associative", f"({a}*{b})*{c} != {a}*({b}*{c})"
                        )
        inv = [-1] * n
        for a in range(n):
            for b in range(n):
                if tbl[a][b] == 0 and tbl[b][a] == 0:
                    inv[a] = b
                    break
        assert all(v >= 0 for v in inv), "two-sided inverses must exist"
        self.table = tbl
        self.n = n
        self.name = name
        self._inv = tuple(inv)
        self._cache: dict = {}

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, n={self.n})"

    @classmethod
    def from_table(cls, table, name: str | None = None) -> "FiniteGroup":
        """Validate an arbitrary table, relabeling the identity to index 0."""
        tbl = [list(row) for row in table]
        n = len(tbl)
        if n == 0 or any(len(r) != n for r in tbl):
            raise NotAGroup("not-latin", "table is not square")
        for r in tbl:
            for v in r:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise NotAGroup("not-latin", "entry out of range 0..n-1")
        rng = list(range(n))
        ident = -1
        for e in range(n):
            if tbl[e] == rng and all(tbl[i][e] == i for i in range(n)):
                ident = e
                break
        if ident < 0:
            raise NotAGroup("no-identity", "no two-sided identity element")
        if ident != 0:
            # swap labels 0 and ident; the map is its own inverse
            relabel = list(range(n))
            relabel[0], relabel[ident] = ident, 0
            tbl = [
                [relabel[tbl[relabel[i]][relabel[j]]] for j in range(n)]
                for i in range(n)
            ]
        return cls(tbl, name=name)

    # -- elementwise arithmetic -------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g = self._inv[g]
            k = -k
        result = 0
        base = g
        tbl = self.table
        while k:
            if k & 1:
                result = tbl[result][base]
            base = tbl[base][base]
            k >>= 1
        return result

    def element_order(self, g: int) -> int:
        o = 1
        x = g
        tbl = self.table
        while x != 0:
            x = tbl[x][g]
            o += 1
        return o

    def element_orders(self) -> tuple[int, ...]:
        if "orders" not in self._cache:
            self._cache["orders"] = tuple(self.element_order(g) for g in range(self.n))
        return self._cache["orders"]

    def is_abelian(self) -> bool:
        if "abelian" not in self._cache:
            tbl = self.table
            self._cache["abelian"] = all(
                tbl[a][b] == tbl[b][a]
                for a in range(self.n)
                for b in range(a + 1, self.n)
            )
        return self._cache["abelian"]

    # -- conjugation machinery --------------------------------------------

    def conjugation_maps(self) -> tuple[tuple[int, ...], ...]:
        """maps[g][x] = g^-1 x g, precomputed for every g."""
        if "conj" not in self._cache:
            tbl = self.table
            inv = self._inv
            self._cache["conj"] = tuple(
                tuple(tbl[tbl[inv[g]][x]][g] for x in range(self.n))
                for g in range(self.n)
            )
        return self._cache["conj"]

    def conjugacy_classes(self) -> ConjClassPartition:
        if "classes" not in self._cache:
            n = self.n
            maps = self.conjugation_maps()
            class_of = [-1] * n
            reps: list[int] = []
            members: list[tuple[int, ...]] = []
            for x in range(n):
                if class_of[x] >= 0:
                    continue
                cid = len(reps)
                orbit = sorted({maps[g][x] for g in range(n)})
                for y in orbit:
                    class_of[y] = cid
                reps.append(x)
                members.append(tuple(orbit))
            self._cache["classes"] = ConjClassPartition(
                tuple(class_of), tuple(reps), tuple(members)
            )
        return self._cache["classes"]

    def centralizer(self, g: int) -> Subgroup:
        tbl = self.table
        return Subgroup(self, [h for h in range(self.n) if tbl[h][g] == tbl[g][h]])

    def center(self) -> Subgroup:
        if "center" not in self._cache:
            tbl = self.table
            n = self.n
            self._cache["center"] = Subgroup(
                self,
                [
                    h
                    for h in range(n)
                    if all(tbl[h][g] == tbl[g][h] for g in range(n))
                ],
            )
        return self._cache["center"]

    # -- subgroups ----------------------------------------------------------

    def subgroup(self, elements) -> Subgroup:
        return Subgroup(self, elements)

    def generated_subgroup(self, generators) -> Subgroup:
        return Subgroup(self, self._closure(generators))

    def _closure(self, generators) -> list[int]:
        # breadth-first, right-multiplying by generators in the given order
        tbl = self.table
        elems = [0]
        seen = {0}
        i = 0
        while i < len(elems):
            x = elems[i]
            i += 1
            for g in generators:
                y = tbl[x][g]
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
        return elems

    def cyclic_subgroups(self) -> tuple[tuple[int, frozenset], ...]:
        """Every distinct cyclic subgroup as (canonical generator, elements).

        The canonical generator is the least index generating the subgroup;
        the list is sorted by decreasing order, ties by generator index.
        """
        if "cyclic" not in self._cache:
            tbl = self.table
            found: dict[frozenset, int] = {}
            for g in range(self.n):
                elems = {0}
                x = g
                while x != 0:
                    elems.add(x)
                    x = tbl[x][g]
                key = frozenset(elems)
                if key not in found:
                    found[key] = g
            lst = sorted(
                ((gen, s) for s, gen in found.items()),
                key=lambda t: (-len(t[1]), t[0]),
            )
            self._cache["cyclic"] = tuple(lst)
        return self._cache["cyclic"]

    # -- counting -----------------------------------------------------------

    def count_roots(self, m: int) -> int:
        """Number of elements with g^m = identity (all of them when m = 0)."""
        return sum(1 for o in self.element_orders() if m % o == 0)

    def count_order(self, d: int) -> int:
        return sum(1 for o in self.element_orders() if o == d)

    def sylow2_count(self) -> int:
        """Number of Sylow 2-subgroups, via normalizer extension."""
        if "n2" not in self._cache:
            self._cache["n2"] = self._sylow2_count()
        return self._cache["n2"]

    def _sylow2_count(self) -> int:
        n = self.n
        two_part = 1
        m = n
        while m % 2 == 0:
            m //= 2
            two_part *= 2
        if two_part == 1:
            return 1
        orders = self.element_orders()

        def is_two_element(g: int) -> bool:
            o = orders[g]
            return o > 1 and o & (o - 1) == 0

        # seed with a maximal-order 2-element (least index on ties)
        seed = max(
            (g for g in range(n) if is_two_element(g)),
            key=lambda g: (orders[g], -g),
        )
        p = frozenset(self.generated_subgroup([seed]).elements)
        while len(p) < two_part:
            normalizer = self._normalizer(p)
            h = next(g for g in normalizer if g not in p and is_two_element(g))
            p = frozenset(self.generated_subgroup(sorted(p) + [h]).elements)
        return n // len(self._normalizer(p))

    def _normalizer(self, subset: frozenset) -> list[int]:
        maps = self.conjugation_maps()
        return [
            g
            for g in range(self.n)
            if all(maps[g][x] in subset for x in subset)
        ]

    # -- isomorphism support --------------------------------------------------

    def fingerprint(self) -> tuple:
        """Cheap isomorphism invariants used to filter candidate pairs."""
        if "fp" not in self._cache:
            orders = self.element_orders()
            part = self.conjugacy_classes()
            class_sizes = tuple(sorted(len(m) for m in part.members))
            joint = tuple(
                sorted(
                    (orders[x], len(part.members[part.class_of[x]]))
                    for x in range(self.n)
                )
            )
            self._cache["fp"] = (
                self.n,
                tuple(sorted(orders)),
                class_sizes,
                self.center().order,
                joint,
            )
        return self._cache["fp"]


def from_generators(
    degree: int,
    generators,
    cap: int = DEFAULT_CLOSURE_CAP,
    name: str | None = None,
) -> FiniteGroup:
    """Group generated by permutations on 0..degree-1, closed breadth-first.

    Enumeration order is deterministic: identity first, then new products
    word by word, extending on the right by generators in listed order.
    """
    gens = [
        g.images if isinstance(g, Permutation) else Permutation(tuple(g)).images
        for g in generators
    ]
    for g in gens:
        if len(g) != degree:
            raise ValueError("generator degree mismatch")
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    i = 0
    while i < len(elems):
        w = elems[i]
        i += 1
        for g in gens:
            nxt = tuple(w[x] for x in g)
            if nxt not in index:
                if len(elems) >= cap:
                    raise ClosureTooLarge(f"closure exceeds cap of {cap} elements")
                index[nxt] = len(elems)
                elems.append(nxt)
    table = [
        [index[tuple(a[x] for x in b)] for b in elems]
        for a in elems
    ]
    return FiniteGroup(table, name=name)


def direct_product(
    g: FiniteGroup,
    h: FiniteGroup,
    name: str | None = None,
    cap: int = DEFAULT_CLOSURE_CAP,
) -> FiniteGroup:
    """Componentwise product; the pair (a, b) gets index a*|H| + b."""
    n = g.n * h.n
    if n > cap:
        raise ClosureTooLarge(f"product order {n} exceeds cap of {cap}")
    gt, ht, hn = g.table, h.table, h.n
    table = []
    for a1 in range(g.n):
        row_g = gt[a1]
        for a2 in range(h.n):
            row_h = ht[a2]
            table.append(
                [
                    row_g[b1] * hn + row_h[b2]
                    for b1 in range(g.n)
                    for b2 in range(h.n)
                ]
            )
    return FiniteGroup(table, name=name)


def semidirect_product(
    n_grp: FiniteGroup,
    h_grp: FiniteGroup,
    action,
    name: str | None = None,
) -> FiniteGroup:
    """Split extension of n_grp by h_grp.

    `action[h]` must be an automorphism of n_grp for every h, and h -> action[h]
    must be a homomorphism; both are checked exhaustively. The pair (a, h)
    gets index a*|H| + h and multiplies as (a1, h1)(a2, h2) =
    (a1 * action[h1](a2), h1 h2).
    """
    nn, hn = n_grp.n, h_grp.n
    nt, ht = n_grp.table, h_grp.table
    acts = []
    for h in range(hn):
        a = action[h]
        imgs = tuple(a.images) if isinstance(a, Permutation) else tuple(a)
        if sorted(imgs) != list(range(nn)):
            raise NotAnAutomorphism(f"action[{h}] is not a bijection on N")
        acts.append(imgs)
    for h, a in enumerate(acts):
        for x in range(nn):
            row = nt[x]
            for y in range(nn):
                if a[row[y]] != nt[a[x]][a[y]]:
                    raise NotAnAutomorphism(
                        f"action[{h}] does not preserve multiplication"
                    )
    for h1 in range(hn):
        a1 = acts[h1]
        for h2 in range(hn):
            a2 = acts[h2]
            composed = tuple(a1[a2[x]] for x in range(nn))
            if composed != acts[ht[h1][h2]]:
                raise NotAHomomorphism(
                    f"action[{h1}] o action[{h2}] != action[{h1}*{h2}]"
                )
    table = []
    for a in range(nn):
        row_n = nt[a]
        for h in range(hn):
            act = acts[h]
            row_h = ht[h]
            table.append(
                [
                    row_n[act[b]] * hn + row_h[k]
                    for b in range(nn)
                    for k in range(hn)
                ]
            )
    return FiniteGroup(table, name=name)


def quotient_by_central(
    g: FiniteGroup,
    z,
    name: str | None = None,
) -> FiniteGroup:
    """Quotient of g by a central subgroup z, on least-index coset reps."""
    if isinstance(z, Subgroup):
        if z.group is not g:
            raise NotASubgroup("subgroup belongs to a different group")
        zsub = z
    else:
        zsub = g.subgroup(z)
    if not zsub.element_set <= g.center().element_set:
        raise NotCentral("subgroup is not contained in the center")
    n = g.n
    tbl = g.table
    coset_of = [-1] * n
    reps: list[int] = []
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        cid = len(reps)
        reps.append(x)
        for z_el in zsub.elements:
            coset_of[tbl[x][z_el]] = cid
    table = [
        [coset_of[tbl[a][b]] for b in reps]
        for a in reps
    ]
    return FiniteGroup(table, name=name)


# -- isomorphism testing ------------------------------------------------------


def _generating_sequence(g: FiniteGroup) -> tuple[list[int], list[int]]:
    """Small generating sequence found greedily (max closure jump, least index).

    Returns the generators and the closure size after each prefix.
    """
    gens: list[int] = []
    sizes: list[int] = []
    closure = {0}
    while len(closure) < g.n:
        best_g = -1
        best: set = set()
        for cand in range(g.n):
            if cand in closure:
                continue
            s = set(g._closure(gens + [cand]))
            if len(s) > len(best):
                best_g, best = cand, s
        gens.append(best_g)
        sizes.append(len(best))
        closure = best
    return gens, sizes


def _element_profiles(g: FiniteGroup) -> list[tuple[int, int]]:
    orders = g.element_orders()
    part = g.conjugacy_classes()
    return [
        (orders[x], len(part.members[part.class_of[x]]))
        for x in range(g.n)
    ]


def _extend_hom(g: FiniteGroup, h: FiniteGroup, gens, imgs):
    """Extend a generator assignment to a full map, or None if not a bijective
    homomorphism."""
    n = g.n
    phi = [-1] * n
    phi[0] = 0
    queue = [0]
    qi = 0
    gt, htb = g.table, h.table
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for gen, img in zip(gens, imgs):
            y = gt[x][gen]
            if phi[y] < 0:
                phi[y] = htb[phi[x]][img]
                queue.append(y)
    if len(queue) != n or sorted(phi) != list(range(n)):
        return None
    for a in range(n):
        ra = gt[a]
        pa = phi[a]
        for b in range(n):
            if phi[ra[b]] != htb[pa][phi[b]]:
                return None
    return phi


def _isomorphism_search(g: FiniteGroup, h: FiniteGroup, node_cap: int, find_all: bool):
    """Backtracking search for isomorphisms g -> h.

    Returns the first map found (or None) when find_all is false, else the
    list of all maps. Raises IsomorphismSearchExceeded past node_cap.
    """
    if g.n != h.n:
        return [] if find_all else None
    if g.n == 1:
        return [[0]] if find_all else [0]
    gens, sizes = _generating_sequence(g)
    g_profiles = _element_profiles(g)
    h_profiles = _element_profiles(h)
    pools = [
        [x for x in range(h.n) if h_profiles[x] == g_profiles[gen]]
        for gen in gens
    ]
    found: list[list[int]] = []
    nodes = [0]

    def backtrack(i: int, imgs: list[int]):
        if i == len(gens):
            phi = _extend_hom(g, h, gens, imgs)
            if phi is not None:
                found.append(phi)
            return
        for cand in pools[i]:
            nodes[0] += 1
            if nodes[0] > node_cap:
                raise IsomorphismSearchExceeded(
                    f"isomorphism search exceeded {node_cap} nodes"
                )
            if len(h._closure(imgs + [cand])) != sizes[i]:
                continue
            backtrack(i + 1, imgs + [cand])
            if found and not find_all:
                return

    backtrack(0, [])
    if find_all:
        return found
    return found[0] if found else None


def are_isomorphic(g: FiniteGroup, h: FiniteGroup, node_cap: int = ISO_NODE_CAP) -> bool:
    """Whether a multiplication-preserving bijection exists."""
    if g is h:
        return True
    if g.fingerprint() != h.fingerprint():
        return False
    return _isomorphism_search(g, h, node_cap, find_all=False) is not None


def automorphisms(g: FiniteGroup, node_cap: int = ISO_NODE_CAP) -> tuple[Permutation, ...]:
    """All automorphisms of g, in deterministic search order."""
    if "autos" not in g._cache:
        maps = _isomorphism_search(g, g, node_cap, find_all=True)
        g._cache["autos"] = tuple(Permutation(tuple(m)) for m in maps)
    return g._cache["autos"]


@lru_cache(maxsize=None)
def cyclic_group(n: int) -> FiniteGroup:
    """The cyclic group of order n, on indices with addition mod n."""
    if n < 1:
        raise ValueError("order must be positive")
    return FiniteGroup(
        [[(i + j) % n for j in range(n)] for i in range(n)],
        name=f"C{n}",
    )
