"""Shared fixtures and independent oracles.

The oracle helpers recompute invariants straight from definitions (orbit
loops, inversion counts, Euler's criterion, filtering all n! bijections)
so that frozen expected values never originate in the code under test.
"""

from itertools import permutations

import pytest

from powersign import analyze, builtin_catalog


@pytest.fixture(scope="session")
def catalog_entries():
    return builtin_catalog(35)


@pytest.fixture(scope="session")
def by_name(catalog_entries):
    return {e.name: e for e in catalog_entries}


@pytest.fixture(scope="session")
def reports(catalog_entries):
    return {e.name: analyze(e.group, name=e.name) for e in catalog_entries}


def legendre_euler(n, p):
    """Legendre symbol (n/p) for odd prime p, by Euler's criterion."""
    r = pow(n % p, (p - 1) // 2, p)
    return r - p if r == p - 1 else r


def brute_sign(images):
    """Permutation sign by counting inversions."""
    n = len(images)
    inversions = sum(
        1 for i in range(n) for j in range(i + 1, n) if images[i] > images[j]
    )
    return -1 if inversions % 2 else 1


def brute_classes(g):
    """Conjugacy classes as frozensets, by plain orbit computation."""
    seen: set[int] = set()
    classes = []
    for x in range(g.n):
        if x in seen:
            continue
        orbit = frozenset(g.mul(g.mul(g.inv(t), x), t) for t in range(g.n))
        seen |= orbit
        classes.append(orbit)
    return classes


def brute_equivariant_images(g):
    """All conjugation-equivariant bijections of a tiny group.

    Filters every permutation of the elements against the definition
    f(t^-1 x t) = t^-1 f(x) t directly.  Exponential; keep |G| <= 8.
    """
    out = []
    for images in permutations(range(g.n)):
        ok = True
        for t in range(g.n):
            ti = g.inv(t)
            for x in range(g.n):
                if images[g.mul(g.mul(ti, x), t)] != g.mul(
                    g.mul(ti, images[x]), t
                ):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(images)
    return out
