"""Integer substrate: Kronecker symbol, factored integers, quadratic characters.

The Kronecker symbol here is the completely multiplicative extension of the
Legendre symbol to all integer lower arguments, pinned down by four rules:
multiplicativity in the lower argument, a mod-8 rule at 2, a sign rule at -1,
and (n/0) = [n = 1]. `is_restricted_valid` exposes the n = 0, 1 (mod 4)
convention under which the symbol is classically quoted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import (
    ModulusMismatch,
    NoDiscriminantFound,
    NotACharacter,
    NotCoprime,
    ZeroInput,
)


@lru_cache(maxsize=None)
def _factor_positive(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of m >= 1 by trial division, as (p, e) pairs."""
    assert m >= 1
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@dataclass(frozen=True)
class FactoredInt:
    """Nonzero integer as a sign and a product of prime powers.

    The representation is canonical (primes ascending, exponents >= 1), so
    equal values compare equal. Keeps quantities like n^k exact without ever
    multiplying out until display.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        assert self.sign in (1, -1)
        assert all(e >= 1 for _, e in self.factors)
        assert list(self.factors) == sorted(self.factors)

    @staticmethod
    def one() -> "FactoredInt":
        return FactoredInt(1, ())

    def __mul__(self, other: "FactoredInt") -> "FactoredInt":
        exps: dict[int, int] = dict(self.factors)
        for p, e in other.factors:
            exps[p] = exps.get(p, 0) + e
        return FactoredInt(
            self.sign * other.sign,
            tuple(sorted(exps.items())),
        )

    def pow(self, k: int) -> "FactoredInt":
        assert k >= 0
        if k == 0:
            return FactoredInt.one()
        return FactoredInt(
            self.sign if k % 2 else 1,
            tuple((p, e * k) for p, e in self.factors),
        )

    def divide(self, other: "FactoredInt") -> "FactoredInt":
        """Exact division; the quotient must be an integer."""
        exps = dict(self.factors)
        for p, e in other.factors:
            exps[p] = exps.get(p, 0) - e
            assert exps[p] >= 0, f"division by {other} is not exact"
            if exps[p] == 0:
                del exps[p]
        return FactoredInt(self.sign * other.sign, tuple(sorted(exps.items())))

    def to_int(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v

    def value_mod(self, m: int) -> int:
        v = self.sign
        for p, e in self.factors:
            v = v * pow(p, e, m) % m
        return v % m

    def __str__(self) -> str:
        val = self.to_int()
        if abs(val) < (1 << 128):
            return str(val)
        digits = str(abs(val))
        sci = f"{'-' if val < 0 else ''}{digits[0]}.{digits[1:4]}e+{len(digits) - 1}"
        parts = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        return f"{sci} ({'-' if self.sign < 0 else ''}{parts})"


def factor(n: int) -> FactoredInt:
    """Exact factorization of a nonzero integer."""
    if n == 0:
        raise ZeroInput("cannot factor zero")
    return FactoredInt(-1 if n < 0 else 1, _factor_positive(abs(n)))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n >= 1, ascending."""
    divs = [1]
    for p, e in _factor_positive(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


@lru_cache(maxsize=None)
def _legendre_table(p: int) -> tuple[int, ...]:
    """Legendre symbol (r/p) for every residue r, odd prime p, by Euler."""
    assert p > 2
    half = (p - 1) // 2
    return tuple(
        0 if r == 0 else (1 if pow(r, half, p) == 1 else -1)
        for r in range(p)
    )


def kronecker(n, a: int) -> int:
    """Kronecker symbol (n/a), total on all integer pairs.

    Completely multiplicative in a; (n/2) follows the mod-8 rule and is 0
    for even n; (n/-1) is -1 exactly when n < 0; (n/0) = 1 iff n = 1. At an
    odd prime the value is the Legendre symbol. Accepts n as an int or a
    FactoredInt.
    """
    if isinstance(n, FactoredInt):
        n = n.to_int()
    if a == 0:
        return 1 if n == 1 else 0
    result = 1
    if a < 0:
        if n < 0:
            result = -1
        a = -a
    if a % 2 == 0:
        if n % 2 == 0:
            return 0
        k = 0
        while a % 2 == 0:
            a //= 2
            k += 1
        if k % 2 == 1 and n % 8 in (3, 5):
            result = -result
    for p, e in _factor_positive(a):
        t = _legendre_table(p)[n % p]
        if t == 0:
            return 0
        if e % 2 == 1 and t == -1:
            result = -result
    return result


def kronecker_column(a: int, n_max: int) -> np.ndarray:
    """kronecker(n, a) for every n in -n_max..n_max, as one array.

    Index i holds the value for n = i - n_max. Same rules as the scalar
    symbol, evaluated elementwise; intended for bulk sweeps where calling
    the scalar once per n would dominate the run.
    """
    n = np.arange(-n_max, n_max + 1, dtype=np.int64)
    if a == 0:
        return (n == 1).astype(np.int64)
    out = np.ones(len(n), dtype=np.int64)
    if a < 0:
        out[n < 0] = -1
        a = -a
    k2 = 0
    while a % 2 == 0:
        a //= 2
        k2 += 1
    if k2:
        mod8 = n & 7
        two = np.where((mod8 == 1) | (mod8 == 7), 1, -1)
        two[mod8 % 2 == 0] = 0
        out *= two if k2 % 2 == 1 else np.abs(two)
    for p, e in _factor_positive(a):
        vals = np.array(_legendre_table(p), dtype=np.int64)[n % p]
        out *= vals if e % 2 == 1 else np.abs(vals)
    return out


def is_restricted_valid(n) -> bool:
    """Whether n is 0 or 1 mod 4 (the classical domain of the symbol)."""
    if isinstance(n, FactoredInt):
        return n.value_mod(4) in (0, 1)
    return n % 4 in (0, 1)


def euler_phi(d: int) -> int:
    assert d >= 1
    phi = 1
    for p, e in _factor_positive(d):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def mult_order(a: int, d: int) -> int:
    """Least k >= 1 with a^k = 1 mod d."""
    assert d >= 1
    if d == 1:
        return 1
    a %= d
    if gcd(a, d) != 1:
        raise NotCoprime(f"{a} is not a unit mod {d}")
    k = 1
    x = a
    while x != 1:
        x = x * a % d
        k += 1
    return k


def units_mod(n: int) -> tuple[int, ...]:
    """Residues coprime to n, ascending. For n = 1 that is (0,)."""
    return tuple(a for a in range(n) if gcd(a, n) == 1) or (0,)


def fundamental_discriminant(v) -> int:
    """Discriminant of Q(sqrt(v)): the squarefree core m, then m itself if
    m = 1 mod 4, else 4m. Accepts an int or a FactoredInt."""
    fi = factor(v) if isinstance(v, int) else v
    core = fi.sign
    for p, e in fi.factors:
        if e % 2:
            core *= p
    return core if core % 4 == 1 else 4 * core


def _is_fundamental(d: int) -> bool:
    return d != 0 and fundamental_discriminant(d) == d


@dataclass(frozen=True)
class QuadraticCharacter:
    """A ±1-valued table on the units mod n, aligned with units_mod(n)."""

    modulus: int
    values: tuple[int, ...]

    def __post_init__(self):
        units = units_mod(self.modulus)
        if len(self.values) != len(units) or any(v not in (1, -1) for v in self.values):
            raise NotACharacter("values must be ±1, one per unit")
        object.__setattr__(
            self, "_index", {a: i for i, a in enumerate(units)}
        )
        if self.value(1 % self.modulus if self.modulus > 1 else 0) != 1:
            raise NotACharacter("a character sends 1 to 1")

    def value(self, a: int) -> int:
        idx = self._index.get(a % self.modulus if self.modulus > 1 else 0)
        if idx is None:
            raise NotCoprime(f"{a} is not a unit mod {self.modulus}")
        return self.values[idx]

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)

    def is_multiplicative(self) -> bool:
        n = self.modulus
        units = units_mod(n)
        for a in units:
            for b in units:
                if self.value(a * b % n if n > 1 else 0) != self.value(a) * self.value(b):
                    return False
        return True

    def to_json_dict(self) -> dict:
        units = units_mod(self.modulus)
        return {
            "modulus": self.modulus,
            "values": {str(a): v for a, v in zip(units, self.values)},
        }


def char_of_discriminant(d, n: int) -> QuadraticCharacter:
    """Tabulate a -> kronecker(D, a) on the units mod n, where D is the
    fundamental discriminant of d.

    Reducing d to D first is sound (square factors cannot change the
    character) and keeps square factors that happen to share primes with n
    from producing spurious zeros.
    """
    dd = fundamental_discriminant(d)
    vals = []
    for a in units_mod(n):
        v = kronecker(dd, a)
        if v == 0:
            raise NotACharacter(f"kronecker({dd}, {a}) = 0 at a unit mod {n}")
        vals.append(v)
    return QuadraticCharacter(n, tuple(vals))


def chars_equal(c1: QuadraticCharacter, c2: QuadraticCharacter) -> bool:
    if c1.modulus != c2.modulus:
        raise ModulusMismatch(f"moduli differ: {c1.modulus} vs {c2.modulus}")
    return c1.values == c2.values


def identify_discriminant(chi: QuadraticCharacter) -> int:
    """The unique fundamental discriminant D with (D/.) equal to chi.

    A quadratic character mod n has conductor dividing n, so candidates
    with |D| dividing n are exhaustive; distinct fundamental discriminants
    induce distinct characters, so the match is unique.
    """
    if not chi.is_multiplicative():
        raise NotACharacter("value table is not multiplicative")
    n = chi.modulus
    matches = []
    for m in divisors(n):
        for d in (m, -m):
            if _is_fundamental(d) and char_of_discriminant(d, n).values == chi.values:
                matches.append(d)
    if not matches:
        raise NoDiscriminantFound(f"no fundamental discriminant matches mod {n}")
    assert len(matches) == 1, f"discriminant not unique: {matches}"
    return matches[0]
