"""Deterministic catalog of the groups of order at most 35, minus order 32.

Candidates per order come from a fixed combinator family (abelian
invariant-factor chains, dihedral, dicyclic, alternating/symmetric,
direct products of smaller entries, semidirect products, order-16 central
products).  Over-generation is deliberate: isomorphism dedup reduces every
order to its known class count, and a mismatch is a hard error rather than
a warning, so the count doubles as a regression check on the isomorphism
tester.  Order 32 (51 classes) is import-only; see ORDER32_NOTICE.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import reduce
from math import gcd
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    ClosureTooLarge,
    FileError,
    IncompleteOrder,
    ParseError,
)
from .groups import (
    FiniteGroup,
    Permutation,
    are_isomorphic,
    automorphisms,
    cyclic_group,
    direct_product,
    from_generators,
    quotient_by_central,
    semidirect_product,
)
from .numtheory import divisors

MAX_BUILTIN_ORDER = 35
MAX_IMPORT_ORDER = 64

# Classes per order for 1..35; order 32's 51 classes are not generated.
EXPECTED_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
    11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1,
    20: 5, 21: 2, 22: 2, 23: 1, 24: 15, 25: 2, 26: 2, 27: 5, 28: 4,
    29: 1, 30: 4, 31: 1, 33: 1, 34: 2, 35: 1,
}

ORDER32_NOTICE = (
    "order 32 has 51 isomorphism classes and is not generated builtin; "
    "supply them as JSON group files through the import path"
)


@dataclass(frozen=True)
class CatalogEntry:
    group: FiniteGroup
    name: str
    order: int
    recipe: str
    source: str  # "builtin" or "imported"


def dihedral_group(order: int) -> FiniteGroup:
    """Dihedral group named by its ORDER: D8 has 8 elements."""
    if order % 2 or order < 4:
        raise ParseError(f"dihedral order must be even and >= 4, got {order}")
    m = order // 2
    tbl = [[0] * order for _ in range(order)]
    for i1 in range(m):
        for j1 in range(2):
            for i2 in range(m):
                for j2 in range(2):
                    i = (i1 + (i2 if j1 == 0 else -i2)) % m
                    tbl[i1 + m * j1][i2 + m * j2] = i + m * (j1 ^ j2)
    return FiniteGroup(tbl, name=f"D{order}")


def dicyclic_group(m: int) -> FiniteGroup:
    """Dicyclic group of order 4m (m >= 2); Q8 and Q16 are m = 2, 4."""
    if m < 2:
        raise ParseError(f"dicyclic parameter must be >= 2, got {m}")
    n = 4 * m
    tbl = [[0] * n for _ in range(n)]
    for i1 in range(2 * m):
        for j1 in range(2):
            for i2 in range(2 * m):
                for j2 in range(2):
                    if j1 == 0:
                        i, j = (i1 + i2) % (2 * m), j2
                    elif j2 == 0:
                        i, j = (i1 - i2) % (2 * m), 1
                    else:
                        i, j = (i1 - i2 + m) % (2 * m), 0
                    tbl[i1 + 2 * m * j1][i2 + 2 * m * j2] = i + 2 * m * j
    name = {2: "Q8", 4: "Q16"}.get(m, f"Dic{m}")
    return FiniteGroup(tbl, name=name)


def cyclic_semidirect(a: int, b: int, k: int, name: str | None = None) -> FiniteGroup:
    """C_a acted on by C_b, the generator sending x to x^k."""
    action = [
        tuple((x * pow(k, h, a)) % a for x in range(a)) for h in range(b)
    ]
    return semidirect_product(
        cyclic_group(a), cyclic_group(b), action, name=name or f"SD(C{a},C{b},{k})"
    )


_SYMMETRIC_GENS = {
    1: [],
    2: [(1, 0)],
    3: [(1, 0, 2), (1, 2, 0)],
    4: [(1, 0, 2, 3), (1, 2, 3, 0)],
    5: [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)],
}
_ALTERNATING_GENS = {
    1: [],
    2: [],
    3: [(1, 2, 0)],
    4: [(1, 2, 0, 3), (1, 0, 3, 2)],
    5: [(1, 2, 0, 3, 4), (1, 2, 3, 4, 0)],
}


def symmetric_group(n: int) -> FiniteGroup:
    if n not in _SYMMETRIC_GENS:
        raise ParseError(f"S{n} is out of range (n <= 5)")
    return from_generators(max(n, 1), _SYMMETRIC_GENS[n], name=f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    if n not in _ALTERNATING_GENS:
        raise ParseError(f"A{n} is out of range (n <= 5)")
    return from_generators(max(n, 1), _ALTERNATING_GENS[n], name=f"A{n}")


def _abelian_chains(m: int, floor: int) -> Iterator[tuple[int, ...]]:
    """Invariant-factor chains d1 | d2 | ... with product m and floor | d1."""
    if m == 1:
        yield ()
        return
    for d in divisors(m):
        if d < 2 or d % floor:
            continue
        for rest in _abelian_chains(m // d, d):
            yield (d, *rest)


def abelian_group(factors: Sequence[int], name: str | None = None) -> FiniteGroup:
    if not factors or any(f < 1 for f in factors):
        raise ParseError(f"bad abelian factor list {list(factors)}")
    g = reduce(direct_product, (cyclic_group(f) for f in factors))
    g.name = name or "Ab[" + ",".join(str(f) for f in factors) + "]"
    return g


def _is_cyclic(g: FiniteGroup) -> bool:
    return max(g.element_orders()) == g.n


def _candidates(
    n: int, by_order: dict[int, list["CatalogEntry"]]
) -> Iterator[tuple[str, FiniteGroup]]:
    """All candidate groups of order n, in a fixed order.

    The first candidate of each isomorphism class names the class, so the
    order here is chosen to put the readable constructions first.
    """
    # abelian invariant-factor chains
    for chain in _abelian_chains(n, 1):
        if len(chain) <= 1:
            yield f"C{n}", cyclic_group(n)
        else:
            yield "Ab[" + ",".join(map(str, chain)) + "]", abelian_group(chain)

    # dihedral (order 4 is just Ab[2,2])
    if n % 2 == 0 and n >= 6:
        yield f"D{n}", dihedral_group(n)

    # dicyclic
    if n % 4 == 0 and n >= 8:
        g = dicyclic_group(n // 4)
        yield g.name, g

    if n == 12:
        yield "A4", alternating_group(4)
    if n == 24:
        yield "S4", symmetric_group(4)

    # direct products of smaller entries
    for d in divisors(n):
        m = n // d
        if d < 2 or d > m:
            continue
        left = by_order[d]
        for i, ea in enumerate(left):
            right = by_order[m][i:] if d == m else by_order[m]
            for eb in right:
                name = f"{ea.name} x {eb.name}"
                yield name, direct_product(ea.group, eb.group, name=name)

    # cyclic-on-cyclic semidirect products
    for a in divisors(n):
        b = n // a
        if a < 3 or b < 2:
            continue
        for k in range(2, a):
            if gcd(k, a) != 1 or pow(k, b, a) != 1:
                continue
            yield f"SD(C{a},C{b},{k})", cyclic_semidirect(a, b, k)

    # central products, only needed at order 16
    if n == 16:
        for base_name, base in (("D8", dihedral_group(8)), ("Q8", dicyclic_group(2))):
            prod = direct_product(base, cyclic_group(4))
            # identify the central involution of the base with the square
            # of the C4 generator: elements 0 and 2*4 + 2
            name = f"CP({base_name},C4)"
            yield name, quotient_by_central(prod, [0, 10], name=name)

    # noncyclic normal factor, cyclic complement acting by an automorphism
    for m in divisors(n):
        b = n // m
        if m < 4 or b < 2:
            continue
        for entry in by_order[m]:
            if _is_cyclic(entry.group):
                continue
            autos = automorphisms(entry.group)
            identity = Permutation(tuple(range(m)))
            for idx, sigma in enumerate(autos):
                if sigma == identity or sigma**b != identity:
                    continue
                action = [(sigma**h).images for h in range(b)]
                name = f"SDP({entry.name},C{b},a{idx})"
                yield name, semidirect_product(
                    entry.group, cyclic_group(b), action, name=name
                )


def _build_order(n: int, by_order: dict[int, list[CatalogEntry]]) -> list[CatalogEntry]:
    kept: list[CatalogEntry] = []
    for name, g in _candidates(n, by_order):
        if any(are_isomorphic(g, e.group) for e in kept):
            continue
        kept.append(CatalogEntry(group=g, name=name, order=n, recipe=name, source="builtin"))
    expected = EXPECTED_COUNTS[n]
    if len(kept) != expected:
        raise IncompleteOrder(n, len(kept), expected)
    return kept


def builtin_catalog(max_order: int = MAX_BUILTIN_ORDER) -> tuple[CatalogEntry, ...]:
    """Every isomorphism class of order <= max_order, except order 32."""
    if not 1 <= max_order <= MAX_BUILTIN_ORDER:
        raise ValueError(f"max_order must be in 1..{MAX_BUILTIN_ORDER}")
    by_order: dict[int, list[CatalogEntry]] = {}
    entries: list[CatalogEntry] = []
    for n in range(1, max_order + 1):
        if n == 32:
            by_order[n] = []
            continue
        kept = _build_order(n, by_order)
        by_order[n] = kept
        entries.extend(kept)
    return tuple(entries)


# ---------------------------------------------------------------------------
# group-spec mini-language


def _split_products(text: str) -> list[str]:
    parts: list[str] = []
    depth = 0
    start = 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {text!r}")
        elif depth == 0 and text.startswith(" x ", i):
            parts.append(text[start:i])
            i += 3
            start = i
            continue
        i += 1
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {text!r}")
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _parse_atom(text: str) -> FiniteGroup:
    if text.startswith("file:"):
        loaded = load_group_file(Path(text[5:]))
        if len(loaded) != 1:
            raise ParseError(
                f"{text!r} holds {len(loaded)} groups; a spec needs exactly one"
            )
        return loaded[0]
    if text == "Q8":
        return dicyclic_group(2)
    if text == "Q16":
        return dicyclic_group(4)
    m = re.fullmatch(r"C(\d+)", text)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ParseError("C0 is not a group")
        return cyclic_group(n)
    m = re.fullmatch(r"Ab\[(\d+(?:,\d+)*)\]", text)
    if m:
        return abelian_group([int(f) for f in m.group(1).split(",")], name=text)
    m = re.fullmatch(r"D(\d+)", text)
    if m:
        return dihedral_group(int(m.group(1)))
    m = re.fullmatch(r"Dic(\d+)", text)
    if m:
        return dicyclic_group(int(m.group(1)))
    m = re.fullmatch(r"S(\d+)", text)
    if m:
        return symmetric_group(int(m.group(1)))
    m = re.fullmatch(r"A(\d+)", text)
    if m:
        return alternating_group(int(m.group(1)))
    m = re.fullmatch(r"SD\(\s*C(\d+)\s*,\s*C(\d+)\s*,\s*(\d+)\s*\)", text)
    if m:
        a, b, k = (int(x) for x in m.groups())
        if a < 1 or b < 1:
            raise ParseError(f"bad semidirect factors in {text!r}")
        return cyclic_semidirect(a, b, k, name=f"SD(C{a},C{b},{k})")
    raise ParseError(f"cannot parse group spec {text!r}")


def parse_spec(text: str) -> FiniteGroup:
    """Evaluate a group expression like "C2 x SD(C7,C3,2)"."""
    parts = _split_products(text.strip())
    if any(not p for p in parts):
        raise ParseError(f"empty factor in {text!r}")
    groups = [_parse_atom(p) for p in parts]
    result = groups[0]
    for g in groups[1:]:
        result = direct_product(result, g, name=f"{result.name} x {g.name}")
    return result


# ---------------------------------------------------------------------------
# import / export


def _group_from_json(obj: object, where: str) -> FiniteGroup:
    if not isinstance(obj, dict):
        raise FileError(f"{where}: expected a JSON object per group")
    name = obj.get("name")
    if not isinstance(name, str) or not name:
        raise FileError(f"{where}: missing group name")
    if "table" in obj:
        table = obj["table"]
        if not isinstance(table, list):
            raise FileError(f"{where}: table must be a list of rows")
        declared = obj.get("order")
        if declared is not None and declared != len(table):
            raise FileError(
                f"{where}: declared order {declared} != table size {len(table)}"
            )
        if len(table) > MAX_IMPORT_ORDER:
            raise FileError(
                f"{where}: order {len(table)} exceeds the import limit {MAX_IMPORT_ORDER}"
            )
        return FiniteGroup.from_table(table, name=name)
    if "generators" in obj:
        degree = obj.get("degree")
        gens = obj["generators"]
        if not isinstance(degree, int) or degree < 1 or not isinstance(gens, list):
            raise FileError(f"{where}: generator form needs a degree and a list")
        try:
            g = from_generators(
                degree, [tuple(p) for p in gens], cap=MAX_IMPORT_ORDER, name=name
            )
        except ClosureTooLarge as exc:
            raise FileError(
                f"{where}: generated order exceeds the import limit {MAX_IMPORT_ORDER}"
            ) from exc
        return g
    raise FileError(f"{where}: group needs either a table or generators")


def load_group_file(path: Path | str) -> list[FiniteGroup]:
    """Read one JSON group file: a single group object or an array of them."""
    path = Path(path)
    try:
        payload = json.loads(path.read_text())
    except OSError as exc:
        raise FileError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise FileError(f"{path} is not valid JSON: {exc}") from exc
    objs = payload if isinstance(payload, list) else [payload]
    return [_group_from_json(obj, f"{path}[{i}]") for i, obj in enumerate(objs)]


class ImportReport(NamedTuple):
    added: tuple[CatalogEntry, ...]
    duplicates: tuple[tuple[str, str], ...]  # (imported name, existing name)


def import_groups(
    path: Path | str, existing: Sequence[CatalogEntry] = ()
) -> ImportReport:
    """Load groups from a file or a directory of *.json files.

    Valid groups isomorphic to an existing or earlier-imported entry are
    reported as duplicates, not errors.  Group-axiom violations raise
    NotAGroup; malformed files raise FileError.
    """
    path = Path(path)
    if path.is_dir():
        files = sorted(path.glob("*.json"))
        if not files:
            raise FileError(f"no *.json group files in {path}")
    else:
        files = [path]

    taken_names = {e.name for e in existing}
    pool = list(existing)
    added: list[CatalogEntry] = []
    duplicates: list[tuple[str, str]] = []
    for f in files:
        for g in load_group_file(f):
            match = next(
                (e for e in pool if e.order == g.n and are_isomorphic(e.group, g)),
                None,
            )
            if match is not None:
                duplicates.append((g.name or "?", match.name))
                continue
            name = g.name or f"imported-{g.n}"
            base, serial = name, 2
            while name in taken_names:
                name = f"{base}~{serial}"
                serial += 1
            taken_names.add(name)
            entry = CatalogEntry(
                group=g, name=name, order=g.n, recipe=f"file:{f}", source="imported"
            )
            pool.append(entry)
            added.append(entry)
    return ImportReport(tuple(added), tuple(duplicates))


def entry_to_json_dict(entry: CatalogEntry) -> dict:
    return {
        "name": entry.name,
        "order": entry.order,
        "table": [list(row) for row in entry.group.table],
    }


def export_catalog(entries: Iterable[CatalogEntry], directory: Path | str) -> list[Path]:
    """Write one JSON group file per entry; returns the paths written."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in entries:
        safe = re.sub(r"[^A-Za-z0-9]+", "_", entry.name).strip("_")
        out = directory / f"{entry.order:02d}_{safe}.json"
        out.write_text(json.dumps(entry_to_json_dict(entry), indent=2) + "\n")
        written.append(out)
    return written
