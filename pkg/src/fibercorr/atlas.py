"""Curated generator sets for multiply transitive groups, used as fixtures
for the transitivity and irreducibility machinery."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .perms import Perm, PermGroup, parse_perm


@dataclass(frozen=True)
class AtlasEntry:
    name: str
    degree: int
    generators: tuple
    expected_order: object  # int or None
    expected_max_transitivity: int
    provenance: str

    def group(self):
        return PermGroup(self.degree, self.generators)


def symmetric_entry(n):
    """S_n from an n-cycle and a transposition; n-transitive."""
    if n < 2:
        raise ValueError("need n >= 2")
    cyc = Perm.from_cycles([list(range(1, n + 1))], n)
    gens = (cyc,) if n == 2 else (Perm.from_cycles([[1, 2]], n), cyc)
    return AtlasEntry(
        name=f"S{n}",
        degree=n,
        generators=gens,
        expected_order=factorial(n),
        expected_max_transitivity=n,
        provenance="standard generators: transposition and full cycle",
    )


def alternating_entry(n):
    """A_n from a 3-cycle and an n- or (n-1)-cycle; (n-2)-transitive."""
    if n < 3:
        raise ValueError("need n >= 3")
    long_cycle = list(range(1, n + 1)) if n % 2 else list(range(2, n + 1))
    gens = (Perm.from_cycles([[1, 2, 3]], n), Perm.from_cycles([long_cycle], n))
    return AtlasEntry(
        name=f"A{n}",
        degree=n,
        generators=gens,
        expected_order=factorial(n) // 2,
        expected_max_transitivity=n - 2,
        provenance="standard generators: 3-cycle and an even long cycle",
    )


def _entry_from_strings(name, degree, strings, order, transitivity, provenance):
    gens = tuple(parse_perm(s, degree) for s in strings)
    return AtlasEntry(name, degree, gens, order, transitivity, provenance)


def psl27_2_entry():
    """PGL(2,7) = PSL(2,7):2 on the 8 points of the projective line over F_7."""
    return _entry_from_strings(
        "PSL(2,7):2",
        8,
        ["(a b c d)(e f g h)", "(a f c)(d e g)", "(e f)(d h)(b c)"],
        336,
        3,
        "three generators on 8 letters, a..l transcribed as 1..12",
    )


def psl211_2_entry():
    """PGL(2,11) = PSL(2,11):2 on the 12 points of the projective line over F_11."""
    return _entry_from_strings(
        "PSL(2,11):2",
        12,
        [
            "(g b c i d)(j e h f l)",
            "(a b c)(d e f)(g h i)(j k l)",
            "(a i)(d g)(e j)(h k)(c f)",
        ],
        1320,
        3,
        "three generators on 12 letters, a..l transcribed as 1..12",
    )


def m11_entry():
    return _entry_from_strings(
        "M11",
        11,
        ["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"],
        7920,
        4,
        "standard two-generator set on 11 points (ATLAS of Finite Groups)",
    )


def m12_entry():
    return _entry_from_strings(
        "M12",
        12,
        [
            "(1 2 3 4 5 6 7 8 9 10 11)",
            "(3 7 11 8)(4 10 5 6)",
            "(1 12)(2 11)(3 6)(4 8)(5 9)(7 10)",
        ],
        95040,
        5,
        "standard three-generator set on 12 points (ATLAS of Finite Groups)",
    )


def builtin_entries():
    """All built-in fixtures: S_n and A_n up to degree 12, the two degree-8/12
    projective groups, and the two small Mathieu groups."""
    entries = [symmetric_entry(n) for n in range(2, 13)]
    entries += [alternating_entry(n) for n in range(3, 13)]
    entries += [psl27_2_entry(), psl211_2_entry(), m11_entry(), m12_entry()]
    return tuple(entries)


def entry_by_name(name):
    for entry in builtin_entries():
        if entry.name == name:
            return entry
    raise KeyError(f"no builtin atlas entry named {name!r}")


@dataclass(frozen=True)
class EntryCheck:
    name: str
    passed: bool
    computed_order: int
    computed_max_transitivity: int
    expected_order: object
    expected_max_transitivity: object
    mismatches: tuple


def check_entry(entry):
    """Recompute order and transitivity and diff them against expectations."""
    group = entry.group()
    order = group.order()
    transitivity = group.max_transitivity()
    mismatches = []
    if entry.expected_order is not None and order != entry.expected_order:
        mismatches.append(f"order: expected {entry.expected_order}, computed {order}")
    if (
        entry.expected_max_transitivity is not None
        and transitivity != entry.expected_max_transitivity
    ):
        mismatches.append(
            f"max transitivity: expected {entry.expected_max_transitivity},"
            f" computed {transitivity}"
        )
    return EntryCheck(
        name=entry.name,
        passed=not mismatches,
        computed_order=order,
        computed_max_transitivity=transitivity,
        expected_order=entry.expected_order,
        expected_max_transitivity=entry.expected_max_transitivity,
        mismatches=tuple(mismatches),
    )
