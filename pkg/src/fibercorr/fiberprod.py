"""Fiber products of same-base covers and the one-coordinate-change
correspondence, at the level of points and divisors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidCoverError, ResourceLimitExceeded
from .monodromy import MonodromyCover, components, require_valid
from .perms import Perm, PermGroup

DEFAULT_MAX_FIBER = 100_000


class ProductCover:
    """Fiber product of l covers of one base, acting coordinatewise on {1..n}^l.

    The fiber is enumerated row-major (last coordinate varies fastest), fixed
    once, so every matrix derived from it is reproducible bit for bit.
    """

    __slots__ = ("factors", "genus", "n", "ell", "fiber", "_index", "_product_images")

    def __init__(self, factors, max_fiber=DEFAULT_MAX_FIBER):
        factors = tuple(factors)
        if not factors:
            raise ValueError("need at least one factor")
        for f in factors:
            require_valid(f)
        genus, n = factors[0].genus, factors[0].degree
        for f in factors[1:]:
            if (f.genus, f.degree) != (genus, n):
                raise InvalidCoverError(
                    f"factors must share genus and degree;"
                    f" got ({f.genus}, {f.degree}) vs ({genus}, {n})"
                )
        size = n ** len(factors)
        if size > max_fiber:
            raise ResourceLimitExceeded("fiber", size, max_fiber)
        self.factors = factors
        self.genus = genus
        self.n = n
        self.ell = len(factors)
        self.fiber = tuple(itertools.product(range(1, n + 1), repeat=self.ell))
        self._index = {t: i for i, t in enumerate(self.fiber)}
        self._product_images = None

    @property
    def fiber_size(self):
        return len(self.fiber)

    def index_of(self, t):
        """0-based fiber index of a tuple."""
        try:
            return self._index[tuple(t)]
        except KeyError:
            raise ValueError(f"tuple {tuple(t)} outside fiber") from None

    def product_images(self):
        """The 2g coordinatewise permutations of the fiber (1-based indices)."""
        if self._product_images is None:
            images = []
            for j in range(2 * self.genus):
                factor_perms = [f.gen_images[j] for f in self.factors]
                imgs = [
                    self._index[tuple(p(x) for p, x in zip(factor_perms, t))] + 1
                    for t in self.fiber
                ]
                images.append(Perm(imgs))
            self._product_images = tuple(images)
        return self._product_images

    def as_cover(self):
        """The product as a single monodromy cover of degree n^l."""
        return MonodromyCover(self.genus, self.fiber_size, self.product_images())

    def product_group(self):
        return PermGroup(self.fiber_size, self.product_images())


def product_cover(factors, max_fiber=DEFAULT_MAX_FIBER):
    """Build the fiber product; factors must be valid with equal (genus, degree)."""
    return ProductCover(factors, max_fiber=max_fiber)


class Divisor:
    """Finite integer formal sum of fiber tuples."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        mapping = dict(coeffs) if not isinstance(coeffs, dict) else dict(coeffs)
        self.coeffs = {t: int(c) for t, c in mapping.items() if c}

    @classmethod
    def point(cls, t):
        return cls({tuple(t): 1})

    def degree(self):
        return sum(self.coeffs.values())

    def support(self):
        return frozenset(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items())

    def __add__(self, other):
        out = dict(self.coeffs)
        for t, c in other.coeffs.items():
            out[t] = out.get(t, 0) + c
        return Divisor(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, c):
        return Divisor({t: c * v for t, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "Divisor(0)"
        terms = " + ".join(f"{c}*{t}" for t, c in self.items())
        return f"Divisor({terms})"


def apply_D(pc, divisor):
    """Linear extension of: a tuple maps to the sum of the l(n-1) tuples
    differing from it in exactly one coordinate."""
    out = {}
    for t, c in divisor.coeffs.items():
        if t not in pc._index:
            raise ValueError(f"tuple {t} outside fiber")
        for i in range(pc.ell):
            for v in range(1, pc.n + 1):
                if v != t[i]:
                    u = t[:i] + (v,) + t[i + 1 :]
                    out[u] = out.get(u, 0) + c
    return Divisor(out)


def correspondence_as_set(pc):
    """All ordered pairs of fiber tuples differing in exactly one coordinate."""
    pairs = set()
    for t in pc.fiber:
        for i in range(pc.ell):
            for v in range(1, pc.n + 1):
                if v != t[i]:
                    pairs.add((t, t[:i] + (v,) + t[i + 1 :]))
    return frozenset(pairs)


def check_symmetric(pairs):
    return all((u, t) in pairs for t, u in pairs)


def check_fixed_point_free(pairs):
    return all(t != u for t, u in pairs)


def bidegree(pc, pairs=None):
    """Degrees of the two projections; both equal l(n-1) for this divisor."""
    if pairs is None:
        pairs = correspondence_as_set(pc)
    first = {t: 0 for t in pc.fiber}
    second = {t: 0 for t in pc.fiber}
    for t, u in pairs:
        first[t] += 1
        second[u] += 1
    d1s, d2s = set(first.values()), set(second.values())
    if len(d1s) != 1 or len(d2s) != 1:
        raise ValueError("projection degree is not constant across the fiber")
    return (d1s.pop(), d2s.pop())


@dataclass(frozen=True)
class IrreducibilityReport:
    """Three transitivity facts, reported separately and never reconciled.

    With equal factors the product action is the diagonal action, which for
    l >= 2 preserves coincidence patterns of tuples; the full-fiber orbit
    count can therefore disagree with l-transitivity, and such runs are
    flagged rather than silently passed.
    """

    transitive_on_fiber: bool
    orbit_count: int
    orbit_sizes: tuple
    factors_all_equal: bool
    monodromy_ell_transitive: object  # True/False, or None when not applicable
    injective_tuple_transitive: object
    flagged: bool
    note: str

    @property
    def irreducible(self):
        return self.transitive_on_fiber


def irreducibility_report(pc):
    comp = components(pc.as_cover())
    transitive = comp.component_count == 1
    equal = all(f == pc.factors[0] for f in pc.factors)
    ell_trans = None
    inj_trans = None
    note = ""
    if equal:
        if pc.ell <= pc.n:
            group = PermGroup(pc.n, pc.factors[0].gen_images)
            ell_trans = group.is_k_transitive(pc.ell, method="chain")
            inj_trans = group.is_k_transitive(pc.ell, method="orbit")
        else:
            note = f"no injective {pc.ell}-tuples on {pc.n} sheets"
    else:
        note = "factors differ; single-factor transitivity facts not applicable"
    flagged = ell_trans is not None and ell_trans != transitive
    if flagged:
        note = (
            f"monodromy is {pc.ell}-transitive but the product action has"
            f" {comp.component_count} orbits (equal factors preserve coincidence patterns)"
        )
    return IrreducibilityReport(
        transitive_on_fiber=transitive,
        orbit_count=comp.component_count,
        orbit_sizes=comp.degrees,
        factors_all_equal=equal,
        monodromy_ell_transitive=ell_trans,
        injective_tuple_transitive=inj_trans,
        flagged=flagged,
        note=note,
    )
