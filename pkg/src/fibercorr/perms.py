"""Permutations of {1..n} and the group machinery used everywhere else.

Points are 1-based.  Composition is functional: (p * q)(i) = p(q(i)), so in
any word of generators the rightmost letter acts first.
"""

from __future__ import annotations

import math
import re

from .errors import ResourceLimitExceeded

#: letter aliases accepted in cycle notation, a..l for 1..12
LETTER_POINTS = {chr(ord("a") + i): i + 1 for i in range(12)}

_TOKEN = re.compile(r"[^,\s()]+")


class PermSyntaxError(ValueError):
    """Unparseable permutation text; col is the 0-based offset into the input."""

    def __init__(self, message, col=None):
        super().__init__(message)
        self.col = col


class PermDegreeError(ValueError):
    """A parsed point exceeds the requested degree."""

    def __init__(self, message, col=None):
        super().__init__(message)
        self.col = col


class Perm:
    """A permutation of {1..n}, stored as the image tuple (p(1), ..., p(n))."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"images are not a bijection of 1..{len(images)}")
        self.images = images

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, degree):
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles, degree=None):
        """Build from cycles of 1-based points, multiplied right to left."""
        top = max((max(c) for c in cycles if c), default=0)
        if degree is None:
            degree = top
        elif top > degree:
            raise ValueError(f"point {top} exceeds degree {degree}")
        maps = []
        for cycle in cycles:
            cycle = list(cycle)
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle {tuple(cycle)}")
            maps.append({cycle[i]: cycle[(i + 1) % len(cycle)] for i in range(len(cycle))})
        images = []
        for i in range(1, degree + 1):
            x = i
            for m in reversed(maps):
                x = m.get(x, x)
            images.append(x)
        return cls(images)

    def __call__(self, point):
        return self.images[point - 1]

    def __mul__(self, other):
        """Functional composition: (p * q)(i) = p(q(i))."""
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        imgs = self.images
        return Perm(imgs[j - 1] for j in other.images)

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Perm(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images, 1))

    def cycles(self):
        """Nontrivial cycles, each rotated to start at its smallest point."""
        seen = set()
        out = []
        for i in range(1, self.degree + 1):
            if i in seen or self(i) == i:
                continue
            cyc = [i]
            j = self(i)
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self):
        return f"Perm[{self}]"

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)


def compose(p, q):
    """(p o q)(i) = p(q(i)); the same composition `*` uses."""
    return p * q


def _point(token, col, degree):
    if token in LETTER_POINTS:
        value = LETTER_POINTS[token]
    else:
        try:
            value = int(token)
        except ValueError:
            raise PermSyntaxError(f"bad point {token!r}", col=col) from None
    if value < 1:
        raise PermSyntaxError(f"points are 1-based, got {value}", col=col)
    if degree is not None and value > degree:
        raise PermDegreeError(f"point {value} exceeds degree {degree}", col=col)
    return value


def parse_perm(text, degree=None):
    """Parse "(1 2 3)(4 5)" cycle notation or a one-line image array "2 3 1".

    Letters a..l are aliases for 1..12.  Fixed points may be omitted in cycle
    form; "()" is the identity.  When ``degree`` is given the result is padded
    to it and out-of-range points are rejected.
    """
    if "(" in text or ")" in text:
        return _parse_cycle_form(text, degree)
    return _parse_image_form(text, degree)


def _parse_cycle_form(text, degree):
    cycles = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace() or ch == ",":
            i += 1
        elif ch == "(":
            end = text.find(")", i + 1)
            if end < 0:
                raise PermSyntaxError("unclosed cycle", col=i)
            body = text[i + 1 : end]
            if "(" in body:
                raise PermSyntaxError("nested parenthesis", col=i + 1 + body.index("("))
            points = [_point(m.group(), i + 1 + m.start(), degree) for m in _TOKEN.finditer(body)]
            if len(set(points)) != len(points):
                raise PermSyntaxError("repeated point in cycle", col=i)
            if points:
                cycles.append(points)
            i = end + 1
        else:
            raise PermSyntaxError(f"unexpected character {ch!r}", col=i)
    return Perm.from_cycles(cycles, degree)


def _parse_image_form(text, degree):
    matches = list(_TOKEN.finditer(text))
    if not matches:
        raise PermSyntaxError("empty permutation")
    images = [_point(m.group(), m.start(), None) for m in matches]
    if degree is not None:
        if len(images) > degree:
            raise PermDegreeError(f"{len(images)} images exceed degree {degree}")
        images += list(range(len(images) + 1, degree + 1))
    try:
        return Perm(images)
    except ValueError as exc:
        raise PermSyntaxError(str(exc), col=matches[0].start()) from None


class PermGroup:
    """A permutation group on {1..n} given by a nonempty list of generators."""

    __slots__ = ("degree", "generators", "_orbit_sizes")

    def __init__(self, degree, generators):
        generators = tuple(generators)
        if degree < 1:
            raise ValueError("degree must be >= 1")
        if not generators:
            raise ValueError("need at least one generator (the identity is fine)")
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
        self.degree = degree
        self.generators = generators
        self._orbit_sizes = None

    @classmethod
    def from_perms(cls, generators):
        generators = tuple(generators)
        if not generators:
            raise ValueError("need at least one generator")
        return cls(generators[0].degree, generators)

    def orbit(self, point):
        """Smallest generator-closed subset of {1..n} containing ``point``."""
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} out of range 1..{self.degree}")
        seen = {point}
        frontier = [point]
        while frontier:
            x = frontier.pop()
            for g in self.generators:
                y = g(x)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return frozenset(seen)

    def orbits(self):
        """The orbit partition of {1..n}, ordered by smallest element."""
        remaining = set(range(1, self.degree + 1))
        parts = []
        while remaining:
            orb = self.orbit(min(remaining))
            parts.append(orb)
            remaining -= orb
        return tuple(parts)

    def basic_orbit_sizes(self):
        """Orbit sizes along the stabilizer chain with base 1, 2, ..., n-1."""
        if self._orbit_sizes is None:
            self._orbit_sizes = _schreier_sims_orbit_sizes(self.degree, self.generators)
        return self._orbit_sizes

    def order(self):
        """Exact group order from the stabilizer chain."""
        return math.prod(self.basic_orbit_sizes())

    def elements(self, limit=1_000_000):
        """Brute-force closure; the oracle for order().  Guarded by ``limit``."""
        ident = Perm.identity(self.degree)
        seen = {ident}
        frontier = [ident]
        while frontier:
            p = frontier.pop()
            for g in self.generators:
                q = g * p
                if q not in seen:
                    if len(seen) >= limit:
                        raise ResourceLimitExceeded("group closure", len(seen) + 1, limit)
                    seen.add(q)
                    frontier.append(q)
        return frozenset(seen)

    def is_k_transitive(self, k, method="orbit"):
        """True iff the action on injective k-tuples has a single orbit.

        ``method="orbit"`` runs the definition directly; ``method="chain"``
        reads the answer off the stabilizer chain (the two are cross-checked
        against each other in the test suite).
        """
        n = self.degree
        if not 1 <= k <= n:
            raise ValueError(f"k must be in 1..{n}, got {k}")
        if method == "chain":
            sizes = self.basic_orbit_sizes()
            return all(sizes[i] == n - i for i in range(min(k, n - 1)))
        if method != "orbit":
            raise ValueError(f"unknown method {method!r}")
        target = math.perm(n, k)
        start = tuple(range(1, k + 1))
        seen = {start}
        frontier = [start]
        while frontier:
            t = frontier.pop()
            for g in self.generators:
                u = tuple(g(x) for x in t)
                if u not in seen:
                    seen.add(u)
                    if len(seen) == target:
                        return True
                    frontier.append(u)
        return len(seen) == target

    def max_transitivity(self):
        """Largest k with is_k_transitive(k); 0 for an intransitive group.

        Uses the stabilizer chain: the group is k-transitive iff the first k
        basic orbits along the base 1, 2, ... are as large as possible.
        """
        n = self.degree
        sizes = self.basic_orbit_sizes()
        full = 0
        for i, size in enumerate(sizes):
            if size != n - i:
                break
            full += 1
        # a group transitive on injective (n-1)-tuples is n-transitive
        return n if full >= n - 1 else full


def _schreier_sims_orbit_sizes(degree, generators):
    """Deterministic Schreier-Sims along the fixed base 1, 2, ..., n-1.

    Returns the basic orbit sizes; their product is the group order.  The
    fixed full base makes the sizes directly usable for transitivity tests.
    """
    base = list(range(1, degree))
    if not base:
        return []
    strong = [g for g in generators if not g.is_identity()]
    nlevels = len(base)
    # cache: level -> (len(strong) at build time, transversal, level gens)
    cache = [None] * nlevels

    def transversal(i):
        if cache[i] is not None and cache[i][0] == len(strong):
            return cache[i][1], cache[i][2]
        prefix = base[:i]
        gens = [g for g in strong if all(g(b) == b for b in prefix)]
        b = base[i]
        t = {b: Perm.identity(degree)}
        frontier = [b]
        while frontier:
            x = frontier.pop()
            ux = t[x]
            for s in gens:
                y = s(x)
                if y not in t:
                    t[y] = s * ux
                    frontier.append(y)
        cache[i] = (len(strong), t, gens)
        return t, gens

    def sift(start, g):
        """Strip g through levels start.., returning (residue, stuck level)."""
        for j in range(start, nlevels):
            y = g(base[j])
            if y == base[j]:
                continue
            t, _ = transversal(j)
            u = t.get(y)
            if u is None:
                return g, j
            g = u.inverse() * g
        return g, None

    i = nlevels - 1
    while i >= 0:
        t, gens = transversal(i)
        complete = True
        for x in sorted(t):
            ux = t[x]
            for s in gens:
                schreier = t[s(x)].inverse() * (s * ux)
                if schreier.is_identity():
                    continue
                residue, stuck = sift(i + 1, schreier)
                if residue.is_identity():
                    continue
                # a nontrivial residue fixing every base point cannot exist:
                # the base contains all points but one
                assert stuck is not None
                strong.append(residue)
                i = stuck
                complete = False
                break
            if not complete:
                break
        if complete:
            i -= 1

    sizes = []
    for j in range(nlevels):
        t, _ = transversal(j)
        sizes.append(len(t))
    return sizes
