"""Covers of closed orientable surfaces presented by sheet monodromy.

A genus-g surface group has generators a1, b1, ..., ag, bg with the single
relator [a1,b1]...[ag,bg].  A degree-n cover is one permutation of the n
sheets per generator, with the relator mapping to the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidCoverError
from .perms import Perm, PermGroup


def commutator(p, q):
    """[p, q] = p q p^-1 q^-1 under functional composition."""
    return p * q * p.inverse() * q.inverse()


def gen_name(index):
    """Display name of surface-group generator index: a1, b1, a2, b2, ..."""
    letter = "a" if index % 2 == 0 else "b"
    return f"{letter}{index // 2 + 1}"


def relator_word(genus):
    """The surface relator as (generator index, exponent) pairs.

    Generator indices follow gen_images order: a_i = 2(i-1), b_i = 2(i-1)+1.
    """
    word = []
    for i in range(genus):
        word += [(2 * i, 1), (2 * i + 1, 1), (2 * i, -1), (2 * i + 1, -1)]
    return tuple(word)


def relator_text(genus):
    return "".join(f"[a{i},b{i}]" for i in range(1, genus + 1))


def evaluate_word(word, images):
    """Image of a word under the homomorphism sending generator j to images[j].

    Letters multiply left to right with functional composition, so the
    rightmost letter acts first on points.
    """
    result = Perm.identity(images[0].degree)
    for j, exp in word:
        g = images[j]
        result = result * (g if exp == 1 else g.inverse())
    return result


class MonodromyCover:
    """Degree-n cover of a genus-g surface, as images of the 2g generators."""

    __slots__ = ("genus", "degree", "gen_images")

    def __init__(self, genus, degree, gen_images):
        genus = int(genus)
        degree = int(degree)
        if genus < 1:
            raise ValueError("genus must be >= 1")
        if degree < 2:
            raise ValueError("cover degree must be >= 2")
        gen_images = tuple(gen_images)
        if len(gen_images) != 2 * genus:
            raise ValueError(f"need 2*genus = {2 * genus} generator images, got {len(gen_images)}")
        if not all(isinstance(p, Perm) for p in gen_images):
            raise TypeError("generator images must be Perm instances")
        self.genus = genus
        self.degree = degree
        self.gen_images = gen_images

    def __eq__(self, other):
        return (
            isinstance(other, MonodromyCover)
            and self.genus == other.genus
            and self.degree == other.degree
            and self.gen_images == other.gen_images
        )

    def __hash__(self):
        return hash((self.genus, self.degree, self.gen_images))

    def __repr__(self):
        gens = ", ".join(str(p) for p in self.gen_images)
        return f"MonodromyCover(genus={self.genus}, degree={self.degree}, [{gens}])"


@dataclass(frozen=True)
class CoverValidation:
    ok: bool
    failures: tuple


def validate(cover):
    """Report-style check: generator degrees and the surface relation."""
    failures = []
    for j, p in enumerate(cover.gen_images):
        if p.degree != cover.degree:
            failures.append(
                f"generator {gen_name(j)} has degree {p.degree}, cover degree is {cover.degree}"
            )
    if not failures:
        rel = evaluate_word(relator_word(cover.genus), cover.gen_images)
        if not rel.is_identity():
            moved = next(i for i in range(1, cover.degree + 1) if rel(i) != i)
            failures.append(
                f"surface relation {relator_text(cover.genus)} fails:"
                f" relator maps sheet {moved} to {rel(moved)}"
            )
    return CoverValidation(not failures, tuple(failures))


def require_valid(cover):
    report = validate(cover)
    if not report.ok:
        raise InvalidCoverError("; ".join(report.failures))


def monodromy_group(cover):
    require_valid(cover)
    return PermGroup(cover.degree, cover.gen_images)


@dataclass(frozen=True)
class ComponentReport:
    """Orbit decomposition of the fiber with per-component genus m(g-1)+1."""

    base_genus: int
    orbits: tuple  # tuple of sorted point tuples, ordered by smallest point

    @property
    def degrees(self):
        return tuple(len(o) for o in self.orbits)

    @property
    def genera(self):
        g = self.base_genus
        return tuple(len(o) * (g - 1) + 1 for o in self.orbits)

    @property
    def component_count(self):
        return len(self.orbits)

    @property
    def total_genus(self):
        return sum(self.genera)


def components(cover):
    """Connected components of the cover: orbits of the monodromy group."""
    group = monodromy_group(cover)
    orbits = tuple(tuple(sorted(o)) for o in group.orbits())
    return ComponentReport(cover.genus, orbits)


def is_connected(cover):
    return components(cover).component_count == 1


def genus_total(cover):
    """Sum of the component genera (the genus itself when connected)."""
    return components(cover).total_genus
