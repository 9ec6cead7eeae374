"""perms: parsing, composition, orbits, order, transitivity."""

import itertools
import math
import random

import pytest

from fibercorr.perms import (
    LETTER_POINTS,
    Perm,
    PermDegreeError,
    PermGroup,
    PermSyntaxError,
    compose,
    parse_perm,
)


def S3_table():
    """Brute-force multiplication table of S3 via direct function application."""
    elems = [Perm(imgs) for imgs in itertools.permutations((1, 2, 3))]
    table = {}
    for p in elems:
        for q in elems:
            table[(p.images, q.images)] = tuple(p(q(i)) for i in (1, 2, 3))
    return elems, table


class TestPerm:
    def test_identity_law(self):
        q = parse_perm("(1 3 2 4)", 5)
        ident = Perm.identity(5)
        assert ident * q == q
        assert q * ident == q

    def test_involution(self):
        t = parse_perm("(1 2)", 2)
        assert (t * t).is_identity()

    def test_compose_matches_s3_table(self):
        elems, table = S3_table()
        for p in elems:
            for q in elems:
                assert compose(p, q).images == table[(p.images, q.images)]

    def test_documented_order_example(self):
        # (1 2 3) after (1 2): 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1
        p = parse_perm("(1 2 3)", 3)
        q = parse_perm("(1 2)", 3)
        assert compose(p, q) == parse_perm("(1 3)", 3)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            compose(Perm.identity(3), Perm.identity(4))

    def test_not_a_bijection(self):
        with pytest.raises(ValueError):
            Perm([1, 1, 3])

    def test_associativity_identity_inverse_random(self):
        rng = random.Random(20240901)
        for _ in range(200):
            n = rng.randint(1, 12)
            perms = []
            for _ in range(3):
                imgs = list(range(1, n + 1))
                rng.shuffle(imgs)
                perms.append(Perm(imgs))
            p, q, r = perms
            assert (p * q) * r == p * (q * r)
            assert p * p.inverse() == Perm.identity(n)
            assert p.inverse() * p == Perm.identity(n)

    def test_cycle_string_round_trip(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(1, 12)
            imgs = list(range(1, n + 1))
            rng.shuffle(imgs)
            p = Perm(imgs)
            assert parse_perm(str(p), n) == p


class TestParse:
    def test_cycles_with_commas(self):
        assert parse_perm("(1,2,3)(4,5)") == parse_perm("(1 2 3)(4 5)")

    def test_letters(self):
        assert LETTER_POINTS["a"] == 1 and LETTER_POINTS["l"] == 12
        assert parse_perm("(a b c d)(e f g h)", 8) == parse_perm("(1 2 3 4)(5 6 7 8)", 8)

    def test_identity_text(self):
        assert parse_perm("()", 4) == Perm.identity(4)

    def test_image_array(self):
        assert parse_perm("2 3 1") == parse_perm("(1 2 3)", 3)
        assert parse_perm("2, 3, 1", 5) == parse_perm("(1 2 3)", 5)

    def test_fixed_points_omitted(self):
        assert parse_perm("(2 4)", 6)(2) == 4
        assert parse_perm("(2 4)", 6)(5) == 5

    def test_syntax_errors_carry_column(self):
        with pytest.raises(PermSyntaxError) as err:
            parse_perm("(1 2 x)", 3)
        assert err.value.col == 5
        with pytest.raises(PermSyntaxError):
            parse_perm("(1 2", 3)
        with pytest.raises(PermSyntaxError):
            parse_perm("(1 2 2)", 3)

    def test_degree_errors(self):
        with pytest.raises(PermDegreeError):
            parse_perm("(1 9)", 3)
        with pytest.raises(PermDegreeError):
            parse_perm("2 3 1 4", 3)

    def test_nondisjoint_cycles_multiply_right_to_left(self):
        # (2 3) acts first: 1 -> 2, 2 -> 3, 3 -> 1
        assert parse_perm("(1 2)(2 3)", 3) == parse_perm("(1 2 3)", 3)


def psl27_group():
    gens = [
        parse_perm("(a b c d)(e f g h)", 8),
        parse_perm("(a f c)(d e g)", 8),
        parse_perm("(e f)(d h)(b c)", 8),
    ]
    return PermGroup(8, gens)


def psl211_group():
    gens = [
        parse_perm("(g b c i d)(j e h f l)", 12),
        parse_perm("(a b c)(d e f)(g h i)(j k l)", 12),
        parse_perm("(a i)(d g)(e j)(h k)(c f)", 12),
    ]
    return PermGroup(12, gens)


class TestOrbits:
    def test_trivial_group(self):
        g = PermGroup(3, [Perm.identity(3)])
        assert g.orbit(1) == {1}

    def test_single_cycle_transitive(self):
        g = PermGroup(3, [parse_perm("(1 2 3)", 3)])
        assert g.orbit(2) == {1, 2, 3}

    def test_fixed_point(self):
        g = PermGroup(4, [parse_perm("(1 2)", 4)])
        assert g.orbit(3) == {3}

    def test_out_of_range(self):
        g = PermGroup(3, [Perm.identity(3)])
        with pytest.raises(ValueError):
            g.orbit(0)
        with pytest.raises(ValueError):
            g.orbit(4)

    def test_orbits_partition(self):
        rng = random.Random(11)
        for _ in range(30):
            n = rng.randint(1, 10)
            gens = []
            for _ in range(rng.randint(1, 3)):
                imgs = list(range(1, n + 1))
                rng.shuffle(imgs)
                gens.append(Perm(imgs))
            g = PermGroup(n, gens)
            parts = g.orbits()
            flat = sorted(x for part in parts for x in part)
            assert flat == list(range(1, n + 1))
            for part in parts:
                for x in part:
                    assert g.orbit(x) == part

    def test_orbit_monotone_under_generator_addition(self):
        rng = random.Random(13)
        for _ in range(30):
            n = rng.randint(2, 10)
            imgs = list(range(1, n + 1))
            rng.shuffle(imgs)
            base = PermGroup(n, [Perm(imgs)])
            rng.shuffle(imgs)
            bigger = PermGroup(n, base.generators + (Perm(imgs),))
            for x in range(1, n + 1):
                assert base.orbit(x) <= bigger.orbit(x)


class TestOrder:
    def test_s3(self):
        g = PermGroup(3, [parse_perm("(1 2)", 3), parse_perm("(1 2 3)", 3)])
        assert g.order() == 6

    def test_psl27_order_via_closure(self):
        g = psl27_group()
        assert g.order() == 336
        assert len(g.elements()) == 336

    def test_psl211_order_chain_vs_closure(self):
        g = psl211_group()
        assert g.order() == 1320
        assert len(g.elements()) == 1320

    def test_chain_equals_closure_random(self):
        rng = random.Random(5)
        for _ in range(25):
            n = rng.randint(1, 7)
            gens = []
            for _ in range(rng.randint(1, 2)):
                imgs = list(range(1, n + 1))
                rng.shuffle(imgs)
                gens.append(Perm(imgs))
            g = PermGroup(n, gens)
            assert g.order() == len(g.elements())

    def test_trivial_group_order(self):
        assert PermGroup(5, [Perm.identity(5)]).order() == 1


class TestTransitivity:
    def test_sn_is_n_transitive(self):
        for n in range(2, 7):
            gens = [parse_perm("(1 2)", n), Perm.from_cycles([list(range(1, n + 1))], n)]
            g = PermGroup(n, gens)
            assert g.is_k_transitive(n, method="orbit")
            assert g.max_transitivity() == n

    def test_psl27_3_but_not_4(self):
        g = psl27_group()
        assert g.is_k_transitive(3, method="orbit")
        assert not g.is_k_transitive(4, method="orbit")
        # order 336 < 8*7*6*5 also forces failure at k = 4
        assert g.order() < math.perm(8, 4)

    def test_intransitive_max_zero(self):
        g = PermGroup(3, [parse_perm("(1 2)", 3)])
        assert g.max_transitivity() == 0

    def test_psl211_sharply_3_transitive(self):
        g = psl211_group()
        assert g.max_transitivity() == 3
        assert g.order() == 12 * 11 * 10

    def test_a7_is_5_transitive(self):
        g = PermGroup(7, [parse_perm("(1 2 3)", 7), parse_perm("(1 2 3 4 5 6 7)", 7)])
        assert g.max_transitivity() == 5

    def test_k_out_of_range(self):
        g = PermGroup(3, [Perm.identity(3)])
        with pytest.raises(ValueError):
            g.is_k_transitive(0)
        with pytest.raises(ValueError):
            g.is_k_transitive(4)

    def test_monotone_in_k(self):
        for group in (psl27_group(), psl211_group()):
            n = group.degree
            values = [group.is_k_transitive(k, method="chain") for k in range(1, n + 1)]
            # True prefix, then all False
            assert values == sorted(values, reverse=True)

    def test_orbit_size_formula(self):
        # k-transitive iff the orbit of one injective k-tuple has full size
        g = psl27_group()
        for k in (1, 2, 3, 4):
            start = tuple(range(1, k + 1))
            seen = {start}
            frontier = [start]
            while frontier:
                t = frontier.pop()
                for gen in g.generators:
                    u = tuple(gen(x) for x in t)
                    if u not in seen:
                        seen.add(u)
                        frontier.append(u)
            assert (len(seen) == math.perm(8, k)) == g.is_k_transitive(k, method="orbit")

    def test_chain_shortcut_cross_validated(self):
        """Chain and orbit methods agree on groups through degree 12."""
        from fibercorr.atlas import builtin_entries

        for entry in builtin_entries():
            g = entry.group()
            n = g.degree
            for k in range(1, n + 1):
                if math.perm(n, k) > 120_000:
                    break
                assert g.is_k_transitive(k, method="chain") == g.is_k_transitive(
                    k, method="orbit"
                ), f"{entry.name} at k={k}"
