"""Shared fixture covers and products for the test suite."""

import fibercorr as fc
from fibercorr.perms import parse_perm


def P(text, degree):
    return parse_perm(text, degree)


def cover(genus, degree, *gen_texts):
    return fc.MonodromyCover(genus, degree, [P(t, degree) for t in gen_texts])


# ---- single covers (ell = 1 building blocks) ----

def g2n3_cover():
    """Connected degree-3 cover of a genus-2 base."""
    return cover(2, 3, "(1 2 3)", "()", "(1 2)", "()")


def g2n3_twist():
    """Second degree-3 cover over the same base, different monodromy."""
    return cover(2, 3, "(1 2)", "()", "(1 3)", "()")


def g2n2_cover():
    """Connected double cover of a genus-2 base."""
    return cover(2, 2, "(1 2)", "()", "()", "()")


def g3n2_cover():
    return cover(3, 2, "(1 2)", "()", "()", "()", "()", "()")


def g2n4_cover():
    return cover(2, 4, "(1 2 3 4)", "()", "(1 2)", "()")


def g1n2_cover():
    return cover(1, 2, "(1 2)", "(1 2)")


def g1n3_cover():
    return cover(1, 3, "(1 2 3)", "(1 2 3)")


def s3_equal_cover():
    """Genus-2 cover whose monodromy group is all of S3 (2-transitive)."""
    return cover(2, 3, "(1 2 3)", "(1 2)", "(1 2)", "(1 2 3)")


def trivial_cover(genus, degree):
    """Disjoint copies of the base: all images the identity."""
    ident = fc.Perm.identity(degree)
    return fc.MonodromyCover(genus, degree, [ident] * (2 * genus))


def invalid_g1n3_cover():
    """Violates the surface relation: [(1 2 3), (1 2)] != id."""
    return cover(1, 3, "(1 2 3)", "(1 2)")


# ---- products ----

def product_distinct_g2n3():
    """The connected ell=2, n=3, g=2 fixture of genus 10, dims (4, 4, 2)."""
    return fc.product_cover([g2n3_cover(), g2n3_twist()])


def product_sigma_id_n2():
    """Equal double-cover factors: disconnected, the flagged case."""
    y = g2n2_cover()
    return fc.product_cover([y, y])


def product_equal_s3():
    """Equal factors with 2-transitive monodromy: diagonal orbit, flagged."""
    y = s3_equal_cover()
    return fc.product_cover([y, y])


def product_l3_n2():
    """Three distinct double covers whose product action spans (Z/2)^3."""
    f1 = cover(2, 2, "(1 2)", "(1 2)", "(1 2)", "()")
    f2 = cover(2, 2, "(1 2)", "(1 2)", "()", "()")
    f3 = cover(2, 2, "()", "(1 2)", "()", "()")
    return fc.product_cover([f1, f2, f3])


def product_g1_l2():
    """Genus-1 base, connected ell=2 product: every d_r vanishes except d_l."""
    f1 = cover(1, 2, "(1 2)", "(1 2)")
    f2 = cover(1, 2, "(1 2)", "()")
    return fc.product_cover([f1, f2])


def single_factor_products():
    """ell = 1 products for the d0 = (n-1)(g-1), d1 = g checks."""
    return [
        ("g2n2", fc.product_cover([g2n2_cover()])),
        ("g2n3", fc.product_cover([g2n3_cover()])),
        ("g2n4", fc.product_cover([g2n4_cover()])),
        ("g3n2", fc.product_cover([g3n2_cover()])),
        ("g1n2", fc.product_cover([g1n2_cover()])),
        ("g1n3", fc.product_cover([g1n3_cover()])),
    ]


def connected_products():
    out = [(name, pc) for name, pc in single_factor_products()]
    out += [
        ("distinct_g2n3", product_distinct_g2n3()),
        ("l3_n2", product_l3_n2()),
        ("g1_l2", product_g1_l2()),
    ]
    return out


def all_products():
    return connected_products() + [
        ("sigma_id_n2", product_sigma_id_n2()),
        ("equal_s3", product_equal_s3()),
    ]


def all_fixture_covers():
    """Every cover the oracle-agreement checks run over."""
    covers = [
        ("g2n3", g2n3_cover()),
        ("g2n3_twist", g2n3_twist()),
        ("g2n2", g2n2_cover()),
        ("g3n2", g3n2_cover()),
        ("g2n4", g2n4_cover()),
        ("g1n2", g1n2_cover()),
        ("g1n3", g1n3_cover()),
        ("s3_equal", s3_equal_cover()),
        ("trivial_g2n2", trivial_cover(2, 2)),
        ("trivial_g3n3", trivial_cover(3, 3)),
    ]
    covers += [(f"product_{name}", pc.as_cover()) for name, pc in all_products()]
    return covers


# ---- cover file texts ----

MINIMAL_COVER_TEXT = """\
version 1
type cover
genus 2
degree 3
gen (1 2 3)
gen ()
gen (1 2)
gen ()
factor same
factor same
"""

DISTINCT_COVER_TEXT = """\
# connected degree-3 cover of a genus-2 surface, two distinct twists
version 1
type cover
label g2n3-distinct
genus 2
degree 3
gen (1 2 3)
gen ()
gen (1 2)
gen ()
factor same
factor begin
gen (1 2)
gen ()
gen (1 3)
gen ()
factor end
"""

SIGMA_ID_COVER_TEXT = """\
version 1
type cover
label sigma-id-n2
genus 2
degree 2
gen (1 2)
gen ()
gen ()
gen ()
factor same
factor same
"""
