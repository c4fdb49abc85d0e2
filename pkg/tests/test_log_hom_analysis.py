"""Tests for monoid homomorphisms and their smoothness combinatorics.

Oracles used here:

* the nodal family N -> N^2, 1 |-> (a, b), where the group cokernel is
  Z + Z/gcd(a, b) by hand, so the chart criterion must say "smooth iff the
  residue characteristic does not divide gcd(a, b)" and never "etale";
* Gaussian elimination over F_p (and over Q via fractions) applied to the
  relation columns of the universal differential presentation: the rank of
  the presented module over a field must match ``differential_rank``.
"""

import random
from fractions import Fraction

import pytest

import logmonoid.exact_lattice as xl
import logmonoid.log_hom_analysis as lha
import logmonoid.monoid_core as mc
from logmonoid.errors import DomainError, InputError


def _hom(src, dst, rows):
    return lha.MonoidHom(source=src, target=dst,
                         matrix=xl.intmat(rows, ncols=src.ambient.lift_dim))


def _free(n):
    return mc.free_monoid(n)


def _nodal(a, b):
    """N -> N^2, 1 |-> (a, b): the monoid chart of a nodal degeneration."""
    return _hom(_free(1), _free(2), [[a], [b]])


# ---------------------------------------------------------------------------
# field-rank oracles


def oracle_rank_mod_p(cols, nrows, p):
    """Rank over F_p of the matrix with the given columns."""
    rows = [[c[i] % p for c in cols] for i in range(nrows)]
    rank, lead = 0, 0
    for j in range(len(cols)):
        piv = next((i for i in range(lead, nrows) if rows[i][j] % p), None)
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        inv = pow(rows[lead][j], p - 2, p)
        rows[lead] = [(x * inv) % p for x in rows[lead]]
        for i in range(nrows):
            if i != lead and rows[i][j] % p:
                f = rows[i][j]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[lead])]
        lead += 1
        rank += 1
        if lead == nrows:
            break
    return rank


def oracle_rank_rational(cols, nrows):
    rows = [[Fraction(c[i]) for c in cols] for i in range(nrows)]
    rank, lead = 0, 0
    for j in range(len(cols)):
        piv = next((i for i in range(lead, nrows) if rows[i][j]), None)
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        inv = 1 / rows[lead][j]
        rows[lead] = [x * inv for x in rows[lead]]
        for i in range(nrows):
            if i != lead and rows[i][j]:
                f = rows[i][j]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[lead])]
        lead += 1
        rank += 1
        if lead == nrows:
            break
    return rank


def oracle_field_rank(pres, p):
    """Rank of Z^n / <columns> over F_p (p prime) or Q (p = 0)."""
    n = len(pres.symbols)
    if not pres.relation_columns:
        return n
    if p == 0:
        return n - oracle_rank_rational(pres.relation_columns, n)
    return n - oracle_rank_mod_p(pres.relation_columns, n, p)


# ---------------------------------------------------------------------------
# construction and validation


def test_hom_validation():
    with pytest.raises(InputError):
        _hom(_free(1), _free(2), [[1]])  # wrong shape
    with pytest.raises(DomainError):
        _hom(_free(1), _free(1), [[-1]])  # image outside target
    # torsion source into a free target: 2 * 1bar = 0 must map to 0
    kummer_src = mc.AffineMonoid.from_vectors([(1,)], torsion_orders=(2,))
    with pytest.raises(DomainError):
        _hom(kummer_src, _free(1), [[1]])
    ok = _hom(kummer_src, kummer_src, [[1]])
    assert ok.apply((1,)).as_vector() == (1,)


def test_apply_reduces_in_target():
    double = _hom(_free(1),
                  mc.AffineMonoid.from_vectors([(1,)], torsion_orders=(4,)),
                  [[3]])
    assert double.apply((2,)).as_vector() == (2,)  # 6 mod 4


def test_identity_hom():
    m = mc.AffineMonoid.from_vectors([(1, 0), (1, 1)])
    ident = lha.identity_hom(m)
    assert lha.gp_kernel(ident).is_trivial
    assert lha.gp_cokernel(ident).is_trivial
    assert lha.is_kummer(ident)
    assert lha.monoid_kernel_trivial(ident)


# ---------------------------------------------------------------------------
# chart criterion vs the nodal-family oracle


@pytest.mark.parametrize("p", [0, 2, 3, 5])
def test_kato_criterion_nodal_family(p):
    import math
    for a in range(1, 7):
        for b in range(1, 7):
            verdict = lha.kato_criterion(_nodal(a, b), residue_char=p)
            g = math.gcd(a, b)
            assert verdict.is_smooth == (p == 0 or g % p != 0), (a, b, p)
            # the cokernel always has free rank 1, so never etale
            assert not verdict.is_etale
            assert verdict.gp_cokernel.free_rank == 1
            assert verdict.gp_cokernel.invariant_factors == \
                ((g,) if g > 1 else ())


def test_kato_criterion_kummer_map():
    double = _hom(_free(1), _free(1), [[2]])
    for p, smooth, etale in [(0, True, True), (3, True, True),
                             (2, False, False)]:
        verdict = lha.kato_criterion(double, residue_char=p)
        assert (verdict.is_smooth, verdict.is_etale) == (smooth, etale)
    assert lha.kato_criterion(double).gp_cokernel.invariant_factors == (2,)


def test_kato_criterion_kernel_side():
    # quotient killing torsion: Z/2 source mapping to the trivial monoid
    src = mc.AffineMonoid.from_vectors([(1,)], torsion_orders=(2,))
    crush = _hom(src, _free(0), [])
    for p, smooth in [(0, True), (3, True), (2, False)]:
        verdict = lha.kato_criterion(crush, residue_char=p)
        assert verdict.is_smooth == smooth
        assert verdict.is_etale == smooth
        assert verdict.gp_kernel.invariant_factors == (2,)


def test_kato_criterion_rejects_composite_char():
    with pytest.raises(DomainError):
        lha.kato_criterion(_nodal(1, 1), residue_char=6)


def test_hollow_chart_is_smooth_never_etale():
    hollow = _hom(_free(0), _free(2), [[], []])
    for p in (0, 2, 5):
        verdict = lha.kato_criterion(hollow, residue_char=p)
        assert verdict.is_smooth and not verdict.is_etale
        assert lha.differential_rank(hollow, p) == 2


# ---------------------------------------------------------------------------
# Kummer homomorphisms


def test_kummer_positive_cases():
    assert lha.is_kummer(_hom(_free(1), _free(1), [[3]]))
    diag = _hom(_free(2), _free(2), [[2, 0], [0, 3]])
    assert lha.is_kummer(diag)
    # saturation inclusion <2,3> -> N is Kummer as well
    sub = mc.AffineMonoid.from_vectors([(2,), (3,)])
    assert lha.is_kummer(_hom(sub, _free(1), [[1]]))


def test_kummer_negative_cases():
    # not injective on groups
    addition = _hom(_free(2), _free(1), [[1, 1]])
    assert not lha.is_kummer(addition)
    # injective but (0,1) has no multiple in the image
    axis = _hom(_free(1), _free(2), [[1], [0]])
    assert lha.is_kummer(axis) is False
    # hollow chart: nothing is hit
    hollow = _hom(_free(0), _free(2), [[], []])
    assert not lha.is_kummer(hollow)


def test_kummer_with_torsion_target():
    tgt = mc.AffineMonoid.from_vectors([(1, 0), (1, 1)], torsion_orders=(2,))
    incl = _hom(_free(1), tgt, [[1], [0]])
    # 2 * (1, 1bar) = (2, 0) is in the image, and gp map Z -> Z + Z/2 is
    # injective, so the inclusion is Kummer
    assert lha.is_kummer(incl)


def test_relative_characteristic():
    triple = _hom(_free(1), _free(1), [[3]])
    rc = lha.relative_characteristic(triple)
    assert rc.ambient.free_rank == 0
    assert rc.ambient.invariant_factors == (3,)
    assert sorted(g.as_vector() for g in rc.generators) == [(1,)]

    diag2 = _hom(_free(2), _free(2), [[2, 0], [0, 2]])
    rc2 = lha.relative_characteristic(diag2)
    assert rc2.ambient.invariant_factors == (2, 2)

    ident = lha.identity_hom(_free(2))
    rci = lha.relative_characteristic(ident)
    assert rci.ambient.is_trivial
    assert all(g.is_zero for g in rci.generators)


def test_relative_characteristic_of_axis_keeps_free_part():
    axis = _hom(_free(1), _free(2), [[1], [0]])
    rc = lha.relative_characteristic(axis)
    assert rc.ambient.free_rank == 1
    assert rc.ambient.invariant_factors == ()
    # the image of (1, 0) collapses to zero and is dropped; (0, 1) survives
    assert sorted(g.as_vector() for g in rc.generators) == [(1,)]


# ---------------------------------------------------------------------------
# neat chart classes


def test_neat_chart_classes():
    axis = _hom(_free(1), _free(2), [[1], [0]])  # cokernel Z: free
    assert lha.neat_chart_class(axis, 0) == "zariski"
    assert lha.neat_chart_class(axis, 5) == "zariski"

    triple = _hom(_free(1), _free(1), [[3]])  # cokernel Z/3
    assert lha.neat_chart_class(triple, 0) == "etale"
    assert lha.neat_chart_class(triple, 2) == "etale"
    assert lha.neat_chart_class(triple, 3) == "fppf"

    double = _hom(_free(1), _free(1), [[2]])  # cokernel Z/2
    assert lha.neat_chart_class(double, 2) == "fppf"
    assert lha.neat_chart_class(double, 5) == "etale"

    with pytest.raises(DomainError):
        lha.neat_chart_class(double, 4)


# ---------------------------------------------------------------------------
# monoid kernel vs group kernel


def test_monoid_kernel_weaker_than_group_kernel():
    # (a, b) |-> a + b: group kernel Z(1, -1), but no nonzero monoid element
    # dies since coordinates are nonnegative
    addition = _hom(_free(2), _free(1), [[1, 1]])
    assert not lha.is_gp_injective(addition)
    assert lha.monoid_kernel_trivial(addition)

    # projection (a, b) |-> a kills (0, 1)
    proj = _hom(_free(2), _free(1), [[1, 0]])
    assert not lha.monoid_kernel_trivial(proj)

    # a torsion generator maps to zero: the monoid kernel is nontrivial
    src = mc.AffineMonoid.from_vectors([(1, 0), (0, 1)], torsion_orders=(2,))
    crush = _hom(src, _free(1), [[1, 0]])
    assert not lha.monoid_kernel_trivial(crush)
    # but if the torsion element is not itself in the monoid the kernel is
    # trivial: <(1, 0bar), (1, 1bar)> maps injectively on monoid elements
    mixed = mc.AffineMonoid.from_vectors([(1, 0), (1, 1)], torsion_orders=(2,))
    skew = _hom(mixed, _free(1), [[1, 0]])
    assert not lha.is_gp_injective(skew)
    assert lha.monoid_kernel_trivial(skew)


# ---------------------------------------------------------------------------
# universal differentials


def test_differential_presentation_nodal():
    pres = lha.universal_differential_presentation(_nodal(2, 2))
    assert pres.symbols == ("d0", "d1")
    assert pres.relation_columns == ((2, 2),)
    assert pres.module.free_rank == 1
    assert pres.module.invariant_factors == (2,)
    assert pres.coefficient_ring == "Z"


def test_differential_rank_nodal_values():
    nodal = _nodal(2, 2)
    assert lha.differential_rank(nodal, 0) == 1
    assert lha.differential_rank(nodal, 2) == 2  # dlog relation dies mod 2
    assert lha.differential_rank(nodal, 3) == 1


def test_differential_module_is_gp_cokernel():
    rng = random.Random(83)
    for _ in range(15):
        s, t = rng.randint(0, 3), rng.randint(1, 3)
        rows = [[rng.randint(0, 3) for _ in range(s)] for _ in range(t)]
        hom = _hom(_free(s), _free(t), rows)
        pres = lha.universal_differential_presentation(hom)
        coker = lha.gp_cokernel(hom)
        assert pres.module.free_rank == coker.free_rank
        assert pres.module.invariant_factors == coker.invariant_factors


def test_differential_rank_matches_field_oracle():
    rng = random.Random(97)
    for _ in range(25):
        s, t = rng.randint(0, 3), rng.randint(1, 3)
        rows = [[rng.randint(0, 4) for _ in range(s)] for _ in range(t)]
        hom = _hom(_free(s), _free(t), rows)
        pres = lha.universal_differential_presentation(hom)
        for p in (0, 2, 3, 5):
            assert lha.differential_rank(hom, p) == \
                oracle_field_rank(pres, p), (rows, p)


def test_differential_rank_with_torsion_target():
    tgt = mc.AffineMonoid.from_vectors(
        [(1, 0), (-1, 0), (0, 1)], torsion_orders=(2,))
    hom = _hom(_free(1), tgt, [[1], [0]])
    pres = lha.universal_differential_presentation(hom)
    # relations: the image column (1, 0) and the torsion column (0, 2)
    assert (0, 2) in pres.relation_columns
    for p in (0, 2, 3):
        assert lha.differential_rank(hom, p) == oracle_field_rank(pres, p)
    assert lha.differential_rank(hom, 2) == 1
    assert lha.differential_rank(hom, 3) == 0


def test_differential_rank_rejects_composite_char():
    with pytest.raises(DomainError):
        lha.differential_rank(_nodal(1, 2), residue_char=9)
