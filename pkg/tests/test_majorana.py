import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entkit import (
    DickeExpansion,
    MajoranaConstellation,
    NotSymmetricError,
    NumericError,
    SpherePoint,
    ValidationError,
    apply_local_unitary,
    bell_state,
    binary_discriminant,
    classify_symmetric,
    coherent_state,
    dicke_state,
    find_stars,
    ghz_state,
    majorana_polynomial,
    make_state,
    symmetrize_check,
    w_state,
)
from entkit.sampling import random_su2, trial_rng
from entkit.states import LocalUnitary

R2 = 1.0 / math.sqrt(2.0)


def xyz(theta, phi):
    return np.array(
        [
            math.sin(theta) * math.cos(phi),
            math.sin(theta) * math.sin(phi),
            math.cos(theta),
        ]
    )


def star_points(con):
    """Flattened (multiplicity-repeated) xyz list of a constellation."""
    pts = []
    for s in con.stars:
        pts.extend([xyz(s.theta, s.phi)] * s.multiplicity)
    return pts


def match_sets(got, want, tol):
    """Greedy chordal matching between two equal-size point lists."""
    assert len(got) == len(want)
    remaining = list(want)
    for g in got:
        dists = [np.linalg.norm(g - w) for w in remaining]
        k = int(np.argmin(dists))
        assert dists[k] <= tol, f"star off by {dists[k]:.3e}"
        remaining.pop(k)


def poly_from_stars(stars, n):
    """Ascending coefficients with prescribed stars; theta=pi means infinity."""
    roots = []
    for theta, phi, mult in stars:
        if theta == math.pi:
            continue
        roots.extend([math.tan(theta / 2.0) * np.exp(1j * phi)] * mult)
    return np.polynomial.polynomial.polyfromroots(roots) if roots else np.array([1.0])


class TestSymmetrizeCheck:
    def test_ghz_coefficients(self):
        d = symmetrize_check(ghz_state(3))
        np.testing.assert_allclose(d.coeffs, [R2, 0, 0, R2], atol=1e-12)

    def test_w_coefficients(self):
        d = symmetrize_check(w_state())
        np.testing.assert_allclose(d.coeffs, [0, 1, 0, 0], atol=1e-12)

    def test_asymmetric_rejected(self):
        s = make_state([2, 2], {(0, 1): 1.0})
        with pytest.raises(NotSymmetricError):
            symmetrize_check(s)

    def test_tolerance_loosens(self):
        s = make_state([2, 2], {(0, 1): 1.0, (1, 0): 1.0 + 1e-7})
        with pytest.raises(NotSymmetricError):
            symmetrize_check(s)
        assert symmetrize_check(s, tolerance=1e-6).n == 2

    def test_non_qubit_rejected(self):
        with pytest.raises(ValidationError):
            symmetrize_check(make_state([3, 3], {(0, 0): 1.0}))

    def test_dicke_state_round_trip(self, rng):
        for n in [1, 2, 4, 6]:
            c = rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)
            d = DickeExpansion(n=n, coeffs=c / np.linalg.norm(c))
            back = symmetrize_check(dicke_state(d))
            # global phase may differ; align on the largest coefficient
            k = int(np.argmax(np.abs(d.coeffs)))
            phase = back.coeffs[k] / d.coeffs[k]
            np.testing.assert_allclose(back.coeffs, phase * d.coeffs, atol=1e-10)


class TestPolynomial:
    def test_ghz_is_z_cubed_minus_one(self):
        a = majorana_polynomial(symmetrize_check(ghz_state(3)))
        np.testing.assert_allclose(a, [-R2, 0, 0, R2], atol=1e-12)

    def test_w_is_minus_sqrt3_z_squared(self):
        a = majorana_polynomial(symmetrize_check(w_state()))
        np.testing.assert_allclose(a, [0, 0, -math.sqrt(3.0), 0], atol=1e-12)

    def test_alternating_signs(self):
        d = DickeExpansion(n=2, coeffs=np.array([1.0, 1.0, 1.0]) / math.sqrt(3.0))
        a = majorana_polynomial(d)
        r3 = 1.0 / math.sqrt(3.0)
        np.testing.assert_allclose(a, [r3, -math.sqrt(2.0) * r3, r3], atol=1e-12)


class TestFindStars:
    def test_ghz_equatorial_cube_roots(self):
        con = find_stars(majorana_polynomial(symmetrize_check(ghz_state(3))), 3)
        assert con.partition == (1, 1, 1)
        want = [xyz(math.pi / 2.0, 2.0 * math.pi * k / 3.0) for k in range(3)]
        match_sets(star_points(con), want, 1e-8)

    def test_w_partition(self):
        con = find_stars(majorana_polynomial(symmetrize_check(w_state())), 3)
        assert con.partition == (2, 1)
        assert con.stars[0].theta == 0.0 and con.stars[0].multiplicity == 2
        assert con.stars[1].theta == math.pi and con.stars[1].multiplicity == 1

    def test_bell_antipodal(self):
        con = find_stars(majorana_polynomial(symmetrize_check(bell_state("phi+"))), 2)
        assert con.partition == (1, 1)
        a, b = (xyz(s.theta, s.phi) for s in con.stars)
        assert float(a @ b) == pytest.approx(-1.0, abs=1e-10)

    def test_all_zeros_state(self):
        s = make_state([2] * 4, {(0, 0, 0, 0): 1.0})
        con = find_stars(majorana_polynomial(symmetrize_check(s)), 4)
        assert con.partition == (4,)
        assert con.stars[0].theta == 0.0

    def test_all_ones_state(self):
        s = make_state([2] * 4, {(1, 1, 1, 1): 1.0})
        con = find_stars(majorana_polynomial(symmetrize_check(s)), 4)
        assert con.partition == (4,)
        assert con.stars[0].theta == math.pi

    @pytest.mark.parametrize(
        "stars,n",
        [
            ([(0.7, 0.3, 3), (2.1, 4.0, 2)], 5),
            ([(0.4, 1.0, 2), (1.8, 2.5, 2), (2.7, 5.5, 1)], 5),
            ([(1.2, 0.0, 4), (2.9, 3.3, 1)], 5),
            ([(0.9, 5.9, 2), (1.5, 1.1, 1), (2.2, 2.2, 1), (0.3, 3.0, 1)], 5),
            ([(0.8, 0.5, 2), (1.9, 3.9, 2), (math.pi, 0.0, 1)], 5),
            ([(0.0, 0.0, 2), (1.3, 2.0, 1), (2.4, 0.7, 3)], 6),
        ],
    )
    def test_constructed_multiplets(self, stars, n):
        con = find_stars(poly_from_stars(stars, n), n)
        assert con.partition == tuple(sorted((m for _, _, m in stars), reverse=True))
        want = []
        for theta, phi, mult in stars:
            want.extend([xyz(theta, phi)] * mult)
        match_sets(star_points(con), want, 1e-6)

    def test_degree_deficit_counts_infinity(self):
        # z^2 - 1 read as a 4-qubit polynomial: two equator stars, two at the pole
        con = find_stars(np.array([-1.0, 0.0, 1.0]), 4)
        assert con.partition == (2, 1, 1)
        assert con.stars[0].theta == math.pi

    def test_close_pair_stays_split(self):
        sep = 1e-4
        con = find_stars(
            poly_from_stars([(1.0, 0.0, 1), (1.0 + sep, 0.0, 1)], 2), 2
        )
        assert con.partition == (1, 1)

    def test_degenerate_polynomial(self):
        with pytest.raises(NumericError):
            find_stars(np.array([1e-16, 1e-15]), 2)

    def test_too_long_polynomial(self):
        with pytest.raises(ValidationError):
            find_stars(np.ones(4), 2)

    def test_bad_n(self):
        with pytest.raises(ValidationError):
            find_stars(np.ones(2), 0)


class TestCoherent:
    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_round_trip_direction(self, n, rng):
        for _ in range(6):
            theta = float(rng.uniform(0.05, math.pi - 0.05))
            phi = float(rng.uniform(0.0, 2.0 * math.pi))
            d = coherent_state((theta, phi), n)
            con = find_stars(majorana_polynomial(d), n)
            assert con.partition == (n,)
            err = np.linalg.norm(xyz(con.stars[0].theta, con.stars[0].phi) - xyz(theta, phi))
            assert err < 1e-8

    def test_near_pole(self):
        theta = math.pi - 1e-6
        d = coherent_state((theta, 0.3), 6)
        con = find_stars(majorana_polynomial(d), 6)
        assert con.partition == (6,)
        err = np.linalg.norm(xyz(con.stars[0].theta, con.stars[0].phi) - xyz(theta, 0.3))
        assert err < 1e-8

    def test_sphere_point_input(self):
        d = coherent_state(SpherePoint(theta=0.5, phi=1.0), 3)
        assert d.n == 3

    def test_phi_zero_direction(self):
        # the mean root angle can round to -1e-17, whose modulus by
        # 2 pi is 2 pi itself; the star must come back with phi = 0
        for n in (2, 3, 5):
            d = coherent_state((0.3, 0.0), n)
            con = find_stars(majorana_polynomial(d), n)
            assert con.partition == (n,)
            assert con.stars[0].phi == pytest.approx(0.0, abs=1e-8)

    def test_state_is_product(self):
        from entkit import is_product_multipartite

        assert is_product_multipartite(dicke_state(coherent_state((1.0, 2.0), 3)))

    def test_bad_n(self):
        with pytest.raises(ValidationError):
            coherent_state((0.5, 0.5), 0)


class TestRotationCovariance:
    def test_stars_rotate_with_the_state(self, rng):
        c = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        d = DickeExpansion(n=5, coeffs=c / np.linalg.norm(c))
        state = dicke_state(d)
        base = classify_symmetric(state).constellation
        for t in range(5):
            u = random_su2(trial_rng(4242, t))
            rotated = apply_local_unitary(
                state, LocalUnitary(factors=(u,) * 5)
            )
            got = classify_symmetric(rotated).constellation
            want = []
            for s in base.stars:
                spinor = u @ np.array(
                    [math.cos(s.theta / 2.0), np.exp(1j * s.phi) * math.sin(s.theta / 2.0)]
                )
                th = 2.0 * math.atan2(abs(spinor[1]), abs(spinor[0]))
                ph = float(np.angle(spinor[1]) - np.angle(spinor[0]))
                want.extend([xyz(th, ph)] * s.multiplicity)
            match_sets(star_points(got), want, 1e-7)


class TestDiscriminant:
    def test_n_one_is_unity(self):
        assert binary_discriminant(np.array([1.0, 2.0]), 1) == 1.0

    def test_repeated_roots_vanish(self):
        a = poly_from_stars([(0.9, 1.0, 2), (2.0, 3.0, 1)], 3)
        assert abs(binary_discriminant(a, 3)) < 1e-10

    def test_repeated_infinity_vanishes(self):
        # degree deficit 2 on a degree-4 form
        a = poly_from_stars([(0.9, 1.0, 1), (2.0, 3.0, 1)], 4)
        assert abs(binary_discriminant(a, 4)) < 1e-10

    def test_distinct_roots_do_not_vanish(self):
        a = majorana_polynomial(symmetrize_check(ghz_state(3)))
        assert abs(binary_discriminant(a, 3)) > 1e-3

    def test_scale_invariant(self):
        a = majorana_polynomial(symmetrize_check(ghz_state(3)))
        d1 = binary_discriminant(a, 3)
        d2 = binary_discriminant(17.0 * a, 3)
        assert d1 == pytest.approx(d2, rel=1e-12)

    def test_quadratic_formula_agreement(self, rng):
        for _ in range(20):
            a = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            an = a / np.linalg.norm(a)
            classic = an[1] ** 2 - 4.0 * an[2] * an[0]
            got = binary_discriminant(a, 2)
            assert got == pytest.approx(classic, rel=1e-10)

    def test_bad_inputs(self):
        with pytest.raises(ValidationError):
            binary_discriminant(np.ones(2), 0)
        with pytest.raises(ValidationError):
            binary_discriminant(np.ones(5), 3)
        with pytest.raises(NumericError):
            binary_discriminant(np.zeros(3), 2)


class TestClassification:
    def test_onion_levels(self):
        ghz = classify_symmetric(ghz_state(3))
        w = classify_symmetric(w_state())
        coh = classify_symmetric(dicke_state(coherent_state((1.0, 0.5), 3)))
        assert ghz.onion_level == 3
        assert w.onion_level == 2
        assert coh.onion_level == 1
        assert coh.precedes(w) and w.precedes(ghz) and coh.precedes(ghz)
        assert not ghz.precedes(coh)
        assert not ghz.precedes(ghz)

    def test_precedes_needs_equal_n(self):
        a = classify_symmetric(bell_state("phi+"))
        b = classify_symmetric(ghz_state(3))
        with pytest.raises(ValidationError):
            a.precedes(b)

    def test_constellation_invariants_enforced(self):
        star = SpherePoint(theta=0.0, phi=0.0, multiplicity=2)
        with pytest.raises(ValidationError):
            MajoranaConstellation(
                n=3, stars=(star,), distinct_count=1, partition=(2,), discriminant=0.0
            )

    def test_sphere_point_validation(self):
        with pytest.raises(ValidationError):
            SpherePoint(theta=-0.1, phi=0.0)
        with pytest.raises(ValidationError):
            SpherePoint(theta=0.1, phi=7.0)
        with pytest.raises(ValidationError):
            SpherePoint(theta=0.1, phi=0.0, multiplicity=0)

    def test_dicke_expansion_validation(self):
        with pytest.raises(ValidationError):
            DickeExpansion(n=2, coeffs=np.array([1.0, 0.0]))
        with pytest.raises(ValidationError):
            DickeExpansion(n=2, coeffs=np.array([1.0, 0.0, 1.0]))


@settings(max_examples=40, deadline=None)
@given(
    st.integers(1, 7),
    st.integers(0, 2**31 - 1),
)
def test_star_count_conservation(n, seed):
    rng = np.random.default_rng(seed)
    c = rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)
    d = DickeExpansion(n=n, coeffs=c / np.linalg.norm(c))
    con = find_stars(majorana_polynomial(d), n)
    assert sum(s.multiplicity for s in con.stars) == n
    assert con.partition == tuple(sorted(con.partition, reverse=True))
    assert con.distinct_count == len(con.stars)
    for s in con.stars:
        assert 0.0 <= s.theta <= math.pi
        assert 0.0 <= s.phi < 2.0 * math.pi
