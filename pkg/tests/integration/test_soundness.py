"""
Integration Tests for Decision Soundness

Tests that orbits found by exact iteration agree with the polynomial side:
- Random rational (x, c) pairs
- Collision parameters from bifurcation resultants
- Preperiod and period degenerations never both meet P
"""

import random
from fractions import Fraction

import pytest

from core.dynatomic import MapSpec, PortraitLabel, bifurcation_parameters, degree_D, dynatomic_poly
from core.exactmath import QuotientRing, UniPoly, coprime, gcd_uni, parse_rational, parse_unipoly
from core.portraits import (
    ACCEPTANCE_POINTS,
    degenerate_factors,
    degenerate_locus,
    multiplier,
    orbit_portrait,
    realizes,
    specialize,
)

SEED = 20240611
CASES = 200
MAX_DYNATOMIC_DEGREE = 80


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-10, 10), rng.randint(1, 10))


def _random_pair(rng: random.Random, d: int) -> tuple[Fraction, Fraction]:
    """Half the pairs fix a random z so that finite orbits are common"""
    if rng.random() < 0.5:
        return _random_rational(rng), _random_rational(rng)
    z = _random_rational(rng)
    c = z - z**d
    return rng.choice((z, -z, _random_rational(rng))), c


@pytest.mark.integration
class TestRandomOrbits:
    """Tests over seeded random points and parameters"""

    @pytest.fixture(scope="class")
    def detected(self):
        rng = random.Random(SEED)
        found = []
        for _ in range(CASES):
            spec = MapSpec(rng.choice((2, 3)))
            x, c = _random_pair(rng, spec.d)
            report = orbit_portrait(x, c, spec, 32)
            if report.is_preperiodic:
                found.append((x, c, spec, report.portrait))
        return found

    def test_some_orbits_are_finite(self, detected):
        """Test the sample contains preperiodic orbits"""
        assert detected

    def test_parameter_is_a_root_of_P(self, detected):
        """Test an exact portrait puts c on P and off S"""
        for x, c, spec, label in detected:
            assert specialize(label, spec, x).evaluate(c) == 0, (x, c, spec.d, label)
            assert degenerate_locus(label, spec, x).evaluate(c) != 0, (x, c, spec.d, label)

    def test_realizes_agrees(self, detected):
        """Test realizes accepts every observed quadratic portrait and reports c"""
        for x, c, spec, label in detected:
            if spec.d != 2 or label.M + label.N > 5:
                continue
            result = realizes(x, label, spec, witness_limit=64)
            assert result.realizable, (x, c, label)
            assert c in [w.c for w in result.rational_witnesses]

    def test_collisions_in_sample(self, detected):
        """Test every sampled cycle that also solves a higher Phi_N has multiplier 1 there"""
        for x, c, spec, label in detected:
            y = x
            for _ in range(label.M):
                y = y**spec.d + c
            n = label.N
            for N in range(2 * n, 9, n):
                if degree_D(spec, N) > MAX_DYNATOMIC_DEGREE:
                    break
                phi = dynatomic_poly(spec, N)
                if phi.evaluate(y, c) != 0:
                    continue
                assert multiplier(y, c, spec, N) == 1, (y, c, spec.d, n, N)
                assert phi.derivative("X").evaluate(y, c) == 0, (y, c, spec.d, n, N)
            if multiplier(y, c, spec, n) == -1 and degree_D(spec, 2 * n) <= MAX_DYNATOMIC_DEGREE:
                assert dynatomic_poly(spec, 2 * n).evaluate(y, c) == 0


@pytest.mark.integration
class TestCollisions:
    """Tests at parameters where cycles collide"""

    def test_period_two_collision(self):
        """Test c = -3/4: Phi_2 and Phi_1 share the root -1/2 with multiplier 1"""
        spec = MapSpec(2)
        assert bifurcation_parameters(spec, 2, 1) == [Fraction(-3, 4)]
        x, c = Fraction(-1, 2), Fraction(-3, 4)
        assert dynatomic_poly(spec, 2).evaluate(x, c) == 0
        assert dynatomic_poly(spec, 1).evaluate(x, c) == 0
        assert multiplier(x, c, spec, 2) == 1
        assert orbit_portrait(x, c, spec, 8).portrait == PortraitLabel(0, 1)
        assert not realizes(x, PortraitLabel(0, 2), spec).realizable

    @pytest.mark.parametrize("d, N, n", [(2, 2, 1), (2, 3, 1), (2, 4, 1), (2, 4, 2), (3, 2, 1), (3, 3, 1)])
    def test_every_rational_collision(self, d, N, n):
        """Test multiplier 1 and a vanishing X-derivative on every shared cycle"""
        spec = MapSpec(d)
        phi_N, phi_n = dynatomic_poly(spec, N), dynatomic_poly(spec, n)
        derivative_x = phi_N.derivative("X")
        for c in bifurcation_parameters(spec, N, n):
            shared = gcd_uni(phi_N.specialize_c(c), phi_n.specialize_c(c))
            assert not shared.is_constant(), c
            # every root of the shared factor at once: arithmetic modulo it
            ring = QuotientRing(shared.with_var("t"))
            y = ring.gen
            assert multiplier(y, c, spec, N) == 1, (d, N, n, c)
            assert derivative_x.evaluate(y, c) == 0, (d, N, n, c)

    def test_period_doubling_collision(self):
        """Test c = -5/4: the 2-cycle meets the 4-cycles"""
        spec = MapSpec(2)
        assert Fraction(-5, 4) in bifurcation_parameters(spec, 4, 2)
        ring = QuotientRing(parse_unipoly("t^2 + t - 1/4", "t"))
        y = ring.gen
        assert multiplier(y, Fraction(-5, 4), spec, 2) == -1
        assert multiplier(y, Fraction(-5, 4), spec, 4) == 1
        assert dynatomic_poly(spec, 4).derivative("X").evaluate(y, Fraction(-5, 4)) == 0


@pytest.mark.integration
class TestDegenerateDichotomy:
    """At most one kind of degeneration can share a factor with P"""

    @pytest.mark.parametrize("d", [2, 3])
    def test_preperiod_or_period_factor_is_coprime(self, d):
        """Test gcd(P, f^{M-1}(x)) or gcd(P, prod Phi_n(f^M(x), C)) is constant"""
        spec = MapSpec(d)
        for text in ACCEPTANCE_POINTS:
            x = parse_rational(text)
            for M in (1, 2):
                for N in (1, 2, 3):
                    label = PortraitLabel(M, N)
                    P = specialize(label, spec, x)
                    preperiod, *period_factors = degenerate_factors(label, spec, x)
                    period = UniPoly.constant(1, "C")
                    for factor in period_factors:
                        period = period * factor
                    assert coprime(P, preperiod) or coprime(P, period), (text, M, N, d)

    def test_each_kind_occurs(self, quadratic):
        """Test x = 1/2 degenerates by period and x = 1 by preperiod"""
        label = PortraitLabel(1, 2)
        P = specialize(label, quadratic, Fraction(1, 2))
        preperiod, period = degenerate_factors(label, quadratic, Fraction(1, 2))
        assert coprime(P, preperiod)
        assert not coprime(P, period)

        label = PortraitLabel(2, 2)
        P = specialize(label, quadratic, 1)
        preperiod, period = degenerate_factors(label, quadratic, 1)
        assert not coprime(P, preperiod)
        assert coprime(P, period)
