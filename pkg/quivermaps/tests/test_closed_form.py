"""Closed-form orbits, the scaled diagonal maps and the k constants."""

import os
import random
import sys
import unittest
from fractions import Fraction

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

from quivermaps.closed_form import (
    DP3_BAR_SQUARED,
    F0_BAR,
    ScaledDiagonalMap,
    admissible_steps,
    closed_form_orbit,
    dp3_bar,
    dp3_base_orbit,
    f0_base_orbit,
    f0_block_orbit,
    get_scaled_map,
    k_constants,
    lemma1_power,
    on_base_variety,
    register_scaled_map,
    restricted_map,
    theorem_orbit,
    tilde_map,
)
from quivermaps.errors import ArityMismatch, NotOnBaseVariety, NotOnVariety
from quivermaps.maps import get_map, iterate_map
from quivermaps.numeric import random_scalar
from quivermaps.schema import MapId, Point

F0_BASE_POINT = Point.of(1, 1, 1, 2)
F0_OFF_BASE = Point.of(1, 1, 2, Fraction(5, 2))
DP3_BASE_POINT = Point.of(1, 1, 1, 1, 1, 2)


def brute(map_id: MapId, x: Point, n: int) -> Point:
    return iterate_map(get_map(map_id, "phi"), x, n)


class TestScaledDiagonalMaps(unittest.TestCase):
    def test_registry(self) -> None:
        self.assertIs(get_scaled_map("f0_bar"), F0_BAR)
        self.assertIs(get_scaled_map("dp3_bar_squared"), DP3_BAR_SQUARED)

    def test_f0_bar_step(self) -> None:
        self.assertEqual(F0_BAR(F0_BASE_POINT), Point.of(1, 2, 2, 8))

    def test_power_matches_iteration(self) -> None:
        x = Point.of(2, 3, 5, 7)
        for n in range(5):
            self.assertEqual(lemma1_power(F0_BAR, x, n), iterate_map(F0_BAR.apply, x, n))
        y = Point.of(1, 2, 1, 3, 2, 5)
        for n in range(4):
            self.assertEqual(lemma1_power(DP3_BAR_SQUARED, y, n), iterate_map(DP3_BAR_SQUARED.apply, y, n))

    def test_power_errors(self) -> None:
        with self.assertRaises(ValueError):
            lemma1_power(F0_BAR, F0_BASE_POINT, -1)
        with self.assertRaises(ArityMismatch):
            lemma1_power(F0_BAR, DP3_BASE_POINT, 2)

    def test_register_rejects_wrong_eigenvalue(self) -> None:
        bad = ScaledDiagonalMap(
            name="bad",
            diagonal=(Fraction(1), Fraction(2), Fraction(2), Fraction(4)),
            factor=lambda x: x[1] / x[0],
            eigenvalue=Fraction(3),
        )
        with self.assertRaises(ValueError):
            register_scaled_map(bad)


class TestBaseVariety(unittest.TestCase):
    def test_membership(self) -> None:
        self.assertTrue(on_base_variety(MapId.F0, F0_BASE_POINT))
        self.assertFalse(on_base_variety(MapId.F0, F0_OFF_BASE))
        self.assertTrue(on_base_variety(MapId.DP3, DP3_BASE_POINT))

    def test_f0_base_orbit(self) -> None:
        self.assertEqual(f0_base_orbit(F0_BASE_POINT, 2), Point.of(2, 8, 8, 64))
        for n in range(8):
            self.assertEqual(f0_base_orbit(F0_BASE_POINT, n), brute(MapId.F0, F0_BASE_POINT, n))

    def test_dp3_base_orbit(self) -> None:
        self.assertEqual(dp3_base_orbit(DP3_BASE_POINT, 1), Point.of(1, 1, 1, 2, 2, 4))
        for n in range(10):
            self.assertEqual(dp3_base_orbit(DP3_BASE_POINT, n), brute(MapId.DP3, DP3_BASE_POINT, n))

    def test_dp3_bar_is_phi_on_base(self) -> None:
        self.assertEqual(dp3_bar(DP3_BASE_POINT), brute(MapId.DP3, DP3_BASE_POINT, 1))

    def test_block_agrees_with_base(self) -> None:
        self.assertEqual(f0_block_orbit(F0_BASE_POINT, 8), f0_base_orbit(F0_BASE_POINT, 8))

    def test_negative_steps(self) -> None:
        with self.assertRaises(ValueError):
            f0_base_orbit(F0_BASE_POINT, -1)


class TestOffBase(unittest.TestCase):
    def test_block_multiples(self) -> None:
        for n in (4, 8):
            self.assertEqual(theorem_orbit(MapId.F0, F0_OFF_BASE, n), brute(MapId.F0, F0_OFF_BASE, n))

    def test_non_multiple_rejected(self) -> None:
        with self.assertRaises(NotOnBaseVariety):
            f0_block_orbit(F0_OFF_BASE, 5)

    def test_closed_form_orbit_completes_steps(self) -> None:
        self.assertEqual(closed_form_orbit(MapId.F0, F0_OFF_BASE, 5), brute(MapId.F0, F0_OFF_BASE, 5))
        x = Point.of(1, 2, 1, 3, 2, 5)
        self.assertEqual(closed_form_orbit(MapId.DP3, x, 7), brute(MapId.DP3, x, 7))

    def test_admissible_steps(self) -> None:
        self.assertEqual(admissible_steps(MapId.F0, F0_BASE_POINT, 3), [1, 2, 3])
        self.assertEqual(admissible_steps(MapId.F0, F0_OFF_BASE, 9), [4, 8])
        self.assertEqual(admissible_steps(MapId.DP3, Point.of(1, 2, 1, 3, 2, 5), 12), [6, 12])


class TestRestrictedMaps(unittest.TestCase):
    def test_bar(self) -> None:
        self.assertEqual(restricted_map(MapId.F0, "bar", 1, 1, F0_BASE_POINT), Point.of(1, 2, 2, 8))
        self.assertEqual(
            restricted_map(MapId.DP3, "bar", 1, 1, DP3_BASE_POINT), brute(MapId.DP3, DP3_BASE_POINT, 1)
        )

    def test_tilde_is_period_power(self) -> None:
        self.assertEqual(restricted_map(MapId.F0, "tilde", 4, 1, F0_OFF_BASE), brute(MapId.F0, F0_OFF_BASE, 4))
        self.assertEqual(tilde_map(MapId.F0, 4, 1).apply(F0_OFF_BASE), brute(MapId.F0, F0_OFF_BASE, 4))

    def test_errors(self) -> None:
        with self.assertRaises(NotOnVariety):
            restricted_map(MapId.F0, "bar", 1, 1, F0_OFF_BASE)
        with self.assertRaises(NotOnBaseVariety):
            restricted_map(MapId.F0, "bar", 4, 1, F0_OFF_BASE)
        with self.assertRaises(ValueError):
            restricted_map(MapId.F0, "hat", 4, 1, F0_OFF_BASE)


def test_dp3_constants_example() -> None:
    k = k_constants(MapId.DP3, 2, 1)
    assert (k.k1, k.k2) == (9, 81)
    assert k.inequalities_hold()


def test_f0_constants_at_base() -> None:
    k = k_constants(MapId.F0, 1, 1)
    assert (k.k1, k.k2) == (64, 1024)
    assert k.inequalities_hold()


@pytest.mark.parametrize("map_id", list(MapId))
def test_k_inequalities_on_random_parameters(map_id: MapId) -> None:
    rng = random.Random(f"k:{map_id.value}")
    for _ in range(200):
        assert k_constants(map_id, random_scalar(rng), random_scalar(rng)).inequalities_hold()


def test_k_constants_reject_non_positive() -> None:
    with pytest.raises(ValueError):
        k_constants(MapId.F0, 0, 1)
