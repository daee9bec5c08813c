"""Point maps, map registry and the (semi)conjugacy diagrams."""

import os
import random
import sys
import unittest
from fractions import Fraction

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

from quivermaps.errors import ArityMismatch, NotPerfectSquare
from quivermaps.maps import (
    conj_Pi_tilde,
    conj_Pi_tilde_inv,
    fixed_points,
    get_map,
    iterate_map,
    phi,
    phi_hat,
    project_Pi,
    project_pi,
    project_pi_composed,
    psi,
)
from quivermaps.maps.registry import arity_of, period_of, resolve_map, resolve_which
from quivermaps.numeric import random_point
from quivermaps.schema import MapId, Point


class TestPoint(unittest.TestCase):
    def test_coerces_to_fractions(self) -> None:
        p = Point.of(1, "3/6", Fraction(2, 7), 5)
        self.assertEqual(p.coords[:2], (Fraction(1), Fraction(1, 2)))

    def test_rejects_bad_points(self) -> None:
        with self.assertRaises(ValueError):
            Point.of(0, 1)
        with self.assertRaises(ValueError):
            Point.of(1, -2, 3, 4)
        with self.assertRaises(ValueError):
            Point.of(1, 2, 3)
        with self.assertRaises(ValueError):
            Point.of(1.5, 1)

    def test_str(self) -> None:
        self.assertEqual(str(Point.of(1, Fraction(1, 2))), "(1, 1/2)")


class TestRegistry(unittest.TestCase):
    def test_profiles(self) -> None:
        self.assertEqual((arity_of(MapId.F0), period_of(MapId.F0)), (4, 4))
        self.assertEqual((arity_of(MapId.DP3), period_of(MapId.DP3)), (6, 6))

    def test_resolve(self) -> None:
        self.assertIs(resolve_map("dP3"), MapId.DP3)
        self.assertIs(resolve_map(MapId.F0), MapId.F0)
        self.assertEqual(resolve_which("phihat"), "phi_hat")
        with self.assertRaises(ValueError):
            resolve_map("e8")
        with self.assertRaises(ValueError):
            resolve_which("chi")


class TestPhi(unittest.TestCase):
    def test_f0_step(self) -> None:
        self.assertEqual(phi(MapId.F0, Point.of(1, 1, 1, 1)), Point.of(1, 1, 2, 5))

    def test_dp3_step(self) -> None:
        self.assertEqual(phi(MapId.DP3, Point.of(1, 1, 1, 1, 1, 1)), Point.of(1, 1, 1, 1, 2, 3))

    def test_arity_errors(self) -> None:
        with self.assertRaises(ArityMismatch):
            phi(MapId.F0, Point.of(1, 1, 1, 1, 1, 1))
        with self.assertRaises(ArityMismatch):
            phi(MapId.DP3, Point.of(1, 1, 1, 1))
        with self.assertRaises(ArityMismatch):
            psi(MapId.F0, Point.of(1, 1, 1, 1))
        with self.assertRaises(ArityMismatch):
            project_pi(MapId.DP3, Point.of(1, 2))

    def test_get_map_alias(self) -> None:
        f = get_map(MapId.F0, "phihat")
        self.assertEqual(f(Point.of(2, 1)), Point.of(2, 1))

    def test_iterate_negative(self) -> None:
        with self.assertRaises(ValueError):
            iterate_map(get_map(MapId.F0, "psi"), Point.of(1, 2), -1)


class TestPlanar(unittest.TestCase):
    def test_fixed_points(self) -> None:
        for map_id in MapId:
            fixed = fixed_points(map_id)
            self.assertEqual(psi(map_id, fixed["psi"]), fixed["psi"])
            self.assertEqual(phi_hat(map_id, fixed["phi_hat"]), fixed["phi_hat"])

    def test_psi_orbits(self) -> None:
        f = get_map(MapId.F0, "psi")
        self.assertEqual(iterate_map(f, Point.of(2, 3), 4), Point.of(2, 3))
        g = get_map(MapId.DP3, "psi")
        self.assertEqual(g(Point.of(2, 3)), Point.of(3, Fraction(3, 2)))
        self.assertEqual(iterate_map(g, Point.of(2, 3), 6), Point.of(2, 3))

    def test_f0_inverse_needs_square(self) -> None:
        with self.assertRaises(NotPerfectSquare):
            conj_Pi_tilde_inv(MapId.F0, Point.of(2, 1))

    def test_dp3_inverse(self) -> None:
        p = Point.of(2, 3)
        self.assertEqual(conj_Pi_tilde(MapId.DP3, p), Point.of(2, 1))
        self.assertEqual(conj_Pi_tilde_inv(MapId.DP3, Point.of(2, 1)), p)


@pytest.mark.parametrize("map_id", list(MapId))
def test_semiconjugacies_on_random_points(map_id: MapId) -> None:
    rng = random.Random(f"maps:{map_id.value}")
    for _ in range(50):
        x = random_point(rng, arity_of(map_id), 30)
        assert project_Pi(map_id, phi(map_id, x)) == phi_hat(map_id, project_Pi(map_id, x))
        assert project_pi(map_id, phi(map_id, x)) == psi(map_id, project_pi(map_id, x))
        assert project_pi(map_id, x) == project_pi_composed(map_id, x)
        p = random_point(rng, 2, 30)
        assert conj_Pi_tilde_inv(map_id, conj_Pi_tilde(map_id, p)) == p
