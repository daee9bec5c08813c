"""CSV/JSON orbit export and log10 plot data."""

import csv
import io
import json
import os
import sys
import unittest
from fractions import Fraction

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

from quivermaps.orbit import run_orbit
from quivermaps.schema import MapId, Point
from quivermaps.utils.export import create_csv_text, create_json_text, create_plot_csv_text, log10_text


class TestLog10(unittest.TestCase):
    def test_values(self) -> None:
        self.assertEqual(log10_text(Fraction(2)), "0.301029995664")
        self.assertEqual(log10_text(Fraction(1, 10)), "-1.000000000000")
        self.assertEqual(log10_text(Fraction(1), digits=3), "0.000")
        self.assertEqual(log10_text(Fraction(1000), digits=2), "3.00")

    def test_rejects_non_positive(self) -> None:
        with self.assertRaises(ValueError):
            log10_text(Fraction(0))


class TestOrbitExport(unittest.TestCase):
    def setUp(self) -> None:
        self.run = run_orbit(MapId.F0, "phi", Point.of(1, 1, 1, 2), 2)

    def test_csv(self) -> None:
        lines = create_csv_text(self.run).splitlines()
        self.assertEqual(lines[0], "n,x1,x2,x3,x4,sheet,J1,J2")
        self.assertEqual(lines[-1], "2,2,8,8,64,0,4,4")

    def test_json_matches_csv(self) -> None:
        rows = json.loads(create_json_text(self.run))
        table = list(csv.DictReader(io.StringIO(create_csv_text(self.run))))
        self.assertEqual(len(rows), len(table))
        for row, line in zip(rows, table):
            for key in ("x1", "x2", "x3", "x4", "J1", "J2"):
                self.assertEqual(row[key], line[key])
            self.assertEqual(str(row["sheet"]), line["sheet"])

    def test_psi_sheet_blank(self) -> None:
        run = run_orbit(MapId.F0, "psi", Point.of(2, Fraction(1, 3)), 1)
        lines = create_csv_text(run).splitlines()
        self.assertEqual(lines[1], "0,2,1/3,,35/6,25/3")
        self.assertIsNone(json.loads(create_json_text(run))[0]["sheet"])

    def test_plot_csv(self) -> None:
        lines = create_plot_csv_text(self.run).splitlines()
        self.assertEqual(lines[0], "n,log10_x1,log10_x2,log10_x3,log10_x4,sheet,x1,x2,x3,x4")
        self.assertEqual(len(lines), 4)
        self.assertTrue(lines[1].startswith("0,0.000000000000,0.000000000000,0.000000000000,0.301029995664,0,"))

    def test_plot_dp3_sheets(self) -> None:
        run = run_orbit(MapId.DP3, "phi", Point.of(1, 2, 1, 3, 2, 5), 6)
        rows = list(csv.DictReader(io.StringIO(create_plot_csv_text(run, digits=4))))
        self.assertEqual([row["sheet"] for row in rows], ["0", "1", "2", "3", "4", "5", "0"])
        self.assertEqual(rows[0]["log10_x2"], "0.3010")
