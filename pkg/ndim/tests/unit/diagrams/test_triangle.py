# Copyright 2016 Cloudbase Solutions Srl
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

import unittest

import mpmath

from ndim.common import exception
from ndim.diagrams import master
from ndim.diagrams import triangle
from ndim.special import numerics


class TestKinematics(unittest.TestCase):

    def test_positive(self):
        self.assertRaises(exception.Invalid, triangle.Kinematics, 1, 0, 1)
        self.assertRaises(exception.Invalid, triangle.Kinematics, -1, 1, 1)

    def test_swapped(self):
        kinematics = triangle.Kinematics(1, 2, 3).swapped("q2", "r2")
        self.assertEqual((1, 3, 2), (kinematics.p2, kinematics.q2,
                                     kinematics.r2))


class TestTriangle(unittest.TestCase):

    def setUp(self):
        self._precision = numerics.Precision(digits=30)
        self._inside = triangle.Kinematics(1, "0.04", "0.09")

    def test_symmetric_exponents(self):
        exponents = triangle.TriangleExponents(0, 0, 0)
        kinematics = triangle.Kinematics(3, 5, 7)
        dimension = mpmath.mpf("4.3")
        values = [
            triangle.triangle_3term(representation, exponents, kinematics,
                                    dimension, self._precision)
            for representation in triangle.REPRESENTATIONS[1:]]
        with self._precision.workdps():
            reference = values[0].coefficient.value()
            for value in values[1:]:
                self.assertLess(numerics.relative_error(
                    value.coefficient.value(), reference), 1e-20)

    def test_three_term_sets_agree(self):
        exponents = triangle.TriangleExponents(1, 0, 2)
        kinematics = triangle.Kinematics(3, 5, 7)
        dimension = mpmath.mpf("4.3")
        values = [
            triangle.triangle_3term(representation, exponents, kinematics,
                                    dimension, self._precision)
            for representation in triangle.REPRESENTATIONS[1:]]
        with self._precision.workdps():
            reference = values[0].coefficient.value()
            for value in values[1:]:
                self.assertLess(numerics.relative_error(
                    value.coefficient.value(), reference), 1e-15)

    def test_literal_phase(self):
        result = triangle.triangle_3term(
            triangle.THREE_TERM, triangle.TriangleExponents(1, 0, 2),
            triangle.Kinematics(3, 5, 7), "4.3", self._precision)
        self.assertRaises(exception.NonIntegerPhase, result.value, "4.3", 1,
                          self._precision)

    def test_three_term_unknown(self):
        self.assertRaises(exception.NotFound, triangle.triangle_3term,
                          triangle.FOUR_TERM,
                          triangle.TriangleExponents(0, 0, 0),
                          triangle.Kinematics(1, 1, 1), 4, self._precision)

    def test_region(self):
        exponents = triangle.TriangleExponents("-1.1", "-0.9", "-1.2")
        self.assertTrue(triangle.region_check(
            self._inside, triangle.FOUR_TERM, exponents, "4.6",
            self._precision))
        outside = triangle.Kinematics(1, 4, "0.09")
        self.assertFalse(triangle.region_check(
            outside, triangle.FOUR_TERM, exponents, "4.6", self._precision))
        self.assertRaises(exception.OutsideRegion, triangle.triangle_4term,
                          exponents, outside, "4.6", self._precision)

    def test_symmetry(self):
        exponents = triangle.TriangleExponents("-1.1", "-0.9", "-1.2")
        dimension = mpmath.mpf("4.6")
        value = triangle.triangle_4term(exponents, self._inside, dimension,
                                        self._precision)
        mirror = triangle.triangle_4term(
            triangle.TriangleExponents("-0.9", "-1.1", "-1.2"),
            self._inside.swapped("q2", "r2"), dimension, self._precision)
        with self._precision.workdps():
            self.assertLess(numerics.relative_error(
                mirror.coefficient.value(), value.coefficient.value()),
                1e-20)

    def test_bubble_limit(self):
        dimension = mpmath.mpf("4.6")
        exponents = triangle.TriangleExponents("-1.1", "-0.9", 0)
        value = triangle.triangle_4term(exponents, self._inside, dimension,
                                        self._precision)
        bubble = master.bubble("-1.1", "-0.9", dimension, self._precision)
        with self._precision.workdps():
            self.assertLess(numerics.relative_error(
                value.value(dimension, 1, self._precision),
                bubble.value(dimension, 1, self._precision)), 1e-20)

    def test_terms(self):
        exponents = triangle.TriangleExponents("-1.1", "-0.9", "-1.2")
        terms = triangle.triangle_terms(triangle.FOUR_TERM, exponents,
                                        self._inside, "4.6",
                                        self._precision)
        self.assertEqual(4, len(terms))

    def test_dispatch(self):
        exponents = triangle.TriangleExponents("-1.1", "-0.9", "-1.2")
        direct = triangle.triangle_4term(exponents, self._inside, "4.6",
                                         self._precision)
        dispatched = triangle.triangle(triangle.FOUR_TERM, exponents,
                                       self._inside, "4.6", self._precision)
        self.assertEqual(float(direct.coefficient),
                         float(dispatched.coefficient))

    def test_region_report(self):
        exponents = triangle.TriangleExponents("-1.1", "-0.9", "-1.2")
        kinematics = triangle.Kinematics(1, 25, 4)
        report = triangle.region_report(kinematics, triangle.THREE_TERM,
                                        exponents, "4.6", self._precision)
        self.assertEqual([1, 2, 3], [term.position for term in report])
        third = report[2]
        self.assertEqual(mpmath.mpf("0.16"), third.x)
        self.assertEqual(mpmath.mpf("0.04"), third.y)
        self.assertFalse(third.terminates)
        self.assertTrue(third.admissible)
        self.assertFalse(report[0].admissible)

    def test_region_report_terminating(self):
        exponents = triangle.TriangleExponents(1, 0, 2)
        report = triangle.region_report(
            triangle.Kinematics(1, 25, 4), triangle.FOUR_TERM, exponents,
            "4.3", self._precision)
        self.assertTrue(all(term.terminates for term in report[:3]))
