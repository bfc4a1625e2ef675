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
from ndim.special import numerics


class TestBubble(unittest.TestCase):

    def setUp(self):
        self._precision = numerics.Precision(digits=30)

    def test_three_dimensions(self):
        loop = master.bubble(-1, -1, 3, self._precision)
        with self._precision.workdps():
            self.assertLess(numerics.relative_error(
                loop.coefficient.value(), mpmath.pi ** 1.5), 1e-25)
            self.assertEqual(mpmath.mpf("1.5"), loop.pi_exponent.evaluate(3))
            self.assertEqual(mpmath.mpf("-0.5"), loop.p2_exponent.evaluate(3))
            self.assertLess(numerics.relative_error(
                loop.value(3, 1, self._precision), mpmath.pi ** 3), 1e-25)

    def test_gamma_functions(self):
        dimension = mpmath.mpf("4.6")
        loop = master.bubble(-1, -1, dimension, self._precision)
        with self._precision.workdps():
            half = dimension / 2
            expected = (mpmath.gamma(2 - half) *
                        mpmath.gamma(half - 1) ** 2 /
                        mpmath.gamma(dimension - 2))
            self.assertLess(numerics.relative_error(
                loop.coefficient.value(), expected), 1e-25)

    def test_literal_integer_exponents(self):
        self.assertRaises(exception.PoleError, master.bubble, -1, -1, "4.6",
                          self._precision, False)

    def test_quadrature(self):
        dimension = mpmath.mpf("3.5")
        loop = master.bubble("-0.7", "-1.2", dimension, self._precision)
        value = master.bubble_quadrature("-0.7", "-1.2", dimension,
                                         self._precision)
        self.assertLess(numerics.relative_error(
            value, loop.value(dimension, 1, self._precision)), 1e-12)

    def test_quadrature_positive_exponent(self):
        self.assertRaises(exception.Invalid, master.bubble_quadrature,
                          1, -1, 4, self._precision)


class TestMasterExponents(unittest.TestCase):

    def test_combinations(self):
        exponents = master.MasterExponents.all_minus_one()
        self.assertEqual(-1, exponents.sigma(4))
        self.assertEqual(0, exponents.sigma_prime(4))
        self.assertEqual(-1, exponents.omega(4))

    def test_swaps(self):
        exponents = master.MasterExponents(1, 2, 3, 4, 5)
        self.assertEqual((2, 1, 4, 3, 5),
                         exponents.swapped_pairs().as_tuple())
        self.assertEqual((3, 4, 1, 2, 5),
                         exponents.swapped_sides().as_tuple())


class TestMaster(unittest.TestCase):

    def setUp(self):
        self._precision = numerics.Precision(digits=30)
        self._exponents = master.MasterExponents.all_minus_one()

    def test_forms_agree(self):
        dimension = mpmath.mpf("3.8")
        series = master.assemble_master(self._exponents, dimension,
                                        self._precision)
        closed = master.master_closed_form(dimension, self._precision)
        gauss = master.master_2f1_form(dimension, self._precision)

        self.assertEqual(mpmath.mpf("3.8"),
                         series.pi_exponent.evaluate(dimension))
        self.assertLess(abs(series.p2_exponent.evaluate(dimension) +
                            mpmath.mpf("1.2")), 1e-25)
        self.assertEqual(closed.p2_exponent, series.p2_exponent)
        with self._precision.workdps():
            reference = closed.coefficient.value()
            self.assertLess(numerics.relative_error(
                series.coefficient.value(), reference), 1e-15)
            self.assertLess(numerics.relative_error(
                gauss.coefficient.value(), reference), 1e-15)

    def test_coefficient_phases(self):
        dimension = mpmath.mpf("3.7")
        for product in master.coefficient_factors(self._exponents,
                                                  dimension):
            _, phase = product.evaluate(self._precision)
            self.assertTrue(numerics.is_integer(phase + dimension,
                                                self._precision))

    def test_literal_coefficients(self):
        exponents = master.MasterExponents("-1.1", "-0.9", 1, "-0.8", 2)
        coefficients = master.master_coefficients_preac(
            exponents, "4.6", self._precision)
        self.assertEqual(3, len(coefficients))
        self.assertTrue(all(not value.is_zero for value in coefficients))

    def test_literal_phase(self):
        exponents = master.MasterExponents("-1.1", "-0.9", 1, "-0.8", "1.7")
        self.assertRaises(exception.NonIntegerPhase,
                          master.master_coefficients_preac, exponents, "4.6",
                          self._precision)

    def test_continued_coefficients(self):
        coefficients = master.master_coefficients_ac(
            self._exponents, "3.7", self._precision)
        self.assertEqual(3, len(coefficients))

    def test_closed_form_poles(self):
        self.assertRaises(exception.PoleError, master.master_closed_form,
                          3, self._precision)
        self.assertRaises(exception.PoleError, master.master_closed_form,
                          4, self._precision)

    def test_series_reassemble(self):
        dimension = mpmath.mpf("3.8")
        assembled = master.assemble_master(self._exponents, dimension,
                                           self._precision)
        coefficients = master.master_coefficients_ac(
            self._exponents, dimension, self._precision)
        with self._precision.workdps():
            total = mpmath.mpf(0)
            for index, coefficient in enumerate(coefficients, 1):
                if coefficient.is_zero:
                    continue
                series = master.master_F_series(
                    index, self._exponents, dimension, self._precision)
                self.assertGreater(series.terms, 0)
                total += coefficient.value() * series.value
            self.assertLess(numerics.relative_error(
                total, assembled.coefficient.value()), 1e-25)

    def test_series_spec(self):
        spec = master.master_series_spec(1, self._exponents, "3.8")
        self.assertEqual("F1", spec.name)
        self.assertRaises(exception.NotFound, master.master_series_spec,
                          4, self._exponents, "3.8")

    def test_epsilon_limit(self):
        precision = numerics.Precision(digits=50)
        limit, points = master.master_epsilon_limit(precision)
        expected = master.expected_epsilon_limit(precision)
        self.assertLess(abs(expected - mpmath.mpf("7.2123414189575652")),
                        1e-13)
        self.assertLess(numerics.relative_error(limit, expected), 1e-6)
        self.assertTrue(points)

    def test_closed_bracket_vanishes(self):
        with self._precision.workdps():
            near = master.master_closed_bracket(4 - mpmath.mpf("2e-3"),
                                                self._precision)
            far = master.master_closed_bracket(4 - mpmath.mpf("2e-2"),
                                               self._precision)
            self.assertLess(abs(near.value()), abs(far.value()))
