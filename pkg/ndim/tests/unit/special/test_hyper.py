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

from ndim.common import constant
from ndim.common import exception
from ndim.special import hyper
from ndim.special import numerics


class TestPFQ(unittest.TestCase):

    def setUp(self):
        self._precision = numerics.Precision(digits=30)

    def _assert_close(self, expected, value, tolerance=1e-25):
        with self._precision.workdps():
            self.assertLess(numerics.relative_error(value, expected),
                            tolerance)

    def test_accelerated(self):
        result = hyper.pfq_unit(hyper.PFQParams([1, 1], [3]),
                                self._precision)
        self._assert_close(2, result.value)
        self.assertIn(constant.FLAG_ACCELERATED, result.flags)

    def test_terminating(self):
        result = hyper.pfq_unit(hyper.PFQParams([-1, 2], [5]),
                                self._precision)
        self._assert_close(mpmath.mpf("0.6"), result.value)
        self.assertEqual(2, result.terms)
        self.assertEqual(frozenset(), result.flags)

    def test_gauss(self):
        with self._precision.workdps():
            result = hyper.gauss_2f1_unit("0.5", "0.5", 2, self._precision)
            self._assert_close(4 / mpmath.pi, result.value.value())

    def test_gauss_against_series(self):
        with self._precision.workdps():
            closed = hyper.gauss_2f1_unit("0.3", "-1.7", "2.9",
                                          self._precision)
            series = hyper.pfq_unit(hyper.PFQParams(["0.3", "-1.7"],
                                                    ["2.9"]),
                                    self._precision)
            self._assert_close(closed.value.value(), series.value)

    def test_coalesce(self):
        reduced = hyper.coalesce(hyper.PFQParams([1, 2, 3], [3, 4]),
                                 self._precision)
        self.assertEqual(hyper.PFQParams([1, 2], [4]), reduced)

    def test_convergence_margin(self):
        self.assertEqual(3, hyper.convergence_margin(
            hyper.PFQParams([1, 2, 3], [4, 5])))
        self.assertEqual(-1, hyper.convergence_margin(
            hyper.PFQParams([1, 1], [1])))

    def test_termination_index(self):
        params = hyper.PFQParams([-5, -2, 1], [3])
        self.assertEqual(2, hyper.termination_index(params,
                                                    self._precision))
        self.assertIsNone(hyper.termination_index(
            hyper.PFQParams(["0.5"], [2]), self._precision))

    def test_non_convergent(self):
        self.assertRaises(exception.NonConvergent, hyper.pfq_unit,
                          hyper.PFQParams([1, 1], [2]), self._precision)
        self.assertRaises(exception.NonConvergent, hyper.pfq_unit,
                          hyper.PFQParams([1, 1, 1], [2]), self._precision)

    def test_denominator_pole(self):
        self.assertRaises(exception.DenominatorPole, hyper.pfq_unit,
                          hyper.PFQParams([-3, 1], [-1]), self._precision)
        result = hyper.pfq_unit(hyper.PFQParams([-1, 1], [-2]),
                                self._precision)
        self._assert_close(mpmath.mpf("1.5"), result.value)

    def test_slow_convergence(self):
        result = hyper.pfq_unit(hyper.PFQParams(["0.5", "0.5"], ["1.04"]),
                                self._precision)
        self.assertIn(constant.FLAG_SLOW, result.flags)
        with self._precision.workdps():
            expected = mpmath.gamma(mpmath.mpf("1.04")) * mpmath.gamma(
                mpmath.mpf("0.04")) / mpmath.gamma(mpmath.mpf("0.54")) ** 2
        self._assert_close(expected, result.value, 1e-20)

    def test_small_margin_thomae(self):
        # 3F2(1.1, 1, 0.65; 1.2, 1.65 | 1) has margin 0.1; the Thomae
        # transformation maps it onto a series of margin 1.1.
        slow = hyper.pfq_unit(
            hyper.PFQParams(["1.1", 1, "0.65"], ["1.2", "1.65"]),
            self._precision)
        fast = hyper.pfq_unit(
            hyper.PFQParams(["0.1", "0.55", "0.1"], ["1.1", "0.75"]),
            self._precision)
        self.assertEqual("levin", slow.method)
        self.assertIn(constant.FLAG_ACCELERATED, slow.flags)
        self.assertLess(slow.terms, constant.LEVIN_TERMS)
        with self._precision.workdps():
            factor = (mpmath.gamma(mpmath.mpf("1.2")) *
                      mpmath.gamma(mpmath.mpf("1.65")) *
                      mpmath.gamma(mpmath.mpf("0.1")) /
                      (mpmath.gamma(mpmath.mpf("1.1")) ** 2 *
                       mpmath.gamma(mpmath.mpf("0.75"))))
            expected = factor * fast.value
        self._assert_close(expected, slow.value, 1e-18)

    def test_probe_feasible(self):
        self.assertFalse(hyper.probe_feasible(mpmath.mpf("0.5"),
                                              self._precision))
        self.assertTrue(hyper.probe_feasible(30, self._precision))

    def test_direct_large_margin(self):
        result = hyper.pfq_unit(hyper.PFQParams([1, 1], [40]),
                                self._precision)
        self.assertEqual("direct", result.method)
        self.assertNotIn(constant.FLAG_ACCELERATED, result.flags)
        with self._precision.workdps():
            expected = mpmath.mpf(39) / 38
        self._assert_close(expected, result.value, 1e-19)

    def test_geometric_tail(self):
        self.assertEqual(1, hyper.geometric_tail(1, mpmath.mpf("0.5")))
        self.assertIsNone(hyper.geometric_tail(1, 2))
        self.assertEqual(0, hyper.geometric_tail(0, 1))


class TestOuterSum(unittest.TestCase):

    def setUp(self):
        self._precision = numerics.Precision(digits=30)

    def test_terminating_outer(self):
        spec = hyper.OuterSumSpec(a=-1, b=2, c=3, d=5, x=7, y=11, z=13,
                                  e=0, f="0.5", w="1.5")
        result = hyper.outer_sum(spec, self._precision)
        with self._precision.workdps():
            self.assertLess(numerics.relative_error(
                result.value, mpmath.mpf(971) / 1001), 1e-25)

    def test_exchanged(self):
        a, b, c, d = "0.5", "0.25", "0.75", "1.5"
        x, y, z = "2.5", "3.25", "1.75"
        e, f, w = -1, "0.3", "2.2"
        spec = hyper.OuterSumSpec(a=a, b=b, c=c, d=d, x=x, y=y, z=z,
                                  e=e, f=f, w=w)
        result = hyper.outer_sum(spec, self._precision)
        with self._precision.workdps():
            a, b, c, d, x, y, z, f, w = (mpmath.mpf(item) for item in (
                a, b, c, d, x, y, z, f, w))
            expected = (mpmath.hyper([a, b, c, d], [x, y, z], 1) +
                        a * b * e * f / (w * x * y) *
                        mpmath.hyper([a + 1, b + 1, c, d],
                                     [x + 1, y + 1, z], 1))
            self.assertLess(numerics.relative_error(result.value, expected),
                            1e-25)

    def test_invalid_spec(self):
        spec = hyper.OuterSumSpec(a="0.5", b=2, c=3, d=5, x=7, y=11, z=13,
                                  e="0.5", f="0.5", w="1.5")
        self.assertRaises(exception.InvalidSpec, hyper.outer_sum, spec,
                          self._precision)
