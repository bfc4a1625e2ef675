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

import argparse
import unittest

import mock

from ndim.cli import base
from ndim.common import constant
from ndim.common import exception


def _conf():
    conf = mock.Mock()
    conf.precision.digits = 30
    conf.precision.tolerance_exponent = None
    conf.precision.max_terms = 5000
    conf.precision.guard_digits = 10
    conf.precision.pole_shift = "1e-3"
    conf.report.p2 = "1"
    conf.report.format = "text"
    return conf


def _args(**kwargs):
    return argparse.Namespace(**kwargs)


class TestRunConfig(unittest.TestCase):

    def test_flag_wins(self):
        run_config = base.RunConfig.from_args(
            _args(digits=25, output_format="json"), _conf(),
            {constant.DIGITS_ENV: "40"})
        self.assertEqual(25, run_config.precision.digits)
        self.assertEqual("json", run_config.output_format)
        self.assertEqual(5000, run_config.precision.max_terms)

    def test_environment(self):
        run_config = base.RunConfig.from_args(
            _args(digits=None), _conf(), {constant.DIGITS_ENV: "40"})
        self.assertEqual(40, run_config.precision.digits)

    def test_config(self):
        run_config = base.RunConfig.from_args(_args(), _conf(), {})
        self.assertEqual(30, run_config.precision.digits)
        self.assertEqual(10, run_config.precision.guard_digits)
        self.assertEqual("text", run_config.output_format)
        self.assertEqual("1", run_config.p2)

    def test_invalid_environment(self):
        self.assertRaises(exception.Invalid, base.RunConfig.from_args,
                          _args(), _conf(), {constant.DIGITS_ENV: "many"})

    def test_invalid_values(self):
        self.assertRaises(exception.Invalid, base.RunConfig, 30, p2="-1")
        self.assertRaises(exception.Invalid, base.RunConfig, 30,
                          output_format="xml")
        self.assertRaises(exception.InvalidPrecision, base.RunConfig, 5)

    def test_dict(self):
        run_config = base.RunConfig(30, tolerance_exponent=-15, p2="2",
                                    output_format="csv")
        data = run_config.to_dict()
        self.assertEqual(30, data["digits"])
        self.assertEqual("csv", data["format"])

        restored = base.RunConfig.from_dict(data, "json")
        self.assertEqual(run_config.precision, restored.precision)
        self.assertEqual("2", restored.p2)
        self.assertEqual("json", restored.output_format)

    def test_incomplete_dict(self):
        self.assertRaises(exception.Invalid, base.RunConfig.from_dict,
                          {"digits": 30})


class TestPrecisionArguments(unittest.TestCase):

    def test_parse(self):
        parser = argparse.ArgumentParser(
            parents=[base.precision_arguments()])
        args = parser.parse_args(["--digits", "40", "--tol-exp", "-35",
                                  "--format", "csv"])
        self.assertEqual(40, args.digits)
        self.assertEqual(-35, args.tolerance_exponent)
        self.assertEqual("csv", args.output_format)
        self.assertIsNone(args.from_report)
