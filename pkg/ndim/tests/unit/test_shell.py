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

import json
import os
import shutil
import tempfile
import unittest

import mock
import six

from ndim.common import constant
from ndim import shell
from ndim.verify import base as verify_base


class TestShell(unittest.TestCase):

    def setUp(self):
        patches = (
            mock.patch("ndim.shell.logging.setup"),
            mock.patch.dict(os.environ, {constant.DIGITS_ENV: "20"}),
        )
        for patch in patches:
            patch.start()
            self.addCleanup(patch.stop)

    def _main(self, *command_line):
        with mock.patch("sys.stdout", new_callable=six.StringIO) as stdout:
            status = shell.main(list(command_line))
        return status, stdout.getvalue()

    def _json(self, *command_line):
        status, output = self._main(*(command_line + ("--format", "json")))
        return status, json.loads(output)

    def test_eval_master(self):
        status, data = self._json("eval", "master", "--dim", "3.8")
        self.assertEqual(0, status)
        self.assertEqual("eval master", data["command"])
        self.assertEqual("3.8", data["result"]["D"])
        self.assertEqual(20, data["digits"])
        self.assertIsNone(data["error"])

    def test_eval_text(self):
        status, output = self._main("eval", "bubble", "--dim", "3")
        self.assertEqual(0, status)
        self.assertTrue(output.startswith("eval bubble (digits: 20)"))

    def test_missing_dimension(self):
        status, data = self._json("eval", "master")
        self.assertEqual(1, status)
        self.assertEqual("cli", data["error"]["category"])

    def test_outside_region(self):
        status, data = self._json("eval", "triangle", "--dim", "4.6",
                                  "--exponents=-1.1,-0.9,-1.2",
                                  "--q2", "4", "--r2", "0.09")
        self.assertEqual(1, status)
        self.assertEqual("outside-region", data["error"]["category"])

    def test_sweep(self):
        status, data = self._json("sweep", "master",
                                  "--points", "3.5,4.5")
        self.assertEqual(0, status)
        self.assertEqual(["3.5", "4.5"], [row["D"] for row in data["rows"]])
        self.assertEqual(2, len(data["comparisons"]))

    def test_sweep_only_poles(self):
        status, data = self._json("sweep", "threeloop",
                                  "--points", "4,2.5")
        self.assertEqual(0, status)
        self.assertEqual([], data["rows"])
        self.assertEqual(3, len(data["diagnostics"]["warnings"]))
        self.assertIn(constant.FLAG_POLE, data["diagnostics"]["flags"])

    def test_from_report(self):
        status, output = self._main("eval", "master", "--dim", "3.8",
                                    "--format", "json")
        self.assertEqual(0, status)
        directory = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, directory)
        path = os.path.join(directory, "master.json")
        with open(path, "w") as report_file:
            report_file.write(output)

        status, data = self._json("eval", "master", "--from-report", path)
        self.assertEqual(0, status)
        self.assertEqual(json.loads(output)["result"], data["result"])

    def test_from_report_other_command(self):
        status, output = self._main("eval", "bubble", "--dim", "3",
                                    "--format", "json")
        directory = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, directory)
        path = os.path.join(directory, "bubble.json")
        with open(path, "w") as report_file:
            report_file.write(output)

        status, data = self._json("eval", "master", "--from-report", path)
        self.assertEqual(1, status)
        self.assertEqual("cli", data["error"]["category"])

    @mock.patch("ndim.verify.suites.run_suite")
    def test_verify_failure(self, mock_run_suite):
        mock_run_suite.return_value = [
            verify_base.CheckResult("Passing", constant.CHECK_PASSED,
                                    cases=2),
            verify_base.CheckResult("Failing", constant.CHECK_FAILED,
                                    cases=1),
        ]
        status, data = self._json("verify", "master", "--seed", "3")
        self.assertEqual(1, status)
        self.assertEqual(["Passing", "Failing"],
                         [check["check"] for check in data["checks"]])
        mock_run_suite.assert_called_once_with("master", mock.ANY, mock.ANY)
