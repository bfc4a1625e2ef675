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

from ndim.common import exception


class TestNdimException(unittest.TestCase):

    def test_template_formatting(self):
        exc = exception.PoleError(argument=-2, context="prefactor")
        self.assertEqual("Pole of the gamma function at -2 (prefactor).",
                         str(exc))
        self.assertEqual({"argument": -2, "context": "prefactor"},
                         exc.kwargs)

    def test_custom_message(self):
        exc = exception.Invalid("%(name)s is wrong", name="D")
        self.assertEqual("D is wrong", str(exc))

    def test_missing_kwargs(self):
        exc = exception.NonConvergent(series="2F1(1, 1; 2)")
        self.assertIn("Extra or missing info", str(exc))

    def test_categories(self):
        self.assertEqual("outside-region", exception.OutsideRegion.category)
        self.assertEqual("double-pole", exception.DoublePole.category)
        self.assertTrue(issubclass(exception.NearPole,
                                   exception.PoleError))
        self.assertTrue(issubclass(exception.InvalidPrecision,
                                   exception.Invalid))
