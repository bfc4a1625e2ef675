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

"""The `verify` command."""

from oslo_log import log as logging

from ndim.cli import base as cli_base
from ndim.common import constant
from ndim import config
from ndim.verify import base as verify_base
from ndim.verify import suites

CONFIG = config.CONFIG
LOG = logging.getLogger(__name__)

ALL = "all"


class Verify(cli_base.ReportCommand):

    """Run the numerical self-consistency suites."""

    command = "verify"
    inputs = ("suite", "seed")

    def setup(self):
        """Extend the parser configuration in order to expose this command."""
        parser = self._parser.add_parser(
            "verify", help="Run a verification suite.",
            parents=[cli_base.precision_arguments()])
        parser.add_argument(
            "suite", choices=sorted(suites.SUITES) + [ALL],
            help="The suite to run.")
        parser.add_argument(
            "--seed", dest="seed", type=int, default=None,
            help="The seed of the random samples.")
        parser.set_defaults(work=self.run)

    def _work(self):
        """Run the required suites and record every check."""
        settings = verify_base.Settings.from_config(CONFIG)
        if self.args.seed is not None:
            settings.seed = int(self.args.seed)

        names = (sorted(suites.SUITES) if self.args.suite == ALL
                 else [self.args.suite])
        for name in names:
            for result in suites.run_suite(name, self.run_config.precision,
                                           settings):
                self.report.add_check(result)
                if constant.FLAG_REDUCED_PRECISION in result.flags:
                    self.report.warn(
                        "%s ran with reduced precision (%d digits)." %
                        (result.name, self.run_config.precision.digits),
                        constant.FLAG_REDUCED_PRECISION)
        return self.report
