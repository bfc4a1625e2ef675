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

"""The `sweep` command: a diagram over a grid of dimensions."""

import itertools

import mpmath
from oslo_log import log as logging

from ndim.cli import base as cli_base
from ndim.cli.commands import evaluate
from ndim.common import constant
from ndim.common import exception
from ndim.common import util

LOG = logging.getLogger(__name__)


class Sweep(cli_base.ReportCommand):

    """Evaluate a diagram on every point of a grid of dimensions."""

    command = "sweep"
    inputs = ("target", "grid", "points") + tuple(
        sorted(set(itertools.chain.from_iterable(
            target.arguments for target in evaluate.TARGETS.values()))))

    def setup(self):
        """Extend the parser configuration in order to expose this command."""
        parser = self._parser.add_parser(
            "sweep", help="Evaluate a diagram over a grid of dimensions.",
            parents=[cli_base.precision_arguments()])
        parser.add_argument(
            "target", choices=sorted(evaluate.TARGETS),
            help="The diagram to evaluate.")
        parser.add_argument(
            "--grid", dest="grid", default=None,
            help="Equally spaced dimensions as start:stop:count.")
        parser.add_argument(
            "--points", dest="points", default=None,
            help="Comma separated dimensions.")
        evaluate.add_arguments(parser, [name for name in self.inputs
                                        if name in evaluate.ARGUMENTS])
        parser.set_defaults(work=self.run)

    def _grid(self):
        if self.args.grid is not None:
            return util.parse_grid(self.args.grid)
        if self.args.points is not None:
            return util.parse_numbers(self.args.points, name="points")
        raise exception.CliError("The sweep needs --grid or --points.")

    def _work(self):
        """Compute the rows in grid order."""
        target = evaluate.TARGETS[self.args.target](self.args,
                                                    self.run_config)
        precision = self.run_config.precision
        radius = mpmath.mpf(constant.NEAR_POLE_RADIUS)
        with precision.workdps():
            grid = []
            for dimension in self._grid():
                if any(abs(dimension - pole) < radius
                       for pole in target.poles):
                    self.report.warn("D = %s is a pole of the %s, skipped." %
                                     (mpmath.nstr(dimension, 10),
                                      target.name), constant.FLAG_POLE)
                    continue
                grid.append(dimension)

            if not grid:
                self.report.warn("The grid is empty.")
                return self.report

            for dimension in grid:
                self._row(target, dimension, precision)
        return self.report

    def _row(self, target, dimension, precision):
        try:
            value = target.evaluate(dimension)
        except exception.NdimException as exc:
            LOG.warning("D = %(dimension)s failed: %(reason)s",
                        {"dimension": mpmath.nstr(dimension, 10),
                         "reason": exc})
            self.report.add_row(dimension, None, precision,
                                flags=[exc.category])
            return
        self.report.add_row(dimension, value, precision)

        try:
            reference = target.reference(dimension)
        except exception.NdimException as exc:
            LOG.info("No reference at D = %(dimension)s: %(reason)s",
                     {"dimension": mpmath.nstr(dimension, 10),
                      "reason": exc})
            return
        if reference is not None:
            oracle, other = reference
            self.report.add_comparison(
                oracle, value.coefficient.value(),
                other.coefficient.value(), precision,
                D=util.format_number(dimension, precision.digits))
