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

"""The `eval` command group and the diagrams it can evaluate."""

import abc

import mpmath
from oslo_log import log as logging
import six

from ndim.cli import base as cli_base
from ndim.common import exception
from ndim.common import util
from ndim.diagrams import master
from ndim.diagrams import threeloop
from ndim.diagrams import triangle

LOG = logging.getLogger(__name__)

CONTINUED = "continued"
LITERAL = "literal"

# name: (flags, keyword arguments of add_argument)
ARGUMENTS = {
    "dimension": (("--dim", ), {
        "dest": "dimension", "default": None,
        "help": "The space-time dimension D."}),
    "exponents": (("--exponents", ), {
        "dest": "exponents", "default": None,
        "help": "Comma separated propagator exponents: i,j,l for the "
                "triangle, g,h,i,j,l for the master and e,f,g,h,i,j for "
                "the three-loop diagram (default: all -1)."}),
    "e": (("--e", ), {
        "dest": "e", "default": "-1",
        "help": "The first exponent of the bubble."}),
    "f": (("--f", ), {
        "dest": "f", "default": "-1",
        "help": "The second exponent of the bubble."}),
    "representation": (("--rep", ), {
        "dest": "representation", "default": triangle.FOUR_TERM,
        "choices": triangle.REPRESENTATIONS,
        "help": "The representation of the triangle."}),
    "q2": (("--q2", ), {
        "dest": "q2", "default": None,
        "help": "The squared momentum q^2 of the triangle."}),
    "r2": (("--r2", ), {
        "dest": "r2", "default": None,
        "help": "The squared momentum (p - q)^2 of the triangle."}),
    "coefficients": (("--coefficients", ), {
        "dest": "coefficients", "default": None,
        "choices": (CONTINUED, LITERAL),
        "help": "Use the analytically continued or the literal "
                "coefficients."}),
    "form": (("--form", ), {
        "dest": "form", "default": None,
        "help": "series, closed or 2f1 for the master; composed or "
                "closed for the three-loop diagram."}),
}


def add_arguments(parser, names):
    """Expose the received entries of :data:`ARGUMENTS`."""
    for name in names:
        flags, options = ARGUMENTS[name]
        parser.add_argument(*flags, **options)


@six.add_metaclass(abc.ABCMeta)
class Target(object):

    """A diagram which can be evaluated at a given dimension.

    :ivar arguments: the names of :data:`ARGUMENTS` used by the target
    :ivar poles: dimensions left out of the sweeps
    """

    name = None
    arguments = ()
    poles = ()
    forms = ()

    def __init__(self, args, run_config):
        self._args = args
        self._run_config = run_config
        self._form = getattr(args, "form", None) or (
            self.forms[0] if self.forms else None)
        if self.forms and self._form not in self.forms:
            raise exception.Invalid(
                "The %(target)s accepts the forms %(forms)s, got "
                "%(form)r.", target=self.name,
                forms=", ".join(self.forms), form=self._form)

    @property
    def precision(self):
        return self._run_config.precision

    @property
    def continued(self):
        """None when the representation decides."""
        choice = getattr(self._args, "coefficients", None)
        if choice is None:
            return None
        return choice == CONTINUED

    def exponents(self, count):
        """The parsed exponents; all of them are -1 by default."""
        text = getattr(self._args, "exponents", None)
        if text is None:
            return [-1] * count
        with self.precision.workdps():
            return util.parse_numbers(text, count)

    @abc.abstractmethod
    def evaluate(self, dimension):
        """Return the :class:`ndim.diagrams.base.LoopValue` at D."""
        pass

    def reference(self, dimension):
        """An independent evaluation, as (oracle name, LoopValue)."""
        return None


class BubbleTarget(Target):

    name = "bubble"
    arguments = ("e", "f", "coefficients")

    def evaluate(self, dimension):
        continued = self.continued
        return master.bubble(self._args.e, self._args.f, dimension,
                             self.precision,
                             continued=True if continued is None
                             else continued)


class TriangleTarget(Target):

    name = "triangle"
    arguments = ("exponents", "representation", "q2", "r2",
                 "coefficients")

    def __init__(self, args, run_config):
        super(TriangleTarget, self).__init__(args, run_config)
        if args.q2 is None or args.r2 is None:
            raise exception.Invalid("The triangle needs both --q2 and "
                                    "--r2.")
        with self.precision.workdps():
            self._kinematics = triangle.Kinematics(run_config.p2, args.q2,
                                                   args.r2)
        self._exponents = triangle.TriangleExponents(*self.exponents(3))

    def evaluate(self, dimension):
        LOG.debug("Evaluating the %s triangle at %r.",
                  self._args.representation, self._kinematics)
        for term in triangle.region_report(
                self._kinematics, self._args.representation,
                self._exponents, dimension, self.precision):
            if not term.admissible:
                LOG.warning("Term %(position)d of the %(rep)s triangle is "
                            "outside the convergence region (x=%(x)s, "
                            "y=%(y)s).",
                            {"position": term.position,
                             "rep": self._args.representation,
                             "x": mpmath.nstr(term.x, 6),
                             "y": mpmath.nstr(term.y, 6)})
        return triangle.triangle(
            self._args.representation, self._exponents, self._kinematics,
            dimension, self.precision, continued=self.continued,
            pole_shift=self._run_config.pole_shift)


class MasterTarget(Target):

    name = "master"
    arguments = ("exponents", "form")
    forms = ("series", "closed", "2f1")

    def __init__(self, args, run_config):
        super(MasterTarget, self).__init__(args, run_config)
        self._exponents = master.MasterExponents(*self.exponents(5))
        self._scalar = all(value == -1
                           for value in self._exponents.as_tuple())
        if self._form != "series" and not self._scalar:
            raise exception.NotSupported(
                feature="The %s form" % self._form,
                context="exponents other than all -1")

    def evaluate(self, dimension):
        if self._form == "closed":
            return master.master_closed_form(dimension, self.precision)
        if self._form == "2f1":
            return master.master_2f1_form(dimension, self.precision)
        return master.assemble_master(self._exponents, dimension,
                                      self.precision)

    def reference(self, dimension):
        if self._form != "series" or not self._scalar:
            return None
        return ("closed form",
                master.master_closed_form(dimension, self.precision))


class ThreeLoopTarget(Target):

    name = "threeloop"
    arguments = ("exponents", "form")
    forms = ("composed", "closed")
    poles = threeloop.CLOSED_FORM_POLES

    def __init__(self, args, run_config):
        super(ThreeLoopTarget, self).__init__(args, run_config)
        self._exponents = threeloop.ThreeLoopExponents(*self.exponents(6))
        self._scalar = all(value == -1
                           for value in self._exponents.as_tuple())
        if self._form == "closed" and not self._scalar:
            raise exception.NotSupported(
                feature="The closed form",
                context="exponents other than all -1")

    def evaluate(self, dimension):
        if self._form == "closed":
            return threeloop.threeloop_closed_form(dimension,
                                                   self.precision)
        return threeloop.compose_threeloop(self._exponents, dimension,
                                           self.precision)

    def reference(self, dimension):
        if self._form != "composed" or not self._scalar:
            return None
        return ("closed form",
                threeloop.threeloop_closed_form(dimension, self.precision))


TARGETS = dict((target.name, target) for target in (
    BubbleTarget, TriangleTarget, MasterTarget, ThreeLoopTarget))


class _EvalCommand(cli_base.ReportCommand):

    """Evaluate a single diagram."""

    target = None

    @property
    def inputs(self):
        return ("dimension", ) + self.target.arguments

    @property
    def command(self):
        return "eval %s" % self.target.name

    def setup(self):
        """Extend the parser configuration in order to expose this command."""
        parser = self._parser.add_parser(
            self.target.name, help=self.__doc__,
            parents=[cli_base.precision_arguments()])
        add_arguments(parser, ("dimension", ) + self.target.arguments)
        parser.set_defaults(work=self.run)

    def _work(self):
        if self.args.dimension is None:
            raise exception.CliError("The --dim argument is required.")
        target = self.target(self.args, self.run_config)
        precision = self.run_config.precision
        with precision.workdps():
            dimension = util.to_mpf(self.args.dimension, "D")
            value = target.evaluate(dimension)
            self.report.set_result(value, dimension, precision)
        return self.report


class _Bubble(_EvalCommand):

    """Evaluate the one-loop bubble."""

    target = BubbleTarget


class _Triangle(_EvalCommand):

    """Evaluate the one-loop triangle."""

    target = TriangleTarget


class _Master(_EvalCommand):

    """Evaluate the two-loop master diagram."""

    target = MasterTarget


class _ThreeLoop(_EvalCommand):

    """Evaluate the three-loop diagram with an inserted bubble."""

    target = ThreeLoopTarget


class Evaluate(cli_base.Group):

    """Group for the evaluation of the diagrams."""

    commands = [
        (_Bubble, "targets"),
        (_Triangle, "targets"),
        (_Master, "targets"),
        (_ThreeLoop, "targets"),
    ]

    def setup(self):
        """Extend the parser configuration in order to expose this command."""
        parser = self._parser.add_parser(
            "eval", help="Evaluate a diagram at a given dimension.")
        targets = parser.add_subparsers(title="[targets]",
                                        dest="eval_target")
        self._register_parser("targets", targets)
