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


"""
Client base-classes:
    The contract that commands and parsers must follow, together with
    the run configuration shared by every command.
"""

from __future__ import print_function

import abc
import argparse
import os

from oslo_log import log as logging
import six

from ndim.cli import report
from ndim.common import constant
from ndim.common import exception
from ndim.common import util
from ndim import config
from ndim.special import numerics

CONFIG = config.CONFIG
LOG = logging.getLogger(__name__)


class RunConfig(object):

    """The precision and the output settings of a command.

    Precedence: command line flags, then the NDIM_DIGITS environment
    variable (digits only), then the config file and the defaults.
    """

    def __init__(self, digits, tolerance_exponent=None,
                 max_terms=constant.DEFAULT_MAX_TERMS,
                 guard_digits=constant.DEFAULT_GUARD_DIGITS,
                 pole_shift=constant.DEFAULT_POLE_SHIFT, p2="1",
                 output_format="text"):
        if output_format not in constant.OUTPUT_FORMATS:
            raise exception.Invalid("Unknown output format %(format)r.",
                                    format=output_format)
        self.precision = numerics.Precision(
            digits=digits, tolerance_exponent=tolerance_exponent,
            max_terms=max_terms, guard_digits=guard_digits)
        with self.precision.workdps():
            if util.to_mpf(p2, "p2") <= 0:
                raise exception.Invalid("p2 must be positive, got %(p2)s.",
                                        p2=p2)
            util.to_mpf(pole_shift, "pole shift")
        self.p2 = str(p2)
        self.pole_shift = str(pole_shift)
        self.output_format = output_format

    @classmethod
    def from_args(cls, args, conf=None, environ=None):
        """Merge the parsed arguments with the environment and the config."""
        conf = conf or CONFIG
        environ = os.environ if environ is None else environ

        digits = getattr(args, "digits", None)
        if digits is None and environ.get(constant.DIGITS_ENV):
            try:
                digits = int(environ[constant.DIGITS_ENV])
            except ValueError:
                raise exception.Invalid(
                    "%(name)s must be an integer, got %(value)r.",
                    name=constant.DIGITS_ENV,
                    value=environ[constant.DIGITS_ENV])
        if digits is None:
            digits = conf.precision.digits

        def pick(name, default):
            value = getattr(args, name, None)
            return default if value is None else value

        return cls(digits=digits,
                   tolerance_exponent=pick("tolerance_exponent",
                                           conf.precision.tolerance_exponent),
                   max_terms=pick("max_terms", conf.precision.max_terms),
                   guard_digits=conf.precision.guard_digits,
                   pole_shift=pick("pole_shift", conf.precision.pole_shift),
                   p2=pick("p2", conf.report.p2),
                   output_format=pick("output_format", conf.report.format))

    @classmethod
    def from_dict(cls, data, output_format=None):
        """Rebuild the configuration stored in a report."""
        try:
            return cls(digits=data["digits"],
                       tolerance_exponent=data["tolerance_exponent"],
                       max_terms=data["max_terms"],
                       guard_digits=data["guard_digits"],
                       pole_shift=data["pole_shift"], p2=data["p2"],
                       output_format=output_format or data["format"])
        except KeyError as exc:
            raise exception.Invalid("The report configuration lacks "
                                    "%(field)s.", field=exc)

    def to_dict(self):
        return {
            "digits": self.precision.digits,
            "tolerance_exponent": self.precision.tolerance_exponent,
            "max_terms": self.precision.max_terms,
            "guard_digits": self.precision.guard_digits,
            "pole_shift": self.pole_shift,
            "p2": self.p2,
            "format": self.output_format,
        }


def precision_arguments():
    """The parser holding the flags shared by all the commands."""
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group(
        "precision and output",
        "Flags take precedence over the %s environment variable, which "
        "takes precedence over the config file." % constant.DIGITS_ENV)
    group.add_argument(
        "--digits", dest="digits", type=int, default=None,
        help="Significant decimal digits of the results.")
    group.add_argument(
        "--tol-exp", dest="tolerance_exponent", type=int, default=None,
        help="The series are truncated at 10 ** TOL_EXP.")
    group.add_argument(
        "--max-terms", dest="max_terms", type=int, default=None,
        help="The maximum number of terms of a single series.")
    group.add_argument(
        "--pole-shift", dest="pole_shift", default=None,
        help="The shift used to approach integer exponents at a pole.")
    group.add_argument(
        "--p2", dest="p2", default=None,
        help="The external momentum squared of the reported value.")
    group.add_argument(
        "--format", dest="output_format", default=None,
        choices=constant.OUTPUT_FORMATS,
        help="The format of the report.")
    group.add_argument(
        "--from-report", dest="from_report", default=None,
        help="Reuse the inputs and the configuration of a JSON report.")
    return parser


@six.add_metaclass(abc.ABCMeta)
class Task(object):

    """Something the command line can run and report on."""

    def __init__(self):
        self._name = self.__class__.__name__

    @property
    def name(self):
        return self._name

    @abc.abstractmethod
    def setup(self):
        """Register the arguments of this task on its parser."""
        pass

    @abc.abstractmethod
    def _on_task_done(self, result):
        pass

    @abc.abstractmethod
    def _on_task_fail(self, exc):
        pass

    def _prologue(self):
        """Hook run before :meth:`_work`."""
        pass

    @abc.abstractmethod
    def _work(self):
        """Do the actual work and return its result."""
        pass

    def _epilogue(self):
        """Hook run after a successful :meth:`_work`."""
        pass

    def run(self):
        """Run the task and dispatch its outcome to the callbacks.

        Only :class:`NdimException` is turned into a failure; anything
        else propagates to the caller.
        """
        result = None
        try:
            self._prologue()
            result = self._work()
            self._epilogue()
        except exception.NdimException as exc:
            self._on_task_fail(exc)
        else:
            self._on_task_done(result)
        return result


@six.add_metaclass(abc.ABCMeta)
class Command(Task):

    """A task bound to a subparser of a :class:`Group`.

    The parsed arguments and the raw command line are looked up on the
    ancestors the first time they are needed.
    """

    def __init__(self, parent, parser):
        super(Command, self).__init__()
        self._args = None
        self._command_line = None
        self._parent = parent
        self._parser = parser

        self.setup()

    @property
    def args(self):
        if self._args is None:
            self._args = util.get_attribute(self.parent, "args")
        return self._args

    @property
    def command_line(self):
        if self._command_line is None:
            self._command_line = util.get_attribute(self.parent,
                                                    "command_line")
        return self._command_line

    @property
    def parent(self):
        return self._parent

    def _notify(self, hook, payload):
        try:
            callback = util.get_attribute(self.parent, hook)
        except exception.NdimException:
            LOG.debug("%(command)s: nobody listens for %(hook)s.",
                      {"command": self.name, "hook": hook})
        else:
            callback(self, payload)

    def _on_task_done(self, result):
        self._notify("on_task_done", result)

    def _on_task_fail(self, exc):
        self._notify("on_task_fail", exc)


@six.add_metaclass(abc.ABCMeta)
class ReportCommand(Command):

    """A command whose result is a :class:`report.Report`.

    :ivar command: the name recorded in the report
    :ivar inputs: the argument names echoed in the report; a report
        passed through --from-report restores them
    """

    command = None
    inputs = ()

    def __init__(self, parent, parser):
        super(ReportCommand, self).__init__(parent, parser)
        self._run_config = None
        self._report = None

    @property
    def run_config(self):
        """The :class:`RunConfig` of the current invocation."""
        return self._run_config

    @property
    def report(self):
        return self._report

    def _prologue(self):
        """Merge the configuration sources and start the report."""
        super(ReportCommand, self)._prologue()
        stored = getattr(self.args, "from_report", None)
        if stored:
            data = report.load(stored)
            if data.get("command") != self.command:
                raise exception.CliError(
                    "The report %(path)s was written by %(found)r, not "
                    "by %(expected)r.", path=stored,
                    found=data.get("command"), expected=self.command)
            for name, value in data.get("inputs", {}).items():
                setattr(self.args, name, value)
            self._run_config = RunConfig.from_dict(
                data.get("config", {}),
                getattr(self.args, "output_format", None))
            LOG.info("Reusing the inputs of %s.", stored)
        else:
            self._run_config = RunConfig.from_args(self.args)

        self._report = report.Report(
            self.command,
            inputs=dict((name, getattr(self.args, name, None))
                        for name in self.inputs),
            config=self._run_config.to_dict())

    def _output_format(self):
        if self._run_config is not None:
            return self._run_config.output_format
        return getattr(self.args, "output_format", None) or "text"

    def _on_task_done(self, result):
        print(result.render(self._output_format()))
        super(ReportCommand, self)._on_task_done(result)

    def _on_task_fail(self, exc):
        failure = self._report or report.Report(self.command)
        failure.fail(exc)
        print(failure.render(self._output_format()))
        super(ReportCommand, self)._on_task_fail(exc)


@six.add_metaclass(abc.ABCMeta)
class Group(object):

    """A node of the command tree.

    :ivar commands: ``(command_class, parser_name)`` pairs; every class
        is instantiated on the parser registered under that name by
        :meth:`setup`.
    """

    commands = None

    def __init__(self, parent, parser):
        super(Group, self).__init__()
        self._parent = parent
        self._parser = parser
        self._parsers = {}
        self._children = []

        self.setup()
        self._bind_commands()

    @property
    def parent(self):
        return self._parent

    @classmethod
    def check_command(cls, command):
        return issubclass(command, (Command, Group))

    def _bind_commands(self):
        for command, parser_name in self.commands or ():
            if self.check_command(command):
                self.bind(command, parser_name)
            else:
                LOG.warning("%(group)s: %(command)r is not a command.",
                            {"group": self.__class__.__name__,
                             "command": command})

    def _register_parser(self, name, parser):
        self._parsers[name] = parser

    def _get_parser(self, name):
        try:
            return self._parsers[name]
        except KeyError:
            raise exception.Invalid("No parser registered as %(name)r.",
                                    name=name)

    def bind(self, command, parser_name):
        """Instantiate ``command`` on the parser named ``parser_name``."""
        self._children.append(command(self, self._get_parser(parser_name)))

    def on_task_done(self, task, result):
        self.parent.on_task_done(task, result)

    def on_task_fail(self, task, exc):
        self.parent.on_task_fail(task, exc)

    @abc.abstractmethod
    def setup(self):
        """Register the subparsers named in :attr:`commands`."""
        pass


class Application(Group, Task):

    """The root of the command tree.

    The status of the application follows the first command which
    reports its outcome.
    """

    def __init__(self, command_line):
        super(Application, self).__init__(parent=None, parser=None)
        self._args = None
        self._command_line = command_line
        self._status = constant.TASK_RUNNING
        self._result = None

    @property
    def args(self):
        return self._args

    @property
    def command_line(self):
        return self._command_line

    @property
    def status(self):
        """One of the ``constant.TASK_*`` states."""
        return self._status

    @property
    def result(self):
        """The report of the command, or the exception which stopped it."""
        return self._result

    def on_task_done(self, task, result):
        self._result = result
        self._status = constant.TASK_DONE
        LOG.debug("%(command)s finished.", {"command": task.name})

    def on_task_fail(self, task, exc):
        self._result = exc
        self._status = constant.TASK_FAILED
        LOG.error("%(command)s failed: %(reason)s",
                  {"command": task.name, "reason": exc})

    @abc.abstractmethod
    def setup(self):
        pass

    def _on_task_done(self, result):
        if self._status == constant.TASK_RUNNING:
            self.on_task_done(self, result)

    def _on_task_fail(self, exc):
        if self._status == constant.TASK_RUNNING:
            self.on_task_fail(self, exc)

    def _prologue(self):
        super(Application, self)._prologue()
        self._args = self._parser.parse_args(self.command_line)

    def _work(self):
        """Run the handler selected by the command line."""
        if not self.args:
            raise exception.CliError("No command line arguments were "
                                     "provided.")

        work_function = getattr(self.args, "work", None)
        if not work_function:
            raise exception.CliError("No command was selected.")

        return work_function()
