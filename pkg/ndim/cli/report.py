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

"""The machine-readable record of a command and its renderers."""

import csv
import json

import mpmath
from oslo_log import log as logging
import prettytable
import six

from ndim.common import constant
from ndim.common import exception
from ndim.common import util
from ndim.special import numerics

LOG = logging.getLogger(__name__)

CHECK_COLUMNS = ("check", "status", "cases", "skipped", "worst_error",
                 "tolerance")
ERROR_COLUMNS = ("category", "message")
RESULT_COLUMNS = constant.SWEEP_COLUMNS + ("p2", "value")


class Report(object):

    """The outcome of a command.

    Every real number is stored as a decimal string with `digits`
    significant digits.

    :param command: the name of the command, for example "eval master"
    :param inputs: the raw command line inputs, used by --from-report
    :param config: the :meth:`RunConfig.to_dict` of the command
    """

    def __init__(self, command, inputs=None, config=None):
        self.command = command
        self.inputs = dict(inputs or {})
        self.config = dict(config or {})
        self.digits = self.config.get("digits", constant.DEFAULT_DIGITS)
        self.result = None
        self.rows = []
        self.checks = []
        self.comparisons = []
        self.flags = set()
        self.warnings = []
        self.terms = 0
        self.error = None

    @property
    def failed(self):
        """Whether the command failed or one of its checks did."""
        if self.error is not None:
            return True
        return any(check["status"] == constant.CHECK_FAILED
                   for check in self.checks)

    def _number(self, value):
        return util.format_number(value, self.digits)

    def _value_fields(self, loop_value, dimension, precision):
        with precision.workdps():
            coefficient = loop_value.coefficient.value()
            return {
                "D": self._number(dimension),
                "coefficient": self._number(coefficient),
                "pi_exponent": self._number(
                    loop_value.pi_exponent.evaluate(dimension)),
                "p2_exponent": self._number(
                    loop_value.p2_exponent.evaluate(dimension)),
                "terms": str(loop_value.terms),
                "tail_bound": self._number(loop_value.tail_bound),
                "flags": ";".join(sorted(loop_value.flags)),
            }

    def set_result(self, loop_value, dimension, precision):
        """Record the value of an evaluated diagram."""
        self.result = self._value_fields(loop_value, dimension, precision)
        p2 = self.config.get("p2", "1")
        self.result["p2"] = p2
        self.result["value"] = self._number(
            loop_value.value(dimension, p2, precision))
        self.flags |= loop_value.flags
        self.terms += loop_value.terms

    def add_row(self, dimension, loop_value, precision, flags=()):
        """Record one point of a sweep; failed points carry only flags."""
        if loop_value is None:
            row = dict.fromkeys(constant.SWEEP_COLUMNS, "")
            row["D"] = self._number(dimension)
            row["terms"] = "0"
        else:
            row = self._value_fields(loop_value, dimension, precision)
            self.terms += loop_value.terms
        row_flags = set(flag for flag in row["flags"].split(";") if flag)
        row_flags.update(flags)
        row["flags"] = ";".join(sorted(row_flags))
        self.flags |= row_flags
        self.rows.append(row)

    def add_check(self, result):
        """Record a :class:`ndim.verify.base.CheckResult`."""
        self.checks.append({
            "check": result.name,
            "status": result.status,
            "cases": str(result.cases),
            "skipped": str(result.skipped),
            "worst_error": (None if result.worst_error is None else
                            mpmath.nstr(result.worst_error, 5)),
            "tolerance": (None if result.tolerance is None else
                          mpmath.nstr(result.tolerance, 5)),
            "details": list(result.details),
            "flags": sorted(result.flags),
        })
        self.flags |= result.flags

    def add_comparison(self, name, value, reference, precision, **extra):
        """Record the relative error between a value and an oracle."""
        error = numerics.relative_error(value, reference, precision)
        comparison = {"oracle": name,
                      "relative_error": mpmath.nstr(error, 5)}
        comparison.update(extra)
        self.comparisons.append(comparison)
        return error

    def warn(self, message, flag=None):
        """Attach a warning, which never changes the exit status."""
        LOG.warning(message)
        self.warnings.append(message)
        if flag:
            self.flags.add(flag)

    def fail(self, exc):
        """Record the error which stopped the command."""
        self.error = {
            "category": getattr(exc, "category", "error"),
            "message": six.text_type(exc),
        }

    def to_dict(self):
        return {
            "schema_version": constant.SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "config": self.config,
            "digits": self.digits,
            "result": self.result,
            "rows": self.rows,
            "checks": self.checks,
            "comparisons": self.comparisons,
            "diagnostics": {
                "terms": self.terms,
                "flags": sorted(self.flags),
                "warnings": self.warnings,
            },
            "error": self.error,
        }

    def _table(self):
        """The columns and the rows of the tabular renderers."""
        if self.error is not None:
            return ERROR_COLUMNS, [self.error]
        if self.checks:
            return CHECK_COLUMNS, self.checks
        if self.result is not None:
            return RESULT_COLUMNS, [self.result]
        return constant.SWEEP_COLUMNS, self.rows

    def render(self, output_format):
        """Return the report in the received format."""
        if output_format == "json":
            return json.dumps(self.to_dict(), indent=2, sort_keys=True)

        columns, rows = self._table()
        if output_format == "csv":
            stream = six.StringIO()
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(columns)
            for row in rows:
                writer.writerow([row.get(column) or "" for column in columns])
            return stream.getvalue()

        if output_format == "text":
            table = prettytable.PrettyTable(list(columns))
            for row in rows:
                table.add_row([row.get(column) or "" for column in columns])
            lines = ["%s (digits: %d)" % (self.command, self.digits),
                     table.get_string()]
            lines.extend("warning: %s" % message
                         for message in self.warnings)
            return "\n".join(lines)

        raise exception.NotSupported(feature="The %r format" % output_format,
                                     context="the reports")


def load(path):
    """Read a JSON report written by a previous command."""
    try:
        with open(path) as report_file:
            data = json.load(report_file)
    except (IOError, OSError, ValueError) as exc:
        raise exception.Invalid("Can not read the report %(path)s: "
                                "%(reason)s", path=path, reason=exc)

    version = data.get("schema_version")
    if version != constant.SCHEMA_VERSION:
        raise exception.NotSupported(
            feature="The report schema %r" % version,
            context="schema version %d" % constant.SCHEMA_VERSION)
    return data
