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

"""Contract of the numerical checks and of the suites grouping them."""

import abc
import random
import time

import mpmath
from oslo_log import log as logging
import six

from ndim.common import constant
from ndim.common import exception
from ndim.special import numerics

LOG = logging.getLogger(__name__)

# Errors which mean that a case does not satisfy the preconditions of
# the evaluated expression.
PRECONDITION_ERRORS = (
    exception.NonConvergent,
    exception.InvalidSpec,
    exception.DenominatorPole,
    exception.OutsideRegion,
    exception.PoleError,
    exception.NonIntegerPhase,
)


class Settings(object):

    """The sample sizes and the seed of the verification suites."""

    def __init__(self, seed=1729, pochhammer_samples=10000,
                 gauss_samples=200, coalesce_samples=100,
                 representation_samples=50, master_grid=10,
                 threeloop_grid=8):
        self.seed = seed
        self.pochhammer_samples = pochhammer_samples
        self.gauss_samples = gauss_samples
        self.coalesce_samples = coalesce_samples
        self.representation_samples = representation_samples
        self.master_grid = master_grid
        self.threeloop_grid = threeloop_grid

    @classmethod
    def from_config(cls, config):
        """Build the settings from the `verify` config group."""
        options = config.verify
        return cls(seed=options.seed,
                   pochhammer_samples=options.pochhammer_samples,
                   gauss_samples=options.gauss_samples,
                   coalesce_samples=options.coalesce_samples,
                   representation_samples=options.representation_samples,
                   master_grid=options.master_grid,
                   threeloop_grid=options.threeloop_grid)


class CheckResult(object):

    """The outcome of a single check."""

    def __init__(self, name, status, cases=0, skipped=0, worst_error=None,
                 tolerance=None, details=None, flags=(), elapsed=0.0):
        self.name = name
        self.status = status
        self.cases = cases
        self.skipped = skipped
        self.worst_error = worst_error
        self.tolerance = tolerance
        self.details = details or []
        self.flags = frozenset(flags)
        self.elapsed = elapsed

    @property
    def passed(self):
        return self.status != constant.CHECK_FAILED

    def __repr__(self):
        return "<CheckResult %s: %s (%d cases, %d skipped)>" % (
            self.name, self.status, self.cases, self.skipped)


@six.add_metaclass(abc.ABCMeta)
class Check(object):

    """Contract class for all the numerical checks.

    Subclasses implement :meth:`_work`, which records the compared
    cases through :meth:`compare` and :meth:`skip`.
    """

    description = None

    def __init__(self, precision, settings):
        self._name = self.__class__.__name__
        self._precision = precision
        self._settings = settings
        self._random = random.Random(settings.seed)
        self._cases = 0
        self._skipped = 0
        self._failures = []
        self._worst = mpmath.mpf(0)
        self._flags = set()
        self._details = []
        self._tolerance = None

    @property
    def name(self):
        """The name of the current check."""
        return self._name

    @property
    def precision(self):
        return self._precision

    @property
    def settings(self):
        return self._settings

    @property
    def tolerance(self):
        """The relative error accepted by the check."""
        return self._tolerance or self._precision.agreement_tolerance

    def uniform(self, low, high):
        """A random real number in [low, high)."""
        return mpmath.mpf(low) + (mpmath.mpf(high) - mpmath.mpf(low)) * \
            mpmath.mpf(self._random.random())

    def integer(self, low, high):
        """A random integer in [low, high]."""
        return self._random.randint(low, high)

    def compare(self, value, reference, case, tolerance=None):
        """Record the relative error between two values."""
        tolerance = tolerance or self.tolerance
        error = numerics.relative_error(value, reference, self._precision)
        self._cases += 1
        if error > self._worst:
            self._worst = error
        if error > tolerance:
            self._failures.append(case)
            LOG.warning("%(check)s: %(case)s differs by %(error)s.",
                        {"check": self.name, "case": case,
                         "error": mpmath.nstr(error, 5)})
        return error <= tolerance

    def assert_true(self, condition, case):
        """Record a case whose outcome is a boolean."""
        self._cases += 1
        if not condition:
            self._failures.append(case)
            LOG.warning("%(check)s: %(case)s failed.",
                        {"check": self.name, "case": case})
        return condition

    def fail(self, case, exc):
        """Record a case whose evaluation raised an unexpected error."""
        self._cases += 1
        self._failures.append(case)
        self._details.append("error %s: %s" % (case, exc))
        LOG.warning("%(check)s: %(case)s raised %(error)s",
                    {"check": self.name, "case": case, "error": exc})

    def skip(self, case, reason):
        """Record a case which does not satisfy the preconditions."""
        self._skipped += 1
        self._details.append("skipped %s: %s" % (case, reason))
        LOG.info("%(check)s: skipped %(case)s (%(reason)s).",
                 {"check": self.name, "case": case, "reason": reason})

    def note(self, message, flag=None):
        """Attach a remark to the result."""
        self._details.append(message)
        if flag:
            self._flags.add(flag)

    def _status(self):
        if self._failures:
            return constant.CHECK_FAILED
        if self._cases == 0:
            return constant.CHECK_SKIPPED
        return constant.CHECK_PASSED

    @abc.abstractmethod
    def _work(self):
        """Override this with the compared cases."""
        pass

    def run(self):
        """Run the check and return its :class:`CheckResult`."""
        started = time.time()
        with self._precision.workdps():
            try:
                self._work()
            except exception.NdimException as exc:
                LOG.error("%(check)s aborted: %(reason)s",
                          {"check": self.name, "reason": exc})
                self._failures.append("aborted")
                self._details.append("aborted: %s" % exc)

        details = self._details + ["failed %s" % case
                                   for case in self._failures[:10]]
        result = CheckResult(self.name, self._status(), cases=self._cases,
                             skipped=self._skipped, worst_error=self._worst,
                             tolerance=self.tolerance, details=details,
                             flags=self._flags,
                             elapsed=time.time() - started)
        LOG.info("%(check)s: %(status)s, %(cases)d cases, worst error "
                 "%(error)s.", {"check": self.name, "status": result.status,
                                "cases": result.cases,
                                "error": mpmath.nstr(self._worst, 5)})
        return result


class Suite(object):

    """A named collection of :class:`Check` classes."""

    def __init__(self, name, checks, description=""):
        self.name = name
        self.checks = list(checks)
        self.description = description

    def run(self, precision, settings):
        """Run every check of the suite.

        :returns: a list of :class:`CheckResult`
        """
        LOG.info("Running the %(suite)s suite (%(count)d checks).",
                 {"suite": self.name, "count": len(self.checks)})
        return [check(precision, settings).run() for check in self.checks]
