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

"""Appell F4 double series summed along anti-diagonals."""

import mpmath
from oslo_log import log as logging

from ndim.common import constant
from ndim.common import exception
from ndim.common import util
from ndim.special import hyper
from ndim.special import numerics

LOG = logging.getLogger(__name__)


class F4Params(object):

    """Parameters of F4(alpha, beta; gamma1, gamma2 | x, y)."""

    def __init__(self, alpha, beta, gamma1, gamma2, x, y):
        self.alpha = util.to_mpf(alpha, "alpha")
        self.beta = util.to_mpf(beta, "beta")
        self.gamma1 = util.to_mpf(gamma1, "gamma1")
        self.gamma2 = util.to_mpf(gamma2, "gamma2")
        self.x = util.to_mpf(x, "x")
        self.y = util.to_mpf(y, "y")

    def swapped(self):
        """The same series with the two variables exchanged."""
        return F4Params(self.alpha, self.beta, self.gamma2, self.gamma1,
                        self.y, self.x)

    def __repr__(self):
        return "F4(%s, %s; %s, %s | %s, %s)" % tuple(
            mpmath.nstr(item, 8) for item in (
                self.alpha, self.beta, self.gamma1, self.gamma2,
                self.x, self.y))


def in_region(x, y):
    """Whether sqrt|x| + sqrt|y| < 1."""
    return mpmath.sqrt(abs(x)) + mpmath.sqrt(abs(y)) < 1


def termination_index(params, precision):
    """The last anti-diagonal with non-zero terms, or None."""
    return hyper.termination_index(
        hyper.PFQParams([params.alpha, params.beta], []), precision)


def _check_denominator(gamma, variable, limit, params, precision):
    """Raise if (gamma)_a vanishes on a reached, non-zero term."""
    if variable == 0:
        return
    nearest = numerics.nearest_integer(gamma, precision)
    if nearest is not None and nearest <= 0 and (
            limit is None or -nearest < limit):
        raise exception.DenominatorPole(parameter=gamma, series=params,
                                        term=-nearest)


class _Weights(object):

    """The lazily extended sequence v^k / ((g)_k k!)."""

    def __init__(self, gamma, variable):
        self._gamma = gamma
        self._variable = variable
        self._values = [mpmath.mpf(1)]

    def __getitem__(self, index):
        while len(self._values) <= index:
            k = len(self._values) - 1
            self._values.append(self._values[k] * self._variable /
                                ((self._gamma + k) * (k + 1)))
        return self._values[index]


def anti_diagonals(params, precision):
    """Yield the sums of the terms with a + b = n, for n = 0, 1, ...

    The generator never stops by itself; the caller decides how many
    anti-diagonals are needed.
    """
    first = _Weights(params.gamma1, params.x)
    second = _Weights(params.gamma2, params.y)
    outer = mpmath.mpf(1)
    index = 0
    while True:
        diagonal = mpmath.fsum(first[a] * second[index - a]
                               for a in range(index + 1))
        yield outer * diagonal
        outer *= ((params.alpha + index) * (params.beta + index))
        index += 1


def f4(params, precision, context="F4"):
    """Evaluate the Appell F4 function.

    Terminating series (alpha or beta a non-positive integer) are summed
    exactly for every x, y. The infinite ones need sqrt|x| + sqrt|y| < 1
    and stop when three consecutive anti-diagonals are below the
    truncation tolerance and the geometric bound of the tail is too.

    :returns: a :class:`hyper.SeriesValue`, `terms` counts anti-diagonals
    """
    with precision.workdps():
        count = termination_index(params, precision)
        _check_denominator(params.gamma1, params.x, count, params,
                           precision)
        _check_denominator(params.gamma2, params.y, count, params,
                           precision)

        if count is not None:
            if count > precision.max_terms:
                raise exception.MaxTermsExceeded(
                    series=params, max_terms=precision.max_terms)
            total = mpmath.mpf(0)
            for index, diagonal in enumerate(anti_diagonals(params,
                                                            precision)):
                total += diagonal
                if index >= count:
                    break
            return hyper.SeriesValue(total, terms=count + 1)

        if not in_region(params.x, params.y):
            raise exception.OutsideRegion(x=params.x, y=params.y,
                                          context=context)

        tolerance = precision.truncation_tolerance
        total = mpmath.mpf(0)
        previous = None
        small_terms = 0
        for index, diagonal in enumerate(anti_diagonals(params, precision)):
            if index >= precision.max_terms:
                raise exception.MaxTermsExceeded(
                    series=params, max_terms=precision.max_terms)
            total += diagonal
            if abs(diagonal) <= tolerance * abs(total):
                small_terms += 1
            else:
                small_terms = 0
            if small_terms >= constant.STOP_RUN and previous is not None:
                tail = hyper.geometric_tail(previous, diagonal)
                if tail is not None and tail <= tolerance * abs(total):
                    return hyper.SeriesValue(total, terms=index + 1,
                                             tail_bound=tail)
            previous = diagonal
