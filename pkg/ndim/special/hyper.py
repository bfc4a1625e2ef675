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

"""Generalized hypergeometric series at unit argument."""

import mpmath
from oslo_log import log as logging

from ndim.common import constant
from ndim.common import exception
from ndim.common import util
from ndim.special import numerics

LOG = logging.getLogger(__name__)


class SeriesValue(object):

    """The value of a series together with its diagnostics.

    :param value: the sum, as an mpmath real
    :param terms: the number of summed terms
    :param tail_bound: the estimated size of the neglected tail
    :param flags: labels such as "accelerated" or "slow-convergence"
    :param method: how the value was obtained
    """

    def __init__(self, value, terms=0, tail_bound=0, flags=(),
                 method="direct"):
        self.value = value
        self.terms = terms
        self.tail_bound = tail_bound
        self.flags = frozenset(flags)
        self.method = method

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return ("SeriesValue(%s, terms=%d, method=%s)" %
                (mpmath.nstr(self.value, 20), self.terms, self.method))


class PFQParams(object):

    """The parameters of a pFq series evaluated at z = 1."""

    def __init__(self, numerators, denominators):
        self.numerators = tuple(util.to_mpf(item, "numerator")
                                for item in numerators)
        self.denominators = tuple(util.to_mpf(item, "denominator")
                                  for item in denominators)

    @property
    def p(self):
        """The number of numerator parameters."""
        return len(self.numerators)

    @property
    def q(self):
        """The number of denominator parameters."""
        return len(self.denominators)

    def __eq__(self, other):
        if not isinstance(other, PFQParams):
            return NotImplemented
        return (self.numerators == other.numerators and
                self.denominators == other.denominators)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.numerators, self.denominators))

    def __repr__(self):
        return "%dF%d(%s; %s)" % (
            self.p, self.q,
            ", ".join(mpmath.nstr(item, 8) for item in self.numerators),
            ", ".join(mpmath.nstr(item, 8) for item in self.denominators))


def convergence_margin(params):
    """The real margin sum(b) - sum(a) of the series at unit argument."""
    return sum(params.denominators) - sum(params.numerators)


def termination_index(params, precision):
    """The last index with a non-zero term, or None for infinite series.

    The first non-positive integer numerator -n makes every term after
    the n-th vanish.
    """
    bounds = []
    for numerator in params.numerators:
        nearest = numerics.nearest_integer(numerator, precision)
        if nearest is not None and nearest <= 0:
            bounds.append(-nearest)
    return min(bounds) if bounds else None


def terminates(params, precision):
    """Whether the series has a finite number of non-zero terms."""
    return termination_index(params, precision) is not None


def coalesce(params, precision):
    """Remove the numerator and denominator parameters which are equal."""
    with precision.workdps():
        numerators = list(params.numerators)
        denominators = []
        for denominator in params.denominators:
            for position, numerator in enumerate(numerators):
                if abs(numerator - denominator) < precision.pole_tolerance:
                    del numerators[position]
                    break
            else:
                denominators.append(denominator)
        return PFQParams(numerators, denominators)


def _term_ratio(params, index):
    """The ratio t_{k+1} / t_k of two consecutive terms."""
    ratio = mpmath.mpf(1)
    for numerator in params.numerators:
        ratio *= numerator + index
    for denominator in params.denominators:
        ratio /= denominator + index
    return ratio / (index + 1)


def _check_denominators(params, limit, precision):
    """Raise if a denominator vanishes before the index `limit`."""
    for denominator in params.denominators:
        nearest = numerics.nearest_integer(denominator, precision)
        if nearest is not None and nearest <= 0 and (
                limit is None or -nearest < limit):
            raise exception.DenominatorPole(parameter=denominator,
                                            series=params, term=-nearest)


def geometric_tail(previous, last):
    """Bound the remainder of a series whose terms decay geometrically.

    :returns: None when the last two terms do not decrease
    """
    previous, last = abs(previous), abs(last)
    if previous == 0:
        return mpmath.mpf(0)
    ratio = last / previous
    if ratio >= 1:
        return None
    return 2 * last * ratio / (1 - ratio)


def _finite_sum(params, count, precision):
    """Sum the terms t_0, ..., t_count of a terminating series."""
    _check_denominators(params, count, precision)
    if count > precision.max_terms:
        raise exception.MaxTermsExceeded(series=params,
                                         max_terms=precision.max_terms)
    term = total = mpmath.mpf(1)
    for index in range(count):
        term *= _term_ratio(params, index)
        total += term
    return SeriesValue(total, terms=count + 1)


def _probe_sum(params, margin, precision):
    """Try the direct partial sums with the algebraic tail estimate.

    The terms behave like k^(-1 - margin), so the remainder after the
    n-th term is about |t_n| n / margin.
    """
    tolerance = precision.truncation_tolerance
    probes = min(constant.PROBE_TERMS, precision.max_terms)
    term = total = mpmath.mpf(1)
    small_terms = 0
    tail = None
    for index in range(probes):
        term *= _term_ratio(params, index)
        total += term
        tail = abs(term) * (index + 1) / margin
        if abs(term) < tolerance * abs(total):
            small_terms += 1
        else:
            small_terms = 0
        if small_terms >= constant.STOP_RUN and tail < tolerance * abs(total):
            return SeriesValue(total, terms=index + 2, tail_bound=tail), tail
    return None, tail


def probe_feasible(margin, precision):
    """Whether the direct partial sums can meet the tolerance in time.

    The remainder after n terms decays like n^(-margin), so the probe
    needs about tolerance^(-1/margin) terms.
    """
    probes = min(constant.PROBE_TERMS, precision.max_terms)
    return (margin * mpmath.log(probes) >=
            -mpmath.log(precision.truncation_tolerance))


def _levin_sum(params, precision):
    """Sum the series through the Levin u-transform of its partial sums.

    The partial sums approach the limit like n^(-margin) times a power
    series in 1/n, the model of the u-transform.

    :returns: None when the transform does not settle in time
    """
    tolerance = min(precision.truncation_tolerance,
                    mpmath.mpf(10) ** -precision.digits)
    limit = min(constant.LEVIN_TERMS, precision.max_terms)
    result = None
    with mpmath.extraprec(2 * mpmath.mp.prec):
        levin = mpmath.mp.levin(method="levin", variant="u")
        term = total = mpmath.mpf(1)
        partial_sums = [total]
        settled = 0
        for index in range(limit):
            term *= _term_ratio(params, index)
            total += term
            partial_sums.append(total)
            value, error = levin.update_psum(partial_sums)
            if error < tolerance * abs(value):
                settled += 1
            else:
                settled = 0
            if settled >= constant.STOP_RUN:
                result = (value, error, index + 2)
                break
    if result is None:
        return None
    value, error, terms = result
    return SeriesValue(+value, terms=terms, tail_bound=+error,
                       method="levin")


def pfq_unit(params, precision):
    """Evaluate pFq(a; b | 1).

    Terminating series are summed exactly. The infinite ones need a
    positive convergence margin. Direct partial sums are tried only when
    the margin lets them reach the truncation tolerance within
    ``PROBE_TERMS`` terms; otherwise the Levin transform is applied,
    with the summation of mpmath as the last resort. Both are flagged as
    "accelerated".
    """
    with precision.workdps():
        reduced = coalesce(params, precision)
        count = termination_index(reduced, precision)
        if count is not None:
            return _finite_sum(reduced, count, precision)

        _check_denominators(reduced, None, precision)
        if reduced.p > reduced.q + 1:
            raise exception.NonConvergent(series=reduced, margin="-inf")
        if reduced.p <= reduced.q:
            # Entire in z, no margin is needed.
            value = mpmath.hyper(list(reduced.numerators),
                                 list(reduced.denominators), 1)
            return SeriesValue(value, method="accelerated",
                               flags=[constant.FLAG_ACCELERATED])

        margin = convergence_margin(reduced)
        if margin <= 0:
            raise exception.NonConvergent(series=reduced, margin=margin)

        flags = set()
        if margin <= mpmath.mpf(constant.SLOW_MARGIN):
            LOG.warning("The series %s converges slowly (margin %s).",
                        reduced, mpmath.nstr(margin, 6))
            flags.add(constant.FLAG_SLOW)

        tail = None
        if probe_feasible(margin, precision):
            result, tail = _probe_sum(reduced, margin, precision)
            if result is not None:
                result.flags = frozenset(flags)
                return result

        flags.add(constant.FLAG_ACCELERATED)
        result = _levin_sum(reduced, precision)
        if result is not None:
            result.flags = frozenset(flags)
            return result

        LOG.debug("The Levin transform did not settle for %s, using the "
                  "summation of mpmath.", reduced)
        try:
            value = mpmath.hyper(list(reduced.numerators),
                                 list(reduced.denominators), 1,
                                 maxterms=precision.max_terms)
        except mpmath.libmp.NoConvergence:
            raise exception.MaxTermsExceeded(series=reduced,
                                             max_terms=precision.max_terms)
        return SeriesValue(value, terms=constant.PROBE_TERMS,
                           tail_bound=tail or 0, flags=flags,
                           method="accelerated")


def gauss_2f1_unit(a, b, c, precision):
    """Gauss summation 2F1(a, b; c | 1) as a ratio of gamma functions.

    :returns: a :class:`numerics.GammaEval`
    """
    with precision.workdps():
        a, b, c = (util.to_mpf(item) for item in (a, b, c))
        return numerics.gamma_ratio([c, c - a - b], [c - a, c - b],
                                    precision)


class OuterSumSpec(object):

    """A double series whose inner sums are 4F3 at unit argument.

    The value is::

        sum_m (a)_m (b)_m (c)_m (d)_m / ((x)_m (y)_m (z)_m m!)
              * 4F3(a + m, b + m, e, f; w, x + m, y + m | 1)
    """

    def __init__(self, a, b, c, d, x, y, z, e, f, w, name="outer sum"):
        self.outer_numerators = tuple(util.to_mpf(item)
                                      for item in (a, b, c, d))
        self.outer_denominators = tuple(util.to_mpf(item)
                                        for item in (x, y, z))
        self.e, self.f, self.w = (util.to_mpf(item) for item in (e, f, w))
        self.name = name

    def inner(self, m):
        """The parameters of the inner series at the outer index m."""
        a, b = self.outer_numerators[:2]
        x, y = self.outer_denominators[:2]
        return PFQParams([a + m, b + m, self.e, self.f],
                         [self.w, x + m, y + m])

    def exchanged(self, k):
        """The outer series at the inner index k, after the exchange."""
        a, b, c, d = self.outer_numerators
        x, y, z = self.outer_denominators
        return PFQParams([a + k, b + k, c, d], [x + k, y + k, z])

    def outer_params(self):
        """The outer pochhammer symbols as a series."""
        return PFQParams(self.outer_numerators, self.outer_denominators)

    def __repr__(self):
        return "<%s %s inner e=%s f=%s w=%s>" % (
            self.name, self.outer_params(), mpmath.nstr(self.e, 8),
            mpmath.nstr(self.f, 8), mpmath.nstr(self.w, 8))


def _weights(numerators, denominators, count, precision):
    """The coefficients prod (n)_m / (prod (d)_m m!) for m = 0..count."""
    _check_denominators(PFQParams(numerators, denominators), count,
                        precision)
    weight = mpmath.mpf(1)
    weights = [weight]
    for index in range(count):
        for numerator in numerators:
            weight *= numerator + index
        for denominator in denominators:
            weight /= denominator + index
        weight /= index + 1
        weights.append(weight)
    return weights


def outer_sum(spec, precision):
    """Evaluate the double series described by an :class:`OuterSumSpec`.

    The outer sum must terminate; otherwise, when the inner series
    terminate uniformly in m (through e or f), the order of summation is
    exchanged and a finite sum of 4F3 series is evaluated.
    """
    with precision.workdps():
        outer = spec.outer_params()
        count = termination_index(outer, precision)
        if count is not None:
            if count > precision.max_terms:
                raise exception.MaxTermsExceeded(
                    series=spec, max_terms=precision.max_terms)
            weights = _weights(outer.numerators, outer.denominators,
                               count, precision)
            series = [spec.inner(index) for index in range(count + 1)]
        else:
            inner = PFQParams([spec.e, spec.f], [])
            count = termination_index(inner, precision)
            if count is None:
                raise exception.InvalidSpec(
                    spec=spec, reason="neither the outer sum nor the "
                                      "inner series terminate")
            a, b = outer.numerators[:2]
            x, y = outer.denominators[:2]
            weights = _weights([a, b, spec.e, spec.f], [spec.w, x, y],
                               count, precision)
            series = [spec.exchanged(index) for index in range(count + 1)]
            LOG.debug("Exchanged the summation order of %s (%d terms).",
                      spec, count + 1)

        total = tail = mpmath.mpf(0)
        terms = 0
        flags = set()
        methods = set()
        for weight, params in zip(weights, series):
            if weight == 0:
                continue
            value = pfq_unit(params, precision)
            total += weight * value.value
            tail += abs(weight) * value.tail_bound
            terms += value.terms
            flags |= value.flags
            methods.add(value.method)

        method = methods.pop() if len(methods) == 1 else "mixed"
        return SeriesValue(total, terms=terms, tail_bound=tail,
                           flags=flags, method=method)
