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

"""Values, exponents and Pochhammer products shared by the diagrams."""

import mpmath
from oslo_log import log as logging

from ndim.common import constant
from ndim.common import exception
from ndim.common import util
from ndim.special import numerics

LOG = logging.getLogger(__name__)


class Affine(object):

    """An exponent of the form constant + slope * D."""

    __slots__ = ("constant", "slope")

    def __init__(self, constant=0, slope=0):
        self.constant = util.to_mpf(constant, "constant")
        self.slope = util.to_mpf(slope, "slope")

    def evaluate(self, dimension):
        """The exponent at the received dimension."""
        return self.constant + self.slope * dimension

    def __add__(self, other):
        return Affine(self.constant + other.constant,
                      self.slope + other.slope)

    def __eq__(self, other):
        if not isinstance(other, Affine):
            return NotImplemented
        return (self.constant, self.slope) == (other.constant, other.slope)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.constant, self.slope))

    def __repr__(self):
        return "%s + %s*D" % (mpmath.nstr(self.constant, 10),
                              mpmath.nstr(self.slope, 10))


class LoopValue(object):

    """The value coefficient * pi^pi_exponent * (p^2)^p2_exponent.

    :param coefficient: a :class:`numerics.SignedLogReal`
    :param pi_exponent: an :class:`Affine` exponent of pi
    :param p2_exponent: an :class:`Affine` exponent of p^2
    :param phase: an :class:`Affine` exponent of -1, non-zero only for
        the values which were not analytically continued
    :param flags: diagnostics collected during the evaluation
    """

    def __init__(self, coefficient, pi_exponent, p2_exponent, phase=None,
                 flags=(), terms=0, tail_bound=0):
        self.coefficient = coefficient
        self.pi_exponent = pi_exponent
        self.p2_exponent = p2_exponent
        self.phase = phase or Affine()
        self.flags = frozenset(flags)
        self.terms = terms
        self.tail_bound = tail_bound

    def __mul__(self, other):
        return LoopValue(self.coefficient * other.coefficient,
                         self.pi_exponent + other.pi_exponent,
                         self.p2_exponent + other.p2_exponent,
                         phase=self.phase + other.phase,
                         flags=self.flags | other.flags,
                         terms=self.terms + other.terms,
                         tail_bound=self.tail_bound + other.tail_bound)

    def value(self, dimension, p2, precision):
        """The number coefficient * pi^a * (p^2)^b at the received D, p^2.

        :raises NonIntegerPhase: when the remaining phase is not real
        """
        with precision.workdps():
            dimension = util.to_mpf(dimension, "D")
            p2 = util.to_mpf(p2, "p2")
            result = (self.coefficient.value() *
                      mpmath.pi ** self.pi_exponent.evaluate(dimension) *
                      p2 ** self.p2_exponent.evaluate(dimension))
            return result * real_phase(self.phase.evaluate(dimension),
                                       precision, "loop value")

    def __repr__(self):
        return "LoopValue(%r, pi^(%r), p2^(%r))" % (
            self.coefficient, self.pi_exponent, self.p2_exponent)


def real_phase(exponent, precision, context):
    """Evaluate (-1)^exponent for an integer exponent."""
    steps = numerics.nearest_integer(exponent, precision)
    if steps is None:
        raise exception.NonIntegerPhase(exponent=exponent, context=context)
    return -1 if steps % 2 else 1


class Pochhammer(object):

    """The factor ((base)_index)^power of a coefficient, power = +-1."""

    def __init__(self, base, index, power=1):
        self.base = util.to_mpf(base, "base")
        self.index = util.to_mpf(index, "index")
        self.power = power

    def literal(self, precision):
        """The factor as it stands.

        :returns: (:class:`numerics.GammaEval`, phase exponent)
        """
        result = numerics.pochhammer(self.base, self.index, precision)
        if self.power < 0:
            result = result.reciprocal()
        return result, mpmath.mpf(0)

    def continued(self, precision):
        """The factor through (a)_n = (-1)^n / (1 - a)_{-n}.

        Integer indices use the exact :func:`numerics.pochhammer_ac`;
        the others keep the phase (-1)^(n * power) symbolic.
        """
        if numerics.is_integer(self.index, precision):
            result = numerics.pochhammer_ac(self.base, self.index,
                                            precision)
            phase = mpmath.mpf(0)
        else:
            result = numerics.pochhammer(1 - self.base, -self.index,
                                         precision).reciprocal()
            phase = self.index * self.power
        if self.power < 0:
            result = result.reciprocal()
        return result, phase

    def __repr__(self):
        text = "(%s)_{%s}" % (mpmath.nstr(self.base, 8),
                              mpmath.nstr(self.index, 8))
        return text if self.power > 0 else "1/" + text


class PhasedRatio(object):

    """The factor (-1)^n (-sigma)_n / (1 + shift - sigma)_n.

    The continued form (-sigma)_n (sigma - shift)_{-n} pairs the phase
    with the denominator, so it stays real for a non-integer n and
    agrees with the literal form for an integer n.
    """

    def __init__(self, sigma, index, shift):
        self.sigma = util.to_mpf(sigma, "sigma")
        self.index = util.to_mpf(index, "index")
        self.shift = util.to_mpf(shift, "shift")

    def literal(self, precision):
        steps = numerics.nearest_integer(self.index, precision)
        if steps is None:
            raise exception.NonIntegerPhase(exponent=self.index,
                                            context=repr(self))
        numerator = numerics.pochhammer(-self.sigma, self.index, precision)
        denominator = numerics.pochhammer(1 + self.shift - self.sigma,
                                          self.index, precision)
        result = _multiply([numerator, denominator.reciprocal()])
        return result, mpmath.mpf(steps)

    def continued(self, precision):
        numerator = numerics.pochhammer(-self.sigma, self.index, precision)
        denominator = numerics.pochhammer(self.sigma - self.shift,
                                          -self.index, precision)
        return _multiply([numerator, denominator]), mpmath.mpf(0)

    def __repr__(self):
        return "(-1)^%s (%s)_%s / (%s)_%s" % tuple(
            mpmath.nstr(item, 8) for item in (
                self.index, -self.sigma, self.index,
                1 + self.shift - self.sigma, self.index))


def _multiply(results):
    """Multiply `GammaEval` objects; zero times pole is a double pole."""
    value = numerics.SignedLogReal.one()
    pole = zero = None
    for result in results:
        if result.is_pole:
            pole = result.pole
        elif result.is_zero:
            zero = True
        else:
            value = value * result.value
    if pole is not None and zero:
        raise exception.DoublePole(numerator=pole, denominator="0")
    if pole is not None:
        return numerics.GammaEval.at_pole(pole)
    if zero:
        return numerics.GammaEval.finite(numerics.SignedLogReal.zero())
    return numerics.GammaEval.finite(value)


class PochhammerProduct(object):

    """A coefficient built as a product of Pochhammer factors."""

    def __init__(self, factors, name="coefficient"):
        self.factors = list(factors)
        self.name = name

    def __mul__(self, other):
        return PochhammerProduct(self.factors + other.factors,
                                 "%s*%s" % (self.name, other.name))

    def evaluate(self, precision, continued=True):
        """Evaluate every factor.

        :returns: (:class:`numerics.SignedLogReal`, phase exponent)
        :raises PoleError: when a factor is singular
        """
        with precision.workdps():
            results = []
            phase = mpmath.mpf(0)
            for factor in self.factors:
                if continued:
                    result, factor_phase = factor.continued(precision)
                else:
                    result, factor_phase = factor.literal(precision)
                results.append(result)
                phase += factor_phase
            value = _multiply(results).require(self.name)
            return value, phase

    def continued_value(self, precision, expected_phase):
        """The continued coefficient with its phase folded into the sign.

        The collected phase must differ from `expected_phase` by an
        integer; the pair (-pi)^D (-1)^(-D) is the typical case.
        """
        with precision.workdps():
            value, phase = self.evaluate(precision, continued=True)
            sign = real_phase(phase - expected_phase, precision, self.name)
            return value * sign

    def __repr__(self):
        return " ".join(repr(factor) for factor in self.factors)


def bubble_factors(a, b, sigma, half_dimension, name="bubble"):
    """The factors (1 + s)_{-2s-D/2} / ((1 + a)_{-s} (1 + b)_{-s})."""
    return PochhammerProduct([
        Pochhammer(1 + sigma, -2 * sigma - half_dimension),
        Pochhammer(1 + a, -sigma, -1),
        Pochhammer(1 + b, -sigma, -1),
    ], name=name)


def momentum_power(pairs):
    """The product of (kinematic value)^exponent as a signed logarithm."""
    log_value = mpmath.mpf(0)
    for value, exponent in pairs:
        log_value += exponent * mpmath.log(value)
    return numerics.SignedLogReal(1, log_value)


def shifted_limit(evaluate, exponents, precision, shift):
    """Approach integer exponents which hit a pole.

    The exponents are shifted by `shift` and `shift / 2` and the two
    values are extrapolated linearly to the unshifted point.
    """
    with precision.workdps():
        shift = util.to_mpf(shift, "pole shift")
        far = evaluate([item + shift for item in exponents])
        near = evaluate([item + shift / 2 for item in exponents])
        LOG.info("Extrapolated the exponents %s from a shift of %s.",
                 [mpmath.nstr(item, 8) for item in exponents],
                 mpmath.nstr(shift, 4))
        return 2 * near - far, constant.FLAG_EXTRAPOLATED
