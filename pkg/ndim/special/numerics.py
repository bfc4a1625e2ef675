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

"""Precision policy, signed logarithmic reals and Pochhammer symbols.

Every public function enters the working precision of the received
:class:`Precision` object, so the results keep the guard digits even when
the caller runs at the default mpmath precision.
"""

import mpmath
from oslo_log import log as logging

from ndim.common import constant
from ndim.common import exception
from ndim.common import util

LOG = logging.getLogger(__name__)

# Integer indices up to this size are handled as finite products.
_PRODUCT_LIMIT = 1000


class Precision(object):

    """Immutable description of the requested accuracy.

    :param digits: significant decimal digits of the results
    :param tolerance_exponent: the truncation tolerance of the series is
        ``10 ** tolerance_exponent``; defaults to ``10 - digits``
    :param max_terms: upper bound for the number of summed terms
    :param guard_digits: extra digits used by the working precision
    """

    __slots__ = ("_digits", "_tolerance_exponent", "_max_terms",
                 "_guard_digits")

    def __init__(self, digits=constant.DEFAULT_DIGITS,
                 tolerance_exponent=None,
                 max_terms=constant.DEFAULT_MAX_TERMS,
                 guard_digits=constant.DEFAULT_GUARD_DIGITS):
        digits = int(digits)
        if digits < constant.MIN_DIGITS:
            raise exception.InvalidPrecision(
                reason="digits must be at least %d, got %d" %
                (constant.MIN_DIGITS, digits))

        if tolerance_exponent is None:
            tolerance_exponent = 10 - digits
        tolerance_exponent = int(tolerance_exponent)
        if tolerance_exponent < 10 - digits:
            raise exception.InvalidPrecision(
                reason="the truncation tolerance 1e%d is below 1e%d" %
                (tolerance_exponent, 10 - digits))
        if tolerance_exponent >= 0:
            raise exception.InvalidPrecision(
                reason="the truncation tolerance must be below 1")

        max_terms = int(max_terms)
        if max_terms < 1:
            raise exception.InvalidPrecision(
                reason="max_terms must be positive, got %d" % max_terms)

        guard_digits = int(guard_digits)
        if guard_digits < 0:
            raise exception.InvalidPrecision(
                reason="guard_digits can not be negative")

        self._digits = digits
        self._tolerance_exponent = tolerance_exponent
        self._max_terms = max_terms
        self._guard_digits = guard_digits

    @classmethod
    def from_config(cls, config, digits=None, tolerance_exponent=None,
                    max_terms=None):
        """Build the precision from the `precision` config group.

        The explicit arguments take precedence over the config values.
        """
        options = config.precision
        if digits is None:
            digits = options.digits
        if tolerance_exponent is None:
            tolerance_exponent = options.tolerance_exponent
        if max_terms is None:
            max_terms = options.max_terms
        return cls(digits=digits, tolerance_exponent=tolerance_exponent,
                   max_terms=max_terms, guard_digits=options.guard_digits)

    @property
    def digits(self):
        """The number of significant digits requested."""
        return self._digits

    @property
    def tolerance_exponent(self):
        """The decimal exponent of the truncation tolerance."""
        return self._tolerance_exponent

    @property
    def max_terms(self):
        """The maximum number of terms of a series."""
        return self._max_terms

    @property
    def guard_digits(self):
        """The extra digits of the working precision."""
        return self._guard_digits

    @property
    def working_digits(self):
        """The decimal precision used by the computations."""
        return self._digits + self._guard_digits

    @property
    def truncation_tolerance(self):
        """The relative size of the neglected tail of a series."""
        with self.workdps():
            return mpmath.mpf(10) ** self._tolerance_exponent

    @property
    def pole_tolerance(self):
        """The distance under which a number is treated as an integer."""
        with self.workdps():
            return mpmath.mpf(10) ** (5 - self._digits)

    @property
    def agreement_tolerance(self):
        """The relative difference accepted between two evaluations."""
        with self.workdps():
            return mpmath.mpf(10) ** (10 - self._digits)

    def workdps(self):
        """Return a context manager for the working precision."""
        return mpmath.workdps(self.working_digits)

    def reduced(self, digits):
        """Return a copy of the current object with fewer digits."""
        return Precision(digits=digits, max_terms=self._max_terms,
                         guard_digits=self._guard_digits)

    def __eq__(self, other):
        if not isinstance(other, Precision):
            return NotImplemented
        return (self._digits, self._tolerance_exponent, self._max_terms,
                self._guard_digits) == (
                    other.digits, other.tolerance_exponent, other.max_terms,
                    other.guard_digits)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._digits, self._tolerance_exponent,
                     self._max_terms, self._guard_digits))

    def __repr__(self):
        return ("Precision(digits=%d, tolerance=1e%d, max_terms=%d)" %
                (self._digits, self._tolerance_exponent, self._max_terms))


def nearest_integer(value, precision):
    """Return the nearest integer if `value` is one within the tolerance."""
    with precision.workdps():
        value = mpmath.mpf(value)
        nearest = mpmath.nint(value)
        if abs(value - nearest) < precision.pole_tolerance:
            return int(nearest)
    return None


def is_integer(value, precision):
    """Check if the received value is an integer within the tolerance."""
    return nearest_integer(value, precision) is not None


def is_nonpositive_integer(value, precision):
    """Check if the value is one of 0, -1, -2, ... within the tolerance."""
    nearest = nearest_integer(value, precision)
    return nearest is not None and nearest <= 0


def relative_error(value, reference, precision=None):
    """The relative difference, falling back to the absolute one at zero.

    The difference is taken at the working precision of `precision`;
    without it the caller's mpmath context decides how many digits of
    the inputs survive.
    """
    if precision is None:
        return _relative_error(value, reference)
    with precision.workdps():
        return _relative_error(value, reference)


def _relative_error(value, reference):
    value, reference = mpmath.mpf(value), mpmath.mpf(reference)
    if reference == 0:
        return abs(value)
    return abs(value - reference) / abs(reference)


class SignedLogReal(object):

    """A real number stored as a sign and the logarithm of its modulus.

    The zero is represented with ``sign == 0``.
    """

    __slots__ = ("_sign", "_log")

    def __init__(self, sign, log_magnitude=0):
        if sign not in (-1, 0, 1):
            raise exception.Invalid("The sign must be -1, 0 or 1, "
                                    "got %(sign)r.", sign=sign)
        self._sign = sign
        self._log = mpmath.mpf(log_magnitude) if sign else mpmath.mpf(0)

    @classmethod
    def from_value(cls, value):
        """Build the number from an mpmath real."""
        value = mpmath.mpf(value)
        if not mpmath.isfinite(value):
            raise exception.Invalid("Can not represent %(value)s.",
                                    value=value)
        if value == 0:
            return cls.zero()
        return cls(1 if value > 0 else -1, mpmath.log(abs(value)))

    @classmethod
    def zero(cls):
        """The number zero."""
        return cls(0)

    @classmethod
    def one(cls):
        """The number one."""
        return cls(1, 0)

    @property
    def sign(self):
        """The sign of the number: -1, 0 or 1."""
        return self._sign

    @property
    def log_magnitude(self):
        """The natural logarithm of the modulus."""
        return self._log

    @property
    def is_zero(self):
        """Whether the number is zero."""
        return self._sign == 0

    def value(self):
        """The number as an mpmath real."""
        if self._sign == 0:
            return mpmath.mpf(0)
        return self._sign * mpmath.exp(self._log)

    def reciprocal(self):
        """Return 1 / self."""
        if self._sign == 0:
            raise exception.PoleError(argument=0, context="reciprocal")
        return SignedLogReal(self._sign, -self._log)

    def power(self, exponent):
        """Raise the number to a real power.

        Negative numbers accept only integer exponents.
        """
        exponent = mpmath.mpf(exponent)
        if self._sign == 0:
            if exponent > 0:
                return SignedLogReal.zero()
            raise exception.PoleError(argument=0, context="power")
        sign = self._sign
        if sign < 0:
            if exponent != mpmath.nint(exponent):
                raise exception.NonIntegerPhase(exponent=exponent,
                                                context="power of a "
                                                        "negative number")
            if int(mpmath.nint(exponent)) % 2 == 0:
                sign = 1
        return SignedLogReal(sign, self._log * exponent)

    def __neg__(self):
        return SignedLogReal(-self._sign, self._log)

    def __mul__(self, other):
        if not isinstance(other, SignedLogReal):
            other = SignedLogReal.from_value(other)
        sign = self._sign * other.sign
        if sign == 0:
            return SignedLogReal.zero()
        return SignedLogReal(sign, self._log + other.log_magnitude)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, SignedLogReal):
            other = SignedLogReal.from_value(other)
        return self * other.reciprocal()

    __div__ = __truediv__

    def __add__(self, other):
        if not isinstance(other, SignedLogReal):
            other = SignedLogReal.from_value(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other

        big, small = self, other
        if small.log_magnitude > big.log_magnitude:
            big, small = small, big
        ratio = mpmath.exp(small.log_magnitude - big.log_magnitude)
        if big.sign == small.sign:
            return SignedLogReal(big.sign,
                                 big.log_magnitude + mpmath.log1p(ratio))
        if ratio == 1:
            return SignedLogReal.zero()
        return SignedLogReal(big.sign,
                             big.log_magnitude + mpmath.log1p(-ratio))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, SignedLogReal):
            other = SignedLogReal.from_value(other)
        return self + (-other)

    def __float__(self):
        return float(self.value())

    def __repr__(self):
        if self._sign == 0:
            return "SignedLogReal(0)"
        return "SignedLogReal(%+d, %s)" % (self._sign,
                                           mpmath.nstr(self._log, 15))


class GammaEval(object):

    """The value of a gamma function expression or a pole marker."""

    __slots__ = ("_value", "_pole")

    def __init__(self, value=None, pole=None):
        if (value is None) == (pole is None):
            raise exception.Invalid("A GammaEval holds either a value or "
                                    "a pole.")
        self._value = value
        self._pole = pole

    @classmethod
    def finite(cls, value):
        """A finite value (possibly zero)."""
        return cls(value=value)

    @classmethod
    def at_pole(cls, argument):
        """A pole of the expression at the received argument."""
        return cls(pole=argument)

    @property
    def is_pole(self):
        """Whether the expression is singular."""
        return self._pole is not None

    @property
    def is_zero(self):
        """Whether the expression vanishes."""
        return self._value is not None and self._value.is_zero

    @property
    def pole(self):
        """The argument of the singular gamma function, if any."""
        return self._pole

    @property
    def value(self):
        """The finite value, or None at a pole."""
        return self._value

    def require(self, context):
        """Return the finite value or raise `PoleError`."""
        if self._pole is not None:
            raise exception.PoleError(argument=self._pole, context=context)
        return self._value

    def reciprocal(self):
        """Return the expression 1 / self, swapping poles and zeros."""
        if self._pole is not None:
            return GammaEval.finite(SignedLogReal.zero())
        if self._value.is_zero:
            return GammaEval.at_pole("1/0")
        return GammaEval.finite(self._value.reciprocal())

    def __repr__(self):
        if self._pole is not None:
            return "GammaEval(pole=%s)" % self._pole
        return "GammaEval(%r)" % self._value


def gamma_signed(x, precision):
    """Evaluate the gamma function as a signed logarithm.

    :returns: a :class:`GammaEval` holding a pole marker when `x` is
              a non-positive integer within the pole tolerance
    """
    with precision.workdps():
        x = util.to_mpf(x, "gamma argument")
        if is_nonpositive_integer(x, precision):
            return GammaEval.at_pole(x)

        if x > 0:
            return GammaEval.finite(SignedLogReal(1, mpmath.loggamma(x)))

        # Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
        sine = mpmath.sinpi(x)
        log_value = (mpmath.log(mpmath.pi) - mpmath.log(abs(sine)) -
                     mpmath.loggamma(1 - x))
        return GammaEval.finite(SignedLogReal(1 if sine > 0 else -1,
                                              log_value))


def gamma_ratio(numerators, denominators, precision):
    """Evaluate a product of gamma functions over another one.

    A pole in the numerator gives a pole marker, a pole in the
    denominator alone gives an exact zero and both of them raise
    :class:`DoublePole`.
    """
    with precision.workdps():
        value = SignedLogReal.one()
        numerator_pole = denominator_pole = None
        for argument in numerators:
            result = gamma_signed(argument, precision)
            if result.is_pole:
                numerator_pole = argument
            else:
                value = value * result.value
        for argument in denominators:
            result = gamma_signed(argument, precision)
            if result.is_pole:
                denominator_pole = argument
            else:
                value = value / result.value

    if numerator_pole is not None and denominator_pole is not None:
        raise exception.DoublePole(numerator=numerator_pole,
                                   denominator=denominator_pole)
    if numerator_pole is not None:
        return GammaEval.at_pole(numerator_pole)
    if denominator_pole is not None:
        return GammaEval.finite(SignedLogReal.zero())
    return GammaEval.finite(value)


def _product(base, count, step, precision):
    """Multiply base, base + step, ... (`count` factors)."""
    value = SignedLogReal.one()
    for index in range(count):
        factor = base + step * index
        if abs(factor) < precision.pole_tolerance:
            return None
        value = value * SignedLogReal.from_value(factor)
    return value


def pochhammer(a, n, precision):
    """The rising factorial (a)_n = Gamma(a + n) / Gamma(a).

    Integer indices are evaluated as finite products, the others through
    the gamma functions with the pole rules of :func:`gamma_ratio`.
    """
    with precision.workdps():
        a = util.to_mpf(a, "pochhammer base")
        n = util.to_mpf(n, "pochhammer index")
        steps = nearest_integer(n, precision)

        if steps is not None and abs(steps) <= _PRODUCT_LIMIT:
            if steps == 0:
                return GammaEval.finite(SignedLogReal.one())
            if steps > 0:
                # (a)_n = a (a + 1) ... (a + n - 1)
                value = _product(a, steps, 1, precision)
                if value is None:
                    return GammaEval.finite(SignedLogReal.zero())
                return GammaEval.finite(value)
            # (a)_{-n} = 1 / ((a - 1) (a - 2) ... (a - n))
            value = _product(a - 1, -steps, -1, precision)
            if value is None:
                return GammaEval.at_pole(a + steps)
            return GammaEval.finite(value.reciprocal())

        return gamma_ratio([a + n], [a], precision)


def pochhammer_ac(a, n, precision):
    """The analytically continued form (-1)^n / (1 - a)_{-n}.

    :param n: an integer index
    """
    with precision.workdps():
        a = util.to_mpf(a, "pochhammer base")
        steps = nearest_integer(n, precision)
        if steps is None:
            raise exception.Invalid("The analytic continuation of "
                                    "(%(a)s)_n needs an integer n, "
                                    "got %(n)s.", a=a, n=n)

        inner = pochhammer(1 - a, -steps, precision)
        if inner.is_pole:
            return GammaEval.finite(SignedLogReal.zero())
        if inner.is_zero:
            return GammaEval.at_pole(a + steps)

        value = inner.value.reciprocal()
        if steps % 2:
            value = -value
        return GammaEval.finite(value)
