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

"""The one-loop triangle with arbitrary exponents.

    T = int d^Dk (k^2)^i ((k - p)^2)^j ((k - q)^2)^l

The four-term representation is valid for sqrt(r2/p2) + sqrt(q2/p2) < 1;
the three-term representations are combinations of terminating F4
series when the exponents are non-negative integers, which is the
domain where the three sets describe the same function.
"""

import collections

import mpmath
from oslo_log import log as logging

from ndim.common import exception
from ndim.common import util
from ndim.diagrams import base
from ndim.special import appell
from ndim.special import numerics

LOG = logging.getLogger(__name__)

FOUR_TERM = "four-term"
THREE_TERM = "three-term"
THREE_TERM_PRIMED = "three-term-primed"
THREE_TERM_DOUBLE_PRIMED = "three-term-double-primed"
REPRESENTATIONS = (FOUR_TERM, THREE_TERM, THREE_TERM_PRIMED,
                   THREE_TERM_DOUBLE_PRIMED)

_Term = collections.namedtuple(
    "_Term", ["coefficient", "momenta", "f4", "variables"])


class Kinematics(object):

    """The squared external momenta p^2, q^2 and r^2 = (p - q)^2."""

    def __init__(self, p2, q2, r2):
        self.p2 = util.to_mpf(p2, "p2")
        self.q2 = util.to_mpf(q2, "q2")
        self.r2 = util.to_mpf(r2, "r2")
        for name in ("p2", "q2", "r2"):
            if getattr(self, name) <= 0:
                raise exception.Invalid("%(name)s must be positive.",
                                        name=name)

    def get(self, name):
        return getattr(self, name)

    def swapped(self, first, second):
        """The kinematics with two of the momenta exchanged."""
        values = {"p2": self.p2, "q2": self.q2, "r2": self.r2}
        values[first], values[second] = values[second], values[first]
        return Kinematics(**values)

    def __repr__(self):
        return "Kinematics(p2=%s, q2=%s, r2=%s)" % tuple(
            mpmath.nstr(value, 10) for value in (self.p2, self.q2, self.r2))


class TriangleExponents(object):

    """The exponents (i, j, l) of the triangle propagators."""

    def __init__(self, i, j, l):
        self.i, self.j, self.l = (util.to_mpf(value, name)
                                  for value, name in zip((i, j, l), "ijl"))

    def sigma(self, dimension):
        """sigma = i + j + l + D/2."""
        return self.i + self.j + self.l + dimension / 2

    def shifted(self, delta):
        return TriangleExponents(self.i + delta, self.j + delta,
                                 self.l + delta)

    def as_tuple(self):
        return (self.i, self.j, self.l)

    def __repr__(self):
        return "(i, j, l) = (%s)" % ", ".join(
            mpmath.nstr(value, 10) for value in self.as_tuple())


def _terms(representation, exponents, dimension):
    """The terms Lambda * F4 of the received representation."""
    i, j, l = exponents.as_tuple()
    half = dimension / 2
    sigma = exponents.sigma(dimension)

    def common(a, b):
        return base.bubble_factors(a, b, sigma, half, name="Lambda")

    def phased(index, shift):
        return base.PochhammerProduct(
            [base.PhasedRatio(sigma, index, shift)])

    first_pair = (("r2", "p2"), ("q2", "p2"))
    second_pair = (("r2", "q2"), ("p2", "q2"))
    third_pair = (("q2", "r2"), ("p2", "r2"))

    if representation == FOUR_TERM:
        fourth = base.PochhammerProduct([
            base.Pochhammer(1 - l - half, 2 * l + half),
            base.Pochhammer(1 + i, l + half, -1),
            base.Pochhammer(1 + j, l + half, -1),
        ], name="Lambda")
        return [
            _Term(common(i, j), [("p2", sigma)],
                  (-l, -sigma, 1 + i - sigma, 1 + j - sigma), first_pair),
            _Term(common(i, l) * phased(j, l),
                  [("q2", sigma - j), ("p2", j)],
                  (-j, -j - l + sigma, 1 + i - sigma, 1 - j + sigma),
                  first_pair),
            _Term(common(j, l) * phased(i, l),
                  [("r2", sigma - i), ("p2", i)],
                  (-i, -i - l + sigma, 1 - i + sigma, 1 + j - sigma),
                  first_pair),
            _Term(fourth,
                  [("q2", sigma - j), ("r2", sigma - i),
                   ("p2", i + j - sigma)],
                  (l + half, sigma + half, 1 - i + sigma, 1 - j + sigma),
                  first_pair),
        ]
    if representation == THREE_TERM:
        return [
            _Term(common(i, j), [("p2", sigma)],
                  (-l, -sigma, 1 + i - sigma, 1 + j - sigma), first_pair),
            _Term(common(i, l) * phased(j, l),
                  [("q2", sigma - j), ("p2", j)],
                  (-j, -j - l + sigma, 1 + i - sigma, 1 - j + sigma),
                  first_pair),
            _Term(common(j, l) * phased(i, j),
                  [("r2", sigma - i), ("q2", i)],
                  (-i, -i - j + sigma, 1 - i + sigma, 1 + l - sigma),
                  second_pair),
        ]
    if representation == THREE_TERM_PRIMED:
        return [
            _Term(common(i, l), [("q2", sigma)],
                  (-j, -sigma, 1 + i - sigma, 1 + l - sigma), second_pair),
            _Term(common(i, j) * phased(l, j),
                  [("p2", sigma - l), ("q2", l)],
                  (-l, -j - l + sigma, 1 + i - sigma, 1 - l + sigma),
                  second_pair),
            _Term(common(j, l) * phased(i, l),
                  [("r2", sigma - i), ("p2", i)],
                  (-i, -i - l + sigma, 1 - i + sigma, 1 + j - sigma),
                  first_pair),
        ]
    if representation == THREE_TERM_DOUBLE_PRIMED:
        return [
            _Term(common(j, l), [("r2", sigma)],
                  (-i, -sigma, 1 + j - sigma, 1 + l - sigma), third_pair),
            _Term(common(i, j) * phased(l, i),
                  [("p2", sigma - l), ("r2", l)],
                  (-l, -i - l + sigma, 1 + j - sigma, 1 - l + sigma),
                  third_pair),
            _Term(common(i, l) * phased(j, l),
                  [("q2", sigma - j), ("p2", j)],
                  (-j, -j - l + sigma, 1 - j + sigma, 1 + i - sigma),
                  (("q2", "p2"), ("r2", "p2"))),
        ]
    raise exception.NotFound(object=representation,
                             container="the triangle representations")


def _variables(term, kinematics):
    (x_num, x_den), (y_num, y_den) = term.variables
    return (kinematics.get(x_num) / kinematics.get(x_den),
            kinematics.get(y_num) / kinematics.get(y_den))


def _f4_params(term, kinematics):
    x, y = _variables(term, kinematics)
    return appell.F4Params(*(term.f4 + (x, y)))


TermRegion = collections.namedtuple(
    "TermRegion", ["position", "x", "y", "terminates", "admissible"])


def region_report(kinematics, representation, exponents, dimension,
                  precision):
    """The F4 variables of every term and whether its series converges.

    Terminating series converge for any kinematics.

    :returns: list of :class:`TermRegion`
    """
    with precision.workdps():
        dimension = util.to_mpf(dimension, "D")
        report = []
        for position, term in enumerate(
                _terms(representation, exponents, dimension), 1):
            params = _f4_params(term, kinematics)
            terminates = (appell.termination_index(params, precision)
                          is not None)
            report.append(TermRegion(
                position, params.x, params.y, terminates,
                terminates or appell.in_region(params.x, params.y)))
        return report


def region_check(kinematics, representation, exponents, dimension,
                 precision):
    """Whether every F4 series of the representation converges."""
    return all(term.admissible for term in region_report(
        kinematics, representation, exponents, dimension, precision))


def triangle_terms(representation, exponents, kinematics, dimension,
                   precision, continued=True):
    """Evaluate every Lambda_n * F4 of a representation.

    :param continued: use the analytically continued coefficients, the
        physical values for generic (negative) exponents; otherwise the
        literal coefficients, which need integer phase exponents
    :returns: list of (:class:`numerics.SignedLogReal`, SeriesValue)
    """
    with precision.workdps():
        dimension = util.to_mpf(dimension, "D")
        half = dimension / 2
        results = []
        for position, term in enumerate(
                _terms(representation, exponents, dimension), 1):
            if continued:
                coefficient = term.coefficient.continued_value(precision,
                                                               -half)
            else:
                coefficient, phase = term.coefficient.evaluate(
                    precision, continued=False)
                coefficient = coefficient * base.real_phase(
                    phase, precision, "Lambda%d" % position)

            coefficient = coefficient * base.momentum_power(
                [(kinematics.get(name), power)
                 for name, power in term.momenta])
            if coefficient.is_zero:
                results.append((coefficient, None))
                continue
            series = appell.f4(_f4_params(term, kinematics), precision,
                               context="%s term %d" % (representation,
                                                       position))
            results.append((coefficient, series))
        return results


def _triangle(representation, exponents, kinematics, dimension, precision,
              continued):
    with precision.workdps():
        dimension = util.to_mpf(dimension, "D")
        total = numerics.SignedLogReal.zero()
        terms = 0
        tail = mpmath.mpf(0)
        for coefficient, series in triangle_terms(
                representation, exponents, kinematics, dimension,
                precision, continued):
            if series is None:
                continue
            total = total + coefficient * series.value
            terms += series.terms
            tail += abs(coefficient.value()) * series.tail_bound

        pi_exponent = base.Affine(0, mpmath.mpf(1) / 2)
        return base.LoopValue(
            total, pi_exponent, base.Affine(),
            phase=None if continued else pi_exponent,
            terms=terms, tail_bound=tail)


def _with_pole_shift(representation, exponents, kinematics, dimension,
                     precision, continued, pole_shift):
    try:
        return _triangle(representation, exponents, kinematics, dimension,
                         precision, continued)
    except exception.PoleError as exc:
        if pole_shift is None or not all(
                numerics.is_integer(value, precision)
                for value in exponents.as_tuple()):
            raise
        LOG.info("The triangle hits a pole (%s), approaching the "
                 "exponents with a shift.", exc)

    def evaluate(values):
        shifted = TriangleExponents(*values)
        result = _triangle(representation, shifted, kinematics, dimension,
                           precision, continued)
        return result.coefficient.value()

    value, flag = base.shifted_limit(evaluate, exponents.as_tuple(),
                                     precision, pole_shift)
    pi_exponent = base.Affine(0, mpmath.mpf(1) / 2)
    return base.LoopValue(numerics.SignedLogReal.from_value(value),
                          pi_exponent, base.Affine(),
                          phase=None if continued else pi_exponent,
                          flags=[flag])


def triangle_4term(exponents, kinematics, dimension, precision,
                   continued=True, pole_shift=None):
    """The triangle through the four-term representation.

    The momentum powers are folded into the coefficient, so the result
    carries only pi^(D/2).

    :raises OutsideRegion: when sqrt(r2/p2) + sqrt(q2/p2) >= 1 and the
        series do not terminate
    """
    return _with_pole_shift(FOUR_TERM, exponents, kinematics, dimension,
                            precision, continued, pole_shift)


def triangle_3term(representation, exponents, kinematics, dimension,
                   precision, continued=False, pole_shift=None):
    """The triangle through one of the three-term representations."""
    if representation not in REPRESENTATIONS[1:]:
        raise exception.NotFound(object=representation,
                                 container="the three-term representations")
    return _with_pole_shift(representation, exponents, kinematics,
                            dimension, precision, continued, pole_shift)


def triangle(representation, exponents, kinematics, dimension, precision,
             continued=None, pole_shift=None):
    """Dispatch to the four-term or the three-term representations.

    The four-term representation is continued by default, the
    three-term ones are literal.
    """
    if representation == FOUR_TERM:
        return triangle_4term(exponents, kinematics, dimension, precision,
                              True if continued is None else continued,
                              pole_shift)
    return triangle_3term(representation, exponents, kinematics, dimension,
                          precision, False if continued is None
                          else continued, pole_shift)
