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

"""The one-loop bubble and the two-loop master self-energy diagram.

The master diagram with propagator exponents (g, h, i, j, l) is a sum
of three products C_n * F_n.  The coefficients are products of
Pochhammer symbols which are analytically continued factor by factor;
every F_n is a terminating sum of 4F3 series at unit argument.
"""

import mpmath
from oslo_log import log as logging

from ndim.common import exception
from ndim.common import util
from ndim.diagrams import base
from ndim.special import hyper
from ndim.special import numerics

LOG = logging.getLogger(__name__)

_EPSILONS = ("1e-2", "1e-3", "1e-4")


class MasterExponents(object):

    """The exponents of (q^2)^g ((q-p)^2)^h (k^2)^i ((k-p)^2)^j ((k-q)^2)^l."""

    def __init__(self, g, h, i, j, l):
        self.g, self.h, self.i, self.j, self.l = (
            util.to_mpf(value, name)
            for value, name in zip((g, h, i, j, l), "ghijl"))

    @classmethod
    def all_minus_one(cls):
        """The scalar master integral."""
        return cls(-1, -1, -1, -1, -1)

    def as_tuple(self):
        return (self.g, self.h, self.i, self.j, self.l)

    def sigma(self, dimension):
        """sigma = i + j + l + D/2."""
        return self.i + self.j + self.l + dimension / 2

    def sigma_prime(self, dimension):
        """sigma' = g + h + D/2."""
        return self.g + self.h + dimension / 2

    def omega(self, dimension):
        """Omega = sigma + sigma' = g + h + i + j + l + D."""
        return self.g + self.h + self.i + self.j + self.l + dimension

    def swapped_pairs(self):
        """The exponents after g <-> h together with i <-> j."""
        return MasterExponents(self.h, self.g, self.j, self.i, self.l)

    def swapped_sides(self):
        """The exponents after (g, h) <-> (i, j)."""
        return MasterExponents(self.i, self.j, self.g, self.h, self.l)

    def __repr__(self):
        return "(g, h, i, j, l) = (%s)" % ", ".join(
            mpmath.nstr(value, 10) for value in self.as_tuple())


def _dimension(dimension):
    return util.to_mpf(dimension, "D")


def bubble(e, f, dimension, precision, continued=True):
    """The one-loop bubble with exponents e and f.

    The analytically continued value is
    pi^(D/2) (p^2)^sigma1 (-e)_sigma1 (-f)_sigma1 / (-sigma1)_(2 sigma1 + D/2)
    with sigma1 = e + f + D/2.  The literal one keeps (-pi)^(D/2).
    """
    with precision.workdps():
        e, f = util.to_mpf(e, "e"), util.to_mpf(f, "f")
        dimension = _dimension(dimension)
        half = dimension / 2
        sigma = e + f + half
        factors = base.bubble_factors(e, f, sigma, half, name="bubble")
        p2_exponent = base.Affine(e + f, mpmath.mpf(1) / 2)
        pi_exponent = base.Affine(0, mpmath.mpf(1) / 2)

        if continued:
            coefficient = factors.continued_value(precision, -half)
            return base.LoopValue(coefficient, pi_exponent, p2_exponent)

        coefficient, phase = factors.evaluate(precision, continued=False)
        coefficient = coefficient * base.real_phase(phase, precision,
                                                    "bubble")
        return base.LoopValue(coefficient, pi_exponent, p2_exponent,
                              phase=pi_exponent)


def coefficient_factors(exponents, dimension):
    """The three Pochhammer products C_1, C_2, C_3."""
    g, h, i, j, l = exponents.as_tuple()
    half = dimension / 2
    sigma = exponents.sigma(dimension)
    sigma_prime = exponents.sigma_prime(dimension)
    omega = exponents.omega(dimension)
    shifted = sigma_prime + l
    reduced = omega - i

    first = (base.bubble_factors(i, l, sigma, half) *
             base.PochhammerProduct([
                 base.Pochhammer(1 + omega, -2 * omega - half),
                 base.Pochhammer(1 + g + sigma, -omega, -1),
                 base.Pochhammer(1 + h, -omega, -1),
             ]))
    second = (base.bubble_factors(i, j, sigma, half) *
              base.PochhammerProduct([
                  base.PhasedRatio(sigma, l, j),
                  base.Pochhammer(1 + shifted, -2 * shifted - half),
                  base.Pochhammer(1 + g + l, -shifted, -1),
                  base.Pochhammer(1 + h, -shifted, -1),
              ]))
    third = (base.bubble_factors(j, l, sigma, half) *
             base.PochhammerProduct([
                 base.PhasedRatio(sigma, i, l),
                 base.Pochhammer(1 + reduced, -2 * reduced - half),
                 base.Pochhammer(1 + g, -reduced, -1),
                 base.Pochhammer(1 + h + sigma - i, -reduced, -1),
             ]))
    for index, product in enumerate((first, second, third), 1):
        product.name = "C%d" % index
    return first, second, third


def master_coefficients_preac(exponents, dimension, precision):
    """The coefficients C_1, C_2, C_3 before the analytic continuation.

    :raises NonIntegerPhase: when l or i is not an integer
    """
    with precision.workdps():
        dimension = _dimension(dimension)
        coefficients = []
        for product in coefficient_factors(exponents, dimension):
            value, phase = product.evaluate(precision, continued=False)
            coefficients.append(
                value * base.real_phase(phase, precision, product.name))
        return tuple(coefficients)


def master_coefficients_ac(exponents, dimension, precision):
    """The analytically continued coefficients C_1, C_2, C_3.

    Every factor goes through (a)_n = (-1)^n / (1 - a)_{-n}; the
    collected phase of each coefficient is (-1)^(-D) up to an integer,
    which combines with (-pi)^D into pi^D and a sign.
    """
    with precision.workdps():
        dimension = _dimension(dimension)
        return tuple(product.continued_value(precision, -dimension)
                     for product in coefficient_factors(exponents,
                                                         dimension))


def master_series_spec(index, exponents, dimension):
    """The :class:`hyper.OuterSumSpec` of the series F_index."""
    g, h, i, j, l = exponents.as_tuple()
    dimension = _dimension(dimension)
    half = dimension / 2
    sigma = exponents.sigma(dimension)
    sigma_prime = exponents.sigma_prime(dimension)
    omega = exponents.omega(dimension)

    if index == 1:
        return hyper.OuterSumSpec(
            a=-j, b=-sigma, c=1 + h, d=-g + sigma_prime,
            x=1 + h - omega, y=-g - sigma, z=1 + i - sigma,
            e=1 - omega - half, f=-omega, w=1 + l - sigma, name="F1")
    if index == 2:
        return hyper.OuterSumSpec(
            a=-l, b=-j - l + sigma, c=1 + h, d=-g + sigma_prime,
            x=1 + h - sigma_prime - l, y=-g - l, z=1 + i - sigma,
            e=1 - sigma_prime - l - half, f=-sigma_prime - l,
            w=1 - l + sigma, name="F2")
    if index == 3:
        return hyper.OuterSumSpec(
            a=-i, b=-i - l + sigma, c=1 + h + sigma - i, d=-g + omega - i,
            x=1 + omega - i, y=omega - i + half, z=1 - i + sigma,
            e=1 + g, f=-h + sigma_prime, w=1 + j - sigma, name="F3")
    raise exception.NotFound(object=index, container="the master series")


def master_F_series(index, exponents, dimension, precision):
    """Evaluate the series F_index of the master diagram."""
    with precision.workdps():
        spec = master_series_spec(index, exponents, dimension)
        return hyper.outer_sum(spec, precision)


def assemble_master(exponents, dimension, precision):
    """The master diagram (-pi)^D (p^2)^Omega sum_n C_n^AC F_n.

    :returns: a :class:`base.LoopValue` with pi^D and (p^2)^Omega
    """
    with precision.workdps():
        dimension = _dimension(dimension)
        coefficients = master_coefficients_ac(exponents, dimension,
                                              precision)
        total = numerics.SignedLogReal.zero()
        flags = set()
        terms = 0
        tail = mpmath.mpf(0)
        for index, coefficient in enumerate(coefficients, 1):
            if coefficient.is_zero:
                continue
            series = master_F_series(index, exponents, dimension,
                                     precision)
            LOG.debug("F%d = %s (%d terms, %s).", index,
                      mpmath.nstr(series.value, 20), series.terms,
                      series.method)
            total = total + coefficient * series.value
            flags |= series.flags
            terms += series.terms
            tail += abs(coefficient.value()) * series.tail_bound

        g, h, i, j, l = exponents.as_tuple()
        return base.LoopValue(total, base.Affine(0, 1),
                              base.Affine(g + h + i + j + l, 1),
                              flags=flags, terms=terms, tail_bound=tail)


def master_2f1_parameters(dimension):
    """The three Gauss series of the scalar master diagram."""
    dimension = _dimension(dimension)
    half = dimension / 2
    sigma, sigma_prime, omega = half - 3, half - 2, dimension - 5
    return (hyper.PFQParams([1, 1 - omega - half], [1 - sigma]),
            hyper.PFQParams([1, 2 - sigma_prime - half], [2]),
            hyper.PFQParams([1, 1 + sigma], [omega + 1 + half]))


def master_2f1_form(dimension, precision):
    """The scalar master diagram written with three Gauss series."""
    with precision.workdps():
        dimension = _dimension(dimension)
        half = dimension / 2
        sigma, sigma_prime, omega = half - 3, half - 2, dimension - 5

        def ratio(numerators, denominators, name):
            return numerics.gamma_ratio(numerators, denominators,
                                        precision).require(name)

        def gauss(params):
            a, b = params.numerators
            return hyper.gauss_2f1_unit(a, b, params.denominators[0],
                                        precision).require(repr(params))

        prefactor = ratio([1 + sigma, 1 + sigma, -sigma], [sigma + half],
                          "master prefactor")
        first, second, third = master_2f1_parameters(dimension)
        bracket = (
            ratio([1 + sigma_prime, 1 + omega, -omega],
                  [1 - sigma, omega + half], "first term") *
            gauss(first) -
            ratio([1 + sigma_prime, sigma_prime, 1 - sigma_prime],
                  [sigma_prime - 1 + half], "second term") *
            gauss(second) -
            ratio([2 + omega, 1 + sigma_prime, -omega - 1],
                  [-sigma, omega + 1 + half], "third term") *
            gauss(third))
        return base.LoopValue(prefactor * bracket, base.Affine(0, 1),
                              base.Affine(-5, 1))


def _ratio(numerators, denominators, precision, name):
    return numerics.gamma_ratio(numerators, denominators,
                                precision).require(name)


def master_closed_bracket(dimension, precision):
    """The difference of the two gamma ratios of the closed form.

    It vanishes like eps^3 at D = 4 - 2 eps, compensating the poles of
    the prefactor.
    """
    with precision.workdps():
        dimension = _dimension(dimension)
        half = dimension / 2
        first = _ratio([3 - half, half - 1], [dimension - 3], precision,
                       "first term")
        second = _ratio([dimension - 3, 5 - dimension],
                        [3 - half, 3 * half - 5], precision, "second term")
        return first - second


def master_closed_form(dimension, precision):
    """The scalar master diagram as a combination of gamma functions.

    :raises PoleError: when one of the gamma functions is singular
    """
    with precision.workdps():
        dimension = _dimension(dimension)
        half = dimension / 2
        prefactor = _ratio([half - 2, half - 2, 2 - half, half - 1],
                           [dimension - 2], precision, "master prefactor")
        bracket = master_closed_bracket(dimension, precision)
        return base.LoopValue(prefactor * bracket,
                              base.Affine(0, 1), base.Affine(-5, 1))


def master_epsilon_limit(precision, epsilons=_EPSILONS):
    """Extrapolate the master at D = 4 - 2 eps to eps = 0.

    The values (p^2 = 1, divided by pi^4) are interpolated by a
    polynomial in eps which is evaluated at zero; the result is the
    finite limit 6 zeta(3).

    :returns: (limit, list of (eps, value))
    """
    with precision.workdps():
        points = []
        for epsilon in epsilons:
            epsilon = util.to_mpf(epsilon, "epsilon")
            dimension = 4 - 2 * epsilon
            value = master_closed_form(dimension, precision)
            points.append((epsilon, value.coefficient.value() *
                           mpmath.pi ** (dimension - 4)))

        limit = mpmath.mpf(0)
        for position, (epsilon, value) in enumerate(points):
            weight = mpmath.mpf(1)
            for other, (other_epsilon, _) in enumerate(points):
                if other != position:
                    weight *= other_epsilon / (other_epsilon - epsilon)
            limit += weight * value
        return limit, points


def expected_epsilon_limit(precision):
    """The value 6 zeta(3) of the scalar master at D = 4."""
    with precision.workdps():
        return 6 * mpmath.zeta(3)


def bubble_quadrature(e, f, dimension, precision):
    """The bubble by numerical integration over Feynman parameters.

    Valid for e, f < 0 with the exponents sum converging; used as an
    independent oracle of :func:`bubble` at p^2 = 1:

    pi^(D/2) Gamma(-sigma1) / (Gamma(-e) Gamma(-f))
        * int_0^1 x^(-f-1) (1-x)^(-e-1) (x (1-x))^sigma1 dx
    """
    with precision.workdps():
        e, f = util.to_mpf(e, "e"), util.to_mpf(f, "f")
        dimension = _dimension(dimension)
        sigma = e + f + dimension / 2
        if e >= 0 or f >= 0:
            raise exception.Invalid("The quadrature needs negative "
                                    "exponents, got e=%(e)s f=%(f)s.",
                                    e=e, f=f)
        integral = mpmath.quad(
            lambda x: x ** (sigma - f - 1) * (1 - x) ** (sigma - e - 1),
            [0, 1])
        prefactor = numerics.gamma_ratio([-sigma], [-e, -f],
                                         precision).require("quadrature")
        return (prefactor.value() * integral *
                mpmath.pi ** (dimension / 2))
