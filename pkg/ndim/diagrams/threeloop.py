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

"""The three-loop self-energy obtained by inserting a bubble.

The bubble (Q^2)^e ((Q - s)^2)^f is integrated first; the remaining
two loops form a master diagram whose exponent l is shifted to
sigma1 = e + f + D/2.
"""

import mpmath
from oslo_log import log as logging

from ndim.common import constant
from ndim.common import exception
from ndim.common import util
from ndim.diagrams import base
from ndim.diagrams import master
from ndim.special import hyper
from ndim.special import numerics

LOG = logging.getLogger(__name__)

# Values of D where a gamma function of the closed form is singular.
CLOSED_FORM_POLES = (mpmath.mpf(10) / 3, 4, 3, mpmath.mpf(8) / 3,
                     mpmath.mpf(5) / 2, mpmath.mpf(14) / 3, 5)


class ThreeLoopExponents(object):

    """The exponents (e, f) of the inserted bubble and (g, h, i, j)."""

    def __init__(self, e, f, g, h, i, j):
        self.e, self.f, self.g, self.h, self.i, self.j = (
            util.to_mpf(value, name)
            for value, name in zip((e, f, g, h, i, j), "efghij"))

    @classmethod
    def all_minus_one(cls):
        return cls(-1, -1, -1, -1, -1, -1)

    def sigma1(self, dimension):
        """sigma1 = e + f + D/2."""
        return self.e + self.f + dimension / 2

    def master_exponents(self, dimension):
        """The exponents of the master diagram left after the bubble."""
        return master.MasterExponents(self.g, self.h, self.i, self.j,
                                      self.sigma1(dimension))

    def swapped_bubble(self):
        return ThreeLoopExponents(self.f, self.e, self.g, self.h, self.i,
                                  self.j)

    def as_tuple(self):
        return (self.e, self.f, self.g, self.h, self.i, self.j)

    def __repr__(self):
        return "(e, f, g, h, i, j) = (%s)" % ", ".join(
            mpmath.nstr(value, 10) for value in self.as_tuple())


def check_near_pole(dimension, expression="the three-loop closed form"):
    """Reject dimensions close to the poles of the closed form."""
    radius = mpmath.mpf(constant.NEAR_POLE_RADIUS)
    for pole in CLOSED_FORM_POLES:
        if abs(dimension - pole) < radius:
            raise exception.NearPole(dimension=dimension, radius=radius,
                                     pole=mpmath.nstr(pole, 6),
                                     expression=expression)


def compose_threeloop(exponents, dimension, precision):
    """The three-loop diagram as bubble times a shifted master.

    pi^(D/2) (-e)_s (-f)_s / (-s)_(2s + D/2) * master(g, h, i, j, s)
    with s = sigma1.
    """
    with precision.workdps():
        dimension = util.to_mpf(dimension, "D")
        check_near_pole(dimension, "the three-loop composition")
        half = dimension / 2
        sigma1 = exponents.sigma1(dimension)
        LOG.debug("Inserting the bubble with sigma1 = %s.",
                  mpmath.nstr(sigma1, 20))

        factors = base.bubble_factors(exponents.e, exponents.f, sigma1,
                                      half, name="inserted bubble")
        bubble = factors.continued_value(precision, -half)
        inner = master.assemble_master(
            exponents.master_exponents(dimension), dimension, precision)

        e, f, g, h, i, j = exponents.as_tuple()
        return base.LoopValue(bubble * inner.coefficient,
                              base.Affine(0, mpmath.mpf(3) / 2),
                              base.Affine(e + f + g + h + i + j,
                                          mpmath.mpf(3) / 2),
                              flags=inner.flags, terms=inner.terms,
                              tail_bound=abs(bubble.value()) *
                              inner.tail_bound)


def threeloop_parameters(dimension):
    """The 3F2 series of the closed form."""
    dimension = util.to_mpf(dimension, "D")
    return hyper.PFQParams(
        [1, dimension - 2, 3 * dimension / 2 - 4],
        [2 * dimension - 5, 3 * dimension / 2 - 3])


def threeloop_closed_form(dimension, precision):
    """The scalar three-loop diagram in closed form.

    2 pi^(3D/2) (p^2)^(3D/2 - 6) G^3(D/2 - 1) G(5 - 3D/2) / (D - 3)
      * {cos(pi D) G(2 - D/2) G(3 - D)
         - G(D/2 - 1) / ((3D/2 - 4) G(2D - 5)) 3F2(...)}

    :raises NearPole: within 1e-3 of one of :data:`CLOSED_FORM_POLES`
    """
    with precision.workdps():
        dimension = util.to_mpf(dimension, "D")
        check_near_pole(dimension)
        half = dimension / 2

        def ratio(numerators, denominators, name):
            return numerics.gamma_ratio(numerators, denominators,
                                        precision).require(name)

        prefactor = ratio([half - 1] * 3 + [5 - 3 * half], [],
                          "three-loop prefactor")
        prefactor = prefactor * (mpmath.mpf(2) / (dimension - 3))

        first = ratio([2 - half, 3 - dimension], [], "first term")
        first = first * mpmath.cos(mpmath.pi * dimension)

        series = hyper.pfq_unit(threeloop_parameters(dimension), precision)
        second = ratio([half - 1], [2 * dimension - 5], "second term")
        second = second * (series.value / (3 * half - 4))

        return base.LoopValue(prefactor * (first - second),
                              base.Affine(0, mpmath.mpf(3) / 2),
                              base.Affine(-6, mpmath.mpf(3) / 2),
                              flags=series.flags, terms=series.terms,
                              tail_bound=series.tail_bound)
