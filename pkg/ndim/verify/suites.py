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

"""The numerical self-consistency checks grouped by subject."""

import mpmath
from oslo_log import log as logging

from ndim.common import constant
from ndim.common import exception
from ndim.diagrams import master
from ndim.diagrams import threeloop
from ndim.diagrams import triangle
from ndim.special import hyper
from ndim.special import numerics
from ndim.verify import base

LOG = logging.getLogger(__name__)

# Agreement accepted between values which go through accelerated sums.
SERIES_AGREEMENT = "1e-20"
EPSILON_LIMIT_TOLERANCE = "1e-6"
EPSILON_SLOPE = (mpmath.mpf("2.9"), mpmath.mpf("3.1"))
SYMMETRY_DIMENSION = "5.3"
QUADRATURE_DIMENSIONS = ("3", "3.5", "4.4")
LARGE_MOMENTA = ("1e2", "1e4", "1e6")
GAMMA_POLE_RADIUS = "1e-3"

# Exponent sets (g, h, i, j, l) checked under both master symmetries.
SYMMETRY_CATALOG = (
    (-1, -1, -1, -1, -1),
    (-1, -1, -1, -2, -1),
    (-1, -1, -2, -1, -1),
    (-1, -2, -1, -1, -1),
    (-2, -1, -1, -1, -1),
    (-1, -1, -1, -1, -2),
    (-1, -1, -1, -2, -2),
    (-1, -1, -2, -1, -2),
    (-1, -1, -2, -2, -1),
    (-2, -2, -1, -1, -1),
    (-1, -1, -1, -3, -1),
    (-1, -1, -3, -1, -1),
)
# Sets of the catalog which may be skipped before the check fails.
SYMMETRY_MAX_SKIPPED = 4


def dimension_grid(start, stop, count, avoid=(), margin="0.05"):
    """Equally spaced dimensions, moved away from the `avoid` values."""
    margin = mpmath.mpf(margin)
    grid = []
    for dimension in mpmath.linspace(mpmath.mpf(start), mpmath.mpf(stop),
                                     count):
        while any(abs(dimension - value) < margin for value in avoid):
            dimension += 2 * margin
        grid.append(dimension)
    return grid


class _SampledCheck(base.Check):

    """Helpers for the checks drawing random parameters."""

    def generic(self, low, high):
        """A random number at least 0.05 away from the integers."""
        value = self.uniform(low, high)
        while abs(value - mpmath.nint(value)) < mpmath.mpf("0.05"):
            value = self.uniform(low, high)
        return value

    def dimension(self, low="3.2", high="5.6"):
        """A random D whose half is not close to an integer."""
        return 2 * self.generic(mpmath.mpf(low) / 2, mpmath.mpf(high) / 2)


class PochhammerContinuation(_SampledCheck):

    description = "(a)_n against (-1)^n / (1 - a)_{-n} for integer n"

    def _work(self):
        for _ in range(self.settings.pochhammer_samples):
            a = self.generic(-6, 6)
            n = self.integer(-10, 10)
            case = "a=%s n=%d" % (mpmath.nstr(a, 12), n)
            direct = numerics.pochhammer(a, n, self.precision)
            continued = numerics.pochhammer_ac(a, n, self.precision)
            if direct.is_pole or continued.is_pole:
                self.assert_true(direct.is_pole and continued.is_pole, case)
                continue
            self.compare(continued.value.value(), direct.value.value(), case)


class GammaRecurrence(_SampledCheck):

    description = "Gamma(x + 1) = x Gamma(x) and (a)_(m+n) = (a)_m (a+m)_n"

    def away_from_poles(self, low, high):
        """A random x whose distance to the poles of Gamma exceeds 1e-3."""
        radius = mpmath.mpf(GAMMA_POLE_RADIUS)
        value = self.uniform(low, high)
        while value < radius and abs(value - mpmath.nint(value)) < radius:
            value = self.uniform(low, high)
        return value

    def _work(self):
        for sample in range(self.settings.pochhammer_samples):
            x = self.away_from_poles(-10, 10)
            case = "x=%s" % mpmath.nstr(x, 12)
            left = numerics.gamma_signed(x + 1, self.precision)
            right = numerics.gamma_signed(x, self.precision)
            self.compare(left.value.value(), x * right.value.value(), case)
            if sample % 10:
                continue

            a, m, n = (self.generic(-4, 4) for _ in range(3))
            case = "a=%s m=%s n=%s" % tuple(mpmath.nstr(item, 12)
                                            for item in (a, m, n))
            try:
                whole = numerics.pochhammer(a, m + n, self.precision)
                parts = (numerics.pochhammer(a, m, self.precision)
                         .require(case) *
                         numerics.pochhammer(a + m, n, self.precision)
                         .require(case))
                self.compare(whole.require(case).value(), parts.value(),
                             case)
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)


class GaussSummation(_SampledCheck):

    description = "2F1 at unit argument against the Gauss summation"

    def _work(self):
        margin = mpmath.mpf("0.3")
        for _ in range(self.settings.gauss_samples):
            a, b = self.generic(-3, 3), self.generic(-3, 3)
            c = a + b + margin + self.uniform(0, 3)
            case = "a=%s b=%s c=%s" % tuple(mpmath.nstr(item, 12)
                                            for item in (a, b, c))
            try:
                series = hyper.pfq_unit(hyper.PFQParams([a, b], [c]),
                                        self.precision)
                closed = hyper.gauss_2f1_unit(a, b, c, self.precision)
                self.compare(series.value, closed.require(case).value(),
                             case)
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)


class SaalschutzSummation(_SampledCheck):

    description = "Balanced terminating 3F2 against the Pochhammer product"

    def _work(self):
        for _ in range(self.settings.coalesce_samples):
            n = self.integer(0, 15)
            a, b, c = (self.generic(-4, 4) for _ in range(3))
            case = "n=%d a=%s b=%s c=%s" % ((n, ) + tuple(
                mpmath.nstr(item, 12) for item in (a, b, c)))
            try:
                series = hyper.pfq_unit(
                    hyper.PFQParams([-n, a, b], [c, 1 + a + b - c - n]),
                    self.precision)
                value = numerics.SignedLogReal.one()
                for argument, power in ((c - a, 1), (c - b, 1),
                                        (c, -1), (c - a - b, -1)):
                    factor = numerics.pochhammer(argument, n,
                                                 self.precision)
                    factor = factor if power > 0 else factor.reciprocal()
                    value = value * factor.require(case)
                self.compare(series.value, value.value(), case)
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)


class Coalescence(_SampledCheck):

    description = "Series with cancelling parameters against their reduction"

    def _work(self):
        for _ in range(self.settings.coalesce_samples):
            n = self.integer(0, 12)
            a, b, d, e = (self.generic(-4, 4) for _ in range(4))
            case = "n=%d b=%s d=%s e=%s" % ((n, ) + tuple(
                mpmath.nstr(item, 12) for item in (b, d, e)))
            try:
                series = hyper.pfq_unit(
                    hyper.PFQParams([-n, b, d], [e, d]), self.precision)
                direct = mpmath.fsum(
                    mpmath.rf(-n, k) * mpmath.rf(b, k) /
                    (mpmath.rf(e, k) * mpmath.factorial(k))
                    for k in range(n + 1))
                self.compare(series.value, direct, case)

                c = a + b + mpmath.mpf("0.5") + self.uniform(0, 2)
                case = "a=%s b=%s c=%s d=%s" % tuple(
                    mpmath.nstr(item, 12) for item in (a, b, c, d))
                series = hyper.pfq_unit(
                    hyper.PFQParams([a, d, b], [d, c]), self.precision)
                closed = hyper.gauss_2f1_unit(a, b, c, self.precision)
                self.compare(series.value, closed.require(case).value(),
                             case)
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)


class _TriangleCheck(_SampledCheck):

    def ndim_exponents(self):
        """Non-negative integer exponents, where every F4 terminates."""
        return triangle.TriangleExponents(
            *(self.integer(0, 3) for _ in range(3)))

    def kinematics(self, low="0.5", high="40"):
        return triangle.Kinematics(*(self.uniform(low, high)
                                     for _ in range(3)))

    def inside_region(self):
        """p2 = 1 with sqrt(q2) + sqrt(r2) < 0.8."""
        root_q = self.uniform("0.05", "0.4")
        root_r = self.uniform("0.05", "0.4")
        return triangle.Kinematics(1, root_q ** 2, root_r ** 2)

    @staticmethod
    def total(terms):
        value = mpmath.mpf(0)
        for coefficient, series in terms:
            if series is not None:
                value += coefficient.value() * series.value
        return value


class ThreeTermAgreement(_TriangleCheck):

    description = "The three-term sets agree for integer exponents"

    def _work(self):
        for _ in range(self.settings.representation_samples):
            exponents = self.ndim_exponents()
            kinematics = self.kinematics()
            dimension = self.dimension()
            case = "%r %r D=%s" % (exponents, kinematics,
                                   mpmath.nstr(dimension, 12))
            try:
                values = [
                    triangle.triangle_3term(
                        representation, exponents, kinematics, dimension,
                        self.precision).coefficient.value()
                    for representation in triangle.REPRESENTATIONS[1:]]
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)
                continue
            self.compare(values[1], values[0], case + " primed")
            self.compare(values[2], values[0], case + " double primed")


class FourTermReduction(_TriangleCheck):

    description = "The first three four-term products give the three-term set"

    def _work(self):
        for _ in range(self.settings.representation_samples):
            exponents = self.ndim_exponents()
            kinematics = self.inside_region()
            dimension = self.dimension()
            case = "%r %r D=%s" % (exponents, kinematics,
                                   mpmath.nstr(dimension, 12))
            try:
                four = triangle.triangle_terms(
                    triangle.FOUR_TERM, exponents, kinematics, dimension,
                    self.precision, continued=False)
                three = triangle.triangle_terms(
                    triangle.THREE_TERM, exponents, kinematics, dimension,
                    self.precision, continued=False)
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)
                continue
            self.compare(self.total(four[:3]), self.total(three), case)


class TriangleSymmetry(_TriangleCheck):

    description = "The four-term triangle under i <-> j with q2 <-> r2"

    def _work(self):
        for _ in range(self.settings.representation_samples):
            exponents = triangle.TriangleExponents(
                *(self.generic("-1.45", "-0.55") for _ in range(3)))
            kinematics = self.inside_region()
            dimension = self.dimension()
            case = "%r %r D=%s" % (exponents, kinematics,
                                   mpmath.nstr(dimension, 12))
            swapped = triangle.TriangleExponents(exponents.j, exponents.i,
                                                 exponents.l)
            try:
                value = triangle.triangle_4term(
                    exponents, kinematics, dimension, self.precision)
                mirror = triangle.triangle_4term(
                    swapped, kinematics.swapped("q2", "r2"), dimension,
                    self.precision)
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)
                continue
            self.compare(mirror.coefficient.value(),
                         value.coefficient.value(), case)


class TriangleBubbleLimit(_TriangleCheck):

    description = "The four-term triangle with l = 0 is the bubble"

    def _work(self):
        for _ in range(self.settings.representation_samples):
            i, j = (self.generic("-1.45", "-0.55") for _ in range(2))
            exponents = triangle.TriangleExponents(i, j, 0)
            kinematics = self.kinematics()
            dimension = self.dimension()
            case = "%r %r D=%s" % (exponents, kinematics,
                                   mpmath.nstr(dimension, 12))
            try:
                value = triangle.triangle_4term(
                    exponents, kinematics, dimension, self.precision)
                bubble = master.bubble(i, j, dimension, self.precision)
                self.compare(
                    value.value(dimension, kinematics.p2, self.precision),
                    bubble.value(dimension, kinematics.p2, self.precision),
                    case)
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)


class PrimedLargeMomentum(_TriangleCheck):

    description = "The leading primed F4 tends to 1 as q2 grows"

    def _work(self):
        for _ in range(max(self.settings.representation_samples // 5, 1)):
            exponents = self.ndim_exponents()
            dimension = self.dimension()
            case = "%r D=%s" % (exponents, mpmath.nstr(dimension, 12))
            distances = []
            try:
                for q2 in LARGE_MOMENTA:
                    kinematics = triangle.Kinematics(1, q2, 1)
                    _, leading = triangle.triangle_terms(
                        triangle.THREE_TERM_PRIMED, exponents, kinematics,
                        dimension, self.precision, continued=False)[0]
                    distances.append(abs(leading.value - 1))
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)
                continue
            self.assert_true(
                all(later <= earlier for earlier, later
                    in zip(distances, distances[1:])) and
                distances[-1] < mpmath.mpf("1e-3"), case)


class BubbleQuadrature(_SampledCheck):

    description = "The bubble against a numerical Feynman integral"

    def cases(self):
        for dimension in QUADRATURE_DIMENSIONS:
            yield mpmath.mpf(-1), mpmath.mpf(-1), mpmath.mpf(dimension)
        for _ in range(self.settings.representation_samples):
            e, f = (self.generic("-1.45", "-0.55") for _ in range(2))
            yield e, f, self.dimension("3.2", "4.8")

    def _work(self):
        self._tolerance = mpmath.mpf(10) ** (-(self.precision.digits // 2))
        for e, f, dimension in self.cases():
            case = "e=%s f=%s D=%s" % tuple(mpmath.nstr(item, 12)
                                            for item in (e, f, dimension))
            try:
                value = master.bubble(e, f, dimension, self.precision)
                integral = master.bubble_quadrature(e, f, dimension,
                                                    self.precision)
                self.compare(value.value(dimension, 1, self.precision),
                             integral, case)
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)


class MasterAgreement(base.Check):

    description = "The master series against the closed and the 2F1 forms"

    def _work(self):
        self._tolerance = max(self.precision.agreement_tolerance,
                              mpmath.mpf(SERIES_AGREEMENT))
        exponents = master.MasterExponents.all_minus_one()
        for dimension in dimension_grid("3.1", "4.9",
                                        self.settings.master_grid,
                                        avoid=(3, 4, 5)):
            case = "D=%s" % mpmath.nstr(dimension, 12)
            try:
                series = master.assemble_master(
                    exponents, dimension, self.precision)
                closed = master.master_closed_form(dimension,
                                                   self.precision)
                gauss = master.master_2f1_form(dimension, self.precision)
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)
                continue
            except exception.NdimException as exc:
                self.fail(case, exc)
                continue
            reference = closed.coefficient.value()
            self.compare(series.coefficient.value(), reference,
                         case + " series")
            self.compare(gauss.coefficient.value(), reference,
                         case + " 2F1")
            if constant.FLAG_SLOW in series.flags:
                self.note("%s converges slowly" % case, constant.FLAG_SLOW)


class MasterEpsilonSlope(base.Check):

    description = "The bracket of the closed form vanishes like eps^3"

    def _work(self):
        points = [mpmath.mpf("1e-2"), mpmath.mpf("1e-3")]
        values = [abs(master.master_closed_bracket(4 - 2 * epsilon,
                                                   self.precision).value())
                  for epsilon in points]
        slope = (mpmath.log(values[0] / values[1]) /
                 mpmath.log(points[0] / points[1]))
        self.note("slope %s" % mpmath.nstr(slope, 8))
        self.assert_true(EPSILON_SLOPE[0] <= slope <= EPSILON_SLOPE[1],
                         "slope %s" % mpmath.nstr(slope, 8))


class MasterEpsilonLimit(base.Check):

    description = "The master at D = 4 - 2 eps tends to 6 zeta(3)"

    def _work(self):
        self._tolerance = mpmath.mpf(EPSILON_LIMIT_TOLERANCE)
        if self.precision.digits < 30:
            self.note("the cancellations of the bracket use %d digits" %
                      self.precision.digits,
                      constant.FLAG_REDUCED_PRECISION)
        limit, points = master.master_epsilon_limit(self.precision)
        for epsilon, value in points:
            self.note("eps=%s value=%s" % (mpmath.nstr(epsilon, 4),
                                           mpmath.nstr(value, 20)))
        self.compare(limit, master.expected_epsilon_limit(self.precision),
                     "limit %s" % mpmath.nstr(limit, 20))


class MasterSymmetry(base.Check):

    description = "The master series under its two symmetries"

    def _work(self):
        dimension = mpmath.mpf(SYMMETRY_DIMENSION)
        for values in SYMMETRY_CATALOG:
            exponents = master.MasterExponents(*values)
            case = repr(exponents)
            try:
                value = master.assemble_master(exponents, dimension,
                                               self.precision)
                pairs = master.assemble_master(exponents.swapped_pairs(),
                                               dimension, self.precision)
                sides = master.assemble_master(exponents.swapped_sides(),
                                               dimension, self.precision)
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)
                continue
            except exception.NdimException as exc:
                self.fail(case, exc)
                continue
            reference = value.coefficient.value()
            self.compare(pairs.coefficient.value(), reference,
                         case + " g<->h, i<->j")
            self.compare(sides.coefficient.value(), reference,
                         case + " (g,h)<->(i,j)")
        if self._skipped > SYMMETRY_MAX_SKIPPED:
            self.assert_true(False, "%d skipped sets" % self._skipped)


class CoefficientPhase(_SampledCheck):

    description = "The continued coefficients collect (-1)^(-D)"

    def _work(self):
        for _ in range(10):
            exponents = master.MasterExponents(
                *(self.integer(-3, -1) for _ in range(5)))
            dimension = self.dimension("3.2", "5.6")
            case = "%r D=%s" % (exponents, mpmath.nstr(dimension, 12))
            for product in master.coefficient_factors(exponents,
                                                      dimension):
                try:
                    _, phase = product.evaluate(self.precision,
                                                continued=True)
                except base.PRECONDITION_ERRORS as exc:
                    self.skip("%s %s" % (case, product.name), exc)
                    continue
                self.assert_true(
                    numerics.is_integer(phase + dimension, self.precision),
                    "%s %s phase %s" % (case, product.name,
                                        mpmath.nstr(phase, 12)))


class ThreeLoopAgreement(base.Check):

    description = "The composed three-loop diagram against its closed form"

    def _work(self):
        self._tolerance = max(self.precision.agreement_tolerance,
                              mpmath.mpf(SERIES_AGREEMENT))
        exponents = threeloop.ThreeLoopExponents.all_minus_one()
        for dimension in dimension_grid("3.1", "4.5",
                                        self.settings.threeloop_grid,
                                        avoid=threeloop.CLOSED_FORM_POLES):
            case = "D=%s" % mpmath.nstr(dimension, 12)
            try:
                composed = threeloop.compose_threeloop(exponents, dimension,
                                                       self.precision)
                closed = threeloop.threeloop_closed_form(dimension,
                                                         self.precision)
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)
                continue
            except exception.NdimException as exc:
                self.fail(case, exc)
                continue
            self.compare(composed.coefficient.value(),
                         closed.coefficient.value(), case)


class ThreeLoopBubbleSymmetry(_SampledCheck):

    description = "The three-loop diagram under e <-> f"

    def _work(self):
        for _ in range(5):
            e, f = (self.generic("-1.45", "-0.55") for _ in range(2))
            exponents = threeloop.ThreeLoopExponents(e, f, -1, -1, -1, -1)
            dimension = self.dimension("4.2", "4.6")
            case = "%r D=%s" % (exponents, mpmath.nstr(dimension, 12))
            try:
                value = threeloop.compose_threeloop(exponents, dimension,
                                                    self.precision)
                mirror = threeloop.compose_threeloop(
                    exponents.swapped_bubble(), dimension, self.precision)
            except base.PRECONDITION_ERRORS as exc:
                self.skip(case, exc)
                continue
            except exception.NdimException as exc:
                self.fail(case, exc)
                continue
            self.compare(mirror.coefficient.value(),
                         value.coefficient.value(), case)


SUITES = {
    "identities": base.Suite(
        "identities", [PochhammerContinuation, GammaRecurrence,
                       GaussSummation, SaalschutzSummation, Coalescence],
        "Gamma and Pochhammer identities and unit-argument summations"),
    "representations": base.Suite(
        "representations", [ThreeTermAgreement, FourTermReduction,
                            TriangleSymmetry, TriangleBubbleLimit,
                            PrimedLargeMomentum,
                            BubbleQuadrature],
        "The triangle representations and the bubble"),
    "master": base.Suite(
        "master", [MasterAgreement, MasterEpsilonSlope, MasterEpsilonLimit,
                   MasterSymmetry, CoefficientPhase],
        "The two-loop master diagram"),
    "threeloop": base.Suite(
        "threeloop", [ThreeLoopAgreement, ThreeLoopBubbleSymmetry],
        "The three-loop diagram with an inserted bubble"),
}


def get_suite(name):
    """Return the suite registered under `name`."""
    try:
        return SUITES[name]
    except KeyError:
        raise exception.NotFound(object=name, container="the suites")


def run_suite(name, precision, settings):
    """Run the suite `name` and return the list of check results."""
    return get_suite(name).run(precision, settings)
