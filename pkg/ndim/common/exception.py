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

"""NDIM base exception handling."""


class NdimException(Exception):
    """Base NDIM exception

    To correctly use this class, inherit from it and define
    a `template` property.

    That `template` will be formated using the keyword arguments
    provided to the constructor.

    The `category` property is the short name used in the reports.
    """

    template = "An unknown exception occurred."
    category = "error"

    def __init__(self, message=None, **kwargs):
        message = message or self.template
        self.kwargs = kwargs

        try:
            message = message % kwargs
        except (TypeError, KeyError):
            # Something went wrong during message formatting.
            # Probably kwargs doesn't match a variable in the message.
            message = ("Message: %(template)s. Extra or "
                       "missing info: %(kwargs)s" %
                       {"template": message, "kwargs": kwargs})

        super(NdimException, self).__init__(message)


class CliError(NdimException):

    """Something went wrong during the processing of command line."""

    template = "Something went wrong during the procesing of command line."
    category = "cli"


class Invalid(NdimException):

    """The received object is not valid."""

    template = "Unacceptable parameters."
    category = "invalid"


class InvalidPrecision(Invalid):

    """The precision settings do not satisfy their constraints."""

    template = "Invalid precision settings: %(reason)s"
    category = "invalid-precision"


class NotFound(NdimException):

    """The required object is not available in container."""

    template = "The %(object)r was not found in %(container)s."
    category = "not-found"


class NotSupported(NdimException):

    """The functionality required is not available in the current context."""

    template = "%(feature)s is not available in %(context)s."
    category = "not-supported"


class PoleError(NdimException):

    """A gamma function pole was reached where a finite value is needed."""

    template = "Pole of the gamma function at %(argument)s (%(context)s)."
    category = "pole"


class DoublePole(PoleError):

    """Both gamma functions of a ratio are singular."""

    template = ("Both Gamma(%(numerator)s) and Gamma(%(denominator)s) "
                "are singular.")
    category = "double-pole"


class NearPole(PoleError):

    """The dimension is too close to a known pole of the expression."""

    template = ("D = %(dimension)s is within %(radius)s of the pole "
                "D = %(pole)s of %(expression)s.")
    category = "near-pole"


class NonConvergent(NdimException):

    """The series does not converge at unit argument."""

    template = ("The series %(series)s does not converge "
                "(margin %(margin)s).")
    category = "non-convergent"


class DenominatorPole(NdimException):

    """A denominator parameter reaches zero before the series terminates."""

    template = ("The denominator parameter %(parameter)s of %(series)s "
                "vanishes at term %(term)s.")
    category = "denominator-pole"


class MaxTermsExceeded(NdimException):

    """The series did not meet the stopping rule within max_terms."""

    template = "The series %(series)s needs more than %(max_terms)s terms."
    category = "max-terms"


class OutsideRegion(NdimException):

    """The Appell F4 variables are outside the convergence region."""

    template = ("The variables x=%(x)s, y=%(y)s are outside the region "
                "sqrt|x| + sqrt|y| < 1 (%(context)s).")
    category = "outside-region"


class InvalidSpec(NdimException):

    """The outer sum cannot be reduced to a finite number of series."""

    template = "The outer sum %(spec)s does not terminate: %(reason)s"
    category = "invalid-spec"


class NonIntegerPhase(NdimException):

    """An unpaired (-1)^x phase with non-integer x was requested."""

    template = ("The phase (-1)^(%(exponent)s) is not real "
                "(%(context)s).")
    category = "non-integer-phase"
