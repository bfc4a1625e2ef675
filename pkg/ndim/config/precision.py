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

"""Config options for the arbitrary precision evaluation."""

from oslo_config import cfg

from ndim.common import constant
from ndim.config import base as conf_base


class PrecisionOptions(conf_base.Options):

    """Config options for the arbitrary precision evaluation."""

    title = "Precision Options"

    def __init__(self, config):
        super(PrecisionOptions, self).__init__(config, group="precision")

    def _build_options(self):
        return [
            cfg.IntOpt(
                "digits", default=constant.DEFAULT_DIGITS,
                min=constant.MIN_DIGITS,
                help="The number of significant decimal digits required "
                     "for the reported values."),
            cfg.IntOpt(
                "tolerance_exponent", default=None,
                help="The truncation tolerance of the series is "
                     "10 ** tolerance_exponent. When it is missing "
                     "10 - digits is used."),
            cfg.IntOpt(
                "max_terms", default=constant.DEFAULT_MAX_TERMS, min=1,
                help="The maximum number of terms (or anti-diagonals) "
                     "summed for a single series."),
            cfg.IntOpt(
                "guard_digits", default=constant.DEFAULT_GUARD_DIGITS,
                min=0,
                help="Extra digits used by the intermediate computations."),
            cfg.StrOpt(
                "pole_shift", default=constant.DEFAULT_POLE_SHIFT,
                help="The shift used to approach integer exponents when "
                     "a direct evaluation hits a pole."),
        ]
