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

"""Config options for the verification suites."""

from oslo_config import cfg

from ndim.config import base as conf_base


class VerifyOptions(conf_base.Options):

    """Config options for the verification suites."""

    title = "Verification Options"

    def __init__(self, config):
        super(VerifyOptions, self).__init__(config, group="verify")

    def _build_options(self):
        return [
            cfg.IntOpt(
                "seed", default=1729,
                help="The seed of the random samples."),
            cfg.IntOpt(
                "pochhammer_samples", default=10000, min=1,
                help="Random cases for the Pochhammer identities."),
            cfg.IntOpt(
                "gauss_samples", default=200, min=1,
                help="Random cases for the Gauss summation check."),
            cfg.IntOpt(
                "coalesce_samples", default=100, min=1,
                help="Random cases for the coalescence check."),
            cfg.IntOpt(
                "representation_samples", default=50, min=1,
                help="Random cases for the triangle representations."),
            cfg.IntOpt(
                "master_grid", default=10, min=2,
                help="Number of dimensions sampled for the master."),
            cfg.IntOpt(
                "threeloop_grid", default=8, min=2,
                help="Number of dimensions sampled for the three-loop "
                     "diagram."),
        ]
