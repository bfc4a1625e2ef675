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

"""Config options for the reports."""

from oslo_config import cfg

from ndim.common import constant
from ndim.config import base as conf_base


class ReportOptions(conf_base.Options):

    """Config options for the reports."""

    title = "Report Options"

    def __init__(self, config):
        super(ReportOptions, self).__init__(config, group="report")

    def _build_options(self):
        return [
            cfg.StrOpt(
                "format", default="text",
                choices=constant.OUTPUT_FORMATS,
                help="The output format of the reports."),
            cfg.StrOpt(
                "p2", default="1",
                help="The external momentum squared used when a value "
                     "is reported numerically."),
        ]
