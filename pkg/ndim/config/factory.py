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

"""Lookup of the classes which own the NDIM config options."""

_OPT_PATHS = (
    'ndim.config.precision.PrecisionOptions',
    'ndim.config.report.ReportOptions',
    'ndim.config.verify.VerifyOptions',
)


def _load_class(class_path):
    """Load the module and return the required class."""
    module_path, class_name = class_path.rsplit('.', 1)
    module = __import__(module_path, fromlist=[class_name])
    return getattr(module, class_name)


def get_options():
    """Return a list of all the available `Options` subclasses."""
    return [_load_class(class_path) for class_path in _OPT_PATHS]
