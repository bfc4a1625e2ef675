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

"""Contract shared by every group of NDIM config options."""

import abc

import six
from oslo_config import cfg


@six.add_metaclass(abc.ABCMeta)
class Options(object):

    """Contract class for all the collections of config options.

    Subclasses describe their options in :meth:`_build_options`; the
    registration into the global `ConfigOpts` object is shared.
    """

    title = None

    def __init__(self, config, group="DEFAULT"):
        self._config = config
        self._group_name = group
        self._options = self._build_options()

    @property
    def group_name(self):
        """The group name for the current options."""
        return self._group_name

    @abc.abstractmethod
    def _build_options(self):
        """Return the list of `cfg.Opt` objects owned by this group."""
        pass

    def register(self):
        """Register the current options to the global ConfigOpts object."""
        group = cfg.OptGroup(self.group_name,
                             title=self.title or self.group_name)
        self._config.register_group(group)
        self._config.register_opts(self._options, group=group)

    def list(self):
        """Return a list which contains all the available options."""
        return self._options
