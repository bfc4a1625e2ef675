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

"""This module contains the entry point for the command line application."""

import argparse
import sys

from oslo_log import log as logging

from ndim.cli import base as cli_base
from ndim.cli import commands as cli_commands
from ndim.common import constant
from ndim import config

CONFIG = config.CONFIG


class NdimCli(cli_base.Application):

    """Command line application for the NDIM integral engine."""

    commands = [
        (cli_commands.Evaluate, "commands"),
        (cli_commands.Verify, "commands"),
        (cli_commands.Sweep, "commands"),
    ]

    def setup(self):
        """Setup the command line parser.

        Extend the parser configuration in order to expose all
        the received commands.
        """
        self._parser = argparse.ArgumentParser(
            prog="ndim",
            description="High precision evaluation of massless two-point "
                        "integrals.")
        commands = self._parser.add_subparsers(title="[commands]",
                                               dest="command")

        self._register_parser("commands", commands)


def exit_status(application):
    """Nonzero iff the command failed or one of its checks did."""
    if application.status != constant.TASK_DONE:
        return 1
    return 1 if getattr(application.result, "failed", False) else 0


def main(command_line=None):
    """The ndim command line application."""
    logging.setup(CONFIG, "ndim")
    ndim = NdimCli(sys.argv[1:] if command_line is None else command_line)
    ndim.run()
    return exit_status(ndim)
