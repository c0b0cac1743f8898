# -*- coding: utf-8 -*-
"""
    Main module for running the Clique VC Tool from the command line.
"""

##### IMPORTS #####
# Standard imports
import sys

# Local imports
from .cli import run
from .package_check import PackageChecker


##### MAIN #####
# Check package versions before running
pc = PackageChecker()
pc.check_versions()

sys.exit(run(sys.argv[1:]))
