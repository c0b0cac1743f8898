# -*- coding: utf-8 -*-
"""
    Module for checking that the installed Python packages match the
    conda environment file.
"""

##### IMPORTS #####
# Standard imports
from __future__ import annotations
import re
import sys
import warnings
from importlib import metadata
from pathlib import Path
from typing import Optional

# Third party imports
import yaml
from packaging import specifiers, version


##### CLASSES #####
class PackageChecker:
    """Compares installed package versions against the environment file.

    Parameters
    ----------
    env_path : Path, optional
        Path to the environment YAML file, by default `DEFAULT_FILE`.
    """

    DEFAULT_FILE = Path(__file__).resolve().parent.parent / "environment.yml"
    REQUIREMENT_PATTERN = re.compile(
        r"([\w.\-]+)"  # package name
        r"\s*(?:([>=<~!]{1,2})\s*"  # comparator
        r"(\d+(?:\.\d+){0,2}(?:\.\*)?))?"  # version, optionally ending in *
    )

    def __init__(self, env_path: Optional[Path] = None):
        self._versions: Optional[dict[str, Optional[str]]] = None
        self._expected: Optional[dict[str, Optional[specifiers.SpecifierSet]]] = None
        self.env_path = self.DEFAULT_FILE if env_path is None else Path(env_path)
        self.env_list = self.read_environment()

    def read_environment(self) -> list[str]:
        """Read the dependencies list from the environment file.

        Raises
        ------
        FileNotFoundError
            If the environment file doesn't exist.
        yaml.YAMLError
            If there is a problem parsing the YAML file.
        ValueError
            If there is no dependency information in the environment file.
        """
        if not self.env_path.exists():
            raise FileNotFoundError(f"Environment file doesn't exist - {self.env_path}")
        with open(self.env_path, "r", encoding="utf-8") as f:
            try:
                data = yaml.safe_load(f)
            except yaml.YAMLError as e:
                raise yaml.YAMLError(f"Error reading environment file: {e}") from e
        deps = (data or {}).get("dependencies")
        if not deps:
            raise ValueError("Dependency information is missing from the environment file")
        return [d for d in deps if isinstance(d, str)]

    def _parse_expected(self) -> dict[str, Optional[specifiers.SpecifierSet]]:
        """Convert each conda requirement to a pip style specifier set."""
        expected = {}
        for requirement in self.env_list:
            match = self.REQUIREMENT_PATTERN.fullmatch(requirement.strip())
            if match is None:
                warnings.warn(f"Can't parse requirement '{requirement}'", UserWarning)
                continue
            name, comparator, number = match.groups()
            if comparator is None:
                expected[name.lower()] = None
                continue
            # Conda uses a single '=' for an exact (or wildcard) match
            if comparator == "=":
                comparator = "=="
            expected[name.lower()] = specifiers.SpecifierSet(f"{comparator}{number}")
        return expected

    @property
    def expected(self) -> dict[str, Optional[specifiers.SpecifierSet]]:
        """Expected package versions, None for packages without a version constraint."""
        if self._expected is None:
            self._expected = self._parse_expected()
        return self._expected

    @property
    def versions(self) -> dict[str, Optional[str]]:
        """Installed version of each expected package, None if it can't be found."""
        if self._versions is None:
            self._versions = {}
            for name in self.expected:
                if name == "python":
                    self._versions[name] = ".".join(str(i) for i in sys.version_info[:3])
                    continue
                try:
                    self._versions[name] = metadata.version(name)
                except metadata.PackageNotFoundError:
                    self._versions[name] = None
        return self._versions

    def check_versions(self) -> None:
        """Checks the installed package `versions` against the `expected`.

        Raises
        ------
        ImportError
            If any of the installed packages aren't the correct version.

        Warns
        -----
        UserWarning
            If the installed version cannot be found for an expected package.
        """
        incorrect = []
        for name, spec in self.expected.items():
            installed = self.versions.get(name)
            if installed is None:
                warnings.warn(f"'{name}' version should be {spec} but is unknown", UserWarning)
                continue
            if spec is None:
                continue
            if not spec.contains(version.parse(installed), prereleases=True):
                incorrect.append(
                    f"'{name}' version should be {spec} but instead is {installed}"
                )

        if incorrect:
            raise ImportError("\n".join(["package versions"] + incorrect))
