# -*- coding: utf-8 -*-
"""
    Script for scanning families of graphs for counterexamples to the
    clique number bounds.

    Every graph in the scan is checked with `verify_graph` for each
    clique order and the reports are written to a single CSV, with any
    violations logged as errors.
"""

##### IMPORTS #####
# Standard imports
import datetime as dt
import logging
import pathlib
import sys
from typing import Iterator

# Third party imports
import caf.toolkit
import pandas as pd
from pydantic import types

# Local imports
sys.path.extend(["clique_vc_tool", "."])
# pylint: disable=wrong-import-position
from CVT import graph_core
from CVT.budgets import Budgets
from CVT.graph_core import Graph
from CVT.theorem_bench import verify

# pylint: enable=wrong-import-position

##### CONSTANTS #####
LOG = logging.getLogger("CVT.theorem_scan")
CONFIG_PATH = pathlib.Path("clique_vc_tool/scripts/theorem_scan.yml")
REPORT_COLUMNS = [
    "graph",
    "n",
    "r",
    "c_float",
    "omega",
    "free",
    "vc_mc",
    "bound_main",
    "n_min",
    "main_checked",
    "main_holds",
    "bound_holmsen",
    "bound_chordal",
    "k22_free",
    "chordal",
    "violations",
]


##### CLASSES #####
class ScanConfig(caf.toolkit.BaseConfig):
    """Parameters for the no-counterexample scan."""

    output_folder: types.DirectoryPath
    orders: list[types.PositiveInt] = [2, 3]
    split_sizes: list[types.PositiveInt] = [50, 100, 200]
    """Vertex counts of the complete split graphs."""
    split_densities: list[float] = [0.3, 0.5, 0.75, 0.9]
    complete_max_n: types.PositiveInt = 60
    random_graphs: types.NonNegativeInt = 200
    random_max_n: types.PositiveInt = 14
    seed: int = 0
    threads: types.PositiveInt = 1
    node_budget: types.PositiveInt = 10**7


##### FUNCTIONS #####
def _init_logger(output_folder: pathlib.Path):
    root = logging.getLogger("CVT")
    root.setLevel(logging.DEBUG)

    stream = logging.StreamHandler()
    stream.setLevel(logging.INFO)
    stream_format = logging.Formatter(
        "{asctime} [{levelname:^8.8}] {message}", datefmt="%H:%M:%S", style="{"
    )
    stream.setFormatter(stream_format)
    root.addHandler(stream)

    file = logging.FileHandler(output_folder / "Theorem_scan.log")
    file.setLevel(logging.DEBUG)
    file_format = logging.Formatter(
        "{asctime} [{name:30.30}] [{module:20.20}:{lineno!s:5.5}] "
        "[{levelname:^8.8}] {message}",
        style="{",
    )
    file.setFormatter(file_format)
    root.addHandler(file)


def scan_graphs(params: ScanConfig) -> Iterator[tuple[str, Graph]]:
    """Yield a name and graph for every graph in the scan.

    Complete split graphs over the size / density grid, complete graphs
    up to `complete_max_n` and seeded G(n, 1/2) graphs.
    """
    for n in params.split_sizes:
        for c in params.split_densities:
            g, t = graph_core.gen_chordal_extremal(n, c)
            yield f"split n={n} c={c} t={t}", g

    for n in range(2, params.complete_max_n + 1):
        yield f"complete n={n}", graph_core.gen_basic("complete", n)

    for i in range(params.random_graphs):
        n = 4 + i % (params.random_max_n - 3)
        seed = params.seed + i
        yield f"random n={n} seed={seed}", graph_core.gen_random(n, 0.5, seed)


def main(params: ScanConfig) -> None:
    """Run the scan and write the reports CSV to a dated output folder."""
    output_folder = params.output_folder / f"Theorem Scan - {dt.date.today():%Y%m%d}"
    output_folder.mkdir(exist_ok=True)

    _init_logger(output_folder)
    LOG.info("Outputs saved to: %s", output_folder)

    out_path = output_folder / "theorem_scan_config.yml"
    params.save_yaml(out_path)
    LOG.info("Written: %s", out_path.name)

    budgets = Budgets(node_budget=params.node_budget)
    rows = []
    for name, g in scan_graphs(params):
        for r in params.orders:
            if r > g.n:
                continue
            report = verify.verify_graph(g, r, budgets, params.threads).to_dict()
            report["graph"] = name
            report["violations"] = "; ".join(report["violations"])
            rows.append(report)
        LOG.debug("Checked %s", name)

    reports = pd.DataFrame(rows)[REPORT_COLUMNS]
    out_path = output_folder / "theorem_scan_reports.csv"
    reports.to_csv(out_path, index=False)
    LOG.info("Written: %s", out_path.name)

    violations = reports.loc[reports["violations"] != ""]
    if violations.empty:
        LOG.info("No violations in %s reports", len(reports))
    else:
        LOG.error("%s reports with violations", len(violations))
        for _, row in violations.iterrows():
            LOG.error("%s, r=%s: %s", row["graph"], row["r"], row["violations"])


if __name__ == "__main__":
    main(ScanConfig.load_yaml(CONFIG_PATH))
