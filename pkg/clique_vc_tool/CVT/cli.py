# -*- coding: utf-8 -*-
"""
    Command line interface for the Clique VC Tool.

    Every subcommand reads one graph (an edge-list file, '-' for stdin, or
    a generator given with --kind), apart from `family`, and writes JSON
    to stdout containing the resolved run config and the results. Logging
    goes to stderr so stdout only depends on the inputs.

    Exit codes: 0 success, 1 a clique bound was violated, 2 usage or
    input errors, 3 a resource limit was exceeded.
"""

##### IMPORTS #####
# Standard imports
from __future__ import annotations
import argparse
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Literal, Optional, TextIO, Union

# Third party imports
import caf.toolkit
import pydantic
import yaml

# Local imports
from . import clique_engine, graph_core, pattern_lab, set_system
from .budgets import Budgets
from .errors import (
    BaseCliqueToolError,
    GraphParseError,
    IncorrectParameterError,
    ResourceLimitError,
    TheoremViolationError,
)
from .graph_core import Graph
from .theorem_bench import experiment, subfamily, verify

##### CONSTANTS #####
LOG = logging.getLogger(__name__)
EXAMPLE_CONFIG_NAME = "cvt_config.yml"
COMMANDS = ("gen", "analyze", "check-free", "vc", "verify", "experiment", "family")
GRAPH_KINDS = (
    "complete",
    "cycle",
    "path",
    "independent",
    "blow-up",
    "chordal-extremal",
    "shatter-gadget",
    "polarity",
    "random",
    "join-split",
)
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
ANALYZE_DEFAULT_R = 2


##### CLASSES #####
class RunConfig(caf.toolkit.BaseConfig):
    """Settings for a single run of the command line tool."""

    command: Literal[COMMANDS]
    input: Optional[str] = None
    """Edge-list file to read, '-' for standard input."""
    kind: Optional[Literal[GRAPH_KINDS]] = None
    """Generator to build the graph with, instead of `input`."""
    n: Optional[int] = None
    c: Optional[Union[float, str]] = None
    """Density, as a decimal or a fraction e.g. '3/4'."""
    p: Optional[float] = None
    t: Optional[int] = None
    q: Optional[int] = None
    base: Literal["complete", "cycle", "path", "independent"] = "complete"
    """Standard graph which is blown up."""
    base_n: Optional[int] = None
    inner_policy: Literal["empty", "complete_A", "random"] = "empty"
    r: Optional[int] = None
    m: Optional[int] = None
    samples: int = 1000
    seed: int = 0
    system: Literal["neighborhood", "mc"] = "mc"
    method: Literal["search", "extract"] = "search"
    sweep: bool = False
    format: Optional[Literal["json", "csv", "edgelist"]] = None
    """Output format, by default an edge list for `gen` and JSON otherwise."""
    output: Optional[str] = None
    """Directory for `family` members."""
    csv: Optional[str] = None
    """File to write per-sample experiment rows to."""
    threads: pydantic.PositiveInt = 1
    clique_cap: Optional[pydantic.PositiveInt] = None
    node_budget: Optional[pydantic.PositiveInt] = None
    max_vertices: Optional[pydantic.PositiveInt] = None

    @pydantic.model_validator(mode="after")
    def _check_source(self) -> RunConfig:
        if self.command == "family":
            if self.r is None:
                raise ValueError("family needs r")
            return self
        sources = (self.input is not None) + (self.kind is not None)
        if sources != 1:
            raise ValueError(f"exactly one of input or kind is needed, {sources} given")
        if self.command in ("check-free", "verify", "experiment") and self.r is None:
            raise ValueError(f"{self.command} needs r")
        if self.command == "experiment" and self.m is None:
            raise ValueError("experiment needs m")
        return self

    def budgets(self) -> Budgets:
        """Budgets from the environment with any given in the config taking precedence."""
        defaults = Budgets.from_environment()
        return Budgets(
            clique_cap=self.clique_cap or defaults.clique_cap,
            node_budget=self.node_budget or defaults.node_budget,
            max_vertices=self.max_vertices or defaults.max_vertices,
        )

    @classmethod
    def write_example(cls, path: Path) -> None:
        """Write an example config for the verify command."""
        example = cls(command="verify", kind="chordal-extremal", n=100, c="3/4", r=2)
        example.save_yaml(path)


##### FUNCTIONS #####
def cvt_arg_parser() -> argparse.ArgumentParser:
    """Creates `ArgumentParser` with a sub-parser for each command.

    Flags default to None so only those given override a config file.
    """
    parser = argparse.ArgumentParser(prog=__package__, description=__doc__.split("\n\n")[0])
    parser.add_argument("--config", type=Path, help="YAML run config, flags override it")
    parser.add_argument(
        "--example",
        action="store_true",
        help=f"write an example config to --config or {EXAMPLE_CONFIG_NAME} and exit",
    )
    parser.add_argument("--log-file", type=Path, help="file for DEBUG level log messages")
    subparsers = parser.add_subparsers(dest="command")

    for name in COMMANDS:
        sub = subparsers.add_parser(name, argument_default=argparse.SUPPRESS)
        if name != "family":
            sub.add_argument("--input", help="edge-list file, '-' for stdin")
            sub.add_argument("--kind", choices=GRAPH_KINDS)
            for flag, kind in (("--n", int), ("--t", int), ("--q", int), ("--base-n", int)):
                sub.add_argument(flag, type=kind)
            sub.add_argument("--c", help="density e.g. 0.75 or 3/4")
            sub.add_argument("--p", type=float, help="edge probability for random graphs")
            sub.add_argument("--base", choices=["complete", "cycle", "path", "independent"])
            sub.add_argument("--inner-policy", choices=["empty", "complete_A", "random"])
            sub.add_argument("--seed", type=int)
            sub.add_argument("--format", choices=["json", "csv", "edgelist"])
            sub.add_argument("--threads", type=int)
            sub.add_argument("--clique-cap", type=int)
            sub.add_argument("--node-budget", type=int)
            sub.add_argument("--max-vertices", type=int)
        if name in ("analyze", "check-free", "verify", "experiment", "family"):
            sub.add_argument("--r", type=int)
        if name == "check-free":
            sub.add_argument("--method", choices=["search", "extract"])
            sub.add_argument("--sweep", action="store_true")
        if name == "vc":
            sub.add_argument("--system", choices=["neighborhood", "mc"])
        if name == "experiment":
            sub.add_argument("--m", type=int)
            sub.add_argument("--samples", type=int)
            sub.add_argument("--csv", help="file to write per-sample rows to")
        if name == "family":
            sub.add_argument("--output", help="directory to write the members to")
    return parser


def _init_logger(log_file: Optional[Path]) -> None:
    root = logging.getLogger("CVT")
    root.setLevel(logging.DEBUG)
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()

    stream = logging.StreamHandler(sys.stderr)
    stream.setLevel(logging.INFO)
    stream.setFormatter(
        logging.Formatter(
            "{asctime} [{levelname:^8.8}] {message}", datefmt="%H:%M:%S", style="{"
        )
    )
    root.addHandler(stream)

    if log_file is not None:
        file = logging.FileHandler(log_file)
        file.setLevel(logging.DEBUG)
        file.setFormatter(
            logging.Formatter(
                "{asctime} [{name:30.30}] [{module:20.20}:{lineno!s:5.5}] "
                "[{levelname:^8.8}] {message}",
                style="{",
            )
        )
        root.addHandler(file)


def _require(config: RunConfig, *names: str) -> None:
    missing = [n for n in names if getattr(config, n) is None]
    if missing:
        raise IncorrectParameterError(
            None, ", ".join(missing), f"given for kind {config.kind}"
        )


def build_graph(config: RunConfig) -> Graph:
    """Read or generate the graph described by `config`."""
    budgets = config.budgets()
    if config.input is not None:
        if config.input == "-":
            text = sys.stdin.read()
        else:
            text = Path(config.input).read_text(encoding="utf-8")
        return graph_core.parse_edge_list(text, budgets.max_vertices)

    kind = config.kind
    if kind in ("complete", "cycle", "path", "independent"):
        _require(config, "n")
        graph_core.check_vertex_count(config.n, budgets.max_vertices)
        return graph_core.gen_basic(kind, config.n)
    if kind == "random":
        _require(config, "n", "p")
        graph_core.check_vertex_count(config.n, budgets.max_vertices)
        return graph_core.gen_random(config.n, config.p, config.seed)
    if kind == "blow-up":
        _require(config, "base_n", "t")
        base = graph_core.gen_basic(config.base, config.base_n)
        return graph_core.blow_up(base, config.t, budgets.max_vertices)
    if kind == "chordal-extremal":
        _require(config, "n", "c")
        graph_core.check_vertex_count(config.n, budgets.max_vertices)
        return graph_core.gen_chordal_extremal(config.n, config.c).graph
    if kind == "shatter-gadget":
        _require(config, "t")
        seed = config.seed if config.inner_policy == "random" else None
        gadget = graph_core.build_shatter_gadget(
            config.t, config.inner_policy, seed, budgets.max_vertices
        )
        return gadget.graph
    if kind == "polarity":
        _require(config, "q")
        return graph_core.gen_polarity(config.q)
    # join-split
    _require(config, "n", "t")
    if not 0 <= config.t <= config.n:
        raise IncorrectParameterError(config.t, "t", f"between 0 and n={config.n}")
    graph_core.check_vertex_count(config.n, budgets.max_vertices)
    independent = Graph(config.t, (0,) * config.t)
    if config.n > config.t:
        complete = graph_core.gen_basic("complete", config.n - config.t)
    else:
        complete = Graph(0, ())
    return graph_core.join(independent, complete)


def _analyze(config: RunConfig, g: Graph) -> dict[str, Any]:
    budgets = config.budgets()
    r = ANALYZE_DEFAULT_R if config.r is None else config.r
    if r < 0:
        raise IncorrectParameterError(r, "r", ">= 0")
    cliques = clique_engine.enumerate_maximal_cliques(g, budgets.clique_cap, config.threads)
    clique = clique_engine.max_clique(g)
    result: dict[str, Any] = {"n": g.n, "m": g.m}
    if g.n >= r:
        result["density"] = clique_engine.clique_density(g, r, config.threads).to_dict()
    result["omega"] = len(clique)
    result["clique"] = clique.to_list()
    result["n_maximal_cliques"] = len(cliques)
    # Only orders up to r, counting every order is exponential in omega
    result["clique_counts"] = [
        clique_engine.count_r_cliques(g, k, config.threads) for k in range(r + 1)
    ]
    return result


def _check_free(config: RunConfig, g: Graph, stdout: TextIO) -> Optional[dict[str, Any]]:
    budgets = config.budgets()
    if config.sweep:
        table = subfamily.sweep_subfamilies(g, config.r, node_budget=budgets.node_budget)
        if config.format == "csv":
            table.to_csv(stdout, index=False, lineterminator="\n")
            return None
        return {"sweep": json.loads(table.to_json(orient="records"))}

    if config.method == "extract":
        result = pattern_lab.find_witness(
            g, config.r, None, budgets.node_budget, config.threads
        )
    else:
        result = pattern_lab.contains_semi_induced(g, config.r, budgets.node_budget)
    verdict = verify.Freeness.from_status(result.status)
    return {"verdict": verdict.value, **result.to_dict()}


def _vc(config: RunConfig, g: Graph) -> dict[str, Any]:
    if config.system == "neighborhood":
        system = set_system.neighborhood_system(g)
    else:
        cap = config.budgets().clique_cap
        system = set_system.maximal_clique_system(g, cap, config.threads)
    result = set_system.vc_dimension(system)
    certificate = None
    if result.k >= 0:
        certificate = set_system.is_shattered(system, result.witness).to_dict()
    return {
        "system": system.label.value,
        "n_sets": len(system),
        "k": result.k,
        "witness": result.witness.to_list(),
        "certificate": certificate,
    }


def _experiment(config: RunConfig, g: Graph, stdout: TextIO) -> Optional[dict[str, Any]]:
    stats = experiment.trace_experiment(
        g,
        config.r,
        config.m,
        config.samples,
        seed=config.seed,
        threads=config.threads,
        cap=config.budgets().clique_cap,
    )
    if config.csv is not None:
        stats.to_csv(Path(config.csv))
        LOG.info("Written: %s", config.csv)
    if config.format == "csv":
        stats.to_csv(stdout)
        return None
    return stats.to_dict()


def _family(config: RunConfig) -> dict[str, Any]:
    members = pattern_lab.family_members(config.r)
    width = len(str(len(members) - 1))
    files = []
    if config.output is not None:
        folder = Path(config.output)
        folder.mkdir(parents=True, exist_ok=True)
        for mask, member in enumerate(members):
            path = folder / f"family_r{config.r}_mask{mask:0{width}d}.txt"
            path.write_text(graph_core.serialize_edge_list(member), encoding="utf-8")
            files.append(path.name)
        LOG.info("Written %s family members to %s", len(members), folder)
    return {
        "r": config.r,
        "members": len(members),
        "edges": [member.m for member in members],
        "files": files,
    }


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    values: dict[str, Any] = {}
    if args.config is not None:
        values = yaml.safe_load(args.config.read_text(encoding="utf-8")) or {}
    overrides = {
        k: v
        for k, v in vars(args).items()
        if k not in ("config", "example", "log_file") and v is not None
    }
    values.update(overrides)
    return RunConfig.model_validate(values)


def _execute(config: RunConfig, stdout: TextIO) -> int:
    payload: Optional[dict[str, Any]]
    status = EXIT_OK
    if config.command == "family":
        payload = _family(config)
    else:
        g = build_graph(config)
        LOG.info("Loaded %s", g)
        if config.command == "gen":
            if config.format != "json":  # edge list unless JSON asked for
                stdout.write(graph_core.serialize_edge_list(g))
                return EXIT_OK
            payload = {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges()]}
        elif config.command == "analyze":
            payload = _analyze(config, g)
        elif config.command == "check-free":
            payload = _check_free(config, g, stdout)
        elif config.command == "vc":
            payload = _vc(config, g)
        elif config.command == "verify":
            report = verify.verify_graph(g, config.r, config.budgets(), config.threads)
            payload = report.to_dict()
            if report.violations:
                status = EXIT_VIOLATION
        else:
            payload = _experiment(config, g, stdout)

    if payload is not None:
        output = {"config": config.model_dump(mode="json"), "result": payload}
        stdout.write(json.dumps(output, indent=2) + "\n")
    return status


def run(argv: Optional[list[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Run the command line tool.

    Parameters
    ----------
    argv : list[str], optional
        Command line arguments, by default ``sys.argv[1:]``.
    stdout : TextIO, optional
        Stream for the results, by default `sys.stdout`.

    Returns
    -------
    int
        Exit status.
    """
    stdout = sys.stdout if stdout is None else stdout
    parser = cvt_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    _init_logger(args.log_file)
    if args.example:
        path = Path(EXAMPLE_CONFIG_NAME) if args.config is None else args.config
        RunConfig.write_example(path)
        LOG.info("Written example config: %s", path)
        return EXIT_OK
    if args.command is None and args.config is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        config = _resolve_config(args)
        # Results are buffered so a failure part way doesn't leave partial output
        buffer = io.StringIO()
        status = _execute(config, buffer)
    except (pydantic.ValidationError, IncorrectParameterError, GraphParseError) as exc:
        LOG.error("%s", exc)
        return EXIT_USAGE
    except (FileNotFoundError, IsADirectoryError, yaml.YAMLError) as exc:
        LOG.error("%s", exc)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        LOG.error("%s", exc)
        return EXIT_RESOURCE
    except TheoremViolationError as exc:
        LOG.critical("%s", exc)
        return EXIT_VIOLATION
    except BaseCliqueToolError as exc:
        LOG.error("%s", exc)
        return EXIT_USAGE

    stdout.write(buffer.getvalue())
    return status
