# =============================================================================
# ~/epframe/epframe/cli.py
#
# created  18 October 2026
# modified
#
# This py-file contains the command-line front end:
#
#    epframe solve  --variant V --k K [--ell L] --input G [--output C]
#    epframe verify --input G --cert C
#    epframe gen    --family F <family parameters> [--output G]
#    epframe oracle --question Q --spec S [--mode M] [--k K] --input G
#
# note: Exit statuses carry the outcome. solve: 0 paths, 2 hitting set,
#       1 error. verify and gen: 0 or 1. oracle: 0, 1, or 3 when the
#       budget runs out.
#
# =============================================================================
"""
Command line
~~~~~~~~~~~~

+------------------------+----------------------------------------------+------------------+
|      Command           |        Does                                  |  Exit statuses   |
+========================+==============================================+==================+
|``solve``               |runs a dichotomy solver, writes a certificate |0 / 2 / 1         |
+------------------------+----------------------------------------------+------------------+
|``verify``              |checks a certificate against its graph        |0 / 1             |
+------------------------+----------------------------------------------+------------------+
|``gen``                 |writes a gallery instance                     |0 / 1             |
+------------------------+----------------------------------------------+------------------+
|``oracle``              |exact packing, covering or enumeration        |0 / 1 / 3         |
+------------------------+----------------------------------------------+------------------+

``--input`` may repeat for ``solve`` and ``oracle``; ``--jobs N`` then runs
the inputs in a process pool and the results come out in input order.

"""

import argparse
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional

from sciunit.errors import ObservationError

from epframe import fileManager
from epframe.epsolve import VARIANTS, Certificate
from epframe.frame import SEARCH_BUDGET
from epframe.gallery import FAMILIES, ModularFamilyParams
from epframe.graph import EPFrameError
from epframe.labeling import GroupSpec, PathSpec
from epframe.models import FamilyModel, ReplayModel, SolverModel
from epframe.oracle import (Budget, OracleBudgetExceeded, enumerate_paths, max_disjoint, min_hitting_set,
                            verify_certificate)
from epframe.resultsManager import ResultsManager
from epframe.validation_tests import DichotomyTest

_logger = logging.getLogger("epframe.cli")

COMMANDS = ("solve", "verify", "gen", "oracle")
QUESTIONS = ("max-disjoint", "min-hitting", "enumerate")

EXIT_OK, EXIT_ERROR, EXIT_HITTING, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(EPFrameError):
    """Missing or contradictory command-line parameters."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would read as a hitting set
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a positive integer, got {!r}".format(text))
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got {!r}".format(text))
    return value


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--variant", choices=VARIANTS)
    common.add_argument("--k", type=int)
    common.add_argument("--ell", type=int)
    common.add_argument("--family", choices=sorted(FAMILIES))
    common.add_argument("--m", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--s", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--group", help="Zm:<m>, Z or Z2w:<w>, optionally followed by :directed")
    common.add_argument("--mu", help="group element in file syntax")
    common.add_argument("--input", action="append", default=[], help="graph document, '-' for stdin")
    common.add_argument("--output", default="-")
    common.add_argument("--cert")
    common.add_argument("--question", choices=QUESTIONS)
    common.add_argument("--spec", help="path kind, e.g. plain, long:4, zero-mod:6:0")
    common.add_argument("--mode", choices=("vertex", "edge"))
    common.add_argument("--budget", type=_positive, help="search node budget (default $EPFRAME_BUDGET)")
    common.add_argument("--seed", type=int)
    common.add_argument("--jobs", type=_positive, default=1)
    parser = _Parser(prog="epframe", description="Erdos-Posa dichotomies for A-paths")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


# ================================Run config===================================
@dataclass
class RunConfig:
    command: str
    variant: Optional[str] = None
    k: Optional[int] = None
    ell: Optional[int] = None
    family: Optional[str] = None
    m: Optional[int] = None
    d: Optional[int] = None
    s: Optional[int] = None
    r: Optional[int] = None
    group: Optional[str] = None
    mu: Optional[str] = None
    inputs: List[str] = field(default_factory=list)
    output: str = "-"
    cert: Optional[str] = None
    question: Optional[str] = None
    spec: Optional[str] = None
    mode: Optional[str] = None
    budget: Optional[int] = None
    seed: Optional[int] = None
    jobs: int = 1

    @classmethod
    def from_namespace(cls, ns):
        if ns.command is None:
            raise UsageError("a command is required: " + ", ".join(COMMANDS))
        values = {name: getattr(ns, name) for name in cls.__dataclass_fields__
                  if name not in ("command", "inputs")}
        return cls(command=ns.command, inputs=list(ns.input), **values)

    def require(self, *names):
        missing = ["--" + n for n in names if getattr(self, n) is None]
        if missing:
            raise UsageError("{} needs {}".format(self.command, " ".join(missing)))

    def check(self):
        if self.command in ("solve", "verify", "oracle") and not self.inputs:
            raise UsageError("{} needs --input".format(self.command))
        if self.command == "solve":
            self.require("variant", "k")
            if self.k < 1:
                raise UsageError("k must be >= 1")
            if (self.variant == "long") != (self.ell is not None):
                raise UsageError("--ell is required exactly for --variant long")
        elif self.command == "verify":
            self.require("cert")
            if len(self.inputs) != 1:
                raise UsageError("verify takes exactly one --input")
        elif self.command == "gen":
            self.require("family")
        elif self.command == "oracle":
            self.require("question", "spec")
        if self.jobs > 1 and len(self.inputs) < 2:
            _logger.info("--jobs ignored for a single input")
        return self

    def oracle_budget(self):
        if self.budget is not None:
            return Budget.from_nodes(self.budget)
        return Budget.from_environment()

    def search_budget(self):
        return SEARCH_BUDGET if self.budget is None else self.budget
# =============================================================================


# =================================Commands====================================
def cmd_solve(cfg: RunConfig, location):
    instance = fileManager.load_instance(location)
    model = SolverModel(cfg.variant, ell=cfg.ell, budget=cfg.search_budget())
    cert = model.produce_certificate(instance, cfg.k)
    status = EXIT_OK if cert.outcome == "paths" else EXIT_HITTING
    return status, cert.to_document(instance.graph)


def cmd_verify(cfg: RunConfig, location):
    instance = fileManager.load_instance(location)
    cert = Certificate.from_document(fileManager.read_document(cfg.cert), instance.graph)
    if cert.variant == "long" and cert.ell is None:
        # a long certificate without ell fits no observation
        report = verify_certificate(instance.graph, instance.A, instance.B, instance.labeling, cert)
        return EXIT_ERROR, ResultsManager.report_document(report)
    test = DichotomyTest({"instance": instance, "variant": cert.variant, "k": cert.k,
                          "ell": cert.ell, "budget": cfg.oracle_budget()})
    score = test.judge(ReplayModel(cert), deep_error=True)
    return (EXIT_OK if score.score else EXIT_ERROR), score.description


def _family_params(cfg: RunConfig):
    family = cfg.family
    if family == "clique-a":
        cfg.require("k")
        return {"k": cfg.k}
    if family == "long-lb":
        cfg.require("k", "ell")
        return {"k": cfg.k, "ell": cfg.ell}
    if family == "grid-mod":
        cfg.require("m", "d", "s")
        return {"params": ModularFamilyParams(cfg.m, cfg.d, cfg.s)}
    if family == "wall-aba":
        cfg.require("r")
        return {"r": cfg.r}
    if family in ("wall-parity", "even-ab"):
        cfg.require("r" if family == "wall-parity" else "s")
        parity = cfg.spec or ("odd" if family == "wall-parity" else "even")
        if parity not in ("even", "odd"):
            raise UsageError("--spec must be even or odd for {}".format(family))
        size = {"r": cfg.r} if family == "wall-parity" else {"s": cfg.s}
        return dict(size, parity=parity)
    if family == "zero-wall":
        cfg.require("r", "group", "mu")
        group, mode = GroupSpec.from_declaration(cfg.group.split(":"))
        return {"r": cfg.r, "group": group, "mu": group.parse_element(cfg.mu), "mode": mode}
    if family == "directed-grid":
        cfg.require("s")
        return {"s": cfg.s}
    cfg.require("s")
    return {"n": cfg.s, "seed": 0 if cfg.seed is None else cfg.seed}


def cmd_gen(cfg: RunConfig, location=None):
    model = FamilyModel(cfg.family, **_family_params(cfg))
    return EXIT_OK, model.produce_instance().document()


def cmd_oracle(cfg: RunConfig, location):
    instance = fileManager.load_instance(location)
    g, A, B, lab = instance.graph, instance.A, instance.B, instance.labeling
    budget = cfg.oracle_budget()
    mode = cfg.mode or "vertex"
    if cfg.question == "min-hitting":
        spec = PathSpec.parse(cfg.spec)
        found = min_hitting_set(g, A, B, lab, spec, mode=mode, cap=cfg.k, budget=budget)
        value = None if found is None else len(found)
        return EXIT_OK, ResultsManager.oracle_document(g, cfg.question, spec, value,
                                                       items=found or (), mode=mode)
    spec = PathSpec.parse(cfg.spec, mode)
    if cfg.question == "max-disjoint":
        value, family = max_disjoint(g, A, B, lab, spec, limit=cfg.k, budget=budget)
    else:
        family = enumerate_paths(g, A, B, lab, spec, budget)
        value = len(family)
    return EXIT_OK, ResultsManager.oracle_document(g, cfg.question, spec, value, witness=family, mode=mode)


COMMAND_FUNCTIONS = {"solve": cmd_solve, "verify": cmd_verify, "gen": cmd_gen, "oracle": cmd_oracle}
# =============================================================================


def run_one(cfg: RunConfig, location=None):
    """(status, document, error message) for one input; never raises on domain errors."""
    try:
        status, text = COMMAND_FUNCTIONS[cfg.command](cfg, location)
        return status, text, None
    except OracleBudgetExceeded as err:
        status = EXIT_BUDGET if cfg.command == "oracle" else EXIT_ERROR
        return status, "", str(err)
    except (EPFrameError, ObservationError, OSError) as err:
        return EXIT_ERROR, "", str(err)


def batch_status(statuses):
    for status in (EXIT_ERROR, EXIT_BUDGET, EXIT_HITTING):
        if status in statuses:
            return status
    return EXIT_OK


def _configure_logging():
    name = os.environ.get("EPFRAME_LOGLEVEL", "WARNING").upper()
    level = getattr(logging, name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    _configure_logging()
    try:
        cfg = RunConfig.from_namespace(build_parser().parse_args(argv)).check()
    except EPFrameError as err:
        sys.stderr.write("epframe: error: {}\n".format(err))
        return EXIT_ERROR
    locations = cfg.inputs or [None]
    if len(locations) == 1:
        status, text, error = run_one(cfg, locations[0])
        if error is not None:
            sys.stderr.write("epframe: error: {}\n".format(error))
            return status
        out = text
    else:
        if cfg.jobs > 1:
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                results = list(pool.map(run_one, [cfg] * len(locations), locations))
        else:
            results = [run_one(cfg, location) for location in locations]
        entries = []
        for location, (st, text, error) in zip(locations, results):
            if error is not None:
                sys.stderr.write("epframe: error: {}: {}\n".format(location, error))
                text = "error: {}\n".format(error)
            entries.append((location, st, text))
        status = batch_status([st for st, _, _ in results])
        out = ResultsManager.batch_document(entries)
    try:
        fileManager.write_document(out, cfg.output)
    except OSError as err:
        sys.stderr.write("epframe: error: {}\n".format(err))
        return EXIT_ERROR
    return status
