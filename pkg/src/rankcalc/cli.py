"""Command-line front door.

    rankcalc query MODEL FORMULA
    rankcalc revise MODEL [--on FORMULA --firmness M]... [--jeffrey FILE]... [--out PATH]
    rankcalc independent MODEL --lhs VARS --rhs VARS [--given VARS]
    rankcalc verify [MODEL] [--suite laws|bridge|rivals|all] [--random N]
                    [--vars K] [--max-rank R] [--seed S]
    rankcalc bridge MODEL
    rankcalc rivals MODEL

Exit codes: 0 success, 1 validation or parse error, 2 property violation.
The RANKCALC_WORLD_CAP environment variable overrides the world-count cap.
"""

from __future__ import annotations

import argparse
import os
import sys

from .bridge import verify_correspondence
from .errors import RankcalcError
from .extnat import is_top
from .independence import independence_report
from .modelfile import (
    Model,
    load_evidence,
    load_model,
    render_model,
    save_model,
)
from .ranking import firmness, rank_prop
from .revision import revision_sequence
from .rivals import comparison_report
from .space import subfield_of_variables
from .verify import DEFAULT_SEED, SUITES, SuiteConfig, run_suites

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VIOLATION = 2


class _StepAction(argparse.Action):
    """Collects revision options in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        steps = getattr(namespace, "steps", None)
        if steps is None:
            steps = []
            namespace.steps = steps
        steps.append((self.dest, values))


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="rankcalc",
        description="Exact calculus of graded belief over finite spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    query = sub.add_parser("query", help="rank and belief status of a formula")
    query.add_argument("model")
    query.add_argument("formula")

    revise = sub.add_parser("revise", help="apply a sequence of revisions")
    revise.add_argument("model")
    revise.add_argument("--on", action=_StepAction, metavar="FORMULA",
                        help="proposition to accept (pair with --firmness)")
    revise.add_argument("--firmness", action=_StepAction, metavar="M",
                        help="evidence weight for the preceding --on")
    revise.add_argument("--jeffrey", action=_StepAction, metavar="FILE",
                        help="evidence-field revision from a JSON file")
    revise.add_argument("--out", help="write the final model here")

    indep = sub.add_parser("independent",
                           help="rank independence of variable sets")
    indep.add_argument("model")
    indep.add_argument("--lhs", required=True, metavar="VARS",
                       help="comma-separated variable names")
    indep.add_argument("--rhs", required=True, metavar="VARS")
    indep.add_argument("--given", default="", metavar="VARS")

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("model", nargs="?")
    verify.add_argument("--suite", default="all", choices=SUITES)
    verify.add_argument("--random", type=int, default=1000, metavar="N",
                        help="random instances when no model is given")
    verify.add_argument("--vars", type=int, default=3, metavar="K",
                        help="maximum binary variables for random instances")
    verify.add_argument("--max-rank", type=int, default=5, metavar="R")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)

    bridge = sub.add_parser("bridge",
                            help="order-correspondence report for a model")
    bridge.add_argument("model")

    rivals = sub.add_parser("rivals",
                            help="comparison report against rival formalisms")
    rivals.add_argument("model")
    return parser


def _rank_str(value) -> str:
    return "TOP" if is_top(value) else str(value)


def _firmness_str(value: int) -> str:
    return "+%d" % value if value > 0 else str(value)


def cmd_query(args, out) -> int:
    model = load_model(args.model)
    prop = model.resolve(args.formula)
    ranking = model.ranking
    rank = rank_prop(ranking, prop)
    neg_rank = rank_prop(ranking, prop.complement())
    if prop.is_full:
        out.write("tautology, rank 0, neg-rank TOP, believed true\n")
        return EXIT_OK
    if prop.is_empty:
        out.write("contradiction, rank TOP, neg-rank 0, believed false\n")
        return EXIT_OK
    value = firmness(ranking, prop)
    if value > 0:
        status = "believed true"
    elif value < 0:
        status = "believed false"
    else:
        status = "believed neither"
    out.write("rank %s, neg-rank %s, %s, firmness %s\n"
              % (_rank_str(rank), _rank_str(neg_rank), status,
                 _firmness_str(value) if value else "0"))
    return EXIT_OK


def _collect_steps(args, model):
    raw = getattr(args, "steps", None) or []
    steps = []
    labels = []
    pending = None
    for kind, value in raw:
        if kind == "on":
            if pending is not None:
                raise RankcalcError("--on %r lacks a --firmness" % pending)
            pending = value
        elif kind == "firmness":
            if pending is None:
                raise RankcalcError("--firmness without a preceding --on")
            try:
                weight = int(value)
            except ValueError:
                raise RankcalcError("firmness must be an integer, got %r" % value)
            steps.append((model.resolve(pending), weight))
            labels.append("on %s firmness %d" % (pending, weight))
            pending = None
        else:  # jeffrey
            if pending is not None:
                raise RankcalcError("--on %r lacks a --firmness" % pending)
            steps.append(load_evidence(value, model.space))
            labels.append("jeffrey %s" % os.path.basename(value))
    if pending is not None:
        raise RankcalcError("--on %r lacks a --firmness" % pending)
    return steps, labels


def _core_str(model, core) -> str:
    return "{%s}" % ", ".join(model.space.world_str(w) for w in core.members())


def cmd_revise(args, out) -> int:
    model = load_model(args.model)
    steps, labels = _collect_steps(args, model)
    final, trace = revision_sequence(model.ranking, steps)
    for entry, label in zip(trace, labels):
        out.write("step %d: %s\n" % (entry.index + 1, label))
        out.write("  core: %s\n" % _core_str(model, entry.core))
        if entry.target_firmness is not None:
            out.write("  firmness: %s\n" % _firmness_str(entry.target_firmness))
        if entry.atom_ranks is not None:
            out.write("  atom ranks: %s\n"
                      % " ".join(str(r) for r in entry.atom_ranks))
    final_model = Model(model.space, final, model.propositions)
    out.write("final model:\n")
    out.write(render_model(final_model))
    if args.out:
        save_model(final_model, args.out)
    return EXIT_OK


def _parse_vars(text):
    return [name.strip() for name in text.split(",") if name.strip()]


def cmd_independent(args, out) -> int:
    model = load_model(args.model)
    lhs = _parse_vars(args.lhs)
    rhs = _parse_vars(args.rhs)
    given = _parse_vars(args.given)
    overlap = (set(lhs) & set(rhs)) | (set(lhs) & set(given)) | (set(rhs) & set(given))
    if overlap:
        raise RankcalcError("variable sets overlap on %r" % sorted(overlap))
    space = model.space
    f_lhs = subfield_of_variables(space, lhs)
    f_rhs = subfield_of_variables(space, rhs)
    ranking = model.ranking
    if given:
        f_given = subfield_of_variables(space, given)
        results = [independence_report(ranking, f_lhs, f_rhs, atom)
                   for atom in f_given.atoms]
        verdict = all(r.independent for r in results)
        witness = next((r.witness for r in results if r.witness), None)
        regime = results[0].regime
    else:
        result = independence_report(ranking, f_lhs, f_rhs)
        verdict = result.independent
        witness = result.witness
        regime = result.regime
    if verdict:
        out.write("independent\n")
        if regime == "sampled":
            out.write("note: sampled regime (fields too large for the "
                      "exhaustive member sweep)\n")
        return EXIT_OK
    out.write("dependent\n")
    if witness is not None:
        out.write("witness: %s\n" % witness.render())
    return EXIT_OK


def cmd_verify(args, out) -> int:
    model = load_model(args.model) if args.model else None
    config = SuiteConfig(seed=args.seed, count=args.random,
                         max_vars=args.vars, max_rank=args.max_rank)
    report = run_suites(args.suite, config, model)
    out.write(report.render() + "\n")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_bridge(args, out) -> int:
    model = load_model(args.model)
    report = verify_correspondence(model.ranking)
    out.write(report.render() + "\n")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_rivals(args, out) -> int:
    model = load_model(args.model)
    report = comparison_report(model.ranking)
    out.write(report.render() + "\n")
    return EXIT_OK if report.ok else EXIT_VIOLATION


_COMMANDS = {
    "query": cmd_query,
    "revise": cmd_revise,
    "independent": cmd_independent,
    "verify": cmd_verify,
    "bridge": cmd_bridge,
    "rivals": cmd_rivals,
}


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except RankcalcError as exc:
        err.write("error: %s\n" % exc)
        return EXIT_INVALID
    except OSError as exc:
        err.write("error: %s\n" % exc)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
