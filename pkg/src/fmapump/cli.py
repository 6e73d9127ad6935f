"""Command-line front end.  Every command prints one JSON document."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import corpus, pump_afma, pump_fma, semilinear, wqo
from .afma import Afma1, sorted_configs
from .alphabet import format_word, parse_word
from .errors import BudgetExceeded, WorkbenchError
from .fma import Fma

EXIT_OK, EXIT_REJECT, EXIT_ERROR, EXIT_VERIFY = 0, 1, 2, 3


def workbench_seed(default: int = 0) -> int:
    """Seed for randomized checks, taken from WORKBENCH_SEED when set."""
    raw = os.environ.get("WORKBENCH_SEED")
    return int(raw) if raw not in (None, "") else default


class CliError(Exception):
    pass


def load_automaton(args):
    if getattr(args, "corpus", None):
        entry = corpus.build(args.corpus)
        if entry.automaton is None:
            raise CliError(f"corpus entry {args.corpus} has no automaton")
        return entry.automaton
    if not args.automaton:
        raise CliError("an automaton is required (-a FILE or --corpus NAME)")
    try:
        with open(args.automaton, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {args.automaton}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"{args.automaton} is not valid JSON: {exc}") from exc
    kind = data.get("kind") if isinstance(data, dict) else None
    if kind == "fma":
        return Fma.from_json(data)
    if kind == "afma1":
        return Afma1.from_json(data)
    raise CliError(f"unknown automaton kind {kind!r}")


def _word(args, a):
    return parse_word(args.word, a.constants)


def _require(a, cls, command):
    if not isinstance(a, cls):
        other = "pump-fma" if cls is Afma1 else "pump"
        raise CliError(f"{command} needs a {'afma1' if cls is Afma1 else 'fma'} automaton; try {other}")


def _run_json(a, run):
    if run is None:
        return None
    if isinstance(a, Fma):
        return [{"state": s, "registers": [str(x) for x in regs]} for s, regs in run]
    return [[[s, str(x)] for s, x in sorted_configs(cs)] for cs in run]


def _parse_window(text: Optional[str]):
    if text is None:
        return None
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise CliError(f"window must look like I..J, got {text!r}") from None


# commands -------------------------------------------------------------------

def cmd_member(args):
    a = load_automaton(args)
    ok = a.accepts(_word(args, a))
    return {"accepted": ok}, (EXIT_OK if ok else EXIT_REJECT)


def cmd_run(args):
    a = load_automaton(args)
    return {"run": _run_json(a, a.witness_run(_word(args, a)))}, EXIT_OK


def cmd_pump(args):
    a = load_automaton(args)
    _require(a, Afma1, "pump")
    w = _word(args, a)
    cert = pump_afma.pump(a, w)
    if cert is None:
        return {
            "certificate": None,
            "diagnostic": "the canonical run has no good index pair; the word may be too short, "
                          "or another accepting run may be needed",
        }, EXIT_OK
    out = {
        "certificate": cert.to_json(),
        "pumped": {str(k): format_word(pump_afma.pumped_word(cert, k)) for k in range(1, args.k + 1)},
    }
    code = EXIT_OK
    if args.verify:
        rep = pump_afma.verify_pumped(a, cert, args.k)
        out["verification"] = rep.to_json()
        if not rep.ok:
            code = EXIT_VERIFY
    return out, code


def cmd_pump_fma(args):
    a = load_automaton(args)
    _require(a, Fma, "pump-fma")
    cert = pump_fma.pump_decompose(a, _word(args, a), _parse_window(args.window))
    rep = pump_fma.verify(a, cert, args.k)
    out = {
        "certificate": cert.to_json(),
        "pumped": {str(k): format_word(pump_fma.pumped_word(cert, k)) for k in range(1, args.k + 1)},
        "shrunk": format_word(pump_fma.shrunk_word(cert)),
        "verification": rep.to_json(),
    }
    return out, (EXIT_OK if rep.ok else EXIT_VERIFY)


def cmd_trace(args):
    a = load_automaton(args)
    _require(a, Afma1, "trace")
    w = _word(args, a)
    run = a.witness_run(w)
    if run is None:
        return {"error": "the word is not accepted"}, EXIT_REJECT
    trace = pump_afma.trace_reversal(w, run, a)
    hit = pump_afma.find_pump_indices(trace)
    return {"entries": pump_afma.trace_json(trace), "found": list(hit) if hit else None}, EXIT_OK


def cmd_compute_n(args):
    wit = wqo.longest_bad(args.states, budget=args.budget)
    return {"n": wit.length + 1, "witness": wit.to_json()}, EXIT_OK


def cmd_lengths(args):
    a = load_automaton(args)
    if isinstance(a, Fma):
        lengths = a.enumerate_lengths(args.n_max)
    else:
        lengths = semilinear.length_spectrum(a, args.n_max)
    out = {"lengths": sorted(lengths)}
    n = args.n
    if n is None:
        try:
            n = wqo.compute_N(len(a.states), budget=args.budget)
        except BudgetExceeded:
            out["description"] = None
            out["note"] = "no N supplied and the search for it exceeded the budget; pass --n"
            return out, EXIT_OK
    out["n"] = n
    out["description"] = semilinear.describe_lengths(
        lengths, n, args.n_max, no_accepting=not a.accepting).to_json()
    return out, EXIT_OK


def cmd_corpus(args):
    if args.action == "list":
        items = []
        for name in corpus.NAMES:
            e = corpus.build(name)
            kind = None if e.automaton is None else ("fma" if isinstance(e.automaton, Fma) else "afma1")
            items.append({"name": name, "automaton": kind, "notes": e.notes})
        return {"entries": items}, EXIT_OK
    if not args.name:
        raise CliError("corpus export needs a name")
    e = corpus.build(args.name)
    if e.automaton is None:
        raise CliError(f"corpus entry {args.name} is predicate-only")
    return e.automaton.to_json(), EXIT_OK


# parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fmapump", description=__doc__)
    p.add_argument("--pretty", action="store_true", help="indented output with a one-line summary")
    sub = p.add_subparsers(dest="command", required=True)

    def with_automaton(sp, word=True):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("-a", "--automaton", help="automaton JSON file")
        g.add_argument("--corpus", help="use a built-in corpus automaton")
        if word:
            sp.add_argument("-w", "--word", required=True, help="whitespace separated tokens")
        return sp

    with_automaton(sub.add_parser("member", help="membership test")).set_defaults(func=cmd_member)
    with_automaton(sub.add_parser("run", help="canonical accepting run")).set_defaults(func=cmd_run)

    sp = with_automaton(sub.add_parser("pump", help="pump an alternating automaton"))
    sp.add_argument("--k", type=int, default=4)
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_pump)

    sp = with_automaton(sub.add_parser("pump-fma", help="pump a register automaton"))
    sp.add_argument("--window", help="letter positions I..J (half-open)")
    sp.add_argument("--k", type=int, default=4)
    sp.set_defaults(func=cmd_pump_fma)

    with_automaton(sub.add_parser("trace", help="trace reversal of the canonical run")).set_defaults(
        func=cmd_trace)

    sp = sub.add_parser("compute-n", help="pumping constant for a state count")
    sp.add_argument("--states", type=int, required=True)
    sp.add_argument("--budget", type=int, default=1_000_000)
    sp.set_defaults(func=cmd_compute_n)

    sp = with_automaton(sub.add_parser("lengths", help="length spectrum"), word=False)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--budget", type=int, default=100_000)
    sp.set_defaults(func=cmd_lengths)

    sp = sub.add_parser("corpus", help="built-in example languages")
    sp.add_argument("action", choices=["list", "export"])
    sp.add_argument("name", nargs="?")
    sp.set_defaults(func=cmd_corpus)
    return p


def _summary(command: str, out) -> str:
    if not isinstance(out, dict):
        return command
    for key in ("accepted", "n", "found", "error"):
        if key in out:
            return f"{command}: {key} = {json.dumps(out[key])}"
    if "verification" in out:
        return f"{command}: ok = {out['verification'].get('ok')}"
    return command


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        out, code = args.func(args)
    except (WorkbenchError, CliError, ValueError) as exc:
        out, code = {"error": str(exc)}, EXIT_ERROR
    if args.pretty:
        print(_summary(args.command, out))
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        print(json.dumps(out, sort_keys=True))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
