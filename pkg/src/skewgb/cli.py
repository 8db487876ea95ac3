"""Batch front end: read a problem file, print the basis deterministically.

A problem file is a plain-text ``key: value`` header, a blank line, then
one generator per line.  ``#`` starts a comment.  Recognized header keys:

    mode          free | free2 | sigma | skew | left      (required)
    degree_bound  truncation bound, >= 1                  (required)
    field         Q (default) or a prime p for Z/p
    letters       comma-separated variable names (default x,y,z,w)
    ordering      lex (default) | deglex
    endo          shift (default) | power <e>
    criteria      all (default) | none | product | chain | product,chain
    interreduce   true (default) | false
    trace         false (default) | true

Exit codes: 0 success, 1 usage or parse error, 2 mathematical refusal
(for example an endomorphism the engine cannot certify), 3 certification
or oracle failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field as dc_field

from . import engine, letterplace, textio
from .endo import PowerEndo, ShiftEndo
from .field import GF, QQ
from .poly import ORDERINGS
from .textio import ParseError


class UsageError(ValueError):
    """Problem-file or configuration error; maps to exit code 1."""


@dataclass
class ProblemFile:
    mode: str
    degree_bound: int
    field: object = QQ
    names: tuple = textio.DEFAULT_NAMES
    ordering_name: str = "lex"
    sigma: object = dc_field(default_factory=ShiftEndo)
    product_criterion: bool | None = None
    chain_criterion: bool = True
    interreduce: bool = True
    trace: bool = False
    generators: list = dc_field(default_factory=list)


_BOOLS = {"true": True, "yes": True, "on": True,
          "false": False, "no": False, "off": False}


def _parse_bool(value: str, key: str) -> bool:
    try:
        return _BOOLS[value.strip().lower()]
    except KeyError:
        raise UsageError(f"{key} must be true or false, not {value!r}") from None


def _parse_field(value: str):
    v = value.strip()
    if v.upper() in ("Q", "QQ"):
        return QQ
    try:
        p = int(v)
    except ValueError:
        raise UsageError(f"unknown field {value!r}") from None
    try:
        return GF(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_endo(value: str):
    words = value.split()
    if words == ["shift"]:
        return ShiftEndo()
    if len(words) == 2 and words[0] == "power":
        try:
            return PowerEndo(int(words[1]))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError(f"unknown endomorphism {value!r}")


def _parse_criteria(value: str):
    v = value.strip().lower()
    if v == "all":
        return None, True
    if v == "none":
        return False, False
    chosen = {w.strip() for w in v.split(",")}
    bad = chosen - {"product", "chain"}
    if bad or not chosen:
        raise UsageError(f"unknown criteria {value!r}")
    return "product" in chosen, "chain" in chosen


def parse_problem(text: str) -> ProblemFile:
    lines = text.splitlines()
    header: dict[str, str] = {}
    body_start = len(lines)
    for i, raw in enumerate(lines):
        if raw.strip().startswith("#"):
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            body_start = i + 1
            break
        if ":" not in line:
            raise UsageError(f"line {i + 1}: expected 'key: value'")
        key, value = line.split(":", 1)
        key = key.strip().lower()
        if key in header:
            raise UsageError(f"line {i + 1}: duplicate key {key!r}")
        header[key] = value.strip()

    known = {
        "mode", "field", "letters", "ordering", "endo",
        "degree_bound", "criteria", "interreduce", "trace",
    }
    for key in header:
        if key not in known:
            raise UsageError(f"unknown header key {key!r}")

    mode = header.get("mode")
    if mode not in ("free", "free2", "sigma", "skew", "left"):
        raise UsageError(f"mode must be one of free/free2/sigma/skew/left, "
                         f"got {mode!r}")
    if "degree_bound" not in header:
        raise UsageError("degree_bound is required")
    try:
        bound = int(header["degree_bound"])
    except ValueError:
        raise UsageError("degree_bound must be an integer") from None
    if bound < 1:
        raise UsageError("degree_bound must be >= 1")

    pf = ProblemFile(mode=mode, degree_bound=bound)
    if "field" in header:
        pf.field = _parse_field(header["field"])
    if "letters" in header:
        names = tuple(w.strip() for w in header["letters"].split(","))
        if not all(names) or len(set(names)) != len(names):
            raise UsageError("letters must be distinct nonempty names")
        if mode not in ("free", "free2") and "s" in names:
            raise UsageError("'s' is reserved for the skew variable")
        pf.names = names
    if "ordering" in header:
        o = header["ordering"].strip().lower()
        if o not in ORDERINGS:
            raise UsageError(f"unknown ordering {o!r}")
        pf.ordering_name = o
    if "endo" in header:
        pf.sigma = _parse_endo(header["endo"])
    if "criteria" in header:
        pf.product_criterion, pf.chain_criterion = _parse_criteria(
            header["criteria"]
        )
    if "interreduce" in header:
        pf.interreduce = _parse_bool(header["interreduce"], "interreduce")
    if "trace" in header:
        pf.trace = _parse_bool(header["trace"], "trace")

    for i in range(body_start, len(lines)):
        line = lines[i].split("#", 1)[0].strip()
        if line:
            pf.generators.append(line)
    return pf


def _config(pf: ProblemFile, trace: bool) -> engine.GBConfig:
    return engine.GBConfig(
        mode=pf.mode,
        degree_bound=pf.degree_bound,
        ordering=ORDERINGS[pf.ordering_name],
        sigma=pf.sigma,
        product_criterion=pf.product_criterion,
        chain_criterion=pf.chain_criterion,
        interreduce=pf.interreduce,
        trace=pf.trace or trace,
    )


def _parse_generators(pf: ProblemFile, cfg: engine.GBConfig):
    out = []
    for line in pf.generators:
        try:
            if pf.mode in ("free", "free2"):
                out.append(textio.parse_free(line, pf.field, pf.names))
            elif pf.mode == "sigma":
                out.append(
                    textio.parse_poly(line, pf.field, pf.names, cfg.ordering)
                )
            else:
                out.append(
                    textio.parse_skew(
                        line, pf.field, pf.names, cfg.ordering, pf.sigma
                    )
                )
        except ParseError as exc:
            raise UsageError(f"bad generator {line!r}: {exc}") from None
    return out


def _run_problem(pf: ProblemFile, cfg: engine.GBConfig, gens):
    """Returns (formatted basis lines, stats, trace, artifacts for checks)."""
    names = pf.names
    if pf.mode == "sigma":
        res = engine.sigma_gbasis(gens, cfg)
        lines = [textio.format_poly(f, names) for f in res.basis]
        return lines, res.stats, res.trace, res.basis
    if pf.mode == "skew":
        res = engine.skew_gbasis(gens, cfg)
        lines = [textio.format_skew(a, names) for a in res.basis]
        return lines, res.stats, res.trace, res.basis
    if pf.mode == "left":
        res = engine.left_gbasis(gens, cfg)
        lines = [textio.format_skew(a, names) for a in res.basis]
        return lines, res.stats, res.trace, res.basis
    if pf.mode == "free":
        basis, stats, trace = letterplace._free_run(gens, cfg)
    else:
        basis, stats, trace = letterplace._free2_run(gens, cfg)
    lines = [textio.format_free(f, names) for f in basis]
    return lines, stats, trace, basis


def _certify(pf: ProblemFile, cfg: engine.GBConfig, basis):
    if pf.mode in ("free", "free2"):
        return letterplace.certify_free(
            basis, cfg, two_sided=(pf.mode == "free2")
        )
    return engine.certify(basis, cfg)


def _oracle_check(pf: ProblemFile, cfg: engine.GBConfig, gens, basis) -> bool:
    if pf.mode in ("free", "free2"):
        return letterplace.free_oracle_match(basis, gens, cfg)
    if pf.mode == "left":
        raise UsageError("--oracle is not available in left mode")
    oracle = engine.oracle_gbasis_truncated(gens, cfg)
    main = engine.GBResult(
        basis, cfg.mode, cfg.degree_bound, engine.PairStats(), None
    )
    return engine.lm_window_match(main, oracle, cfg)


def build_argparser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skewgb",
        description="Truncated Gröbner bases for difference ideals, the "
        "skew ring K[x][s], and free algebras via letterplace.",
    )
    ap.add_argument("path", help="problem file")
    ap.add_argument("--certify", action="store_true",
                    help="re-check every in-window critical pair afterwards")
    ap.add_argument("--oracle", action="store_true",
                    help="compare leading-monomial ideals with a bare "
                    "Buchberger run on the expanded window")
    ap.add_argument("--trace", action="store_true",
                    help="print one line per critical pair")
    ap.add_argument("--stats", action="store_true",
                    help="print pair statistics")
    ap.add_argument("--threads", type=int, default=1, metavar="N",
                    help="worker threads (output is identical for any N)")
    return ap


def main(argv=None) -> int:
    ap = build_argparser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return 1

    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        pf = parse_problem(text)
        cfg = _config(pf, args.trace)
        gens = _parse_generators(pf, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        lines, stats, trace, basis = _run_problem(pf, cfg, gens)
    except engine.EndomorphismRejected as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if trace:
        for line in trace:
            print(f"# {line}")
    for line in lines:
        print(line)
    if args.stats:
        print(f"# {stats.as_text()}")

    status = 0
    if args.certify:
        ok, failures = _certify(pf, cfg, basis)
        if ok:
            print("# certified: all in-window critical pairs reduce to zero")
        else:
            for f in failures:
                print(f"# FAILED {f}")
            print("# certification failed")
            status = 3
    if args.oracle:
        try:
            match = _oracle_check(pf, cfg, gens, basis)
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        if match:
            print("oracle lm-ideals match")
        else:
            print("oracle lm-ideals differ")
            status = 3
    return status


if __name__ == "__main__":
    sys.exit(main())
