"""``nilex`` command-line tool.

Exit status: 0 when every verdict passes, 1 on a verification failure,
2 on unreadable input (parse errors, unknown names, bad flags), 3 when an
internal consistency check breaks.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .algebra import DEFAULT_SEED, Algebra, annihilator, check_assosymmetric, is_one_generated, power_sequence
from .catalog import catalog_get, entry, is_excluded, names, sample_parameters
from .cohomology import cohomology_basis, format_form
from .dsl import parse_algebra, parse_cocycles, serialize_algebra
from .errors import (
    ExcludedParameterError,
    IsomorphismFailure,
    NilexError,
    NotACocycleError,
    NotInSpanError,
    OffLocusError,
    ParseError,
    UnknownAlgebraError,
)
from .extensions import ExtensionSpec, validate_extension
from .isomorphism import DEFAULT_HEIGHT_BOUND, DEFAULT_PRIMES, certify_noniso, fingerprint, iso_search_rational
from .verify import Options, render_text, report_ok, run_verification, validate_report

OK, FAILED, BAD_INPUT, INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class Input:
    token: str
    params: list[str] = field(default_factory=list)


def _split_params(argv: list[str]) -> tuple[list[str], list[Input]]:
    """Pull out positional inputs with the ``--param`` flags that follow each one."""
    rest: list[str] = []
    inputs: list[Input] = []
    takes_value = {"--format", "--seed", "--primes", "--height-bound", "--jobs", "--dim", "--name"}
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--param" or tok.startswith("--param="):
            if tok == "--param":
                if i + 1 >= len(argv):
                    raise UsageError("--param needs a value name=value")
                value = argv[i + 1]
                i += 2
            else:
                value = tok.split("=", 1)[1]
                i += 1
            if not inputs:
                raise UsageError(f"--param {value} does not follow an algebra")
            inputs[-1].params.append(value)
            continue
        if tok.startswith("-"):
            rest.append(tok)
            if tok in takes_value:
                if i + 1 < len(argv):
                    rest.append(argv[i + 1])
                i += 2
            else:
                i += 1
            continue
        inputs.append(Input(tok))
        i += 1
    return rest, inputs


def _params(inp: Input) -> dict[str, str]:
    out = {}
    for p in inp.params:
        if "=" not in p:
            raise UsageError(f"--param expects name=value, got {p!r}")
        k, v = p.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _load(inp: Input) -> Algebra:
    path = Path(inp.token)
    if path.is_file():
        if inp.params:
            raise UsageError(f"{inp.token}: --param only applies to catalog names")
        return parse_algebra(path.read_text(encoding="utf-8"))
    params = _params(inp)
    try:
        entry(inp.token)
    except UnknownAlgebraError:
        raise UsageError(f"{inp.token!r} is neither a file nor a catalog name") from None
    try:
        if params and is_excluded(inp.token, params):
            print(f"note: {inp.token} with {params} is excluded from the classification list", file=sys.stderr)
        return catalog_get(inp.token, params, strict=False)
    except (ValueError, OffLocusError) as exc:
        raise UsageError(str(exc)) from None


def _emit(args, data: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def _seed(value: str | None) -> int:
    if value is not None:
        return int(value)
    env = os.environ.get("NILEX_SEED")
    return int(env) if env else DEFAULT_SEED


def _primes(value: str | None) -> tuple[int, ...]:
    if value is None:
        return DEFAULT_PRIMES
    try:
        return tuple(int(p) for p in value.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"--primes expects a comma-separated list, got {value!r}") from None


def _expect(inputs: list[Input], count: int, command: str) -> None:
    if len(inputs) != count:
        raise UsageError(f"{command} takes {count} algebra{'s' if count > 1 else ''}, got {len(inputs)}")


# ---------------------------------------------------------------- commands


def cmd_check(args, inputs) -> int:
    _expect(inputs, 1, "check")
    a = _load(inputs[0])
    ident = check_assosymmetric(a)
    ps = power_sequence(a)
    gen = is_one_generated(a, seed=args.seed)
    ann = annihilator(a)
    ok = ident.ok and ps.nilpotent and bool(gen)
    data = {
        "algebra": a.name,
        "dim": a.dim,
        "assosymmetric": ident.ok,
        "violation": None if ident.ok else {"triple": list(ident.location), "detail": ident.detail},
        "nilpotent": ps.nilpotent,
        "nilpotency_index": ps.index,
        "powers": list(ps.dims),
        "one_generated": bool(gen),
        "generator": [str(x) for x in gen.witness] if gen else None,
        "seed": args.seed,
        "ann_dim": len(ann),
        "verdict": "pass" if ok else "fail",
    }
    lines = [
        f"{a.name or 'algebra'} (dim {a.dim})",
        f"  assosymmetric     {'yes' if ident.ok else 'no, fails at ' + str(ident.location)}",
        f"  nilpotent         {'yes, index ' + str(ps.index) if ps.nilpotent else 'no'}",
        f"  powers            {' '.join(map(str, ps.dims))}",
        f"  one-generated     {'yes, by ' + _vec(gen.witness) if gen else 'no generator found'}",
        f"  annihilator dim   {len(ann)}",
        f"{data['verdict']}",
    ]
    _emit(args, data, "\n".join(lines) + "\n")
    return OK if ok else FAILED


def _vec(v) -> str:
    terms = [f"{c}*e{i + 1}" if c != 1 else f"e{i + 1}" for i, c in enumerate(v) if c]
    return " + ".join(terms) or "0"


def cmd_cohomology(args, inputs) -> int:
    _expect(inputs, 1, "cohomology")
    a = _load(inputs[0])
    try:
        rep = cohomology_basis(a)
    except NotInSpanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
    data = {"algebra": a.name, **rep.to_dict()}
    z, b, h = rep.dims
    lines = [f"{a.name or 'algebra'}: dim Z2 = {z}, dim B2 = {b}, dim H2 = {h}"]
    for label, forms in (("Z2", rep.z2), ("B2", rep.b2), ("H2", rep.h2)):
        lines.append(f"  {label}:")
        lines.extend(f"    {format_form(t)}" for t in forms)
    _emit(args, data, "\n".join(lines) + "\n")
    return OK


def cmd_extend(args, inputs) -> int:
    _expect(inputs, 2, "extend")
    a = _load(inputs[0])
    path = Path(inputs[1].token)
    if not path.is_file():
        raise UsageError(f"cocycle file {inputs[1].token!r} not found")
    blocks = parse_cocycles(path.read_text(encoding="utf-8"), field=a.field)
    spec = ExtensionSpec(a, tuple(t for _, t in blocks))
    try:
        rep = validate_extension(spec, seed=args.seed)
    except NotACocycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
    ext = rep.algebra.renamed(args.name or f"{a.name or 'A'}_ext")
    data = {"base": a.name, "cocycles": [n for n, _ in blocks], **rep.to_dict(), "ok": rep.ok, "table": serialize_algebra(ext)}
    lines = [serialize_algebra(ext).rstrip("\n"), ""]
    for k, v in rep.to_dict().items():
        lines.append(f"  {k:<22}{v}")
    lines.append("pass" if rep.ok else "fail")
    _emit(args, data, "\n".join(lines) + "\n")
    return OK if rep.ok else FAILED


def cmd_iso(args, inputs) -> int:
    _expect(inputs, 2, "iso")
    a, b = _load(inputs[0]), _load(inputs[1])
    data: dict = {"source": a.name, "target": b.name}
    lines = [f"{a.name} vs {b.name}"]
    if a.dim != b.dim:
        cert = certify_noniso(a, b, args.primes)
        data.update(isomorphic=False, certificate=cert.to_dict())
        lines.append(f"  not isomorphic: dimensions {a.dim} and {b.dim}")
        _emit(args, data, "\n".join(lines) + "\n")
        return FAILED
    fa, fb = fingerprint(a), fingerprint(b)
    if fa.diff(fb):
        cert = certify_noniso(a, b, args.primes)
        data.update(isomorphic=False, certificate=cert.to_dict())
        lines.append(f"  not isomorphic over any extension field: fingerprints differ in {', '.join(fa.diff(fb))}")
        _emit(args, data, "\n".join(lines) + "\n")
        return FAILED
    r = iso_search_rational(a, b, height_bound=args.height_bound, primes=args.primes)
    data["search"] = r.to_dict()
    if r.found:
        data["isomorphic"] = True
        lines.append(f"  isomorphic; witness found by {r.strategy} (columns are images of e1..e{a.dim})")
        for row in r.witness.matrix.rows:
            lines.append("    " + "  ".join(f"{str(x):>6}" for x in row))
        _emit(args, data, "\n".join(lines) + "\n")
        return OK
    cert = certify_noniso(a, b, args.primes, use_fingerprint=False)
    data.update(isomorphic=None, certificate=cert.to_dict())
    lines.append(f"  no rational witness up to height {args.height_bound}")
    for f in r.fp_results or cert.fp_results:
        lines.append(f"  GF({f.p}): {'isomorphic' if f.found else 'no isomorphism'} ({f.candidates} candidates, exhaustive={f.exhaustive})")
    if cert.kind == "finite-field":
        lines.append(f"  certificate: exhaustive finite-field failure ({cert.validity})")
    _emit(args, data, "\n".join(lines) + "\n")
    return FAILED


def cmd_catalog(args, inputs) -> int:
    if not inputs:
        listing = []
        lines = []
        for n in names(args.dim, include_secondary=args.all):
            e = entry(n)
            d = e.to_dict()
            d["samples"] = [{k: str(v) for k, v in p.items()} for p in sample_parameters(n, 3)] if e.params else []
            listing.append(d)
            params = f"({', '.join(e.params)})" if e.params else ""
            extra = f"  [{e.status}]" if e.status != "canonical" else ""
            lines.append(f"{n}{params:<16} dim {e.dim}{extra}")
        _emit(args, {"entries": listing}, "\n".join(lines) + "\n")
        return OK
    docs = []
    for inp in inputs:
        a = _load(inp)
        docs.append(serialize_algebra(a))
    _emit(args, {"documents": docs}, "\n".join(docs))
    return OK


def cmd_verify(args, inputs) -> int:
    if inputs:
        raise UsageError("verify-paper takes no algebras")
    opts = Options(seed=args.seed, primes=args.primes, height_bound=args.height_bound)
    progress = None
    if args.verbose:
        progress = lambda name: print(f"running {name}", file=sys.stderr)  # noqa: E731
    report = run_verification(opts, jobs=args.jobs, progress=progress)
    validate_report(report)
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=1) + "\n")
    else:
        sys.stdout.write(render_text(report))
    return OK if report_ok(report) else FAILED


COMMANDS = {
    "check": (cmd_check, "identities, nilpotency, one-generation and annihilator"),
    "cohomology": (cmd_cohomology, "Z2, B2 and H2 of an algebra"),
    "extend": (cmd_extend, "central extension by cocycles read from a file"),
    "iso": (cmd_iso, "isomorphism witness or non-isomorphism certificate"),
    "catalog": (cmd_catalog, "list the catalog or print instantiated tables"),
    "verify-paper": (cmd_verify, "full regression over the catalog"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", default=None, help="random seed (default: $NILEX_SEED or %d)" % DEFAULT_SEED)
    common.add_argument("--primes", default=None, help="comma-separated primes for finite-field searches (default 5,7)")
    common.add_argument("--height-bound", type=int, default=DEFAULT_HEIGHT_BOUND)
    parser = argparse.ArgumentParser(
        prog="nilex",
        description="Exact tools for one-generated nilpotent assosymmetric algebras.",
        epilog="Algebras are catalog names (with --param name=value after each) or paths to algebra documents.",
    )
    parser.add_argument("--version", action="version", version=f"nilex {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name == "catalog":
            p.add_argument("--dim", type=int, default=None)
            p.add_argument("--all", action="store_true", help="include secondary (as printed) tables")
        if name == "extend":
            p.add_argument("--name", default=None, help="name of the extension in the output")
        if name == "verify-paper":
            p.add_argument("--jobs", type=int, default=1)
            p.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        if not argv or argv[0] not in COMMANDS:
            parser.parse_args(argv)  # prints help / errors and exits
        command = argv[0]
        rest, inputs = _split_params(argv[1:])
        args = parser.parse_args([command, *rest])
        args.seed = _seed(args.seed)
        args.primes = _primes(args.primes)
        if any(p in (2, 3) for p in args.primes):
            raise UsageError("primes 2 and 3 are not supported")
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        fn = COMMANDS[command][0]
        return fn(args, inputs)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else BAD_INPUT
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except (UsageError, ExcludedParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except IsomorphismFailure as exc:
        print(f"internal error: a produced witness failed verification: {exc}", file=sys.stderr)
        return INTERNAL
    except NilexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
    except Exception as exc:  # an unexpected exception means an invariant broke
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
