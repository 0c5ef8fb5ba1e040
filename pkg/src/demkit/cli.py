"""Command-line front end.

Commands: ``char`` (compute a character), ``presentation`` (defining
relations of a Demazure module), ``verify`` (run one verification and emit
a certificate), ``scan`` (exhaustive surjection scan), ``cache`` (manage
the on-disk character cache).

Exit codes: 0 success/verified, 1 refuted, 2 invalid flags, 3 hypothesis
violations and other domain errors, 4 inconclusive.  All primary output is
UTF-8 JSON or JSON-lines; ``--no-timing`` strips the elapsed fields so
reruns are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import theorems
from .affine import demazure_character, kr_character, presentation
from .cache import CacheKey, CharacterCache, resolve_cache_dir
from .finite import weyl_character
from .rootsystem import parse_system, root_system

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3
EXIT_INCONCLUSIVE = 4

_VERDICT_EXIT = {
    "verified": EXIT_OK,
    "refuted": EXIT_REFUTED,
    "hypothesis-violated": EXIT_HYPOTHESIS,
    "inconclusive": EXIT_INCONCLUSIVE,
}


def _system_arg(value):
    try:
        parse_system(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return value


def _weight_arg(value):
    try:
        return tuple(int(c) for c in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed weight {value!r}; expected e.g. '1,0'")


def _parts_arg(value):
    if not value.strip():
        return []
    return [_weight_arg(p) for p in value.split(";")]


def _leveled_parts_arg(value):
    if not value.strip():
        return []
    out = []
    for item in value.split(";"):
        if ":" not in item:
            raise argparse.ArgumentTypeError(
                f"malformed part {item!r}; expected 'level:coords' e.g. '1:2,0'"
            )
        lvl, coords = item.split(":", 1)
        try:
            out.append((int(lvl), _weight_arg(coords)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"malformed part level in {item!r}")
    return out


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _format_graded_dim(graded):
    if not graded:
        return "0"
    pieces = []
    for g, m in sorted(graded.items()):
        if g == 0:
            pieces.append(str(m))
        elif g == 1:
            pieces.append(f"{m}·q")
        else:
            pieces.append(f"{m}·q^{g}")
    return " + ".join(pieces)


def _pretty_character(char):
    lines = ["weight\tgrade\tmult"]
    for (w, g), m in char.sorted_terms():
        lines.append(f"{','.join(map(str, w))}\t{g}\t{m}")
    lines.append(f"dim {char.dimension()}")
    lines.append(f"graded dim {_format_graded_dim(char.graded_dimension())}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# char


def _cmd_char(args):
    rs = root_system(args.system)
    cache = None
    if not args.no_cache:
        cache = CharacterCache(resolve_cache_dir(args.cache_dir))

    if args.kind == "weyl":
        if args.weight is None:
            raise ValueError("--weight is required for --kind weyl")
        key = CacheKey(rs.name, "weyl", 0, args.weight)
        char = cache.load(key) if cache else None
        if char is None:
            char = weyl_character(rs, args.weight)
            if cache:
                cache.store(key, char)
    else:
        if args.level is None:
            raise ValueError("--level is required for Demazure characters")
        if args.kind == "kr":
            if args.index is None:
                raise ValueError("--index is required for --kind kr")
            weight = rs.scale(rs.d_simple[args.index - 1] * args.level, rs.fundamental_weight(args.index))
        else:
            if args.weight is None:
                raise ValueError("--weight is required for --kind demazure")
            weight = rs.check_weight(args.weight)
        key = CacheKey(rs.name, "demazure", args.level, weight)
        char = cache.load(key) if cache else None
        if char is None:
            char = kr_character(rs, args.level, args.index) if args.kind == "kr" \
                else demazure_character(rs, args.level, weight)
            if cache:
                cache.store(key, char)

    shown = char if (args.graded or args.kind == "weyl") else char.collapse()
    kind = "plain" if args.kind == "weyl" or not args.graded else "graded"
    text = _pretty_character(shown) if args.pretty else shown.to_jsonl(kind=kind)
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# presentation


def _cmd_presentation(args):
    rs = root_system(args.system)
    relations = presentation(rs, args.level, args.weight)
    if args.pretty:
        lines = ["alpha\tpairing\ts\tm\tnilpotency"]
        for rel in relations:
            nil = "-" if rel.nilpotency_order is None else f"(t^{rel.power_exponent - 1})^{rel.nilpotency_order}"
            lines.append(
                f"{','.join(map(str, rel.root_coords))}\t{rel.pairing}\t{rel.s}\t{rel.m}\t{nil}"
            )
        text = "\n".join(lines) + "\n"
    else:
        doc = {
            "system": rs.name,
            "level": args.level,
            "weight": list(args.weight),
            "relations": [rel.to_dict() for rel in relations],
        }
        text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _run_verify(args):
    rs = root_system(args.system)
    sub = args.verify_command
    if sub == "demprop":
        cert = theorems.verify_demprop(rs, args.level, args.parts, args.lam)
    elif sub == "mapsdem":
        cert = theorems.verify_mapsdem(rs, args.level, args.parts, args.lam)
    elif sub == "krdecom":
        cert = theorems.verify_krdecom(rs, args.level, args.s_vector, args.lam)
    elif sub == "ev0":
        cert = theorems.verify_ev0(rs, args.level, args.lam)
    elif sub == "twofold":
        cert = theorems.verify_twofold(rs, args.index, args.level, args.lam, args.mu1, args.mu2)
    elif sub == "genschurpos":
        cert = theorems.verify_genschurpos(
            rs, args.index, args.power, args.level, args.source_level, args.lam, args.mu
        )
    elif sub == "stabilization":
        cache = None
        if not args.no_cache:
            cache = CharacterCache(resolve_cache_dir(args.cache_dir))
        cert = theorems.verify_stabilization(
            rs, args.level, args.lam, args.max_grade, args.n_max, cache=cache
        )
    elif sub == "minuscule":
        cert = theorems.verify_minuscule(rs)
    else:  # pragma: no cover - argparse prevents this
        raise ValueError(f"unknown verification {sub!r}")
    return cert


def _cmd_verify(args):
    cert = _run_verify(args)
    _emit(cert.to_json(include_timing=not args.no_timing) + "\n", args.out)
    return _VERDICT_EXIT[cert.verdict]


# ---------------------------------------------------------------------------
# scan


def _cmd_scan(args):
    rs = root_system(args.system)
    certs = theorems.schur_scan(rs, args.height_bound, jobs=args.jobs)
    lines = [c.to_json(include_timing=not args.no_timing) for c in certs]
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, f"scan_{rs.name}_h{args.height_bound}.jsonl")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
    else:
        for ln in lines:
            sys.stdout.write(ln + "\n")
    summary = theorems.scan_summary(certs)
    sys.stdout.write(json.dumps(summary, sort_keys=True, separators=(",", ":")) + "\n")
    return EXIT_OK if summary["refuted"] == 0 else EXIT_REFUTED


# ---------------------------------------------------------------------------
# cache


def _cmd_cache(args):
    directory = resolve_cache_dir(args.cache_dir)
    cache = CharacterCache(directory)
    if args.cache_command == "path":
        sys.stdout.write(directory + "\n")
    elif args.cache_command == "stats":
        sys.stdout.write(json.dumps(cache.stats(), sort_keys=True, separators=(",", ":")) + "\n")
    else:  # clear
        cache.clear()
        sys.stdout.write(json.dumps({"cleared": True}, sort_keys=True, separators=(",", ":")) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring


def build_parser():
    parser = argparse.ArgumentParser(
        prog="demkit",
        description="Exact Demazure and Weyl characters, with verification certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_char = sub.add_parser("char", help="compute a character")
    p_char.add_argument("--system", required=True, type=_system_arg)
    p_char.add_argument("--level", type=int)
    p_char.add_argument("--weight", type=_weight_arg)
    p_char.add_argument("--kind", choices=("demazure", "weyl", "kr"), default="demazure")
    p_char.add_argument("--index", type=int, help="node index for --kind kr")
    p_char.add_argument("--graded", action="store_true", help="keep the grading in the output")
    p_char.add_argument("--pretty", action="store_true", help="human table instead of JSON lines")
    p_char.add_argument("--out")
    p_char.add_argument("--cache-dir")
    p_char.add_argument("--no-cache", action="store_true")
    p_char.set_defaults(func=_cmd_char)

    p_pres = sub.add_parser("presentation", help="defining relations of a Demazure module")
    p_pres.add_argument("--system", required=True, type=_system_arg)
    p_pres.add_argument("--level", required=True, type=int)
    p_pres.add_argument("--weight", required=True, type=_weight_arg)
    p_pres.add_argument("--pretty", action="store_true")
    p_pres.add_argument("--out")
    p_pres.set_defaults(func=_cmd_presentation)

    p_verify = sub.add_parser("verify", help="run one verification, emit a certificate")
    vsub = p_verify.add_subparsers(dest="verify_command", required=True)

    def common(p, *, level=True):
        p.add_argument("--system", required=True, type=_system_arg)
        if level:
            p.add_argument("--level", required=True, type=int)
        p.add_argument("--out")
        p.add_argument("--no-timing", action="store_true")
        p.set_defaults(func=_cmd_verify)

    p = vsub.add_parser("demprop")
    common(p)
    p.add_argument("--parts", type=_parts_arg, default=[], help="semicolon-separated weights, e.g. '2' or '1,0;0,1'")
    p.add_argument("--lambda", dest="lam", required=True, type=_weight_arg)

    p = vsub.add_parser("mapsdem")
    common(p)
    p.add_argument("--parts", type=_leveled_parts_arg, default=[], help="semicolon-separated level:weight pairs, e.g. '1:2;1:2'")
    p.add_argument("--lambda", dest="lam", required=True, type=_weight_arg)

    p = vsub.add_parser("krdecom")
    common(p)
    p.add_argument("--s-vector", dest="s_vector", required=True, type=_weight_arg)
    p.add_argument("--lambda", dest="lam", required=True, type=_weight_arg)

    p = vsub.add_parser("ev0")
    common(p)
    p.add_argument("--lambda", dest="lam", required=True, type=_weight_arg)

    p = vsub.add_parser("twofold")
    common(p)
    p.add_argument("--index", required=True, type=int)
    p.add_argument("--lambda", dest="lam", required=True, type=_weight_arg)
    p.add_argument("--mu1", required=True, type=_weight_arg)
    p.add_argument("--mu2", required=True, type=_weight_arg)

    p = vsub.add_parser("genschurpos")
    common(p)
    p.add_argument("--index", required=True, type=int)
    p.add_argument("--power", required=True, type=int)
    p.add_argument("--source-level", dest="source_level", required=True, type=int)
    p.add_argument("--lambda", dest="lam", required=True, type=_weight_arg)
    p.add_argument("--mu", required=True, type=_weight_arg)

    p = vsub.add_parser("stabilization")
    common(p)
    p.add_argument("--lambda", dest="lam", required=True, type=_weight_arg)
    p.add_argument("--max-grade", dest="max_grade", required=True, type=int)
    p.add_argument("--n-max", dest="n_max", required=True, type=int)
    p.add_argument("--cache-dir")
    p.add_argument("--no-cache", action="store_true")

    p = vsub.add_parser("minuscule")
    common(p, level=False)

    p_scan = sub.add_parser("scan", help="exhaustive surjection scan")
    p_scan.add_argument("--system", required=True, type=_system_arg)
    p_scan.add_argument("--height-bound", dest="height_bound", required=True, type=int)
    p_scan.add_argument("--jobs", type=int, default=None, help="worker count; defaults to available parallelism")
    p_scan.add_argument("--out", help="directory for the certificate stream")
    p_scan.add_argument("--no-timing", action="store_true")
    p_scan.set_defaults(func=_cmd_scan)

    p_cache = sub.add_parser("cache", help="manage the character cache")
    csub = p_cache.add_subparsers(dest="cache_command", required=True)
    for name in ("path", "stats", "clear"):
        pc = csub.add_parser(name)
        pc.add_argument("--cache-dir")
        pc.set_defaults(func=_cmd_cache)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_HYPOTHESIS


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
