"""Command line interface: ``infgon <subcommand> ...``.

Machine output is compact JSON on stdout.  Library errors exit with status 1
and a ``{code, message, context}`` object on stderr; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cluster, frieze, modules, sequences, triangulation
from .arcs import Arc, parse_arc
from .errors import InfgonError
from .render import RenderSpec, render_frieze, render_window

EXIT_ERROR = 1
EXIT_USAGE = 2


class InputError(InfgonError):
    code = "InvalidInput"


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _arc(text: str) -> Arc:
    try:
        return parse_arc(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _word(text: str) -> sequences.BinarySeq:
    try:
        return sequences.BinarySeq.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_window(path: str) -> triangulation.TriangulationWindow:
    try:
        with open(path, encoding="utf-8") if path != "-" else _stdin() as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}", path=path) from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg}", path=path, line=exc.lineno) from None
    return triangulation.TriangulationWindow.from_json(data)


class _stdin:
    def __enter__(self):
        return sys.stdin

    def __exit__(self, *exc):
        return False


def _use_color(stream) -> bool:
    return "INFGON_NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(args, obj) -> None:
    _emit(args, _dumps(obj))


def _grid(f: frieze.FriezeArray) -> str:
    style = None
    if _use_color(sys.stdout):
        def style(a, b, v, t):
            return f"\x1b[1;32m{t}\x1b[0m" if v == 1 and b > a else t
    return frieze.format_grid(f, style=style)


# -- subcommands --------------------------------------------------------------------


def cmd_validate(args):
    w = _load_window(args.window)
    _emit_json(args, {"valid": True, "kind": w.kind(), "arcs": len(w.arcs),
                      "triangles": len(triangulation.triangles(w))})


def cmd_mutate(args):
    w = _load_window(args.window)
    new = triangulation.flip(w, args.arc)
    if args.effect:
        effect = sequences.check_mutation_effect(w, args.arc)
        _emit_json(args, {"window": new.to_json(), "effect": effect.to_json()})
    else:
        _emit_json(args, new.to_json())


def cmd_sequence(args):
    w = _load_window(args.window)
    if args.psi:
        left, right = sequences.psi(w, at=args.at)
        _emit_json(args, {"left": left.word, "right": right.word})
        return
    x = sequences.x_sequence(w, at=args.at, side=args.side)
    out = {"x": x.word, "y": list(sequences.x_to_y(x))}
    if args.special:
        out["special"] = sequences.is_special_window(w, at=args.at, side=args.side)
    if args.specialize:
        s = sequences.specialize(w, at=args.at, side=args.side)
        out["specialized"] = {"x": sequences.x_sequence(s, at=args.at, side=args.side).word,
                              "window": s.to_json()}
    _emit_json(args, out)


def cmd_penrose(args):
    word = args.word
    if args.action == "encode":
        _emit_json(args, {"word": sequences.penrose_encode(word).word})
    elif args.action == "decode":
        _emit_json(args, {"word": sequences.penrose_decode(word).word})
    else:
        _emit_json(args, {"word": word.word, "consecutive_ones": sequences.has_consecutive_ones(word)})


def cmd_frieze(args):
    if args.window:
        f = frieze.frieze_from_window(_load_window(args.window))
    else:
        f = frieze.frieze_from_quiddity(args.quiddity, kind=args.kind, lo=args.lo)
    if args.pretty:
        _emit(args, _grid(f))
    else:
        _emit_json(args, f.to_json())


def cmd_cluster_frieze(args):
    f = cluster.coefficient_frieze(_load_window(args.window))
    if args.specialize_ones:
        f = cluster.specialize_ones(f)
    if args.pretty:
        _emit(args, _grid(f) if args.specialize_ones else _laurent_listing(f))
    else:
        _emit_json(args, f.to_json())


def _laurent_listing(f) -> str:
    lines = []
    for a, b in sorted(f.entries):
        if b > a:
            lines.append(f"m[{a},{b}] = {f[a, b]}")
    return "\n".join(lines)


def cmd_chi(args):
    w = _load_window(args.window)
    cs = cluster.crossing_string(w, args.arc)
    var = cluster.cluster_variable(cluster.initial_seed(w), args.arc)
    out = cs.to_json()
    out["count"] = cluster.submodule_count(cs)
    out["variable"] = str(var)
    out["specialized"] = var.specialize_ones()
    _emit_json(args, out)


def cmd_module(args):
    if args.ext:
        m, n = args.ext
        mid = modules.extension_middle_or_none(m, n)
        _emit_json(args, {"M": m.to_json(), "N": n.to_json(), "ext": 0 if mid is None else 1,
                          "middle": [] if mid is None else [x.to_json() for x in sorted(mid)]})
        return
    if args.arc is None:
        raise InputError("module needs --arc or --ext")
    arc = args.arc
    desc = modules.arc_to_module(arc)
    out = {"arc": arc.to_json(), "kind": arc.kind.value, "module": modules.describe(desc)}
    if args.desc:
        out["matrix_factorization"] = modules.matrix_factorization(desc).to_json()
    if not (arc.is_boundary or arc.is_infinite):
        start, mid, end = modules.ar_sequence(arc)
        out["tau"] = modules.ar_translate(arc).to_json()
        out["ar_sequence"] = [start.to_json(), [x.to_json() for x in mid], end.to_json()]
        s, mid, e = modules.exchange_sequence(arc)
        out["exchange_sequence"] = [s.to_json(), [x.to_json() for x in mid], e.to_json()]
    _emit_json(args, out)


def cmd_render(args):
    spec = RenderSpec(format=args.format, geometry=args.geometry, scale=args.scale, labels=not args.no_labels)
    w = _load_window(args.window)
    if args.frieze:
        _emit(args, render_frieze(frieze.frieze_from_window(w), spec))
    else:
        _emit(args, render_window(w, spec))


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="infgon",
        description="Triangulations of the completed infinity-gon and their friezes.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def window_arg(sp, required=True):
        sp.add_argument("--window", "--from-window", dest="window", required=required,
                        help="window JSON file ('-' for stdin)")

    def out_arg(sp):
        sp.add_argument("--out", help="write to this file instead of stdout")

    sp = sub.add_parser("validate", help="check a window")
    window_arg(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("mutate", help="flip one arc")
    window_arg(sp)
    sp.add_argument("--arc", type=_arc, required=True, help="arc as a,b")
    sp.add_argument("--effect", action="store_true", help="also report the x-word change")
    out_arg(sp)
    sp.set_defaults(func=cmd_mutate)

    sp = sub.add_parser("sequence", help="x- and y-sequences of the fountain")
    window_arg(sp)
    sp.add_argument("--at", type=int, help="use this vertex as fountain point")
    sp.add_argument("--side", choices=("left", "right"))
    sp.add_argument("--psi", action="store_true", help="report the left and right x-words")
    sp.add_argument("--special", action="store_true", help="report whether the window is special")
    sp.add_argument("--specialize", action="store_true", help="also return a special equivalent window")
    sp.set_defaults(func=cmd_sequence)

    sp = sub.add_parser("penrose", help="Penrose index words")
    sp.add_argument("action", choices=("encode", "decode", "check"))
    sp.add_argument("word", type=_word)
    sp.set_defaults(func=cmd_penrose)

    sp = sub.add_parser("frieze", help="integral frieze")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--window", "--from-window", dest="window")
    src.add_argument("--quiddity", type=_int_list)
    sp.add_argument("--kind", choices=frieze.KINDS, default="right")
    sp.add_argument("--lo", type=int, default=0)
    sp.add_argument("--pretty", action="store_true", help="text grid instead of JSON")
    out_arg(sp)
    sp.set_defaults(func=cmd_frieze)

    sp = sub.add_parser("cluster-frieze", help="frieze of cluster variables")
    window_arg(sp)
    sp.add_argument("--specialize-ones", action="store_true")
    sp.add_argument("--pretty", action="store_true")
    out_arg(sp)
    sp.set_defaults(func=cmd_cluster_frieze)

    sp = sub.add_parser("chi", help="crossing string, submodule count and cluster variable of an arc")
    window_arg(sp)
    sp.add_argument("--arc", type=_arc, required=True)
    sp.set_defaults(func=cmd_chi)

    sp = sub.add_parser("module", help="module, matrix factorization and AR data of an arc")
    sp.add_argument("--arc", type=_arc)
    sp.add_argument("--desc", action="store_true", help="include the matrix factorization")
    sp.add_argument("--ext", nargs=2, type=_arc, metavar=("M", "N"), help="extension data Ext(M, N)")
    sp.set_defaults(func=cmd_module)

    sp = sub.add_parser("render", help="draw a window or its frieze")
    window_arg(sp)
    sp.add_argument("--format", choices=("svg", "tikz", "text"), default="svg")
    sp.add_argument("--geometry", choices=("line", "disc"), default="line")
    sp.add_argument("--scale", type=float, default=1.0)
    sp.add_argument("--no-labels", action="store_true")
    sp.add_argument("--frieze", action="store_true", help="draw the frieze instead of the arcs")
    out_arg(sp)
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        args.func(args)
    except InfgonError as exc:
        sys.stderr.write(_dumps(exc.to_json()) + "\n")
        return EXIT_ERROR
    except ValueError as exc:
        sys.stderr.write(_dumps({"code": "InvalidInput", "message": str(exc), "context": {}}) + "\n")
        return EXIT_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
