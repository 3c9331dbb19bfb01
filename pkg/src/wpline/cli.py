"""Command-line front door.

Exit codes: 0 success, 1 failed verification (an equality query answering
false, or a replay with a failing check), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bundles import eq_ext, injective_hull, projective_cover, slope, suspend
from .fixtures import fixture, fixture_json, fixture_names
from .k0 import k0_of
from .quiver import Quiver, apply_sequence, is_isomorphic, mutate, search
from .replay import run_replay
from .textforms import canonical_json, parse_bundle, parse_element, parse_weights


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(canonical_json({"schema": "1", **payload}) + "\n")
    else:
        sys.stdout.write(text + "\n")


def _load_quiver(ref: str) -> Quiver:
    if ref in fixture_names():
        return fixture(ref)
    path = Path(ref)
    if path.exists():
        return Quiver.from_json_dict(json.loads(path.read_text()))
    raise ValueError(f"{ref!r} is neither a fixture name nor a quiver JSON file")


def _parse_sequence(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="wpline")
    sub = top.add_subparsers(dest="command", required=True)

    def with_weights(p):
        p.add_argument("--weights", required=True, help="p1,p2,p3")
        p.add_argument("--json", action="store_true")
        return p

    p = with_weights(sub.add_parser("normal-form", help="normal form of an element expression"))
    p.add_argument("expr")

    p = with_weights(sub.add_parser("delta", help="degree of an element"))
    p.add_argument("expr")

    p = with_weights(sub.add_parser("hom-dim", help="hom and ext1 dimensions between line bundles"))
    p.add_argument("x")
    p.add_argument("y")

    p = with_weights(sub.add_parser("k0-reduce", help="class of a line bundle over the basis"))
    p.add_argument("expr")

    p = with_weights(sub.add_parser("euler", help="Euler pairing of two line-bundle classes"))
    p.add_argument("x")
    p.add_argument("y")

    p = with_weights(sub.add_parser("bundle-eq", help="equality of two bundle presentations"))
    p.add_argument("a")
    p.add_argument("b")

    p = with_weights(sub.add_parser("suspend", help="suspension of a bundle presentation"))
    p.add_argument("bundle")

    p = with_weights(sub.add_parser("hulls", help="hull and cover line bundles of a presentation"))
    p.add_argument("bundle")

    p = with_weights(sub.add_parser("slope", help="slope of a bundle presentation"))
    p.add_argument("bundle")

    p = sub.add_parser("mutate", help="mutate a quiver at one vertex")
    p.add_argument("--quiver", required=True)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("apply", help="apply a mutation sequence")
    p.add_argument("--quiver", required=True)
    p.add_argument("--sequence", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("iso", help="test two quivers for isomorphism")
    p.add_argument("--quiver", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("search", help="shortest mutation sequence to an isomorphic target")
    p.add_argument("--quiver", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--max-depth", type=int, default=6)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("fixtures", help="list fixtures or print one")
    p.add_argument("name", nargs="?")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("replay", help="run a verification pipeline")
    p.add_argument("weight_type", choices=["244", "236", "333"])
    p.add_argument("--json", dest="json_out", metavar="OUT", help="write the report JSON to a file")

    p = sub.add_parser("serve", help="run the local JSON service")
    p.add_argument("--port", type=int, default=8732)
    p.add_argument("--host", default="127.0.0.1")

    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def _dispatch(args) -> int:
    cmd = args.command

    if cmd == "normal-form":
        w = parse_weights(args.weights)
        e = parse_element(w, args.expr)
        _emit(args, {"normal_form": str(e)}, str(e))
        return 0

    if cmd == "delta":
        w = parse_weights(args.weights)
        d = parse_element(w, args.expr).delta()
        _emit(args, {"delta": d}, str(d))
        return 0

    if cmd == "hom-dim":
        w = parse_weights(args.weights)
        from .graded import ext1_dim_line, hom_dim_line

        x, y = parse_element(w, args.x), parse_element(w, args.y)
        hom, ext = hom_dim_line(x, y), ext1_dim_line(x, y)
        _emit(args, {"hom": hom, "ext1": ext}, f"hom={hom} ext1={ext}")
        return 0

    if cmd == "k0-reduce":
        w = parse_weights(args.weights)
        k0 = k0_of(w)
        cls = k0.reduce_line(parse_element(w, args.expr))
        _emit(args, {"coefficients": list(cls.coeffs)}, k0.to_string(cls))
        return 0

    if cmd == "euler":
        w = parse_weights(args.weights)
        k0 = k0_of(w)
        v = k0.euler_form(
            k0.reduce_line(parse_element(w, args.x)),
            k0.reduce_line(parse_element(w, args.y)),
        )
        _emit(args, {"euler": v}, str(v))
        return 0

    if cmd == "bundle-eq":
        w = parse_weights(args.weights)
        equal = eq_ext(parse_bundle(w, args.a), parse_bundle(w, args.b))
        _emit(args, {"equal": equal}, "true" if equal else "false")
        return 0 if equal else 1

    if cmd == "suspend":
        w = parse_weights(args.weights)
        out = suspend(parse_bundle(w, args.bundle))
        _emit(args, {"suspension": str(out)}, str(out))
        return 0

    if cmd == "hulls":
        w = parse_weights(args.weights)
        b = parse_bundle(w, args.bundle)
        hull = [str(e) for e in injective_hull(b)]
        cover = [str(e) for e in projective_cover(b)]
        _emit(
            args,
            {"injective_hull": hull, "projective_cover": cover},
            f"I: {' '.join(hull)}\nP: {' '.join(cover)}",
        )
        return 0

    if cmd == "slope":
        w = parse_weights(args.weights)
        mu = slope(parse_bundle(w, args.bundle))
        text = f"{mu.numerator}/{mu.denominator}" if mu.denominator != 1 else str(mu.numerator)
        _emit(args, {"slope": text}, text)
        return 0

    if cmd == "mutate":
        q = mutate(_load_quiver(args.quiver), args.vertex)
        _emit(args, {"quiver": q.to_json_dict()}, canonical_json(q.to_json_dict()))
        return 0

    if cmd == "apply":
        q = apply_sequence(_load_quiver(args.quiver), _parse_sequence(args.sequence))
        _emit(args, {"quiver": q.to_json_dict()}, canonical_json(q.to_json_dict()))
        return 0

    if cmd == "iso":
        wit = is_isomorphic(_load_quiver(args.quiver), _load_quiver(args.target))
        payload = {
            "isomorphic": wit is not None,
            "witness": {str(k): v for k, v in sorted(wit.items())} if wit else None,
        }
        _emit(args, payload, "isomorphic" if wit else "not isomorphic")
        return 0 if wit else 1

    if cmd == "search":
        seq = search(_load_quiver(args.quiver), _load_quiver(args.target), args.max_depth)
        payload = {"sequence": seq}
        _emit(args, payload, ",".join(map(str, seq)) if seq is not None else "no sequence found")
        return 0 if seq is not None else 1

    if cmd == "fixtures":
        if args.name:
            data = fixture_json(args.name)
            _emit(args, {"fixture": data}, canonical_json(data))
        else:
            names = fixture_names()
            _emit(args, {"fixtures": names}, "\n".join(names))
        return 0

    if cmd == "replay":
        report = run_replay(args.weight_type)
        if args.json_out:
            Path(args.json_out).write_text(canonical_json(report.to_dict()) + "\n")
        sys.stdout.write(report.render_text() + "\n")
        return 0 if report.passed else 1

    if cmd == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
        return 0

    raise ValueError(f"unknown command {cmd!r}")


if __name__ == "__main__":
    raise SystemExit(main())
