"""Command line interface: ``surfalg <command> [file] [options]``.

Documents are read from a path or from standard input (``-`` or no
path).  Output is JSON unless ``--format text`` or ``--format dot`` is
given.  Exit status is 0 on success, 1 when the input is rejected and 2
on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import brauer as br
from . import constructions as cons
from . import presentation as pres
from .errors import SurfalgError
from .io import (
    dump_brauer,
    dump_quiver,
    export_dot,
    is_brauer_document,
    load_brauer,
    load_quiver,
    parse_document,
    quiver_to_dict,
)
from .iso import isomorphic, ribbon_isomorphic
from .quiver import flags
from .surface import surface_report
from .weighted import WeightedBiserialQuiver, random_weighted_quiver


class UsageError(Exception):
    pass


def _read(path: str | None) -> Any:
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text)


def _quiver(path) -> tuple[WeightedBiserialQuiver, Any]:
    doc = _read(path)
    if is_brauer_document(doc):
        bq, weights = br.brauer_to_biserial(load_brauer(doc))
        return WeightedBiserialQuiver(bq, weights), None
    qd = load_quiver(doc)
    return qd.wbq, qd.metadata


def _brauer(path) -> br.BrauerGraph:
    doc = _read(path)
    if is_brauer_document(doc):
        return load_brauer(doc)
    wbq = load_quiver(doc).wbq
    return br.biserial_to_brauer(wbq.bq, wbq.weights)


# -- text renderings --------------------------------------------------------


def _quiver_text(wbq: WeightedBiserialQuiver) -> str:
    bq = wbq.bq
    width = max(len(a) for a in bq.arrow_ids)
    lines = [f"vertices: {' '.join(bq.vertices)}", "arrows:"]
    for a in bq.arrows:
        lines.append(f"  {a.id:<{width}}  {a.source} -> {a.target}  f={bq.f[a.id]}  g={bq.g[a.id]}")
    lines.append("f-orbits: " + " ".join("(" + " ".join(o) + ")" for o in bq.f_orbits))
    lines.append("g-orbits: " + " ".join(f"({' '.join(o)})^{wbq.weights[o[0]]}" for o in bq.g_orbits))
    if wbq.border is not None:
        lines.append("border: " + ", ".join(f"{v}={s}" for v, s in wbq.border.items()))
    if wbq.params is not None:
        lines.append("params: " + ", ".join(f"{k}={s}" for k, s in wbq.params.items()))
    return "\n".join(lines) + "\n"


def _brauer_text(g: br.BrauerGraph) -> str:
    lines = ["vertices:"]
    for v in g.vertices:
        lines.append(f"  {v}  e={g.multiplicity[v]}  ({' '.join(g.cyclic_order[v])})")
    lines.append("edges:")
    for e, (h1, h2) in g.edges.items():
        lines.append(f"  {e}  {h1}@{g.attachment[h1]}  {h2}@{g.attachment[h2]}")
    return "\n".join(lines) + "\n"


def _emit_quiver(args, wbq, metadata=None) -> str:
    if args.format == "text":
        return _quiver_text(wbq)
    if args.format == "dot":
        return export_dot(wbq)
    return dump_quiver(wbq, metadata)


def _emit_brauer(args, g) -> str:
    if args.format == "text":
        return _brauer_text(g)
    if args.format == "dot":
        return export_dot(g)
    return dump_brauer(g)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- commands ---------------------------------------------------------------


def cmd_validate(args) -> str:
    doc = _read(args.file)
    if is_brauer_document(doc):
        g = load_brauer(doc)
        out = {"valid": True, "document": "brauer-graph", "vertices": len(g.vertices), "edges": len(g.edges)}
    else:
        wbq = load_quiver(doc).wbq
        out = {
            "valid": True,
            "document": "quiver",
            "vertices": len(wbq.vertices),
            "arrows": len(wbq.arrows),
            "flags": flags(wbq.bq),
        }
    if args.format == "text":
        return "valid\n"
    return _json(out)


def cmd_orbits(args) -> str:
    wbq, _ = _quiver(args.file)
    bq = wbq.bq
    dec = bq.f_orbits if args.perm == "f" else bq.g_orbits
    if args.format == "text":
        if args.perm == "g":
            return "".join(f"({' '.join(o)})  m={wbq.weights[o[0]]}\n" for o in dec)
        return "".join(f"({' '.join(o)})\n" for o in dec)
    out = {"perm": args.perm, "orbits": [list(o) for o in dec]}
    if args.perm == "g":
        out["weights"] = [wbq.weights[o[0]] for o in dec]
    return _json(out)


def cmd_from_brauer(args) -> str:
    g = _brauer(args.file)
    bq, weights = br.brauer_to_biserial(g)
    return _emit_quiver(args, WeightedBiserialQuiver(bq, weights))


def cmd_to_brauer(args) -> str:
    return _emit_brauer(args, _brauer(args.file))


def cmd_star(args) -> str:
    wbq, _ = _quiver(args.file)
    return _emit_quiver(args, cons.star(wbq, minimal=args.minimal))


def cmd_sharp(args) -> str:
    wbq, _ = _quiver(args.file)
    return _emit_quiver(args, cons.sharp(wbq))


def cmd_double_star(args) -> str:
    wbq, _ = _quiver(args.file)
    return _emit_quiver(args, cons.double_star(wbq))


def cmd_reduce(args) -> str:
    wbq, _ = _quiver(args.file)
    keep = [v for v in args.keep.split(",") if v]
    parts = cons.reduce(wbq, cons.IdempotentSelection(keep))
    if len(parts) == 1:
        return _emit_quiver(args, parts[0])
    if args.format == "json":
        return _json([quiver_to_dict(p) for p in parts])
    return "".join(_emit_quiver(args, p) for p in parts)


def cmd_barycentric(args) -> str:
    return _emit_brauer(args, cons.barycentric_division(_brauer(args.file)))


def cmd_relations(args) -> str:
    wbq, _ = _quiver(args.file)
    p = pres.build(wbq, args.kind)
    if args.format == "text":
        return p.text() + "\n"
    rels = []
    for r in p.relations:
        item = {"kind": r.kind, "left": list(r.left.arrows)}
        if r.kind == "binomial":
            item["scalar"] = str(r.scalar)
            item["right"] = list(r.right.arrows)
        item["text"] = str(r)
        rels.append(item)
    return _json({"kind": p.kind, "relations": rels, "virtual_loops": sorted(p.virtual_loops)})


def cmd_dim(args) -> str:
    wbq, _ = _quiver(args.file)
    return f"{pres.dimension(pres.relations_biserial(wbq))}\n"


def cmd_cartan(args) -> str:
    wbq, _ = _quiver(args.file)
    kind = "border" if args.border else "biserial"
    matrix = pres.cartan_matrix(pres.build(wbq, kind))
    verts = list(wbq.vertices)
    if args.format == "text":
        w = max([len(str(x)) for row in matrix for x in row] + [len(v) for v in verts]) + 1
        vw = max(len(v) for v in verts)
        head = " " * vw + "".join(f"{v:>{w}}" for v in verts)
        rows = [f"{v:<{vw}}" + "".join(f"{x:>{w}}" for x in row) for v, row in zip(verts, matrix)]
        return "\n".join([head] + rows) + "\n"
    return _json({"vertices": verts, "matrix": [list(r) for r in matrix]})


def cmd_gabriel(args) -> str:
    wbq, _ = _quiver(args.file)
    q = pres.gabriel_quiver(pres.relations_biserial(wbq))
    if args.format == "text":
        return "".join(f"{a.id}: {a.source} -> {a.target}\n" for a in q.arrows)
    return _json({
        "vertices": list(q.vertices),
        "arrows": [{"id": a.id, "source": a.source, "target": a.target} for a in q.arrows],
    })


def cmd_surface(args) -> str:
    wbq, _ = _quiver(args.file)
    rep = surface_report(wbq.bq)
    if args.format == "text":
        return "".join(f"{k}: {v}\n" for k, v in rep.as_dict().items())
    return _json(rep.as_dict())


def cmd_green_walks(args) -> str:
    wbq, _ = _quiver(args.file)
    walks = br.green_walks(wbq.bq)
    if args.format == "text":
        return "".join(f"({' '.join(w)})\n" for w in walks)
    return _json([{"f_orbit": list(o), "walk": list(w)} for o, w in zip(wbq.bq.f_orbits, walks)])


def cmd_iso(args) -> str:
    a, b = _read(args.file), _read(args.other)
    if is_brauer_document(a) != is_brauer_document(b):
        raise UsageError("cannot compare a quiver document with a Brauer graph document")
    if is_brauer_document(a):
        found = ribbon_isomorphic(load_brauer(a), load_brauer(b), max_vertices=args.max_vertices)
    else:
        found = isomorphic(load_quiver(a).wbq, load_quiver(b).wbq, max_vertices=args.max_vertices)
    if args.format == "text":
        return "isomorphic\n" if found else "not isomorphic\n"
    out = {"isomorphic": found is not None}
    if found is not None:
        out["vertex_map"] = dict(found.vertex_map)
        out["arrow_map"] = dict(found.arrow_map)
    return _json(out)


def cmd_envelope(args) -> str:
    wbq, _ = _quiver(args.file)
    out, sel = cons.periodic_envelope(wbq)
    return _emit_quiver(args, out, {"selection": sorted(sel.selected)})


def cmd_export_dot(args) -> str:
    doc = _read(args.file)
    if is_brauer_document(doc):
        return export_dot(load_brauer(doc))
    return export_dot(load_quiver(doc).wbq)


def cmd_random(args) -> str:
    if args.brauer:
        g = br.random_brauer_graph(args.vertices, args.seed, max_multiplicity=args.max_weight)
        return _emit_brauer(args, g)
    wbq = random_weighted_quiver(args.vertices, args.seed, max_weight=args.max_weight)
    return _emit_quiver(args, wbq)


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="surfalg", description="Biserial quivers, Brauer graphs and their algebras.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help, file=True):
        p = sub.add_parser(name, help=help)
        if file:
            p.add_argument("file", nargs="?", default="-", help="input document (default: standard input)")
        p.add_argument("--format", choices=("json", "text", "dot"), default="json")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a quiver or Brauer graph document")
    add("orbits", cmd_orbits, "orbits of f or g").add_argument("--perm", choices=("f", "g"), default="g")
    add("from-brauer", cmd_from_brauer, "biserial quiver of a Brauer graph")
    add("to-brauer", cmd_to_brauer, "Brauer graph of a biserial quiver")
    add("star", cmd_star, "star construction").add_argument(
        "--minimal", action="store_true", help="leave loopless triangles and f-fixed loops untouched")
    add("sharp", cmd_sharp, "sharp construction (keeps border loops)")
    add("double-star", cmd_double_star, "star construction applied twice")
    add("reduce", cmd_reduce, "idempotent reduction to a vertex subset").add_argument(
        "--keep", required=True, help="comma separated vertex ids")
    add("barycentric", cmd_barycentric, "barycentric division of a Brauer graph")
    add("relations", cmd_relations, "relations of the algebra").add_argument(
        "--kind", choices=("biserial", "border", "weighted"), default="biserial")
    add("dim", cmd_dim, "dimension of the algebra")
    add("cartan", cmd_cartan, "Cartan matrix").add_argument(
        "--border", action="store_true", help="use the border relations")
    add("gabriel", cmd_gabriel, "Gabriel quiver (virtual loops removed)")
    add("surface", cmd_surface, "ribbon surface invariants")
    add("green-walks", cmd_green_walks, "walks along the f-orbits")
    iso = add("iso", cmd_iso, "isomorphism test of two documents")
    iso.add_argument("other", help="second document")
    iso.add_argument("--max-vertices", type=_positive, default=12)
    add("envelope", cmd_envelope, "periodic envelope with trivial parameters")
    add("export-dot", cmd_export_dot, "DOT export")
    rnd = add("random", cmd_random, "seeded random quiver or Brauer graph", file=False)
    rnd.add_argument("--vertices", type=_positive, required=True, help="vertices (edges with --brauer)")
    rnd.add_argument("--seed", type=int, required=True)
    rnd.add_argument("--max-weight", type=_positive, default=3)
    rnd.add_argument("--brauer", action="store_true", help="generate a Brauer graph")
    return parser


def _report(exc: BaseException, name: str) -> None:
    out = {"error": name, "message": str(exc)}
    if getattr(exc, "pointer", None) is not None:
        out["pointer"] = exc.pointer or "/"
    if getattr(exc, "problems", None):
        out["problems"] = [{"code": c, "detail": d} for c, d in exc.problems]
    sys.stderr.write(json.dumps(out, ensure_ascii=False) + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"surfalg: error: {exc}\n")
        return 2
    except SurfalgError as exc:
        _report(exc, exc.name)
        return 1
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
