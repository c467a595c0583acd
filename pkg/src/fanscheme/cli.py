"""JSON command line for fans, chart monoids, and property reports.

Exit codes: 0 on success, 1 for unreadable or malformed documents and
usage errors, 2 when the input is well-formed but mathematically rejected
(fan validation failures, inconsistent base descriptions).  Integer
vectors travel as arrays of decimal strings; plain integers are accepted
on input.
"""

import argparse
import json
import sys

from .cones import dual_cone, cone_from_rays, faces
from .fans import (
    BadIntersectionError,
    Fan,
    FanError,
    MissingFaceError,
    NonPointedConeError,
    complete_under_faces,
    fullify,
    is_complete,
    is_full,
    is_regular,
    validate_fan,
)
from .monoids import dual_monoid
from .scheme import (
    BaseDescriptor,
    MonoidSystem,
    build_atlas,
    check_separation_condition,
    is_openly_immersive,
    property_report,
)

EXIT_OK = 0
EXIT_DOCUMENT = 1
EXIT_REJECTED = 2


class DocumentError(Exception):
    """The input file cannot be read or does not follow the format."""


class BaseRejection(Exception):
    """The base description is well-formed but self-contradictory."""


def _emit(payload):
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _vec_json(v):
    return [str(c) for c in v]


def _vecs_json(vs):
    return [_vec_json(v) for v in vs]


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise DocumentError("cannot read %s: %s" % (path, e.strerror or e))
    except json.JSONDecodeError as e:
        raise DocumentError("%s is not valid JSON: %s" % (path, e))


def _int_entry(value, where):
    if isinstance(value, bool):
        raise DocumentError("%s must be an integer, not a boolean" % where)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise DocumentError(
                "%s is not a decimal integer: %r" % (where, value)
            )
    raise DocumentError("%s must be an integer or a decimal string" % where)


def _vector(value, rank, where):
    if not isinstance(value, list) or len(value) != rank:
        raise DocumentError(
            "%s must be an array of %d coordinates" % (where, rank)
        )
    return tuple(_int_entry(x, where) for x in value)


def load_fan_document(path, auto_close=True):
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise DocumentError("fan document must be a JSON object")
    unknown = sorted(set(doc) - {"lattice_rank", "cones", "options"})
    if unknown:
        raise DocumentError("unknown fan document keys: %s" % ", ".join(unknown))
    if "lattice_rank" not in doc:
        raise DocumentError("fan document needs a lattice_rank")
    rank = _int_entry(doc["lattice_rank"], "lattice_rank")
    if rank < 0:
        raise DocumentError("lattice_rank must be nonnegative")
    options = doc.get("options", {})
    if not isinstance(options, dict) or set(options) - {"auto_close_faces"}:
        raise DocumentError("options allows only auto_close_faces")
    close = options.get("auto_close_faces", True)
    if not isinstance(close, bool):
        raise DocumentError("auto_close_faces must be a boolean")
    cones_doc = doc.get("cones", [])
    if not isinstance(cones_doc, list):
        raise DocumentError("cones must be an array")
    cones = []
    for pos, entry in enumerate(cones_doc):
        if not isinstance(entry, dict) or set(entry) - {"rays"}:
            raise DocumentError(
                "cone %d must be an object with a rays array" % pos
            )
        rays_doc = entry.get("rays", [])
        if not isinstance(rays_doc, list):
            raise DocumentError("cone %d rays must be an array" % pos)
        rays = [_vector(r, rank, "cone %d ray" % pos) for r in rays_doc]
        try:
            cones.append(cone_from_rays(rank, rays))
        except ValueError as e:
            raise DocumentError("cone %d: %s" % (pos, e))
    fan = Fan(rank, cones)
    if close and auto_close:
        fan = complete_under_faces(fan)
    return fan


def load_base_document(path):
    doc = _load_json(path)
    try:
        return BaseDescriptor.from_json_dict(doc)
    except ValueError as e:
        msg = str(e)
        if msg.startswith("inconsistent base description"):
            raise BaseRejection(msg)
        raise DocumentError("%s: %s" % (path, msg))


def _fan_error_kind(e):
    if isinstance(e, NonPointedConeError):
        return "non-pointed-cone"
    if isinstance(e, MissingFaceError):
        return "missing-face"
    if isinstance(e, BadIntersectionError):
        return "bad-intersection"
    return "invalid-fan"


def _load_valid_fan(args):
    fan = load_fan_document(args.fan, auto_close=not args.no_auto_close)
    validate_fan(fan)
    return fan


def _pick_cone(fan, index):
    if not 0 <= index < len(fan.cones):
        raise DocumentError(
            "cone index %d out of range: the fan has %d cones"
            % (index, len(fan.cones))
        )
    return fan.cones[index]


def _cmd_validate(args):
    fan = _load_valid_fan(args)
    return {"valid": True, "lattice_rank": fan.rank, "cones": len(fan.cones)}


def _cmd_hilbert(args):
    fan = _load_valid_fan(args)
    c = _pick_cone(fan, args.cone)
    points = dual_monoid(dual_cone(c))  # lattice points of the cone itself
    return {
        "cone": args.cone,
        "hilbert_basis": _vecs_json(points.hilbert_pointed),
        "lineality_basis": _vecs_json(points.hilbert_lineality),
    }


def _cmd_dual(args):
    fan = _load_valid_fan(args)
    m = dual_monoid(_pick_cone(fan, args.cone))
    return {
        "cone": args.cone,
        "generators": _vecs_json(m.generators),
        "hilbert_basis": _vecs_json(m.hilbert_pointed),
        "lineality_basis": _vecs_json(m.hilbert_lineality),
    }


def _cmd_faces(args):
    fan = _load_valid_fan(args)
    c = _pick_cone(fan, args.cone)
    lattice = faces(c)
    out = []
    for f in sorted(lattice, key=lambda x: (x.dim, x.rays)):
        out.append({
            "dim": f.dim,
            "rays": _vecs_json(f.rays),
            "witness": _vec_json(lattice.witnesses[f]),
        })
    return {"cone": args.cone, "faces": out}


def _cmd_regularity(args):
    fan = _load_valid_fan(args)
    report = is_regular(fan)
    return {
        "regular": report.regular,
        "cones": [
            {"index": i, "regular": ok}
            for i, (_, ok) in enumerate(report.entries)
        ],
    }


def _cmd_complete(args):
    fan = _load_valid_fan(args)
    return {"complete": is_complete(fan), "full": is_full(fan)}


def _cmd_atlas(args):
    fan = _load_valid_fan(args)
    atlas = build_atlas(fan)
    system = MonoidSystem.from_fan(fan)
    immersion = is_openly_immersive(system, search_bound=args.search_bound)
    separation = check_separation_condition(system)
    return {
        "charts": [
            {"label": i, "generators": _vecs_json(m.generators)}
            for i, m in enumerate(atlas.charts)
        ],
        "transitions": [
            {
                "lower": i,
                "upper": j,
                "element": _vec_json(cert.element),
                "shifts": [
                    {"generator": _vec_json(h), "power": k}
                    for h, k in cert.shifts
                ],
            }
            for i, j, cert in atlas.transitions
        ],
        "sections": [s.label for s in atlas.sections],
        "openly_immersive": immersion.verdict,
        "separated": separation.separated,
    }


def _cmd_fullify(args):
    fan = _load_valid_fan(args)
    result = fullify(fan)
    return {
        "torus_rank": result.torus_rank,
        "basis": _vecs_json(result.basis),
        "complement": _vecs_json(result.complement),
        "reduced": {
            "lattice_rank": result.reduced.rank,
            "cones": [{"rays": _vecs_json(c.rays)} for c in result.reduced.cones],
        },
        "cone_map": [
            [result.original.index(a), result.reduced.index(b)]
            for a, b in result.cone_map
        ],
    }


def _cmd_report(args):
    fan = _load_valid_fan(args)
    base = load_base_document(args.base) if args.base else BaseDescriptor()
    return [r.to_json_dict() for r in property_report(fan, base)]


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="fanscheme",
        description="exact fans, chart monoids, and property reports",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, run, help_text, cone=False, base=False, bound=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--fan", required=True, metavar="PATH",
                       help="fan document (JSON)")
        p.add_argument("--no-auto-close", action="store_true",
                       help="do not add missing faces before validating")
        if cone:
            p.add_argument("--cone", required=True, type=int, metavar="INDEX",
                           help="index into the fan's cone list")
        if base:
            p.add_argument("--base", metavar="PATH",
                           help="base descriptor document (JSON); "
                                "defaults to an all-unknown base")
        if bound:
            p.add_argument("--search-bound", type=int, default=6, metavar="N",
                           help="generator-sum bound for immersion searches")
        p.set_defaults(run=run)

    add("validate", _cmd_validate, "check the fan axioms")
    add("hilbert", _cmd_hilbert, "Hilbert basis of one cone's lattice points",
        cone=True)
    add("dual", _cmd_dual, "generators of one cone's chart monoid", cone=True)
    add("faces", _cmd_faces, "face lattice of one cone with witnesses",
        cone=True)
    add("regularity", _cmd_regularity, "cone-by-cone regularity report")
    add("complete", _cmd_complete, "completeness and fullness of the fan")
    add("atlas", _cmd_atlas, "charts, transitions, sections, and gluing checks",
        bound=True)
    add("fullify", _cmd_fullify, "split off the torus factor")
    add("report", _cmd_report, "cited property report over a described base",
        base=True)
    return parser


def entry(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_DOCUMENT if e.code else EXIT_OK
    try:
        payload = args.run(args)
    except DocumentError as e:
        print(str(e), file=sys.stderr)
        return EXIT_DOCUMENT
    except FanError as e:
        rejected = {"error": str(e), "kind": _fan_error_kind(e)}
        if args.command == "validate":
            rejected["valid"] = False
        _emit(rejected)
        return EXIT_REJECTED
    except BaseRejection as e:
        _emit({"error": str(e), "kind": "inconsistent-base"})
        return EXIT_REJECTED
    _emit(payload)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(entry())
