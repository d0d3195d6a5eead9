"""Command-line front end.

Exit codes: 0 success, 1 well-formed input for which the predicate is false
(e.g. a graph that is not Droms), 2 input error, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
import traceback
from pathlib import Path

from traag import classify as cls
from traag.atlas import MAX_N, enumerate_graphs
from traag.decompose import (
    complete_special_quotient,
    decompose,
    format_tree,
    maximal_abelian_normal,
    tree_to_json,
)
from traag.errors import Disconnected, NotDroms, NotSpecial, TooSmall, TraagError
from traag.fileformat import read_graph, serialize
from traag.graph import negative_vertices, sinkholes
from traag.rigidity import NOT_RIGID, rigidity_verdict, satellites, verify_witness
from traag.words import (
    abelianization,
    check_hom,
    equal,
    format_word,
    inverse,
    nf_to_json,
    parse_word,
    presentation,
    reduce,
    to_word,
)

OK, FALSE, INPUT_ERROR, INTERNAL = 0, 1, 2, 3


class Outcome:
    def __init__(self, code=OK, result=None, certificates=(), witness=None, lines=()):
        self.code = code
        self.result = result if result is not None else {}
        self.certificates = [c.to_json() for c in certificates]
        self.witness = witness
        self.lines = list(lines)


def _cert_line(c: cls.Certificate) -> str:
    return f"  certificate {c.kind}: {' '.join(c.witness)}"


def cmd_classify(args) -> Outcome:
    g = read_graph(args.file)
    special, droms, chordal = cls.is_special(g), cls.is_droms(g), cls.is_chordal(g)
    certs = [c for c in (special, droms, chordal) if not c]
    certs = list(dict.fromkeys(certs))
    result = {
        "special": bool(special),
        "droms": bool(droms),
        "chordal": bool(chordal),
        "coherent": bool(chordal),
        "complete_special": cls.is_complete_special(g),
        "negative_vertices": sorted(negative_vertices(g)),
        "sinkholes": sorted(sinkholes(g)),
    }
    lines = [f"{k}: {v}" for k, v in result.items()] + [_cert_line(c) for c in certs]
    return Outcome(OK if droms else FALSE, result, certs, lines=lines)


def cmd_decompose(args) -> Outcome:
    g = read_graph(args.file)
    tree = decompose(g)
    if isinstance(tree, cls.Certificate):
        return Outcome(FALSE, {"decomposes": False}, [tree], lines=["not decomposable", _cert_line(tree)])
    text = format_tree(tree)
    return Outcome(OK, {"decomposes": True, "tree": tree_to_json(tree), "text": text}, lines=[text])


def cmd_presentation(args) -> Outcome:
    p = presentation(read_graph(args.file))
    result = {"generators": list(p.generators), "relators": [format_word(r) for r in p.relators]}
    return Outcome(OK, result, lines=[str(p)])


def cmd_abelianize(args) -> Outcome:
    r, s = abelianization(read_graph(args.file))
    return Outcome(OK, {"r": r, "s": s}, lines=[f"Z^{r} x (Z/2)^{s}"])


def cmd_quotient(args) -> Outcome:
    g = read_graph(args.file)
    try:
        delta, images = complete_special_quotient(g)
    except (NotSpecial, Disconnected) as exc:
        return Outcome(FALSE, {"error": str(exc)}, lines=[str(exc)])
    mapping = {v: format_word(w) for v, w in images.items()}
    lines = [serialize(delta).rstrip()] + [f"{v} -> {w}" for v, w in mapping.items()]
    return Outcome(OK, {"graph": serialize(delta), "map": mapping}, lines=lines)


def cmd_normal_subgroup(args) -> Outcome:
    g = read_graph(args.file)
    try:
        data = maximal_abelian_normal(g)
    except (NotDroms, Disconnected, TooSmall) as exc:
        return Outcome(FALSE, {"error": str(exc)}, lines=[str(exc)])
    gens = [format_word(w) for w in data.generators]
    lines = [f"{data.case}, rank {data.rank}: < {', '.join(gens)} >"]
    return Outcome(OK, {"case": data.case, "rank": data.rank, "generators": gens}, lines=lines)


def cmd_satellites(args) -> Outcome:
    g = read_graph(args.file)
    special = cls.is_special(g)
    if not special:
        return Outcome(FALSE, {"special": False}, [special], lines=["not special", _cert_line(special)])
    pairs = [{"sinkhole": p.sinkhole, "satellite": p.satellite} for p in satellites(g)]
    lines = [f"{p['satellite']} is a satellite of {p['sinkhole']}" for p in pairs] or ["no satellites"]
    return Outcome(OK, {"special": True, "satellites": pairs}, lines=lines)


def _witness_path(args) -> Path:
    if args.witness_out:
        return Path(args.witness_out)
    src = Path(args.file)
    return src.with_name(src.stem + ".witness.graph")


def cmd_rigidity(args) -> Outcome:
    g = read_graph(args.file)
    v = rigidity_verdict(g)
    result = {"verdict": v.value, "reason": v.reason, "note": v.note}
    lines = [f"{v.value}" + (f" ({v.reason})" if v.reason else "") + (f": {v.note}" if v.note else "")]
    witness = None
    if v.value == NOT_RIGID:
        wit = v.witness
        if wit.verified and not verify_witness(wit):
            raise AssertionError("witness failed re-verification")
        path = _witness_path(args)
        text = serialize(wit.g_prime)
        path.write_text(text, encoding="utf-8")
        witness = {
            "file": str(path),
            "graph": text,
            "fwd": {k: format_word(w) for k, w in wit.fwd.items()},
            "bwd": {k: format_word(w) for k, w in wit.bwd.items()},
            "verified": wit.verified,
            "notes": wit.notes,
        }
        lines.append(f"witness graph written to {path} (verified: {wit.verified})")
        lines += [f"  {k} -> {w}" for k, w in witness["fwd"].items() if w != k]
        lines += [f"  {k} <- {w}" for k, w in witness["bwd"].items() if w != k]
    return Outcome(OK, result, witness=witness, lines=lines)


def _droms_tree_or_outcome(g):
    tree = decompose(g)
    if isinstance(tree, cls.Certificate):
        return None, Outcome(FALSE, {"droms": False}, [tree], lines=["word problem needs a Droms graph", _cert_line(tree)])
    return tree, None


def cmd_reduce(args) -> Outcome:
    g = read_graph(args.file)
    w = parse_word(args.word)
    tree, fail = _droms_tree_or_outcome(g)
    if fail:
        return fail
    nf = reduce(tree, w)
    text = format_word(to_word(tree, nf))
    return Outcome(OK, {"word": format_word(w), "normal_form": text, "nf": nf_to_json(nf)}, lines=[text])


def cmd_equal(args) -> Outcome:
    g = read_graph(args.file)
    w1, w2 = parse_word(args.w1), parse_word(args.w2)
    tree, fail = _droms_tree_or_outcome(g)
    if fail:
        return fail
    same = equal(tree, w1, w2)
    return Outcome(OK if same else FALSE, {"equal": same}, lines=["equal" if same else "not equal"])


def parse_map(text: str) -> dict:
    images = {}
    for item in text.split(";"):
        if not item.strip():
            continue
        name, sep, word = item.partition("=")
        if not sep:
            raise ValueError(f"bad map item {item!r}; expected v=word")
        images[name.strip()] = parse_word(word)
    return images


def cmd_hom(args) -> Outcome:
    src, dst = read_graph(args.src), read_graph(args.dst)
    images = parse_map(args.map)
    if args.default_identity:
        for v in src.vertices:
            images.setdefault(v, ((v, 1),))
    missing = [v for v in src.vertices if v not in images]
    if missing:
        raise ValueError(f"no image given for {missing}")
    tree, fail = _droms_tree_or_outcome(dst)
    if fail:
        return fail
    res = check_hom(src, tree, images)
    if res is True:
        return Outcome(OK, {"homomorphism": True}, lines=["homomorphism"])
    failing = {"relator": format_word(res.relator), "image": format_word(res.image)}
    lines = [f"not a homomorphism: relator {failing['relator']} maps to {failing['image']}"]
    return Outcome(FALSE, {"homomorphism": False, "failing_relator": failing}, lines=lines)


def _random_word(rng, verts, length):
    return tuple((rng.choice(verts), rng.choice((-2, -1, 1, 2))) for _ in range(length))


def cmd_enumerate(args) -> Outcome:
    n = args.n
    if n > min(args.max_n, MAX_N) or n < 1:
        raise ValueError(f"n must lie in 1..{min(args.max_n, MAX_N)}")
    entries = list(enumerate_graphs(n, jobs=args.jobs))
    result = {"n": n, "classes": len(entries)}
    lines = [str(len(entries))]
    code = OK
    if args.oracle_check:
        rng = random.Random(args.seed)
        bad, words = [], 0
        for e in entries:
            if e.discrepancies():
                bad.append({"index": e.index, "graph": serialize(e.graph), "fields": e.discrepancies()})
                continue
            if not e.predicates["droms"]:
                continue
            tree = decompose(e.graph)
            for _ in range(20):
                w = _random_word(rng, list(e.graph.vertices), rng.randint(0, 12))
                words += 1
                if not equal(tree, w + inverse(w), ()):
                    bad.append({"index": e.index, "graph": serialize(e.graph), "fields": ["word"]})
                    break
        counts = {k: sum(e.predicates[k] for e in entries) for k in ("special", "droms", "chordal")}
        result["oracle_check"] = {"discrepancies": bad, "random_words": words, "counts": counts}
        lines.append(f"oracle check: {len(bad)} discrepancies over {len(entries)} classes; "
                     + ", ".join(f"{k}={v}" for k, v in counts.items()))
        if bad:
            code = INTERNAL
    return Outcome(code, result, lines=lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON report")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized checks")
    common.add_argument("--max-n", type=int, default=argparse.SUPPRESS, help="vertex bound for enumeration")

    parser = argparse.ArgumentParser(prog="traag", description="Twisted right-angled Artin groups from mixed graphs.")
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--max-n", type=int, default=MAX_N, help="vertex bound for enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, files=("file",)):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for f in files:
            p.add_argument(f)
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "all predicates with certificates")
    add("decompose", cmd_decompose, "decomposition tree or failure certificate")
    add("presentation", cmd_presentation, "T-RAAG presentation")
    add("abelianize", cmd_abelianize, "abelianization Z^r x (Z/2)^s")
    add("quotient", cmd_quotient, "complete special quotient")
    add("normal-subgroup", cmd_normal_subgroup, "maximal abelian normal subgroup")
    add("satellites", cmd_satellites, "satellite pairs of a special graph")
    p = add("rigidity", cmd_rigidity, "rigidity verdict; writes witness graphs")
    p.add_argument("--witness-out", help="witness graph path (default: FILE stem + .witness.graph)")
    p = add("reduce", cmd_reduce, "normal form of a word (Droms graphs)")
    p.add_argument("--word", required=True)
    p = add("equal", cmd_equal, "decide equality of two words (Droms graphs)")
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    p = add("hom", cmd_hom, "check a generator map T(SRC) -> T(DST)", files=("src", "dst"))
    p.add_argument("--map", required=True, help="'v=word;u=word'")
    p.add_argument("--default-identity", action="store_true", help="unmapped generators map to themselves")
    p = sub.add_parser("enumerate", parents=[common], help="isomorphism classes of mixed graphs on N vertices")
    p.add_argument("n", type=int)
    p.add_argument("--oracle-check", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)
    return parser


def _input_of(args):
    if args.command == "hom":
        return [args.src, args.dst]
    if args.command == "enumerate":
        return args.n
    return args.file


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        out = args.func(args)
    except (TraagError, ValueError, OSError) as exc:
        out = Outcome(INPUT_ERROR, {"error": f"{type(exc).__name__}: {exc}"}, lines=[f"error: {type(exc).__name__}: {exc}"])
    except Exception as exc:  # noqa: BLE001
        traceback.print_exc()
        out = Outcome(INTERNAL, {"error": f"{type(exc).__name__}: {exc}"}, lines=[f"internal error: {exc}"])
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        report = {
            "input": _input_of(args),
            "command": args.command,
            "exit_code": out.code,
            "result": out.result,
            "certificates": out.certificates,
            "timing_ms": round(elapsed, 3),
        }
        if out.witness is not None:
            report["witness"] = out.witness
        print(json.dumps(report, indent=2))
    else:
        stream = sys.stderr if out.code in (INPUT_ERROR, INTERNAL) else sys.stdout
        for line in out.lines:
            print(line, file=stream)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
