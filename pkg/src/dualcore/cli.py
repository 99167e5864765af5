"""Command-line front end: compute, verify, decompose and battery commands.

All I/O is JSON. An element file carries its ring descriptor inline together
with an exact payload (a grid of scalar strings for matrix rings, an integer
encoding for finite rings), so results survive serialization without any
precision loss. Exit codes are exactly 0 (found / true / clean report),
2 (a valid negative answer) and 1 (input or corpus error).
"""

import argparse
import json
import sys
from pathlib import Path

from . import ginverse as gi
from .battery import run_battery, theorem_tags
from .errors import DescriptorMismatch, DualcoreError, ParseError
from .rings import descriptor_from_json, ring_from_descriptor

UNARY_KINDS = (
    "inner",
    "13",
    "14",
    "mp",
    "left-dual-core",
    "left-dual-pseudo-core",
    "left-invertible",
)
TRIPLE_KINDS = (
    "left-bc",
    "right-bc",
    "strongly-left-bc",
    "left-dual-bc-core",
    "dual-bc-core",
    "bc-core",
    "right-bc-core",
)
V_KINDS = ("left-dual-v-core",)

_COMPUTE = {
    "inner": lambda a: a.ring.inner_inverse(a),
    "13": gi.inv_13,
    "14": gi.inv_14,
    "mp": gi.moore_penrose,
    "left-dual-core": gi.left_dual_core,
    "left-invertible": gi.left_invertible,
    "left-bc": gi.left_bc_inverse,
    "right-bc": gi.right_bc_inverse,
    "strongly-left-bc": gi.strongly_left_bc_inverse,
    "left-dual-bc-core": gi.left_dual_bc_core,
    "left-dual-v-core": gi.left_dual_v_core,
}


def _load_element(path, rings):
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "ring" not in data or "payload" not in data:
        raise ParseError(f"{path}: element files need 'ring' and 'payload' keys")
    desc = descriptor_from_json(data["ring"])
    ring = rings.get(desc)
    if ring is None:
        ring = ring_from_descriptor(desc)
        rings[desc] = ring
    return ring.parse_payload(data["payload"])


def _gather_inputs(args, kind):
    """Load a plus whichever of b/c/v the kind needs; absent files reuse a."""
    if kind not in gi.ALL_KINDS:
        raise ParseError(f"unknown kind {kind!r}; known: {', '.join(gi.ALL_KINDS)}")
    rings = {}
    a = _load_element(args.a, rings)
    if kind in UNARY_KINDS:
        inputs, roles = (a,), ("a",)
    elif kind in V_KINDS:
        v = _load_element(args.v or args.a, rings)
        inputs, roles = (a, v), ("a", "v")
    else:
        b = _load_element(args.b or args.a, rings)
        c = _load_element(args.c or args.a, rings)
        inputs, roles = (a, b, c), ("a", "b", "c")
    if len({e.ring.descriptor for e in inputs}) > 1:
        raise DescriptorMismatch("input files declare different ring descriptors")
    return inputs, roles


def _echo(inputs, roles):
    ring = inputs[0].ring
    return {role: ring.fmt_payload(e) for role, e in zip(roles, inputs)}


def _emit(doc, out_path):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args):
    inputs, roles = _gather_inputs(args, args.kind)
    if args.kind not in gi.COMPUTE_KINDS:
        raise ParseError(f"kind {args.kind!r} is verify-only; it has no compute path")
    ring = inputs[0].ring
    doc = {
        "kind": args.kind,
        "ring": ring.descriptor.to_json(),
        "inputs": _echo(inputs, roles),
    }
    k = None
    if args.kind == "left-dual-pseudo-core":
        res = gi.left_dual_pseudo_core(inputs[0], k_max=args.kmax)
        witness = None if res is None else res.x
        k = None if res is None else res.k
    else:
        witness = _COMPUTE[args.kind](*inputs)
    if witness is None:
        doc["status"] = "not-invertible"
        _emit(doc, args.out)
        return 2
    doc["status"] = "found"
    doc["witness"] = ring.fmt_payload(witness)
    if k is not None:
        doc["k"] = k
    doc["verify"] = gi.verify(args.kind, inputs, witness, k=k).to_json()
    _emit(doc, args.out)
    return 0


def cmd_verify(args):
    inputs, roles = _gather_inputs(args, args.kind)
    rings = {inputs[0].ring.descriptor: inputs[0].ring}
    candidate = _load_element(args.witness, rings)
    if candidate.ring.descriptor != inputs[0].ring.descriptor:
        raise DescriptorMismatch("witness file declares a different ring descriptor")
    k = args.k
    if args.kind == "left-dual-pseudo-core" and k is None:
        raise ParseError("--k is required when verifying a pseudo-core witness")
    report = gi.verify(args.kind, inputs, candidate, k=k)
    _emit(report.to_json(), args.out)
    return 0 if report.overall else 2


def cmd_battery(args):
    if args.ring and args.corpus:
        raise ParseError("pass either --ring or --corpus, not both")
    corpus = args.ring or args.corpus
    if not corpus:
        raise ParseError("a corpus is required: --ring Zn:6 or --corpus rationals:...")
    tags = theorem_tags() if args.theorem == "all" else [args.theorem]
    reports = [
        run_battery(
            tag, corpus, seed=args.seed, workers=args.workers, sample=args.sample
        )
        for tag in tags
    ]
    doc = (
        reports[0].to_json()
        if args.theorem != "all"
        else {"reports": [r.to_json() for r in reports]}
    )
    _emit(doc, args.out)
    return 0 if all(r.clean for r in reports) else 2


def cmd_decompose(args):
    rings = {}
    a = _load_element(args.a, rings)
    v = _load_element(args.v or args.a, rings)
    if a.ring.descriptor != v.ring.descriptor:
        raise DescriptorMismatch("input files declare different ring descriptors")
    ring = a.ring
    doc = {
        "ring": ring.descriptor.to_json(),
        "inputs": {"a": ring.fmt_payload(a), "v": ring.fmt_payload(v)},
    }
    dec = gi.nilpotent_decomposition(a, v)
    if dec is None:
        doc["status"] = "not-invertible"
        _emit(doc, args.out)
        return 2
    va = v * a
    doc["status"] = "found"
    doc["a1"] = ring.fmt_payload(dec.a1)
    doc["a2"] = ring.fmt_payload(dec.a2)
    doc["witness"] = ring.fmt_payload(dec.x)
    doc["verdicts"] = [
        ["va = a1 + a2", dec.a1 + dec.a2 == va],
        ["a2^2 = 0", dec.a2 * dec.a2 == ring.zero],
        ["a2*·a1 = 0", dec.a2.star * dec.a1 == ring.zero],
        ["a1·a2 = 0", dec.a1 * dec.a2 == ring.zero],
    ]
    doc["core_verify"] = gi.verify("left-dual-core", (dec.a1,), dec.x).to_json()
    _emit(doc, args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dualcore",
        description="Exact computation and verification of dual-core style "
        "generalized inverses over matrix and finite *-rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_element_flags(p, with_v=True):
        p.add_argument("--a", required=True, help="element file for a")
        p.add_argument("--b", help="element file for b (defaults to a)")
        p.add_argument("--c", help="element file for c (defaults to a)")
        if with_v:
            p.add_argument("--v", help="element file for v (defaults to a)")

    p = sub.add_parser("compute", help="compute a canonical inverse")
    p.add_argument("--kind", required=True)
    add_element_flags(p)
    p.add_argument("--kmax", type=int, help="pseudo-core index search bound")
    p.add_argument("--out", help="result file (default stdout)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check a candidate against the axioms")
    p.add_argument("--kind", required=True)
    add_element_flags(p)
    p.add_argument("--witness", required=True, help="candidate element file")
    p.add_argument("--k", type=int, help="power index for the pseudo-core kind")
    p.add_argument("--out", help="report file (default stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("battery", help="run a theorem battery over a corpus")
    p.add_argument("--theorem", required=True, help="a theorem tag or 'all'")
    p.add_argument("--ring", help="finite ring descriptor, e.g. Zn:6")
    p.add_argument("--corpus", help="matrix corpus spec, e.g. rationals:dims=1-3:bound=5:count=200")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int)
    p.add_argument("--sample", type=int, help="sampled tuple count for finite rings")
    p.add_argument("--out", help="report file (default stdout)")
    p.set_defaults(func=cmd_battery)

    p = sub.add_parser("decompose", help="split v·a into a1 + a2")
    p.add_argument("--a", required=True)
    p.add_argument("--v", help="element file for v (defaults to a)")
    p.add_argument("--out", help="result file (default stdout)")
    p.set_defaults(func=cmd_decompose)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except DualcoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
