"""Command line front end: ``coalrel <command> [FILE] [--json] [--witness]``.

Exit status is 0 on success, 1 for parse or validation errors and 2 when a
computed result contradicts a guaranteed identity.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .coalg import format_vector, is_cocommutative, tensor_names, validate_coalgebra
from .comod import NotSubBicomodule, cotensor
from .dsl import Declaration, Document, ParseError, emit, parse
from .exactlinalg import RatMatrix, kron
from .quot import coideal_check, quotient
from .rel import Relation, classify, validate_relation
from .setrel import FinSetRelation, linearise, oracle_check, quotient_set
from .validation import InvalidStructureError, InvariantBreach, MalformedError

COMMANDS = ("validate", "classify", "quotient", "cotensor", "linearise", "oracle")
FLAG_ORDER = ("reflexive", "symmetric", "transitive", "antisymmetric")


def _matrix(m: RatMatrix | None) -> list[list[str]] | None:
    return None if m is None else m.to_strings()


def _vectors(m: RatMatrix, names: Sequence[str]) -> list[str]:
    return [format_vector(m.column_dict(j), names) for j in range(m.cols)]


# -- per-command results -----------------------------------------------------------


def _validate(decl: Declaration) -> dict:
    if decl.kind == "coalgebra":
        rep = validate_coalgebra(decl.value)
        return {
            "kind": "coalgebra",
            "name": decl.name,
            "dim": decl.value.dim,
            "valid": rep.valid,
            "checks": rep.checks,
            "notes": rep.notes,
            "cocommutative": is_cocommutative(decl.value),
        }
    if decl.kind == "relation":
        rep = validate_relation(decl.value)
        return {
            "kind": "relation",
            "name": decl.name,
            "over": decl.over,
            "dim": decl.value.dim,
            "valid": rep.valid,
            "checks": rep.checks,
            "notes": rep.notes,
            "injective": decl.value.is_injective,
        }
    s: FinSetRelation = decl.value
    return {"kind": "set", "name": decl.name, "valid": True, "elements": len(s.elements), "pairs": len(s.pairs)}


def _relation_targets(doc: Document) -> list[tuple[Declaration, Relation]]:
    out = []
    for d in doc.declarations:
        if d.kind == "relation":
            out.append((d, d.value))
        elif d.kind == "set":
            out.append((d, linearise(d.value)[1]))
    return out


def _verify_classification(rel: Relation, cl) -> None:
    c = rel.coalgebra
    if cl.delta is not None and rel.r @ cl.delta != c.delta:
        raise InvariantBreach("reflexivity witness does not solve r delta = Delta")
    if cl.delta is not None and not (rel.r_left @ cl.delta == c.identity() == rel.r_right @ cl.delta):
        raise InvariantBreach("reflexivity witness is not a common section of r_L and r_R")
    if cl.tau is not None and not (rel.r_right == rel.r_left @ cl.tau and rel.r_left == rel.r_right @ cl.tau):
        raise InvariantBreach("symmetry witness does not intertwine r_L and r_R")
    if rel.r_left == rel.r_right and not cl.antisymmetric.holds:
        raise InvariantBreach("r_L = r_R but anti-symmetry failed")


def _classify(decl: Declaration, rel: Relation, witness: bool) -> dict:
    cl = classify(rel)
    _verify_classification(rel, cl)
    result = {
        "kind": decl.kind,
        "name": decl.name,
        "dim": rel.dim,
        "injective": cl.injective,
        "flags": cl.flags,
        "flag_string": cl.flag_string(),
        "verdict": cl.verdict,
        "details": {k: getattr(cl, k).detail for k in FLAG_ORDER},
        "cotensor_dim": cl.transitive.data["cotensor_dim"],
        "pair_space_dim": cl.antisymmetric.data["pair_space_dim"],
        "supplementary": cl.supplementary,
    }
    if decl.kind == "relation":
        result["over"] = decl.over
    if witness:
        result["witnesses"] = {"delta": _matrix(cl.delta), "tau": _matrix(cl.tau), "pi": _matrix(cl.pi)}
    return result


def _quotient(decl: Declaration, rel: Relation, witness: bool) -> dict:
    c = rel.coalgebra
    q = quotient(rel)
    if not coideal_check(c, q.coideal).valid or not validate_coalgebra(q.quotient).valid:
        raise InvariantBreach("quotient is not a coalgebra")
    if q.chi @ (rel.r_left - rel.r_right) != RatMatrix.zeros(q.quotient.dim, rel.dim):
        raise InvariantBreach("projection does not coequalise r_L and r_R")
    qn = q.quotient.basis_names
    result = {
        "kind": decl.kind,
        "name": decl.name,
        "coideal_dim": q.coideal.dim,
        "coideal_basis": _vectors(q.coideal.basis, c.basis_names),
        "quotient_dim": q.quotient.dim,
        "quotient_basis": list(qn),
        "chi": _matrix(q.chi),
        "chi_images": {x: format_vector(q.chi.column_dict(j), qn) for j, x in enumerate(c.basis_names)},
        "quotient_delta": _vectors(q.quotient.delta, tensor_names(qn, qn)),
        "quotient_eps": [str(v) for v in q.quotient.eps.row(0)],
    }
    if decl.kind == "relation":
        result["over"] = decl.over
    if witness:
        result["section"] = _matrix(q.section)
    return result


def _cotensor(decl: Declaration, rel: Relation, witness: bool) -> dict:
    c, b = rel.coalgebra, rel.bicomodule
    ct = cotensor(b, b)
    cc = tensor_names(c.basis_names, c.basis_names)
    ambient = kron(rel.r, rel.r) @ ct.basis
    result = {
        "kind": decl.kind,
        "name": decl.name,
        "dim": ct.dim,
        "basis": _vectors(ct.basis, ct.basis_names()),
        "basis_in_c4": _vectors(ambient, tensor_names(cc, cc)),
    }
    if witness:
        result["inclusion"] = _matrix(ct.basis)
    return result


def _oracle(decl: Declaration) -> dict:
    cl = oracle_check(decl.value)
    return {
        "kind": "set",
        "name": decl.name,
        "flags": cl.flags,
        "verdict": cl.verdict,
        "classes": [list(k) for k in quotient_set(decl.value)],
    }


def _linearise(decl: Declaration) -> dict:
    c, rel = linearise(decl.value)
    cname, rname = f"C_{decl.name}", f"R_{decl.name}"
    doc = Document([Declaration("coalgebra", cname, c), Declaration("relation", rname, rel, over=cname)])
    return {"kind": "set", "name": decl.name, "document": emit(doc)}


def build_report(command: str, doc: Document, source: str, witness: bool = False) -> dict:
    results: list[dict] = []
    if command == "validate":
        results = [_validate(d) for d in doc.declarations]
    elif command in ("classify", "quotient", "cotensor"):
        fn = {"classify": _classify, "quotient": _quotient, "cotensor": _cotensor}[command]
        results = [fn(d, rel, witness) for d, rel in _relation_targets(doc)]
    elif command == "oracle":
        results = [_oracle(d) for d in doc.of_kind("set")]
    elif command == "linearise":
        results = [_linearise(d) for d in doc.of_kind("set")]
    else:
        raise ValueError(f"unknown command {command!r}")
    return {"command": command, "input": source, "witness": witness, "results": results}


# -- text rendering ---------------------------------------------------------------


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def _render_matrix(m: list[list[str]] | None, indent: str) -> list[str]:
    if m is None:
        return [indent + "(none)"]
    if not m or not m[0]:
        return [indent + f"(empty {len(m)}x0)" if m else indent + "(empty)"]
    width = max(len(v) for row in m for v in row)
    return [indent + " ".join(v.rjust(width) for v in row) for row in m]


def render_text(report: dict) -> str:
    cmd = report["command"]
    lines: list[str] = []
    if cmd == "linearise":
        return "".join(r["document"] for r in report["results"])
    for r in report["results"]:
        head = f"{r['kind']} {r['name']}"
        if r.get("over"):
            head += f" on {r['over']}"
        if cmd == "validate":
            lines.append(head + ("" if r["kind"] == "set" else f" (dim {r['dim']})"))
            for k, ok in r.get("checks", {}).items():
                note = r["notes"].get(k)
                lines.append(f"  {k:<22} {'ok' if ok else 'FAIL'}" + (f"  {note}" if note else ""))
            if r["kind"] == "coalgebra":
                lines.append(f"  {'cocommutative':<22} {_yes(r['cocommutative'])}")
            if r["kind"] == "relation":
                lines.append(f"  {'injective':<22} {_yes(r['injective'])}")
            if r["kind"] == "set":
                lines.append(f"  {r['elements']} elements, {r['pairs']} pairs")
            lines.append(f"  {'valid':<22} {_yes(r['valid'])}")
        elif cmd == "classify":
            lines.append(head + f" (dim {r['dim']})")
            for k in FLAG_ORDER:
                detail = r["details"][k]
                lines.append(f"  {k:<16} {_yes(r['flags'][k])}" + (f"  {detail}" if detail else ""))
            lines.append(f"  {'injective':<16} {_yes(r['injective'])}")
            lines.append(f"  {'cotensor dim':<16} {r['cotensor_dim']}")
            for k, v in r["supplementary"].items():
                lines.append(f"  {k:<16} {_yes(v)}")
            lines.append(f"  {'flags':<16} {r['flag_string']}")
            lines.append(f"  {'verdict':<16} {r['verdict']}")
            for k, m in r.get("witnesses", {}).items():
                lines.append(f"  witness {k}:")
                lines.extend(_render_matrix(m, "    "))
        elif cmd == "quotient":
            lines.append(head)
            lines.append(f"  coideal dim    {r['coideal_dim']}")
            for v in r["coideal_basis"]:
                lines.append(f"    {v}")
            lines.append(f"  quotient dim   {r['quotient_dim']}")
            for j, x in enumerate(r["quotient_basis"]):
                lines.append(f"    delta {x} = {r['quotient_delta'][j]}; eps {x} = {r['quotient_eps'][j]}")
            lines.append("  chi")
            for x, img in r["chi_images"].items():
                lines.append(f"    {x} -> {img}")
            lines.append("  chi matrix")
            lines.extend(_render_matrix(r["chi"], "    "))
            if "section" in r:
                lines.append("  section")
                lines.extend(_render_matrix(r["section"], "    "))
        elif cmd == "cotensor":
            lines.append(head)
            lines.append(f"  cotensor dim   {r['dim']}")
            width = max((len(v) for v in r["basis"]), default=0)
            for v, w in zip(r["basis"], r["basis_in_c4"]):
                lines.append(f"    {v:<{width}}  = {w}")
            if "inclusion" in r:
                lines.append("  inclusion")
                lines.extend(_render_matrix(r["inclusion"], "    "))
        elif cmd == "oracle":
            lines.append(head)
            for k in FLAG_ORDER:
                lines.append(f"  {k:<16} {_yes(r['flags'][k])}")
            lines.append(f"  {'classes':<16} " + " ".join("{" + ",".join(c) + "}" for c in r["classes"]))
            lines.append(f"  {'verdict':<16} {r['verdict']}")
    return "\n".join(lines) + "\n"


# -- entry point --------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coalrel", description="Relations on finite-dimensional coalgebras.")
    sub = p.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        sp = sub.add_parser(cmd)
        sp.add_argument("file", nargs="?", help="input document (.crel or .srel); stdin if omitted")
        sp.add_argument("--input", dest="input_file", help="input document, same as FILE")
        sp.add_argument("--json", action="store_true", help="emit the JSON report")
        sp.add_argument("--witness", action="store_true", help="include witness matrices")
    return p


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    path = args.input_file or args.file
    try:
        if path is None or path == "-":
            source, label = stdin.read(), "<stdin>"
        else:
            with open(path, encoding="utf-8") as fh:
                source, label = fh.read(), path
        doc = parse(source)
        report = build_report(args.command, doc, label, witness=args.witness)
    except (OSError, ParseError, MalformedError, InvalidStructureError, NotSubBicomodule) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except InvariantBreach as exc:
        print(f"internal invariant breached: {exc}", file=stderr)
        return 2
    if args.json:
        stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        stdout.write(render_text(report))
    if args.command == "validate" and not all(r["valid"] for r in report["results"]):
        return 1
    return 0


def main() -> None:
    sys.exit(run())
