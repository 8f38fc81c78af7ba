"""Command line front end.

Every command builds a JSON report first; the text output is rendered from
that report. Exit status is 0 when every requested check passes, 1 when a
certificate check fails and 2 for unusable input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from . import __version__
from .errors import DimensionError, DomainError, SpecError
from .extension import EQUAL_BETTI, NAIVE, build_extension, verify_extension
from .homology import integral_h1
from .jsonio import (
    dump_json,
    extension_from_json,
    extension_to_json,
    load_json_file,
    mapping_class_from_json,
    mapping_class_to_json,
    matrix_from_json,
)
from .linalg import smith_normal_form
from .mapping_class import MappingClass, Verdict, certify_pseudo_anosov, is_symplectic

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2

H1_NOTE = ("H1(M) = coker(I - f#) + Z (Wang sequence); the quotient H1(F)/ker(I - f#) "
           "has the same free rank but does not see torsion")


def _report(command: str, inputs: Any, result: dict, ok: bool, parameters: Optional[dict] = None) -> dict:
    return {
        "tool": "surfbundle",
        "version": __version__,
        "command": command,
        "inputs": inputs,
        "parameters": parameters or {},
        "result": result,
        "ok": ok,
    }


def _load_spec(path: str) -> tuple[Any, MappingClass]:
    raw = load_json_file(path)
    f = mapping_class_from_json(raw, "spec")
    if not is_symplectic(f):
        raise DomainError("spec.matrix: not symplectic (M^T J M != J); monodromies must preserve the intersection form")
    return raw, f


def cmd_betti(args) -> dict:
    raw, f = _load_spec(args.spec)
    h = integral_h1(f)
    result = h.to_json()
    result["group"] = str(h)
    result["note"] = H1_NOTE
    return _report("betti", raw, result, True)


def cmd_certify(args) -> dict:
    raw, f = _load_spec(args.spec)
    cert = certify_pseudo_anosov(f)
    return _report("certify", raw, cert.to_json(), cert.verdict == Verdict.CERTIFIED_PA)


def _parse_mults(text: Optional[str]) -> Optional[list[int]]:
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise SpecError(f"--mults: expected comma separated integers, got {text!r}") from exc


def cmd_extend(args) -> dict:
    raw, f_t = _load_spec(args.spec)
    mults = _parse_mults(args.mults)
    result = build_extension(f_t, args.genus, args.variant, k=args.k, multiplicities=mults)
    cert = verify_extension(result)
    payload = extension_to_json(result, cert)
    Path(args.out).write_text(dump_json(payload), encoding="utf-8")
    params = {"genus": args.genus, "variant": args.variant, "k": args.k, "mults": mults}
    return _report("extend", raw, payload, cert.all_pass, params)


def cmd_verify(args) -> dict:
    raw = load_json_file(args.extension)
    result = extension_from_json(raw)
    cert = verify_extension(result)
    out = {"certificate": cert.to_json()}
    stored = raw.get("certificate") if isinstance(raw, dict) else None
    if stored is not None:
        out["matches_stored_certificate"] = stored == cert.to_json()
    return _report("verify", raw, out, cert.all_pass)


def cmd_snf(args) -> dict:
    raw = load_json_file(args.matrix)
    value = raw.get("matrix") if isinstance(raw, dict) else raw
    m = matrix_from_json(value, "matrix")
    snf = smith_normal_form(m)
    result = {"diagonal": list(snf.diagonal), "left": snf.left.tolist(), "right": snf.right.tolist(),
              "rank": snf.rank}
    return _report("snf", raw, result, True)


def _fmt_bool(b: Optional[bool]) -> str:
    return "pass" if b else "FAIL"


def render_text(report: dict) -> str:
    cmd = report["command"]
    r = report["result"]
    lines = []
    if cmd == "betti":
        lines.append(f"H1(M) = {r['group']}")
        lines.append(f"betti_one = {r['betti_one']}")
        lines.append(f"torsion = {r['torsion'] or 'none'}")
    elif cmd == "certify":
        lines += _render_pa(r)
    elif cmd in ("extend", "verify"):
        cert = r["certificate"]
        if cmd == "extend":
            lines.append(f"extended genus {r['g_t']} -> {r['g_s']} ({r['variant']}, parameters {r['parameters']})")
        for key in ("block_form_ok", "symplectic_ok", "square_commutes_ok", "i_minus_a_nondegenerate", "betti_equal"):
            lines.append(f"  {key:<24} {_fmt_bool(cert[key])}")
        lines.append(f"  betti_one target/extension: {cert['betti_one_target']} / {cert['betti_one_extension']}")
        lines += ["  " + x for x in _render_pa(cert["pa_certificate"])]
        if "matches_stored_certificate" in r:
            lines.append(f"  matches stored certificate: {r['matches_stored_certificate']}")
        lines.append("all checks pass" if report["ok"] else "some checks FAILED")
    elif cmd == "snf":
        lines.append(f"diagonal = {r['diagonal']}")
        lines.append(f"left = {r['left']}")
        lines.append(f"right = {r['right']}")
    return "\n".join(lines) + "\n"


def _render_pa(c: dict) -> list[str]:
    lines = [f"pA verdict: {c['verdict']}  (char poly {c['characteristic_polynomial']})"]
    for reason in c["reasons"]:
        lines.append(f"  [{_fmt_bool(reason['passed'])}] {reason['name']}: {reason['detail']}")
    if c.get("note"):
        lines.append(f"  note: {c['note']}")
    return lines


COMMANDS = {
    "betti": cmd_betti,
    "certify": cmd_certify,
    "extend": cmd_extend,
    "verify": cmd_verify,
    "snf": cmd_snf,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON report to stdout")
    common.add_argument("--quiet", action="store_true", help="print nothing; use the exit status")

    parser = argparse.ArgumentParser(prog="surfbundle", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"surfbundle {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[common], help="first homology of the mapping torus")
    p.add_argument("--spec", required=True, metavar="FILE")

    p = sub.add_parser("certify", parents=[common], help="pseudo-Anosov certificate from the homology action")
    p.add_argument("--spec", required=True, metavar="FILE")

    p = sub.add_parser("extend", parents=[common], help="build and verify an extension to a larger genus")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.add_argument("--genus", required=True, type=int, metavar="N")
    p.add_argument("--variant", default=EQUAL_BETTI, choices=[EQUAL_BETTI, NAIVE])
    p.add_argument("--k", type=int, default=None, help="twist power for the genus+1 block (default 0)")
    p.add_argument("--mults", default=None, metavar="I,J,...",
                   help="alpha twist multiplicities for larger genus gaps (default all 1)")
    p.add_argument("--out", required=True, metavar="FILE")

    p = sub.add_parser("verify", parents=[common], help="re-verify a saved extension")
    p.add_argument("--extension", required=True, metavar="FILE")

    p = sub.add_parser("snf", parents=[common], help="Smith normal form of an integer matrix")
    p.add_argument("--matrix", required=True, metavar="FILE")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = COMMANDS[args.command](args)
    except (SpecError, DomainError, DimensionError) as exc:
        if not args.quiet:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if not args.quiet:
        sys.stdout.write(dump_json(report) if args.json else render_text(report))
    return EXIT_OK if report["ok"] else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
