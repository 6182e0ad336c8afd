"""Command line front end: ``mesoprime <command> FILE [options]``."""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .congruence import Congruence, taxonomy
from .decompose import (MODES, decompose, ideal_taxonomy,
                        irreducible_bundles, mesoprimary_decomposition,
                        primary_bundles, primary_expansion)
from .components import binomial_localization, incommensurate_ideal, infinite_ideal
from .diagram import diagram, render_svg, render_text
from .errors import MesoprimeError, ParseError
from .io_format import (character_dict, decomposition_dict, format_face, format_ideal,
                        ideal_strings, load_decomposition, witness_dict)
from .parse import parse
from .ring import FacePrime
from .verify import certify
from .witness import associated_objects, enumerate_witnesses

COMMANDS = ("info", "taxonomy", "witnesses", "assmeso", "decompose", "primary",
            "irreducible", "localize", "verify", "diagram")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _envelope(command, names, order, result):
    return {
        "engine": {"name": "mesoprime", "version": __version__},
        "command": command,
        "ring": list(names),
        "term_order": order,
        "result": result,
    }


# ---------------------------------------------------------------------------
# commands; each returns (json-able result, text lines)


def cmd_info(I, args):
    res = {"generators": ideal_strings(I), "variables": list(I.ring.names),
           "unit": I.is_unit}
    lines = [f"ring: {', '.join(I.ring.names)}", f"ideal: {format_ideal(I)}",
             f"order: {I.ring.order_name}"]
    return res, lines


def cmd_taxonomy(I, args):
    names = I.ring.names
    flags = ideal_taxonomy(I)
    cong = dict(taxonomy(Congruence(I))) if I.proper else {}
    for k in ("cancellative", "nilpotent"):
        if k in cong:
            cong[k] = [names[i] for i in cong[k]]
    if cong.get("nilpotent_ideal") is not None:
        cong["nilpotent_ideal"] = [names[i] for i in cong["nilpotent_ideal"].F]
    res = {"ideal": flags, "congruence": cong}
    lines = [f"{k}: {'yes' if v else 'no'}" for k, v in flags.items()]
    for k, v in cong.items():
        if isinstance(v, bool):
            lines.append(f"congruence {k}: {'yes' if v else 'no'}")
        else:
            lines.append(f"congruence {k}: {'none' if v is None else ', '.join(v) or '-'}")
    return res, lines


def cmd_witnesses(I, args):
    names = I.ring.names
    recs = enumerate_witnesses(I)
    res = [witness_dict(names, r) for r in recs]
    lines = []
    for r in recs:
        flags = ("key" if r.is_key else "non-key") + ", " + ("character" if r.is_character else "false")
        where = "empty prime" if r.P.is_empty_prime else "face " + format_face(names, r.P.J)
        lines.append(f"{where}: w = {list(r.w)} ({flags})  mesoprime {format_ideal(r.mesoprime.ideal)}")
    return res, lines


def cmd_assmeso(I, args):
    names = I.ring.names
    obj = associated_objects(I)
    res = {
        "monoid_primes": [[names[j] for j in P.J] for P in obj["monoid_primes"]],
        "prime_congruences": [ideal_strings(m.ideal) for m in obj["prime_congruences"]],
        "mesoprimes": [{"ideal": ideal_strings(m.ideal),
                        "character": character_dict(names, m.character),
                        "truly_associated": m in obj["truly_associated"]}
                       for m in obj["mesoprimes"]],
    }
    lines = [("* " if m in obj["truly_associated"] else "  ") + format_ideal(m.ideal)
             for m in obj["mesoprimes"]]
    lines.append("(* marks truly associated mesoprimes)")
    return res, lines


def _decomp_lines(D, res):
    lines = [f"mode: {D.mode}"]
    for k, c in enumerate(res["components"]):
        extra = " (redundant)" if k in D.redundant else ""
        lines.append(f"  <{', '.join(c['generators'])}>{extra}")
    if D.certificate is not None:
        lines.append(f"certificate: {D.certificate.verdict}")
    return lines


def cmd_decompose(I, args):
    D = decompose(I, args.mode)
    res = decomposition_dict(D)
    return res, _decomp_lines(D, res)


def _bundle_output(pairs, D):
    res = decomposition_dict(D, bundles=True)
    lines = []
    for c, b in pairs:
        inv = b.group_invariants or []
        lines.append(f"{format_ideal(c.ideal)}  invariants {inv}  fibers {b.count}")
        if b.fibers is None:
            lines.append("    symbolic (irrational fibers)")
        elif b.count > 1:
            lines.extend(f"    {format_ideal(F)}" for F in b.fibers)
    exp = primary_expansion(D)
    res["expansion"] = None if exp is None else [ideal_strings(F) for F in exp]
    if exp is not None:
        lines.append("pruned expansion:")
        lines.extend(f"  {format_ideal(F)}" for F in exp)
    return res, lines


def cmd_primary(I, args):
    D = mesoprimary_decomposition(I)
    return _bundle_output(primary_bundles(D), D)


def cmd_irreducible(I, args):
    from .decompose import coprincipal_decomposition

    D = coprincipal_decomposition(I)
    return _bundle_output(irreducible_bundles(I), D)


def cmd_localize(I, args):
    names = I.ring.names
    if args.face is None:
        raise ParseError("localize needs --face (comma-separated variable names)")
    J = [names.index(v.strip()) for v in args.face.split(",") if v.strip()]
    P = FacePrime(I.ring.n, J)
    res = {"face": [names[j] for j in P.J], "infinite": ideal_strings(infinite_ideal(I, P)),
           "localizations": []}
    lines = [f"face {format_face(names, P.J)}",
             f"infinite monomials: {format_ideal(infinite_ideal(I, P))}"]
    for m in associated_objects(I)["mesoprimes"]:
        if m.face != P:
            continue
        inc = incommensurate_ideal(I, m)
        loc = binomial_localization(I, m)
        res["localizations"].append({"mesoprime": ideal_strings(m.ideal),
                                     "incommensurate": ideal_strings(inc),
                                     "localization": ideal_strings(loc)})
        lines.append(f"at {format_ideal(m.ideal)}: {format_ideal(loc)}")
    return res, lines


def cmd_diagram(I, args):
    dg = diagram(I, args.grid)
    res = {"grid": args.grid,
           "labels": {",".join(map(str, p)): v for p, v in sorted(dg.labels.items())},
           "nil": [list(p) for p in sorted(dg.nil)],
           "edges": [[list(a), list(b)] for a, b in dg.edges]}
    return res, render_text(dg).rstrip("\n").split("\n"), dg


HANDLERS = {
    "info": cmd_info, "taxonomy": cmd_taxonomy, "witnesses": cmd_witnesses,
    "assmeso": cmd_assmeso, "decompose": cmd_decompose, "primary": cmd_primary,
    "irreducible": cmd_irreducible, "localize": cmd_localize, "diagram": cmd_diagram,
}


def run(command, text, args):
    """Run one command on document text; returns the output string."""
    if command == "verify":
        doc = json.loads(text)
        D = load_decomposition(doc)
        report = certify(D)
        if args.format == "json":
            out = _envelope("verify", doc["ring"], doc.get("term_order"), report.as_dict())
            return json.dumps(out, indent=2, sort_keys=True) + "\n"
        return "\n".join([f"certificate: {report.verdict}"] + report.checks) + "\n"
    doc = parse(text)
    I = doc.ideal()
    got = HANDLERS[command](I, args)
    res, lines = got[0], got[1]
    if args.format == "svg":
        if command != "diagram":
            raise ParseError("--format svg is only available for diagram")
        return render_svg(got[2])
    if args.format == "json":
        out = _envelope(command, I.ring.names, I.ring.order_name, res)
        return json.dumps(out, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    return "\n".join(lines) + "\n"


def build_parser():
    p = argparse.ArgumentParser(prog="mesoprime",
                                description="Mesoprimary decomposition of binomial ideals.")
    p.add_argument("--version", action="version", version=f"mesoprime {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", help="input document, or - for stdin")
    p.add_argument("--format", choices=("text", "json", "svg"), default="text")
    p.add_argument("--mode", choices=MODES, default="mesoprimary")
    p.add_argument("--grid", type=int, default=5)
    p.add_argument("--face", default=None)
    p.add_argument("-o", "--output", default=None)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        text = _read(args.file)
        out = run(args.command, text, args)
    except MesoprimeError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.code
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
