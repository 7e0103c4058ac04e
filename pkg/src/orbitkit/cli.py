"""Command-line front end.

Exit codes:
    0  clean run
    1  internal error, or a verification assertion failed
    2  bad input (unsupported group, malformed case file, non-regular orbit)
    3  noticed-set discrepancy between the stored reference, rule and oracle
    4  a kept wave-front orbit fails the compact-centralizer criterion
"""

import argparse
import json
import re
import sys
import time
import traceback
from pathlib import Path

from . import __version__, asymptotics, gold, liecore, orbitcomb, records, slicegeom
from .errors import OrbitkitError

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_DISCREPANCY, EXIT_CRITERION = 0, 1, 2, 3, 4


class Result:
    def __init__(self, stem, files, stdout, code, grid=None):
        self.stem = stem
        self.files = files          # name -> text
        self.stdout = stdout
        self.code = code
        self.grid = grid or {}


def _slug(text):
    return re.sub(r"[^A-Za-z0-9]+", "_", text).strip("_")


# --- commands -------------------------------------------------------------------

def cmd_classify(args):
    try:
        g = liecore.make_algebra(args.group)
        classes = orbitcomb.classify_orbits(g)
    except OrbitkitError as exc:
        raise InputError(str(exc)) from exc
    stem = f"classify_{_slug(g.name)}"
    files = {}
    if args.format in (None, "tsv"):
        files[stem + ".tsv"] = records.classify_tsv(classes)
    if args.format in (None, "dot"):
        covers = orbitcomb.closure_order([c.label for c in classes])
        files[stem + ".dot"] = records.closure_dot(g.name, classes, covers)
    lines = [f"{g.name}: {len(classes)} orbits, "
             f"{sum(c.noticed for c in classes)} noticed (rule), "
             f"{sum(c.noticed_oracle for c in classes)} noticed (oracle)"]
    code = EXIT_OK
    for c in classes:
        d = c.discrepancies()
        if d:
            code = EXIT_DISCREPANCY
            verdicts = ", ".join(f"{k}={'noticed' if v else 'not noticed'}" for k, v in d.items())
            lines.append(f"DISCREPANCY {c.label}: {verdicts}")
    return Result(stem, files, "\n".join(lines) + "\n", code)


def _case_inputs(args):
    try:
        data = records.load_case(args.case)
        g = records.case_algebra(data)
        return data, g
    except OrbitkitError as exc:
        raise InputError(str(exc)) from exc


def cmd_wavefront(args):
    data, g = _case_inputs(args)
    try:
        if not data.get("regular"):
            raise records.CaseError("case needs a non-empty 'regular' list")
        nus = [records.parse_matrix(g, v) for v in data["regular"]]
        inp = slicegeom.RegularInput(tuple(nus))
        catalog = records.case_catalog(g, data)
    except OrbitkitError as exc:
        raise InputError(str(exc)) from exc
    box = args.box if args.box is not None else float(data.get("box", slicegeom.BOX))
    cycle = slicegeom.wavefront_cycle(inp, catalog, box)
    by_label = {e.label: e for e in catalog}
    rows, recs, code = [], [], EXIT_OK
    for lab, coef in cycle.terms:
        x = by_label[lab].element
        ok = liecore.is_compact_mod_center(liecore.reductive_centralizer_subspace(x))
        rows.append((lab, by_label[lab].dimension, coef, ok))
        if not ok:
            code = EXIT_CRITERION
    for ev in cycle.evidence:
        recs.append(dict(ev, record="evidence"))
    for lab, dim, coef, ok in rows:
        recs.append({"record": "term", "label": lab, "dimension": dim, "coefficient": coef,
                     "centralizer_compact_mod_center": ok})
    stem = f"wavefront_{_slug(Path(args.case).stem)}"
    files = {stem + ".tsv": records.tsv(records.WAVEFRONT_COLUMNS, rows),
             stem + ".jsonl": records.jsonl(recs)}
    terms = " + ".join(f"{records.fmt(c)}*[{lab}]" for lab, c in cycle.terms) or "0"
    lines = [f"WF = {terms}"]
    for lab, _, _, ok in rows:
        lines.append(f"{lab}: reductive centralizer compact mod center: {'yes' if ok else 'NO'}")
    return Result(stem, files, "\n".join(lines) + "\n", code, {"radial_directions": "8x16"})


def cmd_verify(args):
    recs = gold.run_suite(args.suite)
    stem = f"verify_{args.suite}"
    lines = [f"{'PASS' if r['passed'] else 'FAIL'}  {r['case']}: {r['check']} "
             f"(value {records.fmt(r['value'])})" for r in recs]
    failed = sum(not r["passed"] for r in recs)
    lines.append(f"{len(recs) - failed}/{len(recs)} passed")
    code = EXIT_INTERNAL if failed else EXIT_OK
    return Result(stem, {stem + ".jsonl": records.jsonl(recs)}, "\n".join(lines) + "\n", code)


def cmd_fourier(args):
    data, g = _case_inputs(args)
    try:
        if "orbit" not in data or not data.get("points"):
            raise records.CaseError("fourier case needs 'orbit' and 'points'")
        nu = records.parse_matrix(g, data["orbit"])
        pts = [records.parse_matrix(g, v) for v in data["points"]]
        if not g.is_compact:
            raise records.CaseError(f"{g.name} is not compact")
    except OrbitkitError as exc:
        raise InputError(str(exc)) from exc
    tol = args.tol if args.tol is not None else 1e-6
    rows, worst = [], 0.0
    for i, x in enumerate(pts):
        q = asymptotics.orbit_fourier(nu, x)
        c = asymptotics.sphere_fourier_closed_form(nu, x)
        err = abs(q - c)
        worst = max(worst, err / max(1.0, abs(c)))
        rows.append((i, q.real, q.imag, c.real, c.imag, err))
    stem = f"fourier_{_slug(Path(args.case).stem)}"
    vol = slicegeom.symplectic_volume(nu)
    out = f"{len(pts)} points, max relative error {records.fmt(worst)}, orbit volume {records.fmt(vol)}\n"
    code = EXIT_OK if worst <= tol else EXIT_INTERNAL
    return Result(stem, {stem + ".tsv": records.tsv(records.FOURIER_COLUMNS, rows)}, out, code)


class InputError(Exception):
    pass


COMMANDS = {"classify": cmd_classify, "wavefront": cmd_wavefront,
            "verify": cmd_verify, "fourier": cmd_fourier}


# --- driver -----------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS, help="output directory (default: orbitkit-out)")
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help="orbit-membership tolerance (invariants, relative)")
    common.add_argument("--box", type=float, default=argparse.SUPPRESS,
                        help="box radius in slice coordinates")
    common.add_argument("--cache", default=argparse.SUPPRESS,
                        help="cache directory (default: $ORBITKIT_CACHE, unset = no cache)")
    p = argparse.ArgumentParser(prog="orbitkit", parents=[common],
                                description="Nilpotent orbits, Slodowy slices and wave front cycles.")
    p.add_argument("--version", action="version", version=f"orbitkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("classify", parents=[common], help="nilpotent orbit table for a group")
    c.add_argument("group", help='e.g. "u(2,2)", "sp(4,C)", "sl(3,R)"')
    c.add_argument("--format", choices=("tsv", "dot"), default=None)
    w = sub.add_parser("wavefront", parents=[common], help="wave front cycle of a regular orbit list")
    w.add_argument("--case", required=True)
    v = sub.add_parser("verify", parents=[common], help="run a property suite")
    v.add_argument("suite", choices=gold.SUITES)
    f = sub.add_parser("fourier", parents=[common], help="Fourier transform of a compact orbit")
    f.add_argument("--case", required=True)
    return p


def _config(args):
    cfg = {"command": args.command, "version": __version__, "tol": args.tol, "box": args.box}
    if args.command == "classify":
        cfg.update(group=args.group, format=args.format)
    elif args.command == "verify":
        cfg.update(suite=args.suite)
    else:
        try:
            cfg.update(case=records.load_case(args.case), case_name=Path(args.case).stem)
        except records.CaseError:
            cfg.update(case=None)
    return cfg


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("out", "orbitkit-out"), ("tol", None), ("box", None), ("cache", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    out = Path(args.out)
    start = time.perf_counter()
    config = _config(args)
    key = records.digest(config)
    cdir = records.cache_dir(args.cache)
    cached = records.cache_load(cdir, key)
    saved_tol = slicegeom.INV_TOL
    try:
        if cached is not None:
            result = Result(cached["stem"], cached["files"], cached["stdout"], cached["code"],
                            cached.get("grid"))
        else:
            if args.tol is not None:
                slicegeom.INV_TOL = args.tol
            result = COMMANDS[args.command](args)
            if result.code in (EXIT_OK, EXIT_DISCREPANCY, EXIT_CRITERION):
                records.cache_store(cdir, key, {"stem": result.stem, "files": result.files,
                                                "stdout": result.stdout, "code": result.code,
                                                "grid": result.grid})
    except InputError as exc:
        print(f"orbitkit: bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception:  # noqa: BLE001 - any failure here is an internal error
        traceback.print_exc()
        return EXIT_INTERNAL
    finally:
        slicegeom.INV_TOL = saved_tol
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, text in sorted(result.files.items()):
        (out / name).write_text(text)
        paths.append(out / name)
    tol = {"invariants": args.tol if args.tol is not None else slicegeom.INV_TOL,
           "spectrum": slicegeom.SPECTRUM_TOL, "tail": asymptotics.TAIL_TOL}
    man = records.manifest(args.command, config, paths, time.perf_counter() - start, result.code,
                           cached is not None, tol,
                           args.box if args.box is not None else slicegeom.BOX, result.grid)
    mpath = out / f"{result.stem}.manifest.json"
    mpath.write_text(json.dumps(man, indent=2, sort_keys=True) + "\n")
    sys.stdout.write(result.stdout)
    print(f"manifest: {mpath}")
    return result.code


if __name__ == "__main__":
    sys.exit(main())
