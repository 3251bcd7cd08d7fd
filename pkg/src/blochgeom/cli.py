"""Command-line front end.

State files are JSON objects ``{"dim": N, "re": [[...]], "im": [[...]]}``
holding the real and imaginary parts row by row. Bloch files are
``{"dim": N, "bloch": [...], "scale": s}``; the stored components are ``s``
times the radius-1/2 convention components, so ``--scale 2`` writes the
common unit-radius qubit convention. Surface and section data go out as CSV
with header ``x,y,z,fidelity_check,spurious``, where ``fidelity_check`` is
recomputed from the matrices for every row.

Exit status is 0 on success, 1 on a domain or validation error (reported on
stderr as ``ERROR <kind>: <message>``) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import numpy as np

from . import metrics, states, surfaces
from .errors import BlochGeometryError, DimensionError, InvalidState

__all__ = ["run", "main", "read_state", "state_to_json"]


class CliError(Exception):
    def __init__(self, kind, message):
        self.kind = kind
        super().__init__(message)


def number(text: str) -> float:
    """Parse a decimal or a simple fraction such as ``1/6``."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def number_list(text: str) -> list[float]:
    return [number(t) for t in text.split(",") if t.strip()]


def vector3(text: str) -> np.ndarray:
    vals = number_list(text)
    if len(vals) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated numbers")
    return np.array(vals)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError("IOError", f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError("ParseError", f"{path}: malformed JSON ({exc.msg}, line {exc.lineno})") from None


def state_from_json(obj) -> states.DensityMatrix:
    try:
        dim = int(obj["dim"])
        re = np.asarray(obj["re"], dtype=np.float64)
        im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=np.float64)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError("ParseError", f"state file needs dim, re, im: {exc}") from None
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise DimensionError(f"re/im must be {dim}x{dim}, got {re.shape} and {im.shape}")
    return states.DensityMatrix(re + 1j * im)


def read_state(path: str) -> states.DensityMatrix:
    try:
        return state_from_json(_load_json(path))
    except InvalidState as exc:
        raise InvalidState(f"{path}: {exc}") from None


def state_to_json(rho) -> dict:
    m = np.asarray(rho)
    return {"dim": int(m.shape[0]), "re": m.real.tolist(), "im": m.imag.tolist()}


def _emit_text(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError("IOError", f"cannot write {out}: {exc.strerror}") from None


def _emit_json(obj, out):
    _emit_text(json.dumps(obj, indent=2) + "\n", out)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _emit_csv(rows, out, extra=None):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["x", "y", "z", "fidelity_check", "spurious"]
    if extra:
        header.append(extra)
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row[:4]] + [str(int(row[4]))] + [_fmt(v) for v in row[5:]])
    _emit_text(buf.getvalue(), out)


# --- subcommands ------------------------------------------------------------

def cmd_compare(args):
    report = metrics.compare(read_state(args.a), read_state(args.b))
    _emit_json(report.as_dict(), args.out)


def cmd_fidelity(args):
    a, b = read_state(args.a), read_state(args.b)
    raw = metrics.fidelity_raw(a, b)
    _emit_json({"fidelity": metrics.fidelity(a, b), "fidelity_raw": raw}, args.out)


def cmd_superfidelity(args):
    a, b = read_state(args.a), read_state(args.b)
    _emit_json({"super_fidelity": metrics.super_fidelity(a, b)}, args.out)


def cmd_bloch(args):
    vec = states.to_bloch(read_state(args.inp))
    comps = args.scale * vec.components
    _emit_json({"dim": vec.dim, "bloch": comps.tolist(), "scale": args.scale}, args.out)


def _bloch_from_json(obj) -> states.BlochVector:
    try:
        comps = np.asarray(obj["bloch"], dtype=np.float64) / float(obj.get("scale", 1.0))
        dim = int(obj.get("dim", round(np.sqrt(comps.size + 1))))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise CliError("ParseError", f"Bloch file needs a 'bloch' list: {exc}") from None
    return states.BlochVector(dim, comps)


def cmd_unbloch(args):
    rho = states.from_bloch(_bloch_from_json(_load_json(args.inp)))
    _emit_json(state_to_json(rho.matrix), args.out)


def cmd_extend(args):
    obj = _load_json(args.inp)
    if isinstance(obj, dict) and "bloch" in obj:
        vec = _bloch_from_json(obj)
    else:
        vec = states.to_bloch(state_from_json(obj))
    ext = states.extend(vec)
    _emit_json({"dim": ext.dim, "extended": ext.components.tolist()}, args.out)


def cmd_generators(args):
    gens = states.su_generators(args.dim)
    payload = {
        "dim": gens.dim,
        "labels": list(gens.labels),
        "generators": [
            {"label": lab, "re": g.real.tolist(), "im": g.imag.tolist()}
            for lab, g in zip(gens.labels, gens)
        ],
    }
    _emit_json(payload, args.out)


def _target_frame(args):
    """Target length and the rotation mapping surface points back to its frame."""
    if args.target is not None:
        length, rot = surfaces.rotation_to_z(args.target)
        return length, rot.T, args.target
    return args.lam, np.eye(3), np.array([0.0, 0.0, args.lam])


def _rows(points, flags, back, target):
    tgt = states.from_bloch(target)
    for p, s in zip(points, flags):
        q = back @ p
        yield (*q, metrics.fidelity(tgt, states.from_bloch(q)), bool(s))


def cmd_surface(args):
    lam, back, target = _target_frame(args)
    surf = surfaces.equal_fidelity_surface(lam, args.fidelity)
    pts, flags = surfaces.sample_array(surf, args.samples, args.seed, args.include_spurious)
    rows = list(_rows(pts, flags, back, target))
    for r in rows:
        if not r[4] and abs(r[3] - surf.fidelity_level) > args.tol:
            raise CliError("LevelSetMismatch",
                           f"point {r[:3]} has fidelity {r[3]!r}, level {surf.fidelity_level!r}")
    _emit_csv(rows, args.out)


def cmd_section(args):
    lam, back, target = _target_frame(args)
    levels = args.fidelity
    rows = []
    for f in levels:
        surf = surfaces.equal_fidelity_surface(lam, f)
        sec = surfaces.cross_section_xz(surf, args.points)
        pts = np.array([p.bloch for p in sec])
        flags = [p.spurious for p in sec]
        for r in _rows(pts, flags, back, target):
            rows.append(r + ((f,) if len(levels) > 1 else ()))
    _emit_csv(rows, args.out, extra="level" if len(levels) > 1 else None)


def cmd_minfid(args):
    p, f = surfaces.min_fidelity_state(args.lam)
    _emit_json({"lambda": args.lam, "bloch": p.tolist(), "fidelity": f}, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blochgeom",
        description="Fidelities, Bloch vectors and equal-fidelity surfaces of quantum states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        return p

    for name, func, help_ in [
        ("compare", cmd_compare, "all measures between two states (JSON)"),
        ("fidelity", cmd_fidelity, "Uhlmann fidelity"),
        ("superfidelity", cmd_superfidelity, "super-fidelity"),
    ]:
        p = add(name, func, help_)
        p.add_argument("--a", required=True, help="first state file")
        p.add_argument("--b", required=True, help="second state file")

    p = add("bloch", cmd_bloch, "state file -> Bloch vector file")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--scale", type=number, default=1.0,
                   help="multiply components (2 gives the unit-radius qubit convention)")
    p = add("unbloch", cmd_unbloch, "Bloch vector file -> state file")
    p.add_argument("--in", dest="inp", required=True)
    p = add("extend", cmd_extend, "extended Bloch vector of a state or Bloch file")
    p.add_argument("--in", dest="inp", required=True)
    p = add("generators", cmd_generators, "ordered SU(N) generators (JSON)")
    p.add_argument("--dim", type=int, required=True)

    for name, func, help_ in [
        ("surface", cmd_surface, "sample an equal-fidelity surface (CSV)"),
        ("section", cmd_section, "xz cross-section of equal-fidelity surfaces (CSV)"),
    ]:
        p = add(name, func, help_)
        tgt = p.add_mutually_exclusive_group(required=True)
        tgt.add_argument("--lambda", dest="lam", type=number, help="target on +z at this length")
        tgt.add_argument("--target", type=vector3, help="target Bloch vector x,y,z")
        if name == "surface":
            p.add_argument("--fidelity", type=number, required=True)
            p.add_argument("--samples", type=int, default=1000)
            p.add_argument("--seed", type=int, default=42)
            p.add_argument("--include-spurious", action="store_true")
            p.add_argument("--tol", type=number, default=1e-9,
                           help="allowed |fidelity_check - level| for genuine points")
        else:
            p.add_argument("--fidelity", type=number_list, required=True,
                           help="one level or a comma-separated list")
            p.add_argument("--points", type=int, default=360)

    p = add("minfid", cmd_minfid, "minimum-fidelity state for a +z target")
    p.add_argument("--lambda", dest="lam", type=number, required=True)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except CliError as exc:
        print(f"ERROR {exc.kind}: {exc}", file=sys.stderr)
        return 1
    except BlochGeometryError as exc:
        print(f"ERROR {exc.kind}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"ERROR ValueError: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
