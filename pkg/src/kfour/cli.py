"""Command-line front end: ``kfour <command> [flags]``.

Exit status is 0 on success, 1 when a verification fails, and 2 on a
usage error or a malformed module.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from pathlib import Path
from typing import Optional, Sequence

from . import io as kio
from .cohom import CohomRow, closed_form_dim, rel_cohom_dim, to_csv
from .cup import verify_cup_vanishing
from .decomp import DEFAULT_SEED, UndecidedError, decompose, identify
from .field import FieldError, gf
from .kgmod import CHI, ModuleError, parse_chi
from .relproj import CoverError, minimal_cover, minimal_resolution, omega_chi, standard_cover
from .verify import run_all


class UsageError(Exception):
    pass


def _field(args):
    try:
        return gf(args.field)
    except FieldError as exc:
        raise UsageError(str(exc)) from None


def _chi(text: str) -> frozenset:
    try:
        chi = parse_chi(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not chi:
        raise UsageError("--chi must name at least one subgroup")
    return chi


def _module(spec: str, F):
    try:
        return kio.parse_module_spec(spec, F)
    except (kio.LabelError, ModuleError, FieldError, OSError) as exc:
        raise UsageError(f"bad module {spec!r}: {exc}") from None


def _describe(m) -> str:
    if m.dim == 0:
        return "0"
    dec = decompose(m)
    return " + ".join(str(lab) if c == 1 else f"{c}*{lab}" for lab, c in dec.parts)


def _chi_name(chi) -> list:
    return sorted(h.value for h in chi)


# ---------------------------------------------------------------------------
# commands


def cmd_cohom_table(args) -> int:
    F = _field(args)
    chi = _chi(args.chi)
    rows, ok = [], True
    for spec in kio.split_label_list(args.modules):
        m = _module(spec, F)
        name = spec if not Path(spec).is_file() else Path(spec).stem
        parts = decompose(m).parts if chi == CHI else None
        for i in range(args.max_i + 1):
            got = rel_cohom_dim(m, chi, i)
            rows.append(CohomRow(name, i, got, "resolution"))
            if parts is not None:
                want = sum(c * closed_form_dim(lab, i) for lab, c in parts)
                rows.append(CohomRow(name, i, want, "closed_form"))
                ok = ok and want == got
    if args.format == "csv":
        sys.stdout.write(to_csv(rows))
    elif args.format == "json":
        print(json.dumps([r.__dict__ for r in rows], indent=1))
    else:
        for r in rows:
            print(f"{r.module:>22}  i={r.degree:<2} dim={r.dim:<3} {r.method}")
    if not ok:
        print("closed form and resolution disagree", file=sys.stderr)
    return 0 if ok else 1


def cmd_omega(args) -> int:
    F = _field(args)
    m = _module(args.module, F)
    out = omega_chi(m, _chi(args.chi), args.power)
    print(_describe(out))
    if args.out:
        kio.dump_module(out, args.out)
    return 0


def cmd_decompose(args) -> int:
    F = _field(args)
    dec = decompose(_module(args.module, F))
    if args.json:
        print(json.dumps(kio.decomposition_to_json(dec)))
    else:
        for lab, c in dec.parts:
            print(f"{c} x {lab}")
    if args.witness:
        Path(args.witness).write_text(json.dumps(kio.matrix_to_json(dec.witness)) + "\n")
    return 0


def cmd_identify(args) -> int:
    F = _field(args)
    m = _module(args.module, F)
    try:
        print(identify(m))
    except ModuleError as exc:
        print(f"not indecomposable: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_cover(args) -> int:
    F = _field(args)
    m = _module(args.module, F)
    chi = _chi(args.chi)
    cover = standard_cover(m, chi) if args.standard else minimal_cover(m, chi)
    cover.check()
    shape = Counter(str(lab) for lab in cover.labels())
    print("cover:  " + " + ".join(f"{c}*{k}" if c > 1 else k for k, c in sorted(shape.items())))
    print(f"dim:    {cover.total.dim} -> {m.dim}")
    print("kernel: " + _describe(cover.kernel))
    if args.out_dir:
        d = Path(args.out_dir)
        d.mkdir(parents=True, exist_ok=True)
        kio.dump_module(cover.total, d / "total.json")
        kio.dump_module(cover.kernel, d / "kernel.json")
        (d / "pi.json").write_text(json.dumps(kio.matrix_to_json(cover.pi)) + "\n")
        (d / "embedding.json").write_text(json.dumps(kio.matrix_to_json(cover.embedding)) + "\n")
        for h, s in cover.splittings.items():
            (d / f"split_{h.value}.json").write_text(json.dumps(kio.matrix_to_json(s)) + "\n")
    return 0


def cmd_resolve(args) -> int:
    F = _field(args)
    chi = _chi(args.chi)
    res = minimal_resolution(chi, args.length, F)
    manifest = {"field": F.to_json(), "chi": _chi_name(chi), "length": args.length, "modules": [], "maps": []}
    out = Path(args.out_dir) if args.out_dir else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    for i in range(args.length + 1):
        cover = res.cover(i)
        shape = Counter(str(lab) for lab in cover.labels())
        syz = _describe(res.syzygy(i))
        print(f"Q_{i}: dim {cover.total.dim:<4} {dict(sorted(shape.items()))}   Omega^{i}(k) = {syz}")
        entry = {"index": i, "dim": cover.total.dim, "summands": dict(shape), "syzygy": syz}
        manifest["modules"].append(entry)
        if out:
            kio.dump_module(cover.total, out / f"Q_{i}.json")
    exact = res.is_exact(args.length)
    print(f"exact: {exact}")
    if out:
        (out / "augmentation.json").write_text(json.dumps(kio.matrix_to_json(res.augmentation())) + "\n")
        manifest["maps"].append({"name": "augmentation", "file": "augmentation.json"})
        for i in range(args.length):
            name = f"d_{i}.json"
            (out / name).write_text(json.dumps(kio.matrix_to_json(res.boundary(i))) + "\n")
            manifest["maps"].append({"name": f"d_{i}", "source": i + 1, "target": i, "file": name})
        manifest["exact"] = exact
        (out / "manifest.json").write_text(json.dumps(manifest, indent=1) + "\n")
    return 0 if exact else 1


def cmd_cup_verify(args) -> int:
    F = _field(args)
    report = verify_cup_vanishing(_chi(args.chi), args.max_total_degree, F)
    data = report.to_json()
    if args.out:
        Path(args.out).write_text(json.dumps(data, indent=1) + "\n")
    zero_maps = sum(e.is_zero_map for e in report.entries)
    status = "vacuously passed" if report.vacuous else ("passed" if report.passed else "FAILED")
    print(f"{len(report.entries)} products, {zero_maps} literally zero composites: {status}")
    return 0 if report.passed else 1


def cmd_verify_all(args) -> int:
    ok = run_all(args.max_dim, args.max_i)
    print("all checks passed" if ok else "some checks FAILED")
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kfour", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=lambda s: int(s, 0), default=None, help=f"decomposition seed (default {DEFAULT_SEED:#x})")
    p.add_argument("--field", type=int, default=1, help="work over GF(2^e) (default 1)")
    sub = p.add_subparsers(dest="command", required=True)

    def chi_flag(sp):
        sp.add_argument("--chi", default="H1,H2,H3", help="subgroups: H1,H2,H3, triv, or 'all'")

    sp = sub.add_parser("cohom-table", help="dimensions of H^i_chi(G, N)")
    sp.add_argument("--modules", required=True, help='comma-separated labels or JSON files, e.g. "V-7,V+5,V4:inf"')
    sp.add_argument("--max-i", type=int, default=6)
    sp.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    chi_flag(sp)
    sp.set_defaults(func=cmd_cohom_table)

    sp = sub.add_parser("omega", help="relative Heller shift")
    sp.add_argument("--module", required=True)
    sp.add_argument("--power", type=int, default=1)
    sp.add_argument("--out", help="write the result as module JSON")
    chi_flag(sp)
    sp.set_defaults(func=cmd_omega)

    sp = sub.add_parser("decompose", help="Krull-Schmidt decomposition")
    sp.add_argument("--module", required=True)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--witness", help="write the change-of-basis matrix here")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("identify", help="label of an indecomposable module")
    sp.add_argument("--module", required=True)
    sp.set_defaults(func=cmd_identify)

    sp = sub.add_parser("cover", help="relative projective cover")
    sp.add_argument("--module", required=True)
    sp.add_argument("--standard", action="store_true", help="skip minimization")
    sp.add_argument("--out-dir")
    chi_flag(sp)
    sp.set_defaults(func=cmd_cover)

    sp = sub.add_parser("resolve", help="minimal relative resolution of k")
    sp.add_argument("--length", type=int, default=3)
    sp.add_argument("--out-dir")
    chi_flag(sp)
    sp.set_defaults(func=cmd_resolve)

    sp = sub.add_parser("cup-verify", help="vanishing of positive-degree cup products")
    sp.add_argument("--max-total-degree", type=int, default=6)
    sp.add_argument("--out", help="write the JSON report here")
    chi_flag(sp)
    sp.set_defaults(func=cmd_cup_verify)

    sp = sub.add_parser("verify-all", help="run every verification family")
    sp.add_argument("--max-dim", type=int, default=13)
    sp.add_argument("--max-i", type=int, default=6)
    sp.set_defaults(func=cmd_verify_all)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get("KFOUR_SEED")
    if args.seed is not None:
        os.environ["KFOUR_SEED"] = str(args.seed)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"kfour: error: {exc}", file=sys.stderr)
        return 2
    except (UndecidedError, CoverError) as exc:
        print(f"kfour: {exc}", file=sys.stderr)
        return 1
    finally:
        # the seed is scoped to this call
        if saved is None:
            os.environ.pop("KFOUR_SEED", None)
        else:
            os.environ["KFOUR_SEED"] = saved


def run(argv: Optional[Sequence[str]] = None) -> int:
    return main(argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
