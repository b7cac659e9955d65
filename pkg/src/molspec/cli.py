"""Command-line surface: regenerate the energy tables, diff them against the
embedded reference values, calibrate the magnetic field unit, dump sampled
wavefunctions, and run the finite-difference cross-check.

Exit codes: 0 success, 1 comparison failure, 2 usage or configuration error.
All CSV output is comma-separated UTF-8 with LF line endings and a header
row; summary and diagnostic lines are prefixed with '#'.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from importlib import resources

import numpy as np
from scipy.optimize import brentq

from .ansatz import eval_radial_wavefunction, normalize, solve_series
from .model import MODEL_KINDS, FieldConfig, derive_radial_params
from .molecules import MoleculeNotFound, find_molecule, load_registry
from .oracle import validate_many
from .refdata import load_reference_tables
from .spectrum import (
    DEGREE_STEP,
    energy_model_2d,
    energy_model_3d,
    potential_for_model,
)
from .units import (
    DEFAULT_CONSTANTS,
    ConfigurationError,
    load_constants,
    save_constants,
    with_field_unit,
)

# Anchor row for field calibration: one Table 2 entry with B != 0.
ANCHOR = ("N2", 1, 1, 0, 1.0)

# Acceptance tolerances per table (eV).  Tables 4 and 5 constrain only their
# B = 0 rows; their B > 0 columns are internally inconsistent with the field
# unit implied by Table 2 and are reported informationally (status "info").
_FREE_TOL = {1: 5e-7, 2: 5e-7, 3: 1e-5, 4: 5e-7, 5: 5e-7}
_FIELD_TOL = {2: 5e-6}


def _packaged(name: str) -> str:
    return str(resources.files("molspec") / "data" / name)


def _registry_from(args):
    path = args.registry if args.registry else _packaged("registry.ini")
    return load_registry(path)


def _constants_from(args):
    path = args.config if args.config else _packaged("constants.ini")
    return load_constants(path)


def _row_energy(table, row, registry, consts) -> float:
    """Recompute the physical energy of one reference-table row."""
    mol = find_molecule(registry, row.molecule)
    if table.dims == 3:
        return energy_model_3d(table.kind, mol, row.n, row.m, consts=consts)
    field = FieldConfig(B=row.B, xi=row.xi)
    return energy_model_2d(table.kind, mol, field, row.n, row.m, consts=consts)


def _rendered(table, energy: float) -> float:
    """Apply the table's sign convention (Tables 3-5 print -E)."""
    return -energy if table.negated else energy


def _field_label(xi: int, B: float) -> str:
    return f"xi={xi} B={B:g}"


def cmd_table(args) -> int:
    registry = _registry_from(args)
    consts = _constants_from(args)
    tables = load_reference_tables()
    table = tables[args.table_id]
    values = {}
    for row in table.rows:
        key = (row.molecule, row.n, row.m, row.xi, row.B)
        values[key] = _rendered(table, _row_energy(table, row, registry, consts))

    out = sys.stdout
    if args.format == "csv":
        out.write("table,model,dims,molecule,n,m,xi,B,value\n")
        for row in table.rows:
            value = values[(row.molecule, row.n, row.m, row.xi, row.B)]
            out.write(
                f"{table.table_id},{table.kind},{table.dims},{row.molecule},"
                f"{row.n},{row.m},{row.xi},{row.B:g},{value:.8f}\n"
            )
        return 0

    sign_note = ", values are -E" if table.negated else ""
    out.write(f"# Table {table.table_id} ({table.kind}, {table.dims}D{sign_note})\n")
    molecules = []
    for row in table.rows:
        if row.molecule not in molecules:
            molecules.append(row.molecule)
    if table.dims == 3:
        pairs = []
        for row in table.rows:
            if (row.n, row.m) not in pairs:
                pairs.append((row.n, row.m))
        out.write("\n| n | l | " + " | ".join(molecules) + " |\n")
        out.write("| --- | --- |" + " --- |" * len(molecules) + "\n")
        for n, l in pairs:
            cells = [f"{values[(mol, n, l, 0, 0.0)]:.8f}" for mol in molecules]
            out.write(f"| {n} | {l} | " + " | ".join(cells) + " |\n")
        return 0

    for molecule in molecules:
        rows = [row for row in table.rows if row.molecule == molecule]
        points, pairs = [], []
        for row in rows:
            if (row.xi, row.B) not in points:
                points.append((row.xi, row.B))
            if (row.n, row.m) not in pairs:
                pairs.append((row.n, row.m))
        out.write(f"\n## {molecule}\n\n")
        out.write("| n | m | " + " | ".join(_field_label(*p) for p in points) + " |\n")
        out.write("| --- | --- |" + " --- |" * len(points) + "\n")
        for n, m in pairs:
            cells = [f"{values[(molecule, n, m, xi, B)]:.8f}" for xi, B in points]
            out.write(f"| {n} | {m} | " + " | ".join(cells) + " |\n")
    return 0


def cmd_compare(args) -> int:
    registry = _registry_from(args)
    consts = _constants_from(args)
    tables = load_reference_tables()
    table = tables[args.table_id]

    out = sys.stdout
    out.write("molecule,n,m,xi,B,reference_eV,computed_eV,abs_dev_eV,rel_dev,status\n")
    checked = informational = failed = 0
    max_abs = max_rel = 0.0
    for row in table.rows:
        reference = table.energy(row)
        computed = _row_energy(table, row, registry, consts)
        abs_dev = abs(computed - reference)
        rel_dev = abs_dev / abs(reference)
        tol = _FREE_TOL[table.table_id] if row.B == 0 else _FIELD_TOL.get(table.table_id)
        if tol is None:
            status = "info"
            informational += 1
        else:
            checked += 1
            max_abs = max(max_abs, abs_dev)
            max_rel = max(max_rel, rel_dev)
            status = "ok" if abs_dev <= tol else "FAIL"
            failed += status == "FAIL"
        out.write(
            f"{row.molecule},{row.n},{row.m},{row.xi},{row.B:g},"
            f"{reference:.8f},{computed:.8f},{abs_dev:.3e},{rel_dev:.3e},{status}\n"
        )
    out.write(f"# rows={len(table.rows)} checked={checked} "
              f"informational={informational} failed={failed}\n")
    out.write(f"# max_abs_dev_eV={max_abs:.3e} max_rel_dev={max_rel:.3e}\n")
    out.write(f"# RESULT={'FAIL' if failed else 'PASS'}\n")
    return 1 if failed else 0


def cmd_calibrate(args) -> int:
    registry = _registry_from(args)
    if args.config and not os.path.exists(args.config):
        loaded = DEFAULT_CONSTANTS
    else:
        loaded = _constants_from(args)
    base = replace(loaded, field_unit_kappa=0.0)
    tables = load_reference_tables()
    table2 = tables[2]

    def lookup(molecule, n, m, xi, B):
        for row in table2.rows:
            if (row.molecule, row.n, row.m, row.xi, row.B) == (molecule, n, m, xi, B):
                return table2.energy(row)
        raise ValueError(f"anchor row {molecule} n={n} m={m} xi={xi} B={B} "
                         f"not present in Table 2")

    molecule, n, m, xi, B = ANCHOR
    target = lookup(*ANCHOR)
    mol = find_molecule(registry, molecule)
    field = FieldConfig(B=B, xi=xi)

    def mismatch(kappa: float) -> float:
        trial = with_field_unit(base, kappa)
        return energy_model_2d("pseudoharmonic", mol, field, n, m, consts=trial) - target

    lo, hi = 1e-12, 1.0
    if mismatch(lo) * mismatch(hi) > 0:
        raise ValueError("no field unit in (0, 1] reproduces the anchor energy")
    kappa = brentq(mismatch, lo, hi, xtol=1e-18, rtol=8.9e-16)
    consts = with_field_unit(base, kappa)

    out_path = args.config if args.config else "constants.ini"
    save_constants(consts, out_path)

    achieved = energy_model_2d("pseudoharmonic", mol, field, n, m, consts=consts)
    print(f"field_unit_kappa = {kappa!r}")
    print(f"anchor {molecule} n={n} m={m} xi={xi} B={B:g}: "
          f"target {target:.8f}, achieved {achieved:.8f}")
    for check_mol, cn, cm in (("N2", 1, -1), ("CH", 1, 1)):
        reference = lookup(check_mol, cn, cm, 0, 1.0)
        predicted = energy_model_2d(
            "pseudoharmonic", find_molecule(registry, check_mol),
            FieldConfig(B=1.0), cn, cm, consts=consts,
        )
        print(f"check {check_mol} n={cn} m={cm} B=1: predicted {predicted:.8f}, "
              f"reference {reference:.8f}, dev {abs(predicted - reference):.3e}")
    print(f"wrote {out_path}")
    return 0


def cmd_validate(args) -> int:
    registry = _registry_from(args)
    consts = _constants_from(args)
    kinds = [k.strip() for k in args.models.split(",") if k.strip()]
    for kind in kinds:
        if kind not in MODEL_KINDS:
            raise ValueError(f"unknown model kind: {kind!r}")
    names = [name.strip() for name in args.molecules.split(",") if name.strip()]
    mols = [find_molecule(registry, name) for name in names]
    if args.levels < 0:
        raise ValueError(f"levels must be non-negative, got {args.levels}")

    reports = validate_many(kinds, mols, levels=args.levels, consts=consts)
    out = sys.stdout
    out.write("model,molecule,n,m,B,xi,closed_eV,oracle_eV,rel_err\n")
    worst = 0.0
    for report in reports:
        for row in report.rows:
            worst = max(worst, row.rel_error)
            out.write(
                f"{report.kind},{report.molecule},{row.n},{report.m},"
                f"{report.field.B:g},{report.field.xi},{row.closed_form:.8f},"
                f"{row.richardson_value:.8f},{row.rel_error:.3e}\n"
            )
    out.write(f"# max_rel_err={worst:.3e} threshold=1e-05\n")
    return 0 if worst <= 1e-5 else 1


def _suggest_r_max(sol) -> float:
    """Double r_max until the planar radial factor has decayed to 1e-20."""
    r_max = 1.0
    for _ in range(60):
        samples = np.linspace(r_max * 1e-6, r_max, 2001)
        u2 = eval_radial_wavefunction(sol, samples, form="u") ** 2
        peak = float(np.max(u2))
        if peak > 0 and u2[-1] < 1e-20 * peak:
            return r_max
        r_max *= 2.0
    raise ValueError("radial function does not decay; specify --r-max explicitly")


def cmd_wavefunction(args) -> int:
    registry = _registry_from(args)
    consts = _constants_from(args)
    mol = find_molecule(registry, args.molecule)
    field = FieldConfig(B=args.B, xi=args.xi)
    pot = potential_for_model(args.model, mol, mol.mu, consts)
    params = derive_radial_params(pot, field, args.m, mol.mu, consts)
    s = DEGREE_STEP[args.model] * args.n
    sol = solve_series(params, s)
    r_max = args.r_max if args.r_max else _suggest_r_max(sol)
    if args.points < 2:
        raise ValueError(f"need at least 2 sample points, got {args.points}")
    norm = normalize(sol, r_max)

    r = np.linspace(0.0, r_max, args.points + 1)[1:]
    u = norm * eval_radial_wavefunction(sol, r, form="u")
    u2r = u * u * r

    out = sys.stdout
    header = {
        "model": args.model, "molecule": mol.name, "n": args.n, "m": args.m,
        "xi": args.xi, "B": f"{args.B:g}", "degree_s": s,
        "De_eV": repr(mol.De), "re_angstrom": repr(mol.re), "mu_amu": repr(mol.mu),
        "beta": repr(sol.params.beta), "p": repr(sol.params.p),
        "q": repr(sol.params.q), "epsilon2": repr(sol.epsilon2),
        "energy_eV": repr(sol.energy), "norm": repr(norm),
        "r_max_angstrom": f"{r_max:g}", "points": args.points,
    }
    for key, value in header.items():
        out.write(f"# {key}: {value}\n")
    out.write("r_angstrom,u,u2_r\n")
    for i in range(args.points):
        out.write(f"{r[i]:.8f},{u[i]:.8e},{u2r[i]:.8e}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="molspec",
        description="Closed-form diatomic spectra under magnetic and flux "
                    "fields: table regeneration, reference comparison, field "
                    "calibration, wavefunction sampling, and an independent "
                    "finite-difference cross-check.",
    )
    parser.add_argument("--registry", metavar="PATH", default=None,
                        help="molecule constants INI (default: packaged registry)")
    parser.add_argument("--config", metavar="PATH", default=None,
                        help="physical constants INI (default: packaged constants)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="regenerate one reference table")
    p_table.add_argument("table_id", type=int, choices=(1, 2, 3, 4, 5))
    p_table.add_argument("--format", choices=("csv", "md"), default="csv")
    p_table.set_defaults(func=cmd_table)

    p_cmp = sub.add_parser("compare", help="diff regenerated values against "
                                           "the embedded reference table")
    p_cmp.add_argument("table_id", type=int, choices=(1, 2, 3, 4, 5))
    p_cmp.set_defaults(func=cmd_compare)

    p_cal = sub.add_parser("calibrate", help="fit the field unit from the "
                                             "anchor row and persist it")
    p_cal.set_defaults(func=cmd_calibrate)

    p_val = sub.add_parser("validate", help="cross-check closed forms against "
                                            "the finite-difference oracle")
    p_val.add_argument("--models", default=",".join(MODEL_KINDS),
                       help="comma-separated model kinds")
    p_val.add_argument("--molecules", default="N2,CH",
                       help="comma-separated molecule names")
    p_val.add_argument("--levels", type=int, default=4,
                       help="radial levels per configuration (n < levels)")
    p_val.set_defaults(func=cmd_validate)

    p_wf = sub.add_parser("wavefunction", help="emit normalized radial "
                                               "wavefunction samples as CSV")
    p_wf.add_argument("model", choices=MODEL_KINDS)
    p_wf.add_argument("molecule")
    p_wf.add_argument("--n", type=int, required=True)
    p_wf.add_argument("--m", type=int, required=True)
    p_wf.add_argument("--xi", type=int, default=0)
    p_wf.add_argument("--B", type=float, default=0.0)
    p_wf.add_argument("--r-max", dest="r_max", type=float, default=None)
    p_wf.add_argument("--points", type=int, default=2001)
    p_wf.set_defaults(func=cmd_wavefunction)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # Downstream consumer (e.g. head) closed the pipe; not an error.
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except (ConfigurationError, MoleculeNotFound, ValueError, OSError) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
