"""Command-line front end.

Defaults can be overridden through the environment: SHORTLOCAL_P,
SHORTLOCAL_N and SHORTLOCAL_DIM_CAP.  Exit codes: 0 success, 1 computation
error (JSON on stderr with ``--format json``), 2 bad invocation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import report
from .acceptance import run_all
from .algebra import AlgebraError, load_algebra
from .amodule import ModuleError, load_module, simple_module
from .conca import (
    BudgetExceeded,
    ideal_closure,
    is_left_conca_generator,
    is_left_conca_ideal,
    search_conca,
)
from .exactla import DEFAULT_PRIME, is_prime
from .presets import OutOfRange, UnknownPreset, catalog, preset
from .resolution import (
    DEFAULT_DIM_CAP,
    DEFAULT_N,
    ResolutionError,
    betti_sequence,
    gamma_estimate,
    is_aligned,
    is_koszul_up_to,
    main_lemma_w,
)
from .spectral import (
    HypothesisViolated,
    b_closed_form,
    b_sequence,
    rho_sweep,
    spectral_data,
    theorem3_points,
    theorem3_solve,
)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    p: int
    N: int
    dim_cap: int
    seed: int
    fmt: str

    def __post_init__(self):
        if self.N < 0:
            raise UsageError("N must be >= 0")
        if self.dim_cap < 1:
            raise UsageError("dim cap must be >= 1")
        if not is_prime(self.p):
            raise UsageError(f"p = {self.p} is not prime")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _config(args) -> RunConfig:
    p = args.p if args.p is not None else _env_int("SHORTLOCAL_P", DEFAULT_PRIME)
    N = getattr(args, "n", None)
    N = N if N is not None else _env_int("SHORTLOCAL_N", DEFAULT_N)
    cap = getattr(args, "cap", None)
    cap = cap if cap is not None else _env_int("SHORTLOCAL_DIM_CAP", DEFAULT_DIM_CAP)
    return RunConfig(p, N, cap, args.seed, args.format)


# -- input loading ------------------------------------------------------------


def _load_algebra(args, cfg: RunConfig):
    if getattr(args, "preset", None):
        if getattr(args, "alg", None):
            raise UsageError("give either an algebra file or --preset, not both")
        return preset(args.preset, cfg.p).algebra
    if not getattr(args, "alg", None):
        raise UsageError("an algebra file or --preset is required")
    return load_algebra(args.alg, cfg.p)


def _load_module(args, cfg: RunConfig):
    key = args.module or args.mod or "S"
    if args.preset:
        if args.alg:
            raise UsageError("give either an algebra file or --preset, not both")
        return preset(args.preset, cfg.p).module(key)
    if not args.alg:
        raise UsageError("an algebra file or --preset is required")
    alg = load_algebra(args.alg, cfg.p)
    if key == "S":
        return simple_module(alg)
    return load_module(key, alg, cfg.p)


# -- emitters -------------------------------------------------------------------


def _emit(cfg: RunConfig, data: dict, text: Optional[str] = None, csv: Optional[str] = None) -> None:
    if cfg.fmt == "json":
        sys.stdout.write(report.to_json(data))
    elif cfg.fmt == "csv" and csv is not None:
        sys.stdout.write(csv)
    else:
        sys.stdout.write(text if text is not None else report.to_keyvalue(data))


# -- subcommands ----------------------------------------------------------------


def cmd_algebra(args, cfg):
    alg = load_algebra(args.file, cfg.p)
    data = {
        "hilbert_type": list(alg.hilbert_type),
        "recomputed_hilbert_type": list(alg.recomputed_hilbert_type()),
        "dim": alg.dim,
        "p": alg.p,
        "commutative": alg.is_commutative(),
        "j_cubed_zero": alg.check_j_cubed_zero(),
        "basis": ["1"] + list(alg.x_names) + list(alg.z_names),
    }
    _emit(cfg, data)


def cmd_preset(args, cfg):
    if args.action == "list":
        rows = catalog(cfg.p)
        text = report.to_table(
            [{**r, "hilbert_type": tuple(r["hilbert_type"]), "modules": ",".join(r["modules"])} for r in rows],
            ("name", "hilbert_type", "commutative", "modules", "description"),
        )
        csv = report.to_csv(rows, ("name", "hilbert_type", "commutative", "modules", "description"))
        _emit(cfg, {"presets": rows}, text, csv)
        return
    if not args.name:
        raise UsageError("preset export needs a name")
    pr = preset(args.name, cfg.p)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        stem = pr.name.replace(":", "_").replace(";", "_").replace(",", "-")
        alg_file = f"{stem}.algebra.json"
        written = [alg_file]
        with open(os.path.join(args.out, alg_file), "w") as fh:
            fh.write(report.to_json(pr.algebra.to_json()))
        for key, mod in sorted(pr.modules.items()):
            fname = f"{stem}.{key}.json"
            with open(os.path.join(args.out, fname), "w") as fh:
                fh.write(report.to_json(mod.to_json(alg_file)))
            written.append(fname)
        _emit(cfg, {"written": written}, "".join(w + "\n" for w in written))
        return
    bundle = {
        "name": pr.name,
        "algebra": pr.algebra.to_json(),
        "modules": {k: m.to_json("inline") for k, m in sorted(pr.modules.items())},
        "ideals": {k: [[int(v) for v in g] for g in gens] for k, gens in sorted(pr.ideals.items())},
    }
    sys.stdout.write(report.to_json(bundle))


def cmd_resolve(args, cfg):
    rep = betti_sequence(_load_module(args, cfg), cfg.N, cfg.dim_cap)
    _emit(cfg, rep.to_json(), report.betti_text(rep), report.betti_csv(rep))


def cmd_aligned(args, cfg):
    M = _load_module(args, cfg)
    rep = is_aligned(M)
    data = rep.to_json()
    data["w"] = main_lemma_w(M)
    _emit(cfg, data)


def cmd_koszul(args, cfg):
    rep = is_koszul_up_to(_load_module(args, cfg), cfg.N, cfg.dim_cap)
    rows = [{"n": n, "actual": tuple(a) if a else None, "predicted": tuple(p)}
            for n, (a, p) in enumerate(zip(rep.actual + [None] * len(rep.predicted), rep.predicted))]
    verdict = "true" if rep.koszul_up_to_N else "false"
    head = f"koszul up to N = {rep.N}: {verdict}"
    if rep.first_failure is not None:
        head += f" (first failure at n = {rep.first_failure})"
    text = head + "\n" + report.to_table(rows, ("n", "actual", "predicted")) + rep.note + "\n"
    _emit(cfg, rep.to_json(), text)


def cmd_gamma(args, cfg):
    est = gamma_estimate(_load_module(args, cfg), cfg.N, cfg.dim_cap)
    rows = [{"n": n, "t_n": est.t_seq[n], "ratio": r} for n, r in est.ratio_seq]
    text = (report.to_table(rows, ("n", "t_n", "ratio"))
            + f"gamma range (last ratios): [{est.gamma_low}, {est.gamma_high}]\n"
            + f"spectral radius prediction: {est.rho}\n{est.note}\n")
    _emit(cfg, est.to_json(), text)


def cmd_spectral(args, cfg):
    if args.e is None:
        raise UsageError("spectral needs --e")
    if args.action == "sweep":
        pts = rho_sweep(args.e)
        if args.points:
            sys.stdout.write(report.theorem3_csv(theorem3_points(args.e)))
        elif cfg.fmt == "json":
            sys.stdout.write(report.to_json({"e": args.e, "sweep": pts, "integer_pairs": theorem3_points(args.e)}))
        else:
            sys.stdout.write(report.sweep_csv(pts))
        return
    if args.a is None:
        raise UsageError("spectral needs --a")
    sd = spectral_data(args.e, args.a)
    n = args.n if args.n is not None else DEFAULT_N
    data = sd.to_json()
    data["b_sequence"] = b_sequence(args.e, args.a, n)
    try:
        data["b_closed_form"] = [b_closed_form(args.e, args.a, k) for k in range(n + 1)]
    except HypothesisViolated:
        data["b_closed_form"] = None
    pair = theorem3_solve(args.e, args.a)
    data["integer_pair"] = list(pair) if pair else None
    _emit(cfg, data)


def _parse_gens(raw: str) -> list:
    if raw.startswith("@"):
        with open(raw[1:]) as fh:
            raw = fh.read()
    try:
        gens = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"ideal generators must be a JSON list of coefficient lists: {exc}") from None
    if not isinstance(gens, list) or any(not isinstance(g, list) for g in gens):
        raise UsageError("ideal generators must be a JSON list of coefficient lists")
    return gens


def cmd_conca(args, cfg):
    if args.preset and args.alg and args.gens is None:
        # "conca check --preset X GENS": the single positional is the generator list
        args.gens, args.alg = args.alg, None
    alg = _load_algebra(args, cfg)
    if args.opposite:
        alg = alg.opposite()
    if args.action == "check":
        raw = args.gens_opt if args.gens_opt is not None else args.gens
        if raw is not None:
            gens = _parse_gens(raw)
        elif args.preset and args.ideal:
            pr = preset(args.preset, cfg.p)
            if args.ideal not in pr.ideals:
                raise UsageError(f"preset {args.preset!r} has no ideal {args.ideal!r}")
            gens = [[int(v) for v in g] for g in pr.ideals[args.ideal]]
        else:
            raise UsageError("conca check needs generators (--gens) or --preset with --ideal")
        for g in gens:
            if len(g) != alg.dim:
                raise UsageError(f"generator {g} has {len(g)} coefficients, expected {alg.dim}")
        U = ideal_closure(alg, gens)
        verdict = is_left_conca_ideal(alg, U)
        data = {
            "ideal_dim": U.dim,
            "closure_basis": U.closure.basis.tolist(),
            "left_conca": verdict.is_conca,
            "u2_zero": verdict.u2_zero,
            "j2_in_ju": verdict.j2_in_ju,
            "conca_generators": [is_left_conca_generator(alg, g) for g in gens],
        }
        _emit(cfg, data)
        return
    res = search_conca(alg, args.mode, args.budget, args.max_gens, cfg.seed)
    _emit(cfg, res.to_json())


def cmd_verify(args, cfg):
    results = run_all(args.only)
    rows = [{"criterion": r.key, "result": "PASS" if r.passed else "FAIL", "title": r.title,
             "detail": r.detail} for r in results]
    if cfg.fmt == "json":
        sys.stdout.write(report.to_json({"results": rows}))
    elif cfg.fmt == "csv":
        sys.stdout.write(report.to_csv(rows, ("criterion", "result", "title", "detail")))
    else:
        sys.stdout.write("".join(r.line() + "\n" for r in results))
    return 0 if all(r.passed for r in results) else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=None, help="field characteristic (default 32003)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=0)

    def module_args(sp, with_n=True):
        sp.add_argument("alg", nargs="?", help="algebra JSON file")
        sp.add_argument("mod", nargs="?", help="module JSON file or S")
        sp.add_argument("--preset", help="named preset instead of files")
        sp.add_argument("--module", help="module key of the preset (default S)")
        if with_n:
            sp.add_argument("--n", type=int, default=None, help="resolution bound N (default 8)")
            sp.add_argument("--cap", type=int, default=None, help="ambient dimension cap (default 200000)")

    parser = argparse.ArgumentParser(prog="shortlocal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("algebra", parents=[common], help="validate an algebra file")
    sp.add_argument("action", choices=("validate",))
    sp.add_argument("file")
    sp.set_defaults(func=cmd_algebra)

    sp = sub.add_parser("preset", parents=[common], help="list or export named algebras")
    sp.add_argument("action", choices=("list", "export"))
    sp.add_argument("name", nargs="?")
    sp.add_argument("--out", help="directory for exported JSON files")
    sp.set_defaults(func=cmd_preset)

    for name, func, helptext in [
        ("resolve", cmd_resolve, "Betti numbers and dimension vectors of syzygies"),
        ("aligned", cmd_aligned, "alignedness conditions for one module"),
        ("koszul", cmd_koszul, "bounded Koszul check"),
        ("gamma", cmd_gamma, "growth ratio evidence"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=helptext)
        module_args(sp, with_n=name != "aligned")
        sp.set_defaults(func=func)

    sp = sub.add_parser("spectral", parents=[common], help="eigen data of omega and the b-sequence")
    sp.add_argument("action", nargs="?", choices=("sweep",))
    sp.add_argument("--e", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--points", action="store_true", help="with sweep: integer (small, big) pairs instead")
    sp.set_defaults(func=cmd_spectral)

    sp = sub.add_parser("conca", parents=[common], help="Conca ideal checks and searches")
    sp.add_argument("action", choices=("check", "search"))
    sp.add_argument("alg", nargs="?", help="algebra JSON file")
    sp.add_argument("gens", nargs="?", help="JSON list of coefficient lists, or @file")
    sp.add_argument("--preset")
    sp.add_argument("--gens", dest="gens_opt", help="generators, same syntax as the positional")
    sp.add_argument("--ideal", help="ideal key of the preset")
    sp.add_argument("--opposite", action="store_true", help="work in the opposite algebra")
    sp.add_argument("--mode", choices=("exhaustive", "random"), default="random")
    sp.add_argument("--budget", type=int, default=10_000)
    sp.add_argument("--max-gens", type=int, choices=(1, 2), default=1)
    sp.set_defaults(func=cmd_conca)

    sp = sub.add_parser("verify-paper", parents=[common], help="run the reference acceptance checks")
    sp.add_argument("--only", nargs="*", help="criterion keys to run")
    sp.set_defaults(func=cmd_verify)
    return parser


COMPUTATION_ERRORS = (AlgebraError, ModuleError, ResolutionError, BudgetExceeded, HypothesisViolated,
                      OutOfRange, ArithmeticError, OSError, json.JSONDecodeError)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    try:
        cfg = _config(args)
        rc = args.func(args, cfg)
        return rc or 0
    except (UsageError, UnknownPreset) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"shortlocal: error: {msg}\n")
        return 2
    except COMPUTATION_ERRORS as exc:
        if fmt == "json":
            sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True) + "\n")
        else:
            sys.stderr.write(f"shortlocal: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
