"""Command-line entry point: ``verify``, ``solve``, ``states`` and ``dump``.

Exit codes are 0 when every emitted check passes, 1 when any check fails
and 2 for malformed input. Reports carry no timestamps, so identical
arguments give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import __version__, oracle
from .algebra import BASIS, ComplexRational, RepMatrix, WaveState
from .checks import CheckResult
from .fields import field_state_json, maxwell_limit_check
from .momentum import (
    DyadSolution,
    LightlikeMomentum,
    MomentumError,
    NotRankOneError,
    parse_rational,
    projector_set,
    solution_basis,
)
from .representation import MATRIX_NAMES, build_representation
from .suites import (
    KAPPAS,
    STATE_LABELS,
    builtin_momenta,
    dyad_checks,
    full_verification,
    momentum_checks,
    oracle_checks,
    polarization_dyads,
)

COMMANDS = ("verify", "solve", "states", "dump")
MOMENTUM_MATRICES = (
    "D", "k_slash", "gamma", "spin_sq", "helicity", "S2_0", "S2_1",
    "Shat_plus", "Shat_minus", "Shat_0", "Pi_0", "Pi_plus", "Pi_minus",
)


class InputError(Exception):
    """Bad command-line input; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    momentum: LightlikeMomentum | None
    kappa: Fraction
    kappa_given: bool
    format: str
    sweep: int | None
    output_path: str | None
    dump: str | None


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="genmaxwell",
        description="Exact checks and plane-wave states for the 11-component spin 0,1 wave equation.",
    )
    p.add_argument("command", nargs="?", choices=COMMANDS, help="defaults to dump when --dump is given, else verify")
    p.add_argument("--k", metavar="k1,k2,k3", help="spatial momentum as integers or p/q; use --k=-3,4,0 for a leading minus")
    p.add_argument("--k0", metavar="v", help="frequency, nonzero")
    p.add_argument("--kappa", metavar="v", help="nonzero rational (default 1; verify sweeps 1, 2, 1/3 when omitted)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="path", help="write the report here instead of stdout")
    p.add_argument("--dump", metavar="name", help="matrix to print with the dump command")
    p.add_argument("--sweep", metavar="N", type=int, help="use the first N built-in momenta (verify)")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def _rational(text: str, what: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{what}: {exc}") from None


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    ns = _parser().parse_args(argv)
    command = ns.command or ("dump" if ns.dump else "verify")

    kappa = Fraction(1)
    if ns.kappa is not None:
        kappa = _rational(ns.kappa, "kappa")
        if kappa == 0:
            raise InputError("kappa must be nonzero")

    momentum = None
    if (ns.k is None) != (ns.k0 is None):
        raise InputError("--k and --k0 must be given together")
    if ns.k is not None:
        parts = ns.k.split(",")
        if len(parts) != 3:
            raise InputError(f"--k needs three comma-separated components, got {ns.k!r}")
        comps = [_rational(x, "momentum component") for x in parts]
        k0 = _rational(ns.k0, "k0")
        try:
            momentum = LightlikeMomentum(*comps, k0)
        except MomentumError as exc:
            raise InputError(str(exc)) from None

    if command in ("solve", "states") and momentum is None:
        raise InputError(f"{command} needs a momentum (--k and --k0)")
    if command == "dump" and not ns.dump:
        raise InputError("dump needs --dump <matrix-name>")
    if ns.dump and command != "dump":
        raise InputError("--dump is only used by the dump command")
    if ns.sweep is not None:
        total = len(builtin_momenta())
        if not 1 <= ns.sweep <= total:
            raise InputError(f"--sweep must be between 1 and {total}")
        if momentum is not None:
            raise InputError("--sweep and --k are mutually exclusive")

    return RunConfig(
        command=command,
        momentum=momentum,
        kappa=kappa,
        kappa_given=ns.kappa is not None,
        format=ns.format,
        sweep=ns.sweep,
        output_path=ns.out,
        dump=ns.dump,
    )


# -- report assembly ---------------------------------------------------------

def _meta(cfg: RunConfig, **extra) -> dict:
    meta = {"tool": "genmaxwell", "version": __version__, "command": cfg.command}
    if cfg.momentum is not None:
        meta["momentum"] = dict(zip(("k1", "k2", "k3", "k0"), cfg.momentum.as_tuple()))
    meta["kappa"] = str(cfg.kappa)
    meta.update(extra)
    return meta


def _summary(checks: Sequence[CheckResult]) -> dict:
    failed = sum(not c.ok for c in checks)
    return {"checks": len(checks), "passed": len(checks) - failed, "failed": failed}


def _state_vector(state: Sequence) -> list[dict]:
    return [{"slot": slot.label, **v.to_json()} for slot, v in zip(BASIS, state)]


def _dyad_json(label: str, d: DyadSolution | NotRankOneError) -> dict:
    if isinstance(d, NotRankOneError):
        return {"label": label, "status": "rejected", "reason": str(d)}
    return {
        "label": label,
        "status": "ok",
        "pivot": BASIS[d.pivot].label,
        "psi": _state_vector(d.psi),
        "psi_bar": _state_vector(d.psi_bar),
        "psi_bar_psi": d.norm().to_json(),
        "eta_ratio": None if d.eta_ratio is None else d.eta_ratio.to_json(),
    }


def _limit_status(r: CheckResult) -> str:
    if r.ok:
        return "pass"
    if r.witness and r.witness.startswith("scalar present"):
        return "fail (scalar present)"
    return f"fail ({r.witness})"


def cmd_verify(cfg: RunConfig) -> dict:
    if cfg.momentum is not None:
        momenta = [cfg.momentum]
    else:
        momenta = builtin_momenta(cfg.sweep)
    kappas = (cfg.kappa,) if cfg.kappa_given else KAPPAS
    checks = full_verification(momenta, kappas, workers=os.cpu_count() or 1)
    meta = _meta(
        cfg,
        kappa=[str(k) for k in kappas],
        momenta=len(momenta),
        summary=_summary(checks),
    )
    return {"meta": meta, "checks": [c.to_json() for c in checks], "solutions": []}


def cmd_solve(cfg: RunConfig) -> dict:
    k, kappa = cfg.momentum, cfg.kappa
    ps = projector_set(k, kappa)
    checks = momentum_checks(k, kappa) + oracle_checks(k, kappa, ps) + dyad_checks(k, kappa, ps)
    dyads = polarization_dyads(ps)
    mats = ps.matrices()
    diagnostics = {
        "rank": {name: oracle.rank(mats[name]) for name in ("D", "gamma", "Pi_0", "Pi_plus", "Pi_minus", "Shat_0")},
        "trace": {name: mats[name].trace().to_json() for name in ("gamma", "Pi_0", "Pi_plus", "Pi_minus")},
        "kernel_dimension": oracle.null_space(ps.D).dimension,
    }
    return {
        "meta": _meta(cfg, summary=_summary(checks)),
        "checks": [c.to_json() for c in checks],
        "solutions": [_dyad_json(label, dyads[label]) for label in STATE_LABELS],
        "matrices": {name: mats[name].to_json() for name in MOMENTUM_MATRICES},
        "diagnostics": diagnostics,
    }


def _state_entry(label: str, state: WaveState, limit: CheckResult) -> dict:
    return {"label": label, "status": "ok", "fields": field_state_json(state), "maxwell_limit": _limit_status(limit)}


def cmd_states(cfg: RunConfig) -> dict:
    k, kappa = cfg.momentum, cfg.kappa
    ps = projector_set(k, kappa)
    dyads = polarization_dyads(ps)
    checks, solutions = [], []
    for label in STATE_LABELS:
        d = dyads[label]
        if isinstance(d, NotRankOneError):
            checks.append(CheckResult.failed(f"dyad-extraction[{label}]", str(d)))
            solutions.append(_dyad_json(label, d))
            continue
        limit = maxwell_limit_check(d.psi, k, kappa, f"maxwell-limit[{label}]")
        if label == "spin-0":
            present = bool(d.psi.psi0)
            checks.append(
                CheckResult.passed(f"scalar-present[{label}]")
                if present
                else CheckResult.failed(f"scalar-present[{label}]", "psi0 = 0")
            )
        else:
            checks.append(limit)
        solutions.append(_state_entry(label, d.psi, limit))
    # the four unit-vector solutions span the kernel; informational only
    for n, state in enumerate(solution_basis(k, kappa), start=1):
        limit = maxwell_limit_check(state, k, kappa)
        solutions.append(_state_entry(f"basis-mode-{n}", state, limit))
    return {"meta": _meta(cfg, summary=_summary(checks)), "checks": [c.to_json() for c in checks], "solutions": solutions}


def _named_matrix(cfg: RunConfig) -> RepMatrix:
    name = cfg.dump
    if name in MATRIX_NAMES:
        return build_representation().named(name)
    if name in MOMENTUM_MATRICES:
        if cfg.momentum is None:
            raise InputError(f"{name} depends on momentum; give --k and --k0")
        return projector_set(cfg.momentum, cfg.kappa).matrices()[name]
    raise InputError(f"unknown matrix {name!r}; choose from {', '.join(MATRIX_NAMES + list(MOMENTUM_MATRICES))}")


def cmd_dump(cfg: RunConfig) -> dict:
    m = _named_matrix(cfg)
    return {
        "meta": _meta(cfg, matrix=cfg.dump, summary=_summary([])),
        "checks": [],
        "solutions": [],
        "matrices": {cfg.dump: m.to_json()},
    }


HANDLERS = {"verify": cmd_verify, "solve": cmd_solve, "states": cmd_states, "dump": cmd_dump}


# -- text rendering ----------------------------------------------------------

def _c(obj: dict) -> str:
    return str(ComplexRational.from_json(obj))


def _sparse(vec: list[dict]) -> str:
    return ", ".join(f"{e['slot']}: {_c(e)}" for e in vec if e["re"] != "0" or e["im"] != "0")


def _render_checks(checks: list[dict]) -> list[str]:
    lines = []
    for c in checks:
        if c["status"] == "pass":
            lines.append(f"PASS  {c['name']}")
        else:
            lines.append(f"FAIL  {c['name']}: {c['witness']}")
    return lines


def _render_fields(f: dict) -> list[str]:
    return [
        f"  psi0      = {_c(f['psi0'])}",
        "  psi_mu    = (" + ", ".join(_c(x) for x in f["psi"]) + ")",
        "  psi_[mn]  = " + ", ".join(f"{key}: {_c(v)}" for key, v in f["F"].items()),
        "  E         = (" + ", ".join(_c(x) for x in f["E"]) + ")",
        "  H         = (" + ", ".join(_c(x) for x in f["H"]) + ")",
    ]


def render_text(report: dict) -> str:
    meta = report["meta"]
    head = [f"# genmaxwell {meta['version']} {meta['command']}"]
    if "momentum" in meta:
        m = meta["momentum"]
        head.append(f"# k = ({m['k1']},{m['k2']},{m['k3']}), k0 = {m['k0']}")
    kap = meta["kappa"]
    head.append(f"# kappa = {', '.join(kap) if isinstance(kap, list) else kap}")
    lines = head + [""]

    for name, entries in report.get("matrices", {}).items():
        lines.append(f"{name}:")
        lines.append(RepMatrix.from_json(entries).pretty())
        lines.append("")

    diag = report.get("diagnostics")
    if diag:
        lines.append(f"{'matrix':<10}{'rank':>6}{'trace':>8}")
        for name, r in diag["rank"].items():
            tr = diag["trace"].get(name)
            lines.append(f"{name:<10}{r:>6}{_c(tr) if tr else '':>8}")
        lines.append(f"kernel dimension of D: {diag['kernel_dimension']}")
        lines.append("")

    for sol in report["solutions"]:
        lines.append(f"[{sol['label']}]")
        if sol["status"] == "rejected":
            lines.append(f"  rejected: {sol['reason']}")
        elif "fields" in sol:
            lines.extend(_render_fields(sol["fields"]))
            lines.append(f"  maxwell-limit: {sol['maxwell_limit']}")
        else:
            lines.append("  psi     = " + _sparse(sol["psi"]))
            lines.append("  psi_bar = " + _sparse(sol["psi_bar"]))
            lines.append(f"  psi_bar psi = {_c(sol['psi_bar_psi'])}")
            if sol["eta_ratio"] is not None:
                lines.append(f"  psi_bar = ({_c(sol['eta_ratio'])}) psi^+ eta")
        lines.append("")

    if report["checks"]:
        lines.extend(_render_checks(report["checks"]))
        s = meta["summary"]
        lines.append(f"{s['passed']}/{s['checks']} checks passed, {s['failed']} failed")
    return "\n".join(lines).rstrip() + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    return render_text(report)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
        report = HANDLERS[cfg.command](cfg)
    except InputError as exc:
        print(f"genmaxwell: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)

    text = render(report, cfg.format)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(c["status"] == "pass" for c in report["checks"]) else 1


if __name__ == "__main__":
    sys.exit(main())
