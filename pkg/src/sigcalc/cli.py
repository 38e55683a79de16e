"""Command line front end.

    sigcalc <config-path> [--mode flipped|general] [--emit text|json]
            [--check] [--expected-chi N]

A config is a JSON document with top-level keys ``mode``, ``group``,
``subgroup``, ``action``, ``fixed_points``, ``checks`` and ``emit``. A bare
name such as ``hp2_biquotient`` that is not an existing path is looked up
among the bundled configs.
"""
import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .biquot import BiquotientSpec, EmbeddingSpec, Factor, SignatureReport, biquotient_signature
from .checks import ALL_CHECKS, BIQUOTIENT_CHECKS, HOMOGENEOUS_CHECKS, run_checks
from .errors import IncompleteEnumeration, SchemaError, SigcalcError
from .homsig import coset_parities, homogeneous_dimension, homogeneous_signature
from .liealg import GroupElement
from .rootsys import build_root_system, sub_root_system
from .weyl import inversion_count_outside

TOP_KEYS = {"mode", "group", "subgroup", "action", "fixed_points", "checks", "emit"}
EMITS = ("text", "json")


class NonIntegralWeight(SchemaError, ValueError):
    """A weight or coefficient that should be an integer is not."""


@dataclass
class RunConfig:
    mode: str
    group: dict
    subgroup: object
    action: dict = None
    fixed_points: list = None
    checks: list = field(default_factory=list)
    emit: str = "text"
    spec: BiquotientSpec = None

    def root_systems(self):
        sys_G = build_root_system(self.group["family"], self.group["rank"])
        return sys_G, sub_root_system(sys_G, self.subgroup, label="H")


# -- parsing -----------------------------------------------------------------

def _require(obj, key, path, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(path, f"missing required key {key!r}")
    value = obj[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise SchemaError(f"{path}.{key}" if path else key, f"expected {_kind_name(kind)}")
    return value


def _kind_name(kind):
    return {dict: "an object", list: "a list", int: "an integer", str: "a string", bool: "a boolean"}.get(kind, str(kind))


def _reject_unknown(obj, allowed, path):
    extra = sorted(set(obj) - set(allowed))
    if extra:
        raise SchemaError(f"{path}.{extra[0]}" if path else extra[0], "unknown key")


def _int_list(value, path, length=None):
    if not isinstance(value, list):
        raise SchemaError(path, "expected a list of integers")
    out = []
    for k, x in enumerate(value):
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise SchemaError(f"{path}[{k}]", "expected an integer")
        if isinstance(x, float):
            if not x.is_integer():
                raise NonIntegralWeight(f"{path}[{k}]", f"{x} is not an integer")
            x = int(x)
        out.append(x)
    if length is not None and len(out) != length:
        raise SchemaError(path, f"expected {length} entries, got {len(out)}")
    return out


def _parse_group(doc, mode):
    group = _require(doc, "group", "", dict)
    if mode == "homogeneous":
        _reject_unknown(group, {"family", "rank"}, "group")
        family = _require(group, "family", "group", str).upper()
        rank = _require(group, "rank", "group", int)
        return {"family": family, "rank": rank}
    _reject_unknown(group, {"family", "n"}, "group")
    family = group.get("family", "SU")
    if family not in ("SU", "A"):
        raise SchemaError("group.family", "biquotients are supported for SU(n) only")
    n = _require(group, "n", "group", int)
    if n < 2:
        raise SchemaError("group.n", "n must be at least 2")
    return {"family": "SU", "n": n}


def _parse_factor(f, n, path):
    if not isinstance(f, dict):
        raise SchemaError(path, "expected an object")
    kind = _require(f, "type", path, str)
    if kind == "SU":
        _reject_unknown(f, {"type", "k", "left_blocks", "right_blocks"}, path)
        k = _require(f, "k", path, int)
        blocks = []
        for side in ("left_blocks", "right_blocks"):
            raw = f.get(side, [])
            if not isinstance(raw, list):
                raise SchemaError(f"{path}.{side}", "expected a list of index blocks")
            blocks.append([_int_list(b, f"{path}.{side}[{j}]", k) for j, b in enumerate(raw)])
        return Factor.su(k, blocks[0], blocks[1])
    if kind == "torus":
        _reject_unknown(f, {"type", "left", "right"}, path)
        left = _int_list(f.get("left", [0] * n), f"{path}.left", n)
        right = _int_list(f.get("right", [0] * n), f"{path}.right", n)
        return Factor.torus(left, right)
    raise SchemaError(f"{path}.type", f"unknown factor type {kind!r} (expected 'SU' or 'torus')")


def _parse_triples(raw, n, path):
    if not isinstance(raw, list) or len(raw) != n:
        raise SchemaError(path, f"expected {n} [row, col, tag] triples")
    triples = []
    for j, t in enumerate(raw):
        if not (isinstance(t, list) and len(t) == 3):
            raise SchemaError(f"{path}[{j}]", "expected [row, col, tag]")
        r, c = _int_list(t[:2], f"{path}[{j}]")
        tag = t[2]
        if str(tag) not in ("1", "-1", "i", "-i"):
            raise SchemaError(f"{path}[{j}][2]", "tag must be one of '1', '-1', 'i', '-i'")
        if not (1 <= r <= n and 1 <= c <= n):
            raise SchemaError(f"{path}[{j}]", f"indices must lie in 1..{n}")
        triples.append([r, c, str(tag)])
    try:
        return GroupElement.from_triples(n, triples)
    except ValueError as exc:
        raise SchemaError(path, str(exc)) from None


def parse_config(document):
    """Validate a config (JSON text or an already-decoded object)."""
    if isinstance(document, (str, bytes)):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError("", f"not valid JSON: {exc}") from None
    else:
        doc = document
    if not isinstance(doc, dict):
        raise SchemaError("", "top level must be an object")
    _reject_unknown(doc, TOP_KEYS, "")
    mode = _require(doc, "mode", "", str)
    if mode not in ("homogeneous", "biquotient"):
        raise SchemaError("mode", "expected 'homogeneous' or 'biquotient'")
    group = _parse_group(doc, mode)
    emit = doc.get("emit", "text")
    if emit not in EMITS:
        raise SchemaError("emit", "expected 'text' or 'json'")
    checks = doc.get("checks", [])
    if not isinstance(checks, list) or any(c not in ALL_CHECKS for c in checks):
        raise SchemaError("checks", f"expected a list drawn from {', '.join(ALL_CHECKS)}")

    if mode == "homogeneous":
        if "action" in doc or "fixed_points" in doc:
            raise SchemaError("action" if "action" in doc else "fixed_points", "only valid in biquotient mode")
        sub = _require(doc, "subgroup", "", dict)
        _reject_unknown(sub, {"roots"}, "subgroup")
        roots = _require(sub, "roots", "subgroup", list)
        dim = build_root_system(group["family"], group["rank"]).dim
        gens = [tuple(_int_list(r, f"subgroup.roots[{j}]", dim)) for j, r in enumerate(roots)]
        return RunConfig(mode, group, gens, checks=checks, emit=emit)

    n = group["n"]
    sub = _require(doc, "subgroup", "", dict)
    _reject_unknown(sub, {"factors"}, "subgroup")
    factors = [_parse_factor(f, n, f"subgroup.factors[{j}]") for j, f in enumerate(_require(sub, "factors", "subgroup", list))]
    if not factors:
        raise SchemaError("subgroup.factors", "at least one factor is required")
    action = _require(doc, "action", "", dict)
    _reject_unknown(action, {"tilde_torus", "circle", "flipped_torus_mode"}, "action")
    rows = []
    for j, row in enumerate(_require(action, "tilde_torus", "action", list)):
        p = f"action.tilde_torus[{j}]"
        if not isinstance(row, dict):
            raise SchemaError(p, "expected an object with 'left' and 'right'")
        _reject_unknown(row, {"left", "right"}, p)
        rows.append((_int_list(row.get("left", [0] * n), f"{p}.left", n), _int_list(row.get("right", [0] * n), f"{p}.right", n)))
    circle = _int_list(_require(action, "circle", "action", list), "action.circle", len(rows))
    flipped = action.get("flipped_torus_mode", False)
    if not isinstance(flipped, bool):
        raise SchemaError("action.flipped_torus_mode", "expected a boolean")
    reps = None
    if "fixed_points" in doc:
        raw = doc["fixed_points"]
        if not isinstance(raw, list):
            raise SchemaError("fixed_points", "expected a list of representatives")
        reps = [_parse_triples(t, n, f"fixed_points[{j}]") for j, t in enumerate(raw)]
    spec = BiquotientSpec(n, EmbeddingSpec(factors), rows, circle, reps, flipped)
    return RunConfig(mode, group, spec.embedding, action, reps, checks, emit, spec)


# -- running -----------------------------------------------------------------

@dataclass(frozen=True)
class CosetDatum:
    word: tuple
    inversions: int
    contribution: int


def run(config, mode_override=None, expected_chi=None):
    if config.mode == "homogeneous":
        return _run_homogeneous(config, expected_chi)
    spec = config.spec
    if mode_override is not None:
        spec = spec.with_mode(mode_override == "flipped")
    if expected_chi is not None:
        spec = BiquotientSpec(
            spec.n, spec.embedding, spec.tilde_torus, spec.circle, spec.fixed_point_reps,
            spec.flipped_torus_mode, expected_chi,
        )
    config.spec = spec
    report = biquotient_signature(spec)
    report.info["torus_mode"] = "flipped" if spec.flipped_torus_mode else "general"
    return report


def _run_homogeneous(config, expected_chi=None):
    sys_G, sys_H = config.root_systems()
    cosets, _ = coset_parities(sys_G, sys_H)
    if expected_chi is not None and len(cosets) != expected_chi:
        raise IncompleteEnumeration(f"found {len(cosets)} cosets, expected Euler characteristic {expected_chi}")
    rows = []
    for w in cosets:
        inv = inversion_count_outside(w, sys_G, sys_H)
        rows.append(CosetDatum(w.word, inv, -1 if inv % 2 else 1))
    report = SignatureReport("homogeneous", rows, homogeneous_signature(sys_G, sys_H))
    dim = homogeneous_dimension(sys_G, sys_H)
    report.info.update({"G": sys_G.name, "H_roots": len(sys_H.roots), "dim": dim, "fixed_points": len(cosets)})
    if dim % 4:
        report.notes.append("dimension not divisible by 4: signature is 0 by definition")
    return report


# -- emission ----------------------------------------------------------------

def _q(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _root_label(j, k):
    return f"e{j}-e{k}"


def report_to_dict(report, check_results=None):
    out = {"mode": report.mode, "signature_up_to_sign": report.signature_up_to_sign,
           "contributions": list(report.contributions)}
    points = []
    for fp in report.fixed_points:
        if isinstance(fp, CosetDatum):
            points.append({"word": list(fp.word), "inversions_outside_H": fp.inversions, "contribution": fp.contribution})
            continue
        points.append({
            "representative": fp.rep.triples(),
            "label": fp.rep.short(),
            "horizontal": [f"V{j}{k}" for j, k in fp.root_spaces],
            "weights": [
                {"root": _root_label(*w.root), "value": _q(w.value), "sign_convention": w.sign_convention,
                 "signed_value": _q(w.signed_value)}
                for w in fp.weights
            ],
            "orientation_flip": fp.orientation_flip,
            "contribution": fp.contribution,
            "contribution_orientdet": fp.contribution_orientdet,
        })
    out["fixed_points"] = points
    out["info"] = {k: _q(v) if isinstance(v, (int, Fraction)) and not isinstance(v, bool) else v for k, v in report.info.items()}
    out["cross_checks"] = dict(report.cross_checks)
    out["notes"] = list(report.notes)
    if check_results is not None:
        out["checks"] = {name: {"passed": ok, "detail": detail} for name, (ok, detail) in check_results.items()}
    return out


def emit_report(report, fmt="text", check_results=None):
    if fmt == "json":
        return json.dumps(report_to_dict(report, check_results), indent=2) + "\n"
    return _emit_text(report, check_results)


def _table(headers, rows):
    widths = [max(len(str(c)) for c in col) for col in zip(headers, *rows)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*headers), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*map(str, r)) for r in rows]
    return [line.rstrip() for line in lines]


def _emit_text(report, check_results=None):
    lines = [f"mode: {report.mode}"]
    for k, v in report.info.items():
        lines.append(f"{k}: {_q(v) if isinstance(v, (int, Fraction)) and not isinstance(v, bool) else v}")
    if report.fixed_points and isinstance(report.fixed_points[0], CosetDatum):
        rows = [("".join(f"s{j + 1}" for j in fp.word) or "e", fp.inversions, f"{fp.contribution:+d}") for fp in report.fixed_points]
        lines += [""] + _table(("coset rep", "inversions outside H", "contribution"), rows)
    elif report.fixed_points:
        rows = []
        for fp in report.fixed_points:
            weights = ", ".join(f"{_root_label(*w.root)}:{_q(w.value)}" for w in fp.weights)
            signs = "".join("+" if w.signed_value > 0 else "-" for w in fp.weights)
            rows.append((fp.rep.short(), weights, signs, f"{fp.orientation_flip:+d}", f"{fp.contribution:+d}"))
        lines += [""] + _table(("representative", "weights", "signs", "flip", "contribution"), rows)
    if report.cross_checks:
        lines.append("")
        lines += [f"cross-check {k}: {'ok' if v else 'FAILED'}" for k, v in report.cross_checks.items()]
    if check_results:
        lines.append("")
        for name, (ok, detail) in check_results.items():
            status = "n/a" if ok is None else ("pass" if ok else "FAIL")
            lines.append(f"check {name}: {status} ({detail})")
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append(f"sigma (up to global sign) = {report.signature_up_to_sign}")
    return "\n".join(lines) + "\n"


# -- entry point -------------------------------------------------------------

def bundled_config_names():
    root = resources.files("sigcalc") / "configs"
    return sorted(p.name[: -len(".cfg")] for p in root.iterdir() if p.name.endswith(".cfg"))


def read_config_text(path):
    p = Path(path)
    if p.exists():
        return p.read_text()
    name = p.name[: -len(".cfg")] if p.name.endswith(".cfg") else p.name
    bundled = resources.files("sigcalc") / "configs" / f"{name}.cfg"
    if bundled.is_file():
        return bundled.read_text()
    raise FileNotFoundError(path)


def build_parser():
    ap = argparse.ArgumentParser(prog="sigcalc", description="Signatures of homogeneous spaces and biquotients.")
    ap.add_argument("config", help="config path, or the name of a bundled config")
    ap.add_argument("--mode", choices=("flipped", "general"), help="override the torus mode of a biquotient config")
    ap.add_argument("--emit", choices=EMITS, help="output format (default: the config's, else text)")
    ap.add_argument("--check", action="store_true", help="run the cross-checks for this mode")
    ap.add_argument("--expected-chi", type=int, metavar="N", help="fail unless exactly N fixed points are found")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        text = read_config_text(args.config)
    except (FileNotFoundError, OSError) as exc:
        print(f"sigcalc: cannot read {args.config}: {exc}", file=sys.stderr)
        return 2
    try:
        config = parse_config(text)
        report = run(config, args.mode, args.expected_chi)
        names = list(config.checks)
        if args.check:
            defaults = HOMOGENEOUS_CHECKS if config.mode == "homogeneous" else BIQUOTIENT_CHECKS
            names = list(defaults) + names
        names = list(dict.fromkeys(names))
        check_results = run_checks(config, report, names) if names else None
    except SigcalcError as exc:
        print(f"sigcalc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(emit_report(report, args.emit or config.emit, check_results))
    if check_results and any(ok is False for ok, _ in check_results.values()):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
