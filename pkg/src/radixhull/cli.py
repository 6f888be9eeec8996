"""Command-line interface: ``radixhull {extremals,check-convex,render,verify}``."""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from .geometry import ToleranceConfig, extremal_points
from .hull import BaseSpec, BinaryWord, circular_shift, closed_form_vertices, conv_lambda, hull_affine
from .numsys import Alphabet, is_convex_lambda
from .svg import fmt, num, render_csv, render_svg

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NOT_CONVEX = 0, 1, 2, 3

_ROOT = re.compile(
    r"^\s*(?P<b>\d+(?:\.\d*)?)\s*\^\s*\(\s*1\s*/\s*(?P<d>n|\d+)\s*\)"
    r"\s*(?:(?P<sign>[+-])\s*(?P<off>\d*\.?\d+(?:[eE][+-]?\d+)?))?\s*$"
)


class UsageError(ValueError):
    pass


def parse_p(text: str, n: int) -> float:
    """A float, or ``b^(1/d)`` / ``b^(1/n)`` with an optional ``+c`` / ``-c`` offset."""
    m = _ROOT.match(text)
    if m:
        d = n if m["d"] == "n" else int(m["d"])
        if d == 0:
            raise UsageError("zero root index in --p")
        val = math.exp(math.log(float(m["b"])) / d)
        if m["off"]:
            val += float(m["off"]) if m["sign"] == "+" else -float(m["off"])
        return val
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"cannot parse --p {text!r}") from None


def parse_alphabet(text: str) -> Alphabet:
    try:
        return Alphabet.of(float(s) for s in text.split(",") if s.strip())
    except ValueError as e:
        raise UsageError(f"bad --alphabet {text!r}: {e}") from None


@dataclass(frozen=True)
class RunConfig:
    base: BaseSpec
    alphabet: Alphabet
    depth: int
    tol: ToleranceConfig
    seed: int
    out_path: str
    format: str

    @classmethod
    def from_args(cls, a: argparse.Namespace) -> RunConfig:
        try:
            if a.n is None:
                raise UsageError("--n is required")
            base = BaseSpec(a.n, parse_p(a.p, a.n))
            tol = ToleranceConfig(a.tol, a.tol)
        except UsageError:
            raise
        except ValueError as e:
            raise UsageError(str(e)) from None
        if a.depth < 0:
            raise UsageError("--depth must be non-negative")
        return cls(base, parse_alphabet(a.alphabet), a.depth, tol, a.seed, a.out, a.format)


def _emit(text: str, path: str) -> None:
    if path in ("", "-"):
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e}") from None


def _pt(z: complex) -> dict:
    return {"re": num(z.real), "im": num(z.imag)}


def _config_json(cfg: RunConfig) -> dict:
    return {"n": cfg.base.n, "p": num(cfg.base.p), "alphabet": [num(a) for a in cfg.alphabet]}


def _shift_from_block(w: BinaryWord) -> tuple[str, int]:
    """(orbit representative 1^L 0^(n-L), s) with sigma**s(representative) == w."""
    n = len(w)
    rep = BinaryWord.block(sum(w.digits), n)
    for s in range(max(n, 1)):
        if circular_shift(rep, s) == w:
            return str(rep), s
    raise AssertionError("word is not a rotation of a block")


def extremal_records(cfg: RunConfig) -> list[dict]:
    """Extremal points of conv(Lambda) in counter-clockwise order, tagged with their words."""
    base, A = cfg.base, cfg.alphabet
    scale, shift = hull_affine(base, A)
    if A.span == 0.0:
        return [{"index": 1, **_pt(shift), "word": "", "orbit": "", "shift": 0, "provenance": "single_digit"}]
    recs = []
    for f in closed_form_vertices(base):
        slots = [(2 * f.h - 1, f.low_word, f.low_vertex), (2 * f.h, f.high_word, f.high_vertex)]
        if base.n % 2 == 0:
            slots = slots[1:]
        for idx, w, v in slots:
            rep, s = _shift_from_block(w)
            recs.append(
                {
                    "index": idx,
                    **_pt(scale * v + shift),
                    "word": str(w),
                    "orbit": f"Orb({rep})",
                    "shift": s,
                    "provenance": "closed_form",
                }
            )
    return recs


def cmd_extremals(cfg: RunConfig) -> int:
    recs = extremal_records(cfg)
    if cfg.format == "csv":
        text = render_csv((complex(r["re"], r["im"]), r["word"], "vertex") for r in recs)
    elif cfg.format == "json":
        scale, shift = hull_affine(cfg.base, cfg.alphabet)
        doc = {
            **_config_json(cfg),
            "scale": num(scale),
            "shift": _pt(shift),
            "extremal_count": len(recs),
            "vertices": recs,
        }
        text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    else:
        raise UsageError("extremals supports --format json or csv")
    _emit(text, cfg.out_path)
    return EXIT_OK


def cmd_check_convex(cfg: RunConfig, rule: str = "gap") -> int:
    if len(cfg.alphabet) < 2:
        raise UsageError("check-convex needs at least two digits")
    rep = is_convex_lambda(cfg.base, cfg.alphabet, cfg.tol, rule=rule)
    doc = {
        "is_convex": rep.is_convex,
        "max_gap": num(rep.max_gap),
        "threshold": num(rep.threshold),
        "witness_gap_index": rep.witness_gap_index,
        "rule": rule,
        **_config_json(cfg),
    }
    _emit(json.dumps(doc, indent=2) + "\n", cfg.out_path)
    return EXIT_OK if rep.is_convex else EXIT_NOT_CONVEX


def cmd_render(cfg: RunConfig, figure: str | None = None) -> int:
    from .ifs import cloud

    base, A = cfg.base, cfg.alphabet
    try:
        pc = cloud(base, A, cfg.depth)
    except ValueError as e:
        raise UsageError(str(e)) from None
    hull = conv_lambda(base, A)
    E = extremal_points(hull, cfg.tol) if len(hull) > 1 else list(hull.vertices)
    verdict = is_convex_lambda(base, A, cfg.tol)
    title = f"n={base.n} p={fmt(base.p)} A={{{','.join(fmt(a) for a in A)}}} depth={cfg.depth}"
    if cfg.format == "svg":
        meta = {
            **_config_json(cfg),
            "depth": cfg.depth,
            "points": len(pc),
            "extremal_count": len(E),
            "criterion_convex": verdict.is_convex,
        }
        cls = "hull convex" if verdict.is_convex else "hull nonconvex"
        text = render_svg(pc.points, E, title=title, meta=meta, hull_class=cls)
    elif cfg.format == "csv":
        vertex_words = {complex(r["re"], r["im"]): r["word"] for r in extremal_records(cfg)}
        rows = [(z, w, "cloud") for z, w in zip(pc.points, pc.words())]
        rows += [(z, _nearest_word(z, vertex_words), "vertex") for z in E]
        text = render_csv(rows)
    else:
        raise UsageError("render supports --format svg or csv")
    _emit(text, cfg.out_path)
    if figure:
        from .plotting import save_cloud_figure

        try:
            save_cloud_figure(figure, pc.points, E, title=title, convex=verdict.is_convex)
        except OSError as e:
            raise UsageError(f"cannot write {figure}: {e}") from None
    return EXIT_OK


def _nearest_word(z: complex, words: dict[complex, str]) -> str:
    return min(words.items(), key=lambda kv: abs(kv[0] - z))[1]


def cmd_verify(suites, parity: str, seed: int, out) -> int:
    from .verify import run_suites

    results = run_suites(suites, parity=parity, seed=seed)
    first = None
    for r in results:
        note = f"; {'; '.join(r.notes)}" if r.notes else ""
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases{note})", file=out)
        if not r.passed and first is None:
            first = r
    if first is not None:
        print(json.dumps({"suite": first.name, "counterexample": first.counterexample}, default=float), file=out)
        return EXIT_FAIL
    return EXIT_OK


def _common(sp: argparse.ArgumentParser, fmt_choices, fmt_default) -> None:
    sp.add_argument("--n", type=int, help="rotation order n >= 1")
    sp.add_argument("--p", default="2", help="modulus p > 1; accepts 2^(1/n), 2^(1/3)+0.3, ...")
    sp.add_argument("--alphabet", default="0,1", help="comma-separated real digits")
    sp.add_argument("--depth", type=int, default=14)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default="-", help="output path, '-' for stdout")
    sp.add_argument("--format", choices=fmt_choices, default=fmt_default)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="radixhull", description="Convex hulls of complex-base representable sets.")
    sub = ap.add_subparsers(dest="cmd", required=True)
    _common(sub.add_parser("extremals", help="extremal points of the hull"), ["json", "csv"], "json")
    cc = sub.add_parser("check-convex", help="digit-gap convexity criterion")
    _common(cc, ["json"], "json")
    cc.add_argument("--rule", choices=["gap", "slice"], default="gap")
    rd = sub.add_parser("render", help="point cloud with hull overlay")
    _common(rd, ["svg", "csv"], "svg")
    rd.add_argument("--figure", help="also save a matplotlib figure (png/pdf/svg) here")
    vf = sub.add_parser("verify", help="run the invariant suites")
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument("--parity", choices=["all", "odd", "even"], default="all")
    vf.add_argument("--suite", action="append", help="suite name; repeatable")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        if a.cmd == "verify":
            try:
                return cmd_verify(a.suite, a.parity, a.seed, sys.stdout)
            except ValueError as e:
                raise UsageError(str(e)) from None
        cfg = RunConfig.from_args(a)
        if a.cmd == "extremals":
            return cmd_extremals(cfg)
        if a.cmd == "check-convex":
            return cmd_check_convex(cfg, a.rule)
        return cmd_render(cfg, a.figure)
    except UsageError as e:
        print(f"radixhull: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
