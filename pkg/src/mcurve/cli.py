"""Command-line frontend.

Subcommands: ``invariants`` (one-shot report, optionally verifying closed
forms against the oracle), ``gb`` (print / diff Groebner bases), ``hilbert``
(Hilbert-function table, formula vs counting), ``sweep`` (family
verification runs, JSONL output).

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
The MCURVE_CAP_DEGREE environment variable overrides the Buchberger degree
cap; --cap-degree wins over the environment.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import sweeps
from .arith_forms import (
    betti1_arithmetic,
    cm_type_arithmetic,
    gb_arithmetic,
    hilbert_arithmetic,
    is_gorenstein,
    reg_arithmetic,
)
from .errors import McurveError, SequenceError
from .gen_forms import (
    gb_generalized,
    hilbert_generalized,
    is_cm_generalized,
    is_complete_intersection,
    reg_generalized,
)
from .grobner import initial_ideal, reduce_basis, render_gb, toric_ideal
from .koszul import koszul_status
from .monideal import (
    cm_type_oracle,
    cm_via_initial,
    hf_quotient,
    hs_numerator,
    reg_nested_type,
)
from .poly import DegRevLex, format_binomial, parse_order
from .seq import CurveSequence, arithmetic_profile, classify, parse_sequence


@dataclass
class InvariantReport:
    """Aggregated invariants with per-field provenance.

    provenance values: "closed_form", "oracle", or "both-agree"; a field
    computed both ways is reported only when the two values match (a mismatch
    aborts the command with exit code 1).
    """

    sequence: tuple[int, ...]
    kind: str
    h: int | None
    d: int | None
    cm: bool | None = None
    cm_type: int | None = None
    gorenstein: bool | None = None
    complete_intersection: bool | None = None
    regularity: int | None = None
    hf_regularity: int | None = None
    betti1: int | None = None
    hs_numerator: tuple[int, ...] | None = None
    hilbert_polynomial: tuple[int, int] | None = None
    koszul_verdict: str | None = None
    koszul_reason: str | None = None
    provenance: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = dataclasses.asdict(self)
        out["sequence"] = list(self.sequence)
        if self.hs_numerator is not None:
            out["hs_numerator"] = list(self.hs_numerator)
        if self.hilbert_polynomial is not None:
            out["hilbert_polynomial"] = {
                "slope": self.hilbert_polynomial[0],
                "constant": self.hilbert_polynomial[1],
            }
        return out

    @staticmethod
    def from_dict(data: dict) -> "InvariantReport":
        data = dict(data)
        data["sequence"] = tuple(data["sequence"])
        if data.get("hs_numerator") is not None:
            data["hs_numerator"] = tuple(data["hs_numerator"])
        hp = data.get("hilbert_polynomial")
        if hp is not None:
            data["hilbert_polynomial"] = (hp["slope"], hp["constant"])
        return InvariantReport(**data)

    def render_text(self) -> str:
        lines = [f"sequence           {','.join(map(str, self.sequence))}"]
        cls = self.kind
        if self.h is not None:
            cls += f" (h={self.h}, d={self.d})"
        lines.append(f"class              {cls}")
        for label, value in [
            ("cohen-macaulay", self.cm),
            ("cm type", self.cm_type),
            ("gorenstein", self.gorenstein),
            ("complete int.", self.complete_intersection),
            ("regularity", self.regularity),
            ("hf regularity", self.hf_regularity),
            ("betti_1", self.betti1),
        ]:
            if value is not None:
                src = self.provenance.get(_FIELD_BY_LABEL[label], "")
                lines.append(f"{label:<18} {value} [{src}]" if src else f"{label:<18} {value}")
        if self.hs_numerator is not None:
            src = self.provenance.get("hs_numerator", "")
            lines.append(f"hs numerator       {list(self.hs_numerator)} [{src}]")
        if self.hilbert_polynomial is not None:
            s, c = self.hilbert_polynomial
            src = self.provenance.get("hilbert_polynomial", "")
            lines.append(f"hilbert polynomial {s}*s {'+' if c >= 0 else '-'} {abs(c)} [{src}]")
        if self.koszul_verdict is not None:
            lines.append(f"koszul             {self.koszul_verdict} ({self.koszul_reason})")
        return "\n".join(lines)


_FIELD_BY_LABEL = {
    "cohen-macaulay": "cm",
    "cm type": "cm_type",
    "gorenstein": "gorenstein",
    "complete int.": "complete_intersection",
    "regularity": "regularity",
    "hf regularity": "hf_regularity",
    "betti_1": "betti1",
}


class Mismatch(McurveError):
    """Closed form and oracle disagree."""


def _cap_from(args: argparse.Namespace) -> int | None:
    if getattr(args, "cap_degree", None) is not None:
        return args.cap_degree
    env = os.environ.get("MCURVE_CAP_DEGREE")
    return int(env) if env else None


def build_report(seq: CurveSequence, verify: bool, cap: int | None = None) -> InvariantReport:
    cls = classify(seq)
    report = InvariantReport(sequence=seq.m, kind=cls.kind, h=cls.h, d=cls.d)
    prov = report.provenance

    def settle(name: str, closed, oracle) -> object:
        """Record a field computed one or both ways; raise on disagreement."""
        if closed is not None and oracle is not None:
            if closed != oracle:
                raise Mismatch(f"{name}: closed form {closed} != oracle {oracle} for ({seq})")
            prov[name] = "both-agree"
            return closed
        if closed is not None:
            prov[name] = "closed_form"
            return closed
        prov[name] = "oracle"
        return oracle

    closed_applies = cls.is_generalized_arithmetic and math.gcd(seq.m1, cls.d or 1) == 1
    closed_hd = (closed_applies and cls.kind == "generalized"
                 and cls.d is not None and cls.h is not None and cls.d % cls.h == 0)
    arith = closed_applies and cls.kind == "arithmetic"
    use_oracle = verify or not (arith or closed_hd)

    gb = ini = None
    if use_oracle:
        gb = toric_ideal(seq, cap)
        ini = initial_ideal(gb)

    if arith:
        prof = arithmetic_profile(seq)
        hil = hilbert_arithmetic(seq)
        report.cm = settle("cm", True, cm_via_initial(ini, seq.n) if ini else None)
        report.cm_type = settle("cm_type", cm_type_arithmetic(seq),
                                cm_type_oracle(seq, ini) if ini else None)
        report.gorenstein = settle("gorenstein", is_gorenstein(seq),
                                   (cm_type_oracle(seq, ini) == 1) if ini else None)
        report.complete_intersection = settle(
            "complete_intersection", is_complete_intersection(seq),
            (len(gb) == seq.n - 1) if gb else None)
        report.regularity = settle("regularity", reg_arithmetic(seq),
                                   reg_nested_type(ini) if ini else None)
        report.hf_regularity = settle("hf_regularity", hil.hf_reg, None)
        report.betti1 = settle("betti1", betti1_arithmetic(prof, seq.n),
                               len(gb) if gb else None)
        report.hs_numerator = settle("hs_numerator", hil.hs_numerator,
                                     hs_numerator(ini) if ini else None)
        report.hilbert_polynomial = settle(
            "hilbert_polynomial", (hil.hp_slope, hil.hp_constant),
            _fitted_polynomial(ini, report.regularity) if ini else None)
        if verify and gb is not None:
            closed = reduce_basis(gb_arithmetic(seq), DegRevLex(seq.n + 1))
            if set(closed) != gb.element_set():
                raise Mismatch(f"groebner basis: closed form != oracle for ({seq})")
    elif closed_hd and seq.n >= 3:
        hil = hilbert_generalized(seq)
        report.cm = settle("cm", is_cm_generalized(seq),
                           cm_via_initial(ini, seq.n) if ini else None)
        report.gorenstein = False if not report.cm else None
        prov["gorenstein"] = prov["cm"]
        report.complete_intersection = settle(
            "complete_intersection", is_complete_intersection(seq), None)
        report.regularity = settle("regularity", reg_generalized(seq),
                                   reg_nested_type(ini) if ini else None)
        report.betti1 = settle("betti1", len(gb_generalized(seq)),
                               len(gb) if gb else None)
        report.hs_numerator = settle("hs_numerator", hil.hs_numerator,
                                     hs_numerator(ini) if ini else None)
        report.hilbert_polynomial = settle(
            "hilbert_polynomial", (hil.hp_slope, hil.hp_constant),
            _fitted_polynomial(ini, report.regularity) if ini else None)
        if verify and gb is not None:
            closed = reduce_basis(gb_generalized(seq), DegRevLex(seq.n + 1))
            if set(closed) != gb.element_set():
                raise Mismatch(f"groebner basis: closed form != oracle for ({seq})")
    else:
        assert ini is not None and gb is not None
        cm = cm_via_initial(ini, seq.n)
        report.cm = settle("cm", None, cm)
        if cm:
            report.cm_type = settle("cm_type", None, cm_type_oracle(seq, ini))
            report.gorenstein = settle("gorenstein", None, report.cm_type == 1)
        report.regularity = settle("regularity", None, reg_nested_type(ini))
        report.hs_numerator = settle("hs_numerator", None, hs_numerator(ini))
        report.hilbert_polynomial = settle(
            "hilbert_polynomial", None, _fitted_polynomial(ini, report.regularity))

    status = koszul_status(seq, cap)
    report.koszul_verdict = status.verdict
    report.koszul_reason = status.reason
    prov["koszul"] = "oracle"
    return report


def _fitted_polynomial(ini, reg: int) -> tuple[int, int]:
    """Line through the counted Hilbert function beyond the regularity."""
    a = hf_quotient(ini, reg + 2)
    b = hf_quotient(ini, reg + 3)
    slope = b - a
    return slope, b - slope * (reg + 3)


# -- subcommands -----------------------------------------------------------------


def cmd_invariants(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.sequence)
    report = build_report(seq, verify=args.verify, cap=_cap_from(args))
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        print(report.render_text())
    return 0


def _closed_form_gb(seq: CurveSequence):
    cls = classify(seq)
    if not cls.is_generalized_arithmetic or math.gcd(seq.m1, cls.d or 1) != 1:
        return None
    if cls.kind == "arithmetic":
        return reduce_basis(gb_arithmetic(seq), DegRevLex(seq.n + 1))
    if cls.d is not None and cls.h is not None and cls.d % cls.h == 0 and seq.n >= 3:
        return reduce_basis(gb_generalized(seq), DegRevLex(seq.n + 1))
    return None


def cmd_gb(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.sequence)
    cap = _cap_from(args)
    order = parse_order(args.order, seq.n + 1)

    if args.diff:
        closed = _closed_form_gb(seq)
        if closed is None:
            print(f"no closed form applies to ({seq})", file=sys.stderr)
            return 2
        oracle = toric_ideal(seq, cap)
        only_closed = sorted(set(closed) - oracle.element_set(), key=str)
        only_oracle = sorted(oracle.element_set() - set(closed), key=str)
        for b in only_closed:
            print(f"closed only: {format_binomial(b)}")
        for b in only_oracle:
            print(f"oracle only: {format_binomial(b)}")
        if only_closed or only_oracle:
            return 1
        print(f"# diff empty: {len(oracle)} elements agree")
        return 0

    if args.source == "closed":
        closed = _closed_form_gb(seq)
        if closed is None:
            print(f"no closed form applies to ({seq})", file=sys.stderr)
            return 2
        from .grobner import GroebnerBasis
        gb = GroebnerBasis(DegRevLex(seq.n + 1), closed, reduced=True)
    else:
        gb = toric_ideal(seq, cap)
        if order != gb.order:
            from .grobner import buchberger
            gb = buchberger(gb.elements, order, cap)
    sys.stdout.write(render_gb(gb, seq))
    return 0


def cmd_hilbert(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.sequence)
    cap = _cap_from(args)
    cls = classify(seq)
    gb = toric_ideal(seq, cap)
    ini = initial_ideal(gb)

    closed_hf = None
    if cls.is_generalized_arithmetic and math.gcd(seq.m1, cls.d or 1) == 1:
        if cls.kind == "arithmetic":
            closed_hf = hilbert_arithmetic(seq).hf_at
        elif cls.d is not None and cls.h is not None and cls.d % cls.h == 0 and seq.n >= 3:
            closed_hf = hilbert_generalized(seq).hf_at

    rows = []
    mismatch = False
    for s in range(args.max_degree + 1):
        counted = hf_quotient(ini, s)
        formula = closed_hf(s) if closed_hf else None
        rows.append((s, formula, counted))
        if formula is not None and formula != counted:
            mismatch = True
    if args.json:
        payload = {
            "sequence": list(seq.m),
            "rows": [{"s": s, "closed": f, "counted": c} for s, f, c in rows],
            "hs_numerator": list(hs_numerator(ini)),
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{'s':>4} {'closed':>10} {'counted':>10}")
        for s, f, c in rows:
            print(f"{s:>4} {f if f is not None else '-':>10} {c:>10}")
        print(f"hs numerator: {list(hs_numerator(ini))}")
    return 1 if mismatch else 0


def _sweep_instances(args: argparse.Namespace):
    if args.family == "arithmetic":
        cfg = sweeps.ArithmeticSweep(max_mn=args.max_mn or 30)
        return list(sweeps.arithmetic_instances(cfg)), sweeps.check_arithmetic_instance, cfg
    if args.family == "generalized":
        hs = tuple(int(x) for x in args.h.split(",")) if args.h else (2, 3)
        cfg = sweeps.GeneralizedSweep(h_values=hs, max_mn=args.max_mn or 60)
        return list(sweeps.generalized_instances(cfg)), sweeps.check_generalized_instance, cfg
    if args.family == "n3":
        import itertools
        bound = args.max_mn or 12
        cfg = sweeps.KoszulN3Sweep(max_m3=bound)
        seqs = [CurveSequence(m) for m in itertools.combinations(range(1, bound + 1), 3)
                if math.gcd(*m) == 1]
        return seqs, sweeps.check_koszul_n3_instance, cfg
    if args.family == "n4":
        import itertools
        bound = args.max_m4 or 10
        cfg = sweeps.KoszulN4Sweep(max_m4=bound)
        seqs = [CurveSequence(m) for m in itertools.combinations(range(1, bound + 1), 4)
                if math.gcd(*m) == 1]
        return seqs, sweeps.check_koszul_n4_instance, cfg
    if args.family == "random":
        cfg = sweeps.RandomSweep(count=args.count, max_mn=args.max_mn or 25, seed=args.seed)
        return list(sweeps.random_instances(cfg)), sweeps.check_random_instance, cfg
    raise ValueError(f"unknown family {args.family!r}")


def _run_one(payload: tuple[str, tuple[int, ...], int | None]) -> dict:
    family, m, cap = payload
    checker = {
        "arithmetic": sweeps.check_arithmetic_instance,
        "generalized": sweeps.check_generalized_instance,
        "n3": sweeps.check_koszul_n3_instance,
        "n4": sweeps.check_koszul_n4_instance,
        "random": sweeps.check_random_instance,
    }[family]
    seq = CurveSequence(m)
    started = time.perf_counter()
    try:
        checks = checker(seq, cap)
        ok = all(checks.values())
        record = {"seq": list(m), "ok": ok, "checks": checks}
    except McurveError as exc:
        record = {"seq": list(m), "ok": False, "error": f"{type(exc).__name__}: {exc}"}
    record["elapsed_ms"] = round(1000 * (time.perf_counter() - started), 1)
    return record


def cmd_sweep(args: argparse.Namespace) -> int:
    cap = _cap_from(args)
    seqs, _, cfg = _sweep_instances(args)
    out = open(args.out, "w") if args.out else sys.stdout
    payloads = [(args.family, s.m, cap) for s in seqs]
    failures = 0
    try:
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                records = list(pool.map(_run_one, payloads))
        else:
            records = [_run_one(p) for p in payloads]
        for record in records:
            if not record["ok"]:
                failures += 1
            out.write(json.dumps(record, sort_keys=True) + "\n")
        summary = {
            "summary": {
                "family": args.family,
                "config": dataclasses.asdict(cfg),
                "instances": len(records),
                "failures": failures,
            }
        }
        if args.family == "random":
            summary["summary"]["seed"] = args.seed
        out.write(json.dumps(summary, sort_keys=True) + "\n")
    finally:
        if args.out:
            out.close()
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcurve",
        description="Exact invariants of projective monomial curves defined by integer sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, sequence: bool = True) -> None:
        if sequence:
            p.add_argument("-m", "--sequence", required=True,
                           help="comma-separated strictly increasing positive integers")
        p.add_argument("--cap-degree", type=int, default=None,
                       help="Buchberger degree cap (default 4*(m_n + n); env MCURVE_CAP_DEGREE)")

    p = sub.add_parser("invariants", help="compute the invariant report")
    add_common(p)
    p.add_argument("--verify", action="store_true",
                   help="compute closed forms and oracle values and require agreement")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("gb", help="print or diff Groebner bases")
    add_common(p)
    p.add_argument("--source", choices=["closed", "oracle"], default="oracle")
    p.add_argument("--order", default="degrevlex",
                   help='"degrevlex" or "yweighted:xK" (oracle source only)')
    p.add_argument("--diff", action="store_true",
                   help="print the set difference closed vs oracle; exit 1 if nonempty")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("hilbert", help="Hilbert function table: formula vs counting")
    add_common(p)
    p.add_argument("--max-degree", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("sweep", help="run a family verification sweep (JSONL)")
    add_common(p, sequence=False)
    p.add_argument("--family", required=True,
                   choices=["arithmetic", "generalized", "n3", "n4", "random"])
    p.add_argument("--max-mn", type=int, default=None)
    p.add_argument("--max-m4", type=int, default=None)
    p.add_argument("--h", default=None, help="comma-separated h values (generalized family)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50, help="instances for the random family")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="JSONL output path (default stdout)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SequenceError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except Mismatch as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except McurveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
