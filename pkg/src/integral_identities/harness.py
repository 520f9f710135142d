"""Command-line runner: select identities, sweep them, write a JSON report.

Exit status is 0 when every record passes, 1 on any failure, 2 when the
selection matches nothing and 3 when the report cannot be written.
"""

from __future__ import annotations

import argparse
import datetime
import fnmatch
import json
import math
import sys
from dataclasses import dataclass, field

from .identities import TOLERANCE_CLASSES, IdentitySpec, VerificationRecord, registry, registry_notes, sweep

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_SELECTION = 2
EXIT_IO = 3


class SelectionError(LookupError):
    pass


@dataclass
class Report:
    records: list[VerificationRecord]
    metadata: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        passed = sum(r.passed for r in self.records)
        worst: dict[str, float] = {}
        for r in self.records:
            v = r.rel_diff if not math.isnan(r.rel_diff) else math.inf
            worst[r.id] = max(worst.get(r.id, 0.0), v)
        return {
            "total": len(self.records),
            "passed": passed,
            "failed": len(self.records) - passed,
            "max_rel_diff": worst,
        }

    def records_json(self) -> list[dict]:
        return [_clean(r.as_dict()) for r in self.records]

    def to_json(self) -> str:
        doc = {
            "metadata": self.metadata,
            "summary": _clean(self.summary),
            "records": self.records_json(),
        }
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"

    def to_text(self) -> str:
        lines = []
        for spec_id, worst in self.summary["max_rel_diff"].items():
            recs = [r for r in self.records if r.id == spec_id]
            ok = sum(r.passed for r in recs)
            status = "PASS" if ok == len(recs) else "FAIL"
            lines.append(f"{status}  {spec_id:<12} {ok:>4}/{len(recs):<4} max rel diff {worst:.2e}")
        s = self.summary
        lines.append(f"{s['passed']}/{s['total']} records passed, {s['failed']} failed")
        return "\n".join(lines) + "\n"


def _clean(obj):
    """Replace non-finite floats so the report stays strict JSON."""
    if isinstance(obj, float):
        if math.isnan(obj):
            return None
        if math.isinf(obj):
            return "inf"
        return obj
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_clean(v) for v in obj]
    return obj


def select(pattern: str) -> list[IdentitySpec]:
    """Identities whose id matches any of the comma-separated globs."""
    globs = [g.strip() for g in pattern.split(",") if g.strip()]
    chosen = [s for s in registry() if any(fnmatch.fnmatchcase(s.id, g) for g in globs)]
    if not chosen:
        raise SelectionError(f"no identity matches {pattern!r}")
    return chosen


def run(selection: str = "*", samples: int = 5, tol: float | None = None,
        out: str | None = None, seed: int = 42) -> tuple[Report, int]:
    specs = select(selection)
    records: list[VerificationRecord] = []
    for spec in specs:
        records.extend(sweep(spec, samples, seed, tol))
    report = Report(records, {
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
        "selection": selection,
        "samples": samples,
        "seed": seed,
        "tolerance_classes": dict(TOLERANCE_CLASSES),
        "tol_override": tol,
        "notes": registry_notes(),
    })
    status = EXIT_OK if report.summary["failed"] == 0 else EXIT_FAILED
    if out is not None:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    return report, status


def list_registry() -> str:
    lines = []
    for spec in registry():
        params = ", ".join(
            f"{p.name} in {{{', '.join(map(str, p.values))}}}" if p.discrete
            else f"{p.name} in [{p.lo:g}, {p.hi:g}]"
            for p in spec.domain.params
        ) or "-"
        lines.append(f"{spec.id:<12} {spec.tolerance_class:<8} {params}")
        lines.append(f"    {spec.formula}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="integral-identities",
        description="Verify definite-integral identities by quadrature against closed forms.",
    )
    parser.add_argument("--select", default="*", help="identity id glob(s), comma separated")
    parser.add_argument("--samples", type=int, default=5, help="samples per continuous parameter")
    parser.add_argument("--tol", type=float, default=None, help="override every tolerance class")
    parser.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--list", action="store_true", help="print the registry and exit")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.list:
        sys.stdout.write(list_registry())
        return EXIT_OK
    if args.samples < 1:
        print("--samples must be >= 1", file=sys.stderr)
        return EXIT_SELECTION
    try:
        report, status = run(args.select, args.samples, args.tol, args.out, args.seed)
    except SelectionError as exc:
        print(exc, file=sys.stderr)
        return EXIT_SELECTION
    except OSError as exc:
        print(f"cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    if args.out is None:
        sys.stdout.write(report.to_json())
        sys.stderr.write(report.to_text())
    else:
        sys.stdout.write(report.to_text())
    return status


if __name__ == "__main__":
    sys.exit(main())
