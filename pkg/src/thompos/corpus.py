"""Thom-polynomial corpus files and the verification harness.

File grammar, one directive per line, ``#`` starts a comment::

    record <name>
    display <text>        (optional)
    family maps|functions (optional, default maps)
    kappa <int>           (optional; -1 for family functions)
    codim <int>
    source <tag>          (optional)
    poly <expr>
    end
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .partitions import ParseError, print_partition
from .positivity import PositivityVerdict, certify
from .schur_basis import SchurExpansion, parse_schur
from .schur_calc import evaluate_expansion_chern, recover_expansion

log = logging.getLogger(__name__)

EMBEDDED_CORPUS = "paper.thom"


class CorpusError(ValueError):
    def __init__(self, message: str, line: int | None = None, record: str | None = None):
        self.line = line
        self.record = record
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class ThomRecord:
    name: str
    codim: int
    expansion: SchurExpansion
    kappa: int | None = None
    family: str = "maps"
    display: str | None = None
    sources: tuple[str, ...] = ()
    line: int | None = None

    def validate(self) -> None:
        if not self.expansion:
            raise CorpusError(f"record {self.name} has an empty expansion", self.line, self.name)
        bad = [k for k in self.expansion if k.weight != self.codim]
        if bad:
            raise CorpusError(
                f"record {self.name}: partition {print_partition(bad[0])} has weight "
                f"{bad[0].weight}, codim is {self.codim}",
                self.line,
                self.name,
            )


def embedded_corpus_path() -> Path:
    return Path(str(resources.files("thompos") / "corpus" / EMBEDDED_CORPUS))


def read_corpus(text: str) -> list[ThomRecord]:
    """Parse every record block, duplicates included, without validation."""
    records: list[ThomRecord] = []
    current: dict | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition(" ")
        value = value.strip()
        if key == "record":
            if current is not None:
                raise CorpusError("'record' before 'end' of the previous record", lineno)
            if not value:
                raise CorpusError("record needs a name", lineno)
            current = {"name": value, "line": lineno}
            continue
        if current is None:
            raise CorpusError(f"{key!r} outside a record", lineno)
        if key == "end":
            records.append(_finish(current, lineno))
            current = None
        elif key in ("kappa", "codim"):
            try:
                current[key] = int(value)
            except ValueError:
                raise CorpusError(f"{key} must be an integer, got {value!r}", lineno) from None
        elif key in ("display", "family", "source"):
            current[key] = value
        elif key == "poly":
            try:
                current["expansion"] = parse_schur(value)
            except (ParseError, ValueError) as exc:
                raise CorpusError(f"bad poly: {exc}", lineno, current["name"]) from None
        else:
            raise CorpusError(f"unknown directive {key!r}", lineno)
    if current is not None:
        raise CorpusError(f"record {current['name']} is missing 'end'", current["line"])
    return records


def _finish(fields: dict, lineno: int) -> ThomRecord:
    name = fields["name"]
    for required in ("codim", "expansion"):
        if required not in fields:
            raise CorpusError(f"record {name} lacks {required}", lineno, name)
    family = fields.get("family", "maps")
    kappa = fields.get("kappa")
    if family == "functions" and kappa == -1:
        kappa = None
    return ThomRecord(
        name=name,
        codim=fields["codim"],
        expansion=fields["expansion"],
        kappa=kappa,
        family=family,
        display=fields.get("display"),
        sources=(fields["source"],) if "source" in fields else (),
        line=fields["line"],
    )


def collapse(records: Iterable[ThomRecord]) -> list[ThomRecord]:
    """Merge repeated names; differing expansions are an error."""
    merged: dict[str, ThomRecord] = {}
    for rec in records:
        seen = merged.get(rec.name)
        if seen is None:
            merged[rec.name] = rec
            continue
        if seen.expansion != rec.expansion or seen.codim != rec.codim:
            raise CorpusError(
                f"record {rec.name} repeated with a different expansion "
                f"(first at line {seen.line})",
                rec.line,
                rec.name,
            )
        log.info("record %s at line %s repeats line %s; collapsed", rec.name, rec.line, seen.line)
        merged[rec.name] = replace(seen, sources=seen.sources + rec.sources)
    return list(merged.values())


def load_corpus(path: str | Path | None = None) -> list[ThomRecord]:
    """Load, validate and de-duplicate a corpus file (the embedded one by default)."""
    path = embedded_corpus_path() if path is None else Path(path)
    records = collapse(read_corpus(path.read_text()))
    for rec in records:
        rec.validate()
    return records


@dataclass(frozen=True)
class CheckResult:
    record: str
    check: str
    passed: bool
    detail: str = ""

    def machine(self) -> str:
        return "\t".join((self.record, self.check, "PASS" if self.passed else "FAIL", self.detail))


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)
    sums: dict[str, int] = field(default_factory=dict)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @property
    def exit_status(self) -> int:
        return 1 if self.failures else 0

    @property
    def record_count(self) -> int:
        return len(self.sums)

    def summary(self) -> str:
        failed_records = sorted({c.record for c in self.failures})
        return (
            f"records={self.record_count} checks={len(self.checks)} "
            f"failed={len(self.failures)}"
            + (f" failing_records={','.join(failed_records)}" if failed_records else "")
        )

    def format_machine(self) -> str:
        lines = [c.machine() for c in self.checks]
        lines.append(self.summary())
        return "\n".join(lines)

    def format_text(self) -> str:
        lines = []
        by_record: dict[str, list[CheckResult]] = {}
        for c in self.checks:
            by_record.setdefault(c.record, []).append(c)
        width = max((len(name) for name in by_record), default=0)
        for name, checks in by_record.items():
            status = "ok  " if all(c.passed for c in checks) else "FAIL"
            parts = [f"{c.check}={'PASS' if c.passed else 'FAIL'}" for c in checks]
            bad = [f"{c.check}: {c.detail}" for c in checks if not c.passed]
            line = f"{status} {name:<{width}}  sum={self.sums[name]:<6} " + " ".join(parts)
            if bad:
                line += "  [" + "; ".join(bad) + "]"
            lines.append(line)
        lines.append(self.summary())
        return "\n".join(lines)


def check_record(record: ThomRecord) -> list[CheckResult]:
    """Positivity, homogeneity and rank-(codim, codim) round trip for one record."""
    name = record.name
    out = []
    verdict: PositivityVerdict = certify(record.expansion)
    out.append(CheckResult(name, "positivity", verdict.positive, str(verdict)))

    bad = [k for k in record.expansion if k.weight != record.codim]
    if bad:
        detail = f"weight {bad[0].weight} of {print_partition(bad[0])} != codim {record.codim}"
    else:
        detail = f"codim={record.codim} terms={len(record.expansion)}"
    out.append(CheckResult(name, "codim", not bad, detail))

    rank = record.codim
    image = evaluate_expansion_chern(record.expansion, rank, rank)
    e_side, f_side = recover_expansion(image, rank, rank)
    ok = e_side == record.expansion and f_side == record.expansion
    if ok:
        detail = f"ranks=({rank},{rank})"
    else:
        which = "E-side" if e_side != record.expansion else "F-side"
        detail = f"ranks=({rank},{rank}) {which} mismatch: {e_side if which == 'E-side' else f_side}"
    out.append(CheckResult(name, "roundtrip", ok, detail))
    return out


def verify_corpus(records: Sequence[ThomRecord], jobs: int = 1) -> VerificationReport:
    """Run :func:`check_record` on each record; report order follows input order."""
    records = list(records)
    if jobs > 1 and len(records) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_record, records))
    else:
        results = [check_record(r) for r in records]
    report = VerificationReport()
    for rec, checks in zip(records, results):
        report.checks.extend(checks)
        report.sums[rec.name] = rec.expansion.coefficient_sum()
    return report
