"""Structured (JSON) reports, the CSV census table and the strategy grammar.

Strategy specs::

    cs:N  lcs:N  csl:N  csr:N
    inductive:right:[2,4,1,3]   inductive:left:[...]
    [[1],[2,1],[2,3,1]]         explicit component lists
    path/to/file                a file holding explicit component lists

Documents are emitted with a fixed key order and no timing fields, so equal
inputs always produce byte-identical output.
"""
from __future__ import annotations

import csv
import io
import json
import re
from pathlib import Path
from typing import Any, Iterable

from .construct import (
    ConstructedOffender,
    cs_strategy,
    csl_strategy,
    csr_strategy,
    inductive_strategy,
    lcs_strategy,
)
from .game import (
    GuessRecord,
    Outcome,
    OutcomeKind,
    RepetitionEvent,
    Strategy,
    StrategyError,
    Transcript,
)
from .oracle import OFFENDER_DEFINITION, GuessDistribution, OffenderCensus, TheoremReport
from .perm import parse_permutation

_NAMED = {"cs": cs_strategy, "lcs": lcs_strategy, "csl": csl_strategy, "csr": csr_strategy}
_NAMED_RE = re.compile(r"^(cs|lcs|csl|csr):(\d+)$")
_INDUCTIVE_RE = re.compile(r"^inductive:(right|left):(\[.*\])$")


class SpecError(ValueError):
    """Raised for strategy specs that do not match the grammar."""


def parse_strategy(spec: str) -> Strategy:
    text = spec.strip()
    m = _NAMED_RE.match(text)
    if m:
        n = int(m.group(2))
        if n < 1 or (m.group(1) in ("csl", "csr") and n < 2):
            raise SpecError(f"{text}: length too small")
        return _NAMED[m.group(1)](n)
    m = _INDUCTIVE_RE.match(text.replace(" ", ""))
    if m:
        try:
            return inductive_strategy(parse_permutation(m.group(2)), m.group(1))
        except (ValueError, StrategyError) as exc:
            raise SpecError(f"{text}: {exc}") from None
    if text.startswith("["):
        return _strategy_from_literal(text, label=None)
    path = Path(text)
    if path.is_file():
        return _strategy_from_literal(path.read_text(), label=path.stem)
    raise SpecError(f"unrecognised strategy spec {spec!r}")


def _strategy_from_literal(text: str, label: str | None) -> Strategy:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"cannot parse component lists: {exc}") from None
    if isinstance(data, dict):
        label = data.get("label", label)
        data = data.get("components")
    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        raise SpecError("expected a list of component lists")
    return Strategy.from_lists(data, label)


def strategy_to_dict(strategy: Strategy) -> dict[str, Any]:
    return {"label": strategy.label, "components": [list(c) for c in strategy.components]}


def strategy_from_dict(data: dict[str, Any]) -> Strategy:
    return Strategy.from_lists(data["components"], data.get("label"))


def transcript_to_dict(t: Transcript) -> dict[str, Any]:
    return {
        "secret": list(t.secret),
        "strategy": strategy_to_dict(t.strategy),
        "records": [
            {
                "turn": r.turn,
                "guess": list(r.guess),
                "correct_positions": sorted(r.correct_positions),
            }
            for r in t.records
        ],
        "outcome": {"type": t.outcome.kind.value, "turn": t.outcome.turn},
        "repetitions": [
            {"position": e.position, "value": e.value, "turns": list(e.turns), "infinite": e.infinite}
            for e in t.repetitions
        ],
    }


def transcript_from_dict(data: dict[str, Any]) -> Transcript:
    return Transcript(
        secret=tuple(data["secret"]),
        strategy=strategy_from_dict(data["strategy"]),
        records=tuple(
            GuessRecord(r["turn"], tuple(r["guess"]), frozenset(r["correct_positions"]))
            for r in data["records"]
        ),
        outcome=Outcome(OutcomeKind(data["outcome"]["type"]), data["outcome"]["turn"]),
        repetitions=tuple(
            RepetitionEvent(e["position"], e["value"], tuple(e["turns"]), bool(e.get("infinite", False)))
            for e in data["repetitions"]
        ),
    )


def offender_to_dict(c: ConstructedOffender) -> dict[str, Any]:
    return {
        "omega": list(c.omega),
        "case": {"tag": c.case.tag.value, "detail": c.case.detail},
        "evidence": transcript_to_dict(c.evidence),
    }


def census_to_dict(c: OffenderCensus) -> dict[str, Any]:
    out: dict[str, Any] = {
        "strategy": strategy_to_dict(c.strategy),
        "n": c.n,
        "offender_definition": OFFENDER_DEFINITION,
        "counts": dict(c.counts),
        "total_offenders": c.total_offenders,
    }
    if c.offenders is not None:
        out["offenders"] = [{"secret": list(s), "verdict": v.value} for s, v in c.offenders]
    return out


def theorem_report_to_dict(r: TheoremReport) -> dict[str, Any]:
    return {
        "n": r.n,
        "strategies_checked": r.strategies_checked,
        "holds": r.holds,
        "failures": [
            {
                "strategy": strategy_to_dict(f.strategy),
                "omega": list(f.omega) if f.omega is not None else None,
                "verdict": f.verdict,
            }
            for f in r.failures
        ],
        "cs_exceptions": dict(r.cs_exceptions),
        "case_counts": dict(r.case_counts),
    }


def distribution_to_dict(d: GuessDistribution) -> dict[str, Any]:
    return {"histogram": {str(k): v for k, v in d.histogram.items()}, "loops": d.loops}


def dumps(document: Any) -> str:
    return json.dumps(document, indent=2) + "\n"


CENSUS_COLUMNS = ("label", "n", "clean", "repeating", "looping")


def census_table(rows: Iterable[OffenderCensus]) -> str:
    """One CSV row per strategy: label, n and the three verdict counts."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CENSUS_COLUMNS)
    for c in rows:
        writer.writerow(
            [c.strategy.label or str(c.strategy), c.n, c.counts["clean"], c.counts["repeating"], c.counts["looping"]]
        )
    return buf.getvalue()
