"""Census ingestion and the verification driver behind ``skeinlab verify``."""

from __future__ import annotations

import datetime as _dt
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from .determine import verify_determination
from .diagram import Diagram, diagram_stats
from .errors import DiagramTooLarge, ParseError, SkeinlabError
from .notation import parse_notation
from .polyring import LaurentPoly, _half_integer_twice, format_coef, tv_specialize
from .skein import cap_for, dubrovnik, homfly, jones
from .windows import check_morton, dubrovnik_window, homfly_window, jones_window

SCHEMA = "skeinlab.verification/1"
DEFAULT_A = (Fraction(1, 2), Fraction(1), Fraction(3, 2))
LOOP_FACTOR = LaurentPoly({1: 1, -1: 1})


@dataclass
class CensusEntry:
    name: str
    notation: str
    diagram: Diagram
    jones: LaurentPoly | None = None
    meta: dict = field(default_factory=dict)


def _entry(index: int, raw) -> CensusEntry:
    if not isinstance(raw, dict):
        raise ParseError(index, "?", TypeError("entry is not an object"))
    name = raw.get("name", f"#{index}")
    try:
        notation = raw["notation"]
        d = parse_notation(notation)
        pinned = LaurentPoly.parse(raw["jones"]) if raw.get("jones") is not None else None
    except (KeyError, ValueError, SkeinlabError) as exc:
        raise ParseError(index, name, exc) from exc
    meta = {k: v for k, v in raw.items() if k not in ("name", "notation", "jones")}
    return CensusEntry(name, notation, d, pinned, meta)


def parse_table(rows) -> list[CensusEntry]:
    if not isinstance(rows, list):
        raise ParseError(-1, "<table>", TypeError("a census table is a JSON array"))
    return [_entry(i, raw) for i, raw in enumerate(rows)]


def load_table(path) -> list[CensusEntry]:
    """Read a JSON array of ``{name, notation, jones?}`` objects.

    Missing files raise ``OSError``; a bad entry raises :class:`ParseError`
    carrying its index.
    """
    with open(path) as fh:
        try:
            rows = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(-1, str(path), exc) from exc
    return parse_table(rows)


def bundled_table(name: str = "census.json") -> list[CensusEntry]:
    with resources.files("skeinlab.data").joinpath(name).open() as fh:
        return parse_table(json.load(fh))


@dataclass(frozen=True)
class VerifyConfig:
    families: tuple[str, ...] = ("jones", "homfly", "dubrovnik")
    a_values: tuple[Fraction, ...] = DEFAULT_A
    jmax: int | None = None          # None means N + 10 per window
    caps: dict | None = None
    workers: int = 1

    def __post_init__(self):
        for fam in self.families:
            if fam not in ("jones", "homfly", "dubrovnik"):
                raise ValueError(f"unknown family {fam!r}")
        vals = []
        for a in self.a_values:
            _half_integer_twice(a)
            vals.append(Fraction(a))
        object.__setattr__(self, "a_values", tuple(vals))

    def cap(self, engine: str) -> int:
        return cap_for(engine, (self.caps or {}).get(engine))

    def to_json(self) -> dict:
        return {
            "families": list(self.families),
            "a_values": [format_coef(a) for a in self.a_values],
            "jmax": self.jmax,
            "caps": {e: self.cap(e) for e in ("bracket", "homfly", "dubrovnik")},
        }


def _check(checks: list, name: str, ok: bool, **detail) -> None:
    checks.append({"check": name, "ok": bool(ok), **detail})


def _jones_checks(e: CensusEntry, d: Diagram, st, checks: list) -> LaurentPoly:
    V = jones(d)
    if e.jones is not None:
        _check(checks, "jones_pinned", V == e.jones)
    lo, hi, _ = V.support()
    _check(checks, "jones_window_contains", jones_window(d).contains(V))
    _check(checks, "span_bound", Fraction(hi - lo, 2) <= st.c + st.g - 1,
           span=format_coef(Fraction(hi - lo, 2)), bound=st.c + st.g - 1)
    try:
        quotient = V.divide_exact(LOOP_FACTOR ** (st.g - 1))
        qlo, qhi, _ = quotient.support()
        _check(checks, "loop_divisibility", Fraction(qhi - qlo, 2) <= st.c,
               power=st.g - 1)
    except ArithmeticError:
        _check(checks, "loop_divisibility", False, power=st.g - 1)
    return V


def _verify_entry(args) -> dict:
    e, config = args
    d = e.diagram
    st = diagram_stats(d)
    out = {
        "name": e.name,
        "notation": e.notation,
        "stats": {"c": st.c, "c_plus": st.c_plus, "c_minus": st.c_minus, "w": st.w,
                  "g": st.g, "components": st.link_components, "s": st.s,
                  "murasugi_components": st.murasugi_components},
        "checks": [],
        "reports": [],
        "skipped": [],
        "errors": [],
    }
    checks = out["checks"]

    def guarded(label, fn):
        try:
            return fn()
        except DiagramTooLarge as exc:
            out["skipped"].append({"what": label, "reason": str(exc)})
        except Exception as exc:  # recorded, never aborts the batch
            out["errors"].append({"what": label, "error": f"{type(exc).__name__}: {exc}"})
        return None

    V = None
    if d.c <= config.cap("bracket"):
        V = guarded("jones", lambda: _jones_checks(e, d, st, checks))
    else:
        out["skipped"].append({"what": "jones", "reason": "bracket cap"})
    P = None
    if "homfly" in config.families and d.c <= config.cap("homfly"):
        P = guarded("homfly", lambda: homfly(d, cap=config.cap("homfly")))
        if P is not None:
            morton = check_morton(P, d)
            _check(checks, "morton", all(morton.values()), **morton)
            if V is not None:
                _check(checks, "a1_bridge", tv_specialize(P, 1) == V)
    DY = None
    if "dubrovnik" in config.families and d.c <= config.cap("dubrovnik"):
        DY = guarded("dubrovnik", lambda: dubrovnik(d, cap=config.cap("dubrovnik")))

    a_label = format_coef
    for fam in config.families:
        a_list = (None,) if fam == "jones" else config.a_values
        for a in a_list:
            if fam == "jones" and V is None or fam == "homfly" and P is None \
                    or fam == "dubrovnik" and DY is None:
                continue
            rep = guarded(f"{fam}@{a}", lambda: verify_determination(
                d, fam, a, config.jmax, name=e.name))
            if rep is not None:
                out["reports"].append(rep.to_json())
            if fam == "homfly":
                w = homfly_window(d, a).on("fine")
                _check(checks, "homfly_window_contains", w.contains(tv_specialize(P, a)),
                       a=a_label(a))
            if fam == "dubrovnik":
                D, Y = DY
                wd = dubrovnik_window(d, a, "D").on("fine")
                wy = dubrovnik_window(d, a, "Y").on("fine")
                _check(checks, "dubrovnik_window_contains_D",
                       wd.contains(tv_specialize(D, a)), a=a_label(a))
                _check(checks, "dubrovnik_window_contains_Y",
                       wy.contains(tv_specialize(Y, a)), a=a_label(a))
    out["ok"] = (not out["errors"] and all(c["ok"] for c in checks)
                 and all(r["determined"] for r in out["reports"]))
    return out


def _summary(results: list[dict]) -> dict:
    rates: dict[str, dict] = {}
    for r in results:
        for rep in r["reports"]:
            key = rep["family"] if rep["a"] is None else f"{rep['family']}@{rep['a']}"
            slot = rates.setdefault(key, {"runs": 0, "determined": 0, "coarse_ok": 0,
                                          "fine_ok": 0})
            slot["runs"] += 1
            slot["determined"] += rep["determined"]
            slot["coarse_ok"] += bool(rep["coarse_ok"])
            slot["fine_ok"] += bool(rep["fine_ok"])
    failed_checks: dict[str, int] = {}
    for r in results:
        for c in r["checks"]:
            if not c["ok"]:
                failed_checks[c["check"]] = failed_checks.get(c["check"], 0) + 1
    return {
        "entries": len(results),
        "failed_entries": [r["name"] for r in results if not r["ok"]],
        "errors": sum(len(r["errors"]) for r in results),
        "skipped": sum(len(r["skipped"]) for r in results),
        "failed_checks": failed_checks,
        "families": dict(sorted(rates.items())),
    }


def run_verification(entries: Sequence[CensusEntry], config: VerifyConfig | None = None,
                     timestamp: bool = True) -> dict:
    """Verify every entry; the report is deterministic apart from ``generated``."""
    config = config or VerifyConfig()
    jobs = [(e, config) for e in entries]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_verify_entry, jobs, chunksize=4))
    else:
        results = [_verify_entry(j) for j in jobs]
    summary = _summary(results)
    report = {
        "schema": SCHEMA,
        "generated": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
        if timestamp else None,
        "config": config.to_json(),
        "summary": summary,
        "ok": all(r["ok"] for r in results),
        "entries": results,
    }
    return report


def exit_status(report: dict) -> int:
    return 0 if report["ok"] else 1


def dumps(report: dict) -> str:
    return json.dumps(report, indent=1, sort_keys=True) + "\n"


def write_report(report: dict, path) -> None:
    Path(path).write_text(dumps(report))


def format_summary(report: dict) -> str:
    """Fixed-width table: one row per family (and a), then failures."""
    s = report["summary"]
    lines = [f"{'family':<16}{'runs':>6}{'determined':>12}{'coarse ok':>11}{'fine ok':>9}"]
    for key, r in s["families"].items():
        lines.append(f"{key:<16}{r['runs']:>6}{r['determined']:>12}"
                     f"{r['coarse_ok']:>11}{r['fine_ok']:>9}")
    lines.append(f"entries {s['entries']}, errors {s['errors']}, skipped {s['skipped']}")
    for name, n in sorted(s["failed_checks"].items()):
        lines.append(f"FAILED check {name}: {n}")
    for name in s["failed_entries"]:
        lines.append(f"FAILED entry {name}")
    lines.append("OK" if report["ok"] else "VERIFICATION FAILED")
    return "\n".join(lines)
