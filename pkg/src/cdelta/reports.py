"""Serialization, export, and the spectrum result cache.

Exports are byte-deterministic: fixed key order, no whitespace variance,
and timing columns zeroed unless explicitly requested, so repeated runs
with identical flags produce identical files.
"""

import csv
import hashlib
import io
import json
import os
import warnings

from .spectra import SpectrumReport

SCHEMA_VERSION = 1

RECORD_COLUMNS = ("theorem", "p", "n", "k", "c", "predicted", "observed",
                  "verdict", "ms")


# ---------------------------------------------------------------------------
# Spectrum reports
# ---------------------------------------------------------------------------

def spectrum_to_dict(report: SpectrumReport) -> dict:
    return {
        "field": {"p": report.p, "n": report.n, "modulus": list(report.modulus)},
        "function": report.function,
        "c": report.c,
        "delta": report.delta,
        "histogram": {str(k): report.histogram[k]
                      for k in sorted(report.histogram)},
        "witnesses": [[a, b] for a, b in report.witnesses],
    }


def spectrum_from_dict(d: dict) -> SpectrumReport:
    return SpectrumReport(
        p=d["field"]["p"], n=d["field"]["n"],
        modulus=tuple(d["field"]["modulus"]), function=d["function"],
        c=d["c"], delta=d["delta"],
        histogram={int(k): v for k, v in d["histogram"].items()},
        witnesses=tuple((a, b) for a, b in d["witnesses"]),
        a_range_note="a = 0 included" if d["c"] != 1 else "a != 0 only (c = 1)")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def spectra_json(reports) -> str:
    if isinstance(reports, SpectrumReport):
        return _dump(spectrum_to_dict(reports))
    return _dump([spectrum_to_dict(r) for r in reports])


def _flat_hist(hist: dict) -> str:
    return ";".join(f"{k}:{hist[k]}" for k in sorted(hist))


def spectra_csv(reports) -> str:
    if isinstance(reports, SpectrumReport):
        reports = [reports]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p", "n", "modulus", "function", "c", "delta", "histogram",
                "witnesses"])
    for r in reports:
        w.writerow([r.p, r.n, ",".join(str(c) for c in r.modulus),
                    json.dumps(r.function, separators=(",", ":")), r.c,
                    r.delta, _flat_hist(r.histogram),
                    "|".join(f"{a}:{b}" for a, b in r.witnesses)])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Verification records
# ---------------------------------------------------------------------------

def _record_row(rec, timings: bool):
    ms = round(rec.ms, 3) if timings else 0
    return [rec.theorem, rec.p, rec.n,
            "" if rec.k is None else rec.k,
            "" if rec.c is None else rec.c,
            rec.predicted, rec.observed, rec.verdict, ms]


def records_csv(records, timings: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RECORD_COLUMNS)
    for rec in records:
        w.writerow(_record_row(rec, timings))
    return buf.getvalue()


def records_json(records, timings: bool = False) -> str:
    rows = []
    for rec in records:
        rows.append({
            "theorem": rec.theorem, "p": rec.p, "n": rec.n, "k": rec.k,
            "c": rec.c, "family": rec.family, "predicted": rec.predicted,
            "observed": rec.observed, "verdict": rec.verdict,
            "ms": round(rec.ms, 3) if timings else 0, "note": rec.note,
        })
    return _dump({"schema": SCHEMA_VERSION, "records": rows})


def export(payload: str, destination=None) -> str:
    """Write an already-serialized payload; returns it for convenience."""
    if destination:
        with open(destination, "w") as fh:
            fh.write(payload)
    return payload


# ---------------------------------------------------------------------------
# Result cache
# ---------------------------------------------------------------------------

def cache_key(p: int, n: int, modulus, function: dict, c: int) -> str:
    """Digest of the canonical JSON of (p, n, modulus, function, c)."""
    blob = json.dumps(
        {"p": p, "n": n, "modulus": list(modulus), "function": function,
         "c": c},
        sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def cache_get_put(cache_dir, field, function_dict_, c: int,
                  compute) -> SpectrumReport:
    """Return the cached spectrum for the key, else compute, store, return.

    A corrupt cache entry triggers a warning, a recompute, and an
    overwrite.  With cache_dir None the compute path is always taken.
    """
    if not cache_dir:
        return compute()
    key = cache_key(field.p, field.n, field.modulus, function_dict_, c)
    path = os.path.join(cache_dir, f"{key}.json")
    if os.path.exists(path):
        try:
            with open(path) as fh:
                entry = json.load(fh)
            if entry.get("schema") == SCHEMA_VERSION and entry.get("key") == key:
                return spectrum_from_dict(entry["report"])
        except (json.JSONDecodeError, KeyError, TypeError, OSError) as exc:
            warnings.warn(f"corrupt cache entry {path}: {exc}; recomputing")
    report = compute()
    os.makedirs(cache_dir, exist_ok=True)
    with open(path, "w") as fh:
        fh.write(_dump({"schema": SCHEMA_VERSION, "key": key,
                        "report": spectrum_to_dict(report)}))
    return report
