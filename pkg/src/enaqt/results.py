"""Machine-readable emission and re-ingestion of sweep results.

CSV files carry one comment line (tool version and config hash), a header
row, and one data row per grid point sorted by dephasing rate:

    gamma_deph, j_p, j_q, delta_n, vacuum, n_1, ..., n_L

Floats are written with 17 significant digits, so re-parsing reproduces
the binary values exactly.  JSON files mirror the same columns and add the
configuration echo and the classification block; emitting and re-ingesting
a JSON file is lossless.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict

import numpy as np

from ._version import __version__
from .observables import SweepClassification, SweepCurve
from .sweep import SweepConfig, config_to_dict


def config_hash(config: dict | None) -> str:
    payload = json.dumps(config or {}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:12]


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def csv_header(n_sites: int) -> list[str]:
    return ["gamma_deph", "j_p", "j_q", "delta_n", "vacuum"] + [
        f"n_{i}" for i in range(1, n_sites + 1)
    ]


def emit_results(
    curve: SweepCurve,
    classification: SweepClassification,
    fmt: str,
    path,
    config: SweepConfig | dict | None = None,
) -> None:
    """Write a completed sweep to `path` as CSV or JSON."""
    if isinstance(config, SweepConfig):
        config = config_to_dict(config)
    if fmt == "csv":
        _emit_csv(curve, path, config)
    elif fmt == "json":
        _emit_json(curve, classification, path, config)
    else:
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")


def _emit_csv(curve: SweepCurve, path, config: dict | None) -> None:
    n_sites = curve.occupations.shape[1]
    order = np.argsort(curve.gamma_grid)
    lines = [f"# enaqt {__version__} config={config_hash(config)}"]
    lines.append(",".join(csv_header(n_sites)))
    for k in order:
        row = [
            curve.gamma_grid[k],
            curve.j_p[k],
            curve.j_q[k],
            curve.delta_n[k],
            curve.vacuum[k],
            *curve.occupations[k],
        ]
        lines.append(",".join(_fmt(x) for x in row))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def _emit_json(
    curve: SweepCurve,
    classification: SweepClassification,
    path,
    config: dict | None,
) -> None:
    doc = {
        "tool": "enaqt",
        "version": __version__,
        "config_hash": config_hash(config),
        "config": config or {},
        "classification": asdict(classification),
        "curve": {
            "gamma_deph": curve.gamma_grid.tolist(),
            "j_p": curve.j_p.tolist(),
            "j_q": curve.j_q.tolist(),
            "delta_n": curve.delta_n.tolist(),
            "vacuum": curve.vacuum.tolist(),
            "occupations": curve.occupations.tolist(),
        },
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def read_results_json(path) -> tuple[SweepCurve, SweepClassification, dict]:
    """Re-ingest an emitted JSON file; bit-exact inverse of emit_results."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    c = doc["curve"]
    curve = SweepCurve(
        gamma_grid=c["gamma_deph"],
        j_p=c["j_p"],
        j_q=c["j_q"],
        delta_n=c["delta_n"],
        vacuum=c["vacuum"],
        occupations=c["occupations"],
    )
    cls = SweepClassification(**doc["classification"])
    return curve, cls, doc.get("config", {})


def read_results_csv(path) -> SweepCurve:
    """Parse an emitted CSV file back into a SweepCurve."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or line.startswith("gamma_deph"):
                continue
            rows.append([float(x) for x in line.split(",")])
    data = np.array(rows)
    return SweepCurve(
        gamma_grid=data[:, 0],
        j_p=data[:, 1],
        j_q=data[:, 2],
        delta_n=data[:, 3],
        vacuum=data[:, 4],
        occupations=data[:, 5:],
    )
