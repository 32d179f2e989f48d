"""JSON forms for matrices, families, observables and reports.

Complex numbers are written as ``[re, im]`` pairs. Matrices are row-major::

    {"rows": 2, "cols": 2, "entries": [[1, 0], [0, 0], [0, 0], [0, 0]]}

Families list the ``d`` matrices of each explicit site::

    {"d": 2, "m": 2, "tail": "repeat_last", "sites": [{"matrices": [...]}, ...]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from .conditions import ConditionReport
from .errors import FormatError
from .linalg import as_matrix
from .mps import TAILS, MPSFamily
from .state import DensityMatrix, EvaluationReport, LocalObservable


def complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def complex_from_json(v: Any) -> complex:
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    if not (isinstance(v, list) and len(v) == 2 and all(isinstance(x, (int, float)) for x in v)):
        raise FormatError(f"expected a number or an [re, im] pair, got {v!r}")
    return complex(v[0], v[1])


def matrix_to_json(m: ArrayLike) -> dict[str, Any]:
    a = as_matrix(m)
    return {"rows": a.shape[0], "cols": a.shape[1], "entries": [complex_to_json(z) for z in a.reshape(-1)]}


def matrix_from_json(obj: Any) -> np.ndarray:
    try:
        rows, cols, entries = int(obj["rows"]), int(obj["cols"]), obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed matrix: {exc}") from exc
    if rows < 1 or cols < 1 or len(entries) != rows * cols:
        raise FormatError(f"matrix of {rows}x{cols} has {len(entries)} entries")
    return np.array([complex_from_json(v) for v in entries], dtype=np.complex128).reshape(rows, cols)


def family_to_json(family: MPSFamily) -> dict[str, Any]:
    return {
        "d": family.d,
        "m": family.m,
        "tail": family.tail,
        "sites": [{"matrices": [matrix_to_json(a) for a in s]} for s in family.sites],
    }


def family_from_json(obj: Any) -> MPSFamily:
    try:
        d, m, tail, sites = int(obj["d"]), int(obj["m"]), obj.get("tail", "repeat_last"), obj["sites"]
        mats = [[matrix_from_json(a) for a in s["matrices"]] for s in sites]
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        raise FormatError(f"malformed family: {exc}") from exc
    if tail not in TAILS:
        raise FormatError(f"tail must be one of {TAILS}, got {tail!r}")
    if not mats:
        raise FormatError("family has no sites")
    for n, s in enumerate(mats, start=1):
        if len(s) != d or any(a.shape != (m, m) for a in s):
            raise FormatError(f"site {n} must hold {d} matrices of shape ({m}, {m})")
    return MPSFamily.from_matrices(mats, tail)


def observable_to_json(x: LocalObservable) -> dict[str, Any]:
    if x.form == "product":
        return {"form": "product", "n_sites": x.n_sites, "factors": [matrix_to_json(f) for f in x.factors]}
    return {"form": "dense", "n_sites": x.n_sites, "matrix": matrix_to_json(x.matrix)}


def observable_from_json(obj: Any) -> LocalObservable:
    try:
        form, n = obj["form"], int(obj["n_sites"])
        if form == "product":
            x = LocalObservable.product([matrix_from_json(f) for f in obj["factors"]])
            if x.n_sites != n:
                raise FormatError(f"n_sites={n} but {x.n_sites} factors given")
            return x
        if form == "dense":
            return LocalObservable.dense(matrix_from_json(obj["matrix"]), n)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise FormatError(f"malformed observable: {exc}") from exc
    raise FormatError(f"unknown observable form {form!r}")


def report_to_json(report: ConditionReport) -> dict[str, Any]:
    out: dict[str, Any] = {
        "condition": report.condition,
        "pass": report.passed,
        "tolerance": report.tolerance,
        "sites": list(report.checked_sites),
        "residuals": list(report.residuals),
        "notes": report.notes,
    }
    if report.values:
        out["values"] = [complex_to_json(v) for v in report.values]
    return out


def evaluation_to_json(report: EvaluationReport, timing: bool = False) -> dict[str, Any]:
    """Evaluation report; ``elapsed_ms`` is included only when ``timing`` is set."""
    out: dict[str, Any] = {"value": complex_to_json(report.value), "method": report.method, "n_sites": report.n_sites}
    if timing:
        out["elapsed_ms"] = report.elapsed * 1e3
    return out


def density_to_json(rho: DensityMatrix) -> dict[str, Any]:
    return {"n_sites": rho.n_sites, "d": rho.d, "matrix": matrix_to_json(rho.matrix)}


def load_json(path: str | Path) -> Any:
    """Read a JSON file; missing files and syntax errors become :class:`FormatError`."""
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc


def load_family(path: str | Path) -> MPSFamily:
    return family_from_json(load_json(path))


def load_observable(path: str | Path) -> LocalObservable:
    return observable_from_json(load_json(path))


def dumps(obj: Any, pretty: bool = False) -> str:
    """Serialize with sorted keys; floats use the shortest round-trip repr."""
    return json.dumps(obj, indent=2 if pretty else None, sort_keys=True)
