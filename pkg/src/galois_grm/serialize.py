"""JSON / CSV emission of generator matrices and radical bases.

Field elements are written as their integer encodings, moduli as
coefficient arrays (lowest degree first). Output is byte-for-byte
deterministic: keys are sorted and row order is fixed.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .ff import FiniteField
from .grm import GrmContext, generator_matrix
from .group_algebra import jennings_basis
from .linalg import Subspace, subspace_from_spanning


def genmatrix_payload(ctx: GrmContext, nu: int) -> dict:
    """K_nu rows; column 0 is X^0, column i + 1 is X^{g_i}."""
    rows = generator_matrix(ctx, nu)
    return {
        "p": ctx.p,
        "r": ctx.r,
        "m": ctx.m,
        "nu": nu,
        "ordering": ctx.ordering.kind,
        "modulus_h": list(ctx.ring.h),
        "modulus_field": list(ctx.field.modulus),
        "modulus_ext": list(ctx.ext.modulus),
        "gamma": ctx.gamma.value,
        "columns": [0, *ctx.order_map],
        "rows": rows.tolist(),
    }


def radical_payload(ctx: GrmContext, t: int) -> dict:
    """Jennings vectors V_i with weight >= t; columns in group-index order."""
    alg = ctx.algebra
    rows = [v.coeffs.tolist() for v in jennings_basis(alg, t)]
    return {
        "p": ctx.p,
        "r": ctx.r,
        "m": ctx.m,
        "t": t,
        "modulus_h": list(ctx.ring.h),
        "modulus_field": list(ctx.field.modulus),
        "columns": list(range(alg.size)),
        "rows": rows,
    }


def header(payload: dict) -> list[str]:
    if "nu" in payload:
        return ["X^0"] + [f"g_{i}" for i in range(len(payload["columns"]) - 1)]
    return [f"X^{g}" for g in payload["columns"]]


def dumps(payload: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header(payload))
        writer.writerows(payload["rows"])
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def read_genmatrix(path: str | Path) -> tuple[dict, Subspace]:
    """Load a JSON generator matrix and return it with its canonical row space
    (in the file's column order)."""
    payload = json.loads(Path(path).read_text())
    field = FiniteField(payload["p"], payload["r"], payload["modulus_field"])
    ncols = len(payload["columns"])
    rows = np.array(payload["rows"], dtype=np.int64).reshape(-1, ncols)
    return payload, subspace_from_spanning(field, rows, ncols)


def read_csv_matrix(path: str | Path) -> np.ndarray:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        next(reader)
        return np.array([[int(x) for x in row] for row in reader], dtype=np.int64)
