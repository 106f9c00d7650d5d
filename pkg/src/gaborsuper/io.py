"""JSON and CSV formats for signals, coefficients, weights and operators.

Complex numbers are stored as ``[re, im]`` pairs throughout.
"""

import csv
import io as _io
import json

import numpy as np

from .amalgam import make_weight
from .errors import DimensionError
from .gabor import GaborCoefficients, GaborLattice
from .shiftalg import ShiftOperator


def _pairs(z):
    z = np.asarray(z, dtype=complex)
    return np.stack([z.real, z.imag], axis=-1).tolist()


def _complex(pairs):
    arr = np.asarray(pairs, dtype=float)
    if arr.shape[-1] != 2:
        raise ValueError("complex values must be [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def signal_to_json(f):
    f = np.asarray(f, dtype=complex)
    if f.ndim == 1:
        f = f[:, None]
    return {"L": f.shape[0], "n": f.shape[1], "data": _pairs(f)}


def signal_from_json(obj):
    L, n = int(obj["L"]), int(obj["n"])
    data = _complex(obj["data"]).reshape(-1, n) if L else np.zeros((0, n))
    if data.shape != (L, n):
        raise DimensionError(f"signal data has shape {data.shape}, header says {(L, n)}")
    return data


def coeffs_to_json(coeffs):
    lat = coeffs.lattice
    return {"a": lat.a, "b": lat.b, "L": lat.L, "c": _pairs(coeffs.c)}


def coeffs_from_json(obj):
    lat = GaborLattice(int(obj["a"]), int(obj["b"]), int(obj["L"]))
    c = _complex(obj["c"]).reshape(lat.ntime, lat.nfreq)
    return GaborCoefficients(lat, c)


def weight_to_json(w):
    out = {"L": w.L, "kind": w.kind}
    if w.kind == "polynomial":
        out["s"] = w.s
    if w.kind == "custom":
        out["values"] = w.values.tolist()
    return out


def weight_from_json(obj):
    return make_weight(obj["kind"], int(obj["L"]), s=obj.get("s"), values=obj.get("values"))


def correlations_to_json(fam):
    lat = fam.lattice
    return {"a": lat.a, "b": lat.b, "L": lat.L, "G": _pairs(fam.G)}


def janssen_to_json(table):
    lat = table.lattice
    return {"a": lat.a, "b": lat.b, "L": lat.L, "B": _pairs(table.B)}


def shiftop_to_json(A):
    terms = [{"x": int(x), "symbol": _pairs(m)} for x, m in sorted(A.terms.items())]
    return {"L": A.L, "n": A.n, "terms": terms}


def shiftop_from_json(obj):
    terms = {int(t["x"]): _complex(t["symbol"]) for t in obj["terms"]}
    if "L" in obj:
        L, n = int(obj["L"]), int(obj["n"])
    else:
        first = next(iter(terms.values()))
        L, n = first.shape[0], first.shape[1]
    return ShiftOperator(L, n, terms)


def rows_to_csv(header, rows):
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(v)) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def dumps(obj):
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"
