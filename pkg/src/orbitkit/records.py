"""Serialization: TSV tables, DOT diagrams, JSON lines, case files, manifests, cache."""

import hashlib
import json
import os
from pathlib import Path

import numpy as np
import yaml

from . import __version__, liecore
from .errors import OrbitkitError

FORMAT_VERSION = 1
CLASSIFY_COLUMNS = ("label", "dimension", "centralizer", "noticed_rule", "noticed_oracle",
                    "centralizer_compact", "reference_noticed")
WAVEFRONT_COLUMNS = ("label", "dimension", "coefficient", "centralizer_compact_mod_center")
FOURIER_COLUMNS = ("index", "quadrature_re", "quadrature_im", "closed_form_re",
                   "closed_form_im", "abs_error")


class CaseError(OrbitkitError):
    """Malformed or unsupported case file."""


def fmt(x):
    if isinstance(x, bool) or x is None:
        return {True: "yes", False: "no", None: "-"}[x]
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".12g")
    return str(x)


def tsv(columns, rows):
    lines = ["\t".join(columns)]
    lines += ["\t".join(fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def classify_tsv(classes):
    rows = [(c.label, c.dimension, c.centralizer, c.noticed, c.noticed_oracle,
             c.centralizer_compact, c.reference_noticed) for c in classes]
    return tsv(CLASSIFY_COLUMNS, rows)


def closure_dot(name, classes, covers):
    out = [f'digraph "{name}" {{', "  rankdir=TB;"]
    for c in classes:
        shape = "box" if c.noticed_oracle else "ellipse"
        out.append(f'  "{c.label}" [label="{c.label}\\ndim {c.dimension}", shape={shape}];')
    for upper, lower in covers:
        out.append(f'  "{upper}" -> "{lower}";')
    out.append("}")
    return "\n".join(out) + "\n"


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (np.floating, float)):
        x = float(x)
        return x if np.isfinite(x) else str(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    return x


def jsonl(records):
    return "".join(json.dumps(_jsonable(r), sort_keys=True) + "\n" for r in records)


def digest(config):
    text = json.dumps(_jsonable(config), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


# --- case files ------------------------------------------------------------------

def _entry(v):
    return complex(v.replace(" ", "")) if isinstance(v, str) else v


def parse_matrix(g, value):
    """Element from a nested list (complex entries as strings like ``"0.5j"``) or ``{coords: [...]}``."""
    try:
        if isinstance(value, dict) and "coords" in value:
            c = np.asarray(value["coords"], dtype=float)
            if c.shape != (g.dim,):
                raise CaseError(f"expected {g.dim} coordinates, got {c.shape}")
            return g.element(c)
        if isinstance(value, dict) and "matrix" in value:
            value = value["matrix"]
        m = np.array([[_entry(v) for v in row] for row in value])
        if m.shape != (g.n, g.n):
            raise CaseError(f"expected a {g.n}x{g.n} matrix, got {m.shape}")
        if not g.complex_entries:
            if np.any(np.abs(np.imag(m)) > 0):
                raise CaseError("complex entry in a real algebra")
            m = m.real.astype(float)
        return g.from_matrix(m)
    except (TypeError, ValueError) as exc:
        raise CaseError(f"bad matrix {value!r}: {exc}") from exc


def load_case(path):
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text())
    except (OSError, yaml.YAMLError) as exc:
        raise CaseError(f"cannot read case file {path}: {exc}") from exc
    if not isinstance(data, dict) or "algebra" not in data:
        raise CaseError("case file must be a mapping with an 'algebra' key")
    return data


def case_algebra(data):
    return liecore.make_algebra(data["algebra"])


def case_catalog(g, data):
    from . import slicegeom
    if "catalog" not in data:
        return slicegeom.nilpotent_catalog(g)
    out = []
    for item in data["catalog"]:
        if not isinstance(item, dict) or "label" not in item or "matrix" not in item:
            raise CaseError("catalog entries need 'label' and 'matrix'")
        x = parse_matrix(g, item["matrix"])
        if not liecore.is_nilpotent(x):
            raise CaseError(f"catalog entry {item['label']} is not nilpotent")
        out.append(slicegeom.catalog_entry(item["label"], x))
    return out


# --- manifest and cache --------------------------------------------------------------

def manifest(command, config, artifacts, wall_time, exit_code, cache_hit, tol, box, grid):
    return {
        "format_version": FORMAT_VERSION,
        "version": __version__,
        "command": command,
        "config_digest": digest(config),
        "tolerances": tol,
        "box_radius": box,
        "grid": grid,
        "seedless": True,
        "wall_time_s": round(wall_time, 6),
        "artifacts": sorted(str(a) for a in artifacts),
        "exit_code": exit_code,
        "cache_hit": cache_hit,
    }


def cache_dir(flag):
    d = flag or os.environ.get("ORBITKIT_CACHE")
    return Path(d) if d else None


def cache_load(directory, key):
    if directory is None:
        return None
    f = directory / f"{key}.json"
    if not f.exists():
        return None
    try:
        return json.loads(f.read_text())
    except (OSError, json.JSONDecodeError):
        return None


def cache_store(directory, key, payload):
    if directory is None:
        return
    directory.mkdir(parents=True, exist_ok=True)
    tmp = directory / f".{key}.tmp"
    tmp.write_text(json.dumps(payload, sort_keys=True))
    tmp.replace(directory / f"{key}.json")
