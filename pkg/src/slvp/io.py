"""File output and the flat key-value config format.

One diagnostics CSV drives all the time-series plots, snapshots are
plain text grids any tool can read, and the manifest echoes the full
configuration so every output directory is reproducible.
"""
import os
from dataclasses import fields as dc_fields

from .core import RunConfig
from .diagnostics import DiagnosticsRecord

_BOOL_KEYS = {"reduced_prediction"}
_INT_KEYS = {"n_x", "n_v", "order", "interp_order"}
_STR_KEYS = {"problem", "out_dir"}


def parse_config_text(text):
    """key = value lines (# comments allowed) into a RunConfig kwargs dict."""
    known = {f.name for f in dc_fields(RunConfig)}
    out = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {ln}: expected key = value, got {raw!r}")
        key, val = (part.strip() for part in line.split("=", 1))
        if key not in known:
            raise ValueError(f"line {ln}: unknown config key {key!r}")
        out[key] = _parse_value(key, val)
    return out


def _parse_value(key, val):
    if key in _STR_KEYS:
        return val
    if key in _BOOL_KEYS:
        if val.lower() in ("1", "true", "yes", "on"):
            return True
        if val.lower() in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"bad boolean for {key}: {val!r}")
    if key in _INT_KEYS:
        return int(val)
    if key == "snapshot_times":
        return tuple(float(tok) for tok in val.split(",") if tok.strip())
    return float(val)


def load_config(path, **overrides):
    try:
        with open(path) as fh:
            kwargs = parse_config_text(fh.read())
    except OSError as exc:
        raise OSError(f"cannot read config {path}: {exc}") from exc
    kwargs.update(overrides)
    return RunConfig(**kwargs)


def config_lines(config):
    lines = []
    for f in dc_fields(config):
        val = getattr(config, f.name)
        if f.name == "snapshot_times":
            val = ",".join(f"{t:.17g}" for t in val)
        elif isinstance(val, bool):
            val = "true" if val else "false"
        elif isinstance(val, float):
            val = f"{val:.17g}"
        elif val is None:
            val = ""
        lines.append(f"{f.name} = {val}")
    return lines


def write_csv(path, records):
    try:
        with open(path, "w") as fh:
            fh.write(",".join(DiagnosticsRecord.CSV_COLUMNS) + "\n")
            for rec in records:
                fh.write(",".join(f"{v:.17g}" for v in rec.as_row()) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write diagnostics {path}: {exc}") from exc


def read_csv(path):
    """Diagnostics CSV back into a list of DiagnosticsRecord."""
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        if tuple(header) != DiagnosticsRecord.CSV_COLUMNS:
            raise ValueError(f"{path}: unexpected columns {header}")
        return [DiagnosticsRecord(*(float(tok) for tok in line.split(",")))
                for line in fh if line.strip()]


def write_snapshot(path, f, grid):
    try:
        with open(path, "w") as fh:
            fh.write(f"# n_x={grid.n_x} n_v={grid.n_v} "
                     f"x_lo={grid.x_lo:.17g} x_hi={grid.x_hi:.17g} "
                     f"v_max={grid.v_max:.17g} t={f.time:.17g}\n")
            for row in f.values:
                fh.write(" ".join(f"{v:.17g}" for v in row) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write snapshot {path}: {exc}") from exc


def emit_outputs(records, snapshots, config, grid, out_dir=None):
    """Write diagnostics.csv, snapshot grids and the run manifest.

    Returns the paths written.  Contents are deterministic for a fixed
    configuration.
    """
    out_dir = out_dir or config.out_dir or "."
    os.makedirs(out_dir, exist_ok=True)
    paths = []

    csv_path = os.path.join(out_dir, "diagnostics.csv")
    write_csv(csv_path, records)
    paths.append(csv_path)

    for t, f in snapshots:
        snap_path = os.path.join(out_dir, f"snapshot_t{t:.6g}.txt")
        write_snapshot(snap_path, f, grid)
        paths.append(snap_path)

    manifest = os.path.join(out_dir, "manifest.txt")
    try:
        with open(manifest, "w") as fh:
            fh.write("\n".join(config_lines(config)) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write manifest {manifest}: {exc}") from exc
    paths.append(manifest)
    return paths
