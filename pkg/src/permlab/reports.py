"""CSV and metadata emission for experiment commands.

CSV bodies are a pure function of the experiment parameters and seed:
UTF-8, LF line endings, correlation-type values at 4 decimal places,
costs at full precision. Wall-clock details go only to metadata.json.
"""
from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from pathlib import Path


def _open_out(path: Path):
    path.parent.mkdir(parents=True, exist_ok=True)
    return open(path, "w", encoding="utf-8", newline="\n")


def write_matrix_csv(path, names, matrix, label: str = "distance"):
    with _open_out(Path(path)) as fh:
        fh.write(label + "," + ",".join(names) + "\n")
        for name, row in zip(names, matrix):
            fh.write(name + "," + ",".join(f"{v:.4f}" for v in row) + "\n")


def write_eigenvalue_csv(path, eigenvalues, proportions):
    cumulative = 0.0
    with _open_out(Path(path)) as fh:
        fh.write("pc,eigenvalue,proportion,cumulative\n")
        for i, (ev, pr) in enumerate(zip(eigenvalues, proportions), start=1):
            cumulative += pr
            fh.write(f"{i},{ev:.4f},{pr:.4f},{cumulative:.4f}\n")


def write_component_csv(path, names, matrix, label: str = "distance"):
    k = matrix.shape[1]
    with _open_out(Path(path)) as fh:
        fh.write(label + "," + ",".join(f"pc{j + 1}" for j in range(k)) + "\n")
        for name, row in zip(names, matrix):
            fh.write(name + "," + ",".join(f"{v:.4f}" for v in row) + "\n")


def write_fdc_csv(path, names, values):
    with _open_out(Path(path)) as fh:
        fh.write("distance,fdc\n")
        for name in names:
            fh.write(f"{name},{values[name]:.4f}\n")


def write_convergence_csv(path, checkpoints, series: dict):
    ops = list(series)
    with _open_out(Path(path)) as fh:
        fh.write("generation," + ",".join(ops) + "\n")
        for i, gen in enumerate(checkpoints):
            vals = ",".join(repr(float(series[op][i])) for op in ops)
            fh.write(f"{gen},{vals}\n")


@dataclass
class ExperimentReport:
    """Record of one command invocation: parameters, emitted tables, timing."""
    command: str
    params: dict
    tables: dict = field(default_factory=dict)
    started: float = field(default_factory=time.time)

    @property
    def experiment_id(self) -> str:
        blob = json.dumps({"command": self.command, "params": self.params},
                          sort_keys=True)
        return f"{self.command}-{hashlib.sha256(blob.encode()).hexdigest()[:12]}"

    def add_table(self, name: str, path) -> None:
        self.tables[name] = str(path)

    def write_metadata(self, out_dir) -> Path:
        path = Path(out_dir) / "metadata.json"
        payload = {
            "experiment_id": self.experiment_id,
            "command": self.command,
            "parameters": self.params,
            "tables": self.tables,
            "elapsed_seconds": round(time.time() - self.started, 3),
        }
        with _open_out(path) as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return path
