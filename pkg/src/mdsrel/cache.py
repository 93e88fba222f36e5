"""Disk cache for the per-code tables, as decimal-integer CSV files.

The cache directory comes from the MDSREL_CACHE environment variable (or
an explicit path); without one, tables are computed in-process only.
Files carry a `# mdsrel-table v1` header and are keyed by (n, k, q, t),
so a cache can be shared between runs and machines.
"""
from __future__ import annotations

import csv
import os
from pathlib import Path

from .enumerator import CodeParams, IrweTable
from .sphere import SphereCell, build_sphere_table

HEADER = "# mdsrel-table v1"


def cache_dir_from_env(explicit: str | None = None) -> Path | None:
    path = explicit or os.environ.get("MDSREL_CACHE")
    return Path(path) if path else None


def _irwe_path(root: Path, p: CodeParams) -> Path:
    return root / f"irwe_n{p.n}_k{p.k}_q{p.q}.csv"


def _sphere_path(root: Path, p: CodeParams) -> Path:
    return root / f"sphere_n{p.n}_k{p.k}_q{p.q}_t{p.t}.csv"


def save_irwe(root: Path, table: IrweTable) -> None:
    root.mkdir(parents=True, exist_ok=True)
    p = table.params
    with open(_irwe_path(root, p), "w", newline="") as fh:
        fh.write(f"{HEADER}\n# params n={p.n} k={p.k} q={p.q}\n")
        w = csv.writer(fh)
        w.writerow(["i", "j", "A_ij"])
        for i in range(p.k + 1):
            for j in range(p.n - p.k + 1):
                w.writerow([i, j, table.counts[i][j]])


def load_irwe(root: Path, params: CodeParams) -> IrweTable | None:
    path = _irwe_path(root, params)
    if not path.exists():
        return None
    grid = [[0] * (params.n - params.k + 1) for _ in range(params.k + 1)]
    with open(path, newline="") as fh:
        first = fh.readline().strip()
        if first != HEADER:
            return None
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    for i, j, a in rows[1:]:
        grid[int(i)][int(j)] = int(a)
    return IrweTable(params, tuple(tuple(r) for r in grid))


def save_sphere(root: Path, params: CodeParams,
                table: dict[tuple[int, int, int, int], SphereCell]) -> None:
    root.mkdir(parents=True, exist_ok=True)
    p = params
    with open(_sphere_path(root, p), "w", newline="") as fh:
        fh.write(f"{HEADER}\n# params n={p.n} k={p.k} q={p.q} t={p.t}\n")
        w = csv.writer(fh)
        w.writerow(["c1", "c2", "r1", "r2", "count", "change_total",
                    "change_total_printed"])
        for key in sorted(table):
            cell = table[key]
            w.writerow(list(key) + [cell.count, cell.change_total,
                                    cell.change_total_printed])


def load_sphere(root: Path, params: CodeParams):
    path = _sphere_path(root, params)
    if not path.exists():
        return None
    out: dict[tuple[int, int, int, int], SphereCell] = {}
    with open(path, newline="") as fh:
        first = fh.readline().strip()
        if first != HEADER:
            return None
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    for c1, c2, r1, r2, cnt, chg, chgp in rows[1:]:
        out[int(c1), int(c2), int(r1), int(r2)] = SphereCell(
            int(cnt), int(chg), int(chgp))
    return out


def load_or_compute_irwe(params: CodeParams, cache_dir: str | None = None) -> IrweTable:
    """IrweTable from cache when possible, else computed and written back
    (when a cache directory is configured)."""
    root = cache_dir_from_env(cache_dir)
    irwe = load_irwe(root, params) if root else None
    if irwe is None:
        irwe = IrweTable.compute(params)
        if root:
            save_irwe(root, irwe)
    return irwe


def load_or_compute_sphere(params: CodeParams, irwe: IrweTable,
                           cache_dir: str | None = None, workers: int = 1):
    """Sphere-cell dict from cache when possible, else computed and
    written back (when a cache directory is configured)."""
    root = cache_dir_from_env(cache_dir)
    sphere = load_sphere(root, params) if root else None
    if sphere is None:
        sphere = build_sphere_table(params, irwe, workers)
        if root:
            save_sphere(root, params, sphere)
    return sphere
