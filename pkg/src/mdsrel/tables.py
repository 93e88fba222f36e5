"""Per-code aggregate tables backing the rate curves.

The split-weight table and false-negative marginals are cheap and built
eagerly.  The sphere statistics (quadruple sums over all reachable
(codeword-split, word-split) cells) are the expensive artifact and are
built lazily, only when a wrong-correction or pure-error-detection
quantity first needs them; false-positive counts need only the
zero-information column of sphere cells and get their own cheap lazy
path, so FN and FP stay usable at dimensions where the full sphere table
is out of reach.  Aggregates are folded into small coefficient vectors
indexed by received-word weight (corrected mode) or codeword weight
(literal mode), so each grid point later costs O(n) big-rational
operations.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from .combinatorics import binom, int_pow
from .enumerator import CodeParams, IrweTable
from .sphere import ball_volume, sphere_count


class FormulaInconsistencyError(AssertionError):
    """A count that must be non-negative came out negative.

    This cannot happen on a correct build; it is a firewall against
    index-convention mistakes in the alternating sums.
    """


class CodeTables:
    """Split-weight table, sphere statistics, and rate-assembly aggregates."""

    def __init__(self, params: CodeParams, cache_dir: str | None = None,
                 workers: int = 1):
        self.params = params
        self.ball = ball_volume(params)
        self._cache_dir = cache_dir
        self._workers = workers
        self._sphere = None
        self._fp = None

        from . import cache
        self.irwe = cache.load_or_compute_irwe(params, cache_dir)

        # false-negative marginals by codeword weight (zero codeword excluded)
        self.fn_word = defaultdict(int)
        self.fn_sym = defaultdict(int)
        A = self.irwe.counts
        for i in range(params.k + 1):
            for j in range(params.n - params.k + 1):
                if A[i][j] and (i, j) != (0, 0):
                    self.fn_word[i + j] += A[i][j]
                    self.fn_sym[i + j] += A[i][j] * i

    # -- sphere-backed aggregates (lazy; the expensive part) ---------------

    @property
    def sphere(self):
        self._ensure_sphere()
        return self._sphere

    def _ensure_sphere(self) -> None:
        if self._sphere is not None:
            return
        from . import cache
        self._sphere = cache.load_or_compute_sphere(
            self.params, self.irwe, self._cache_dir, self._workers)
        self._aggregate_sphere()

    def _aggregate_sphere(self) -> None:
        p = self.params
        k, nk, q, t = p.k, p.n - p.k, p.q, p.t
        A = self.irwe.counts

        # wrong correction, corrected mode: keyed by received weight
        self.wc_word = defaultdict(int)
        self.wc_sym = defaultdict(int)
        self.wc_chan = defaultdict(int)
        self.wc_dec = defaultdict(int)
        # literal mode: keyed by codeword weight, (N-1) in every grid cell
        self.wc_lit_word = defaultdict(int)
        self.wc_lit_sym = defaultdict(int)
        self.wc_lit_chan = defaultdict(Fraction)
        self.wc_lit_dec = defaultdict(Fraction)
        # corrected-to-codeword mass per received split, for FP(r) and PED
        sphere_mass = defaultdict(int)

        grid_cells = (k + 1) * (nk + 1)
        by_split = defaultdict(list)
        for (c1, c2, r1, r2), cell in self._sphere.items():
            by_split[c1, c2].append((r1, r2, cell))

        for (c1, c2), cells in sorted(by_split.items()):
            if (c1, c2) == (0, 0):
                continue
            a = A[c1][c2]
            s_word = -(grid_cells - len(cells))  # absent cells: N - 1 = -1
            s_dec = Fraction(0)
            for r1, r2, cell in cells:
                w = r1 + r2
                own = 1 if (r1, r2) == (c1, c2) else 0
                sphere_mass[r1, r2] += a * cell.count
                self.wc_word[w] += a * (cell.count - own)
                self.wc_sym[w] += a * c1 * (cell.count - own)
                self.wc_chan[w] += a * (c1 * (cell.count - own) - cell.change_total)
                self.wc_dec[w] += a * cell.change_total
                s_word += cell.count - 1
                if cell.count:
                    s_dec += Fraction(cell.change_total_printed * (cell.count - 1),
                                      cell.count)
            r = c1 + c2
            self.wc_lit_word[r] += a * s_word
            self.wc_lit_sym[r] += a * c1 * s_word
            self.wc_lit_dec[r] += a * s_dec
            self.wc_lit_chan[r] += a * (c1 * s_word - s_dec)

        self.sphere_mass = dict(sphere_mass)
        self._fp = self._fp_from_mass(sphere_mass)

        self.ped = [[0] * (nk + 1) for _ in range(k + 1)]
        self.ped_word = defaultdict(int)
        self.ped_sym = defaultdict(int)
        self.ped_lit_word = defaultdict(int)
        self.ped_lit_sym = defaultdict(int)
        for i1 in range(1, k + 1):
            for i2 in range(nk + 1):
                if i1 + i2 <= t:
                    continue
                v = (binom(k, i1) * binom(nk, i2) * int_pow(q - 1, i1 + i2)
                     - sphere_mass.get((i1, i2), 0))
                if v < 0:
                    raise FormulaInconsistencyError(
                        f"PED({i1},{i2}) = {v} < 0 for {p}")
                self.ped[i1][i2] = v
                w = i1 + i2
                self.ped_word[w] += v
                self.ped_sym[w] += v * i1
                if i2 >= 1:
                    self.ped_lit_word[w] += v
                    self.ped_lit_sym[w] += v * i1

    # -- false positives (lazy; needs only the zero-information column) ----

    def _fp_from_mass(self, mass) -> dict[str, dict[int, int]]:
        p = self.params
        nk, q, t = p.n - p.k, p.q, p.t
        c_counts, fp_counts = {}, {}
        for r in range(t + 1, nk + 1):
            corrected = mass.get((0, r), 0)
            fp = binom(nk, r) * int_pow(q - 1, r) - corrected
            if fp < 0:
                raise FormulaInconsistencyError(f"FP({r}) = {fp} < 0 for {p}")
            c_counts[r] = corrected
            fp_counts[r] = fp
        return {"c": c_counts, "fp": fp_counts}

    def _ensure_fp(self) -> None:
        if self._fp is not None:
            return
        p = self.params
        nk, t = p.n - p.k, p.t
        A = self.irwe.counts
        mass = defaultdict(int)
        # only codeword splits within reach of a zero-information word matter
        for c1 in range(0, t + 1):
            for c2 in range(nk + 1):
                if (c1, c2) == (0, 0) or not A[c1][c2]:
                    continue
                for r in range(max(0, c2 - (t - c1)), min(nk, c2 + t - c1) + 1):
                    mass[0, r] += A[c1][c2] * sphere_count(p, (c1, c2), (0, r))
        self._fp = self._fp_from_mass(mass)

    @property
    def c_counts(self) -> dict[int, int]:
        self._ensure_fp()
        return self._fp["c"]

    @property
    def fp_counts(self) -> dict[int, int]:
        self._ensure_fp()
        return self._fp["fp"]


_memo: dict[tuple[int, int, int], CodeTables] = {}


def get_tables(params: CodeParams, cache_dir: str | None = None,
               workers: int = 1) -> CodeTables:
    """Process-wide memoized CodeTables for (n, k, q)."""
    key = (params.n, params.k, params.q)
    if key not in _memo:
        _memo[key] = CodeTables(params, cache_dir, workers)
    return _memo[key]
