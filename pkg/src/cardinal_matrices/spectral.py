"""Norms, spectra, homotopy eigenvalue tracking and norm-ratio scans.

Matrices are built exactly; ``as_float`` is the only lossy step, and every
floating-point computation starts from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .cardinal import mertens_entries, t_matrix, u_matrix
from .deformed import m_tilde
from .divisors import DivisorSet, build_divisor_set
from .matrices import IntMatrix, RatMatrix
from .mertens import MertensTable, SieveConfig, mertens

DEFAULT_EIGEN_FLOOR = 1e-9


class ConvergenceError(ArithmeticError):
    pass


def as_float(A) -> np.ndarray:
    if isinstance(A, np.ndarray):
        return np.asarray(A, dtype=float)
    return A.to_float()


def frobenius_norm_sq(A: IntMatrix | RatMatrix) -> Fraction:
    return Fraction(A.frobenius_sq())


def _require_symmetric(a: np.ndarray, tol: float = 0.0):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, rtol=0, atol=tol):
        raise ValueError("matrix is not symmetric")


def eigen_spectrum(A, check_residual: bool = False) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending."""
    a = as_float(A)
    _require_symmetric(a)
    try:
        if not check_residual:
            return np.linalg.eigvalsh(a)
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(str(exc)) from exc
    limit = 1e-8 * max(np.linalg.norm(a), 1.0)
    res = np.linalg.norm(a @ v - v * w, axis=0)
    if res.size and res.max() > limit:
        k = int(res.argmax())
        raise ConvergenceError(f"eigenpair {k} residual {res[k]:.3g} exceeds {limit:.3g}")
    return w


def operator_norm(A, tol: float = 1e-9) -> float:
    """Spectral radius of a symmetric matrix (its l2 operator norm).

    The dominant eigenpair is checked by its residual ||Av - lambda v||, which
    bounds the eigenvalue error for symmetric A; a residual above ``tol``
    raises ConvergenceError.
    """
    a = as_float(A)
    _require_symmetric(a)
    if a.size == 0:
        return 0.0
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(str(exc)) from exc
    k = int(np.argmax(np.abs(w)))
    res = float(np.linalg.norm(a @ v[:, k] - w[k] * v[:, k]))
    if res > max(tol, 0.0) * max(1.0, abs(w[k])):
        raise ConvergenceError(f"dominant eigenpair residual {res:.3g} exceeds tol {tol:.3g}")
    return float(abs(w[k]))


@dataclass
class SpectralReport:
    n: int
    s: int
    frobenius_norm_sq: Fraction
    frobenius_norm: float
    operator_norm: float
    eigenvalues: list[float]
    min_abs_eigenvalue: float
    positive_count: int
    negative_count: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "frobenius_norm_sq": str(self.frobenius_norm_sq),
            "frobenius_norm": self.frobenius_norm,
            "operator_norm": self.operator_norm,
            "min_abs_eigenvalue": self.min_abs_eigenvalue,
            "positive_count": self.positive_count,
            "negative_count": self.negative_count,
            "eigenvalues": self.eigenvalues,
        }


def spectral_report(n: int, A: IntMatrix | RatMatrix) -> SpectralReport:
    det = A.determinant()
    if det == 0:
        raise ValueError("singular matrix: sign counts are not defined")
    fsq = frobenius_norm_sq(A)
    w = eigen_spectrum(A)
    report = SpectralReport(
        n=n,
        s=A.size,
        frobenius_norm_sq=fsq,
        frobenius_norm=math.sqrt(fsq),
        operator_norm=float(np.abs(w).max()),
        eigenvalues=w.tolist(),
        min_abs_eigenvalue=float(np.abs(w).min()),
        positive_count=int((w > 0).sum()),
        negative_count=int((w < 0).sum()),
    )
    if report.positive_count + report.negative_count != report.s:
        raise ConvergenceError("a nonsingular matrix produced a zero eigenvalue")
    return report


@dataclass
class HomotopySnapshot:
    step: int
    t: float
    eigenvalues: list[float]
    positive_count: int
    negative_count: int
    min_abs_eigenvalue: float
    flagged: bool


@dataclass
class HomotopyTrack:
    n: int
    s: int
    floor: float
    snapshots: list[HomotopySnapshot] = field(default_factory=list)

    @property
    def signature_constant(self) -> bool:
        sigs = {(x.positive_count, x.negative_count) for x in self.snapshots}
        return len(sigs) == 1

    @property
    def flagged_steps(self) -> list[int]:
        return [x.step for x in self.snapshots if x.flagged]


def homotopy_track(S: DivisorSet, steps: int, floor: float = DEFAULT_EIGEN_FLOOR) -> HomotopyTrack:
    """Eigenvalues along the straight path (1 - t) T + t U_n, t in [0, 1].

    Every matrix on the path is symmetric, vanishes below the antidiagonal and
    has ones on it, so its determinant is the constant +-1 and no eigenvalue
    can cross zero.  Steps whose smallest |eigenvalue| drops below ``floor``
    are flagged, not rejected.
    """
    if steps < 2:
        raise ValueError("steps must be at least 2")
    T = t_matrix(S.s).to_float()
    U = u_matrix(S).to_float()
    track = HomotopyTrack(S.n, S.s, floor)
    for k in range(steps):
        t = k / (steps - 1)
        w = eigen_spectrum((1 - t) * T + t * U)
        m = float(np.abs(w).min())
        track.snapshots.append(
            HomotopySnapshot(
                step=k,
                t=t,
                eigenvalues=w.tolist(),
                positive_count=int((w > 0).sum()),
                negative_count=int((w < 0).sum()),
                min_abs_eigenvalue=m,
                flagged=m < floor,
            )
        )
    return track


# scan metric name -> what it measures
METRICS = {
    "m-frob": "Frobenius norm of M_n",
    "m-ratio": "Frobenius norm of M_n over sqrt(n)",
    "m-abs": "|M(n)|, the (1,1) entry of M_n",
    "mt-frob": "Frobenius norm of the deformed M_n",
    "mt-ratio": "Frobenius norm of the deformed M_n over sqrt(n) log n",
    "mt-max": "largest |entry| of the deformed M_n",
    "mt-max-ratio": "largest |entry| of the deformed M_n over log n",
    "t-ratio": "Frobenius norm of T over sqrt(n)",
    "min-eig": "smallest |eigenvalue| of U_n",
}


@dataclass(frozen=True)
class ScanRecord:
    n: int
    metric: str
    value: float
    normalizer: float
    ratio: float
    error: str = ""


def _ratio(value: float, normalizer: float) -> float:
    return value / normalizer if normalizer else math.nan


def _sum_squares(entries: np.ndarray, n: int) -> int:
    # |M(x)| <= x <= n and there are s^2 < 4n + 4 entries
    if 4 * (n + 1) ** 3 < 2**62:
        return int(np.square(entries).sum())
    return int((entries.astype(object) ** 2).sum())


def scan_one(n: int, metrics: Sequence[str], table: MertensTable) -> list[ScanRecord]:
    """Metrics for a single n; a failure is recorded per metric."""
    S = build_divisor_set(n)
    out = []
    cache: dict = {}

    def m_entries():
        if "M" not in cache:
            cache["M"] = mertens_entries(S, table)
        return cache["M"]

    def mt():
        if "Mt" not in cache:
            cache["Mt"] = m_tilde(S)
        return cache["Mt"]

    root, log = math.sqrt(n), math.log(n)
    for name in metrics:
        try:
            if name in ("m-frob", "m-ratio"):
                value = math.sqrt(_sum_squares(m_entries(), n))
                norm = 1.0 if name == "m-frob" else root
            elif name == "m-abs":
                value, norm = float(abs(table(n))), 1.0
            elif name in ("mt-frob", "mt-ratio"):
                value = math.sqrt(mt().frobenius_sq())
                norm = 1.0 if name == "mt-frob" else root * log
            elif name in ("mt-max", "mt-max-ratio"):
                value = float(mt().max_abs())
                norm = 1.0 if name == "mt-max" else log
            elif name == "t-ratio":
                value, norm = math.sqrt(S.s * (S.s + 1) // 2), root
            elif name == "min-eig":
                value = float(np.abs(eigen_spectrum(u_matrix(S))).min())
                norm = 1.0
            else:
                raise ValueError(f"unknown metric {name!r}")
            out.append(ScanRecord(n, name, value, norm, _ratio(value, norm)))
        except Exception as exc:  # recorded, the scan goes on
            out.append(ScanRecord(n, name, math.nan, math.nan, math.nan, f"{type(exc).__name__}: {exc}"))
    return out


def _scan_chunk(args):
    ns, metrics, config = args
    table = mertens(max(ns), config)
    return [r for n in ns for r in scan_one(n, metrics, table)]


def rh_scan(
    n_values: Iterable[int], metrics: Sequence[str], jobs: int = 1, config: SieveConfig | None = None
) -> list[ScanRecord]:
    """Scan records in ascending n, metric order as requested.

    Output does not depend on ``jobs``.  ``config`` controls the Mertens sieve.
    """
    ns = sorted(set(int(n) for n in n_values))
    if not ns:
        raise ValueError("empty n range")
    if ns[0] < 1:
        raise ValueError("n must be positive")
    unknown = [m for m in metrics if m not in METRICS]
    if unknown:
        raise ValueError(f"unknown metrics: {', '.join(unknown)}")
    if jobs <= 1 or len(ns) < 2:
        records = _scan_chunk((ns, list(metrics), config))
    else:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [ns[i::jobs] for i in range(jobs) if ns[i::jobs]]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = [r for part in pool.map(_scan_chunk, [(c, list(metrics), config) for c in chunks]) for r in part]
    order = {m: i for i, m in enumerate(metrics)}
    return sorted(records, key=lambda r: (r.n, order[r.metric]))


def log_spaced(n0: int, n1: int, count: int) -> list[int]:
    """At least ``count`` distinct integers spread logarithmically over [n0, n1]."""
    if n0 < 1 or n1 < n0:
        raise ValueError("need 1 <= n0 <= n1")
    k = count
    while True:
        pts = sorted(set(np.unique(np.round(np.geomspace(n0, n1, k)).astype(np.int64)).tolist()))
        if len(pts) >= min(count, n1 - n0 + 1):
            return pts
        k += count
