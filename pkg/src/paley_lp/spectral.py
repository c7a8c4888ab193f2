"""Fourier machinery on Z_n: DFT, cosine transform and reversal."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GridFunction:
    """A real function on Z_n stored as a length-n vector."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1:
            raise ValueError("GridFunction values must be one-dimensional")
        if not np.all(np.isfinite(v)):
            raise ValueError("GridFunction values must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k % self.n]

    def tolist(self) -> list[float]:
        return self.values.tolist()


def _vec(f) -> np.ndarray:
    return f.values if isinstance(f, GridFunction) else np.asarray(f, dtype=float)


def phase_matrix(n: int) -> np.ndarray:
    """The n x n matrix of e^{-2 pi i jk/n}, exponent reduced mod n first."""
    jk = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(-2j * np.pi * jk / n)


def cosine_matrix(n: int) -> np.ndarray:
    jk = np.outer(np.arange(n), np.arange(n)) % n
    return np.cos(2 * np.pi * jk / n)


def dft(f, fast: bool = False) -> np.ndarray:
    """Unnormalised DFT, hat f(k) = sum_j f(j) e^{-2 pi i jk/n}.

    The default is the direct O(n^2) sum; ``fast=True`` uses numpy's
    mixed-radix FFT, which handles every n without padding.
    """
    v = _vec(f)
    if fast:
        return np.fft.fft(v)
    return phase_matrix(len(v)) @ v


def inverse_dft(fhat) -> np.ndarray:
    fhat = np.asarray(fhat)
    n = len(fhat)
    return np.conj(phase_matrix(n)) @ fhat / n


def cosine_transform(f) -> GridFunction:
    v = _vec(f)
    return GridFunction(cosine_matrix(len(v)) @ v)


def reversal(f) -> GridFunction:
    """(Rf)(k) = f(-k mod n)."""
    v = _vec(f)
    return GridFunction(np.roll(v[::-1], 1))


def evenness_defect(f) -> float:
    v = _vec(f)
    return float(np.max(np.abs(v - reversal(v).values))) if len(v) else 0.0


def is_fourier_nonneg(f, tol: float = 1e-9) -> bool:
    """hat f >= 0, tested as Rf = f and Cf >= 0 (both within `tol`)."""
    v = _vec(f)
    if evenness_defect(v) > tol:
        return False
    return bool(np.min(cosine_transform(v).values) >= -tol)


def orbits(n: int, support=None) -> list[tuple[int, ...]]:
    """Orbits {k, -k} of Z_n under negation, optionally restricted to a
    negation-closed `support`. Ordered by smallest representative."""
    keep = set(range(n)) if support is None else {k % n for k in support}
    if any((n - k) % n not in keep for k in keep):
        raise ValueError("support must be closed under negation mod n")
    out = []
    for k in sorted(keep):
        neg = (n - k) % n
        if k == neg:
            out.append((k,))
        elif k < neg:
            out.append((k, neg))
    return out


def folded_cosine(n: int, orbit_list, rows=None) -> np.ndarray:
    """Matrix M with M[k, o] = sum_{j in orbit o} cos(2 pi jk/n).

    For an even f with value x_o on orbit o, (Cf)(k) = (M x)(k). `rows`
    defaults to k = 0..floor(n/2), the distinct rows under evenness.
    """
    ks = np.arange(n // 2 + 1) if rows is None else np.asarray(rows)
    M = np.zeros((len(ks), len(orbit_list)))
    for col, orb in enumerate(orbit_list):
        for j in orb:
            M[:, col] += np.cos(2 * np.pi * ((j * ks) % n) / n)
    return M


def unfold(n: int, orbit_list, x) -> np.ndarray:
    """Expand orbit values back to a length-n vector (zero off the orbits)."""
    out = np.zeros(n)
    for orb, val in zip(orbit_list, x):
        out[list(orb)] = val
    return out
