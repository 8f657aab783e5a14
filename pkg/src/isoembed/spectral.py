"""Weighted second-moment matrix and its leading eigenpairs.

M(lambda) = sum_i lambda_i x_i x_i' is the d x d PSD matrix whose top-k
eigenpairs drive both the dual objective and the recovered embedding. n can
be huge, but everything here works on the d x d matrix, so a dense
symmetric eigendecomposition is the right tool.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractError, ShapeError
from .types import OrthonormalBasis, unit_matrix, weights_vector

SYMMETRY_TOL = 1e-10

# Eigenvalues of a PSD-by-construction matrix may come out of LAPACK a hair
# negative; anything above this is clipped to zero, anything below it is a
# genuine contract violation for PSD inputs (left untouched: the input may
# legitimately be indefinite, e.g. off-simplex weights).
NEGATIVE_CLIP = -1e-10


@dataclass(frozen=True)
class SpectralState:
    """Top-k eigenpairs of a symmetric matrix, eigenvalues descending.

    ``spectral_gap`` is mu_k - mu_{k+1} (with mu_{k+1} = 0 when k = d); a
    tiny gap means the top-k eigenspace, and hence the recovered basis, is
    not unique.
    """

    eigenvalues: np.ndarray
    basis: OrthonormalBasis
    spectral_gap: float


def weighted_moment_matrix(X, w) -> np.ndarray:
    """M = sum_i w_i x_i x_i' as a d x d symmetric matrix.

    For unit rows and simplex weights, trace(M) = sum w_i = 1 and M is PSD.
    """
    Xm = unit_matrix(X)
    wv = weights_vector(w)
    if wv.ndim != 1 or wv.size != Xm.shape[0]:
        raise ShapeError(
            f"weight vector has length {wv.size}, expected {Xm.shape[0]}"
        )
    M = (Xm * wv[:, None]).T @ Xm
    # dgemm roundoff can leave ~1e-17 asymmetry; symmetrize explicitly.
    return (M + M.T) / 2.0


def _canonical_signs(V):
    # Largest-magnitude entry of each column made positive; np.argmax takes
    # the lowest index on ties, which fixes the convention deterministically.
    idx = np.argmax(np.abs(V), axis=0)
    flip = V[idx, np.arange(V.shape[1])] < 0.0
    V = V.copy()
    V[:, flip] *= -1.0
    return V


def top_k_eigenpairs(M, k: int) -> SpectralState:
    """Largest k eigenvalues of a symmetric matrix with unit eigenvectors.

    Eigenvalues come back in descending order; each eigenvector's
    largest-magnitude entry is made positive so repeated runs agree bitwise.
    """
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {M.shape}")
    d = M.shape[0]
    if not (1 <= k <= d):
        raise ValueError(f"k must be in [1, {d}], got {k}")
    asym = np.abs(M - M.T).max()
    if asym > SYMMETRY_TOL:
        raise ContractError(f"matrix is not symmetric (max |M - M'| = {asym:.3g})")
    evals, evecs = np.linalg.eigh(M)
    evals = evals[::-1]
    evecs = evecs[:, ::-1]
    evals[(evals < 0.0) & (evals >= NEGATIVE_CLIP)] = 0.0
    next_val = evals[k] if k < d else 0.0
    top = evals[:k].copy()
    V = _canonical_signs(evecs[:, :k])
    return SpectralState(
        eigenvalues=top,
        basis=OrthonormalBasis(V),
        spectral_gap=float(top[-1] - next_val),
    )
