"""From-scratch affinity propagation with the damped max-sum updates.

Defaults follow the pipeline's hyperparameters: damping 0.9, at most 1000
iterations, early stop once the exemplar set has been stable for 50
consecutive iterations. Preference defaults to the median off-diagonal
similarity.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

logger = logging.getLogger(__name__)


@dataclass
class ApConfig:
    damping: float = 0.9
    max_iterations: int = 1000
    convergence_iterations: int = 50
    preference: float | None = None  # None -> median of off-diagonal
    noise_seed: int = 0  # 0 disables tie-breaking jitter

    def __post_init__(self):
        if not (0.5 <= self.damping < 1.0):
            raise ValueError(f"damping must be in [0.5, 1), got {self.damping}")
        if self.max_iterations < self.convergence_iterations or self.convergence_iterations < 1:
            raise ValueError("need max_iterations >= convergence_iterations >= 1")


@dataclass
class ClusterSolution:
    exemplars: list[int]
    assignment: list[int]
    iterations_run: int
    converged: bool
    net_similarity: float
    preference: float = field(default=0.0)


def default_preference(similarities: np.ndarray) -> float:
    """Median of the off-diagonal entries."""
    n = similarities.shape[0]
    if n < 2:
        raise ValueError("median preference needs at least 2 points")
    off = similarities[~np.eye(n, dtype=bool)]
    return float(np.median(off))


def cluster(similarities: np.ndarray, config: ApConfig | None = None) -> ClusterSolution:
    """Run damped responsibility/availability message passing.

    Exemplars are the points with r(k,k) + a(k,k) > 0 after the final
    sweep; every other point joins the exemplar with maximal similarity.
    """
    config = config or ApConfig()
    s = np.array(similarities, dtype=np.float64, copy=True)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise ValueError(f"similarity matrix must be square, got {s.shape}")
    n = s.shape[0]
    if n == 0:
        raise ValueError("cannot cluster zero points")

    off_mask = ~np.eye(n, dtype=bool)
    if not np.all(np.isfinite(s[off_mask])):
        raise ValueError("non-finite similarity")

    if config.preference is not None:
        preference = float(config.preference)
    elif n >= 2:
        preference = default_preference(s)
    else:
        preference = 0.0
    np.fill_diagonal(s, preference)

    if config.noise_seed:
        # tiny asymmetric jitter breaks the exact exemplar ties that make
        # two-point clusters oscillate forever (preferences included)
        rng = np.random.RandomState(config.noise_seed)
        scale = 1e-12 * max(1.0, float(np.max(np.abs(s))))
        s += rng.standard_normal((n, n)) * scale

    if n == 1:
        return ClusterSolution(
            exemplars=[0], assignment=[0], iterations_run=0,
            converged=True, net_similarity=preference, preference=preference,
        )

    damping = config.damping
    r = np.zeros((n, n))
    a = np.zeros((n, n))
    idx = np.arange(n)

    exemplar_mask = np.zeros(n, dtype=bool)
    stable_count = 0
    iterations = 0
    converged = False

    for iterations in range(1, config.max_iterations + 1):
        # responsibilities: r(i,k) = s(i,k) - max_{k'!=k}(a(i,k') + s(i,k'))
        tmp = a + s
        first_idx = np.argmax(tmp, axis=1)
        first = tmp[idx, first_idx]
        tmp[idx, first_idx] = -np.inf
        second = np.max(tmp, axis=1)
        r_new = s - first[:, None]
        r_new[idx, first_idx] = s[idx, first_idx] - second
        r = damping * r + (1.0 - damping) * r_new

        # availabilities: a(i,k) = min(0, r(k,k) + sum_{i' not in {i,k}} max(0, r(i',k)))
        rp = np.maximum(r, 0.0)
        np.fill_diagonal(rp, r.diagonal())
        col_sums = rp.sum(axis=0)
        a_new = col_sums[None, :] - rp
        # diagonal of a_new is already col_sums - r(k,k) = sum_{i'!=k} max(0, r(i',k))
        diag_new = a_new.diagonal().copy()
        np.minimum(a_new, 0.0, out=a_new)
        np.fill_diagonal(a_new, diag_new)
        a = damping * a + (1.0 - damping) * a_new

        if not (np.all(np.isfinite(r)) and np.all(np.isfinite(a))):
            raise FloatingPointError(f"non-finite messages at iteration {iterations}")

        new_mask = (r.diagonal() + a.diagonal()) > 0.0
        if np.array_equal(new_mask, exemplar_mask):
            stable_count += 1
        else:
            stable_count = 0
            exemplar_mask = new_mask
        logger.debug(
            "ap iter %d: %d exemplar(s), stable for %d",
            iterations, int(new_mask.sum()), stable_count,
        )
        if stable_count >= config.convergence_iterations and new_mask.any():
            converged = True
            break

    exemplars = list(np.flatnonzero(exemplar_mask))
    if not exemplars:
        # degenerate: no point claimed exemplar status; pick the best candidate
        fallback = int(np.argmax(r.diagonal() + a.diagonal()))
        exemplars = [fallback]
        converged = False
        logger.warning("empty exemplar set after message passing; fallback to point %d", fallback)

    # standard finalization: replace each exemplar by its cluster's medoid
    # (member maximizing within-cluster similarity), then reassign once
    exemplar_arr = np.asarray(exemplars)
    assignment = exemplar_arr[np.argmax(s[:, exemplar_arr], axis=1)]
    assignment[exemplar_arr] = exemplar_arr
    refined = []
    for k in exemplar_arr:
        members = np.flatnonzero(assignment == k)
        medoid = members[int(np.argmax(s[np.ix_(members, members)].sum(axis=0)))]
        refined.append(int(medoid))
    exemplars = sorted(set(refined))
    exemplar_arr = np.asarray(exemplars)
    assignment = exemplar_arr[np.argmax(s[:, exemplar_arr], axis=1)]
    assignment[exemplar_arr] = exemplar_arr

    net = 0.0
    for i, k in enumerate(assignment):
        net += preference if i == k else float(similarities[i, k])

    return ClusterSolution(
        exemplars=[int(e) for e in exemplars],
        assignment=[int(x) for x in assignment],
        iterations_run=iterations,
        converged=converged,
        net_similarity=net,
        preference=preference,
    )
