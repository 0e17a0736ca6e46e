"""(n,k,p)-universal sets.

A family of 0/1 vectors of length n is (n,k,p)-universal when for every
k-subset I of the coordinates and every pattern on I with exactly p ones
some vector agrees with the pattern on I. Coordinates are 1-based in
reported witnesses and 0-based everywhere else in this module.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
import logging
import math
import multiprocessing
from typing import List, NamedTuple, Optional, Tuple
import numpy as np
from scipy.special import comb
from ..framework.exceptions import BudgetExceededError

error = logging.critical
warn = logging.warning
debug = logging.debug
info = logging.info

GREEDY_MAX_K = 12
GREEDY_MAX_CELLS = 25_000_000
RANDOM_AUTO_MAX_CONSTRAINTS = 200_000
MAX_ENUMERABLE_CONSTRAINTS = 2_000_000
MAX_INDICATOR_SIZE = 1_000_000
STRATEGIES = ("auto", "greedy", "random", "indicator")


@dataclass(frozen=True, eq=False)
class UniversalFamily:
    n: int
    k: int
    p: int
    functions: np.ndarray = field(repr=False)
    strategy: str = "given"

    def __post_init__(self):
        _check_params(self.n, self.k, self.p)
        functions = np.asarray(self.functions, dtype=np.uint8).reshape(-1, self.n)
        if not np.isin(functions, (0, 1)).all():
            raise ValueError("Universal family vectors must be 0/1 valued.")
        functions = functions.copy()
        functions.flags.writeable = False
        object.__setattr__(self, "functions", functions)

    def __len__(self):
        return self.functions.shape[0]

    @property
    def masks(self) -> np.ndarray:
        """Each vector as an int64 bitmask, coordinate i at bit i."""
        return _vectors_to_masks(self.functions)

    def restrict(self, n_prime: int) -> UniversalFamily:
        """The family on the first ``n_prime`` coordinates."""
        return UniversalFamily(
            n_prime, self.k, self.p, self.functions[:, :n_prime], self.strategy
        )

    def __repr__(self):
        return (
            f"UniversalFamily(n={self.n}, k={self.k}, p={self.p}, "
            f"size={len(self)}, strategy={self.strategy})"
        )


class VerificationResult(NamedTuple):
    ok: bool
    witness: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]


def _check_params(n: int, k: int, p: int):
    if not (isinstance(n, int) and isinstance(k, int) and isinstance(p, int)):
        raise ValueError("n, k and p must be integers.")
    if n < 1 or k < 1:
        raise ValueError(f"n and k must be positive, got n={n}, k={k}.")
    if not 0 <= p <= k <= n:
        raise ValueError(f"Require 0 <= p <= k <= n, got n={n}, k={k}, p={p}.")
    if n > 62:
        raise ValueError("Vectors longer than 62 coordinates are not supported.")


def _vectors_to_masks(vectors: np.ndarray) -> np.ndarray:
    weights = np.left_shift(np.int64(1), np.arange(vectors.shape[1], dtype=np.int64))
    return (vectors.astype(np.int64) * weights).sum(axis=1).astype(np.int64)


def _masks_to_vectors(masks, n: int) -> np.ndarray:
    masks = np.asarray(masks, dtype=np.int64).reshape(-1, 1)
    return ((masks >> np.arange(n, dtype=np.int64)) & 1).astype(np.uint8)


def constraint_count(n: int, k: int, p: int) -> int:
    return int(comb(n, k, exact=True) * comb(k, p, exact=True))


def _constraints(n: int, k: int, p: int) -> Tuple[np.ndarray, np.ndarray]:
    """Ones/zeros masks of every (I, pattern) in lexicographic order."""
    ones, zeros = [], []
    for subset in combinations(range(n), k):
        subset_mask = sum(1 << i for i in subset)
        patterns = sorted(
            (tuple(1 if i in chosen else 0 for i in subset), chosen)
            for chosen in (frozenset(c) for c in combinations(subset, p))
        )
        for _, chosen in patterns:
            one_mask = sum(1 << i for i in chosen)
            ones.append(one_mask)
            zeros.append(subset_mask ^ one_mask)
    return np.array(ones, dtype=np.int64), np.array(zeros, dtype=np.int64)


def _decode_constraint(one_mask: int, zero_mask: int, n: int):
    subset = tuple(i for i in range(n) if (one_mask | zero_mask) >> i & 1)
    pattern = tuple(int(one_mask >> i & 1) for i in subset)
    return tuple(i + 1 for i in subset), pattern


def _coverage(masks: np.ndarray, ones: np.ndarray, zeros: np.ndarray, block: int = 64):
    """Boolean vector: which constraints some mask realizes."""
    covered = np.zeros(len(ones), dtype=bool)
    for start in range(0, len(masks), block):
        m = masks[start : start + block, None]
        covered |= (((m & ones) == ones) & ((m & zeros) == 0)).any(axis=0)
    return covered


def _greedy_masks(n: int, ones: np.ndarray, zeros: np.ndarray) -> List[int]:
    candidates = np.arange(1 << n, dtype=np.int64)[:, None]
    realizes = ((candidates & ones) == ones) & ((candidates & zeros) == 0)
    gain = realizes.sum(axis=1).astype(np.int64)
    uncovered = np.ones(len(ones), dtype=bool)
    chosen = []
    while uncovered.any():
        best = int(np.argmax(gain))
        chosen.append(best)
        newly = realizes[best] & uncovered
        gain -= realizes[:, newly].sum(axis=1)
        uncovered &= ~newly
    return chosen


def random_draw_count(n: int, k: int, p: int) -> int:
    return int(math.ceil(comb(k, p, exact=True) * k * math.log(2 * n**k)))


def _random_masks(n: int, k: int, p: int, seed: int) -> List[int]:
    rng = np.random.default_rng(seed)
    draws = random_draw_count(n, k, p)
    vectors = (rng.random((draws, n)) < p / k).astype(np.uint8)
    masks = _vectors_to_masks(vectors)
    total = constraint_count(n, k, p)
    if total > MAX_ENUMERABLE_CONSTRAINTS:
        hit = (p / k) ** p * (1 - p / k) ** (k - p)
        bound = total * (1 - hit) ** draws
        warn(
            f"Universal set ({n},{k},{p}) too large to verify; "
            f"failure probability is at most {min(bound, 1.0):.3g}."
        )
        return [int(m) for m in masks]
    ones, zeros = _constraints(n, k, p)
    uncovered = np.ones(len(ones), dtype=bool)
    kept = []
    for m in masks:
        hit = uncovered & ((m & ones) == ones) & ((m & zeros) == 0)
        if hit.any():
            kept.append(int(m))
            uncovered &= ~hit
        if not uncovered.any():
            break
    patched = 0
    for idx in np.flatnonzero(uncovered):
        if not uncovered[idx]:
            continue
        one_mask = int(ones[idx])
        kept.append(one_mask)
        uncovered &= ones != one_mask
        patched += 1
    if patched:
        debug(f"Patched {patched} constraints of the random ({n},{k},{p}) family.")
    return kept


def _indicator_masks(n: int, p: int) -> List[int]:
    return [sum(1 << i for i in chosen) for chosen in combinations(range(n), p)]


def build_universal_set(
    n: int, k: int, p: int, seed: int = 0, strategy: str = "auto"
) -> UniversalFamily:
    """Build an (n,k,p)-universal family.

    ``auto`` builds every applicable strategy and keeps the smallest
    family, so the result never has more than C(n,p) vectors.
    """
    _check_params(n, k, p)
    if strategy not in STRATEGIES:
        raise ValueError(f"Unknown strategy {strategy!r}; choose from {STRATEGIES}.")
    total = constraint_count(n, k, p)
    greedy_ok = k <= GREEDY_MAX_K and (1 << n) * total <= GREEDY_MAX_CELLS
    built = {}
    if strategy == "greedy" or (strategy == "auto" and greedy_ok):
        if not greedy_ok:
            raise BudgetExceededError(
                f"Greedy construction for ({n},{k},{p}) needs {(1 << n) * total} cells."
            )
        built["greedy"] = _greedy_masks(n, *_constraints(n, k, p))
    if strategy == "random" or (
        strategy == "auto" and total <= RANDOM_AUTO_MAX_CONSTRAINTS
    ):
        built["random"] = _random_masks(n, k, p, seed)
    if strategy == "indicator" or strategy == "auto":
        if comb(n, p, exact=True) <= MAX_INDICATOR_SIZE or strategy == "indicator":
            built["indicator"] = _indicator_masks(n, p)
    name = min(built, key=lambda key: (len(built[key]), STRATEGIES.index(key)))
    masks = built[name]
    debug(
        f"Universal set ({n},{k},{p}): {len(masks)} vectors via {name} "
        f"({', '.join(f'{key}={len(v)}' for key, v in built.items())})."
    )
    return UniversalFamily(n, k, p, _masks_to_vectors(masks, n), name)


@lru_cache(maxsize=None)
def cached_universal_set(n: int, k: int, p: int, seed: int = 0) -> UniversalFamily:
    return build_universal_set(n, k, p, seed=seed)


def _first_uncovered(args) -> Optional[int]:
    masks, ones, zeros, offset = args
    covered = _coverage(masks, ones, zeros)
    missing = np.flatnonzero(~covered)
    return int(missing[0]) + offset if len(missing) else None


def verify_universal_set(f: UniversalFamily, jobs: int = 1) -> VerificationResult:
    """Exhaustive check; the witness is the smallest violated (I, pattern)."""
    total = constraint_count(f.n, f.k, f.p)
    if total > MAX_ENUMERABLE_CONSTRAINTS:
        raise BudgetExceededError(
            f"{total} constraints exceed the verification budget "
            f"of {MAX_ENUMERABLE_CONSTRAINTS}."
        )
    ones, zeros = _constraints(f.n, f.k, f.p)
    masks = f.masks
    if jobs > 1 and total > jobs:
        bounds = np.linspace(0, total, jobs + 1, dtype=int)
        chunks = [
            (masks, ones[a:b], zeros[a:b], int(a)) for a, b in zip(bounds, bounds[1:])
        ]
        with multiprocessing.Pool(jobs) as pool:
            firsts = [r for r in pool.map(_first_uncovered, chunks) if r is not None]
        first = min(firsts) if firsts else None
    else:
        first = _first_uncovered((masks, ones, zeros, 0))
    if first is None:
        return VerificationResult(True, None)
    return VerificationResult(
        False, _decode_constraint(int(ones[first]), int(zeros[first]), f.n)
    )
