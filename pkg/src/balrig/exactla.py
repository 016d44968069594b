"""Exact linear algebra over a prime field with randomized generic entries.

Genericity is realized probabilistically: entries that the theory takes to be
algebraically independent reals are drawn uniformly from F_p for a large prime
p. Rank facts about such matrices are nonvanishing-polynomial conditions, so a
random evaluation gives the generic answer except with probability at most
deg/p (Schwartz-Zippel). A TrialPolicy repeats every computation with
independent draws and refuses to report a verdict the trials do not agree on.

All arithmetic uses plain Python integers; matrices at desk scale (a few
hundred rows) eliminate in well under a second.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence, TypeVar

from .errors import InputError, TrialDisagreementError

#: Default modulus: the largest prime below 2^62.
DEFAULT_PRIME = (1 << 62) - 57

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the witness set covers all n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p; elements are integer residues in [0, p)."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not is_prime(self.p):
            raise InputError(f"modulus {self.p} is not prime")

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in a prime field")
        return pow(a, self.p - 2, self.p)


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def _forward_eliminate(rows: list[list[int]], p: int, ncols: int) -> list[int]:
    """In-place row echelon of the first ``ncols`` columns of ``rows``.

    Pivoting is by position (first nonzero entry scanning down), which is
    exact over F_p. Returns the list of pivot columns; its length is the rank.
    Columns beyond ``ncols`` ride along, which is how the left kernel is read
    off an augmented identity block.
    """
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        inv = pow(prow[c], p - 2, p)
        for i in range(r + 1, nrows):
            row = rows[i]
            if row[c]:
                f = row[c] * inv % p
                rows[i] = [(a - f * b) % p for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


@dataclass(frozen=True)
class GenericMatrix:
    """A matrix over F_p with combinatorially labeled rows and columns.

    Entries are row-major residues; they depend deterministically on the seed
    that produced the underlying random parameters, so the whole object is
    reproducible from (seed, labels, construction recipe).
    """

    field: PrimeField
    rows: tuple[tuple[int, ...], ...]
    row_labels: tuple
    col_labels: tuple
    seed: int | None = None

    def __post_init__(self):
        if len(self.rows) != len(self.row_labels):
            raise InputError("row count does not match row labels")
        for row in self.rows:
            if len(row) != len(self.col_labels):
                raise InputError("column count does not match column labels")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.col_labels)

    def rank(self) -> int:
        work = [list(r) for r in self.rows]
        return len(_forward_eliminate(work, self.field.p, self.n_cols))

    def left_kernel(self) -> list[tuple[int, ...]]:
        """Basis of row dependencies: vectors w with w * M = 0.

        Eliminates [M | I]; rows whose M-part vanished hold kernel vectors in
        the identity part. Checks rank-nullity before returning.
        """
        n, m, p = self.n_rows, self.n_cols, self.field.p
        work = [
            list(row) + [1 if j == i else 0 for j in range(n)]
            for i, row in enumerate(self.rows)
        ]
        rank = len(_forward_eliminate(work, p, m))
        basis = [tuple(row[m:]) for row in work if not any(row[:m])]
        assert len(basis) == n - rank, "rank-nullity violated"
        return basis

    def dump(self) -> str:
        """Lossless debug dump: one ``label: residues`` line per row."""
        return "\n".join(
            f"{label}: " + " ".join(str(v) for v in row)
            for label, row in zip(self.row_labels, self.rows)
        )


class GreedyBasis:
    """Incremental greedy row selection over F_p.

    Rows are offered in a fixed order; a row is selected exactly when it is
    independent of the previously selected ones. The selected label set is the
    lexicographically least basis of the row space (matroid greedy property).
    """

    def __init__(self, field: PrimeField, ncols: int):
        self.field = field
        self.ncols = ncols
        self._pivot_rows: dict[int, list[int]] = {}
        self.selected: list = []

    @property
    def rank(self) -> int:
        return len(self._pivot_rows)

    def offer(self, label, row: Sequence[int]) -> bool:
        p = self.field.p
        vec = [v % p for v in row]
        for c in range(self.ncols):
            v = vec[c]
            if v and c in self._pivot_rows:
                brow = self._pivot_rows[c]
                vec = [(a - v * b) % p for a, b in zip(vec, brow)]
        for c in range(self.ncols):
            if vec[c]:
                inv = pow(vec[c], p - 2, p)
                self._pivot_rows[c] = [a * inv % p for a in vec]
                self.selected.append(label)
                return True
        return False


def greedy_independent_rows(
    field: PrimeField, labeled_rows: Sequence[tuple[object, Sequence[int]]]
) -> list:
    """Labels of the greedy independent subset of rows, in the given order."""
    if not labeled_rows:
        return []
    basis = GreedyBasis(field, len(labeled_rows[0][1]))
    for label, row in labeled_rows:
        basis.offer(label, row)
    return basis.selected


def sample_theta(
    field: PrimeField, seed: int, block_sizes: Sequence[int]
) -> list[list[list[int]]]:
    """One uniformly random invertible square block per entry of block_sizes.

    Deterministic for a given (prime, seed, block_sizes); singular draws are
    rejected and resampled, so every block is guaranteed nonsingular.
    """
    rng = random.Random(seed)
    p = field.p
    blocks = []
    for size in block_sizes:
        while True:
            block = [[rng.randrange(p) for _ in range(size)] for _ in range(size)]
            work = [row[:] for row in block]
            if len(_forward_eliminate(work, p, size)) == size:
                break
        blocks.append(block)
    return blocks


@dataclass(frozen=True)
class TrialPolicy:
    """How many independent random draws to run and how to reconcile them.

    Verdicts must agree across all trials. On disagreement the trial count is
    doubled once with fresh draws; if those still disagree the computation
    errors out rather than report a possibly-degenerate verdict.
    """

    trials: int = 3
    prime: int = DEFAULT_PRIME
    seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise InputError("trial count must be at least 1")

    @property
    def field(self) -> PrimeField:
        return prime_field(self.prime)

    def trial_seed(self, i: int) -> int:
        return self.seed * 1000003 + i


@dataclass(frozen=True)
class TrialMeta:
    """Provenance of a multi-trial verdict, embedded in every report."""

    prime: int
    seed: int
    trials: int
    escalated: bool = False
    failure_bound: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "prime": self.prime,
            "seed": self.seed,
            "trials": self.trials,
            "escalated": self.escalated,
            "failure_bound": self.failure_bound,
        }


V = TypeVar("V")

DEFAULT_POLICY = TrialPolicy()


def run_trials(
    policy: TrialPolicy,
    compute: Callable[[PrimeField, int], V],
    poly_degree: int = 0,
    what: str = "verdict",
) -> tuple[V, TrialMeta]:
    """Run ``compute`` under independent seeds and insist on agreement.

    ``poly_degree`` bounds the degree of the polynomial whose nonvanishing the
    verdict rests on; deg/p is recorded as the per-trial failure bound.
    """
    fld = policy.field
    meta = TrialMeta(
        prime=policy.prime,
        seed=policy.seed,
        trials=policy.trials,
        failure_bound=poly_degree / policy.prime,
    )
    verdicts = [compute(fld, policy.trial_seed(i)) for i in range(policy.trials)]
    if all(v == verdicts[0] for v in verdicts):
        return verdicts[0], meta
    start = policy.trials
    verdicts = [
        compute(fld, policy.trial_seed(start + i)) for i in range(2 * policy.trials)
    ]
    if all(v == verdicts[0] for v in verdicts):
        return verdicts[0], TrialMeta(
            prime=meta.prime,
            seed=meta.seed,
            trials=2 * policy.trials,
            escalated=True,
            failure_bound=meta.failure_bound,
        )
    raise TrialDisagreementError(
        f"random trials disagree on {what} even after escalation "
        f"(prime={policy.prime}, seed={policy.seed}); "
        "rerun with a larger prime or a different seed",
        verdicts=verdicts,
    )
