"""Brute-force oracles over prime fields.

Everything here is deliberately independent of the L-polynomial engine:
moment-map fiber counts come from explicit enumeration of matrix tuples,
centralizer orders from scanning all square matrices, kernel dimensions from
exact rank over the rationals, and character sums are tracked as integer
count vectors over powers of a fixed p-th root of unity.  Comparisons with
the engine are therefore exact, with no floating point anywhere.

The moment-map condition is evaluated against the elementary-matrix basis of
the symmetry Lie algebra through its defining pairing, never through an
explicit coordinate formula, which keeps sign conventions out of the code.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Sequence

import numpy as np

from .partitions import Partition
from .quiver import Quiver, check_dim_vector, dim_group, dim_rep_space

DEFAULT_BUDGET = 1 << 26
# Above this many points the automatic strategy stops enumerating full
# (phi, psi) pairs and enumerates phi only, counting psi solutions exactly.
FULL_ENUMERATION_CAP = 1 << 20
CENTRALIZER_BUDGET = 1 << 20


class EnumerationBudgetError(RuntimeError):
    """An oracle would need more enumerated points than the budget allows."""

    def __init__(self, needed: int, budget: int, what: str = "enumeration"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what} needs {needed} points, budget is {budget}")


class FreeActionError(ArithmeticError):
    """Fiber count not divisible by the group order."""


def _require_prime(q: int) -> int:
    if q < 2 or any(q % d == 0 for d in range(2, int(q**0.5) + 1)):
        raise ValueError(f"field size must be prime, got {q}")
    return q


def group_order(v: Sequence[int], q: int) -> int:
    """Order of the product of general linear groups over the q-element field."""
    _require_prime(q)
    total = 1
    for n in v:
        n = int(n)
        for j in range(n):
            total *= q**n - q**j
    return total


# ---------------------------------------------------------------------------
# Representation points and the derived action

def _phi_shapes(quiver: Quiver, v, w) -> list[tuple[int, int]]:
    shapes = [(v[t], v[s]) for s, t in quiver.arrows]
    shapes.extend((v[i], w[i]) for i in range(quiver.vertex_count))
    return shapes


def _psi_shapes(quiver: Quiver, v, w) -> list[tuple[int, int]]:
    shapes = [(v[s], v[t]) for s, t in quiver.arrows]
    shapes.extend((w[i], v[i]) for i in range(quiver.vertex_count))
    return shapes


def _as_matrix(m, rows: int, cols: int, what: str) -> tuple[tuple[int, ...], ...]:
    m = tuple(tuple(int(x) for x in row) for row in m)
    if len(m) != rows or any(len(row) != cols for row in m):
        raise ValueError(f"{what} must be {rows}x{cols}")
    return m


def _zero_matrix(rows: int, cols: int) -> tuple[tuple[int, ...], ...]:
    return tuple((0,) * cols for _ in range(rows))


def _mat_mul(a, b, rows: int, inner: int, cols: int):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols))
        for i in range(rows)
    )


def _mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_mod(a, p: int):
    return tuple(tuple(x % p for x in row) for row in a)


def _trace_of_product(b, a) -> int:
    # tr(b . a) without forming the product; works for empty shapes.
    return sum(b[i][j] * a[j][i] for i in range(len(b)) for j in range(len(b[i]) if b else 0))


@dataclass(frozen=True)
class FpPoint:
    """A point of the doubled representation space: matrices and their duals.

    Arrow entries are target x source; dual entries have transposed shapes.
    """

    phi_arrows: tuple
    phi_framing: tuple
    psi_arrows: tuple
    psi_framing: tuple

    @classmethod
    def build(cls, quiver: Quiver, v, w, phi_arrows, phi_framing, psi_arrows, psi_framing):
        v = check_dim_vector(quiver, v, "v")
        w = check_dim_vector(quiver, w, "w")
        pshapes = _phi_shapes(quiver, v, w)
        dshapes = _psi_shapes(quiver, v, w)
        na = len(quiver.arrows)
        pa = tuple(
            _as_matrix(m, *pshapes[i], what=f"phi for arrow {i}") for i, m in enumerate(phi_arrows)
        )
        pf = tuple(
            _as_matrix(m, *pshapes[na + i], what=f"phi framing at vertex {i}")
            for i, m in enumerate(phi_framing)
        )
        da = tuple(
            _as_matrix(m, *dshapes[i], what=f"psi for arrow {i}") for i, m in enumerate(psi_arrows)
        )
        df = tuple(
            _as_matrix(m, *dshapes[na + i], what=f"psi framing at vertex {i}")
            for i, m in enumerate(psi_framing)
        )
        if len(pa) != na or len(da) != na or len(pf) != quiver.vertex_count or len(df) != quiver.vertex_count:
            raise ValueError("wrong number of matrix components")
        return cls(pa, pf, da, df)


def apply_rho_derivative(quiver: Quiver, v, w, X, phi, modulus: int | None = None):
    """Derived action of a Lie-algebra element on a representation point.

    X is one square matrix per vertex; phi is a pair (arrow matrices,
    framing matrices).  Returns the image in the same shape: for an arrow
    s -> t the component is X_t . phi_e - phi_e . X_s, for a framing it is
    X_i . phi_i.
    """
    v = check_dim_vector(quiver, v, "v")
    w = check_dim_vector(quiver, w, "w")
    X = tuple(_as_matrix(m, v[i], v[i], what=f"X at vertex {i}") for i, m in enumerate(X))
    if len(X) != quiver.vertex_count:
        raise ValueError("X needs one matrix per vertex")
    arrows_in, framing_in = phi
    shapes = _phi_shapes(quiver, v, w)
    na = len(quiver.arrows)
    arrows_in = tuple(
        _as_matrix(m, *shapes[i], what=f"phi for arrow {i}") for i, m in enumerate(arrows_in)
    )
    framing_in = tuple(
        _as_matrix(m, *shapes[na + i], what=f"phi framing at vertex {i}")
        for i, m in enumerate(framing_in)
    )
    out_arrows = []
    for e, (s, t) in enumerate(quiver.arrows):
        left = _mat_mul(X[t], arrows_in[e], v[t], v[t], v[s])
        right = _mat_mul(arrows_in[e], X[s], v[t], v[s], v[s])
        out_arrows.append(_mat_sub(left, right))
    out_framing = [
        _mat_mul(X[i], framing_in[i], v[i], v[i], w[i]) for i in range(quiver.vertex_count)
    ]
    if modulus is not None:
        out_arrows = [_mat_mod(m, modulus) for m in out_arrows]
        out_framing = [_mat_mod(m, modulus) for m in out_framing]
    return tuple(out_arrows), tuple(out_framing)


def moment_pairing(quiver: Quiver, v, w, point: FpPoint, X, modulus: int | None = None) -> int:
    """Trace pairing of the derived action on the phi half against the psi half."""
    arrows, framing = apply_rho_derivative(
        quiver, v, w, X, (point.phi_arrows, point.phi_framing)
    )
    total = sum(_trace_of_product(point.psi_arrows[e], arrows[e]) for e in range(len(arrows)))
    total += sum(
        _trace_of_product(point.psi_framing[i], framing[i]) for i in range(len(framing))
    )
    return total % modulus if modulus is not None else total


# ---------------------------------------------------------------------------
# Moment-map fiber counting

def _lie_basis(quiver: Quiver, v) -> list[tuple[tuple, bool]]:
    """Elementary-matrix basis of the symmetry Lie algebra.

    Yields (X, on_diagonal) where on_diagonal marks unit trace against the
    identity-trace functional.
    """
    basis = []
    for i in range(quiver.vertex_count):
        for a in range(v[i]):
            for b in range(v[i]):
                X = [
                    _zero_matrix(v[k], v[k]) if k != i else None
                    for k in range(quiver.vertex_count)
                ]
                rows = [[0] * v[i] for _ in range(v[i])]
                rows[a][b] = 1
                X[i] = tuple(tuple(r) for r in rows)
                basis.append((tuple(X), a == b))
    return basis


def _flatten_phi(arrows, framing) -> list[int]:
    out: list[int] = []
    for m in arrows:
        for row in m:
            out.extend(row)
    for m in framing:
        for row in m:
            out.extend(row)
    return out


def _unflatten_phi(quiver: Quiver, v, w, vec):
    shapes = _phi_shapes(quiver, v, w)
    na = len(quiver.arrows)
    mats = []
    pos = 0
    for rows, cols in shapes:
        mat = tuple(tuple(vec[pos + r * cols + c] for c in range(cols)) for r in range(rows))
        pos += rows * cols
        mats.append(mat)
    return tuple(mats[:na]), tuple(mats[na:])


def _flatten_psi_pairing(arrows, framing) -> list[int]:
    # The vector u with u[b] = trace pairing of the input against the b-th
    # unit psi vector: for a slot matrix m this is m transposed, row-major
    # in the psi shape.
    out: list[int] = []
    for m in arrows:
        rows = len(m)
        cols = len(m[0]) if rows else 0
        for c in range(cols):
            for r in range(rows):
                out.append(m[r][c])
    for m in framing:
        rows = len(m)
        cols = len(m[0]) if rows else 0
        for c in range(cols):
            for r in range(rows):
                out.append(m[r][c])
    return out


def _moment_system(quiver: Quiver, v, w, q: int):
    """Bilinear forms of the moment condition over the q-element field.

    Returns (mats, traces): for each Lie-algebra basis element a d x d
    integer matrix M with pairing value phi^T M psi, and the 0/1 trace of
    the basis element.
    """
    d = dim_rep_space(quiver, v, w)
    mats = []
    traces = []
    unit = [0] * d
    for X, diag in _lie_basis(quiver, v):
        rows = np.zeros((d, d), dtype=np.int32)
        for a in range(d):
            unit[a] = 1
            image = apply_rho_derivative(quiver, v, w, X, _unflatten_phi(quiver, v, w, unit))
            rows[a] = np.array(_flatten_psi_pairing(*image), dtype=np.int32) % q
            unit[a] = 0
        mats.append(rows)
        traces.append(1 if diag else 0)
    return mats, traces


def _digit_rows(q: int, d: int, start: int, stop: int) -> np.ndarray:
    """Base-q digit expansion of the index range, one point per row."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, d), dtype=np.int32)
    for col in range(d):
        out[:, col] = idx % q
        idx //= q
    return out


def _count_fiber_full(mats, targets, q: int, d: int) -> int:
    n_side = q**d
    psi = _digit_rows(q, d, 0, n_side)
    chunk = max(1, (1 << 22) // max(1, n_side))
    total = 0
    for start in range(0, n_side, chunk):
        phi = _digit_rows(q, d, start, min(start + chunk, n_side))
        acc = np.ones((phi.shape[0], n_side), dtype=bool)
        for M, t in zip(mats, targets):
            rows = (phi @ M) % q
            acc &= ((rows @ psi.T) % q) == t
        total += int(acc.sum())
    return total


def _solution_count_mod(rows: list[list[int]], targets: list[int], q: int, d: int) -> int:
    """Number of solutions of an affine system over the q-element field."""
    aug = [row + [t] for row, t in zip(rows, targets)]
    rank = 0
    m = len(aug)
    for col in range(d):
        piv = None
        for r in range(rank, m):
            if aug[r][col] % q:
                piv = r
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = pow(aug[rank][col], -1, q)
        aug[rank] = [(x * inv) % q for x in aug[rank]]
        for r in range(rank + 1, m):
            f = aug[r][col] % q
            if f:
                aug[r] = [(x - f * y) % q for x, y in zip(aug[r], aug[rank])]
        rank += 1
    for r in range(rank, m):
        if aug[r][d] % q:
            return 0
    return q ** (d - rank)


def _batch_affine_counts(aug: np.ndarray, q: int) -> np.ndarray:
    """Solution counts for a batch of augmented systems over the q-element field.

    aug has shape (N, m, d+1) with targets in the last column; returns the
    per-system count q^(d - rank), or 0 where inconsistent.  Same answer as
    _solution_count_mod row by row, just eliminated in lockstep.
    """
    aug = (aug % q).astype(np.int32)
    n_sys, m, cols = aug.shape
    d = cols - 1
    if m == 0:
        return np.full(n_sys, q**d, dtype=np.int64)
    inv_table = np.zeros(q, dtype=np.int32)
    for x in range(1, q):
        inv_table[x] = pow(x, -1, q)
    row = np.zeros(n_sys, dtype=np.int64)
    rows_idx = np.arange(m)
    sys_idx = np.arange(n_sys)
    for col in range(d):
        eligible = (aug[:, :, col] != 0) & (rows_idx[None, :] >= row[:, None])
        has = eligible.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(eligible, axis=1)
        r0 = np.minimum(row, m - 1)  # clamp for systems whose rows are all used up
        row_a = aug[sys_idx, r0, :].copy()
        row_b = aug[sys_idx, piv, :].copy()
        aug[sys_idx[has], r0[has], :] = row_b[has]
        aug[sys_idx[has], piv[has], :] = row_a[has]
        pivot_vals = aug[sys_idx, r0, col]
        normalized = (aug[sys_idx, r0, :] * inv_table[pivot_vals][:, None]) % q
        aug[sys_idx[has], r0[has], :] = normalized[has]
        pivot_rows = aug[sys_idx, r0, :]
        factors = aug[:, :, col] * ((rows_idx[None, :] > r0[:, None]) & has[:, None])
        aug = (aug - factors[:, :, None] * pivot_rows[:, None, :]) % q
        row += has
    tail_bad = ((rows_idx[None, :] >= row[:, None]) & (aug[:, :, d] != 0)).any(axis=1)
    counts = np.power(q, d - row, dtype=np.int64)
    counts[tail_bad] = 0
    return counts


def _count_fiber_linear(mats, targets, q: int, d: int, alpha: int) -> int:
    n_phi = q**d
    goals = np.array([(alpha * t) % q for t in targets], dtype=np.int32)
    n_basis = len(mats)
    total = 0
    chunk = 1 << 15
    for start in range(0, n_phi, chunk):
        phi = _digit_rows(q, d, start, min(start + chunk, n_phi))
        systems = np.empty((phi.shape[0], n_basis, d + 1), dtype=np.int32)
        for k, M in enumerate(mats):
            systems[:, k, :d] = (phi @ M) % q
            systems[:, k, d] = goals[k]
        total += int(_batch_affine_counts(systems, q).sum())
    return total


def count_moment_fiber(
    quiver: Quiver,
    v: Sequence[int],
    w: Sequence[int],
    alpha: int,
    q: int,
    budget: int = DEFAULT_BUDGET,
    strategy: str = "auto",
) -> int:
    """Points of the moment-map fiber over alpha times the trace functional.

    A point is a (phi, psi) pair; it lies in the fiber when the moment
    pairing against every elementary basis element equals alpha times the
    basis element's trace.  Strategies:

    - "full": enumerate all q^(2 dim) pairs and test every condition;
    - "linear": enumerate the q^dim phi half only and count psi solutions
      of the resulting affine-linear system exactly;
    - "auto": full while the pair count stays within both the budget and an
      internal cap, linear beyond that.

    Both strategies count the same set; the overlap is cross-checked in the
    test suite.
    """
    v = check_dim_vector(quiver, v, "v")
    w = check_dim_vector(quiver, w, "w")
    _require_prime(q)
    d = dim_rep_space(quiver, v, w)
    pairs = q ** (2 * d)
    singles = q**d
    if strategy == "auto":
        strategy = "full" if pairs <= min(budget, FULL_ENUMERATION_CAP) else "linear"
    if strategy == "full":
        if pairs > budget:
            raise EnumerationBudgetError(pairs, budget, "full fiber enumeration")
    elif strategy == "linear":
        if singles > budget:
            raise EnumerationBudgetError(singles, budget, "fiber enumeration")
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    mats, traces = _moment_system(quiver, v, w, q)
    if strategy == "full":
        goals = [(alpha * t) % q for t in traces]
        return _count_fiber_full(mats, goals, q, d)
    return _count_fiber_linear(mats, traces, q, d, alpha)


def quotient_count(
    quiver: Quiver,
    v: Sequence[int],
    w: Sequence[int],
    q: int,
    alpha: int = 1,
    budget: int = DEFAULT_BUDGET,
    strategy: str = "auto",
) -> int:
    """Fiber count divided by the group order, asserting exact divisibility.

    Only meaningful for nonzero alpha, where the group acts freely.
    """
    _require_prime(q)
    if alpha % q == 0:
        raise ValueError("alpha must be nonzero in the field for the free quotient")
    fiber = count_moment_fiber(quiver, v, w, alpha, q, budget=budget, strategy=strategy)
    order = group_order(v, q)
    if fiber % order:
        raise FreeActionError(
            f"free-action divisibility violated: fiber count {fiber} "
            f"is not a multiple of the group order {order}"
        )
    return fiber // order


# ---------------------------------------------------------------------------
# Centralizer orders and kernel dimensions

def jordan_nilpotent(lam: Partition) -> tuple[tuple[int, ...], ...]:
    """The nilpotent matrix in Jordan form with block sizes given by lam."""
    n = lam.size
    rows = [[0] * n for _ in range(n)]
    offset = 0
    for part in lam.parts:
        for r in range(part - 1):
            rows[offset + r][offset + r + 1] = 1
        offset += part
    return tuple(tuple(r) for r in rows)


def _det_mod(batch: np.ndarray, q: int) -> np.ndarray:
    """Determinants mod q of a batch of small square matrices, by expansion."""
    n = batch.shape[1]
    if n == 0:
        return np.ones(batch.shape[0], dtype=np.int64)
    dets = np.zeros(batch.shape[0], dtype=np.int64)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):  # parity by counting inversions
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = np.ones(batch.shape[0], dtype=np.int64)
        for i, j in enumerate(perm):
            term = (term * batch[:, i, j]) % q
        dets = (dets + sign * term) % q
    return dets % q


def centralizer_order(lam: Partition, q: int, budget: int = CENTRALIZER_BUDGET) -> int:
    """Invertible matrices commuting with the Jordan nilpotent of type lam.

    Counts by scanning every square matrix over the field, so the search
    space is q to the n^2; sizes beyond the budget raise.
    """
    _require_prime(q)
    n = lam.size
    if n == 0:
        return 1
    need = q ** (n * n)
    if need > budget:
        raise EnumerationBudgetError(need, budget, f"centralizer scan for {lam!r} at q={q}")
    J = np.array(jordan_nilpotent(lam), dtype=np.int64)
    total = 0
    chunk = 1 << 16
    for start in range(0, need, chunk):
        digits = _digit_rows(q, n * n, start, min(start + chunk, need)).astype(np.int64)
        mats = digits.reshape(-1, n, n)
        left = np.einsum("mij,jk->mik", mats, J) % q
        right = np.einsum("ij,mjk->mik", J, mats) % q
        commuting = mats[(left == right).all(axis=(1, 2))]
        if commuting.shape[0]:
            total += int(np.count_nonzero(_det_mod(commuting, q)))
    return total


def _rank_rational(rows: list[list[int]]) -> int:
    """Exact rank over the rationals by fraction Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def kappa_oracle(
    quiver: Quiver,
    v: Sequence[int],
    w: Sequence[int],
    lam_tuple: Sequence[Partition],
    max_total: int = 8,
) -> int:
    """Kernel dimension of the derived action of a Jordan-type nilpotent.

    Builds the integer structure matrix of phi -> rho'(X) phi for X the
    blockwise Jordan representative of the partition tuple and returns the
    nullity from an exact rational rank.
    """
    v = check_dim_vector(quiver, v, "v")
    w = check_dim_vector(quiver, w, "w")
    if len(lam_tuple) != quiver.vertex_count:
        raise ValueError("partition tuple length must match the vertex count")
    sizes = tuple(lam.size for lam in lam_tuple)
    if sizes != v:
        raise ValueError(f"partition sizes {sizes} do not match v = {v}")
    if sum(sizes) > max_total:
        raise EnumerationBudgetError(sum(sizes), max_total, "kernel-dimension oracle")
    X = tuple(jordan_nilpotent(lam) for lam in lam_tuple)
    d = dim_rep_space(quiver, v, w)
    unit = [0] * d
    columns = []
    for a in range(d):
        unit[a] = 1
        image = apply_rho_derivative(quiver, v, w, X, _unflatten_phi(quiver, v, w, unit))
        columns.append(_flatten_phi(*image))
        unit[a] = 0
    rows = [[columns[a][b] for a in range(d)] for b in range(d)]
    return d - _rank_rational(rows)


# ---------------------------------------------------------------------------
# Exact character sums

class CycloCount:
    """An element of the cyclotomic integers at a prime p, as a count vector.

    The value is sum of counts[t] * zeta^t for a primitive p-th root of
    unity zeta.  Two vectors represent the same value exactly when they
    differ by a constant multiple of the all-ones vector, the one relation
    among the powers of zeta; equality and hashing quotient by it.
    """

    __slots__ = ("p", "counts")

    def __init__(self, p: int, counts: Iterable[int] | None = None):
        _require_prime(p)
        if counts is None:
            counts = (0,) * p
        else:
            counts = tuple(int(c) for c in counts)
            if len(counts) != p:
                raise ValueError(f"need {p} counts, got {len(counts)}")
        self.p = p
        self.counts = counts

    @classmethod
    def from_int(cls, p: int, value: int) -> "CycloCount":
        return cls(p, (value,) + (0,) * (p - 1))

    def shifted(self, t: int) -> "CycloCount":
        """Multiply by zeta^t."""
        t %= self.p
        out = [0] * self.p
        for i, c in enumerate(self.counts):
            out[(i + t) % self.p] = c
        return CycloCount(self.p, out)

    def __add__(self, other: "CycloCount") -> "CycloCount":
        if not isinstance(other, CycloCount) or other.p != self.p:
            return NotImplemented
        return CycloCount(self.p, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: "CycloCount") -> "CycloCount":
        if not isinstance(other, CycloCount) or other.p != self.p:
            return NotImplemented
        return CycloCount(self.p, tuple(a - b for a, b in zip(self.counts, other.counts)))

    def __mul__(self, scalar: int) -> "CycloCount":
        if not isinstance(scalar, int):
            return NotImplemented
        return CycloCount(self.p, tuple(scalar * c for c in self.counts))

    __rmul__ = __mul__

    def canonical(self) -> tuple[int, ...]:
        """Counts normalized so the last entry is zero."""
        c = self.counts[-1]
        return tuple(x - c for x in self.counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycloCount.from_int(self.p, other)
        if not isinstance(other, CycloCount):
            return NotImplemented
        return self.p == other.p and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash((self.p, self.canonical()))

    def as_integer(self) -> int | None:
        """The rational-integer value if there is one, else None."""
        can = self.canonical()
        if any(can[1:]):
            return None
        return can[0]

    def __repr__(self) -> str:
        return f"CycloCount(p={self.p}, {self.counts})"


def charsum_linear_lemma(n: int, family: Iterable[tuple[Sequence[int], int]], q: int) -> bool:
    """Orthogonality over an affine-linear family.

    For each (g1, g2) in the family, summing the character of <g1, x> + g2
    over the n-dimensional coordinate space must give q^n times the
    character of g2 when g1 vanishes and zero otherwise.  Checked exactly.
    """
    _require_prime(q)
    vectors = list(product(range(q), repeat=n))
    for g1, g2 in family:
        g1 = tuple(int(x) for x in g1)
        if len(g1) != n:
            raise ValueError(f"linear form has {len(g1)} entries, expected {n}")
        g2 = int(g2)
        counts = [0] * q
        for vec in vectors:
            counts[(sum(a * b for a, b in zip(g1, vec)) + g2) % q] += 1
        lhs = CycloCount(q, counts)
        if all(x % q == 0 for x in g1):
            rhs = CycloCount.from_int(q, q**n).shifted(g2)
        else:
            rhs = CycloCount(q)
        if lhs != rhs:
            return False
    return True


def fourier_transform(f: dict, q: int, n: int) -> dict:
    """Unnormalized discrete transform of a cyclotomic-valued function."""
    points = list(product(range(q), repeat=n))
    out = {}
    for wv in points:
        acc = CycloCount(q)
        for vv in points:
            val = f.get(vv)
            if val is not None:
                acc = acc + val.shifted(sum(a * b for a, b in zip(vv, wv)) % q)
        out[wv] = acc
    return out


def fourier_inversion_check(n: int, q: int, trials: int = 100, seed: int = 7) -> bool:
    """Transforming twice must scale by q^n and flip the argument's sign.

    Checked exactly for `trials` pseudo-random cyclotomic-valued functions.
    """
    _require_prime(q)
    rng = random.Random(seed)
    points = list(product(range(q), repeat=n))
    scale = q**n
    for _ in range(trials):
        f = {
            vv: CycloCount(q, tuple(rng.randint(-3, 3) for _ in range(q)))
            for vv in points
        }
        ff = fourier_transform(fourier_transform(f, q, n), q, n)
        for vv in points:
            neg = tuple((-x) % q for x in vv)
            if ff[vv] != scale * f[neg]:
                return False
    return True


def charsum_fiber_identity(
    quiver: Quiver,
    v: Sequence[int],
    w: Sequence[int],
    alpha: int,
    q: int,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Fiber count against the character sum over the commuting variety.

    Both sides are computed by independent exhaustive enumeration and
    compared as exact cyclotomic integers, after clearing denominators:
    fiber count times q^(group dim) must equal q^(rep dim) times the sum of
    the character of -alpha tr X over pairs (phi, X) with rho'(X) phi = 0.
    """
    v = check_dim_vector(quiver, v, "v")
    w = check_dim_vector(quiver, w, "w")
    _require_prime(q)
    d = dim_rep_space(quiver, v, w)
    g = dim_group(v)
    need = q ** (d + g)
    if need > budget:
        raise EnumerationBudgetError(need, budget, "commuting-variety enumeration")
    fiber = count_moment_fiber(quiver, v, w, alpha, q, budget=budget)
    lhs = CycloCount.from_int(q, fiber * q**g)
    counts = [0] * q
    phi_vectors = [
        _unflatten_phi(quiver, v, w, vec) for vec in product(range(q), repeat=d)
    ]
    for xvec in product(range(q), repeat=g):
        X = []
        pos = 0
        trace_sum = 0
        for i in range(quiver.vertex_count):
            size = v[i]
            rows = tuple(
                tuple(xvec[pos + r * size + c] for c in range(size)) for r in range(size)
            )
            trace_sum += sum(rows[r][r] for r in range(size))
            pos += size * size
            X.append(rows)
        X = tuple(X)
        slot = (-alpha * trace_sum) % q
        for phi in phi_vectors:
            arrows, framing = apply_rho_derivative(quiver, v, w, X, phi, modulus=q)
            if all(all(all(x == 0 for x in row) for row in m) for m in arrows) and all(
                all(all(x == 0 for x in row) for row in m) for m in framing
            ):
                counts[slot] += 1
    rhs = CycloCount(q, counts) * (q**d)
    return lhs == rhs
