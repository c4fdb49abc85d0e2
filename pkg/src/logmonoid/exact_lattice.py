"""Exact integer linear algebra over Z.

Matrices are 2-d numpy arrays with ``dtype=object`` holding Python ints, so
all arithmetic is exact at arbitrary precision.  On top of Smith normal form
this module provides kernels and cokernels, finitely generated abelian groups
in invariant-factor form (with quotient / subgroup / hom machinery), and a
complete solver for nonnegative integer linear systems.

Conventions:
  - a matrix A of shape (m, n) is the map Z^n -> Z^m acting on column vectors;
  - a group in invariant-factor form is Z^free_rank + Z/f_1 + ... + Z/f_t with
    2 <= f_1 | f_2 | ... | f_t;
  - "lift coordinates" of such a group are Z^(free_rank + t), free coordinates
    first, torsion representatives last.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, InputError

# ---------------------------------------------------------------------------
# matrix helpers


def intmat(rows, ncols=None):
    """Builds an exact integer matrix (object dtype) from nested sequences.

    ``ncols`` is required when ``rows`` is empty, and is otherwise checked
    against the row length.
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        if ncols is None:
            raise InputError("empty matrix needs an explicit column count")
        return np.empty((0, ncols), dtype=object)
    width = len(rows[0])
    if ncols is not None and ncols != width:
        raise InputError(f"expected {ncols} columns, got {width}")
    if any(len(r) != width for r in rows):
        raise InputError("ragged rows in matrix input")
    out = np.empty((len(rows), width), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputError(f"matrix entry {x!r} is not an integer")
            out[i, j] = int(x)
    return out


def intmat_from_columns(cols, nrows=None):
    """Builds a matrix whose columns are the given integer vectors."""
    cols = [tuple(c) for c in cols]
    if not cols:
        if nrows is None:
            raise InputError("empty column list needs an explicit row count")
        return np.empty((nrows, 0), dtype=object)
    return intmat(cols).T.copy()


def identity_mat(n):
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def zeros_mat(m, n):
    return np.zeros((m, n), dtype=object)


def mat_columns(a):
    """The columns of ``a`` as a list of int tuples."""
    return [tuple(int(x) for x in a[:, j]) for j in range(a.shape[1])]


def mat_rows(a):
    return [tuple(int(x) for x in a[i, :]) for i in range(a.shape[0])]


def _as_matrix(a):
    if isinstance(a, np.ndarray):
        if a.ndim != 2:
            raise InputError("expected a 2-d matrix")
        if a.dtype != object:
            return intmat([[int(x) for x in row] for row in a] if a.shape[0] else [],
                          ncols=a.shape[1])
        return a
    return intmat(a)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = diag(d_1, ..., d_k) padded with zeros, U and V unimodular.

    ``diag`` lists the nonzero invariant factors, positive and with
    d_i | d_{i+1}.
    """

    left: np.ndarray
    diag: tuple
    right: np.ndarray


def _snf_full(a):
    """Smith normal form with tracked inverses.

    Returns (U, Uinv, D, V, Vinv) with U @ a @ V == D diagonal, U @ Uinv and
    V @ Vinv identities.  Pivot rule: smallest nonzero absolute value in the
    active submatrix, ties broken by lowest row then column index.
    """
    d = _as_matrix(a).copy()
    m, n = d.shape
    u, ui = identity_mat(m), identity_mat(m)
    v, vi = identity_mat(n), identity_mat(n)

    def swap_rows(i, j):
        if i == j:
            return
        d[[i, j], :] = d[[j, i], :]
        u[[i, j], :] = u[[j, i], :]
        ui[:, [i, j]] = ui[:, [j, i]]

    def swap_cols(i, j):
        if i == j:
            return
        d[:, [i, j]] = d[:, [j, i]]
        v[:, [i, j]] = v[:, [j, i]]
        vi[[i, j], :] = vi[[j, i], :]

    def negate_row(i):
        d[i, :] = -d[i, :]
        u[i, :] = -u[i, :]
        ui[:, i] = -ui[:, i]

    def add_row(i, j, c):
        # row i += c * row j
        d[i, :] = d[i, :] + c * d[j, :]
        u[i, :] = u[i, :] + c * u[j, :]
        ui[:, j] = ui[:, j] - c * ui[:, i]

    def add_col(j, i, c):
        # col j += c * col i
        d[:, j] = d[:, j] + c * d[:, i]
        v[:, j] = v[:, j] + c * v[:, i]
        vi[i, :] = vi[i, :] - c * vi[j, :]

    def pivot_at(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = d[i, j]
                if x != 0:
                    key = (abs(x), i, j)
                    if best is None or key < best:
                        best = key
        return None if best is None else (best[1], best[2])

    for t in range(min(m, n)):
        while True:
            pos = pivot_at(t)
            if pos is None:
                break
            swap_rows(t, pos[0])
            swap_cols(t, pos[1])
            if d[t, t] < 0:
                negate_row(t)
            p = d[t, t]
            dirty = False
            for i in range(t + 1, m):
                if d[i, t] != 0:
                    add_row(i, t, -(d[i, t] // p))
                    if d[i, t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                if d[t, j] != 0:
                    add_col(j, t, -(d[t, j] // p))
                    if d[t, j] != 0:
                        dirty = True
            if dirty:
                continue
            viol = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i, j] % p != 0:
                        viol = i
                        break
                if viol is not None:
                    break
            if viol is None:
                break
            add_row(t, viol, 1)
        if pivot_at(t) is None:
            break

    return u, ui, d, v, vi


def smith_normal_form(a):
    """Smith decomposition of an integer matrix.

    The diagonal lists the nonzero invariant factors only; zeros pad the rest
    of U * A * V.
    """
    u, _, d, v, _ = _snf_full(a)
    diag = tuple(int(d[i, i]) for i in range(min(d.shape)) if d[i, i] != 0)
    for i in range(len(diag) - 1):
        assert diag[i + 1] % diag[i] == 0
    return SmithDecomposition(left=u, diag=diag, right=v)


def _normalize_column_signs(a):
    out = a.copy()
    for j in range(out.shape[1]):
        for i in range(out.shape[0]):
            if out[i, j] != 0:
                if out[i, j] < 0:
                    out[:, j] = -out[:, j]
                break
    return out


def kernel_basis(a):
    """A lattice basis (as matrix columns) of {x in Z^n : a x = 0}.

    The span is saturated: any integer solution is an integer combination of
    the columns.  Columns are sign-normalized so their first nonzero entry is
    positive.
    """
    a = _as_matrix(a)
    _, _, d, v, _ = _snf_full(a)
    rank = sum(1 for i in range(min(d.shape)) if d[i, i] != 0)
    return _normalize_column_signs(v[:, rank:].copy())


def rank_of(a):
    """Rank over Q of an integer matrix."""
    return len(smith_normal_form(a).diag)


def solve_integer(a, b):
    """One integer solution x of a x = b, or None.

    The solution returned is the canonical one with zero coefficients on the
    kernel coordinates of the Smith decomposition.
    """
    a = _as_matrix(a)
    m, n = a.shape
    if len(b) != m:
        raise InputError("right-hand side has wrong length")
    u, _, d, v, _ = _snf_full(a)
    w = u @ np.array([int(x) for x in b], dtype=object) if m else np.empty((0,), dtype=object)
    y = np.zeros((n,), dtype=object)
    for i in range(m):
        di = d[i, i] if i < min(m, n) else 0
        if di != 0:
            if w[i] % di != 0:
                return None
            y[i] = w[i] // di
        elif w[i] != 0:
            return None
    x = v @ y
    return tuple(int(t) for t in x)


def solve_rational(a, b):
    """One rational solution of a x = b as a tuple of Fractions, or None."""
    a = _as_matrix(a)
    m, n = a.shape
    if len(b) != m:
        raise InputError("right-hand side has wrong length")
    u, _, d, v, _ = _snf_full(a)
    w = [sum(int(u[i, k]) * int(b[k]) for k in range(m)) for i in range(m)]
    y = [Fraction(0)] * n
    for i in range(m):
        di = int(d[i, i]) if i < min(m, n) else 0
        if di != 0:
            y[i] = Fraction(w[i], di)
        elif w[i] != 0:
            return None
    x = [sum(Fraction(int(v[i, k])) * y[k] for k in range(n)) for i in range(n)]
    return tuple(x)


# ---------------------------------------------------------------------------
# finitely generated abelian groups


@dataclass(frozen=True)
class FgAbelianGroup:
    """A finitely generated abelian group in invariant-factor form.

    ``invariant_factors`` are the cyclic orders >= 2 in a divisibility chain;
    elements are represented in "lift coordinates": free_rank integers
    followed by one representative per torsion factor.
    """

    free_rank: int
    invariant_factors: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise InputError("negative free rank")
        fs = tuple(int(f) for f in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        for f in fs:
            if f < 2:
                raise InputError("invariant factors must be >= 2")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise InputError("invariant factors must form a divisibility chain")

    @property
    def lift_dim(self):
        return self.free_rank + len(self.invariant_factors)

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_finite(self):
        return self.free_rank == 0

    def reduce_vector(self, vec):
        """Canonical lift coordinates: torsion entries reduced into [0, f)."""
        vec = tuple(int(x) for x in vec)
        if len(vec) != self.lift_dim:
            raise InputError(
                f"vector of length {len(vec)} in group of lift dimension {self.lift_dim}")
        r = self.free_rank
        tors = tuple(vec[r + i] % f for i, f in enumerate(self.invariant_factors))
        return vec[:r] + tors

    def relation_columns(self):
        """Columns generating the relation lattice of the lift presentation."""
        cols = []
        r = self.free_rank
        for i, f in enumerate(self.invariant_factors):
            e = [0] * self.lift_dim
            e[r + i] = f
            cols.append(tuple(e))
        return cols

    def add(self, x, y):
        return self.reduce_vector(tuple(a + b for a, b in zip(x, y, strict=True)))

    def neg(self, x):
        return self.reduce_vector(tuple(-a for a in x))

    def sub(self, x, y):
        return self.reduce_vector(tuple(a - b for a, b in zip(x, y, strict=True)))

    def scale(self, c, x):
        return self.reduce_vector(tuple(c * a for a in x))

    def zero(self):
        return (0,) * self.lift_dim


def torsion_order(g):
    """The order of the torsion subgroup (product of invariant factors)."""
    out = 1
    for f in g.invariant_factors:
        out *= f
    return out


def is_prime(n):
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_order_invertible(g, p):
    """Whether the torsion order of ``g`` is invertible in residue char p.

    p = 0 means characteristic zero (always invertible); otherwise p must be
    prime and the answer is whether p does not divide the torsion order.
    """
    if p == 0:
        return True
    if not is_prime(p):
        raise DomainError(f"residue characteristic must be 0 or prime, got {p}")
    return torsion_order(g) % p != 0


def cokernel(a, nrows=None):
    """Z^m modulo the column span of the m x n matrix ``a``.

    ``nrows`` disambiguates the target rank when ``a`` is given as an empty
    sequence.
    """
    a = _as_matrix(a) if not (isinstance(a, (list, tuple)) and not a) else intmat([], ncols=0)
    if a.shape == (0, 0) and nrows is not None:
        a = np.empty((nrows, 0), dtype=object)
    m = a.shape[0]
    diag = smith_normal_form(a).diag
    return FgAbelianGroup(
        free_rank=m - len(diag),
        invariant_factors=tuple(d for d in diag if d >= 2),
    )


def group_from_relations(ngens, relation_columns):
    """The group Z^ngens modulo the lattice spanned by ``relation_columns``.

    Returns (group, proj) where ``proj`` is the (lift_dim x ngens) matrix
    taking old coordinates to lift coordinates of the quotient.
    """
    rel = intmat_from_columns(relation_columns, nrows=ngens)
    u, _, d, _, _ = _snf_full(rel)
    m, n = rel.shape
    diag = [int(d[i, i]) for i in range(min(m, n)) if d[i, i] != 0]
    s = len(diag)
    free_rows = [u[i, :] for i in range(s, m)]
    tors_rows = [u[i, :] for i in range(s) if diag[i] >= 2]
    factors = tuple(f for f in diag if f >= 2)
    group = FgAbelianGroup(free_rank=m - s, invariant_factors=factors)
    proj = np.empty((group.lift_dim, m), dtype=object)
    for k, row in enumerate(free_rows + tors_rows):
        proj[k, :] = row
    return group, proj


def quotient_presentation(group, extra_columns):
    """Quotient of ``group`` by the subgroup generated by the given elements.

    ``extra_columns`` are lift vectors of ``group``.  Returns (quotient, proj)
    with ``proj`` mapping lift coordinates of ``group`` to lift coordinates of
    the quotient.
    """
    cols = group.relation_columns() + [tuple(int(x) for x in c) for c in extra_columns]
    return group_from_relations(group.lift_dim, cols)


def subgroup_presentation(group, elements):
    """The subgroup of ``group`` generated by ``elements``, re-presented.

    Returns (sub, images) where ``sub`` is the abstract group in
    invariant-factor form and ``images[i]`` is the lift vector of
    ``elements[i]`` in the new coordinates.
    """
    elements = [group.reduce_vector(e) for e in elements]
    k = len(elements)
    cols = intmat_from_columns(
        elements + group.relation_columns(), nrows=group.lift_dim)
    ker = kernel_basis(cols)
    rel = [tuple(int(ker[i, j]) for i in range(k)) for j in range(ker.shape[1])]
    sub, proj = group_from_relations(k, rel)
    images = [sub.reduce_vector(tuple(int(x) for x in proj[:, i])) for i in range(k)]
    return sub, images


def hom_is_well_defined(source, target, matrix):
    """Whether a lift-coordinate matrix defines a hom of groups."""
    matrix = _as_matrix(matrix)
    if matrix.shape != (target.lift_dim, source.lift_dim):
        return False
    r = source.free_rank
    for i, f in enumerate(source.invariant_factors):
        col = matrix[:, r + i]
        for j in range(target.free_rank):
            if f * col[j] != 0:
                return False
        for j, g in enumerate(target.invariant_factors):
            if (f * col[target.free_rank + j]) % g != 0:
                return False
    return True


def hom_kernel(source, target, matrix):
    """Kernel of a hom of presented groups, in invariant-factor form."""
    matrix = _as_matrix(matrix)
    rel = intmat_from_columns(target.relation_columns(), nrows=target.lift_dim)
    combined = np.hstack([matrix, rel])
    ker = kernel_basis(combined)
    gens = [tuple(int(ker[i, j]) for i in range(source.lift_dim))
            for j in range(ker.shape[1])]
    sub, _ = subgroup_presentation(source, gens) if gens else (
        FgAbelianGroup(0, ()), [])
    return sub


def hom_cokernel(source, target, matrix):
    """Cokernel of a hom of presented groups, in invariant-factor form."""
    matrix = _as_matrix(matrix)
    cols = mat_columns(matrix)
    group, _ = quotient_presentation(target, cols)
    return group


# ---------------------------------------------------------------------------
# nonnegative integer solving (Contejean-Devie)


def minimal_nonneg_solutions(a, *, coordinate_bounds=None, stop=None):
    """All minimal nonzero solutions of a x = 0 with x >= 0 integral.

    Contejean-Devie search: the frontier grows from unit vectors, a tuple t is
    extended by e_i only when <A t, A e_i> < 0, and anything dominating a
    known solution is pruned.  This terminates and returns exactly the
    (finitely many, by Dickson's lemma) minimal solutions.

    ``coordinate_bounds`` optionally caps individual coordinates (sound for
    recovering the minimal solutions within those caps, since every minimal
    solution is reached by a coordinatewise-monotone path).  ``stop`` is an
    optional predicate; the search returns early with the solutions found so
    far as soon as a freshly found minimal solution satisfies it.
    """
    a = _as_matrix(a)
    m, n = a.shape
    if n == 0:
        return []
    cols = [tuple(int(a[i, j]) for i in range(m)) for j in range(n)]
    zero_val = (0,) * m

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    minimals = []

    def dominated(t):
        return any(all(t[k] >= s[k] for k in range(n)) for s in minimals)

    frontier = {}
    for i in range(n):
        if coordinate_bounds is not None and coordinate_bounds[i] is not None \
                and coordinate_bounds[i] < 1:
            continue
        e = tuple(1 if k == i else 0 for k in range(n))
        frontier[e] = cols[i]

    while frontier:
        for t in sorted(k for k, v in frontier.items() if v == zero_val):
            if not dominated(t):
                minimals.append(t)
                if stop is not None and stop(t):
                    return minimals
        nxt = {}
        for t, val in frontier.items():
            if val == zero_val:
                continue
            for i in range(n):
                if coordinate_bounds is not None and coordinate_bounds[i] is not None \
                        and t[i] + 1 > coordinate_bounds[i]:
                    continue
                if dot(val, cols[i]) < 0:
                    t2 = t[:i] + (t[i] + 1,) + t[i + 1:]
                    if t2 in nxt or dominated(t2):
                        continue
                    nxt[t2] = tuple(x + y for x, y in zip(val, cols[i]))
        frontier = nxt
    return minimals


def _inhomogeneous_minimal_solutions(a, b, *, stop_first=False):
    """Minimal nonneg solutions of a x = b via homogenization."""
    a = _as_matrix(a)
    m, n = a.shape
    if len(b) != m:
        raise InputError("right-hand side has wrong length")
    bcol = np.empty((m, 1), dtype=object)
    for i in range(m):
        bcol[i, 0] = -int(b[i])
    hom = np.hstack([a, bcol])
    bounds = [None] * n + [1]
    stop = (lambda t: t[n] == 1) if stop_first else None
    sols = minimal_nonneg_solutions(hom, coordinate_bounds=bounds, stop=stop)
    return [s[:n] for s in sols if s[n] == 1]


def solve_nonneg(a, b):
    """The lexicographically smallest x >= 0 with a x = b, or None.

    Complete: returns None only when no nonnegative integer solution exists.
    (The lex-smallest solution is componentwise-minimal, and the search
    enumerates all minimal solutions.)
    """
    a = _as_matrix(a)
    m, n = a.shape
    if len(b) != m:
        raise InputError("right-hand side has wrong length")
    if all(int(x) == 0 for x in b):
        return (0,) * n
    if n == 0:
        return None
    sols = _inhomogeneous_minimal_solutions(a, b)
    return min(sols) if sols else None


def has_nonneg_solution(a, b):
    """Whether a x = b has any nonnegative integer solution."""
    if all(int(x) == 0 for x in b):
        return True
    if _as_matrix(a).shape[1] == 0:
        return False
    return bool(_inhomogeneous_minimal_solutions(a, b, stop_first=True))
