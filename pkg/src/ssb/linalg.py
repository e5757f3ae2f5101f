"""Exact linear algebra: rank / kernel over a field, Smith normal form over
the integers, and fraction-free determinants.

Dense matrices are lists of row lists of field scalars.  Sparse matrices are
lists of {column: scalar} dicts.  Everything is exact; the rational path goes
through integer fraction-free (Bareiss) elimination to avoid Fraction churn
on larger systems.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import RationalField


# ---------- dense elimination over a field ----------

def rref(rows, field):
    """Reduced row echelon form.  Returns (new_rows, pivot_columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if not field.is_zero(mat[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not field.is_zero(mat[i][c]):
                f = mat[i][c]
                mat[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows, field):
    """Rank of a dense matrix over the field (exact)."""
    rows = [r for r in rows if any(not field.is_zero(x) for x in r)]
    if not rows:
        return 0
    if isinstance(field, RationalField):
        return _rank_int(_clear_denominators(rows))
    return len(rref(rows, field)[0])


def kernel_dim(rows, field, ncols=None):
    """Dimension of {x : M x = 0} for the matrix M given by rows."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return ncols - rank(rows, field)


def nullspace(rows, field, ncols=None):
    """Basis vectors of {x : M x = 0}, from the reduced echelon form."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, pivots = rref(rows, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [field.zero()] * ncols
        vec[fc] = field.one()
        for i, pc in enumerate(pivots):
            vec[pc] = field.neg(red[i][fc])
        basis.append(vec)
    return basis


class EchelonSpan:
    """Incremental row span with reduced pivots; supports membership tests."""

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = []      # echelon rows, normalized to pivot 1
        self.pivots = []    # pivot column per row

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        """Residue of vec modulo the current span (fresh list)."""
        f = self.field
        vec = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if not f.is_zero(c):
                for j in range(p, self.ncols):
                    vec[j] = f.sub(vec[j], f.mul(c, row[j]))
        return vec

    def contains(self, vec):
        return all(self.field.is_zero(x) for x in self.reduce(vec))

    def add(self, vec):
        """Insert vec; returns True if the span grew."""
        f = self.field
        vec = self.reduce(vec)
        for p in range(self.ncols):
            if not f.is_zero(vec[p]):
                inv = f.inv(vec[p])
                vec = [f.mul(inv, x) for x in vec]
                for i, row in enumerate(self.rows):
                    c = row[p]
                    if not f.is_zero(c):
                        self.rows[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(row, vec)]
                idx = 0
                while idx < len(self.pivots) and self.pivots[idx] < p:
                    idx += 1
                self.rows.insert(idx, vec)
                self.pivots.insert(idx, p)
                return True
        return False


# ---------- integer fraction-free elimination ----------

def _clear_denominators(rows):
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _rank_int(rows):
    """Rank over QQ of an integer matrix by fraction-free elimination."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pr = mat[r]
        for i in range(r + 1, len(mat)):
            row = mat[i]
            head = row[c]
            for j in range(c, ncols):
                row[j] = (pr[c] * row[j] - head * pr[j]) // prev
        prev = pr[c]
        r += 1
        if r == len(mat):
            break
    return r


def det_int(rows):
    """Determinant of a square integer matrix (Bareiss, exact, signed)."""
    mat = [list(r) for r in rows]
    n = len(mat)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n - 1):
        if mat[c][c] == 0:
            pivot = None
            for i in range(c + 1, n):
                if mat[i][c]:
                    pivot = i
                    break
            if pivot is None:
                return 0
            mat[c], mat[pivot] = mat[pivot], mat[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                mat[i][j] = (mat[c][c] * mat[i][j] - mat[i][c] * mat[c][j]) // prev
            mat[i][c] = 0
        prev = mat[c][c]
    return sign * mat[n - 1][n - 1]


# ---------- sparse rank ----------

def sparse_rank(rows, field):
    """Rank of a sparse matrix given as {col: scalar} dicts.

    Pivoting prefers short rows and short pivot columns to limit fill-in;
    adequate for the very sparse right-module complexes handled here.
    """
    f = field
    live = []
    for row in rows:
        row = {c: v for c, v in row.items() if not f.is_zero(v)}
        if row:
            live.append(row)
    col_count = {}
    for row in live:
        for c in row:
            col_count[c] = col_count.get(c, 0) + 1
    rank_acc = 0
    while live:
        best = min(range(len(live)),
                   key=lambda i: (len(live[i]), min(col_count[c] for c in live[i])))
        row = live.pop(best)
        pivot_col = min(row, key=lambda c: (col_count[c], c))
        inv = f.inv(row[pivot_col])
        row = {c: f.mul(inv, v) for c, v in row.items()}
        rank_acc += 1
        nxt = []
        col_count = {}
        for other in live:
            coef = other.get(pivot_col)
            if coef is not None:
                merged = dict(other)
                del merged[pivot_col]
                for c, v in row.items():
                    if c == pivot_col:
                        continue
                    nv = f.sub(merged.get(c, f.zero()), f.mul(coef, v))
                    if f.is_zero(nv):
                        merged.pop(c, None)
                    else:
                        merged[c] = nv
                other = merged
            if other:
                nxt.append(other)
                for c in other:
                    col_count[c] = col_count.get(c, 0) + 1
        live = nxt
    return rank_acc


# ---------- Smith normal form ----------

def smith_normal_form(rows):
    """Invariant factors (nonnegative, divisibility-ordered) of an integer
    matrix, by elementary operations with a minimal-absolute-value pivot and
    a deterministic (row, col) tie-break.
    """
    mat = [list(map(int, r)) for r in rows]
    m = len(mat)
    n = len(mat[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        # locate minimal nonzero entry in the trailing block
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(mat[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        mat[t], mat[pi] = mat[pi], mat[t]
        for row in mat:
            row[t], row[pj] = row[pj], row[t]
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if mat[i][t]:
                    q = mat[i][t] // mat[t][t]
                    for j in range(t, n):
                        mat[i][j] -= q * mat[t][j]
                    if mat[i][t]:
                        mat[t], mat[i] = mat[i], mat[t]
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, n):
                if mat[t][j]:
                    q = mat[t][j] // mat[t][t]
                    for i in range(t, m):
                        mat[i][j] -= q * mat[i][t]
                    if mat[t][j]:
                        for i in range(t, m):
                            mat[i][t], mat[i][j] = mat[i][j], mat[i][t]
                        dirty = True
            if not dirty:
                break
        # enforce divisibility of the trailing block by the pivot
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if mat[i][j] % mat[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(t, n):
                mat[t][j] += mat[offender][j]
            continue
        diag.append(abs(mat[t][t]))
        t += 1
    for k in range(1, len(diag)):
        assert diag[k] % diag[k - 1] == 0
    return diag
