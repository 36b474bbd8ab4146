"""Dense and sparse exact linear algebra over the rationals.

Everything here works on fractions.Fraction entries.  Elimination follows one
deterministic pivot rule throughout: walk the columns in order and, among the
rows still available with a nonzero entry in the current column, pick the one
whose entry has the largest absolute numerator, first such row on ties.
"""

from fractions import Fraction
from math import gcd

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Mat:
    """A dense rational matrix with explicit shape (rows may be zero-length)."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows, ncols, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self.rows = [[_ZERO] * ncols for _ in range(nrows)]
        else:
            self.rows = [[Fraction(x) for x in r] for r in rows]
            assert len(self.rows) == nrows
            assert all(len(r) == ncols for r in self.rows)

    @classmethod
    def from_rows(cls, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("need ncols for an empty row list")
            ncols = len(rows[0])
        return cls(len(rows), ncols, rows)

    @classmethod
    def identity(cls, n):
        m = cls(n, n)
        for i in range(n):
            m.rows[i][i] = _ONE
        return m

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols)

    def __getitem__(self, rc):
        return self.rows[rc[0]][rc[1]]

    def __setitem__(self, rc, val):
        self.rows[rc[0]][rc[1]] = Fraction(val)

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __add__(self, other):
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        return Mat(self.nrows, self.ncols,
                   [[a + b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        return Mat(self.nrows, self.ncols,
                   [[a - b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            return Mat(self.nrows, self.ncols,
                       [[a * s for a in r] for r in self.rows])
        assert self.ncols == other.nrows, \
            "shape mismatch: %dx%d * %dx%d" % (self.nrows, self.ncols,
                                               other.nrows, other.ncols)
        out = Mat(self.nrows, other.ncols)
        for i, row in enumerate(self.rows):
            orow = out.rows[i]
            for k, a in enumerate(row):
                if a:
                    brow = other.rows[k]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] += a * b
        return out

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def matvec(self, vec):
        assert self.ncols == len(vec)
        return [sum((a * v for a, v in zip(row, vec) if v), _ZERO)
                for row in self.rows]

    def transpose(self):
        return Mat(self.ncols, self.nrows,
                   [[self.rows[i][j] for i in range(self.nrows)]
                    for j in range(self.ncols)])

    def column(self, j):
        return [r[j] for r in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self):
        return all(a == 0 for r in self.rows for a in r)

    def copy(self):
        return Mat(self.nrows, self.ncols, self.rows)

    def __repr__(self):
        if self.nrows == 0 or self.ncols == 0:
            return "Mat(%d, %d)" % (self.nrows, self.ncols)
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return "Mat[%s]" % body


def _pick_pivot(rows, candidates, col):
    """Deterministic pivot: max |numerator| in this column, first on ties."""
    best = None
    best_num = -1
    for i in candidates:
        a = rows[i][col]
        if a:
            n = abs(a.numerator)
            if n > best_num:
                best, best_num = i, n
    return best


def rref(mat):
    """Reduced row echelon form.  Returns (list of reduced rows, pivot cols).

    Accepts a Mat or a list of row lists; the input is not modified.
    """
    if isinstance(mat, Mat):
        rows = [list(r) for r in mat.rows]
        ncols = mat.ncols
    else:
        rows = [list(r) for r in mat]
        ncols = len(rows[0]) if rows else 0
    pivots = []
    free = list(range(len(rows)))
    for col in range(ncols):
        i = _pick_pivot(rows, free, col)
        if i is None:
            continue
        free.remove(i)
        piv = rows[i]
        a = piv[col]
        if a != 1:
            rows[i] = piv = [x / a for x in piv]
        for j in range(len(rows)):
            if j != i and rows[j][col]:
                c = rows[j][col]
                rj = rows[j]
                rows[j] = [x - c * y for x, y in zip(rj, piv)]
        pivots.append((col, i))
    ordered = [rows[i] for _, i in pivots]
    return ordered, [col for col, _ in pivots]


def rank(mat):
    return len(rref(mat)[1])


def kernel_basis(mat):
    """Basis of {v : mat @ v = 0}, one vector per free column, deterministic.

    Each basis vector has 1 in its free coordinate and the pivot coordinates
    solved from the RREF.
    """
    if isinstance(mat, Mat):
        ncols = mat.ncols
    else:
        ncols = len(mat[0]) if len(mat) else 0
    rows, pivots = rref(mat)
    pivot_set = set(pivots)
    basis = []
    for free_col in range(ncols):
        if free_col in pivot_set:
            continue
        v = [_ZERO] * ncols
        v[free_col] = _ONE
        for prow, pcol in zip(rows, pivots):
            v[pcol] = -prow[free_col]
        basis.append(v)
    return basis


def solve_columns(A, B):
    """Solve A @ X = B column by column; raises ValueError if inconsistent.

    A: Mat (m x n) with full column rank not required -- any solution is
    returned (free variables set to 0, deterministically via RREF).
    """
    aug = [list(ar) + list(br) for ar, br in zip(A.rows, B.rows)]
    if not aug:
        # 0-row system: consistent iff B has no rows; X = 0
        return Mat(A.ncols, B.ncols)
    rows, pivots = rref(aug)
    n = A.ncols
    X = Mat(A.ncols, B.ncols)
    for prow, pcol in zip(rows, pivots):
        if pcol >= n:
            raise ValueError("inconsistent linear system")
        for j in range(B.ncols):
            X.rows[pcol][j] = prow[n + j]
    return X


class RowSpace:
    """An incrementally built row space in RREF, with membership testing.

    The basis it exposes is the canonical RREF basis of the span, so two
    RowSpaces over the same subspace expose identical bases no matter the
    insertion order.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []     # reduced rows, sorted by pivot column
        self.pivots = []   # pivot column of each row

    def _reduce(self, vec):
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                c = v[p]
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, vec):
        """Insert a vector; returns True if it enlarged the space."""
        v = self._reduce(vec)
        for p in range(self.ncols):
            if v[p]:
                inv = v[p]
                v = [a / inv for a in v]
                # back-substitute into existing rows to keep full RREF
                for i, row in enumerate(self.rows):
                    if row[p]:
                        c = row[p]
                        self.rows[i] = [a - c * b for a, b in zip(row, v)]
                idx = sum(1 for q in self.pivots if q < p)
                self.rows.insert(idx, v)
                self.pivots.insert(idx, p)
                return True
        return False

    def contains(self, vec):
        return all(a == 0 for a in self._reduce(vec))

    def contains_space(self, other):
        return all(self.contains(r) for r in other.rows)

    def dim(self):
        return len(self.rows)

    def basis(self):
        return [list(r) for r in self.rows]


# ---------------------------------------------------------------------------
# sparse elimination (for the cocycle systems, which are large but local)

class SparseSystem:
    """Homogeneous system over Q with rows stored as {column: coefficient}.

    eliminate() runs the deterministic column-order / max-|numerator| pivot
    rule as forward elimination only (row echelon, pivot rows normalized but
    never revisited): these systems are banded along the depth grading and
    full back-substitution during elimination would destroy that locality.
    Nullspace vectors are back-substituted on demand instead.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []

    def add_row(self, row):
        row = {c: Fraction(v) for c, v in row.items() if v != 0}
        if row:
            self.rows.append(row)

    @staticmethod
    def _to_integer_row(row):
        """(integer dict, positive denominator) with content reduced, equal
        to the rational row entrywise."""
        den = 1
        for v in row.values():
            den = den * v.denominator // gcd(den, v.denominator)
        ints = {c: v.numerator * (den // v.denominator)
                for c, v in row.items()}
        g = den
        for v in ints.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            den //= g
            ints = {c: v // g for c, v in ints.items()}
        return ints, den

    def eliminate(self):
        """Row-echelon pass.  The arithmetic runs on integer-scaled rows for
        speed, but the pivot choice is made on the exact rational entries
        (numerator of ints[c]/den), so the result is identical to running
        the dense rule entry by entry."""
        if getattr(self, "_eliminated", False):
            return
        irows = [self._to_integer_row(r) for r in self.rows]
        touching = {}
        for i, (ints, _) in enumerate(irows):
            for c in ints:
                touching.setdefault(c, set()).add(i)
        self.pivot_of_col = {}
        used = set()
        for col in range(self.ncols):
            cand = touching.get(col)
            if not cand:
                continue
            best, best_num = None, -1
            for i in sorted(cand):
                if i in used:
                    continue
                ints, den = irows[i]
                a = ints.get(col)
                if not a:
                    cand.discard(i)
                    continue
                n = abs(a) // gcd(abs(a), den)
                if n > best_num:
                    best, best_num = i, n
            if best is None:
                continue
            self.pivot_of_col[col] = best
            used.add(best)
            pints, pden = irows[best]
            plead = pints[col]
            pitems = list(pints.items())
            for i in list(cand):
                if i in used:
                    continue
                ints, den = irows[i]
                factor = ints.get(col)
                if not factor:
                    cand.discard(i)
                    continue
                # row <- row - (row[col]/piv[col]) * piv, over a common
                # integer scale; signs arranged so the denominator stays > 0
                out = {c: v * plead for c, v in ints.items()}
                for c, pv in pitems:
                    nv = out.get(c, 0) - factor * pv
                    if nv:
                        out[c] = nv
                    elif c in out:
                        del out[c]
                        touching.get(c, set()).discard(i)
                nden = den * plead
                if nden < 0:
                    nden = -nden
                    out = {c: -v for c, v in out.items()}
                g = nden
                for v in out.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    nden //= g
                    out = {c: v // g for c, v in out.items()}
                irows[i] = (out, nden)
                for c in out:
                    touching.setdefault(c, set()).add(i)
        # expose the echelon rows as rationals with pivot normalized to 1
        self.rows = []
        for ints, den in irows:
            self.rows.append({c: Fraction(v, den) for c, v in ints.items()})
        for col, i in self.pivot_of_col.items():
            row = self.rows[i]
            lead = row[col]
            if lead != 1:
                self.rows[i] = {c: v / lead for c, v in row.items()}
        self._eliminated = True

    def rank(self):
        self.eliminate()
        return len(self.pivot_of_col)

    def reduce_vector(self, vec):
        """Reduce a dense vector modulo the row space (zeros all pivot
        coordinates); the input list is not modified."""
        self.eliminate()
        v = list(vec)
        for pc in sorted(self.pivot_of_col):
            if v[pc]:
                factor = v[pc]
                for c, val in self.rows[self.pivot_of_col[pc]].items():
                    v[c] -= factor * val
        return v

    def nullspace_basis(self):
        """Kernel basis, one dense vector per free column, obtained by
        back-substitution through the echelon rows in reverse pivot order."""
        self.eliminate()
        pivot_cols = sorted(self.pivot_of_col)
        basis = []
        for free in range(self.ncols):
            if free in self.pivot_of_col:
                continue
            v = {free: _ONE}
            for pc in reversed(pivot_cols):
                row = self.rows[self.pivot_of_col[pc]]
                s = _ZERO
                for c, val in row.items():
                    if c != pc and c in v:
                        s += val * v[c]
                if s:
                    v[pc] = -s
            dense = [_ZERO] * self.ncols
            for c, val in v.items():
                dense[c] = val
            basis.append(dense)
        return basis
