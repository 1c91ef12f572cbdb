"""Exact sparse echelon reduction and small dense determinants.

The echelon form produced here is the canonical reduced row-echelon form
of the row space: pivot columns are the leftmost possible, pivot entries
are 1, and pivots are eliminated from every other row.  Because RREF is
unique per subspace, the output is bit-identical no matter the order in
which rows are fed in.
"""

from __future__ import annotations

from .rational import Rat


class SparseEchelon:
    """Incremental reduced row-echelon form over Q.

    Rows are sparse dicts column -> nonzero rational.  After every
    insertion the stored rows satisfy: each row's minimal column is its
    pivot, the pivot coefficient is 1, and no other stored row has
    support on any pivot column.
    """

    def __init__(self):
        self.rows = {}  # pivot column -> row dict

    def reduce(self, row):
        """Return row reduced against all stored pivots (a fresh dict)."""
        row = {c: Rat(v) for c, v in row.items() if v}
        for c in sorted(row):
            if c not in row:
                continue
            piv = self.rows.get(c)
            if piv is None:
                continue
            factor = row[c]
            for pc, pv in piv.items():
                w = row.get(pc, Rat(0)) - factor * pv
                if w:
                    row[pc] = w
                else:
                    row.pop(pc, None)
        return row

    def add(self, row) -> bool:
        """Insert a row; returns True if the rank increased."""
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        # eliminate the new pivot from existing rows
        for q, r in self.rows.items():
            f = r.get(p)
            if f is None:
                continue
            for c, v in row.items():
                w = r.get(c, Rat(0)) - f * v
                if w:
                    r[c] = w
                else:
                    r.pop(c, None)
        self.rows[p] = row
        return True

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def contains(self, row) -> bool:
        return not self.reduce(row)


def echelon_reduce(rows):
    """Reduce a list of sparse rational rows to canonical RREF.

    Returns (pivot column list, list of reduced rows sorted by pivot).
    """
    ech = SparseEchelon()
    for r in rows:
        ech.add(r)
    piv = ech.pivots()
    return piv, [ech.rows[p] for p in piv]


class RatMatrix:
    """A small dense rectangular matrix; entries are any ring values
    supporting +, -, * (rationals, TruncSeries, LaurentPoly)."""

    def __init__(self, rows):
        self.data = [list(r) for r in rows]
        self.nrows = len(self.data)
        self.ncols = len(self.data[0]) if self.data else 0
        if any(len(r) != self.ncols for r in self.data):
            raise ValueError("ragged matrix")

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def det(self, one):
        """Exact determinant by division-free Laplace expansion with
        memoization on column subsets.  `one` is the ring's unit."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of non-square matrix")
        n = self.nrows
        if n == 0:
            return one
        memo = {}

        def minor(row, cols):
            # determinant of rows row..n-1 on the column bitmask `cols`
            if row == n:
                return one
            key = cols
            if key in memo:
                return memo[key]
            total = None
            sign = 1
            k = 0
            for j in range(n):
                if not (cols >> j) & 1:
                    continue
                entry = self.data[row][j]
                is_zero = getattr(entry, "is_zero", None)
                nonzero = not is_zero() if is_zero else bool(entry)
                if nonzero:
                    sub = minor(row + 1, cols & ~(1 << j))
                    term = entry * sub if sign > 0 else -(entry * sub)
                    total = term if total is None else total + term
                sign = -sign
                k += 1
            if total is None:
                total = one - one
            memo[key] = total
            return total

        return minor(0, (1 << n) - 1)


def det_series(m: RatMatrix, cap=None):
    """Determinant of a square matrix of TruncSeries.

    For the empty (0x0) matrix the degree cap must be passed explicitly;
    the result is then the constant series 1.
    """
    from .rings import TruncSeries

    if m.nrows != m.ncols:
        raise ValueError("determinant of non-square matrix")
    if m.nrows == 0:
        if cap is None:
            raise ValueError("empty matrix: pass the degree cap")
        return TruncSeries.const(cap, 1)
    cap = m.data[0][0].cap
    return m.det(TruncSeries.const(cap, 1))
