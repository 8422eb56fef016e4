"""Dense matrices over a commutative ring scalar, plus permutations.

Scalars are LaurentPoly or PrimeFieldScalar values; the `ring` of a matrix
is the corresponding RingContext or PrimeField.  Matrices are immutable
and all operations return fresh values.
"""
from __future__ import annotations

from .ring import ContextMismatch, LaurentPoly, NotAUnit, RingContext


class ShapeMismatch(ValueError):
    """Matrix shapes are incompatible for the requested operation."""


class Permutation:
    """A bijection of {0, ..., n-1}, stored as the tuple of images."""

    __slots__ = ("img",)

    def __init__(self, images):
        img = tuple(int(i) for i in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError("not a bijection: %r" % (img,))
        self.img = img

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def transposition(cls, n, i):
        """Swap positions i and i+1 (0-based)."""
        img = list(range(n))
        img[i], img[i + 1] = img[i + 1], img[i]
        return cls(img)

    @property
    def size(self):
        return len(self.img)

    def __call__(self, j):
        return self.img[j]

    def __mul__(self, other):
        """(p * q)(j) = p(q(j))."""
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(self.img[other.img[j]] for j in range(self.size))

    def inverse(self):
        inv = [0] * self.size
        for j, i in enumerate(self.img):
            inv[i] = j
        return Permutation(inv)

    def is_identity(self):
        return self.img == tuple(range(self.size))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        return "Permutation(%r)" % (self.img,)


class RingMatrix:
    """Row-major dense matrix over a single ring context."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring, rows, cols, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ShapeMismatch("expected %d entries, got %d" % (rows * cols, len(entries)))
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, ring, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeMismatch("ragged rows")
        flat = []
        for r in rows:
            for e in r:
                flat.append(ring.const(e) if isinstance(e, int) else e)
        return cls(ring, len(rows), ncols, flat)

    @classmethod
    def identity(cls, ring, n):
        one, zero = ring.one(), ring.zero()
        return cls(ring, n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, ring, rows, cols):
        zero = ring.zero()
        return cls(ring, rows, cols, [zero] * (rows * cols))

    @classmethod
    def from_entries_dict(cls, ring, n, entries, default_zero=True):
        """Square matrix from {(i, j): scalar} with zeros elsewhere (0-based)."""
        zero = ring.zero()
        flat = [zero] * (n * n)
        for (i, j), v in entries.items():
            flat[i * n + j] = ring.const(v) if isinstance(v, int) else v
        return cls(ring, n, n, flat)

    @classmethod
    def permutation_matrix(cls, ring, perm):
        """P with P e_j = e_{perm(j)}: entry (perm(j), j) = 1."""
        n = perm.size
        return cls.from_entries_dict(ring, n, {(perm(j), j): 1 for j in range(n)})

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def is_square(self):
        return self.rows == self.cols

    def is_identity(self):
        if not self.is_square():
            return False
        for i in range(self.rows):
            for j in range(self.cols):
                e = self[i, j]
                if i == j:
                    if not e.is_one():
                        return False
                elif not e.is_zero():
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, RingMatrix)
            and self.ring == other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __mul__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatch("%dx%d times %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        if self.ring != other.ring:
            raise ContextMismatch("matrices over different rings")
        if isinstance(self.ring, RingContext):
            return self._mul_laurent(other)
        return self._mul_generic(other)

    def _mul_laurent(self, other):
        ctx = self.ring
        n, m, l = self.rows, self.cols, other.cols
        brows = []
        for j in range(m):
            base = j * l
            brows.append([
                (k, other.entries[base + k].terms)
                for k in range(l)
                if other.entries[base + k].terms
            ])
        zero = ctx.zero()
        flat = []
        for i in range(n):
            acc = [None] * l
            abase = i * m
            for j in range(m):
                at = self.entries[abase + j].terms
                if not at:
                    continue
                for k, bt in brows[j]:
                    d = acc[k]
                    if d is None:
                        d = acc[k] = {}
                    for ea, ca in at.items():
                        for eb, cb in bt.items():
                            e = tuple(x + y for x, y in zip(ea, eb))
                            s = d.get(e, 0) + ca * cb
                            if s:
                                d[e] = s
                            elif e in d:
                                del d[e]
            flat.extend(zero if not d else LaurentPoly._raw(ctx, d) for d in acc)
        return RingMatrix(self.ring, n, l, flat)

    def _mul_generic(self, other):
        n, m, l = self.rows, self.cols, other.cols
        flat = []
        for i in range(n):
            for k in range(l):
                acc = self.ring.zero()
                for j in range(m):
                    a = self.entries[i * m + j]
                    if a.is_zero():
                        continue
                    acc = acc + a * other.entries[j * l + k]
                flat.append(acc)
        return RingMatrix(self.ring, n, l, flat)

    def __add__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("shape mismatch in add")
        return RingMatrix(self.ring, self.rows, self.cols,
                          [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("shape mismatch in sub")
        return RingMatrix(self.ring, self.rows, self.cols,
                          [a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, s):
        return RingMatrix(self.ring, self.rows, self.cols, [s * e for e in self.entries])

    def __pow__(self, k):
        if not self.is_square():
            raise ShapeMismatch("power of a non-square matrix")
        k = int(k)
        if k < 0:
            return self.monomial_inverse() ** (-k)
        result = RingMatrix.identity(self.ring, self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def transpose(self):
        return RingMatrix(self.ring, self.cols, self.rows,
                          [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def is_monomial(self):
        """Exactly one nonzero unit entry per row and per column."""
        if not self.is_square():
            return False
        seen_cols = set()
        for i in range(self.rows):
            nz = [(j, e) for j, e in enumerate(self.row(i)) if not e.is_zero()]
            if len(nz) != 1:
                return False
            j, e = nz[0]
            if j in seen_cols or not e.is_unit():
                return False
            seen_cols.add(j)
        return True

    def monomial_inverse(self):
        """Inverse of a monomial matrix (unit entries, permutation support)."""
        if not self.is_square():
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.rows
        zero = self.ring.zero()
        flat = [zero] * (n * n)
        seen_cols = set()
        for i in range(n):
            nz = [(j, e) for j, e in enumerate(self.row(i)) if not e.is_zero()]
            if len(nz) != 1 or nz[0][0] in seen_cols:
                raise NotAUnit("matrix is not monomial")
            j, e = nz[0]
            seen_cols.add(j)
            flat[j * n + i] = e.inverse()
        return RingMatrix(self.ring, n, n, flat)

    def determinant(self):
        """Exact determinant by cofactor expansion with column-subset memoisation.

        Fine up to ~10x10; larger matrices never need a determinant here.
        """
        if not self.is_square():
            raise ShapeMismatch("determinant of a non-square matrix")
        n = self.rows
        memo = {}

        def minor(row, colmask):
            if row == n:
                return self.ring.one()
            key = colmask
            if key in memo:
                return memo[key]
            acc = self.ring.zero()
            sign = 1
            for j in range(n):
                bit = 1 << j
                if colmask & bit:
                    continue
                e = self[row, j]
                if not e.is_zero():
                    sub = minor(row + 1, colmask | bit)
                    term = e * sub
                    acc = acc + (term if sign > 0 else -term)
                sign = -sign
            memo[key] = acc
            return acc

        return minor(0, 0)

    def adjugate_inverse(self):
        """Inverse via the adjugate; requires a unit determinant."""
        det = self.determinant()
        if not det.is_unit():
            raise NotAUnit("determinant is not a unit: %s" % det)
        det_inv = det.inverse()
        n = self.rows
        flat = []
        for i in range(n):
            for j in range(n):
                rows = [r for r in range(n) if r != j]
                cols = [c for c in range(n) if c != i]
                sub = RingMatrix(self.ring, n - 1, n - 1,
                                 [self[r, c] for r in rows for c in cols])
                cof = sub.determinant() if n > 1 else self.ring.one()
                if (i + j) % 2:
                    cof = -cof
                flat.append(det_inv * cof)
        return RingMatrix(self.ring, n, n, flat)

    def inverse(self):
        if self.is_monomial():
            return self.monomial_inverse()
        return self.adjugate_inverse()

    def base_change(self, basis, basis_inverse=None):
        """Conjugate: basis^{-1} * self * basis.

        `basis` is a Permutation, a monomial RingMatrix, or any invertible
        RingMatrix provided together with its inverse.
        """
        if isinstance(basis, Permutation):
            basis = RingMatrix.permutation_matrix(self.ring, basis)
        if basis_inverse is None:
            basis_inverse = basis.inverse()
        return basis_inverse * self * basis

    def index_relabel(self, perm):
        """Entry (i, j) of the result is entry (perm(i), perm(j)) of self."""
        if not self.is_square():
            raise ShapeMismatch("index relabel needs a square matrix")
        n = self.rows
        return RingMatrix(self.ring, n, n,
                          [self[perm(i), perm(j)] for i in range(n) for j in range(n)])

    def variable_twist(self, perm):
        """Relabel indexed-family variables: exponent at fam_j moves to fam_{perm(j)}.

        The context must consist entirely of indexed families (u1..un, ...)
        whose index sets all equal {1..perm.size}.
        """
        ctx = self.ring
        if not isinstance(ctx, RingContext):
            raise ContextMismatch("variable twist needs a Laurent context")
        fams = ctx.families()
        by_family = {}
        for v, (fam, idx) in fams.items():
            by_family.setdefault(fam, {})[idx] = v
        n = perm.size
        for fam, members in by_family.items():
            if set(members) != set(range(1, n + 1)):
                raise ValueError("family %r does not cover indices 1..%d" % (fam, n))
        # position i in the exponent vector maps to position target[i]
        target = []
        for v in ctx.variables:
            fam, idx = fams[v]
            target.append(ctx.index(by_family[fam][perm(idx - 1) + 1]))
        flat = []
        for e in self.entries:
            terms = {}
            for exps, c in e.terms.items():
                new = [0] * ctx.arity
                for i, x in enumerate(exps):
                    new[target[i]] += x
                terms[tuple(new)] = c
            flat.append(LaurentPoly._raw(ctx, terms))
        return RingMatrix(ctx, self.rows, self.cols, flat)

    def submatrix(self, row_sel, col_sel):
        return RingMatrix(self.ring, len(row_sel), len(col_sel),
                          [self[i, j] for i in row_sel for j in col_sel])

    def map_entries(self, fn, ring=None):
        return RingMatrix(ring if ring is not None else self.ring,
                          self.rows, self.cols, [fn(e) for e in self.entries])

    def render(self):
        """Text form: `rows cols` header, then `;`-separated rows."""
        from .ring import poly_render
        lines = ["%d %d" % (self.rows, self.cols)]
        for i in range(self.rows):
            lines.append(";".join(poly_render(e) for e in self.row(i)))
        return "\n".join(lines)

    @classmethod
    def parse(cls, ring, text):
        lines = [ln for ln in (ln.strip() for ln in text.splitlines()) if ln]
        rows, cols = (int(x) for x in lines[0].split())
        if len(lines) != rows + 1:
            raise ShapeMismatch("expected %d data rows" % rows)
        flat = []
        for ln in lines[1:]:
            parts = ln.split(";")
            if len(parts) != cols:
                raise ShapeMismatch("expected %d columns" % cols)
            flat.extend(ring.parse(p) for p in parts)
        return cls(ring, rows, cols, flat)

    def __repr__(self):
        return "RingMatrix(%dx%d over %r)" % (self.rows, self.cols, self.ring)


def direct_sum(blocks, ring=None):
    """Block-diagonal assembly; `ring` is required for an empty sequence."""
    blocks = list(blocks)
    if not blocks:
        if ring is None:
            raise ValueError("empty direct sum needs an explicit ring")
        return RingMatrix(ring, 0, 0, [])
    ring = blocks[0].ring
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = RingMatrix.zeros(ring, rows, cols)
    flat = list(out.entries)
    r0 = c0 = 0
    for b in blocks:
        if b.ring != ring:
            raise ContextMismatch("direct sum over mixed rings")
        for i in range(b.rows):
            for j in range(b.cols):
                flat[(r0 + i) * cols + (c0 + j)] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return RingMatrix(ring, rows, cols, flat)
