"""Exact finitely generated abelian group engine.

Groups are presented by generators and integer relation rows.  Smith
normal form (with unimodular transforms) drives invariant factors and
integer solving; Hermite normal form drives lattice membership, so
subgroup comparisons, kernels, images and exactness checks are all
exact lattice computations.

>>> snf(IntMatrix.from_rows([[2, 4], [6, 8]])).d
(2, 4)
>>> present(1, IntMatrix.from_rows([[2]])).invariant_factors()
(2,)
"""

from __future__ import annotations

from dataclasses import dataclass, field


class AbgroupError(ValueError):
    pass


class InconsistentConstraints(AbgroupError):
    """Raised when prescribed images admit no homomorphism.

    On valid inputs coming from the verification suites this must never
    fire; it doubles as a refutation signal.
    """


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise AbgroupError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [list(map(int, r)) for r in rows]
        n = len(rows[0]) if rows else 0
        if any(len(r) != n for r in rows):
            raise AbgroupError("ragged rows")
        return cls(len(rows), n, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0
                               for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j: int) -> list[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols)
                               for i in range(self.rows)))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise AbgroupError("shape mismatch in product")
        out = []
        orows = other.to_rows()
        for i in range(self.rows):
            ri = self.row(i)
            out.append([sum(ri[k] * orows[k][j] for k in range(self.cols))
                        for j in range(other.cols)])
        return IntMatrix.from_rows(out) if out else IntMatrix(0, other.cols, ())

    def apply(self, vec: list[int]) -> list[int]:
        if len(vec) != self.cols:
            raise AbgroupError("vector length mismatch")
        return [sum(self.row(i)[k] * vec[k] for k in range(self.cols))
                for i in range(self.rows)]

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols and self.rows and other.rows:
            raise AbgroupError("column mismatch in vstack")
        cols = self.cols if self.rows else other.cols
        return IntMatrix(self.rows + other.rows, cols,
                         self.entries + other.entries)


@dataclass(frozen=True)
class SnfResult:
    d: tuple[int, ...]          # invariant factors, padded with zeros
    u: IntMatrix                # row transform, |det u| = 1
    v: IntMatrix                # column transform, |det v| = 1


def _det_pm1(m: list[list[int]]) -> int:
    """Determinant of a small unimodular integer matrix (fraction-free)."""
    from fractions import Fraction
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return int(det)


def snf(a: IntMatrix) -> SnfResult:
    """Smith normal form with transforms: u * a * v = diag(d).

    Pivoting picks the smallest nonzero absolute value in the remaining
    submatrix, scanning row-major, so results are reproducible.
    """
    m = a.to_rows()
    rows, cols = a.rows, a.cols
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def addmul_row(dst, src, q):
        # row dst += q * row src
        m[dst] = [x + q * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def addmul_col(dst, src, q):
        for r in m:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    def find_pivot(k):
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                x = m[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        return best

    k = 0
    while k < min(rows, cols):
        best = find_pivot(k)
        if best is None:
            break
        _, pi, pj = best
        if pi != k:
            swap_rows(k, pi)
        if pj != k:
            swap_cols(k, pj)
        dirty = True
        while dirty:
            dirty = False
            for i in range(k + 1, rows):
                if m[i][k]:
                    q = m[i][k] // m[k][k]
                    addmul_row(i, k, -q)
                    if m[i][k]:
                        swap_rows(k, i)
                        dirty = True
            for j in range(k + 1, cols):
                if m[k][j]:
                    q = m[k][j] // m[k][k]
                    addmul_col(j, k, -q)
                    if m[k][j]:
                        swap_cols(k, j)
                        dirty = True
        # enforce divisibility of the remaining submatrix
        piv = m[k][k]
        offender = None
        for i in range(k + 1, rows):
            for j in range(k + 1, cols):
                if m[i][j] % piv:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            addmul_row(k, offender, 1)
            continue
        if piv < 0:
            negate_row(k)
        k += 1

    d = tuple(m[i][i] if i < cols else 0 for i in range(min(rows, cols)))
    res = SnfResult(d, IntMatrix.from_rows(u) if rows else IntMatrix(0, 0, ()),
                    IntMatrix.from_rows(v) if cols else IntMatrix(0, 0, ()))
    _check_snf(a, res)
    return res


def _check_snf(a: IntMatrix, res: SnfResult) -> None:
    prod = res.u.mul(a).mul(res.v) if a.rows and a.cols else a
    for i in range(a.rows):
        for j in range(a.cols):
            want = res.d[i] if i == j and i < len(res.d) else 0
            if a.rows and a.cols and prod[i, j] != want:
                raise AbgroupError("SNF round-trip failed")
    for i in range(len(res.d) - 1):
        if res.d[i] and res.d[i + 1] % res.d[i]:
            raise AbgroupError("SNF divisibility chain failed")
        if res.d[i] == 0 and res.d[i + 1] != 0:
            raise AbgroupError("SNF zero ordering failed")
    if a.rows and abs(_det_pm1(res.u.to_rows())) != 1:
        raise AbgroupError("row transform not unimodular")
    if a.cols and abs(_det_pm1(res.v.to_rows())) != 1:
        raise AbgroupError("column transform not unimodular")


# ---------------------------------------------------------------------------
# Hermite normal form lattices (row lattices in Z^n)

def hnf_rows(rows: list[list[int]], n: int) -> list[list[int]]:
    """Canonical row Hermite normal form basis of the lattice the rows span.

    Pivots are positive, entries above a pivot are reduced into
    [0, pivot); the result is the unique canonical basis, so two
    lattices are equal iff their HNFs are equal lists.
    """
    work = [r[:] for r in rows if any(r)]
    basis: list[list[int]] = []
    for vec in work:
        basis.append(vec[:])
        basis = _hnf_reduce(basis, n)
    return basis


def _hnf_reduce(basis: list[list[int]], n: int) -> list[list[int]]:
    # Gaussian elimination over Z with xgcd pivots, then canonical reduce.
    rows = [r[:] for r in basis]
    out: list[list[int]] = []
    col = 0
    while rows and col < n:
        nz = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        if not nz:
            rows = rest
            col += 1
            continue
        piv = nz[0]
        for r in nz[1:]:
            g, x, y = xgcd(piv[col], r[col])
            a, b = piv[col] // g, r[col] // g
            new_piv = [x * p + y * q for p, q in zip(piv, r)]
            new_r = [-b * p + a * q for p, q in zip(piv, r)]
            piv, r2 = new_piv, new_r
            if any(r2):
                rest.append(r2)
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        rows = rest
        col += 1
    # reduce entries above pivots
    for i in reversed(range(len(out))):
        pc = next(j for j in range(n) if out[i][j])
        for k in range(i):
            q = out[k][pc] // out[i][pc]
            if q:
                out[k] = [a - q * b for a, b in zip(out[k], out[i])]
    return out


def lattice_member(hnf: list[list[int]], vec: list[int]) -> bool:
    v = list(vec)
    n = len(v)
    for row in hnf:
        pc = next(j for j in range(n) if row[j])
        if v[pc]:
            if v[pc] % row[pc]:
                return False
            q = v[pc] // row[pc]
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def int_solve(a: IntMatrix, b: list[int]) -> list[int] | None:
    """One integer solution x of a x = b, or None."""
    if a.cols == 0:
        return [] if not any(b) else None
    res = snf(a)
    ub = res.u.apply(b)
    w = []
    for i in range(a.rows):
        di = res.d[i] if i < len(res.d) else 0
        if di == 0:
            if ub[i]:
                return None
            if i < a.cols:
                w.append(0)
        else:
            if ub[i] % di:
                return None
            w.append(ub[i] // di)
    while len(w) < a.cols:
        w.append(0)
    return res.v.apply(w)


def int_nullspace(a: IntMatrix) -> list[list[int]]:
    """Basis of the integer kernel {x : a x = 0}."""
    if a.cols == 0:
        return []
    if a.rows == 0:
        return IntMatrix.identity(a.cols).to_rows()
    res = snf(a)
    out = []
    for j in range(a.cols):
        dj = res.d[j] if j < len(res.d) else 0
        if j >= a.rows or dj == 0:
            out.append(res.v.col(j))
    return out


# ---------------------------------------------------------------------------
# Presented groups and homomorphisms

@dataclass(frozen=True)
class GroupPresentation:
    n_gens: int
    relations: IntMatrix
    _snf: SnfResult = field(compare=False, repr=False, default=None)

    @property
    def snf_result(self) -> SnfResult:
        return self._snf

    def relation_rows(self) -> list[list[int]]:
        return self.relations.to_rows()

    def relation_hnf(self) -> list[list[int]]:
        return hnf_rows(self.relation_rows(), self.n_gens)

    def invariant_factors(self) -> tuple[int, ...]:
        """Nontrivial torsion invariant factors (each > 1), ascending."""
        return tuple(x for x in self._snf.d if x > 1)

    def rank(self) -> int:
        nonzero = sum(1 for x in self._snf.d if x)
        return self.n_gens - nonzero

    def is_trivial(self) -> bool:
        return self.rank() == 0 and not self.invariant_factors()

    def order(self) -> int | None:
        """Group order, or None if infinite."""
        if self.rank():
            return None
        out = 1
        for x in self.invariant_factors():
            out *= x
        return out

    def elements(self) -> list[tuple[int, ...]]:
        """All elements of a finite group, as generator-coordinate tuples.

        With u * rel * v = diag(d), row vectors x' = x v carry the
        relation lattice to the diagonal one, so representatives are
        products of ranges over the invariant factors, pulled back
        through v^-1.
        """
        if self.rank():
            raise AbgroupError("group is infinite")
        res = self._snf
        dlist = [res.d[i] if i < len(res.d) else 0
                 for i in range(self.n_gens)]
        vinv = _int_inverse(res.v.to_rows())
        combos = [[]]
        for d in dlist:
            combos = [c + [r] for c in combos for r in range(d if d else 1)]
        out = []
        for y in combos:
            x = [sum(y[i] * vinv[i][j] for i in range(self.n_gens))
                 for j in range(self.n_gens)]
            out.append(tuple(x))
        return out

    def reduce(self, vec: list[int]) -> tuple[int, ...]:
        """Canonical representative of vec modulo the relation lattice."""
        v = list(vec)
        hnf = self.relation_hnf()
        for row in hnf:
            pc = next(j for j in range(self.n_gens) if row[j])
            q = v[pc] // row[pc]
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return tuple(v)


def present(n_gens: int, relations: IntMatrix | None = None) -> GroupPresentation:
    if relations is None or relations.rows == 0:
        relations = IntMatrix(0, n_gens, ())
    if relations.cols != n_gens:
        raise AbgroupError(
            f"relation width {relations.cols} != generator count {n_gens}")
    # SNF of the relation matrix; for zero relations build directly.
    if relations.rows == 0:
        res = SnfResult((), IntMatrix(0, 0, ()), IntMatrix.identity(n_gens))
    else:
        raw = snf(relations.transpose())
        # We want diag acting on generators: use rel^T so that v acts on
        # generator coordinates consistently in elements().
        res = raw
    return GroupPresentation(n_gens, relations, res)


def elements_equal(gp: GroupPresentation, x: list[int], y: list[int]) -> bool:
    if len(x) != gp.n_gens or len(y) != gp.n_gens:
        raise AbgroupError("element length mismatch")
    diff = [a - b for a, b in zip(x, y)]
    return lattice_member(gp.relation_hnf(), diff)


def groups_isomorphic(a: GroupPresentation, b: GroupPresentation) -> bool:
    return (a.rank() == b.rank()
            and a.invariant_factors() == b.invariant_factors())


@dataclass(frozen=True)
class GroupHom:
    source: GroupPresentation
    target: GroupPresentation
    matrix: IntMatrix  # target.n_gens x source.n_gens, columns = images

    def __post_init__(self):
        if (self.matrix.rows != self.target.n_gens
                or self.matrix.cols != self.source.n_gens):
            raise AbgroupError("homomorphism matrix shape mismatch")
        hnf = self.target.relation_hnf()
        for rel in self.source.relation_rows():
            img = self.matrix.apply(rel)
            if not lattice_member(hnf, img):
                raise AbgroupError("matrix does not respect source relations")

    def apply(self, vec: list[int]) -> list[int]:
        return self.matrix.apply(vec)

    def compose(self, first: "GroupHom") -> "GroupHom":
        """self o first."""
        if first.target is not self.source and \
                first.target.relations != self.source.relations:
            raise AbgroupError("homs not composable")
        return GroupHom(first.source, self.target,
                        self.matrix.mul(first.matrix))


def identity_hom(gp: GroupPresentation) -> GroupHom:
    return GroupHom(gp, gp, IntMatrix.identity(gp.n_gens))


def hom_solve(source: GroupPresentation, target: GroupPresentation,
              images_on_generating_set:
              list[tuple[list[int], list[int]]]) -> GroupHom:
    """Homomorphism with prescribed images on a generating set.

    Solves the integer linear system M s_i = t_i modulo the target
    relation lattice, together with well-definedness on the source
    relations.  Raises InconsistentConstraints when no homomorphism
    matches (a refutation event on the verification side) and
    AbgroupError("generators insufficient") when the given source
    elements together with the source relations do not generate.
    """
    sg, tg = source.n_gens, target.n_gens
    pairs = [(list(s), list(t)) for s, t in images_on_generating_set]
    for s, t in pairs:
        if len(s) != sg or len(t) != tg:
            raise AbgroupError("constraint length mismatch")
    gen_lattice = hnf_rows([s for s, _ in pairs] + source.relation_rows(), sg)
    full = hnf_rows(IntMatrix.identity(sg).to_rows(), sg)
    if gen_lattice != full:
        raise AbgroupError("generators insufficient")

    lrows = target.relation_rows()
    constraints = pairs + [(r, [0] * tg) for r in source.relation_rows()]
    ncon = len(constraints)
    nunk = tg * sg + ncon * len(lrows)
    rows = []
    rhs = []
    for ci, (s, t) in enumerate(constraints):
        for r in range(tg):
            row = [0] * nunk
            for c in range(sg):
                row[r * sg + c] = s[c]
            for li, lrow in enumerate(lrows):
                row[tg * sg + ci * len(lrows) + li] = lrow[r]
            rows.append(row)
            rhs.append(t[r])
    sol = int_solve(IntMatrix.from_rows(rows) if rows else IntMatrix(0, nunk, ()),
                    rhs)
    if sol is None:
        raise InconsistentConstraints(
            "no homomorphism satisfies the prescribed images")
    mat = IntMatrix(tg, sg, tuple(sol[: tg * sg]))
    return GroupHom(source, target, mat)


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of a presented group, by generating coordinate vectors."""
    ambient: GroupPresentation
    gens: tuple[tuple[int, ...], ...]

    def lattice(self) -> list[list[int]]:
        rows = [list(g) for g in self.gens] + self.ambient.relation_rows()
        return hnf_rows(rows, self.ambient.n_gens)

    def contains(self, vec: list[int]) -> bool:
        return lattice_member(self.lattice(), list(vec))

    def is_whole_group(self) -> bool:
        return self.lattice() == hnf_rows(
            IntMatrix.identity(self.ambient.n_gens).to_rows(),
            self.ambient.n_gens)


def subgroups_equal(s1: Subgroup, s2: Subgroup) -> bool:
    if s1.ambient.n_gens != s2.ambient.n_gens or \
            s1.ambient.relations != s2.ambient.relations:
        raise AbgroupError("subgroups live in different ambient groups")
    return s1.lattice() == s2.lattice()


def image(h: GroupHom) -> Subgroup:
    cols = [tuple(h.matrix.col(j)) for j in range(h.matrix.cols)]
    return Subgroup(h.target, tuple(cols))


def kernel_lattice(h: GroupHom) -> list[list[int]]:
    """Generators (HNF) of {x in Z^sg : h(x) in target relation lattice}."""
    sg = h.source.n_gens
    lrows = h.target.relation_rows()
    # x is in the kernel iff M x + L^T y = 0 for some y.
    ncols = sg + len(lrows)
    rows = []
    for r in range(h.target.n_gens):
        rows.append([h.matrix[r, c] for c in range(sg)]
                    + [lr[r] for lr in lrows])
    null = int_nullspace(IntMatrix.from_rows(rows)
                         if rows else IntMatrix(0, ncols, ()))
    xs = [v[:sg] for v in null] + h.source.relation_rows()
    return hnf_rows(xs, sg)


def kernel_subgroup(h: GroupHom) -> Subgroup:
    return Subgroup(h.source, tuple(tuple(r) for r in kernel_lattice(h)))


def kernel(h: GroupHom) -> GroupPresentation:
    """The kernel as an abstract presented group."""
    gens = kernel_lattice(h)
    if not gens:
        return present(0)
    # Relations: expressions of the source relation rows in the kernel gens.
    rels = []
    gmat = IntMatrix.from_rows(gens).transpose()  # sg x k
    for rel in h.source.relation_rows():
        expr = int_solve(gmat, rel)
        if expr is None:
            raise AbgroupError("source relation escaped the kernel")
        rels.append(expr)
    rel_m = IntMatrix.from_rows(rels) if rels else IntMatrix(0, len(gens), ())
    return present(len(gens), rel_m)


def is_surjective(h: GroupHom) -> bool:
    return image(h).is_whole_group()


def is_injective(h: GroupHom) -> bool:
    ker = kernel_lattice(h)
    src = hnf_rows(h.source.relation_rows(), h.source.n_gens)
    return ker == src


def is_isomorphism(h: GroupHom) -> bool:
    return is_surjective(h) and is_injective(h)


def is_exact_at(f: GroupHom, g: GroupHom) -> bool:
    """Exactness at the middle of  .. -f-> M -g-> ..  (image = kernel)."""
    if f.target.n_gens != g.source.n_gens or \
            f.target.relations != g.source.relations:
        raise AbgroupError("homs do not share the middle group")
    im = image(f).lattice()
    ker = kernel_lattice(g)
    return im == ker
