r"""Structure-constant algebras and the current-algebra construction.

A Lie algebra is a table of brackets [x_i, x_j] for i < j; an associative
commutative algebra is a table of products a_i a_j for i <= j.  Both are
validated exhaustively at construction (Jacobi, respectively associativity),
because every theorem checked downstream silently assumes the axioms.  A
violation raises ValidationError carrying the offending triple, which is the
machine-readable witness the CLI reports.

The catalog covers what the verification suites need: sl(n) on trace-zero
matrices (with the standard weight basis (e-, h, e+) hard-coded for sl(2)),
abelian algebras, the 3-dimensional Heisenberg algebra, direct sums, the
truncated polynomial algebras tK[t]/(t^n) and K[t]/(t^n), and zero-product
algebras.  current(L, A) builds L tensor A with

    [x tensor a, y tensor b] = [x, y] tensor ab

on the flat basis x_i tensor a_p, flat index p * dim(L) + i.
"""

from fractions import Fraction
import json
import os

from .exactlin import (
    Matrix,
    Subspace,
    determinant,
    kernel_from_rows,
    solve,
)

__all__ = [
    "ValidationError",
    "LieAlgebra",
    "AssocAlgebra",
    "CurrentAlgebra",
    "BilinearForm",
    "build_lie",
    "build_assoc",
    "current",
    "derived_subalgebra",
    "center_lie",
    "annihilator_assoc",
    "square_assoc",
    "killing_form",
    "residue_form",
    "product_form",
    "algebra_to_dict",
    "algebra_from_dict",
    "parse_algebra_file",
    "serialize_algebra",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ValidationError(ValueError):
    """An algebra axiom failed; witness names the offending basis triple."""

    def __init__(self, message, axiom=None, witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


def _canonical_terms(terms):
    acc = {}
    for k, c in terms:
        c = Fraction(c)
        if c:
            acc[k] = acc.get(k, _ZERO) + c
    return tuple(sorted((k, c) for k, c in acc.items() if c))


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q given by structure constants."""

    def __init__(self, labels, table, validate=True):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        if len(set(self.labels)) != self.dim:
            raise ValidationError("duplicate basis labels")
        clean = {}
        for (i, j), terms in table.items():
            if not (0 <= i < j < self.dim):
                raise ValueError("lie table keys must satisfy 0 <= i < j < dim")
            t = _canonical_terms(terms)
            if t:
                clean[(i, j)] = t
        self.table = clean
        full = {}
        for (i, j), terms in clean.items():
            full[(i, j)] = terms
            full[(j, i)] = tuple((k, -c) for k, c in terms)
        self._full = full
        self.sl_summands = None
        if validate:
            self._validate_jacobi()

    def bracket(self, i, j):
        """[x_i, x_j] as a tuple of (index, coefficient)."""
        if i == j:
            return ()
        return self._full.get((i, j), ())

    def bracket_vectors(self, u, v):
        """Bracket of two coordinate vectors, as a dense coordinate list."""
        out = [_ZERO] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in self.bracket(i, j):
                    out[k] += a * b * c
        return out

    def _jacobi_defect(self, i, j, k):
        acc = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, cf in self.bracket(a, b):
                for l, cf2 in self.bracket(m, c):
                    v = acc.get(l, _ZERO) + cf * cf2
                    if v:
                        acc[l] = v
                    elif l in acc:
                        del acc[l]
        return acc

    def _validate_jacobi(self):
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    defect = self._jacobi_defect(i, j, k)
                    if defect:
                        names = (self.labels[i], self.labels[j], self.labels[k])
                        raise ValidationError(
                            "Jacobi identity fails on (%s, %s, %s)" % names,
                            axiom="jacobi",
                            witness=(i, j, k),
                        )

    @property
    def is_abelian(self):
        return not self.table

    def _key(self):
        return ("lie", self.labels, tuple(sorted(self.table.items())))

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "LieAlgebra(dim %d: %s)" % (self.dim, ", ".join(self.labels))


class AssocAlgebra:
    """Commutative associative algebra given by structure constants.

    Possibly without unit; the unital flag certifies that a two-sided
    identity exists among the coordinates and stores it.
    """

    def __init__(self, labels, table, unital=False, degrees=None, validate=True):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        if len(set(self.labels)) != self.dim:
            raise ValidationError("duplicate basis labels")
        clean = {}
        for (i, j), terms in table.items():
            if not (0 <= i <= j < self.dim):
                raise ValueError("assoc table keys must satisfy 0 <= i <= j < dim")
            t = _canonical_terms(terms)
            if t:
                clean[(i, j)] = t
        self.table = clean
        self.degrees = tuple(degrees) if degrees is not None else None
        if self.degrees is not None and len(self.degrees) != self.dim:
            raise ValueError("degree tags must match dim")
        self.tpoly_order = None
        if validate:
            self._validate_associativity()
        self.unital = bool(unital)
        self.unit = self._find_unit() if unital else None
        if unital and self.unit is None:
            raise ValidationError("no two-sided identity found", axiom="unital")

    def product(self, i, j):
        if i > j:
            i, j = j, i
        return self.table.get((i, j), ())

    def product_vectors(self, u, v):
        out = [_ZERO] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in self.product(i, j):
                    out[k] += a * b * c
        return out

    def _assoc_defect(self, i, j, k):
        acc = {}
        for m, c in self.product(i, j):
            for l, d in self.product(m, k):
                v = acc.get(l, _ZERO) + c * d
                if v:
                    acc[l] = v
                elif l in acc:
                    del acc[l]
        for m, c in self.product(j, k):
            for l, d in self.product(i, m):
                v = acc.get(l, _ZERO) - c * d
                if v:
                    acc[l] = v
                elif l in acc:
                    del acc[l]
        return acc

    def _validate_associativity(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    defect = self._assoc_defect(i, j, k)
                    if defect:
                        names = (self.labels[i], self.labels[j], self.labels[k])
                        raise ValidationError(
                            "associativity fails on (%s, %s, %s)" % names,
                            axiom="associativity",
                            witness=(i, j, k),
                        )

    def _find_unit(self):
        # unit u solves sum_i u_i m[i][j][k] = delta_jk for all j, k
        n = self.dim
        rows = []
        rhs = []
        for j in range(n):
            for k in range(n):
                row = [_ZERO] * n
                for i in range(n):
                    for l, c in self.product(i, j):
                        if l == k:
                            row[i] += c
                rows.append(row)
                rhs.append(_ONE if j == k else _ZERO)
        u = solve(Matrix(rows), rhs)
        if u is None:
            return None
        # re-check both sides exhaustively
        for j in range(n):
            col = [_ONE if i == j else _ZERO for i in range(n)]
            if self.product_vectors(u, col) != col or self.product_vectors(col, u) != col:
                return None
        return tuple(u)

    def _key(self):
        return ("assoc", self.labels, tuple(sorted(self.table.items())),
                self.unital, self.degrees)

    def __eq__(self, other):
        return isinstance(other, AssocAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "AssocAlgebra(dim %d: %s)" % (self.dim, ", ".join(self.labels))


# ---------------------------------------------------------------------------
# catalog


def lie_sl2():
    """sl(2) in the weight basis (e-, h, e+): [h,e-] = -e-, [h,e+] = e+, [e-,e+] = h."""
    table = {
        (0, 1): ((0, _ONE),),   # [e-, h] = e-
        (0, 2): ((1, _ONE),),   # [e-, e+] = h
        (1, 2): ((2, _ONE),),   # [h, e+] = e+
    }
    alg = LieAlgebra(("e-", "h", "e+"), table)
    alg.sl_summands = (2,)
    return alg


def lie_sl(n):
    """sl(n) on trace-zero matrices: basis e_ij (i != j) and h_k = E_kk - E_k+1,k+1.

    Basis order: lowers e_ij (i > j) lexicographically, then h_1..h_{n-1},
    then uppers e_ij (i < j).  For n = 2 the hard-coded weight basis is used
    instead, since all the sl(2)-specific statements are pinned to it.
    """
    if n < 2:
        raise ValueError("sl(n) needs n >= 2")
    if n == 2:
        return lie_sl2()
    mats = []
    labels = []
    for i in range(n):
        for j in range(i):
            mats.append({(i, j): _ONE})
            labels.append("e%d%d" % (i + 1, j + 1))
    for k in range(n - 1):
        mats.append({(k, k): _ONE, (k + 1, k + 1): -_ONE})
        labels.append("h%d" % (k + 1))
    for i in range(n):
        for j in range(i + 1, n):
            mats.append({(i, j): _ONE})
            labels.append("e%d%d" % (i + 1, j + 1))
    offdiag_index = {}
    for idx, m in enumerate(mats):
        if len(m) == 1:
            (pos, _), = m.items()
            offdiag_index[pos] = idx
    n_lower = n * (n - 1) // 2

    def decompose(mat):
        terms = []
        diag = [mat.get((i, i), _ZERO) for i in range(n)]
        part = _ZERO
        for k in range(n - 1):
            part += diag[k]
            if part:
                terms.append((n_lower + k, part))
        for (r, c), v in mat.items():
            if r != c and v:
                terms.append((offdiag_index[(r, c)], v))
        return terms

    def mat_mul(a, b):
        out = {}
        for (r, m), va in a.items():
            for (m2, c), vb in b.items():
                if m == m2:
                    out[(r, c)] = out.get((r, c), _ZERO) + va * vb
        return out

    table = {}
    dim = len(mats)
    for i in range(dim):
        for j in range(i + 1, dim):
            ab = mat_mul(mats[i], mats[j])
            ba = mat_mul(mats[j], mats[i])
            comm = dict(ab)
            for pos, v in ba.items():
                comm[pos] = comm.get(pos, _ZERO) - v
            terms = decompose(comm)
            if terms:
                table[(i, j)] = terms
    alg = LieAlgebra(tuple(labels), table)
    alg.sl_summands = (n,)
    return alg


def lie_abelian(n):
    if n < 1:
        raise ValueError("abelian(n) needs n >= 1")
    return LieAlgebra(tuple("x%d" % (i + 1) for i in range(n)), {})


def lie_heisenberg3():
    """Heisenberg algebra: [x, y] = z, z central."""
    return LieAlgebra(("x", "y", "z"), {(0, 1): ((2, _ONE),)})


def lie_direct_sum(parts):
    """Direct sum of Lie algebras; labels get a per-summand suffix."""
    labels = []
    table = {}
    offset = 0
    summands = []
    for idx, part in enumerate(parts):
        labels.extend("%s.%d" % (lbl, idx) for lbl in part.labels)
        for (i, j), terms in part.table.items():
            table[(i + offset, j + offset)] = tuple(
                (k + offset, c) for k, c in terms
            )
        if part.sl_summands is None:
            summands = None
        elif summands is not None:
            summands.extend(part.sl_summands)
        offset += part.dim
    alg = LieAlgebra(tuple(labels), table)
    alg.sl_summands = tuple(summands) if summands is not None else None
    return alg


def assoc_truncated_poly(n, unital=False):
    """tK[t]/(t^n) (basis t..t^{n-1}) or K[t]/(t^n) (basis 1..t^{n-1})."""
    if n < 2:
        raise ValueError("truncated_poly(n) needs n >= 2")
    if unital:
        labels = ["1"] + ["t" if e == 1 else "t^%d" % e for e in range(1, n)]
        exps = list(range(n))
    else:
        labels = ["t" if e == 1 else "t^%d" % e for e in range(1, n)]
        exps = list(range(1, n))
    index = {e: i for i, e in enumerate(exps)}
    table = {}
    for i, a in enumerate(exps):
        for j, b in enumerate(exps[i:], start=i):
            if a + b in index:
                table[(i, j)] = ((index[a + b], _ONE),)
    alg = AssocAlgebra(tuple(labels), table, unital=unital, degrees=tuple(exps))
    alg.tpoly_order = n
    return alg


def assoc_zero_mult(n):
    if n < 1:
        raise ValueError("zero_mult(n) needs n >= 1")
    return AssocAlgebra(tuple("a%d" % (i + 1) for i in range(n)), {})


def _looks_like_path(spec):
    return spec.endswith(".json") or os.sep in spec or os.path.exists(spec)


def build_lie(spec):
    """Catalog descriptor -> LieAlgebra: sl2, sl3, slN, abelian:N, heis3,
    sum:sl2+sl3, or a JSON file path."""
    if isinstance(spec, LieAlgebra):
        return spec
    spec = spec.strip()
    if spec == "heis3":
        return lie_heisenberg3()
    if spec.startswith("sl") and spec[2:].isdigit():
        return lie_sl(int(spec[2:]))
    if spec.startswith("abelian:"):
        return lie_abelian(int(spec.split(":", 1)[1]))
    if spec.startswith("sum:"):
        parts = [build_lie(p) for p in spec[4:].split("+")]
        return lie_direct_sum(parts)
    if _looks_like_path(spec):
        alg = parse_algebra_file(spec)
        if not isinstance(alg, LieAlgebra):
            raise ValidationError("%s is not a Lie algebra file" % spec)
        return alg
    raise ValueError("unknown Lie algebra descriptor: %r" % spec)


def build_assoc(spec):
    """Catalog descriptor -> AssocAlgebra: tpoly:N, tpoly1:N, zero:N, or a file."""
    if isinstance(spec, AssocAlgebra):
        return spec
    spec = spec.strip()
    if spec.startswith("tpoly1:"):
        return assoc_truncated_poly(int(spec.split(":", 1)[1]), unital=True)
    if spec.startswith("tpoly:"):
        return assoc_truncated_poly(int(spec.split(":", 1)[1]))
    if spec.startswith("zero:"):
        return assoc_zero_mult(int(spec.split(":", 1)[1]))
    if _looks_like_path(spec):
        alg = parse_algebra_file(spec)
        if not isinstance(alg, AssocAlgebra):
            raise ValidationError("%s is not an associative algebra file" % spec)
        return alg
    raise ValueError("unknown associative algebra descriptor: %r" % spec)


# ---------------------------------------------------------------------------
# the current algebra L tensor A


class CurrentAlgebra(LieAlgebra):
    """L tensor A on the flat basis x_i tensor a_p, flat = p * dim(L) + i."""

    def __init__(self, factor_lie, factor_assoc):
        self.factorL = factor_lie
        self.factorA = factor_assoc
        nl, na = factor_lie.dim, factor_assoc.dim
        labels = tuple(
            "%s*%s" % (factor_lie.labels[i], factor_assoc.labels[p])
            for p in range(na)
            for i in range(nl)
        )
        table = {}
        dim = nl * na
        for u in range(dim):
            i, p = u % nl, u // nl
            for v in range(u + 1, dim):
                j, q = v % nl, v // nl
                acc = {}
                for k, c in factor_lie.bracket(i, j):
                    for r, d in factor_assoc.product(p, q):
                        w = r * nl + k
                        acc[w] = acc.get(w, _ZERO) + c * d
                terms = tuple(sorted((w, c) for w, c in acc.items() if c))
                if terms:
                    table[(u, v)] = terms
        super().__init__(labels, table)
        if factor_assoc.degrees is not None:
            self.degrees = tuple(
                factor_assoc.degrees[p] for p in range(na) for _ in range(nl)
            )
        else:
            self.degrees = None

    def flat(self, i, p):
        return p * self.factorL.dim + i

    def unflat(self, k):
        return k % self.factorL.dim, k // self.factorL.dim


def current(factor_lie, factor_assoc):
    return CurrentAlgebra(factor_lie, factor_assoc)


# ---------------------------------------------------------------------------
# distinguished subspaces


def derived_subalgebra(alg):
    """[L, L] as a subspace of the coordinate space."""
    vectors = []
    for (i, j), terms in alg.table.items():
        v = [_ZERO] * alg.dim
        for k, c in terms:
            v[k] = c
        vectors.append(v)
    return Subspace.from_vectors(alg.dim, vectors)


def center_lie(alg):
    """Z(L) = {x : [x, y] = 0 for all y}, the kernel of the joint adjoint system."""
    rows = []
    for j in range(alg.dim):
        per_k = {}
        for i in range(alg.dim):
            for k, c in alg.bracket(i, j):
                per_k.setdefault(k, {})[i] = per_k.get(k, {}).get(i, _ZERO) + c
        rows.extend(per_k.values())
    return kernel_from_rows(alg.dim, rows)


def annihilator_assoc(alg):
    """Z(A) = {a : aA = 0}."""
    rows = []
    for j in range(alg.dim):
        per_k = {}
        for i in range(alg.dim):
            for k, c in alg.product(i, j):
                per_k.setdefault(k, {})[i] = per_k.get(k, {}).get(i, _ZERO) + c
        rows.extend(per_k.values())
    return kernel_from_rows(alg.dim, rows)


def square_assoc(alg):
    """AA, the span of all pairwise products."""
    vectors = []
    for (i, j), terms in alg.table.items():
        v = [_ZERO] * alg.dim
        for k, c in terms:
            v[k] = c
        vectors.append(v)
    return Subspace.from_vectors(alg.dim, vectors)


# ---------------------------------------------------------------------------
# bilinear forms


class BilinearForm:
    """A bilinear form on an algebra's coordinate space, with a symmetry tag."""

    __slots__ = ("matrix", "symmetry")

    def __init__(self, matrix):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(matrix)
        if matrix.nrows != matrix.ncols:
            raise ValueError("bilinear form matrix must be square")
        self.matrix = matrix
        if matrix == matrix.transpose():
            self.symmetry = "symmetric"
        elif matrix == Matrix(tuple(tuple(-x for x in row) for row in matrix.transpose().data)):
            self.symmetry = "skew"
        else:
            self.symmetry = "none"

    @property
    def dim(self):
        return self.matrix.nrows

    def __call__(self, i, j):
        return self.matrix[i, j]

    def as_vector(self):
        """Row-major coordinates in the n^2-dimensional form space."""
        return tuple(x for row in self.matrix.data for x in row)

    def is_nondegenerate(self):
        return determinant(self.matrix) != 0


def _lie_invariance_defect(alg, matrix):
    """First triple (i,j,k) with kappa([x_i,x_j],x_k) + kappa(x_j,[x_i,x_k]) != 0."""
    n = alg.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = _ZERO
                for m, c in alg.bracket(i, j):
                    s += c * matrix[m, k]
                for m, c in alg.bracket(i, k):
                    s += c * matrix[j, m]
                if s:
                    return (i, j, k)
    return None


def killing_form(alg):
    """kappa(x, y) = trace(ad x . ad y); symmetric and invariant by construction,
    both re-checked."""
    n = alg.dim
    ad = []
    for i in range(n):
        m = {}
        for j in range(n):
            for k, c in alg.bracket(i, j):
                m[(k, j)] = m.get((k, j), _ZERO) + c
        ad.append(m)
    rows = [[_ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = _ZERO
            for (r, c), v in ad[i].items():
                w = ad[j].get((c, r))
                if w:
                    s += v * w
            rows[i][j] = s
            rows[j][i] = s
    form = BilinearForm(Matrix(rows))
    assert form.symmetry == "symmetric"
    defect = _lie_invariance_defect(alg, form.matrix)
    assert defect is None, "Killing form not invariant at %r" % (defect,)
    return form


def residue_form(alg):
    """<t^i, t^j> = 1 iff i + j = n on tK[t]/(t^n); symmetric, invariant,
    nondegenerate, all three asserted."""
    if alg.tpoly_order is None or alg.unital:
        raise ValidationError("residue form needs a non-unital truncated polynomial algebra")
    n = alg.tpoly_order
    rows = [
        [(_ONE if alg.degrees[i] + alg.degrees[j] == n else _ZERO)
         for j in range(alg.dim)]
        for i in range(alg.dim)
    ]
    form = BilinearForm(Matrix(rows))
    assert form.symmetry == "symmetric"
    det = determinant(form.matrix)
    assert det in (_ONE, -_ONE), "residue form must be a permutation matrix"
    # associativity-invariance <ab, c> = <a, bc> on all basis triples
    d = alg.dim
    for i in range(d):
        for j in range(d):
            for k in range(d):
                left = _ZERO
                for m, c in alg.product(i, j):
                    left += c * form.matrix[m, k]
                right = _ZERO
                for m, c in alg.product(j, k):
                    right += c * form.matrix[i, m]
                assert left == right, "residue form not invariant"
    return form


def product_form(form_lie, form_assoc, curr):
    """<x tensor a, y tensor b> = <x,y><a,b> on a current algebra."""
    nl = curr.factorL.dim
    na = curr.factorA.dim
    if form_lie.dim != nl or form_assoc.dim != na:
        raise ValueError("factor form dimensions do not match")
    dim = nl * na
    rows = [[_ZERO] * dim for _ in range(dim)]
    for p in range(na):
        for i in range(nl):
            u = curr.flat(i, p)
            for q in range(na):
                aval = form_assoc(p, q)
                if not aval:
                    continue
                for j in range(nl):
                    lval = form_lie(i, j)
                    if lval:
                        rows[u][curr.flat(j, q)] = lval * aval
    return BilinearForm(Matrix(rows))


# ---------------------------------------------------------------------------
# JSON serialization

# Schema: {"kind": "lie"|"assoc", "dim": n, "basis": [...],
#          "table": [{"i": i, "j": j, "terms": [{"k": k, "c": "p/q"}]}],
#          "unital": bool?, "degrees": [...]?}
# Lie files list only i < j; assoc files list both orders explicitly.


def algebra_to_dict(alg):
    if isinstance(alg, LieAlgebra):
        entries = [
            {"i": i, "j": j,
             "terms": [{"k": k, "c": str(c)} for k, c in terms]}
            for (i, j), terms in sorted(alg.table.items())
        ]
        return {"kind": "lie", "dim": alg.dim, "basis": list(alg.labels),
                "table": entries}
    if isinstance(alg, AssocAlgebra):
        pairs = {}
        for (i, j), terms in alg.table.items():
            pairs[(i, j)] = terms
            pairs[(j, i)] = terms
        entries = [
            {"i": i, "j": j,
             "terms": [{"k": k, "c": str(c)} for k, c in terms]}
            for (i, j), terms in sorted(pairs.items())
        ]
        out = {"kind": "assoc", "dim": alg.dim, "basis": list(alg.labels),
               "table": entries, "unital": alg.unital}
        if alg.degrees is not None:
            out["degrees"] = list(alg.degrees)
        return out
    raise TypeError("not an algebra: %r" % (alg,))


def _parse_terms(raw, dim):
    terms = []
    for t in raw:
        k = t["k"]
        if not (0 <= k < dim):
            raise ValidationError("basis index %r out of range" % k)
        terms.append((k, Fraction(t["c"])))
    return terms


def algebra_from_dict(data):
    try:
        kind = data["kind"]
        dim = data["dim"]
        labels = tuple(data["basis"])
        raw_table = data["table"]
    except (KeyError, TypeError) as exc:
        raise ValidationError("malformed algebra record: %s" % exc)
    if len(labels) != dim:
        raise ValidationError("dim does not match number of basis labels")
    if kind == "lie":
        table = {}
        for entry in raw_table:
            i, j = entry["i"], entry["j"]
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValidationError("pair (%d, %d) out of range" % (i, j))
            terms = _canonical_terms(_parse_terms(entry["terms"], dim))
            if i == j:
                if terms:
                    raise ValidationError(
                        "anticommutativity fails at (%d, %d): [x, x] != 0" % (i, j),
                        axiom="anticommutativity", witness=(i, j))
                continue
            key = (min(i, j), max(i, j))
            stored = tuple((k, -c) for k, c in terms) if i > j else terms
            if key in table:
                if table[key] != stored:
                    raise ValidationError(
                        "anticommutativity fails at (%d, %d)" % key,
                        axiom="anticommutativity", witness=key)
            else:
                table[key] = stored
        return LieAlgebra(labels, table)
    if kind == "assoc":
        table = {}
        for entry in raw_table:
            i, j = entry["i"], entry["j"]
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValidationError("pair (%d, %d) out of range" % (i, j))
            terms = _canonical_terms(_parse_terms(entry["terms"], dim))
            key = (min(i, j), max(i, j))
            if key in table:
                if table[key] != terms:
                    raise ValidationError(
                        "commutativity fails at (%d, %d)" % (i, j),
                        axiom="commutativity", witness=key)
            else:
                table[key] = terms
        return AssocAlgebra(labels, table,
                            unital=bool(data.get("unital", False)),
                            degrees=data.get("degrees"))
    raise ValidationError("unknown algebra kind %r" % kind)


def parse_algebra_file(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError("malformed JSON in %s: %s" % (path, exc))
    return algebra_from_dict(data)


def serialize_algebra(alg, path=None):
    text = json.dumps(algebra_to_dict(alg), indent=1, sort_keys=True) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text
