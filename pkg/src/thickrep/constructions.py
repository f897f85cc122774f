"""Factories for the explicit representation families and distinguished
subspaces used throughout the package, each with built-in self-verification:
every returned invariant subspace is re-checked for invariance and
realizability before it leaves the factory.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from .errors import (
    BadFamily,
    BadN,
    ConstructionError,
    FieldTooSmall,
    PreconditionFailed,
)
from .fields import GF, PrimeField, QQ, Rationals, linear_roots_fp, rational_roots
from .linalg import Matrix, Subspace, charpoly, kernel, random_invertible, unit_vector
from .exterior import WedgeVector, is_decomposable, wedge_of_vectors
from .repcore import (
    GROUP,
    Representation,
    burnside_dim,
    exterior_rep,
    is_invariant,
    spin,
)


def _block_cycle(field, blocks) -> Matrix:
    """Block matrix sending block j to block j+1 via blocks[j-1], and the
    last block to the first via blocks[-1]."""
    ell = len(blocks)
    m = blocks[0].nrows
    n = ell * m
    entries = [[field.zero] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            entries[i][(ell - 1) * m + j] = blocks[-1].rows[i][j]
    for t in range(1, ell):
        for i in range(m):
            for j in range(m):
                entries[t * m + i][(t - 1) * m + j] = blocks[t - 1].rows[i][j]
    return Matrix(field, entries)


def _check_window_subspace(rep, w: Subspace, m: int, witness_subset):
    ext = exterior_rep(rep, m)
    if not is_invariant(ext, w):
        raise ConstructionError("window subspace is not invariant")
    probe = WedgeVector.basis_element(rep.field, rep.dim, witness_subset)
    if not w.contains_vector(probe.coords):
        raise ConstructionError("window subspace lost its decomposable witness")
    ok, _ = is_decomposable(probe)
    assert ok


@dataclass
class CompanionPairResult:
    rep: Representation
    windows: dict  # m -> Subspace of Lambda^m
    roots_available: bool  # n-th-root precondition for guaranteed irreducibility


def companion_pair(field, n: int, a, b) -> CompanionPairResult:
    """Two cyclic-shift generators with corner entries a and b, plus for each
    0 < m < n the n-dimensional invariant window subspace spanned by the
    cyclic wedges e_i ^ e_(i+1) ^ ... ^ e_(i+m-1)."""
    if a == b or a == field.zero or b == field.zero:
        raise PreconditionFailed("a and b must be distinct and nonzero")
    one_blocks = [Matrix(field, [[field.one]])] * (n - 1)
    A = _block_cycle(field, one_blocks + [Matrix(field, [[a]])])
    B = _block_cycle(field, one_blocks + [Matrix(field, [[b]])])
    rep = Representation(field, n, GROUP, [A, B], label="companion_pair_n%d" % n)
    roots_available = (
        len(field.nth_roots(a, n)) == n and len(field.nth_roots(b, n)) == n
    )
    windows = {}
    for m in range(1, n):
        vecs = []
        for i in range(n):
            idx = [(i + t) % n for t in range(m)]
            vecs.append(
                wedge_of_vectors(
                    field, n, [unit_vector(field, n, j) for j in idx]
                ).coords
            )
        w = Subspace.from_vectors(field, comb(n, m), vecs)
        if w.dim != n:
            raise ConstructionError("window subspace has dim %d != %d" % (w.dim, n))
        _check_window_subspace(rep, w, m, tuple(range(1, m + 1)))
        windows[m] = w
    return CompanionPairResult(rep, windows, roots_available)


@dataclass
class BlockRepSpec:
    """Parameters for the two-generator block construction on k^(ell*m)."""

    ell: int
    m: int
    alphas: tuple
    b_ell: Matrix
    field: object

    @property
    def n(self):
        return self.ell * self.m

    def __post_init__(self):
        self.alphas = tuple(self.alphas)
        f = self.field
        if self.ell < 2 or self.m < 2:
            raise PreconditionFailed("ell and m must be at least 2")
        if len(self.alphas) != self.m or len(set(self.alphas)) != self.m:
            raise PreconditionFailed("alphas must be %d distinct values" % self.m)
        if any(a == f.zero for a in self.alphas):
            raise PreconditionFailed("alphas must be nonzero")
        if f.char and self.ell % f.char == 0:
            raise PreconditionFailed("field characteristic divides ell")
        roots = []
        for a in self.alphas:
            rs = f.nth_roots(a, self.ell)
            if len(rs) != self.ell:
                raise PreconditionFailed(
                    "alpha %s lacks %d distinct ell-th roots" % (f.format(a), self.ell)
                )
            roots.extend(rs)
        if len(set(roots)) != self.n:
            raise PreconditionFailed("eigenvalues of the shift generator collide")
        if self.b_ell.nrows != self.m or not self.b_ell.is_invertible():
            raise PreconditionFailed("b_ell must be an invertible %dx%d matrix" % (self.m, self.m))


@dataclass
class BlockRepResult:
    rep: Representation
    w: Subspace  # block wedges, dim ell in Lambda^m
    y: Subspace  # one-index-per-block wedges, dim m^ell in Lambda^ell
    spec: BlockRepSpec
    cramer_checked: bool
    cramer_nonzero: bool


def block_rep(spec: BlockRepSpec, b_rest_identity: bool = True, b_rest=None) -> BlockRepResult:
    """The block construction: a block cyclic shift with diagonal corner, and
    a second generator carrying b_ell; returns the representation together
    with its two distinguished invariant realizable subspaces."""
    f = spec.field
    ell, m, n = spec.ell, spec.m, spec.n
    ident = Matrix.identity(f, m)
    A = _block_cycle(f, [ident] * (ell - 1) + [Matrix.diagonal(f, spec.alphas)])
    if b_rest is None:
        if not b_rest_identity:
            raise PreconditionFailed("pass b_rest when not using identity tail")
        b_rest = [ident] * (ell - 1)
    B = _block_cycle(f, list(b_rest) + [spec.b_ell])
    rep = Representation(f, n, GROUP, [A, B], label="block_%dx%d" % (ell, m))

    # W: wedge of each block
    wvecs = []
    for t in range(ell):
        idx = list(range(t * m, (t + 1) * m))
        wvecs.append(
            wedge_of_vectors(f, n, [unit_vector(f, n, j) for j in idx]).coords
        )
    w = Subspace.from_vectors(f, comb(n, m), wvecs)
    if w.dim != ell:
        raise ConstructionError("block wedge subspace has wrong dimension")
    if not is_invariant(exterior_rep(rep, m), w):
        raise ConstructionError("block wedge subspace is not invariant")

    # Y: one basis index from each block
    yvecs = []
    for picks in _product_indices(ell, m):
        idx = [t * m + p for t, p in enumerate(picks)]
        yvecs.append(
            wedge_of_vectors(f, n, [unit_vector(f, n, j) for j in idx]).coords
        )
    y = Subspace.from_vectors(f, comb(n, ell), yvecs)
    if y.dim != m**ell:
        raise ConstructionError("cross-block subspace has wrong dimension")
    if not is_invariant(exterior_rep(rep, ell), y):
        raise ConstructionError("cross-block subspace is not invariant")

    cramer_checked, cramer_nonzero = _cramer_coefficients_nonzero(spec, A, B)
    return BlockRepResult(rep, w, y, spec, cramer_checked, cramer_nonzero)


def _product_indices(ell, m):
    import itertools

    return itertools.product(range(m), repeat=ell)


def _field_roots(field, poly):
    if isinstance(field, PrimeField):
        return linear_roots_fp(poly)
    if isinstance(field, Rationals):
        return rational_roots(poly)
    return []


def _cramer_coefficients_nonzero(spec: BlockRepSpec, A: Matrix, B: Matrix):
    """Expand each shift-generator eigenvector in the eigenbasis of the
    second generator and test every coefficient against zero.  Skipped
    (checked=False) when b_ell does not split with distinct roots carrying
    full ell-th root sets disjoint from the shift eigenvalues."""
    f = spec.field
    roots_b = _field_roots(f, charpoly(spec.b_ell))
    if len(roots_b) != spec.m or any(mult != 1 for _, mult in roots_b):
        return False, False
    betas = [r for r, _ in roots_b]
    if set(betas) & set(spec.alphas):
        return False, False
    xis = set()
    for a in spec.alphas:
        xis.update(f.nth_roots(a, spec.ell))
    etas = set()
    for b in betas:
        rs = f.nth_roots(b, spec.ell)
        if len(rs) != spec.ell:
            return False, False
        etas.update(rs)
    if xis & etas:
        return False, False
    ident = Matrix.identity(f, spec.m)
    a_pairs = block_eigenvectors([ident] * (spec.ell - 1) + [Matrix.diagonal(f, spec.alphas)])
    b_pairs = block_eigenvectors([ident] * (spec.ell - 1) + [spec.b_ell])
    wmat = Matrix(f, [list(v) for _, v in a_pairs]).transpose()
    wpmat = Matrix(f, [list(v) for _, v in b_pairs]).transpose()
    coeffs = wpmat.inverse() * wmat
    nonzero = all(
        coeffs.rows[i][j] != f.zero
        for i in range(spec.n)
        for j in range(spec.n)
    )
    return True, nonzero


def suggest_block_field(ell: int, m: int) -> PrimeField:
    """Smallest prime field where the block construction has full root sets
    with headroom: ell divides p-1 and there are at least 2m+2 ell-th powers."""
    p = 2
    while True:
        p += 1
        if not _is_prime(p):
            continue
        if (p - 1) % ell:
            continue
        if (p - 1) // ell >= 2 * m + 2:
            return GF(p)


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def build_block_rep(ell: int, m: int, field=None, alphas=None, betas=None,
                    seed: int = 0, max_tries: int = 32) -> BlockRepResult:
    """Construct a block representation that is verified absolutely
    irreducible, retrying the random basis of the second generator with
    fresh seeds up to max_tries."""
    field = field or suggest_block_field(ell, m)
    powers = [x for x in sorted(field.nonzero_elements(), key=field.sort_key)
              if len(field.nth_roots(x, ell)) == ell]
    if alphas is None:
        alphas = tuple(powers[:m])
    if betas is None:
        taken = set(alphas)
        betas = tuple(x for x in powers if x not in taken)[:m]
    if len(set(betas)) != m:
        raise FieldTooSmall("not enough ell-th powers for distinct betas")
    rng = random.Random(seed)
    n = ell * m
    last_error = None
    for _ in range(max_tries):
        p = random_invertible(field, m, rng)
        b_ell = p * Matrix.diagonal(field, betas) * p.inverse()
        try:
            spec = BlockRepSpec(ell, m, alphas, b_ell, field)
            result = block_rep(spec)
        except (PreconditionFailed, ConstructionError) as e:
            last_error = e
            continue
        if not (result.cramer_checked and result.cramer_nonzero):
            continue
        if burnside_dim(result.rep) == n * n:
            return result
    raise ConstructionError(
        "no irreducible block representation found in %d tries (%s)"
        % (max_tries, last_error)
    )


def block_eigenvectors(blocks):
    """All eigenpairs of the block cycle built from blocks[0..ell-1].

    With C the product of the blocks and alpha ranging over its eigenvalues,
    each ell-th root xi of alpha contributes the eigenvector whose block
    components are xi^(ell-1-t) times the partial products applied to the
    alpha-eigenvector of C.  Each returned pair is verified by direct
    matrix-vector multiplication.
    """
    ell = len(blocks)
    if ell < 2:
        raise PreconditionFailed("need at least two blocks")
    f = blocks[0].field
    m = blocks[0].nrows
    n = ell * m
    C = blocks[-1]
    for blk in reversed(blocks[:-1]):
        C = C * blk
    roots = _field_roots(f, charpoly(C))
    if len(roots) != m or any(mult != 1 for _, mult in roots):
        raise PreconditionFailed("product matrix lacks %d distinct eigenvalues" % m)
    X = _block_cycle(f, blocks)
    pairs = []
    for alpha, _ in sorted(roots, key=lambda rm: f.sort_key(rm[0])):
        eig = kernel(C - Matrix.identity(f, m).scale(alpha))
        if eig.dim != 1:
            raise PreconditionFailed("eigenvalue %s is not simple" % f.format(alpha))
        v = eig.basis_vectors()[0]
        xs = f.nth_roots(alpha, ell)
        if len(xs) != ell:
            raise PreconditionFailed(
                "eigenvalue %s lacks %d ell-th roots" % (f.format(alpha), ell)
            )
        partial = [v]
        for t in range(ell - 1):
            partial.append(blocks[t].apply(partial[-1]))
        for xi in xs:
            w = []
            power = f.one
            scales = [f.one]
            for _ in range(ell - 1):
                power = f.mul(power, xi)
                scales.append(power)
            # block t gets xi^(ell-1-t) * partial[t]
            for t in range(ell):
                s = scales[ell - 1 - t]
                w.extend(f.mul(s, x) for x in partial[t])
            w = tuple(w)
            if X.apply(w) != tuple(f.mul(xi, x) for x in w):
                raise ConstructionError("eigenvector validation failed")
            pairs.append((xi, w))
    if len(pairs) != n:
        raise ConstructionError("expected %d eigenpairs, got %d" % (n, len(pairs)))
    return sorted(pairs, key=lambda p: f.sort_key(p[0]))


def generic_diagonalizable(field, v, avoid, seed: int = 0):
    """A diagonalizable map with distinct nonzero eigenvalues outside
    `avoid` whose eigenbasis sums to v; v then lies in no proper invariant
    subspace of the map.  Returns (matrix, eigenbasis, eigenvalues)."""
    v = tuple(v)
    n = len(v)
    f = field
    if all(x == f.zero for x in v):
        raise PreconditionFailed("v must be nonzero")
    avoid = set(avoid)
    rng = random.Random(seed)
    if f.finite:
        pool = [x for x in sorted(f.nonzero_elements(), key=f.sort_key) if x not in avoid]
        if len(pool) < n:
            raise FieldTooSmall(
                "need %d eigenvalues outside the excluded set, have %d"
                % (n, len(pool))
            )
        betas = rng.sample(pool, n)
    else:
        pool = []
        i = 1
        while len(pool) < n + 3:
            c = f.from_int(i)
            if c not in avoid:
                pool.append(c)
            i += 1
        betas = rng.sample(pool, n)
    # complete v to a basis {v, v_1, .., v_(n-1)}, then v_n = v - sum v_i
    from .linalg import rank_of_rows

    basis_head = []
    guard = 0
    while len(basis_head) < n - 1:
        guard += 1
        if guard > 200 * n:
            raise ConstructionError("failed to complete v to a basis")
        cand = tuple(f.random(rng) for _ in range(n))
        if rank_of_rows(f, [v] + basis_head + [cand], n) == len(basis_head) + 2:
            basis_head.append(cand)
    vn = v
    for u in basis_head:
        vn = tuple(f.sub(a, b) for a, b in zip(vn, u))
    basis = basis_head + [vn]
    vmat = Matrix(f, [list(col) for col in basis]).transpose()
    fmat = vmat * Matrix.diagonal(f, betas) * vmat.inverse()
    for b, u in zip(betas, basis):
        if fmat.apply(u) != tuple(f.mul(b, x) for x in u):
            raise ConstructionError("eigenbasis validation failed")
    total = tuple(f.zero for _ in range(n))
    for u in basis:
        total = tuple(f.add(a, b) for a, b in zip(total, u))
    if total != v:
        raise ConstructionError("eigenbasis does not sum to v")
    rep = Representation(f, n, GROUP, [fmat])
    if spin(rep, [v]).dim != n:
        raise ConstructionError("v generates a proper invariant subspace")
    return fmat, basis, betas


def e1_wedge_subspace(field, n: int) -> Subspace:
    """The (n-1)-dimensional subspace e_1 ^ k^n of Lambda^2 k^n."""
    if n < 4:
        raise BadN("n must be at least 4")
    vecs = [
        WedgeVector.basis_element(field, n, (1, j)).coords for j in range(2, n + 1)
    ]
    w = Subspace.from_vectors(field, comb(n, 2), vecs)
    assert w.dim == n - 1
    return w


def symplectic_form_matrix(field, n: int) -> Matrix:
    """The 2n x 2n form pairing e_i with e_(n+i): omega(e_i, e_(n+i)) = 1."""
    entries = [[field.zero] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        entries[i][n + i] = field.one
        entries[n + i][i] = field.neg(field.one)
    return Matrix(field, entries)


def split_orthogonal_form_matrix(field, n: int) -> Matrix:
    """Split symmetric form: e_i pairs with e_(k+i); odd n gets a trailing 1."""
    k = n // 2
    entries = [[field.zero] * n for _ in range(n)]
    for i in range(k):
        entries[i][k + i] = field.one
        entries[k + i][i] = field.one
    if n % 2:
        entries[n - 1][n - 1] = field.one
    return Matrix(field, entries)


def _basis_matrix(field, n, assign):
    entries = [[field.zero] * n for _ in range(n)]
    for (i, j), val in assign:
        entries[i][j] = val
    return Matrix(field, entries)


def lie_generators(family: str, n: int, field=QQ):
    """Spanning sets of the classical split Lie algebras.

    gl/sl/so_split take n as the matrix size; sp takes the half-dimension
    (matrices are 2n x 2n), matching the symplectic form e_i ^ e_(n+i).
    The so/sp outputs are verified against their stored bilinear forms.
    """
    if n < 1:
        raise BadN("n must be positive")
    one = field.one
    neg = field.neg
    if family == "gl":
        return [
            _basis_matrix(field, n, [((i, j), one)])
            for i in range(n)
            for j in range(n)
        ]
    if family == "sl":
        out = [
            _basis_matrix(field, n, [((i, j), one)])
            for i in range(n)
            for j in range(n)
            if i != j
        ]
        out.extend(
            _basis_matrix(field, n, [((i, i), one), ((i + 1, i + 1), neg(one))])
            for i in range(n - 1)
        )
        return out
    if family == "sp":
        half = n
        size = 2 * half
        J = symplectic_form_matrix(field, half)
        out = []
        # [[A, B], [C, -A^t]] with B, C symmetric
        for i in range(half):
            for j in range(half):
                out.append(
                    _basis_matrix(
                        field, size,
                        [((i, j), one), ((half + j, half + i), neg(one))],
                    )
                )
        for i in range(half):
            for j in range(i, half):
                if i == j:
                    out.append(_basis_matrix(field, size, [((i, half + i), one)]))
                    out.append(_basis_matrix(field, size, [((half + i, i), one)]))
                else:
                    out.append(
                        _basis_matrix(
                            field, size, [((i, half + j), one), ((j, half + i), one)]
                        )
                    )
                    out.append(
                        _basis_matrix(
                            field, size, [((half + i, j), one), ((half + j, i), one)]
                        )
                    )
        _verify_form_compat(out, J)
        assert len(out) == half * (2 * half + 1)
        return out
    if family == "so_split":
        S = split_orthogonal_form_matrix(field, n)
        k = n // 2
        out = []
        for i in range(k):
            for j in range(k):
                out.append(
                    _basis_matrix(
                        field, n, [((i, j), one), ((k + j, k + i), neg(one))]
                    )
                )
        for i in range(k):
            for j in range(i + 1, k):
                out.append(
                    _basis_matrix(
                        field, n, [((i, k + j), one), ((j, k + i), neg(one))]
                    )
                )
                out.append(
                    _basis_matrix(
                        field, n, [((k + i, j), one), ((k + j, i), neg(one))]
                    )
                )
        if n % 2:
            last = n - 1
            for i in range(k):
                out.append(
                    _basis_matrix(
                        field, n, [((i, last), one), ((last, k + i), neg(one))]
                    )
                )
                out.append(
                    _basis_matrix(
                        field, n, [((k + i, last), one), ((last, i), neg(one))]
                    )
                )
        _verify_form_compat(out, S)
        assert len(out) == n * (n - 1) // 2
        return out
    raise BadFamily("unknown family %r" % (family,))


def _verify_form_compat(mats, form):
    zero = Matrix.zero(form.field, form.nrows, form.ncols)
    for x in mats:
        if x.transpose() * form + form * x != zero:
            raise ConstructionError("generator violates the bilinear form")
