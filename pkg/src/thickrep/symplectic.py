"""Symplectic machinery: the contraction maps on exterior powers, their
kernels (the fundamental representations), symplectic normal bases,
Lagrangian complements, isotropic transversals, and the non-realizability
evidence for the perp of a contraction kernel.

Constructions derived from normal-form recipes are always post-validated;
the code never trusts displayed index ranges.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from math import comb

from .errors import (
    BadM,
    CodimMismatch,
    CodimTooLarge,
    ConstructionError,
    PreconditionFailed,
)
from .linalg import Matrix, RowBasis, Subspace, kernel, rank_of_rows, solve_linear
from .exterior import (
    WedgeVector,
    colex_subsets,
    derivation,
    is_decomposable,
    perp,
    projective_coefficients,
    projective_count,
    subset_rank,
    wedge_of_vectors,
    wedge_product,
)
from .constructions import lie_generators, symplectic_form_matrix


@dataclass
class SymplecticSpace:
    """k^(2n) with the form pairing e_i against e_(n+i)."""

    n: int
    field: object

    def __post_init__(self):
        self.form = symplectic_form_matrix(self.field, self.n)

    @property
    def dim(self):
        return 2 * self.n

    def omega(self, u, v):
        f = self.field
        jv = self.form.apply(v)
        if f.native:
            return f.reduce(sum(a * b for a, b in zip(u, jv)))
        s = f.zero
        for a, b in zip(u, jv):
            s = f.add(s, f.mul(a, b))
        return s

    def lie_algebra(self):
        return lie_generators("sp", self.n, self.field)


def contraction_matrix(sp: SymplecticSpace, m: int) -> Matrix:
    """The C(2n,m-2) x C(2n,m) matrix of the form contraction on Lambda^m:
    e_S maps to the signed sum over index pairs of omega values times the
    pair-deleted wedges."""
    N = sp.dim
    if m < 2 or m > N:
        raise BadM("m=%d out of range for dim %d" % (m, N))
    f = sp.field
    subs_m = colex_subsets(N, m)
    rows = comb(N, m - 2)
    entries = [[f.zero] * len(subs_m) for _ in range(rows)]
    for col, S in enumerate(subs_m):
        for i in range(m):
            for j in range(i + 1, m):
                a, b = S[i], S[j]
                om = _omega_basis(sp, a, b)
                if om == f.zero:
                    continue
                T = tuple(x for x in S if x != a and x != b)
                r = subset_rank(T)
                # positions are 1-based in the sign (-1)^(i+j-1)
                sign = ((i + 1) + (j + 1) - 1) % 2
                term = f.neg(om) if sign else om
                entries[r][col] = f.add(entries[r][col], term)
    return Matrix(f, entries)


def _omega_basis(sp: SymplecticSpace, a: int, b: int):
    """omega(e_a, e_b) with 1-based indices."""
    f = sp.field
    n = sp.n
    if b == a + n:
        return f.one
    if a == b + n:
        return f.neg(f.one)
    return f.zero


def ker_fm(sp: SymplecticSpace, m: int) -> Subspace:
    """Kernel of the contraction on Lambda^m; for m <= n this is the m-th
    fundamental representation of the symplectic algebra."""
    N = sp.dim
    if m < 2 or m > sp.n:
        raise BadM("m=%d out of range (2..%d)" % (m, sp.n))
    ker = kernel(contraction_matrix(sp, m))
    expected = comb(N, m) - comb(N, m - 2)
    if ker.dim != expected:
        raise ConstructionError(
            "contraction kernel has dim %d, expected %d" % (ker.dim, expected)
        )
    return ker


def contraction_is_equivariant(sp: SymplecticSpace, m: int) -> bool:
    """Exact matrix identity: contraction intertwines the degree-m and
    degree-(m-2) derivation actions of every algebra generator."""
    fm = contraction_matrix(sp, m)
    for x in sp.lie_algebra():
        if fm * derivation(x, m) != derivation(x, m - 2) * fm:
            return False
    return True


def is_isotropic(sp: SymplecticSpace, w: Subspace) -> bool:
    vecs = w.basis_vectors()
    z = sp.field.zero
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if sp.omega(vecs[i], vecs[j]) != z:
                return False
    return True


def _omega_row(sp: SymplecticSpace, u):
    """Row vector c with c . z = omega(u, z)."""
    return sp.form.transpose().apply(u)


def symplectic_normal_basis(sp: SymplecticSpace, w: Subspace):
    """A symplectic basis v_1..v_2n adapted to w.

    Returns (basis, k, l) where omega(v_i, v_(n+i)) = 1, all other basis
    pairings vanish, and w is spanned by v_1..v_k, v_(k+1)..v_(n-l),
    v_(n+1)..v_(n+k).  The output is validated, not trusted.
    """
    f = sp.field
    n = sp.n
    N = sp.dim
    zero = f.zero

    # split w into hyperbolic pairs and its omega-radical
    work = [tuple(v) for v in w.basis_vectors()]
    pairs_w = []
    while True:
        found = None
        for i in range(len(work)):
            for j in range(len(work)):
                if i != j and sp.omega(work[i], work[j]) != zero:
                    found = (i, j)
                    break
            if found:
                break
        if not found:
            break
        i, j = found
        a = work[i]
        val = sp.omega(a, work[j])
        b = tuple(f.mul(f.inv(val), x) for x in work[j])
        rest = [work[t] for t in range(len(work)) if t not in (i, j)]
        projected = RowBasis(f, N)
        for y in rest:
            ya = sp.omega(y, a)
            yb = sp.omega(y, b)
            # y + omega(y,a) b - omega(y,b) a is orthogonal to both a and b
            yp = tuple(
                f.sub(f.add(yc, f.mul(ya, bc)), f.mul(yb, ac))
                for yc, bc, ac in zip(y, b, a)
            )
            projected.insert(yp)
        pairs_w.append((a, b))
        work = [tuple(r) for r in projected.rows]
    rad = list(work)
    k = len(pairs_w)
    r = len(rad)

    # pair each radical vector with a partner outside w
    pairs = list(pairs_w)
    pending = list(rad)
    while pending:
        v0 = pending.pop(0)
        rows = []
        rhs = []
        for u in [x for p in pairs for x in p] + pending:
            rows.append(_omega_row(sp, u))
            rhs.append(zero)
        rows.append(_omega_row(sp, v0))
        rhs.append(f.one)
        z = solve_linear(Matrix(f, rows), rhs)
        if z is None:
            raise ConstructionError("no symplectic partner found")
        pairs.append((v0, z))

    # fill the remaining dimension with fresh hyperbolic pairs
    while len(pairs) < n:
        flat = [x for p in pairs for x in p]
        if flat:
            compl = kernel(Matrix(f, [_omega_row(sp, u) for u in flat]))
        else:
            compl = Subspace.full(f, N)
        cb = compl.basis_vectors()
        u0 = cb[0]
        partner = None
        for y in cb[1:]:
            val = sp.omega(u0, y)
            if val != zero:
                partner = tuple(f.mul(f.inv(val), x) for x in y)
                break
        if partner is None:
            raise ConstructionError("degenerate complement while completing basis")
        pairs.append((u0, partner))

    basis = [p[0] for p in pairs] + [p[1] for p in pairs]
    l = n - k - r
    _validate_normal_basis(sp, basis, w, k, l)
    return basis, k, l


def _validate_normal_basis(sp, basis, w, k, l):
    f = sp.field
    n = sp.n
    zero, one = f.zero, f.one
    for i in range(2 * n):
        for j in range(2 * n):
            expect = zero
            if j == i + n:
                expect = one
            elif i == j + n:
                expect = f.neg(one)
            if sp.omega(basis[i], basis[j]) != expect:
                raise ConstructionError("normal basis fails the form conditions")
    shape = basis[:k] + basis[k : n - l] + basis[n : n + k]
    span = Subspace.from_vectors(f, 2 * n, shape)
    if span != w:
        raise ConstructionError("normal basis does not exhibit the subspace shape")


def lagrangian_complement(sp: SymplecticSpace, w: Subspace) -> Subspace:
    """A Lagrangian L with L + w = V, for codim(w) <= n."""
    f = sp.field
    n = sp.n
    N = sp.dim
    codim = N - w.dim
    if codim > n:
        raise CodimTooLarge("codim %d exceeds %d" % (codim, n))
    # shrinking w to codimension exactly n only strengthens L + w0 = V
    if w.dim > n:
        w0 = Subspace.from_vectors(f, N, w.basis_vectors()[:n])
    else:
        w0 = w
    basis, k, l = symplectic_normal_basis(sp, w0)
    v = basis  # v[i] is v_(i+1)
    gens = []
    if k == 0:
        gens = v[n:]
    else:
        gens.extend(v[n + k : 2 * n - k])
        for i in range(1, k + 1):
            gens.append(
                tuple(f.add(a, b) for a, b in zip(v[n - k + i - 1], v[n + i - 1]))
            )
        for i in range(1, k + 1):
            gens.append(
                tuple(f.add(a, b) for a, b in zip(v[2 * n - k + i - 1], v[i - 1]))
            )
    L = Subspace.from_vectors(f, N, gens)
    if L.dim != n or not is_isotropic(sp, L):
        raise ConstructionError("complement is not Lagrangian")
    if rank_of_rows(f, L.basis_vectors() + w.basis_vectors(), N) != N:
        raise ConstructionError("Lagrangian does not complement the subspace")
    return L


def isotropic_transversal(sp: SymplecticSpace, w: Subspace, i: int) -> Subspace:
    """An isotropic subspace U of dimension i with U intersect w = 0,
    for w of codimension exactly i <= n."""
    f = sp.field
    N = sp.dim
    if N - w.dim != i:
        raise CodimMismatch("subspace has codim %d, not %d" % (N - w.dim, i))
    if i == 0:
        return Subspace.zero(f, N)
    L = lagrangian_complement(sp, w)
    inter = L.intersect(w)
    added = RowBasis(f, N)
    for row in inter.basis_vectors():
        added.insert(row)
    ugens = []
    for row in L.basis_vectors():
        if added.insert(row):
            ugens.append(row)
    U = Subspace.from_vectors(f, N, ugens)
    if U.dim != i or not is_isotropic(sp, U):
        raise ConstructionError("transversal is not an isotropic i-space")
    if U.intersect(w).dim != 0:
        raise ConstructionError("transversal meets the subspace")
    return U


@dataclass
class KerPerpReport:
    """Evidence that the perp of a contraction kernel contains no nonzero
    decomposable vector: constructive pairings against isotropic
    transversals, plus an exhaustive projective scan where finite."""

    n: int
    m: int
    trials: int = 0
    nonzero_pairings: int = 0
    pairing_prong_pass: bool = False
    scan_prong_ran: bool = False
    scan_prong_pass: bool = False
    scan_points: int = 0
    details: dict = dc_field(default_factory=dict)


def ker_perp_realizability_check(
    sp: SymplecticSpace, m: int, trials: int = 200, seed: int = 0,
    scan_points_cap: int = 200_000,
) -> KerPerpReport:
    """Check both prongs of non-realizability for perp(ker of contraction).

    (a) For seeded random codim-m subspaces W, the top wedge of W pairs
    nontrivially with the wedge of an isotropic transversal of W, which
    lies in the contraction kernel; so no wedge of a codim-m subspace can
    land in the perp.  (b) Where the projective scan is finite, assert
    directly that no point of the perp is decomposable.
    """
    if not 1 < m <= sp.n:
        raise PreconditionFailed("need 1 < m <= n")
    f = sp.field
    N = sp.dim
    report = KerPerpReport(n=sp.n, m=m, trials=trials)
    kf = ker_fm(sp, m)
    contraction = contraction_matrix(sp, m)
    rng = random.Random(seed)
    good = 0
    for _ in range(trials):
        vecs = []
        while len(vecs) < N - m:
            cand = tuple(f.random(rng) for _ in range(N))
            if rank_of_rows(f, vecs + [cand], N) == len(vecs) + 1:
                vecs.append(cand)
        w = Subspace.from_vectors(f, N, vecs)
        u = isotropic_transversal(sp, w, m)
        x = wedge_of_vectors(f, N, w.basis_vectors())
        y = wedge_of_vectors(f, N, u.basis_vectors())
        # wedges of isotropic subspaces live in the contraction kernel
        if any(c != f.zero for c in contraction.apply(y.coords)):
            raise ConstructionError("isotropic wedge escaped the kernel")
        if not wedge_product(x, y).is_zero():
            good += 1
    report.nonzero_pairings = good
    report.pairing_prong_pass = good == trials

    kp = perp(kf, N, m)
    if kp.dim == 0:
        report.scan_prong_ran = True
        report.scan_prong_pass = True
    elif kp.dim == 1:
        report.scan_prong_ran = True
        ok, _ = is_decomposable(WedgeVector(f, N, N - m, kp.basis_vectors()[0]))
        report.scan_prong_pass = not ok
        report.scan_points = 1
    elif f.finite and projective_count(f.order, kp.dim) <= scan_points_cap:
        report.scan_prong_ran = True
        bad = 0
        count = 0
        basis = kp.basis_vectors()
        for coeffs in projective_coefficients(f, kp.dim):
            count += 1
            v = [f.zero] * kp.ambient
            for c, row in zip(coeffs, basis):
                if c != f.zero:
                    v = [f.add(a, f.mul(c, b)) for a, b in zip(v, row)]
            ok, _ = is_decomposable(WedgeVector(f, N, N - m, v))
            if ok:
                bad += 1
        report.scan_points = count
        report.scan_prong_pass = bad == 0
        report.details["decomposable_points"] = bad
    return report
