"""Representations by generator matrices, invariant-subspace search, and the
thickness / denseness deciders with re-checkable certificates.

Complete decision procedures are scoped to finite fields under explicit
caps.  Over the rationals the module offers the Burnside test (complete
for absolute irreducibility) and commutant-based decomposition (complete
for multiplicity-free split modules); thickness verdicts carry their
field scope and fall back to Unknown rather than overreach.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from dataclasses import dataclass, field as dc_field
from math import comb

from .errors import BadM, CapExceeded, DimensionMismatch, PreconditionFailed, WrongField
from .fields import GF, PrimeField, Rationals, linear_roots_fp, rational_roots
from .linalg import (
    Matrix,
    RowBasis,
    Subspace,
    charpoly,
    kernel,
    rank_of_rows,
)
from . import exterior
from .exterior import (
    compound,
    derivation,
    is_decomposable,
    perp,
    projective_coefficients,
    projective_count,
    realizable_search,
    wedge_of_vectors,
    WedgeVector,
)

GROUP = "group"
LIE = "lie"

THICK = "Thick"
NOT_THICK = "NotThick"
UNKNOWN = "Unknown"

YES = "Yes"
NO = "No"


@dataclass
class Caps:
    """Budgets for the complete decision procedures; THICKREP_CAPS (a JSON
    object in the environment) overrides individual fields."""

    group_cap: int = 100_000
    points_cap: int = 1_000_000
    submodule_points_cap: int = 50_000
    lattice_cap: int = 20_000
    pair_cap: int = 1_000_000
    candidate_cap: int = 2_000
    rational_trials: int = 400
    isotypic_summands_max: int = 14

    @classmethod
    def default(cls) -> "Caps":
        caps = cls()
        raw = os.environ.get("THICKREP_CAPS")
        if raw:
            for key, val in json.loads(raw).items():
                if hasattr(caps, key):
                    setattr(caps, key, int(val))
        return caps


@dataclass
class Representation:
    field: object
    dim: int
    mode: str  # "group" | "lie"
    generators: list
    label: str = ""

    def __post_init__(self):
        if self.mode not in (GROUP, LIE):
            raise PreconditionFailed("mode must be %r or %r" % (GROUP, LIE))
        if not self.generators:
            raise PreconditionFailed("at least one generator required")
        for g in self.generators:
            if g.nrows != self.dim or g.ncols != self.dim:
                raise DimensionMismatch("generator is not %dx%d" % (self.dim, self.dim))
            if g.field != self.field:
                raise WrongField("generator over a different field")
        if self.mode == GROUP:
            for g in self.generators:
                if not g.is_invertible():
                    raise PreconditionFailed("group generators must be invertible")


def exterior_rep(r: Representation, m: int) -> Representation:
    """The induced action on Lambda^m: compound matrices in group mode,
    derivations in Lie mode."""
    if m < 0 or m > r.dim:
        raise BadM("m=%d out of range" % m)
    lift = compound if r.mode == GROUP else derivation
    gens = [lift(g, m) for g in r.generators]
    return Representation(
        r.field, comb(r.dim, m), r.mode, gens,
        label="%s_wedge%d" % (r.label or "rep", m),
    )


def spin(r: Representation, seeds) -> Subspace:
    """Smallest invariant subspace containing the seed vectors."""
    basis = RowBasis(r.field, r.dim)
    queue = []
    for v in seeds:
        v = tuple(v)
        if len(v) != r.dim:
            raise DimensionMismatch("seed length %d != %d" % (len(v), r.dim))
        if basis.insert(v):
            queue.append(v)
    while queue:
        v = queue.pop()
        for g in r.generators:
            w = g.apply(v)
            if basis.insert(w):
                queue.append(w)
        if basis.dim == r.dim:
            break
    return basis.to_subspace()


def is_invariant(r: Representation, w: Subspace) -> bool:
    if w.ambient != r.dim:
        raise DimensionMismatch("subspace ambient %d != %d" % (w.ambient, r.dim))
    return all(
        w.contains_vector(g.apply(v)) for g in r.generators for v in w.basis_vectors()
    )


def _flatten(m: Matrix):
    return tuple(x for row in m.rows for x in row)


def _algebra_closure_dim(field, gens, n, want_full_early=True):
    basis = RowBasis(field, n * n)
    ident = Matrix.identity(field, n)
    basis.insert(_flatten(ident))
    queue = [ident]
    full = n * n
    while queue:
        mat = queue.pop()
        for g in gens:
            prod = mat * g
            if basis.insert(_flatten(prod)):
                queue.append(prod)
        if want_full_early and basis.dim == full:
            return full
    return basis.dim


def _reduction_prime(gens):
    """A prime not dividing any generator-entry denominator."""
    from fractions import Fraction

    den = 1
    for g in gens:
        for row in g.rows:
            for x in row:
                d = Fraction(x).denominator
                if den % d:
                    den = den * d
    for p in (10007, 10009, 10037, 10039, 10061):
        if den % p:
            return p
    raise RuntimeError("no reduction prime available")


def _reduce_matrix_mod(m: Matrix, p: int) -> Matrix:
    from fractions import Fraction

    F = GF(p)
    rows = []
    for row in m.rows:
        out = []
        for x in row:
            fr = Fraction(x)
            out.append(fr.numerator * pow(fr.denominator, p - 2, p) % p)
        rows.append(out)
    return Matrix(F, rows)


def burnside_dim(r: Representation) -> int:
    """Dimension of the unital matrix algebra generated by the generators;
    equals dim^2 exactly when the representation is absolutely irreducible.

    Over the rationals a single mod-p closure is tried first: full rank mod p
    forces full rank over Q, and only non-full outcomes fall through to the
    exact computation.
    """
    n = r.dim
    if isinstance(r.field, Rationals):
        p = _reduction_prime(r.generators)
        modgens = [_reduce_matrix_mod(g, p) for g in r.generators]
        if _algebra_closure_dim(GF(p), modgens, n) == n * n:
            return n * n
    return _algebra_closure_dim(r.field, r.generators, n)


def group_closure(r: Representation, cap: int):
    """All elements of the generated matrix group, by breadth-first products."""
    if r.mode != GROUP:
        raise PreconditionFailed("group closure needs group mode")
    ident = Matrix.identity(r.field, r.dim)
    seen = {ident.rows: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for mat in frontier:
            for g in r.generators:
                prod = mat * g
                if prod.rows not in seen:
                    seen[prod.rows] = prod
                    nxt.append(prod)
                    if len(seen) > cap:
                        raise CapExceeded("group closure exceeded %d" % cap)
        frontier = nxt
    return list(seen.values())


def all_submodules(r: Representation, caps: Caps | None = None):
    """The complete lattice of invariant subspaces over a finite field.

    Spin every projective point (every submodule is a finite sum of cyclic
    ones), then close under pairwise sums; sorted by (dim, canonical basis).
    """
    caps = caps or Caps.default()
    f = r.field
    if not f.finite:
        raise WrongField("all_submodules requires a finite field")
    n = r.dim
    npts = projective_count(f.order, n)
    if npts > caps.submodule_points_cap:
        raise CapExceeded("projective point count %d exceeds cap" % npts)
    subs = {}
    zero = Subspace.zero(f, n)
    subs[zero.mat.rows] = zero
    for v in projective_coefficients(f, n):
        w = spin(r, [v])
        subs.setdefault(w.mat.rows, w)
    frontier = list(subs.values())
    allsubs = list(subs.values())
    while frontier:
        added = []
        for a in frontier:
            for b in allsubs:
                s = a.sum(b)
                if s.mat.rows not in subs:
                    subs[s.mat.rows] = s
                    added.append(s)
                    if len(subs) > caps.lattice_cap:
                        raise CapExceeded("submodule lattice exceeded cap")
        allsubs = list(subs.values())
        frontier = added
    return sorted(subs.values(), key=Subspace.key)


def _is_diagonal(m: Matrix) -> bool:
    z = m.field.zero
    return all(
        m.rows[i][j] == z for i in range(m.nrows) for j in range(m.ncols) if i != j
    )


def commutant(r: Representation):
    """(dimension, matrix basis) of {M : Mg = gM for every generator}.

    Diagonal generators are handled combinatorially first: they force
    M[i][j] = 0 whenever positions i and j have different joint eigenvalue
    signatures, which keeps the linear solve small for split Lie examples.
    """
    f = r.field
    n = r.dim
    diag = [g for g in r.generators if _is_diagonal(g)]
    others = [g for g in r.generators if not _is_diagonal(g)]
    if diag:
        sig = [tuple(g.rows[i][i] for g in diag) for i in range(n)]
        positions = [(i, j) for i in range(n) for j in range(n) if sig[i] == sig[j]]
    else:
        positions = [(i, j) for i in range(n) for j in range(n)]
    pos_index = {pos: k for k, pos in enumerate(positions)}
    nvars = len(positions)
    rows = []
    zero = f.zero
    for g in others:
        grows = g.rows
        for i in range(n):
            for j in range(n):
                row = [zero] * nvars
                nonzero = False
                for k in range(n):
                    # (Mg - gM)[i][j]: M[i][k] g[k][j] - g[i][k] M[k][j]
                    c = grows[k][j]
                    if c != zero and (i, k) in pos_index:
                        idx = pos_index[(i, k)]
                        row[idx] = f.add(row[idx], c)
                        nonzero = True
                    c = grows[i][k]
                    if c != zero and (k, j) in pos_index:
                        idx = pos_index[(k, j)]
                        row[idx] = f.sub(row[idx], c)
                        nonzero = True
                if nonzero:
                    rows.append(row)
    if rows:
        sol = kernel(Matrix(f, rows))
        coeff_vectors = sol.basis_vectors()
    else:
        coeff_vectors = Matrix.identity(f, nvars).rows
    basis = []
    for vec in coeff_vectors:
        entries = [[zero] * n for _ in range(n)]
        for (i, j), c in zip(positions, vec):
            entries[i][j] = c
        basis.append(Matrix(f, entries))
    return len(basis), basis


def _split_roots(f, poly):
    """Roots-with-multiplicity of a charpoly if it splits completely
    into linear factors over the field, else None."""
    if isinstance(f, PrimeField):
        roots = linear_roots_fp(poly)
    elif isinstance(f, Rationals):
        roots = rational_roots(poly)
    else:
        roots = [
            (a, _root_multiplicity(poly, a))
            for a in f.elements()
            if poly(a) == f.zero
        ]
        roots = [(a, m) for a, m in roots if m]
    total = sum(mult for _, mult in roots)
    if total != poly.degree:
        return None
    return roots


def _root_multiplicity(poly, a):
    from .fields import Poly

    mult = 0
    rem = poly
    while rem.degree >= 1 and rem(a) == rem.field.zero:
        rem, _ = rem.divmod(Poly.x_minus(rem.field, a))
        mult += 1
    return mult


def isotypic_decomposition(r: Representation, seed: int = 0, max_tries: int = 8):
    """Eigenspace decomposition from a random commutant element.

    Succeeds when the commutant is commutative and a seeded random element
    has a completely split charpoly whose distinct roots count the commutant
    dimension; the eigenspaces are then the unique invariant summands of a
    multiplicity-free module.  Returns None otherwise.
    """
    f = r.field
    n = r.dim
    cdim, cbasis = commutant(r)
    if cdim == 1:
        return [Subspace.full(f, n)]
    for i in range(cdim):
        for j in range(i + 1, cdim):
            if cbasis[i] * cbasis[j] != cbasis[j] * cbasis[i]:
                return None
    rng = random.Random(seed)
    for _ in range(max_tries):
        elem = Matrix.zero(f, n, n)
        for b in cbasis:
            elem = elem + b.scale(f.random(rng))
        roots = _split_roots(f, charpoly(elem))
        if roots is None or len(roots) != cdim:
            continue
        eig = []
        ok = True
        for a, mult in roots:
            space = kernel(elem - Matrix.identity(f, n).scale(a))
            if space.dim != mult:
                ok = False
                break
            eig.append(space)
        if ok and sum(e.dim for e in eig) == n:
            return sorted(eig, key=Subspace.key)
    return None


def restrict_to_invariant(r: Representation, w: Subspace) -> Representation:
    """The action of the generators on an invariant subspace, in the
    coordinates of its canonical basis."""
    f = r.field
    rows = w.basis_vectors()
    gens = []
    for g in r.generators:
        cols = []
        for v in rows:
            img = g.apply(v)
            if not w.contains_vector(img):
                raise PreconditionFailed("subspace is not invariant")
            cols.append(w.coordinates(img))
        gens.append(Matrix(f, list(zip(*cols))))
    return Representation(f, w.dim, r.mode, gens, label=(r.label or "rep") + "_restr")


def is_m_dense(r: Representation, m: int, absolute: bool = True,
               caps: Caps | None = None) -> str:
    """Is Lambda^m of the representation irreducible?  "Yes" / "No" / "Unknown".

    Absolute mode decides via the Burnside span (full iff absolutely
    irreducible, over any field).  Non-absolute mode is exact over finite
    fields via complete submodule enumeration; over the rationals a full
    Burnside span still certifies "Yes" and anything else is "Unknown".
    """
    n = r.dim
    if m < 0 or m > n:
        raise BadM("m=%d out of range" % m)
    if m == 0 or m == n:
        return YES
    caps = caps or Caps.default()
    ext = exterior_rep(r, m)
    nn = ext.dim
    if absolute:
        return YES if burnside_dim(ext) == nn * nn else NO
    if r.field.finite:
        try:
            subs = all_submodules(ext, caps)
        except CapExceeded:
            return UNKNOWN
        return YES if len(subs) == 2 else NO
    return YES if burnside_dim(ext) == nn * nn else UNKNOWN


# thickness machinery


@dataclass
class NotThickCertificate:
    """Everything needed to re-check a refutation with exterior/linalg only:
    invariant W1 in Lambda^m and W2 = W1-perp in Lambda^(n-m), plus vector
    witnesses whose wedges exhibit realizability of each side."""

    field: object
    n: int
    m: int
    w1: Subspace
    w2: Subspace
    witness1: tuple  # m vectors in k^n
    witness2: tuple  # n-m vectors in k^n
    pair: tuple | None = None  # (V1, V2) subspace pair for definition refutations


@dataclass
class ThicknessReport:
    m: int
    verdict: str
    method: str
    mode: str
    field_scope: str = "OverK"
    certificate: NotThickCertificate | None = None
    log: dict = dc_field(default_factory=dict)
    reason: str = ""


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def enumerate_subspaces(field, n: int, k: int):
    """All k-dim subspaces of k^n over a finite field, via canonical RREF
    profiles: pivot columns in lex order, then free entries."""
    if k == 0:
        yield Subspace.zero(field, n)
        return
    elems = tuple(sorted(field.elements(), key=field.sort_key))
    zero, one = field.zero, field.one
    for pivots in itertools.combinations(range(n), k):
        pivset = set(pivots)
        free_cells = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, n)
            if j not in pivset
        ]
        for values in itertools.product(elems, repeat=len(free_cells)):
            rows = [[zero] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = one
            for (i, j), v in zip(free_cells, values):
                rows[i][j] = v
            yield Subspace(field, n, Matrix(field, rows), tuple(pivots))


def _apply_to_subspace(g: Matrix, w: Subspace) -> Subspace:
    return Subspace.from_vectors(
        w.field, w.ambient, [g.apply(v) for v in w.basis_vectors()]
    )


def _subspace_orbit(r: Representation, start: Subspace):
    seen = {start.mat.rows: start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for g in r.generators:
                img = _apply_to_subspace(g, w)
                if img.mat.rows not in seen:
                    seen[img.mat.rows] = img
                    nxt.append(img)
        frontier = nxt
    return list(seen.values())


def is_m_thick_definition(r: Representation, m: int,
                          caps: Caps | None = None) -> ThicknessReport:
    """Decide m-thickness over a finite field straight from the definition:
    every (V1, V2) pair must admit a group element with rho(g)V1 + V2 = V.

    The group acts on m-subspaces through orbits, so the existential over
    group elements is decided by scanning the orbit of V1 under the
    generators; verdicts are identical to enumerating group elements and
    the group itself is never materialized.
    """
    caps = caps or Caps.default()
    if r.mode != GROUP:
        raise PreconditionFailed("definition decider needs group mode")
    f = r.field
    if not f.finite:
        raise WrongField("definition decider needs a finite field")
    n = r.dim
    if m < 0 or m > n:
        raise BadM("m=%d out of range" % m)
    report = ThicknessReport(m=m, verdict=THICK, method="definition", mode=r.mode)
    if m == 0 or m == n:
        report.log = {"trivial": True}
        return report
    q = f.order
    n1 = gaussian_binomial(n, m, q)
    n2 = gaussian_binomial(n, n - m, q)
    if n1 * n2 > caps.pair_cap:
        raise CapExceeded("pair enumeration %d x %d exceeds cap" % (n1, n2))
    v2_list = list(enumerate_subspaces(f, n, n - m))
    orbits = []
    claimed = set()
    for v1 in enumerate_subspaces(f, n, m):
        if v1.mat.rows in claimed:
            continue
        orbit = _subspace_orbit(r, v1)
        orbits.append(orbit)
        for w in orbit:
            claimed.add(w.mat.rows)
    pairs = 0
    for orbit in orbits:
        orbit_rows = [w.mat.rows for w in orbit]
        for v2 in v2_list:
            pairs += 1
            v2rows = v2.mat.rows
            if not any(
                rank_of_rows(f, rows + v2rows, n) == n for rows in orbit_rows
            ):
                v1 = min(orbit, key=Subspace.key)
                cert = _certificate_from_pair(r, m, v1, v2)
                return ThicknessReport(
                    m=m, verdict=NOT_THICK, method="definition", mode=r.mode,
                    certificate=cert,
                    log={"orbits": len(orbits), "pairs_checked": pairs},
                )
    report.log = {
        "m_subspaces": n1,
        "complement_subspaces": n2,
        "orbits": len(orbits),
        "orbit_sizes": sorted(len(o) for o in orbits),
        "pairs_checked": pairs,
    }
    return report


def _certificate_from_pair(r, m, v1: Subspace, v2: Subspace) -> NotThickCertificate:
    f = r.field
    n = r.dim
    x = wedge_of_vectors(f, n, v1.basis_vectors())
    ext = exterior_rep(r, m)
    w1 = spin(ext, [x.coords])
    w2 = perp(w1, n, m)
    y = wedge_of_vectors(f, n, v2.basis_vectors())
    assert w2.contains_vector(y.coords), "failing pair did not yield a perp witness"
    return NotThickCertificate(
        field=f, n=n, m=m, w1=w1, w2=w2,
        witness1=tuple(v1.basis_vectors()),
        witness2=tuple(v2.basis_vectors()),
        pair=(v1, v2),
    )


def _subspace_realizability(w: Subspace, n, m, caps: Caps, seed: int):
    """Realizability of a subspace of Lambda^m, with the exactly decidable
    small cases resolved directly: dim 0 is never realizable and a line is
    realizable iff its basis vector is decomposable."""
    from .exterior import RealizabilityResult

    f = w.field
    if w.dim == 0:
        return RealizabilityResult("NotRealizable", exhaustive=True)
    if w.dim == 1:
        v = WedgeVector(f, n, m, w.basis_vectors()[0])
        ok, wit = is_decomposable(v)
        if ok:
            return RealizabilityResult("Realizable", v, wit, 1, exhaustive=True)
        return RealizabilityResult("NotRealizable", scanned=1, exhaustive=True)
    return realizable_search(
        w, n, m, points_cap=caps.points_cap, seed=seed,
        rational_trials=caps.rational_trials,
    )


def _pair_certificate(r, m, w1, r1, w2, r2) -> NotThickCertificate:
    return NotThickCertificate(
        field=r.field, n=r.dim, m=m, w1=w1, w2=w2,
        witness1=tuple(r1.witness_vectors),
        witness2=tuple(r2.witness_vectors),
    )


def is_m_thick_criterion(r: Representation, m: int, caps: Caps | None = None,
                         seed: int = 0) -> ThicknessReport:
    """Decide m-thickness via invariant realizable subspace pairs: the
    representation fails to be m-thick exactly when some invariant
    W1 <= Lambda^m and its perp W2 are both realizable.

    Sources of invariant subspaces, in order of preference: the complete
    submodule lattice (finite field, within caps), the isotypic sums of a
    multiplicity-free split module (any field), and spins of decomposable
    vectors.  The spin route is complete for refutations: if any realizable
    invariant pair exists, the spin of a decomposable witness of W1 is an
    invariant realizable subspace whose perp contains W2, so some m-subspace
    V1 already exhibits the failure.
    """
    caps = caps or Caps.default()
    f = r.field
    n = r.dim
    if m < 0 or m > n:
        raise BadM("m=%d out of range" % m)
    if m == 0 or m == n:
        return ThicknessReport(
            m=m, verdict=THICK, method="criterion", mode=r.mode, log={"trivial": True}
        )
    ext = exterior_rep(r, m)
    nn = ext.dim

    subs = None
    route = None
    if f.finite:
        if projective_count(f.order, nn) <= caps.submodule_points_cap:
            try:
                subs = all_submodules(ext, caps)
                route = "lattice"
            except CapExceeded:
                subs = None
    else:
        dec = isotypic_decomposition(ext, seed=seed)
        if dec is not None and len(dec) <= caps.isotypic_summands_max:
            if all(
                burnside_dim(restrict_to_invariant(ext, e)) == e.dim * e.dim
                for e in dec
            ):
                subs = []
                for picks in itertools.product((0, 1), repeat=len(dec)):
                    w = Subspace.zero(f, nn)
                    for take, e in zip(picks, dec):
                        if take:
                            w = w.sum(e)
                    subs.append(w)
                subs = sorted(set(subs), key=Subspace.key)
                route = "isotypic"

    if subs is not None:
        unresolved = 0
        for w1 in subs:
            r1 = _subspace_realizability(w1, n, m, caps, seed)
            if r1.status == "NotRealizable":
                continue
            w2 = perp(w1, n, m)
            r2 = _subspace_realizability(w2, n, n - m, caps, seed)
            if r1.status == "Realizable" and r2.status == "Realizable":
                cert = _pair_certificate(r, m, w1, r1, w2, r2)
                return ThicknessReport(
                    m=m, verdict=NOT_THICK, method="criterion", mode=r.mode,
                    certificate=cert,
                    log={"route": route, "submodules": len(subs)},
                )
            if r2.status != "NotRealizable":
                unresolved += 1
        if unresolved == 0:
            return ThicknessReport(
                m=m, verdict=THICK, method="criterion", mode=r.mode,
                log={"route": route, "submodules": len(subs)},
            )
        return ThicknessReport(
            m=m, verdict=UNKNOWN, method="criterion", mode=r.mode,
            reason="%d invariant pairs with undecided realizability" % unresolved,
            log={"route": route, "submodules": len(subs)},
        )

    # spin route: enumerate decomposable generators W1 = spin(wedge(V1))
    return _criterion_spin_route(r, ext, m, caps, seed)


def _criterion_spin_route(r, ext, m, caps: Caps, seed: int) -> ThicknessReport:
    f = r.field
    n = r.dim
    seen = set()
    unresolved = 0
    examined = 0
    exhausted = False
    if f.finite:
        total = gaussian_binomial(n, m, f.order)
        candidates = enumerate_subspaces(f, n, m)
        exhausted = total <= caps.candidate_cap
    else:
        candidates = _rational_candidate_subspaces(f, n, m, caps, seed)
    for v1 in candidates:
        examined += 1
        if examined > caps.candidate_cap:
            exhausted = False
            break
        x = wedge_of_vectors(f, n, v1.basis_vectors())
        if x.is_zero():
            continue
        w1 = spin(ext, [x.coords])
        if w1.mat.rows in seen:
            continue
        seen.add(w1.mat.rows)
        w2 = perp(w1, n, m)
        r2 = _subspace_realizability(w2, n, n - m, caps, seed)
        if r2.status == "Realizable":
            ok, wit1 = is_decomposable(WedgeVector(f, n, m, x.coords))
            assert ok
            cert = NotThickCertificate(
                field=f, n=n, m=m, w1=w1, w2=w2,
                witness1=tuple(wit1), witness2=tuple(r2.witness_vectors),
            )
            return ThicknessReport(
                m=m, verdict=NOT_THICK, method="criterion", mode=r.mode,
                certificate=cert,
                log={"route": "spin", "candidates": examined},
            )
        if r2.status == "Unknown":
            unresolved += 1
    if exhausted and unresolved == 0:
        return ThicknessReport(
            m=m, verdict=THICK, method="criterion", mode=r.mode,
            log={"route": "spin", "candidates": examined},
        )
    return ThicknessReport(
        m=m, verdict=UNKNOWN, method="criterion", mode=r.mode,
        reason="candidate search not exhaustive"
        if not exhausted
        else "%d perps with undecided realizability" % unresolved,
        log={"route": "spin", "candidates": examined},
    )


def _rational_candidate_subspaces(f, n, m, caps: Caps, seed: int):
    for combo in itertools.combinations(range(n), m):
        yield Subspace.from_vectors(
            f, n, [[f.one if j == i else f.zero for j in range(n)] for i in combo]
        )
    rng = random.Random(seed)
    for _ in range(caps.rational_trials):
        vecs = [[f.random(rng) for _ in range(n)] for _ in range(m)]
        w = Subspace.from_vectors(f, n, vecs)
        if w.dim == m:
            yield w


def verify_not_thick_certificate(r: Representation, cert: NotThickCertificate) -> bool:
    """Independent re-check of a refutation using exterior/linalg operations:
    invariance of both sides, the perp relation, and both wedge witnesses."""
    f, n, m = cert.field, cert.n, cert.m
    if f != r.field or n != r.dim:
        return False
    lift = compound if r.mode == GROUP else derivation
    for g in r.generators:
        gm = lift(g, m)
        for v in cert.w1.basis_vectors():
            if not cert.w1.contains_vector(gm.apply(v)):
                return False
        gnm = lift(g, n - m)
        for v in cert.w2.basis_vectors():
            if not cert.w2.contains_vector(gnm.apply(v)):
                return False
    if perp(cert.w1, n, m) != cert.w2:
        return False
    x = wedge_of_vectors(f, n, cert.witness1)
    if x.is_zero() or not cert.w1.contains_vector(x.coords):
        return False
    y = wedge_of_vectors(f, n, cert.witness2)
    if y.is_zero() or not cert.w2.contains_vector(y.coords):
        return False
    return True


@dataclass
class RNumberBounds:
    n: int
    m: int
    lower: int
    upper: int
    exact: int | None = None


def r_number_bounds(n: int, m: int) -> RNumberBounds:
    """Bounds for the minimal dimension of an invariant realizable subspace
    of Lambda^m over all n-dimensional irreducible representations."""
    if m < 0 or m > n:
        raise BadM("m=%d out of range for n=%d" % (m, n))
    if m == 0 or m == n:
        return RNumberBounds(n, m, 1, 1, 1)
    k = min(m, n - m)
    lower = (n - 1) // k + 1
    upper = n
    exact = None
    if n % m == 0:
        exact = n // m
    elif n % (n - m) == 0:
        exact = n // (n - m)
    elif n == 5 and m in (2, 3):
        exact = 4
    if exact is not None:
        assert lower <= exact <= upper
    return RNumberBounds(n, m, lower, upper, exact)
