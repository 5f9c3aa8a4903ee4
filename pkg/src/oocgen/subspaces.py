"""F_q-linear subspaces of F_{q^m} and cyclic subspace codes.

Subspaces carry their full span as a frozenset of log indices (-1 for zero),
which makes scaling by a nonzero field element a cheap index shift and makes
orbit and intersection sweeps exact set operations.  Rank computations go
through F_q-coordinate vectors supplied by the field's subfield embeddings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import (ExtensionField, FieldElement, factor_prime_power,
                    field_from_descriptor, field_for_prime_power)


class SubspaceError(ValueError):
    """Invalid subspace or code input."""


def _shift_span(span_idx, a, N):
    """Span of alpha*U for alpha = omega^a, as an index set."""
    return frozenset(-1 if i < 0 else (i + a) % N for i in span_idx)


def _log_exact(size, q):
    d = round(math.log(size, q))
    assert q ** d == size, f"set of size {size} is not F_{q}-subspace sized"
    return d


class Subspace:
    """An F_q-subspace of the ambient field, with cached span."""

    __slots__ = ("field", "ground_q", "basis", "span_idx", "dim")

    def __init__(self, field, ground_q, basis, span_idx):
        self.field = field
        self.ground_q = ground_q
        self.basis = tuple(basis)
        self.span_idx = frozenset(span_idx)
        self.dim = len(self.basis)
        assert len(self.span_idx) == ground_q ** self.dim

    def contains(self, x):
        return x.idx in self.span_idx

    def members(self):
        return [self.field.from_idx(i) for i in sorted(self.span_idx)]

    def scale(self, alpha):
        """The subspace alpha*U for nonzero alpha."""
        if alpha.is_zero():
            raise SubspaceError("cannot scale a subspace by zero")
        return Subspace(self.field, self.ground_q,
                        [alpha * b for b in self.basis],
                        _shift_span(self.span_idx, alpha.idx, self.field.N))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field is other.field
                and self.ground_q == other.ground_q
                and self.span_idx == other.span_idx)

    def __hash__(self):
        return hash((id(self.field), self.ground_q, self.span_idx))

    def __repr__(self):
        return (f"Subspace(dim={self.dim}, q={self.ground_q}, "
                f"ambient=F_{self.field.order})")


def span(field, elements, ground_q):
    """F_q-span of the given elements, with an independent basis extracted.

    Dependent input is reduced, not rejected; the empty set spans {0}.
    """
    scalars = field.subfield(ground_q).elements()
    current = {field.zero().idx}
    basis = []
    for el in elements:
        field._check_same(el)
        if el.idx in current:
            continue
        basis.append(el)
        new = set(current)
        for s_idx in current:
            s = field.from_idx(s_idx)
            for lam in scalars[1:]:
                new.add((s + lam * el).idx)
        current = new
    return Subspace(field, ground_q, basis, current)


def _check_compatible(U, V):
    if U.field is not V.field or U.ground_q != V.ground_q:
        raise SubspaceError("subspaces live in different ambient fields")


def _rank(vectors, field):
    """Rank of a list of coordinate vectors (entries are field elements)."""
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows))
                      if not rows[r][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        for r in range(rank + 1, len(rows)):
            if not rows[r][col].is_zero():
                f = rows[r][col] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def dim_intersection(U, V):
    """dim_{F_q}(U intersect V), by rank arithmetic on coordinate vectors."""
    _check_compatible(U, V)
    emb = U.field.subfield(U.ground_q)
    coords = [emb.coords(b) for b in U.basis] + [emb.coords(b) for b in V.basis]
    return U.dim + V.dim - _rank(coords, U.field)


def subspace_distance(U, V):
    """d_s(U, V) = dim U + dim V - 2 dim(U intersect V)."""
    return U.dim + V.dim - 2 * dim_intersection(U, V)


def _ground_unit_indices(field, q):
    """Log indices of F_q^* inside the ambient field."""
    stride = field.N // (q - 1)
    return {(stride * i) % field.N for i in range(q - 1)}


def is_sidon(U):
    """Exhaustive Sidon check: dim(U ∩ alpha U) <= 1 for alpha outside F_q.

    Returns (True, None) or (False, witness_alpha) with the smallest witness
    by log index.
    """
    f, q, N = U.field, U.ground_q, U.field.N
    units = _ground_unit_indices(f, q)
    for a in range(1, N):
        if a in units:
            continue
        if len(U.span_idx & _shift_span(U.span_idx, a, N)) > q:
            return False, f.from_idx(a)
    return True, None


def is_multi_sidon(spaces):
    """Multi-Sidon check on a family of equal-dimension subspaces.

    dim(U_i ∩ alpha U_j) <= 1 must hold for all nonzero alpha when i != j,
    and for alpha outside F_q when i = j.  Returns (True, None) or
    (False, (i, j, alpha)).
    """
    if len(set(spaces)) != len(spaces):
        raise SubspaceError("duplicate subspaces in multi-Sidon input")
    dims = {U.dim for U in spaces}
    if len(dims) != 1:
        raise SubspaceError("multi-Sidon input must have equal dimensions")
    for U in spaces[1:]:
        _check_compatible(spaces[0], U)
    f, q, N = spaces[0].field, spaces[0].ground_q, spaces[0].field.N
    for i, U in enumerate(spaces):
        ok, alpha = is_sidon(U)
        if not ok:
            return False, (i, i, alpha)
    for i in range(len(spaces)):
        for j in range(i + 1, len(spaces)):
            Si, Sj = spaces[i].span_idx, spaces[j].span_idx
            for a in range(N):
                if len(Si & _shift_span(Sj, a, N)) > q:
                    return False, (i, j, f.from_idx(a))
    return True, None


def orbit_size(U):
    N = U.field.N
    stabilizer = sum(1 for a in range(N)
                     if _shift_span(U.span_idx, a, N) == U.span_idx)
    return N // stabilizer


def orbit(U):
    """Distinct subspaces alpha*U, in ascending order of the scaling index."""
    f, N = U.field, U.field.N
    seen = set()
    out = []
    for a in range(N):
        shifted = _shift_span(U.span_idx, a, N)
        if shifted not in seen:
            seen.add(shifted)
            out.append(U.scale(f.from_idx(a)))
    return out


@dataclass
class CyclicSubspaceCode:
    """A union of orbits, given by representative subspaces."""

    field: ExtensionField
    ground_q: int
    representatives: tuple
    min_distance: int | None = None

    def __post_init__(self):
        self.representatives = tuple(self.representatives)
        dims = {U.dim for U in self.representatives}
        if len(dims) != 1:
            raise SubspaceError("representatives must have equal dimension")

    @property
    def dim(self):
        return self.representatives[0].dim

    @property
    def orbit_sizes(self):
        return [orbit_size(U) for U in self.representatives]

    @property
    def size(self):
        return sum(self.orbit_sizes)

    def orbits_disjoint(self):
        N = self.field.N
        reps = self.representatives
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                Si = reps[i].span_idx
                Sj = reps[j].span_idx
                if any(_shift_span(Sj, a, N) == Si for a in range(N)):
                    return False
        return True

    def to_dict(self):
        return {
            "field": self.field.descriptor(),
            "orbits": [subspace_to_dict(U) for U in self.representatives],
        }


def subspace_to_dict(U):
    return {"ground_q": U.ground_q, "basis": [b.idx for b in U.basis]}


def subspace_from_dict(d, fld):
    basis = [fld.from_idx(i) for i in d["basis"]]
    return span(fld, basis, d["ground_q"])


def code_from_dict(d):
    fld = field_from_descriptor(d["field"])
    reps = [subspace_from_dict(s, fld) for s in d["orbits"]]
    if not reps:
        raise SubspaceError("code file contains no orbits")
    return CyclicSubspaceCode(fld, reps[0].ground_q, reps)


def code_min_distance(code):
    """Minimum subspace distance over the whole union of orbits.

    By cyclic symmetry d(alpha U, beta V) = d(U, alpha^{-1} beta V), so a
    sweep of alpha against fixed representatives is exact.
    """
    reps = code.representatives
    if len(reps) == 1 and orbit_size(reps[0]) < 2:
        raise SubspaceError("minimum distance of a single-subspace code "
                            "is undefined")
    q, N = code.ground_q, code.field.N
    best = None
    for i in range(len(reps)):
        for j in range(i, len(reps)):
            Si, Sj = reps[i].span_idx, reps[j].span_idx
            di, dj = reps[i].dim, reps[j].dim
            for a in range(N):
                T = _shift_span(Sj, a, N)
                if i == j and T == Si:
                    continue
                d = di + dj - 2 * _log_exact(len(Si & T), q)
                if best is None or d < best:
                    best = d
    return best


# ---------------------------------------------------------------------------
# explicit constructions via linearized monomials
# ---------------------------------------------------------------------------

@dataclass
class SidonConstructionParams:
    """Parameters for the x -> x + xi * mu * x^(q^s) subspace construction."""

    q: int
    k: int
    s: int
    mu_list: tuple
    xi: FieldElement
    b: FieldElement | None = None
    w: FieldElement | None = None

    def validate(self):
        if math.gcd(self.s, self.k) != 1:
            raise SubspaceError(f"gcd(s, k) must be 1, got s={self.s}, "
                                f"k={self.k}")
        if len(self.mu_list) > self.q - 1:
            raise SubspaceError("at most q - 1 orbit representatives allowed")
        fld = self.xi.field
        if fld.subfield(self.q ** self.k).contains(self.xi):
            raise SubspaceError("xi must lie outside F_{q^k}")


def construct_w(fld, q, k, s, mu, xi):
    """The subspace {x + xi * mu * x^(q^s) : x in F_{q^k}}.

    With mu = 0 this is F_{q^k} itself.  A degenerate (xi, mu) pair that
    collapses the dimension below k is a hard error.
    """
    emb = fld.subfield(q ** k)
    qs = q ** s
    images = set()
    elements = []
    for x in emb.elements():
        y = x + xi * mu * (x ** qs)
        images.add(y.idx)
        elements.append(y)
    if len(images) != q ** k:
        raise SubspaceError("degenerate (xi, mu): image has dimension < k")
    # the map is F_q-linear, so its image is a subspace
    U = span(fld, elements, q)
    if U.dim != k:
        raise SubspaceError("degenerate (xi, mu): image has dimension < k")
    return U


def validate_multi_orbit(fld, q, k, mus, xi):
    """Check the pairwise norm conditions for a multi-orbit construction.

    Requires the ambient field to be F_{q^{2k}}.  Returns (ok, report) where
    report lists every violated pair.
    """
    p, e0 = factor_prime_power(q)
    if fld.p != p or fld.e != e0 * 2 * k:
        raise SubspaceError("ambient field must be F_{q^{2k}}")
    if len(mus) > q - 1:
        raise SubspaceError("at most q - 1 orbits allowed")
    qk = q ** k
    if fld.subfield(qk).contains(xi):
        raise SubspaceError("xi must lie outside F_{q^k}")
    norm = lambda x: fld.rel_norm(x, qk, q)
    xi_norm_factor = xi ** (qk + 1)
    report = []
    for i in range(len(mus)):
        for j in range(i + 1, len(mus)):
            if norm(mus[i]) == norm(mus[j]):
                report.append({"pair": (i, j), "condition": "equal norms"})
            if norm(mus[i] * mus[j] * xi_norm_factor) == fld.one():
                report.append({"pair": (i, j),
                               "condition": "norm(mu_i mu_j xi^(q^k+1)) = 1"})
    return not report, report


def construct_g(q, k, s):
    """The explicit multi-orbit code G_{2k,s} over F_{q^{2k}}.

    Picks the canonical primitive w of F_{q^k}, the first b (in canonical
    element order) making x^2 + b x + w irreducible over F_{q^k}, the first
    root xi of that quadratic in F_{q^{2k}}, and returns the
    floor((q-1)/2) orbits V_i = {u + u^(q^s) w^i xi : u in F_{q^k}}.
    """
    if q < 3:
        raise SubspaceError("construction requires q >= 3")
    if k < 2:
        raise SubspaceError("construction requires k >= 2")
    if math.gcd(s, k) != 1:
        raise SubspaceError(f"gcd(s, k) must be 1, got s={s}, k={k}")
    m = 2 * k
    fld = field_for_prime_power(q, m)
    qk = q ** k
    emb = fld.subfield(qk)
    w = emb.generator
    # primitive w is never a (q-1)-power for q > 2
    assert not (w ** ((qk - 1) // (q - 1))) == fld.one()

    b = next((cand for cand in emb.elements()
              if fld.is_irreducible_quadratic(cand, w, qk)), None)
    if b is None:
        raise SubspaceError("no b makes x^2 + b x + w irreducible")  # cannot happen
    xi = next((t for t in fld.iter_elements()
               if not t.is_zero() and (t * t + b * t + w).is_zero()), None)
    if xi is None:
        raise SubspaceError("quadratic has no root in F_{q^{2k}}")  # cannot happen

    r = (q - 1) // 2
    mus = [w ** i for i in range(r)]
    if r > 1:
        ok, report = validate_multi_orbit(fld, q, k, mus, xi)
        if not ok:
            raise SubspaceError(f"norm conditions violated: {report}")
    reps = [construct_w(fld, q, k, s, mu, xi) for mu in mus]
    code = CyclicSubspaceCode(fld, q, tuple(reps))
    code.min_distance = code_min_distance(code)
    return code


# ---------------------------------------------------------------------------
# affine coset families
# ---------------------------------------------------------------------------

def coset_representatives(U):
    """Pairwise non-F_q-proportional representatives of F_{q^m}/U.

    Greedy scan in canonical element order; returns exactly
    t = (q^{m-k} - 1)/(q - 1) elements, none in U, no two of which differ by
    an F_q-multiple modulo U.
    """
    f, q = U.field, U.ground_q
    m = _log_exact(f.order, q)
    if U.dim >= m:
        raise SubspaceError("U must be a proper subspace")
    t = (q ** (m - U.dim) - 1) // (q - 1)
    units = f.subfield(q).nonzero_elements()
    reps = []
    for a in range(f.N):
        d = f.from_idx(a)
        if d.idx in U.span_idx:
            continue
        if any((d - lam * r).idx in U.span_idx
               for r in reps for lam in units):
            continue
        reps.append(d)
        if len(reps) == t:
            break
    assert len(reps) == t, f"expected {t} coset representatives, got {len(reps)}"
    return reps


@dataclass
class CosetFamily:
    """The affine family {U_i + d_{i,j}} built from a code's representatives."""

    code: CyclicSubspaceCode
    entries: tuple          # (subspace index, translate) pairs
    cosets: tuple           # matching tuples of field elements
    t: int

    def __len__(self):
        return len(self.entries)


def build_coset_family(code):
    if not code.orbits_disjoint():
        raise SubspaceError("code orbits are not pairwise disjoint")
    entries = []
    cosets = []
    t = None
    for i, U in enumerate(code.representatives):
        reps = coset_representatives(U)
        t = len(reps)
        for d in reps:
            entries.append((i, d))
            coset = tuple(sorted((u + d for u in U.members()),
                                 key=lambda x: x.idx))
            assert all(not x.is_zero() for x in coset)
            cosets.append(coset)
    return CosetFamily(code, tuple(entries), tuple(cosets), t)
