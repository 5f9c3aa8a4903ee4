"""Exact arithmetic in small extension fields F_{p^e}.

Elements are stored by their discrete-log index with respect to a fixed
primitive element omega: index -1 encodes zero, index i >= 0 encodes omega^i.
Full exp/log tables are built at construction, so multiplication, inversion
and discrete logs are table lookups.  Addition goes through the coefficient
("code") representation: an element sum(c_i x^i) mod modulus is encoded as
the integer sum(c_i p^i).

All choices (modulus, omega) are canonical, so two fields built from the
same (p, e, modulus) are bit-identical.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction

from sympy import factorint, isprime


class FieldError(ValueError):
    """Invalid field parameters or out-of-domain arguments."""


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (coefficient lists, low degree first)
# ---------------------------------------------------------------------------

def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, b, p):
    """Remainder of a modulo b over F_p.  b must be nonzero."""
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        factor = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bc) % p
        _poly_trim(a)
    return a


def find_irreducible_factor(f, p):
    """Return a nontrivial monic factor of f over F_p, or None if irreducible.

    Trial division by all monic polynomials of degree <= deg(f)/2; fine at
    the field sizes this package targets.
    """
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            if not _poly_mod(f, g, p):
                return g
    return None


def canonical_modulus(p, e):
    """Lexicographically smallest monic irreducible of degree e over F_p.

    Coefficient tuples (c_0, ..., c_{e-1}) are compared low degree first.
    """
    for tail in itertools.product(range(p), repeat=e):
        f = list(tail) + [1]
        if find_irreducible_factor(f, p) is None:
            return f
    raise FieldError(f"no irreducible polynomial of degree {e} over F_{p}")


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------

class FieldElement:
    """An element of an ExtensionField, stored by discrete-log index."""

    __slots__ = ("field", "idx")

    def __init__(self, field, idx):
        self.field = field
        self.idx = idx

    @property
    def code(self):
        """Integer encoding of the coefficient vector."""
        return 0 if self.idx < 0 else self.field.exp[self.idx]

    def is_zero(self):
        return self.idx < 0

    def __add__(self, other):
        f = self.field
        f._check_same(other)
        return f.from_code(f.add_codes(self.code, other.code))

    def __neg__(self):
        f = self.field
        return f.from_code(f.neg_code(self.code))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        f._check_same(other)
        if self.idx < 0 or other.idx < 0:
            return f.zero()
        return FieldElement(f, (self.idx + other.idx) % f.N)

    def __pow__(self, t):
        f = self.field
        if self.idx < 0:
            if t == 0:
                return f.one()
            if t > 0:
                return f.zero()
            raise FieldError("negative power of zero")
        return FieldElement(f, (self.idx * t) % f.N)

    def inverse(self):
        if self.idx < 0:
            raise FieldError("zero has no inverse")
        return FieldElement(self.field, (-self.idx) % self.field.N)

    def __truediv__(self, other):
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field is other.field and self.idx == other.idx

    def __hash__(self):
        return hash((id(self.field), self.idx))

    def __repr__(self):
        if self.idx < 0:
            return "0"
        if self.idx == 0:
            return "1"
        return f"w^{self.idx}"


# ---------------------------------------------------------------------------
# the field
# ---------------------------------------------------------------------------

class ExtensionField:
    """F_{p^e} with exp/log tables for a canonical primitive element."""

    def __init__(self, p, e, modulus=None, omega_code=None):
        if not isprime(p):
            raise FieldError(f"p = {p} is not prime")
        if e < 1:
            raise FieldError(f"extension degree must be >= 1, got {e}")
        self.p = p
        self.e = e
        self.order = p ** e
        self.N = self.order - 1

        if modulus is None:
            modulus = canonical_modulus(p, e)
        else:
            modulus = [c % p for c in modulus]
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {e}")
            factor = find_irreducible_factor(modulus, p)
            if factor is not None:
                raise FieldError(
                    f"modulus is reducible; nontrivial factor {factor}")
        self.modulus = tuple(modulus)

        self._digits = [self._compute_digits(c) for c in range(self.order)]
        self._init_reduction_table()

        if omega_code is None:
            omega_code = self._find_primitive_code()
        elif not self._has_full_order(omega_code):
            raise FieldError(f"omega code {omega_code} is not primitive")
        self.omega_code = omega_code

        # exp/log tables; for F_2 (N = 1) omega is 1 and exp = [1]
        self.exp = [0] * max(self.N, 1)
        self.log = {}
        c = 1
        for i in range(max(self.N, 1)):
            self.exp[i] = c
            self.log[c] = i
            c = self.mul_codes(c, self.omega_code)
        if len(self.log) != max(self.N, 1):
            raise FieldError("exp table is not a bijection")  # unreachable

        self._subfields = {}

    # -- code-level arithmetic (polynomial route, independent of the tables)

    def _compute_digits(self, code):
        out = []
        for _ in range(self.e):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def _init_reduction_table(self):
        # digit vectors of x^(e+t) mod modulus, t = 0 .. e-2
        p, e = self.p, self.e
        self._xpow = []
        cur = [(-c) % p for c in self.modulus[:e]]  # x^e
        self._xpow.append(tuple(cur))
        for _ in range(e - 2):
            nxt = [0] + cur[:e - 1]
            top = cur[e - 1]
            if top:
                for j in range(e):
                    nxt[j] = (nxt[j] + top * self._xpow[0][j]) % p
            self._xpow.append(tuple(nxt))
            cur = nxt

    def add_codes(self, a, b):
        p = self.p
        da, db = self._digits[a], self._digits[b]
        code = 0
        for i in range(self.e - 1, -1, -1):
            code = code * p + (da[i] + db[i]) % p
        return code

    def neg_code(self, a):
        p = self.p
        da = self._digits[a]
        code = 0
        for i in range(self.e - 1, -1, -1):
            code = code * p + (-da[i]) % p
        return code

    def mul_codes(self, a, b):
        p, e = self.p, self.e
        da, db = self._digits[a], self._digits[b]
        conv = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] = (conv[i + j] + x * y) % p
        res = conv[:e]
        for t in range(e - 2, -1, -1):
            c = conv[e + t]
            if c:
                red = self._xpow[t]
                for j in range(e):
                    res[j] = (res[j] + c * red[j]) % p
        code = 0
        for i in range(e - 1, -1, -1):
            code = code * p + res[i]
        return code

    def pow_code(self, a, t):
        result = 1
        base = a
        while t:
            if t & 1:
                result = self.mul_codes(result, base)
            base = self.mul_codes(base, base)
            t >>= 1
        return result

    def _has_full_order(self, code):
        if code == 0:
            return False
        for t in factorint(self.N):
            if self.pow_code(code, self.N // t) == 1:
                return False
        return True

    def _find_primitive_code(self):
        for code in range(1, self.order):
            if self._has_full_order(code):
                return code
        raise FieldError("no primitive element found")  # unreachable

    # -- element constructors

    def zero(self):
        return FieldElement(self, -1)

    def one(self):
        return FieldElement(self, 0)

    @property
    def omega(self):
        return FieldElement(self, 1 % self.N) if self.N > 1 else self.one()

    def from_idx(self, i):
        if i == -1:
            return self.zero()
        return FieldElement(self, i % self.N)

    def from_code(self, code):
        if code == 0:
            return self.zero()
        return FieldElement(self, self.log[code])

    def from_coeffs(self, coeffs):
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + c % self.p
        return self.from_code(code)

    def iter_elements(self):
        """All elements in canonical order: zero, then ascending log index."""
        yield self.zero()
        for i in range(self.N):
            yield FieldElement(self, i)

    def _check_same(self, other):
        if not isinstance(other, FieldElement) or other.field is not self:
            raise FieldError("elements belong to different fields")

    # -- discrete log and subfield structure

    def dlog(self, x):
        """Index i with omega^i = x; rejects zero."""
        self._check_same(x)
        if x.idx < 0:
            raise FieldError("dlog of zero is undefined")
        return x.idx

    def subfield(self, order):
        if order not in self._subfields:
            self._subfields[order] = SubfieldEmbedding(self, order)
        return self._subfields[order]

    def rel_norm(self, x, from_order, to_order):
        """Relative norm x^((q^k-1)/(q-1)) from F_{q^k} to F_q.

        Here from_order = q^k and to_order = q; both must be subfield orders
        with to_order | from_order in the lattice, and x must lie in the
        embedded F_{q^k}.
        """
        src = self.subfield(from_order)
        dst = self.subfield(to_order)
        if src.degree % dst.degree != 0:
            raise FieldError(
                f"F_{to_order} is not a subfield of F_{from_order}")
        if not src.contains(x):
            raise FieldError(f"{x!r} is not in the subfield of order {from_order}")
        result = x ** ((from_order - 1) // (to_order - 1))
        assert dst.contains(result)
        return result

    def is_irreducible_quadratic(self, b, c, sub_order):
        """True iff x^2 + b*x + c has no root in the subfield of that order.

        Decided by exhaustive root search; b and c must lie in the subfield.
        """
        emb = self.subfield(sub_order)
        if not (emb.contains(b) and emb.contains(c)):
            raise FieldError("quadratic coefficients must lie in the subfield")
        for t in emb.elements():
            if (t * t + b * t + c).is_zero():
                return False
        return True

    # -- serialization

    def descriptor(self):
        return {
            "p": self.p,
            "e": self.e,
            "modulus": list(self.modulus),
            "omega_index": self.omega_code,
        }

    def to_json(self):
        return json.dumps(self.descriptor(), sort_keys=True)

    def __repr__(self):
        return f"ExtensionField(p={self.p}, e={self.e})"


_FIELD_CACHE = {}


def field_create(p, e, modulus=None, omega_code=None):
    """Build (or fetch a cached) F_{p^e} with canonical deterministic tables."""
    key = (p, e, tuple(modulus) if modulus else None, omega_code)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = ExtensionField(p, e, modulus, omega_code)
    return _FIELD_CACHE[key]


def field_from_descriptor(desc):
    return field_create(desc["p"], desc["e"], desc["modulus"],
                        desc.get("omega_index"))


def factor_prime_power(q):
    """Split a prime power q into (p, e0) with q = p^e0."""
    factors = factorint(q)
    if len(factors) != 1:
        raise FieldError(f"{q} is not a prime power")
    (p, e0), = factors.items()
    return p, e0


def field_for_prime_power(q, m):
    """Realize F_{q^m} as an extension of the prime field F_p."""
    p, e0 = factor_prime_power(q)
    return field_create(p, e0 * m)


# ---------------------------------------------------------------------------
# subfield embeddings
# ---------------------------------------------------------------------------

def _matinv_mod(rows, p):
    """Inverse of a square matrix over F_p (Gauss-Jordan)."""
    n = len(rows)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] % p), None)
        if pivot is None:
            raise FieldError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [(v * inv) % p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class SubfieldEmbedding:
    """The subfield of order p^d inside F_{p^e}, with a coordinate map.

    Coordinates are taken with respect to the power basis {1, omega, ...,
    omega^(m-1)} of the big field over the subfield, where m = e/d.
    """

    def __init__(self, field, order):
        p, e = field.p, field.e
        d = 0
        t = order
        while t > 1 and t % p == 0:
            t //= p
            d += 1
        if t != 1 or d == 0 or e % d != 0:
            raise FieldError(
                f"order {order} is not a subfield order of F_{p}^{e}")
        self.field = field
        self.order = order
        self.degree = d                  # over the prime field
        self.relative_degree = e // d    # of the big field over this subfield
        self.stride = field.N // (order - 1)
        self.generator = field.from_idx(self.stride % field.N)
        self._coord_rows = None

    def contains(self, x):
        self.field._check_same(x)
        return x.idx < 0 or x.idx % self.stride == 0

    def elements(self):
        """All subfield elements: zero, then ascending log index."""
        f = self.field
        return [f.zero()] + [f.from_idx((self.stride * i) % f.N)
                             for i in range(self.order - 1)]

    def nonzero_elements(self):
        return self.elements()[1:]

    def _init_coords(self):
        f = self.field
        d, m = self.degree, self.relative_degree
        cols = []
        for j in range(m):
            wj = f.omega ** j if f.N > 1 else f.one()
            for l in range(d):
                el = wj * self.generator ** l
                cols.append(f._digits[el.code])
        rows = [[cols[c][r] for c in range(f.e)] for r in range(f.e)]
        self._coord_rows = _matinv_mod(rows, f.p)
        self._gen_powers = [self.generator ** l for l in range(d)]

    def coords(self, x):
        """Coordinates of x over this subfield (length e/d tuple)."""
        self.field._check_same(x)
        if self._coord_rows is None:
            self._init_coords()
        f = self.field
        p, d, m = f.p, self.degree, self.relative_degree
        vec = f._digits[x.code]
        b = [sum(r * v for r, v in zip(row, vec)) % p
             for row in self._coord_rows]
        out = []
        for j in range(m):
            c = f.zero()
            for l in range(d):
                scalar = b[j * d + l]
                if scalar:
                    c = c + f.from_code(scalar) * self._gen_powers[l]
            out.append(c)
        return tuple(out)

    def __repr__(self):
        return f"SubfieldEmbedding(order={self.order} in {self.field!r})"


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

def gaussian_binomial(m, k, q):
    """Number of k-dimensional subspaces of F_q^m, as an exact integer."""
    if k < 0 or k > m:
        return 0
    num = Fraction(1)
    for i in range(k):
        num *= Fraction(q ** (m - i) - 1, q ** (k - i) - 1)
    assert num.denominator == 1
    return num.numerator
