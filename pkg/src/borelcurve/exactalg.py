"""Exact arithmetic kernel: rationals, univariate polynomials over Q, and
graded subalgebras of tuple rings.

The ambient object everywhere is the tuple ring Q[v] + ... + Q[v] (r copies,
componentwise operations).  A homogeneous element of degree d is a tuple
(c_1 v^d, ..., c_r v^d) and is stored as the pair (d, (c_1, ..., c_r)); the
product of homogeneous elements multiplies coefficient vectors componentwise
(Hadamard product) and adds degrees.  Every ring-theoretic question about a
finitely generated graded subalgebra therefore reduces to exact linear algebra
over Q^r, one degree slice at a time.

Degrees are half the cohomological degree (the torus weight convention makes
all weights even); presentation layers double them when reporting.

No floating point exists anywhere in this package: coefficients are
fractions.Fraction throughout and float inputs are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, InternalError

Vec = tuple[Fraction, ...]


def to_fraction(x) -> Fraction:
    """Coerce an int, Fraction or 'p/q' string to an exact rational.

    Floats are rejected outright: the whole library promises exact results.
    """
    if isinstance(x, bool):
        raise InputError(f"cannot interpret {x!r} as a rational number")
    if isinstance(x, float):
        raise InputError("floating point values are not accepted; pass ints or 'p/q' strings")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse rational {x!r}") from exc
    raise InputError(f"cannot interpret {x!r} as a rational number")


def format_fraction(q: Fraction) -> str:
    """Render as 'p' or 'p/q' (the serialization used in all JSON output)."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# univariate polynomials over Q


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial over Q in the variable v.

    coeffs[k] is the coefficient of v**k.  Trailing zeros are stripped on
    construction, so the zero polynomial has empty coeffs and degree -1
    (the sentinel value for "degree of zero").
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [to_fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((to_fraction(c),))

    @classmethod
    def variable(cls) -> "Poly":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, c, k: int) -> "Poly":
        if k < 0:
            raise InputError("monomial power must be non-negative")
        return cls((Fraction(0),) * k + (to_fraction(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def valuation(self) -> int | None:
        """Index of the lowest nonzero coefficient; None for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def as_monomial(self) -> tuple[Fraction, int] | None:
        """(coefficient, power) if self is a single nonzero term, else None."""
        nz = [(c, i) for i, c in enumerate(self.coeffs) if c != 0]
        if len(nz) != 1:
            return None
        c, i = nz[0]
        return c, i

    def shift(self, k: int) -> "Poly":
        """Multiply by v**k."""
        if self.is_zero():
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, str)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(tuple(self.coeff(k) + o.coeff(k) for k in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise InputError("negative polynomial power")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, dn = len(rem) - 1, o.degree
        lead = o.coeffs[-1]
        quo = [Fraction(0)] * max(dd - dn + 1, 0)
        for k in range(dd - dn, -1, -1):
            c = rem[k + dn] / lead
            if c != 0:
                quo[k] = c
                for j, b in enumerate(o.coeffs):
                    rem[k + j] -= c * b
        return Poly(tuple(quo)), Poly(tuple(rem))

    def __call__(self, x):
        x = to_fraction(x) if not isinstance(x, Fraction) else x
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(format_fraction(c))
            elif i == 1:
                parts.append(f"{format_fraction(c)}*v" if c != 1 else "v")
            else:
                parts.append(f"{format_fraction(c)}*v^{i}" if c != 1 else f"v^{i}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# exact linear algebra over Q


def _pivot_weight(q: Fraction) -> int:
    # simplest fraction wins the pivot, which keeps intermediate entries small
    return abs(q.numerator) * q.denominator


def rref(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns).

    Pivots are chosen among candidate rows by smallest |numerator|*denominator,
    ties broken by row order, so the result is deterministic.
    """
    m = [[to_fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        best = None
        for i in range(top, len(m)):
            if m[i][col] != 0:
                w = _pivot_weight(m[i][col])
                if best is None or w < best[0]:
                    best = (w, i)
        if best is None:
            continue
        i = best[1]
        m[top], m[i] = m[i], m[top]
        inv = 1 / m[top][col]
        m[top] = [x * inv for x in m[top]]
        for j in range(len(m)):
            if j != top and m[j][col] != 0:
                f = m[j][col]
                m[j] = [a - f * b for a, b in zip(m[j], m[top])]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    return m[:top], pivots


def nullspace(rows: Iterable[Sequence], ncols: int) -> list[Vec]:
    """Canonical basis of {x in Q^ncols : A x = 0} for the matrix with given rows."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(red, pivots):
            vec[p] = -row[f]
        basis.append(tuple(vec))
    return basis


def solve_linear_system(rows: Iterable[Sequence], rhs: Sequence) -> list[Fraction]:
    """Unique exact solution x of A x = b; raises InternalError otherwise."""
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    ncols = len(aug[0]) - 1
    red, pivots = rref(aug)
    if ncols in pivots:
        raise InternalError("inconsistent linear system")
    if len(pivots) != ncols:
        raise InternalError("linear system does not have a unique solution")
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return x


class RowSpace:
    """Incrementally maintained canonical (RREF) basis of a subspace of Q^ncols.

    Rows are kept fully reduced with pivot entries 1 and pivot columns sorted,
    so the basis does not depend on insertion order.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence) -> list[Fraction]:
        v = [to_fraction(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c != 0:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def contains(self, vec: Sequence) -> bool:
        return all(c == 0 for c in self.reduce(vec))

    def add(self, vec: Sequence) -> bool:
        """Insert the vector; returns True if it enlarged the span."""
        v = self.reduce(vec)
        pivot = next((i for i, c in enumerate(v) if c != 0), None)
        if pivot is None:
            return False
        inv = 1 / v[pivot]
        v = [c * inv for c in v]
        for i in range(len(self.rows)):
            c = self.rows[i][pivot]
            if c != 0:
                self.rows[i] = [a - c * b for a, b in zip(self.rows[i], v)]
        at = next((i for i, p in enumerate(self.pivots) if p > pivot), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, pivot)
        return True

    def coordinates(self, vec: Sequence) -> list[Fraction] | None:
        """Coefficients of vec over self.rows, or None if vec is outside the span."""
        v = [to_fraction(x) for x in vec]
        coords = [v[p] for p in self.pivots]
        recon = [Fraction(0)] * self.ncols
        for c, row in zip(coords, self.rows):
            if c != 0:
                recon = [a + c * b for a, b in zip(recon, row)]
        if recon != v:
            return None
        return coords

    def basis_vectors(self) -> list[Vec]:
        return [tuple(row) for row in self.rows]


# ---------------------------------------------------------------------------
# homogeneous tuples and graded subalgebras


def _hadamard(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
    return tuple(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class HomTuple:
    """Homogeneous element (c_1 v^degree, ..., c_r v^degree) of a tuple ring."""

    degree: int
    coeffs: Vec

    def __post_init__(self):
        if not isinstance(self.degree, int) or self.degree < 0:
            raise InputError("tuple degree must be a non-negative integer")
        object.__setattr__(self, "coeffs", tuple(to_fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise InputError("tuple needs at least one component")

    @classmethod
    def ones(cls, r: int, degree: int = 0) -> "HomTuple":
        return cls(degree, (Fraction(1),) * r)

    @property
    def r(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, HomTuple):
            if other.r != self.r:
                raise InputError("component-count mismatch")
            return HomTuple(self.degree + other.degree, _hadamard(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction, str)):
            c = to_fraction(other)
            return HomTuple(self.degree, tuple(c * x for x in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, str)):
            return self * other
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, HomTuple):
            return NotImplemented
        if other.r != self.r:
            raise InputError("component-count mismatch")
        if other.degree != self.degree:
            raise InputError("cannot add tuples of different degrees")
        return HomTuple(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, HomTuple):
            return NotImplemented
        return self + (-1) * other

    def project(self, positions: Sequence[int]) -> "HomTuple":
        """Restrict to the given 0-based component positions."""
        return HomTuple(self.degree, tuple(self.coeffs[p] for p in positions))

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [format_fraction(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "HomTuple":
        try:
            return cls(int(data["degree"]), tuple(to_fraction(c) for c in data["coeffs"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad tuple serialization: {data!r}") from exc


class GradedSubalgebra:
    """Subalgebra of the r-component tuple ring generated by homogeneous tuples.

    The degree-d slice is the linear subspace V_d of Q^r spanned by the
    coefficient vectors of all degree-d products of generators (and the unit,
    when adjoined).  Slices are built by dynamic programming

        V_d = span( g o w : g generator of degree e <= d, w in V_{d-e} )

    (o = Hadamard product), seeded by V_0, then saturated under multiplication
    by degree-0 generators.  All slices are cached as canonical RREF bases.

    When the all-ones degree-1 tuple (the element v) belongs to the algebra,
    the slices form a chain V_0 <= V_1 <= ... whose dimensions stabilize at a
    value <= r.
    """

    def __init__(self, r: int, generators: Iterable[HomTuple] = (), contains_unit: bool = True):
        if r < 1:
            raise InputError("component count must be positive")
        self.r = int(r)
        gens = tuple(generators)
        for g in gens:
            if g.r != self.r:
                raise InputError("component-count mismatch between generators")
        self.generators = gens
        self.contains_unit = bool(contains_unit)
        self._slices: dict[int, RowSpace] = {}

    # -- slice construction --------------------------------------------------

    def _saturate_degree_zero(self, space: RowSpace) -> None:
        zero_gens = [g for g in self.generators if g.degree == 0]
        if not zero_gens:
            return
        changed = True
        while changed:
            changed = False
            for g in zero_gens:
                for row in [list(r) for r in space.rows]:
                    if space.add(_hadamard(g.coeffs, row)):
                        changed = True

    def _slice(self, d: int) -> RowSpace:
        if d < 0:
            raise InputError("degree must be non-negative")
        cached = self._slices.get(d)
        if cached is not None:
            return cached
        space = RowSpace(self.r)
        if d == 0:
            if self.contains_unit:
                space.add((Fraction(1),) * self.r)
        else:
            for g in self.generators:
                if 1 <= g.degree < d:
                    lower = self._slice(d - g.degree)
                    for row in lower.rows:
                        space.add(_hadamard(g.coeffs, row))
        for g in self.generators:
            if g.degree == d:
                space.add(g.coeffs)
        self._saturate_degree_zero(space)
        self._slices[d] = space
        return space

    # -- the public operations -------------------------------------------------

    def graded_basis(self, d: int) -> list[HomTuple]:
        """Canonical row-reduced basis of the degree-d slice."""
        return [HomTuple(d, vec) for vec in self._slice(d).basis_vectors()]

    def hilbert_function(self, max_degree: int) -> list[int]:
        """[dim V_0, ..., dim V_max_degree]."""
        if max_degree < 0:
            raise InputError("degree bound must be non-negative")
        return [self._slice(d).dim for d in range(max_degree + 1)]

    def member(self, t: HomTuple) -> bool:
        """Exact membership of a homogeneous tuple in its degree slice."""
        if t.r != self.r:
            raise InputError("component-count mismatch")
        return self._slice(t.degree).contains(t.coeffs)

    def coordinates(self, t: HomTuple) -> list[Fraction] | None:
        """Coefficients of t over graded_basis(t.degree), or None if not a member."""
        if t.r != self.r:
            raise InputError("component-count mismatch")
        return self._slice(t.degree).coordinates(t.coeffs)

    def quotient_by_v_dims(self, max_degree: int) -> list[int]:
        """Dimensions of the quotient by the ideal (v), degree by degree.

        Entry d is dim V_d - dim V_{d-1}; under the chain property these are
        the (half-degree) Betti numbers of the underlying space.  Requires the
        all-ones degree-1 tuple to be a member, otherwise the quotient grading
        is undefined.
        """
        if not self.member(HomTuple.ones(self.r, 1)):
            raise InputError("the element v (all-ones tuple of degree 1) is not in the "
                             "algebra; quotient by (v) is undefined")
        h = self.hilbert_function(max_degree)
        out = [h[0]] + [h[d] - h[d - 1] for d in range(1, len(h))]
        if any(x < 0 for x in out):
            raise InternalError("chain property violated: Hilbert function decreased")
        return out

    def kernel_basis(self, labels: Iterable[int], d: int) -> list[HomTuple]:
        """Basis of {x in V_d : x_i = 0 for all i in labels} (labels are 1-based).

        This is the degree-d piece of the ideal of the sub-curve over the given
        components.
        """
        pos = sorted(set(int(i) for i in labels))
        if not pos:
            raise InputError("component subset must be nonempty")
        if pos[0] < 1 or pos[-1] > self.r:
            raise InputError(f"component labels must lie in 1..{self.r}")
        basis = self._slice(d).basis_vectors()
        if not basis:
            return []
        constraint = [[row[p - 1] for row in basis] for p in pos]
        combos = nullspace(constraint, len(basis))
        space = RowSpace(self.r)
        for c in combos:
            vec = [Fraction(0)] * self.r
            for a, row in zip(c, basis):
                if a != 0:
                    vec = [x + a * y for x, y in zip(vec, row)]
            space.add(vec)
        return [HomTuple(d, v) for v in space.basis_vectors()]

    @property
    def default_degree_bound(self) -> int:
        """Truncation degree used when the caller does not supply one.

        No a priori stabilization bound is proved here, so every
        truncation-dependent answer reports the bound it used.
        """
        maxdeg = max((g.degree for g in self.generators), default=1)
        return 2 * max(maxdeg, 1) * self.r

    def generator_support(self) -> set[int]:
        """1-based labels of components touched by some generator."""
        out = set()
        for g in self.generators:
            for i, c in enumerate(g.coeffs):
                if c != 0:
                    out.add(i + 1)
        return out

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "contains_unit": self.contains_unit,
            "generators": [g.to_json() for g in self.generators],
        }

    def __repr__(self):
        return f"GradedSubalgebra(r={self.r}, generators={len(self.generators)})"
