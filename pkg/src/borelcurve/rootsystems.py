"""Root-system tables and Poincare-polynomial product formulas.

Positive roots are kept as integer vectors in a standard orthogonal
realization (F4 is scaled by 2 to stay integral; scaling does not change
reflections or simple-root coefficients).  Heights are computed as the sum of
the coefficients over the simple-root basis, which is integer-exact and
independent of the realization.

km_poincare evaluates the Kostant-Macdonald product over positive-root
heights,

    prod_{a > 0} (1 - t^(ht(a)+1)) / (1 - t^(ht(a))),

with exact polynomial division.  weyl_length_genfun recomputes the same
polynomial by breadth-first enumeration of the Weyl group acting on a regular
vector, and serves as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import InputError, InternalError
from .exactalg import Poly, solve_linear_system

MAX_RANK = 8
WEYL_ENUMERATION_GUARD = 10**6


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    simple_roots: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PoincarePoly:
    """Polynomial with non-negative integer coefficients, palindromic, constant term 1."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", cs)
        if not cs or cs[0] != 1:
            raise InternalError("Poincare polynomial must have constant term 1")
        if any(c < 0 for c in cs):
            raise InternalError("Poincare polynomial has a negative coefficient")
        if cs != cs[::-1]:
            raise InternalError("Poincare polynomial is not palindromic")

    @property
    def value_at_one(self) -> int:
        return sum(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


def _unit(dim: int, i: int, sign: int = 1) -> list[int]:
    v = [0] * dim
    v[i] = sign
    return v


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _family_tables(family: str, rank: int):
    if family == "A":
        if not 1 <= rank <= MAX_RANK:
            raise InputError(f"A-family rank must be 1..{MAX_RANK}")
        dim = rank + 1
        simple = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(rank)]
        pos = [_sub(_unit(dim, i), _unit(dim, j)) for i in range(dim) for j in range(i + 1, dim)]
        return simple, pos
    if family == "B":
        if not 1 <= rank <= MAX_RANK:
            raise InputError(f"B-family rank must be 1..{MAX_RANK}")
        dim = rank
        simple = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(rank - 1)]
        simple.append(tuple(_unit(dim, rank - 1)))
        pos = [tuple(_unit(dim, i)) for i in range(rank)]
        for i in range(rank):
            for j in range(i + 1, rank):
                pos.append(_sub(_unit(dim, i), _unit(dim, j)))
                pos.append(_add(_unit(dim, i), _unit(dim, j)))
        return simple, pos
    if family == "C":
        if not 1 <= rank <= MAX_RANK:
            raise InputError(f"C-family rank must be 1..{MAX_RANK}")
        dim = rank
        simple = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(rank - 1)]
        simple.append(tuple(_unit(dim, rank - 1, 2)))
        pos = [tuple(_unit(dim, i, 2)) for i in range(rank)]
        for i in range(rank):
            for j in range(i + 1, rank):
                pos.append(_sub(_unit(dim, i), _unit(dim, j)))
                pos.append(_add(_unit(dim, i), _unit(dim, j)))
        return simple, pos
    if family == "D":
        if not 2 <= rank <= MAX_RANK:
            raise InputError(f"D-family rank must be 2..{MAX_RANK}")
        dim = rank
        simple = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(rank - 1)]
        simple.append(_add(_unit(dim, rank - 2), _unit(dim, rank - 1)))
        pos = []
        for i in range(rank):
            for j in range(i + 1, rank):
                pos.append(_sub(_unit(dim, i), _unit(dim, j)))
                pos.append(_add(_unit(dim, i), _unit(dim, j)))
        return simple, pos
    if family == "G2":
        if rank != 2:
            raise InputError("G2 has rank 2")
        a, b = (1, -1, 0), (-2, 1, 1)
        simple = [a, b]
        pos = [a, b, _add(a, b), _add(_add(a, a), b), _add(_add(a, _add(a, a)), b),
               _add(_add(a, _add(a, a)), _add(b, b))]
        return simple, pos
    if family == "F4":
        if rank != 4:
            raise InputError("F4 has rank 4")
        # realization scaled by 2 so the half-sum roots stay integral
        simple = [(0, 2, -2, 0), (0, 0, 2, -2), (0, 0, 0, 2), (1, -1, -1, -1)]
        pos = [tuple(_unit(4, i, 2)) for i in range(4)]
        for i in range(4):
            for j in range(i + 1, 4):
                pos.append(_sub(_unit(4, i, 2), _unit(4, j, 2)))
                pos.append(_add(_unit(4, i, 2), _unit(4, j, 2)))
        for s1 in (1, -1):
            for s2 in (1, -1):
                for s3 in (1, -1):
                    pos.append((1, s1, s2, s3))
        return simple, pos
    raise InputError(f"unsupported family {family!r} (expected A, B, C, D, G2 or F4)")


_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "G2": lambda n: 6,
    "F4": lambda n: 24,
}


def positive_roots(family: str, rank: int) -> RootSystem:
    """Complete positive-root list in the standard integer realization."""
    simple, pos = _family_tables(family, int(rank))
    rs = RootSystem(family, int(rank), tuple(simple), tuple(pos))
    if len(rs.positive_roots) != _POSITIVE_COUNT[family](rs.rank):
        raise InternalError("positive root count does not match the classical value")
    return rs


def heights(rs: RootSystem) -> list[int]:
    """Height of each positive root: sum of its simple-root coefficients."""
    cols = rs.simple_roots
    dim = len(cols[0])
    matrix = [[Fraction(cols[k][i]) for k in range(len(cols))] for i in range(dim)]
    out = []
    for root in rs.positive_roots:
        coeffs = solve_linear_system(matrix, [Fraction(c) for c in root])
        for c in coeffs:
            if c.denominator != 1 or c < 0:
                raise InternalError(f"root {root} is not a non-negative integer "
                                    "combination of simple roots")
        out.append(int(sum(coeffs)))
    return out


def weyl_order(family: str, rank: int) -> int:
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if family == "G2":
        return 12
    if family == "F4":
        return 1152
    raise InputError(f"unsupported family {family!r}")


def _product_formula(degrees: list[int]) -> list[int]:
    """Expand prod_i (1 - t^(d_i+1)) / (1 - t^(d_i)); ArithmeticError on remainder.

    The full numerator is multiplied out first; when the total quotient is a
    polynomial every intermediate division below is then exact as well.
    """
    num = Poly.const(1)
    for d in degrees:
        num = num * Poly(tuple([1] + [0] * d + [-1]))
    for d in degrees:
        num, rem = divmod(num, Poly(tuple([1] + [0] * (d - 1) + [-1])))
        if not rem.is_zero():
            raise ArithmeticError("product formula has a nonzero remainder")
    out = []
    for c in num.coeffs:
        if c.denominator != 1:
            raise ArithmeticError("product formula has a non-integer coefficient")
        out.append(int(c))
    return out


def km_poincare(rs: RootSystem) -> PoincarePoly:
    """Kostant-Macdonald product over the heights of the positive roots.

    The coefficient of t^k equals the number of Weyl group elements of
    length k; a division remainder here means the root tables are wrong.
    """
    try:
        coeffs = _product_formula(heights(rs))
    except ArithmeticError as exc:
        raise InternalError(f"height product is not a polynomial for {rs.family}{rs.rank}: "
                            f"{exc}") from exc
    poly = PoincarePoly(tuple(coeffs))
    if poly.value_at_one != weyl_order(rs.family, rs.rank):
        raise InternalError("product formula does not sum to the Weyl group order")
    return poly


def poincare_from_degrees(degrees) -> PoincarePoly:
    """Poincare polynomial of a model with the given positive weight degrees.

    Degrees are the half-weights of the attracting-cell coordinates (deg v = 1
    convention).  Not every degree list yields a polynomial; a remainder means
    the degrees do not come from a regular projective model.
    """
    ds = []
    for d in degrees:
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise InputError("degrees must be positive integers")
        ds.append(d)
    try:
        coeffs = _product_formula(ds)
    except ArithmeticError as exc:
        raise InputError(f"degrees {ds} do not come from a regular action: {exc}") from exc
    if any(c < 0 for c in coeffs):
        raise InputError(f"degrees {ds} do not come from a regular action: "
                         "negative coefficient in the expanded product")
    return PoincarePoly(tuple(coeffs))


def weyl_length_genfun(family: str, rank: int) -> PoincarePoly:
    """Length generating function of the Weyl group by brute-force enumeration.

    The group is generated by the simple reflections acting on the realization;
    elements are identified with their image of the (regular) sum of positive
    roots, and breadth-first levels count elements by length.
    """
    rs = positive_roots(family, rank)
    order = weyl_order(family, rank)
    if order > WEYL_ENUMERATION_GUARD:
        raise InputError(f"Weyl group of order {order} exceeds the enumeration "
                         f"guard {WEYL_ENUMERATION_GUARD}")
    simples = [tuple(Fraction(c) for c in s) for s in rs.simple_roots]
    norms = [sum(c * c for c in s) for s in simples]
    start = tuple(sum(Fraction(root[i]) for root in rs.positive_roots)
                  for i in range(len(simples[0])))
    seen = {start}
    frontier = [start]
    counts = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for s, ns in zip(simples, norms):
                c = 2 * sum(a * b for a, b in zip(x, s)) / ns
                y = tuple(a - c * b for a, b in zip(x, s))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if nxt:
            counts.append(len(nxt))
        frontier = nxt
    if len(seen) != order:
        raise InternalError("Weyl enumeration produced the wrong group order")
    return PoincarePoly(tuple(counts))
