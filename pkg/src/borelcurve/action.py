"""Regular Borel actions on projective space and exact curve parametrizations.

A model on P^n is a pair (h, e): an integer diagonal h (so the torus acts by
lambda(t) = diag(t^h_0, ..., t^h_n)) and a nilpotent matrix e with [h, e] = 2e
and a single Jordan block.  The unipotent one-parameter group is
phi(s) = exp(s e).  Single-block e is exactly regularity: the unipotent group
fixes only the first coordinate point o, and the torus fixes the n+1
coordinate points.  Models are normalized so h is strictly decreasing, which
makes o the attracting point of lambda(t) as t -> infinity and chart
coordinates quasi-homogeneous of positive degrees d_i = (h_0 - h_i)/2.

The fixed-point curve has one component per fixed point: the closure of
v |-> phi(1/v) . zeta_j.  After clearing the minimal power of v the j-th
component has homogeneous coordinates that are exact monomials, and its chart
coordinates (ratios against the o-coordinate) are c_ij v^{d_i}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InternalError
from .exactalg import Poly, rref, to_fraction

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class ActionModel:
    """Raw model data; run validate() to check regularity and normalize."""

    n: int
    h_weights: tuple[int, ...]
    e_matrix: Matrix


@dataclass(frozen=True)
class CurveComponent:
    """Exact parametrization of one component of the fixed-point curve.

    chart_coords[i-1] is the i-th big-cell coordinate of phi(1/v) . zeta_index,
    always a monomial c * v^{degrees[i-1]} (zero for the component over o).
    homog_coords is the projective lift with constant o-coordinate.
    """

    index: int
    chart_coords: tuple[Poly, ...]
    degrees: tuple[int, ...]
    homog_coords: tuple[Poly, ...]


def _mat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    return tuple(tuple(sum((a[i][t] * b[t][j] for t in range(k)), start=Fraction(0))
                       for j in range(m)) for i in range(n))


def _mat_vec(a, x):
    return tuple(sum((row[j] * x[j] for j in range(len(x))), start=Fraction(0)) for row in a)


def _as_matrix(rows, size: int) -> Matrix:
    m = tuple(tuple(to_fraction(x) for x in row) for row in rows)
    if len(m) != size or any(len(row) != size for row in m):
        raise InputError(f"expected a {size}x{size} matrix")
    return m


def validate(model: ActionModel) -> ActionModel:
    """Check regularity and normalize coordinate order.

    Verifies [h, e] = 2e and dim ker e = 1 (single Jordan block), and reorders
    coordinates so h is strictly decreasing.  Idempotent.
    """
    n = int(model.n)
    if n < 0:
        raise InputError("dimension n must be non-negative")
    r = n + 1
    h = list(model.h_weights)
    if len(h) != r:
        raise InputError(f"h_weights must have length n+1 = {r}")
    for w in h:
        if not isinstance(w, int) or isinstance(w, bool):
            raise InputError("h_weights must be integers")
    if len(set(h)) != r:
        raise InputError("repeated h-weights: torus fixed points are not isolated")
    e = _as_matrix(model.e_matrix, r)

    order = sorted(range(r), key=lambda i: -h[i])
    h_sorted = tuple(h[i] for i in order)
    e_sorted = tuple(tuple(e[order[i]][order[j]] for j in range(r)) for i in range(r))

    for i in range(r):
        for j in range(r):
            if e_sorted[i][j] != 0 and h_sorted[i] - h_sorted[j] != 2:
                raise InputError("commutation failure: [h, e] != 2e")
    rank = len(rref([list(row) for row in e_sorted])[0])
    if rank != n:
        raise InputError(f"not regular: dim ker e = {r - rank}, expected 1")
    return ActionModel(n, h_sorted, e_sorted)


def principal_model(n: int) -> ActionModel:
    """The standard model on P^n: h = (n, n-2, ..., -n), e the Jordan block."""
    if n < 0:
        raise InputError("dimension n must be non-negative")
    h = tuple(n - 2 * i for i in range(n + 1))
    e = tuple(tuple(Fraction(1) if j == i + 1 else Fraction(0) for j in range(n + 1))
              for i in range(n + 1))
    return validate(ActionModel(n, h, e))


def model_from_json(data: dict) -> ActionModel:
    """Parse {"n":, "h_weights":, "e_matrix":} (e_matrix may be "principal")."""
    try:
        n = int(data["n"])
        h = tuple(int(w) for w in data["h_weights"])
        e_spec = data["e_matrix"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad action spec: {exc}") from exc
    if e_spec == "principal":
        e = tuple(tuple(Fraction(1) if j == i + 1 else Fraction(0) for j in range(n + 1))
                  for i in range(n + 1))
    else:
        e = _as_matrix(e_spec, n + 1)
    return validate(ActionModel(n, h, e))


def model_to_json(model: ActionModel) -> dict:
    from .exactalg import format_fraction
    return {
        "n": model.n,
        "h_weights": list(model.h_weights),
        "e_matrix": [[format_fraction(x) for x in row] for row in model.e_matrix],
    }


def exp_e(model: ActionModel, s):
    """exp(s * e) as an exact matrix; a finite sum since e is nilpotent.

    s may be a rational scalar or a Poly, and the entries come back in the
    same ring.
    """
    r = model.n + 1
    if isinstance(s, Poly):
        one, zero = Poly.const(1), Poly()
    else:
        s = to_fraction(s)
        one, zero = Fraction(1), Fraction(0)
    out = [[one if i == j else zero for j in range(r)] for i in range(r)]
    power = tuple(tuple(Fraction(1) if i == j else Fraction(0) for j in range(r))
                  for i in range(r))  # e^k / k!
    s_pow = one
    for k in range(1, r):
        power = tuple(tuple(entry * Fraction(1, k) for entry in row)
                      for row in _mat_mul(power, model.e_matrix))
        s_pow = s_pow * s
        for i in range(r):
            for j in range(r):
                if power[i][j] != 0:
                    out[i][j] = out[i][j] + s_pow * power[i][j]
    return tuple(tuple(row) for row in out)


def fixed_points(model: ActionModel) -> list[tuple[int, ...]]:
    """The n+1 torus-fixed coordinate points, ordered by decreasing h-weight."""
    r = model.n + 1
    return [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]


def big_cell_degrees(model: ActionModel) -> list[int]:
    """Quasi-homogeneous degrees d_i = (h_0 - h_i)/2 of the chart coordinates."""
    h = model.h_weights
    out = []
    for i in range(1, model.n + 1):
        diff = h[0] - h[i]
        if diff <= 0 or diff % 2 != 0:
            raise InternalError("h-weight parity violation; model was not validated")
        out.append(diff // 2)
    return out


def component_parametrization(model: ActionModel, j: int) -> CurveComponent:
    """Exact parametrization of the curve component over the j-th fixed point.

    Computes phi(1/v) . zeta_j in homogeneous coordinates, clears denominators
    by the minimal power of v (the o-coordinate then being a nonzero constant,
    so the component lies in the big cell for v != 0), and dehomogenizes.  Each
    chart coordinate is verified to be a monomial of the expected degree.
    """
    r = model.n + 1
    if not 1 <= j <= r:
        raise InputError(f"component index must lie in 1..{r}")
    degrees = big_cell_degrees(model)
    column = [exp_row[j - 1] for exp_row in exp_e(model, Poly.variable())]
    cleared_power = max(p.degree for p in column)
    # homog_i(v) = v^cleared_power * column_i(1/v)
    homog = [Poly(tuple(p.coeff(cleared_power - m) for m in range(cleared_power + 1)))
             for p in column]
    origin = homog[0].as_monomial()
    if origin is None or origin[1] != 0:
        raise InternalError("o-coordinate of the cleared parametrization is not a "
                            "nonzero constant; e is not a single Jordan block")
    c0 = origin[0]
    charts = []
    for i in range(1, r):
        q = homog[i] * (1 / c0)
        if not q.is_zero():
            mono = q.as_monomial()
            if mono is None or mono[1] != degrees[i - 1]:
                raise InternalError("chart coordinate is not a monomial of the "
                                    "expected quasi-homogeneous degree")
        charts.append(q)
    return CurveComponent(j, tuple(charts), tuple(degrees), tuple(homog))


def check_fixed_point_return(model: ActionModel, j: int, v0) -> bool:
    """Whether phi(-1/v0) sends the component-j point at parameter v0 to zeta_j.

    This is the defining membership test for points of the curve at nonzero
    parameters: the inverse unipotent flow must land exactly on a torus-fixed
    coordinate point.
    """
    v0 = to_fraction(v0)
    if v0 == 0:
        raise InputError("parameter must be nonzero")
    comp = component_parametrization(model, j)
    point = tuple(p(v0) for p in comp.homog_coords)
    flow = exp_e(model, Fraction(-1) / v0)
    image = _mat_vec(flow, point)
    nonzero = [i for i, val in enumerate(image) if val != 0]
    return len(nonzero) == 1 and nonzero[0] == j - 1


# ---------------------------------------------------------------------------
# symbolic 2x2 checks for the family of conjugated tori


class _Laurent:
    """Laurent polynomials over Q in two commuting symbols (dict-backed).

    Just enough ring structure to verify 2x2 matrix identities exactly; the
    allowed inverses of the symbols make conjugation by phi(1/v) and diagonal
    tori representable without any division.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        for key, val in (terms or {}).items():
            f = to_fraction(val)
            if f != 0:
                data[(int(key[0]), int(key[1]))] = f
        self.terms = data

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def sym(cls, which: int, power: int = 1):
        key = (power, 0) if which == 0 else (0, power)
        return cls({key: 1})

    def _lift(self, other):
        if isinstance(other, _Laurent):
            return other
        if isinstance(other, (int, Fraction)):
            return _Laurent.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return _Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return _Laurent({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for (a1, b1), v1 in self.terms.items():
            for (a2, b2), v2 in o.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return _Laurent(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __repr__(self):
        return f"_Laurent({self.terms!r})"


def _mul2(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _limit_at_zero(num: Poly, den: Poly) -> Fraction:
    """Exact limit of num(v)/den(v) as v -> 0, cancelling the common power of v."""
    if den.is_zero():
        raise InternalError("limit of division by the zero polynomial")
    dv = den.valuation()
    if num.is_zero():
        return Fraction(0)
    nv = num.valuation()
    if nv < dv:
        raise InternalError("pole at v = 0; limit does not exist")
    num2 = Poly(num.coeffs[dv:])
    den2 = Poly(den.coeffs[dv:])
    return num2(0) / den2(0)


def sl2_family_checks() -> dict[str, str]:
    """Verify the exact 2x2 identities behind the family of conjugated tori.

    (i)   phi(1/v) diag(a, 1/a) phi(-1/v) equals the upper-triangular matrix
          with off-diagonal entry (1 - a^2)/(a v), symbolically in a and v;
    (ii)  phi(u) W phi(-u) = W - 2u N for W = diag(1,-1), N the nilpotent
          generator, hence s(v) = v * Ad(phi(1/v)) W = v W - 2 N spans the
          Lie algebra of the conjugated torus for v != 0;
    (iii) along a = +-(1 + eps v) the matrices of (i) converge, as v -> 0, to
          unipotent upper-triangular limits up to sign (sampled eps values),
          and s(0) = -2N lies in the Lie algebra of the unipotent group.

    Raises InternalError on any failure; these are exact identities.
    """
    report: dict[str, str] = {}
    L = _Laurent
    one, zero, two = L.const(1), L.const(0), L.const(2)
    a, a_inv = L.sym(0), L.sym(0, -1)
    v, v_inv = L.sym(1), L.sym(1, -1)

    def phi(entry):
        return ((one, entry), (zero, one))

    w_mat = ((one, zero), (zero, -one))
    n_mat = ((zero, one), (zero, zero))

    torus = ((a, zero), (zero, a_inv))
    lhs = _mul2(_mul2(phi(v_inv), torus), phi(-v_inv))
    rhs = ((a, (one - a * a) * a_inv * v_inv), (zero, a_inv))
    if lhs != rhs:
        raise InternalError("torus conjugation identity failed")
    report["torus_conjugation_identity"] = "ok"

    u = L.sym(0)
    lhs2 = _mul2(_mul2(phi(u), w_mat), phi(-u))
    rhs2 = ((one, -(two * u)), (zero, -one))
    if lhs2 != rhs2:
        raise InternalError("phi(u) W phi(-u) != W - 2u N")
    conj = _mul2(_mul2(phi(v_inv), w_mat), phi(-v_inv))
    s_v = tuple(tuple(v * entry for entry in row) for row in conj)
    expected = ((v, L.const(-2)), (zero, -v))
    if s_v != expected:
        raise InternalError("v * Ad(phi(1/v)) W != v W - 2 N")
    report["trace_section_identity"] = "ok"

    for eps in (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 5)):
        for sign in (1, -1):
            a_of_v = Poly((Fraction(sign), sign * eps))  # sign * (1 + eps v)
            num = Poly.const(1) - a_of_v * a_of_v
            den = a_of_v * Poly.variable()
            lim = _limit_at_zero(num, den)
            if lim != Fraction(-2) * eps / sign:
                raise InternalError("family limit has the wrong off-diagonal entry")
            # the limit matrix [[sign, lim], [0, sign]] is sign * unipotent
            if sign * lim != Fraction(-2) * eps:
                raise InternalError("family limit is not unipotent up to sign")
    report["family_limits_unipotent_up_to_sign"] = "ok"

    s_zero = tuple(tuple(entry(0) if isinstance(entry, Poly) else entry for entry in row)
                   for row in ((Poly.variable(), Poly.const(-2)),
                               (Poly(), -Poly.variable())))
    if s_zero != ((Fraction(0), Fraction(-2)), (Fraction(0), Fraction(0))):
        raise InternalError("s(0) != -2N")
    report["s_at_zero_in_unipotent_lie_algebra"] = "ok"
    return report
