"""The coordinate ring of the fixed-point curve, realized as a graded
subalgebra of the tuple ring.

Restriction to the r components identifies the ring with the subalgebra of
(+) Q[v] generated by the all-ones degree-1 tuple (the image of v, from the
Q[v]-module structure given by the projection to the parameter line) together
with one degree-d_i tuple per chart coordinate, whose j-th entry is the
monomial coefficient of that coordinate on component j.

A torus-invariant subvariety enters only through its fixed-point subset S:
all the quantities computed here depend on the subvariety only through the
sub-curve over S.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .action import ActionModel, CurveComponent, big_cell_degrees, component_parametrization
from .errors import InputError, InternalError
from .exactalg import GradedSubalgebra, HomTuple


@dataclass
class CurveRing:
    model: ActionModel
    components: tuple[CurveComponent, ...]
    algebra: GradedSubalgebra

    @property
    def r(self) -> int:
        return self.model.n + 1


def default_degree_bound(cr: CurveRing) -> int:
    """Truncation degree 2 * r * max(d_i), reported alongside every answer."""
    return cr.algebra.default_degree_bound


def build_curve_ring(model: ActionModel) -> CurveRing:
    """Assemble the curve ring of a validated model from its parametrizations."""
    r = model.n + 1
    comps = tuple(component_parametrization(model, j) for j in range(1, r + 1))
    degrees = big_cell_degrees(model)
    gens = [HomTuple.ones(r, 1)]
    for i, d in enumerate(degrees):
        coeffs = []
        for comp in comps:
            q = comp.chart_coords[i]
            coeffs.append(Fraction(0) if q.is_zero() else q.coeff(d))
        gens.append(HomTuple(d, tuple(coeffs)))
    cr = CurveRing(model, comps, GradedSubalgebra(r, gens))
    bound = default_degree_bound(cr)
    if cr.algebra.hilbert_function(bound)[-1] != r:
        raise InternalError("curve ring did not reach full rank within the default "
                            "degree bound")
    return cr


def betti_numbers(cr: CurveRing, max_degree: int | None = None) -> list[int]:
    """Betti numbers via the quotient by (v): entry d is dim H^{2d}.

    The quotient dimensions are successive differences of the Hilbert
    function; trailing zeros are stripped once the algebra has stabilized, and
    the entries always sum to the number of fixed points.
    """
    bound = default_degree_bound(cr) if max_degree is None else int(max_degree)
    hil = cr.algebra.hilbert_function(bound)
    if hil[-1] != cr.r:
        raise InputError(f"truncation degree {bound} too small: Hilbert function has "
                         "not stabilized at the fixed-point count")
    dims = cr.algebra.quotient_by_v_dims(bound)
    while dims and dims[-1] == 0:
        dims.pop()
    if sum(dims) != cr.r:
        raise InternalError("Betti numbers do not sum to the fixed-point count")
    return dims


def _positions(cr: CurveRing, subset: Iterable[int]) -> list[int]:
    labels = sorted(set(int(s) for s in subset))
    if not labels:
        raise InputError("fixed-point subset must be nonempty")
    if labels[0] < 1 or labels[-1] > cr.r:
        raise InputError(f"fixed-point labels must lie in 1..{cr.r}")
    return labels


def restrict(cr: CurveRing, subset: Iterable[int]) -> GradedSubalgebra:
    """Coordinate ring of the sub-curve over the given fixed-point labels.

    Projecting the generators of the ambient ring generates the whole
    restricted ring, because the sub-curve is closed in the ambient chart.
    """
    labels = _positions(cr, subset)
    pos = [lab - 1 for lab in labels]
    gens = [g.project(pos) for g in cr.algebra.generators]
    return GradedSubalgebra(len(labels), gens)


def ideal_hilbert(cr: CurveRing, subset: Iterable[int],
                  max_degree: int | None = None) -> list[int]:
    """Dimensions of the ideal of the sub-curve over the subset, per degree.

    The dimensions are non-decreasing and stabilize at r - |subset|, the rank
    of the ideal over Q[v].
    """
    labels = _positions(cr, subset)
    bound = default_degree_bound(cr) if max_degree is None else int(max_degree)
    return [len(cr.algebra.kernel_basis(labels, d)) for d in range(bound + 1)]
