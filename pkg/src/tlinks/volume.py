"""Hyperbolic volume upper bounds from trip numbers and braid indices.

Every bound has the form ``multiplier * V_TET`` with an exact integer
multiplier 12(m^2 + 3m), so tests can compare multipliers exactly and
only the decimal rendering carries rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lorenz import LorenzVector, trip_number_of_vector
from .tlink import GenTLinkParams

# volume of the regular ideal hyperbolic tetrahedron
V_TET = 1.0149416064096536

AUTO = "auto"


@dataclass(frozen=True)
class CrossingBreakdown:
    """Crossing counts of the auxiliary diagram used by the trip-number bound."""

    parent_self: Fraction
    untwist: Fraction
    side_loops: Fraction

    @property
    def total(self) -> Fraction:
        return self.parent_self + self.untwist + self.side_loops

    def to_dict(self) -> dict:
        return {
            "parent_self": _num(self.parent_self),
            "untwist": _num(self.untwist),
            "side_loops": _num(self.side_loops),
            "total": _num(self.total),
        }


def _num(q: Fraction):
    return q.numerator if q.denominator == 1 else str(q)


@dataclass(frozen=True)
class VolumeBound:
    trip_or_index: int
    multiplier: int
    breakdown: CrossingBreakdown | None = None

    @property
    def bound(self) -> float:
        return self.multiplier * V_TET

    def to_dict(self) -> dict:
        out = {
            "trip_or_index": self.trip_or_index,
            "multiplier": self.multiplier,
            "bound": round(self.bound, 4),
        }
        if self.breakdown is not None:
            out["breakdown"] = self.breakdown.to_dict()
        return out


def bound_multiplier(m: int) -> int:
    """12 (m^2 + 3m)."""
    if m < 0:
        raise ValueError("trip number must be nonnegative")
    return 12 * (m * m + 3 * m)


def parent_crossings(n_bar: int) -> CrossingBreakdown:
    if n_bar < 0:
        raise ValueError("trip number must be nonnegative")
    n = Fraction(n_bar)
    return CrossingBreakdown(
        parent_self=Fraction(3, 2) * n * (n - 1),
        untwist=2 * n,
        side_loops=4 * n,
    )


def bound_from_trip(n_bar: int) -> VolumeBound:
    """Vol <= 12 v_tet (n^2 + 3n) for a link of trip number n_bar."""
    return VolumeBound(n_bar, bound_multiplier(n_bar), parent_crossings(n_bar))


@dataclass(frozen=True)
class GenTLinkBound:
    n_used: int
    beta: int
    vector: LorenzVector

    @property
    def multiplier(self) -> int:
        return bound_multiplier(self.beta)

    @property
    def bound(self) -> float:
        return self.multiplier * V_TET

    def to_dict(self) -> dict:
        return {
            "n_used": self.n_used,
            "beta": self.beta,
            "multiplier": self.multiplier,
            "bound": round(self.bound, 4),
            "vector": [list(p) for p in self.vector.pairs],
        }


def associated_vector(g: GenTLinkParams, n: int) -> LorenzVector:
    r, s = g.last
    residual = s - n * r
    if residual < 0:
        raise ValueError(f"need s_(k+1) >= n r_(k+1), got {s} < {n * r}")
    return LorenzVector(g.pairs + (((r, residual),) if residual else ()))


def _admissible_window(g: GenTLinkParams, window: int) -> list[int]:
    # all n with residual s - n r in [0, window * r)
    r, s = g.last
    hi = s // r
    return [n for n in range(hi, hi - window - 1, -1) if 0 <= s - n * r < window * r]


def bound_gen_tlink(g: GenTLinkParams, n: int | str = AUTO, *, window: int = 2) -> GenTLinkBound:
    """Bound via the braid index of the associated Lorenz link T(pairs, (r, s - n r)).

    ``n="auto"`` tries every n whose residual exponent lies in [0, window * r)
    and keeps the smallest bound (ties go to the larger n).
    """
    if n == AUTO:
        best = None
        for cand in _admissible_window(g, window):
            res = bound_gen_tlink(g, cand)
            if best is None or res.beta < best.beta:
                best = res
        assert best is not None
        return best
    v = associated_vector(g, int(n))
    return GenTLinkBound(int(n), trip_number_of_vector(v), v)


def bound_manifold(g: GenTLinkParams, n: int | str = AUTO, *, window: int = 2) -> GenTLinkBound:
    """Same number as ``bound_gen_tlink``; it also bounds every closed 3-manifold
    obtained by Dehn filling the link complement, since filling does not raise volume."""
    return bound_gen_tlink(g, n, window=window)
