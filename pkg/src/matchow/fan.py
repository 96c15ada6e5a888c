"""Braid fan cones, weighted subfans, and the balancing condition.

Ambient space: R^E modulo the all-ones line, with E = {0..n}.  Points are
stored in quotient coordinates that pin the coordinate of element 0 to
zero, so a point is a tuple of length n over the elements 1..n and the
class of e_S maps to ([i in S] - [0 in S])_{i=1..n}.

Cones of the braid fan are stored combinatorially as flags of proper
nonempty subsets of E; the cone spanned by {e_S : S in flag} recovers the
geometry.  A weighted fan is a dict from same-dimension flags to nonzero
rational weights.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Sequence, Tuple

from .errors import LoopPresent, Unbalanced
from .exact import in_rational_span, integer_kernel
from .matroid import Matroid

Subset = FrozenSet[int]
FlagCone = Tuple[Subset, ...]
Vector = Tuple[Fraction, ...]


def flag_key(flag: FlagCone):
    """Canonical sort key so iteration orders are deterministic."""
    return tuple(tuple(sorted(s)) for s in flag)


def e_image(n_elements: int, subset: Iterable[int]) -> Tuple[int, ...]:
    """Quotient coordinates of the indicator vector e_S."""
    s = frozenset(subset)
    base = 1 if 0 in s else 0
    return tuple((1 if i in s else 0) - base for i in range(1, n_elements))


def full_coordinates(point: Sequence) -> Tuple[Fraction, ...]:
    """The representative of a quotient point whose 0-coordinate is zero."""
    return (Fraction(0),) + tuple(Fraction(x) for x in point)


def validate_flag(n_elements: int, flag: FlagCone) -> None:
    full = frozenset(range(n_elements))
    prev: Optional[Subset] = None
    for s in flag:
        if not s or s == full or not s <= full:
            raise ValueError(f"flag member {sorted(s)} is not a proper nonempty subset")
        if prev is not None and not prev < s:
            raise ValueError("flag subsets must be strictly nested")
        prev = s


def braid_cone_of(n_elements: int, point: Sequence) -> FlagCone:
    """Flag of the smallest braid cone containing the point.

    Sorting the full coordinates into strictly decreasing level groups, the
    flag is the chain of proper prefix unions of those groups.
    """
    coords = full_coordinates(point)
    if len(coords) != n_elements:
        raise ValueError("point has the wrong dimension")
    levels: Dict[Fraction, set] = {}
    for e, value in enumerate(coords):
        levels.setdefault(value, set()).add(e)
    flag = []
    prefix: set = set()
    for value in sorted(levels, reverse=True)[:-1]:
        prefix |= levels[value]
        flag.append(frozenset(prefix))
    return tuple(flag)


def cone_contains(flag_small: FlagCone, flag_big: FlagCone) -> bool:
    """Face relation: in a simplicial fan this is flag containment."""
    return set(flag_small) <= set(flag_big)


class WeightedFan:
    """A pure-dimensional weighted subfan of the braid fan."""

    __slots__ = ("n_elements", "dim", "weights")

    def __init__(
        self,
        n_elements: int,
        dim: int,
        weights: Dict[FlagCone, Fraction],
    ):
        clean: Dict[FlagCone, Fraction] = {}
        for flag, w in weights.items():
            flag = tuple(frozenset(s) for s in flag)
            if len(flag) != dim:
                raise ValueError(f"cone {flag} has dimension {len(flag)}, expected {dim}")
            validate_flag(n_elements, flag)
            w = Fraction(w)
            if w != 0:
                clean[flag] = w
        self.n_elements = n_elements
        self.dim = dim
        self.weights = clean

    def cones(self) -> list[FlagCone]:
        return sorted(self.weights, key=flag_key)

    def weight(self, flag: FlagCone) -> Fraction:
        return self.weights.get(tuple(frozenset(s) for s in flag), Fraction(0))

    def reweighted(self, flag: FlagCone, w) -> "WeightedFan":
        """Copy with one cone's weight replaced (used to build counterexamples)."""
        weights = dict(self.weights)
        weights[tuple(frozenset(s) for s in flag)] = Fraction(w)
        return WeightedFan(self.n_elements, self.dim, weights)

    def __eq__(self, other):
        if not isinstance(other, WeightedFan):
            return NotImplemented
        return (
            self.n_elements == other.n_elements
            and self.dim == other.dim
            and self.weights == other.weights
        )

    def __repr__(self):
        return (
            f"WeightedFan(n={self.n_elements}, dim={self.dim}, "
            f"cones={len(self.weights)})"
        )


def matroid_fan(m: Matroid) -> WeightedFan:
    """Unit weights on the complete flags of proper nonempty flats."""
    if not m.is_loopless():
        raise LoopPresent("the flag fan of a matroid with loops is not defined here")
    lat = m.lattice()
    r = m.rank() - 1

    def grow(flag: FlagCone, last: Subset) -> Iterator[FlagCone]:
        if len(flag) == r:
            yield flag
            return
        for g in lat.covers_above(last):
            if g != lat.top:
                yield from grow(flag + (g,), g)

    flags = grow((), lat.bottom)
    return WeightedFan(m.n_elements, r, {f: Fraction(1) for f in flags})


def _codim_one_faces(fan: WeightedFan) -> list[FlagCone]:
    faces = {
        flag[:i] + flag[i + 1 :]
        for flag in fan.weights
        for i in range(len(flag))
    }
    return sorted(faces, key=flag_key)


def balancing_certificate(fan: WeightedFan) -> Optional[FlagCone]:
    """First codimension-one cone where the weighted rays fail to balance.

    Around a face tau, the sum of w(sigma) * e_(extra ray of sigma) must lie
    in the linear span of tau; returns None when every face passes.
    """
    if fan.dim == 0:
        return None
    n = fan.n_elements
    for tau in _codim_one_faces(fan):
        tau_set = set(tau)
        total = [Fraction(0)] * (n - 1)
        for sigma, w in fan.weights.items():
            if tau_set <= set(sigma):
                (extra,) = set(sigma) - tau_set
                vec = e_image(n, extra)
                total = [t + w * v for t, v in zip(total, vec)]
        span = [e_image(n, s) for s in tau]
        if not in_rational_span(span, total):
            return tau
    return None


def is_balanced(fan: WeightedFan) -> Tuple[bool, Optional[FlagCone]]:
    cert = balancing_certificate(fan)
    return cert is None, cert


def require_balanced(fan: WeightedFan) -> None:
    cert = balancing_certificate(fan)
    if cert is not None:
        raise Unbalanced(cert)


# ---------------------------------------------------------------------------
# Skeleton fans: loci where the i+1 smallest (or largest) coordinates agree
# ---------------------------------------------------------------------------


def _prefix_flags(n_elements: int, sizes: Sequence[int]) -> list[FlagCone]:
    """All flags whose member sizes are exactly the given increasing run."""
    if not sizes:
        return [()]
    flags: list[FlagCone] = []

    def grow(flag: FlagCone, current: frozenset, depth: int) -> None:
        if depth == len(sizes):
            flags.append(flag)
            return
        need = sizes[depth] - len(current)
        rest = sorted(set(range(n_elements)) - current)
        for extra in itertools.combinations(rest, need):
            bigger = current | frozenset(extra)
            grow(flag + (frozenset(bigger),), bigger, depth + 1)

    grow((), frozenset(), 0)
    return flags


def alpha_fan(n_elements: int, codim: int) -> WeightedFan:
    """Unit weights on the braid facets of {smallest codim+1 coordinates equal}.

    Those facets are the flags with member sizes 1..n-codim (the minimum is
    then attained on the complementary part, which has codim+1 elements).
    """
    n = n_elements - 1
    if not (1 <= codim <= n):
        raise ValueError(f"codim {codim} outside 1..{n}")
    sizes = list(range(1, n - codim + 1))
    return WeightedFan(
        n_elements,
        n - codim,
        {f: Fraction(1) for f in _prefix_flags(n_elements, sizes)},
    )


def beta_fan(n_elements: int, codim: int) -> WeightedFan:
    """Unit weights on the braid facets of {largest codim+1 coordinates equal}.

    Mirror image of alpha_fan: flags with member sizes codim+1..n (the
    maximum is attained on the first flag member).
    """
    n = n_elements - 1
    if not (1 <= codim <= n):
        raise ValueError(f"codim {codim} outside 1..{n}")
    sizes = list(range(codim + 1, n + 1))
    return WeightedFan(
        n_elements,
        n - codim,
        {f: Fraction(1) for f in _prefix_flags(n_elements, sizes)},
    )


class SkeletonCone:
    """One cone of a skeleton locus: the coordinates over `members` all agree
    and are jointly minimal (or, negated, jointly maximal).

    Membership tests work on a displaced point x - offset; the linear span
    ignores the inequalities and keeps only the equalities.
    """

    __slots__ = ("n_elements", "members", "negated")

    def __init__(self, n_elements: int, members: Iterable[int], negated: bool = False):
        self.n_elements = n_elements
        self.members = frozenset(members)
        if not self.members or not self.members <= set(range(n_elements)):
            raise ValueError("members must be a nonempty subset of the ground set")
        self.negated = negated

    def equality_rows(self) -> list[Tuple[int, ...]]:
        """Quotient-coordinate rows forcing the member coordinates equal."""
        ordered = sorted(self.members)
        rows = []
        for s, t in zip(ordered, ordered[1:]):
            row = [0] * (self.n_elements - 1)
            if s != 0:
                row[s - 1] += 1
            row[t - 1] -= 1
            rows.append(tuple(row))
        return rows

    def span_lattice_basis(self) -> list[Tuple[int, ...]]:
        """Saturated basis of the lattice points in the cone's linear span."""
        return integer_kernel(self.equality_rows(), self.n_elements - 1)

    def classify(self, point: Sequence) -> str:
        """'interior', 'boundary', or 'outside' for a quotient point."""
        coords = full_coordinates(point)
        vals = [coords[e] for e in sorted(self.members)]
        if any(v != vals[0] for v in vals):
            return "outside"
        level = vals[0]
        strict = True
        for e in range(self.n_elements):
            if e in self.members:
                continue
            gap = coords[e] - level
            if self.negated:
                gap = -gap
            if gap < 0:
                return "outside"
            if gap == 0:
                strict = False
        return "interior" if strict else "boundary"
