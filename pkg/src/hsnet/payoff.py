"""Utility specifications and the hider-payoff matrix of a fixed graph.

The hider's payoff against an inspected node k is -beta when caught (hiding
at k or any of its neighbors) and otherwise the component value f applied to
the size of the hider's component once k is deleted.  The game is zero-sum;
only the hider matrix is stored, the seeker's payoffs are its negation.

Component values f are strictly increasing with f(0) = 0.  Built-in families
evaluate to exact rationals except powers with non-integer exponents, which
fall back to floats (wrapped exactly, flagged via ``is_exact``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import Graph, GraphError
from .rationals import format_rational, parse_rational

FAMILIES = ("linear", "power", "ratio_power", "table")


class UtilityError(ValueError):
    """Invalid utility family, parameters, or non-monotone table."""


@dataclass(frozen=True)
class UtilitySpec:
    """Component-value function plus capture penalty.

    family/params identify f; beta >= 0 is the penalty paid by the hider on
    capture.  ``value(x)`` evaluates f at a nonnegative integer component
    size.  Instances are immutable and hashable, safe to share.
    """

    family: str
    params: tuple
    beta: Fraction
    is_exact: bool = True
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UtilityError(f"unknown utility family {self.family!r}")
        if self.beta < 0:
            raise UtilityError("beta must be nonnegative")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def linear(slope=1, beta=0) -> "UtilitySpec":
        slope = Fraction(slope)
        if slope <= 0:
            raise UtilityError("linear slope must be positive")
        return UtilitySpec("linear", (slope,), Fraction(beta))

    @staticmethod
    def power(gamma=2, beta=0) -> "UtilitySpec":
        gamma = Fraction(gamma)
        if gamma <= 0:
            raise UtilityError("power exponent must be positive")
        exact = gamma.denominator == 1
        return UtilitySpec("power", (gamma,), Fraction(beta), is_exact=exact)

    @staticmethod
    def ratio_power(gamma=2, beta=0) -> "UtilitySpec":
        gamma = Fraction(gamma)
        if gamma <= 1:
            raise UtilityError("ratio_power exponent must exceed 1")
        exact = gamma.denominator == 1
        return UtilitySpec("ratio_power", (gamma,), Fraction(beta), is_exact=exact)

    @staticmethod
    def table(values, beta=0) -> "UtilitySpec":
        vals = tuple(Fraction(v) for v in values)
        if not vals or vals[0] != 0:
            raise UtilityError("table must start with f(0) = 0")
        for a, b in zip(vals, vals[1:]):
            if b <= a:
                raise UtilityError("table must be strictly increasing")
        return UtilitySpec("table", vals, Fraction(beta))

    # -- evaluation --------------------------------------------------------

    def value(self, x: int) -> Fraction:
        """f(x) for a nonnegative integer component size."""
        if x < 0:
            raise UtilityError(f"component size {x} is negative")
        cached = self._cache.get(x)
        if cached is not None:
            return cached
        out = self._evaluate(x)
        self._cache[x] = out
        return out

    def _evaluate(self, x: int) -> Fraction:
        if self.family == "linear":
            return self.params[0] * x
        if self.family == "power":
            gamma = self.params[0]
            if gamma.denominator == 1:
                return Fraction(x) ** int(gamma)
            return Fraction(float(x) ** float(gamma)) if x else Fraction(0)
        if self.family == "ratio_power":
            gamma = self.params[0]
            if x == 0:
                return Fraction(0)
            if gamma.denominator == 1:
                g = int(gamma)
                return Fraction(x**g, (x + 1) ** (g - 1))
            return Fraction(float(x) ** float(gamma) / float(x + 1) ** (float(gamma) - 1.0))
        if self.family == "table":
            if x >= len(self.params):
                raise UtilityError(
                    f"table utility has no entry for component size {x}"
                )
            return self.params[x]
        raise UtilityError(f"unknown family {self.family!r}")

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        if self.family == "table":
            params = {"values": [format_rational(v) for v in self.params]}
        elif self.family == "linear":
            params = {"slope": format_rational(self.params[0])}
        else:
            params = {"gamma": format_rational(self.params[0])}
        return {
            "family": self.family,
            "params": params,
            "beta": format_rational(self.beta),
        }

    @staticmethod
    def from_json_dict(data: dict) -> "UtilitySpec":
        try:
            family = data["family"]
            params = data.get("params", {})
            beta = parse_rational(data["beta"])
        except (TypeError, KeyError) as exc:
            raise UtilityError(f"bad utility spec: {exc}") from exc
        return builtin_utilities(family, params, beta)


def builtin_utilities(name: str, params: dict | None = None, beta=0) -> UtilitySpec:
    """Construct one of the built-in utility families by name.

    linear:      f(x) = slope * x          (slope > 0, default 1)
    power:       f(x) = x ** gamma         (gamma > 0)
    ratio_power: f(x) = x**g / (x+1)**(g-1)  (gamma > 1)
    table:       explicit values f(0), f(1), ...
    """
    params = dict(params or {})
    if name == "linear":
        return UtilitySpec.linear(parse_rational(params.get("slope", 1)), beta)
    if name == "power":
        return UtilitySpec.power(parse_rational(params.get("gamma", 2)), beta)
    if name == "ratio_power":
        return UtilitySpec.ratio_power(parse_rational(params.get("gamma", 2)), beta)
    if name == "table":
        try:
            values = params["values"]
        except KeyError as exc:
            raise UtilityError("table utility needs 'values'") from exc
        return UtilitySpec.table([parse_rational(v) for v in values], beta)
    raise UtilityError(f"unknown utility family {name!r}")


# -- payoff structure -------------------------------------------------------


def residual_component_sizes(g: Graph, k: int) -> tuple:
    """Component size containing each surviving node after deleting k.

    Index by original node id; entry for k itself is None.  Works directly on
    the original labels so the payoff matrix never needs relabeling.
    """
    n = g.node_count
    sizes: list = [None] * n
    seen = [False] * n
    seen[k] = True
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        members = [start]
        while stack:
            v = stack.pop()
            m = g.neighbor_mask(v) & ~(1 << k)
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    stack.append(w)
        size = len(members)
        for v in members:
            sizes[v] = size
    return tuple(sizes)


def capture_set(g: Graph, k: int) -> int:
    """Bitmask of hider positions caught when the seeker inspects k."""
    return g.neighbor_mask(k) | (1 << k)


def hider_payoff(g: Graph, u: UtilitySpec, h: int, k: int) -> Fraction:
    """Payoff to the hider at h when the seeker inspects k."""
    n = g.node_count
    if not (0 <= h < n) or not (0 <= k < n):
        raise GraphError(f"node ids ({h},{k}) out of range for n={n}")
    if capture_set(g, k) >> h & 1:
        return -u.beta
    return u.value(residual_component_sizes(g, k)[h])


@dataclass(frozen=True)
class PayoffMatrix:
    """Hider payoffs; rows are hider positions, columns inspected nodes."""

    entries: tuple

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, h: int) -> tuple:
        return self.entries[h]


def payoff_matrix(g: Graph, u: UtilitySpec) -> PayoffMatrix:
    """Full hider-payoff matrix for a graph with at least one node."""
    n = g.node_count
    if n < 1:
        raise GraphError("payoff matrix needs at least one node")
    cols = []
    for k in range(n):
        caught = capture_set(g, k)
        sizes = residual_component_sizes(g, k)
        cols.append(
            [
                -u.beta if caught >> h & 1 else u.value(sizes[h])
                for h in range(n)
            ]
        )
    entries = tuple(tuple(cols[k][h] for k in range(n)) for h in range(n))
    return PayoffMatrix(entries)


def capture_probability(g: Graph, hider, seeker, within=None) -> Fraction:
    """Probability the hider is caught under a pair of mixed strategies.

    ``hider`` and ``seeker`` index nodes of g.  When ``within`` is given,
    both strategies are conditioned on that node set (useful for reading the
    capture rate inside a single component of a larger design).
    """
    n = g.node_count
    hp = [Fraction(p) for p in hider]
    sp = [Fraction(p) for p in seeker]
    if len(hp) != n or len(sp) != n:
        raise GraphError("strategy length must equal node count")
    if within is not None:
        inside = set(within)
        hmass = sum(hp[i] for i in inside)
        smass = sum(sp[i] for i in inside)
        if hmass == 0 or smass == 0:
            raise ValueError("cannot condition on a zero-mass node set")
        hp = [hp[i] / hmass if i in inside else Fraction(0) for i in range(n)]
        sp = [sp[i] / smass if i in inside else Fraction(0) for i in range(n)]
    total = Fraction(0)
    for k in range(n):
        if sp[k] == 0:
            continue
        caught = capture_set(g, k)
        mass = sum(hp[h] for h in range(n) if caught >> h & 1)
        total += sp[k] * mass
    return total
