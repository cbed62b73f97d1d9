"""Preference functions and node fitness models.

A preference function maps a node's degree x and its fitness to an
unnormalized selection weight ("mass"). Working with masses instead of
probabilities is what lets the sampling indexes update in logarithmic time:
one edge changes one node's mass, while every probability in the network
changes.

Both shipped families are monotone nondecreasing in the degree, which the
indexes rely on (increase-only updates):

    linear: c * x + fitness          (c >= 0)
    power:  x ** alpha + fitness     (alpha > 0, with 0 ** alpha = 0)
"""

from dataclasses import dataclass


class ParameterError(ValueError):
    """Invalid user-supplied parameter or configuration."""


@dataclass(frozen=True)
class PreferenceFunction:
    kind: str
    coefficient: float = 1.0  # slope for 'linear'
    exponent: float = 1.0     # alpha for 'power'

    def __post_init__(self):
        if self.kind not in ("linear", "power"):
            raise ParameterError(f"unknown preference kind {self.kind!r}")
        if self.kind == "linear" and self.coefficient < 0:
            raise ParameterError("linear preference needs coefficient >= 0")
        if self.kind == "power" and self.exponent <= 0:
            raise ParameterError("power preference needs exponent > 0")

    @classmethod
    def linear(cls, c=1.0):
        return cls("linear", coefficient=float(c))

    @classmethod
    def power(cls, alpha):
        return cls("power", exponent=float(alpha))

    def mass(self, x, fitness):
        """Selection weight of a node with degree x and the given fitness."""
        if x < 0 or fitness < 0:
            raise ParameterError("degree and fitness must be non-negative")
        if self.kind == "linear":
            return self.coefficient * x + fitness
        return x ** self.exponent + fitness

    def describe(self):
        if self.kind == "linear":
            return f"linear:c={self.coefficient:g}"
        return f"power:alpha={self.exponent:g}"


@dataclass(frozen=True)
class FitnessModel:
    """Distribution of per-node fitness, identified by one location parameter.

    constant          always returns location
    pareto            shape=location, scale=location-1, so the mean is location
    truncated_normal  Normal(location, (location/4)^2) with negatives set to 0;
                      at four standard deviations the clamp hits fewer than
                      1e-4 of draws
    """

    kind: str
    location: float

    def __post_init__(self):
        if self.kind not in ("constant", "pareto", "truncated_normal"):
            raise ParameterError(f"unknown fitness kind {self.kind!r}")
        if self.location <= 0:
            raise ParameterError("fitness location must be > 0")
        if self.kind == "pareto" and self.location <= 1:
            raise ParameterError("pareto fitness needs location > 1 (scale = location - 1)")

    def draw(self, rng):
        if self.kind == "constant":
            return self.location
        if self.kind == "pareto":
            return rng.pareto(self.location, self.location - 1.0)
        return rng.truncated_normal(self.location, self.location / 4.0)

    def describe(self):
        short = {"constant": "const", "pareto": "pareto", "truncated_normal": "normal"}[self.kind]
        return f"{short}:{self.location:g}"


def parse_preference(text):
    """Parse a CLI preference, e.g. 'linear:c=1' or 'power:alpha=1.2'."""
    kind, _, rest = text.partition(":")
    params = {}
    if rest:
        for item in rest.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise ParameterError(f"bad preference parameter {item!r} in {text!r}")
            try:
                params[key.strip()] = float(value)
            except ValueError:
                raise ParameterError(f"bad preference parameter {item!r} in {text!r}") from None
    if kind == "linear":
        unknown = set(params) - {"c"}
        if unknown:
            raise ParameterError(f"linear preference does not take {sorted(unknown)}")
        return PreferenceFunction.linear(params.get("c", 1.0))
    if kind == "power":
        unknown = set(params) - {"alpha"}
        if unknown:
            raise ParameterError(f"power preference does not take {sorted(unknown)}")
        if "alpha" not in params:
            raise ParameterError("power preference needs alpha=..., e.g. power:alpha=1.2")
        return PreferenceFunction.power(params["alpha"])
    raise ParameterError(f"unknown preference kind {kind!r}")


_FITNESS_KINDS = {"const": "constant", "pareto": "pareto", "normal": "truncated_normal"}


def parse_fitness(text):
    """Parse a CLI fitness model, e.g. 'const:3.5', 'pareto:3.5', 'normal:1.8'."""
    kind, sep, value = text.partition(":")
    if kind not in _FITNESS_KINDS:
        raise ParameterError(f"unknown fitness kind {kind!r} (use const, pareto, or normal)")
    if not sep:
        raise ParameterError(f"fitness needs a location value, e.g. {kind}:3.5")
    try:
        location = float(value)
    except ValueError:
        raise ParameterError(f"bad fitness location {value!r}") from None
    return FitnessModel(_FITNESS_KINDS[kind], location)
