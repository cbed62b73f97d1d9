"""Growing-network generation under preferential attachment.

The package generates directed scale-free networks (Price's model and the
Krapivsky model) at large node counts by keeping node selection weights in
sampling indexes that support logarithmic-time draw, insert, and increase
operations. Degree-distribution fitting, a timing harness, and a command
line front end sit on top of the generators.
"""

from .rng import RandomSource
from .preference import (
    PreferenceFunction,
    FitnessModel,
    parse_preference,
    parse_fitness,
    ParameterError,
)
from .index import make_index, INDEX_KINDS, AugmentedHeap, Treap, NaiveArray, RepeatedEntryArray
from .graph import Graph
from .models import ModelConfig, GenerationResult, generate, price_generate, krapivsky_generate
from .analysis import (
    ccdf,
    degree_stats,
    fit_exponent,
    star_ratio,
    sweep_alpha,
    price_exponent,
    krapivsky_in_exponent,
    krapivsky_out_exponent,
)
from .bench import run_bench, BenchResult

__version__ = "0.1.0"

__all__ = [
    "RandomSource",
    "PreferenceFunction",
    "FitnessModel",
    "parse_preference",
    "parse_fitness",
    "ParameterError",
    "make_index",
    "INDEX_KINDS",
    "AugmentedHeap",
    "Treap",
    "NaiveArray",
    "RepeatedEntryArray",
    "Graph",
    "ModelConfig",
    "GenerationResult",
    "generate",
    "price_generate",
    "krapivsky_generate",
    "ccdf",
    "degree_stats",
    "fit_exponent",
    "star_ratio",
    "sweep_alpha",
    "price_exponent",
    "krapivsky_in_exponent",
    "krapivsky_out_exponent",
    "run_bench",
    "BenchResult",
    "__version__",
]
