"""curvemilnor: exact motivic Milnor fibers of plane curve singularities.

The package resolves a plane curve germ by iterated toric modifications,
builds the extended simplified resolution graph, assembles the motivic Milnor
fiber as a formal Grothendieck-ring element, and realizes it as the monodromy
zeta function, characteristic polynomial, Milnor number and a partial
Hodge-Steenbrink spectrum, with independent brute-force oracles throughout.
"""

from .errors import (
    BadPrime,
    BudgetExceeded,
    CurveMilnorError,
    MaxDepthExceeded,
    NonIsolated,
    NonPolynomial,
    NonReduced,
    NotVanishing,
    ParseError,
    TowerDegreeExceeded,
    UnrealizableGenerator,
)
from .exact import BiPoly, Rational, Tower, TowerScalar, UPoly

# populated as the package grows; late imports keep partial builds usable
try:
    from .frontend import AnalysisReport, parse_curve, run_pipeline
    from .toric import resolve
except ImportError:  # pragma: no cover
    pass

__all__ = [
    "AnalysisReport",
    "BadPrime",
    "BiPoly",
    "BudgetExceeded",
    "CurveMilnorError",
    "MaxDepthExceeded",
    "NonIsolated",
    "NonPolynomial",
    "NonReduced",
    "NotVanishing",
    "ParseError",
    "Rational",
    "Tower",
    "TowerDegreeExceeded",
    "TowerScalar",
    "UPoly",
    "UnrealizableGenerator",
    "parse_curve",
    "resolve",
    "run_pipeline",
]

__version__ = "0.1.0"
