"""Exact symmetric-function tools for content series and Hurwitz-type counts.

Modules:

* :mod:`.partition`      partitions, contents, rim hooks, boundary moves
* :mod:`.chartable`      symmetric-group characters
* :mod:`.psalgebra`      power-sum polynomials, Schur expansions, Hall product
* :mod:`.operators`      ``U_k``/``D_k``, Bernstein and Sekiguchi-Debiard operators
* :mod:`.series`         the content series, its logarithm, genus slices, PDE residuals
* :mod:`.factorizations` brute-force symmetric-group oracles
* :mod:`.formulas`       closed-form genus-0 counts
* :mod:`.verify`         verification suites
* :mod:`.cli`            command-line front end
"""
from .partition import Partition, parse_partition
from .psalgebra import PPoly, SchurExpansion
from .series import GradedSeries, UnivariateSeries, build_phi, genus_slice, log_phi

__all__ = [
    "GradedSeries",
    "PPoly",
    "Partition",
    "SchurExpansion",
    "UnivariateSeries",
    "build_phi",
    "genus_slice",
    "log_phi",
    "parse_partition",
]
__version__ = "0.1.0"
