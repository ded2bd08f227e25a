"""paradoxlab: a laboratory for geometric limit paradoxes.

Builds the iterative constructions behind several classic fallacies
(staircase length models, the Koch snowflake, Gabriel's horn, dissection
puzzles, Aristotle's wheel), evaluates their closed forms in an exact
symbolic channel, and cross-checks everything against independent float
measurement oracles.
"""

from paradoxlab._kernels import BACKEND as kernel_backend

__version__ = "0.1.0"

__all__ = ["kernel_backend", "__version__"]
