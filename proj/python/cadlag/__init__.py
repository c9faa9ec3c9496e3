"""Exact analysis of cadlag step paths: path functionals, Stieltjes
integration and convergence oracles for the S, J1 and mJ1 topologies."""

try:
    from ._cadlag import *  # noqa: F401,F403  (installed layout)
except ImportError:  # in-build layout: extension sits next to the package
    from _cadlag import *  # noqa: F401,F403

__version__ = "0.1.0"
