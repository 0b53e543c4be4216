"""Theta and Yao cone graphs over planar point sets, with executable
structure checks: crossing audits, empty-cone audits, i-paths and sinks,
barriers, cone routing, connectivity verification, and a fuzzing harness
with counterexample minimization."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
