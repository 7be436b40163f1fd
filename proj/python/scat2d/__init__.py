"""Exterior billiards in the plane.

Travelling-time and scattering-length spectra of scenes made of disjoint
strictly convex obstacles inside a reference ball, the Santalo phase-volume
identity, trapped-set experiments, and convex wavefront tools.
"""

from scat2d._core import *  # noqa: F401,F403
from scat2d._core import __doc__ as _core_doc  # noqa: F401
