"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ClusterError(Exception):
    """Base class for domain errors raised by clusterlift."""


class ParseError(ClusterError):
    """An expression or input document could not be parsed."""


class ZeroPolynomial(ClusterError):
    """An operation that needs a nonzero polynomial received zero."""


class DivisionByZero(ClusterError, ZeroDivisionError):
    """A division or substitution produced a zero denominator."""


class MalformedSeed(ClusterError):
    """A structural invariant of a seed is broken."""


class NotSkewSymmetrizable(ClusterError):
    """The principal part of an exchange matrix admits no symmetrizer."""


class NotMutable(ClusterError):
    """Mutation was requested at a frozen or unknown vertex."""

    def __init__(self, message: str, vertex: str | None = None, step: int | None = None):
        super().__init__(message)
        self.vertex = vertex
        self.step = step


class NoChart(ClusterError):
    """A root cluster cannot be inverted to express elements in seed variables."""


class KeyMismatch(ClusterError):
    """A degree configuration does not cover exactly the vertices of its seed."""


class InvalidConfiguration(ClusterError):
    """A degree configuration violates the grading condition."""


class VertexCollision(ClusterError):
    """Lifting vertices or variable names clash with existing ones."""


class MalformedNu(ClusterError):
    """The lifting matrix has the wrong shape or labels."""


class NotFrozen(ClusterError):
    """A cluster valuation was requested at an unfrozen vertex."""


class TieExplosion(ClusterError):
    """Canonical seed labelling met a tie group too large to enumerate."""


class NotSmoothCone(ClusterError):
    """The base cone of a fan is not generated by part of a lattice basis."""


class ProportionalRays(ClusterError):
    """Two rays of a fan span the same half-line."""


class SemifrozenPresent(ClusterError):
    """The diagonal compactification requires a seed without semi-frozen vertices."""


class NotMaximalRank(ClusterError):
    """The exchange matrix does not have full column rank."""


class UnknownFixture(ClusterError):
    """No fixture is registered under the requested name."""
