"""Typed errors raised by the workbench.

Every domain failure maps to one of these classes so callers (and the CLI,
which turns them into exit code 1) can tell misuse apart from genuine
mathematical impossibility.
"""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for all domain errors."""


# -- field construction ------------------------------------------------------

class NotPrime(WorkbenchError):
    """Characteristic is not a prime number."""


class OrderExceedsCap(WorkbenchError):
    """Requested field order is above the configured cap."""


class InverseOfZero(WorkbenchError):
    """Multiplicative inverse of the zero element requested."""


# -- matrices and codes ------------------------------------------------------

class ZeroMatrix(WorkbenchError):
    """A construction received an all-zero matrix."""


class DimensionMismatch(WorkbenchError):
    """Operands have incompatible shapes or live in different fields."""


class RangeError(WorkbenchError):
    """A numeric argument is outside its documented range."""


class BudgetExceeded(WorkbenchError):
    """An exhaustive enumeration would exceed its configured budget."""


# -- locality analysis -------------------------------------------------------

class NoLocality(WorkbenchError):
    """No recovery-set cover exists within the requested locality cap."""


class SearchBudgetExceeded(WorkbenchError):
    """A backtracking search hit its node cap before finishing."""


class NegativeSlack(WorkbenchError):
    """Singleton-type bound violated: the claimed locality is below the true one."""


class NotDivisible(WorkbenchError):
    """(r+1) does not divide n where the identity requires it."""


class InvariantViolation(WorkbenchError):
    """An internal invariant failed; indicates a bug, not bad input."""


# -- derived-code transforms -------------------------------------------------

class EmptyResult(WorkbenchError):
    """A derivation removed every coordinate."""


class PreconditionFailed(WorkbenchError):
    """Input code does not satisfy the transform's standing assumptions."""


class CeilingMismatch(WorkbenchError):
    """ceil(k/r) changes under the requested dimension drop."""


class DegenerateDistance(WorkbenchError):
    """The transformed code would have minimum distance below 1."""


class NoDisjointPartition(WorkbenchError):
    """The code has no suitable partition into disjoint recovery sets."""


class RegimeViolated(WorkbenchError):
    """The size regime r^2 + 2r < n - d failed mid-iteration."""


# -- bound evaluation --------------------------------------------------------

class ConditionUnmet(WorkbenchError):
    """A conditional bound's side condition does not hold."""


class WindowEmpty(WorkbenchError):
    """No distance fits in the required open window."""


class Unsupported(WorkbenchError):
    """Parameters outside the implemented range."""


class OutOfTable(WorkbenchError):
    """No classification row covers the given parameters."""


# -- search ------------------------------------------------------------------

class CapExceeded(WorkbenchError):
    """Subspace count exceeds the enumeration cap."""


class ParameterUnsupported(WorkbenchError):
    """The fixture construction does not support these parameters."""
