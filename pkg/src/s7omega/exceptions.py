"""Exception hierarchy shared by every module of the package."""


class S7OmegaError(Exception):
    """Base class for all errors raised by s7omega."""


class ArgumentError(S7OmegaError, ValueError):
    """Malformed input: bad shape, index out of range, repeated index."""


class NotValidatedError(S7OmegaError, RuntimeError):
    """An operation needs an Omega matrix that passed the reduction condition."""


class BudgetExceededError(S7OmegaError, RuntimeError):
    """A combinatorial or symbolic computation would exceed its size budget."""


class CrossCheckError(S7OmegaError, AssertionError):
    """Two routes to the same quantity disagreed.

    Either a bug in this package or a counterexample to a published
    theorem; in both cases the result must not be reported.
    """
