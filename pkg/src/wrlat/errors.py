class InvariantViolation(RuntimeError):
    """A computed result contradicts an invariant the library promises.

    Raised when a check that must hold for every valid input fails, for
    example a lattice minimum dropping below its proven lower bound.  The
    command line maps this to exit code 3.
    """
