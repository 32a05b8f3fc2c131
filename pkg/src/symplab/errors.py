class TheoremViolation(RuntimeError):
    """An identity that must hold for every valid input failed.

    Raised only by internal consistency checks; seeing one means a bug in
    this package, never bad user input.
    """
