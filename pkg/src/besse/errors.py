class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
