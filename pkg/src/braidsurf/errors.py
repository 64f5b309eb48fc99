class ResourceLimitError(RuntimeError):
    """An input exceeds a configured size bound."""
