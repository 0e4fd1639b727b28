from .invalid_at_error import InvalidAtError

class CombinatorialChangeError(InvalidAtError):
    kind = "CombinatorialChange"
