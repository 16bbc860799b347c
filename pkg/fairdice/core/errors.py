class FairDiceError(Exception):
    """
    Base class for all errors raised by the library.
    """
    def __init__(self, msg=None, details=None):
        super().__init__(msg or details)
        self.msg = msg
        self.details = details if details is not None else msg


class InvalidInputError(FairDiceError):
    """
    Raised when an operation receives arguments outside its domain,
    e.g. too few sides, mismatched dice, or a malformed partition.
    """
    pass


class ParityError(InvalidInputError):
    """
    Raised when an odd side count is required, e.g. when factoring
    the uniform generating polynomial into per-die real quadratics.
    """
    pass


class UnsupportedInputError(FairDiceError):
    """
    Raised for inputs that are valid in principle but have no data behind them.
    """
    pass


class DiceFileError(InvalidInputError):
    """
    Raised when a dice file cannot be read or parsed.
    """
    pass
