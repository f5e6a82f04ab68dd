"""Exception hierarchy.

Input problems (bad syntax, invalid codes, out-of-range indices) derive from
:class:`InputError`; failures while computing derive from
:class:`ComputationError`.  The CLI maps them to exit status 2 and 1.
"""


class MubarError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MubarError, ValueError):
    pass


class BraidSyntaxError(InputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class BraidIndexError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (token {position})")
        self.position = position


class GaussSyntaxError(InputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class GaussValidationError(InputError):
    pass


class WordSyntaxError(InputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class ComponentError(InputError, IndexError):
    pass


class ComputationError(MubarError):
    pass


class ConvergenceError(ComputationError):
    pass


class MoveError(MubarError, ValueError):
    """A move was requested at a site that does not satisfy its precondition."""


class SeriesMismatchError(MubarError, ValueError):
    """Operands have different truncation caps or variable counts."""
