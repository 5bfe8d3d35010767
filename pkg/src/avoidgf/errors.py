"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line can map failures
to process exit statuses without a lookup table.
"""


class AvoidError(Exception):
    exit_code = 4


class InputError(AvoidError, ValueError):
    """Bad user input: malformed words, antichain violations, letters."""

    exit_code = 1


class ParseError(InputError):
    def __init__(self, message, token=None, position=None):
        self.token = token
        self.position = position
        if token is not None:
            message = f"{message}: {token!r} at position {position}"
        super().__init__(message)


class ValidationError(InputError):
    pass


class ContainmentViolation(ValidationError):
    def __init__(self, i, j, inner, outer):
        self.i = i
        self.j = j
        super().__init__(
            f"forbidden word #{i} ({inner}) is a substring of word #{j} ({outer})"
        )


class DuplicateWord(ValidationError):
    def __init__(self, i, j, word):
        self.i = i
        self.j = j
        super().__init__(f"forbidden words #{i} and #{j} are both {word}")


class LetterOutOfAlphabet(ValidationError):
    pass


class BoundError(AvoidError):
    """A requested size exceeds a hard cap."""

    exit_code = 2


class BoundTooLarge(BoundError):
    pass


class SizeLimitExceeded(BoundError):
    pass


class IndexOutOfRange(AvoidError, IndexError):
    exit_code = 1


class InvariantError(AvoidError):
    """Something that is provably impossible for valid input happened."""

    exit_code = 4


class NonTriangular(InvariantError):
    pass


class NonUnitConstant(InvariantError, ArithmeticError):
    pass


class BoundMismatch(InvariantError):
    pass
