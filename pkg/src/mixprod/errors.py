"""Exception types shared across the package."""


class MixprodError(Exception):
    """Base class for domain errors raised by this package."""


class GroundTooLarge(MixprodError):
    """Ground set exceeds the 64-variable bitset width."""


class InvalidTerm(MixprodError):
    """A mixed-product term has a malformed or negative degree."""


class MixedGroundSets(MixprodError):
    """Operands live on different ground sets."""


class NotProper(MixprodError):
    """Operation requires a proper ideal (neither zero nor the unit)."""


class NotAFace(MixprodError):
    """The given vertex set is not a face of the complex."""


class VoidComplex(MixprodError):
    """The void complex (no faces at all) has no chain complex."""


class GroundTooLargeForOracle(MixprodError):
    """A subset-enumeration operation exceeds its vertex budget."""


class OutOfRange(MixprodError):
    """A degree parameter violates a closed formula's bounds."""


class UnsupportedShape(MixprodError):
    """The mixed-product description matches no supported closed-form shape."""


class NotCM(MixprodError):
    """The quotient is not Cohen-Macaulay, so its type is undefined."""


class ExprError(MixprodError):
    """Expression rejected; `offset` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class ExprSyntaxError(ExprError):
    """Malformed ideal expression."""


class DegreeOutOfRange(ExprError):
    """A degree in the expression exceeds its block size."""


class RepeatedBlock(ExprError):
    """A term uses the same variable block twice."""
