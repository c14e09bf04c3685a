"""Exception types shared across the package."""


class OmsemiError(Exception):
    pass


class NotAssociative(OmsemiError):
    """Multiplication table fails associativity."""


class NotAPartialOrder(OmsemiError):
    """Order relation is not a stable partial order."""


class InequalityWithoutOrder(OmsemiError):
    """Inequality-mode check requested on a semigroup without an order."""


class SizeTooLarge(OmsemiError):
    """Requested bound exceeds what the implementation supports."""


class EmptyAlphabet(OmsemiError):
    """A regular expression with no letters and no explicit alphabet."""


class AlphabetMismatch(OmsemiError):
    """Two automata over different alphabets were compared."""


class ElementNotWordImage(OmsemiError):
    """Element index does not name a class of the syntactic semigroup."""


class UnboundLetter(OmsemiError):
    """A term letter has no image under the generator map."""


class NoValidExponent(OmsemiError):
    """No unrolling exponent satisfies the congruence constraints."""


class UnsupportedPrimePower(OmsemiError):
    """Operation undefined on terms containing a prime-omega power."""


class DepthCap(OmsemiError):
    """Iteration depth beyond the supported cap."""


class Unreachable(OmsemiError):
    """Target element is not reachable from the identity."""


class NotASolution(OmsemiError):
    """Input terms do not evaluate to the required elements."""


class SubwordObstruction(OmsemiError):
    """The required scattered-subword embedding does not exist."""


class ParseError(OmsemiError):
    """Malformed regular expression or term string."""
