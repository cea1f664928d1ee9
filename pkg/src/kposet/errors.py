"""Exception types shared across the package."""


class KPosetError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateId(KPosetError):
    """An element or vertex id occurs more than once."""


class UnknownElement(KPosetError):
    """A referenced id is not declared in the structure at hand."""


class LabelOutOfRange(KPosetError):
    """An element label falls outside [0, k)."""


class CycleDetected(KPosetError):
    """The given order pairs contain a directed cycle."""


class ParseError(KPosetError):
    """Input text is not a well-formed serialized structure."""


class BudgetExceeded(KPosetError):
    """An exhaustive enumeration would exceed its configured budget."""


class SizeBudgetExceeded(KPosetError):
    """A constructed poset would exceed its configured element budget."""


class NotBounded(KPosetError):
    """The operation needs a poset with a unique top and bottom."""


class WrongExtremeLabel(KPosetError):
    """A bounded poset's top or bottom carries an unexpected label."""


class NotTwoLattice(KPosetError):
    """The operation needs a nonempty lattice labeled over {0, 1}."""
