"""Exception classes.

Every engine error carries an ``exit_code`` so the command line front end can
map failures to process status without a lookup table of its own.
"""


class SigcalcError(Exception):
    exit_code = 1


class SchemaError(SigcalcError):
    """Malformed configuration document.

    ``path`` points at the offending key, e.g. ``action.circle[0]``.
    """

    exit_code = 2

    def __init__(self, path, reason):
        self.path = path
        self.reason = reason
        super().__init__(f"{path}: {reason}" if path else reason)


class InvalidType(SigcalcError):
    exit_code = 2


class NotARoot(SigcalcError):
    exit_code = 2


class NotASubsystem(SigcalcError):
    exit_code = 2


class NotASubgroup(SigcalcError):
    exit_code = 2


class NotAHomomorphism(SigcalcError):
    exit_code = 2


class NotSameSpan(SigcalcError):
    exit_code = 1


# scope: the input lies outside the situation the engine handles exactly
class ScopeError(SigcalcError):
    exit_code = 3


class NotSolvable(ScopeError):
    pass


class NotInMaxTorus(ScopeError):
    pass


class NonSplitHorizontal(ScopeError):
    pass


class ShortcutInvalid(ScopeError):
    """The flipped-torus formula for the twist differential disagrees with
    the exact compensation at some fixed point."""


class ZeroWeight(SigcalcError):
    """The chosen circle is not generic: some isotropy weight vanishes."""

    exit_code = 4


class DimensionCollapse(SigcalcError):
    """The orbit map loses rank, i.e. the two-sided action is not free."""

    exit_code = 5


class GroupTooLarge(SigcalcError):
    exit_code = 6


class IncompleteEnumeration(SigcalcError):
    exit_code = 7
