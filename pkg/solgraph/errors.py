# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

from functools import partial

from clize.errors import SetErrorContext


class UserError(ValueError):
    """An error to be printed to the user."""

    exit_status = 1
    """Process exit status used by the command-line interface."""

    @property
    def message(self):
        return super(UserError, self).__str__()

    def __str__(self):
        return self.prefix_with_pname(self.message)

    def prefix_with_pname(self, message):
        return '{0}: {1}'.format(self.get_pname('Error'), message)

    def get_pname(self, default='solgraph'):
        try:
            return self.pname
        except AttributeError:
            return default


class SpecError(UserError):
    """A group specification could not be understood."""

    exit_status = 2


class SpecSyntaxError(SpecError):
    """Raised when a group specification does not follow the grammar."""

    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected

    @property
    def message(self):
        return "Syntax error at position {0} in {1!r}: expected {2}".format(
            self.position, self.text, self.expected)


class UnsupportedGroup(SpecError):
    """Raised when a spec names a group outside the supported families."""


class GeneratorFileError(SpecError):
    """Raised when a generator file cannot be parsed."""

    def __init__(self, message, line=None, path=None):
        super(GeneratorFileError, self).__init__(message)
        self.line = line
        self.path = path

    @property
    def message(self):
        where = self.path or '<generators>'
        if self.line is not None:
            where = '{0}:{1}'.format(where, self.line)
        return '{0}: {1}'.format(where, self.args[0])


class PlanError(UserError):
    """Raised when a verification plan names an unknown claim."""

    exit_status = 2

    def __init__(self, claim_id, best_guess=None):
        self.claim_id = claim_id
        self.best_guess = best_guess

    @property
    def message(self):
        if self.best_guess:
            return "Unknown claim {0!r}. Did you mean {1!r}?".format(
                self.claim_id, self.best_guess)
        return "Unknown claim {0!r}".format(self.claim_id)


class GroupError(UserError):
    """Raised when a group operation receives inconsistent input."""

    exit_status = 2


class DegreeMismatch(GroupError):
    """Raised when permutations of different degrees are combined."""

    def __init__(self, left, right):
        super(DegreeMismatch, self).__init__(
            "degree mismatch: {0} and {1}".format(left, right))
        self.left = left
        self.right = right


class NotAMember(GroupError):
    """Raised when an element does not belong to the group it is used
    with."""


class NotASubgroup(GroupError):
    """Raised when a subgroup argument is not contained in its parent."""


class NotNormal(GroupError):
    """Raised when a quotient is requested by a non-normal subgroup."""


class BudgetExceeded(UserError):
    """A computation would exceed one of the configured budgets."""

    exit_status = 3


class EnumerationBudgetExceeded(BudgetExceeded):
    def __init__(self, order, budget):
        super(EnumerationBudgetExceeded, self).__init__(
            "group of order {0} exceeds the enumeration budget of {1} "
            "elements".format(order, budget))
        self.order = order
        self.budget = budget


class PairBudgetExceeded(BudgetExceeded):
    def __init__(self, needed, budget):
        super(PairBudgetExceeded, self).__init__(
            "{0} pair-solubility tests exceed the budget of {1}".format(
                needed, budget))
        self.needed = needed
        self.budget = budget


class IsomorphismBudgetExceeded(BudgetExceeded):
    """Raised when canonical labeling explores more search nodes than
    allowed. ``invariants`` holds what the refinement established before
    giving up."""

    def __init__(self, budget, invariants):
        super(IsomorphismBudgetExceeded, self).__init__(
            "canonical labeling exceeded {0} search nodes".format(budget))
        self.budget = budget
        self.invariants = invariants


class TierError(UserError):
    """Raised when a request needs data that the group's tier does not
    provide."""

    exit_status = 3


class NotAVertex(TierError):
    """Raised when a radical element is used as a graph vertex."""


class FormulaError(UserError):
    """Raised when the edge-count formula does not produce a valid count.
    This always signals an inconsistency upstream."""


class CanonicalizationError(UserError):
    """Raised when a bijection derived from equal certificates fails
    verification."""


class CacheMismatch(UserError):
    """Raised by cache verification when a cached payload differs from a
    fresh computation."""


SetUserErrorContext = partial(SetErrorContext, UserError)
