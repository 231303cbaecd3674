# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""solubility graphs of finite insoluble permutation groups, their
invariants, and checks of the statements made about them"""

from importlib.metadata import version as _version, PackageNotFoundError

try:
    __version__ = _version('solgraph')
except PackageNotFoundError: # pragma: no cover
    __version__ = '0+unknown'

from solgraph.errors import UserError
from solgraph.permgroup import Permutation, PermutationGroup
from solgraph.catalog import parse_spec, build

__all__ = [
    'UserError', 'Permutation', 'PermutationGroup', 'parse_spec', 'build',
]
