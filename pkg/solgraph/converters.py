# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""clize value converters for the command-line arguments"""

from clize import parser, errors as clize_errors

from solgraph import catalog, errors, verifier


@parser.value_converter(name='SPEC')
def group_spec(arg):
    """Parses a group specification such as ``A5 x C2`` into a
    `.GroupSpec`."""
    try:
        return catalog.parse_spec(arg)
    except errors.SpecError as exc:
        raise clize_errors.CliValueError(exc.message)


@parser.value_converter(name='CLAIM')
def claim_id(arg):
    """Accepts a known claim id."""
    try:
        return verifier.validate_plan([arg])[0]
    except errors.PlanError as exc:
        raise clize_errors.CliValueError(exc.message)
