"""Exception hierarchy.

Every domain error carries a stable ``code`` string; the CLI reports it
verbatim in its JSON error object.
"""

from __future__ import annotations


class LanglandsError(ValueError):
    """Base class for every domain error raised by this package."""

    code = "LanglandsError"

    def __init__(self, message: str, position: tuple[int, int] | None = None):
        super().__init__(message)
        self.message = message
        self.position = position

    def to_json(self) -> dict:
        out = {"code": self.code, "message": self.message}
        if self.position is not None:
            out["position"] = {"line": self.position[0], "column": self.position[1]}
        return out


# root datum
class PairingViolation(LanglandsError):
    """<alpha_i, alpha_i^vee> != 2."""

    code = "PairingViolation"


class CartanSignViolation(LanglandsError):
    """Off-diagonal Cartan entries of wrong sign or asymmetric zeros."""

    code = "CartanSignViolation"


class DimensionMismatch(LanglandsError):
    """Vector lengths or dimension sums disagree."""

    code = "DimensionMismatch"


class DependentRoots(LanglandsError):
    """Simple roots or coroots are linearly dependent."""

    code = "DependentRoots"


class InputFormatError(LanglandsError):
    """Malformed JSON input (parameter, triple, vector or index list)."""

    code = "InputFormatError"


class DatumFormatError(LanglandsError):
    """Malformed JSON datum document."""

    code = "DatumFormatError"


# weyl
class IndexOutOfRange(LanglandsError):
    """Simple-root index outside 0..l-1."""

    code = "IndexOutOfRange"


class GroupTooLarge(LanglandsError):
    """Closure exceeded the configured element cap."""

    code = "GroupTooLarge"


class ActionBasisUndefined(LanglandsError):
    """A diagram permutation does not determine the lattice action."""

    code = "ActionBasisUndefined"


class InvalidGaloisAction(LanglandsError):
    """Permutation or lattice matrix does not preserve the based datum."""

    code = "InvalidGaloisAction"


class I0NotStable(LanglandsError):
    """The base subset is not stable under the action."""

    code = "I0NotStable"


class RelativeWeylDiscrepancy(LanglandsError):
    """The two descriptions of the relative Weyl group have different orders."""

    code = "RelativeWeylDiscrepancy"


class NotInGroup(LanglandsError):
    """Matrix is not an element of the Weyl group."""

    code = "NotInGroup"


# chamber
class NuOutsideSpace(LanglandsError):
    """Vector does not lie in the span of the invariant lattice."""

    code = "NuOutsideSpace"


class NotDominant(LanglandsError):
    """Vector pairs negatively with a projected simple root."""

    code = "NotDominant"


class PartialOrbit(LanglandsError):
    """Zero pairings do not form a union of action orbits."""

    code = "PartialOrbit"


class NoDominantConjugate(LanglandsError):
    """No relative Weyl element moves the vector into the dominant chamber."""

    code = "NoDominantConjugate"


class GramNotInvariant(LanglandsError):
    """Gram matrix is not symmetric, definite and invariant."""

    code = "GramNotInvariant"


# lparam
class EmptyParameter(LanglandsError):
    """A parameter needs at least one segment."""

    code = "EmptyParameter"


class InvalidSegment(LanglandsError):
    """Segment or representation label with bad dimension."""

    code = "InvalidSegment"


class NotRelevant(LanglandsError):
    """Some segment dimension is not divisible by d."""

    code = "NotRelevant"


class BetasNotDescending(LanglandsError):
    """Block exponents are not strictly descending."""

    code = "BetasNotDescending"


class BlockNotTempered(LanglandsError):
    """A block of a standard triple has a nonzero exponent."""

    code = "BlockNotTempered"


class GroupMismatch(LanglandsError):
    """Parameters belong to different groups (n or d differ)."""

    code = "GroupMismatch"


class LParamSyntaxError(LanglandsError):
    """Parse failure, with 1-based position and the set of expected tokens."""

    code = "SyntaxError"

    def __init__(self, message, position, expected=()):
        super().__init__(message, position)
        self.expected = tuple(sorted(expected))

    def to_json(self) -> dict:
        out = super().to_json()
        out["expected"] = list(self.expected)
        return out


class LParamOverflowError(LanglandsError):
    """Integer literal beyond 64-bit magnitude."""

    code = "OverflowError"
