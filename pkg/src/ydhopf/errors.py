"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`YDError`,
so callers (the CLI in particular) can map them to the invalid-input exit
code without swallowing genuine bugs.
"""

from __future__ import annotations


class YDError(Exception):
    """Base class for all package errors."""


# scalars / groups
class NonPrimeModulus(YDError):
    pass


class NoSuchRoot(YDError):
    pass


class EmptyOrderList(YDError):
    pass


class MismatchedGroup(YDError):
    pass


# Yetter-Drinfeld objects
class GradingActionClash(YDError):
    pass


class NonCommutingAction(YDError):
    pass


class WrongActionOrder(YDError):
    pass


class MismatchedContext(YDError):
    pass


# diagram engine
class UnboundGenerator(YDError):
    pass


class TypeMismatch(YDError):
    """Ill-typed expression; ``path`` locates the offending sub-expression."""

    def __init__(self, message: str, path: tuple[str, ...] = ()):
        self.path = tuple(path)
        where = "/".join(self.path) if self.path else "<root>"
        super().__init__(f"{message} (at {where})")


class ShapeMismatch(YDError):
    pass


class RankDeficient(YDError):
    def __init__(self, message: str, rank: int):
        self.rank = rank
        super().__init__(f"{message} (rank {rank})")


class InconsistentSystem(YDError):
    pass


class ExpressionSyntaxError(YDError):
    pass


# Hopf algebras and constructions
class AxiomFailure(YDError):
    def __init__(self, axiom: str, witness=None):
        self.axiom = axiom
        self.witness = witness
        detail = f": {witness}" if witness else ""
        super().__init__(f"axiom '{axiom}' fails{detail}")


class NotYDMorphism(YDError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"'{name}' is not a Yetter-Drinfeld morphism")


class NoAntipode(YDError):
    pass


class NonInvertibleAntipode(YDError):
    pass


class NonSymmetricBraiding(YDError):
    pass


class ModuleAxiomFailure(YDError):
    def __init__(self, which: str, witness=None):
        self.which = which
        self.witness = witness
        detail = f": {witness}" if witness else ""
        super().__init__(f"module law fails for '{which}'{detail}")


class BasisCapExceeded(YDError):
    pass


class FormatError(YDError):
    """Malformed or inconsistent input file."""
