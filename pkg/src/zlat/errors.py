"""Exception hierarchy shared by every zlat module."""

from __future__ import annotations


class ZlatError(Exception):
    """Base class for all errors raised by zlat."""


# lattice validation ---------------------------------------------------------

class LatticeError(ZlatError):
    pass


class EmptyUniverse(LatticeError):
    pass


class NotAntisymmetric(LatticeError):
    def __init__(self, cycle: tuple[int, ...], labels: tuple[str, ...] | None = None):
        self.cycle = cycle
        names = [labels[i] for i in cycle] if labels else list(cycle)
        super().__init__(f"order relation has a cycle through {names}")


class NoUniqueBound(LatticeError):
    def __init__(self, kind: str, pair: tuple[int, int], candidates: tuple[int, ...],
                 labels: tuple[str, ...] | None = None):
        self.kind = kind
        self.pair = pair
        self.candidates = candidates
        show = (lambda i: labels[i]) if labels else (lambda i: i)
        super().__init__(
            f"pair ({show(pair[0])}, {show(pair[1])}) has no unique {kind}; "
            f"candidates: {[show(c) for c in candidates]}"
        )


class ForeignElement(LatticeError):
    pass


class ShapeMismatch(LatticeError):
    pass


class BadParam(ZlatError):
    pass


# multiplication ---------------------------------------------------------------

class QuantaleError(ZlatError):
    def __init__(self, message: str, witness: tuple = ()):
        self.witness = witness
        super().__init__(message)


class NotCommutative(QuantaleError):
    pass


class NotAssociative(QuantaleError):
    pass


class IdentityLawFails(QuantaleError):
    pass


class DistributivityFails(QuantaleError):
    pass


class ZeroExponent(ZlatError):
    pass


class TrivialLattice(ZlatError):
    pass


# internal consistency defects (never expected on validated input) -------------

class InternalDefect(ZlatError):
    pass


class RadicalFormulaMismatch(InternalDefect):
    pass


class DefinitionDisagreement(InternalDefect):
    pass


class QuotientLawViolation(InternalDefect):
    pass


class NotZElement(ZlatError):
    pass


# verifier ---------------------------------------------------------------------

class UnknownTheoremId(ZlatError):
    pass


class UnknownProperty(ZlatError):
    pass


class CeilingExceeded(ZlatError):
    pass


# .mlat documents and the CLI --------------------------------------------------

class MlatError(ZlatError):
    """A document problem with a source position (1-based line and column)."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        self.message = message
        where = f"{line}:{column}: " if line else ""
        super().__init__(f"{where}{message}")


class MlatSyntaxError(MlatError):
    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.expected = expected
        if expected:
            message = f"{message} (expected {' or '.join(expected)})"
        super().__init__(message, line, column)


class UndeclaredLabel(MlatError):
    pass


class DuplicateTriple(MlatError):
    pass


class MissingTriple(MlatError):
    pass


class ConflictingTriple(MlatError):
    pass


class UnknownCommand(ZlatError):
    pass
