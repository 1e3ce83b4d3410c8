"""Exception hierarchy shared by every module of the package."""


class ComplexError(ValueError):
    """Base class for malformed or out-of-contract complexes."""


class NonPure(ComplexError):
    pass


class OverusedFace(ComplexError):
    """A codimension-one face lies in three or more facets."""


class NonMaximalFacet(ComplexError):
    pass


class DuplicateFacet(ComplexError):
    pass


class NotASubcomplex(ComplexError):
    pass


class UnknownVertex(ComplexError, KeyError):
    pass


class NotASpanningEdge(ComplexError):
    pass


class NotAChord(ComplexError):
    pass


class NotADisk(ComplexError):
    pass


class PreconditionViolated(ComplexError):
    """A lemma hypothesis does not hold; ``hypothesis`` names which one."""

    def __init__(self, hypothesis: str, message: str = ""):
        self.hypothesis = hypothesis
        super().__init__(f"{hypothesis}: {message}" if message else hypothesis)


class ParseError(ComplexError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class EmptyInput(ParseError):
    pass


class SearchError(RuntimeError):
    """Base class for oracle searches that stop without an answer."""


class Timeout(SearchError):
    pass


class BudgetExceeded(SearchError):
    pass


class NotAPermutation(ValueError):
    pass


class MalformedTree(ValueError):
    pass


class GenerationStuck(RuntimeError):
    pass


class InstanceUnavailable(LookupError):
    pass
