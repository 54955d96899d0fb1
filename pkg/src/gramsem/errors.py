"""Exception types shared across the package."""


class GramsemError(Exception):
    """Base class for all errors raised by gramsem."""


class SpaceMismatchError(GramsemError):
    """Operands belong to different basis spaces (or tensor orders differ)."""


class LexiconError(GramsemError):
    """A word is missing from the grammar lexicon or a type string is malformed."""


class CompositionError(GramsemError):
    """Sentence composition failed (bad pattern, missing or mismatched semantics)."""


class UngrammaticalError(CompositionError):
    """The word sequence does not reduce to a sentence or noun phrase."""


class DegenerateDataError(GramsemError):
    """A statistic is undefined on the given data (e.g. constant score lists)."""
