"""Exception hierarchy for the engine.

Input-shaped problems (bad presentations, bad witnesses, parse errors) get
their own classes so the CLI can map them to its input-error exit code.
InternalCheckError is reserved for conditions that indicate a bug in the
engine itself rather than in the input.
"""


class QuiverExtError(Exception):
    """Base class for all errors raised by this package."""


class LinAlgError(QuiverExtError):
    """Dimension mismatch or other misuse of the linear algebra kernel."""


class FieldMismatchError(QuiverExtError):
    """Two objects built over different coefficient fields were combined."""


class PresentationError(QuiverExtError):
    """A quiver presentation violates its invariants (bad relation, etc.)."""


class AdmissibilityError(PresentationError):
    """Nonzero paths survive at the length cap: the ideal is not admissible
    within the requested bound."""


class ValidationError(QuiverExtError):
    """A structure-constant algebra or a representation failed its axioms."""


class WitnessError(QuiverExtError):
    """A supplied embedding/retraction/isomorphism witness does not verify."""


class InternalCheckError(QuiverExtError):
    """An internal cross-check failed; this signals an engine bug."""
