"""Exception hierarchy.

Every domain error carries a stable ``code`` string (``LABEL_NOT_TWICE``,
``NOT_REALIZABLE`` ...) that the command line prints and scripts can match on.
"""


class SubchordError(ValueError):
    code = "ERROR"

    def __init__(self, message=""):
        super().__init__(message or self.code)

    def __str__(self):
        msg = super().__str__()
        return msg if msg.startswith(self.code) else f"{self.code}: {msg}"


class LabelNotTwice(SubchordError):
    code = "LABEL_NOT_TWICE"


class EmptyToken(SubchordError):
    code = "EMPTY_TOKEN"


class BoundExceeded(SubchordError):
    code = "BOUND_EXCEEDED"


class NotRealizable(SubchordError):
    code = "NOT_REALIZABLE"


class NonIntegral(SubchordError):
    code = "NON_INTEGRAL"


class EmbeddingMismatch(SubchordError):
    code = "EMBEDDING_MISMATCH"


class SiteInvalid(SubchordError):
    code = "SITE_INVALID"


class PostconditionViolation(SubchordError):
    code = "POSTCONDITION_VIOLATION"
