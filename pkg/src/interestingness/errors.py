"""Exception types raised by the scoring library."""


class InterestingnessError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(InterestingnessError, ValueError):
    pass


class DuplicateIdError(InterestingnessError, ValueError):
    def __init__(self, doc_id):
        super().__init__(f"duplicate document id: {doc_id!r}")
        self.doc_id = doc_id


class EmptyDocumentError(InterestingnessError, ValueError):
    pass


class UnseenTermError(InterestingnessError, KeyError):
    def __init__(self, term):
        super().__init__(term)
        self.term = term

    def __str__(self):
        return f"term {self.term!r} does not occur in any document"


class EmptyVocabularyError(InterestingnessError, ValueError):
    pass


class InputFileError(InterestingnessError):
    """A corpus, stopword, field or recipe file could not be parsed."""

    def __init__(self, path, line, message):
        where = f"{path}:{line}" if line else str(path)
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line


class SearchError(InterestingnessError):
    """Wraps a provider failure with the candidate being verified."""

    def __init__(self, candidate, cause):
        super().__init__(f"search failed while verifying {candidate!r}: {cause}")
        self.candidate = candidate
        self.cause = cause
