"""Exception types shared across the engine.

Every error the engine can raise deliberately derives from ExplainRecError so
callers (CLI, HTTP service) can map the whole family to exit codes / status
codes in one place. Each class carries a short machine-readable ``code``.
"""


class ExplainRecError(Exception):
    code = "error"

    def __init__(self, message: str = "", **context):
        super().__init__(message or self.__doc__ or self.code)
        self.context = context


# --- embedding store ---------------------------------------------------------

class MalformedLine(ExplainRecError):
    """A line of the vector file does not parse."""
    code = "malformed_line"

    def __init__(self, line_no: int, message: str = ""):
        super().__init__(message or f"malformed line {line_no}", line_no=line_no)
        self.line_no = line_no


class DimensionMismatch(ExplainRecError):
    """Vector length disagrees with the declared dimension."""
    code = "dimension_mismatch"

    def __init__(self, message: str = "", line_no: int | None = None):
        super().__init__(message or "dimension mismatch", line_no=line_no)
        self.line_no = line_no


class DuplicateToken(ExplainRecError):
    """The same token appears twice in a vector file."""
    code = "duplicate_token"

    def __init__(self, token: str):
        super().__init__(f"duplicate token: {token!r}", token=token)
        self.token = token


class EmptyVocabulary(ExplainRecError):
    """The vector file declares zero tokens."""
    code = "empty_vocabulary"


class ZeroVector(ExplainRecError):
    """Cosine similarity is undefined for a zero-norm vector."""
    code = "zero_vector"


class EmptyInput(ExplainRecError):
    """An aggregate was requested over zero elements."""
    code = "empty_input"


class AllZeroWeights(ExplainRecError):
    """Weighted average with weights summing to zero."""
    code = "all_zero_weights"


# --- text pipeline ------------------------------------------------------------

class EmptyDocument(ExplainRecError):
    """No candidate phrases could be extracted from the document."""
    code = "empty_document"


# --- interest model -----------------------------------------------------------

class NoUsablePhrases(ExplainRecError):
    """Interest inference found no embeddable phrase in any publication."""
    code = "no_usable_phrases"


class UnknownLabel(ExplainRecError):
    """Edit targets an interest label that is not in the model."""
    code = "unknown_label"

    def __init__(self, label: str):
        super().__init__(f"unknown interest label: {label!r}", label=label)
        self.label = label


class DuplicateLabel(ExplainRecError):
    """Add targets a label already present in the model."""
    code = "duplicate_label"

    def __init__(self, label: str):
        super().__init__(f"interest label already exists: {label!r}", label=label)
        self.label = label


class WeightOutOfRange(ExplainRecError):
    """Interest weights must lie in (0, 1]."""
    code = "weight_out_of_range"


class LabelNotEmbeddable(ExplainRecError):
    """Every token of the label is outside the embedding vocabulary."""
    code = "label_not_embeddable"

    def __init__(self, label: str):
        super().__init__(f"label has no in-vocabulary token: {label!r}", label=label)
        self.label = label


# --- corpus -------------------------------------------------------------------

class ParseError(ExplainRecError):
    """A corpus or profile file does not parse."""
    code = "parse_error"

    def __init__(self, path: str, location: str, message: str = ""):
        super().__init__(message or f"{path}: parse error at {location}",
                         path=path, location=location)
        self.path = path
        self.location = location


class DuplicateId(ExplainRecError):
    """Two corpus records share a publication id."""
    code = "duplicate_id"

    def __init__(self, pub_id: str):
        super().__init__(f"duplicate publication id: {pub_id!r}", pub_id=pub_id)
        self.pub_id = pub_id


class NoCandidates(ExplainRecError):
    """Candidate fetch matched no publication."""
    code = "no_candidates"


class RemoteUnavailable(ExplainRecError):
    """The remote catalog could not be reached."""
    code = "remote_unavailable"

    def __init__(self, status: int | None, message: str = ""):
        super().__init__(message or f"remote catalog unavailable (status={status})",
                         status=status)
        self.status = status


class RateLimited(ExplainRecError):
    """The remote catalog rejected the request with HTTP 429."""
    code = "rate_limited"


# --- recommender --------------------------------------------------------------

class NoEmbeddableInterests(ExplainRecError):
    """No active interest has an in-vocabulary embedding."""
    code = "no_embeddable_interests"


class NoEmbeddableKeyphrases(ExplainRecError):
    """No keyphrase of the publication has an in-vocabulary embedding."""
    code = "no_embeddable_keyphrases"


# --- what-if ------------------------------------------------------------------

class ScenarioEmpty(ExplainRecError):
    """The scenario edits leave the model with no interest."""
    code = "scenario_empty"
