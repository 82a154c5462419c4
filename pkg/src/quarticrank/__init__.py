"""2-rank of the class group of real cyclic quartic fields Q(sqrt(n*eps0*sqrt l))."""
from .basefield import BaseField, make_basefield
from .classify import classify_shapes, match_shape, matching_rank
from .corpus import CorpusEntry, load_corpus, verify_corpus
from .errors import DeferredCaseError, InputError, InvariantViolation, NotSquarefreeError
from .quarticfield import QuarticField, make_quarticfield
from .rank import RankResult, rank_closed_form, rank_generic

__version__ = "0.1.0"


def rank(n: int, l: int) -> int:
    """2-rank for (n, l) via the local-symbol engine."""
    return rank_generic(make_quarticfield(n, make_basefield(l))).rank


__all__ = [
    "BaseField", "CorpusEntry", "DeferredCaseError", "InputError", "InvariantViolation",
    "NotSquarefreeError", "QuarticField", "RankResult", "classify_shapes",
    "load_corpus", "make_basefield", "make_quarticfield", "match_shape",
    "matching_rank", "rank", "rank_closed_form", "rank_generic", "verify_corpus",
]
