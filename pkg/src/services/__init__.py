"""
服务包导出
"""
from .corpus_reader import (
    CorpusReader, LoadedCorpus, load_corpus, load_corpus_path, collect_corpus,
    parse_corpus_text, resolve_pairs
)
from .codec import semigroup_to_table, groupoid_summary, groupoid_to_dump, groupoid_from_dump
from .theorem_verifier import (
    TheoremVerifier, verify_main_theorem, verify_min_restriction, verify_clifford_theorem,
    verify_abelianization_theorem, verify_clifford_structure, verify_fixed_point_bound,
    verify_correspondence, verify_fcis, verify_cuntz
)
from .algebra_service import AlgebraService

__all__ = [
    "CorpusReader", "LoadedCorpus", "load_corpus", "load_corpus_path", "collect_corpus",
    "parse_corpus_text", "resolve_pairs",
    "semigroup_to_table", "groupoid_summary", "groupoid_to_dump", "groupoid_from_dump",
    "TheoremVerifier", "verify_main_theorem", "verify_min_restriction", "verify_clifford_theorem",
    "verify_abelianization_theorem", "verify_clifford_structure", "verify_fixed_point_bound",
    "verify_correspondence", "verify_fcis", "verify_cuntz",
    "AlgebraService"
]
