"""
以范式表示的无限例子：自由群词、Munn 树、FCIS(X)、Cuntz 逆半群
"""
from .words import parse_word, format_word, free_reduce, invert_word, content, enumerate_words
from .munn import MunnTree, munn_from_word, munn_multiply, munn_invert, munn_to_fcis
from .fcis import (
    FcisElement, fcis_from_word, fcis_multiply, fcis_invert, idempotent_of,
    fcis_characters, fcis_evaluate_char, fcis_quotient_by_char, fcis_oracle_check,
    fcis_soundness_sweep, fcis_nu_char_related, fcis_idempotent_semilattice
)
from .cuntz import (
    CuntzElement, ZERO, UNIT, cuntz_multiply, cuntz_invert, cuntz_idempotent,
    cuntz_homs_to_two, enumerate_cuntz_elements, generator, generator_star
)

__all__ = [
    "parse_word", "format_word", "free_reduce", "invert_word", "content", "enumerate_words",
    "MunnTree", "munn_from_word", "munn_multiply", "munn_invert", "munn_to_fcis",
    "FcisElement", "fcis_from_word", "fcis_multiply", "fcis_invert", "idempotent_of",
    "fcis_characters", "fcis_evaluate_char", "fcis_quotient_by_char", "fcis_oracle_check",
    "fcis_soundness_sweep", "fcis_nu_char_related", "fcis_idempotent_semilattice",
    "CuntzElement", "ZERO", "UNIT", "cuntz_multiply", "cuntz_invert", "cuntz_idempotent",
    "cuntz_homs_to_two", "enumerate_cuntz_elements", "generator", "generator_star",
]
