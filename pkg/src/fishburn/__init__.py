"""Pattern-avoiding modified ascent sequences and Fishburn permutations.

The package revolves around three families: Cayley words (ordered set
partitions), modified ascent sequences (Cayley words whose ascent tops
are exactly the leftmost copies), and restricted growth functions.  The
Burge transpose maps modified ascent sequences to Fishburn permutations;
explicit bijections connect restricted growth functions to the 212-,
2213- and 2231-avoiding subfamilies, which are counted by the Bell
numbers with Stirling-distributed maxima.  Everything is verifiable by
exhaustive search at desk scale via the ``verify`` module and the CLI.
"""
from .bijections import (
    active_sites,
    insert_new_max,
    modasc_2213_to_rgf,
    modasc_212_to_rgf,
    modasc_2231_to_rgf,
    modasc_extract_2213,
    modasc_extract_2231,
    modasc_insert_2213,
    modasc_insert_2231,
    remove_unique_max,
    rgf_insert,
    rgf_to_modasc_212,
    rgf_to_modasc_2213,
    rgf_to_modasc_2231,
)
from .burge import (
    LabeledWord,
    ascent_labels,
    burge_transpose,
    fishburn_basis,
    fishburn_preimage,
    from_rgf,
    gp_transpose,
    matrix_to_word,
    sort_word,
    to_fishburn,
    to_rgf,
    word_to_matrix,
)
from .config import Budgets, DEFAULT_BUDGETS
from .enumeration import (
    CountTable,
    GeneratorSpec,
    bell,
    fubini,
    gen_cayley,
    gen_family,
    gen_fishburn,
    gen_modasc,
    gen_modasc_avoiding,
    gen_rgf,
    gen_sym,
    gen_wi,
    stirling2,
    triangle_f,
    triangle_g,
    triangle_h,
    two_fishburn,
)
from .errors import (
    BudgetError,
    DomainError,
    FetchError,
    FishburnError,
    FixtureMissingError,
    InternalError,
    ValidationError,
)
from .patterns import (
    BivincularPattern,
    ClassicalPattern,
    REGISTRY,
    contains_bivincular,
    contains_classical,
    count_bivincular,
    filter_avoiders,
    occurrences_classical,
    parse_pattern,
)
from .verify import SUITE_NAMES, verify_suite
from .words import (
    Word,
    ascent_tops,
    ballot_decode,
    ballot_encode,
    format_word,
    is_cayley,
    is_modasc,
    is_permutation,
    is_rgf,
    nub_pairs,
    parse_word,
    rgf_prefix_stat,
    weak_descents,
)

__version__ = "0.1.0"
