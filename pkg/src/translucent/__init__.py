"""Finite automata with translucent letters, including nondeterministic translucency."""
from .core import (Automaton, AutomatonError, BoundExceeded, ValidationError,
                   VariantProfile, as_word, build_automaton, classify, format_word,
                   validate)
from .engine import (Configuration, Step, Trace, accepts, eligible_positions,
                     first_trace, is_accepting_config, naive_accepts, successors)
from .langops import (BoundedLanguage, ParikhVector, bounded_equivalent,
                      check_letter_equivalence_lemma, drop_translucency,
                      enumerate_language, parikh_up_to, remove_overlap_translucency)
from .constructions import SearchSpaceSpec, guarded_union, search_sfawtl, union
from .fileformat import export_dot, parse, serialize

__version__ = "0.1.0"
