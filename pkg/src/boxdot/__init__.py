"""Bi-modal evidence logic toolkit.

Two knowledge modalities over evidence-based Kripke semantics: ``[.]``
(knowledge attainable from finitely many pieces of evidence, an S4 modality)
and ``[]`` (knowledge from the whole evidence set, an S5 modality).  The
package provides the formula language, a Hilbert-style proof kernel with a
checked corpus, exact model checking over finite evidence models, a symbolic
decision procedure for the two infinite Grand Hotel families where the
modalities genuinely differ, the labeled-sequence combinatorics used by the
canonical-model construction, and a soundness fuzzing harness tying the
kernel to both evaluators.
"""

from .formulas import (
    Atom,
    AttainKnow,
    CapacityError,
    Formula,
    Implies,
    Know,
    Not,
    ParseError,
    atom_names,
    modal_depth,
    parse,
    substitute,
)
from .proofs import (
    CheckReport,
    Derivation,
    check_derivation,
    is_tautology,
    match_schema,
    parse_proof_script,
    random_theorem,
)
from .corpus import corpus
from .models import (
    FiniteEvidenceModel,
    extension,
    indist,
    model_from_json,
    satisfies,
    validate_model,
)
from .hotel import (
    VARIANT_I,
    VARIANT_II,
    EvidenceWitness,
    HotelWorld,
    counterexample_report,
    hotel_eval,
    validate_world,
)
from .unravelling import STAR, SequenceUniverse, head, sim
from .fuzz import FuzzConfig, FuzzReport, random_model, run_soundness_fuzz

__version__ = "0.1.0"
