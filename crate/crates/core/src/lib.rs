//! Exact computer algebra for immaculate tableaux, the dual immaculate basis of
//! quasi-symmetric functions, and the indecomposable 0-Hecke modules whose
//! characteristics are dual immaculate functions.
//!
//! The crate is organised bottom-up:
//!
//! * [`combinatorics`]: compositions, descent sets, refinement, partitions.
//! * [`tableaux`]: immaculate tableaux, standard immaculate tableaux, Y-words.
//! * [`linalg`]: exact rational matrices (dense) and a sparse exact solver.
//! * [`qsym`]: expansions in QSym / NSym bases and the transitions between them.
//! * [`hecke`]: the word module, its non-Y-word submodule, and the quotient
//!   module on standard immaculate tableaux.
//! * [`analysis`]: filtrations, characteristics, cyclic generation,
//!   commutants and indecomposability certificates.
//! * [`export`]: JSON and DOT renderings of modules and certificates.
//! * [`verify`]: whole-degree invariant sweeps.

pub mod analysis;
pub mod combinatorics;
pub mod error;
pub mod export;
pub mod hecke;
pub mod linalg;
pub mod qsym;
pub mod tableaux;
pub mod verify;

pub use analysis::{
    characteristic, commutant, commutant_dimension, composition_factors, cyclic_generation,
    filtration_order, indecomposability_certificate, separation_witnesses, CyclicGeneration,
    FiltrationOrder, IndecomposabilityCertificate,
};
pub use combinatorics::{
    compositions_of, from_descent_set, refines, sort_to_partition, to_descent_set, Composition,
    DescentSet, Partition,
};
pub use error::{Error, Result};
pub use hecke::{
    apply_generator, apply_sequence, nonyword_closure_check, quotient_module, verify_relations,
    word_module, GeneratorAction, GeneratorImage, HeckeModule, ModuleKind, RelationReport,
    SparseVector,
};
pub use linalg::RationalMatrix;
pub use qsym::{
    dual_immaculate_via_fundamentals, dual_immaculate_via_kostka, fundamental_to_monomial,
    h_in_qsym, immaculate_in_h, kostka_matrix, monomial_to_fundamental, pairing, quasi_shuffle,
    Algebra, Basis, BasisExpansion, KostkaMatrix,
};
pub use tableaux::{
    descent_composition, immaculate_tableaux, is_y_word, kostka, standard_immaculate_tableaux,
    super_standard, tableau_to_yword, y_words, yword_to_tableau, ImmaculateTableau,
    StandardImmaculateTableau, Word,
};

/// Exact rational coefficient type used throughout.
pub type Rational = num::BigRational;
