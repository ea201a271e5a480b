//! Finite BCK-algebras and binary block codes.
//!
//! Codes are generated from algebras through cut functions ([`codec`]),
//! algebras are rebuilt from square unitriangular codes through the star
//! operation on `(V, ⪯)` ([`construct`]), and arbitrary codes are first
//! embedded into that shape ([`pipeline`]). [`census`] enumerates every
//! BCK-algebra of small order to check counting statements exhaustively.
//!
//! ```
//! use bckcode_core::{canonical_code, construct_from_code, BlockCode};
//!
//! let v = BlockCode::from_strs(&["0110", "0010", "1111", "0001"]).unwrap();
//! let built = construct_from_code(&v).unwrap();
//! assert_eq!(canonical_code(&built.algebra).to_strings(), ["1111", "0110", "0010", "0001"]);
//! ```

pub mod algebra;
pub mod census;
pub mod code;
pub mod codec;
pub mod construct;
pub mod error;
pub mod format;
pub mod pipeline;
pub mod poset;
pub mod report;

pub use algebra::{
    are_isomorphic, check_axioms, commutativity_witness, implicativity_witness, induced_order,
    is_commutative, is_implicative, pointwise_function_algebra, trivial_algebra, Axiom, AxiomCheck,
    AxiomReport, BckAlgebra, CayleyAlgebra, Witness, ZERO,
};
pub use census::{
    census, census_with_limit, enumerate_bck, enumerate_bck_with_limit, quotient_classes,
    CensusReport,
};
pub use code::{
    cn_count, cn_violation, code_compare_lex, code_compare_ll, enumerate_cn,
    enumerate_cn_with_limit, is_cn_member, lex_sort_desc, omega, preceq, BlockCode, CnViolation,
    CodeMatrix, Codeword, FamilyCode, LlOrdering,
};
pub use codec::{
    canonical_code, code_similar, cut_subset, equivalence_classes, generate_code, BckFunction,
    EquivalenceClasses,
};
pub use construct::{
    algebra_from_poset, construct_from_code, is_self_describing, star_table, verify_roundtrip,
    ConstructionResult, IncomparableRule, RoundTripReport,
};
pub use error::{Error, Result};
pub use pipeline::{
    embed_matrix, ensure_all_ones, family_algebra, lift_code, FamilyAlgebra, LiftResult,
};
pub use poset::Poset;
