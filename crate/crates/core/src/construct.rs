//! BCK-algebras built from posets with a minimum, and from square codes.
//!
//! On a poset with minimum θ the star operation is
//!
//! ```text
//! x ∗ y = θ   if x ≤ y
//! x ∗ y = x   otherwise (y < x, or x and y incomparable)
//! ```
//!
//! A square unitriangular code is ordered by `⪯` and given this operation,
//! with the all-ones word as θ.

use serde::{Deserialize, Serialize};

use crate::algebra::{BckAlgebra, CayleyAlgebra, ZERO};
use crate::code::{preceq_unchecked, BlockCode, Codeword, FamilyCode};
use crate::codec::{canonical_code, BckFunction};
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Value of `x ∗ y` for incomparable `x`, `y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum IncomparableRule {
    /// `x ∗ y = x`. Always yields a BCK-algebra.
    #[default]
    Left,
    /// `x ∗ y = y`. Breaks axiom 1 as soon as two elements are incomparable;
    /// kept for comparison.
    Right,
}

/// The star table of `p` under `rule`, without checking the axioms.
///
/// If the minimum of `p` is not element 0 it is swapped with 0 first, so the
/// result always has θ at index 0.
pub fn star_table(p: &Poset, rule: IncomparableRule) -> Result<CayleyAlgebra> {
    let min = p.minimum().ok_or(Error::NoMinimum)?;
    let normalized;
    let p = if min == ZERO {
        p
    } else {
        let mut perm: Vec<usize> = (0..p.order()).collect();
        perm.swap(ZERO, min);
        normalized = p.permuted(&perm);
        &normalized
    };
    CayleyAlgebra::from_fn(p.order(), |x, y| {
        if p.leq(x, y) {
            ZERO
        } else if p.leq(y, x) {
            x
        } else {
            match rule {
                IncomparableRule::Left => x,
                IncomparableRule::Right => y,
            }
        }
    })
}

/// The BCK-algebra of a poset with minimum.
pub fn algebra_from_poset(p: &Poset) -> Result<BckAlgebra> {
    star_table(p, IncomparableRule::Left).map(BckAlgebra::new_unchecked)
}

/// An algebra reconstructed from a code, with elements in lex-descending
/// codeword order (element 0 is the all-ones word).
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub algebra: BckAlgebra,
    pub source: FamilyCode,
}

impl ConstructionResult {
    /// The identity on the carrier, which is the function that regenerates a
    /// code from the algebra.
    pub fn function(&self) -> BckFunction<'_> {
        BckFunction::identity(&self.algebra)
    }
}

/// The poset `(V, ⪯)` of a member of ℭ_n, rows in lex-descending order.
pub fn codeword_poset(code: &FamilyCode) -> Poset {
    let n = code.n();
    let mut leq = Vec::with_capacity(n * n);
    for k in 0..n {
        for j in 0..n {
            leq.push(preceq_unchecked(code.row(k), code.row(j)));
        }
    }
    Poset::from_relation_unchecked(n, leq)
}

/// Orders the codewords of a ℭ_n member by `⪯` and applies the star
/// operation. Fails when the code is not in ℭ_n.
pub fn construct_from_code(code: &BlockCode) -> Result<ConstructionResult> {
    construct_from_family(FamilyCode::new(code)?)
}

pub fn construct_from_family(source: FamilyCode) -> Result<ConstructionResult> {
    let poset = codeword_poset(&source);
    debug_assert_eq!(poset.minimum(), Some(ZERO));
    let names = (1..=source.n()).map(|k| format!("w{k}")).collect();
    let alg = star_table(&poset, IncomparableRule::Left)?.with_names(names)?;
    Ok(ConstructionResult {
        algebra: BckAlgebra::new_unchecked(alg),
        source,
    })
}

/// Element whose regenerated codeword differs from its source row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowMismatch {
    pub element: usize,
    pub expected: Codeword,
    pub produced: Codeword,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundTripReport {
    /// The input in lex-descending order.
    pub input_code: BlockCode,
    pub regenerated_code: BlockCode,
    pub exact: bool,
    pub mismatches: Vec<RowMismatch>,
    pub self_describing: bool,
}

/// True when bit `j` of `w_k` is set exactly when `w_k ⪯ w_j`, i.e. the
/// matrix is the `⪯`-incidence matrix of its own rows.
pub fn is_self_describing(code: &FamilyCode) -> bool {
    let n = code.n();
    (0..n).all(|k| (0..n).all(|j| code.row(k).bit(j) == preceq_unchecked(code.row(k), code.row(j))))
}

/// Reconstructs the algebra of `code`, regenerates its canonical code and
/// compares the two row by row.
pub fn verify_roundtrip(code: &BlockCode) -> Result<RoundTripReport> {
    let built = construct_from_code(code)?;
    let f = built.function();
    let mut mismatches = Vec::new();
    for k in 0..built.source.n() {
        let produced = f.cut_word(k)?;
        let expected = built.source.row(k);
        if &produced != expected {
            mismatches.push(RowMismatch {
                element: k,
                expected: expected.clone(),
                produced,
            });
        }
    }
    let regenerated_code = canonical_code(&built.algebra);
    let exact = &regenerated_code == built.source.code();
    if exact != mismatches.is_empty() {
        return Err(Error::Internal(format!(
            "round trip exact = {exact} but {} row mismatches",
            mismatches.len()
        )));
    }
    Ok(RoundTripReport {
        self_describing: is_self_describing(&built.source),
        input_code: built.source.into_code(),
        regenerated_code,
        exact,
        mismatches,
    })
}
