//! Exhaustive enumeration of small BCK-algebras.
//!
//! Tables are searched with θ fixed at index 0. The cells `θ∗x = θ`,
//! `x∗x = θ` and `x∗θ = x` are pinned up front; the remaining cells are filled
//! in row-major order with ascending values, and a branch is cut as soon as a
//! fully evaluable instance of axioms 1, 2 or 4 fails. The search is split on
//! the value of the first free cell and the parts are concatenated in order,
//! so the output does not depend on the number of worker threads.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{are_isomorphic, is_commutative, is_implicative, BckAlgebra, CayleyAlgebra};
use crate::code::{cn_count, lex_sort_desc, BlockCode, Codeword};
use crate::codec::canonical_code;
use crate::error::{Error, Result};

/// Default largest order for [`enumerate_bck`].
pub const DEFAULT_MAX_CENSUS_ORDER: usize = 5;
/// Largest order the census accepts even when asked to go further.
pub const HARD_MAX_CENSUS_ORDER: usize = 6;

const UNSET: u8 = u8::MAX;

/// Every BCK-algebra on `{0, .., n-1}` with θ = 0, `n ≤ 5`.
pub fn enumerate_bck(n: usize) -> Result<Vec<BckAlgebra>> {
    enumerate_bck_with_limit(n, DEFAULT_MAX_CENSUS_ORDER)
}

/// As [`enumerate_bck`] with a caller-chosen limit (capped at 6).
pub fn enumerate_bck_with_limit(n: usize, max_order: usize) -> Result<Vec<BckAlgebra>> {
    let max = max_order.min(HARD_MAX_CENSUS_ORDER);
    if n == 0 || n > max {
        return Err(Error::BoundExceeded {
            what: "algebra order n",
            value: n,
            max,
        });
    }
    let search = Search::new(n);
    let tables: Vec<Vec<u8>> = match search.free.first() {
        None => {
            let mut found = Vec::new();
            search.clone().run(0, &mut found);
            found
        }
        Some(&cell) => (0..n as u8)
            .into_par_iter()
            .map(|v| {
                let mut part = search.clone();
                part.table[cell] = v;
                let mut found = Vec::new();
                if part.consistent() {
                    part.run(1, &mut found);
                }
                found
            })
            .flatten_iter()
            .collect(),
    };
    tables
        .into_iter()
        .map(|t| {
            let alg = CayleyAlgebra::from_fn(n, |x, y| t[x * n + y] as usize)?;
            BckAlgebra::new(alg)
                .map_err(|e| Error::Internal(format!("search produced a non-BCK table: {e}")))
        })
        .collect()
}

#[derive(Clone)]
struct Search {
    n: usize,
    table: Vec<u8>,
    free: Vec<usize>,
}

impl Search {
    fn new(n: usize) -> Self {
        let mut table = vec![UNSET; n * n];
        let mut free = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let cell = x * n + y;
                if x == 0 || x == y {
                    table[cell] = 0;
                } else if y == 0 {
                    table[cell] = x as u8;
                } else {
                    free.push(cell);
                }
            }
        }
        Search { n, table, free }
    }

    fn run(&mut self, depth: usize, found: &mut Vec<Vec<u8>>) {
        let Some(&cell) = self.free.get(depth) else {
            found.push(self.table.clone());
            return;
        };
        for v in 0..self.n as u8 {
            self.table[cell] = v;
            if self.consistent() {
                self.run(depth + 1, found);
            }
        }
        self.table[cell] = UNSET;
    }

    #[inline]
    fn get(&self, x: u8, y: u8) -> u8 {
        if x == UNSET || y == UNSET {
            UNSET
        } else {
            self.table[x as usize * self.n + y as usize]
        }
    }

    /// No fully evaluable instance of axioms 1, 2 or 4 fails.
    fn consistent(&self) -> bool {
        let n = self.n as u8;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                if xy == UNSET {
                    continue;
                }
                if x != y && xy == 0 && self.get(y, x) == 0 {
                    return false;
                }
                let a2 = self.get(self.get(x, xy), y);
                if a2 != UNSET && a2 != 0 {
                    return false;
                }
                for z in 0..n {
                    let a1 = self.get(self.get(xy, self.get(x, z)), self.get(z, y));
                    if a1 != UNSET && a1 != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Canonical code made independent of element labels: the lex-largest
/// sorted code over all relabelings fixing θ.
pub fn label_invariant_code(alg: &BckAlgebra) -> BlockCode {
    let code = canonical_code(alg);
    let n = alg.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<BlockCode> = None;
    loop {
        let words = code
            .words()
            .iter()
            .map(|w| {
                let mut bits = vec![false; n];
                for (y, &b) in w.bits().iter().enumerate() {
                    bits[perm[y]] = b;
                }
                Codeword::new(bits).expect("n >= 1")
            })
            .collect();
        let candidate =
            lex_sort_desc(&BlockCode::new(words).expect("relabeling keeps words distinct"));
        if best.as_ref().is_none_or(|b| candidate.words() > b.words()) {
            best = Some(candidate);
        }
        if !next_permutation(&mut perm[1..]) {
            break;
        }
    }
    best.expect("at least one permutation")
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One isomorphism class found by the census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoClassEntry {
    pub representative: Vec<Vec<usize>>,
    /// Number of labelled tables in the class.
    pub size: usize,
    pub canonical_code: BlockCode,
    pub label_invariant_code: BlockCode,
    pub commutative: bool,
    pub implicative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub order: usize,
    /// Labelled BCK tables with θ = 0.
    pub total_tables: usize,
    pub iso_classes: usize,
    /// Distinct label-invariant codes; never more than `iso_classes`.
    pub similarity_classes: usize,
    /// Distinct canonical codes over all labelled tables.
    pub labeled_code_classes: usize,
    /// Some isomorphic pair produced different canonical codes.
    pub isomorphic_code_mismatch: bool,
    pub bound_threshold: u64,
    pub bound_check: bool,
    pub classes: Vec<IsoClassEntry>,
}

pub fn census(n: usize) -> Result<CensusReport> {
    census_with_limit(n, DEFAULT_MAX_CENSUS_ORDER)
}

/// Groups every table of order `n` by isomorphism and by code.
pub fn census_with_limit(n: usize, max_order: usize) -> Result<CensusReport> {
    let algebras = enumerate_bck_with_limit(n, max_order)?;
    let codes: Vec<BlockCode> = algebras.par_iter().map(canonical_code).collect();
    let invariants: Vec<BlockCode> = algebras.par_iter().map(label_invariant_code).collect();

    // class index per table; isomorphic tables share the invariant code, so
    // only classes in the same bucket need a search
    let mut reps: Vec<usize> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut buckets: HashMap<&BlockCode, Vec<usize>> = HashMap::new();
    for (t, alg) in algebras.iter().enumerate() {
        let bucket = buckets.entry(&invariants[t]).or_default();
        let hit = bucket
            .iter()
            .copied()
            .find(|&c| are_isomorphic(&algebras[reps[c]], alg).is_some());
        match hit {
            Some(c) => members[c].push(t),
            None => {
                bucket.push(reps.len());
                reps.push(t);
                members.push(vec![t]);
            }
        }
    }

    let isomorphic_code_mismatch = members
        .iter()
        .any(|m| m.iter().any(|&t| codes[t] != codes[m[0]]));
    let similarity_classes = invariants.iter().collect::<HashSet<_>>().len();
    let labeled_code_classes = codes.iter().collect::<HashSet<_>>().len();
    let classes = reps
        .iter()
        .zip(&members)
        .map(|(&r, m)| IsoClassEntry {
            representative: algebras[r].to_rows(),
            size: m.len(),
            canonical_code: codes[r].clone(),
            label_invariant_code: invariants[r].clone(),
            commutative: is_commutative(&algebras[r]),
            implicative: is_implicative(&algebras[r]),
        })
        .collect();
    let bound_threshold = cn_count(n);
    let iso_classes = reps.len();
    if similarity_classes > iso_classes {
        return Err(Error::Internal(
            "more similarity classes than isomorphism classes".into(),
        ));
    }
    Ok(CensusReport {
        order: n,
        total_tables: algebras.len(),
        iso_classes,
        similarity_classes,
        labeled_code_classes,
        isomorphic_code_mismatch,
        bound_threshold,
        bound_check: iso_classes as u64 >= bound_threshold,
        classes,
    })
}

/// Algebras sharing one canonical code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientClass {
    pub code: BlockCode,
    /// Indices into the input list, ascending.
    pub members: Vec<usize>,
}

/// Partitions `algebras` by canonical code, lex-largest code first.
pub fn quotient_classes(algebras: &[BckAlgebra]) -> Result<Vec<QuotientClass>> {
    if let Some(first) = algebras.first() {
        if let Some(other) = algebras.iter().find(|a| a.order() != first.order()) {
            return Err(Error::OrderMismatch {
                left: first.order(),
                right: other.order(),
            });
        }
    }
    let mut classes: Vec<QuotientClass> = Vec::new();
    let mut index: HashMap<BlockCode, usize> = HashMap::new();
    for (i, alg) in algebras.iter().enumerate() {
        let code = canonical_code(alg);
        match index.get(&code) {
            Some(&c) => classes[c].members.push(i),
            None => {
                index.insert(code.clone(), classes.len());
                classes.push(QuotientClass {
                    code,
                    members: vec![i],
                });
            }
        }
    }
    classes.sort_by(|a, b| b.code.words().cmp(a.code.words()));
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_orders() {
        assert_eq!(enumerate_bck(1).unwrap().len(), 1);
        let two = enumerate_bck(2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].to_rows(), vec![vec![0, 0], vec![1, 0]]);
        assert!(enumerate_bck(0).is_err());
        assert!(enumerate_bck(6).is_err());
        assert!(enumerate_bck_with_limit(7, 10).is_err());
    }

    #[test]
    fn permutations_are_exhaustive() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(p, vec![3, 2, 1, 0]);
    }

    #[test]
    fn invariant_code_ignores_labels() {
        for alg in enumerate_bck(4).unwrap() {
            let swapped = BckAlgebra::new(alg.relabel(&[0, 2, 3, 1]).unwrap()).unwrap();
            assert_eq!(label_invariant_code(&alg), label_invariant_code(&swapped));
        }
    }

    #[test]
    fn quotient_rejects_mixed_orders() {
        let algs = vec![
            enumerate_bck(2).unwrap().remove(0),
            enumerate_bck(1).unwrap().remove(0),
        ];
        assert_eq!(
            quotient_classes(&algs),
            Err(Error::OrderMismatch { left: 2, right: 1 })
        );
        assert!(quotient_classes(&[]).unwrap().is_empty());
    }
}
