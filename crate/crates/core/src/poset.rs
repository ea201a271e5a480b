//! Finite partial orders given by their incidence relation.

use crate::error::{Error, Result};

/// A partial order on `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    order: usize,
    leq: Vec<bool>,
    minimum: Option<usize>,
}

impl Poset {
    /// Builds a poset from `leq(x, y)`; checks reflexivity, antisymmetry and
    /// transitivity.
    pub fn from_fn(order: usize, mut leq: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotPartialOrder("empty carrier".into()));
        }
        let mut rel = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                rel.push(leq(x, y));
            }
        }
        let at = |x: usize, y: usize| rel[x * order + y];
        for x in 0..order {
            if !at(x, x) {
                return Err(Error::NotPartialOrder(format!("not reflexive at {x}")));
            }
            for y in 0..order {
                if x != y && at(x, y) && at(y, x) {
                    return Err(Error::NotPartialOrder(format!(
                        "{x} and {y} are mutually below"
                    )));
                }
                if !at(x, y) {
                    continue;
                }
                for z in 0..order {
                    if at(y, z) && !at(x, z) {
                        return Err(Error::NotPartialOrder(format!(
                            "{x} <= {y} <= {z} but not {x} <= {z}"
                        )));
                    }
                }
            }
        }
        Ok(Poset::from_relation_unchecked(order, rel))
    }

    /// Builds a poset from a square boolean matrix, `rows[x][y] = (x ≤ y)`.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let order = rows.len();
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != order) {
            return Err(Error::RaggedTable {
                row,
                found: r.len(),
                expected: order,
            });
        }
        Poset::from_fn(order, |x, y| rows[x][y])
    }

    /// For relations that are partial orders by construction.
    pub(crate) fn from_relation_unchecked(order: usize, leq: Vec<bool>) -> Self {
        let minimum = (0..order).find(|&m| (0..order).all(|x| leq[m * order + x]));
        Poset {
            order,
            leq,
            minimum,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.order + y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn minimum(&self) -> Option<usize> {
        self.minimum
    }

    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.order).map(<[bool]>::to_vec).collect()
    }

    /// Renames `x` to `perm[x]`. `perm` must be a permutation of the carrier.
    pub(crate) fn permuted(&self, perm: &[usize]) -> Poset {
        let n = self.order;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[perm[x] * n + perm[y]] = self.leq(x, y);
            }
        }
        Poset::from_relation_unchecked(n, leq)
    }
}

/// Every partial order on `{0, .., n-1}` in which 0 is the minimum.
///
/// Brute force over all relations on the non-zero elements, so only sensible
/// for small `n` (n = 6 already visits 2^20 relations).
pub fn all_with_minimum(n: usize) -> Vec<Poset> {
    if n == 0 {
        return Vec::new();
    }
    let upper = n - 1;
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|x| (1..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    debug_assert_eq!(pairs.len(), upper * upper.saturating_sub(1));
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
            leq[x] = true;
        }
        for (bit, &(x, y)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                leq[x * n + y] = true;
            }
        }
        if let Ok(p) = Poset::from_fn(n, |x, y| leq[x * n + y]) {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_orders() {
        assert!(Poset::from_fn(2, |x, y| x == y || (x, y) == (0, 1) || (x, y) == (1, 0)).is_err());
        assert!(Poset::from_fn(2, |x, y| x < y).is_err());
        // 0 ≤ 1 ≤ 2 without 0 ≤ 2
        assert!(Poset::from_fn(3, |x, y| x == y || (x, y) == (0, 1) || (x, y) == (1, 2)).is_err());
        assert!(Poset::from_rows(&[vec![true, true], vec![false]]).is_err());
    }

    #[test]
    fn chain_has_minimum() {
        let chain = Poset::from_fn(3, |x, y| x <= y).unwrap();
        assert_eq!(chain.minimum(), Some(0));
        assert!(chain.lt(0, 2));
        assert!(!chain.lt(1, 1));
        let antichain = Poset::from_fn(2, |x, y| x == y).unwrap();
        assert_eq!(antichain.minimum(), None);
    }

    #[test]
    fn counts_posets_with_minimum() {
        // labeled posets on n - 1 points: 1, 1, 3, 19, 219
        let counts: Vec<usize> = (1..=5).map(|n| all_with_minimum(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219]);
        assert!(all_with_minimum(4).iter().all(|p| p.minimum() == Some(0)));
    }
}
