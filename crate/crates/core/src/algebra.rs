//! Finite algebras of type (2,0) given by Cayley tables.
//!
//! A [`CayleyAlgebra`] is only a candidate: any square table with entries in
//! range is accepted. [`check_axioms`] decides the BCI/BCK axioms exhaustively
//! and [`BckAlgebra`] is the wrapper for tables known to satisfy them.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

/// The distinguished constant θ. Always index 0.
pub const ZERO: usize = 0;

/// Largest `k` accepted by [`pointwise_function_algebra`]; the order is `2^k`.
pub const MAX_POINTWISE_BITS: usize = 10;

/// A finite algebra `(X, ∗, θ)` on the carrier `{0, .., n-1}` with `θ = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyAlgebra {
    order: usize,
    table: Vec<usize>,
    names: Option<Vec<String>>,
}

impl CayleyAlgebra {
    /// Builds an algebra from its rows, `rows[x][y] = x ∗ y`.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyAlgebra);
        }
        let mut table = Vec::with_capacity(order * order);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != order {
                return Err(Error::RaggedTable {
                    row,
                    found: entries.len(),
                    expected: order,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(Error::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
            }
            table.extend(entries);
        }
        Ok(CayleyAlgebra {
            order,
            table,
            names: None,
        })
    }

    /// Builds an algebra by evaluating `op` on every pair.
    pub fn from_fn(order: usize, mut op: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyAlgebra);
        }
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let value = op(x, y);
                if value >= order {
                    return Err(Error::EntryOutOfRange {
                        row: x,
                        col: y,
                        value,
                        order,
                    });
                }
                table.push(value);
            }
        }
        Ok(CayleyAlgebra {
            order,
            table,
            names: None,
        })
    }

    /// Attaches display labels. Labels are metadata only.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::NameCount {
                names: names.len(),
                order: self.order,
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `x ∗ y`. Panics if either index is out of range.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.table.chunks(self.order)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(<[usize]>::to_vec).collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of `x`, falling back to the index.
    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    /// The isomorphic copy in which element `x` is renamed `perm[x]`.
    ///
    /// `perm` must be a permutation with `perm[0] = 0`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.order)?;
        let mut table = vec![0; self.order * self.order];
        for x in 0..self.order {
            for y in 0..self.order {
                table[perm[x] * self.order + perm[y]] = perm[self.op(x, y)];
            }
        }
        let names = self.names.as_ref().map(|names| {
            let mut renamed = names.clone();
            for (x, name) in names.iter().enumerate() {
                renamed[perm[x]] = name.clone();
            }
            renamed
        });
        Ok(CayleyAlgebra {
            order: self.order,
            table,
            names,
        })
    }
}

fn check_permutation(perm: &[usize], order: usize) -> Result<()> {
    let mut seen = vec![false; order];
    let ok = perm.len() == order
        && perm.first() == Some(&ZERO)
        && perm
            .iter()
            .all(|&p| p < order && !std::mem::replace(&mut seen[p], true));
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidPermutation {
            perm: perm.to_vec(),
            order,
        })
    }
}

impl fmt::Debug for CayleyAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CayleyAlgebra")
            .field("order", &self.order)
            .field("rows", &self.to_rows())
            .finish()
    }
}

/// The five conditions of a BCK-algebra, numbered as usual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    /// `((x∗y)∗(x∗z))∗(z∗y) = θ`
    A1,
    /// `(x∗(x∗y))∗y = θ`
    A2,
    /// `x∗x = θ`
    A3,
    /// `x∗y = θ` and `y∗x = θ` imply `x = y`
    A4,
    /// `θ∗x = θ`
    A5,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn identity(self) -> &'static str {
        match self {
            Axiom::A1 => "((x*y)*(x*z))*(z*y) = 0",
            Axiom::A2 => "(x*(x*y))*y = 0",
            Axiom::A3 => "x*x = 0",
            Axiom::A4 => "x*y = 0 and y*x = 0 imply x = y",
            Axiom::A5 => "0*x = 0",
        }
    }

    /// Evaluates the axiom at one tuple. Returns the offending value on failure.
    ///
    /// For the identities the offending value is the left-hand side; for A4 it
    /// is `y`, the element that should have equalled `x`.
    pub fn violation(self, alg: &CayleyAlgebra, x: usize, y: usize, z: usize) -> Option<usize> {
        let op = |a, b| alg.op(a, b);
        let (ok, value) = match self {
            Axiom::A1 => {
                let v = op(op(op(x, y), op(x, z)), op(z, y));
                (v == ZERO, v)
            }
            Axiom::A2 => {
                let v = op(op(x, op(x, y)), y);
                (v == ZERO, v)
            }
            Axiom::A3 => {
                let v = op(x, x);
                (v == ZERO, v)
            }
            Axiom::A4 => (!(op(x, y) == ZERO && op(y, x) == ZERO) || x == y, y),
            Axiom::A5 => {
                let v = op(ZERO, x);
                (v == ZERO, v)
            }
        };
        (!ok).then_some(value)
    }

    fn arity(self) -> usize {
        match self {
            Axiom::A1 => 3,
            Axiom::A2 | Axiom::A4 => 2,
            Axiom::A3 | Axiom::A5 => 1,
        }
    }
}

/// A counterexample to one axiom. Unused variables are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub x: usize,
    pub y: Option<usize>,
    pub z: Option<usize>,
    pub found: usize,
}

impl Witness {
    /// Re-evaluates the witness; true when it still violates `axiom` on `alg`.
    pub fn violates(&self, alg: &CayleyAlgebra, axiom: Axiom) -> bool {
        axiom
            .violation(alg, self.x, self.y.unwrap_or(0), self.z.unwrap_or(0))
            .is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
    pub is_bci: bool,
    pub is_bck: bool,
}

impl AxiomReport {
    pub fn check(&self, axiom: Axiom) -> &AxiomCheck {
        &self.checks[axiom as usize]
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Checks every axiom over every tuple of elements.
///
/// Each failing axiom carries its lexicographically first violation in
/// `(x, y, z)` order.
pub fn check_axioms(alg: &CayleyAlgebra) -> AxiomReport {
    let n = alg.order();
    let checks: Vec<AxiomCheck> = Axiom::ALL
        .iter()
        .map(|&axiom| {
            let arity = axiom.arity();
            let ys = if arity >= 2 { n } else { 1 };
            let zs = if arity >= 3 { n } else { 1 };
            let witness = (0..n)
                .flat_map(|x| (0..ys).flat_map(move |y| (0..zs).map(move |z| (x, y, z))))
                .find_map(|(x, y, z)| {
                    axiom.violation(alg, x, y, z).map(|found| Witness {
                        x,
                        y: (arity >= 2).then_some(y),
                        z: (arity >= 3).then_some(z),
                        found,
                    })
                });
            AxiomCheck {
                axiom,
                holds: witness.is_none(),
                witness,
            }
        })
        .collect();
    let is_bci = checks[..4].iter().all(|c| c.holds);
    let is_bck = is_bci && checks[4].holds;
    AxiomReport {
        checks,
        is_bci,
        is_bck,
    }
}

/// A [`CayleyAlgebra`] that satisfies all five BCK axioms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BckAlgebra(CayleyAlgebra);

impl BckAlgebra {
    /// Verifies the axioms; fails with the full report otherwise.
    pub fn new(alg: CayleyAlgebra) -> Result<Self> {
        let report = check_axioms(&alg);
        if report.is_bck {
            Ok(BckAlgebra(alg))
        } else {
            Err(Error::NotBck(Box::new(report)))
        }
    }

    /// For tables produced by constructions that are BCK by theorem.
    pub(crate) fn new_unchecked(alg: CayleyAlgebra) -> Self {
        BckAlgebra(alg)
    }

    pub fn as_algebra(&self) -> &CayleyAlgebra {
        &self.0
    }

    pub fn into_inner(self) -> CayleyAlgebra {
        self.0
    }

    /// Element `x` is below `y` in the induced order, i.e. `x ∗ y = θ`.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.0.op(x, y) == ZERO
    }
}

impl Deref for BckAlgebra {
    type Target = CayleyAlgebra;

    fn deref(&self) -> &CayleyAlgebra {
        &self.0
    }
}

impl TryFrom<CayleyAlgebra> for BckAlgebra {
    type Error = Error;

    fn try_from(alg: CayleyAlgebra) -> Result<Self> {
        BckAlgebra::new(alg)
    }
}

fn first_pair_failing(
    alg: &CayleyAlgebra,
    holds: impl Fn(usize, usize) -> bool,
) -> Option<(usize, usize)> {
    let n = alg.order();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| !holds(x, y))
}

/// First pair violating `x∗(x∗y) = y∗(y∗x)`, if any.
pub fn commutativity_witness(alg: &BckAlgebra) -> Option<(usize, usize)> {
    first_pair_failing(alg, |x, y| {
        alg.op(x, alg.op(x, y)) == alg.op(y, alg.op(y, x))
    })
}

pub fn is_commutative(alg: &BckAlgebra) -> bool {
    commutativity_witness(alg).is_none()
}

/// First pair violating `x∗(y∗x) = x`, if any.
pub fn implicativity_witness(alg: &BckAlgebra) -> Option<(usize, usize)> {
    first_pair_failing(alg, |x, y| alg.op(x, alg.op(y, x)) == x)
}

pub fn is_implicative(alg: &BckAlgebra) -> bool {
    implicativity_witness(alg).is_none()
}

/// The order `x ≤ y ⟺ x ∗ y = θ`.
pub fn induced_order(alg: &BckAlgebra) -> Result<Poset> {
    Poset::from_fn(alg.order(), |x, y| alg.leq(x, y)).map_err(|e| {
        Error::Internal(format!(
            "induced order of a BCK-algebra is not a partial order: {e}"
        ))
    })
}

/// Searches for an isomorphism `h` with `h(x∗y) = h(x)∘h(y)`.
///
/// Only bijections with `h(0) = 0` are tried (axiom 5 forces θ onto θ). The
/// first one in lexicographic order of `(h(0), .., h(n-1))` is returned.
pub fn are_isomorphic(a: &CayleyAlgebra, b: &CayleyAlgebra) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[ZERO] = ZERO;
    used[ZERO] = true;
    if consistent_through(a, b, ZERO, &map) && extend_isomorphism(a, b, 1, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend_isomorphism(
    a: &CayleyAlgebra,
    b: &CayleyAlgebra,
    next: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = a.order();
    if next == n {
        return true;
    }
    for candidate in 0..n {
        if used[candidate] {
            continue;
        }
        map[next] = candidate;
        used[candidate] = true;
        if consistent_through(a, b, next, map) && extend_isomorphism(a, b, next + 1, map, used) {
            return true;
        }
        used[candidate] = false;
    }
    map[next] = usize::MAX;
    false
}

/// Checks the pairs among `0..=last` that became decidable once `last` was
/// mapped: both operands and the product are mapped and one of them is `last`.
fn consistent_through(a: &CayleyAlgebra, b: &CayleyAlgebra, last: usize, map: &[usize]) -> bool {
    for u in 0..=last {
        for v in 0..=last {
            let w = a.op(u, v);
            if w <= last && u.max(v).max(w) == last && map[w] != b.op(map[u], map[v]) {
                return false;
            }
        }
    }
    true
}

/// The algebra of all maps `{1..k} → {0,1}` under `f ∘ g = f − min(f, g)`.
///
/// Elements are the `k`-bit strings in ascending binary order, so index `i`
/// is the string of `i` with the most significant bit first and θ is the
/// all-zeros string. Pointwise, `f ∘ g` is `f AND NOT g`.
pub fn pointwise_function_algebra(k: usize) -> Result<BckAlgebra> {
    if k == 0 || k > MAX_POINTWISE_BITS {
        return Err(Error::BoundExceeded {
            what: "bit count k",
            value: k,
            max: MAX_POINTWISE_BITS,
        });
    }
    let order = 1usize << k;
    let names = (0..order).map(|i| format!("{i:0k$b}")).collect();
    let alg = CayleyAlgebra::from_fn(order, |f, g| f & !g)?.with_names(names)?;
    Ok(BckAlgebra::new_unchecked(alg))
}

/// The one-element algebra `{θ}`.
pub fn trivial_algebra() -> BckAlgebra {
    BckAlgebra::new_unchecked(CayleyAlgebra {
        order: 1,
        table: vec![ZERO],
        names: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_a() -> CayleyAlgebra {
        CayleyAlgebra::new(vec![
            vec![0, 0, 0, 0],
            vec![1, 0, 0, 1],
            vec![2, 1, 0, 2],
            vec![3, 3, 3, 0],
        ])
        .unwrap()
    }

    fn example_star() -> CayleyAlgebra {
        CayleyAlgebra::new(vec![
            vec![0, 0, 0, 0],
            vec![1, 0, 0, 1],
            vec![2, 2, 0, 2],
            vec![3, 3, 3, 0],
        ])
        .unwrap()
    }

    #[test]
    fn rejects_malformed_tables() {
        assert_eq!(CayleyAlgebra::new(vec![]), Err(Error::EmptyAlgebra));
        assert!(matches!(
            CayleyAlgebra::new(vec![vec![0, 0], vec![1]]),
            Err(Error::RaggedTable {
                row: 1,
                found: 1,
                expected: 2
            })
        ));
        assert!(matches!(
            CayleyAlgebra::new(vec![vec![0, 0], vec![2, 0]]),
            Err(Error::EntryOutOfRange {
                row: 1,
                col: 0,
                value: 2,
                order: 2
            })
        ));
    }

    #[test]
    fn example_tables_are_bck() {
        for alg in [example_a(), example_star()] {
            let report = check_axioms(&alg);
            assert!(report.is_bck, "{report:?}");
            assert!(report.checks.iter().all(|c| c.holds && c.witness.is_none()));
        }
    }

    #[test]
    fn broken_diagonal_fails_axiom_three_at_one() {
        let mut rows = example_a().to_rows();
        rows[1][1] = 1;
        let alg = CayleyAlgebra::new(rows).unwrap();
        let report = check_axioms(&alg);
        assert!(!report.is_bck);
        let a3 = report.check(Axiom::A3);
        assert!(!a3.holds);
        let w = a3.witness.as_ref().unwrap();
        assert_eq!((w.x, w.y, w.z, w.found), (1, None, None, 1));
        for failed in report.failures() {
            assert!(failed
                .witness
                .as_ref()
                .unwrap()
                .violates(&alg, failed.axiom));
        }
    }

    #[test]
    fn bck_implies_bci_and_axiom_five_can_fail_alone() {
        // 0∗1 = 1 breaks only θ∗x = θ
        let alg = CayleyAlgebra::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let report = check_axioms(&alg);
        assert!(report.is_bci);
        assert!(!report.is_bck);
        assert_eq!(report.check(Axiom::A5).witness.as_ref().unwrap().x, 1);
    }

    #[test]
    fn commutative_and_implicative_examples() {
        let a = BckAlgebra::new(example_a()).unwrap();
        let v = BckAlgebra::new(example_star()).unwrap();
        assert!(is_commutative(&a));
        assert!(!is_implicative(&a));
        assert!(!is_commutative(&v));
        assert!(!is_implicative(&v));
        // w₂ < w₃: w₂∗(w₂∗w₃) = w₂∗θ = w₂ but w₃∗(w₃∗w₂) = w₃∗w₃ = θ
        assert_eq!(commutativity_witness(&v), Some((1, 2)));
        let one = trivial_algebra();
        assert!(is_commutative(&one) && is_implicative(&one));
    }

    #[test]
    fn induced_order_of_star_example() {
        let v = BckAlgebra::new(example_star()).unwrap();
        let p = induced_order(&v).unwrap();
        assert_eq!(p.minimum(), Some(0));
        assert!((0..4).all(|x| p.leq(0, x)));
        assert!(p.leq(1, 2));
        assert!(!p.comparable(1, 3));
        assert!(!p.comparable(2, 3));
        let single = induced_order(&trivial_algebra()).unwrap();
        assert_eq!(single.order(), 1);
    }

    #[test]
    fn isomorphism_search() {
        let a = example_a();
        let v = example_star();
        assert_eq!(are_isomorphic(&a, &v), None);
        assert_eq!(are_isomorphic(&v, &v), Some(vec![0, 1, 2, 3]));
        let swapped = v.relabel(&[0, 1, 3, 2]).unwrap();
        assert_eq!(are_isomorphic(&v, &swapped), Some(vec![0, 1, 3, 2]));
        assert_eq!(are_isomorphic(&swapped, &v), Some(vec![0, 1, 3, 2]));
        assert_eq!(are_isomorphic(&v, &trivial_algebra()), None);
    }

    #[test]
    fn relabel_requires_fixed_zero() {
        assert!(matches!(
            example_a().relabel(&[1, 0, 2, 3]),
            Err(Error::InvalidPermutation { .. })
        ));
        assert!(matches!(
            example_a().relabel(&[0, 1, 1, 3]),
            Err(Error::InvalidPermutation { .. })
        ));
    }

    #[test]
    fn pointwise_algebra_small_cases() {
        let two = pointwise_function_algebra(1).unwrap();
        assert_eq!(two.to_rows(), vec![vec![0, 0], vec![1, 0]]);
        let eight = pointwise_function_algebra(3).unwrap();
        // 011∘101 = 010, 111∘010 = 101
        assert_eq!(eight.op(0b011, 0b101), 0b010);
        assert_eq!(eight.op(0b111, 0b010), 0b101);
        assert_eq!(eight.name(5), "101");
        assert!(pointwise_function_algebra(0).is_err());
        assert!(pointwise_function_algebra(MAX_POINTWISE_BITS + 1).is_err());
    }

    #[test]
    fn pointwise_algebra_matches_per_bit_formula() {
        for k in 1..=5 {
            let alg = pointwise_function_algebra(k).unwrap();
            for f in 0..alg.order() {
                for g in 0..alg.order() {
                    let mut expected = 0;
                    for bit in 0..k {
                        let fb = (f >> bit) & 1;
                        let gb = (g >> bit) & 1;
                        expected |= (fb - fb.min(gb)) << bit;
                    }
                    assert_eq!(alg.op(f, g), expected);
                }
            }
            assert!(check_axioms(&alg).is_bck, "k = {k}");
            assert!(is_implicative(&alg), "k = {k}");
        }
    }
}
