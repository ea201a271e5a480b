//! Codes generated by BCK-functions.
//!
//! For `f: A → X` and `r ∈ X`, the cut subset `A_r` holds the `a ∈ A` with
//! `r ∗ f(a) = θ`. Elements with equal cut subsets are equivalent, and each
//! class contributes one codeword: bit `i` is set iff the `i`-th domain label
//! lies in the class's cut subset.

use std::collections::HashMap;

use crate::algebra::{BckAlgebra, ZERO};
use crate::code::{lex_sort_desc, BlockCode, Codeword};
use crate::error::{Error, Result};

/// A map from an ordered, labelled domain into a BCK-algebra.
///
/// Domain order fixes the bit positions of every generated codeword.
#[derive(Clone, Debug)]
pub struct BckFunction<'a> {
    algebra: &'a BckAlgebra,
    labels: Vec<String>,
    values: Vec<usize>,
}

impl<'a> BckFunction<'a> {
    /// `pairs` lists `(label, f(label))` in domain order.
    pub fn new(algebra: &'a BckAlgebra, pairs: Vec<(String, usize)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyDomain);
        }
        let order = algebra.order();
        let mut seen = std::collections::HashSet::new();
        for (label, value) in &pairs {
            if *value >= order {
                return Err(Error::ElementOutOfRange {
                    element: *value,
                    order,
                });
            }
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let (labels, values) = pairs.into_iter().unzip();
        Ok(BckFunction {
            algebra,
            labels,
            values,
        })
    }

    /// `A = X` in index order and `f(x) = x`.
    pub fn identity(algebra: &'a BckAlgebra) -> Self {
        let elements: Vec<usize> = (0..algebra.order()).collect();
        Self::inclusion(algebra, &elements)
    }

    /// The inclusion of a list of distinct elements, labelled by element name.
    pub(crate) fn inclusion(algebra: &'a BckAlgebra, elements: &[usize]) -> Self {
        BckFunction {
            algebra,
            labels: elements.iter().map(|&x| algebra.name(x)).collect(),
            values: elements.to_vec(),
        }
    }

    pub fn algebra(&self) -> &'a BckAlgebra {
        self.algebra
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn domain_size(&self) -> usize {
        self.values.len()
    }

    /// The cut function `f_r` written as a codeword.
    pub fn cut_word(&self, r: usize) -> Result<Codeword> {
        self.check_element(r)?;
        Ok(self.cut_word_unchecked(r))
    }

    fn cut_word_unchecked(&self, r: usize) -> Codeword {
        let bits = self
            .values
            .iter()
            .map(|&v| self.algebra.op(r, v) == ZERO)
            .collect();
        Codeword::new(bits).expect("domain is non-empty")
    }

    fn check_element(&self, r: usize) -> Result<()> {
        let order = self.algebra.order();
        if r >= order {
            return Err(Error::ElementOutOfRange { element: r, order });
        }
        Ok(())
    }
}

/// Domain positions in `A_r = {a ∈ A : r ∗ f(a) = θ}`.
pub fn cut_subset(f: &BckFunction<'_>, r: usize) -> Result<Vec<usize>> {
    let word = f.cut_word(r)?;
    Ok((0..f.domain_size()).filter(|&i| word.bit(i)).collect())
}

/// One class of `r ∼ s ⟺ A_r = A_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    /// Members in ascending order; the first is the representative.
    pub members: Vec<usize>,
    pub cut_word: Codeword,
}

impl EquivalenceClass {
    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

/// The partition of the carrier by cut subsets, ordered by representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClasses {
    pub classes: Vec<EquivalenceClass>,
}

impl EquivalenceClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `x`.
    pub fn class_of(&self, x: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.members.contains(&x))
    }
}

pub fn equivalence_classes(f: &BckFunction<'_>) -> EquivalenceClasses {
    let mut index: HashMap<Codeword, usize> = HashMap::new();
    let mut classes: Vec<EquivalenceClass> = Vec::new();
    for r in 0..f.algebra.order() {
        let word = f.cut_word_unchecked(r);
        match index.get(&word) {
            Some(&c) => classes[c].members.push(r),
            None => {
                index.insert(word.clone(), classes.len());
                classes.push(EquivalenceClass {
                    members: vec![r],
                    cut_word: word,
                });
            }
        }
    }
    EquivalenceClasses { classes }
}

/// The code `V_X` of `f`: one codeword per class, lex-descending.
pub fn generate_code(f: &BckFunction<'_>) -> BlockCode {
    let words = equivalence_classes(f)
        .classes
        .into_iter()
        .map(|c| c.cut_word)
        .collect();
    lex_sort_desc(&BlockCode::from_words_unchecked(words))
}

/// The code generated by the identity on the whole carrier.
pub fn canonical_code(alg: &BckAlgebra) -> BlockCode {
    generate_code(&BckFunction::identity(alg))
}

/// Both algebras determine the same canonical code.
pub fn code_similar(a1: &BckAlgebra, a2: &BckAlgebra) -> bool {
    canonical_code(a1) == canonical_code(a2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{pointwise_function_algebra, trivial_algebra, CayleyAlgebra};

    fn example_a() -> BckAlgebra {
        let alg = CayleyAlgebra::new(vec![
            vec![0, 0, 0, 0],
            vec![1, 0, 0, 1],
            vec![2, 1, 0, 2],
            vec![3, 3, 3, 0],
        ])
        .unwrap()
        .with_names(["θ", "a", "b", "c"].map(String::from).to_vec())
        .unwrap();
        BckAlgebra::new(alg).unwrap()
    }

    #[test]
    fn cut_subsets() {
        let a = example_a();
        let f = BckFunction::identity(&a);
        assert_eq!(cut_subset(&f, 1).unwrap(), vec![1, 2]);
        assert_eq!(f.cut_word(1).unwrap().to_string(), "0110");
        assert_eq!(cut_subset(&f, 0).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(
            cut_subset(&f, 4),
            Err(Error::ElementOutOfRange {
                element: 4,
                order: 4
            })
        );

        let p = pointwise_function_algebra(3).unwrap();
        let g = BckFunction::identity(&p);
        assert_eq!(g.labels()[4], "100");
        assert_eq!(cut_subset(&g, 0b100).unwrap(), vec![4, 5, 6, 7]);
        assert_eq!(g.cut_word(0b100).unwrap().to_string(), "00001111");
    }

    #[test]
    fn function_validation() {
        let a = example_a();
        assert!(matches!(
            BckFunction::new(&a, vec![]),
            Err(Error::EmptyDomain)
        ));
        assert!(matches!(
            BckFunction::new(&a, vec![("p".into(), 7)]),
            Err(Error::ElementOutOfRange {
                element: 7,
                order: 4
            })
        ));
        assert!(matches!(
            BckFunction::new(&a, vec![("p".into(), 1), ("p".into(), 2)]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn classes_and_codes() {
        let p = pointwise_function_algebra(3).unwrap();
        let classes = equivalence_classes(&BckFunction::identity(&p));
        assert_eq!(classes.len(), 8);
        assert!(classes.classes.iter().all(|c| c.members.len() == 1));

        let one = trivial_algebra();
        assert_eq!(equivalence_classes(&BckFunction::identity(&one)).len(), 1);
        assert_eq!(canonical_code(&one).to_strings(), ["1"]);

        assert_eq!(
            canonical_code(&example_a()).to_strings(),
            ["1111", "0110", "0010", "0001"]
        );
        let chain =
            BckAlgebra::new(CayleyAlgebra::new(vec![vec![0, 0], vec![1, 0]]).unwrap()).unwrap();
        assert_eq!(canonical_code(&chain).to_strings(), ["11", "01"]);
    }

    #[test]
    fn merged_classes_match_brute_force() {
        // both labels go to c: θ and c cut out {p, q}, a and b cut out nothing
        let a = example_a();
        let f = BckFunction::new(&a, vec![("p".into(), 3), ("q".into(), 3)]).unwrap();
        let classes = equivalence_classes(&f);
        for r in 0..4 {
            for s in 0..4 {
                let same = cut_subset(&f, r).unwrap() == cut_subset(&f, s).unwrap();
                assert_eq!(same, classes.class_of(r) == classes.class_of(s), "{r} {s}");
            }
        }
        assert_eq!(classes.classes[0].members, vec![0, 3]);
        assert_eq!(classes.classes[1].members, vec![1, 2]);
        assert_eq!(classes.classes[0].representative(), 0);
        assert_eq!(generate_code(&f).to_strings(), ["11", "00"]);
    }

    #[test]
    fn similarity() {
        let a = example_a();
        assert!(code_similar(&a, &a));
        let chain =
            BckAlgebra::new(CayleyAlgebra::new(vec![vec![0, 0], vec![1, 0]]).unwrap()).unwrap();
        assert!(!code_similar(&a, &chain));
    }
}
