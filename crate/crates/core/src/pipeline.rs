//! Lifting arbitrary codes into square unitriangular ones, and the algebra
//! carried by the family ℭ_n itself.

use std::cmp::Ordering;

use crate::algebra::BckAlgebra;
use crate::code::{
    code_compare_lex, enumerate_cn, lex_sort_desc, ll_unchecked, BlockCode, CodeMatrix, FamilyCode,
    LlOrdering,
};
use crate::codec::{canonical_code, generate_code, BckFunction};
use crate::construct::{algebra_from_poset, construct_from_family};
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Largest `n` accepted by [`family_algebra`]; ℭ_6 already has 1024 members.
pub const MAX_FAMILY_ORDER: usize = 6;

/// Embeds an `n × m` matrix `A` into the `(n+m) × (n+m)` matrix
///
/// ```text
/// [ I_n  A   ]
/// [ 0    I_m ]
/// ```
///
/// which is unit upper triangular and holds `A` at rows `0..n`, columns `n..`.
pub fn embed_matrix(a: &CodeMatrix) -> Result<CodeMatrix> {
    let (n, m) = (a.rows(), a.cols());
    if n == 0 || m == 0 {
        return Err(Error::EmptyMatrix);
    }
    let q = n + m;
    let mut b = CodeMatrix::zeros(q, q);
    for i in 0..q {
        b.set(i, i, true);
    }
    for i in 0..n {
        for j in 0..m {
            b.set(i, n + j, a.get(i, j));
        }
    }
    Ok(b)
}

/// Returns `b` unchanged when its first row is all ones; otherwise prepends
/// an all-ones row and the column `(1, 0, …, 0)ᵀ`.
pub fn ensure_all_ones(b: &CodeMatrix) -> Result<CodeMatrix> {
    if let Some(defect) = b.unitriangular_defect() {
        return Err(Error::NotUnitriangular(defect));
    }
    let q = b.rows();
    if (0..q).all(|j| b.get(0, j)) {
        return Ok(b.clone());
    }
    let mut out = CodeMatrix::zeros(q + 1, q + 1);
    for j in 0..=q {
        out.set(0, j, true);
    }
    for i in 0..q {
        for j in 0..q {
            out.set(i + 1, j + 1, b.get(i, j));
        }
    }
    Ok(out)
}

/// Every stage of a code lift.
#[derive(Clone, Debug)]
pub struct LiftResult {
    /// The input in lex-descending order; row `i` of the embedded matrix.
    pub source: BlockCode,
    pub embedded: CodeMatrix,
    pub augmented: CodeMatrix,
    /// Whether an all-ones row and column were prepended.
    pub prepended: bool,
    /// Algebra built from the rows of `augmented`; element `k` is row `k`.
    pub algebra: BckAlgebra,
    /// Elements standing for the original columns, in column order.
    pub domain: Vec<usize>,
    pub lifted_code: BlockCode,
}

impl LiftResult {
    /// Order of the ambient algebra: `n + m`, plus one if a row was prepended.
    pub fn ambient_order(&self) -> usize {
        self.algebra.order()
    }

    /// `(original column, element)` pairs, 0-based.
    pub fn column_map(&self) -> Vec<(usize, usize)> {
        self.domain.iter().copied().enumerate().collect()
    }

    /// The inclusion of the domain into the algebra.
    pub fn function(&self) -> BckFunction<'_> {
        BckFunction::inclusion(&self.algebra, &self.domain)
    }

    /// Original row `i` of `source` sits at this element.
    pub fn row_element(&self, i: usize) -> usize {
        i + usize::from(self.prepended)
    }
}

/// Lifts any duplicate-free code into an algebra whose generated code, over
/// the elements standing for the original columns, contains every original
/// codeword.
pub fn lift_code(v: &BlockCode) -> Result<LiftResult> {
    let source = lex_sort_desc(v);
    let m = CodeMatrix::from_code(&source);
    let embedded = embed_matrix(&m)?;
    let augmented = ensure_all_ones(&embedded)?;
    let prepended = augmented.rows() != embedded.rows();
    let family = FamilyCode::new(&augmented.to_code()?)
        .map_err(|e| Error::Internal(format!("augmented matrix is not in the family: {e}")))?;
    if family.code() != &augmented.to_code()? {
        return Err(Error::Internal(
            "augmented rows are not in lex-descending order".into(),
        ));
    }
    let built = construct_from_family(family)?;
    let shift = source.size() + usize::from(prepended);
    let domain: Vec<usize> = (0..source.length()).map(|j| shift + j).collect();
    let lifted_code = generate_code(&BckFunction::inclusion(&built.algebra, &domain));
    if !source.is_subset_of(&lifted_code) {
        return Err(Error::Internal(format!(
            "lifted code {lifted_code:?} does not contain {source:?}"
        )));
    }
    Ok(LiftResult {
        source,
        embedded,
        augmented,
        prepended,
        algebra: built.algebra,
        domain,
        lifted_code,
    })
}

/// The BCK-algebra `(ℭ_n, ∗, Ω)` together with its canonical code.
#[derive(Clone, Debug)]
pub struct FamilyAlgebra {
    /// ℭ_n in descending `⪰lex` order; `members[0]` is Ω.
    pub members: Vec<FamilyCode>,
    pub algebra: BckAlgebra,
    pub code: BlockCode,
}

/// Orders ℭ_n by `≪`, applies the star operation and generates the code.
pub fn family_algebra(n: usize) -> Result<FamilyAlgebra> {
    if n == 0 || n > MAX_FAMILY_ORDER {
        return Err(Error::BoundExceeded {
            what: "family order n",
            value: n,
            max: MAX_FAMILY_ORDER,
        });
    }
    let mut members: Vec<FamilyCode> = enumerate_cn(n)?.collect();
    members.sort_by(|a, b| code_compare_lex(b, a).unwrap_or(Ordering::Equal));
    let size = members.len();
    let mut leq = Vec::with_capacity(size * size);
    for a in &members {
        for b in &members {
            leq.push(matches!(
                ll_unchecked(a, b),
                LlOrdering::Less | LlOrdering::Equal
            ));
        }
    }
    let poset = Poset::from_relation_unchecked(size, leq);
    let names = members
        .iter()
        .map(|c| c.code().to_strings().join("/"))
        .collect();
    let algebra = algebra_from_poset(&poset)?.into_inner().with_names(names)?;
    let algebra = BckAlgebra::new_unchecked(algebra);
    let code = canonical_code(&algebra);
    Ok(FamilyAlgebra {
        members,
        algebra,
        code,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_axioms;
    use crate::code::{is_cn_member, omega};

    fn matrix(rows: &[&str]) -> CodeMatrix {
        CodeMatrix::from_strs(rows).unwrap()
    }

    #[test]
    fn embed_one_by_one() {
        let b = embed_matrix(&matrix(&["1"])).unwrap();
        assert_eq!(b.row_strings(), ["11", "01"]);
        assert_eq!(ensure_all_ones(&b).unwrap(), b);
    }

    #[test]
    fn embed_keeps_block() {
        let a = matrix(&["1101", "1010", "0011"]);
        let b = embed_matrix(&a).unwrap();
        assert_eq!((b.rows(), b.cols()), (7, 7));
        assert!(b.is_unit_upper_triangular());
        assert!(b.contains_block(&a, 0, 3));
    }

    #[test]
    fn prepend_all_ones() {
        let b = ensure_all_ones(&matrix(&["10", "01"])).unwrap();
        assert_eq!(b.row_strings(), ["111", "010", "001"]);
        assert!(matches!(
            ensure_all_ones(&matrix(&["10", "11"])),
            Err(Error::NotUnitriangular(_))
        ));
        assert!(matches!(
            ensure_all_ones(&matrix(&["10"])),
            Err(Error::NotUnitriangular(_))
        ));
    }

    #[test]
    fn lift_single_word() {
        let lift = lift_code(&BlockCode::from_strs(&["1"]).unwrap()).unwrap();
        assert!(!lift.prepended);
        assert_eq!(lift.ambient_order(), 2);
        assert_eq!(lift.domain, vec![1]);
        assert_eq!(lift.lifted_code.to_strings(), ["1"]);
    }

    #[test]
    fn lift_all_zero_word() {
        let lift = lift_code(&BlockCode::from_strs(&["00", "10"]).unwrap()).unwrap();
        assert!(lift.prepended);
        assert_eq!(lift.column_map(), vec![(0, 3), (1, 4)]);
        assert!(lift.lifted_code.contains(&"00".parse().unwrap()));
        let f = lift.function();
        assert_eq!(f.cut_word(lift.row_element(1)).unwrap().to_string(), "00");
    }

    #[test]
    fn small_family_algebras() {
        let f2 = family_algebra(2).unwrap();
        assert_eq!(f2.algebra.order(), 1);
        assert_eq!(f2.code.to_strings(), ["1"]);

        let f3 = family_algebra(3).unwrap();
        assert_eq!(f3.algebra.to_rows(), vec![vec![0, 0], vec![1, 0]]);
        assert_eq!(f3.code.to_strings(), ["11", "01"]);
        assert_eq!(f3.members[0], omega(3).unwrap());

        let f4 = family_algebra(4).unwrap();
        assert_eq!(f4.algebra.order(), 8);
        assert!(check_axioms(&f4.algebra).is_bck);
        assert_eq!((f4.code.size(), f4.code.length()), (8, 8));
        assert!(is_cn_member(&f4.code));
        assert!(family_algebra(MAX_FAMILY_ORDER + 1).is_err());
    }
}
