//! Binary codewords, block codes and the family of square unitriangular codes.
//!
//! Bit positions are 0-based internally; the written form is the plain 0/1
//! string with position 0 leftmost.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_cn`] unless a caller raises the limit.
pub const DEFAULT_MAX_CN_ORDER: usize = 7;

/// A fixed-length bit string. Orders lexicographically, position 0 first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword(Vec<bool>);

impl Codeword {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidCodeword(String::new()));
        }
        Ok(Codeword(bits))
    }

    pub fn ones(len: usize) -> Self {
        Codeword(vec![true; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&b| b)
    }
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidCodeword(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Codeword::new(bits).map_err(|_| Error::InvalidCodeword(s.to_string()))
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword({self})")
    }
}

impl Serialize for Codeword {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Codeword {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `wx ⪯ wy` iff every bit of `wy` is at most the matching bit of `wx`.
///
/// Equivalently the support of `wy` is contained in the support of `wx`, so
/// the all-ones word is the least element.
pub fn preceq(wx: &Codeword, wy: &Codeword) -> Result<bool> {
    if wx.len() != wy.len() {
        return Err(Error::LengthMismatch {
            left: wx.len(),
            right: wy.len(),
        });
    }
    Ok(preceq_unchecked(wx, wy))
}

#[inline]
pub(crate) fn preceq_unchecked(wx: &Codeword, wy: &Codeword) -> bool {
    wx.0.iter().zip(&wy.0).all(|(&x, &y)| x || !y)
}

/// An ordered, duplicate-free collection of equal-length codewords.
///
/// Constructors keep the input order; [`lex_sort_desc`] produces the
/// canonical descending order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Codeword>", into = "Vec<Codeword>")]
pub struct BlockCode {
    words: Vec<Codeword>,
}

impl BlockCode {
    pub fn new(words: Vec<Codeword>) -> Result<Self> {
        let first = words.first().ok_or(Error::EmptyCode)?;
        let len = first.len();
        let mut seen = HashSet::with_capacity(words.len());
        for w in &words {
            if w.len() != len {
                return Err(Error::LengthMismatch {
                    left: len,
                    right: w.len(),
                });
            }
            if !seen.insert(w) {
                return Err(Error::DuplicateCodeword(w.to_string()));
            }
        }
        Ok(BlockCode { words })
    }

    /// Parses each string as a codeword, keeping order.
    pub fn from_strs<S: AsRef<str>>(words: &[S]) -> Result<Self> {
        let words = words
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<_>>>()?;
        BlockCode::new(words)
    }

    pub(crate) fn from_words_unchecked(words: Vec<Codeword>) -> Self {
        BlockCode { words }
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    /// Number of codewords.
    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// Common codeword length.
    pub fn length(&self) -> usize {
        self.words[0].len()
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        self.words.contains(w)
    }

    pub fn is_subset_of(&self, other: &BlockCode) -> bool {
        let theirs: HashSet<&Codeword> = other.words.iter().collect();
        self.words.iter().all(|w| theirs.contains(w))
    }

    /// Equality as sets of codewords.
    pub fn same_words(&self, other: &BlockCode) -> bool {
        self.size() == other.size() && self.is_subset_of(other)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.words.iter().map(ToString::to_string).collect()
    }
}

impl TryFrom<Vec<Codeword>> for BlockCode {
    type Error = Error;

    fn try_from(words: Vec<Codeword>) -> Result<Self> {
        BlockCode::new(words)
    }
}

impl From<BlockCode> for Vec<Codeword> {
    fn from(code: BlockCode) -> Self {
        code.words
    }
}

impl fmt::Debug for BlockCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.words.iter().map(ToString::to_string))
            .finish()
    }
}

/// Reorders the codewords so that `w₁ ≥lex w₂ ≥lex …`.
pub fn lex_sort_desc(code: &BlockCode) -> BlockCode {
    let mut words = code.words.clone();
    words.sort_unstable_by(|a, b| b.cmp(a));
    BlockCode { words }
}

/// A 0/1 matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CodeMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl CodeMatrix {
    /// The matrix whose rows are the codewords of `code`, in code order.
    pub fn from_code(code: &BlockCode) -> Self {
        let bits = code
            .words
            .iter()
            .flat_map(|w| w.0.iter().copied())
            .collect();
        CodeMatrix {
            rows: code.size(),
            cols: code.length(),
            bits,
        }
    }

    pub fn from_rows(rows: Vec<Vec<bool>>) -> Result<Self> {
        let cols = rows.first().map(Vec::len).ok_or(Error::EmptyMatrix)?;
        if cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::RaggedTable {
                row,
                found: r.len(),
                expected: cols,
            });
        }
        let n = rows.len();
        Ok(CodeMatrix {
            rows: n,
            cols,
            bits: rows.into_iter().flatten().collect(),
        })
    }

    /// Parses rows written as 0/1 strings.
    pub fn from_strs<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|s| s.as_ref().parse::<Codeword>().map(|w| w.0))
            .collect::<Result<Vec<_>>>()?;
        CodeMatrix::from_rows(rows)
    }

    pub(crate) fn zeros(rows: usize, cols: usize) -> Self {
        CodeMatrix {
            rows,
            cols,
            bits: vec![false; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Codeword {
        Codeword(self.bits[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows).map(|i| self.row(i).to_string()).collect()
    }

    /// The rows as a code, in row order. Fails on repeated rows.
    pub fn to_code(&self) -> Result<BlockCode> {
        BlockCode::new((0..self.rows).map(|i| self.row(i)).collect())
    }

    /// Square, zero below the diagonal, ones on it.
    pub fn unitriangular_defect(&self) -> Option<String> {
        if self.rows != self.cols {
            return Some(format!("{}x{} is not square", self.rows, self.cols));
        }
        for i in 0..self.rows {
            if let Some(j) = (0..i).find(|&j| self.get(i, j)) {
                return Some(format!(
                    "entry ({},{}) below the diagonal is 1",
                    i + 1,
                    j + 1
                ));
            }
            if !self.get(i, i) {
                return Some(format!("diagonal entry ({0},{0}) is 0", i + 1));
            }
        }
        None
    }

    pub fn is_unit_upper_triangular(&self) -> bool {
        self.unitriangular_defect().is_none()
    }

    /// True when `inner` occurs at rows `top..`, columns `left..`.
    pub fn contains_block(&self, inner: &CodeMatrix, top: usize, left: usize) -> bool {
        top + inner.rows <= self.rows
            && left + inner.cols <= self.cols
            && (0..inner.rows)
                .all(|i| (0..inner.cols).all(|j| self.get(top + i, left + j) == inner.get(i, j)))
    }
}

impl fmt::Display for CodeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for CodeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_strings()).finish()
    }
}

/// Why a code is not in the family of square unitriangular codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CnViolation {
    NotSquare {
        words: usize,
        length: usize,
    },
    MissingAllOnes,
    /// 1-based positions in the lex-descending matrix.
    BelowDiagonal {
        row: usize,
        col: usize,
    },
    ZeroDiagonal {
        row: usize,
    },
}

impl fmt::Display for CnViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CnViolation::NotSquare { words, length } => {
                write!(f, "not square ({words} codewords of length {length})")
            }
            CnViolation::MissingAllOnes => f.write_str("missing all-ones codeword"),
            CnViolation::BelowDiagonal { row, col } => {
                write!(f, "not upper triangular (entry ({row},{col}) is 1)")
            }
            CnViolation::ZeroDiagonal { row } => {
                write!(
                    f,
                    "not upper triangular with unit diagonal (entry ({row},{row}) is 0)"
                )
            }
        }
    }
}

/// The first failed membership condition, or `None` for a member.
pub fn cn_violation(code: &BlockCode) -> Option<CnViolation> {
    let n = code.size();
    if code.length() != n {
        return Some(CnViolation::NotSquare {
            words: n,
            length: code.length(),
        });
    }
    if !code.words.iter().any(Codeword::is_all_ones) {
        return Some(CnViolation::MissingAllOnes);
    }
    let sorted = lex_sort_desc(code);
    for (i, w) in sorted.words.iter().enumerate() {
        if let Some(j) = (0..i).find(|&j| w.bit(j)) {
            return Some(CnViolation::BelowDiagonal {
                row: i + 1,
                col: j + 1,
            });
        }
        if !w.bit(i) {
            return Some(CnViolation::ZeroDiagonal { row: i + 1 });
        }
    }
    None
}

/// Square code with the all-ones word whose sorted matrix is unit upper
/// triangular.
pub fn is_cn_member(code: &BlockCode) -> bool {
    cn_violation(code).is_none()
}

/// A member of the family ℭ_n, held in lex-descending row order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyCode {
    code: BlockCode,
}

impl FamilyCode {
    pub fn new(code: &BlockCode) -> Result<Self> {
        match cn_violation(code) {
            Some(v) => Err(Error::NotInFamily(v)),
            None => Ok(FamilyCode {
                code: lex_sort_desc(code),
            }),
        }
    }

    /// `n`: number of codewords and their length.
    pub fn n(&self) -> usize {
        self.code.size()
    }

    /// The sorted code.
    pub fn code(&self) -> &BlockCode {
        &self.code
    }

    pub fn into_code(self) -> BlockCode {
        self.code
    }

    pub fn row(&self, i: usize) -> &Codeword {
        &self.code.words[i]
    }

    pub fn matrix(&self) -> CodeMatrix {
        CodeMatrix::from_code(&self.code)
    }
}

impl TryFrom<BlockCode> for FamilyCode {
    type Error = Error;

    fn try_from(code: BlockCode) -> Result<Self> {
        FamilyCode::new(&code)
    }
}

/// `2^((n-1)(n-2)/2)`, the size of ℭ_n. Valid for `n <= 12`.
pub fn cn_count(n: usize) -> u64 {
    1u64 << free_bit_count(n)
}

fn free_bit_count(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        (n - 1) * (n - 2) / 2
    }
}

/// Streams ℭ_n with the default order limit.
pub fn enumerate_cn(n: usize) -> Result<CnIter> {
    enumerate_cn_with_limit(n, DEFAULT_MAX_CN_ORDER)
}

/// Streams every code of ℭ_n.
///
/// Row 1 is all ones, row n is `0…01`, and rows 2..n-1 have zeros before the
/// diagonal and free bits after it. The free bits, read row by row, count up
/// in binary with the first free bit most significant.
pub fn enumerate_cn_with_limit(n: usize, max_order: usize) -> Result<CnIter> {
    // 63 free bits fit the counter; that is n = 12.
    if n == 0 || n > max_order || free_bit_count(n) >= 64 {
        return Err(Error::BoundExceeded {
            what: "code order n",
            value: n,
            max: max_order.min(12),
        });
    }
    let free: Vec<(usize, usize)> = (1..n.saturating_sub(1))
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let end = 1u64 << free.len();
    Ok(CnIter {
        n,
        free,
        next: 0,
        end,
    })
}

/// Iterator returned by [`enumerate_cn`].
#[derive(Clone, Debug)]
pub struct CnIter {
    n: usize,
    free: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl CnIter {
    /// The code at position `index` of the enumeration.
    pub fn code_at(&self, index: u64) -> Option<FamilyCode> {
        (index < (1u64 << self.free.len())).then(|| self.build(index))
    }

    /// Restricts the stream to positions `start..end`, for splitting work.
    pub fn range(mut self, start: u64, end: u64) -> Self {
        self.next = start;
        self.end = end.min(1u64 << self.free.len());
        self
    }

    fn build(&self, index: u64) -> FamilyCode {
        let n = self.n;
        let mut m = CodeMatrix::zeros(n, n);
        for j in 0..n {
            m.set(0, j, true);
        }
        for i in 1..n {
            m.set(i, i, true);
        }
        let k = self.free.len();
        for (pos, &(i, j)) in self.free.iter().enumerate() {
            if index >> (k - 1 - pos) & 1 == 1 {
                m.set(i, j, true);
            }
        }
        let words = (0..n).map(|i| m.row(i)).collect();
        FamilyCode {
            code: BlockCode::from_words_unchecked(words),
        }
    }
}

impl Iterator for CnIter {
    type Item = FamilyCode;

    fn next(&mut self) -> Option<FamilyCode> {
        if self.next >= self.end {
            return None;
        }
        let code = self.build(self.next);
        self.next += 1;
        Some(code)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.end.saturating_sub(self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for CnIter {}

fn check_same_family(v1: &FamilyCode, v2: &FamilyCode) -> Result<()> {
    if v1.n() != v2.n() {
        return Err(Error::FamilyMismatch {
            left: v1.n(),
            right: v2.n(),
        });
    }
    Ok(())
}

fn first_differing_row(v1: &FamilyCode, v2: &FamilyCode) -> Option<usize> {
    (0..v1.n()).find(|&i| v1.row(i) != v2.row(i))
}

/// Total order `⪰lex` on ℭ_n: compare the first differing row
/// lexicographically. `Greater` means `v1` is strictly above `v2`.
pub fn code_compare_lex(v1: &FamilyCode, v2: &FamilyCode) -> Result<Ordering> {
    check_same_family(v1, v2)?;
    Ok(match first_differing_row(v1, v2) {
        None => Ordering::Equal,
        Some(i) => v1.row(i).cmp(v2.row(i)),
    })
}

/// Outcome of the partial order `≪` on ℭ_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LlOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// `v1 ≪ v2` iff at the first differing row `i`, `rowᵢ(v1) ⪯ rowᵢ(v2)`.
pub fn code_compare_ll(v1: &FamilyCode, v2: &FamilyCode) -> Result<LlOrdering> {
    check_same_family(v1, v2)?;
    Ok(ll_unchecked(v1, v2))
}

pub(crate) fn ll_unchecked(v1: &FamilyCode, v2: &FamilyCode) -> LlOrdering {
    match first_differing_row(v1, v2) {
        None => LlOrdering::Equal,
        Some(i) if preceq_unchecked(v1.row(i), v2.row(i)) => LlOrdering::Less,
        Some(i) if preceq_unchecked(v2.row(i), v1.row(i)) => LlOrdering::Greater,
        Some(_) => LlOrdering::Incomparable,
    }
}

/// The code Ω of ℭ_n whose matrix has ones on and above the diagonal.
pub fn omega(n: usize) -> Result<FamilyCode> {
    if n == 0 {
        return Err(Error::BoundExceeded {
            what: "code order n",
            value: 0,
            max: usize::MAX,
        });
    }
    let words = (0..n)
        .map(|k| Codeword((0..n).map(|j| j >= k).collect()))
        .collect();
    Ok(FamilyCode {
        code: BlockCode::from_words_unchecked(words),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(s: &str) -> Codeword {
        s.parse().unwrap()
    }

    fn code(words: &[&str]) -> BlockCode {
        BlockCode::from_strs(words).unwrap()
    }

    #[test]
    fn codeword_parsing() {
        assert_eq!(cw("0110").to_string(), "0110");
        assert!("".parse::<Codeword>().is_err());
        assert!("01a".parse::<Codeword>().is_err());
    }

    #[test]
    fn preceq_examples() {
        assert!(preceq(&cw("1111"), &cw("0110")).unwrap());
        assert!(!preceq(&cw("0110"), &cw("1111")).unwrap());
        assert!(preceq(&cw("0110"), &cw("0110")).unwrap());
        assert!(!preceq(&cw("0110"), &cw("0001")).unwrap());
        assert!(!preceq(&cw("0001"), &cw("0110")).unwrap());
        assert_eq!(
            preceq(&cw("01"), &cw("011")),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn block_code_validation() {
        assert_eq!(BlockCode::new(vec![]), Err(Error::EmptyCode));
        assert!(matches!(
            BlockCode::from_strs(&["01", "011"]),
            Err(Error::LengthMismatch { .. })
        ));
        assert_eq!(
            BlockCode::from_strs(&["01", "01"]),
            Err(Error::DuplicateCodeword("01".into()))
        );
    }

    #[test]
    fn lex_sort_examples() {
        let v = lex_sort_desc(&code(&["0110", "0010", "1111", "0001"]));
        assert_eq!(v.to_strings(), ["1111", "0110", "0010", "0001"]);
        assert_eq!(lex_sort_desc(&v), v);
        let w = lex_sort_desc(&code(&["11110", "10010", "10011", "00000"]));
        assert_eq!(w.to_strings(), ["11110", "10011", "10010", "00000"]);
    }

    #[test]
    fn membership_reasons() {
        assert!(is_cn_member(&code(&["0110", "0010", "1111", "0001"])));
        assert!(is_cn_member(&code(&["111", "011", "001"])));
        assert_eq!(
            cn_violation(&code(&["11110", "10010", "10011", "00000"])),
            Some(CnViolation::NotSquare {
                words: 4,
                length: 5
            })
        );
        assert_eq!(
            cn_violation(&code(&["011", "001", "010"])),
            Some(CnViolation::MissingAllOnes)
        );
        assert_eq!(
            cn_violation(&code(&["111", "101", "001"])),
            Some(CnViolation::BelowDiagonal { row: 2, col: 1 })
        );
        assert_eq!(
            cn_violation(&code(&["1111", "0011", "0010", "0001"])),
            Some(CnViolation::ZeroDiagonal { row: 2 })
        );
        assert_eq!(
            cn_violation(&code(&["111", "011", "010"])),
            Some(CnViolation::BelowDiagonal { row: 3, col: 2 })
        );
        assert!(cn_violation(&code(&["111", "011", "010"]))
            .unwrap()
            .to_string()
            .contains("not upper triangular"));
    }

    #[test]
    fn small_families() {
        let c3: Vec<Vec<String>> = enumerate_cn(3)
            .unwrap()
            .map(|c| c.code().to_strings())
            .collect();
        assert_eq!(
            c3,
            vec![vec!["111", "010", "001"], vec!["111", "011", "001"]]
        );
        let c2: Vec<Vec<String>> = enumerate_cn(2)
            .unwrap()
            .map(|c| c.code().to_strings())
            .collect();
        assert_eq!(c2, vec![vec!["11", "01"]]);
        assert_eq!(enumerate_cn(1).unwrap().count(), 1);
        assert!(enumerate_cn(0).is_err());
        assert!(enumerate_cn(DEFAULT_MAX_CN_ORDER + 1).is_err());
        assert_eq!(enumerate_cn_with_limit(8, 8).unwrap().len(), 1 << 21);
    }

    #[test]
    fn c5_is_exactly_the_members() {
        let all: Vec<FamilyCode> = enumerate_cn(5).unwrap().collect();
        assert_eq!(all.len(), 64);
        let distinct: HashSet<&FamilyCode> = all.iter().collect();
        assert_eq!(distinct.len(), 64);
        assert!(all.iter().all(|c| is_cn_member(c.code())));
        // every square 5-word code with free bits only above the diagonal is listed
        let iter = enumerate_cn(5).unwrap();
        assert_eq!(iter.code_at(63).unwrap(), omega(5).unwrap());
        assert!(iter.code_at(64).is_none());
        assert_eq!(iter.clone().range(10, 20).count(), 10);
    }

    #[test]
    fn lex_and_ll_orders() {
        let c3: Vec<FamilyCode> = enumerate_cn(3).unwrap().collect();
        let (b, a) = (&c3[0], &c3[1]);
        assert_eq!(code_compare_lex(a, b).unwrap(), Ordering::Greater);
        assert_eq!(code_compare_lex(a, a).unwrap(), Ordering::Equal);
        assert_eq!(code_compare_ll(a, b).unwrap(), LlOrdering::Less);
        assert_eq!(code_compare_ll(b, a).unwrap(), LlOrdering::Greater);
        assert_eq!(code_compare_ll(b, b).unwrap(), LlOrdering::Equal);
        let o4 = omega(4).unwrap();
        assert_eq!(
            code_compare_lex(a, &o4),
            Err(Error::FamilyMismatch { left: 3, right: 4 })
        );

        let x = FamilyCode::new(&code(&["1111", "0110", "0011", "0001"])).unwrap();
        let y = FamilyCode::new(&code(&["1111", "0101", "0011", "0001"])).unwrap();
        assert_eq!(code_compare_ll(&x, &y).unwrap(), LlOrdering::Incomparable);
        assert_eq!(code_compare_ll(&y, &x).unwrap(), LlOrdering::Incomparable);
    }

    #[test]
    fn lex_order_is_total_on_c4() {
        let mut all: Vec<FamilyCode> = enumerate_cn(4).unwrap().collect();
        all.sort_by(|a, b| code_compare_lex(b, a).unwrap());
        assert_eq!(all.len(), 8);
        for w in all.windows(2) {
            assert_eq!(code_compare_lex(&w[0], &w[1]).unwrap(), Ordering::Greater);
        }
        assert_eq!(all[0], omega(4).unwrap());
    }

    #[test]
    fn omega_shapes() {
        assert_eq!(omega(3).unwrap().code().to_strings(), ["111", "011", "001"]);
        assert_eq!(omega(1).unwrap().code().to_strings(), ["1"]);
        assert_eq!(
            omega(4).unwrap().code().to_strings(),
            ["1111", "0111", "0011", "0001"]
        );
        let o4 = omega(4).unwrap();
        for v in enumerate_cn(4).unwrap() {
            let ord = code_compare_ll(&o4, &v).unwrap();
            assert!(matches!(ord, LlOrdering::Less | LlOrdering::Equal));
        }
    }

    #[test]
    fn matrix_helpers() {
        let m = CodeMatrix::from_strs(&["110", "011", "001"]).unwrap();
        assert!(m.is_unit_upper_triangular());
        let inner = CodeMatrix::from_strs(&["10", "11"]).unwrap();
        assert!(m.contains_block(&inner, 0, 1));
        assert!(!m.contains_block(&inner, 1, 1));
        assert!(CodeMatrix::from_strs(&["10", "11"])
            .unwrap()
            .unitriangular_defect()
            .is_some());
        assert!(CodeMatrix::from_rows(vec![]).is_err());
    }
}
