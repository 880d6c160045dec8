//! The hyperoctahedral group B_n as signed permutation matrices, subsets of
//! `{1,…,n}` as bit masks, and sparse elements of the real group ring.
//!
//! A signed permutation is stored column-wise: column `j` has its single
//! nonzero entry `signs[j]` in row `perm[j]`. Indices are 0-based in storage;
//! the constructors that take user-facing indices (`transposition`,
//! `SubsetMask::from_elements`) are 1-based.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest `n` accepted anywhere in the crate. Subsets are `u32` masks.
pub const MAX_N: usize = 20;

/// Largest `n` for which the whole group is enumerated.
pub const MAX_ENUMERATION_N: usize = 6;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::UnsupportedN(n, MAX_N));
    }
    Ok(())
}

/// A subset `A ⊆ {1,…,n}`; bit `j` is set iff `j + 1 ∈ A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    // field order matters for the derived Ord: compare n first, then bits
    n: usize,
    bits: u32,
}

impl SubsetMask {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_n(n)?;
        if (bits as u64) >= (1u64 << n) {
            return Err(Error::IndexOutOfRange(format!("mask {bits:#b} has bits beyond n = {n}")));
        }
        Ok(SubsetMask { n, bits })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u32) -> Self {
        debug_assert!((bits as u64) < (1u64 << n));
        SubsetMask { n, bits }
    }

    pub fn empty(n: usize) -> Self {
        SubsetMask { n, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        SubsetMask { n, bits: ((1u64 << n) - 1) as u32 }
    }

    /// Builds a mask from 1-based elements.
    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self> {
        check_n(n)?;
        let mut bits = 0u32;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::IndexOutOfRange(format!("element {e} not in 1..={n}")));
            }
            bits |= 1 << (e - 1);
        }
        Ok(SubsetMask { n, bits })
    }

    /// `{1,…,k}`.
    pub fn initial_segment(n: usize, k: usize) -> Result<Self> {
        check_n(n)?;
        if k > n {
            return Err(Error::IndexOutOfRange(format!("k = {k} exceeds n = {n}")));
        }
        Ok(SubsetMask { n, bits: ((1u64 << k) - 1) as u32 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// 1-based membership.
    pub fn contains(&self, element: usize) -> bool {
        element >= 1 && element <= self.n && self.bits & (1 << (element - 1)) != 0
    }

    /// 1-based elements in increasing order.
    pub fn elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| self.bits & (1 << j) != 0).map(|j| j + 1).collect()
    }

    pub fn intersection_len(&self, other: &SubsetMask) -> usize {
        (self.bits & other.bits).count_ones() as usize
    }

    pub fn symmetric_difference(&self, other: &SubsetMask) -> SubsetMask {
        SubsetMask { n: self.n, bits: self.bits ^ other.bits }
    }

    pub fn complement(&self) -> SubsetMask {
        SubsetMask { n: self.n, bits: !self.bits & Self::full(self.n).bits }
    }

    /// The character `χ_self(other) = (−1)^{|self ∩ other|}`.
    pub fn character(&self, other: &SubsetMask) -> f64 {
        if self.intersection_len(other) % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    /// `π(A)` for a 0-based one-line permutation.
    pub fn image(&self, perm: &[usize]) -> SubsetMask {
        let mut bits = 0u32;
        for (j, &pj) in perm.iter().enumerate() {
            if self.bits & (1 << j) != 0 {
                bits |= 1 << pj;
            }
        }
        SubsetMask { n: self.n, bits }
    }

    /// Bitstring of length `n`; character `j` (1-based, left to right) is `1`
    /// iff `j ∈ A`.
    pub fn to_bitstring(&self) -> String {
        (0..self.n).map(|j| if self.bits & (1 << j) != 0 { '1' } else { '0' }).collect()
    }

    pub fn from_bitstring(s: &str) -> Result<Self> {
        let n = s.chars().count();
        check_n(n)?;
        let mut bits = 0u32;
        for (j, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1 << j,
                '0' => {}
                _ => return Err(Error::InvalidLabel(format!("bad bitstring `{s}`"))),
            }
        }
        Ok(SubsetMask { n, bits })
    }

    /// All subsets of `{1,…,n}` of the given size, ascending by mask value.
    pub fn all_of_size(n: usize, size: usize) -> Vec<SubsetMask> {
        (0..(1u64 << n))
            .map(|b| b as u32)
            .filter(|b| b.count_ones() as usize == size)
            .map(|bits| SubsetMask { n, bits })
            .collect()
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let els: Vec<String> = self.elements().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", els.join(","))
    }
}

/// An element of B_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        check_n(n)?;
        if signs.len() != n {
            return Err(Error::SizeMismatch(n, signs.len()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::IndexOutOfRange(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::IndexOutOfRange(format!("signs {signs:?} must be ±1")));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: (0..n).collect(), signs: vec![1; n] }
    }

    /// Unsigned permutation from 0-based one-line notation.
    pub fn from_permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![1; n])
    }

    /// The transposition `(ij)` with 1-based `i < j`.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Self> {
        check_n(n)?;
        if i == 0 || i >= j || j > n {
            return Err(Error::IndexOutOfRange(format!("transposition ({i} {j}) needs 1 <= i < j <= {n}")));
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i - 1, j - 1);
        Ok(SignedPermutation { perm, signs: vec![1; n] })
    }

    /// `s_A`: the diagonal matrix with `−1` exactly on `A`.
    pub fn diagonal(a: &SubsetMask) -> Self {
        let n = a.n();
        let signs = (0..n).map(|j| if a.bits() & (1 << j) != 0 { -1 } else { 1 }).collect();
        SignedPermutation { perm: (0..n).collect(), signs }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Row of the nonzero entry of each column (0-based).
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let signs = other.perm.iter().zip(&other.signs).map(|(&p, &s)| s * self.signs[p]).collect();
        Ok(SignedPermutation { perm, signs })
    }

    /// The transpose, which is the inverse for signed permutation matrices.
    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for j in 0..n {
            perm[self.perm[j]] = j;
            signs[self.perm[j]] = self.signs[j];
        }
        SignedPermutation { perm, signs }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &p)| p == j) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &p)| p == j)
    }

    pub fn is_unsigned(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    /// Factorization `g = s_A · π`; returns `A` and the one-line form of `π`.
    pub fn factor(&self) -> (SubsetMask, &[usize]) {
        let mut bits = 0u32;
        for (j, &s) in self.signs.iter().enumerate() {
            if s == -1 {
                bits |= 1 << self.perm[j];
            }
        }
        (SubsetMask::from_bits_unchecked(self.n(), bits), &self.perm)
    }

    /// Product of the nonzero entries.
    pub fn sign_product(&self) -> i8 {
        self.signs.iter().product()
    }

    /// Mask of the columns that carry a `−1`. Used as the secondary key of the
    /// enumeration order.
    pub fn column_sign_mask(&self) -> u32 {
        self.signs.iter().enumerate().filter(|(_, &s)| s == -1).fold(0, |m, (j, _)| m | (1 << j))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, (&p, &s)) in self.perm.iter().zip(&self.signs).enumerate() {
            if j > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", if s < 0 { "-" } else { "" }, p + 1)?;
        }
        write!(f, "]")
    }
}

pub fn compose(g: &SignedPermutation, h: &SignedPermutation) -> Result<SignedPermutation> {
    g.compose(h)
}

pub fn inverse(g: &SignedPermutation) -> SignedPermutation {
    g.inverse()
}

pub fn make_transposition(i: usize, j: usize, n: usize) -> Result<SignedPermutation> {
    SignedPermutation::transposition(i, j, n)
}

pub fn make_diagonal(a: &SubsetMask) -> SignedPermutation {
    SignedPermutation::diagonal(a)
}

/// Advances a slice to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

/// All `2^n · n!` elements, lexicographic by `perm`, then by column sign mask.
pub fn enumerate_group(n: usize) -> Result<Vec<SignedPermutation>> {
    check_n(n)?;
    if n > MAX_ENUMERATION_N {
        return Err(Error::GroupTooLarge(n, MAX_ENUMERATION_N));
    }
    let mut out = Vec::new();
    for perm in all_permutations(n) {
        for mask in 0u32..(1 << n) {
            let signs = (0..n).map(|j| if mask & (1 << j) != 0 { -1 } else { 1 }).collect();
            out.push(SignedPermutation { perm: perm.clone(), signs });
        }
    }
    Ok(out)
}

/// A finite real combination of elements of B_n.
///
/// Stored terms are nonzero. `symmetric_checked` records that every term `g`
/// has the same weight as `g^{-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupRingElement {
    n: usize,
    terms: BTreeMap<SignedPermutation, f64>,
    symmetric_checked: bool,
}

impl GroupRingElement {
    pub fn zero(n: usize) -> Self {
        GroupRingElement { n, terms: BTreeMap::new(), symmetric_checked: true }
    }

    /// Sums duplicate terms and drops zero weights. Weights may be negative.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SignedPermutation, f64)>,
    {
        check_n(n)?;
        let mut map: BTreeMap<SignedPermutation, f64> = BTreeMap::new();
        for (g, w) in terms {
            if g.n() != n {
                return Err(Error::SizeMismatch(n, g.n()));
            }
            *map.entry(g).or_insert(0.0) += w;
        }
        map.retain(|_, w| *w != 0.0);
        let mut e = GroupRingElement { n, terms: map, symmetric_checked: false };
        e.symmetric_checked = e.terms.iter().all(|(g, w)| e.weight(&g.inverse()) == *w);
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<SignedPermutation, f64> {
        &self.terms
    }

    pub fn weight(&self, g: &SignedPermutation) -> f64 {
        self.terms.get(g).copied().unwrap_or(0.0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric_checked
    }

    pub fn total_weight(&self) -> f64 {
        self.terms.values().sum()
    }

    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(SignedPermutation::is_diagonal)
    }

    /// Terms supported on `N_n`, keyed by subset.
    pub fn diagonal_weights(&self) -> BTreeMap<SubsetMask, f64> {
        self.terms
            .iter()
            .filter(|(g, _)| g.is_diagonal())
            .map(|(g, &w)| (g.factor().0, w))
            .collect()
    }

    pub fn diagonal_part(&self) -> GroupRingElement {
        self.filtered(|g| g.is_diagonal())
    }

    pub fn off_diagonal_part(&self) -> GroupRingElement {
        self.filtered(|g| !g.is_diagonal())
    }

    fn filtered(&self, keep: impl Fn(&SignedPermutation) -> bool) -> GroupRingElement {
        let terms: BTreeMap<_, _> =
            self.terms.iter().filter(|(g, _)| keep(g)).map(|(g, &w)| (g.clone(), w)).collect();
        let mut e = GroupRingElement { n: self.n, terms, symmetric_checked: false };
        e.symmetric_checked = e.terms.iter().all(|(g, w)| e.weight(&g.inverse()) == *w);
        e
    }

    /// `Σ w_s (1 − s)` as a group-ring element. The identity term cancels.
    pub fn laplacian_element(&self) -> GroupRingElement {
        let id = SignedPermutation::identity(self.n);
        let total: f64 = self.terms.iter().filter(|(g, _)| !g.is_identity()).map(|(_, w)| w).sum();
        let terms = self
            .terms
            .iter()
            .filter(|(g, _)| !g.is_identity())
            .map(|(g, &w)| (g.clone(), -w))
            .chain(std::iter::once((id, total)));
        GroupRingElement::from_terms(self.n, terms).expect("same n")
    }

    pub fn plus(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        GroupRingElement::from_terms(
            self.n,
            self.terms.iter().chain(other.terms.iter()).map(|(g, &w)| (g.clone(), w)),
        )
    }

    pub fn scaled(&self, c: f64) -> GroupRingElement {
        GroupRingElement::from_terms(self.n, self.terms.iter().map(|(g, &w)| (g.clone(), c * w)))
            .expect("same n")
    }
}

/// `w = Σ a_{ij} (ij) + Σ α_A s_A` with nonnegative weights; `(i, j)` are
/// 1-based with `i < j`.
pub fn build_weight_element<T, D>(n: usize, transposition_weights: T, diagonal_weights: D) -> Result<GroupRingElement>
where
    T: IntoIterator<Item = ((usize, usize), f64)>,
    D: IntoIterator<Item = (SubsetMask, f64)>,
{
    check_n(n)?;
    let mut terms = Vec::new();
    for ((i, j), w) in transposition_weights {
        if !(w >= 0.0) {
            return Err(Error::NegativeWeight(w));
        }
        terms.push((SignedPermutation::transposition(i, j, n)?, w));
    }
    for (a, w) in diagonal_weights {
        if !(w >= 0.0) {
            return Err(Error::NegativeWeight(w));
        }
        if a.n() != n {
            return Err(Error::SizeMismatch(n, a.n()));
        }
        terms.push((SignedPermutation::diagonal(&a), w));
    }
    let e = GroupRingElement::from_terms(n, terms)?;
    debug_assert!(e.is_symmetric());
    Ok(e)
}
