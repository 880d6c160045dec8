//! Young diagrams, bipartitions, and Young's orthogonal form for the
//! irreducible representations of S_n.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. The empty list is the
/// partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidLabel(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `[m]`, or `[]` for `m = 0`.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![m] }
        }
    }

    /// `[m−1, 1]` for `m ≥ 2`.
    pub fn hook_standard(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Precondition(format!("[m-1,1] needs m >= 2, got {m}")));
        }
        Ok(Partition { parts: vec![m - 1, 1] })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Cells as `(row, column)` pairs, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Column lengths (the conjugate partition).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidLabel(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidLabel(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidLabel(s.to_string()));
        }
        Partition::new(parts).map_err(|_| Error::InvalidLabel(s.to_string()))
    }
}

/// A pair of Young diagrams labelling an irrep of B_n; the second diagram
/// carries the sign twist.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Result<Self> {
        if first.size() + second.size() == 0 {
            return Err(Error::InvalidLabel("bipartition of 0".into()));
        }
        Ok(Bipartition { first, second })
    }

    pub fn n(&self) -> usize {
        self.first.size() + self.second.size()
    }

    /// `([n], ∅)`.
    pub fn trivial(n: usize) -> Self {
        Bipartition { first: Partition::row(n), second: Partition::empty() }
    }

    pub fn is_trivial(&self) -> bool {
        self.second.is_empty() && self.first.parts().len() == 1
    }

    /// `([n−k], [k])`.
    pub fn two_rows(n: usize, k: usize) -> Self {
        Bipartition { first: Partition::row(n - k), second: Partition::row(k) }
    }

    /// `([n−1, 1], ∅)`.
    pub fn standard(n: usize) -> Result<Self> {
        Ok(Bipartition { first: Partition::hook_standard(n)?, second: Partition::empty() })
    }

    /// If the label is `([n−k], [k])`, returns `k`.
    pub fn two_row_index(&self) -> Option<usize> {
        let one_row = |p: &Partition| p.parts().len() <= 1;
        (one_row(&self.first) && one_row(&self.second)).then(|| self.second.size())
    }

    pub fn dimension(&self) -> u128 {
        binomial(self.n() as u64, self.second.size() as u64) as u128
            * dimension(&self.first)
            * dimension(&self.second)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once('|').ok_or_else(|| Error::InvalidLabel(s.to_string()))?;
        Bipartition::new(a.parse()?, b.parse()?)
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// All partitions of `m` in reverse-lexicographic order (`[m]` first).
pub fn enumerate_partitions(m: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// All bipartitions of `n`, grouped by `|σ1|` descending; the trivial label
/// `([n], ∅)` comes first.
pub fn enumerate_bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for i in (0..=n).rev() {
        let seconds = enumerate_partitions(n - i);
        for first in enumerate_partitions(i) {
            for second in &seconds {
                out.push(Bipartition { first: first.clone(), second: second.clone() });
            }
        }
    }
    out
}

/// Number of standard Young tableaux, by the hook length formula.
pub fn dimension(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let n = lambda.size() as u128;
    let mut num: u128 = (1..=n).product();
    let mut den: u128 = 1;
    for (r, c) in lambda.cells() {
        let hook = (lambda.parts()[r] - c - 1) + (conj.parts()[c] - r - 1) + 1;
        den *= hook as u128;
        // keep the numbers small
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    StrictlyGreater,
    Equal,
    StrictlyLess,
    Incomparable,
}

/// Dominance comparison by prefix sums.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<Dominance> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let len = lambda.parts().len().max(mu.parts().len());
    let (mut sa, mut sb) = (0usize, 0usize);
    let (mut ge, mut le) = (true, true);
    for i in 0..len {
        sa += lambda.parts().get(i).copied().unwrap_or(0);
        sb += mu.parts().get(i).copied().unwrap_or(0);
        ge &= sa >= sb;
        le &= sa <= sb;
    }
    Ok(match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::StrictlyGreater,
        (false, true) => Dominance::StrictlyLess,
        (false, false) => Dominance::Incomparable,
    })
}

/// Action of the adjacent transposition `(i, i+1)` (0-based `i`) in Young's
/// orthogonal form: each basis tableau maps to `diag · T + off · partner`.
#[derive(Debug, Clone)]
struct AdjacentGenerator {
    diag: Vec<f64>,
    partner: Vec<Option<(usize, f64)>>,
}

/// An orthogonal irreducible representation of S_n in Young's orthogonal
/// form. Basis: standard tableaux, each stored as the row index of every
/// entry `0..n`.
#[derive(Debug, Clone)]
pub struct SnIrrep {
    lambda: Partition,
    tableaux: Vec<Vec<u8>>,
    generators: Vec<AdjacentGenerator>,
}

fn standard_tableaux(lambda: &Partition) -> Vec<Vec<u8>> {
    fn rec(lambda: &[usize], fill: &mut Vec<usize>, rows: &mut Vec<u8>, left: usize, out: &mut Vec<Vec<u8>>) {
        if left == 0 {
            out.push(rows.clone());
            return;
        }
        for r in 0..lambda.len() {
            let can = fill[r] < lambda[r] && (r == 0 || fill[r - 1] > fill[r]);
            if can {
                fill[r] += 1;
                rows.push(r as u8);
                rec(lambda, fill, rows, left - 1, out);
                rows.pop();
                fill[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut fill = vec![0; lambda.parts().len()];
    rec(lambda.parts(), &mut fill, &mut Vec::new(), lambda.size(), &mut out);
    out
}

impl SnIrrep {
    pub fn new(lambda: &Partition) -> Self {
        let n = lambda.size();
        let tableaux = standard_tableaux(lambda);
        let index: HashMap<&[u8], usize> = tableaux.iter().enumerate().map(|(k, t)| (t.as_slice(), k)).collect();
        // contents c − r of each entry in each tableau
        let contents: Vec<Vec<i64>> = tableaux
            .iter()
            .map(|rows| {
                let mut fill = vec![0i64; lambda.parts().len()];
                rows.iter()
                    .map(|&r| {
                        let c = fill[r as usize];
                        fill[r as usize] += 1;
                        c - r as i64
                    })
                    .collect()
            })
            .collect();
        let mut generators = Vec::with_capacity(n.saturating_sub(1));
        for i in 0..n.saturating_sub(1) {
            let mut diag = Vec::with_capacity(tableaux.len());
            let mut partner = Vec::with_capacity(tableaux.len());
            for (k, rows) in tableaux.iter().enumerate() {
                let axial = (contents[k][i + 1] - contents[k][i]) as f64;
                diag.push(1.0 / axial);
                if axial.abs() == 1.0 {
                    partner.push(None);
                } else {
                    let mut swapped = rows.clone();
                    swapped.swap(i, i + 1);
                    let other = index[swapped.as_slice()];
                    partner.push(Some((other, (1.0 - 1.0 / (axial * axial)).sqrt())));
                }
            }
            generators.push(AdjacentGenerator { diag, partner });
        }
        SnIrrep { lambda: lambda.clone(), tableaux, generators }
    }

    /// Shared, lazily built instance per shape.
    pub fn shared(lambda: &Partition) -> Arc<SnIrrep> {
        static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<SnIrrep>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(rep) = cache.read().expect("cache poisoned").get(lambda) {
            return rep.clone();
        }
        let rep = Arc::new(SnIrrep::new(lambda));
        cache.write().expect("cache poisoned").entry(lambda.clone()).or_insert(rep).clone()
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn degree(&self) -> usize {
        self.lambda.size()
    }

    pub fn dimension(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Vec<u8>] {
        &self.tableaux
    }

    /// Dense matrix of the adjacent transposition `(i+1, i+2)`, 0-based `i`.
    pub fn generator_matrix(&self, i: usize) -> DMatrix<f64> {
        let mut m = DMatrix::identity(self.dimension(), self.dimension());
        self.apply_generator(i, &mut m);
        m
    }

    // m ← G_i · m
    fn apply_generator(&self, i: usize, m: &mut DMatrix<f64>) {
        let g = &self.generators[i];
        let old = m.clone();
        let cols = m.ncols();
        for t in 0..self.dimension() {
            // row t of G_i has entries diag[t] at t and off at partner(t)
            for c in 0..cols {
                let mut v = g.diag[t] * old[(t, c)];
                if let Some((p, off)) = g.partner[t] {
                    v += off * old[(p, c)];
                }
                m[(t, c)] = v;
            }
        }
    }

    /// Image of a 0-based one-line permutation. The permutation is sorted by
    /// bubble sort; the recorded adjacent swaps `j1, …, jk` give
    /// `π = s_{jk} ⋯ s_{j1}`.
    pub fn rep_matrix(&self, perm: &[usize]) -> Result<DMatrix<f64>> {
        if perm.len() != self.degree() {
            return Err(Error::SizeMismatch(self.degree(), perm.len()));
        }
        let mut w = perm.to_vec();
        let mut m = DMatrix::identity(self.dimension(), self.dimension());
        let n = w.len();
        loop {
            let mut swapped = false;
            for j in 0..n.saturating_sub(1) {
                if w[j] > w[j + 1] {
                    w.swap(j, j + 1);
                    self.apply_generator(j, &mut m);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        Ok(m)
    }

    pub fn character(&self, perm: &[usize]) -> Result<f64> {
        Ok(self.rep_matrix(perm)?.trace())
    }
}

pub fn rep_matrix(lambda: &Partition, perm: &[usize]) -> Result<DMatrix<f64>> {
    SnIrrep::shared(lambda).rep_matrix(perm)
}

pub fn sn_character(lambda: &Partition, perm: &[usize]) -> Result<f64> {
    SnIrrep::shared(lambda).character(perm)
}

/// `χ_λ((12)) / d_λ`, by trace.
pub fn character_ratio(lambda: &Partition) -> Result<f64> {
    let n = lambda.size();
    if n < 2 {
        return Err(Error::Precondition(format!("character ratio needs |λ| >= 2, got {n}")));
    }
    let mut t: Vec<usize> = (0..n).collect();
    t.swap(0, 1);
    let rep = SnIrrep::shared(lambda);
    Ok(rep.character(&t)? / rep.dimension() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(6).len(), 11);
        assert_eq!(enumerate_partitions(4)[0], p(&[4]));
        assert_eq!(enumerate_partitions(4)[1], p(&[3, 1]));
        assert_eq!(enumerate_partitions(4)[4], p(&[1, 1, 1, 1]));
    }

    #[test]
    fn bipartition_counts() {
        let b1 = enumerate_bipartitions(1);
        assert_eq!(b1.len(), 2);
        assert_eq!(b1[0], Bipartition::trivial(1));
        assert_eq!(b1[1].to_string(), "[]|[1]");
        assert_eq!(enumerate_bipartitions(2).len(), 5);
        assert_eq!(enumerate_bipartitions(5).len(), 36);
        assert!(enumerate_bipartitions(5)[0].is_trivial());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&p(&[5])), 1);
        for n in 2..9 {
            assert_eq!(dimension(&Partition::hook_standard(n).unwrap()), (n - 1) as u128);
        }
        assert_eq!(dimension(&p(&[2, 1])), 2);
        assert_eq!(dimension(&p(&[3, 2, 1])), 16);
        assert_eq!(dimension(&Partition::empty()), 1);
    }

    #[test]
    fn dominance_examples() {
        for n in 2..8 {
            for l in enumerate_partitions(n).into_iter().skip(1) {
                assert_eq!(dominates(&Partition::row(n), &l).unwrap(), Dominance::StrictlyGreater);
            }
            let std = Partition::hook_standard(n).unwrap();
            for l in enumerate_partitions(n).into_iter().skip(2) {
                assert_eq!(dominates(&std, &l).unwrap(), Dominance::StrictlyGreater);
            }
        }
        assert_eq!(dominates(&p(&[3, 3]), &p(&[4, 1, 1])).unwrap(), Dominance::Incomparable);
        assert_eq!(dominates(&p(&[2, 1]), &p(&[2, 1])).unwrap(), Dominance::Equal);
        assert!(dominates(&p(&[2]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn ratio_examples() {
        assert!((character_ratio(&p(&[4])).unwrap() - 1.0).abs() < 1e-12);
        assert!((character_ratio(&p(&[1, 1, 1, 1])).unwrap() + 1.0).abs() < 1e-12);
        for n in 4..7 {
            let r = character_ratio(&Partition::hook_standard(n).unwrap()).unwrap();
            assert!((r - (n as f64 - 3.0) / (n as f64 - 1.0)).abs() < 1e-12);
        }
        assert!(character_ratio(&p(&[1])).is_err());
    }

    #[test]
    fn identity_and_trivial_images() {
        let lam = p(&[3, 2]);
        let id: Vec<usize> = (0..5).collect();
        let m = rep_matrix(&lam, &id).unwrap();
        assert_eq!(m, DMatrix::identity(5, 5));
        let m = rep_matrix(&p(&[4]), &[2, 0, 3, 1]).unwrap();
        assert_eq!(m, DMatrix::from_element(1, 1, 1.0));
        assert!(rep_matrix(&lam, &[0, 1]).is_err());
    }

    #[test]
    fn standard_character_on_transposition() {
        for n in 3..8 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            let chi = sn_character(&Partition::hook_standard(n).unwrap(), &t).unwrap();
            assert!((chi - (n as f64 - 3.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn label_syntax() {
        let b: Bipartition = "[3,1]|[2]".parse().unwrap();
        assert_eq!(b.n(), 6);
        assert_eq!(b.to_string(), "[3,1]|[2]");
        let e: Bipartition = "[]|[1,1]".parse().unwrap();
        assert_eq!(e.first, Partition::empty());
        assert!("[1,3]|[]".parse::<Bipartition>().is_err());
        assert!("[]|[]".parse::<Bipartition>().is_err());
        assert!("[2,0]|[]".parse::<Bipartition>().is_err());
        assert!("3,1|2".parse::<Bipartition>().is_err());
        assert_eq!(Bipartition::two_rows(4, 2).two_row_index(), Some(2));
        assert_eq!(Bipartition::standard(4).unwrap().two_row_index(), None);
    }
}
