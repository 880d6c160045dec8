//! Irreducible representations of B_n.
//!
//! Every irrep is available through the induced construction
//! `Ind_{B_{n−m} × B_m}^{B_n} (V_{σ1} ⊠ (V_{σ2} ⊗ U))` with `m = |σ2|`: the
//! first factor acts on positions `1..=n−m` and carries `σ1` untwisted, the
//! second acts on `n−m+1..=n` and carries `σ2` twisted by the product of
//! signs `U`. Cosets are indexed by the `m`-subsets `A = ϑ_A({n−m+1,…,n})`.
//!
//! Two cheaper models are used where they apply: the subset representation
//! `V_n^i` for `([n−i],[i])` and the pullback of an S_n irrep for `(σ, ∅)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::group::{all_permutations, check_n, enumerate_group, SignedPermutation, SubsetMask, MAX_ENUMERATION_N};
use crate::partitions::{binomial, Bipartition, Partition, SnIrrep};

/// Dimension cap for any dense representation.
pub const MAX_DIMENSION: usize = 5000;

/// Largest `n` for the general induced construction.
pub const MAX_INDUCED_N: usize = 8;

/// Largest `n` for the regular representation.
pub const MAX_REGULAR_N: usize = 4;

/// Which representation a [`BnRepresentation`] models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepKind {
    /// `V_n^i`, isomorphic to `([n−i],[i])`.
    Vni(usize),
    /// `(σ, ∅)`, pulled back through `B_n → S_n`.
    Pullback(Partition),
    Induced(Bipartition),
    /// The permutation action on `{±e_1, …, ±e_n}`.
    Pn,
    Regular,
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepKind::Vni(i) => write!(f, "vni({i})"),
            RepKind::Pullback(p) => write!(f, "pullback({p})"),
            RepKind::Induced(b) => write!(f, "induced({b})"),
            RepKind::Pn => write!(f, "pn"),
            RepKind::Regular => write!(f, "regular"),
        }
    }
}

#[derive(Debug, Clone)]
struct SubsetIndex {
    basis: Vec<SubsetMask>,
    index: HashMap<u32, usize>,
}

impl SubsetIndex {
    fn new(n: usize, size: usize) -> Self {
        let basis = SubsetMask::all_of_size(n, size);
        let index = basis.iter().enumerate().map(|(k, s)| (s.bits(), k)).collect();
        SubsetIndex { basis, index }
    }

    fn position(&self, s: &SubsetMask) -> usize {
        self.index[&s.bits()]
    }
}

#[derive(Debug, Clone)]
struct InducedModel {
    /// size of the twisted block
    m: usize,
    cosets: SubsetIndex,
    /// one-line forms of ϑ_A and their inverses, in coset order
    thetas: Vec<Vec<usize>>,
    theta_invs: Vec<Vec<usize>>,
    first: Arc<SnIrrep>,
    second: Arc<SnIrrep>,
}

impl InducedModel {
    /// `h = ϑ_{A'}^{-1} g ϑ_A` where `A' = π(A)`; returns the index of `A'`.
    fn subgroup_element(&self, g: &SignedPermutation, a: usize) -> Result<(usize, Vec<usize>, Vec<i8>)> {
        let n = g.n();
        let a_img = self.cosets.basis[a].image(g.perm());
        let a2 = self.cosets.position(&a_img);
        let theta = &self.thetas[a];
        let theta_inv = &self.theta_invs[a2];
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for j in 0..n {
            let x = theta[j];
            perm[j] = theta_inv[g.perm()[x]];
            signs[j] = g.signs()[x];
        }
        let split = n - self.m;
        if (0..n).any(|j| (j < split) != (perm[j] < split)) {
            return Err(Error::Internal(format!("{g} does not map coset {a} into the block subgroup")));
        }
        Ok((a2, perm, signs))
    }

    fn block_parts(&self, perm: &[usize], signs: &[i8]) -> (Vec<usize>, Vec<usize>, f64) {
        let split = perm.len() - self.m;
        let p1 = perm[..split].to_vec();
        let p2 = perm[split..].iter().map(|&p| p - split).collect();
        let u: i8 = signs[split..].iter().product();
        (p1, p2, u as f64)
    }
}

#[derive(Debug, Clone)]
enum Model {
    Vni(SubsetIndex),
    Pullback(Arc<SnIrrep>),
    Induced(Box<InducedModel>),
    Pn,
    Regular { elements: Vec<SignedPermutation>, index: HashMap<SignedPermutation, usize> },
}

/// A finite-dimensional orthogonal representation of B_n, evaluated on
/// demand at group elements.
#[derive(Debug, Clone)]
pub struct BnRepresentation {
    n: usize,
    kind: RepKind,
    dimension: usize,
    model: Model,
}

fn coset_representative(a: &SubsetMask) -> Vec<usize> {
    let inside = a.elements();
    let outside = a.complement().elements();
    outside.iter().chain(inside.iter()).map(|e| e - 1).collect()
}

impl BnRepresentation {
    /// `V_n^i` on the basis of `i`-subsets, ascending by mask.
    pub fn vni(n: usize, i: usize) -> Result<Self> {
        check_n(n)?;
        if i > n {
            return Err(Error::IndexOutOfRange(format!("i = {i} exceeds n = {n}")));
        }
        let dimension = binomial(n as u64, i as u64) as usize;
        if dimension > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge(dimension, MAX_DIMENSION));
        }
        Ok(BnRepresentation { n, kind: RepKind::Vni(i), dimension, model: Model::Vni(SubsetIndex::new(n, i)) })
    }

    pub fn pullback(sigma: &Partition) -> Result<Self> {
        let n = sigma.size();
        check_n(n)?;
        let rep = SnIrrep::shared(sigma);
        if rep.dimension() > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge(rep.dimension(), MAX_DIMENSION));
        }
        Ok(BnRepresentation { n, kind: RepKind::Pullback(sigma.clone()), dimension: rep.dimension(), model: Model::Pullback(rep) })
    }

    pub fn induced(label: &Bipartition) -> Result<Self> {
        let n = label.n();
        check_n(n)?;
        if n > MAX_INDUCED_N {
            return Err(Error::UnsupportedN(n, MAX_INDUCED_N));
        }
        let dim = label.dimension();
        if dim > MAX_DIMENSION as u128 {
            return Err(Error::DimensionTooLarge(dim.min(usize::MAX as u128) as usize, MAX_DIMENSION));
        }
        let m = label.second.size();
        let cosets = SubsetIndex::new(n, m);
        let thetas: Vec<Vec<usize>> = cosets.basis.iter().map(|a| coset_representative(a)).collect();
        let theta_invs = thetas
            .iter()
            .map(|t| {
                let mut inv = vec![0; n];
                for (j, &x) in t.iter().enumerate() {
                    inv[x] = j;
                }
                inv
            })
            .collect();
        let model = InducedModel {
            m,
            cosets,
            thetas,
            theta_invs,
            first: SnIrrep::shared(&label.first),
            second: SnIrrep::shared(&label.second),
        };
        Ok(BnRepresentation { n, kind: RepKind::Induced(label.clone()), dimension: dim as usize, model: Model::Induced(Box::new(model)) })
    }

    /// The cheapest model available for an irrep label.
    pub fn for_label(label: &Bipartition) -> Result<Self> {
        if let Some(i) = label.two_row_index() {
            BnRepresentation::vni(label.n(), i)
        } else if label.second.is_empty() {
            BnRepresentation::pullback(&label.first)
        } else {
            BnRepresentation::induced(label)
        }
    }

    /// The `2n`-dimensional representation: `B_n` permuting `{±e_j}`.
    pub fn pn(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(BnRepresentation { n, kind: RepKind::Pn, dimension: 2 * n, model: Model::Pn })
    }

    /// Left-multiplication on `ℝ[B_n]`, basis in [`enumerate_group`] order.
    pub fn regular(n: usize) -> Result<Self> {
        if n > MAX_REGULAR_N {
            return Err(Error::UnsupportedN(n, MAX_REGULAR_N));
        }
        let elements = enumerate_group(n)?;
        let index = elements.iter().enumerate().map(|(k, g)| (g.clone(), k)).collect();
        Ok(BnRepresentation { n, kind: RepKind::Regular, dimension: elements.len(), model: Model::Regular { elements, index } })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &RepKind {
        &self.kind
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The irrep label, when the representation is irreducible.
    pub fn label(&self) -> Option<Bipartition> {
        match &self.kind {
            RepKind::Vni(i) => Some(Bipartition::two_rows(self.n, *i)),
            RepKind::Pullback(p) => Some(Bipartition { first: p.clone(), second: Partition::empty() }),
            RepKind::Induced(b) => Some(b.clone()),
            RepKind::Pn | RepKind::Regular => None,
        }
    }

    /// Basis subsets of a `V_n^i` model.
    pub fn subset_basis(&self) -> Option<&[SubsetMask]> {
        match &self.model {
            Model::Vni(idx) => Some(&idx.basis),
            _ => None,
        }
    }

    fn check(&self, g: &SignedPermutation) -> Result<()> {
        if g.n() != self.n {
            return Err(Error::SizeMismatch(self.n, g.n()));
        }
        Ok(())
    }

    pub fn evaluate(&self, g: &SignedPermutation) -> Result<DMatrix<f64>> {
        self.check(g)?;
        let d = self.dimension;
        let mut m = DMatrix::zeros(d, d);
        match &self.model {
            Model::Vni(idx) => {
                let (a, perm) = g.factor();
                for (col, b) in idx.basis.iter().enumerate() {
                    let image = b.image(perm);
                    m[(idx.position(&image), col)] = a.character(&image);
                }
            }
            Model::Pullback(rep) => {
                m = rep.rep_matrix(g.perm())?;
            }
            Model::Induced(ind) => {
                let block = ind.first.dimension() * ind.second.dimension();
                for a in 0..ind.cosets.basis.len() {
                    let (a2, perm, signs) = ind.subgroup_element(g, a)?;
                    let (p1, p2, u) = ind.block_parts(&perm, &signs);
                    let b = ind.first.rep_matrix(&p1)?.kronecker(&ind.second.rep_matrix(&p2)?) * u;
                    m.view_mut((a2 * block, a * block), (block, block)).copy_from(&b);
                }
            }
            Model::Pn => {
                let n = self.n;
                for j in 0..n {
                    m[(g.perm()[j], j)] = 1.0;
                    m[(n + g.perm()[j], n + j)] = g.signs()[j] as f64;
                }
            }
            Model::Regular { elements, index } => {
                for (col, h) in elements.iter().enumerate() {
                    m[(index[&g.compose(h)?], col)] = 1.0;
                }
            }
        }
        Ok(m)
    }

    /// Trace of [`evaluate`](Self::evaluate), computed from diagonal blocks only.
    pub fn character(&self, g: &SignedPermutation) -> Result<f64> {
        self.check(g)?;
        Ok(match &self.model {
            Model::Vni(idx) => {
                let (a, perm) = g.factor();
                idx.basis.iter().filter(|b| b.image(perm) == **b).map(|b| a.character(b)).sum()
            }
            Model::Pullback(rep) => rep.character(g.perm())?,
            Model::Induced(ind) => {
                let mut total = 0.0;
                for a in 0..ind.cosets.basis.len() {
                    if ind.cosets.basis[a].image(g.perm()) != ind.cosets.basis[a] {
                        continue;
                    }
                    let (_, perm, signs) = ind.subgroup_element(g, a)?;
                    let (p1, p2, u) = ind.block_parts(&perm, &signs);
                    total += ind.first.character(&p1)? * ind.second.character(&p2)? * u;
                }
                total
            }
            Model::Pn => (0..self.n)
                .filter(|&j| g.perm()[j] == j)
                .map(|j| 1.0 + g.signs()[j] as f64)
                .sum(),
            Model::Regular { elements, .. } => {
                if g.is_identity() {
                    elements.len() as f64
                } else {
                    0.0
                }
            }
        })
    }
}

pub fn vni_matrix(n: usize, i: usize, g: &SignedPermutation) -> Result<DMatrix<f64>> {
    BnRepresentation::vni(n, i)?.evaluate(g)
}

/// The one-dimensional character `U`: product of the nonzero entries.
pub fn sign_rep_value(g: &SignedPermutation) -> i8 {
    g.sign_product()
}

pub fn pullback_rep(sigma: &Partition) -> Result<BnRepresentation> {
    BnRepresentation::pullback(sigma)
}

pub fn induced_rep(label: &Bipartition) -> Result<BnRepresentation> {
    BnRepresentation::induced(label)
}

/// Character of the irrep `label`, through the induced construction.
pub fn bn_character(label: &Bipartition, g: &SignedPermutation) -> Result<f64> {
    BnRepresentation::induced(label)?.character(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subgroup {
    /// Permutation matrices.
    Sn,
    /// Diagonal `±1` matrices.
    Nn,
}

pub fn subgroup_elements(n: usize, subgroup: Subgroup) -> Vec<SignedPermutation> {
    match subgroup {
        Subgroup::Sn => all_permutations(n)
            .into_iter()
            .map(|p| SignedPermutation::from_permutation(p).expect("valid permutation"))
            .collect(),
        Subgroup::Nn => (0u32..(1 << n))
            .map(|b| SignedPermutation::diagonal(&SubsetMask::from_bits_unchecked(n, b)))
            .collect(),
    }
}

/// Multiplicity of the trivial character of `subgroup` in the restriction of
/// `label`: `(1/|H|) Σ_{h∈H} χ(h)`, which must be an integer.
pub fn trivial_multiplicity_on_subgroup(label: &Bipartition, subgroup: Subgroup) -> Result<usize> {
    let n = label.n();
    if n > MAX_ENUMERATION_N {
        return Err(Error::GroupTooLarge(n, MAX_ENUMERATION_N));
    }
    let rep = BnRepresentation::induced(label)?;
    let elements = subgroup_elements(n, subgroup);
    let mut sum = 0.0;
    for h in &elements {
        sum += rep.character(h)?;
    }
    let value = sum / elements.len() as f64;
    let rounded = value.round();
    let residual = (value - rounded).abs();
    if residual >= 1e-6 || rounded < 0.0 {
        return Err(Error::NonIntegralMultiplicity { value, residual });
    }
    Ok(rounded as usize)
}

/// Irreducible components of `P_n`.
pub fn pn_components(n: usize) -> Result<Vec<Bipartition>> {
    Ok(vec![Bipartition::standard(n)?, Bipartition::two_rows(n, 1), Bipartition::trivial(n)])
}

/// `F_n = {([n−1,1],∅)} ∪ {([n−k],[k]) : 1 ≤ k ≤ n}`, in that order.
pub fn family(n: usize) -> Result<Vec<Bipartition>> {
    let mut out = vec![Bipartition::standard(n)?];
    out.extend((1..=n).map(|k| Bipartition::two_rows(n, k)));
    Ok(out)
}

pub fn in_family(label: &Bipartition) -> bool {
    let n = label.n();
    matches!(label.two_row_index(), Some(k) if k >= 1)
        || (n >= 2 && Bipartition::standard(n).map(|s| &s == label).unwrap_or(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_diagonal, make_transposition};
    use crate::partitions::enumerate_bipartitions;

    #[test]
    fn vni_examples() {
        let id = SignedPermutation::identity(4);
        assert_eq!(vni_matrix(4, 2, &id).unwrap(), DMatrix::identity(6, 6));
        let s1 = make_diagonal(&SubsetMask::from_elements(4, &[1]).unwrap());
        let rep = BnRepresentation::vni(4, 2).unwrap();
        let m = rep.evaluate(&s1).unwrap();
        let basis = rep.subset_basis().unwrap();
        let k = basis.iter().position(|b| b.elements() == vec![1, 2]).unwrap();
        assert_eq!(m[(k, k)], -1.0);
    }

    #[test]
    fn sign_values() {
        assert_eq!(sign_rep_value(&SignedPermutation::identity(3)), 1);
        let a = SubsetMask::from_elements(4, &[1, 2, 4]).unwrap();
        assert_eq!(sign_rep_value(&make_diagonal(&a)), -1);
        let pi = SignedPermutation::from_permutation(vec![2, 0, 1, 3]).unwrap();
        assert_eq!(sign_rep_value(&pi), 1);
    }

    #[test]
    fn pullback_kills_diagonal() {
        let rep = pullback_rep(&Partition::new(vec![2, 1, 1]).unwrap()).unwrap();
        for b in 0u32..16 {
            let s = make_diagonal(&SubsetMask::new(4, b).unwrap());
            assert_eq!(rep.evaluate(&s).unwrap(), DMatrix::identity(3, 3));
        }
        let triv = pullback_rep(&Partition::row(4)).unwrap();
        let g = SignedPermutation::new(vec![1, 3, 0, 2], vec![-1, 1, 1, -1]).unwrap();
        assert_eq!(triv.evaluate(&g).unwrap(), DMatrix::from_element(1, 1, 1.0));
        for n in 3..7 {
            let std = pullback_rep(&Partition::hook_standard(n).unwrap()).unwrap();
            let t = make_transposition(2, n, n).unwrap();
            assert!((std.character(&t).unwrap() - (n as f64 - 3.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn induced_trivial_is_one_dimensional() {
        let rep = induced_rep(&Bipartition::trivial(4)).unwrap();
        assert_eq!(rep.dimension(), 1);
        for g in enumerate_group(3).unwrap() {
            let r = induced_rep(&Bipartition::trivial(3)).unwrap();
            assert_eq!(r.evaluate(&g).unwrap(), DMatrix::from_element(1, 1, 1.0));
        }
    }

    #[test]
    fn character_of_twisted_standard() {
        for n in 2..7 {
            let s1 = make_diagonal(&SubsetMask::from_elements(n, &[1]).unwrap());
            let chi = bn_character(&Bipartition::two_rows(n, 1), &s1).unwrap();
            assert!((chi - (n as f64 - 2.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn character_equals_trace() {
        for label in enumerate_bipartitions(3) {
            let rep = induced_rep(&label).unwrap();
            for g in enumerate_group(3).unwrap() {
                let m = rep.evaluate(&g).unwrap();
                assert!((m.trace() - rep.character(&g).unwrap()).abs() < 1e-12);
            }
        }
        let pn = BnRepresentation::pn(3).unwrap();
        for g in enumerate_group(3).unwrap() {
            assert!((pn.evaluate(&g).unwrap().trace() - pn.character(&g).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn identity_character_is_dimension() {
        for label in enumerate_bipartitions(4) {
            let chi = bn_character(&label, &SignedPermutation::identity(4)).unwrap();
            assert_eq!(chi, label.dimension() as f64);
        }
    }

    #[test]
    fn pn_component_examples() {
        let c = pn_components(3).unwrap();
        assert_eq!(c.iter().map(|b| b.to_string()).collect::<Vec<_>>(), vec!["[2,1]|[]", "[2]|[1]", "[3]|[]"]);
        let c2 = pn_components(2).unwrap();
        assert_eq!(c2[0].to_string(), "[1,1]|[]");
        for n in 2..7 {
            let total: u128 = pn_components(n).unwrap().iter().map(|b| b.dimension()).sum();
            assert_eq!(total, 2 * n as u128);
        }
    }

    #[test]
    fn family_membership() {
        let f = family(4).unwrap();
        assert_eq!(f.len(), 5);
        assert!(f.iter().all(in_family));
        assert!(!in_family(&Bipartition::trivial(4)));
        assert!(!in_family(&"[2,1]|[1]".parse().unwrap()));
        assert!(in_family(&"[]|[4]".parse().unwrap()));
    }

    #[test]
    fn multiplicity_guards() {
        let label: Bipartition = "[4,3]|[]".parse().unwrap();
        assert!(matches!(trivial_multiplicity_on_subgroup(&label, Subgroup::Sn), Err(Error::GroupTooLarge(7, 6))));
        assert_eq!(trivial_multiplicity_on_subgroup(&Bipartition::trivial(3), Subgroup::Sn).unwrap(), 1);
        assert_eq!(trivial_multiplicity_on_subgroup(&Bipartition::trivial(3), Subgroup::Nn).unwrap(), 1);
    }

    #[test]
    fn size_checks() {
        let rep = BnRepresentation::vni(3, 1).unwrap();
        assert!(rep.evaluate(&SignedPermutation::identity(4)).is_err());
        assert!(BnRepresentation::regular(5).is_err());
        assert!(BnRepresentation::induced(&"[5]|[4]".parse().unwrap()).is_err());
    }
}
