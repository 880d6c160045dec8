//! Laplacians `Δ(w) = Σ w_s (1 − s)` in representations of B_n and their
//! smallest eigenvalues.
//!
//! `ψ(w, σ)` for a nontrivial irrep `σ` is the smallest eigenvalue of
//! `σ(Δ(w))` (nontrivial irreps have no invariant vectors). `ψ(w)` is the
//! minimum over all nontrivial irreps.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

use crate::eigen::jacobi_eigen;
use crate::error::{Error, Result};
use crate::group::{check_n, GroupRingElement, SubsetMask, MAX_ENUMERATION_N};
use crate::partitions::{enumerate_bipartitions, Bipartition};
use crate::reps::{family, pn_components, BnRepresentation, MAX_REGULAR_N};

/// Absolute slack for equality and strict-inequality checks: `1e-9 · max(1, |ψ|)`.
pub fn tolerance(psi: f64) -> f64 {
    1e-9 * psi.abs().max(1.0)
}

/// A dense symmetric matrix, exactly symmetric by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix(DMatrix<f64>);

impl SymmetricMatrix {
    /// Symmetrizes `(M + Mᵀ) / 2`.
    pub fn from_matrix(m: DMatrix<f64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::SizeMismatch(m.nrows(), m.ncols()));
        }
        let t = m.transpose();
        Ok(SymmetricMatrix((m + t) * 0.5))
    }

    pub fn order(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.0
    }
}

/// Smallest eigenvalue of a Laplacian block.
#[derive(Debug, Clone, PartialEq)]
pub struct GapValue {
    pub psi: f64,
    pub argmin_vector: Option<DVector<f64>>,
    /// Number of eigenvalues within [`tolerance`] of `psi`.
    pub multiplicity_hint: usize,
}

/// `ê(S)` for every `S ⊆ {1,…,n}`, indexed by mask.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierTable {
    n: usize,
    values: Vec<f64>,
}

impl FourierTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, s: &SubsetMask) -> f64 {
        self.values[s.bits() as usize]
    }
}

/// Matrix of `Δ(w)` in `rep`.
pub fn laplacian(rep: &BnRepresentation, w: &GroupRingElement) -> Result<SymmetricMatrix> {
    if !w.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if rep.n() != w.n() {
        return Err(Error::SizeMismatch(rep.n(), w.n()));
    }
    let d = rep.dimension();
    let mut m = DMatrix::zeros(d, d);
    for (g, &weight) in w.terms() {
        if g.is_identity() {
            continue;
        }
        let image = rep.evaluate(g)?;
        m -= image * weight;
        for k in 0..d {
            m[(k, k)] += weight;
        }
    }
    SymmetricMatrix::from_matrix(m)
}

/// Smallest eigenvalue by cyclic Jacobi, with its eigenvector.
pub fn min_eigenvalue(m: &SymmetricMatrix) -> Result<GapValue> {
    let e = jacobi_eigen(m.matrix(), true)?;
    let (k, psi) = e
        .values
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::INFINITY), |(bk, bv), (k, v)| if v < bv { (k, v) } else { (bk, bv) });
    let tol = tolerance(psi);
    let multiplicity_hint = e.values.iter().filter(|&&v| (v - psi).abs() <= tol).count();
    let vectors = e.vectors.expect("requested");
    Ok(GapValue { psi, argmin_vector: Some(vectors.column(k).into_owned()), multiplicity_hint })
}

/// `ψ(w, label)`, using the subset model for `([n−i],[i])`, the pullback for
/// `(σ, ∅)` and induction otherwise.
pub fn psi_irrep(w: &GroupRingElement, label: &Bipartition) -> Result<GapValue> {
    if label.n() != w.n() {
        return Err(Error::SizeMismatch(label.n(), w.n()));
    }
    if label.is_trivial() {
        return Err(Error::TrivialIrrep);
    }
    let rep = BnRepresentation::for_label(label)?;
    min_eigenvalue(&laplacian(&rep, w)?)
}

/// `ψ(w, label)` for each label, in input order. Labels are evaluated in
/// parallel on the current rayon pool.
pub fn psi_table(w: &GroupRingElement, labels: &[Bipartition]) -> Result<Vec<(Bipartition, GapValue)>> {
    labels
        .par_iter()
        .map(|l| psi_irrep(w, l).map(|g| (l.clone(), g)))
        .collect()
}

/// Minimum of a table; ties go to the earliest label.
pub fn argmin(table: &[(Bipartition, GapValue)]) -> Option<(GapValue, Bipartition)> {
    let mut best: Option<&(Bipartition, GapValue)> = None;
    for entry in table {
        if best.map_or(true, |b| entry.1.psi < b.1.psi) {
            best = Some(entry);
        }
    }
    best.map(|(l, g)| (g.clone(), l.clone()))
}

/// All nontrivial irrep labels of B_n in enumeration order.
pub fn nontrivial_labels(n: usize) -> Vec<Bipartition> {
    enumerate_bipartitions(n).into_iter().filter(|b| !b.is_trivial()).collect()
}

/// `ψ(w)` over the full irrep catalogue.
pub fn psi_global(w: &GroupRingElement, n: usize) -> Result<(GapValue, Bipartition)> {
    if w.n() != n {
        return Err(Error::SizeMismatch(n, w.n()));
    }
    if n < 2 || n > MAX_ENUMERATION_N {
        return Err(Error::UnsupportedN(n, MAX_ENUMERATION_N));
    }
    let table = psi_table(w, &nontrivial_labels(n))?;
    Ok(argmin(&table).expect("n >= 2 has nontrivial irreps"))
}

/// `Δ(w)` on `V_n^i`, with the diagonal part taken from the Fourier table.
fn vni_laplacian_fast(w: &GroupRingElement, i: usize, table: &FourierTable) -> Result<SymmetricMatrix> {
    let rep = BnRepresentation::vni(w.n(), i)?;
    let mut m = laplacian(&rep, &w.off_diagonal_part())?.into_matrix();
    for (k, s) in rep.subset_basis().expect("vni model").iter().enumerate() {
        m[(k, k)] += table.get(s);
    }
    SymmetricMatrix::from_matrix(m)
}

/// `ψ(w, σ)` for every `σ ∈ F_n`, in [`family`] order.
pub fn family_table(w: &GroupRingElement) -> Result<Vec<(Bipartition, GapValue)>> {
    if !w.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = w.n();
    let table = laplacian_fourier(&w.diagonal_part())?;
    family(n)?
        .into_par_iter()
        .map(|label| {
            let gap = match label.two_row_index() {
                Some(i) => min_eigenvalue(&vni_laplacian_fast(w, i, &table)?)?,
                None => psi_irrep(w, &label)?,
            };
            Ok((label, gap))
        })
        .collect()
}

/// Minimum over `F_n`.
pub fn psi_family(w: &GroupRingElement, n: usize) -> Result<(GapValue, Bipartition)> {
    if w.n() != n {
        return Err(Error::SizeMismatch(n, w.n()));
    }
    check_n(n)?;
    let table = family_table(w)?;
    Ok(argmin(&table).expect("F_n is nonempty"))
}

/// Minimum over the nontrivial components of `P_n`.
pub fn psi_pn(w: &GroupRingElement) -> Result<(GapValue, Bipartition)> {
    let labels: Vec<Bipartition> = pn_components(w.n())?.into_iter().filter(|b| !b.is_trivial()).collect();
    let table = psi_table(w, &labels)?;
    Ok(argmin(&table).expect("two components"))
}

/// `ê(S) = Σ_D (−1)^{|S∩D|} a_D` by the in-place Walsh–Hadamard butterfly.
pub fn fourier_transform_diagonal(e: &GroupRingElement) -> Result<FourierTable> {
    let n = e.n();
    check_n(n)?;
    if !e.is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    let size = 1usize << n;
    let mut values = vec![0.0; size];
    for (a, w) in e.diagonal_weights() {
        values[a.bits() as usize] += w;
    }
    let mut h = 1;
    while h < size {
        for start in (0..size).step_by(2 * h) {
            for i in start..start + h {
                let (x, y) = (values[i], values[i + h]);
                values[i] = x + y;
                values[i + h] = x - y;
            }
        }
        h *= 2;
    }
    Ok(FourierTable { n, values })
}

/// Fourier transform of `Δ(e)` for diagonal `e`.
pub fn laplacian_fourier(e: &GroupRingElement) -> Result<FourierTable> {
    if !e.is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    fourier_transform_diagonal(&e.laplacian_element())
}

/// `ψ(w_N, ([n−i],[i])) = min_{|S|=i} Δ(w_N)^(S)` for diagonal `w_N`.
pub fn diagonal_fourier_psi(w_n: &GroupRingElement, n: usize, i: usize) -> Result<GapValue> {
    if w_n.n() != n {
        return Err(Error::SizeMismatch(n, w_n.n()));
    }
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange(format!("i = {i} not in 1..={n}")));
    }
    let table = laplacian_fourier(w_n)?;
    let values: Vec<f64> = SubsetMask::all_of_size(n, i).iter().map(|s| table.get(s)).collect();
    let psi = values.iter().copied().fold(f64::INFINITY, f64::min);
    let tol = tolerance(psi);
    let multiplicity_hint = values.iter().filter(|&&v| (v - psi).abs() <= tol).count();
    Ok(GapValue { psi, argmin_vector: None, multiplicity_hint })
}

/// Brute force on the regular representation: the smallest eigenvalue of the
/// Cayley-graph Laplacian with the constant vector deflated by a rank-one
/// shift.
pub fn cayley_oracle_psi(w: &GroupRingElement, n: usize) -> Result<GapValue> {
    if w.n() != n {
        return Err(Error::SizeMismatch(n, w.n()));
    }
    if n > MAX_REGULAR_N {
        return Err(Error::UnsupportedN(n, MAX_REGULAR_N));
    }
    let rep = BnRepresentation::regular(n)?;
    let mut m = laplacian(&rep, w)?.into_matrix();
    let order = rep.dimension();
    // ‖Δ‖ ≤ 2 Σ|w_s|, so the shifted constant vector sits above the spectrum
    let shift = 2.0 * w.terms().values().map(|x| x.abs()).sum::<f64>() + 1.0;
    m.add_scalar_mut(shift / order as f64);
    let e = jacobi_eigen(&m, false)?;
    let psi = e.values.iter().copied().fold(f64::INFINITY, f64::min);
    let tol = tolerance(psi);
    let multiplicity_hint = e.values.iter().filter(|&&v| (v - psi).abs() <= tol).count();
    Ok(GapValue { psi, argmin_vector: None, multiplicity_hint })
}

/// `ψ_{S_n}(w, λ)` for `w` supported on permutations, through the pullback.
pub fn psi_sn(w: &GroupRingElement, lambda: &crate::partitions::Partition) -> Result<GapValue> {
    if w.terms().keys().any(|g| !g.is_unsigned()) {
        return Err(Error::Precondition("element must be supported on S_n".into()));
    }
    if lambda.size() != w.n() {
        return Err(Error::SizeMismatch(lambda.size(), w.n()));
    }
    if lambda.parts().len() <= 1 {
        return Err(Error::TrivialIrrep);
    }
    min_eigenvalue(&laplacian(&BnRepresentation::pullback(lambda)?, w)?)
}

/// `Σ_{i<j} (ij)` with unit weights.
pub fn complete_graph(n: usize) -> Result<GroupRingElement> {
    let pairs = (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| ((i, j), 1.0)));
    crate::group::build_weight_element(n, pairs, [])
}
