//! Explicit witnesses showing that every member of `F_n` is needed, the
//! counterexample to the `P_n` conjecture, and randomized checks that the
//! gap always comes from `F_n`.
//!
//! # Random weights
//!
//! Trial `t` of a run with seed `s` draws from a SplitMix64 stream seeded with
//! `sub_seed(s, t)`, which is output `t` (0-based) of a SplitMix64 stream
//! seeded with `s`. A uniform draw is `(x >> 11) · 2^-53` for the next 64-bit
//! output `x`. Weights are drawn in this order: `a_{ij}` for `i < j` in
//! lexicographic order, then `α_A` for nonempty `A` by ascending mask (only
//! odd `|A|` in odd-only mode). In sparse mode each weight is followed by one
//! more draw `z`, and the weight is set to 0 when `z < p`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use nalgebra::DVector;
use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{build_weight_element, GroupRingElement, SubsetMask, MAX_ENUMERATION_N};
use crate::partitions::{binomial, Bipartition, Partition};
use crate::reps::{in_family, BnRepresentation};
use crate::spectral::{
    argmin, diagonal_fourier_psi, family_table, laplacian, nontrivial_labels, psi_family, psi_global, psi_irrep,
    psi_pn, psi_table, tolerance,
};

/// How a witness was built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// Targets `([n−k],[k])`.
    TwoRow { k: usize },
    /// Targets `([n−1,1],∅)`.
    Standard,
    Custom,
}

/// Weights of `w = w_T + w_N^-` together with the irrep it is built to
/// single out.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessSpec {
    pub n: usize,
    pub target: Bipartition,
    pub kind: WitnessKind,
    pub transposition_weights: BTreeMap<(usize, usize), f64>,
    pub diagonal_weights: BTreeMap<SubsetMask, f64>,
    pub note: String,
}

impl WitnessSpec {
    pub fn element(&self) -> Result<GroupRingElement> {
        build_weight_element(
            self.n,
            self.transposition_weights.iter().map(|(&k, &v)| (k, v)),
            self.diagonal_weights.iter().map(|(&k, &v)| (k, v)),
        )
    }

    pub fn diagonal_element(&self) -> Result<GroupRingElement> {
        build_weight_element(self.n, [], self.diagonal_weights.iter().map(|(&k, &v)| (k, v)))
    }

    /// Every diagonal term sits on a set of odd size.
    pub fn has_odd_support(&self) -> bool {
        self.diagonal_weights.keys().all(|a| a.len() % 2 == 1)
    }
}

fn all_pairs(n: usize, weight: f64) -> BTreeMap<(usize, usize), f64> {
    (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| ((i, j), weight))).collect()
}

/// `U = {S : |S| odd, |S ∩ {1,…,k}| even}`.
pub fn odd_even_collection(n: usize, k: usize) -> Result<Vec<SubsetMask>> {
    let a = SubsetMask::initial_segment(n, k)?;
    Ok((0u32..(1 << n))
        .map(|b| SubsetMask::new(n, b).expect("in range"))
        .filter(|s| s.len() % 2 == 1 && s.intersection_len(&a) % 2 == 0)
        .collect())
}

/// Witness for `([n−k],[k])`: weight 4 on each `S ∈ U` and `2^n / n` on every
/// transposition.
///
/// For `k = n` the collection `U` is empty; that case is reported as an
/// error rather than patched.
pub fn witness_vnk(n: usize, k: usize) -> Result<WitnessSpec> {
    if n < 2 || k == 0 || k > n {
        return Err(Error::Precondition(format!("witness_vnk needs n >= 2 and 1 <= k <= n, got n = {n}, k = {k}")));
    }
    let u = odd_even_collection(n, k)?;
    let expected = 1usize << (n - 2);
    if u.len() != expected {
        return Err(Error::Internal(format!(
            "|U| = {} but 2^(n-2) = {expected} for n = {n}, k = {k}{}",
            u.len(),
            if k == n { " (every odd S meets A = B in an odd set, so U is empty)" } else { "" }
        )));
    }
    let scale = (1u64 << n) as f64 / n as f64;
    Ok(WitnessSpec {
        n,
        target: Bipartition::two_rows(n, k),
        kind: WitnessKind::TwoRow { k },
        transposition_weights: all_pairs(n, scale),
        diagonal_weights: u.into_iter().map(|s| (s, 4.0)).collect(),
        note: format!("w_N = 4 * sum over odd S with even |S & {{1..{k}}}|; w_T = 2^n/n * complete graph"),
    })
}

/// Witness for `([n−1,1],∅)`: weight `n` on each singleton, 1 on every
/// transposition.
pub fn witness_std(n: usize) -> Result<WitnessSpec> {
    if n < 2 {
        return Err(Error::Precondition(format!("witness_std needs n >= 2, got {n}")));
    }
    let diagonal_weights = (1..=n).map(|i| (SubsetMask::from_elements(n, &[i]).expect("in range"), n as f64)).collect();
    Ok(WitnessSpec {
        n,
        target: Bipartition::standard(n)?,
        kind: WitnessKind::Standard,
        transposition_weights: all_pairs(n, 1.0),
        diagonal_weights,
        note: "w_N = n * sum of singletons; w_T = complete graph".into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Less,
    GreaterEq,
    Equal,
    Greater,
}

impl Relation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::GreaterEq => ">=",
            Relation::Equal => "==",
            Relation::Greater => ">",
        }
    }
}

/// One asserted relation `lhs <rel> rhs` with its tolerance.
///
/// `margin` is `rhs − lhs` for `<`, `lhs − rhs` for `>` and `>=`, and
/// `|lhs − rhs|` for `==`. Strict relations pass when `margin > tol`, `>=`
/// when `margin >= −tol`, `==` when `margin <= tol`.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub lhs: f64,
    pub relation: Relation,
    pub rhs: f64,
    pub tolerance: f64,
    pub margin: f64,
    pub passed: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, lhs: f64, relation: Relation, rhs: f64, tolerance: f64) -> Self {
        let (margin, passed) = match relation {
            Relation::Less => (rhs - lhs, rhs - lhs > tolerance),
            Relation::Greater => (lhs - rhs, lhs - rhs > tolerance),
            Relation::GreaterEq => (lhs - rhs, lhs - rhs >= -tolerance),
            Relation::Equal => ((lhs - rhs).abs(), (lhs - rhs).abs() <= tolerance),
        };
        Check { name: name.into(), lhs, relation, rhs, tolerance, margin, passed }
    }

    /// An exact yes/no fact, recorded as `1 == 1` or `0 == 1`.
    pub fn exact(name: impl Into<String>, holds: bool) -> Self {
        Check::new(name, if holds { 1.0 } else { 0.0 }, Relation::Equal, 1.0, 0.0)
    }
}

/// Outcome of one randomized trial.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub index: usize,
    pub sub_seed: u64,
    pub psi_global: f64,
    pub global_argmin: Bipartition,
    pub psi_family: f64,
    pub family_argmin: Bipartition,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub title: String,
    pub n: usize,
    pub seed: Option<u64>,
    pub psi_table: Vec<(String, f64)>,
    pub checks: Vec<Check>,
    pub trials: Vec<TrialRecord>,
    pub notes: Vec<String>,
    pub wall_time: Duration,
}

impl VerificationReport {
    fn new(title: impl Into<String>, n: usize) -> Self {
        VerificationReport {
            title: title.into(),
            n,
            seed: None,
            psi_table: Vec::new(),
            checks: Vec::new(),
            trials: Vec::new(),
            notes: Vec::new(),
            wall_time: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn psi(&self, label: &str) -> Option<f64> {
        self.psi_table.iter().find(|(l, _)| l == label).map(|(_, v)| *v)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// `⟨Δ(w)v, v⟩ / ⟨v, v⟩` for `v = Σ_{|S|=k} S` in `V_n^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct RayleighCertificate {
    pub numerator: f64,
    pub norm_squared: f64,
    pub quotient: f64,
    /// `2^n` if `2k = n`, else `2^n (1 − 1/C(n,k))`: the numerator is
    /// `2^n ⟨v − A, v⟩ = 2^n (C(n,k) − 1)` because `⟨A, v⟩ = 1`.
    pub expected_quotient: f64,
    /// Angle between `Δ(w)v` and `v`, in radians.
    pub defect_angle: f64,
}

pub fn rayleigh_certificate(spec: &WitnessSpec) -> Result<RayleighCertificate> {
    let WitnessKind::TwoRow { k } = spec.kind else {
        return Err(Error::Precondition("Rayleigh certificate needs a two-row witness".into()));
    };
    let n = spec.n;
    let rep = BnRepresentation::vni(n, k)?;
    let delta = laplacian(&rep, &spec.element()?)?;
    let v = DVector::from_element(rep.dimension(), 1.0);
    let dv = delta.matrix() * &v;
    let numerator = dv.dot(&v);
    let norm_squared = v.dot(&v);
    let cos = numerator / (dv.norm() * v.norm());
    let two_n = (1u64 << n) as f64;
    Ok(RayleighCertificate {
        numerator,
        norm_squared,
        quotient: numerator / norm_squared,
        expected_quotient: if 2 * k == n { two_n } else { two_n * (1.0 - 1.0 / binomial(n as u64, k as u64) as f64) },
        defect_angle: cos.clamp(-1.0, 1.0).acos(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparationMode {
    /// Every nontrivial irrep (n ≤ 6).
    Exhaustive,
    /// `F_n` explicitly; everything else through the lower bound
    /// `ψ(w, τ) ≥ ψ(w, ([n−1,1],∅))` for `τ ∉ F_n`.
    FamilyWithBound,
}

/// Exhaustive for `n ≤ 6`, family mode above.
pub fn verify_separation(spec: &WitnessSpec) -> Result<VerificationReport> {
    let mode = if spec.n <= MAX_ENUMERATION_N { SeparationMode::Exhaustive } else { SeparationMode::FamilyWithBound };
    verify_separation_with(spec, mode)
}

pub fn verify_separation_with(spec: &WitnessSpec, mode: SeparationMode) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = spec.n;
    let w = spec.element()?;
    let mut report = VerificationReport::new(format!("separation of {} at n = {n}", spec.target), n);
    report.notes.push(spec.note.clone());
    let table = match mode {
        SeparationMode::Exhaustive => psi_table(&w, &nontrivial_labels(n))?,
        SeparationMode::FamilyWithBound => family_table(&w)?,
    };
    let target_psi = table
        .iter()
        .find(|(l, _)| *l == spec.target)
        .map(|(_, g)| g.psi)
        .ok_or_else(|| Error::Precondition(format!("target {} is not a nontrivial label of n = {n}", spec.target)))?;
    let tol = tolerance(target_psi);
    report.psi_table = table.iter().map(|(l, g)| (l.to_string(), g.psi)).collect();
    for (label, gap) in &table {
        if *label != spec.target {
            report.checks.push(Check::new(
                format!("psi({}) < psi({label})", spec.target),
                target_psi,
                Relation::Less,
                gap.psi,
                tol,
            ));
        }
    }

    if mode == SeparationMode::FamilyWithBound {
        let std = Bipartition::standard(n)?;
        if spec.target != std {
            report.notes.push(format!(
                "labels outside F_n: psi >= psi({std}) > psi({}) (conditional on the lower bound for labels outside F_n)",
                spec.target
            ));
        } else {
            // the F_n bound only gives >=, so tie candidates (tau1, ∅) are computed
            for tau1 in crate::partitions::enumerate_partitions(n).into_iter().skip(2) {
                let label = Bipartition { first: tau1, second: Partition::empty() };
                let psi = psi_irrep(&w, &label)?.psi;
                report.psi_table.push((label.to_string(), psi));
                report.checks.push(Check::new(format!("psi({std}) < psi({label})"), target_psi, Relation::Less, psi, tol));
            }
            let wn = spec.diagonal_element()?;
            let floor = (1..=n)
                .map(|i| diagonal_fourier_psi(&wn, n, i).map(|g| g.psi))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .fold(f64::INFINITY, f64::min);
            report.checks.push(Check::new(
                format!("psi({std}) < min_i psi(w_N, V_n^i)"),
                target_psi,
                Relation::Less,
                floor,
                tol,
            ));
            report.notes.push("labels with nonempty second diagram bounded below by min_i psi(w_N, V_n^i)".into());
        }
    }

    if let WitnessKind::TwoRow { k } = spec.kind {
        let cert = rayleigh_certificate(spec)?;
        let two_n = (1u64 << n) as f64;
        report.checks.push(Check::new(
            format!("rayleigh quotient of v in V_{n}^{k}"),
            cert.quotient,
            Relation::Equal,
            cert.expected_quotient,
            tolerance(cert.expected_quotient),
        ));
        report.checks.push(Check::new("norm of v equals C(n,k)", cert.norm_squared, Relation::Equal, binomial(n as u64, k as u64) as f64, 0.0));
        report.checks.push(Check::new("defect angle of v", cert.defect_angle, Relation::Greater, 1e-6, 0.0));
        report.checks.push(Check::new(format!("psi({}) < 2^n", spec.target), target_psi, Relation::Less, two_n, tol));
        if let Some(std_psi) = report.psi(&Bipartition::standard(n)?.to_string()) {
            report.checks.push(Check::new(
                format!("psi({}) >= 2^n", Bipartition::standard(n)?),
                std_psi,
                Relation::GreaterEq,
                two_n,
                tolerance(two_n),
            ));
        }
    }
    if spec.kind != WitnessKind::Custom {
        report.checks.push(Check::exact("diagonal support has odd size", spec.has_odd_support()));
    }
    if report.psi_table.iter().all(|(_, p)| p.abs() <= 1e-9) {
        report.notes.push("no strict minimum; all psi = 0".into());
    }
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Checks `ψ(w) < ψ(w, P_n)` for the witness of `([n−k],[k])`.
pub fn cesi_counterexample(n: usize, k: usize) -> Result<VerificationReport> {
    if n < 3 {
        return Err(Error::Precondition(format!("the counterexample needs n >= 3, got {n}")));
    }
    if k == 1 {
        return Err(Error::Precondition(format!(
            "k = 1 targets ([{}],[1]), which is itself a component of P_n, so it cannot separate psi(w) from psi(w, P_n); use 2 <= k <= n-1",
            n - 1
        )));
    }
    if k < 2 || k >= n {
        return Err(Error::Precondition(format!("need 2 <= k <= n-1, got k = {k} at n = {n}")));
    }
    let start = Instant::now();
    let spec = witness_vnk(n, k)?;
    let w = spec.element()?;
    let mut report = VerificationReport::new(format!("P_n conjecture at n = {n}, k = {k}"), n);
    report.notes.push(spec.note.clone());
    let (global, global_label) = if n <= MAX_ENUMERATION_N {
        psi_global(&w, n)?
    } else {
        report.notes.push("psi(w) taken over F_n (n > 6)".into());
        psi_family(&w, n)?
    };
    let (pn, pn_label) = psi_pn(&w)?;
    report.psi_table.push((format!("global argmin {global_label}"), global.psi));
    report.psi_table.push((format!("P_n argmin {pn_label}"), pn.psi));
    report.checks.push(Check::exact("diagonal support has odd size", spec.has_odd_support()));
    report.checks.push(Check::exact(format!("argmin is {}", spec.target), global_label == spec.target));
    report.checks.push(Check::new("psi(w) < psi(w, P_n)", global.psi, Relation::Less, pn.psi, tolerance(global.psi)));
    report.wall_time = start.elapsed();
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TrialOptions {
    pub odd_only: bool,
    /// Probability of zeroing each weight.
    pub sparse: Option<f64>,
}

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Output `t` of SplitMix64 seeded with `seed`.
pub fn sub_seed(seed: u64, trial: usize) -> u64 {
    SplitMix64::seed_from_u64(seed.wrapping_add((trial as u64).wrapping_mul(GOLDEN_GAMMA))).next_u64()
}

fn uniform(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Draws `(a_{ij}, α_A)` for one trial, in the documented order.
pub fn random_weights(
    n: usize,
    sub_seed: u64,
    options: TrialOptions,
) -> (BTreeMap<(usize, usize), f64>, BTreeMap<SubsetMask, f64>) {
    let mut rng = SplitMix64::seed_from_u64(sub_seed);
    let draw = |rng: &mut SplitMix64| {
        let x = uniform(rng);
        match options.sparse {
            Some(p) if uniform(rng) < p => 0.0,
            _ => x,
        }
    };
    let mut t = BTreeMap::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            t.insert((i, j), draw(&mut rng));
        }
    }
    let mut d = BTreeMap::new();
    for bits in 1u32..(1 << n) {
        if options.odd_only && bits.count_ones() % 2 == 0 {
            continue;
        }
        d.insert(SubsetMask::new(n, bits).expect("in range"), draw(&mut rng));
    }
    (t, d)
}

fn run_trial(n: usize, index: usize, seed: u64, options: TrialOptions) -> Result<(TrialRecord, Vec<Check>)> {
    let sub = sub_seed(seed, index);
    let (t, d) = random_weights(n, sub, options);
    let w = build_weight_element(n, t, d)?;
    let table = psi_table(&w, &nontrivial_labels(n))?;
    let (global, global_label) = argmin(&table).expect("nonempty");
    let (family, family_label) = psi_family(&w, n)?;
    let std_label = Bipartition::standard(n)?;
    let std_psi = table.iter().find(|(l, _)| *l == std_label).expect("standard label").1.psi;
    let outside = table
        .iter()
        .filter(|(l, _)| !in_family(l))
        .map(|(_, g)| g.psi)
        .fold(f64::INFINITY, f64::min);
    let mut checks = vec![Check::new(
        format!("trial {index}: psi(w) == min over F_n"),
        global.psi,
        Relation::Equal,
        family.psi,
        1e-9 * (1.0 + global.psi.abs()),
    )];
    if outside.is_finite() {
        checks.push(Check::new(
            format!("trial {index}: min outside F_n >= psi({std_label})"),
            outside,
            Relation::GreaterEq,
            std_psi,
            1e-9,
        ));
    }
    let record = TrialRecord {
        index,
        sub_seed: sub,
        psi_global: global.psi,
        global_argmin: global_label,
        psi_family: family.psi,
        family_argmin: family_label,
        passed: checks.iter().all(|c| c.passed),
    };
    Ok((record, checks))
}

/// Random nonnegative weights, checking that the gap over all irreps equals
/// the gap over `F_n` and that every label outside `F_n` sits above
/// `([n−1,1],∅)`.
pub fn randomized_main_theorem_trial(
    n: usize,
    seed: u64,
    trials: usize,
    options: TrialOptions,
) -> Result<VerificationReport> {
    if !(2..=5).contains(&n) {
        return Err(Error::Precondition(format!("randomized trials need 2 <= n <= 5, got {n}")));
    }
    if let Some(p) = options.sparse {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Precondition(format!("sparse probability {p} not in [0, 1]")));
        }
    }
    let start = Instant::now();
    let mut report = VerificationReport::new(
        format!(
            "main theorem, n = {n}, {} sets{}",
            if options.odd_only { "odd" } else { "all" },
            options.sparse.map(|p| format!(", sparse {p}")).unwrap_or_default()
        ),
        n,
    );
    report.seed = Some(seed);
    let results = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(n, t, seed, options))
        .collect::<Result<Vec<_>>>()?;
    for (record, checks) in results {
        report.trials.push(record);
        report.checks.extend(checks);
    }
    let passed = report.trials.iter().filter(|t| t.passed).count();
    report.notes.push(format!("{passed}/{trials} trials passed"));
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Coefficients of `4 δ_U` in the characters `χ_∅, χ_A, χ_B, χ_{B∖A}`,
/// checked pointwise on every `D ⊆ B`. Coinciding sets have their
/// coefficients summed and zeros dropped.
pub fn hypercube_indicator_decomposition(n: usize, k: usize) -> Result<BTreeMap<SubsetMask, f64>> {
    if k == 0 || k > n {
        return Err(Error::Precondition(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let a = SubsetMask::initial_segment(n, k)?;
    let b = SubsetMask::full(n);
    let mut coefficients = BTreeMap::new();
    for (set, c) in [(SubsetMask::empty(n), 1.0), (a, 1.0), (b, -1.0), (b.symmetric_difference(&a), -1.0)] {
        *coefficients.entry(set).or_insert(0.0) += c;
    }
    coefficients.retain(|_, c| *c != 0.0);
    let u: std::collections::HashSet<SubsetMask> = odd_even_collection(n, k)?.into_iter().collect();
    for bits in 0u32..(1 << n) {
        let d = SubsetMask::new(n, bits)?;
        let lhs = if u.contains(&d) { 4.0 } else { 0.0 };
        let rhs: f64 = coefficients.iter().map(|(c, coef)| coef * c.character(&d)).sum();
        if lhs != rhs {
            return Err(Error::Internal(format!("4·δ_U({d}) = {lhs} but the character sum is {rhs}")));
        }
    }
    Ok(coefficients)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_3_2_collection() {
        let spec = witness_vnk(3, 2).unwrap();
        let sets: Vec<Vec<usize>> = spec.diagonal_weights.keys().map(|s| s.elements()).collect();
        assert_eq!(sets, vec![vec![3], vec![1, 2, 3]]);
        assert!(spec.diagonal_weights.values().all(|&w| w == 4.0));
        assert!(spec.transposition_weights.values().all(|&w| w == 8.0 / 3.0));
        assert!(spec.has_odd_support());
    }

    #[test]
    fn witness_k_equals_n_is_reported() {
        assert!(odd_even_collection(4, 4).unwrap().is_empty());
        match witness_vnk(4, 4) {
            Err(Error::Internal(msg)) => assert!(msg.contains("|U| = 0")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn witness_sizes() {
        for n in 2..9 {
            for k in 1..n {
                let spec = witness_vnk(n, k).unwrap();
                assert_eq!(spec.diagonal_weights.len(), 1 << (n - 2));
                assert!(spec.has_odd_support());
            }
            assert!(witness_std(n).unwrap().has_odd_support());
        }
        assert!(witness_vnk(3, 0).is_err());
        assert!(witness_std(1).is_err());
    }

    #[test]
    fn empty_spec_has_no_strict_minimum() {
        let spec = WitnessSpec {
            n: 3,
            target: Bipartition::standard(3).unwrap(),
            kind: WitnessKind::Custom,
            transposition_weights: BTreeMap::new(),
            diagonal_weights: BTreeMap::new(),
            note: "empty".into(),
        };
        let r = verify_separation(&spec).unwrap();
        assert!(!r.passed());
        assert!(r.notes.iter().any(|n| n == "no strict minimum; all psi = 0"));
    }

    #[test]
    fn cesi_guards() {
        let e = cesi_counterexample(3, 1).unwrap_err();
        assert!(e.to_string().contains("component of P_n"));
        assert!(cesi_counterexample(3, 3).is_err());
        assert!(cesi_counterexample(2, 1).is_err());
    }

    #[test]
    fn indicator_decomposition() {
        let c = hypercube_indicator_decomposition(4, 2).unwrap();
        let expect: Vec<(u32, f64)> = vec![(0, 1.0), (0b0011, 1.0), (0b1100, -1.0), (0b1111, -1.0)];
        let got: Vec<(u32, f64)> = c.iter().map(|(s, &v)| (s.bits(), v)).collect();
        assert_eq!(got, expect);
        for n in 1..8 {
            for k in 1..=n {
                hypercube_indicator_decomposition(n, k).unwrap();
            }
        }
    }

    #[test]
    fn zero_trials() {
        let r = randomized_main_theorem_trial(3, 1, 0, TrialOptions::default()).unwrap();
        assert!(r.trials.is_empty() && r.checks.is_empty() && r.passed());
        assert!(randomized_main_theorem_trial(6, 1, 1, TrialOptions::default()).is_err());
    }

    #[test]
    fn draws_are_reproducible() {
        let o = TrialOptions { odd_only: true, sparse: None };
        assert_eq!(random_weights(4, sub_seed(7, 3), o), random_weights(4, sub_seed(7, 3), o));
        let (_, d) = random_weights(4, 11, o);
        assert!(d.keys().all(|a| a.len() % 2 == 1));
        assert_eq!(d.len(), 8);
        // splitmix64 reference values for state 0
        let mut r = SplitMix64::seed_from_u64(0);
        assert_eq!(r.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(sub_seed(0, 1), 0x6e789e6aa1b965f4);
    }
}
