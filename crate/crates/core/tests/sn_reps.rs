use bngap::partitions::{
    character_ratio, dimension, dominates, enumerate_partitions, rep_matrix, Dominance, Partition, SnIrrep,
};
use nalgebra::DMatrix;
use proptest::prelude::*;

/// Standard tableaux counted by removing corner cells.
fn count_tableaux(parts: &[usize]) -> u128 {
    if parts.iter().sum::<usize>() == 0 {
        return 1;
    }
    let mut total = 0;
    for r in 0..parts.len() {
        let is_corner = parts[r] > 0 && (r + 1 == parts.len() || parts[r + 1] < parts[r]);
        if is_corner {
            let mut smaller = parts.to_vec();
            smaller[r] -= 1;
            total += count_tableaux(&smaller);
        }
    }
    total
}

fn close(a: &DMatrix<f64>, b: &DMatrix<f64>, tol: f64) -> bool {
    (a - b).abs().max() <= tol
}

#[test]
fn hook_length_matches_tableau_count() {
    for m in 1..=8 {
        for lambda in enumerate_partitions(m) {
            let expected = count_tableaux(lambda.parts());
            assert_eq!(dimension(&lambda), expected, "{lambda}");
            assert_eq!(SnIrrep::new(&lambda).dimension() as u128, expected, "{lambda}");
        }
    }
}

#[test]
fn sum_of_squared_dimensions_is_factorial() {
    for m in 1..=8u128 {
        let sum: u128 = enumerate_partitions(m as usize).iter().map(|l| dimension(l).pow(2)).sum();
        assert_eq!(sum, (1..=m).product::<u128>());
    }
}

#[test]
fn coxeter_relations() {
    for m in 2..=7 {
        for lambda in enumerate_partitions(m) {
            let rep = SnIrrep::new(&lambda);
            let d = rep.dimension();
            let id = DMatrix::<f64>::identity(d, d);
            let s: Vec<DMatrix<f64>> = (0..m - 1).map(|i| rep.generator_matrix(i)).collect();
            for i in 0..m - 1 {
                assert!(close(&(&s[i] * &s[i]), &id, 1e-12), "{lambda}: s{i}^2");
                assert!(close(&s[i], &s[i].transpose(), 1e-15), "{lambda}: s{i} symmetric");
                if i + 1 < m - 1 {
                    let b = &s[i] * &s[i + 1];
                    assert!(close(&(&b * &b * &b), &id, 1e-12), "{lambda}: braid {i}");
                }
                for j in (i + 2)..m - 1 {
                    assert!(close(&(&s[i] * &s[j]), &(&s[j] * &s[i]), 1e-12), "{lambda}: commute {i} {j}");
                }
            }
        }
    }
}

/// `Σ_i [λ_i² − (2i − 1) λ_i] / (n(n − 1))`.
fn ratio_formula(lambda: &Partition) -> f64 {
    let n = lambda.size() as f64;
    let s: f64 = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &l)| (l * l) as f64 - (2 * i + 1) as f64 * l as f64)
        .sum();
    s / (n * (n - 1.0))
}

#[test]
fn character_ratio_matches_closed_form() {
    for m in 2..=8 {
        for lambda in enumerate_partitions(m) {
            let r = character_ratio(&lambda).unwrap();
            assert!((r - ratio_formula(&lambda)).abs() < 1e-12, "{lambda}: {r}");
        }
    }
}

#[test]
fn dominance_is_strictly_monotone_for_ratios() {
    for m in 2..=8 {
        let parts = enumerate_partitions(m);
        for a in &parts {
            for b in &parts {
                match dominates(a, b).unwrap() {
                    Dominance::StrictlyGreater => assert!(ratio_formula(a) > ratio_formula(b), "{a} {b}"),
                    Dominance::Equal => assert_eq!(a, b),
                    Dominance::StrictlyLess => assert_eq!(dominates(b, a).unwrap(), Dominance::StrictlyGreater),
                    Dominance::Incomparable => assert_eq!(dominates(b, a).unwrap(), Dominance::Incomparable),
                }
            }
        }
    }
}

fn partition_and_perms() -> impl Strategy<Value = (Partition, Vec<usize>, Vec<usize>)> {
    (2usize..=6).prop_flat_map(|m| {
        let parts = enumerate_partitions(m);
        let perm = Just((0..m).collect::<Vec<usize>>());
        (prop::sample::select(parts), perm.clone().prop_shuffle(), perm.prop_shuffle())
    })
}

proptest! {
    #[test]
    fn homomorphism_and_orthogonality((lambda, p, q) in partition_and_perms()) {
        let pq: Vec<usize> = q.iter().map(|&j| p[j]).collect();
        let (a, b, ab) = (rep_matrix(&lambda, &p).unwrap(), rep_matrix(&lambda, &q).unwrap(), rep_matrix(&lambda, &pq).unwrap());
        prop_assert!(close(&ab, &(&a * &b), 1e-10));
        let d = a.nrows();
        prop_assert!(close(&(a.transpose() * &a), &DMatrix::identity(d, d), 1e-10));
    }
}
