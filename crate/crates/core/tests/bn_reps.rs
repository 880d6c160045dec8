use bngap::group::{enumerate_group, SignedPermutation};
use bngap::partitions::{enumerate_bipartitions, Bipartition, Partition};
use bngap::reps::{family, in_family, pn_components, BnRepresentation};
use nalgebra::DMatrix;
use proptest::prelude::*;

fn character_table(n: usize) -> (Vec<Bipartition>, Vec<Vec<f64>>) {
    let group = enumerate_group(n).unwrap();
    let labels = enumerate_bipartitions(n);
    let table = labels
        .iter()
        .map(|l| {
            let rep = BnRepresentation::induced(l).unwrap();
            group.iter().map(|g| rep.character(g).unwrap()).collect()
        })
        .collect();
    (labels, table)
}

#[test]
fn characters_are_orthonormal() {
    for n in 1..=5 {
        let (labels, table) = character_table(n);
        let order = table[0].len() as f64;
        for (i, a) in table.iter().enumerate() {
            for (j, b) in table.iter().enumerate() {
                let ip: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>() / order;
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((ip - expected).abs() < 1e-9, "<{}, {}> = {ip}", labels[i], labels[j]);
            }
        }
    }
}

#[test]
fn special_models_agree_with_induction() {
    for n in 1..=5 {
        let group = enumerate_group(n).unwrap();
        let mut models: Vec<(BnRepresentation, Bipartition)> =
            (1..=n).map(|i| (BnRepresentation::vni(n, i).unwrap(), Bipartition::two_rows(n, i))).collect();
        for sigma in bngap::partitions::enumerate_partitions(n) {
            let label = Bipartition { first: sigma.clone(), second: Partition::empty() };
            models.push((BnRepresentation::pullback(&sigma).unwrap(), label));
        }
        for (model, label) in models {
            let induced = BnRepresentation::induced(&label).unwrap();
            assert_eq!(model.dimension(), induced.dimension());
            for g in &group {
                let (a, b) = (model.character(g).unwrap(), induced.character(g).unwrap());
                assert!((a - b).abs() < 1e-9, "{label} at {g}: {a} vs {b}");
                assert!((a - model.evaluate(g).unwrap().trace()).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn pn_splits_into_its_components() {
    for n in 2..=5 {
        let pn = BnRepresentation::pn(n).unwrap();
        assert_eq!(pn.dimension(), 2 * n);
        let components: Vec<BnRepresentation> =
            pn_components(n).unwrap().iter().map(|l| BnRepresentation::induced(l).unwrap()).collect();
        for g in enumerate_group(n).unwrap() {
            let sum: f64 = components.iter().map(|c| c.character(&g).unwrap()).sum();
            assert!((pn.character(&g).unwrap() - sum).abs() < 1e-9);
        }
    }
}

#[test]
fn dimensions() {
    for n in 1..=6u128 {
        let sum: u128 = enumerate_bipartitions(n as usize).iter().map(|l| l.dimension().pow(2)).sum();
        assert_eq!(sum, (1u128 << n) * (1..=n).product::<u128>());
        for l in enumerate_bipartitions(n as usize).iter().filter(|l| l.dimension() <= 400) {
            assert_eq!(BnRepresentation::for_label(l).unwrap().dimension() as u128, l.dimension());
        }
    }
    for n in 2..=16 {
        let f = family(n).unwrap();
        assert_eq!(f.len(), n + 1);
        assert!(f.iter().all(in_family));
        assert_eq!(f.iter().map(|l| l.dimension()).sum::<u128>(), (1u128 << n) + n as u128 - 2);
    }
    assert!(!in_family(&Bipartition::trivial(4)));
    assert!(!in_family(&"[2,2]|[]".parse().unwrap()));
}

#[test]
fn regular_representation_is_left_multiplication() {
    let n = 3;
    let reg = BnRepresentation::regular(n).unwrap();
    let group = enumerate_group(n).unwrap();
    for g in group.iter().step_by(5) {
        let m = reg.evaluate(g).unwrap();
        for (j, h) in group.iter().enumerate() {
            let gh = g.compose(h).unwrap();
            let i = group.iter().position(|x| *x == gh).unwrap();
            assert_eq!(m[(i, j)], 1.0);
            assert_eq!(m.column(j).sum(), 1.0);
        }
    }
}

fn label_and_pair() -> impl Strategy<Value = (Bipartition, SignedPermutation, SignedPermutation)> {
    (2usize..=5).prop_flat_map(|n| {
        let element = (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n))
            .prop_map(|(p, s)| SignedPermutation::new(p, s.into_iter().map(|b| if b { -1 } else { 1 }).collect()).unwrap());
        (prop::sample::select(enumerate_bipartitions(n)), element.clone(), element)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]
    #[test]
    fn induced_is_an_orthogonal_homomorphism((label, g, h) in label_and_pair()) {
        let rep = BnRepresentation::induced(&label).unwrap();
        let (a, b) = (rep.evaluate(&g).unwrap(), rep.evaluate(&h).unwrap());
        let ab = rep.evaluate(&g.compose(&h).unwrap()).unwrap();
        prop_assert!((&ab - &a * &b).abs().max() < 1e-10);
        let d = a.nrows();
        prop_assert!((a.transpose() * &a - DMatrix::<f64>::identity(d, d)).abs().max() < 1e-10);
        prop_assert!((rep.evaluate(&g.inverse()).unwrap() - a.transpose()).abs().max() < 1e-10);
    }
}
