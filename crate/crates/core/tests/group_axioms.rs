use bngap::group::{enumerate_group, SignedPermutation, SubsetMask};
use proptest::prelude::*;

/// Column `j` has `signs[j]` in row `perm[j]`.
fn matrix(g: &SignedPermutation) -> Vec<Vec<i32>> {
    let n = g.n();
    let mut m = vec![vec![0; n]; n];
    for j in 0..n {
        m[g.perm()[j]][j] = g.signs()[j] as i32;
    }
    m
}

fn matmul(a: &[Vec<i32>], b: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn element(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n))
        .prop_map(|(perm, s)| SignedPermutation::new(perm, s.into_iter().map(|b| if b { -1 } else { 1 }).collect()).unwrap())
}

fn triple() -> impl Strategy<Value = (SignedPermutation, SignedPermutation, SignedPermutation)> {
    (1usize..=7).prop_flat_map(|n| (element(n), element(n), element(n)))
}

proptest! {
    #[test]
    fn composition_is_matrix_product((g, h, _) in triple()) {
        let gh = g.compose(&h).unwrap();
        prop_assert_eq!(matrix(&gh), matmul(&matrix(&g), &matrix(&h)));
    }

    #[test]
    fn associativity((g, h, k) in triple()) {
        let left = g.compose(&h).unwrap().compose(&k).unwrap();
        let right = g.compose(&h.compose(&k).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_and_inverse((g, _, _) in triple()) {
        let e = SignedPermutation::identity(g.n());
        prop_assert_eq!(g.compose(&e).unwrap(), g.clone());
        prop_assert_eq!(e.compose(&g).unwrap(), g.clone());
        prop_assert!(g.compose(&g.inverse()).unwrap().is_identity());
        prop_assert!(g.inverse().compose(&g).unwrap().is_identity());
        // inverse is the transpose
        let m = matrix(&g);
        let t: Vec<Vec<i32>> = (0..g.n()).map(|i| (0..g.n()).map(|j| m[j][i]).collect()).collect();
        prop_assert_eq!(matrix(&g.inverse()), t);
    }

    #[test]
    fn factorization((g, _, _) in triple()) {
        let (a, perm) = g.factor();
        let pi = SignedPermutation::from_permutation(perm.to_vec()).unwrap();
        prop_assert_eq!(SignedPermutation::diagonal(&a).compose(&pi).unwrap(), g.clone());
    }

    #[test]
    fn diagonal_subgroup_is_xor(n in 1usize..=10, a in any::<u32>(), c in any::<u32>()) {
        let mask = (1u32 << n) - 1;
        let (a, c) = (SubsetMask::new(n, a & mask).unwrap(), SubsetMask::new(n, c & mask).unwrap());
        let product = SignedPermutation::diagonal(&a).compose(&SignedPermutation::diagonal(&c)).unwrap();
        prop_assert_eq!(product, SignedPermutation::diagonal(&a.symmetric_difference(&c)));
    }

    #[test]
    fn conjugating_a_diagonal_moves_its_set((g, _, _) in triple(), bits in any::<u32>()) {
        let n = g.n();
        let a = SubsetMask::new(n, bits & ((1u32 << n) - 1)).unwrap();
        let conj = g.compose(&SignedPermutation::diagonal(&a)).unwrap().compose(&g.inverse()).unwrap();
        prop_assert_eq!(conj, SignedPermutation::diagonal(&a.image(g.perm())));
    }
}

#[test]
fn enumeration_is_the_whole_group() {
    for n in 1..=5 {
        let group = enumerate_group(n).unwrap();
        let order = (1usize << n) * (1..=n).product::<usize>();
        assert_eq!(group.len(), order);
        let distinct: std::collections::BTreeSet<_> = group.iter().cloned().collect();
        assert_eq!(distinct.len(), order);
        assert!(group[0].is_identity());
    }
}
