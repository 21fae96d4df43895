use proptest::prelude::*;
use slie_core::catalog::load_catalog;
use slie_core::exactlin::{ratio, Matrix};
use slie_core::multiplier::{multiplier_formula, multiplier_homology, multiplier_tags};
use slie_core::recognize::{build_canonical, recognize, FamilyDescriptor};
use slie_core::superalg::{GradedDim, SuperAlgebra};

fn family() -> impl Strategy<Value = FamilyDescriptor> {
    let core = prop_oneof![
        (0..=2usize, 0..=2usize)
            .prop_filter("nonzero", |(m, n)| m + n > 0)
            .prop_map(|(m, n)| FamilyDescriptor::EvenHeisenberg { m, n }),
        (1..=2usize).prop_map(|m| FamilyDescriptor::OddHeisenberg { m }),
    ];
    (core, 0..=1usize, 0..=1usize).prop_map(|(core, a, b)| {
        if a + b == 0 {
            core
        } else {
            FamilyDescriptor::HeisenbergPlusAbelian { core: Box::new(core), pad: GradedDim::new(a, b) }
        }
    })
}

fn change_of_basis(a: &SuperAlgebra, seed: &[i64]) -> Option<Matrix> {
    let n = a.n();
    let mut p = Matrix::zeros(n, n);
    let mut k = 0;
    for i in 0..n {
        for j in 0..n {
            if a.parity(i) == a.parity(j) {
                let v = seed[k % seed.len()] + if i == j { 3 } else { 0 };
                p.set(i, j, ratio(v, 1 + (k as i64 % 2)));
                k += 1;
            }
        }
    }
    p.inverse().map(|_| p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn recognition_survives_basis_change(
        d in family(),
        seed in prop::collection::vec(-2i64..=2, 1..12),
    ) {
        let a = build_canonical(&d).unwrap();
        prop_assume!(change_of_basis(&a, &seed).is_some());
        let b = a.change_basis(&change_of_basis(&a, &seed).unwrap()).unwrap();
        prop_assert!(b.is_valid());
        prop_assert_eq!(recognize(&b).unwrap(), d.clone());
        let formula = multiplier_formula(&d).unwrap().dim;
        prop_assert_eq!(multiplier_tags(&b).unwrap().dim, formula);
        prop_assert_eq!(multiplier_homology(&b).unwrap().dim, formula);
    }

    #[test]
    fn direct_sum_with_abelian_adds_pad(d in family(), a in 0..=1usize, b in 0..=1usize) {
        let h = build_canonical(&d).unwrap();
        let k = SuperAlgebra::abelian_dim("K", GradedDim::new(a, b));
        let s = h.direct_sum(&k);
        prop_assert_eq!(s.dim(), h.dim() + k.dim());
        prop_assert_eq!(multiplier_tags(&s).unwrap().dim, multiplier_homology(&s).unwrap().dim);
    }
}

#[test]
fn catalog_entries_are_valid_and_engines_agree() {
    for e in load_catalog() {
        if e.skips_verification() {
            continue;
        }
        let a = &e.algebra;
        assert!(a.is_valid(), "{}", e.id);
        assert!(a.is_nilpotent(), "{}", e.id);
        assert_eq!(a.dim(), e.id_dims(), "{}", e.id);
        let t = multiplier_tags(a).unwrap();
        let h = multiplier_homology(a).unwrap();
        assert_eq!(t.dim, h.dim, "{}", e.id);
        if let Ok(f) = recognize(a).map_err(|_| ()).and_then(|d| multiplier_formula(&d).map_err(|_| ())) {
            assert_eq!(f.dim, t.dim, "{}", e.id);
        }
    }
}

#[test]
fn catalog_ids_are_unique_and_resolvable() {
    let entries = load_catalog();
    let mut ids: Vec<_> = entries.iter().map(|e| e.id).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), entries.len());
    for id in ids {
        assert_eq!(slie_core::catalog::find(id).map(|e| e.id), Some(id));
    }
}
