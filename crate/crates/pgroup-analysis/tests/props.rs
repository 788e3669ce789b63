mod common;

use common::*;
use group_kernel::group::lcm_u64;
use group_kernel::subgroup::{self, Subgroup};
use group_kernel::{lattice, quotient};
use pgroup_analysis::{correction_maps, omega_layer, p_group_prime, subexponent};
use proptest::prelude::*;

fn abelian_p_group() -> impl Strategy<Value = Vec<usize>> {
    prop_oneof![
        proptest::collection::vec(prop_oneof![Just(2usize), Just(4), Just(8)], 1..=3),
        proptest::collection::vec(prop_oneof![Just(3usize), Just(9)], 1..=3),
    ]
}

fn exponent_of(g: &group_kernel::group::Group, h: &Subgroup) -> u64 {
    h.elems.iter().map(|&x| g.order_of(x) as u64).fold(1, lcm_u64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn abelian_subexponent_equals_exponent(fs in abelian_p_group()) {
        let g = abelian(&fs);
        let sub = subexponent(&g).unwrap();
        prop_assert_eq!(sub.value, g.exponent());
        prop_assert_eq!(sub.series.steps.len() as u32,
            group_kernel::zmod::valuation(g.order() as u64, sub.p)
                * if g.order() == 1 { 0 } else { 1 });
    }

    #[test]
    fn omega_layers_are_nested_and_exhaust(fs in abelian_p_group(), n in 0u32..4) {
        let g = abelian(&fs);
        let p = p_group_prime(&g).unwrap();
        let full = subgroup::full(&g);
        let a = omega_layer(&g, &full, p, n).unwrap();
        let b = omega_layer(&g, &full, p, n + 1).unwrap();
        prop_assert!(a.bits.is_subset(&b.bits));
        // Inside an abelian group the layer is exactly the torsion set.
        let bound = (p as u64).pow(n);
        for x in g.all_ids() {
            prop_assert_eq!(a.contains(x), g.order_of(x) as u64 <= bound);
        }
    }

    #[test]
    fn correction_exponent_formula_randomized(fs in abelian_p_group(), pick in 0usize..64) {
        let g = abelian(&fs);
        let subs = lattice::all_subgroups(&g, None, 1 << 14).unwrap();
        let b = &subs[pick % subs.len()];
        let maps = correction_maps(&g, b).unwrap();
        let q = quotient::quotient(&g, b).unwrap();
        let want = group_kernel::zmat::gcd_u64(exponent_of(&g, b), q.group.exponent());
        prop_assert_eq!(maps.exponent, want);
    }
}
