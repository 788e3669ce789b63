//! Certificate words: every morphism of a saturated system decomposes into
//! restrictions of automorphisms of a short list of host subgroups.

mod common;

use common::*;
use fusion_core::{
    certificate_hosts, classify_subgroup, fusion_of_group_sylow, inner_fusion,
    morphism_certificate, Certificate, FusionSystem, SubMap,
};

fn certify_everything(f: &FusionSystem) {
    let hosts = certificate_hosts(f).unwrap();
    for &h in &hosts {
        let flags = classify_subgroup(f, h).unwrap();
        let top = f.amb.subs[h].order() == f.s().order();
        assert!(flags.fully_normalized);
        assert!(top || (flags.centric && flags.radical), "host {h} is not a valid origin");
    }
    for cl in &f.classes {
        for m in cl.to_rep.iter().chain(cl.outer.iter()) {
            match morphism_certificate(f, m).unwrap() {
                Certificate::Word(w) => {
                    for step in &w.steps {
                        assert!(hosts.contains(&step.host));
                        assert_eq!(step.auto.src, step.host);
                        assert!(f.contains_map(&step.auto));
                    }
                    assert_eq!(&w.recompose(f, m.src), m, "word recomposes wrong");
                }
                Certificate::Absent => panic!("morphism of the system certified absent"),
            }
        }
    }
}

#[test]
fn inner_fusion_needs_only_the_whole_group_as_host() {
    let f = inner_fusion(d8(), 2, CAP).unwrap();
    let hosts = certificate_hosts(&f).unwrap();
    assert_eq!(hosts.len(), 1);
    assert_eq!(f.amb.subs[hosts[0]].order(), 8);
    certify_everything(&f);
}

#[test]
fn symmetric_group_fusion_is_certified_by_one_klein_and_the_top() {
    let gf = fusion_of_group_sylow(&s4(), 2, CAP).unwrap();
    let f = &gf.system;
    let hosts = certificate_hosts(f).unwrap();
    let orders: Vec<usize> = hosts.iter().map(|&h| f.amb.subs[h].order()).collect();
    assert_eq!(orders, vec![4, 8]);
    certify_everything(f);
}

#[test]
fn projective_fusion_needs_both_kleins() {
    let gf = fusion_of_group_sylow(&psl27(), 2, CAP).unwrap();
    let f = &gf.system;
    let hosts = certificate_hosts(f).unwrap();
    let orders: Vec<usize> = hosts.iter().map(|&h| f.amb.subs[h].order()).collect();
    assert_eq!(orders, vec![4, 4, 8]);
    certify_everything(f);

    // Fusing an involution from one Klein subgroup into the other forces a
    // word through more than one host: neither Klein contains both, and the
    // top group only conjugates within each.
    let s = f.s();
    let central = group_kernel::subgroup::center_of(s, &group_kernel::subgroup::full(s));
    let kleins: Vec<usize> = f
        .classes
        .iter()
        .filter(|cl| f.amb.subs[cl.rep].order() == 4 && cl.members.len() == 1)
        .filter(|cl| f.amb.elems(cl.rep).iter().all(|&x| s.order_of(x) <= 2))
        .map(|cl| cl.rep)
        .collect();
    assert_eq!(kleins.len(), 2);
    let pick = |v: usize| {
        *f.amb
            .elems(v)
            .iter()
            .find(|&&x| s.order_of(x) == 2 && !central.contains(x))
            .unwrap()
    };
    let (x, y) = (pick(kleins[0]), pick(kleins[1]));
    let src = sub_idx(f, &[x]);
    let img: Vec<u32> = f
        .amb
        .elems(src)
        .iter()
        .map(|&e| if e == s.identity { s.identity } else { y })
        .collect();
    let phi = SubMap { src, img };
    match morphism_certificate(f, &phi).unwrap() {
        Certificate::Word(w) => {
            assert!(w.steps.len() >= 2, "cross-Klein fusion needs two hosts");
            assert_eq!(w.recompose(f, phi.src), phi);
        }
        Certificate::Absent => panic!("cross-Klein fusion is in the system"),
    }
}

#[test]
fn a_map_outside_the_system_is_reported_absent() {
    let gf = fusion_of_group_sylow(&s4(), 2, CAP).unwrap();
    let f = &gf.system;
    // Transpositions and double transpositions are never fused in the
    // symmetric group; the map sending one generator to the other is not a
    // morphism of the system.
    let two = f
        .classes
        .iter()
        .find(|cl| f.amb.subs[cl.rep].order() == 2 && cl.members.len() == 2)
        .unwrap();
    let three = f
        .classes
        .iter()
        .find(|cl| f.amb.subs[cl.rep].order() == 2 && cl.members.len() == 3)
        .unwrap();
    let src = two.rep;
    let tgt = three.rep;
    let s = f.s();
    let gen_tgt = *f.amb.elems(tgt).iter().find(|&&x| x != s.identity).unwrap();
    let img: Vec<u32> = f
        .amb
        .elems(src)
        .iter()
        .map(|&x| if x == s.identity { s.identity } else { gen_tgt })
        .collect();
    let phi = SubMap { src, img };
    assert!(matches!(
        morphism_certificate(f, &phi).unwrap(),
        Certificate::Absent
    ));
}
