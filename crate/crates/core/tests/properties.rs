use std::collections::BTreeSet;

use proptest::prelude::*;

use parabolics::coxeter::{CoxCoset, CoxWord, CoxeterGroup};
use parabolics::oracle::ball::enumerate_subgroup_ball;
use parabolics::oracle::catalog;
use parabolics::oracle::finite::Representation;
use parabolics::oracle::{enumerate_ball, heap_reduce, oracle_reduce, DEFAULT_CAP};
use parabolics::parabolic::{ParabolicDesc, SectorRef, Side};
use parabolics::{GenSet, GraphProduct, GroupSpec, NormalForm, Syllable, Word};

const EXP_BOUND: i64 = 2;

fn specs() -> Vec<GroupSpec> {
    let mut out: Vec<GroupSpec> = catalog::small_specs().into_iter().map(|(_, s)| s).collect();
    out.push(catalog::pentagon());
    out
}

/// A spec index, a word on it and a subset of its generators, all drawn
/// from raw integers so shrinking stays meaningful.
fn raw_word(max_len: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..8, prop_oneof![-3i64..=-1, 1i64..=3]), 0..=max_len)
}

fn word_on(spec: &GroupSpec, raw: &[(usize, i64)]) -> Word {
    Word(raw.iter().map(|&(g, e)| Syllable::new(g % spec.rank(), e)).collect())
}

fn subset_on(spec: &GroupSpec, bits: u64) -> GenSet {
    GenSet::from_bits(bits).intersection(spec.generators())
}

fn setup(k: usize) -> (GroupSpec, GraphProduct) {
    let all = specs();
    let spec = all[k % all.len()].clone();
    let gp = GraphProduct::new(spec.clone());
    (spec, gp)
}

fn el(gp: &GraphProduct, raw: &[(usize, i64)]) -> NormalForm {
    gp.reduce(&word_on(gp.spec(), raw)).unwrap()
}

/// `c·B_K(r)·c⁻¹`, a finite window onto a parabolic subgroup.
fn parabolic_window(gp: &GraphProduct, p: &ParabolicDesc, radius: usize) -> BTreeSet<NormalForm> {
    let inv = gp.invert(p.conjugator());
    gp.subgroup_ball(p.types(), radius, EXP_BOUND)
        .unwrap()
        .iter()
        .map(|g| gp.product([p.conjugator(), g, &inv]).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn group_axioms(k in 0usize..8, a in raw_word(6), b in raw_word(6), c in raw_word(6)) {
        let (_, gp) = setup(k);
        let (x, y, z) = (el(&gp, &a), el(&gp, &b), el(&gp, &c));
        let e = NormalForm::identity();
        prop_assert_eq!(gp.multiply(&gp.multiply(&x, &y).unwrap(), &z).unwrap(),
                        gp.multiply(&x, &gp.multiply(&y, &z).unwrap()).unwrap());
        prop_assert_eq!(gp.multiply(&x, &e).unwrap(), x.clone());
        prop_assert_eq!(gp.multiply(&x, &gp.invert(&x)).unwrap(), e);
        prop_assert_eq!(gp.invert(&gp.invert(&x)), x.clone());
        prop_assert_eq!(gp.invert(&gp.multiply(&x, &y).unwrap()),
                        gp.multiply(&gp.invert(&y), &gp.invert(&x)).unwrap());
        prop_assert_eq!(gp.reduce(&x.to_word()).unwrap(), x);
    }

    #[test]
    fn engine_matches_oracles(k in 0usize..8, a in raw_word(7)) {
        let (spec, gp) = setup(k);
        let w = word_on(&spec, &a);
        let nf = gp.reduce(&w).unwrap();
        prop_assert_eq!(&nf, &heap_reduce(&spec, &w.0).unwrap());
        prop_assert_eq!(&nf, &oracle_reduce(&spec, &w).unwrap());
    }

    #[test]
    fn distance_is_a_left_invariant_metric(k in 0usize..8, a in raw_word(6), b in raw_word(6), c in raw_word(6)) {
        let (_, gp) = setup(k);
        let (x, y, g) = (el(&gp, &a), el(&gp, &b), el(&gp, &c));
        let d = gp.distance(&x, &y).unwrap();
        prop_assert_eq!(d, gp.distance(&y, &x).unwrap());
        prop_assert_eq!(d == 0, x == y);
        prop_assert!(d <= gp.distance(&x, &g).unwrap() + gp.distance(&g, &y).unwrap());
        let (gx, gy) = (gp.multiply(&g, &x).unwrap(), gp.multiply(&g, &y).unwrap());
        prop_assert_eq!(gp.distance(&gx, &gy).unwrap(), d);
        prop_assert!(gp.syllable_length(&gp.multiply(&x, &y).unwrap())
            <= gp.syllable_length(&x) + gp.syllable_length(&y));
    }

    #[test]
    fn prefixes_split_off_the_whole_subgroup_part(k in 0usize..8, a in raw_word(7), bits in 0u64..32) {
        let (spec, gp) = setup(k);
        let x = el(&gp, &a);
        let types = subset_on(&spec, bits);
        let (p, r) = gp.i_prefix(&x, types);
        prop_assert!(p.support().is_subset(types));
        prop_assert_eq!(gp.multiply(&p, &r).unwrap(), x.clone());
        prop_assert_eq!(gp.syllable_length(&p) + gp.syllable_length(&r), gp.syllable_length(&x));
        prop_assert!(gp.left_descents(&r).iter().all(|s| !types.contains(s.gen)));
        let (l, q) = gp.i_suffix(&x, types);
        prop_assert!(q.support().is_subset(types));
        prop_assert_eq!(gp.multiply(&l, &q).unwrap(), x);
        prop_assert!(gp.right_descents(&l).iter().all(|s| !types.contains(s.gen)));
    }

    #[test]
    fn projection_is_a_gate(k in 0usize..8, a in raw_word(5), c in raw_word(3), bits in 0u64..32) {
        let (spec, gp) = setup(k);
        let x = el(&gp, &a);
        let sector = SectorRef::new(&gp, &el(&gp, &c), subset_on(&spec, bits));
        let p = gp.project_to_sector(&x, &sector).unwrap();
        prop_assert!(gp.sector_contains(&sector, &p));
        let dxp = gp.distance(&x, &p).unwrap();
        for g in gp.subgroup_ball(sector.types(), 2, EXP_BOUND).unwrap() {
            let z = gp.multiply(sector.base(), &g).unwrap();
            prop_assert!(gp.sector_contains(&sector, &z));
            prop_assert_eq!(gp.distance(&x, &z).unwrap(), dxp + gp.distance(&p, &z).unwrap());
        }
    }

    #[test]
    fn dials_change_exactly_across_the_wall(k in 0usize..8, c in raw_word(2), ty in 0usize..8) {
        let (spec, gp) = setup(k);
        let wall = parabolics::geometry::WallId::new(&gp, ty % spec.rank(), &el(&gp, &c));
        let ball = enumerate_ball(&spec, 3, EXP_BOUND, DEFAULT_CAP).unwrap();
        let elems = ball.elements();
        for e in ball.edges() {
            let (x, y) = (&elems[e.src], &elems[e.dst]);
            let on_wall = gp.wall_between(x, y).unwrap() == wall;
            let dx = gp.dial_index(&wall, x).unwrap();
            let dy = gp.dial_index(&wall, y).unwrap();
            prop_assert_eq!(on_wall, dx != dy);
        }
    }

    #[test]
    fn rotations_and_translations_act_on_walls(
        k in 0usize..8, c in raw_word(3), a in raw_word(4), g in raw_word(4), ty in 0usize..8, exp in 1i64..4,
    ) {
        let (spec, gp) = setup(k);
        let ty = ty % spec.rank();
        let wall = parabolics::geometry::WallId::new(&gp, ty, &el(&gp, &c));
        let x = el(&gp, &a);
        let rot = gp.rotation(&wall, exp).unwrap();
        prop_assert_eq!(gp.translate_wall(&rot, &wall).unwrap(), wall.clone());
        let before = gp.dial_index(&wall, &x).unwrap().0;
        let after = gp.dial_index(&wall, &gp.multiply(&rot, &x).unwrap()).unwrap().0;
        match spec.order(ty).finite() {
            Some(m) => prop_assert_eq!((after - before).rem_euclid(i64::from(m)), exp % i64::from(m)),
            None => prop_assert_eq!(after - before, exp),
        }
        let h = el(&gp, &g);
        let moved = gp.translate_wall(&h, &wall).unwrap();
        let hx = gp.multiply(&h, &x).unwrap();
        // Only the partition into dials is equivariant; the numbering may rotate.
        let z = el(&gp, &c);
        let hz = gp.multiply(&h, &z).unwrap();
        prop_assert_eq!(gp.dial_index(&moved, &hx).unwrap() == gp.dial_index(&moved, &hz).unwrap(),
                        gp.dial_index(&wall, &x).unwrap() == gp.dial_index(&wall, &z).unwrap());
        let s = gp.generator_power(ty, 1).unwrap();
        let y = gp.multiply(&x, &s).unwrap();
        prop_assert_eq!(gp.wall_between(&hx, &gp.multiply(&h, &y).unwrap()).unwrap(),
                        gp.translate_wall(&h, &gp.wall_between(&x, &y).unwrap()).unwrap());
    }

    #[test]
    fn walls_missing_a_sector_do_not_cut_it(k in 0usize..8, c in raw_word(2), s in raw_word(3), ty in 0usize..8, bits in 0u64..32) {
        let (spec, gp) = setup(k);
        let wall = parabolics::geometry::WallId::new(&gp, ty % spec.rank(), &el(&gp, &c));
        let sector = SectorRef::new(&gp, &el(&gp, &s), subset_on(&spec, bits));
        let dials: BTreeSet<i64> = gp.subgroup_ball(sector.types(), 3, EXP_BOUND).unwrap().iter()
            .map(|g| gp.dial_index(&wall, &gp.multiply(sector.base(), g).unwrap()).unwrap().0)
            .collect();
        if !gp.crosses_sector(&wall, &sector).unwrap() {
            prop_assert_eq!(dials.len(), 1);
        }
    }

    #[test]
    fn double_coset_representative_is_shortest(k in 0usize..8, a in raw_word(5), bi in 0u64..32, bj in 0u64..32) {
        let (spec, gp) = setup(k);
        let gamma = el(&gp, &a);
        let (i, j) = (subset_on(&spec, bi), subset_on(&spec, bj));
        let split = gp.double_coset_minimize(&gamma, i, j).unwrap();
        prop_assert!(split.left.support().is_subset(i));
        prop_assert!(split.right.support().is_subset(j));
        prop_assert_eq!(gp.product([&split.left, &split.rep, &split.right]).unwrap(), gamma.clone());
        let n = gp.syllable_length(&split.rep);
        for g in gp.subgroup_ball(i, 2, EXP_BOUND).unwrap() {
            for h in gp.subgroup_ball(j, 2, EXP_BOUND).unwrap() {
                prop_assert!(gp.syllable_length(&gp.product([&g, &gamma, &h]).unwrap()) >= n);
            }
        }
        let (_, d) = gp.coset_minimize(&gamma, i, Side::Left);
        prop_assert!(gp.left_descents(&d).iter().all(|s| !i.contains(s.gen)));
    }

    #[test]
    fn intersections_behave_like_intersections(
        k in 0usize..8, a in raw_word(3), b in raw_word(3), bi in 0u64..32, bj in 0u64..32,
    ) {
        let (spec, gp) = setup(k);
        let p1 = ParabolicDesc::new(&gp, &el(&gp, &a), subset_on(&spec, bi));
        let p2 = ParabolicDesc::new(&gp, &el(&gp, &b), subset_on(&spec, bj));
        let self_meet = gp.intersect_parabolics(&p1, &p1).unwrap();
        prop_assert_eq!(parabolic_window(&gp, &self_meet, 2), parabolic_window(&gp, &p1, 2));
        let q12 = gp.intersect_parabolics(&p1, &p2).unwrap();
        let q21 = gp.intersect_parabolics(&p2, &p1).unwrap();
        prop_assert_eq!(q12.types().len(), q21.types().len());
        for w in parabolic_window(&gp, &q12, 2) {
            prop_assert!(gp.member_of_parabolic(&w, &p1).unwrap());
            prop_assert!(gp.member_of_parabolic(&w, &p2).unwrap());
            prop_assert!(gp.member_of_parabolic(&w, &q21).unwrap());
        }
    }
}

fn cox_word(cg: &CoxeterGroup, raw: &[usize]) -> CoxWord {
    CoxWord(raw.iter().map(|&s| s % cg.rank()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coxeter_reduction_matches_permutations(k in 0usize..4, a in prop::collection::vec(0usize..4, 0..10), b in prop::collection::vec(0usize..4, 0..10)) {
        let (_, spec, rep, _) = catalog::finite_coxeter().swap_remove(k);
        let cg = CoxeterGroup::new(spec);
        let (u, v) = (cox_word(&cg, &a), cox_word(&cg, &b));
        let perm = |w: &CoxWord| {
            let sy: Vec<Syllable> = w.letters().iter().map(|&s| Syllable::new(s, 1)).collect();
            rep.evaluate(&sy).unwrap()
        };
        let (ru, rv) = (cg.reduce(&u).unwrap(), cg.reduce(&v).unwrap());
        prop_assert_eq!(perm(&ru), perm(&u));
        prop_assert_eq!(ru == rv, perm(&u) == perm(&v));
        prop_assert_eq!(cg.separating_reflections(&CoxWord::identity(), &ru).unwrap().len(), ru.len());
    }

    #[test]
    fn right_angled_engines_agree(k in 0usize..3, a in raw_word(4), bi in 0u64..32, bj in 0u64..32) {
        let spec = [catalog::path(), catalog::square_racg(), catalog::free_racg()][k].clone();
        let gp = GraphProduct::new(spec.clone());
        let cg = CoxeterGroup::new(spec.underlying_coxeter());
        let gamma = el(&gp, &a);
        let (i, j) = (subset_on(&spec, bi), subset_on(&spec, bj));
        let graph = gp.intersect_standard(i, &gamma, j).unwrap();
        let w = CoxWord(gamma.syllables().iter().map(|s| s.gen).collect());
        let cox = cg.cox_intersect(i, &w, j).unwrap();
        prop_assert_eq!(graph.types(), cox.types());
        let conj = CoxWord(graph.conjugator().syllables().iter().map(|s| s.gen).collect());
        prop_assert_eq!(CoxCoset::new(&cg, &conj, graph.types()), cox);
    }

    #[test]
    fn subgroup_balls_agree_with_the_oracle(k in 0usize..8, bits in 0u64..32, radius in 0usize..3) {
        let (spec, gp) = setup(k);
        let types = subset_on(&spec, bits);
        let mine: BTreeSet<NormalForm> = gp.subgroup_ball(types, radius, EXP_BOUND).unwrap().into_iter().collect();
        let oracle: BTreeSet<NormalForm> = enumerate_subgroup_ball(&spec, types, radius, EXP_BOUND, DEFAULT_CAP)
            .unwrap().elements().iter().cloned().collect();
        prop_assert_eq!(mine, oracle);
    }
}
