use std::collections::BTreeSet;

use otnsga::model::{Bounds, Problem};
use otnsga::orthogonal::{
    construct_orthogonal_array, construct_orthogonal_array_capped, orthogonal_initialize,
    segment_space, soc_crossover, InitParams, SocParams,
};
use otnsga::problems::make_problem;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn grid_key(x: &[f64]) -> Vec<i64> {
    x.iter().map(|v| (v * 1e9).round() as i64).collect()
}

#[test]
fn soc_two_by_two_grid() {
    let params = SocParams::new(3, vec![1e-6, 1e-6]);
    let children = soc_crossover(&[0.0, 0.0], &[2.0, 2.0], &params).unwrap();
    assert_eq!(children.len(), 9);
    let got: BTreeSet<Vec<i64>> = children.iter().map(|c| grid_key(c)).collect();
    let mut want = BTreeSet::new();
    for a in 0..3 {
        for b in 0..3 {
            want.insert(grid_key(&[a as f64, b as f64]));
        }
    }
    assert_eq!(got, want);
}

#[test]
fn soc_identical_parents() {
    let params = SocParams::new(3, vec![1e-6; 3]);
    let p = [0.3, 0.7, 0.1];
    let children = soc_crossover(&p, &p, &params).unwrap();
    assert_eq!(children.len(), 2);
    assert!(children.iter().all(|c| c[..] == p));
}

#[test]
fn segment_examples() {
    let b = Bounds::new(vec![0.0, 0.0], vec![1.0, 4.0]).unwrap();
    let set = segment_space(&b, 2).unwrap();
    assert_eq!(set.split_dim, 1);
    assert_eq!(
        set.subspaces[0],
        Bounds::new(vec![0.0, 0.0], vec![1.0, 2.0]).unwrap()
    );
    assert_eq!(
        set.subspaces[1],
        Bounds::new(vec![0.0, 2.0], vec![1.0, 4.0]).unwrap()
    );

    let line = Bounds::new(vec![0.0], vec![3.0]).unwrap();
    let set = segment_space(&line, 3).unwrap();
    let spans: Vec<(f64, f64)> = set
        .subspaces
        .iter()
        .map(|s| (s.lower()[0], s.upper()[0]))
        .collect();
    assert_eq!(spans, vec![(0.0, 1.0), (1.0, 2.0), (2.0, 3.0)]);

    assert_eq!(segment_space(&b, 1).unwrap().subspaces, vec![b.clone()]);
    assert!(segment_space(&b, 0).is_err());
}

#[test]
fn array_row_cap() {
    assert!(construct_orthogonal_array_capped(3, 40, 80).is_err());
    assert_eq!(
        construct_orthogonal_array_capped(3, 40, 81).unwrap().rows(),
        81
    );
    assert!(construct_orthogonal_array(4, 2).is_err());
    assert!(construct_orthogonal_array(3, 0).is_err());
}

fn parent_pair() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (1usize..8).prop_flat_map(|n| {
        let gene = prop_oneof![Just(0.5), 0.0f64..1.0];
        (
            prop::collection::vec(gene.clone(), n),
            prop::collection::vec(gene, n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn soc_children_stay_in_the_parent_box((p1, p2) in parent_pair(), q in prop::sample::select(vec![2usize, 3, 5])) {
        let theta = vec![1e-9; p1.len()];
        let params = SocParams::new(q, theta.clone());
        let children = soc_crossover(&p1, &p2, &params).unwrap();
        let t = p1.iter().zip(&p2).filter(|(a, b)| (*a - *b).abs() > 1e-9).count();
        if t == 0 {
            prop_assert_eq!(children.len(), 2);
        } else {
            let mut j = 1u32;
            while (q.pow(j) - 1) / (q - 1) < t {
                j += 1;
            }
            prop_assert_eq!(children.len(), q.pow(j));
        }
        for c in &children {
            for i in 0..p1.len() {
                let (lo, hi) = (p1[i].min(p2[i]), p1[i].max(p2[i]));
                prop_assert!(c[i] >= lo && c[i] <= hi);
            }
        }
        prop_assert_eq!(children, soc_crossover(&p1, &p2, &params).unwrap());
    }
}

#[test]
fn zdt1_initial_population_contract() {
    let problem = make_problem("ZDT1").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let out = orthogonal_initialize(&problem, 100, &InitParams::default(), &mut rng).unwrap();
    assert_eq!(out.population.len(), 100);
    assert_eq!(out.random_fill, 0);
    // a pool smaller than 4n becomes the candidate set whole
    assert_eq!((out.pool_size, out.candidate_size), (324, 324));
    for m in &out.population.members {
        assert!(problem.bounds().contains(&m.decision));
        assert!(m.rank.is_some() && m.crowding.is_some());
        assert_eq!(m.objectives.len(), 2);
    }
}

#[test]
fn single_subspace_children_fill_the_box() {
    let problem = make_problem("KUR").unwrap();
    let params = InitParams {
        subspaces: 1,
        ..InitParams::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let out = orthogonal_initialize(&problem, 8, &params, &mut rng).unwrap();
    assert_eq!(out.population.len(), 8);
    assert!(out
        .population
        .members
        .iter()
        .all(|m| problem.bounds().contains(&m.decision)));
}
