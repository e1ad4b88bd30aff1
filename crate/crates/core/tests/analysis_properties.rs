use liyorke::analysis::*;
use liyorke::fractal::{middle_third, sample_attractor, sample_restricted};
use liyorke::rng::chunk_rng;
use liyorke::symbolic::*;
use liyorke::systems::SystemSpec;
use liyorke::PointCloud;
use proptest::prelude::*;

fn cloud_strategy() -> impl Strategy<Value = PointCloud<f64>> {
    (1usize..=3).prop_flat_map(|dim| {
        prop::collection::vec(0.0f64..1.0, dim * 10..dim * 400).prop_map(move |mut v| {
            v.truncate(v.len() / dim * dim);
            PointCloud::new(dim, v).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counts_grow_on_nested_grids(cloud in cloud_strategy()) {
        let est = box_count(&cloud, &geometric_ladder(2.0, 0, 12)).unwrap();
        for w in est.counts.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
        prop_assert!(*est.counts.last().unwrap() <= cloud.len());
    }

    #[test]
    fn counts_invariant_under_dyadic_scaling(cloud in cloud_strategy(), k in -6i32..6) {
        let ladder = geometric_ladder(2.0, 1, 10);
        let lambda = 2f64.powi(k);
        let scaled_ladder: Vec<f64> = ladder.iter().map(|e| e * lambda).collect();
        let a = box_count(&cloud, &ladder).unwrap();
        let b = box_count(&cloud.scaled(lambda), &scaled_ladder).unwrap();
        prop_assert_eq!(a.counts, b.counts);
    }
}

#[test]
fn cantor_counts_are_powers_of_two() {
    let cloud = sample_attractor(&middle_third::<f64>(), 100_000, 30, 4);
    let est = box_count(&cloud.cloud, &geometric_ladder(3.0, 0, 12)).unwrap();
    for (j, &n) in est.counts.iter().enumerate() {
        assert_eq!(n, 1 << j, "j = {j}");
    }
}

#[test]
fn uniform_unit_interval_has_slope_one() {
    let mut rng = chunk_rng(17, 0);
    use rand::Rng;
    let coords: Vec<f64> = (0..1_000_000).map(|_| rng.gen::<f64>()).collect();
    let cloud = PointCloud::new(1, coords).unwrap();
    let est = dimension_fit(&box_count(&cloud, &dyadic_ladder()).unwrap()).unwrap();
    let at_10 = est
        .epsilons
        .iter()
        .position(|&e| e == 2f64.powi(-10))
        .unwrap();
    assert_eq!(est.counts[at_10], 1024);
    assert!((est.slope.unwrap() - 1.0).abs() <= 0.02, "{:?}", est.slope);
}

#[test]
fn cantor_slope_matches_similarity_dimension() {
    let cloud = sample_attractor(&middle_third::<f64>(), 200_000, 30, 5);
    let est =
        dimension_fit(&box_count(&cloud.cloud, &geometric_ladder(3.0, 1, 10)).unwrap()).unwrap();
    let d = 2f64.ln() / 3f64.ln();
    assert!((est.slope.unwrap() - d).abs() <= 0.02, "{:?}", est.slope);
}

#[test]
fn constant_gaps_thin_the_restricted_set() {
    let ifs = middle_third::<f64>();
    let base = SymbolSequence::random(2, Side::One, 0, 40, &mut chunk_rng(3, 0)).unwrap();
    let gaps: GapSequence = "constant:3".parse().unwrap();
    let cloud = sample_restricted(&ifs, &base, &gaps, 200_000, 40, 6).unwrap();
    let est = dimension_fit(&box_count(&cloud.cloud, &dyadic_ladder()).unwrap()).unwrap();
    let d = 2f64.ln() / 3f64.ln();
    assert!(est.slope.unwrap() < d - 0.05, "{:?}", est.slope);
}

#[test]
fn degenerate_fit_reported() {
    let cloud = PointCloud::new(1, vec![0.5; 100]).unwrap();
    let est = box_count(&cloud, &dyadic_ladder()).unwrap();
    assert!(dimension_fit(&est).is_err());
}

fn systems() -> Vec<SystemSpec<f64>> {
    vec![
        SystemSpec::tent(2.0).unwrap(),
        SystemSpec::baker(1.0 / 3.0, 1.0 / 3.0).unwrap(),
        SystemSpec::horseshoe(1.0 / 3.0, 3.0).unwrap(),
        SystemSpec::solenoid(0.3, 0.4).unwrap(),
    ]
}

const BLOCKS: usize = 12;
const DEPTH: usize = 40;

fn pair(spec: &SystemSpec<f64>, gaps: &GapSequence, seed: u64) -> (SymbolSequence, SymbolSequence) {
    let m = spec.derive_ifs().contracting.len() as u32;
    let span = block_schedule(gaps, BLOCKS).unwrap().span;
    let len = span + 2 * DEPTH;
    let mut rng = chunk_rng(seed, 0);
    let base = SymbolSequence::random(m, spec.side(), DEPTH, len, &mut rng).unwrap();
    let filler = SymbolSequence::random(m, spec.side(), DEPTH, len, &mut rng).unwrap();
    let partner = construct_partner(&base, gaps, &filler, len).unwrap();
    (base, partner)
}

fn verdict(spec: &SystemSpec<f64>, profile: &LiYorkeProfile<f64>) -> LiYorkeVerdict<f64> {
    let t = Thresholds::for_system(spec).unwrap();
    verify_liyorke(profile, t.proximity_decay, t.separation_floor).unwrap()
}

#[test]
fn constructed_pairs_pass_on_all_systems() {
    let gaps = GapSequence::Quadratic;
    for spec in systems() {
        for seed in 0..5 {
            let (base, partner) = pair(&spec, &gaps, seed);
            let profile = liyorke_profile(&spec, &base, &gaps, &partner, BLOCKS, DEPTH).unwrap();
            let v = verdict(&spec, &profile);
            assert!(v.pass, "{} seed {seed}: {:?}", spec.name(), v.witness);
        }
    }
}

#[test]
fn identical_pair_fails() {
    let gaps = GapSequence::Quadratic;
    for spec in systems() {
        let (base, _) = pair(&spec, &gaps, 1);
        let profile = orbit_profile(&spec, &base, &base, &gaps, BLOCKS, DEPTH).unwrap();
        let v = verdict(&spec, &profile);
        assert!(!v.pass, "{}", spec.name());
        assert_eq!(v.witness.unwrap().kind, CheckpointKind::Separation);
    }
}

#[test]
fn eventually_equal_pair_fails() {
    let gaps = GapSequence::Quadratic;
    let schedule = block_schedule(&gaps, BLOCKS).unwrap();
    let cut = schedule.blocks[2].end();
    for spec in systems() {
        let (base, partner) = pair(&spec, &gaps, 2);
        let mut digits = partner.digits()[..cut].to_vec();
        digits.extend_from_slice(&base.digits()[cut..]);
        let tail = match spec.side() {
            Side::One => SymbolSequence::one_sided(base.alphabet_size(), digits),
            Side::Two => {
                SymbolSequence::two_sided(base.alphabet_size(), partner.past().to_vec(), digits)
            }
        }
        .unwrap();
        assert!(extract_filler(&tail, &base, &gaps).is_err());
        let profile = orbit_profile(&spec, &base, &tail, &gaps, BLOCKS, DEPTH).unwrap();
        let v = verdict(&spec, &profile);
        assert!(!v.pass, "{}", spec.name());
        assert_eq!(v.witness.unwrap().kind, CheckpointKind::Separation);
    }
}

#[test]
fn steep_gaps_recover_full_dimension() {
    // with few constrained digits inside the sampled depth the restricted set
    // is indistinguishable from the attractor at these scales
    let ifs = middle_third::<f64>();
    let base = SymbolSequence::random(2, Side::One, 0, 40, &mut chunk_rng(8, 0)).unwrap();
    let gaps: GapSequence = "affine:64,0".parse().unwrap();
    let cloud = sample_restricted(&ifs, &base, &gaps, 200_000, 40, 9).unwrap();
    let est =
        dimension_fit(&box_count(&cloud.cloud, &geometric_ladder(3.0, 1, 10)).unwrap()).unwrap();
    let d = 2f64.ln() / 3f64.ln();
    assert!((est.slope.unwrap() - d).abs() <= 0.02, "{:?}", est.slope);
}
