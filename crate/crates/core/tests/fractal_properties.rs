use liyorke::fractal::*;
use liyorke::rng::chunk_rng;
use liyorke::systems::SystemSpec;
use proptest::prelude::*;
use rand::Rng;

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

#[test]
fn similitudes_scale_distances_exactly() {
    let mut rng = chunk_rng(5, 0);
    let orth = SignedPermutation::from_matrix(&[0.0, 0.0, -1.0, 1.0, 0.0, 0.0, 0.0, -1.0, 0.0], 3)
        .unwrap();
    let s = Similitude::new(0.37, orth, vec![0.1, -2.0, 5.0]).unwrap();
    for _ in 0..1000 {
        let x: Vec<f64> = (0..3).map(|_| rng.gen_range(-10.0..10.0)).collect();
        let y: Vec<f64> = (0..3).map(|_| rng.gen_range(-10.0..10.0)).collect();
        let d = distance(&x, &y);
        let img = distance(&s.apply(&x), &s.apply(&y));
        assert!(
            (img - 0.37 * d).abs() <= 1e-12 * d.max(1.0),
            "{img} vs {}",
            0.37 * d
        );
    }
}

proptest! {
    #[test]
    fn moran_residual_and_monotonicity(
        ratios in prop::collection::vec(0.01f64..0.6, 2..6),
        which in 0usize..6,
        bump in 0.001f64..0.3,
    ) {
        let sol = moran_dimension(&ratios).unwrap();
        prop_assert!(sol.residual <= 1e-12);
        prop_assert!(sol.dimension >= 0.0);
        let mut larger = ratios.clone();
        let i = which % larger.len();
        larger[i] = (larger[i] + bump).min(0.99);
        prop_assume!(larger[i] > ratios[i]);
        prop_assert!(moran_dimension(&larger).unwrap().dimension > sol.dimension);
    }

    #[test]
    fn cylinders_nest(prefix in prop::collection::vec(1u8..=2, 0..25)) {
        let systems = [
            middle_third::<f64>(),
            SystemSpec::solenoid(0.3, 0.45).unwrap().derive_ifs().contracting,
            SystemSpec::horseshoe(0.2, 4.0).unwrap().derive_ifs().contracting,
        ];
        for ifs in &systems {
            let parent = code_point(ifs, &prefix).unwrap();
            for d in 1..=2u8 {
                let mut longer = prefix.clone();
                longer.push(d);
                let child = code_point(ifs, &longer).unwrap();
                prop_assert!(child.within(&parent, 1e-12));
            }
        }
    }

    #[test]
    fn separation_scales_with_common_prefix(
        common in prop::collection::vec(1u8..=2, 0..12),
        tail_a in prop::collection::vec(1u8..=2, 15),
        tail_b in prop::collection::vec(1u8..=2, 15),
    ) {
        let systems = [
            middle_third::<f64>(),
            SystemSpec::baker(0.2, 0.5).unwrap().derive_ifs().contracting,
            SystemSpec::solenoid(0.3, 0.45).unwrap().derive_ifs().contracting,
        ];
        for ifs in &systems {
            let d = verify_separation(ifs).unwrap();
            let mut a = common.clone();
            a.push(1);
            a.extend(&tail_a);
            let mut b = common.clone();
            b.push(2);
            b.extend(&tail_b);
            let pa = code_point(ifs, &a).unwrap();
            let pb = code_point(ifs, &b).unwrap();
            let scale: f64 = common.iter().map(|&k| ifs.ratios()[usize::from(k) - 1]).product();
            let gap = distance(&pa.center, &pb.center) - pa.radius - pb.radius;
            // the balls are circumscribed, so allow their excess over the boxes
            prop_assert!(gap >= d * scale - (pa.radius + pb.radius) - 1e-12);
            prop_assert!(distance(&pa.center, &pb.center) >= d * scale - 1e-12);
        }
    }
}

#[test]
fn sampler_is_deterministic_per_seed() {
    let ifs = SystemSpec::tent(3.0).unwrap().derive_ifs().contracting;
    assert_eq!(
        sample_attractor(&ifs, 10_000, 20, 42),
        sample_attractor(&ifs, 10_000, 20, 42)
    );
}

#[test]
fn equal_ratio_digits_are_uniform() {
    // chi-square, 1 degree of freedom, alpha = 0.01
    let ifs = middle_third::<f64>();
    let cloud = sample_attractor(&ifs, 100_000, 1, 2024);
    let ones = (0..cloud.len())
        .filter(|&i| cloud.prefix(i)[0] == 1)
        .count() as f64;
    let expected = 50_000.0;
    let twos = 100_000.0 - ones;
    let chi2 = (ones - expected).powi(2) / expected + (twos - expected).powi(2) / expected;
    assert!(chi2 < 6.635, "chi2 = {chi2}");
}

#[test]
fn f32_and_f64_agree_on_coding() {
    let ifs64 = middle_third::<f64>();
    let ifs32 = middle_third::<f32>();
    let prefix = [1u8, 2, 2, 1, 2, 1, 1, 2];
    let a = code_point(&ifs64, &prefix).unwrap();
    let b = code_point(&ifs32, &prefix).unwrap();
    assert!((a.center[0] - f64::from(b.center[0])).abs() < 1e-6);
}
