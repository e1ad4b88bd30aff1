//! The four classical example systems, their self-similar codings and
//! numerical checks of the conjugacy `f ∘ π = π ∘ σ`.
//!
//! Branch conventions, for the record:
//!
//! * tent `t(x) = a - 2a|x - 1/2|`, inverse branches `x/(2a)` and `1 - x/(2a)`;
//!   one-sided coding.
//! * skinny baker `(β₁x, 2y)` for `y <= 1/2`, `(1 - β₂ + β₂x, 2y - 1)` otherwise.
//!   The second branch is often printed with `1 - 2y`, which leaves the unit
//!   square; the dyadic form is the one conjugate to the two-sided shift.
//! * linear horseshoe `(βx, τy)` on `y <= 1/τ`, `(1 - βx, τ - τy)` on
//!   `y > 1 - 1/τ`; the middle strip is undefined. The second branch is also
//!   seen as `(-βx + 1, -τx + τ)`, a typo for `-τy + τ`.
//! * solenoid-like skew product `(β₁x, β₁y, 2z)` for `z <= 1/2`,
//!   `(1 - β₂ + β₂x, 1 - β₂ + β₂y, 2z - 1)` otherwise, on `[0, 1]^3`.
//!
//! Two-sided codings place the contracting coordinates first. They are coded
//! from the past (`s_0` outermost), the expanding coordinate from the future
//! through the inverse branches (`s_1` outermost).

use serde::{Deserialize, Serialize};

use crate::cloud::{CodedCloud, PointCloud};
use crate::error::{Error, Result};
use crate::fractal::{
    bernoulli_weights, code_point, verify_separation, BoxDomain, CodedPoint, IfsSystem, Similitude,
};
use crate::rng::{par_chunks, DigitSampler};
use crate::scalar::{distance, Scalar};
use crate::symbolic::{Side, SymbolSequence};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SystemRepr<T>", into = "SystemRepr<T>")]
#[serde(bound = "T: Scalar")]
pub enum SystemSpec<T> {
    Tent { a: T },
    Baker { beta1: T, beta2: T },
    Horseshoe { beta: T, tau: T },
    Solenoid { beta1: T, beta2: T },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
#[serde(bound = "T: Scalar")]
enum SystemRepr<T> {
    Tent { a: T },
    Baker { beta1: T, beta2: T },
    Horseshoe { beta: T, tau: T },
    Solenoid { beta1: T, beta2: T },
}

impl<T: Scalar> TryFrom<SystemRepr<T>> for SystemSpec<T> {
    type Error = Error;

    fn try_from(r: SystemRepr<T>) -> Result<Self> {
        let spec = match r {
            SystemRepr::Tent { a } => SystemSpec::Tent { a },
            SystemRepr::Baker { beta1, beta2 } => SystemSpec::Baker { beta1, beta2 },
            SystemRepr::Horseshoe { beta, tau } => SystemSpec::Horseshoe { beta, tau },
            SystemRepr::Solenoid { beta1, beta2 } => SystemSpec::Solenoid { beta1, beta2 },
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl<T: Scalar> From<SystemSpec<T>> for SystemRepr<T> {
    fn from(s: SystemSpec<T>) -> Self {
        match s {
            SystemSpec::Tent { a } => SystemRepr::Tent { a },
            SystemSpec::Baker { beta1, beta2 } => SystemRepr::Baker { beta1, beta2 },
            SystemSpec::Horseshoe { beta, tau } => SystemRepr::Horseshoe { beta, tau },
            SystemSpec::Solenoid { beta1, beta2 } => SystemRepr::Solenoid { beta1, beta2 },
        }
    }
}

/// Self-similar codings of a system's invariant set.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedIfs<T> {
    /// Tent: the inverse branches. Otherwise the stable (contracting) factor.
    pub contracting: IfsSystem<T>,
    /// Inverse branches along the expanding coordinate of two-sided systems.
    pub expanding_inverse: Option<IfsSystem<T>>,
}

fn out_of_range(msg: &str) -> Error {
    Error::ParameterOutOfRange(msg.to_string())
}

fn open_unit<T: Scalar>(x: T) -> bool {
    x > T::zero() && x < T::one()
}

impl<T: Scalar> SystemSpec<T> {
    pub fn tent(a: T) -> Result<Self> {
        let s = SystemSpec::Tent { a };
        s.validate().map(|_| s)
    }

    pub fn baker(beta1: T, beta2: T) -> Result<Self> {
        let s = SystemSpec::Baker { beta1, beta2 };
        s.validate().map(|_| s)
    }

    pub fn horseshoe(beta: T, tau: T) -> Result<Self> {
        let s = SystemSpec::Horseshoe { beta, tau };
        s.validate().map(|_| s)
    }

    pub fn solenoid(beta1: T, beta2: T) -> Result<Self> {
        let s = SystemSpec::Solenoid { beta1, beta2 };
        s.validate().map(|_| s)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            SystemSpec::Tent { a } => {
                if !(a > T::one() && a.is_finite()) {
                    return Err(out_of_range("tent needs a > 1"));
                }
            }
            SystemSpec::Baker { beta1, beta2 } | SystemSpec::Solenoid { beta1, beta2 } => {
                if !(open_unit(beta1) && open_unit(beta2) && beta1 + beta2 < T::one()) {
                    return Err(out_of_range(
                        "need beta1, beta2 in (0,1) with beta1 + beta2 < 1",
                    ));
                }
            }
            SystemSpec::Horseshoe { beta, tau } => {
                if !(beta > T::zero() && beta < T::lit(0.5)) {
                    return Err(out_of_range("horseshoe needs beta in (0, 1/2)"));
                }
                if !(tau > T::lit(2.0) && tau.is_finite()) {
                    return Err(out_of_range("horseshoe needs tau > 2"));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &'static str {
        match self {
            SystemSpec::Tent { .. } => "tent",
            SystemSpec::Baker { .. } => "baker",
            SystemSpec::Horseshoe { .. } => "horseshoe",
            SystemSpec::Solenoid { .. } => "solenoid",
        }
    }

    pub fn side(&self) -> Side {
        match self {
            SystemSpec::Tent { .. } => Side::One,
            _ => Side::Two,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            SystemSpec::Tent { .. } => 1,
            SystemSpec::Baker { .. } | SystemSpec::Horseshoe { .. } => 2,
            SystemSpec::Solenoid { .. } => 3,
        }
    }

    /// Number of leading coordinates coded from the past.
    pub fn contracting_dim(&self) -> usize {
        match self {
            SystemSpec::Solenoid { .. } => 2,
            _ => 1,
        }
    }

    /// Compact box the invariant set is coded in.
    pub fn domain(&self) -> BoxDomain<T> {
        BoxDomain::unit(self.ambient_dim())
    }

    /// Largest expansion factor over the branches.
    pub fn lipschitz(&self) -> T {
        match *self {
            SystemSpec::Tent { a } => T::lit(2.0) * a,
            SystemSpec::Horseshoe { tau, .. } => tau,
            SystemSpec::Baker { .. } | SystemSpec::Solenoid { .. } => T::lit(2.0),
        }
    }

    pub fn apply_map(&self, p: &[T]) -> Result<Vec<T>> {
        if p.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: p.len(),
            });
        }
        let undefined = || Error::UndefinedRegion(p.iter().map(|x| x.as_f64()).collect());
        let one = T::one();
        let two = T::lit(2.0);
        let half = T::lit(0.5);
        let in_unit = |x: T| x >= T::zero() && x <= one;
        match *self {
            SystemSpec::Tent { a } => Ok(vec![a - two * a * (p[0] - half).abs()]),
            SystemSpec::Baker { beta1, beta2 } => {
                let (x, y) = (p[0], p[1]);
                if !(in_unit(x) && in_unit(y)) {
                    return Err(undefined());
                }
                Ok(if y <= half {
                    vec![beta1 * x, two * y]
                } else {
                    vec![one - beta2 + beta2 * x, two * y - one]
                })
            }
            SystemSpec::Horseshoe { beta, tau } => {
                let (x, y) = (p[0], p[1]);
                if !(in_unit(x) && in_unit(y)) {
                    return Err(undefined());
                }
                if y <= one / tau {
                    Ok(vec![beta * x, tau * y])
                } else if y > one - one / tau {
                    Ok(vec![one - beta * x, tau - tau * y])
                } else {
                    Err(undefined())
                }
            }
            SystemSpec::Solenoid { beta1, beta2 } => {
                let (x, y, z) = (p[0], p[1], p[2]);
                if !(in_unit(x) && in_unit(y) && in_unit(z)) {
                    return Err(undefined());
                }
                Ok(if z <= half {
                    vec![beta1 * x, beta1 * y, two * z]
                } else {
                    let shift = one - beta2;
                    vec![shift + beta2 * x, shift + beta2 * y, two * z - one]
                })
            }
        }
    }

    pub fn derive_ifs(&self) -> DerivedIfs<T> {
        let one = T::one();
        let line = |c: T, flip: bool, t: T| Similitude::line(c, flip, t).expect("validated");
        let unit = BoxDomain::unit(1);
        let build = |domain: BoxDomain<T>, maps| IfsSystem::new(domain, maps).expect("validated");
        let half = T::lit(0.5);
        let dyadic = || {
            build(
                unit.clone(),
                vec![line(half, false, T::zero()), line(half, false, half)],
            )
        };
        match *self {
            SystemSpec::Tent { a } => {
                let c = one / (T::lit(2.0) * a);
                DerivedIfs {
                    contracting: build(
                        unit.clone(),
                        vec![line(c, false, T::zero()), line(c, true, one)],
                    ),
                    expanding_inverse: None,
                }
            }
            SystemSpec::Baker { beta1, beta2 } => DerivedIfs {
                contracting: build(
                    unit.clone(),
                    vec![
                        line(beta1, false, T::zero()),
                        line(beta2, false, one - beta2),
                    ],
                ),
                expanding_inverse: Some(dyadic()),
            },
            SystemSpec::Horseshoe { beta, tau } => DerivedIfs {
                contracting: build(
                    unit.clone(),
                    vec![line(beta, false, T::zero()), line(beta, true, one)],
                ),
                expanding_inverse: Some(build(
                    unit.clone(),
                    vec![
                        line(one / tau, false, T::zero()),
                        line(one / tau, true, one),
                    ],
                )),
            },
            SystemSpec::Solenoid { beta1, beta2 } => {
                let hom = |c: T, t: T| Similitude::homothety(c, vec![t, t]).expect("validated");
                DerivedIfs {
                    contracting: build(
                        BoxDomain::unit(2),
                        vec![hom(beta1, T::zero()), hom(beta2, one - beta2)],
                    ),
                    expanding_inverse: Some(dyadic()),
                }
            }
        }
    }

    /// Similarity dimension of the invariant set: the Moran root of each
    /// self-similar factor, plus one for a full expanding interval.
    pub fn invariant_set_dimension(&self) -> T {
        let ifs = self.derive_ifs();
        let dim = |s: &IfsSystem<T>| {
            crate::fractal::moran_dimension(&s.ratios())
                .expect("validated")
                .dimension
        };
        dim(&ifs.contracting) + ifs.expanding_inverse.as_ref().map_or(T::zero(), dim)
    }
}

fn check_sequence<T: Scalar>(spec: &SystemSpec<T>, seq: &SymbolSequence) -> Result<()> {
    if seq.side() != spec.side() || seq.alphabet_size() != 2 {
        return Err(Error::Incompatible);
    }
    Ok(())
}

fn code_two_sided<T: Scalar>(
    ifs: &DerivedIfs<T>,
    past: &[u8],
    future: &[u8],
) -> Result<CodedPoint<T>> {
    let expanding = ifs.expanding_inverse.as_ref().expect("two-sided system");
    let c = code_point(&ifs.contracting, past)?;
    let e = code_point(expanding, future)?;
    let mut center = c.center;
    center.extend(e.center);
    let mut prefix: Vec<u8> = past.iter().rev().copied().collect();
    prefix.extend_from_slice(future);
    Ok(CodedPoint {
        center,
        radius: (c.radius * c.radius + e.radius * e.radius).sqrt(),
        prefix,
    })
}

/// `f^n(π(s))` evaluated as `π(σ^n s)` at the given coding depth.
///
/// Two-sided sequences need `depth` past digits after shifting; the prefix of
/// the returned point lists those past digits oldest first, then the future.
pub fn code_orbit_point<T: Scalar>(
    spec: &SystemSpec<T>,
    seq: &SymbolSequence,
    n: usize,
    depth: usize,
) -> Result<CodedPoint<T>> {
    check_sequence(spec, seq)?;
    seq.require(n + depth)?;
    let shifted = seq.shift(n)?;
    let ifs = spec.derive_ifs();
    match spec.side() {
        Side::One => code_point(&ifs.contracting, &shifted.digits()[..depth]),
        Side::Two => {
            shifted.require_past(depth)?;
            code_two_sided(&ifs, &shifted.past()[..depth], &shifted.digits()[..depth])
        }
    }
}

/// Outcome of [`conjugacy_defect`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct ConjugacyReport<T> {
    pub trials: usize,
    /// Largest `|f(center π(s)) - center π(σ s)|`.
    pub max_defect: T,
    /// Largest `L r(s) + r(σ s)` over the trials, the defect allowed by the radii.
    pub max_allowance: T,
    /// Largest `defect - (L r(s) + r(σ s))`; at most rounding error when the
    /// conjugacy holds.
    pub max_excess: T,
}

/// Compares `f` applied to coded points against coding the shifted sequence,
/// over `trials` uniformly random sequences.
pub fn conjugacy_defect<T: Scalar>(
    spec: &SystemSpec<T>,
    trials: usize,
    prefix_len: usize,
    depth: usize,
    seed: u64,
) -> Result<ConjugacyReport<T>> {
    if prefix_len < depth + 1 {
        return Err(Error::InvalidArgument(format!(
            "prefix_len {prefix_len} must exceed depth {depth}"
        )));
    }
    if trials == 0 {
        return Err(Error::EmptyInput);
    }
    let lipschitz = spec.lipschitz();
    let uniform = DigitSampler::uniform(2);
    let side = spec.side();
    let parts = par_chunks(trials, seed, |rng, _, n| -> Result<(T, T, T)> {
        let mut worst = (T::zero(), T::zero(), T::neg_infinity());
        for _ in 0..n {
            let mut future = vec![0u8; prefix_len];
            uniform.fill(rng, &mut future);
            let seq = match side {
                Side::One => SymbolSequence::one_sided(2, future)?,
                Side::Two => {
                    let mut past = vec![0u8; depth];
                    uniform.fill(rng, &mut past);
                    SymbolSequence::two_sided(2, past, future)?
                }
            };
            let p = code_orbit_point(spec, &seq, 0, depth)?;
            let q = code_orbit_point(spec, &seq, 1, depth)?;
            let image = spec.apply_map(&p.center)?;
            let defect = distance(&image, &q.center);
            let allowance = lipschitz * p.radius + q.radius;
            worst.0 = worst.0.max(defect);
            worst.1 = worst.1.max(allowance);
            worst.2 = worst.2.max(defect - allowance);
        }
        Ok(worst)
    });
    let mut report = ConjugacyReport {
        trials,
        max_defect: T::zero(),
        max_allowance: T::zero(),
        max_excess: T::neg_infinity(),
    };
    for part in parts {
        let (d, a, e) = part?;
        report.max_defect = report.max_defect.max(d);
        report.max_allowance = report.max_allowance.max(a);
        report.max_excess = report.max_excess.max(e);
    }
    Ok(report)
}

/// Separation gap of the factor that certifies Li-Yorke separation: the coding
/// IFS for one-sided systems, the contracting factor otherwise.
pub fn separation_gap<T: Scalar>(spec: &SystemSpec<T>) -> Result<T> {
    verify_separation(&spec.derive_ifs().contracting)
}

/// Samples the invariant set: past digits from the Bernoulli measure of the
/// contracting factor, future digits from that of the expanding factor.
pub fn sample_invariant_set<T: Scalar>(
    spec: &SystemSpec<T>,
    count: usize,
    depth: usize,
    seed: u64,
) -> CodedCloud<T> {
    let ifs = spec.derive_ifs();
    let to_sampler = |s: &IfsSystem<T>| {
        let w: Vec<f64> = bernoulli_weights(s)
            .into_iter()
            .map(Scalar::as_f64)
            .collect();
        DigitSampler::new(&w)
    };
    let past_sampler = to_sampler(&ifs.contracting);
    let future_sampler = ifs.expanding_inverse.as_ref().map(to_sampler);
    let dim = spec.ambient_dim();
    let prefix_len = if future_sampler.is_some() {
        2 * depth
    } else {
        depth
    };
    let chunks = par_chunks(count, seed, |rng, _, n| {
        let mut coords = Vec::with_capacity(n * dim);
        let mut radii = Vec::with_capacity(n);
        let mut prefixes = Vec::with_capacity(n * prefix_len);
        let mut past = vec![0u8; depth];
        let mut future = vec![0u8; depth];
        for _ in 0..n {
            past_sampler.fill(rng, &mut past);
            let p = match &future_sampler {
                None => code_point(&ifs.contracting, &past),
                Some(fs) => {
                    fs.fill(rng, &mut future);
                    code_two_sided(&ifs, &past, &future)
                }
            }
            .expect("sampled digits are valid");
            coords.extend_from_slice(&p.center);
            radii.push(p.radius);
            prefixes.extend_from_slice(&p.prefix);
        }
        (coords, radii, prefixes)
    });
    let mut coords = Vec::with_capacity(count * dim);
    let mut radii = Vec::with_capacity(count);
    let mut prefixes = Vec::with_capacity(count * prefix_len);
    for (c, r, p) in chunks {
        coords.extend(c);
        radii.extend(r);
        prefixes.extend(p);
    }
    CodedCloud::from_parts(
        PointCloud::new(dim, coords).expect("aligned rows"),
        radii,
        prefixes,
        prefix_len,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fractal::moran_dimension;

    fn tent2() -> SystemSpec<f64> {
        SystemSpec::tent(2.0).unwrap()
    }

    #[test]
    fn tent_values() {
        let t = tent2();
        assert_eq!(t.apply_map(&[0.5]).unwrap(), vec![2.0]);
        assert_eq!(t.apply_map(&[0.0]).unwrap(), vec![0.0]);
        assert!((t.apply_map(&[0.8]).unwrap()[0] - 0.8).abs() < 1e-15);
    }

    #[test]
    fn baker_origin_is_fixed() {
        let b = SystemSpec::baker(1.0 / 3.0, 1.0 / 3.0).unwrap();
        assert_eq!(b.apply_map(&[0.0, 0.0]).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn horseshoe_middle_strip_is_undefined() {
        let h = SystemSpec::horseshoe(1.0 / 3.0, 3.0).unwrap();
        assert!(matches!(
            h.apply_map(&[0.2, 0.5]),
            Err(Error::UndefinedRegion(_))
        ));
        assert!(h.apply_map(&[0.2, 0.2]).is_ok());
        assert!(h.apply_map(&[0.2, 0.9]).is_ok());
    }

    #[test]
    fn parameter_ranges() {
        assert!(SystemSpec::tent(1.0).is_err());
        assert!(SystemSpec::baker(0.6, 0.5).is_err());
        assert!(SystemSpec::horseshoe(0.5, 3.0).is_err());
        assert!(SystemSpec::horseshoe(0.3, 2.0).is_err());
        assert!(SystemSpec::solenoid(0.0, 0.5).is_err());
        let bad: std::result::Result<SystemSpec<f64>, _> =
            serde_json::from_str(r#"{"kind":"tent","a":0.5}"#);
        assert!(bad.is_err());
        let ok: SystemSpec<f64> = serde_json::from_str(r#"{"kind":"tent","a":2.0}"#).unwrap();
        assert_eq!(ok, tent2());
    }

    #[test]
    fn derived_dimensions() {
        let t = tent2().derive_ifs();
        assert_eq!(t.contracting.ratios(), vec![0.25, 0.25]);
        assert!((moran_dimension(&t.contracting.ratios()).unwrap().dimension - 0.5).abs() < 1e-12);

        let b = SystemSpec::baker(1.0 / 3.0, 1.0 / 3.0)
            .unwrap()
            .derive_ifs();
        let d = moran_dimension(&b.contracting.ratios()).unwrap().dimension;
        assert!((d - 2f64.ln() / 3f64.ln()).abs() < 1e-12);

        let h = SystemSpec::horseshoe(1.0 / 3.0, 3.0).unwrap();
        assert!((h.invariant_set_dimension() - 2.0 * 2f64.ln() / 3f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn contracting_factors_are_separated() {
        for spec in [
            tent2(),
            SystemSpec::baker(0.3, 0.4).unwrap(),
            SystemSpec::horseshoe(0.25, 3.0).unwrap(),
            SystemSpec::solenoid(0.2, 0.3).unwrap(),
        ] {
            assert!(separation_gap(&spec).unwrap() > 0.0, "{}", spec.name());
        }
        let h = SystemSpec::horseshoe(0.25, 3.0).unwrap().derive_ifs();
        assert!(verify_separation(h.expanding_inverse.as_ref().unwrap()).is_ok());
    }

    #[test]
    fn tent_inverse_branches_are_right_inverses() {
        let spec = tent2();
        let ifs = spec.derive_ifs().contracting;
        for k in 0..=100 {
            let x = k as f64 / 100.0;
            for s in ifs.maps() {
                let y = spec.apply_map(&s.apply(&[x])).unwrap()[0];
                assert!((y - x).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn tent_orbit_fixed_points() {
        let spec = tent2();
        let ones = SymbolSequence::one_sided(2, vec![1; 60]).unwrap();
        let twos = SymbolSequence::one_sided(2, vec![2; 60]).unwrap();
        for n in [0, 3, 10] {
            assert!(code_orbit_point(&spec, &ones, n, 40).unwrap().center[0].abs() < 1e-15);
            assert!((code_orbit_point(&spec, &twos, n, 40).unwrap().center[0] - 0.8).abs() < 1e-15);
        }
    }

    #[test]
    fn orbit_at_time_zero_is_code_point() {
        let spec = tent2();
        let seq = SymbolSequence::one_sided(2, vec![1, 2, 2, 1, 2, 1, 1, 2]).unwrap();
        let direct = code_point(&spec.derive_ifs().contracting, &seq.digits()[..6]).unwrap();
        assert_eq!(code_orbit_point(&spec, &seq, 0, 6).unwrap(), direct);
        assert!(matches!(
            code_orbit_point(&spec, &seq, 3, 6),
            Err(Error::InsufficientPrefix { .. })
        ));
    }

    #[test]
    fn two_sided_orbit_needs_past() {
        let spec = SystemSpec::baker(0.25, 0.25).unwrap();
        let seq = SymbolSequence::two_sided(2, vec![1; 2], vec![2; 20]).unwrap();
        assert!(code_orbit_point(&spec, &seq, 0, 5).is_err());
        // shifting moves future digits into the past
        assert!(code_orbit_point(&spec, &seq, 3, 5).is_ok());
    }

    #[test]
    fn fixed_point_defect_is_rounding() {
        let spec = tent2();
        let seq = SymbolSequence::one_sided(2, vec![2; 50]).unwrap();
        let p = code_orbit_point(&spec, &seq, 0, 40).unwrap();
        let q = code_orbit_point(&spec, &seq, 1, 40).unwrap();
        assert!((spec.apply_map(&p.center).unwrap()[0] - q.center[0]).abs() < 1e-15);
    }

    #[test]
    fn printed_fold_branch_would_break_conjugacy() {
        // with y -> 1 - 2y the upper branch leaves the square
        let y: f64 = 0.75;
        assert!(1.0 - 2.0 * y < 0.0);
        let b = SystemSpec::baker(0.25, 0.25).unwrap();
        assert_eq!(b.apply_map(&[0.0, y]).unwrap()[1], 0.5);
    }

    #[test]
    fn invariant_set_samples_stay_in_domain() {
        let spec = SystemSpec::solenoid(0.3, 0.3).unwrap();
        let cloud = sample_invariant_set(&spec, 500, 20, 4);
        assert_eq!(cloud.cloud.dim(), 3);
        assert!(cloud
            .cloud
            .coords()
            .iter()
            .all(|&x| (0.0..=1.0).contains(&x)));
    }
}
