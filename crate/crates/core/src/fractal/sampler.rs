//! Samplers for the Bernoulli measure with weights `c_i^D` and its images under
//! the coding map: on the attractor, on the restricted set of partners of a
//! fixed base, and on the set of coded pairs.

use super::{moran_dimension, IfsSystem};
use crate::cloud::{CodedCloud, PointCloud};
use crate::error::{Error, Result};
use crate::rng::{par_chunks, DigitSampler};
use crate::scalar::Scalar;
use crate::symbolic::{fill_layout, layout, GapSequence, Slot, SymbolSequence};

/// Probability vector `(c_1^D, .., c_m^D)` with `D` the Moran root.
pub fn bernoulli_weights<T: Scalar>(ifs: &IfsSystem<T>) -> Vec<T> {
    let ratios = ifs.ratios();
    let d = moran_dimension(&ratios)
        .expect("validated ratios")
        .dimension;
    ratios.iter().map(|&c| c.powf(d)).collect()
}

fn digit_sampler<T: Scalar>(ifs: &IfsSystem<T>) -> DigitSampler {
    let w: Vec<f64> = bernoulli_weights(ifs)
        .into_iter()
        .map(Scalar::as_f64)
        .collect();
    DigitSampler::new(&w)
}

struct Chunk<T> {
    coords: Vec<T>,
    radii: Vec<T>,
    prefixes: Vec<u8>,
}

fn merge<T: Scalar>(chunks: Vec<Chunk<T>>, dim: usize, prefix_len: usize) -> CodedCloud<T> {
    let n: usize = chunks.iter().map(|c| c.radii.len()).sum();
    let mut coords = Vec::with_capacity(n * dim);
    let mut radii = Vec::with_capacity(n);
    let mut prefixes = Vec::with_capacity(n * prefix_len);
    for c in chunks {
        coords.extend(c.coords);
        radii.extend(c.radii);
        prefixes.extend(c.prefixes);
    }
    let cloud = PointCloud::new(dim, coords).expect("sampler keeps rows aligned");
    CodedCloud::from_parts(cloud, radii, prefixes, prefix_len)
}

/// `count` independent depth-`depth` cylinders drawn from the Bernoulli measure,
/// coded into the attractor.
pub fn sample_attractor<T: Scalar>(
    ifs: &IfsSystem<T>,
    count: usize,
    depth: usize,
    seed: u64,
) -> CodedCloud<T> {
    let sampler = digit_sampler(ifs);
    let w = ifs.dim();
    let chunks = par_chunks(count, seed, |rng, _, n| {
        let mut out = Chunk {
            coords: vec![T::zero(); n * w],
            radii: Vec::with_capacity(n),
            prefixes: vec![0; n * depth],
        };
        for i in 0..n {
            let digits = &mut out.prefixes[i * depth..(i + 1) * depth];
            sampler.fill(rng, digits);
            let r = ifs.code_unchecked(digits, &mut out.coords[i * w..(i + 1) * w]);
            out.radii.push(r);
        }
        out
    });
    merge(chunks, w, depth)
}

fn restricted_layout(
    ifs_len: usize,
    base: &SymbolSequence,
    gaps: &GapSequence,
    depth: usize,
) -> Result<(Vec<Slot>, usize)> {
    if base.alphabet_size() as usize != ifs_len {
        return Err(Error::InvalidArgument(format!(
            "base alphabet {} does not match {} maps",
            base.alphabet_size(),
            ifs_len
        )));
    }
    let slots = layout(gaps, depth)?;
    let free = slots.iter().filter(|s| matches!(s, Slot::Free(_))).count();
    // surfaces InsufficientPrefix on the base before any sampling
    fill_layout(&slots, base.digits(), &vec![1; free], base.alphabet_size())?;
    Ok((slots, free))
}

/// Points of the restricted set: fillers drawn from the Bernoulli measure are
/// mapped through the partner bijection for `base` and coded. This samples the
/// push-forward of the Bernoulli measure onto the partner set of `base`.
pub fn sample_restricted<T: Scalar>(
    ifs: &IfsSystem<T>,
    base: &SymbolSequence,
    gaps: &GapSequence,
    count: usize,
    depth: usize,
    seed: u64,
) -> Result<CodedCloud<T>> {
    let (slots, free) = restricted_layout(ifs.len(), base, gaps, depth)?;
    let m = base.alphabet_size();
    let sampler = digit_sampler(ifs);
    let w = ifs.dim();
    let chunks = par_chunks(count, seed, |rng, _, n| {
        let mut filler = vec![0u8; free];
        let mut out = Chunk {
            coords: vec![T::zero(); n * w],
            radii: Vec::with_capacity(n),
            prefixes: Vec::with_capacity(n * depth),
        };
        for i in 0..n {
            sampler.fill(rng, &mut filler);
            let digits = fill_layout(&slots, base.digits(), &filler, m).expect("layout checked");
            let r = ifs.code_unchecked(&digits, &mut out.coords[i * w..(i + 1) * w]);
            out.radii.push(r);
            out.prefixes.extend_from_slice(&digits);
        }
        out
    });
    Ok(merge(chunks, w, depth))
}

/// Pairs `(π(s), π(t))` with `s` drawn from the Bernoulli measure and `t` the
/// partner of `s` built from an independent Bernoulli filler. Rows are points of
/// `R^{2w}`; prefixes hold the base digits followed by the partner digits.
pub fn sample_pair_set<T: Scalar>(
    ifs: &IfsSystem<T>,
    gaps: &GapSequence,
    count: usize,
    depth: usize,
    seed: u64,
) -> Result<CodedCloud<T>> {
    let slots = layout(gaps, depth)?;
    let free = slots.iter().filter(|s| matches!(s, Slot::Free(_))).count();
    let m = ifs.len() as u32;
    let sampler = digit_sampler(ifs);
    let w = ifs.dim();
    let chunks = par_chunks(count, seed, |rng, _, n| {
        let mut base = vec![0u8; depth];
        let mut filler = vec![0u8; free];
        let mut out = Chunk {
            coords: vec![T::zero(); n * 2 * w],
            radii: Vec::with_capacity(n),
            prefixes: Vec::with_capacity(n * 2 * depth),
        };
        for i in 0..n {
            sampler.fill(rng, &mut base);
            sampler.fill(rng, &mut filler);
            let partner = fill_layout(&slots, &base, &filler, m).expect("base covers depth");
            let row = &mut out.coords[i * 2 * w..(i + 1) * 2 * w];
            let (x, y) = row.split_at_mut(w);
            let rx = ifs.code_unchecked(&base, x);
            let ry = ifs.code_unchecked(&partner, y);
            out.radii.push((rx * rx + ry * ry).sqrt());
            out.prefixes.extend_from_slice(&base);
            out.prefixes.extend_from_slice(&partner);
        }
        out
    });
    Ok(merge(chunks, 2 * w, 2 * depth))
}
