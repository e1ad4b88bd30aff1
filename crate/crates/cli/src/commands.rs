use std::path::Path;

use clap::ValueEnum;
use liyorke::analysis::{
    box_count, dimension_fit, ladder_between, orbit_profile, random_pair, verify_liyorke,
    LiYorkeVerdict, Thresholds,
};
use liyorke::fractal::{
    moran_dimension, sample_attractor, sample_pair_set, sample_restricted, verify_separation,
};
use liyorke::rng::chunk_rng;
use liyorke::symbolic::{
    block_schedule, check_gap_condition, construct_partner, extract_filler, layout,
    schedule_covering, GapSequence, GapVerdict, Side, Slot, SymbolSequence,
};
use liyorke::systems::{code_orbit_point, sample_invariant_set};
use liyorke::{CodedCloud64, IfsSystem64, SystemSpec64};
use serde_json::{json, Value};

use crate::args::*;
use crate::error::{invalid, CliError, CliResult};
use crate::output::{csv_float, to_json};

/// Rendered output plus a short human-readable summary.
pub struct Outcome {
    pub content: String,
    pub summary: Vec<String>,
}

/// Stream used for a random restricted base; sampler chunks count up from 0.
const BASE_STREAM: u64 = u64::MAX;

enum Source {
    System(SystemSpec64),
    Ifs(IfsSystem64),
}

impl Source {
    fn from_args(a: &SystemArgs) -> CliResult<Self> {
        match (a.system, &a.ifs) {
            (Some(kind), None) => Ok(Source::System(match kind {
                SystemKind::Tent => SystemSpec64::tent(a.a)?,
                SystemKind::Baker => SystemSpec64::baker(a.beta1, a.beta2)?,
                SystemKind::Horseshoe => SystemSpec64::horseshoe(a.beta, a.tau)?,
                SystemKind::Solenoid => SystemSpec64::solenoid(a.beta1, a.beta2)?,
            })),
            (None, Some(path)) => {
                let text = read(path)?;
                let ifs = serde_json::from_str(&text)
                    .map_err(|e| invalid(format!("{}: {e}", path.display())))?;
                Ok(Source::Ifs(ifs))
            }
            _ => Err(invalid("exactly one of --system or --ifs is required")),
        }
    }

    /// The IFS whose attractor is sampled: the contracting factor of a system.
    fn ifs(&self) -> IfsSystem64 {
        match self {
            Source::System(s) => s.derive_ifs().contracting,
            Source::Ifs(ifs) => ifs.clone(),
        }
    }

    fn describe(&self) -> Value {
        match self {
            Source::System(s) => json!({ "system": s }),
            Source::Ifs(ifs) => json!({ "ifs": ifs }),
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_gaps(rule: &str) -> CliResult<GapSequence> {
    if let Some(rest) = rule.strip_prefix("list:") {
        let path = Path::new(rest.trim());
        if path.is_file() {
            let text = read(path)?;
            let values = match serde_json::from_str::<Vec<u64>>(&text) {
                Ok(v) => v,
                Err(_) => text
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<u64>().map_err(|_| {
                            invalid(format!("{}: bad gap value '{t}'", path.display()))
                        })
                    })
                    .collect::<CliResult<_>>()?,
            };
            return Ok(GapSequence::List { values });
        }
    }
    Ok(rule.parse()?)
}

fn parse_digits(s: &str) -> CliResult<Vec<u8>> {
    let s = s.trim();
    let bad = |t: &str| invalid(format!("bad digit '{t}'"));
    if s.contains(|c: char| c == ',' || c.is_whitespace()) {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u8>().map_err(|_| bad(t)))
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| bad(&c.to_string()))
            })
            .collect()
    }
}

fn sequence(m: u32, side: Side, future: &str, past: Option<&String>) -> CliResult<SymbolSequence> {
    let future = parse_digits(future)?;
    Ok(match side {
        Side::One => {
            if past.is_some() {
                return Err(invalid("past digits need --side two"));
            }
            SymbolSequence::one_sided(m, future)?
        }
        Side::Two => {
            let past = past
                .map(|p| parse_digits(p))
                .transpose()?
                .unwrap_or_default();
            SymbolSequence::two_sided(m, past, future)?
        }
    })
}

fn require_seed(seed: Option<u64>) -> CliResult<u64> {
    seed.ok_or_else(|| invalid("--seed is required"))
}

fn require_positive(name: &str, v: usize) -> CliResult<()> {
    if v == 0 {
        return Err(invalid(format!("--{name} must be positive")));
    }
    Ok(())
}

fn ladder(a: &LadderArgs) -> CliResult<Vec<f64>> {
    Ok(ladder_between(a.eps_max, a.eps_min, a.eps_base)?)
}

fn name_of<E: ValueEnum>(v: &E) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_owned()
}

pub fn dimension(a: &DimensionArgs) -> CliResult<Outcome> {
    let src = Source::from_args(&a.system)?;
    let ifs = src.ifs();
    let gap = verify_separation(&ifs)?;
    let sampling = a.count > 0;
    let (seed, eps) = if sampling {
        require_positive("depth", a.depth)?;
        (Some(require_seed(a.seed)?), ladder(&a.ladder)?)
    } else {
        (None, Vec::new())
    };

    let moran = moran_dimension(&ifs.ratios())?;
    let mut summary = vec![format!("D = {}", moran.dimension)];
    let mut report = json!({
        "source": src.describe(),
        "moran": moran,
        "separation_gap": gap,
    });
    if let Source::System(spec) = &src {
        let full = spec.invariant_set_dimension();
        report["invariant_set_dimension"] = json!(full);
        summary.push(format!("invariant set dimension = {full}"));
    }
    if let Some(seed) = seed {
        let cloud = sample_attractor(&ifs, a.count, a.depth, seed);
        let est = dimension_fit(&box_count(&cloud.cloud, &eps)?)?;
        summary.push(format!(
            "box-counting slope = {} ± {}",
            est.slope.unwrap_or(f64::NAN),
            est.stderr.unwrap_or(f64::NAN)
        ));
        report["box_count"] = json!({
            "count": a.count,
            "depth": a.depth,
            "seed": seed,
            "estimate": est,
        });
    }
    Ok(Outcome {
        content: to_json(&report),
        summary,
    })
}

pub fn construct(a: &ConstructArgs) -> CliResult<Outcome> {
    let gaps = parse_gaps(&a.gaps)?;
    let gap_report = check_gap_condition(&gaps, 64)?;
    let verdict = match gap_report.verdict {
        GapVerdict::Pass => "pass",
        GapVerdict::Fail => "fail",
        GapVerdict::Inconclusive => "inconclusive",
    };
    eprintln!("gap condition: {verdict} (limit {:?})", gap_report.limit);
    let side = match a.side {
        SideArg::One => Side::One,
        SideArg::Two => Side::Two,
    };
    let random = |stream: u64, len: usize| -> CliResult<SymbolSequence> {
        let seed = require_seed(a.seed)?;
        Ok(SymbolSequence::random(
            a.m,
            side,
            len,
            len,
            &mut chunk_rng(seed, stream),
        )?)
    };
    let base = match &a.base {
        Some(d) => sequence(a.m, side, d, a.base_past.as_ref())?,
        None => random(1, a.length)?,
    };

    if a.extract {
        let digits = a
            .partner
            .as_ref()
            .ok_or_else(|| invalid("--extract needs --partner"))?;
        let partner = sequence(a.m, side, digits, a.partner_past.as_ref())?;
        let filler = extract_filler(&partner, &base, &gaps)?;
        let summary = vec![format!("filler: {}", render(&filler))];
        let report = json!({
            "gaps": gaps,
            "gap_condition": gap_report,
            "base": base,
            "partner": partner,
            "filler": filler,
        });
        return Ok(Outcome {
            content: to_json(&report),
            summary,
        });
    }

    require_positive("length", a.length)?;
    let free = layout(&gaps, a.length)?
        .iter()
        .filter(|s| matches!(s, Slot::Free(_)))
        .count();
    let filler = match &a.filler {
        Some(d) => sequence(a.m, side, d, a.filler_past.as_ref())?,
        None if free == 0 && side == Side::One => SymbolSequence::one_sided(a.m, Vec::new())?,
        None => random(2, a.length)?,
    };
    let partner = construct_partner(&base, &gaps, &filler, a.length)?;
    let schedule = schedule_covering(&gaps, a.length)?;
    let summary = vec![format!("partner: {}", render(&partner))];
    let report = json!({
        "gaps": gaps,
        "gap_condition": gap_report,
        "base": base,
        "filler": filler,
        "partner": partner,
        "schedule": schedule,
    });
    Ok(Outcome {
        content: to_json(&report),
        summary,
    })
}

fn render(s: &SymbolSequence) -> String {
    let sep = if s.alphabet_size() > 9 { "," } else { "" };
    let join = |d: &[u8]| d.iter().map(u8::to_string).collect::<Vec<_>>().join(sep);
    match s.side() {
        Side::One => join(s.digits()),
        Side::Two => {
            let past: Vec<u8> = s.past().iter().rev().copied().collect();
            format!("{}.{}", join(&past), join(s.digits()))
        }
    }
}

pub fn verify(a: &VerifyArgs) -> CliResult<Outcome> {
    let spec = match Source::from_args(&a.system)? {
        Source::System(s) => s,
        Source::Ifs(_) => return Err(invalid("verify needs a built-in --system")),
    };
    let gaps = parse_gaps(&a.gaps)?;
    let seed = require_seed(a.seed)?;
    require_positive("depth", a.depth)?;
    if a.blocks < 3 {
        return Err(invalid("--blocks must be at least 3"));
    }
    let defaults = Thresholds::for_system(&spec)?;
    let decay = a.decay.unwrap_or(defaults.proximity_decay);
    let floor = a.floor.unwrap_or(defaults.separation_floor);
    if !(decay > 0.0 && decay < 1.0) {
        return Err(invalid("--decay must lie in (0, 1)"));
    }
    if !(floor > 0.0) {
        return Err(invalid("--floor must be positive"));
    }

    let (base, partner) = random_pair(&spec, &gaps, a.blocks, a.depth, seed)?;
    let partner = match a.control {
        Control::None => partner,
        Control::Identical => base.clone(),
        Control::EventuallyEqual => {
            let cut = block_schedule(&gaps, a.blocks)?.blocks[2].end();
            let mut digits = partner.digits()[..cut].to_vec();
            digits.extend_from_slice(&base.digits()[cut..]);
            match spec.side() {
                Side::One => SymbolSequence::one_sided(base.alphabet_size(), digits)?,
                Side::Two => SymbolSequence::two_sided(
                    base.alphabet_size(),
                    partner.past().to_vec(),
                    digits,
                )?,
            }
        }
    };
    let member = extract_filler(&partner, &base, &gaps).is_ok();
    let profile = orbit_profile(&spec, &base, &partner, &gaps, a.blocks, a.depth)?;
    let verdict = verify_liyorke(&profile, decay, floor)?;

    let mut report = json!({
        "system": spec,
        "gaps": gaps,
        "blocks": a.blocks,
        "depth": a.depth,
        "seed": seed,
        "control": name_of(&a.control),
        "partner_in_subset": member,
        "thresholds": { "proximity_decay": decay, "separation_floor": floor },
        "profile": profile,
        "verdict": verdict,
    });
    let mut summary = vec![verdict_line(&verdict)];
    if a.unsafe_iterate {
        let last = profile
            .proximity
            .iter()
            .chain(&profile.separation)
            .map(|c| c.time)
            .max()
            .unwrap_or(0);
        let naive = naive_orbits(&spec, &base, &partner, last, a.depth)?;
        if let Some(t) = naive.escaped {
            summary.push(format!("naive iteration left the domain at step {t}"));
        }
        report["naive_iteration"] = serde_json::to_value(&naive).expect("serializable");
    }
    Ok(Outcome {
        content: to_json(&report),
        summary,
    })
}

fn verdict_line(v: &LiYorkeVerdict<f64>) -> String {
    match &v.witness {
        None => "verdict: pass".to_owned(),
        Some(w) => format!(
            "verdict: fail ({} at block {}, time {}: bound {} against threshold {})",
            name_of_kind(w.kind),
            w.checkpoint.block,
            w.checkpoint.time,
            w.checkpoint.bound,
            w.threshold
        ),
    }
}

fn name_of_kind(k: liyorke::analysis::CheckpointKind) -> &'static str {
    match k {
        liyorke::analysis::CheckpointKind::Proximity => "proximity",
        liyorke::analysis::CheckpointKind::Separation => "separation",
    }
}

#[derive(serde::Serialize)]
struct NaiveStep {
    time: usize,
    naive_distance: f64,
    coded_distance: f64,
    drift: f64,
}

#[derive(serde::Serialize)]
struct NaiveOrbits {
    steps: Vec<NaiveStep>,
    escaped: Option<usize>,
}

fn dist(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

/// Iterates the map on both starting points in plain floating point and
/// compares against the coded orbit, sampling every power of two and the last
/// step.
fn naive_orbits(
    spec: &SystemSpec64,
    base: &SymbolSequence,
    partner: &SymbolSequence,
    steps: usize,
    depth: usize,
) -> CliResult<NaiveOrbits> {
    let domain = spec.domain();
    let inside = |p: &[f64]| {
        p.iter()
            .zip(domain.lo.iter().zip(&domain.hi))
            .all(|(x, (l, h))| x >= l && x <= h)
    };
    let mut x = code_orbit_point(spec, base, 0, depth)?.center;
    let mut y = code_orbit_point(spec, partner, 0, depth)?.center;
    let mut out = Vec::new();
    let mut escaped = None;
    for t in 0..=steps {
        if t.is_power_of_two() || t == 0 || t == steps {
            let cx = code_orbit_point(spec, base, t, depth)?.center;
            let cy = code_orbit_point(spec, partner, t, depth)?.center;
            out.push(NaiveStep {
                time: t,
                naive_distance: dist(&x, &y),
                coded_distance: dist(&cx, &cy),
                drift: dist(&x, &cx),
            });
        }
        if t == steps {
            break;
        }
        match (spec.apply_map(&x), spec.apply_map(&y)) {
            (Ok(nx), Ok(ny)) if inside(&nx) && inside(&ny) => {
                x = nx;
                y = ny;
            }
            _ => {
                escaped = Some(t + 1);
                break;
            }
        }
    }
    Ok(NaiveOrbits {
        steps: out,
        escaped,
    })
}

struct Sampled {
    cloud: CodedCloud64,
    reference_dimension: f64,
    base: Option<SymbolSequence>,
}

struct SampleRequest<'a> {
    system: &'a SystemArgs,
    target: Target,
    gaps: &'a str,
    base: Option<&'a String>,
    count: usize,
    depth: usize,
}

/// Everything that can be rejected is checked here, before any sampling.
struct Prepared {
    src: Source,
    ifs: IfsSystem64,
    target: Target,
    gaps: Option<GapSequence>,
    base: Option<SymbolSequence>,
}

fn prepare(r: &SampleRequest, seed: u64) -> CliResult<Prepared> {
    require_positive("count", r.count)?;
    require_positive("depth", r.depth)?;
    let src = Source::from_args(r.system)?;
    let ifs = src.ifs();
    verify_separation(&ifs)?;
    let gaps = match r.target {
        Target::Restricted | Target::Pairs => Some(parse_gaps(r.gaps)?),
        _ => None,
    };
    let base = match (r.target, r.base) {
        (Target::Restricted, Some(d)) => Some(sequence(ifs.len() as u32, Side::One, d, None)?),
        (Target::Restricted, None) => Some(SymbolSequence::random(
            ifs.len() as u32,
            Side::One,
            0,
            r.depth,
            &mut chunk_rng(seed, BASE_STREAM),
        )?),
        (_, Some(_)) => return Err(invalid("--base applies to the restricted target only")),
        _ => None,
    };
    if let (Some(g), Some(b)) = (&gaps, &base) {
        // surfaces a short base or exhausted gap list before sampling
        layout(g, r.depth)?;
        if b.len() < r.depth {
            return Err(invalid(format!(
                "--base has {} digits, depth {} needs that many",
                b.len(),
                r.depth
            )));
        }
    }
    Ok(Prepared {
        src,
        ifs,
        target: r.target,
        gaps,
        base,
    })
}

fn run_sampler(p: &Prepared, count: usize, depth: usize, seed: u64) -> CliResult<Sampled> {
    let d = moran_dimension(&p.ifs.ratios())?.dimension;
    let (cloud, reference_dimension) = match p.target {
        Target::Attractor => (sample_attractor(&p.ifs, count, depth, seed), d),
        Target::Restricted => (
            sample_restricted(
                &p.ifs,
                p.base.as_ref().expect("prepared"),
                p.gaps.as_ref().expect("prepared"),
                count,
                depth,
                seed,
            )?,
            d,
        ),
        Target::Pairs => (
            sample_pair_set(
                &p.ifs,
                p.gaps.as_ref().expect("prepared"),
                count,
                depth,
                seed,
            )?,
            2.0 * d,
        ),
        Target::Invariant => match &p.src {
            Source::System(spec) => (
                sample_invariant_set(spec, count, depth, seed),
                spec.invariant_set_dimension(),
            ),
            Source::Ifs(_) => (sample_attractor(&p.ifs, count, depth, seed), d),
        },
    };
    Ok(Sampled {
        cloud,
        reference_dimension,
        base: p.base.clone(),
    })
}

fn header(p: &Prepared, s: &Sampled, count: usize, depth: usize, seed: u64) -> Value {
    let mut v = json!({
        "source": p.src.describe(),
        "target": name_of(&p.target),
        "count": count,
        "depth": depth,
        "seed": seed,
        "reference_dimension": s.reference_dimension,
    });
    if let Some(g) = &p.gaps {
        v["gaps"] = json!(g);
    }
    if let Some(b) = &s.base {
        v["base"] = json!(b);
    }
    v
}

pub fn boxdim(a: &BoxdimArgs) -> CliResult<Outcome> {
    let seed = require_seed(a.seed)?;
    let req = SampleRequest {
        system: &a.system,
        target: a.target,
        gaps: &a.gaps,
        base: a.base.as_ref(),
        count: a.count,
        depth: a.depth,
    };
    let prepared = prepare(&req, seed)?;
    let eps = ladder(&a.ladder)?;
    let sampled = run_sampler(&prepared, a.count, a.depth, seed)?;
    let est = dimension_fit(&box_count(&sampled.cloud.cloud, &eps)?)?;
    let slope = est.slope.unwrap_or(f64::NAN);
    let summary = vec![format!(
        "slope = {slope} ± {} (reference {}), {} of {} grid sizes fitted",
        est.stderr.unwrap_or(f64::NAN),
        sampled.reference_dimension,
        est.fit_range.len(),
        est.epsilons.len()
    )];
    let content = match a.format {
        Format::Csv => est.to_csv(),
        Format::Json => {
            let mut v = header(&prepared, &sampled, a.count, a.depth, seed);
            v["estimate"] = json!(est);
            to_json(&v)
        }
    };
    Ok(Outcome { content, summary })
}

pub fn sample(a: &SampleArgs) -> CliResult<Outcome> {
    let seed = require_seed(a.seed)?;
    let req = SampleRequest {
        system: &a.system,
        target: a.target,
        gaps: &a.gaps,
        base: a.base.as_ref(),
        count: a.count,
        depth: a.depth,
    };
    let prepared = prepare(&req, seed)?;
    let sampled = run_sampler(&prepared, a.count, a.depth, seed)?;
    let cloud = &sampled.cloud.cloud;
    let summary = vec![format!(
        "{} points in dimension {}",
        cloud.len(),
        cloud.dim()
    )];
    let content = match a.format {
        Format::Csv => {
            let cols: Vec<String> = (1..=cloud.dim()).map(|i| format!("x{i}")).collect();
            let mut out = cols.join(",");
            out.push('\n');
            for p in cloud.iter() {
                let row: Vec<String> = p.iter().map(|&x| csv_float(x)).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut v = header(&prepared, &sampled, a.count, a.depth, seed);
            v["points"] = json!(cloud.iter().collect::<Vec<_>>());
            v["radii"] = json!(sampled.cloud.radii);
            to_json(&v)
        }
    };
    Ok(Outcome { content, summary })
}
