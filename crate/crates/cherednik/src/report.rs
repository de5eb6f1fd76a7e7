//! Report layer behind the command line: builds the requested objects,
//! serializes them deterministically as text, JSON (exact scalars as
//! strings) or CSV, and isolates per-point failures in sweeps.

use crate::characters::{
    euler_character_identity, quotient_character, SingularRep,
};
use crate::dunkl::DunklContext;
use crate::group::{Group, Params};
use crate::modules::{
    irreducible_quotient, radical_vanishes_on, submodule_closure, FiniteDim, GradedQuotient,
};
use crate::poly::Poly;
use crate::rank1::Rank1;
use crate::scalar::{parse_rational, parse_scalar, Scalar};
use crate::singular::{type_a_singular, wreath_singular, TypeAParams, WreathParams};
use crate::support::{residue_lemma_oracle, SupportTester};
use crate::{Error, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::domain(format!(
                "unknown format '{other}', expected text, json or csv"
            ))),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::domain(format!("serialization: {e}")))
}

fn no_csv(what: &str) -> Error {
    Error::domain(format!("csv output is not available for {what}"))
}

/// Everything needed to set up a computation: the group and its parameter
/// function, plus the wreath locus data when `r` is given.
pub struct Setup {
    pub group: Group,
    pub params: Params,
    pub wreath: Option<WreathParams>,
    pub type_a: Option<TypeAParams>,
}

/// Parse group + parameters. For `S(n)` the coupling comes from `r`; for
/// `G(l,1,n)` with `r` given, `l-2` diagonal parameters are completed on the
/// locus and `l-1` are verified against it.
pub fn setup(
    group_desc: &str,
    r: Option<u32>,
    k_str: Option<&str>,
    c_strs: &[String],
) -> Result<Setup> {
    let (l, n) = Group::parse_descriptor(group_desc)?;
    let group = Group::build(l, n)?;
    let c: Vec<Scalar> = c_strs
        .iter()
        .map(|s| parse_scalar(s, l))
        .collect::<Result<Vec<_>>>()?;
    if l == 1 {
        if !c.is_empty() {
            return Err(Error::domain("S(n) takes no diagonal parameters"));
        }
        let (params, type_a) = match (r, k_str) {
            (Some(r), None) => {
                let ta = TypeAParams::new(n, r)?;
                (
                    Params::type_a(Scalar::from_rat(ta.k.clone())),
                    Some(ta),
                )
            }
            (None, Some(ks)) => (Params::type_a(parse_scalar(ks, 1)?), None),
            (Some(_), Some(_)) => {
                return Err(Error::domain(
                    "give either --r (so k = r/n) or --k, not both",
                ));
            }
            (None, None) => {
                return Err(Error::domain("S(n) needs --r (k = r/n) or an explicit --k"));
            }
        };
        return Ok(Setup {
            group,
            params,
            wreath: None,
            type_a,
        });
    }
    let k = match k_str {
        Some(s) => parse_scalar(s, l)?,
        None => Scalar::zero(),
    };
    let wreath = match r {
        Some(r) => Some(if c.len() == (l - 1) as usize {
            let wp = WreathParams::new(l, n, r, k.clone(), c.clone())?;
            if !wp.on_er()? {
                return Err(Error::domain(format!(
                    "parameters are off the locus: residual {}",
                    wp.er_residual()?
                )));
            }
            wp
        } else {
            WreathParams::solving_er(l, n, r, k.clone(), c.clone())?
        }),
        None => None,
    };
    let params = match &wreath {
        Some(wp) => Params::wreath(wp.k.clone(), wp.c.clone()),
        None => {
            if c.len() != (l - 1) as usize {
                return Err(Error::domain(format!(
                    "expected {} diagonal parameters, got {}",
                    l - 1,
                    c.len()
                )));
            }
            Params::wreath(k, c)
        }
    };
    Ok(Setup {
        group,
        params,
        wreath,
        type_a: None,
    })
}

fn params_echo(params: &Params) -> Vec<(String, String)> {
    let mut out = vec![("k".to_string(), params.k.to_string())];
    for (i, c) in params.c.iter().enumerate() {
        out.push((format!("c{}", i + 1), c.to_string()));
    }
    out
}

/// Generators of the singular ideal for the group, plus the sum ideal for
/// type A (which cuts the ambient ring down to the reflection
/// representation's polynomial ring).
pub fn singular_generators(setup: &Setup) -> Result<Vec<Poly<Scalar>>> {
    let n = setup.group.n();
    if let Some(ta) = &setup.type_a {
        let mut gens = type_a_singular(ta);
        gens.push(Poly::linear_form(&vec![Scalar::one(); n]));
        Ok(gens)
    } else if let Some(wp) = &setup.wreath {
        wreath_singular(wp)
    } else {
        Err(Error::domain("no singular construction without --r"))
    }
}

pub fn default_cutoff(setup: &Setup) -> u32 {
    match (&setup.type_a, &setup.wreath) {
        (Some(ta), _) => ta.n as u32 * ta.r + 2,
        (_, Some(wp)) => wp.n as u32 * wp.r + 2,
        _ => 20,
    }
}

// ---------------------------------------------------------------------------
// dunkl

#[derive(Serialize)]
struct DunklReport {
    group: String,
    params: Vec<(String, String)>,
    direction: usize,
    input: Poly<Scalar>,
    output: Poly<Scalar>,
    input_text: String,
    output_text: String,
}

pub fn run_dunkl(
    group_desc: &str,
    k: Option<&str>,
    c: &[String],
    poly: &str,
    direction: usize,
    format: Format,
) -> Result<String> {
    let setup = setup(group_desc, None, k, c)?;
    let n = setup.group.n();
    if direction == 0 || direction > n {
        return Err(Error::domain(format!(
            "direction must be in 1..={n}"
        )));
    }
    let f = Poly::parse(poly, n, setup.group.l())?;
    let ctx = DunklContext::new(&setup.group, setup.params.clone())?;
    let out = ctx.apply_dir(direction - 1, &f)?;
    let report = DunklReport {
        group: setup.group.descriptor(),
        params: params_echo(&setup.params),
        direction,
        input_text: f.render(),
        output_text: out.render(),
        input: f,
        output: out,
    };
    match format {
        Format::Json => to_json(&report),
        Format::Text => Ok(format!(
            "T_{} [{}] {} = {}",
            report.direction, report.group, report.input_text, report.output_text
        )),
        Format::Csv => Err(no_csv("dunkl")),
    }
}

// ---------------------------------------------------------------------------
// singular

#[derive(Serialize)]
struct SingularReport {
    group: String,
    r: u32,
    degree: u32,
    params: Vec<(String, String)>,
    vectors: Vec<Poly<Scalar>>,
    vectors_text: Vec<String>,
    sum_is_zero: Option<bool>,
    killed_by_all_dunkl_operators: bool,
}

pub fn run_singular_type_a(n: usize, r: u32, format: Format) -> Result<String> {
    let ta = TypeAParams::new(n, r)?;
    let fis = type_a_singular(&ta);
    let group = Group::build(1, n)?;
    let params = Params::type_a(Scalar::from_rat(ta.k.clone()));
    let ctx = DunklContext::new(&group, params.clone())?;
    let mut killed = true;
    for f in &fis {
        for dir in 0..n {
            killed &= ctx.apply_dir(dir, f)?.is_zero();
        }
    }
    let sum = fis
        .iter()
        .fold(Poly::zero(n), |acc, f| acc.add(f));
    let report = SingularReport {
        group: group.descriptor(),
        r,
        degree: r,
        params: params_echo(&params),
        vectors_text: fis.iter().map(Poly::render).collect(),
        vectors: fis,
        sum_is_zero: Some(sum.is_zero()),
        killed_by_all_dunkl_operators: killed,
    };
    render_singular(report, format)
}

pub fn run_singular_wreath(
    l: u32,
    n: usize,
    r: u32,
    k: &str,
    c: &[String],
    format: Format,
) -> Result<String> {
    let desc = format!("G({l},1,{n})");
    let setup = setup(&desc, Some(r), Some(k), c)?;
    let wp = setup.wreath.as_ref().unwrap();
    let fis = wreath_singular(wp)?;
    let ctx = DunklContext::new(&setup.group, setup.params.clone())?;
    let mut killed = true;
    for f in &fis {
        for dir in 0..n {
            killed &= ctx.apply_dir(dir, f)?.is_zero();
        }
    }
    let report = SingularReport {
        group: setup.group.descriptor(),
        r,
        degree: r,
        params: params_echo(&setup.params),
        vectors_text: fis.iter().map(Poly::render).collect(),
        vectors: fis,
        sum_is_zero: None,
        killed_by_all_dunkl_operators: killed,
    };
    render_singular(report, format)
}

fn render_singular(report: SingularReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "singular vectors of degree {} for {}",
                report.degree, report.group
            )
            .unwrap();
            for (i, v) in report.vectors_text.iter().enumerate() {
                writeln!(out, "  f_{} = {}", i + 1, v).unwrap();
            }
            if let Some(sz) = report.sum_is_zero {
                writeln!(out, "  sum of vectors is zero: {sz}").unwrap();
            }
            write!(
                out,
                "  killed by all Dunkl operators: {}",
                report.killed_by_all_dunkl_operators
            )
            .unwrap();
            Ok(out)
        }
        Format::Csv => Err(no_csv("singular")),
    }
}

// ---------------------------------------------------------------------------
// quotient / radical / hilbert / gorenstein

#[derive(Serialize)]
pub struct QuotientReport {
    pub group: String,
    pub kind: String,
    pub params: Vec<(String, String)>,
    pub cutoff: u32,
    pub hilbert: Vec<usize>,
    pub finite_dimension: Option<usize>,
    pub gorenstein: Option<bool>,
    pub radical_vanishes: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    Closure,
    Radical,
}

pub fn build_quotient(setup: &Setup, kind: QuotientKind, cutoff: u32) -> Result<GradedQuotient> {
    let ctx = DunklContext::new(&setup.group, setup.params.clone())?;
    match kind {
        QuotientKind::Closure => {
            let gens = if setup.group.l() >= 2 && setup.group.n() == 1 && setup.wreath.is_none() {
                // rank one: the ideal below the first singular degree
                let r1 = Rank1::new(setup.group.l(), setup.params.c.clone())?;
                match r1.smallest_b(0) {
                    Some(b) if b <= u64::from(cutoff) => {
                        let mut p = Poly::zero(1);
                        p.add_term(crate::poly::Monomial(vec![b as u32]), Scalar::one());
                        vec![p]
                    }
                    _ => Vec::new(),
                }
            } else {
                singular_generators(setup)?
            };
            submodule_closure(&ctx, &gens, cutoff)
        }
        QuotientKind::Radical => irreducible_quotient(&ctx, cutoff),
    }
}

pub fn quotient_report(
    setup: &Setup,
    kind: QuotientKind,
    cutoff: u32,
    with_gorenstein: bool,
) -> Result<QuotientReport> {
    let q = build_quotient(setup, kind, cutoff)?;
    let finite = match q.finite_dim_decide() {
        FiniteDim::Finite(d) => Some(d),
        FiniteDim::UnknownAtCutoff => None,
    };
    let (gorenstein, radical_vanishes) = if with_gorenstein && finite.is_some() {
        let ctx = DunklContext::new(&setup.group, setup.params.clone())?;
        (
            Some(q.gorenstein_check()?),
            Some(radical_vanishes_on(&ctx, &q)?),
        )
    } else {
        (None, None)
    };
    Ok(QuotientReport {
        group: setup.group.descriptor(),
        kind: match kind {
            QuotientKind::Closure => "closure".into(),
            QuotientKind::Radical => "radical".into(),
        },
        params: params_echo(&setup.params),
        cutoff,
        hilbert: q.hilbert_series(),
        finite_dimension: finite,
        gorenstein,
        radical_vanishes,
    })
}

pub fn render_quotient(report: &QuotientReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let mut out = String::from("degree,dimension\n");
            for (d, v) in report.hilbert.iter().enumerate() {
                writeln!(out, "{d},{v}").unwrap();
            }
            Ok(out.trim_end().to_string())
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "{} quotient for {} (cutoff {})",
                report.kind, report.group, report.cutoff
            )
            .unwrap();
            let dims: Vec<String> = report.hilbert.iter().map(usize::to_string).collect();
            writeln!(out, "  hilbert: [{}]", dims.join(", ")).unwrap();
            match report.finite_dimension {
                Some(d) => writeln!(out, "  finite dimensional, total dimension {d}").unwrap(),
                None => writeln!(out, "  not finite dimensional at this cutoff").unwrap(),
            }
            if let Some(g) = report.gorenstein {
                writeln!(out, "  gorenstein: {g}").unwrap();
            }
            if let Some(rv) = report.radical_vanishes {
                writeln!(out, "  gram radical vanishes on quotient: {rv}").unwrap();
            }
            Ok(out.trim_end().to_string())
        }
    }
}

// ---------------------------------------------------------------------------
// character

#[derive(Serialize)]
struct CharacterReport {
    group: String,
    kind: String,
    params: Vec<(String, String)>,
    cutoff: u32,
    shift: String,
    classes: Vec<ClassCharacter>,
}

#[derive(Serialize)]
struct ClassCharacter {
    element: String,
    coefficients: Vec<String>,
}

pub fn run_character(
    setup: &Setup,
    kind: QuotientKind,
    cutoff: u32,
    format: Format,
) -> Result<String> {
    let q = build_quotient(setup, kind, cutoff)?;
    let classes = setup.group.conjugacy_class_reps();
    let rows: Vec<ClassCharacter> = classes
        .iter()
        .map(|g| {
            let ch = quotient_character(&q, g);
            ClassCharacter {
                element: g.to_string(),
                coefficients: ch.coeffs.iter().map(Scalar::to_string).collect(),
            }
        })
        .collect();
    let report = CharacterReport {
        group: setup.group.descriptor(),
        kind: match kind {
            QuotientKind::Closure => "closure".into(),
            QuotientKind::Radical => "radical".into(),
        },
        params: params_echo(&setup.params),
        cutoff,
        shift: q.h_shift.to_string(),
        classes: rows,
    };
    match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut out = String::from("element");
            for d in 0..=report.cutoff {
                write!(out, ",t^(h0+{d})").unwrap();
            }
            out.push('\n');
            for row in &report.classes {
                write!(out, "\"{}\"", row.element).unwrap();
                for c in &row.coefficients {
                    write!(out, ",{c}").unwrap();
                }
                out.push('\n');
            }
            Ok(out.trim_end().to_string())
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "characters of the {} quotient for {} (shift t^{})",
                report.kind, report.group, report.shift
            )
            .unwrap();
            for row in &report.classes {
                writeln!(out, "  {}: [{}]", row.element, row.coefficients.join(", ")).unwrap();
            }
            Ok(out.trim_end().to_string())
        }
    }
}

// ---------------------------------------------------------------------------
// locus

#[derive(Serialize)]
struct LocusReport {
    l: u32,
    n: usize,
    r: u32,
    k: Option<String>,
    sigma_r: Vec<String>,
    sigma_contains_k: Option<bool>,
    er_residual: Option<String>,
    on_er: Option<bool>,
}

pub fn run_locus_sigma(l: u32, n: usize, r: u32, k: &str, format: Format) -> Result<String> {
    let kr = parse_rational(k)?;
    let wp = WreathParams::new(l, n, r, Scalar::zero(), vec![Scalar::zero(); (l - 1) as usize])?;
    let report = LocusReport {
        l,
        n,
        r,
        k: Some(kr.to_string()),
        sigma_r: wp.sigma_r().iter().map(|q| q.to_string()).collect(),
        sigma_contains_k: Some(wp.sigma_r_contains(&kr)),
        er_residual: None,
        on_er: None,
    };
    match format {
        Format::Json => to_json(&report),
        Format::Text => Ok(format!(
            "Sigma_{r} = {{{}}}; contains k = {}: {}",
            report.sigma_r.join(", "),
            report.k.unwrap(),
            report.sigma_contains_k.unwrap()
        )),
        Format::Csv => Err(no_csv("locus")),
    }
}

pub fn run_locus_er(
    l: u32,
    n: usize,
    r: u32,
    k: &str,
    c: &[String],
    format: Format,
) -> Result<String> {
    let kv = parse_scalar(k, l)?;
    let cv: Vec<Scalar> = c
        .iter()
        .map(|s| parse_scalar(s, l))
        .collect::<Result<Vec<_>>>()?;
    let wp = WreathParams::new(l, n, r, kv, cv)?;
    let residual = wp.er_residual()?;
    let report = LocusReport {
        l,
        n,
        r,
        k: Some(wp.k.to_string()),
        sigma_r: wp.sigma_r().iter().map(|q| q.to_string()).collect(),
        sigma_contains_k: None,
        er_residual: Some(residual.to_string()),
        on_er: Some(residual.is_zero()),
    };
    match format {
        Format::Json => to_json(&report),
        Format::Text => Ok(format!(
            "E_{r} residual = {}; on locus: {}",
            report.er_residual.unwrap(),
            report.on_er.unwrap()
        )),
        Format::Csv => Err(no_csv("locus")),
    }
}

// ---------------------------------------------------------------------------
// support

#[derive(Serialize)]
struct SupportReport {
    n: usize,
    r: u32,
    point: Option<Vec<String>>,
    support_member: Option<bool>,
    pattern_member: Option<bool>,
    agree: bool,
    sampled_points: Option<usize>,
}

pub fn run_support_check(n: usize, r: u32, point: &str, format: Format) -> Result<String> {
    let coords: Vec<Scalar> = point
        .split(',')
        .map(|s| Ok(Scalar::from_rat(parse_rational(s)?)))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != n {
        return Err(Error::domain(format!(
            "point has {} coordinates, expected {n}",
            coords.len()
        )));
    }
    let tester = SupportTester::new(TypeAParams::new(n, r)?);
    let sm = tester.support_member(&coords);
    let pm = tester.pattern_member(&coords);
    let report = SupportReport {
        n,
        r,
        point: Some(coords.iter().map(Scalar::to_string).collect()),
        support_member: Some(sm),
        pattern_member: Some(pm),
        agree: sm == pm,
        sampled_points: None,
    };
    match format {
        Format::Json => to_json(&report),
        Format::Text => Ok(format!(
            "support member: {sm}; pattern member: {pm}; predicates agree: {}",
            report.agree
        )),
        Format::Csv => Err(no_csv("support")),
    }
}

/// Random rational points with controlled coincidence patterns.
pub fn sample_support_points(n: usize, rng: &mut StdRng, count: usize) -> Vec<Vec<Scalar>> {
    let mut points = Vec::with_capacity(count);
    for _ in 0..count {
        // draw a random partition-like pattern: group sizes that sum to n
        let mut sizes = Vec::new();
        let mut left = n;
        while left > 0 {
            let s = rng.gen_range(1..=left);
            sizes.push(s);
            left -= s;
        }
        // distinct small rational values per block
        let mut values: Vec<Scalar> = Vec::new();
        let mut used = Vec::new();
        for _ in 0..sizes.len() {
            loop {
                let num = rng.gen_range(-9i64..=9);
                let den = rng.gen_range(1i64..=4);
                let v = crate::scalar::rat(num, den);
                if !used.contains(&v) {
                    used.push(v.clone());
                    values.push(Scalar::from_rat(v));
                    break;
                }
            }
        }
        let mut point = Vec::with_capacity(n);
        for (size, v) in sizes.iter().zip(&values) {
            for _ in 0..*size {
                point.push(v.clone());
            }
        }
        // shuffle coordinates
        for i in (1..point.len()).rev() {
            let j = rng.gen_range(0..=i);
            point.swap(i, j);
        }
        points.push(point);
    }
    points
}

pub fn run_support_sample(
    n: usize,
    r: u32,
    count: usize,
    seed: u64,
    format: Format,
) -> Result<String> {
    let tester = SupportTester::new(TypeAParams::new(n, r)?);
    let mut rng = StdRng::seed_from_u64(seed);
    let points = sample_support_points(n, &mut rng, count);
    let mut agree = true;
    for p in &points {
        agree &= tester.support_member(p) == tester.pattern_member(p);
    }
    let report = SupportReport {
        n,
        r,
        point: None,
        support_member: None,
        pattern_member: None,
        agree,
        sampled_points: Some(count),
    };
    match format {
        Format::Json => to_json(&report),
        Format::Text => Ok(format!(
            "sampled {count} points: predicates agree on all: {agree}"
        )),
        Format::Csv => Err(no_csv("support")),
    }
}

#[derive(Serialize)]
struct LemmaReport {
    instances: usize,
    residues_vanished: usize,
    implication_failures: usize,
}

pub fn run_support_lemma(count: usize, seed: u64, format: Format) -> Result<String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut vanished = 0usize;
    let mut failures = 0usize;
    let mut done = 0usize;
    while done < count {
        let Some(check) = random_lemma_instance(&mut rng)? else {
            continue;
        };
        done += 1;
        if check.all_residues_vanish {
            vanished += 1;
        }
        if !check.implication_holds {
            failures += 1;
        }
    }
    let report = LemmaReport {
        instances: done,
        residues_vanished: vanished,
        implication_failures: failures,
    };
    match format {
        Format::Json => to_json(&report),
        Format::Text => Ok(format!(
            "residue lemma sweep: {} instances, {} with all residues vanishing, {} implication failures",
            report.instances, report.residues_vanished, report.implication_failures
        )),
        Format::Csv => Err(no_csv("lemma sweep")),
    }
}

/// One random instance satisfying the lemma hypotheses; mixes polynomial
/// cases (residues provably vanish) with fractional ones.
pub fn random_lemma_instance(
    rng: &mut StdRng,
) -> Result<Option<crate::support::ResidueLemmaCheck>> {
    let p = rng.gen_range(2usize..=4);
    let mut ys = Vec::new();
    while ys.len() < p {
        let y = crate::scalar::rat(rng.gen_range(-6i64..=6), 1);
        if !ys.contains(&y) {
            ys.push(y);
        }
    }
    let polynomial_case = rng.gen_bool(0.5);
    let mut mu: Vec<crate::scalar::Rat> = Vec::new();
    if polynomial_case {
        for _ in 0..p {
            mu.push(crate::scalar::rat(rng.gen_range(0i64..=3), 1));
        }
    } else {
        let mut frac_total = crate::scalar::Rat::new(0.into(), 1.into());
        for _ in 0..p - 1 {
            let den = rng.gen_range(2i64..=3);
            let num = rng.gen_range(-4i64..=6);
            let v = crate::scalar::rat(num, den);
            frac_total += &v;
            mu.push(v);
        }
        // close up to an integer total
        let target = crate::scalar::rat(rng.gen_range(0i64..=4), 1);
        mu.push(target - frac_total);
    }
    let total: crate::scalar::Rat = mu.iter().cloned().sum();
    if !total.is_integer() {
        return Ok(None);
    }
    let ti = num_traits::ToPrimitive::to_i64(&total.to_integer());
    match ti {
        Some(t) if t > -(p as i64) => {}
        _ => return Ok(None),
    }
    residue_lemma_oracle(&mu, &ys).map(Some)
}

// ---------------------------------------------------------------------------
// rank1

#[derive(Serialize)]
pub struct Rank1Report {
    pub l: u32,
    pub c: Vec<String>,
    pub rows: Vec<Rank1Row>,
}

#[derive(Serialize)]
pub struct Rank1Row {
    pub p: u32,
    pub m: u32,
    pub b: Option<u64>,
    pub multiplicity: u8,
    pub brute_multiplicity: u8,
    pub lowest_eigenvalue: String,
    pub agree: bool,
}

pub fn rank1_report(l: u32, c: &[String], cutoff: u32) -> Result<Rank1Report> {
    let cv: Vec<Scalar> = c
        .iter()
        .map(|s| parse_scalar(s, l))
        .collect::<Result<Vec<_>>>()?;
    let r1 = Rank1::new(l, cv)?;
    let mut rows = Vec::new();
    for p in 0..l {
        for m in 0..l {
            if m == p {
                continue;
            }
            let b = r1.b_value(p, m);
            let mult = r1.multiplicity(p, m);
            let brute = r1.brute_multiplicity(p, m, cutoff);
            rows.push(Rank1Row {
                p,
                m,
                b,
                multiplicity: mult,
                brute_multiplicity: brute,
                lowest_eigenvalue: r1.lowest_eigenvalue(p).to_string(),
                agree: mult == brute,
            });
        }
    }
    Ok(Rank1Report {
        l,
        c: r1.c.iter().map(Scalar::to_string).collect(),
        rows,
    })
}

pub fn render_rank1(report: &Rank1Report, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let mut out = String::from("p,m,b,multiplicity,brute_multiplicity,agree\n");
            for row in &report.rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    row.p,
                    row.m,
                    row.b.map(|b| b.to_string()).unwrap_or_default(),
                    row.multiplicity,
                    row.brute_multiplicity,
                    row.agree
                )
                .unwrap();
            }
            Ok(out.trim_end().to_string())
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "rank one multiplicities for l = {}, c = [{}]", report.l, report.c.join(", "))
                .unwrap();
            for row in &report.rows {
                writeln!(
                    out,
                    "  L(eta^{}) in M(eta^{}): multiplicity {} (brute {}), b = {:?}",
                    row.m, row.p, row.multiplicity, row.brute_multiplicity, row.b
                )
                .unwrap();
            }
            Ok(out.trim_end().to_string())
        }
    }
}

// ---------------------------------------------------------------------------
// euler-check

#[derive(Serialize)]
struct EulerReport {
    group: String,
    r: u32,
    params: Vec<(String, String)>,
    order: usize,
    classes: Vec<EulerClassRow>,
    all_ok: bool,
}

#[derive(Serialize)]
struct EulerClassRow {
    element: String,
    ok: bool,
    residual_alternating: Vec<String>,
    residual_closed: Vec<String>,
}

pub fn run_euler_check(
    setup: &Setup,
    r: u32,
    order: usize,
    format: Format,
) -> Result<String> {
    let cutoff = default_cutoff(setup).max(order as u32);
    let q = build_quotient(setup, QuotientKind::Closure, cutoff)?;
    if q.finite_dim_decide() == FiniteDim::UnknownAtCutoff {
        return Err(Error::domain(
            "the quotient is not finite dimensional at this cutoff",
        ));
    }
    let ctx = DunklContext::new(&setup.group, setup.params.clone())?;
    let u = if setup.group.l() == 1 {
        SingularRep::TypeAReflection
    } else {
        let wp = setup.wreath.as_ref().ok_or_else(|| {
            Error::domain("euler-check for a wreath group needs --r and locus parameters")
        })?;
        SingularRep::WreathHq { q: wp.q }
    };
    let mut rows = Vec::new();
    let mut all_ok = true;
    for g in setup.group.conjugacy_class_reps() {
        let check = euler_character_identity(&ctx, u, r, &q, &g, order)?;
        all_ok &= check.ok;
        rows.push(EulerClassRow {
            element: check.element.clone(),
            ok: check.ok,
            residual_alternating: check
                .residual_alternating
                .iter()
                .map(Scalar::to_string)
                .collect(),
            residual_closed: check.residual_closed.iter().map(Scalar::to_string).collect(),
        });
    }
    let report = EulerReport {
        group: setup.group.descriptor(),
        r,
        params: params_echo(&setup.params),
        order,
        classes: rows,
        all_ok,
    };
    match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "Euler characteristic identity for {} at r = {} through order {}",
                report.group, report.r, report.order
            )
            .unwrap();
            for row in &report.classes {
                writeln!(out, "  class {}: residual zero: {}", row.element, row.ok).unwrap();
            }
            write!(out, "all classes: {}", report.all_ok).unwrap();
            Ok(out)
        }
        Format::Csv => Err(no_csv("euler-check")),
    }
}

// ---------------------------------------------------------------------------
// sweep

#[derive(Serialize)]
pub struct SweepReport {
    pub points: Vec<SweepPoint>,
}

#[derive(Serialize)]
pub struct SweepPoint {
    pub label: String,
    pub ok: bool,
    pub error: Option<String>,
    pub hilbert: Option<Vec<usize>>,
    pub finite_dimension: Option<usize>,
    pub sigma_r_contains_k: Option<bool>,
    pub consistent: Option<bool>,
    pub rank1_all_agree: Option<bool>,
}

/// Sweep the wreath quotient over a list of rational `k` values, solving the
/// locus for the diagonal parameters and comparing finiteness against the
/// membership of `k` in `Sigma_r`. Points run on a bounded worker pool and
/// are reported in input order; failures are isolated per point.
pub fn run_sweep_quotient(
    group_desc: &str,
    r: u32,
    k_list: &[String],
    c: &[String],
    cutoff: Option<u32>,
    jobs: usize,
    format: Format,
) -> Result<String> {
    let jobs = jobs.max(1);
    let points: Vec<usize> = (0..k_list.len()).collect();
    let mut results: Vec<Option<SweepPoint>> = (0..k_list.len()).map(|_| None).collect();
    let chunks: Vec<Vec<usize>> = points.chunks(jobs.max(1)).map(<[usize]>::to_vec).collect();
    // run a bounded number of worker threads per chunk, deterministic merge
    for chunk in chunks {
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for &idx in &chunk {
                let k = k_list[idx].clone();
                let c = c.to_vec();
                let group_desc = group_desc.to_string();
                handles.push((
                    idx,
                    scope.spawn(move || sweep_quotient_point(&group_desc, r, &k, &c, cutoff)),
                ));
            }
            for (idx, h) in handles {
                let outcome = h.join().expect("worker panicked");
                results[idx] = Some(match outcome {
                    Ok(pt) => pt,
                    Err(e) => SweepPoint {
                        label: format!("k = {}", k_list[idx]),
                        ok: false,
                        error: Some(e.to_string()),
                        hilbert: None,
                        finite_dimension: None,
                        sigma_r_contains_k: None,
                        consistent: None,
                        rank1_all_agree: None,
                    },
                });
            }
        });
    }
    let report = SweepReport {
        points: results.into_iter().map(Option::unwrap).collect(),
    };
    render_sweep(&report, format)
}

fn sweep_quotient_point(
    group_desc: &str,
    r: u32,
    k: &str,
    c: &[String],
    cutoff: Option<u32>,
) -> Result<SweepPoint> {
    let setup = setup(group_desc, Some(r), Some(k), c)?;
    let cutoff = cutoff.unwrap_or_else(|| default_cutoff(&setup));
    let q = build_quotient(&setup, QuotientKind::Closure, cutoff)?;
    let finite = match q.finite_dim_decide() {
        FiniteDim::Finite(d) => Some(d),
        FiniteDim::UnknownAtCutoff => None,
    };
    let sigma = match (&setup.wreath, parse_rational(k)) {
        (Some(wp), Ok(kr)) => Some(wp.sigma_r_contains(&kr)),
        _ => None,
    };
    // membership in Sigma_r should match failure of finite dimensionality
    let consistent = sigma.map(|in_sigma| in_sigma == finite.is_none());
    Ok(SweepPoint {
        label: format!("k = {k}"),
        ok: true,
        error: None,
        hilbert: Some(q.hilbert_series()),
        finite_dimension: finite,
        sigma_r_contains_k: sigma,
        consistent,
        rank1_all_agree: None,
    })
}

/// Sweep rank one parameter points (semicolon separated lists of `l-1`
/// scalars) and compare closed-form multiplicities against brute force.
pub fn run_sweep_rank1(
    l: u32,
    c_points: &[String],
    cutoff: u32,
    format: Format,
) -> Result<String> {
    let mut points = Vec::new();
    for cp in c_points {
        let cs: Vec<String> = cp.split(',').map(str::to_string).collect();
        let point = match rank1_report(l, &cs, cutoff) {
            Ok(rep) => SweepPoint {
                label: format!("c = [{}]", rep.c.join(", ")),
                ok: true,
                error: None,
                hilbert: None,
                finite_dimension: None,
                sigma_r_contains_k: None,
                consistent: None,
                rank1_all_agree: Some(rep.rows.iter().all(|r| r.agree)),
            },
            Err(e) => SweepPoint {
                label: format!("c = [{cp}]"),
                ok: false,
                error: Some(e.to_string()),
                hilbert: None,
                finite_dimension: None,
                sigma_r_contains_k: None,
                consistent: None,
                rank1_all_agree: None,
            },
        };
        points.push(point);
    }
    render_sweep(&SweepReport { points }, format)
}

fn render_sweep(report: &SweepReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let mut out =
                String::from("label,ok,finite_dimension,sigma_r_contains_k,consistent,rank1_all_agree,error\n");
            for p in &report.points {
                writeln!(
                    out,
                    "\"{}\",{},{},{},{},{},{}",
                    p.label,
                    p.ok,
                    p.finite_dimension.map(|d| d.to_string()).unwrap_or_default(),
                    p.sigma_r_contains_k.map(|b| b.to_string()).unwrap_or_default(),
                    p.consistent.map(|b| b.to_string()).unwrap_or_default(),
                    p.rank1_all_agree.map(|b| b.to_string()).unwrap_or_default(),
                    p.error.clone().unwrap_or_default()
                )
                .unwrap();
            }
            Ok(out.trim_end().to_string())
        }
        Format::Text => {
            let mut out = String::new();
            for p in &report.points {
                let status = if !p.ok {
                    format!("error: {}", p.error.clone().unwrap_or_default())
                } else if let Some(d) = p.finite_dimension {
                    let sigma = p
                        .sigma_r_contains_k
                        .map(|b| format!(", k in Sigma_r: {b}"))
                        .unwrap_or_default();
                    format!("finite({d}){sigma}")
                } else if let Some(agree) = p.rank1_all_agree {
                    format!("multiplicities agree with brute force: {agree}")
                } else {
                    let sigma = p
                        .sigma_r_contains_k
                        .map(|b| format!(", k in Sigma_r: {b}"))
                        .unwrap_or_default();
                    format!("unknown at cutoff{sigma}")
                };
                writeln!(out, "{}: {}", p.label, status).unwrap();
            }
            Ok(out.trim_end().to_string())
        }
    }
}
