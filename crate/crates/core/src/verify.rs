//! Invariant suites over a single algebra, with a JSON summary.

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::basic::{basic_algebra, quiver_equality, two_basics, FreeCover};
use crate::cover::{gabriel_cover_truncated, GradedBase};
use crate::error::{Error, Result};
use crate::graded::{
    associated_graded, canonical_map_is_isomorphism, check_representative_independence, GradedAlgebra,
};
use crate::quiver::{analyze, min_generators_oracle, Analysis, AnalysisOptions, GeneratorSearch};
use crate::radical::{radical_oracle, OracleLimits};
use crate::wedderburn::{check_lift, WedderburnOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Bounds,
    Graded,
    Gabriel,
    Basics,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Suite> {
        match s {
            "prop12" | "bounds" => Ok(Suite::Bounds),
            "graded" => Ok(Suite::Graded),
            "gabriel" => Ok(Suite::Gabriel),
            "basics" => Ok(Suite::Basics),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidInput(format!("unknown suite {s:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bounds => "prop12",
            Suite::Graded => "graded",
            Suite::Gabriel => "gabriel",
            Suite::Basics => "basics",
            Suite::All => "all",
        }
    }

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Bounds, Suite::Graded, Suite::Gabriel, Suite::Basics],
            s => vec![s],
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Largest dimension handed to the brute-force oracles.
    pub oracle_limit: usize,
    /// Tensor truncation for the cover; defaults to the Loewy length.
    pub truncate: Option<usize>,
    /// Largest free tensor algebra the basics suite will build.
    pub free_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, oracle_limit: 24, truncate: None, free_limit: 400 }
    }
}

impl VerifyOptions {
    fn wedderburn(&self) -> WedderburnOptions {
        WedderburnOptions { seed: self.seed, ..Default::default() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub pass: bool,
    pub skipped: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: bool,
    pub suites: Vec<&'static str>,
    pub checks: Vec<Check>,
    pub first_counterexample: Option<Check>,
}

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn check(&mut self, name: impl Into<String>, pass: bool, detail: Value) {
        self.checks.push(Check { suite: self.suite, name: name.into(), pass, skipped: false, detail });
    }

    fn skip(&mut self, name: impl Into<String>, reason: String) {
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            pass: true,
            skipped: true,
            detail: json!(reason),
        });
    }
}

/// The grading used by the graded suites: the given one, or `gr A`.
fn graded_model(a: &Algebra, degrees: Option<&[usize]>) -> Result<GradedAlgebra> {
    match degrees {
        Some(d) => GradedAlgebra::new(a.clone(), d.to_vec()),
        None => Ok(associated_graded(a)?.graded),
    }
}

pub fn run(a: &Algebra, degrees: Option<&[usize]>, suite: Suite, opts: &VerifyOptions) -> Result<Summary> {
    let an = analyze(a, &AnalysisOptions { wedderburn: opts.wedderburn() })?;
    let graded = graded_model(a, degrees)?;
    let mut checks = Vec::new();
    let suites = suite.expand();
    for s in &suites {
        let mut rec = Recorder { suite: s.name(), checks: Vec::new() };
        match s {
            Suite::Bounds => bounds(&an, opts, &mut rec)?,
            Suite::Graded => graded_suite(a, degrees.is_some().then_some(&graded), &mut rec)?,
            Suite::Gabriel => gabriel(&graded, opts, &mut rec)?,
            Suite::Basics => basics(&an, &graded, opts, &mut rec)?,
            Suite::All => unreachable!(),
        }
        checks.extend(rec.checks);
    }
    let first_counterexample = checks.iter().find(|c| !c.pass).cloned();
    Ok(Summary {
        pass: first_counterexample.is_none(),
        suites: suites.iter().map(|s| s.name()).collect(),
        checks,
        first_counterexample,
    })
}

fn bounds(an: &Analysis, opts: &VerifyOptions, rec: &mut Recorder) -> Result<()> {
    let a = &an.algebra;
    let delta = an.natural_quiver()?;
    let gamma = an.ordinary_quiver()?;
    let sizes = an.sizes();
    let k = sizes.len();
    for i in 0..k {
        for j in 0..k {
            let (t, m) = (delta.arrows[i][j], gamma.arrows[i][j]);
            let nn = sizes[i] * sizes[j];
            rec.check(
                format!("t <= m <= n_i n_j t for {i} -> {j}"),
                t <= m && m <= nn * t,
                json!({"from": i, "to": j, "t": t, "m": m, "n_i": sizes[i], "n_j": sizes[j]}),
            );
        }
    }
    rec.check(
        "natural quiver dense in ordinary quiver",
        delta.is_dense_subquiver_of(&gamma),
        json!({
            "natural": delta.to_json(), "ordinary": gamma.to_json()
        }),
    );
    let total: usize = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| an.component(i, j).dim()).sum();
    rec.check("components sum to r/r^2", total == an.top.dim(), json!({"components": total, "top": an.top.dim()}));
    let search = GeneratorSearch { max_dim: opts.oracle_limit, seed: opts.seed, ..Default::default() };
    for i in 0..k {
        for j in 0..k {
            let comp = an.component(i, j);
            if comp.is_zero() {
                continue;
            }
            let name = format!("rank oracle for {i} -> {j}");
            match min_generators_oracle(&an.bimodule.restrict(&comp), &search) {
                Ok(g) => rec.check(
                    name,
                    g.generators.len() == delta.arrows[i][j] && g.lower_bound <= delta.arrows[i][j],
                    json!({"rank": delta.arrows[i][j], "greedy": g.generators.len(), "lower_bound": g.lower_bound}),
                ),
                Err(Error::OracleLimit(r)) => rec.skip(name, r),
                Err(e) => return Err(e),
            }
        }
    }
    let limits = OracleLimits { max_dim: opts.oracle_limit.min(16), seed: opts.seed, ..Default::default() };
    match radical_oracle(a, &limits) {
        Ok(r) => rec.check(
            "radical equals oracle",
            &r == an.chain.radical(),
            json!({
                "radical": an.chain.radical().dim(), "oracle": r.dim()
            }),
        ),
        Err(Error::OracleLimit(r)) => rec.skip("radical equals oracle", r),
        Err(e) => return Err(e),
    }
    let family = an.wedderburn.primitive_idempotents();
    rec.check("lifted idempotents", check_lift(a, &an.quotient, &family, &an.primitive), json!(family.elements.len()));
    rec.check("wedderburn data", an.wedderburn.check().is_ok(), json!(sizes));
    Ok(())
}

/// `gr(gr A)` has the structure constants of `gr A` in the canonical bases.
fn gr_is_idempotent(gr: &Algebra) -> Result<bool> {
    let grgr = associated_graded(gr)?.graded.algebra;
    if grgr.dim() != gr.dim() || grgr.unit() != gr.unit() {
        return Ok(false);
    }
    Ok((0..gr.dim()).all(|i| (0..gr.dim()).all(|j| grgr.basis_product(i, j) == gr.basis_product(i, j))))
}

fn graded_suite(a: &Algebra, given: Option<&GradedAlgebra>, rec: &mut Recorder) -> Result<()> {
    let gr = associated_graded(a)?;
    let g = &gr.graded;
    rec.check("dim gr A = dim A", g.algebra.dim() == a.dim(), json!({"gr": g.algebra.dim(), "a": a.dim()}));
    rec.check("gr A is radical-graded", g.is_radical_graded(), json!(g.radical_graded_failure()));
    rec.check("gr(gr A) = gr A", gr_is_idempotent(&g.algebra)?, json!(g.component_dims()));
    rec.check("gr product independent of representatives", check_representative_independence(a, &gr), Value::Null);
    rec.check("gr A validates", g.algebra.validate().is_valid(), Value::Null);
    if let Some(given) = given {
        match given.radical_graded_failure() {
            None => rec.check("A -> gr A is an isomorphism", canonical_map_is_isomorphism(given)?, Value::Null),
            Some(why) => rec.check("input grading is radical-graded", false, json!(why)),
        }
    }
    Ok(())
}

fn gabriel(g: &GradedAlgebra, opts: &VerifyOptions, rec: &mut Recorder) -> Result<()> {
    match gabriel_cover_truncated(g, &opts.wedderburn(), opts.truncate) {
        Ok(r) => rec.check("tensor cover", r.verdict, serde_json::to_value(&r).unwrap()),
        Err(Error::NotRadicalGraded(why)) => rec.check("tensor cover", false, json!(why)),
        Err(e) => return Err(e),
    }
    Ok(())
}

fn basics(an: &Analysis, g: &GradedAlgebra, opts: &VerifyOptions, rec: &mut Recorder) -> Result<()> {
    let w = opts.wedderburn();
    let b = basic_algebra(an)?;
    let bn = analyze(&b.algebra, &AnalysisOptions { wedderburn: w })?;
    rec.check("B is basic", bn.is_basic(), json!({"dim": b.algebra.dim(), "sizes": bn.sizes()}));
    let (gb, ga) = (bn.ordinary_quiver()?, an.ordinary_quiver()?);
    rec.check(
        "ordinary quiver of B equals that of A",
        gb.isomorphism(&ga, false).is_some(),
        json!({"b": gb.to_json(), "a": ga.to_json()}),
    );
    let fc = match GradedBase::new(g, &w) {
        Ok(base) => {
            let dim: usize = FreeCover::predicted_dims(&base)?.iter().sum();
            if dim > opts.free_limit {
                let why = format!("free tensor algebra of dimension {dim} exceeds {}", opts.free_limit);
                rec.skip("two basic algebras", why.clone());
                rec.skip("quiver of the free cover", why);
                return Ok(());
            }
            FreeCover::from_base(g, base)?
        }
        Err(Error::NotRadicalGraded(why)) => {
            rec.check("two basic algebras", false, json!(why));
            rec.check("quiver of the free cover", false, json!(why));
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let r = two_basics(g, &fc)?;
    rec.check("two basic algebras", r.verdict, serde_json::to_value(&r).unwrap());
    match quiver_equality(g, &fc, &w) {
        Ok(r) => rec.check("quiver of the free cover", r.verdict, serde_json::to_value(&r).unwrap()),
        Err(Error::NotApplicable(why)) => rec.skip("quiver of the free cover", why),
        Err(e) => return Err(e),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_algebra, triangular, two_armed_example};
    use crate::field::Field;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn semisimple_all() {
        let s = run(&matrix_algebra(2, gf(5)), None, Suite::All, &VerifyOptions::default()).unwrap();
        assert!(s.pass, "{:?}", s.first_counterexample);
    }

    #[test]
    fn triangular_all() {
        let s = run(&triangular(3, gf(3)), None, Suite::All, &VerifyOptions::default()).unwrap();
        assert!(s.pass, "{:?}", s.first_counterexample);
        assert!(s.checks.iter().any(|c| c.name == "quiver of the free cover" && !c.skipped));
    }

    #[test]
    fn skew_example_all() {
        let ex = two_armed_example(gf(5)).unwrap();
        let s = run(&ex.skew, None, Suite::All, &VerifyOptions::default()).unwrap();
        assert!(s.pass, "{:?}", s.first_counterexample);
    }

    #[test]
    fn bad_grading_is_a_counterexample() {
        let a = triangular(2, gf(5));
        let s = run(&a, Some(&[0, 0, 0]), Suite::Gabriel, &VerifyOptions::default()).unwrap();
        assert!(!s.pass);
        assert_eq!(s.first_counterexample.unwrap().name, "tensor cover");
    }
}
