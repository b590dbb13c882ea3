//! Acceptance criteria, one line each. Every tolerance is exact: all checks
//! compare integers, finite-field elements or rationals.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use artinian::basic::basic_algebra;
use artinian::constructions::{
    matrix_algebra, path_algebra, polynomial_quotient, random_acyclic_quiver, random_radical_graded, random_relations,
    triangular, two_armed_example, ComponentSpec, GradedProfile, PathAlgebra,
};
use artinian::cover::gabriel_cover;
use artinian::quiver::{bimodule_rank, min_generators_oracle, GeneratorSearch};
use artinian::radical::{radical, radical_oracle, OracleLimits};
use artinian::verify::{run, Suite, VerifyOptions};
use artinian::wedderburn::check_lift;
use artinian::{analyze, Algebra, Analysis, AnalysisOptions, Field, Quiver, Subspace, WedderburnOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;

#[derive(Clone)]
struct Entry {
    name: String,
    algebra: Algebra,
    degrees: Option<Vec<usize>>,
}

#[derive(Default)]
struct Corpus {
    all: Vec<Entry>,
}

impl Corpus {
    fn push(&mut self, name: impl Into<String>, algebra: Algebra, degrees: Option<Vec<usize>>) {
        self.all.push(Entry { name: name.into(), algebra, degrees });
    }

    fn graded(&self) -> impl Iterator<Item = &Entry> {
        self.all.iter().filter(|e| e.degrees.is_some())
    }
}

fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_artinian")).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("artinian {args:?}: {}", String::from_utf8_lossy(&out.stderr)));
    }
    Ok(String::from_utf8(out.stdout).unwrap())
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("artinian-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn analysis(a: &Algebra) -> Result<Analysis, String> {
    analyze(a, &AnalysisOptions::default()).map_err(err)
}

fn path_grading(pa: &PathAlgebra) -> Vec<usize> {
    pa.basis_lengths()
}

/// Criterion 1: the skew group algebra, through the command line.
fn two_armed(corpus: &mut Corpus) -> Outcome {
    let mut dots = Vec::new();
    for p in [5u64, 3, 7] {
        let file = scratch(&format!("two-armed-{p}.json"));
        let file_s = file.to_str().unwrap();
        cli(&["construct", "paper-example", "--char", &p.to_string(), "-o", file_s])?;
        let report: Value = serde_json::from_str(&cli(&["analyze", file_s])?).map_err(err)?;
        ensure(report["dim"] == 22, || format!("char {p}: dim {}", report["dim"]))?;
        ensure(report["radical_dims"][0] == 12, || format!("char {p}: radical {}", report["radical_dims"]))?;
        let blocks: Vec<(u64, u64)> = report["blocks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|b| (b["n"].as_u64().unwrap(), b["dim"].as_u64().unwrap()))
            .collect();
        ensure(blocks == vec![(1, 1), (1, 1), (2, 4), (2, 4)], || format!("char {p}: blocks {blocks:?}"))?;
        let natural = Quiver::from_json(&report["natural_quiver"]).map_err(err)?;
        let ordinary = Quiver::from_json(&report["ordinary_quiver"]).map_err(err)?;
        ensure(natural.arrows == ordinary.arrows, || format!("char {p}: t != m"))?;
        ensure(natural.arrows.iter().flatten().all(|&t| t <= 1), || format!("char {p}: t > 1"))?;
        let ex = two_armed_example(gf(p)).map_err(err)?;
        let expected = Quiver::new(&ex.expected_block_sizes, &ex.expected_arrows);
        ensure(natural.isomorphism(&expected, true).is_some(), || format!("char {p}: natural quiver differs"))?;
        ensure(ordinary.isomorphism(&expected, true).is_some(), || format!("char {p}: ordinary quiver differs"))?;
        // rad(ΛG) against rad(Λ)·G
        let g = ex.action.order;
        let rl = radical(&ex.lambda.algebra).map_err(err)?;
        let lifted = Subspace::span(
            gf(p),
            ex.skew.dim(),
            rl.basis().iter().flat_map(|v| {
                (0..g).map(move |t| {
                    let mut w = gf(p).zero_vec(v.len() * g);
                    for (i, c) in v.iter().enumerate() {
                        w[i * g + t] = c.clone();
                    }
                    w
                })
            }),
        );
        ensure(radical(&ex.skew).map_err(err)? == lifted, || format!("char {p}: rad(ΛG) != rad(Λ)G"))?;
        dots.push(cli(&["quiver", file_s, "--format", "dot"])?);
        corpus.push(format!("skew char {p}"), ex.skew.clone(), None);
        corpus.push(
            format!("skew char {p} graded"),
            ex.skew,
            Some(path_grading(&ex.lambda).iter().flat_map(|&d| std::iter::repeat_n(d, g)).collect()),
        );
    }
    ensure(dots.windows(2).all(|w| w[0] == w[1]), || "DOT output differs across characteristics".into())?;
    Ok("dim 22, rad 12, n = (1,1,2,2), quivers match at chars 5, 3, 7".into())
}

/// Block index -> quiver vertex, read from the vertex idempotents.
fn vertex_map(pa: &PathAlgebra, an: &Analysis) -> Option<Vec<usize>> {
    an.wedderburn
        .blocks
        .iter()
        .map(|b| {
            (0..pa.quiver.vertices.len())
                .find(|&v| an.quotient.project(&pa.vertex_idempotent(v)) == b.central_idempotent)
        })
        .collect()
}

/// Criterion 2: basic path algebras.
fn path_quivers(corpus: &mut Corpus) -> Outcome {
    let f = gf(7);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = 60;
    for k in 0..n {
        let q = random_acyclic_quiver(&mut rng, 6, 8);
        let count = rng.gen_range(0..=3);
        let rels = random_relations(&mut rng, f, &q, count);
        let pa = path_algebra(f, &q, &rels, None).map_err(err)?;
        let an = analysis(&pa.algebra)?;
        let delta = an.natural_quiver().map_err(err)?;
        let gamma = an.ordinary_quiver().map_err(err)?;
        ensure(delta == gamma, || format!("instance {k}: natural != ordinary"))?;
        let map = vertex_map(&pa, &an).ok_or_else(|| format!("instance {k}: blocks are not vertices"))?;
        let adj = q.adjacency();
        for (i, &vi) in map.iter().enumerate() {
            for (j, &vj) in map.iter().enumerate() {
                ensure(delta.arrows[i][j] == adj[vi][vj], || {
                    format!("instance {k}: arrows {vi} -> {vj} differ from Q")
                })?;
            }
        }
        ensure(an.is_basic(), || format!("instance {k}: not basic"))?;
        let homogeneous = rels.iter().all(|r| r.terms.iter().all(|(_, p)| p.len() == r.terms[0].1.len()));
        let degrees = homogeneous.then(|| path_grading(&pa));
        corpus.push(format!("path algebra {k}"), pa.algebra, degrees);
    }
    Ok(format!("{n} quivers over GF(7): natural = ordinary = Q under the vertex map"))
}

fn block_profile(rng: &mut ChaCha8Rng, max_truncation: usize) -> GradedProfile {
    let k = rng.gen_range(1..=3);
    let block_sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
    let components = (0..rng.gen_range(1..=3))
        .map(|_| {
            let (from, to) = (rng.gen_range(0..k), rng.gen_range(0..k));
            let nn = block_sizes[from] * block_sizes[to];
            let max_c = (nn + 1).min(24 / nn).max(1);
            ComponentSpec { from, to, dim: nn * rng.gen_range(1..=max_c) }
        })
        .collect();
    GradedProfile {
        block_sizes,
        components,
        truncation: rng.gen_range(1..=max_truncation),
        relations: rng.gen_range(0..=3),
        scramble: true,
    }
}

/// Criterion 3: `t <= m <= n_i n_j t`, density, component audit.
fn bounds(corpus: &mut Corpus) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let f = gf(101);
    let (mut done, mut strict) = (0, 0);
    let mut seed = 0;
    while done < 50 {
        seed += 1;
        let profile = block_profile(&mut rng, 2);
        if profile.tensor_dims().iter().sum::<usize>() > 60 {
            continue;
        }
        let r = random_radical_graded(seed, f, &profile).map_err(err)?;
        let an = analysis(&r.graded.algebra)?;
        let delta = an.natural_quiver().map_err(err)?;
        let gamma = an.ordinary_quiver().map_err(err)?;
        let sizes = an.sizes();
        let k = sizes.len();
        let mut total = 0;
        for i in 0..k {
            for j in 0..k {
                let (t, m) = (delta.arrows[i][j], gamma.arrows[i][j]);
                ensure(t <= m && m <= sizes[i] * sizes[j] * t, || format!("seed {seed}: t={t} m={m} at {i} -> {j}"))?;
                strict += usize::from(t < m);
                total += an.component(i, j).dim();
            }
        }
        ensure(delta.is_dense_subquiver_of(&gamma), || format!("seed {seed}: not dense"))?;
        ensure(total == an.top.dim(), || format!("seed {seed}: components {total} vs r/r^2 {}", an.top.dim()))?;
        corpus.push(format!("block algebra {seed}"), r.graded.algebra.clone(), Some(r.graded.degrees.clone()));
        done += 1;
    }
    Ok(format!("{done} block algebras over GF(101), {strict} pairs with t < m"))
}

/// Criterion 4: rank formula against the generator search.
fn rank_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let fields = [gf(2), gf(3), gf(5)];
    let search = GeneratorSearch::default();
    let (mut done, mut certified) = (0, 0);
    let mut seed = 0;
    while done < 200 {
        seed += 1;
        let f = fields[rng.gen_range(0..fields.len())];
        let looped = rng.gen_bool(0.3);
        let (ni, nj) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let (sizes, from, to) = if looped { (vec![ni], 0, 0) } else { (vec![ni, nj], 0, 1) };
        let nn = sizes[from] * sizes[to];
        let c = rng.gen_range(1..=24 / nn);
        let profile = GradedProfile {
            block_sizes: sizes,
            components: vec![ComponentSpec { from, to, dim: c * nn }],
            truncation: 1,
            relations: 0,
            scramble: true,
        };
        let r = random_radical_graded(seed, f, &profile).map_err(err)?;
        let an = analysis(&r.graded.algebra)?;
        let sizes = an.sizes();
        for i in 0..sizes.len() {
            for j in 0..sizes.len() {
                let comp = an.component(i, j);
                if comp.is_zero() {
                    continue;
                }
                let t = bimodule_rank(comp.dim(), sizes[j], sizes[i]).map_err(err)?;
                let g = min_generators_oracle(&an.bimodule.restrict(&comp), &search).map_err(err)?;
                ensure(g.generators.len() == t, || {
                    format!("seed {seed}: rank {t} but search needs {} (dim {})", g.generators.len(), comp.dim())
                })?;
                ensure(g.lower_bound <= t, || format!("seed {seed}: lower bound {} above {t}", g.lower_bound))?;
                certified += usize::from(g.is_certified());
                done += 1;
            }
        }
    }
    Ok(format!("{done} components of dim <= 24, {certified} with matching lower bound"))
}

/// Criterion 5: the tensor cover of radical-graded algebras.
fn tensor_cover(corpus: &mut Corpus) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let f = gf(101);
    let mut done = 0;
    let mut seed = 1000;
    let mut max_rl = 0;
    while done < 30 {
        seed += 1;
        let profile = block_profile(&mut rng, 3);
        if profile.tensor_dims().iter().sum::<usize>() > 60 {
            continue;
        }
        let r = random_radical_graded(seed, f, &profile).map_err(err)?;
        let g = &r.graded;
        let rl = g.max_degree() + 1;
        if g.algebra.dim() > 40 || rl > 4 {
            continue;
        }
        let rep = gabriel_cover(g, &WedderburnOptions::default()).map_err(err)?;
        ensure(rep.verdict, || format!("seed {seed}: verdict false {rep:?}"))?;
        ensure(rep.kernel_contains_high_degrees && rep.kernel_trivial_in_low_degrees, || {
            format!("seed {seed}: kernel placement {:?}", rep.kernel_dims)
        })?;
        let count: usize = rep.degree_dims.iter().zip(&rep.kernel_dims).map(|(d, k)| d - k).sum();
        ensure(count == g.algebra.dim(), || format!("seed {seed}: bookkeeping {count}"))?;
        max_rl = max_rl.max(rl);
        corpus.push(format!("radical-graded {seed}"), g.algebra.clone(), Some(g.degrees.clone()));
        done += 1;
    }
    Ok(format!("{done} instances (dim <= 40, rl <= {max_rl}) covered exactly"))
}

/// Criterion 6: graded suite on the whole corpus.
fn graded_suite(corpus: &Corpus) -> Outcome {
    let opts = VerifyOptions::default();
    for e in &corpus.all {
        let s = run(&e.algebra, e.degrees.as_deref(), Suite::Graded, &opts).map_err(err)?;
        ensure(s.pass, || format!("{}: {:?}", e.name, s.first_counterexample))?;
    }
    Ok(format!("{} algebras: dim gr A = dim A, gr A radical-graded, gr gr A = gr A", corpus.all.len()))
}

/// Criterion 7: basic algebras on the radical-graded corpus.
fn basics(corpus: &Corpus) -> Outcome {
    let opts = VerifyOptions::default();
    let (mut n, mut applied) = (0, 0);
    for e in corpus.graded() {
        let s = run(&e.algebra, e.degrees.as_deref(), Suite::Basics, &opts).map_err(err)?;
        ensure(s.pass, || format!("{}: {:?}", e.name, s.first_counterexample))?;
        applied += s.checks.iter().filter(|c| c.name == "quiver of the free cover" && !c.skipped).count();
        n += 1;
    }
    let gr = artinian::associated_graded(&two_armed_example(gf(5)).unwrap().skew).map_err(err)?;
    let s = run(&gr.graded.algebra, Some(&gr.graded.degrees), Suite::Basics, &opts).map_err(err)?;
    ensure(s.pass, || format!("gr of skew example: {:?}", s.first_counterexample))?;
    let b = basic_algebra(&analysis(&two_armed_example(gf(5)).unwrap().skew)?).map_err(err)?;
    ensure(b.algebra.dim() == 9, || format!("basic algebra of skew example has dim {}", b.algebra.dim()))?;
    Ok(format!("{} graded algebras, quiver equality applicable to {applied}", n + 1))
}

/// Criterion 8: radical oracle, idempotent lifting, validation.
fn core_oracles(corpus: &Corpus) -> Outcome {
    let mut small: Vec<Entry> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for p in [2u64, 3, 5] {
        let f = gf(p);
        for (name, a) in [
            ("matrix 2", matrix_algebra(2, f)),
            ("triangular 3", triangular(3, f)),
            ("polynomial 4", polynomial_quotient(f, 4)),
        ] {
            small.push(Entry { name: format!("{name} over GF({p})"), algebra: a, degrees: None });
        }
        let mut k = 0;
        while k < 8 {
            let q = random_acyclic_quiver(&mut rng, 4, 4);
            let count = rng.gen_range(0..=2);
            let rels = random_relations(&mut rng, f, &q, count);
            let pa = path_algebra(f, &q, &rels, None).map_err(err)?;
            if pa.algebra.dim() <= 12 {
                small.push(Entry {
                    name: format!("small path algebra over GF({p})"),
                    algebra: pa.algebra,
                    degrees: None,
                });
                k += 1;
            }
        }
        for seed in 0..4 {
            let n = rng.gen_range(1..=2);
            let profile = GradedProfile {
                block_sizes: vec![1, n],
                components: vec![ComponentSpec { from: 0, to: 1, dim: n }],
                truncation: 1,
                relations: 0,
                scramble: true,
            };
            let r = random_radical_graded(seed, f, &profile).map_err(err)?;
            small.push(Entry {
                name: format!("small block algebra over GF({p})"),
                algebra: r.graded.algebra,
                degrees: None,
            });
        }
    }
    let limits = OracleLimits::default();
    let mut compared = 0;
    for e in &small {
        let r = radical(&e.algebra).map_err(err)?;
        let o = radical_oracle(&e.algebra, &limits).map_err(err)?;
        ensure(r == o, || format!("{}: radical {} vs oracle {}", e.name, r.dim(), o.dim()))?;
        compared += 1;
    }
    let mut lifted = 0;
    for e in corpus.all.iter().chain(&small) {
        ensure(e.algebra.validate().is_valid(), || format!("{}: fails validation", e.name))?;
        let an = analysis(&e.algebra)?;
        let family = an.wedderburn.primitive_idempotents();
        ensure(check_lift(&e.algebra, &an.quotient, &family, &an.primitive), || format!("{}: lift", e.name))?;
        lifted += 1;
    }
    Ok(format!("{compared} radicals match the oracle, {lifted} idempotent families lift"))
}

fn report(id: u8, title: &str, run: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let outcome = run();
    let secs = t.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => {
            println!("[PASS] criterion {id}: {title} | tolerance: exact | {detail} ({secs:.1}s)");
            true
        }
        Err(why) => {
            println!("[FAIL] criterion {id}: {title} | tolerance: exact | {why} ({secs:.1}s)");
            false
        }
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut corpus = Corpus::default();
    let results = [
        report(1, "skew group example at chars 5, 3, 7", || two_armed(&mut corpus)),
        report(2, "random path algebras: natural = ordinary = Q", || path_quivers(&mut corpus)),
        report(3, "block algebras: t <= m <= n_i n_j t, density, audit", || bounds(&mut corpus)),
        report(4, "rank formula equals generator search", rank_oracle),
        report(5, "tensor cover of radical-graded algebras", || tensor_cover(&mut corpus)),
        report(6, "associated graded suite", || graded_suite(&corpus)),
        report(7, "basic algebras and free cover quiver", || basics(&corpus)),
        report(8, "radical oracle, lifting, validation", || core_oracles(&corpus)),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("acceptance: {} passed, {failed} failed in {:.1}s", results.len() - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
