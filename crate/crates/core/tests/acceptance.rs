//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Expected values come from the brute-force oracles in
//! `common` or from integer arithmetic done here, not from the formulas
//! under test.

mod common;

use std::time::Instant;

use common::binom;
use num_bigint::BigInt;
use stanley_reisner::formulas::{
    betti_from_h, betti_from_h_pure, betti_inequality_check, chordal_suite, cm_dual_suite,
    eagon_reiner_identity_check, oracle_sequence, vanishing_sum, PureBettiInput,
};
use stanley_reisner::generate::{
    random_chordal, random_complex, random_quasi_forest, rng_from_seed,
};
use stanley_reisner::{
    alexander_dual, classify_resolution, dual_f_vector, hochster_betti, is_cohen_macaulay, k_star,
    series_from_complex, series_from_resolution, FieldSpec, GradedBettiTable, Graph, HVector,
    KStar, SimplicialComplex, Verdict,
};

const Q: FieldSpec = FieldSpec::Rationals;

struct Instance {
    complex: SimplicialComplex,
    table: GradedBettiTable,
}

impl Instance {
    fn name(&self) -> String {
        format!(
            "n={} {:?}",
            self.complex.n(),
            self.complex.facet_vertex_lists()
        )
    }

    fn pure_degrees(&self) -> Option<Vec<usize>> {
        classify_resolution(&self.table)
            .pure_degrees()
            .map(<[usize]>::to_vec)
    }
}

/// Outcome of one criterion: a summary and the first few failures.
struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::from_vertex_lists(n, facets).unwrap()
}

fn two_disjoint_edges() -> SimplicialComplex {
    cx(4, &[&[1, 2], &[3, 4]])
}

fn triangle_boundary() -> SimplicialComplex {
    cx(3, &[&[1, 2], &[1, 3], &[2, 3]])
}

/// `h` as `i128` together with `n`, `d` for test-side sums.
fn h_i128(c: &SimplicialComplex) -> Vec<i128> {
    common::h_vector(&common::f_vector(c.facets(), c.n()))
}

/// `Σ_{ℓ=0}^{s} (-1)^ℓ h_{s-ℓ} C(c, ℓ)` in machine integers.
fn alt_sum(h: &[i128], c: usize, s: usize) -> i128 {
    (0..=s)
        .map(|l| {
            let hv = h.get(s - l).copied().unwrap_or(0);
            let sign = if l % 2 == 0 { 1 } else { -1 };
            sign * hv * binom(c as i128, l as i128)
        })
        .sum()
}

fn oracle_betti(inst: &Instance, degrees: &[usize]) -> Vec<i128> {
    degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| inst.table.get(i + 1, d) as i128)
        .collect()
}

fn criterion_1(corpus: &[Instance]) -> Outcome {
    let mut out = Outcome::new();
    for inst in corpus {
        let direct = series_from_complex(&inst.complex).unwrap();
        let resolved = series_from_resolution(&inst.table);
        out.check(direct == resolved, || {
            format!("{}: {direct} vs {resolved}", inst.name())
        });
        if inst.complex.n() <= 5 {
            let brute = common::betti_via_dual_links(inst.complex.facets(), inst.complex.n());
            let ours: std::collections::BTreeMap<_, _> = inst
                .table
                .triples()
                .into_iter()
                .map(|(i, j, b)| ((i, j), b))
                .collect();
            out.check(ours == brute, || {
                format!("{}: table differs from dual-link oracle", inst.name())
            });
        }
    }
    out
}

fn criterion_2(corpus: &[Instance]) -> Outcome {
    let mut out = Outcome::new();
    let pinned = PureBettiInput {
        h: HVector::from_i64(&[1, 2, -1]),
        n: 4,
        d: 2,
        degrees: vec![2, 3, 4],
    };
    out.check(
        betti_from_h_pure(&pinned).unwrap() == big(&[4, 4, 1]),
        || "pinned (4,4,1)".into(),
    );
    for inst in corpus {
        let Some(degrees) = inst.pure_degrees() else {
            continue;
        };
        let c = &inst.complex;
        let input = PureBettiInput {
            h: c.h_vector(),
            n: c.n(),
            d: c.krull_dim(),
            degrees: degrees.clone(),
        };
        let formula = betti_from_h_pure(&input).unwrap();
        let oracle: Vec<BigInt> = oracle_betti(inst, &degrees)
            .into_iter()
            .map(BigInt::from)
            .collect();
        out.check(formula == oracle, || {
            format!("{}: {formula:?} vs {oracle:?}", inst.name())
        });
    }
    out
}

fn criterion_3(corpus: &[Instance], chordal: &[(Graph, Instance)]) -> Outcome {
    let mut out = Outcome::new();
    for inst in corpus {
        let Some(degrees) = inst.pure_degrees() else {
            continue;
        };
        let c = &inst.complex;
        let (n, codim) = (c.n(), c.n() - c.krull_dim());
        let h = h_i128(c);
        let top = degrees.last().copied().unwrap_or(0);
        for s in (1..=n + top).filter(|s| !degrees.contains(s)) {
            let v = alt_sum(&h, codim, s);
            out.check(v == 0, || format!("{}: s={s} gives {v}", inst.name()));
            out.check(
                vanishing_sum(&c.h_vector(), codim, s) == BigInt::from(v),
                || format!("{}: library sum differs at s={s}", inst.name()),
            );
        }
    }
    for (g, inst) in chordal {
        let shape = classify_resolution(&inst.table);
        let Some(p) = shape.last_ideal_step() else {
            continue;
        };
        if shape.linear_start() != Some(2) {
            continue;
        }
        let c = &inst.complex;
        let h = h_i128(c);
        let codim = c.n() - c.krull_dim();
        for j in std::iter::once(1).chain(p + 3..=c.n()) {
            let v = alt_sum(&h, codim, j);
            out.check(v == 0, || format!("{:?}: j={j} gives {v}", g.edges()));
        }
    }
    out
}

fn criterion_4(corpus: &[Instance]) -> Outcome {
    let mut out = Outcome::new();
    for (b, p) in [(big(&[4, 4, 1]), 3), (big(&[3, 3, 1]), 3)] {
        let ok = betti_inequality_check(&b, p, "r", "d")
            .iter()
            .all(|r| r.passed());
        out.check(ok, || format!("pinned {b:?} P={p}"));
    }
    for inst in corpus {
        let Some(degrees) = inst.pure_degrees() else {
            continue;
        };
        let pd = inst.table.projective_dimension();
        let betti = oracle_betti(inst, &degrees);
        for (i, &b) in betti.iter().enumerate() {
            let bound = binom(pd as i128, i as i128 + 1);
            out.check(b >= bound, || {
                format!("{}: β_{i}={b} < C({pd},{})", inst.name(), i + 1)
            });
        }
        let lib: Vec<BigInt> = betti.iter().map(|&b| BigInt::from(b)).collect();
        let agrees = betti_inequality_check(&lib, pd, "r", "d")
            .iter()
            .all(|r| r.passed());
        out.check(agrees, || {
            format!("{}: library check disagrees", inst.name())
        });
    }
    out
}

fn criterion_5(corpus: &[Instance]) -> Outcome {
    let mut out = Outcome::new();
    // two disjoint edges: c = 2, e = 2, Σ (-1)^{i+1} β_i d_i^2 = -16 + 36 - 16
    let pinned: i128 = -4 * 4 + 4 * 9 - 16;
    out.check(pinned == 2 * 2, || format!("pinned gives {pinned}"));
    let edges = two_disjoint_edges();
    out.check(
        series_from_complex(&edges).unwrap().multiplicity() == BigInt::from(2),
        || "pinned e".into(),
    );
    for inst in corpus {
        let c = &inst.complex;
        let f = common::f_vector(c.facets(), c.n());
        let e = *f.last().unwrap() as i128;
        let h = h_i128(c);
        out.check(h.iter().sum::<i128>() == e, || {
            format!("{}: Σh != f_(d-1)", inst.name())
        });
        let mult = series_from_complex(c).unwrap().multiplicity();
        out.check(mult == BigInt::from(e), || {
            format!("{}: multiplicity {mult} vs {e}", inst.name())
        });

        let Some(degrees) = inst.pure_degrees() else {
            continue;
        };
        let codim = c.n() - c.krull_dim();
        if codim == 0 {
            continue;
        }
        let betti = oracle_betti(inst, &degrees);
        let lhs: i128 = betti
            .iter()
            .zip(&degrees)
            .enumerate()
            .map(|(i, (&b, &d))| {
                let sign = if i % 2 == 0 { -1 } else { 1 };
                sign * b * (d as i128).pow(codim as u32)
            })
            .sum();
        let fact: i128 = (1..=codim as i128).product();
        let rhs = if codim % 2 == 0 { fact * e } else { -fact * e };
        out.check(lhs == rhs, || format!("{}: {lhs} vs {rhs}", inst.name()));
    }
    out
}

fn criterion_6(corpus: &[Instance]) -> Outcome {
    let mut out = Outcome::new();
    let tri = triangle_boundary();
    let report = cm_dual_suite(&tri, Q).unwrap();
    out.check(report.passed(), || report.to_human());
    let dual_table = hochster_betti(&alexander_dual(&tri), Q).unwrap();
    let totals: Vec<u64> = (1..=dual_table.projective_dimension())
        .map(|i| dual_table.total(i))
        .collect();
    out.check(totals == vec![3, 3, 1], || {
        format!("pinned β* = {totals:?}")
    });
    let er = eagon_reiner_identity_check(&tri, Q).unwrap();
    out.check(
        er[0].verdict == Verdict::Pass && er[0].actual == "3 + 3*z + z^2",
        || format!("{:?}", er[0]),
    );

    let mut cm = 0;
    let mut degenerate = 0;
    for inst in corpus {
        let c = &inst.complex;
        let reisner = match is_cohen_macaulay(c, Q) {
            Ok(v) => v,
            Err(e) => {
                out.check(false, || format!("{}: {e}", inst.name()));
                continue;
            }
        };
        if !reisner {
            continue;
        }
        cm += 1;
        let report = cm_dual_suite(c, Q).unwrap();
        out.check(report.passed(), || {
            format!("{}:\n{}", inst.name(), report.to_human())
        });
        if c.is_full_simplex() {
            degenerate += 1;
            out.check(report.count(Verdict::Note) > 0, || {
                format!("{}: no degenerate note", inst.name())
            });
            continue;
        }
        // test-side Eagon-Reiner identity: Σ_{i>=1} β*_i t^{i-1} = Σ h_i (t+1)^i
        let dual_table = hochster_betti(&alexander_dual(c), Q).unwrap();
        let h = h_i128(c);
        let mut rhs = vec![0i128; h.len()];
        for (i, &hi) in h.iter().enumerate() {
            for (k, slot) in rhs.iter_mut().enumerate().take(i + 1) {
                *slot += hi * binom(i as i128, k as i128);
            }
        }
        while rhs.last() == Some(&0) {
            rhs.pop();
        }
        let lhs: Vec<i128> = (1..=dual_table.projective_dimension())
            .map(|i| dual_table.total(i) as i128)
            .collect();
        out.check(lhs == rhs, || {
            format!("{}: ER {lhs:?} vs {rhs:?}", inst.name())
        });
        // linear with t = n - d and Betti formula with base k*
        let t = c.n() - c.krull_dim();
        let shape = classify_resolution(&dual_table);
        out.check(shape.linear_start() == Some(t), || {
            format!("{}: not {t}-linear", inst.name())
        });
        let KStar::Defined(ks) = k_star(&c.f_vector(), c.n()) else {
            unreachable!()
        };
        let p = shape.last_ideal_step().unwrap();
        let degrees: Vec<usize> = (t..=t + p).collect();
        let formula = betti_from_h(&alexander_dual(c).h_vector(), ks, &degrees).unwrap();
        let oracle = oracle_sequence(&dual_table, &degrees);
        out.check(formula == oracle, || {
            format!("{}: dual formula {formula:?} vs {oracle:?}", inst.name())
        });
    }
    println!("    {cm} Cohen-Macaulay instances, {degenerate} full simplices recorded as notes");
    out
}

fn chordal_corpus() -> Vec<(Graph, Instance)> {
    (0..200u64)
        .map(|seed| {
            let n = 3 + (seed % 8) as usize;
            let density = (1 + seed % 5) as f64 / 6.0;
            let g = random_chordal(n, density, seed).unwrap();
            let complex = g.clique_complex();
            let table = hochster_betti(&complex, Q).unwrap();
            (g, Instance { complex, table })
        })
        .collect()
}

fn criterion_7(chordal: &[(Graph, Instance)]) -> Outcome {
    let mut out = Outcome::new();
    for (g, inst) in chordal {
        let c = &inst.complex;
        out.check(common::is_chordal(g), || {
            format!("{:?}: generator gave a non-chordal graph", g.edges())
        });
        let report = chordal_suite(g, Q).unwrap();
        out.check(report.passed(), || {
            format!("{:?}:\n{}", g.edges(), report.to_human())
        });

        let mut nonfaces = c.minimal_nonfaces().unwrap();
        nonfaces.sort_unstable();
        let complement: Vec<u64> = g
            .complement()
            .edges()
            .iter()
            .map(|&(a, b)| 1 << (a - 1) | 1 << (b - 1))
            .collect();
        let mut complement = complement;
        complement.sort_unstable();
        out.check(nonfaces == complement, || {
            format!("{:?}: non-faces differ", g.edges())
        });

        let shape = classify_resolution(&inst.table);
        if let Some(p) = shape.last_ideal_step() {
            out.check(shape.linear_start() == Some(2), || {
                format!("{:?}: not 2-linear", g.edges())
            });
            let degrees: Vec<usize> = (2..=2 + p).collect();
            let formula = betti_from_h(&c.h_vector(), c.n() - c.krull_dim(), &degrees).unwrap();
            let oracle = oracle_sequence(&inst.table, &degrees);
            out.check(formula == oracle, || {
                format!("{:?}: {formula:?} vs {oracle:?}", g.edges())
            });
        }
        out.check(
            common::has_leaf_order(c.facets()) || c.facets().len() > 8,
            || format!("{:?}: clique complex has no leaf order", g.edges()),
        );
        let order = c.leaf_order();
        out.check(
            order
                .as_ref()
                .is_some_and(|o| common::replays(o, c.facets())),
            || format!("{:?}: leaf order missing or invalid", g.edges()),
        );
        out.check(common::is_chordal(&Graph::one_skeleton(c)), || {
            format!("{:?}: skeleton", g.edges())
        });
    }
    // the other direction, on generated quasi-forests and non-chordal graphs
    for seed in 0..200u64 {
        let n = 2 + (seed % 9) as usize;
        let qf = random_quasi_forest(n, 1 + (seed % 7) as usize, seed).unwrap();
        out.check(
            common::replays(&qf.leaf_order().unwrap(), qf.facets()),
            || format!("qf seed {seed}"),
        );
        out.check(common::is_chordal(&Graph::one_skeleton(&qf)), || {
            format!("qf seed {seed}: skeleton")
        });
        let g = common::random_graph(4 + (seed % 6) as usize, seed);
        if !common::is_chordal(&g) {
            out.check(!g.clique_complex().is_quasi_forest(), || {
                format!("{:?}: quasi-forest", g.edges())
            });
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let mut out = Outcome::new();
    let mut instances: Vec<SimplicialComplex> = (1..=4)
        .flat_map(|n| stanley_reisner::generate::all_complexes(n).unwrap())
        .collect();
    let mut rng = rng_from_seed(8);
    for k in 0..10_000usize {
        instances.push(random_complex(5 + k % 6, &mut rng).unwrap());
    }
    for c in &instances {
        let n = c.n();
        let dual = alexander_dual(c);
        let brute = common::maximal(&common::dual_faces(c.facets(), n));
        out.check(common::sorted_facets(&dual) == brute, || {
            format!("{:?}: dual", c.facet_vertex_lists())
        });
        out.check(&alexander_dual(&dual) == c, || {
            format!("{:?}: involution", c.facet_vertex_lists())
        });
        let direct = common::f_vector(&brute, n);
        let formula = dual_f_vector(&c.f_vector(), n);
        out.check(formula.entries() == &direct[..], || {
            format!(
                "{:?}: {:?} vs {direct:?}",
                c.facet_vertex_lists(),
                formula.entries()
            )
        });
        match k_star(&c.f_vector(), n) {
            KStar::Defined(ks) => out.check(dual.krull_dim() == n - ks, || {
                format!(
                    "{:?}: dim {} vs n-k* {}",
                    c.facet_vertex_lists(),
                    dual.krull_dim(),
                    n - ks
                )
            }),
            KStar::Undefined => out.check(c.is_full_simplex(), || "k* undefined".into()),
        }
    }
    out
}

fn main() {
    let start = Instant::now();
    let corpus: Vec<Instance> = common::corpus(5, &[6, 7], 250)
        .into_iter()
        .map(|complex| {
            let table = hochster_betti(&complex, Q).unwrap();
            Instance { complex, table }
        })
        .collect();
    let pure = corpus.iter().filter(|i| i.pure_degrees().is_some()).count();
    println!(
        "corpus: {} complexes, {pure} with pure resolutions",
        corpus.len()
    );
    let chordal = chordal_corpus();

    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        (
            "1 oracle self-consistency",
            Box::new(|| criterion_1(&corpus)),
        ),
        ("2 pure Betti formula", Box::new(|| criterion_2(&corpus))),
        (
            "3 vanishing sums",
            Box::new(|| criterion_3(&corpus, &chordal)),
        ),
        ("4 Betti lower bounds", Box::new(|| criterion_4(&corpus))),
        ("5 multiplicity", Box::new(|| criterion_5(&corpus))),
        (
            "6 Cohen-Macaulay dual suite",
            Box::new(|| criterion_6(&corpus)),
        ),
        ("7 chordal pipeline", Box::new(|| criterion_7(&chordal))),
        ("8 Alexander duality", Box::new(criterion_8)),
    ];
    let mut all_ok = true;
    for (name, run) in criteria {
        let t = Instant::now();
        let outcome = run();
        let ok = outcome.failures.is_empty();
        all_ok &= ok;
        println!(
            "criterion {name}: {} ({} checks, {} failures, {:.1}s)",
            if ok { "PASS" } else { "FAIL" },
            outcome.checked,
            outcome.failures.len(),
            t.elapsed().as_secs_f64()
        );
        for f in outcome.failures.iter().take(5) {
            println!("    {f}");
        }
    }
    println!(
        "acceptance finished in {:.1}s",
        start.elapsed().as_secs_f64()
    );
    if !all_ok {
        std::process::exit(1);
    }
}
