//! Closed-form Betti numbers and multiplicities of face rings with pure or
//! linear resolutions, computed from the h-vector, and the suites that check
//! them against the homology oracle.
//!
//! Betti sequences here are indexed from the ideal's generators: `β_0`
//! counts minimal generators of `I_Δ` in degree `d_0`, and `p` is the last
//! index, one less than the projective dimension of `k[Δ]`. The oracle's
//! table stores the same number as `β_{i+1, d_i}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::alexander::{alexander_dual, dual_f_vector, k_star, KStar};
use crate::betti::{
    classify_resolution, dual_linearity_criterion, hochster_betti, is_cohen_macaulay,
    reisner_criterion, FieldSpec, GradedBettiTable, ResolutionShape,
};
use crate::complex::{vertices, HVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{Chordality, Graph};
use crate::hilbert::{series_from_complex, series_from_resolution};
use crate::io::{complex_to_json, graph_to_json};
use crate::poly::Poly;
use crate::report::{digest, seq, Record, VerificationReport};
use crate::scalar::{binomial, factorial};
use crate::IntPoly;

/// Input to [`betti_from_h_pure`]: the h-vector of a `(d-1)`-dimensional
/// complex on `[n]` and the degrees `d_0 < ... < d_p` of a pure resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureBettiInput {
    pub h: HVector,
    pub n: usize,
    pub d: usize,
    pub degrees: Vec<usize>,
}

fn check_degrees(degrees: &[usize]) -> Result<()> {
    if degrees.first() == Some(&0) {
        return Err(Error::InvalidDegrees("degrees must be positive".into()));
    }
    if degrees.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidDegrees(format!(
            "degrees {degrees:?} are not strictly increasing"
        )));
    }
    Ok(())
}

/// `β_i = Σ_{ℓ=0}^{d_i} (-1)^{ℓ+i+1} C(base, ℓ) h_{d_i-ℓ}` for each listed
/// degree. `base` is the codimension `n - d` for `k[Δ]`; for the dual of a
/// Cohen-Macaulay complex it is `k*`.
pub fn betti_from_h(h: &HVector, base: usize, degrees: &[usize]) -> Result<Vec<BigInt>> {
    check_degrees(degrees)?;
    Ok(degrees
        .iter()
        .enumerate()
        .map(|(i, &di)| {
            let s = vanishing_sum(h, base, di);
            if i % 2 == 0 {
                -s
            } else {
                s
            }
        })
        .collect())
}

pub fn betti_from_h_pure(input: &PureBettiInput) -> Result<Vec<BigInt>> {
    if input.d > input.n {
        return Err(Error::Precondition(format!(
            "dimension {} exceeds ground set size {}",
            input.d, input.n
        )));
    }
    betti_from_h(&input.h, input.n - input.d, &input.degrees)
}

/// Linear resolution starting in degree `t` with `p + 1` steps; `base` as in
/// [`betti_from_h`].
pub fn betti_from_h_linear_with_base(
    h: &HVector,
    base: usize,
    t: usize,
    p: usize,
) -> Result<Vec<BigInt>> {
    if t == 0 {
        return Err(Error::InvalidDegrees(
            "linear start must be positive".into(),
        ));
    }
    let degrees: Vec<usize> = (t..=t + p).collect();
    betti_from_h(h, base, &degrees)
}

pub fn betti_from_h_linear(
    h: &HVector,
    n: usize,
    d: usize,
    t: usize,
    p: usize,
) -> Result<Vec<BigInt>> {
    betti_from_h_pure(&PureBettiInput {
        h: h.clone(),
        n,
        d,
        degrees: (t..=t + p).collect(),
    })
    .and_then(|b| {
        if t == 0 {
            Err(Error::InvalidDegrees(
                "linear start must be positive".into(),
            ))
        } else {
            Ok(b)
        }
    })
}

/// `Σ_{ℓ=0}^{s} (-1)^ℓ h_{s-ℓ} C(codim, ℓ)`, the coefficient of `z^s` in
/// `(1 - z)^codim h(z)`. Zero for `s` outside the resolution's degrees;
/// `(-1)^{i+1} β_i` at `s = d_i`.
pub fn vanishing_sum(h: &HVector, codim: usize, s: usize) -> BigInt {
    (0..=s.min(codim))
        .map(|l| {
            let term = h.get(s - l) * binomial(codim as u64, l as u64);
            if l % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `1 - (1 - z)^codim h(z)`, whose support is the degree set of a pure
/// resolution.
pub fn generator_polynomial(h: &HVector, codim: usize) -> IntPoly {
    &Poly::one() - &(&Poly::one_minus_z_pow(codim) * &h.as_poly())
}

/// Degrees `s >= 1` where `(1 - z)^codim h(z)` has a nonzero coefficient.
/// For a pure resolution these are exactly `d_0 < ... < d_p`, since the
/// terms `(-1)^{i+1} β_i z^{d_i}` cannot cancel.
pub fn degrees_from_h(h: &HVector, codim: usize) -> Vec<usize> {
    let g = generator_polynomial(h, codim);
    (1..g.coeffs().len())
        .filter(|&s| !g.coeff(s).is_zero())
        .collect()
}

/// `β_i ≥ C(P, i + 1)` for `0 <= i < P`, where `P` is the standard projective
/// dimension: the lower bound for pure resolutions applied to the full
/// resolution of `k[Δ]`, whose first term `R` has `β = 1`.
pub fn betti_inequality_check(
    betti: &[BigInt],
    projective_dimension: usize,
    reference: &str,
    digest: &str,
) -> Vec<Record> {
    if projective_dimension == 0 {
        return vec![Record::note(
            "betti-lower-bound",
            reference,
            digest,
            "zero ideal: vacuous",
        )];
    }
    (0..projective_dimension)
        .map(|i| {
            let bound = binomial(projective_dimension as u64, (i + 1) as u64);
            let actual = betti.get(i).cloned().unwrap_or_else(BigInt::zero);
            Record::condition(
                &format!("betti-lower-bound[{i}]"),
                reference,
                digest,
                format!(">= C({projective_dimension},{}) = {bound}", i + 1),
                &actual,
                actual >= bound,
            )
        })
        .collect()
}

/// `Σ_{i=0}^{p} (-1)^{i+1} β_i d_i^c`, which equals `(-1)^c c! e` for a pure
/// resolution of a face ring of codimension `c`.
pub fn alternating_power_sum(betti: &[BigInt], degrees: &[usize], c: usize) -> BigInt {
    betti
        .iter()
        .zip(degrees)
        .enumerate()
        .map(|(i, (b, &d))| {
            let term = b * Pow::pow(BigInt::from(d), c);
            if i % 2 == 0 {
                -term
            } else {
                term
            }
        })
        .sum()
}

/// Multiplicity predicted by a pure resolution:
/// `e = (-1)^c / c! · Σ_{i} (-1)^{i+1} β_i d_i^c` with `c` the codimension.
pub fn multiplicity_from_pure_resolution(
    betti: &[BigInt],
    degrees: &[usize],
    codim: usize,
) -> Result<BigRational> {
    if betti.len() != degrees.len() {
        return Err(Error::Precondition(format!(
            "{} Betti numbers for {} degrees",
            betti.len(),
            degrees.len()
        )));
    }
    check_degrees(degrees)?;
    if codim == 0 {
        return Err(Error::Precondition("zero ideal: codimension 0".into()));
    }
    let sum = BigRational::from_integer(alternating_power_sum(betti, degrees, codim));
    let scale = BigRational::new(
        if codim.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        },
        factorial(codim as u64),
    );
    Ok(sum * scale)
}

/// The oracle's Betti numbers in ideal indexing, `β_{i+1, d_i}`.
pub fn oracle_sequence(table: &GradedBettiTable, degrees: &[usize]) -> Vec<BigInt> {
    degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| BigInt::from(table.get(i + 1, d)))
        .collect()
}

/// `Σ_{i>=1} β*_i t^{i-1}` from the dual's table and `Σ_i h_i (t+1)^i`.
fn eagon_reiner_sides(dual_table: &GradedBettiTable, h: &HVector) -> (IntPoly, IntPoly) {
    let p = dual_table.projective_dimension();
    let lhs = Poly::new((1..=p).map(|i| BigInt::from(dual_table.total(i))).collect());
    let rhs = h.as_poly().compose(&Poly::linear(BigInt::one()));
    (lhs, rhs)
}

/// Checks `Σ_{i>=1} β*_i t^{i-1} = Σ_i h_i(Δ) (t+1)^i` coefficientwise, with
/// `β*` the Betti numbers of the dual's face ring.
pub fn eagon_reiner_identity_check(
    complex: &SimplicialComplex,
    field: FieldSpec,
) -> Result<Vec<Record>> {
    const REF: &str = "eagon-reiner-identity";
    let dg = digest(&complex_to_json(complex));
    if !is_cohen_macaulay(complex, field)? {
        return Ok(vec![Record::note(
            REF,
            REF,
            &dg,
            "precondition not met: not Cohen-Macaulay",
        )]);
    }
    let h = complex.h_vector();
    if complex.is_full_simplex() {
        let rhs = h.as_poly().compose(&Poly::linear(BigInt::one()));
        return Ok(vec![Record::note(
            REF,
            REF,
            &dg,
            format!("degenerate: void dual gives 0, h-side gives {rhs}"),
        )]);
    }
    let dual_table = hochster_betti(&alexander_dual(complex), field)?;
    let (lhs, rhs) = eagon_reiner_sides(&dual_table, &h);
    Ok(vec![Record::compare(
        REF,
        REF,
        &dg,
        rhs.to_string(),
        lhs.to_string(),
    )])
}

/// Hilbert series, multiplicity and, when the oracle table is pure, the
/// Betti formula, vanishing sums, lower bounds and multiplicity identity.
pub fn pure_suite(complex: &SimplicialComplex, field: FieldSpec) -> Result<VerificationReport> {
    let table = hochster_betti(complex, field)?;
    Ok(pure_suite_with_table(complex, &table))
}

pub fn pure_suite_with_table(
    complex: &SimplicialComplex,
    table: &GradedBettiTable,
) -> VerificationReport {
    let dg = digest(&complex_to_json(complex));
    let mut report = VerificationReport::new();
    let n = complex.n();
    let d = complex.krull_dim();
    let h = complex.h_vector();
    let f = complex.f_vector();

    let from_complex =
        series_from_complex(complex).expect("oracle tables come from nonvoid complexes");
    let from_table = series_from_resolution(table);
    report.push(Record::compare(
        "hilbert-series",
        "hilbert-series-consistency",
        &dg,
        from_complex.to_string(),
        from_table.to_string(),
    ));
    report.push(Record::compare(
        "multiplicity",
        "multiplicity-top-faces",
        &dg,
        BigInt::from(f.top()),
        h.sum(),
    ));

    let shape = classify_resolution(table);
    let Some(degrees) = shape.pure_degrees() else {
        report.push(Record::note(
            "purity",
            "pure-resolution",
            &dg,
            "not pure; formula checks skipped",
        ));
        return report;
    };
    let codim = n - d;
    let formula =
        betti_from_h(&h, codim, degrees).expect("oracle degrees are increasing and positive");
    let oracle = oracle_sequence(table, degrees);
    report.push(Record::compare(
        "betti-from-h",
        "pure-betti-formula",
        &dg,
        seq(&oracle),
        seq(&formula),
    ));
    for (i, &di) in degrees.iter().enumerate() {
        let expected = if i % 2 == 0 {
            -oracle[i].clone()
        } else {
            oracle[i].clone()
        };
        report.push(Record::compare(
            &format!("sign-linkage[{i}]"),
            "pure-betti-formula",
            &dg,
            expected,
            vanishing_sum(&h, codim, di),
        ));
    }
    let top = degrees.last().copied().unwrap_or(0);
    let nonzero: Vec<usize> = (1..=n + top)
        .filter(|s| !degrees.contains(s))
        .filter(|&s| !vanishing_sum(&h, codim, s).is_zero())
        .collect();
    report.push(Record::condition(
        "vanishing-off-degrees",
        "vanishing-equations",
        &dg,
        format!("zero for s in 1..={} outside {}", n + top, seq(degrees)),
        if nonzero.is_empty() {
            "all zero".to_string()
        } else {
            format!("nonzero at {}", seq(&nonzero))
        },
        nonzero.is_empty(),
    ));
    report.records.extend(betti_inequality_check(
        &oracle,
        shape.projective_dimension,
        "pure-betti-lower-bound",
        &dg,
    ));
    if codim == 0 {
        report.push(Record::note(
            "multiplicity-identity",
            "pure-multiplicity-identity",
            &dg,
            "trivial: n = d",
        ));
    } else {
        let lhs = BigInt::from(f.top()) * factorial(codim as u64);
        let lhs = if codim.is_multiple_of(2) { lhs } else { -lhs };
        report.push(Record::compare(
            "multiplicity-identity",
            "pure-multiplicity-identity",
            &dg,
            lhs,
            alternating_power_sum(&oracle, degrees, codim),
        ));
    }
    report
}

/// Checks on the Alexander dual of a Cohen-Macaulay complex: linearity of
/// the dual's resolution with `t = n - d`, `k* = n - d*`, the Betti formula
/// with binomial base `k*`, vanishing sums, multiplicity identities, lower
/// bounds and the Eagon-Reiner identity.
pub fn cm_dual_suite(complex: &SimplicialComplex, field: FieldSpec) -> Result<VerificationReport> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let reisner = reisner_criterion(complex, field)?;
    let dual_linear = dual_linearity_criterion(complex, field)?;
    if reisner != dual_linear {
        return Err(Error::CriteriaDisagree {
            reisner,
            dual_linear,
        });
    }
    if !reisner {
        return Err(Error::Precondition(format!(
            "complex is not Cohen-Macaulay over {field}"
        )));
    }
    let dg = digest(&complex_to_json(complex));
    let mut report = VerificationReport::new();
    report.push(Record::compare(
        "cm-criteria-agree",
        "reisner-vs-dual-linearity",
        &dg,
        reisner,
        dual_linear,
    ));
    let n = complex.n();
    let d = complex.krull_dim();
    let f = complex.f_vector();
    let h = complex.h_vector();

    if complex.is_full_simplex() {
        report.push(Record::note(
            "cm-dual-suite",
            "dual-linear-resolution",
            &dg,
            "zero ideal: dual is void",
        ));
        let rhs = h.as_poly().compose(&Poly::linear(BigInt::one()));
        report.push(Record::note(
            "eagon-reiner-identity",
            "eagon-reiner-identity",
            &dg,
            format!("degenerate: void dual gives 0, h-side gives {rhs}"),
        ));
        return Ok(report);
    }

    let dual = alexander_dual(complex);
    let dual_f = dual.f_vector();
    report.push(Record::compare(
        "dual-f-vector",
        "dual-f-vector",
        &dg,
        seq(dual_f.entries()),
        seq(dual_f_vector(&f, n).entries()),
    ));
    let t = n - d;
    let table = hochster_betti(&dual, field)?;
    let shape = classify_resolution(&table);
    report.push(Record::compare(
        "dual-linear-start",
        "dual-linear-resolution",
        &dg,
        opt(Some(t)),
        opt(shape.linear_start()),
    ));
    let Some(p) = shape
        .last_ideal_step()
        .filter(|_| shape.linear_start() == Some(t))
    else {
        return Ok(report);
    };

    let d_star = dual.krull_dim();
    let ks = match k_star(&f, n) {
        KStar::Defined(k) => k,
        KStar::Undefined => unreachable!("only the full simplex has undefined k*"),
    };
    report.push(Record::compare(
        "k-star-dimension",
        "k-star",
        &dg,
        n - d_star,
        ks,
    ));

    let h_star = dual.h_vector();
    let degrees: Vec<usize> = (t..=t + p).collect();
    let oracle = oracle_sequence(&table, &degrees);
    let formula = betti_from_h_linear_with_base(&h_star, ks, t, p).expect("t >= 1");
    report.push(Record::compare(
        "dual-betti-from-h",
        "dual-betti-formula",
        &dg,
        seq(&oracle),
        seq(&formula),
    ));

    let nonzero: Vec<usize> = (1..t)
        .chain(p + t + 1..=n)
        .filter(|&j| !vanishing_sum(&h_star, ks, j).is_zero())
        .collect();
    report.push(Record::condition(
        "dual-vanishing",
        "dual-vanishing-equations",
        &dg,
        format!("zero for 0<j<{t} and {}<j<={n}", p + t),
        if nonzero.is_empty() {
            "all zero".to_string()
        } else {
            format!("nonzero at {}", seq(&nonzero))
        },
        nonzero.is_empty(),
    ));

    let e_dual = BigRational::from_integer(BigInt::from(dual_f.top()));
    let predicted = multiplicity_from_pure_resolution(&oracle, &degrees, ks)
        .expect("k* >= 1 and degrees are increasing");
    report.push(Record::compare(
        "dual-multiplicity",
        "dual-multiplicity-identity",
        &dg,
        e_dual.clone(),
        predicted.clone(),
    ));
    let from_f = binomial(n as u64, ks as u64) - BigInt::from(f.get(ks as isize - 1));
    report.push(Record::compare(
        "dual-multiplicity-from-f",
        "dual-multiplicity-from-f",
        &dg,
        BigRational::from_integer(from_f),
        predicted,
    ));
    report.records.extend(betti_inequality_check(
        &oracle,
        shape.projective_dimension,
        "dual-betti-lower-bound",
        &dg,
    ));

    let (lhs, rhs) = eagon_reiner_sides(&table, &h);
    report.push(Record::compare(
        "eagon-reiner-identity",
        "eagon-reiner-identity",
        &dg,
        rhs.to_string(),
        lhs.to_string(),
    ));
    Ok(report)
}

/// Checks on the clique complex `Δ(G)` of a chordal graph: minimal
/// non-faces are the complement's edges, the resolution is 2-linear, the
/// linear Betti formula with `t = 2`, the vanishing ranges `j = 1` and
/// `p + 2 < j <= n`, lower bounds, and that `Δ(G)` is a quasi-forest with
/// 1-skeleton `G`.
pub fn chordal_suite(graph: &Graph, field: FieldSpec) -> Result<VerificationReport> {
    if let Chordality::NotChordal { cycle } = graph.chordality() {
        return Err(Error::Precondition(format!(
            "graph is not chordal; chordless cycle {cycle:?}"
        )));
    }
    let dg = digest(&graph_to_json(graph));
    let mut report = VerificationReport::new();
    let complex = graph.clique_complex();
    let n = complex.n();
    let d = complex.krull_dim();

    let nonfaces: Vec<Vec<usize>> = complex
        .minimal_nonfaces()
        .expect("clique complexes are nonvoid")
        .into_iter()
        .map(vertices)
        .collect();
    let complement: Vec<Vec<usize>> = graph
        .complement()
        .edges()
        .into_iter()
        .map(|(a, b)| vec![a, b])
        .collect();
    report.push(Record::compare(
        "nonfaces-are-complement-edges",
        "edge-ideal-of-complement",
        &dg,
        format!("{complement:?}"),
        format!("{nonfaces:?}"),
    ));

    match complex.leaf_order() {
        Some(order) => report.push(Record::condition(
            "clique-complex-quasi-forest",
            "dirac-quasi-forest",
            &dg,
            "leaf order replays",
            seq(&order.iter().map(|&f| seq(&vertices(f))).collect::<Vec<_>>()),
            complex.is_leaf_order(&order),
        )),
        None => report.push(Record::condition(
            "clique-complex-quasi-forest",
            "dirac-quasi-forest",
            &dg,
            "leaf order exists",
            "none",
            false,
        )),
    }
    report.push(Record::compare(
        "one-skeleton",
        "dirac-quasi-forest",
        &dg,
        graph_to_json(graph),
        graph_to_json(&Graph::one_skeleton(&complex)),
    ));

    let table = hochster_betti(&complex, field)?;
    let shape: ResolutionShape = classify_resolution(&table);
    let Some(p) = shape.last_ideal_step() else {
        report.push(Record::note(
            "two-linear",
            "froberg-linearity",
            &dg,
            "zero ideal: complete graph",
        ));
        return Ok(report);
    };
    report.push(Record::compare(
        "two-linear",
        "froberg-linearity",
        &dg,
        opt(Some(2)),
        opt(shape.linear_start()),
    ));
    if shape.linear_start() != Some(2) {
        return Ok(report);
    }
    let h = complex.h_vector();
    let degrees: Vec<usize> = (2..=2 + p).collect();
    let oracle = oracle_sequence(&table, &degrees);
    let formula = betti_from_h_linear(&h, n, d, 2, p)?;
    report.push(Record::compare(
        "chordal-betti-from-h",
        "chordal-betti-formula",
        &dg,
        seq(&oracle),
        seq(&formula),
    ));
    let nonzero: Vec<usize> = std::iter::once(1)
        .chain(p + 3..=n)
        .filter(|&j| !vanishing_sum(&h, n - d, j).is_zero())
        .collect();
    report.push(Record::condition(
        "chordal-vanishing",
        "chordal-vanishing-equations",
        &dg,
        format!("zero for j=1 and {}<j<={n}", p + 2),
        if nonzero.is_empty() {
            "all zero".to_string()
        } else {
            format!("nonzero at {}", seq(&nonzero))
        },
        nonzero.is_empty(),
    ));
    report.records.extend(betti_inequality_check(
        &oracle,
        shape.projective_dimension,
        "chordal-betti-lower-bound",
        &dg,
    ));
    Ok(report)
}

/// Everything that applies to a complex: the pure suite, plus the
/// Cohen-Macaulay dual suite when the complex is Cohen-Macaulay.
pub fn verify_complex(complex: &SimplicialComplex, field: FieldSpec) -> Result<VerificationReport> {
    let mut report = pure_suite(complex, field)?;
    match cm_dual_suite(complex, field) {
        Ok(r) => report.merge(r),
        Err(Error::Precondition(msg)) => {
            let dg = digest(&complex_to_json(complex));
            report.push(Record::note(
                "cm-dual-suite",
                "dual-linear-resolution",
                &dg,
                msg,
            ));
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// Everything that applies to a graph: the chordal suite when chordal, and
/// [`verify_complex`] on its clique complex.
pub fn verify_graph(graph: &Graph, field: FieldSpec) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    match chordal_suite(graph, field) {
        Ok(r) => report.merge(r),
        Err(Error::Precondition(msg)) => {
            let dg = digest(&graph_to_json(graph));
            report.push(Record::note("chordal-suite", "froberg-linearity", &dg, msg));
        }
        Err(e) => return Err(e),
    }
    report.merge(verify_complex(&graph.clique_complex(), field)?);
    Ok(report)
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

/// Whether a rational is a nonnegative integer, for reporting.
pub fn as_count(r: &BigRational) -> Option<u64> {
    if r.is_integer() && !r.is_negative() {
        r.to_integer().to_u64()
    } else {
        None
    }
}
