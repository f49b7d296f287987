//! Graded Betti numbers of face rings from reduced simplicial homology of
//! induced subcomplexes (Hochster's formula), with purity classification and
//! Cohen-Macaulay tests.
//!
//! Tables use the standard homological indexing: `β_{0,0} = 1` counts the
//! generator of `k[Δ]` itself and `β_{1,j}` counts minimal generators of the
//! Stanley-Reisner ideal in degree `j`. The closed-form formulas elsewhere in
//! the crate index from the ideal's generators instead, so their `β_i` at
//! degree `d_i` is this table's `β_{i+1, d_i}`. [`ResolutionShape`] is the one
//! place where that shift happens.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::alexander::alexander_dual;
use crate::complex::{index_faces, vertices, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{is_prime, rank_mod_p, rank_rational, IntMatrix};

/// Largest ground set accepted by [`hochster_betti`]; the oracle visits all
/// `2^n` vertex subsets.
pub const ORACLE_MAX_VERTICES: usize = 22;

/// Coefficient field for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn rank(self, matrix: &[Vec<i64>]) -> usize {
        match self {
            FieldSpec::Rationals => rank_rational(matrix),
            FieldSpec::Prime(p) => rank_mod_p(matrix, p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::Prime(p) => write!(f, "prime {p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q`, `Q`, `rationals`, or a prime.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" | "rationals" => Ok(FieldSpec::Rationals),
            other => {
                let p = other
                    .strip_prefix("prime ")
                    .unwrap_or(other)
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("unknown field `{s}`")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

/// Boundary matrix `C_k -> C_{k-1}` for `k >= 0`; `groups[k + 1]` holds the
/// `k`-faces. Rows are indexed by `k`-faces.
fn boundary_matrix(
    groups: &[Vec<u64>],
    index: &[std::collections::HashMap<u64, usize>],
    k: usize,
) -> IntMatrix {
    let cols = groups[k].len();
    groups[k + 1]
        .iter()
        .map(|&face| {
            let mut row = vec![0i64; cols];
            for (j, v) in vertices(face).into_iter().enumerate() {
                let sub = face & !(1u64 << (v - 1));
                row[index[k][&sub]] = if j % 2 == 0 { 1 } else { -1 };
            }
            row
        })
        .collect()
}

/// Ranks of reduced homology; entry `k + 1` is `dim H̃_k` for
/// `k = -1, ..., dim Δ`. Empty for the void complex, which has no reduced
/// homology.
pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> Vec<u64> {
    let groups = complex.faces();
    if groups.is_empty() {
        return Vec::new();
    }
    let index = index_faces(&groups);
    let top = groups.len();
    // ranks[k] = rank of the boundary map out of the group holding k-1 faces
    let mut ranks = vec![0usize; top + 1];
    for k in 0..top - 1 {
        let m = boundary_matrix(&groups, &index, k);
        ranks[k + 1] = field.rank(&m);
    }
    (0..top)
        .map(|g| (groups[g].len() - ranks[g] - ranks[g + 1]) as u64)
        .collect()
}

/// `dim H̃_i(Δ; k)`; zero outside `-1..=dim Δ` and for the void complex.
pub fn reduced_homology_rank(complex: &SimplicialComplex, i: isize, field: FieldSpec) -> u64 {
    usize::try_from(i + 1)
        .ok()
        .and_then(|k| reduced_homology(complex, field).get(k).copied())
        .unwrap_or(0)
}

/// Graded Betti numbers `β_{i,j}` of `k[Δ]` over `R = k[x_1..x_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBettiTable {
    pub n: usize,
    pub field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl GradedBettiTable {
    /// Builds a table from `(i, j, β_{i,j})` triples; zero entries are dropped.
    pub fn from_triples(n: usize, field: FieldSpec, triples: &[(usize, usize, u64)]) -> Self {
        let mut entries = BTreeMap::new();
        for &(i, j, b) in triples {
            if b != 0 {
                *entries.entry((i, j)).or_insert(0) += b;
            }
        }
        GradedBettiTable { n, field, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(i, j, β_{i,j})`, sorted by `(i, j)`.
    pub fn triples(&self) -> Vec<(usize, usize, u64)> {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(ii, _), _)| ii == i)
            .map(|(_, &b)| b)
            .sum()
    }

    /// Degrees `j` with `β_{i,j} != 0`.
    pub fn degrees_at(&self, i: usize) -> Vec<usize> {
        self.entries
            .keys()
            .filter(|&&(ii, _)| ii == i)
            .map(|&(_, j)| j)
            .collect()
    }

    /// Betti diagram: column `i`, row `j - i`, zeros shown as `.`.
    pub fn diagram(&self) -> String {
        let p = self.projective_dimension();
        let rows = self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        let width = (0..=p)
            .map(|i| self.total(i).to_string().len().max(i.to_string().len()))
            .max()
            .unwrap_or(1);
        let mut out = format!("{:6}", "");
        for i in 0..=p {
            out.push_str(&format!(" {i:>width$}"));
        }
        out.push_str("\ntotal:");
        for i in 0..=p {
            out.push_str(&format!(" {:>width$}", self.total(i)));
        }
        out.push('\n');
        for r in 0..=rows {
            out.push_str(&format!("{r:>5}:"));
            for i in 0..=p {
                let b = self.get(i, i + r);
                let cell = if b == 0 {
                    ".".to_string()
                } else {
                    b.to_string()
                };
                out.push_str(&format!(" {cell:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Hochster's formula:
/// `β_{i,j} = Σ_{|W| = j} dim H̃_{j-i-1}(Δ_W)`, summed over all `W ⊆ [n]`.
///
/// Subsets are processed in parallel; each reads only the immutable complex
/// and partial tables are merged by addition, so the result does not depend
/// on scheduling.
pub fn hochster_betti(complex: &SimplicialComplex, field: FieldSpec) -> Result<GradedBettiTable> {
    let n = complex.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            limit: ORACLE_MAX_VERTICES,
        });
    }
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let entries = (0..1u64 << n)
        .into_par_iter()
        .fold(
            BTreeMap::new,
            |mut acc: BTreeMap<(usize, usize), u64>, w| {
                let j = w.count_ones() as usize;
                let restricted = complex.restrict(w);
                // a cone over any vertex is acyclic
                let apex = restricted.facets().iter().fold(w, |a, f| a & f);
                if apex != 0 {
                    return acc;
                }
                for (k, &rank) in reduced_homology(&restricted, field).iter().enumerate() {
                    // k indexes H̃_{k-1}, so j - i - 1 = k - 1
                    if rank != 0 {
                        *acc.entry((j - k, j)).or_insert(0) += rank;
                    }
                }
                acc
            },
        )
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, v) in b {
                *a.entry(key).or_insert(0) += v;
            }
            a
        });
    let mut table = GradedBettiTable { n, field, entries };
    table.entries.insert((0, 0), 1);
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ResolutionClass {
    /// One internal degree at each step. `degrees` lists `d_0 < ... < d_p`
    /// for the ideal's resolution (empty for the zero ideal).
    Pure {
        degrees: Vec<usize>,
    },
    /// Pure with `d_i = start + i`.
    Linear {
        start: usize,
        degrees: Vec<usize>,
    },
    NotPure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionShape {
    pub class: ResolutionClass,
    /// Standard projective dimension of `k[Δ]`.
    pub projective_dimension: usize,
}

impl ResolutionShape {
    /// `d_0, ..., d_p` when the resolution is pure.
    pub fn pure_degrees(&self) -> Option<&[usize]> {
        match &self.class {
            ResolutionClass::Pure { degrees } | ResolutionClass::Linear { degrees, .. } => {
                Some(degrees)
            }
            ResolutionClass::NotPure => None,
        }
    }

    pub fn is_pure(&self) -> bool {
        self.pure_degrees().is_some()
    }

    pub fn linear_start(&self) -> Option<usize> {
        match self.class {
            ResolutionClass::Linear { start, .. } => Some(start),
            _ => None,
        }
    }

    /// `p` in the ideal-indexed convention, `P - 1`; `None` for the zero ideal.
    pub fn last_ideal_step(&self) -> Option<usize> {
        self.projective_dimension.checked_sub(1)
    }
}

/// Pure when each homological degree `1..=P` has exactly one nonzero entry;
/// linear when those degrees are consecutive.
pub fn classify_resolution(table: &GradedBettiTable) -> ResolutionShape {
    let p = table.projective_dimension();
    let mut degrees = Vec::with_capacity(p);
    for i in 1..=p {
        match table.degrees_at(i).as_slice() {
            [j] => degrees.push(*j),
            _ => {
                return ResolutionShape {
                    class: ResolutionClass::NotPure,
                    projective_dimension: p,
                }
            }
        }
    }
    let class = match degrees.first() {
        Some(&start) if degrees.iter().enumerate().all(|(i, &d)| d == start + i) => {
            ResolutionClass::Linear { start, degrees }
        }
        _ => ResolutionClass::Pure { degrees },
    };
    ResolutionShape {
        class,
        projective_dimension: p,
    }
}

/// Reisner's criterion: `H̃_i(lk σ) = 0` for every face `σ` and every
/// `i < dim lk σ`.
pub fn reisner_criterion(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let faces: Vec<u64> = complex.faces().into_iter().flatten().collect();
    Ok(faces.par_iter().all(|&sigma| {
        let link = complex.link(sigma);
        let homology = reduced_homology(&link, field);
        // the last entry is the top dimension, which may be nonzero
        homology[..homology.len() - 1].iter().all(|&h| h == 0)
    }))
}

/// Eagon-Reiner: `k[Δ]` is Cohen-Macaulay iff the Stanley-Reisner ideal of
/// the dual has an `(n - d)`-linear resolution, `d = dim Δ + 1`. The full
/// simplex (void dual) counts as Cohen-Macaulay.
pub fn dual_linearity_criterion(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if complex.is_full_simplex() {
        return Ok(true);
    }
    let dual = alexander_dual(complex);
    let shape = classify_resolution(&hochster_betti(&dual, field)?);
    Ok(shape.linear_start() == Some(complex.n() - complex.krull_dim()))
}

/// Runs both criteria and fails if they disagree.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let reisner = reisner_criterion(complex, field)?;
    let dual_linear = dual_linearity_criterion(complex, field)?;
    if reisner != dual_linear {
        return Err(Error::CriteriaDisagree {
            reisner,
            dual_linear,
        });
    }
    Ok(reisner)
}
