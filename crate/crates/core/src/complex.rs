//! Simplicial complexes stored by their facets, face enumeration, f- and
//! h-vectors, and quasi-forest recognition.
//!
//! A face is a bit pattern over the ground set: bit `v - 1` is set when
//! vertex `v` belongs to the face. Ground sets are limited to 63 vertices.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::binomial;

pub type Face = u64;

pub const MAX_VERTICES: usize = 63;

/// Sorted 1-based vertex list of a face.
pub fn vertices(face: Face) -> Vec<usize> {
    (0..64)
        .filter(|b| face >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

/// Builds a face from 1-based vertex indices, checking they lie in `[1, n]`.
pub fn face_from_vertices(vs: &[usize], n: usize) -> Result<Face> {
    vs.iter().try_fold(0u64, |acc, &v| {
        if v == 0 || v > n {
            Err(Error::VertexOutOfRange { vertex: v, n })
        } else {
            Ok(acc | 1 << (v - 1))
        }
    })
}

/// Mask with the low `n` bits set, i.e. the face `[n]`.
pub fn full_face(n: usize) -> Face {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Size first, then lexicographic on the sorted vertex lists.
pub fn canonical_cmp(a: &Face, b: &Face) -> Ordering {
    a.count_ones()
        .cmp(&b.count_ones())
        .then_with(|| lex_cmp(*a, *b))
}

fn lex_cmp(a: Face, b: Face) -> Ordering {
    // For equal-size sets the smallest differing vertex decides: whichever set
    // holds it comes first.
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff.trailing_zeros();
    if a >> low & 1 == 1 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn check_ground_set(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        Err(Error::GroundSetSize(n))
    } else {
        Ok(())
    }
}

/// Iterator over all subsets of `mask`, largest bit pattern first, ending
/// with the empty set.
pub fn subsets(mask: Face) -> impl Iterator<Item = Face> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}

/// A simplicial complex on the explicit ground set `[n]`, stored by its
/// inclusion-maximal faces in canonical order.
///
/// An empty facet list is the void complex, which has no faces at all. The
/// irrelevant complex `{∅}` has the single facet `∅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal candidates, drops duplicates and sorts.
    pub fn new(n: usize, candidates: impl IntoIterator<Item = Face>) -> Result<Self> {
        check_ground_set(n)?;
        let ground = full_face(n);
        let mut faces: Vec<Face> = candidates.into_iter().collect();
        for &f in &faces {
            if f & !ground != 0 {
                let bad = vertices(f & !ground)[0];
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
        }
        Ok(Self::from_faces_unchecked(n, &mut faces))
    }

    /// Same as [`SimplicialComplex::new`] with 1-based vertex lists.
    pub fn from_vertex_lists<V: AsRef<[usize]>>(n: usize, lists: &[V]) -> Result<Self> {
        check_ground_set(n)?;
        let faces = lists
            .iter()
            .map(|l| face_from_vertices(l.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, faces)
    }

    pub(crate) fn from_faces_unchecked(n: usize, faces: &mut Vec<Face>) -> Self {
        faces.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<Face> = Vec::with_capacity(faces.len());
        for &f in faces.iter() {
            if !facets.iter().any(|&g| f & g == f) {
                facets.push(f);
            }
        }
        facets.sort_unstable_by(canonical_cmp);
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(SimplicialComplex {
            n,
            facets: Vec::new(),
        })
    }

    /// The complex `{∅}`.
    pub fn irrelevant(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(SimplicialComplex { n, facets: vec![0] })
    }

    /// All subsets of `[n]`.
    pub fn simplex(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(SimplicialComplex {
            n,
            facets: vec![full_face(n)],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_vertex_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| vertices(f)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [0]
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets == [full_face(self.n)]
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    /// Krull dimension of the face ring, `dim + 1`. Zero for the void complex.
    pub fn krull_dim(&self) -> usize {
        self.dim().map_or(0, |d| (d + 1) as usize)
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|&f| face & f == face)
    }

    /// Vertices `v` with `{v}` a face.
    pub fn vertex_mask(&self) -> Face {
        self.facets.iter().fold(0, |acc, f| acc | f)
    }

    /// Induced subcomplex on `w`: faces of the complex contained in `w`.
    pub fn restrict(&self, w: Face) -> Self {
        if self.is_void() {
            return self.clone();
        }
        let mut faces: Vec<Face> = self.facets.iter().map(|f| f & w).collect();
        Self::from_faces_unchecked(self.n, &mut faces)
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`. Void if `σ` is not a face.
    pub fn link(&self, sigma: Face) -> Self {
        let mut faces: Vec<Face> = self
            .facets
            .iter()
            .filter(|&&f| f & sigma == sigma)
            .map(|f| f & !sigma)
            .collect();
        Self::from_faces_unchecked(self.n, &mut faces)
    }

    /// Every face exactly once, grouped by dimension: entry `k` holds the
    /// faces of dimension `k - 1`, in canonical order. Cost is
    /// `O(Σ_F 2^|F|)` over the facets `F`.
    pub fn faces(&self) -> Vec<Vec<Face>> {
        let Some(dim) = self.dim() else {
            return Vec::new();
        };
        let mut seen: HashSet<Face> = HashSet::new();
        let mut groups: Vec<Vec<Face>> = vec![Vec::new(); (dim + 2) as usize];
        for &facet in &self.facets {
            for s in subsets(facet) {
                if seen.insert(s) {
                    groups[s.count_ones() as usize].push(s);
                }
            }
        }
        for g in &mut groups {
            g.sort_unstable_by(canonical_cmp);
        }
        groups
    }

    pub fn f_vector(&self) -> FVector {
        if self.is_void() {
            return FVector::void();
        }
        let counts = self.faces().iter().map(|g| g.len() as u64).collect();
        FVector::new(counts).expect("face counts form a valid f-vector")
    }

    pub fn h_vector(&self) -> HVector {
        h_from_f(&self.f_vector())
    }

    /// Inclusion-minimal subsets of `[n]` that are not faces, in canonical
    /// order. These generate the Stanley-Reisner ideal.
    pub fn minimal_nonfaces(&self) -> Result<Vec<Face>> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let verts = self.vertex_mask();
        let mut out: Vec<Face> = (0..self.n)
            .map(|b| 1u64 << b)
            .filter(|v| verts & v == 0)
            .collect();
        // Every other minimal non-face is σ ∪ {v} for a face σ and a vertex
        // v ∉ σ, with all codimension-one subsets present.
        let mut found: HashSet<Face> = HashSet::new();
        for group in self.faces() {
            for &sigma in &group {
                let mut rest = verts & !sigma;
                while rest != 0 {
                    let v = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    let cand = sigma | v;
                    // Each candidate is generated once, from its largest vertex.
                    if sigma >= v {
                        continue;
                    }
                    if found.contains(&cand) || self.contains(cand) {
                        continue;
                    }
                    let mut bits = cand;
                    let mut minimal = true;
                    while bits != 0 {
                        let u = bits & bits.wrapping_neg();
                        bits &= bits - 1;
                        if !self.contains(cand & !u) {
                            minimal = false;
                            break;
                        }
                    }
                    if minimal {
                        found.insert(cand);
                    }
                }
            }
        }
        out.extend(found);
        out.sort_unstable_by(canonical_cmp);
        Ok(out)
    }

    /// Whether `facets[idx]` is a leaf of the subcomplex generated by the
    /// facets listed in `among` (which must contain `idx`). On success
    /// returns the branch, or `None` when it is the only facet.
    fn leaf_branch(facets: &[Face], among: &[usize], idx: usize) -> Option<Option<usize>> {
        let f = facets[idx];
        let others = among.iter().copied().filter(|&j| j != idx);
        let union = others.clone().fold(0, |acc, j| acc | (facets[j] & f));
        let mut others = others.peekable();
        if others.peek().is_none() {
            return Some(None);
        }
        others.find(|&g| facets[g] & f == union).map(Some)
    }

    /// Whether `facet` is a leaf of the complex generated by `facets`: it is
    /// the only facet, or some other facet `G` contains `H ∩ F` for every
    /// facet `H ≠ F`.
    pub fn is_leaf(facets: &[Face], facet: Face) -> bool {
        let Some(idx) = facets.iter().position(|&f| f == facet) else {
            return false;
        };
        let all: Vec<usize> = (0..facets.len()).collect();
        Self::leaf_branch(facets, &all, idx).is_some()
    }

    /// A leaf order `F_1, ..., F_m` of the facets, if one exists.
    ///
    /// Tries greedy leaf removal first and falls back to backtracking over
    /// leaf removals, memoizing facet subsets already known to fail.
    pub fn leaf_order(&self) -> Option<Vec<Face>> {
        if self.is_void() {
            return None;
        }
        let facets = &self.facets;
        let mut remaining: Vec<usize> = (0..facets.len()).collect();
        let mut removed = Vec::new();
        while remaining.len() > 1 {
            let next = remaining
                .iter()
                .position(|&i| Self::leaf_branch(facets, &remaining, i).is_some());
            match next {
                Some(pos) => removed.push(remaining.remove(pos)),
                None => break,
            }
        }
        if remaining.len() <= 1 {
            removed.extend(remaining);
            removed.reverse();
            return Some(removed.into_iter().map(|i| facets[i]).collect());
        }

        let all: Vec<usize> = (0..facets.len()).collect();
        let mut failed: HashSet<Vec<usize>> = HashSet::new();
        let mut order = Vec::new();
        if Self::search_leaf_order(facets, all, &mut failed, &mut order) {
            order.reverse();
            Some(order.into_iter().map(|i| facets[i]).collect())
        } else {
            None
        }
    }

    fn search_leaf_order(
        facets: &[Face],
        remaining: Vec<usize>,
        failed: &mut HashSet<Vec<usize>>,
        removed: &mut Vec<usize>,
    ) -> bool {
        if remaining.len() <= 1 {
            removed.extend(&remaining);
            return true;
        }
        if failed.contains(&remaining) {
            return false;
        }
        for pos in 0..remaining.len() {
            let idx = remaining[pos];
            if Self::leaf_branch(facets, &remaining, idx).is_none() {
                continue;
            }
            let mut rest = remaining.clone();
            rest.remove(pos);
            let mark = removed.len();
            removed.push(idx);
            if Self::search_leaf_order(facets, rest, failed, removed) {
                return true;
            }
            removed.truncate(mark);
        }
        failed.insert(remaining);
        false
    }

    pub fn is_quasi_forest(&self) -> bool {
        self.leaf_order().is_some()
    }

    /// Checks that `order` lists the facets and each `F_i` is a leaf of
    /// `⟨F_1, ..., F_i⟩`.
    pub fn is_leaf_order(&self, order: &[Face]) -> bool {
        let mut sorted = order.to_vec();
        sorted.sort_unstable_by(canonical_cmp);
        if sorted != self.facets {
            return false;
        }
        (0..order.len()).all(|i| Self::is_leaf(&order[..=i], order[i]))
    }
}

/// Face numbers `(f_{-1}, f_0, ..., f_{d-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector {
    entries: Vec<u64>,
}

impl FVector {
    /// Requires `f_{-1} = 1` and a nonzero top entry, or the void form `[0]`.
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        match entries.as_slice() {
            [0] => Ok(FVector { entries }),
            [1, .., 0] => Err(Error::Precondition(
                "f-vector must not end in a zero entry".into(),
            )),
            [1, ..] => Ok(FVector { entries }),
            _ => Err(Error::Precondition(
                "f-vector must start with f_{-1} = 1".into(),
            )),
        }
    }

    pub fn void() -> Self {
        FVector { entries: vec![0] }
    }

    pub fn is_void(&self) -> bool {
        self.entries == [0]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// `d = dim + 1`, the number of entries after `f_{-1}`.
    pub fn d(&self) -> usize {
        self.entries.len() - 1
    }

    /// `f_i` for `i >= -1`, zero past the stored length.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.entries.get(k).copied())
            .unwrap_or(0)
    }

    /// Number of top-dimensional faces, `f_{d-1}`.
    pub fn top(&self) -> u64 {
        *self.entries.last().expect("nonempty")
    }
}

/// Entries `(h_0, ..., h_d)`; may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HVector {
    entries: Vec<BigInt>,
}

impl HVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        assert!(!entries.is_empty(), "an h-vector has at least h_0");
        HVector { entries }
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        HVector::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn d(&self) -> usize {
        self.entries.len() - 1
    }

    /// `h_i`, zero for `i > d`.
    pub fn get(&self, i: usize) -> BigInt {
        self.entries.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn as_poly(&self) -> Poly<BigInt> {
        Poly::new(self.entries.clone())
    }
}

/// `h_j = Σ_{i=0}^{j} (-1)^{j-i} C(d-i, j-i) f_{i-1}`.
pub fn h_from_f(f: &FVector) -> HVector {
    let d = f.d();
    let entries = (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let term = binomial((d - i) as u64, (j - i) as u64) * f.entries[i];
                    if (j - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    HVector { entries }
}

/// `f_{j-1} = Σ_{i=0}^{j} C(d-i, j-i) h_i`. Fails if the result is not a
/// valid f-vector (negative or non-integral-count entries).
pub fn f_from_h(h: &HVector) -> Result<FVector> {
    let d = h.d();
    let entries = (0..=d)
        .map(|j| {
            let v: BigInt = (0..=j)
                .map(|i| binomial((d - i) as u64, (j - i) as u64) * &h.entries[i])
                .sum();
            if v.is_negative() {
                return Err(Error::Precondition(format!(
                    "h-vector yields negative face count {v}"
                )));
            }
            v.to_u64()
                .ok_or_else(|| Error::Precondition(format!("face count {v} exceeds u64")))
        })
        .collect::<Result<Vec<u64>>>()?;
    FVector::new(entries)
}

/// Coefficients `c_0..c_d` of `Σ_i f_{i-1} (x-1)^i` and the tail sums
/// `Σ_{i>=k} c_i` for `k = 1..d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiForestSequence {
    pub coefficients: Vec<BigInt>,
    pub tail_sums: Vec<BigInt>,
}

impl QuasiForestSequence {
    pub fn tail_sums_positive(&self) -> bool {
        self.tail_sums.iter().all(|s| s.is_positive())
    }
}

pub fn quasi_forest_sequence(f: &FVector) -> QuasiForestSequence {
    let d = f.d();
    let fpoly = Poly::new(f.entries.iter().map(|&x| BigInt::from(x)).collect());
    let expanded = fpoly.compose(&Poly::linear(-BigInt::one()));
    let coefficients: Vec<BigInt> = (0..=d).map(|i| expanded.coeff(i)).collect();
    let tail_sums = (1..=d).map(|k| coefficients[k..].iter().sum()).collect();
    QuasiForestSequence {
        coefficients,
        tail_sums,
    }
}

/// Index of each face inside its dimension group, for boundary matrices.
pub(crate) fn index_faces(groups: &[Vec<Face>]) -> Vec<HashMap<Face, usize>> {
    groups
        .iter()
        .map(|g| g.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect()
}
