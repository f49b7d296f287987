//! Combinatorial Alexander duality.

use num_traits::ToPrimitive;

use crate::complex::{full_face, FVector, SimplicialComplex};
use crate::scalar::binomial;

/// `Δ* = {W ⊆ [n] : [n] \ W ∉ Δ}` on the same ground set.
///
/// The facets of the dual are the complements of the minimal non-faces of
/// `Δ`, so no `2^n` scan is needed.
pub fn alexander_dual(complex: &SimplicialComplex) -> SimplicialComplex {
    let n = complex.n();
    if complex.is_void() {
        return SimplicialComplex::simplex(n).expect("ground set already validated");
    }
    let ground = full_face(n);
    let facets = complex
        .minimal_nonfaces()
        .expect("complex is nonvoid")
        .into_iter()
        .map(|m| ground & !m);
    let dual = SimplicialComplex::new(n, facets).expect("complements stay in the ground set");
    if dual.is_void() {
        // only the full simplex has no non-faces
        debug_assert!(complex.is_full_simplex());
    }
    dual
}

/// f-vector of the dual from the f-vector of `Δ`:
/// `f*_i = C(n, i+1) - f_{n-i-2}` for `-1 <= i <= n-1`, with trailing zeros
/// trimmed.
///
/// An `i`-face `W` of the dual has a complement of size `n-i-1`, which is a
/// face of dimension `n-i-2` exactly when `W` is not in the dual.
pub fn dual_f_vector(f: &FVector, n: usize) -> FVector {
    let mut entries: Vec<u64> = (-1..n as isize)
        .map(|i| {
            let total = binomial(n as u64, (i + 1) as u64);
            let removed = f.get(n as isize - i - 2);
            (total - removed)
                .to_u64()
                .expect("f-vector belongs to a complex on [n]")
        })
        .collect();
    while entries.len() > 1 && entries.last() == Some(&0) {
        entries.pop();
    }
    if entries == [0] {
        return FVector::void();
    }
    FVector::new(entries).expect("dual counts form an f-vector")
}

/// Smallest size at which `Δ` is missing a subset of `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KStar {
    Defined(usize),
    /// `Δ` is the full simplex.
    Undefined,
}

impl KStar {
    pub fn value(self) -> Option<usize> {
        match self {
            KStar::Defined(k) => Some(k),
            KStar::Undefined => None,
        }
    }
}

/// Smallest `k` with `C(n, k) != f_{k-1}`, so that `dim k[Δ*] = n - k`.
/// For the void complex this is `0`.
pub fn k_star(f: &FVector, n: usize) -> KStar {
    (0..=n)
        .find(|&k| binomial(n as u64, k as u64) != f.get(k as isize - 1).into())
        .map_or(KStar::Undefined, KStar::Defined)
}
