//! Brute-force oracles shared by the integration tests. Each works from the
//! definitions by scanning subsets or permutations and uses none of the
//! library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use stanley_reisner::complex::vertices;
use stanley_reisner::generate::{all_complexes, random_complex, rng_from_seed};
use stanley_reisner::{Graph, SimplicialComplex};

/// Modulus for the test-side homology. Boundary matrices of complexes this
/// small have no torsion at so large a prime, so ranks agree with `Q`.
pub const P: u64 = 1_000_000_007;

pub fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn is_face(facets: &[u64], s: u64) -> bool {
    facets.iter().any(|&f| s & !f == 0)
}

/// Every face, by scanning all subsets of `[n]`.
pub fn faces(facets: &[u64], n: usize) -> Vec<u64> {
    (0..1u64 << n).filter(|&s| is_face(facets, s)).collect()
}

/// Maximal members of a down-closed family.
pub fn maximal(family: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = family
        .iter()
        .copied()
        .filter(|&s| !family.iter().any(|&t| t != s && s & !t == 0))
        .collect();
    out.sort_unstable();
    out
}

/// `f_{-1}, f_0, ...`, with `[0]` for the void complex.
pub fn f_vector(facets: &[u64], n: usize) -> Vec<u64> {
    let all = faces(facets, n);
    if all.is_empty() {
        return vec![0];
    }
    let top = all.iter().map(|s| s.count_ones()).max().unwrap() as usize;
    let mut f = vec![0u64; top + 1];
    for s in all {
        f[s.count_ones() as usize] += 1;
    }
    f
}

/// h-vector from `Σ h_i t^i = Σ f_{i-1} t^i (1-t)^{d-i}`.
pub fn h_vector(f: &[u64]) -> Vec<i128> {
    let d = f.len() - 1;
    let mut h = vec![0i128; d + 1];
    for (i, &fi) in f.iter().enumerate() {
        for k in 0..=d - i {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            h[i + k] += sign * fi as i128 * binom((d - i) as i128, k as i128);
        }
    }
    h
}

/// Alexander dual by definition: complements of non-faces.
pub fn dual_faces(facets: &[u64], n: usize) -> Vec<u64> {
    let full = (1u64 << n) - 1;
    (0..1u64 << n)
        .filter(|&s| !is_face(facets, full & !s))
        .collect()
}

pub fn sorted_facets(c: &SimplicialComplex) -> Vec<u64> {
    let mut v = c.facets().to_vec();
    v.sort_unstable();
    v
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow(rows[rank][c], P - 2);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let factor = rows[r][c] * inv % P;
                let pivot_row = rows[rank].clone();
                for (x, &y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x = (*x + P - factor * y % P) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

/// Reduced Betti numbers of a family of faces: entry `k + 1` is
/// `dim H̃_k`. Empty for the void family.
pub fn reduced_homology(family: &[u64]) -> Vec<u64> {
    if family.is_empty() {
        return Vec::new();
    }
    let top = family.iter().map(|s| s.count_ones()).max().unwrap() as usize;
    let groups: Vec<Vec<u64>> = (0..=top)
        .map(|k| {
            family
                .iter()
                .copied()
                .filter(|s| s.count_ones() as usize == k)
                .collect()
        })
        .collect();
    // rank of the boundary from size-k faces to size-(k-1) faces
    let boundary_rank = |k: usize| -> usize {
        if k == 0 || k > top {
            return 0;
        }
        let rows: Vec<Vec<u64>> = groups[k]
            .iter()
            .map(|&s| {
                groups[k - 1]
                    .iter()
                    .map(|&t| {
                        if s & t != t {
                            return 0;
                        }
                        let v = (s & !t).trailing_zeros();
                        let below = (s & ((1u64 << v) - 1)).count_ones();
                        if below.is_multiple_of(2) {
                            1
                        } else {
                            P - 1
                        }
                    })
                    .collect()
            })
            .collect();
        rank_mod_p(rows)
    };
    let ranks: Vec<usize> = (0..=top + 1).map(boundary_rank).collect();
    (0..=top)
        .map(|k| (groups[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect()
}

/// Graded Betti numbers of `k[Δ]` through links in the Alexander dual:
/// `β_{i,W} = dim H̃_{i-2}(lk_{Δ*}([n] \ W))` for `i >= 1`.
pub fn betti_via_dual_links(facets: &[u64], n: usize) -> BTreeMap<(usize, usize), u64> {
    let full = (1u64 << n) - 1;
    let dual = dual_faces(facets, n);
    let mut table = BTreeMap::new();
    table.insert((0, 0), 1);
    for w in 1..=full {
        let sigma = full & !w;
        if !dual.contains(&sigma) {
            continue;
        }
        let link: Vec<u64> = dual
            .iter()
            .copied()
            .filter(|&g| g & sigma == 0 && dual.contains(&(g | sigma)))
            .collect();
        for (k, &b) in reduced_homology(&link).iter().enumerate() {
            if b > 0 {
                // k = (i - 2) + 1
                *table.entry((k + 1, w.count_ones() as usize)).or_insert(0) += b;
            }
        }
    }
    table
}

/// Chordality by looking for an induced cycle of length at least 4.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    (0..1u64 << n)
        .filter(|s| s.count_ones() >= 4)
        .all(|s| !is_induced_cycle(g, s))
}

pub fn is_induced_cycle(g: &Graph, s: u64) -> bool {
    let vs = vertices(s);
    if vs.len() < 4
        || !vs
            .iter()
            .all(|&v| vs.iter().filter(|&&w| g.has_edge(v, w)).count() == 2)
    {
        return false;
    }
    let mut seen = vec![vs[0]];
    let mut frontier = vec![vs[0]];
    while let Some(v) = frontier.pop() {
        for &w in &vs {
            if g.has_edge(v, w) && !seen.contains(&w) {
                seen.push(w);
                frontier.push(w);
            }
        }
    }
    seen.len() == vs.len()
}

/// Clique complex facets by scanning subsets.
pub fn clique_facets(g: &Graph) -> Vec<u64> {
    let cliques: Vec<u64> = (0..1u64 << g.n())
        .filter(|&s| {
            let vs = vertices(s);
            vs.iter()
                .all(|&a| vs.iter().all(|&b| a == b || g.has_edge(a, b)))
        })
        .collect();
    maximal(&cliques)
}

/// `F` is a leaf of `facets` (which contains it) when some other facet
/// contains every intersection of `F` with another facet.
pub fn is_leaf(facets: &[u64], f: u64) -> bool {
    let others: Vec<u64> = facets.iter().copied().filter(|&g| g != f).collect();
    others.is_empty()
        || others
            .iter()
            .any(|&b| others.iter().all(|&h| (h & f) & !b == 0))
}

/// Exhaustive search over orderings of the facets for a leaf order.
pub fn has_leaf_order(facets: &[u64]) -> bool {
    fn extend(prefix: &mut Vec<u64>, rest: &mut Vec<u64>) -> bool {
        if rest.is_empty() {
            return true;
        }
        for i in 0..rest.len() {
            let f = rest.remove(i);
            prefix.push(f);
            if is_leaf(prefix, f) && extend(prefix, rest) {
                return true;
            }
            prefix.pop();
            rest.insert(i, f);
        }
        false
    }
    extend(&mut Vec::new(), &mut facets.to_vec())
}

/// Checks that `order` lists `facets` and each facet is a leaf of its prefix.
pub fn replays(order: &[u64], facets: &[u64]) -> bool {
    let mut a = order.to_vec();
    a.sort_unstable();
    let mut b = facets.to_vec();
    b.sort_unstable();
    a == b && (1..=order.len()).all(|i| is_leaf(&order[..i], order[i - 1]))
}

/// Hilbert function by counting monomials: a face `F` carries
/// `C(s-1, |F|-1)` monomials of degree `s >= 1` with support exactly `F`.
pub fn hilbert_function(facets: &[u64], n: usize, s: usize) -> i128 {
    if s == 0 {
        return i128::from(!faces(facets, n).is_empty());
    }
    faces(facets, n)
        .iter()
        .filter(|f| **f != 0)
        .map(|f| binom(s as i128 - 1, f.count_ones() as i128 - 1))
        .sum()
}

pub fn random_graph(n: usize, seed: u64) -> Graph {
    let mut rng = rng_from_seed(seed);
    let p = rng.gen_range(0.2..0.8);
    let mut g = Graph::empty(n).unwrap();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.gen_bool(p) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

/// Every nonvoid complex on `n <= 5` vertices and `per_size` seeded random
/// complexes for each `n` in `random_sizes`.
pub fn corpus(
    exhaustive_up_to: usize,
    random_sizes: &[usize],
    per_size: u64,
) -> Vec<SimplicialComplex> {
    let mut out: Vec<SimplicialComplex> = (1..=exhaustive_up_to)
        .flat_map(|n| all_complexes(n).unwrap())
        .filter(|c| !c.is_void())
        .collect();
    for &n in random_sizes {
        for seed in 0..per_size {
            let mut rng = rng_from_seed(seed * 1000 + n as u64);
            out.push(random_complex(n, &mut rng).unwrap());
        }
    }
    out
}
