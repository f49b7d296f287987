//! Seeded instance generators and exhaustive enumeration of small complexes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{full_face, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The generator every seeded routine in the crate uses.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Parses `p/q` or a decimal in `[0, 1]`.
pub fn parse_density(text: &str) -> Result<f64> {
    let bad = || Error::Parse(format!("density `{text}` is not a number in [0, 1]"));
    let value = match text.split_once('/') {
        Some((num, den)) => {
            let num: u64 = num.trim().parse().map_err(|_| bad())?;
            let den: u64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            num as f64 / den as f64
        }
        None => text.trim().parse::<f64>().map_err(|_| bad())?,
    };
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(bad())
    }
}

/// Random chordal graph on `[n]`.
///
/// Vertices arrive in a random order and each new vertex is joined to a
/// clique of the graph built so far, so the reverse arrival order is a
/// perfect elimination order. Each existing vertex, visited in random order,
/// joins the clique with probability `density` if it is adjacent to every
/// vertex already chosen. Density 1 gives `K_n`, density 0 the empty graph.
pub fn random_chordal(n: usize, density: f64, seed: u64) -> Result<Graph> {
    let mut graph = Graph::empty(n)?;
    let mut rng = rng_from_seed(seed);
    let mut arrival: Vec<usize> = (1..=n).collect();
    arrival.shuffle(&mut rng);
    for (k, &v) in arrival.iter().enumerate() {
        let mut earlier = arrival[..k].to_vec();
        earlier.shuffle(&mut rng);
        let mut clique: Vec<usize> = Vec::new();
        for w in earlier {
            let fits = clique.iter().all(|&c| graph.has_edge(c, w));
            if fits && rng.gen_bool(density) {
                clique.push(w);
            }
        }
        for w in clique {
            graph.add_edge(v, w)?;
        }
    }
    Ok(graph)
}

/// Random quasi-forest with `facets` facets on `[n]`, built by leaf gluing.
///
/// Each new facet is a proper subset of an existing facet (its branch) plus
/// at least one fresh vertex, so it is a leaf when added. Gluing stops early
/// once the ground set is used up.
pub fn random_quasi_forest(n: usize, facets: usize, seed: u64) -> Result<SimplicialComplex> {
    let mut rng = rng_from_seed(seed);
    let mut fresh: Vec<usize> = (0..n).collect();
    fresh.shuffle(&mut rng);
    let take = |fresh: &mut Vec<usize>, k: usize| -> Face {
        (0..k)
            .filter_map(|_| fresh.pop())
            .fold(0, |acc, v| acc | 1 << v)
    };
    let first_size = rng.gen_range(1..=n.clamp(1, 4));
    let mut built: Vec<Face> = vec![take(&mut fresh, first_size)];
    while built.len() < facets && !fresh.is_empty() {
        let branch = built[rng.gen_range(0..built.len())];
        let bits: Vec<u64> = (0..64).filter(|b| branch >> b & 1 == 1).collect();
        // keep a random proper subset of the branch
        let keep = rng.gen_range(0..bits.len());
        let mut chosen = bits.clone();
        chosen.shuffle(&mut rng);
        let shared = chosen[..keep].iter().fold(0, |acc, b| acc | 1 << b);
        let new_count = rng.gen_range(1..=fresh.len().min(2));
        built.push(shared | take(&mut fresh, new_count));
    }
    SimplicialComplex::new(n.max(1), built)
}

/// Random nonvoid complex on `[n]` from a handful of random candidate facets.
pub fn random_complex<R: Rng>(n: usize, rng: &mut R) -> Result<SimplicialComplex> {
    let count = rng.gen_range(1..=n + 2);
    let keep = rng.gen_range(0.2..0.9);
    let faces: Vec<Face> = (0..count)
        .map(|_| {
            (0..n)
                .filter(|_| rng.gen_bool(keep))
                .fold(0, |acc, v| acc | 1 << v)
        })
        .collect();
    SimplicialComplex::new(n, faces)
}

/// Every simplicial complex on `[n]`, including the void complex and
/// `{∅}`, in a fixed order. Only practical for `n <= 5` (7581 complexes).
pub fn all_complexes(n: usize) -> Result<Vec<SimplicialComplex>> {
    if n == 0 || n > 5 {
        return Err(Error::GroundSetSize(n));
    }
    // subsets of [n] by size, then value
    let mut subsets: Vec<Face> = (0..=full_face(n)).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let mut out = Vec::new();
    // `chosen` is a bitset over subset values: bit s set when s is a face
    fn walk(n: usize, subsets: &[Face], pos: usize, chosen: u64, out: &mut Vec<SimplicialComplex>) {
        if pos == subsets.len() {
            let faces: Vec<Face> = (0..64u64).filter(|&s| chosen >> s & 1 == 1).collect();
            let complex = if faces.is_empty() {
                SimplicialComplex::void(n).expect("valid n")
            } else {
                SimplicialComplex::new(n, faces).expect("faces lie in [n]")
            };
            out.push(complex);
            return;
        }
        let s = subsets[pos];
        walk(n, subsets, pos + 1, chosen, out);
        let mut bits = s;
        let mut closed = true;
        while bits != 0 {
            let b = bits & bits.wrapping_neg();
            bits &= bits - 1;
            if chosen >> (s & !b) & 1 == 0 {
                closed = false;
                break;
            }
        }
        if closed {
            walk(n, subsets, pos + 1, chosen | 1 << s, out);
        }
    }
    walk(n, &subsets, 0, 0, &mut out);
    Ok(out)
}
