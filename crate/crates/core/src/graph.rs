//! Simple undirected graphs on `[n]`, clique complexes and chordality.

use std::collections::VecDeque;

use crate::complex::{full_face, Face, SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};

/// Simple graph stored as adjacency bit masks; vertex `v` is bit `v - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::GroundSetSize(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = full_face(n) & !(1 << v);
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edges. Duplicate edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        for v in [a, b] {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        if a == b {
            return Err(Error::Loop(a, b));
        }
        self.adj[a - 1] |= 1 << (b - 1);
        self.adj[b - 1] |= 1 << (a - 1);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbour mask of 0-based vertex `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b
            && a >= 1
            && b >= 1
            && a <= self.n
            && b <= self.n
            && self.adj[a - 1] >> (b - 1) & 1 == 1
    }

    /// Edges as increasing 1-based pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.adj[a] >> b & 1 == 1 {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn complement(&self) -> Graph {
        let all = full_face(self.n);
        let adj = (0..self.n)
            .map(|v| all & !self.adj[v] & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Whether the vertex set `mask` is a clique.
    pub fn is_clique(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if mask & !(1 << v) & !self.adj[v] != 0 {
                return false;
            }
        }
        true
    }

    /// Maximal cliques by Bron-Kerbosch with Tomita pivoting. Worst case is
    /// exponential in `n`.
    pub fn maximal_cliques(&self) -> Vec<Face> {
        let mut out = Vec::new();
        self.bron_kerbosch(0, full_face(self.n), 0, &mut out);
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<Face>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let mut best = 0;
        let mut pivot = 0;
        let mut cands = p | x;
        while cands != 0 {
            let u = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let c = (p & self.adj[u]).count_ones();
            if c >= best {
                best = c;
                pivot = u;
            }
        }
        let mut branch = p & !self.adj[pivot];
        while branch != 0 {
            let v = branch.trailing_zeros() as usize;
            branch &= branch - 1;
            let bit = 1u64 << v;
            self.bron_kerbosch(r | bit, p & self.adj[v], x & self.adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }

    /// Complex whose faces are the cliques; its facets are the maximal cliques.
    pub fn clique_complex(&self) -> SimplicialComplex {
        SimplicialComplex::new(self.n, self.maximal_cliques())
            .expect("cliques lie in the ground set")
    }

    /// The 1-skeleton of a complex as a graph on its ground set.
    pub fn one_skeleton(complex: &SimplicialComplex) -> Graph {
        let mut adj = vec![0u64; complex.n()];
        for &f in complex.facets() {
            let mut rest = f;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                adj[v] |= f & !(1 << v);
            }
        }
        Graph {
            n: complex.n(),
            adj,
        }
    }

    /// Maximum cardinality search. Returns the visit order as 0-based
    /// vertices; ties go to the smallest vertex.
    pub fn maximum_cardinality_search(&self) -> Vec<usize> {
        let mut weight = vec![0u32; self.n];
        let mut visited = 0u64;
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| visited >> v & 1 == 0)
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("an unvisited vertex remains");
            visited |= 1 << v;
            order.push(v);
            let mut nb = self.adj[v] & !visited;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                weight[u] += 1;
            }
        }
        order
    }

    /// Whether each vertex's neighbours later in `order` form a clique.
    /// `order` holds 0-based vertices.
    pub fn is_perfect_elimination_order(&self, order: &[usize]) -> bool {
        if order.len() != self.n {
            return false;
        }
        let mut later = full_face(self.n);
        for &v in order {
            later &= !(1 << v);
            if !self.is_clique(self.adj[v] & later) {
                return false;
            }
        }
        later == 0
    }

    pub fn chordality(&self) -> Chordality {
        let mut peo = self.maximum_cardinality_search();
        peo.reverse();
        if self.is_perfect_elimination_order(&peo) {
            Chordality::Chordal {
                elimination_order: peo.into_iter().map(|v| v + 1).collect(),
            }
        } else {
            let cycle = self
                .chordless_cycle()
                .expect("a graph without a perfect elimination order has a chordless cycle");
            Chordality::NotChordal {
                cycle: cycle.into_iter().map(|v| v + 1).collect(),
            }
        }
    }

    pub fn is_chordal(&self) -> bool {
        matches!(self.chordality(), Chordality::Chordal { .. })
    }

    /// Some chordless cycle of length at least 4, as 0-based vertices.
    ///
    /// Any such cycle passes through a vertex `v` whose two cycle neighbours
    /// `a, b` are non-adjacent, and the rest of the cycle avoids `N[v]`. So it
    /// suffices to look, for every such triple, for a shortest `a`-`b` path
    /// outside `N[v] \ {a, b}`; shortest paths are induced.
    fn chordless_cycle(&self) -> Option<Vec<usize>> {
        for v in 0..self.n {
            let nv = self.adj[v];
            let nbrs: Vec<usize> = (0..self.n).filter(|&u| nv >> u & 1 == 1).collect();
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    if self.adj[a] >> b & 1 == 1 {
                        continue;
                    }
                    let blocked = (nv | 1 << v) & !(1 << a | 1 << b);
                    if let Some(path) = self.shortest_path(a, b, blocked) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    fn shortest_path(&self, from: usize, to: usize, blocked: u64) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.n];
        let mut seen = blocked | 1 << from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            let mut nb = self.adj[u] & !seen;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << w;
                prev[w] = u;
                queue.push_back(w);
            }
        }
        None
    }
}

/// Chordality verdict with a certificate; vertices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal { elimination_order: Vec<usize> },
    NotChordal { cycle: Vec<usize> },
}
