//! Slow reference implementations used as ground truth by the integration
//! tests. Everything here works on an adjacency matrix with plain loops and
//! shares no algorithm with the library.
#![allow(dead_code)]

use macaulify::{Clutter, Edge, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn empty(n: usize) -> Self {
        Matrix {
            n,
            adj: vec![vec![false; n + 1]; n + 1],
        }
    }

    pub fn of(g: &Graph) -> Self {
        let mut m = Matrix::empty(g.n());
        for u in 1..=g.n() {
            for v in 1..=g.n() {
                if u != v && g.has_edge(u, v) {
                    m.adj[u][v] = true;
                }
            }
        }
        m
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edge_list()).unwrap()
    }

    pub fn edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn add(&mut self, u: usize, v: usize) {
        assert_ne!(u, v);
        self.adj[u][v] = true;
        self.adj[v][u] = true;
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edge_list().len()
    }

    pub fn vertices(&self) -> Vec<usize> {
        (1..=self.n).collect()
    }

    /// Removes `v` and renames `w > v` to `w - 1`.
    pub fn delete_vertex(&self, v: usize) -> Matrix {
        let old: Vec<usize> = (1..=self.n).filter(|&w| w != v).collect();
        self.induced(&old)
    }

    /// Subgraph on `keep` (ascending), relabeled `1..keep.len()` in order.
    pub fn induced(&self, keep: &[usize]) -> Matrix {
        let mut m = Matrix::empty(keep.len());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate() {
                if self.adj[u][v] {
                    m.adj[a + 1][b + 1] = true;
                }
            }
        }
        m
    }
}

/// Components of the subgraph induced on `keep`, each sorted, ordered by
/// smallest vertex. Depth-first search with an explicit stack.
pub fn components(m: &Matrix, keep: &[usize]) -> Vec<Vec<usize>> {
    let mut inside = vec![false; m.n + 1];
    for &v in keep {
        inside[v] = true;
    }
    let mut seen = vec![false; m.n + 1];
    let mut out = Vec::new();
    for &start in keep {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for w in 1..=m.n {
                if inside[w] && !seen[w] && m.adj[u][w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}

pub fn is_connected(m: &Matrix) -> bool {
    components(m, &m.vertices()).len() == 1
}

/// Removing `i` from the induced subgraph on `keep` increases the number of
/// components.
pub fn is_cut_vertex(m: &Matrix, keep: &[usize], i: usize) -> bool {
    assert!(keep.contains(&i));
    let rest: Vec<usize> = keep.iter().copied().filter(|&w| w != i).collect();
    components(m, &rest).len() > components(m, keep).len()
}

pub fn complement(m: &Matrix, t: &[usize]) -> Vec<usize> {
    (1..=m.n).filter(|v| !t.contains(v)).collect()
}

pub fn has_cut_point_property(m: &Matrix, t: &[usize]) -> bool {
    let comp = complement(m, t);
    t.iter().all(|&i| {
        let mut keep = comp.clone();
        keep.push(i);
        keep.sort_unstable();
        is_cut_vertex(m, &keep, i)
    })
}

pub fn subset(mask: u64, n: usize) -> Vec<usize> {
    (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect()
}

/// Every `T` with nonempty complement and the cut point property.
pub fn cut_point_family(m: &Matrix) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0..(1u64 << m.n) - 1 {
        let t = subset(mask, m.n);
        if has_cut_point_property(m, &t) {
            out.push(t);
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

pub fn c_of(m: &Matrix, t: &[usize]) -> usize {
    components(m, &complement(m, t)).len()
}

pub fn height(m: &Matrix, t: &[usize]) -> usize {
    m.n + t.len() - c_of(m, t)
}

/// For a connected graph: `c(T) = |T| + 1` on the whole family.
pub fn unmixed(m: &Matrix) -> bool {
    assert!(is_connected(m));
    cut_point_family(m).iter().all(|t| c_of(m, t) == t.len() + 1)
}

/// Edge pairs sharing their smaller or their larger endpoint force the edge
/// between the other two endpoints.
pub fn closed(m: &Matrix) -> bool {
    let n = m.n;
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                // {i,j}, {i,k} share the minimum i
                if m.edge(i, j) && m.edge(i, k) && !m.edge(j, k) {
                    return false;
                }
                // {i,k}, {j,k} share the maximum k
                if m.edge(i, k) && m.edge(j, k) && !m.edge(i, j) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn pi_ordering(m: &Matrix) -> bool {
    for i in 1..=m.n {
        for k in i + 2..=m.n {
            if m.edge(i, k) && (i + 1..k).any(|j| !m.edge(i, j) || !m.edge(j, k)) {
                return false;
            }
        }
    }
    true
}

pub fn condition_iv(m: &Matrix) -> bool {
    let n = m.n;
    for i in 1..=n {
        for j in i + 1..n {
            for k in j + 1..n {
                if m.edge(i, j + 1) && m.edge(j, k + 1) && !m.edge(i, k + 1) {
                    return false;
                }
            }
        }
    }
    true
}

/// Intersection of every closed supergraph of `g`. Exponential in the number
/// of missing edges.
pub fn least_closed_supergraph(g: &Graph) -> Graph {
    let base = Matrix::of(g);
    let missing: Vec<(usize, usize)> = (1..=g.n())
        .flat_map(|u| (u + 1..=g.n()).map(move |v| (u, v)))
        .filter(|&(u, v)| !base.edge(u, v))
        .collect();
    let mut meet: Option<Vec<bool>> = None;
    for mask in 0u64..1 << missing.len() {
        let mut m = base.clone();
        for (b, &(u, v)) in missing.iter().enumerate() {
            if mask >> b & 1 == 1 {
                m.add(u, v);
            }
        }
        if closed(&m) {
            let bits: Vec<bool> = missing.iter().map(|&(u, v)| m.edge(u, v)).collect();
            meet = Some(match meet {
                None => bits,
                Some(prev) => prev.iter().zip(&bits).map(|(a, b)| *a && *b).collect(),
            });
        }
    }
    let mut out = base;
    for (b, &(u, v)) in missing.iter().enumerate() {
        if meet.as_ref().expect("complete graph is closed")[b] {
            out.add(u, v);
        }
    }
    out.to_graph()
}

pub fn is_clique(m: &Matrix, s: &[usize]) -> bool {
    s.iter()
        .enumerate()
        .all(|(a, &u)| s[a + 1..].iter().all(|&v| m.edge(u, v)))
}

pub fn maximal_cliques(m: &Matrix) -> Vec<Vec<usize>> {
    let cliques: Vec<Vec<usize>> = (1u64..1 << m.n)
        .map(|mask| subset(mask, m.n))
        .filter(|s| is_clique(m, s))
        .collect();
    let mut out: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|s| {
            !cliques
                .iter()
                .any(|b| b.len() > s.len() && s.iter().all(|v| b.contains(v)))
        })
        .cloned()
        .collect();
    out.sort();
    out
}

pub fn free_vertices(m: &Matrix) -> Vec<usize> {
    let facets = maximal_cliques(m);
    (1..=m.n)
        .filter(|v| facets.iter().filter(|f| f.contains(v)).count() == 1)
        .collect()
}

/// Some relabeling is a proper interval ordering. Tries all `n!` orders.
pub fn has_pi_labeling(m: &Matrix) -> bool {
    let mut order: Vec<usize> = m.vertices();
    loop {
        if pi_ordering(&m.induced_in_order(&order)) {
            return true;
        }
        if !next_permutation(&mut order) {
            return false;
        }
    }
}

impl Matrix {
    /// Relabels so that `order[p]` becomes `p + 1`.
    pub fn induced_in_order(&self, order: &[usize]) -> Matrix {
        let mut m = Matrix::empty(order.len());
        for (a, &u) in order.iter().enumerate() {
            for (b, &v) in order.iter().enumerate() {
                m.adj[a + 1][b + 1] = self.adj[u][v];
            }
        }
        m
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All graphs on `n` labeled vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut m = Matrix::empty(n);
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                m.add(u, v);
            }
        }
    }
    m.to_graph()
}

/// Random spanning tree under a random labeling, plus extra edges with a
/// random density.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut m = Matrix::empty(n);
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        m.add(order[k], parent);
    }
    let p: f64 = rng.gen_range(0.0..0.7);
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                m.add(u, v);
            }
        }
    }
    m.to_graph()
}

fn closure_violations(m: &Matrix) -> Vec<(usize, usize)> {
    let n = m.n;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                if m.edge(i, j) && m.edge(i, k) && !m.edge(j, k) {
                    out.push((j, k));
                }
                if m.edge(i, k) && m.edge(j, k) && !m.edge(i, j) {
                    out.push((i, j));
                }
            }
        }
    }
    out
}

fn cm_violations(m: &Matrix) -> Vec<(usize, usize)> {
    let n = m.n;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..n {
            for k in j + 1..n {
                if m.edge(i, j + 1) && m.edge(j, k + 1) && !m.edge(i, k + 1) {
                    out.push((i, k + 1));
                }
            }
        }
    }
    out
}

/// Closure fixpoint reached by adding one randomly chosen forced edge at a time.
pub fn close_random<R: Rng>(g: &Graph, rng: &mut R) -> Graph {
    let mut m = Matrix::of(g);
    loop {
        let v = closure_violations(&m);
        if v.is_empty() {
            return m.to_graph();
        }
        let (a, b) = v[rng.gen_range(0..v.len())];
        m.add(a, b);
    }
}

/// Augmentation fixpoint per connected component (relabeled in order), one
/// random forced edge at a time.
pub fn cm_augment_random<R: Rng>(g: &Graph, rng: &mut R) -> Graph {
    let whole = Matrix::of(g);
    let mut out = whole.clone();
    for comp in components(&whole, &whole.vertices()) {
        let mut m = whole.induced(&comp);
        loop {
            let v = cm_violations(&m);
            if v.is_empty() {
                break;
            }
            let (a, b) = v[rng.gen_range(0..v.len())];
            m.add(a, b);
        }
        for (a, b) in m.edge_list() {
            out.add(comp[a - 1], comp[b - 1]);
        }
    }
    out.to_graph()
}

pub fn edges_of(g: &Graph) -> Vec<Edge> {
    g.edges().collect()
}

/// Random clutter on `2..=max_n` vertices with `1..=max_edges` edges of size
/// 2 to 4; edges inside another edge are dropped to keep an antichain.
pub fn random_clutter<R: Rng>(rng: &mut R, max_n: usize, max_edges: usize) -> Clutter {
    let n = rng.gen_range(2..=max_n);
    let k = rng.gen_range(1..=max_edges);
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for _ in 0..k {
        let size = rng.gen_range(2..=n.min(4));
        let mut vs: Vec<usize> = (1..=n).collect();
        vs.shuffle(rng);
        vs.truncate(size);
        vs.sort_unstable();
        sets.push(vs);
    }
    sets.sort();
    sets.dedup();
    let keep: Vec<Vec<usize>> = sets
        .iter()
        .filter(|a| !sets.iter().any(|b| b != *a && a.iter().all(|v| b.contains(v))))
        .cloned()
        .collect();
    Clutter::new(n, keep).unwrap()
}

/// Pairs inside some clutter edge.
pub fn associated_matrix(c: &Clutter) -> Matrix {
    let mut m = Matrix::empty(c.n());
    for e in c.edges() {
        let vs = e.to_vec();
        for &a in &vs {
            for &b in &vs {
                if a != b {
                    m.add(a, b);
                }
            }
        }
    }
    m
}
