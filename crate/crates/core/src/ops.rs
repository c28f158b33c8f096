//! Graph constructions. Every operation returns a new graph and leaves its
//! inputs untouched.

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Graph, Vertex};

/// `g` with the edge `{u, v}` removed. Degrees of `u` and `v` drop by one.
pub fn delete_edge(g: &Graph, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
    if !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge(u, v));
    }
    let key = (u.min(v), u.max(v));
    Graph::new(g.vertex_count(), g.edges().iter().copied().filter(|&e| e != key))
}

/// `g` with the edge `{u, v}` added.
pub fn add_edge(g: &Graph, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
    Graph::new(
        g.vertex_count(),
        g.edges().iter().copied().chain(std::iter::once((u, v))),
    )
}

/// Vertices of `h` are shifted by `|V(g)|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let offset = g.vertex_count();
    Graph::new(
        offset + h.vertex_count(),
        g.edges()
            .iter()
            .copied()
            .chain(h.edges().iter().map(|&(u, v)| (u + offset, v + offset))),
    )
    .expect("disjoint union of simple graphs is simple")
}

/// `k` disjoint copies of `g`.
pub fn copies(g: &Graph, k: usize) -> Graph {
    (0..k).fold(Graph::empty(0), |acc, _| disjoint_union(&acc, g))
}

/// Cartesian product `g □ h`. Vertex `(a, x)` gets id `a * |V(h)| + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let width = h.vertex_count();
    let id = |a: Vertex, x: Vertex| a * width + x;
    let mut edges = Vec::with_capacity(g.vertex_count() * h.edge_count() + h.vertex_count() * g.edge_count());
    for a in 0..g.vertex_count() {
        edges.extend(h.edges().iter().map(|&(x, y)| (id(a, x), id(a, y))));
    }
    for x in 0..width {
        edges.extend(g.edges().iter().map(|&(a, b)| (id(a, x), id(b, x))));
    }
    Graph::new(g.vertex_count() * width, edges)
}

/// Join `g ∨ h`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let offset = g.vertex_count();
    let union = disjoint_union(g, h);
    let cross = (0..offset).flat_map(|u| (0..h.vertex_count()).map(move |w| (u, w + offset)));
    Graph::new(union.vertex_count(), union.edges().iter().copied().chain(cross))
}

/// Renames vertex `v` to `permutation[v]`.
pub fn relabel(g: &Graph, permutation: &[Vertex]) -> Result<Graph, GraphError> {
    let n = g.vertex_count();
    let mut hit = vec![false; n];
    if permutation.len() != n {
        return Err(GraphError::InvalidPermutation(n));
    }
    for &p in permutation {
        if p >= n || std::mem::replace(&mut hit[p], true) {
            return Err(GraphError::InvalidPermutation(n));
        }
    }
    Graph::new(n, g.edges().iter().map(|&(u, v)| (permutation[u], permutation[v])))
}

/// Ordered monomers joined by bridges `y_i - x_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkSpec {
    monomers: Vec<Graph>,
    anchors: Vec<(Vertex, Vertex)>,
}

impl LinkSpec {
    /// `anchors[i] = (x_i, y_i)`, both valid vertices of `monomers[i]`.
    pub fn new(monomers: Vec<Graph>, anchors: Vec<(Vertex, Vertex)>) -> Result<Self, GraphError> {
        if monomers.len() < 2 {
            return Err(GraphError::TooFewMonomers(monomers.len()));
        }
        if anchors.len() != monomers.len() {
            return Err(GraphError::AnchorCountMismatch {
                expected: monomers.len(),
                got: anchors.len(),
            });
        }
        for (i, (g, &(x, y))) in monomers.iter().zip(&anchors).enumerate() {
            if g.vertex_count() < 2 {
                return Err(GraphError::DegenerateMonomer(i));
            }
            for anchor in [x, y] {
                if anchor >= g.vertex_count() {
                    return Err(GraphError::InvalidAnchor { monomer: i, anchor });
                }
            }
        }
        Ok(LinkSpec { monomers, anchors })
    }

    pub fn monomers(&self) -> &[Graph] {
        &self.monomers
    }

    pub fn anchors(&self) -> &[(Vertex, Vertex)] {
        &self.anchors
    }

    pub fn len(&self) -> usize {
        self.monomers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomers.is_empty()
    }

    /// The link of the first `k` monomers, `k >= 2`.
    pub fn prefix(&self, k: usize) -> Result<LinkSpec, GraphError> {
        LinkSpec::new(self.monomers[..k].to_vec(), self.anchors[..k].to_vec())
    }
}

/// Builds the link graph described by `spec`. Monomer `i` keeps its vertex
/// order and is offset by the sizes of the monomers before it.
pub fn link(spec: &LinkSpec) -> Graph {
    let mut offsets = Vec::with_capacity(spec.len());
    let mut total = 0;
    for g in &spec.monomers {
        offsets.push(total);
        total += g.vertex_count();
    }
    let mut edges: Vec<(Vertex, Vertex)> = spec
        .monomers
        .iter()
        .zip(&offsets)
        .flat_map(|(g, &off)| g.edges().iter().map(move |&(u, v)| (u + off, v + off)))
        .collect();
    for i in 0..spec.len() - 1 {
        let y = spec.anchors[i].1 + offsets[i];
        let x = spec.anchors[i + 1].0 + offsets[i + 1];
        edges.push((y, x));
    }
    Graph::new(total, edges).expect("bridges join distinct monomers")
}

/// Merge vertex `vertex_a` of monomer `monomer_a` with vertex `vertex_b` of
/// monomer `monomer_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identification {
    pub monomer_a: usize,
    pub vertex_a: Vertex,
    pub monomer_b: usize,
    pub vertex_b: Vertex,
}

impl Identification {
    pub fn new(monomer_a: usize, vertex_a: Vertex, monomer_b: usize, vertex_b: Vertex) -> Self {
        Identification {
            monomer_a,
            vertex_a,
            monomer_b,
            vertex_b,
        }
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already in the same set.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// Polymer graph obtained by point-attaching: the disjoint union of the
/// monomers with the named vertex pairs merged.
///
/// The identifications must form a spanning tree over the monomer indices.
/// Merged vertices are numbered in order of first appearance, walking the
/// monomers in order.
pub fn point_attach(monomers: &[Graph], identifications: &[Identification]) -> Result<Graph, GraphError> {
    let k = monomers.len();
    if k == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let mut offsets = Vec::with_capacity(k);
    let mut total = 0;
    for g in monomers {
        offsets.push(total);
        total += g.vertex_count();
    }
    let mut tree = DisjointSets::new(k);
    let mut vertices = DisjointSets::new(total);
    for (i, id) in identifications.iter().enumerate() {
        let valid = |m: usize, v: Vertex| m < k && v < monomers[m].vertex_count();
        if !valid(id.monomer_a, id.vertex_a) || !valid(id.monomer_b, id.vertex_b) {
            return Err(GraphError::InvalidIdentification(i));
        }
        if !tree.union(id.monomer_a, id.monomer_b) {
            return Err(GraphError::IdentificationCycle(i));
        }
        vertices.union(offsets[id.monomer_a] + id.vertex_a, offsets[id.monomer_b] + id.vertex_b);
    }
    if identifications.len() != k - 1 {
        return Err(GraphError::IdentificationsDisconnected(k));
    }

    let mut new_id = vec![usize::MAX; total];
    let mut next = 0;
    let mut map = vec![0; total];
    for (v, slot) in map.iter_mut().enumerate() {
        let root = vertices.find(v);
        if new_id[root] == usize::MAX {
            new_id[root] = next;
            next += 1;
        }
        *slot = new_id[root];
    }
    let edges = monomers
        .iter()
        .zip(&offsets)
        .flat_map(|(g, &off)| g.edges().iter().map(move |&(u, v)| (u + off, v + off)))
        .map(|(u, v)| (map[u], map[v]));
    Graph::new(next, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DegreePairProfile;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn profile(pairs: &[((usize, usize), usize)]) -> DegreePairProfile {
        DegreePairProfile::from_counts(pairs.iter().copied())
    }

    #[test]
    fn delete_edge_examples() {
        let p3 = path(3);
        let g = delete_edge(&p3, 0, 1).unwrap();
        assert_eq!(g.degrees(), &[0, 1, 1]);
        assert_eq!(p3.edge_count(), 2);

        let c4 = cycle(4);
        let p4 = delete_edge(&c4, 3, 0).unwrap();
        assert_eq!(p4, path(4));

        // K4 - e: the two endpoints of e drop to degree 2 and are no longer adjacent.
        let k4e = delete_edge(&complete(4), 0, 1).unwrap();
        assert_eq!(k4e.degree_pair_profile().unwrap(), profile(&[((2, 3), 4), ((3, 3), 1)]));

        assert_eq!(delete_edge(&p3, 0, 2), Err(GraphError::NotAnEdge(0, 2)));
    }

    #[test]
    fn delete_then_add_restores() {
        let g = complete(5);
        let back = add_edge(&delete_edge(&g, 1, 3).unwrap(), 3, 1).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn cartesian_product_examples() {
        let k2 = path(2);
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.is_regular() && c4.degree(0) == 2 && c4.is_connected());

        let ladder3 = cartesian_product(&path(3), &k2).unwrap();
        assert_eq!(ladder3.edge_count(), 7);
        assert_eq!(
            ladder3.degree_pair_profile().unwrap(),
            profile(&[((2, 2), 2), ((2, 3), 4), ((3, 3), 1)])
        );
        assert_eq!(cartesian_product(&Graph::empty(0), &k2), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::empty(1);
        let wheel = join(&cycle(5), &k1).unwrap();
        assert_eq!(wheel.degree(5), 5);
        assert!((0..5).all(|v| wheel.degree(v) == 3));
        assert_eq!(join(&k1, &k1).unwrap(), path(2));

        let f3 = join(&copies(&path(2), 3), &k1).unwrap();
        assert_eq!(f3.edge_count(), 9);
        assert_eq!(f3.degree(6), 6);
    }

    #[test]
    fn link_examples() {
        let k3 = complete(3);
        let spec = LinkSpec::new(vec![k3.clone(), k3.clone()], vec![(0, 1), (2, 0)]).unwrap();
        let g = link(&spec);
        assert_eq!(
            g.degree_pair_profile().unwrap(),
            profile(&[((2, 2), 2), ((2, 3), 4), ((3, 3), 1)])
        );

        let p2 = path(2);
        let spec = LinkSpec::new(vec![p2.clone(), p2], vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(link(&spec), path(4));

        let p3 = path(3);
        let spec = LinkSpec::new(vec![p3.clone(), p3.clone(), p3], vec![(0, 2); 3]).unwrap();
        assert_eq!(link(&spec), path(9));
    }

    #[test]
    fn link_spec_validation() {
        assert_eq!(
            LinkSpec::new(vec![path(3)], vec![(0, 1)]),
            Err(GraphError::TooFewMonomers(1))
        );
        assert_eq!(
            LinkSpec::new(vec![path(3), Graph::empty(1)], vec![(0, 1), (0, 0)]),
            Err(GraphError::DegenerateMonomer(1))
        );
        assert_eq!(
            LinkSpec::new(vec![path(3), path(3)], vec![(0, 1), (0, 3)]),
            Err(GraphError::InvalidAnchor { monomer: 1, anchor: 3 })
        );
    }

    #[test]
    fn point_attach_examples() {
        let k3 = complete(3);
        let bowtie = point_attach(&[k3.clone(), k3.clone()], &[Identification::new(0, 0, 1, 0)]).unwrap();
        assert_eq!(bowtie.vertex_count(), 5);
        assert_eq!(bowtie.degree(0), 4);
        assert_eq!(bowtie.edge_count(), 6);

        let p2 = path(2);
        let p3 = point_attach(&[p2.clone(), p2], &[Identification::new(0, 1, 1, 0)]).unwrap();
        assert_eq!(p3, path(3));
    }

    #[test]
    fn point_attach_rejects_cycles_and_bad_ids() {
        let k3 = complete(3);
        let ms = [k3.clone(), k3.clone(), k3];
        let cyc = [
            Identification::new(0, 0, 1, 0),
            Identification::new(1, 1, 2, 0),
            Identification::new(2, 1, 0, 1),
        ];
        assert_eq!(point_attach(&ms, &cyc), Err(GraphError::IdentificationCycle(2)));
        assert_eq!(
            point_attach(&ms, &[Identification::new(0, 5, 1, 0)]),
            Err(GraphError::InvalidIdentification(0))
        );
        assert_eq!(
            point_attach(&ms, &[Identification::new(0, 0, 1, 0)]),
            Err(GraphError::IdentificationsDisconnected(3))
        );
    }

    #[test]
    fn relabel_checks_bijection() {
        let p3 = path(3);
        assert_eq!(relabel(&p3, &[0, 1, 2]).unwrap(), p3);
        let rev = relabel(&p3, &[2, 1, 0]).unwrap();
        assert_eq!(rev.degree_pair_profile(), p3.degree_pair_profile());
        assert_eq!(relabel(&p3, &[0, 0, 1]), Err(GraphError::InvalidPermutation(3)));
        assert_eq!(relabel(&p3, &[0, 1]), Err(GraphError::InvalidPermutation(3)));
    }
}
