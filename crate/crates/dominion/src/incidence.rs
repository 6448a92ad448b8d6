//! Incidence graphs of designs and the point/block set machinery used by
//! every bound: pencils, the block partition L(P) / L̂(P), the closure
//! I_P = P ∪ L̂(P), the point projection π(S), and the domination and
//! neatness predicates.
//!
//! Vertex numbering is fixed as points-then-blocks: vertex `i < v` is point
//! `i`, vertex `v + j` is block `j`. π(S) is then a plain mask.

use crate::bitset::BitSet;
use crate::design::Design;
use thiserror::Error;

/// A set of vertices of one incidence graph: a bitset with capacity `v + b`.
/// Indices below `v` are points, the rest are blocks.
pub type VertexSet = BitSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IncidenceError {
    #[error("vertex {0} is not a member of the set")]
    NotInSet(usize),
}

/// The bipartite incidence graph of a design, with closed neighborhoods
/// stored per vertex (domination queries are unions of closed neighborhoods,
/// so this is one bitset OR per member).
#[derive(Clone, Debug)]
pub struct IncidenceGraph {
    v: usize,
    b: usize,
    closed: Vec<BitSet>,
}

impl IncidenceGraph {
    pub fn new(d: &Design) -> IncidenceGraph {
        let (v, b) = (d.v(), d.b());
        let n = v + b;
        let mut closed: Vec<BitSet> = (0..n)
            .map(|u| {
                let mut s = BitSet::new(n);
                s.insert(u);
                s
            })
            .collect();
        for (j, block) in d.blocks().iter().enumerate() {
            for x in block.iter_ones() {
                closed[x].insert(v + j);
                closed[v + j].insert(x);
            }
        }
        let g = IncidenceGraph { v, b, closed };
        assert!(g.is_connected(), "incidence graph of a 2-design is connected");
        g
    }

    pub fn point_count(&self) -> usize {
        self.v
    }

    pub fn block_count(&self) -> usize {
        self.b
    }

    pub fn vertex_count(&self) -> usize {
        self.v + self.b
    }

    pub fn edge_count(&self) -> usize {
        let degree_sum: usize = self.closed.iter().map(|s| s.count_ones() - 1).sum();
        degree_sum / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        self.closed[u].count_ones() - 1
    }

    /// The vertex together with its neighbors.
    pub fn closed_neighborhood(&self, u: usize) -> &BitSet {
        &self.closed[u]
    }

    pub(crate) fn closed_neighborhoods(&self) -> &[BitSet] {
        &self.closed
    }

    pub fn is_point_vertex(&self, u: usize) -> bool {
        u < self.v
    }

    /// "p3" for point 3, "B5" for block 5.
    pub fn vertex_label(&self, u: usize) -> String {
        if u < self.v {
            format!("p{u}")
        } else {
            format!("B{}", u - self.v)
        }
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = BitSet::new(n);
        let mut frontier = vec![0usize];
        seen.insert(0);
        while let Some(u) = frontier.pop() {
            for w in self.closed[u].iter_ones() {
                if !seen.contains(w) {
                    seen.insert(w);
                    frontier.push(w);
                }
            }
        }
        seen.count_ones() == n
    }

    /// True iff the closed neighborhoods of `s` cover every vertex.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        let n = self.vertex_count();
        assert_eq!(s.capacity(), n, "vertex set capacity mismatch");
        let mut covered = BitSet::new(n);
        for u in s.iter_ones() {
            covered.union_with(&self.closed[u]);
        }
        covered.count_ones() == n
    }

    /// All vertices outside `s` adjacent to `u` and to no other member of `s`.
    pub fn external_private_neighbours(
        &self,
        s: &VertexSet,
        u: usize,
    ) -> Result<BitSet, IncidenceError> {
        if !s.contains(u) {
            return Err(IncidenceError::NotInSet(u));
        }
        let n = self.vertex_count();
        let mut out = BitSet::new(n);
        for w in self.closed[u].iter_ones() {
            if w == u || s.contains(w) {
                continue;
            }
            if self.closed[w].intersection_count(s) == 1 {
                out.insert(w);
            }
        }
        Ok(out)
    }

    /// True iff every member of the minimum dominating set candidate has an
    /// external private neighbour.
    pub fn all_members_have_epn(&self, s: &VertexSet) -> bool {
        s.iter_ones().all(|u| {
            !self
                .external_private_neighbours(s, u)
                .expect("u ranges over s")
                .is_empty()
        })
    }
}

impl Design {
    /// The r blocks containing point `x`, as a bitset over block indices.
    pub fn pencil(&self, x: usize) -> BitSet {
        assert!(x < self.v(), "point {x} out of range (v = {})", self.v());
        BitSet::from_indices(
            self.b(),
            self.blocks()
                .iter()
                .enumerate()
                .filter(|(_, bl)| bl.contains(x))
                .map(|(j, _)| j),
        )
    }

    /// L(P): the blocks meeting `p`.
    pub fn blocks_meeting(&self, p: &BitSet) -> BitSet {
        assert_eq!(p.capacity(), self.v(), "point set capacity mismatch");
        BitSet::from_indices(
            self.b(),
            self.blocks()
                .iter()
                .enumerate()
                .filter(|(_, bl)| bl.intersects(p))
                .map(|(j, _)| j),
        )
    }

    /// L̂(P): the blocks disjoint from `p`; the complement of
    /// [`Design::blocks_meeting`] within the block list.
    pub fn blocks_avoiding(&self, p: &BitSet) -> BitSet {
        self.blocks_meeting(p).complement()
    }

    /// I_P = P ∪ L̂(P) as a vertex set of the incidence graph.
    pub fn neat_closure(&self, p: &BitSet) -> VertexSet {
        let v = self.v();
        let mut s = BitSet::new(v + self.b());
        for x in p.iter_ones() {
            s.insert(x);
        }
        for j in self.blocks_avoiding(p).iter_ones() {
            s.insert(v + j);
        }
        s
    }

    /// π(S): the point part of a vertex set.
    pub fn project_points(&self, s: &VertexSet) -> BitSet {
        let v = self.v();
        assert_eq!(s.capacity(), v + self.b(), "vertex set capacity mismatch");
        BitSet::from_indices(v, s.iter_ones().take_while(|&u| u < v))
    }

    /// The block part of a vertex set, as block indices.
    pub fn project_blocks(&self, s: &VertexSet) -> BitSet {
        let v = self.v();
        assert_eq!(s.capacity(), v + self.b(), "vertex set capacity mismatch");
        BitSet::from_indices(
            self.b(),
            s.iter_ones().filter(|&u| u >= v).map(|u| u - v),
        )
    }

    /// A set is neat iff it equals the closure of its own point part.
    pub fn is_neat(&self, s: &VertexSet) -> bool {
        *s == self.neat_closure(&self.project_points(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{affine_plane, cyclic_design, projective_plane};

    fn fano() -> Design {
        cyclic_design(7, &[vec![0, 1, 3]]).unwrap()
    }

    fn paley() -> Design {
        cyclic_design(11, &[vec![1, 3, 4, 5, 9]]).unwrap()
    }

    #[test]
    fn fano_graph_shape() {
        let g = IncidenceGraph::new(&fano());
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edge_count(), 21);
        assert!((0..14).all(|u| g.degree(u) == 3));
    }

    #[test]
    fn ag23_graph_shape() {
        let g = IncidenceGraph::new(&affine_plane(3).unwrap());
        assert_eq!(g.vertex_count(), 21);
        assert!((0..9).all(|u| g.degree(u) == 4));
        assert!((9..21).all(|u| g.degree(u) == 3));
    }

    #[test]
    fn paley_graph_regular() {
        let g = IncidenceGraph::new(&paley());
        assert_eq!(g.vertex_count(), 22);
        assert!((0..22).all(|u| g.degree(u) == 5));
    }

    #[test]
    fn pencils_have_r_blocks() {
        let d = fano();
        for x in 0..7 {
            let pencil = d.pencil(x);
            assert_eq!(pencil.count_ones(), 3);
            assert!(pencil.iter_ones().all(|j| d.block(j).contains(x)));
        }
        let ag = affine_plane(2).unwrap();
        assert_eq!(ag.pencil(0).count_ones(), 3);
    }

    #[test]
    fn paley_pencil_blocks_share_one_more_point() {
        let d = paley();
        let pencil = d.pencil(0).indices();
        assert_eq!(pencil.len(), 5);
        for (i, &a) in pencil.iter().enumerate() {
            for &b in &pencil[i + 1..] {
                // λ = 2 and both contain point 0, so exactly one more shared.
                assert_eq!(d.block(a).intersection_count(d.block(b)), 2);
            }
        }
    }

    #[test]
    fn meeting_avoiding_partition() {
        let d = fano();
        let empty = BitSet::new(7);
        assert!(d.blocks_meeting(&empty).is_empty());
        assert_eq!(d.blocks_avoiding(&empty).count_ones(), 7);

        let pair = BitSet::from_indices(7, [0, 1]);
        assert_eq!(d.blocks_meeting(&pair).count_ones(), 5); // 3 + 3 - 1
        assert_eq!(d.blocks_avoiding(&pair).count_ones(), 2);

        let biplane = fano().complement().unwrap();
        let pair = BitSet::from_indices(7, [0, 1]);
        assert_eq!(biplane.blocks_meeting(&pair).count_ones(), 6); // 4 + 4 - 2

        let full_line = d.block(0).clone();
        let meeting = d.blocks_meeting(&full_line);
        let avoiding = d.blocks_avoiding(&full_line);
        assert_eq!(meeting.count_ones() + avoiding.count_ones(), 7);
        for j in 0..7 {
            assert_eq!(meeting.contains(j), d.block(j).intersects(&full_line));
        }
    }

    #[test]
    fn neat_closure_examples() {
        let d = fano();
        let empty = BitSet::new(7);
        assert_eq!(d.neat_closure(&empty).count_ones(), 7); // every block avoids ∅

        let pair = BitSet::from_indices(7, [0, 1]);
        assert_eq!(d.neat_closure(&pair).count_ones(), 4);

        // One full line of AG(2,3): only its two parallel mates avoid it.
        let ag = affine_plane(3).unwrap();
        let line = ag.block(0).clone();
        assert_eq!(ag.neat_closure(&line).count_ones(), 3 + 2);
    }

    #[test]
    fn project_points_splits_vertex_sets() {
        let d = fano();
        let s = BitSet::from_indices(14, [0, 2, 7, 13]);
        assert_eq!(d.project_points(&s).indices(), vec![0, 2]);
        assert_eq!(d.project_blocks(&s).indices(), vec![0, 6]);
        let all = BitSet::full(14);
        assert_eq!(d.project_points(&all).count_ones(), 7);
    }

    #[test]
    fn domination_basics() {
        let g = IncidenceGraph::new(&fano());
        assert!(g.is_dominating(&BitSet::full(14)));
        assert!(!g.is_dominating(&BitSet::new(14)));
    }

    #[test]
    fn closures_of_small_point_sets_dominate_fano() {
        let d = fano();
        let g = IncidenceGraph::new(&d);
        for x in 0..7 {
            for y in (x + 1)..7 {
                let p = BitSet::from_indices(7, [x, y]);
                assert!(g.is_dominating(&d.neat_closure(&p)));
            }
        }
    }

    #[test]
    fn neatness_predicate() {
        let d = fano();
        let p = BitSet::from_indices(7, [0, 1]);
        let ip = d.neat_closure(&p);
        assert!(d.is_neat(&ip));

        // Add one extra block from L(P): strict superset, no longer neat.
        let extra = d.blocks_meeting(&p).first_one().unwrap();
        let mut bigger = ip.clone();
        bigger.insert(7 + extra);
        assert!(!bigger.is_empty() && !d.is_neat(&bigger));

        // Remove a block of L̂(π(S)): not neat and not dominating.
        let g = IncidenceGraph::new(&d);
        let avoiding = d.blocks_avoiding(&p).first_one().unwrap();
        let mut smaller = ip.clone();
        smaller.remove(7 + avoiding);
        assert!(!d.is_neat(&smaller));
        assert!(!g.is_dominating(&smaller));
    }

    #[test]
    fn epn_examples() {
        let g = IncidenceGraph::new(&fano());
        let all = BitSet::full(14);
        for u in 0..14 {
            assert!(g.external_private_neighbours(&all, u).unwrap().is_empty());
        }
        let singleton = BitSet::from_indices(14, [0]);
        let epn = g.external_private_neighbours(&singleton, 0).unwrap();
        assert_eq!(epn.count_ones(), 3); // the whole pencil of point 0
        assert!(matches!(
            g.external_private_neighbours(&singleton, 1),
            Err(IncidenceError::NotInSet(1))
        ));
    }
}
