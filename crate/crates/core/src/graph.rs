//! Simple undirected graphs on at most 62 vertices and the structural
//! predicates the game rules depend on.
//!
//! Every query works on a [`SubgraphView`], i.e. the subgraph induced by an
//! active vertex set, so positions of a game never need to copy the graph.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::Vertex;

pub const MAX_VERTICES: usize = 62;

/// An immutable simple graph with adjacency stored as per-vertex bitsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if !(1..=MAX_VERTICES).contains(&n) {
            return Err(Error::VertexCount(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from adjacency sets, checking symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if !(1..=MAX_VERTICES).contains(&n) {
            return Err(Error::VertexCount(n));
        }
        for (v, nb) in adj.iter().enumerate() {
            if let Some(bad) = (*nb - VertexSet::full(n)).first() {
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            if nb.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if nb.iter().any(|u| !adj[u].contains(v)) {
                return Err(Error::Shape("adjacency is not symmetric"));
            }
        }
        Ok(Graph { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// View of the whole graph.
    pub fn view(&self) -> SubgraphView<'_> {
        SubgraphView { graph: self, active: self.vertices() }
    }

    /// View of the subgraph induced by `active`.
    pub fn induced(&self, active: VertexSet) -> Result<SubgraphView<'_>> {
        SubgraphView::new(self, active)
    }

    /// Relabels by `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n || perm.iter().any(|&p| p >= n) || perm.iter().copied().collect::<VertexSet>() != self.vertices() {
            return Err(Error::Shape("relabeling is not a permutation"));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, &pu) in perm.iter().enumerate() {
            adj[pu] = self.adj[u].iter().map(|v| perm[v]).collect();
        }
        Ok(Graph { adj })
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    #[inline]
    pub(crate) fn reach(&self, start: Vertex, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= self.adj[u];
            }
            frontier = (next & within) - seen;
            seen |= frontier;
        }
        seen
    }

    /// Connectivity of the subgraph induced by `set`; the empty set counts as connected.
    #[inline]
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(s) => self.reach(s, set) == set,
        }
    }

    /// Ω of the subgraph induced by `set`, which must be connected.
    ///
    /// A single vertex is its own non-cut vertex so the last vertex can be taken.
    #[inline]
    pub fn non_cut_set(&self, set: VertexSet) -> VertexSet {
        if set.len() <= 2 {
            return set;
        }
        let mut out = VertexSet::EMPTY;
        for v in set {
            let rest = set.without(v);
            // `rest` stays connected iff a BFS from any remaining vertex covers it.
            if self.reach(rest.first().unwrap(), rest) == rest {
                out.insert(v);
            }
        }
        out
    }
}

/// The subgraph of `graph` induced by a nonempty `active` set.
#[derive(Clone, Copy, Debug)]
pub struct SubgraphView<'g> {
    graph: &'g Graph,
    active: VertexSet,
}

impl<'g> SubgraphView<'g> {
    pub fn new(graph: &'g Graph, active: VertexSet) -> Result<Self> {
        if active.is_empty() {
            return Err(Error::EmptyView);
        }
        if let Some(v) = (active - graph.vertices()).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n: graph.n() });
        }
        Ok(SubgraphView { graph, active })
    }

    #[inline]
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    #[inline]
    pub fn active(&self) -> VertexSet {
        self.active
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.active.len()
    }

    /// Always false; views are nonempty by construction.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.graph.adj[v] & self.active
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn edge_count(&self) -> usize {
        self.active.iter().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Narrows the view to `subset`, which must lie inside the active set.
    pub fn restrict(&self, subset: VertexSet) -> Result<SubgraphView<'g>> {
        if let Some(v) = (subset - self.active).first() {
            return Err(Error::NotActive(v));
        }
        SubgraphView::new(self.graph, subset)
    }

    /// The view minus one vertex, or `None` when that would empty it.
    pub fn without(&self, v: Vertex) -> Result<Option<SubgraphView<'g>>> {
        self.require_active(v)?;
        let rest = self.active.without(v);
        Ok((!rest.is_empty()).then_some(SubgraphView { graph: self.graph, active: rest }))
    }

    /// Copies the induced subgraph out, relabeling active vertices to
    /// `0..len` in ascending id order. Returns the graph and the old ids.
    pub fn to_graph(&self) -> (Graph, Vec<Vertex>) {
        let ids: Vec<Vertex> = self.active.iter().collect();
        let mut index = [usize::MAX; 64];
        for (i, &v) in ids.iter().enumerate() {
            index[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| self.neighbors(v).iter().map(|u| index[u]).collect())
            .collect();
        (Graph { adj }, ids)
    }

    fn require_active(&self, v: Vertex) -> Result<()> {
        if self.active.contains(v) {
            Ok(())
        } else {
            Err(Error::NotActive(v))
        }
    }

    fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected_set(self.active)
    }

    /// Connected and with exactly `len - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.len()
    }

    /// Ω: the vertices whose removal leaves the view connected.
    pub fn non_cut_vertices(&self) -> Result<VertexSet> {
        self.require_connected()?;
        Ok(self.graph.non_cut_set(self.active))
    }

    /// Ω via a low-link depth-first search, the classic articulation-point route.
    pub fn non_cut_vertices_lowlink(&self) -> Result<VertexSet> {
        self.require_connected()?;
        Ok(self.active - self.articulation_points())
    }

    fn articulation_points(&self) -> VertexSet {
        struct Dfs<'a, 'g> {
            view: &'a SubgraphView<'g>,
            order: [u8; 64],
            low: [u8; 64],
            clock: u8,
            cut: VertexSet,
        }
        impl Dfs<'_, '_> {
            fn visit(&mut self, v: Vertex, parent: Option<Vertex>) {
                self.clock += 1;
                self.order[v] = self.clock;
                self.low[v] = self.clock;
                let mut children = 0;
                for u in self.view.neighbors(v) {
                    if Some(u) == parent {
                        continue;
                    }
                    if self.order[u] != 0 {
                        self.low[v] = self.low[v].min(self.order[u]);
                        continue;
                    }
                    children += 1;
                    self.visit(u, Some(v));
                    self.low[v] = self.low[v].min(self.low[u]);
                    if parent.is_some() && self.low[u] >= self.order[v] {
                        self.cut.insert(v);
                    }
                }
                if parent.is_none() && children > 1 {
                    self.cut.insert(v);
                }
            }
        }
        let mut dfs = Dfs { view: self, order: [0; 64], low: [0; 64], clock: 0, cut: VertexSet::EMPTY };
        if let Some(root) = self.active.first() {
            dfs.visit(root, None);
        }
        dfs.cut
    }

    /// A leaf whose unique neighbor is a non-cut vertex of the view minus the leaf.
    pub fn is_spike(&self, v: Vertex) -> Result<bool> {
        self.require_active(v)?;
        if self.len() < 3 {
            return Err(Error::TooSmall { needed: 3, got: self.len() });
        }
        self.require_connected()?;
        let nb = self.neighbors(v);
        if nb.len() != 1 {
            return Ok(false);
        }
        let y = nb.first().unwrap();
        let rest = self.active.without(v);
        Ok(self.graph.non_cut_set(rest).contains(y))
    }

    /// Whether `v` lies on a cycle: two of its neighbors are still joined once `v` is gone.
    pub fn lies_on_cycle(&self, v: Vertex) -> Result<bool> {
        self.require_active(v)?;
        let rest = self.active.without(v);
        let mut pending = self.neighbors(v);
        while let Some(a) = pending.first() {
            let component = self.graph.reach(a, rest);
            if (component & pending).len() >= 2 {
                return Ok(true);
            }
            pending = pending - component;
        }
        Ok(false)
    }

    /// Every induced cycle of length at least 3, once each.
    ///
    /// Each cycle starts at its smallest vertex and continues towards the
    /// smaller of that vertex's two cycle neighbors.
    pub fn chordless_cycles(&self) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(self.len());
        for s in self.active {
            path.clear();
            path.push(s);
            let above = self.active - VertexSet::full(s + 1);
            self.extend_induced_path(&mut path, above, VertexSet::EMPTY, &mut out);
        }
        out
    }

    // `path` is an induced path from its first vertex; `blocked` is the closed
    // neighborhood of its interior vertices, excluding the two endpoints.
    fn extend_induced_path(
        &self,
        path: &mut Vec<Vertex>,
        allowed: VertexSet,
        blocked: VertexSet,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let start = path[0];
        let last = *path.last().unwrap();
        let candidates = (self.neighbors(last) & allowed) - blocked;
        for v in candidates {
            if path.len() >= 2 && self.graph.has_edge(v, start) {
                if path[1] < v {
                    let mut cycle = path.clone();
                    cycle.push(v);
                    out.push(cycle);
                }
                continue;
            }
            // `last` becomes interior once `v` is appended, except when it is the start.
            let grown = if path.len() >= 2 {
                blocked | self.neighbors(last).with(last)
            } else {
                blocked
            };
            path.push(v);
            self.extend_induced_path(path, allowed, grown.without(start), out);
            path.pop();
        }
    }

    /// Every simple cycle (chorded or not) of length at least 3, once each,
    /// in the same normal form as [`Self::chordless_cycles`]. Exponential.
    pub fn simple_cycles(&self) -> Vec<Vec<Vertex>> {
        fn extend(view: &SubgraphView<'_>, path: &mut Vec<Vertex>, used: VertexSet, allowed: VertexSet, out: &mut Vec<Vec<Vertex>>) {
            let start = path[0];
            let last = *path.last().unwrap();
            for v in (view.neighbors(last) & allowed) - used {
                if path.len() >= 2 && path[1] < v && view.graph.has_edge(v, start) {
                    let mut cycle = path.clone();
                    cycle.push(v);
                    out.push(cycle);
                }
                path.push(v);
                extend(view, path, used.with(v), allowed, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        for s in self.active {
            let mut path = vec![s];
            let above = self.active - VertexSet::full(s + 1);
            extend(self, &mut path, VertexSet::singleton(s), above, &mut out);
        }
        out
    }
}
