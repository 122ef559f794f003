//! Noncrossing geometric graphs, matchings over their vertices, and the
//! face structure of plane straight-line drawings.
//!
//! A [`GeometricGraph`] owns an indexed point list and a set of unordered
//! index pairs. Construction validates the noncrossing invariants exactly;
//! an invalid input is reported as the first violating pair found.

use crate::geometry::{
    classify_segments, cross, direction, is_general_position, orientation,
    point_in_segment_interior, sort_radially, Orientation, Point, Rational, SegmentRelation,
};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Unordered vertex-index pair, kept normalized as (min, max).
pub type Edge = (usize, usize);

/// Normalize an index pair into canonical edge form.
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphViolation {
    #[error("edge ({0}, {1}) references a vertex out of range")]
    InvalidIndex(usize, usize),
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("vertices {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("edges ({}, {}) and ({}, {}) classify as {relation:?}", .first.0, .first.1, .second.0, .second.1)]
    BadEdgePair {
        first: Edge,
        second: Edge,
        relation: SegmentRelation,
    },
    #[error("vertex {vertex} lies in the interior of edge ({}, {})", .edge.0, .edge.1)]
    VertexInEdgeInterior { vertex: usize, edge: Edge },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingViolation {
    #[error("pair ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("pairs share vertex {0}")]
    SharedVertex(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompatibilityError {
    #[error("matching index {0} out of range")]
    InvalidIndex(usize),
    #[error("pair ({}, {}) is an edge of the graph", .0.0, .0.1)]
    ReusesGraphEdge(Edge),
    #[error("pair ({}, {}) conflicts with edge ({}, {}): {relation:?}", .pair.0, .pair.1, .other.0, .other.1)]
    Conflict {
        pair: Edge,
        other: Edge,
        relation: SegmentRelation,
    },
    #[error("vertex {vertex} lies in the interior of pair ({}, {})", .pair.0, .pair.1)]
    VertexInPairInterior { vertex: usize, pair: Edge },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("vertices are not in general position")]
pub struct GeneralPositionError;

/// A noncrossing geometric graph over an indexed point list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricGraph {
    points: Vec<Point>,
    edges: BTreeSet<Edge>,
}

impl GeometricGraph {
    /// Build a graph, checking every invariant exactly.
    pub fn new<I>(points: Vec<Point>, edges: I) -> Result<Self, GraphViolation>
    where
        I: IntoIterator<Item = Edge>,
    {
        let edges: BTreeSet<Edge> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        let g = GeometricGraph { points, edges };
        g.validate()?;
        Ok(g)
    }

    /// Re-run all structural invariants, reporting the first violation.
    pub fn validate(&self) -> Result<(), GraphViolation> {
        let n = self.points.len();
        for &(u, v) in &self.edges {
            if u == v {
                return Err(GraphViolation::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(GraphViolation::InvalidIndex(u, v));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if self.points[i] == self.points[j] {
                    return Err(GraphViolation::DuplicatePoint(i, j));
                }
            }
        }
        let edges: Vec<Edge> = self.edges.iter().copied().collect();
        for (idx, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[idx + 1..] {
                let relation = classify_segments(
                    &self.points[a],
                    &self.points[b],
                    &self.points[c],
                    &self.points[d],
                )
                .expect("graph edges are nondegenerate");
                match relation {
                    SegmentRelation::Disjoint | SegmentRelation::SharedEndpoint => {}
                    other => {
                        return Err(GraphViolation::BadEdgePair {
                            first: (a, b),
                            second: (c, d),
                            relation: other,
                        })
                    }
                }
            }
        }
        for &(a, b) in &edges {
            for (w, p) in self.points.iter().enumerate() {
                if w != a && w != b && point_in_segment_interior(&self.points[a], &self.points[b], p)
                {
                    return Err(GraphViolation::VertexInEdgeInterior {
                        vertex: w,
                        edge: (a, b),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, v: usize) -> &Point {
        &self.points[v]
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&edge(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Neighbor lists for every vertex, in ascending index order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.points.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency().iter().map(|l| l.len()).collect()
    }

    /// Connected components (isolated vertices are singleton components).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let n = self.points.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_general_position(&self) -> bool {
        is_general_position(&self.points)
    }
}

/// A set of vertex-disjoint index pairs interpreted as segments over a
/// host graph's points.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pairs: BTreeSet<Edge>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching::default()
    }

    pub fn new<I>(pairs: I) -> Result<Self, MatchingViolation>
    where
        I: IntoIterator<Item = Edge>,
    {
        let pairs: BTreeSet<Edge> = pairs.into_iter().map(|(u, v)| edge(u, v)).collect();
        let mut seen = BTreeSet::new();
        for &(u, v) in &pairs {
            if u == v {
                return Err(MatchingViolation::SelfLoop(u));
            }
            if !seen.insert(u) {
                return Err(MatchingViolation::SharedVertex(u));
            }
            if !seen.insert(v) {
                return Err(MatchingViolation::SharedVertex(v));
            }
        }
        Ok(Matching { pairs })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.pairs.iter().copied()
    }

    pub fn pair_set(&self) -> &BTreeSet<Edge> {
        &self.pairs
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.contains(&edge(u, v))
    }

    /// True if the matching covers vertex v.
    pub fn covers(&self, v: usize) -> bool {
        self.pairs.iter().any(|&(a, b)| a == v || b == v)
    }

    /// The set of matched vertices, V(M).
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    /// A copy of this matching with one additional pair. The caller is
    /// responsible for compatibility.
    pub fn with_pair(&self, u: usize, v: usize) -> Matching {
        let mut pairs = self.pairs.clone();
        pairs.insert(edge(u, v));
        Matching { pairs }
    }

    /// A copy of this matching without the given pair.
    pub fn without_pair(&self, u: usize, v: usize) -> Matching {
        let mut pairs = self.pairs.clone();
        pairs.remove(&edge(u, v));
        Matching { pairs }
    }
}

/// Axis-aligned bounding box used as a cheap segment-overlap prefilter.
#[derive(Clone)]
struct BBox {
    min_x: Rational,
    max_x: Rational,
    min_y: Rational,
    max_y: Rational,
}

impl BBox {
    fn of(a: &Point, b: &Point) -> BBox {
        BBox {
            min_x: a.x.clone().min(b.x.clone()),
            max_x: a.x.clone().max(b.x.clone()),
            min_y: a.y.clone().min(b.y.clone()),
            max_y: a.y.clone().max(b.y.clone()),
        }
    }

    fn overlaps(&self, other: &BBox) -> bool {
        self.min_x <= other.max_x
            && other.min_x <= self.max_x
            && self.min_y <= other.max_y
            && other.min_y <= self.max_y
    }

    fn contains_point(&self, p: &Point) -> bool {
        self.min_x <= p.x && p.x <= self.max_x && self.min_y <= p.y && p.y <= self.max_y
    }
}

/// Precomputed context for repeated compatibility queries against a fixed
/// graph and matching.
pub struct CompatContext<'a> {
    graph: &'a GeometricGraph,
    matching: &'a Matching,
    blockers: Vec<(Edge, BBox, bool)>,
    matched: Vec<bool>,
}

impl<'a> CompatContext<'a> {
    pub fn new(graph: &'a GeometricGraph, matching: &'a Matching) -> Self {
        let mut blockers = Vec::with_capacity(graph.edge_count() + matching.len());
        for (u, v) in graph.edges() {
            let bbox = BBox::of(graph.point(u), graph.point(v));
            blockers.push(((u, v), bbox, false));
        }
        for (u, v) in matching.pairs() {
            let bbox = BBox::of(graph.point(u), graph.point(v));
            blockers.push(((u, v), bbox, true));
        }
        let mut matched = vec![false; graph.vertex_count()];
        for (u, v) in matching.pairs() {
            if u < matched.len() {
                matched[u] = true;
            }
            if v < matched.len() {
                matched[v] = true;
            }
        }
        CompatContext {
            graph,
            matching,
            blockers,
            matched,
        }
    }

    /// Exact compatibility test for the candidate pair {u, v}, with the
    /// reason for rejection when there is one.
    pub fn check_pair(&self, u: usize, v: usize) -> Result<(), CompatibilityError> {
        let n = self.graph.vertex_count();
        if u >= n {
            return Err(CompatibilityError::InvalidIndex(u));
        }
        if v >= n {
            return Err(CompatibilityError::InvalidIndex(v));
        }
        let pair = edge(u, v);
        if self.matched[u] {
            return Err(CompatibilityError::Conflict {
                pair,
                other: self.matching_pair_at(u),
                relation: SegmentRelation::SharedEndpoint,
            });
        }
        if self.matched[v] {
            return Err(CompatibilityError::Conflict {
                pair,
                other: self.matching_pair_at(v),
                relation: SegmentRelation::SharedEndpoint,
            });
        }
        if self.graph.has_edge(u, v) {
            return Err(CompatibilityError::ReusesGraphEdge(pair));
        }
        let pu = self.graph.point(u);
        let pv = self.graph.point(v);
        let pair_box = BBox::of(pu, pv);
        for ((a, b), bbox, _) in &self.blockers {
            if !bbox.overlaps(&pair_box) {
                continue;
            }
            let relation =
                classify_segments(pu, pv, self.graph.point(*a), self.graph.point(*b))
                    .expect("nondegenerate");
            match relation {
                SegmentRelation::Disjoint | SegmentRelation::SharedEndpoint => {}
                other => {
                    return Err(CompatibilityError::Conflict {
                        pair,
                        other: (*a, *b),
                        relation: other,
                    })
                }
            }
        }
        for (w, p) in self.graph.points().iter().enumerate() {
            if w == u || w == v || !pair_box.contains_point(p) {
                continue;
            }
            if point_in_segment_interior(pu, pv, p) {
                return Err(CompatibilityError::VertexInPairInterior { vertex: w, pair });
            }
        }
        Ok(())
    }

    fn matching_pair_at(&self, v: usize) -> Edge {
        self.matching
            .pairs()
            .find(|&(a, b)| a == v || b == v)
            .expect("vertex known to be matched")
    }
}

/// True iff {u, v} may be added to M as a compatible matching edge.
pub fn is_compatible_edge(g: &GeometricGraph, m: &Matching, u: usize, v: usize) -> bool {
    if u == v {
        return false;
    }
    CompatContext::new(g, m).check_pair(u, v).is_ok()
}

/// Exactly the pairs {u, v} that could extend M; empty iff M is maximal.
pub fn compatible_candidates(g: &GeometricGraph, m: &Matching) -> BTreeSet<Edge> {
    let ctx = CompatContext::new(g, m);
    let n = g.vertex_count();
    let mut out = BTreeSet::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if ctx.check_pair(u, v).is_ok() {
                out.insert((u, v));
            }
        }
    }
    out
}

/// First compatible candidate in lexicographic order, if any.
pub fn first_candidate(g: &GeometricGraph, m: &Matching) -> Option<Edge> {
    let ctx = CompatContext::new(g, m);
    let n = g.vertex_count();
    for u in 0..n {
        if ctx.matched[u] {
            continue;
        }
        for v in (u + 1)..n {
            if ctx.check_pair(u, v).is_ok() {
                return Some((u, v));
            }
        }
    }
    None
}

/// Check that M is a compatible matching of G, reporting the first conflict.
pub fn check_compatible(g: &GeometricGraph, m: &Matching) -> Result<(), CompatibilityError> {
    for (u, v) in m.pairs() {
        let rest = m.without_pair(u, v);
        let ctx = CompatContext::new(g, &rest);
        ctx.check_pair(u, v)?;
    }
    Ok(())
}

pub fn is_compatible_matching(g: &GeometricGraph, m: &Matching) -> bool {
    check_compatible(g, m).is_ok()
}

/// True iff M is compatible and no compatible pair can be added.
pub fn is_maximal(g: &GeometricGraph, m: &Matching) -> bool {
    is_compatible_matching(g, m) && first_candidate(g, m).is_none()
}

/// The union graph G+M on the same point list.
pub fn union_graph(g: &GeometricGraph, m: &Matching) -> Result<GeometricGraph, CompatibilityError> {
    check_compatible(g, m)?;
    let mut edges: BTreeSet<Edge> = g.edge_set().clone();
    edges.extend(m.pairs());
    Ok(GeometricGraph {
        points: g.points().to_vec(),
        edges,
    })
}

/// Reflex-angle data for every vertex of a drawing.
///
/// A vertex is reflex if some angle between cyclically consecutive incident
/// edges strictly exceeds pi. Degree-1 vertices carry a 2pi angle and are
/// always reflex; isolated vertices have no angle at all.
#[derive(Debug, Clone)]
pub struct ReflexInfo {
    flags: Vec<bool>,
    adjacent: Vec<BTreeSet<usize>>,
}

impl ReflexInfo {
    pub fn is_reflex(&self, v: usize) -> bool {
        self.flags[v]
    }

    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    pub fn reflex_vertices(&self) -> BTreeSet<usize> {
        self.flags
            .iter()
            .enumerate()
            .filter_map(|(v, &f)| if f { Some(v) } else { None })
            .collect()
    }

    /// Neighbors w of v such that edge (v, w) bounds a reflex angle at v.
    pub fn reflex_adjacent(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacent[v]
    }
}

/// Compute reflex flags and reflex-adjacent edges for every vertex.
pub fn reflex_vertices(h: &GeometricGraph) -> Result<ReflexInfo, GeneralPositionError> {
    if !h.is_general_position() {
        return Err(GeneralPositionError);
    }
    Ok(reflex_vertices_unchecked(h))
}

pub(crate) fn reflex_vertices_unchecked(h: &GeometricGraph) -> ReflexInfo {
    let n = h.vertex_count();
    let adj = h.adjacency();
    let mut flags = vec![false; n];
    let mut adjacent = vec![BTreeSet::new(); n];
    for v in 0..n {
        let nbrs = &adj[v];
        match nbrs.len() {
            0 => {}
            1 => {
                // Degree 1: the full 2pi angle is reflex and the single
                // incident edge bounds it.
                flags[v] = true;
                adjacent[v].insert(nbrs[0]);
            }
            _ => {
                let pts: Vec<Point> = nbrs.iter().map(|&w| h.point(w).clone()).collect();
                let order = sort_radially(h.point(v), &pts).expect("neighbors distinct");
                let k = order.len();
                for i in 0..k {
                    let a = order[i];
                    let b = order[(i + 1) % k];
                    let da = direction(h.point(v), &pts[a]);
                    let db = direction(h.point(v), &pts[b]);
                    // The ccw gap from da to db exceeds pi iff their cross
                    // product is negative; exact pi cannot occur in general
                    // position.
                    if cross(&da, &db) < Rational::zero() {
                        flags[v] = true;
                        adjacent[v].insert(nbrs[a]);
                        adjacent[v].insert(nbrs[b]);
                    }
                }
            }
        }
    }
    ReflexInfo { flags, adjacent }
}

/// A face of a plane straight-line drawing.
///
/// The boundary-cycle list carries the face's own walk first (for bounded
/// faces), followed by the outer walks of components nested inside the face
/// and by contained isolated vertices as one-element walks.
#[derive(Debug, Clone)]
pub struct Face {
    pub boundary_cycles: Vec<Vec<usize>>,
    pub incident_vertices: BTreeSet<usize>,
    pub is_outer: bool,
}

/// Faces of the drawing via rotational-system traversal.
pub fn faces(h: &GeometricGraph) -> Result<Vec<Face>, GeneralPositionError> {
    if !h.is_general_position() {
        return Err(GeneralPositionError);
    }
    Ok(trace_faces(h))
}

/// Twice the signed area of a closed walk.
fn walk_area2(h: &GeometricGraph, walk: &[usize]) -> Rational {
    let mut area = Rational::zero();
    let k = walk.len();
    for i in 0..k {
        let a = h.point(walk[i]);
        let b = h.point(walk[(i + 1) % k]);
        area += cross(a, b);
    }
    area
}

/// Winding number of a closed walk around a point not on the walk.
fn winding_number(h: &GeometricGraph, walk: &[usize], p: &Point) -> i64 {
    let mut wn = 0;
    let k = walk.len();
    for i in 0..k {
        let a = h.point(walk[i]);
        let b = h.point(walk[(i + 1) % k]);
        if a.y <= p.y {
            if b.y > p.y && orientation(a, b, p) == Orientation::CounterClockwise {
                wn += 1;
            }
        } else if b.y <= p.y && orientation(a, b, p) == Orientation::Clockwise {
            wn -= 1;
        }
    }
    wn
}

/// Face traversal without the general-position gate. Correct for any valid
/// graph: rotation ties are impossible because equal neighbor directions
/// would put a vertex inside an edge.
pub(crate) fn trace_faces(h: &GeometricGraph) -> Vec<Face> {
    let n = h.vertex_count();
    let adj = h.adjacency();

    // Rotation system: neighbors in ccw order around each vertex.
    let mut rot: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let pts: Vec<Point> = adj[v].iter().map(|&w| h.point(w).clone()).collect();
        if pts.is_empty() {
            rot.push(Vec::new());
            continue;
        }
        let order = sort_radially(h.point(v), &pts).expect("neighbors distinct from center");
        rot.push(order.into_iter().map(|i| adj[v][i]).collect());
    }
    let rot_pos: Vec<BTreeMap<usize, usize>> = rot
        .iter()
        .map(|list| list.iter().enumerate().map(|(i, &w)| (w, i)).collect())
        .collect();

    // Trace every dart once. The next dart after arriving at v from u is
    // (v, w) where w precedes u in the ccw rotation at v; this walks bounded
    // faces counterclockwise and outer walks clockwise.
    let mut walks: Vec<Vec<usize>> = Vec::new();
    let mut visited: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(a, b) in h.edge_set() {
        for start in [(a, b), (b, a)] {
            if visited.contains(&start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut dart = start;
            loop {
                visited.insert(dart);
                walk.push(dart.0);
                let (u, v) = dart;
                let pos = rot_pos[v][&u];
                let k = rot[v].len();
                let w = rot[v][(pos + k - 1) % k];
                dart = (v, w);
                if dart == start {
                    break;
                }
            }
            walks.push(walk);
        }
    }

    // Positive-area walks bound the bounded faces; each component has one
    // nonpositive walk (its outer walk) that nests inside some other face.
    let areas: Vec<Rational> = walks.iter().map(|w| walk_area2(h, w)).collect();
    let comps = h.components();
    let mut comp_of = vec![usize::MAX; n];
    for (ci, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = ci;
        }
    }

    let mut bounded: Vec<usize> = Vec::new();
    let mut hole_walks: Vec<usize> = Vec::new();
    for (i, area) in areas.iter().enumerate() {
        if *area > Rational::zero() {
            bounded.push(i);
        } else {
            hole_walks.push(i);
        }
    }

    // The innermost positive walk containing a probe point identifies the
    // face a nested component or isolated vertex belongs to.
    let find_container = |p: &Point, skip_comp: Option<usize>| -> Option<usize> {
        let mut best: Option<(usize, &Rational)> = None;
        for &wi in &bounded {
            if let Some(skip) = skip_comp {
                if comp_of[walks[wi][0]] == skip {
                    continue;
                }
            }
            if winding_number(h, &walks[wi], p) != 0 {
                match best {
                    Some((_, area)) if *area <= areas[wi] => {}
                    _ => best = Some((wi, &areas[wi])),
                }
            }
        }
        best.map(|(wi, _)| wi)
    };

    let mut faces: Vec<Face> = bounded
        .iter()
        .map(|&wi| Face {
            boundary_cycles: vec![walks[wi].clone()],
            incident_vertices: walks[wi].iter().copied().collect(),
            is_outer: false,
        })
        .collect();
    let mut outer = Face {
        boundary_cycles: Vec::new(),
        incident_vertices: BTreeSet::new(),
        is_outer: true,
    };

    let index_of = |wi: usize, bounded: &[usize]| bounded.iter().position(|&x| x == wi);

    for &hw in &hole_walks {
        let probe = h.point(walks[hw][0]);
        let comp = comp_of[walks[hw][0]];
        match find_container(probe, Some(comp)) {
            Some(container) => {
                let fi = index_of(container, &bounded).expect("container is bounded");
                faces[fi].boundary_cycles.push(walks[hw].clone());
                faces[fi].incident_vertices.extend(walks[hw].iter().copied());
            }
            None => {
                outer.boundary_cycles.push(walks[hw].clone());
                outer.incident_vertices.extend(walks[hw].iter().copied());
            }
        }
    }
    for v in 0..n {
        if !adj[v].is_empty() {
            continue;
        }
        match find_container(h.point(v), None) {
            Some(container) => {
                let fi = index_of(container, &bounded).expect("container is bounded");
                faces[fi].boundary_cycles.push(vec![v]);
                faces[fi].incident_vertices.insert(v);
            }
            None => {
                outer.boundary_cycles.push(vec![v]);
                outer.incident_vertices.insert(v);
            }
        }
    }

    faces.push(outer);
    faces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    pub(crate) fn square() -> GeometricGraph {
        GeometricGraph::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(2, 0),
                Point::from_ints(2, 2),
                Point::from_ints(0, 2),
            ],
            vec![(0, 1), (1, 2), (2, 3), (3, 0)],
        )
        .unwrap()
    }

    fn triangle() -> GeometricGraph {
        GeometricGraph::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(4, 0),
                Point::from_ints(1, 3),
            ],
            vec![(0, 1), (1, 2), (2, 0)],
        )
        .unwrap()
    }

    #[test]
    fn validate_square_ok() {
        assert!(square().validate().is_ok());
    }

    #[test]
    fn validate_rejects_crossing_diagonals() {
        let r = GeometricGraph::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(2, 0),
                Point::from_ints(2, 2),
                Point::from_ints(0, 2),
            ],
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)],
        );
        match r {
            Err(GraphViolation::BadEdgePair { relation, .. }) => {
                assert_eq!(relation, SegmentRelation::ProperCrossing)
            }
            other => panic!("expected crossing violation, got {:?}", other),
        }
    }

    #[test]
    fn validate_rejects_vertex_in_interior() {
        let r = GeometricGraph::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(2, 0),
                Point::from_ints(1, 0),
            ],
            vec![(0, 1)],
        );
        assert!(matches!(
            r,
            Err(GraphViolation::VertexInEdgeInterior { vertex: 2, .. })
        ));
    }

    #[test]
    fn compatible_edge_on_square() {
        let g = square();
        let empty = Matching::empty();
        assert!(is_compatible_edge(&g, &empty, 0, 2));
        assert!(!is_compatible_edge(&g, &empty, 0, 1));
        let m = Matching::new(vec![(0, 2)]).unwrap();
        assert!(!is_compatible_edge(&g, &m, 1, 3));
    }

    #[test]
    fn candidates_on_small_polygons() {
        let g = triangle();
        assert!(compatible_candidates(&g, &Matching::empty()).is_empty());
        let g = square();
        let cands = compatible_candidates(&g, &Matching::empty());
        assert_eq!(cands, BTreeSet::from([(0, 2), (1, 3)]));
        let m = Matching::new(vec![(0, 2)]).unwrap();
        assert!(compatible_candidates(&g, &m).is_empty());
    }

    #[test]
    fn maximality_cases() {
        assert!(is_maximal(&triangle(), &Matching::empty()));
        let g = square();
        assert!(!is_maximal(&g, &Matching::empty()));
        assert!(is_maximal(&g, &Matching::new(vec![(0, 2)]).unwrap()));
    }

    #[test]
    fn union_graph_counts() {
        let g = square();
        let m = Matching::new(vec![(0, 2)]).unwrap();
        let u = union_graph(&g, &m).unwrap();
        assert_eq!(u.vertex_count(), 4);
        assert_eq!(u.edge_count(), 5);
        let same = union_graph(&g, &Matching::empty()).unwrap();
        assert_eq!(same, g);
        let bad = Matching::new(vec![(1, 3)]).unwrap();
        let with_diag = union_graph(&g, &m).unwrap();
        assert!(union_graph(&with_diag, &bad).is_err());
    }

    #[test]
    fn reflex_square_and_diagonal() {
        let g = square();
        let info = reflex_vertices(&g).unwrap();
        assert_eq!(info.flags(), &[true, true, true, true]);

        let m = Matching::new(vec![(0, 2)]).unwrap();
        let u = union_graph(&g, &m).unwrap();
        let info = reflex_vertices(&u).unwrap();
        assert_eq!(info.flags(), &[true, true, true, true]);
    }

    #[test]
    fn reflex_single_segment() {
        let g = GeometricGraph::new(
            vec![Point::from_ints(0, 0), Point::from_ints(1, 2)],
            vec![(0, 1)],
        )
        .unwrap();
        let info = reflex_vertices(&g).unwrap();
        assert_eq!(info.flags(), &[true, true]);
        assert!(info.reflex_adjacent(0).contains(&1));
    }

    #[test]
    fn faces_of_square() {
        let g = square();
        let fs = faces(&g).unwrap();
        assert_eq!(fs.len(), 2);
        let outer: Vec<_> = fs.iter().filter(|f| f.is_outer).collect();
        assert_eq!(outer.len(), 1);
        let inner: Vec<_> = fs.iter().filter(|f| !f.is_outer).collect();
        assert_eq!(inner[0].incident_vertices.len(), 4);
    }

    #[test]
    fn faces_of_square_with_diagonal() {
        let g = square();
        let m = Matching::new(vec![(0, 2)]).unwrap();
        let u = union_graph(&g, &m).unwrap();
        let fs = faces(&u).unwrap();
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn faces_of_two_triangles_side_by_side() {
        let mut pts = triangle().points().to_vec();
        pts.extend([
            Point::from_ints(10, 1),
            Point::from_ints(14, 1),
            Point::from_ints(11, 4),
        ]);
        let g = GeometricGraph::new(pts, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        let fs = faces(&g).unwrap();
        assert_eq!(fs.len(), 3);
        let outer = fs.iter().find(|f| f.is_outer).unwrap();
        assert_eq!(outer.boundary_cycles.len(), 2);
        assert_eq!(outer.incident_vertices.len(), 6);
    }

    #[test]
    fn faces_of_nested_triangle() {
        // A triangle inside the square: the square's inner face lists the
        // triangle's outer walk as a nested cycle.
        let g = GeometricGraph::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(10, 0),
                Point::from_ints(10, 10),
                Point::from_ints(0, 10),
                Point::from_ints(4, 2),
                Point::from_ints(6, 2),
                Point::from_ints(5, 4),
            ],
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 4)],
        )
        .unwrap();
        let fs = faces(&g).unwrap();
        // square interior (with nested triangle), triangle interior, outer.
        assert_eq!(fs.len(), 3);
        let square_face = fs
            .iter()
            .find(|f| !f.is_outer && f.incident_vertices.contains(&0))
            .unwrap();
        assert_eq!(square_face.boundary_cycles.len(), 2);
        assert_eq!(square_face.incident_vertices.len(), 7);
        let outer = fs.iter().find(|f| f.is_outer).unwrap();
        assert_eq!(outer.incident_vertices.len(), 4);
    }

    #[test]
    fn faces_with_isolated_vertex() {
        let mut pts = square().points().to_vec();
        pts.push(Point::new(rat(1), crate::geometry::ratio(1, 2)));
        let g = GeometricGraph::new(pts, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let fs = faces(&g).unwrap();
        assert_eq!(fs.len(), 2);
        let inner = fs.iter().find(|f| !f.is_outer).unwrap();
        assert!(inner.incident_vertices.contains(&4));
        assert!(inner.boundary_cycles.iter().any(|c| c == &vec![4]));
    }

    #[test]
    fn euler_formula_for_faces() {
        for (g, label) in [
            (square(), "square"),
            (triangle(), "triangle"),
        ] {
            let fs = faces(&g).unwrap();
            let comps = g.components().len();
            assert_eq!(
                fs.len(),
                g.edge_count() - g.vertex_count() + 1 + comps,
                "euler mismatch for {label}"
            );
        }
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let g = square();
        let total: usize = g.degrees().iter().sum();
        assert_eq!(total, 2 * g.edge_count());
        assert_eq!(rat(4), rat(4));
    }
}
