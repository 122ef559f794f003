//! Counting parameters and lower bounds for maximal compatible matchings.
//!
//! The six parameters of [`Lemma1Parameters`] feed a counting inequality
//! that holds for every maximal compatible matching. The inequality is
//! certified constructively by [`build_convex_subdivision`], which augments
//! the drawing into a plane graph whose bounded faces are all convex and
//! whose face counts obey exact formulas.

use crate::geometry::{cross, direction, orientation, rat, ratio, Orientation, Point, Rational};
use crate::graph::{
    check_compatible, edge, is_maximal, reflex_vertices_unchecked, trace_faces, union_graph,
    CompatibilityError, Edge, GeneralPositionError, GeometricGraph, Matching,
};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Incompatible(#[from] CompatibilityError),
    #[error("vertices are not in general position")]
    NotGeneralPosition,
    #[error("matching is not maximal")]
    NotMaximal,
    #[error("graph is not a polygon on at least 4 vertices")]
    NotPolygon,
    #[error("convex subdivision construction failed: {0}")]
    Subdivision(String),
}

impl From<GeneralPositionError> for AnalysisError {
    fn from(_: GeneralPositionError) -> Self {
        AnalysisError::NotGeneralPosition
    }
}

/// The six counted quantities attached to a graph G and matching M.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma1Parameters {
    /// Isolated vertices in G+M.
    pub isolated: usize,
    /// Triangular faces of G incident to unmatched vertices only.
    pub delta: usize,
    /// Faces of G+M incident to matched vertices only.
    pub sigma: usize,
    /// Edges uv of G with u unmatched, v matched, and uv bounding a reflex
    /// angle at u in G+M.
    pub nu: usize,
    /// Unmatched vertices incident to a reflex angle in G+M.
    pub reflex_unmatched: usize,
    /// Matched vertices incident to a reflex angle in G+M.
    pub reflex_matched: usize,
}

/// Compute the six parameters from the faces and reflex angles of G and G+M.
pub fn lemma1_parameters(
    g: &GeometricGraph,
    m: &Matching,
) -> Result<Lemma1Parameters, AnalysisError> {
    check_compatible(g, m)?;
    if !g.is_general_position() {
        return Err(AnalysisError::NotGeneralPosition);
    }
    let union = union_graph(g, m).expect("compatibility already checked");
    let reflex = reflex_vertices_unchecked(&union);
    let matched: Vec<bool> = {
        let mut f = vec![false; g.vertex_count()];
        for v in m.vertices() {
            f[v] = true;
        }
        f
    };
    let union_degrees = union.degrees();

    let isolated = union_degrees.iter().filter(|&&d| d == 0).count();
    let reflex_unmatched = (0..g.vertex_count())
        .filter(|&v| !matched[v] && reflex.is_reflex(v))
        .count();
    let reflex_matched = (0..g.vertex_count())
        .filter(|&v| matched[v] && reflex.is_reflex(v))
        .count();

    // Triangular faces of G with all incident vertices unmatched. Incidence
    // is containment-aware, so a triangle holding nested content is not an
    // empty triangular face and does not count.
    let delta = trace_faces(g)
        .iter()
        .filter(|f| {
            !f.is_outer
                && f.boundary_cycles.len() == 1
                && f.boundary_cycles[0].len() == 3
                && f.incident_vertices.len() == 3
                && f.incident_vertices.iter().all(|&v| !matched[v])
        })
        .count();

    let sigma = trace_faces(&union)
        .iter()
        .filter(|f| {
            !f.incident_vertices.is_empty() && f.incident_vertices.iter().all(|&v| matched[v])
        })
        .count();

    let mut nu = 0;
    for (a, b) in g.edges() {
        let (u, v) = match (matched[a], matched[b]) {
            (false, true) => (a, b),
            (true, false) => (b, a),
            _ => continue,
        };
        if reflex.reflex_adjacent(u).contains(&v) {
            nu += 1;
        }
    }

    Ok(Lemma1Parameters {
        isolated,
        delta,
        sigma,
        nu,
        reflex_unmatched,
        reflex_matched,
    })
}

/// Evaluation of the counting inequality for a maximal matching.
#[derive(Debug, Clone)]
pub struct Lemma1Check {
    pub lhs: i64,
    pub rhs: i64,
    pub slack: i64,
    pub holds: bool,
    pub params: Lemma1Parameters,
}

/// Evaluate `2n + nu + 2 sigma - r_u - 2 r_m - sum d_G(matched) - delta - 2
/// <= 2|M|` for a maximal compatible matching M.
pub fn lemma1_check(g: &GeometricGraph, m: &Matching) -> Result<Lemma1Check, AnalysisError> {
    let params = lemma1_parameters(g, m)?;
    if !is_maximal(g, m) {
        return Err(AnalysisError::NotMaximal);
    }
    let matched_degree_sum: i64 = m.vertices().iter().map(|&v| g.degree(v) as i64).sum();
    let lhs = 2 * g.vertex_count() as i64 + params.nu as i64 + 2 * params.sigma as i64
        - params.reflex_unmatched as i64
        - 2 * params.reflex_matched as i64
        - matched_degree_sum
        - params.delta as i64
        - 2;
    let rhs = 2 * m.len() as i64;
    Ok(Lemma1Check {
        lhs,
        rhs,
        slack: rhs - lhs,
        holds: lhs <= rhs,
        params,
    })
}

/// The augmented plane graph D with its certified counts.
#[derive(Debug, Clone)]
pub struct SubdivisionReport {
    /// The plane graph D: the instance plus rectangle, isolated-vertex rays
    /// and reflex cuts, with hit edges subdivided.
    pub subdivision: GeometricGraph,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    /// F_i: number of faces of D with exactly i unmatched original vertices
    /// on their boundary.
    pub f_histogram: BTreeMap<usize, usize>,
    /// Full added segments (rectangle sides and rays) for rendering.
    pub added_segments: Vec<(Point, Point)>,
    pub params: Lemma1Parameters,
    pub matching_size: usize,
    pub original_vertex_count: usize,
    pub original_edge_count: usize,
    /// Sum of d_G(u) over unmatched vertices u.
    pub unmatched_degree_sum: usize,
    pub bounded_faces_convex: bool,
}

/// The exact count conditions a valid subdivision must satisfy.
#[derive(Debug, Clone, Copy)]
pub struct SubdivisionChecks {
    pub vertex_formula: bool,
    pub edge_formula: bool,
    pub euler_formula: bool,
    pub incidence_equation: bool,
    pub f3_equals_delta: bool,
    pub no_face_with_four: bool,
    pub f1_lower_bound: bool,
    pub f0_lower_bound: bool,
    pub bounded_faces_convex: bool,
}

impl SubdivisionChecks {
    pub fn all_hold(&self) -> bool {
        self.vertex_formula
            && self.edge_formula
            && self.euler_formula
            && self.incidence_equation
            && self.f3_equals_delta
            && self.no_face_with_four
            && self.f1_lower_bound
            && self.f0_lower_bound
            && self.bounded_faces_convex
    }
}

impl SubdivisionReport {
    fn f(&self, i: usize) -> usize {
        self.f_histogram.get(&i).copied().unwrap_or(0)
    }

    pub fn checks(&self) -> SubdivisionChecks {
        let p = &self.params;
        let n = self.original_vertex_count;
        let m = self.original_edge_count;
        let v_expected = n + p.reflex_unmatched + p.reflex_matched + 2 * p.isolated + 4;
        let e_expected = m
            + self.matching_size
            + 2 * (p.reflex_matched + p.reflex_unmatched + 2 * p.isolated)
            + 4;
        let incidence_lhs: usize = self.f_histogram.iter().map(|(i, c)| i * c).sum();
        let incidence_rhs = 2 * p.isolated + p.reflex_unmatched + self.unmatched_degree_sum;
        SubdivisionChecks {
            vertex_formula: self.vertex_count == v_expected,
            edge_formula: self.edge_count == e_expected,
            euler_formula: self.face_count + self.vertex_count == self.edge_count + 2,
            incidence_equation: incidence_lhs == incidence_rhs,
            f3_equals_delta: self.f(3) == p.delta,
            no_face_with_four: self.f_histogram.keys().all(|&i| i <= 3),
            f1_lower_bound: self.f(1) >= 2 * p.isolated + p.nu,
            f0_lower_bound: self.f(0) >= 1 + p.sigma,
            bounded_faces_convex: self.bounded_faces_convex,
        }
    }
}

struct BuildFail;

struct ArrangementBuilder {
    points: Vec<Point>,
    edges: BTreeSet<Edge>,
    added_segments: Vec<(Point, Point)>,
}

impl ArrangementBuilder {
    /// Does any point other than `origin` lie on the open ray from `origin`
    /// in direction `dir`?
    fn ray_hits_vertex(&self, origin: usize, dir: &Point) -> bool {
        let p = &self.points[origin];
        self.points.iter().enumerate().any(|(w, q)| {
            w != origin
                && cross(dir, &direction(p, q)).is_zero()
                && crate::geometry::dot(dir, &direction(p, q)).is_positive()
        })
    }

    /// Does any point other than `origin` lie on the full line through
    /// `origin` with direction `dir`?
    fn line_hits_vertex(&self, origin: usize, dir: &Point) -> bool {
        let p = &self.points[origin];
        self.points
            .iter()
            .enumerate()
            .any(|(w, q)| w != origin && cross(dir, &direction(p, q)).is_zero())
    }

    /// Shoot a ray from `origin` in direction `dir`, subdividing the first
    /// edge hit. The direction must already avoid all vertices.
    fn shoot(&mut self, origin: usize, dir: &Point) -> Result<(), BuildFail> {
        let p = self.points[origin].clone();
        let mut best: Option<(Edge, Rational)> = None;
        for &(a, b) in &self.edges {
            if a == origin || b == origin {
                continue;
            }
            let pa = &self.points[a];
            let pb = &self.points[b];
            let seg = direction(pa, pb);
            let denom = cross(dir, &seg);
            if denom.is_zero() {
                continue;
            }
            let ap = direction(&p, pa);
            let t = cross(&ap, &seg) / &denom;
            if !t.is_positive() {
                continue;
            }
            let s = cross(&ap, dir) / &denom;
            if s.is_zero() || s == rat(1) {
                // Endpoint hits cannot occur for vetted directions.
                return Err(BuildFail);
            }
            if !s.is_positive() || s > rat(1) {
                continue;
            }
            match &best {
                Some((_, bt)) if *bt <= t => {}
                _ => best = Some(((a, b), t)),
            }
        }
        let ((a, b), t) = best.ok_or(BuildFail)?;
        let hit = Point::new(&p.x + &t * &dir.x, &p.y + &t * &dir.y);
        let x = self.points.len();
        self.points.push(hit.clone());
        self.edges.remove(&(a, b));
        self.edges.insert(edge(a, x));
        self.edges.insert(edge(x, b));
        self.edges.insert(edge(origin, x));
        self.added_segments.push((p, hit));
        Ok(())
    }
}

/// Direction weights tried when cutting a reflex angle; the attempt index
/// rotates the sequence so a failed build can start from fresh choices.
fn weight_sequence(attempt: usize) -> impl Iterator<Item = (i64, i64)> {
    let base: Vec<(i64, i64)> = (2..40)
        .flat_map(|s| (1..s).map(move |a| (a, s - a)))
        .collect();
    base.into_iter().cycle().skip(attempt * 3).take(400)
}

/// Build the convex subdivision D for a maximal compatible matching.
pub fn build_convex_subdivision(
    g: &GeometricGraph,
    m: &Matching,
) -> Result<SubdivisionReport, AnalysisError> {
    let params = lemma1_parameters(g, m)?;
    if !is_maximal(g, m) {
        return Err(AnalysisError::NotMaximal);
    }
    let union = union_graph(g, m).expect("compatibility already checked");
    if union.vertex_count() == 0 {
        return Err(AnalysisError::Subdivision("graph has no vertices".into()));
    }
    for attempt in 0..12 {
        if let Ok(report) = try_build(g, m, &union, &params, attempt) {
            return Ok(report);
        }
    }
    Err(AnalysisError::Subdivision(
        "no vertex-avoiding ray directions found".into(),
    ))
}

fn try_build(
    g: &GeometricGraph,
    m: &Matching,
    union: &GeometricGraph,
    params: &Lemma1Parameters,
    attempt: usize,
) -> Result<SubdivisionReport, BuildFail> {
    let n = union.vertex_count();
    let mut builder = ArrangementBuilder {
        points: union.points().to_vec(),
        edges: union.edge_set().clone(),
        added_segments: Vec::new(),
    };

    // Enclosing rectangle: bounding box expanded by one unit, nudged a bit
    // more on later attempts so forced rays land elsewhere.
    let expand = rat(1) + ratio(attempt as i64, 4);
    let (mut min_x, mut max_x) = (builder.points[0].x.clone(), builder.points[0].x.clone());
    let (mut min_y, mut max_y) = (builder.points[0].y.clone(), builder.points[0].y.clone());
    for p in &builder.points {
        min_x = min_x.min(p.x.clone());
        max_x = max_x.max(p.x.clone());
        min_y = min_y.min(p.y.clone());
        max_y = max_y.max(p.y.clone());
    }
    let corners = [
        Point::new(&min_x - &expand, &min_y - &expand),
        Point::new(&max_x + &expand, &min_y - &expand),
        Point::new(&max_x + &expand, &max_y + &expand),
        Point::new(&min_x - &expand, &max_y + &expand),
    ];
    for (i, c) in corners.iter().enumerate() {
        builder.points.push(c.clone());
        builder
            .added_segments
            .push((c.clone(), corners[(i + 1) % 4].clone()));
        builder.edges.insert(edge(n + i, n + (i + 1) % 4));
    }

    let reflex = reflex_vertices_unchecked(union);
    let degrees = union.degrees();
    let adjacency = union.adjacency();

    // Degree-1 vertices carry a 2pi angle; the only cut making both halves
    // convex is the exact continuation of the incident edge. Process these
    // first: general position guarantees the forced line avoids original
    // vertices, and early processing minimizes collisions with ray endpoints.
    for v in 0..n {
        if degrees[v] != 1 {
            continue;
        }
        let nbr = adjacency[v][0];
        let d = direction(union.point(nbr), union.point(v));
        if builder.ray_hits_vertex(v, &d) {
            return Err(BuildFail);
        }
        builder.shoot(v, &d)?;
    }

    // Two collinear rays from each isolated vertex, direction free.
    for v in 0..n {
        if degrees[v] != 0 {
            continue;
        }
        let mut done = false;
        for (a, b) in weight_sequence(attempt) {
            for dir in [Point::from_ints(a, b), Point::from_ints(a, -b)] {
                if builder.line_hits_vertex(v, &dir) {
                    continue;
                }
                builder.shoot(v, &dir)?;
                builder.shoot(v, &Point::new(-dir.x.clone(), -dir.y.clone()))?;
                done = true;
                break;
            }
            if done {
                break;
            }
        }
        if !done {
            return Err(BuildFail);
        }
    }

    // One cut per remaining reflex vertex, anywhere strictly inside the cone
    // that splits the reflex angle into two convex parts. For a reflex gap
    // from e1 to e2 that cone is spanned by -e1 and -e2.
    for v in 0..n {
        if degrees[v] < 2 || !reflex.is_reflex(v) {
            continue;
        }
        let dirs: Vec<Point> = adjacency[v]
            .iter()
            .map(|&w| direction(union.point(v), union.point(w)))
            .collect();
        let mut order: Vec<usize> = (0..dirs.len()).collect();
        order.sort_by(|&i, &j| crate::geometry::cmp_directions(&dirs[i], &dirs[j]));
        let k = order.len();
        let mut gap = None;
        for i in 0..k {
            let a = &dirs[order[i]];
            let b = &dirs[order[(i + 1) % k]];
            if cross(a, b).is_negative() {
                gap = Some((a.clone(), b.clone()));
                break;
            }
        }
        let (e1, e2) = gap.expect("reflex vertex has a reflex gap");
        let mut done = false;
        for (lam, mu) in weight_sequence(attempt) {
            let lam = rat(lam);
            let mu = rat(mu);
            let dir = Point::new(
                -(&lam * &e1.x + &mu * &e2.x),
                -(&lam * &e1.y + &mu * &e2.y),
            );
            if builder.ray_hits_vertex(v, &dir) {
                continue;
            }
            builder.shoot(v, &dir)?;
            done = true;
            break;
        }
        if !done {
            return Err(BuildFail);
        }
    }

    let subdivision = GeometricGraph::new(builder.points, builder.edges).map_err(|_| BuildFail)?;
    let faces = trace_faces(&subdivision);

    let matched = m.vertices();
    let unmatched_in_g = |v: usize| v < g.vertex_count() && !matched.contains(&v);
    let mut f_histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut convex = true;
    for face in &faces {
        let count = face
            .incident_vertices
            .iter()
            .filter(|&&v| unmatched_in_g(v))
            .count();
        *f_histogram.entry(count).or_insert(0) += 1;
        if face.is_outer {
            continue;
        }
        let walk = &face.boundary_cycles[0];
        let distinct: BTreeSet<usize> = walk.iter().copied().collect();
        if distinct.len() != walk.len() {
            convex = false;
            continue;
        }
        let len = walk.len();
        for i in 0..len {
            let a = subdivision.point(walk[i]);
            let b = subdivision.point(walk[(i + 1) % len]);
            let c = subdivision.point(walk[(i + 2) % len]);
            if orientation(a, b, c) == Orientation::Clockwise {
                convex = false;
                break;
            }
        }
    }

    let unmatched_degree_sum = (0..g.vertex_count())
        .filter(|&v| !matched.contains(&v))
        .map(|v| g.degree(v))
        .sum();

    Ok(SubdivisionReport {
        vertex_count: subdivision.vertex_count(),
        edge_count: subdivision.edge_count(),
        face_count: faces.len(),
        f_histogram,
        added_segments: builder.added_segments,
        params: params.clone(),
        matching_size: m.len(),
        original_vertex_count: g.vertex_count(),
        original_edge_count: g.edge_count(),
        unmatched_degree_sum,
        bounded_faces_convex: convex,
        subdivision,
    })
}

/// Degree-regularity classification used by the per-class lower bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    PointSet,
    PerfectMatching,
    DisjointPolygons,
    Polygon,
    Other,
}

impl std::fmt::Display for GraphClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            GraphClass::PointSet => "point-set",
            GraphClass::PerfectMatching => "perfect-matching",
            GraphClass::DisjointPolygons => "disjoint-polygons",
            GraphClass::Polygon => "polygon",
            GraphClass::Other => "other",
        };
        f.write_str(name)
    }
}

/// Classify by degree multiset and connectivity; a polygon is a connected
/// 2-regular graph.
pub fn regularity_class(g: &GeometricGraph) -> GraphClass {
    let degrees = g.degrees();
    if degrees.iter().all(|&d| d == 0) {
        return GraphClass::PointSet;
    }
    if degrees.iter().all(|&d| d == 1) {
        return GraphClass::PerfectMatching;
    }
    if degrees.iter().all(|&d| d == 2) {
        if g.components().len() == 1 {
            return GraphClass::Polygon;
        }
        return GraphClass::DisjointPolygons;
    }
    GraphClass::Other
}

/// The class lower bound on mm(G), as an exact rational, when one applies.
pub fn lower_bound(g: &GeometricGraph) -> Option<Rational> {
    let n = rat(g.vertex_count() as i64);
    match regularity_class(g) {
        GraphClass::PointSet => Some((n - rat(1)) / rat(3)),
        GraphClass::PerfectMatching => Some((n - rat(2)) / rat(6)),
        GraphClass::DisjointPolygons => Some((n - rat(3)) / rat(11)),
        GraphClass::Polygon => {
            if g.vertex_count() >= 4 {
                // n/7 dominates (n-3)/11 for every n.
                Some(n / rat(7))
            } else {
                None
            }
        }
        GraphClass::Other => None,
    }
}

/// A matching size measured against the class lower bound.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub class: GraphClass,
    pub lower_bound: Option<Rational>,
    pub matching_size: usize,
    pub satisfied: bool,
    pub slack: Option<Rational>,
}

pub fn bound_report(g: &GeometricGraph, matching_size: usize) -> BoundReport {
    let class = regularity_class(g);
    let bound = lower_bound(g);
    let size = rat(matching_size as i64);
    let (satisfied, slack) = match &bound {
        Some(b) => (size >= *b, Some(&size - b)),
        None => (true, None),
    };
    BoundReport {
        class,
        lower_bound: bound,
        matching_size,
        satisfied,
        slack,
    }
}

/// The face facts used in the polygon bound proof.
#[derive(Debug, Clone)]
pub struct PolygonFaceFacts {
    pub face_count: usize,
    pub expected_face_count: usize,
    pub nu_plus_sigma: usize,
    pub required_nu_plus_sigma: usize,
    pub reflex_unmatched: usize,
    pub expected_reflex_unmatched: usize,
    pub delta: usize,
    pub holds: bool,
}

/// Check faces(P+M) = 2+|M|, nu+sigma >= 2+|M|, r_u = n-2|M| and delta = 0
/// for a maximal compatible matching of a polygon with n >= 4.
pub fn polygon_face_facts(
    g: &GeometricGraph,
    m: &Matching,
) -> Result<PolygonFaceFacts, AnalysisError> {
    if regularity_class(g) != GraphClass::Polygon || g.vertex_count() < 4 {
        return Err(AnalysisError::NotPolygon);
    }
    let params = lemma1_parameters(g, m)?;
    if !is_maximal(g, m) {
        return Err(AnalysisError::NotMaximal);
    }
    let union = union_graph(g, m).expect("compatibility already checked");
    let face_count = trace_faces(&union).len();
    let expected_face_count = 2 + m.len();
    let nu_plus_sigma = params.nu + params.sigma;
    let required_nu_plus_sigma = 2 + m.len();
    let expected_reflex_unmatched = g.vertex_count() - 2 * m.len();
    let holds = face_count == expected_face_count
        && nu_plus_sigma >= required_nu_plus_sigma
        && params.reflex_unmatched == expected_reflex_unmatched
        && params.delta == 0;
    Ok(PolygonFaceFacts {
        face_count,
        expected_face_count,
        nu_plus_sigma,
        required_nu_plus_sigma,
        reflex_unmatched: params.reflex_unmatched,
        expected_reflex_unmatched,
        delta: params.delta,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> GeometricGraph {
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

    fn diagonal() -> Matching {
        Matching::new(vec![(0, 2)]).unwrap()
    }

    #[test]
    fn square_diagonal_parameters() {
        let p = lemma1_parameters(&square(), &diagonal()).unwrap();
        assert_eq!(
            p,
            Lemma1Parameters {
                isolated: 0,
                delta: 0,
                sigma: 0,
                nu: 4,
                reflex_unmatched: 2,
                reflex_matched: 2,
            }
        );
    }

    #[test]
    fn square_diagonal_check() {
        let c = lemma1_check(&square(), &diagonal()).unwrap();
        assert_eq!(c.lhs, 0);
        assert_eq!(c.rhs, 2);
        assert!(c.holds);
    }

    #[test]
    fn non_maximal_matching_rejected() {
        let err = lemma1_check(&square(), &Matching::empty());
        assert!(matches!(err, Err(AnalysisError::NotMaximal)));
    }

    #[test]
    fn capping_edge_on_four_points_is_tight() {
        // Four convex points, no edges; one capping edge is maximal.
        let g = GeometricGraph::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(1, 1),
                Point::from_ints(2, 4),
                Point::from_ints(3, 9),
            ],
            vec![],
        )
        .unwrap();
        let m = Matching::new(vec![(0, 2)]).unwrap();
        assert!(is_maximal(&g, &m));
        let c = lemma1_check(&g, &m).unwrap();
        assert_eq!(c.lhs, 2);
        assert_eq!(c.rhs, 2);
        assert!(c.holds);
    }

    #[test]
    fn single_segment_check() {
        let g = GeometricGraph::new(
            vec![Point::from_ints(0, 0), Point::from_ints(3, 1)],
            vec![(0, 1)],
        )
        .unwrap();
        let c = lemma1_check(&g, &Matching::empty()).unwrap();
        assert_eq!(c.lhs, 0);
        assert_eq!(c.rhs, 0);
        assert!(c.holds);
    }

    #[test]
    fn subdivision_counts_for_square_diagonal() {
        let report = build_convex_subdivision(&square(), &diagonal()).unwrap();
        assert_eq!(report.vertex_count, 12);
        assert_eq!(report.edge_count, 17);
        assert_eq!(report.face_count, 7);
        let checks = report.checks();
        assert!(checks.all_hold(), "failed checks: {:?}", checks);
    }

    #[test]
    fn subdivision_counts_for_single_segment() {
        let g = GeometricGraph::new(
            vec![Point::from_ints(0, 0), Point::from_ints(3, 1)],
            vec![(0, 1)],
        )
        .unwrap();
        let report = build_convex_subdivision(&g, &Matching::empty()).unwrap();
        assert_eq!(report.vertex_count, 8);
        assert_eq!(report.edge_count, 9);
        assert_eq!(report.face_count, 3);
        assert!(report.checks().all_hold());
    }

    #[test]
    fn subdivision_with_isolated_vertex() {
        // A capping edge over four convex points leaves two isolated
        // vertices in G+M.
        let g = GeometricGraph::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(1, 1),
                Point::from_ints(2, 4),
                Point::from_ints(3, 9),
            ],
            vec![],
        )
        .unwrap();
        let m = Matching::new(vec![(0, 2)]).unwrap();
        let report = build_convex_subdivision(&g, &m).unwrap();
        assert_eq!(report.params.isolated, 2);
        assert!(report.checks().all_hold());
    }

    #[test]
    fn classes_and_bounds() {
        assert_eq!(regularity_class(&square()), GraphClass::Polygon);
        let pts = GeometricGraph::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(1, 3),
                Point::from_ints(5, 1),
            ],
            vec![],
        )
        .unwrap();
        assert_eq!(regularity_class(&pts), GraphClass::PointSet);
        assert_eq!(lower_bound(&pts), Some(ratio(2, 3)));
        assert_eq!(lower_bound(&square()), Some(ratio(4, 7)));

        let path = GeometricGraph::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(2, 1),
                Point::from_ints(4, 0),
            ],
            vec![(0, 1), (1, 2)],
        )
        .unwrap();
        assert_eq!(regularity_class(&path), GraphClass::Other);
        assert_eq!(lower_bound(&path), None);

        let triangle = GeometricGraph::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(4, 0),
                Point::from_ints(1, 3),
            ],
            vec![(0, 1), (1, 2), (2, 0)],
        )
        .unwrap();
        assert_eq!(regularity_class(&triangle), GraphClass::Polygon);
        assert_eq!(lower_bound(&triangle), None);
    }

    #[test]
    fn polygon_face_facts_square() {
        let facts = polygon_face_facts(&square(), &diagonal()).unwrap();
        assert_eq!(facts.face_count, 3);
        assert_eq!(facts.nu_plus_sigma, 4);
        assert!(facts.holds);
        assert!(matches!(
            polygon_face_facts(&square(), &Matching::empty()),
            Err(AnalysisError::NotMaximal)
        ));
    }
}
