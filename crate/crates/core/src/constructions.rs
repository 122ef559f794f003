//! Generators for the extremal instance families, each bundled with a
//! machine-checked certificate.
//!
//! Figure-derived layouts are realized as explicit rational coordinates and
//! every generated certificate is re-verified before being returned, so the
//! correctness of a family rests on the verifier rather than on visual
//! fidelity to any drawing. "Tiny" and "close to" placements use a
//! shrink-and-verify loop: place at scale 2^-t and retry with larger t until
//! the exact checks pass.

use crate::analysis::{regularity_class, GraphClass};
use crate::geometry::{rat, ratio, Point, Rational};
use crate::graph::{
    check_compatible, edge, is_maximal, Edge, GeometricGraph, Matching,
};
use crate::solver::{count_perfect_compatible, SolveStatus};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("certificate verification failed: {0}")]
    Verification(#[from] CertificateError),
    #[error("no valid realization found: {0}")]
    Realization(String),
}

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("graph invariant violated: {0}")]
    Graph(#[from] crate::graph::GraphViolation),
    #[error("matching incompatible: {0}")]
    Matching(#[from] crate::graph::CompatibilityError),
    #[error("claimed {field} = {claimed}, found {actual}")]
    CountMismatch {
        field: &'static str,
        claimed: usize,
        actual: usize,
    },
    #[error("claimed maximality = {0}, found {1}")]
    MaximalityMismatch(bool, bool),
    #[error("claimed class {0}, found {1}")]
    ClassMismatch(GraphClass, GraphClass),
    #[error("vertices are not in general position")]
    NotGeneralPosition,
}

/// What a generated instance claims about itself.
#[derive(Debug, Clone)]
pub struct Claims {
    pub vertices: usize,
    pub edges: usize,
    pub matching_size: usize,
    pub matching_maximal: bool,
    pub class: GraphClass,
}

/// A generated (G, M) pair bundled with its claims. Certificates are
/// verified, never trusted: [`ConstructionCertificate::verify`] re-runs
/// every check from scratch.
#[derive(Debug, Clone)]
pub struct ConstructionCertificate {
    pub graph: GeometricGraph,
    pub matching: Matching,
    pub claims: Claims,
}

impl ConstructionCertificate {
    /// Re-run validation, compatibility, maximality and count checks.
    pub fn verify(&self) -> Result<(), CertificateError> {
        self.graph.validate()?;
        if !self.graph.is_general_position() {
            return Err(CertificateError::NotGeneralPosition);
        }
        let check = |field, claimed, actual| {
            if claimed != actual {
                Err(CertificateError::CountMismatch {
                    field,
                    claimed,
                    actual,
                })
            } else {
                Ok(())
            }
        };
        check("vertices", self.claims.vertices, self.graph.vertex_count())?;
        check("edges", self.claims.edges, self.graph.edge_count())?;
        check("matching-size", self.claims.matching_size, self.matching.len())?;
        check_compatible(&self.graph, &self.matching)?;
        let maximal = is_maximal(&self.graph, &self.matching);
        if maximal != self.claims.matching_maximal {
            return Err(CertificateError::MaximalityMismatch(
                self.claims.matching_maximal,
                maximal,
            ));
        }
        let class = regularity_class(&self.graph);
        if class != self.claims.class {
            return Err(CertificateError::ClassMismatch(self.claims.class, class));
        }
        Ok(())
    }

    fn build(
        graph: GeometricGraph,
        matching: Matching,
        matching_maximal: bool,
        class: GraphClass,
    ) -> Result<Self, GenError> {
        let claims = Claims {
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            matching_size: matching.len(),
            matching_maximal,
            class,
        };
        let cert = ConstructionCertificate {
            graph,
            matching,
            claims,
        };
        cert.verify()?;
        Ok(cert)
    }
}

/// Clear denominators so every coordinate is an integer; exact predicates
/// are invariant under uniform scaling and integer coordinates keep the
/// big-instance verification fast.
fn scale_to_integers(points: &mut [Point]) {
    let mut lcm = BigInt::one();
    for p in points.iter() {
        lcm = num_integer::lcm(lcm, p.x.denom().clone());
        lcm = num_integer::lcm(lcm, p.y.denom().clone());
    }
    if lcm.is_one() {
        return;
    }
    let factor = Rational::from_integer(lcm);
    for p in points.iter_mut() {
        p.x = &p.x * &factor;
        p.y = &p.y * &factor;
    }
}

fn parabola_point(i: i64) -> Point {
    Point::from_ints(i, i * i)
}

/// Convex polygon on a parabola arc; negative control for the perfect
/// matching decision (even convex polygons admit none).
pub fn gen_convex_polygon(n: usize) -> Result<ConstructionCertificate, GenError> {
    if n < 3 {
        return Err(GenError::ParameterRange(format!(
            "convex polygon needs n >= 3, got {n}"
        )));
    }
    let points: Vec<Point> = (0..n as i64).map(parabola_point).collect();
    let edges: Vec<Edge> = (0..n).map(|i| edge(i, (i + 1) % n)).collect();
    let graph = GeometricGraph::new(points, edges).map_err(CertificateError::from)?;
    let cert = ConstructionCertificate::build(
        graph,
        Matching::empty(),
        n == 3,
        GraphClass::Polygon,
    )?;
    if n % 2 == 0 && n <= 12 {
        let count = count_perfect_compatible(&cert.graph, 1 << 24)
            .map_err(|e| GenError::Realization(e.to_string()))?;
        if count != 0 {
            return Err(GenError::Realization(format!(
                "convex polygon on {n} vertices unexpectedly admits {count} perfect matchings"
            )));
        }
    }
    Ok(cert)
}

/// 0-regular family meeting the (n-1)/3 bound: 3k+1 points on a convex arc
/// with k chords, each capping the point nested under it.
pub fn gen_points_tight(k: usize) -> Result<ConstructionCertificate, GenError> {
    if k < 1 {
        return Err(GenError::ParameterRange("points-tight needs k >= 1".into()));
    }
    let n = 3 * k + 1;
    let points: Vec<Point> = (0..n as i64).map(parabola_point).collect();
    let graph = GeometricGraph::new(points, vec![]).map_err(CertificateError::from)?;
    let matching = Matching::new((0..k).map(|j| (3 * j, 3 * j + 2)))
        .expect("chords are vertex-disjoint");
    ConstructionCertificate::build(graph, matching, true, GraphClass::PointSet)
}

/// Midpoint of an edge's endpoints plus an outward offset, with two
/// endpoints of a tiny parallel segment around it.
fn satellite_segment(a: &Point, b: &Point, delta: &Rational) -> (Point, Point) {
    let mid = a.midpoint(b);
    let d = crate::geometry::direction(a, b);
    // Rightward normal of the travel direction: outward for ccw polygons.
    let nx = d.y.clone();
    let ny = -d.x.clone();
    let cx = &mid.x + &(delta * &nx);
    let cy = &mid.y + &(delta * &ny);
    let span = delta * &ratio(1, 3);
    (
        Point::new(&cx - &(&span * &d.x), &cy - &(&span * &d.y)),
        Point::new(&cx + &(&span * &d.x), &cy + &(&span * &d.y)),
    )
}

/// 1-regular family meeting the (n-2)/6 bound for k >= 2: an alternating
/// cycle of k segments and k matching chords on a convex arc, with a tiny
/// satellite segment hidden behind every cycle edge and one more inside.
///
/// No 8-vertex instance can meet the bound: a size-1 maximal matching would
/// force nu = sigma = 0 in the counting inequality, and with only two
/// matched vertices some segment then joins a matched vertex to an
/// unmatched degree-1 vertex, making nu >= 1.
pub fn gen_matching_tight(k: usize) -> Result<ConstructionCertificate, GenError> {
    if k < 2 {
        return Err(GenError::ParameterRange(
            "matching-tight needs k >= 2; the k = 1 bound value is unattainable".into(),
        ));
    }
    let ring = 2 * k;
    let mut last_error = String::new();
    for t in 2..34 {
        let delta = Rational::new(BigInt::one(), BigInt::from(1i64 << t));
        let mut points: Vec<Point> = (0..ring as i64).map(parabola_point).collect();
        let mut g_edges: Vec<Edge> = Vec::new();
        let mut m_pairs: Vec<Edge> = Vec::new();
        for i in 0..ring {
            let e = edge(i, (i + 1) % ring);
            if i % 2 == 0 {
                g_edges.push(e);
            } else {
                m_pairs.push(e);
            }
        }
        // Satellites behind every cycle edge (both segment and chord hosts).
        for i in 0..ring {
            let (a, b) = (i, (i + 1) % ring);
            let (s1, s2) = satellite_segment(
                &points[a].clone(),
                &points[b].clone(),
                &delta,
            );
            let idx = points.len();
            points.push(s1);
            points.push(s2);
            g_edges.push(edge(idx, idx + 1));
        }
        // One segment inside the ring.
        let centroid_x: Rational = points[..ring]
            .iter()
            .map(|p| p.x.clone())
            .fold(Rational::zero(), |a, b| a + b)
            / rat(ring as i64);
        let top = points[..ring]
            .iter()
            .map(|p| p.y.clone())
            .fold(Rational::zero(), |a, b| a.max(b));
        let inner_y = &top / &rat(2);
        let idx = points.len();
        points.push(Point::new(centroid_x.clone() - &delta, inner_y.clone()));
        points.push(Point::new(
            centroid_x.clone() + &delta,
            &inner_y + &(&delta / &rat(7)),
        ));
        g_edges.push(edge(idx, idx + 1));

        scale_to_integers(&mut points);
        let graph = match GeometricGraph::new(points, g_edges) {
            Ok(g) => g,
            Err(e) => {
                last_error = e.to_string();
                continue;
            }
        };
        let matching = Matching::new(m_pairs.clone()).expect("alternating chords are disjoint");
        match ConstructionCertificate::build(graph, matching, true, GraphClass::PerfectMatching) {
            Ok(cert) => return Ok(cert),
            Err(e) => {
                last_error = e.to_string();
                continue;
            }
        }
    }
    Err(GenError::Realization(format!(
        "matching-tight satellites did not verify at any scale (last: {last_error})"
    )))
}

/// k points on the unit circle via the rational parametrization
/// ((1-t^2)/(1+t^2), 2t/(1+t^2)), with t chosen as a rational approximation
/// of tan(theta/2) for evenly spread angles.
fn rational_circle(k: usize, scale: i64) -> Vec<Point> {
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let theta = -std::f64::consts::PI
            + 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / k as f64;
        let t = (theta / 2.0).tan();
        let t = ratio((t * 512.0).round() as i64, 512);
        let one = rat(1);
        let t2 = &t * &t;
        let denom = &one + &t2;
        let x = (&one - &t2) / &denom * rat(scale);
        let y = &t * &rat(2) / &denom * rat(scale);
        out.push(Point::new(x, y));
    }
    out
}

fn mix(a: &Point, b: &Point, t: &Rational) -> Point {
    let one = rat(1);
    let s = &one - t;
    Point::new(&(&s * &a.x) + &(t * &b.x), &(&s * &a.y) + &(t * &b.y))
}

/// A tiny triangle around a center point; the spread is relative to delta.
fn tiny_triangle(c: &Point, delta: &Rational) -> [Point; 3] {
    let d1 = delta * &ratio(1, 1);
    let d2 = delta * &ratio(2, 3);
    let d3 = delta * &ratio(1, 3);
    [
        Point::new(&c.x - &d1, &c.y - &d3),
        Point::new(&c.x + &d2, &c.y - &d2),
        Point::new(&c.x + &d3, &c.y + &d1),
    ]
}

/// 2-regular family meeting the (n-3)/11 bound for r >= 2 (k = r+1 nested
/// rings): an outer k-gon, an inner k-gon twisted by one step, k matching
/// chords between them, and 3k+1 isolated triangles hidden one per pocket.
///
/// The bound value is unattainable at n = 14 and n = 25: meeting it forces
/// every unmatched vertex onto an empty all-unmatched triangle and each
/// such triangle into its own blocked pocket, and the matched subgraph on
/// 2(r+1) vertices cannot supply 3(r+1)+1 pockets until r >= 2.
pub fn gen_cycles_tight(r: usize) -> Result<ConstructionCertificate, GenError> {
    if r < 2 {
        return Err(GenError::ParameterRange(
            "cycles-tight needs r >= 2; the r = 0 and r = 1 bound values are unattainable".into(),
        ));
    }
    let k = r + 1;
    let outer = rational_circle(k, 1 << 20);
    let rho = ratio(4, 5);
    let mut last_error = String::new();
    for t in 4..30 {
        let delta = Rational::new(BigInt::one(), BigInt::from(1i64 << t));
        let scale_delta = &delta * &rat(1 << 20);
        let mut points: Vec<Point> = Vec::new();
        let mut edges_list: Vec<Edge> = Vec::new();
        let mut m_pairs: Vec<Edge> = Vec::new();

        // Outer ring A_0..A_{k-1}.
        for p in &outer {
            points.push(p.clone());
        }
        for j in 0..k {
            edges_list.push(edge(j, (j + 1) % k));
        }
        // Inner ring B_j = rho * A_{j+1}: a scaled copy twisted one step.
        let origin = Point::from_ints(0, 0);
        for j in 0..k {
            points.push(mix(&origin, &outer[(j + 1) % k], &rho));
        }
        for j in 0..k {
            edges_list.push(edge(k + j, k + (j + 1) % k));
        }
        // Matching chords A_j -- B_j skim along the outer sides.
        for j in 0..k {
            m_pairs.push(edge(j, k + j));
        }

        let mut add_triangle = |points: &mut Vec<Point>, edges_list: &mut Vec<Edge>, c: &Point| {
            let idx = points.len();
            for p in tiny_triangle(c, &scale_delta) {
                points.push(p);
            }
            edges_list.push(edge(idx, idx + 1));
            edges_list.push(edge(idx + 1, idx + 2));
            edges_list.push(edge(idx, idx + 2));
        };

        for j in 0..k {
            let a = outer[j].clone();
            let b = outer[(j + 1) % k].clone();
            let bj = mix(&origin, &b, &rho);
            // Outer-arm pocket: between side (A_j, A_{j+1}) and the chord
            // (A_j, B_j); widest near the far end of the side.
            let side_pt = mix(&a, &b, &ratio(5, 8));
            let chord_pt = mix(&a, &bj, &ratio(5, 8));
            let c1 = side_pt.midpoint(&chord_pt);
            add_triangle(&mut points, &mut edges_list, &c1);
            // Inner-arm pocket: between the inner side (B_j, B_{j+1}) and
            // the next chord (A_{j+1}, B_{j+1}).
            let a2 = outer[(j + 1) % k].clone();
            let b2 = mix(&origin, &outer[(j + 2) % k], &rho);
            let chord2_pt = mix(&a2, &b2, &ratio(5, 8));
            let inner_pt = mix(&bj, &b2, &ratio(5, 8));
            let c2 = chord2_pt.midpoint(&inner_pt);
            add_triangle(&mut points, &mut edges_list, &c2);
            // Satellite pocket behind the outer side: push the midpoint
            // radially outward (the ring is centered at the origin).
            let mid = a.midpoint(&b);
            let c3 = Point::new(&mid.x * &(rat(1) + &delta), &mid.y * &(rat(1) + &delta));
            add_triangle(&mut points, &mut edges_list, &c3);
        }
        // One triangle in the inner face.
        add_triangle(&mut points, &mut edges_list, &origin);

        scale_to_integers(&mut points);
        let graph = match GeometricGraph::new(points, edges_list) {
            Ok(g) => g,
            Err(e) => {
                last_error = e.to_string();
                continue;
            }
        };
        let matching = Matching::new(m_pairs).expect("chords are vertex-disjoint");
        match ConstructionCertificate::build(graph, matching, true, GraphClass::DisjointPolygons) {
            Ok(cert) => return Ok(cert),
            Err(e) => {
                last_error = e.to_string();
                continue;
            }
        }
    }
    Err(GenError::Realization(format!(
        "cycles-tight pockets did not verify at any scale (last: {last_error})"
    )))
}

/// The explicit (n, m) family with a maximal matching of exactly
/// ceil((2n - m + 3) / 13) edges.
pub fn gen_lemma4(n: usize, m: usize) -> Result<ConstructionCertificate, GenError> {
    if n < 5 || 10 * m < 7 * n + 95 || m > 2 * n + 2 {
        return Err(GenError::ParameterRange(format!(
            "lemma4 needs n >= 5 and (7n+95)/10 <= m <= 2n+2, got n={n} m={m}"
        )));
    }
    let num = 2 * n + 3 - m;
    let k = num.div_ceil(13);
    let m_prime = 2 * n + 3 - 13 * k;
    let extra = m - m_prime;
    let t_vertices = n - 10 * k + 6;
    if t_vertices < 2 {
        return Err(GenError::ParameterRange(
            "residual triangulation needs at least 2 vertices".into(),
        ));
    }
    if extra > 0 && t_vertices < extra + 3 {
        return Err(GenError::ParameterRange(format!(
            "{extra} interior points need a triangulation on at least {} vertices, have {t_vertices}",
            extra + 3
        )));
    }

    for t in 3..34 {
        match try_lemma4(n, m, k, extra, t_vertices, t) {
            Ok(cert) => return Ok(cert),
            Err(_) => continue,
        }
    }
    Err(GenError::Realization(
        "lemma4 placement did not verify at any scale".into(),
    ))
}

enum Attempt {
    Failed,
}

impl From<CertificateError> for Attempt {
    fn from(_: CertificateError) -> Self {
        Attempt::Failed
    }
}

impl From<GenError> for Attempt {
    fn from(_: GenError) -> Self {
        Attempt::Failed
    }
}

fn try_lemma4(
    n: usize,
    m: usize,
    k: usize,
    extra: usize,
    t_vertices: usize,
    t: u32,
) -> Result<ConstructionCertificate, Attempt> {
    let delta = Rational::new(BigInt::one(), BigInt::from(1i64 << t));
    let hull = 2 * k;
    let mut points: Vec<Point> = (0..hull as i64).map(parabola_point).collect();
    let mut g_edges: Vec<Edge> = Vec::new();
    let m_pairs: Vec<Edge> = (0..k).map(|j| edge(2 * j, 2 * j + 1)).collect();

    // Hull edges not in M, plus a fan triangulation from vertex 0.
    for i in 0..hull {
        let e = edge(i, (i + 1) % hull);
        if !m_pairs.contains(&e) {
            g_edges.push(e);
        }
    }
    for j in 2..hull - 1 {
        g_edges.push(edge(0, j));
    }

    // One tiny isolated edge inside each fan triangle (0, j, j+1).
    for j in 1..hull - 1 {
        let centroid = {
            let a = &points[0];
            let b = &points[j];
            let c = &points[j + 1];
            Point::new(
                (&a.x + &b.x + &c.x) / rat(3),
                (&a.y + &b.y + &c.y) / rat(3),
            )
        };
        let idx = points.len();
        points.push(Point::new(&centroid.x - &delta, centroid.y.clone()));
        points.push(Point::new(
            &centroid.x + &delta,
            &centroid.y + &(&delta / &rat(5)),
        ));
        g_edges.push(edge(idx, idx + 1));
    }

    // A tiny isolated edge outside every hull edge except the closing one.
    let closing = edge(hull - 1, 0);
    for i in 0..hull {
        let e = edge(i, (i + 1) % hull);
        if e == closing {
            continue;
        }
        let (s1, s2) = satellite_segment(&points[i].clone(), &points[(i + 1) % hull].clone(), &delta);
        let idx = points.len();
        points.push(s1);
        points.push(s2);
        g_edges.push(edge(idx, idx + 1));
    }

    // Residual triangulation T close to the closing hull edge, outside.
    let a = points[hull - 1].clone();
    let b = points[0].clone();
    let mid = a.midpoint(&b);
    let d = crate::geometry::direction(&a, &b);
    let (nx, ny) = (d.y.clone(), -d.x.clone());
    let t_hull = t_vertices - extra;
    let t_scale = &delta / &rat(4 * t_vertices.max(2) as i64);
    let mut t_indices = Vec::new();
    for i in 0..t_hull {
        // A small parabola arc laid out along the edge direction, pushed
        // into the outer face.
        let u = rat(i as i64) - rat((t_hull - 1) as i64) / rat(2);
        let along = &u * &t_scale;
        let lift = &u * &u * &t_scale / rat(97) + &delta / &rat(3);
        let idx = points.len();
        t_indices.push(idx);
        points.push(Point::new(
            &mid.x + &(&along * &d.x) + &(&lift * &nx),
            &mid.y + &(&along * &d.y) + &(&lift * &ny),
        ));
    }
    // Fan triangulation of the arc, then interior points nested into the
    // first face, each connected to its containing triangle.
    for w in t_indices.windows(2) {
        g_edges.push(edge(w[0], w[1]));
    }
    for j in 2..t_hull {
        g_edges.push(edge(t_indices[0], t_indices[j]));
    }
    if extra > 0 {
        let mut face = [t_indices[0], t_indices[1], t_indices[2]];
        for _ in 0..extra {
            let c = {
                let a = &points[face[0]];
                let b = &points[face[1]];
                let cc = &points[face[2]];
                Point::new(
                    (&a.x + &b.x + &cc.x) / rat(3),
                    (&a.y + &b.y + &cc.y) / rat(3),
                )
            };
            let idx = points.len();
            points.push(c);
            g_edges.push(edge(idx, face[0]));
            g_edges.push(edge(idx, face[1]));
            g_edges.push(edge(idx, face[2]));
            face = [idx, face[0], face[1]];
        }
    }

    scale_to_integers(&mut points);
    let graph = GeometricGraph::new(points, g_edges).map_err(|_| Attempt::Failed)?;
    if graph.vertex_count() != n || graph.edge_count() != m {
        return Err(Attempt::Failed);
    }
    let matching = Matching::new(m_pairs).expect("hull pairs are disjoint");
    Ok(ConstructionCertificate::build(
        graph,
        matching,
        true,
        GraphClass::Other,
    )?)
}

fn sample_general_position(
    rng: &mut ChaCha8Rng,
    n: usize,
    range: i64,
) -> Option<Vec<Point>> {
    'outer: for _ in 0..10_000 {
        let mut pts = Vec::with_capacity(n);
        for _ in 0..n {
            pts.push(Point::from_ints(
                rng.random_range(0..=range),
                rng.random_range(0..=range),
            ));
        }
        if crate::geometry::is_general_position(&pts) {
            return Some(pts);
        }
        continue 'outer;
    }
    None
}

/// Random point set in general position, deterministic per seed.
pub fn random_point_set(n: usize, seed: u64) -> Result<GeometricGraph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = (4 * (n * n).max(25)) as i64;
    let pts = sample_general_position(&mut rng, n, range)
        .ok_or_else(|| GenError::Realization("general-position sampling failed".into()))?;
    GeometricGraph::new(pts, vec![]).map_err(|e| GenError::Verification(e.into()))
}

/// Random noncrossing perfect matching drawing (1-regular graph): sample
/// general-position points and pair them in lexicographic order, which
/// keeps consecutive pairs in disjoint vertical strips.
pub fn random_segments(n: usize, seed: u64) -> Result<GeometricGraph, GenError> {
    if n % 2 != 0 || n == 0 {
        return Err(GenError::ParameterRange(format!(
            "segment class needs even n >= 2, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = (4 * (n * n).max(25)) as i64;
    for _ in 0..100 {
        let Some(mut pts) = sample_general_position(&mut rng, n, range) else {
            continue;
        };
        pts.sort();
        let edges: Vec<Edge> = (0..n / 2).map(|i| edge(2 * i, 2 * i + 1)).collect();
        if let Ok(g) = GeometricGraph::new(pts, edges) {
            return Ok(g);
        }
    }
    Err(GenError::Realization("segment sampling failed".into()))
}

/// Random simple polygon by 2-opt untangling of a random cyclic order.
/// Every swap strictly shortens the tour, so untangling terminates.
pub fn random_polygon(n: usize, seed: u64) -> Result<GeometricGraph, GenError> {
    if n < 3 {
        return Err(GenError::ParameterRange(format!(
            "polygon needs n >= 3, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = (4 * (n * n).max(25)) as i64;
    for _ in 0..100 {
        let Some(pts) = sample_general_position(&mut rng, n, range) else {
            continue;
        };
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            order.swap(i, j);
        }
        if untangle(&pts, &mut order) {
            let edges: Vec<Edge> = (0..n).map(|i| edge(order[i], order[(i + 1) % n])).collect();
            if let Ok(g) = GeometricGraph::new(pts, edges) {
                return Ok(g);
            }
        }
    }
    Err(GenError::Realization("polygon sampling failed".into()))
}

fn untangle(pts: &[Point], order: &mut Vec<usize>) -> bool {
    let n = order.len();
    for _ in 0..100_000 {
        let mut crossing = None;
        'search: for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = (order[i], order[(i + 1) % n]);
                let (c, d) = (order[j], order[(j + 1) % n]);
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let rel = crate::geometry::classify_segments(
                    &pts[a], &pts[b], &pts[c], &pts[d],
                )
                .expect("points distinct");
                if rel == crate::geometry::SegmentRelation::ProperCrossing {
                    crossing = Some((i, j));
                    break 'search;
                }
            }
        }
        match crossing {
            None => return true,
            Some((i, j)) => {
                order[i + 1..=j].reverse();
            }
        }
    }
    false
}

/// Random disjoint polygons: a random partition into cycles of length >= 3,
/// each drawn in its own horizontal band.
pub fn random_disjoint_cycles(n: usize, seed: u64) -> Result<GeometricGraph, GenError> {
    if n < 3 {
        return Err(GenError::ParameterRange(format!(
            "cycle class needs n >= 3, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'retry: for _ in 0..100 {
        // Partition n into parts of size >= 3.
        let mut parts = Vec::new();
        let mut rem = n;
        while rem > 0 {
            if rem < 3 {
                continue 'retry;
            }
            let hi = rem.min(6);
            let mut size = rng.random_range(3..=hi);
            if rem - size > 0 && rem - size < 3 {
                size = rem;
                if size > 8 {
                    continue 'retry;
                }
            }
            parts.push(size);
            rem -= size;
        }
        let mut points: Vec<Point> = Vec::new();
        let mut edges_list: Vec<Edge> = Vec::new();
        let mut offset_x = 0i64;
        for (pi, &size) in parts.iter().enumerate() {
            let sub = random_polygon(size, seed.wrapping_add(1 + pi as u64))
                .map_err(|e| GenError::Realization(e.to_string()))?;
            let base = points.len();
            for p in sub.points() {
                points.push(Point::new(&p.x + &rat(offset_x), p.y.clone()));
            }
            for (u, v) in sub.edges() {
                edges_list.push(edge(base + u, base + v));
            }
            offset_x += 8 * (size * size).max(25) as i64 + rng.random_range(1..50);
        }
        if !crate::geometry::is_general_position(&points) {
            continue 'retry;
        }
        if let Ok(g) = GeometricGraph::new(points, edges_list) {
            return Ok(g);
        }
    }
    Err(GenError::Realization("disjoint cycle sampling failed".into()))
}

#[path = "fixtures.rs"]
mod fixtures;
pub use fixtures::{gen_polygon_tight, gen_twin_peaks, TwinPeaksRoles};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{enumerate_maximal, has_perfect_compatible, min_maximal, DEFAULT_NODE_BUDGET};

    #[test]
    fn convex_polygon_basics() {
        assert!(matches!(
            gen_convex_polygon(2),
            Err(GenError::ParameterRange(_))
        ));
        let cert = gen_convex_polygon(4).unwrap();
        assert_eq!(cert.claims.vertices, 4);
        assert_eq!(
            count_perfect_compatible(&cert.graph, 1 << 20).unwrap(),
            0
        );
        let cert = gen_convex_polygon(6).unwrap();
        assert_eq!(
            count_perfect_compatible(&cert.graph, 1 << 20).unwrap(),
            0
        );
        let cert = gen_convex_polygon(3).unwrap();
        assert_eq!(min_maximal(&cert.graph, DEFAULT_NODE_BUDGET).objective, 0);
    }

    #[test]
    fn points_tight_small() {
        let cert = gen_points_tight(1).unwrap();
        assert_eq!(cert.claims.vertices, 4);
        assert_eq!(cert.claims.matching_size, 1);
        let cert = gen_points_tight(3).unwrap();
        assert_eq!(cert.claims.vertices, 10);
        assert_eq!(cert.claims.matching_size, 3);
        for k in 1..=3 {
            let cert = gen_points_tight(k).unwrap();
            assert_eq!(
                min_maximal(&cert.graph, DEFAULT_NODE_BUDGET).objective,
                k,
                "mm mismatch at k={k}"
            );
        }
    }

    #[test]
    fn matching_tight_small() {
        assert!(matches!(
            gen_matching_tight(1),
            Err(GenError::ParameterRange(_))
        ));
        let cert = gen_matching_tight(2).unwrap();
        assert_eq!(cert.claims.vertices, 14);
        assert_eq!(cert.claims.edges, 7);
        assert_eq!(cert.claims.matching_size, 2);
        // The certificate meets the (n-2)/6 bound with equality; the oracle
        // confirms no smaller maximal matching exists.
        let all = enumerate_maximal(&cert.graph, DEFAULT_NODE_BUDGET).unwrap();
        let mm = all.iter().map(|m| m.len()).min().unwrap();
        assert_eq!(mm, 2);
    }

    #[test]
    fn cycles_tight_small() {
        assert!(matches!(
            gen_cycles_tight(0),
            Err(GenError::ParameterRange(_))
        ));
        assert!(matches!(
            gen_cycles_tight(1),
            Err(GenError::ParameterRange(_))
        ));
        let cert = gen_cycles_tight(2).unwrap();
        assert_eq!(cert.claims.vertices, 14 + 22);
        assert_eq!(cert.claims.matching_size, 3);
        assert_eq!(cert.claims.class, GraphClass::DisjointPolygons);
    }

    #[test]
    fn lemma4_reference_values() {
        let cert = gen_lemma4(50, 64).unwrap();
        assert_eq!(cert.claims.vertices, 50);
        assert_eq!(cert.claims.edges, 64);
        assert_eq!(cert.claims.matching_size, 3);
        let cert = gen_lemma4(50, 63).unwrap();
        assert_eq!(cert.claims.matching_size, 4);
        assert!(gen_lemma4(10, 5).is_err());
    }

    #[test]
    fn random_generators_are_deterministic() {
        let a = random_polygon(8, 1).unwrap();
        let b = random_polygon(8, 1).unwrap();
        assert_eq!(a, b);
        let s = random_segments(10, 7).unwrap();
        assert_eq!(regularity_class(&s), GraphClass::PerfectMatching);
        let p = random_point_set(9, 3).unwrap();
        assert_eq!(p.vertex_count(), 9);
        let c = random_disjoint_cycles(9, 5).unwrap();
        assert!(matches!(
            regularity_class(&c),
            GraphClass::DisjointPolygons | GraphClass::Polygon
        ));
    }

    #[test]
    fn perfect_decision_on_twin_peaks_style_controls() {
        // Convex-position point sets admit perfect matchings; even convex
        // polygons never do.
        let pts = GeometricGraph::new(
            (0..6i64).map(parabola_point).collect(),
            vec![],
        )
        .unwrap();
        assert_eq!(
            has_perfect_compatible(&pts, DEFAULT_NODE_BUDGET).status,
            SolveStatus::Optimal
        );
    }
}
