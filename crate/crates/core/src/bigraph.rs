//! Directed bigraphs: finite vertex and arrow sets where every arrow is
//! either solid (degree 0) or dotted (degree 1), plus bigraph morphisms,
//! shape classification and connectivity.
//!
//! Vertex and arrow ids are opaque strings supplied by the caller; the dense
//! indices [`VertexId`] and [`ArrowId`] are an internal detail and never
//! appear in rendered output.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Index of a vertex inside one [`Bigraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Index of an arrow inside one [`Bigraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowId(pub usize);

/// Arrow type: solid arrows have degree 0, dotted arrows degree 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Solid,
    Dotted,
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Solid => write!(f, "solid"),
            Degree::Dotted => write!(f, "dotted"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
    pub degree: Degree,
}

/// Raw arrow description used when assembling a bigraph from named parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
    pub degree: Degree,
}

/// A single violation found while checking the bigraph invariants.
///
/// Violations are data, not failures: they name the offending entity so a
/// report can be rendered for the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BigraphViolation {
    DuplicateVertex { name: String },
    DuplicateArrow { name: String },
    UnknownSource { arrow: String, vertex: String },
    UnknownTarget { arrow: String, vertex: String },
}

impl fmt::Display for BigraphViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigraphViolation::DuplicateVertex { name } => {
                write!(f, "duplicate vertex id `{name}`")
            }
            BigraphViolation::DuplicateArrow { name } => write!(f, "duplicate arrow id `{name}`"),
            BigraphViolation::UnknownSource { arrow, vertex } => {
                write!(f, "arrow `{arrow}` has unknown source vertex `{vertex}`")
            }
            BigraphViolation::UnknownTarget { arrow, vertex } => {
                write!(f, "arrow `{arrow}` has unknown target vertex `{vertex}`")
            }
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BigraphError {
    #[error("invalid bigraph: {}", render_violations(.0))]
    Invalid(Vec<BigraphViolation>),
    #[error("bigraph is disconnected")]
    Disconnected,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("morphism does not commute with source/target/degree at arrow `{0}`")]
    NotStructurePreserving(String),
    #[error("morphism map has wrong length")]
    MapLength,
}

fn render_violations(vs: &[BigraphViolation]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// Finite bigraph. Vertex and arrow order is the declaration order, which
/// downstream consumers (forms, reports) rely on for determinism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bigraph {
    vertex_names: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: BTreeMap<String, VertexId>,
    arrow_index: BTreeMap<String, ArrowId>,
}

/// Checks the raw parts against the bigraph invariants without building.
///
/// Empty report iff ids are unique and every arrow endpoint names a vertex.
pub fn validate_bigraph(vertices: &[String], arrows: &[ArrowSpec]) -> Vec<BigraphViolation> {
    let mut report = Vec::new();
    let mut seen_v: BTreeMap<&str, ()> = BTreeMap::new();
    for v in vertices {
        if seen_v.insert(v, ()).is_some() {
            report.push(BigraphViolation::DuplicateVertex { name: v.clone() });
        }
    }
    let mut seen_a: BTreeMap<&str, ()> = BTreeMap::new();
    for a in arrows {
        if seen_a.insert(&a.name, ()).is_some() {
            report.push(BigraphViolation::DuplicateArrow {
                name: a.name.clone(),
            });
        }
        if !seen_v.contains_key(a.source.as_str()) {
            report.push(BigraphViolation::UnknownSource {
                arrow: a.name.clone(),
                vertex: a.source.clone(),
            });
        }
        if !seen_v.contains_key(a.target.as_str()) {
            report.push(BigraphViolation::UnknownTarget {
                arrow: a.name.clone(),
                vertex: a.target.clone(),
            });
        }
    }
    report
}

impl Bigraph {
    /// Builds a bigraph from named parts, refusing invalid input with the
    /// full violation report.
    pub fn new(vertices: Vec<String>, arrows: Vec<ArrowSpec>) -> Result<Self, BigraphError> {
        let report = validate_bigraph(&vertices, &arrows);
        if !report.is_empty() {
            return Err(BigraphError::Invalid(report));
        }
        let vertex_index: BTreeMap<String, VertexId> = vertices
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), VertexId(i)))
            .collect();
        let arrow_index: BTreeMap<String, ArrowId> = arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.name.clone(), ArrowId(i)))
            .collect();
        let arrows = arrows
            .into_iter()
            .map(|a| Arrow {
                source: vertex_index[&a.source],
                target: vertex_index[&a.target],
                name: a.name,
                degree: a.degree,
            })
            .collect();
        Ok(Bigraph {
            vertex_names: vertices,
            arrows,
            vertex_index,
            arrow_index,
        })
    }

    pub fn builder() -> BigraphBuilder {
        BigraphBuilder::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id.0]
    }

    pub fn vertex_name(&self, id: VertexId) -> &str {
        &self.vertex_names[id.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId, BigraphError> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| BigraphError::UnknownVertex(name.to_string()))
    }

    pub fn arrow_id(&self, name: &str) -> Result<ArrowId, BigraphError> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| BigraphError::UnknownArrow(name.to_string()))
    }

    /// The lexicographically least vertex by name, used as the default base
    /// point for spanning trees and coverings.
    pub fn least_vertex(&self) -> Option<VertexId> {
        self.vertex_index.values().next().copied()
    }

    /// Arrows from `a` to `b` in declaration order.
    pub fn arrows_between(&self, a: VertexId, b: VertexId) -> Vec<ArrowId> {
        self.arrow_ids()
            .filter(|&id| self.arrow(id).source == a && self.arrow(id).target == b)
            .collect()
    }

    /// Total incidence `|e^{-1}(v)| + |s^{-1}(v)|`; a loop counts twice.
    pub fn incidence(&self, v: VertexId) -> usize {
        self.arrows
            .iter()
            .map(|a| (a.source == v) as usize + (a.target == v) as usize)
            .sum()
    }

    /// The sub-bigraph induced by the given vertex and arrow subsets, with
    /// the id remappings into the new graph. Arrow endpoints must lie in the
    /// vertex subset.
    pub(crate) fn induced(
        &self,
        vertices: &[VertexId],
        arrows: &[ArrowId],
    ) -> (Bigraph, BTreeMap<VertexId, VertexId>, BTreeMap<ArrowId, ArrowId>) {
        let mut vs: Vec<VertexId> = vertices.to_vec();
        vs.sort();
        vs.dedup();
        let mut ars: Vec<ArrowId> = arrows.to_vec();
        ars.sort();
        ars.dedup();
        let vmap: BTreeMap<VertexId, VertexId> = vs
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, VertexId(i)))
            .collect();
        let amap: BTreeMap<ArrowId, ArrowId> = ars
            .iter()
            .enumerate()
            .map(|(i, &a)| (a, ArrowId(i)))
            .collect();
        let names = vs.iter().map(|&v| self.vertex_names[v.0].clone()).collect();
        let specs = ars
            .iter()
            .map(|&a| {
                let arrow = self.arrow(a);
                ArrowSpec {
                    name: arrow.name.clone(),
                    source: self.vertex_names[arrow.source.0].clone(),
                    target: self.vertex_names[arrow.target.0].clone(),
                    degree: arrow.degree,
                }
            })
            .collect();
        let g = Bigraph::new(names, specs).expect("induced subgraph is valid");
        (g, vmap, amap)
    }
}

/// Incremental construction helper; mostly used by tests and the parser.
#[derive(Debug, Default)]
pub struct BigraphBuilder {
    vertices: Vec<String>,
    arrows: Vec<ArrowSpec>,
}

impl BigraphBuilder {
    pub fn vertex(mut self, name: &str) -> Self {
        self.vertices.push(name.to_string());
        self
    }

    pub fn vertices<'a>(mut self, names: impl IntoIterator<Item = &'a str>) -> Self {
        self.vertices.extend(names.into_iter().map(String::from));
        self
    }

    pub fn arrow(mut self, name: &str, source: &str, target: &str, degree: Degree) -> Self {
        self.arrows.push(ArrowSpec {
            name: name.to_string(),
            source: source.to_string(),
            target: target.to_string(),
            degree,
        });
        self
    }

    pub fn solid(self, name: &str, source: &str, target: &str) -> Self {
        self.arrow(name, source, target, Degree::Solid)
    }

    pub fn dotted(self, name: &str, source: &str, target: &str) -> Self {
        self.arrow(name, source, target, Degree::Dotted)
    }

    pub fn validate(&self) -> Vec<BigraphViolation> {
        validate_bigraph(&self.vertices, &self.arrows)
    }

    pub fn build(self) -> Result<Bigraph, BigraphError> {
        Bigraph::new(self.vertices, self.arrows)
    }
}

/// Which arrows count for reachability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectivityMode {
    /// All arrows (plain connectedness).
    AllArrows,
    /// Solid arrows only (0-connectedness).
    SolidOnly,
}

/// Partition of the vertex set under reachability, direction ignored.
/// Components are sorted by their least vertex; vertices inside a component
/// are sorted.
pub fn connected_components(g: &Bigraph, mode: ConnectivityMode) -> Vec<Vec<VertexId>> {
    let mut uf = UnionFind::new(g.vertex_count());
    for a in g.arrows() {
        if mode == ConnectivityMode::SolidOnly && a.degree != Degree::Solid {
            continue;
        }
        uf.union(a.source.0, a.target.0);
    }
    let mut by_root: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    for v in g.vertices() {
        by_root.entry(uf.find(v.0)).or_default().push(v);
    }
    by_root.into_values().collect()
}

pub fn is_connected(g: &Bigraph, mode: ConnectivityMode) -> bool {
    connected_components(g, mode).len() <= 1
}

/// Shape of a connected bigraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// One vertex, one arrow.
    Loop,
    /// `n` vertices and `n` arrows, every vertex of total incidence 2.
    Circle(usize),
    /// Two endpoints of incidence 1, everything else incidence 2.
    Chain,
    Other,
}

/// Classifies a connected bigraph as loop, circle, chain or other.
pub fn classify_shape(g: &Bigraph) -> Result<Shape, BigraphError> {
    if !is_connected(g, ConnectivityMode::AllArrows) {
        return Err(BigraphError::Disconnected);
    }
    let nv = g.vertex_count();
    let na = g.arrow_count();
    if nv == 1 && na == 1 {
        return Ok(Shape::Loop);
    }
    if nv == na && nv >= 2 && g.vertices().all(|v| g.incidence(v) == 2) {
        return Ok(Shape::Circle(nv));
    }
    let endpoints: Vec<VertexId> = g.vertices().filter(|&v| g.incidence(v) == 1).collect();
    if endpoints.len() == 2
        && g.vertices()
            .all(|v| endpoints.contains(&v) || g.incidence(v) == 2)
    {
        return Ok(Shape::Chain);
    }
    Ok(Shape::Other)
}

/// A morphism of bigraphs: vertex and arrow maps commuting with source and
/// target and preserving degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigraphMorphism {
    pub vertex_map: Vec<VertexId>,
    pub arrow_map: Vec<ArrowId>,
}

impl BigraphMorphism {
    pub fn new(
        src: &Bigraph,
        dst: &Bigraph,
        vertex_map: Vec<VertexId>,
        arrow_map: Vec<ArrowId>,
    ) -> Result<Self, BigraphError> {
        if vertex_map.len() != src.vertex_count() || arrow_map.len() != src.arrow_count() {
            return Err(BigraphError::MapLength);
        }
        if vertex_map.iter().any(|v| v.0 >= dst.vertex_count())
            || arrow_map.iter().any(|a| a.0 >= dst.arrow_count())
        {
            return Err(BigraphError::MapLength);
        }
        for id in src.arrow_ids() {
            let a = src.arrow(id);
            let img = dst.arrow(arrow_map[id.0]);
            if img.source != vertex_map[a.source.0]
                || img.target != vertex_map[a.target.0]
                || img.degree != a.degree
            {
                return Err(BigraphError::NotStructurePreserving(a.name.clone()));
            }
        }
        Ok(BigraphMorphism {
            vertex_map,
            arrow_map,
        })
    }

    pub fn identity(g: &Bigraph) -> Self {
        BigraphMorphism {
            vertex_map: g.vertices().collect(),
            arrow_map: g.arrow_ids().collect(),
        }
    }

    pub fn apply_vertex(&self, v: VertexId) -> VertexId {
        self.vertex_map[v.0]
    }

    pub fn apply_arrow(&self, a: ArrowId) -> ArrowId {
        self.arrow_map[a.0]
    }
}

/// Plain union-find over dense indices.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when the two classes were distinct. The smaller root
    /// index wins, keeping class representatives stable.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Bigraph {
        Bigraph::builder()
            .vertices(["1", "2", "3"])
            .solid("a", "1", "2")
            .solid("b", "2", "3")
            .build()
            .unwrap()
    }

    #[test]
    fn smallest_bigraph_is_valid() {
        let report = validate_bigraph(&["V".to_string()], &[]);
        assert!(report.is_empty());
    }

    #[test]
    fn dangling_target_is_reported() {
        let report = validate_bigraph(
            &["A".to_string()],
            &[ArrowSpec {
                name: "x".into(),
                source: "A".into(),
                target: "B".into(),
                degree: Degree::Solid,
            }],
        );
        assert_eq!(
            report,
            vec![BigraphViolation::UnknownTarget {
                arrow: "x".into(),
                vertex: "B".into()
            }]
        );
    }

    #[test]
    fn chain_is_valid() {
        let g = chain3();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.arrow_count(), 2);
    }

    #[test]
    fn shape_loop() {
        let g = Bigraph::builder()
            .vertex("V")
            .solid("l", "V", "V")
            .build()
            .unwrap();
        assert_eq!(classify_shape(&g).unwrap(), Shape::Loop);
    }

    #[test]
    fn shape_circle() {
        let g = Bigraph::builder()
            .vertices(["1", "2", "3"])
            .solid("a", "1", "2")
            .solid("b", "2", "3")
            .solid("c", "3", "1")
            .build()
            .unwrap();
        assert_eq!(classify_shape(&g).unwrap(), Shape::Circle(3));
    }

    #[test]
    fn shape_chain() {
        assert_eq!(classify_shape(&chain3()).unwrap(), Shape::Chain);
    }

    #[test]
    fn shape_rejects_disconnected() {
        let g = Bigraph::builder().vertices(["A", "B"]).build().unwrap();
        assert_eq!(classify_shape(&g), Err(BigraphError::Disconnected));
    }

    #[test]
    fn components_solid_only() {
        let g = Bigraph::builder()
            .vertices(["A", "B"])
            .dotted("phi", "A", "B")
            .build()
            .unwrap();
        assert_eq!(connected_components(&g, ConnectivityMode::AllArrows).len(), 1);
        assert_eq!(connected_components(&g, ConnectivityMode::SolidOnly).len(), 2);
    }

    #[test]
    fn components_no_arrows() {
        let g = Bigraph::builder().vertices(["A", "B", "C"]).build().unwrap();
        assert_eq!(connected_components(&g, ConnectivityMode::AllArrows).len(), 3);
    }

    #[test]
    fn chain_components_single() {
        let g = chain3();
        for mode in [ConnectivityMode::AllArrows, ConnectivityMode::SolidOnly] {
            assert_eq!(connected_components(&g, mode).len(), 1);
        }
    }

    #[test]
    fn morphism_must_preserve_structure() {
        let g = chain3();
        // collapse everything onto vertex 1 with arrow a: endpoints break
        let bad = BigraphMorphism::new(
            &g,
            &g,
            vec![VertexId(0); 3],
            vec![ArrowId(0), ArrowId(0)],
        );
        assert!(bad.is_err());
        assert!(BigraphMorphism::new(
            &g,
            &g,
            g.vertices().collect(),
            g.arrow_ids().collect()
        )
        .is_ok());
    }

    #[test]
    fn morphism_preserves_degree_and_endpoints_exhaustively() {
        let g = Bigraph::builder()
            .vertices(["X", "Y"])
            .solid("a", "X", "Y")
            .solid("b", "X", "Y")
            .dotted("phi", "X", "Y")
            .build()
            .unwrap();
        // swap the two solid arrows
        let m = BigraphMorphism::new(
            &g,
            &g,
            vec![VertexId(0), VertexId(1)],
            vec![ArrowId(1), ArrowId(0), ArrowId(2)],
        )
        .unwrap();
        for id in g.arrow_ids() {
            let a = g.arrow(id);
            let img = g.arrow(m.apply_arrow(id));
            assert_eq!(img.degree, a.degree);
            assert_eq!(img.source, m.apply_vertex(a.source));
            assert_eq!(img.target, m.apply_vertex(a.target));
        }
    }
}
