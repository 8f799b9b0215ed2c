//! Cycle matroids of multigraphs and vertex identification.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::setcore::{GroundSet, Subset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// Ground-set element carried by this edge.
    pub label: usize,
    pub u: usize,
    pub v: usize,
}

/// Undirected multigraph with named vertices and labelled edges. Loops and
/// parallel edges are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

impl Multigraph {
    pub fn new() -> Self {
        Multigraph::default()
    }

    /// Builds a graph from `(label, u, v)` triples.
    pub fn from_edges<'a>(edges: impl IntoIterator<Item = (usize, &'a str, &'a str)>) -> Self {
        let mut g = Multigraph::new();
        for (label, u, v) in edges {
            g.add_edge(label, u, v);
        }
        g
    }

    /// Index of the named vertex, adding it if new.
    pub fn add_vertex(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        self.vertices.push(name.to_string());
        self.index.insert(name.to_string(), self.vertices.len() - 1);
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, label: usize, u: &str, v: &str) {
        let u = self.add_vertex(u);
        let v = self.add_vertex(v);
        self.edges.push(Edge { label, u, v });
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertices.len());
        let merges = self.edges.iter().filter(|e| uf.union(e.u, e.v)).count();
        self.vertices.len() - merges
    }

    /// Edge labels must be exactly `1..=n`, each used once.
    fn check_labels(&self) -> Result<()> {
        let n = self.edges.len();
        let mut seen = vec![false; n];
        for e in &self.edges {
            if e.label == 0 || e.label > n {
                return Err(Error::Semantic(format!("edge label {} outside 1..={n}", e.label)));
            }
            if std::mem::replace(&mut seen[e.label - 1], true) {
                return Err(Error::Semantic(format!("edge label {} used twice", e.label)));
            }
        }
        Ok(())
    }

    fn is_forest(&self, edges: Subset, by_label: &[&Edge]) -> bool {
        let mut uf = UnionFind::new(self.vertices.len());
        edges.iter().all(|l| {
            let e = by_label[l - 1];
            uf.union(e.u, e.v)
        })
    }

    /// The cycle matroid on the edge labels: bases are the spanning forests.
    pub fn cycle_matroid(&self, ground: &GroundSet) -> Result<Matroid> {
        self.check_labels()?;
        if ground.size() != self.edges.len() {
            return Err(Error::Semantic(format!(
                "graph has {} edges but the ground set has {} elements",
                self.edges.len(),
                ground.size()
            )));
        }
        let mut by_label: Vec<&Edge> = self.edges.iter().collect();
        by_label.sort_by_key(|e| e.label);
        let rank = self.vertices.len() - self.component_count();
        let bases: Vec<Subset> = ground
            .full()
            .subsets()
            .filter(|s| s.len() == rank && self.is_forest(*s, &by_label))
            .collect();
        Ok(Matroid::trusted(ground.clone(), ground.full(), bases))
    }

    /// Merges each class of `classes` into one vertex named by joining the
    /// class members with `=`. Edges inside a class become loops.
    pub fn identify_vertices(&self, classes: &[Vec<String>]) -> Result<Multigraph> {
        let mut class_of = vec![usize::MAX; self.vertices.len()];
        for (k, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::Semantic("empty class in vertex partition".into()));
            }
            for name in class {
                let &i = self
                    .index
                    .get(name)
                    .ok_or_else(|| Error::Semantic(format!("unknown vertex {name}")))?;
                if class_of[i] != usize::MAX {
                    return Err(Error::Semantic(format!("vertex {name} appears in two classes")));
                }
                class_of[i] = k;
            }
        }
        if let Some(i) = class_of.iter().position(|&k| k == usize::MAX) {
            return Err(Error::Semantic(format!(
                "vertex {} is missing from the partition",
                self.vertices[i]
            )));
        }
        let names: Vec<String> = classes.iter().map(|c| c.join("=")).collect();
        let mut out = Multigraph::new();
        for name in &names {
            out.add_vertex(name);
        }
        for e in &self.edges {
            out.add_edge(e.label, &names[class_of[e.u]], &names[class_of[e.v]]);
        }
        Ok(out)
    }

    /// Identifies each listed pair of vertices; all other vertices stay put.
    pub fn identify_pairs(&self, pairs: &[(String, String)]) -> Result<Multigraph> {
        let mut uf = UnionFind::new(self.vertices.len());
        for (a, b) in pairs {
            let lookup = |name: &String| {
                self.index
                    .get(name)
                    .copied()
                    .ok_or_else(|| Error::Semantic(format!("unknown vertex {name}")))
            };
            uf.union(lookup(a)?, lookup(b)?);
        }
        let mut classes: Vec<Vec<String>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for (i, name) in self.vertices.iter().enumerate() {
            let root = uf.find(i);
            let k = *slot.entry(root).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[k].push(name.clone());
        }
        self.identify_vertices(&classes)
    }
}
