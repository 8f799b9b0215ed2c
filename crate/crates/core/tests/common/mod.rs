#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use matroid_perspective::graphic::Multigraph;
use matroid_perspective::input::InputDocument;
use matroid_perspective::matroid::Matroid;
use matroid_perspective::perspective::{validate_perspective, Perspective};
use matroid_perspective::setcore::{GroundSet, Subset};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const FIXTURE: &str = include_str!("../data/two_triangles.txt");
pub const FIXTURE_GRAPH: &str = include_str!("../data/two_triangles_graph.txt");
pub const GOLDEN_TABLE: &str = include_str!("../data/two_triangles_table.tsv");
pub const GOLDEN_POLYNOMIAL: &str = include_str!("../data/two_triangles_polynomial.txt");

pub fn fixture() -> Perspective {
    InputDocument::parse(FIXTURE).unwrap().perspective().unwrap()
}

pub fn natural(n: usize) -> GroundSet {
    GroundSet::new(n).unwrap()
}

/// Every labelled matroid on `1..=n`: each family of equal-size subsets that
/// passes the basis-exchange check.
pub fn all_matroids(n: usize) -> Vec<Matroid> {
    let ground = natural(n);
    let mut out = Vec::new();
    for r in 0..=n {
        let candidates: Vec<Subset> = ground.full().subsets().filter(|s| s.len() == r).collect();
        for pick in 1u32..(1 << candidates.len()) {
            let family = (0..candidates.len())
                .filter(|i| pick >> i & 1 == 1)
                .map(|i| candidates[i]);
            if let Ok(m) = Matroid::from_bases(&ground, family) {
                out.push(m);
            }
        }
    }
    out
}

/// Circuit systems on `1..=n` drawn at random until `count` distinct ones
/// pass the circuit axioms.
pub fn random_circuit_matroids(n: usize, count: usize, seed: u64) -> Vec<Matroid> {
    let ground = natural(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count && tries < 200_000 {
        tries += 1;
        let k = rng.gen_range(0..=4);
        let mut family: Vec<Subset> = (0..k).map(|_| Subset::from_bits(rng.gen_range(1..1u32 << n))).collect();
        family.sort_by_key(|s| s.bits());
        family.dedup();
        if let Ok(m) = Matroid::from_circuits(&ground, family) {
            if seen.insert(m.bases().to_vec()) {
                out.push(m);
            }
        }
    }
    out
}

/// A multigraph with edges `1..=edges` between random vertices `v0..`.
pub fn random_graph(rng: &mut impl Rng, vertices: usize, edges: usize) -> Multigraph {
    let mut g = Multigraph::new();
    let names: Vec<String> = (0..vertices).map(|i| format!("v{i}")).collect();
    for name in &names {
        g.add_vertex(name);
    }
    for label in 1..=edges {
        let u = &names[rng.gen_range(0..vertices)];
        let v = &names[rng.gen_range(0..vertices)];
        g.add_edge(label, u, v);
    }
    g
}

/// A random set partition of the graph's vertices.
pub fn random_partition(rng: &mut impl Rng, g: &Multigraph) -> Vec<Vec<String>> {
    let n = g.vertices().len();
    let blocks = rng.gen_range(1..=n);
    let mut classes = vec![Vec::new(); blocks];
    let mut names = g.vertices().to_vec();
    names.shuffle(rng);
    for (i, name) in names.into_iter().enumerate() {
        let k = if i < blocks { i } else { rng.gen_range(0..blocks) };
        classes[k].push(name);
    }
    classes
}

/// Graphic pairs `(M(G), M(G / P))` for random graphs and vertex partitions.
pub fn graphic_pairs(count: usize, seed: u64) -> Vec<Perspective> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let vertices = rng.gen_range(1..=5);
            let edges = rng.gen_range(1..=7);
            let g = random_graph(&mut rng, vertices, edges);
            let h = g.identify_vertices(&random_partition(&mut rng, &g)).unwrap();
            let ground = natural(edges);
            Perspective::new(g.cycle_matroid(&ground).unwrap(), h.cycle_matroid(&ground).unwrap()).unwrap()
        })
        .collect()
}

/// Random pairs of labelled matroids on four elements that form a
/// perspective with distinct members.
pub fn abstract_pairs(count: usize, seed: u64) -> Vec<Perspective> {
    let pool = all_matroids(4);
    let mut valid = Vec::new();
    for m in &pool {
        for q in &pool {
            if m != q && validate_perspective(m, q).unwrap() {
                valid.push((m, q));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    valid.shuffle(&mut rng);
    valid
        .into_iter()
        .take(count)
        .map(|(m, q)| Perspective::new(m.clone(), q.clone()).unwrap())
        .collect()
}

pub struct Corpus {
    /// Every matroid that appears on either side of a perspective below.
    pub matroids: Vec<Matroid>,
    pub perspectives: Vec<(String, Perspective)>,
}

/// The shared test corpus:
/// - `(M, M)` for every labelled matroid on at most five elements, each
///   rebuilt from its circuit system, plus random circuit systems;
/// - graphic pairs from random vertex identifications;
/// - `(M, rank 0)` for the same matroids;
/// - random abstract pairs on four elements;
/// - the two-triangle fixture under ten random element orders.
pub fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut matroids = Vec::new();
        for n in 0..=5 {
            for m in all_matroids(n) {
                let rebuilt = Matroid::from_circuits(m.ground(), m.circuits().iter().copied()).unwrap();
                assert_eq!(rebuilt, m);
                matroids.push(rebuilt);
            }
        }
        for (n, seed) in [(5, 11), (6, 12)] {
            matroids.extend(random_circuit_matroids(n, 40, seed));
        }

        let mut perspectives = Vec::new();
        for m in &matroids {
            perspectives.push((format!("identity on {:?}", m.bases()), Perspective::identity(m.clone())));
            perspectives.push((
                format!("rank 0 below {:?}", m.bases()),
                Perspective::onto_rank_zero(m.clone()),
            ));
        }
        for (i, p) in graphic_pairs(150, 21).into_iter().enumerate() {
            perspectives.push((format!("graphic pair {i}"), p));
        }
        for (i, p) in abstract_pairs(150, 22).into_iter().enumerate() {
            perspectives.push((format!("abstract pair {i}"), p));
        }
        let base = fixture();
        for ground in matroid_perspective::check::random_orders(5, 23, 10) {
            perspectives.push((
                format!("fixture under {:?}", ground.order()),
                base.with_order(&ground).unwrap(),
            ));
        }
        for (_, p) in &perspectives[2 * matroids.len()..] {
            matroids.push(p.matroid().clone());
            matroids.push(p.quotient().clone());
        }
        Corpus { matroids, perspectives }
    })
}
