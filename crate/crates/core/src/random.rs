//! Random generators for property tests and scale checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Edge, Graph, Vertex};
use crate::structure::Family;
use crate::switch::SwitchMatrix;

/// Uniform labeled tree on `[n]` from a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let labels: Vec<Vertex> = (1..=n as Vertex).collect();
    Graph::from_unsorted(n, tree_edges(&labels, rng))
}

/// Edges of a uniform tree on the given labels.
fn tree_edges<R: Rng + ?Sized>(labels: &[Vertex], rng: &mut R) -> Vec<Edge> {
    let k = labels.len();
    if k < 2 {
        return Vec::new();
    }
    let code: Vec<usize> = (0..k - 2).map(|_| rng.gen_range(0..k)).collect();
    let mut degree = vec![1usize; k];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(k - 1);
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..k).filter(|&i| degree[i] == 1).collect();
    for &c in &code {
        let leaf = leaves.pop_first().unwrap();
        edges.push(Edge::new(labels[leaf], labels[c]));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let a = leaves.pop_first().unwrap();
    let b = leaves.pop_first().unwrap();
    edges.push(Edge::new(labels[a], labels[b]));
    edges
}

/// Random tree on the labels plus one extra edge, giving a unicyclic
/// component. Needs at least 3 labels.
fn unicyclic_edges<R: Rng + ?Sized>(labels: &[Vertex], rng: &mut R) -> Vec<Edge> {
    let k = labels.len();
    assert!(k >= 3, "a unicyclic graph needs at least 3 vertices");
    let mut edges = tree_edges(labels, rng);
    loop {
        let u = labels[rng.gen_range(0..k)];
        let v = labels[rng.gen_range(0..k)];
        if u != v && !edges.contains(&Edge::new(u, v)) {
            edges.push(Edge::new(u, v));
            return edges;
        }
    }
}

/// Random unicyclic graph on `[n]`, `n >= 3`. Not uniform.
pub fn random_unicyclic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let labels: Vec<Vertex> = (1..=n as Vertex).collect();
    Graph::from_unsorted(n, unicyclic_edges(&labels, rng))
}

/// Random pseudoforest on `[n]`: vertices are shuffled and cut into
/// components, each of which is unicyclic with probability `cyclic`
/// (when it has at least 3 vertices) and a tree otherwise.
pub fn random_pseudoforest<R: Rng + ?Sized>(n: usize, cyclic: f64, rng: &mut R) -> Graph {
    let mut labels: Vec<Vertex> = (1..=n as Vertex).collect();
    labels.shuffle(rng);
    let mut edges = Vec::with_capacity(n);
    let mut rest = &labels[..];
    while !rest.is_empty() {
        let k = rng.gen_range(1..=rest.len());
        let (part, tail) = rest.split_at(k);
        if k >= 3 && rng.gen_bool(cyclic) {
            edges.extend(unicyclic_edges(part, rng));
        } else {
            edges.extend(tree_edges(part, rng));
        }
        rest = tail;
    }
    Graph::from_unsorted(n, edges)
}

/// Pseudoforest on `[n]` whose components are all unicyclic, each with at
/// least 3 vertices. Needs `n >= 3`.
pub fn random_all_cyclic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 3);
    let mut labels: Vec<Vertex> = (1..=n as Vertex).collect();
    labels.shuffle(rng);
    let mut edges = Vec::with_capacity(n);
    let mut rest = &labels[..];
    while !rest.is_empty() {
        let k = if rest.len() < 6 {
            rest.len()
        } else {
            rng.gen_range(3..=rest.len())
        };
        let k = if rest.len() - k < 3 { rest.len() } else { k };
        let (part, tail) = rest.split_at(k);
        edges.extend(unicyclic_edges(part, rng));
        rest = tail;
    }
    Graph::from_unsorted(n, edges)
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n as Vertex {
        for v in u + 1..=n as Vertex {
            if rng.gen_bool(p) {
                edges.push(Edge::new(u, v));
            }
        }
    }
    Graph::from_sorted(n, edges)
}

/// A uniformly random interchangeable matrix of `g`, found by rejection;
/// `None` if `attempts` draws all fail.
pub fn random_switch<R: Rng + ?Sized>(
    g: &Graph,
    attempts: usize,
    rng: &mut R,
) -> Option<SwitchMatrix> {
    let edges = g.edges();
    if edges.len() < 2 {
        return None;
    }
    (0..attempts).find_map(|_| {
        let e1 = *edges.choose(rng)?;
        let e2 = *edges.choose(rng)?;
        let (a, b) = if rng.gen() {
            e1.endpoints()
        } else {
            (e1.hi(), e1.lo())
        };
        let (c, d) = e2.endpoints();
        let m = SwitchMatrix::new(a, b, c, d);
        m.is_interchangeable(g).then_some(m)
    })
}

/// Applies up to `steps` random switches that keep `g` inside `family`.
pub fn random_walk<R: Rng + ?Sized>(g: &Graph, family: Family, steps: usize, rng: &mut R) -> Graph {
    let mut cur = g.clone();
    for _ in 0..steps {
        if let Some(m) = random_switch(&cur, 64, rng) {
            let next = m.apply(&cur);
            if family.contains(&next) {
                cur = next;
            }
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{cyclic_components, is_pseudoforest, is_tree, is_unicyclic};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_land_in_their_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..30 {
            assert!(is_tree(&random_tree(n, &mut rng)));
            assert!(is_pseudoforest(&random_pseudoforest(n, 0.5, &mut rng)));
            if n >= 3 {
                assert!(is_unicyclic(&random_unicyclic(n, &mut rng)));
                let c = random_all_cyclic(n, &mut rng);
                assert!(is_pseudoforest(&c));
                assert_eq!(cyclic_components(&c), c.kappa());
            }
        }
    }

    #[test]
    fn walks_keep_family_and_degrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let u = random_unicyclic(20, &mut rng);
        let w = random_walk(&u, Family::Unicyclic, 200, &mut rng);
        assert!(is_unicyclic(&w));
        assert_eq!(w.degree_function(), u.degree_function());
        assert_ne!(w, u);
    }

    #[test]
    fn random_switches_are_interchangeable() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_graph(10, 0.4, &mut rng);
        for _ in 0..100 {
            if let Some(m) = random_switch(&g, 100, &mut rng) {
                assert!(m.is_interchangeable(&g));
            }
        }
        assert_eq!(random_switch(&Graph::empty(4), 10, &mut rng), None);
    }
}
