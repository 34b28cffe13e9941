//! The 2-switch `τ_A` for an action matrix `A = (a b; c d)`.
//!
//! When `A` is interchangeable in `G` the switch removes `ab`, `cd` and adds
//! `ac`, `bd`; otherwise it is the identity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::structure::{classify_family, FamilyLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SwitchMatrix {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub d: Vertex,
}

impl SwitchMatrix {
    pub const fn new(a: Vertex, b: Vertex, c: Vertex, d: Vertex) -> Self {
        SwitchMatrix { a, b, c, d }
    }

    fn tuple(self) -> (Vertex, Vertex, Vertex, Vertex) {
        (self.a, self.b, self.c, self.d)
    }

    /// Removed edges `ab`, `cd`. Only meaningful when the pairs are proper.
    pub fn removed(self) -> [Edge; 2] {
        [Edge::new(self.a, self.b), Edge::new(self.c, self.d)]
    }

    /// Added edges `ac`, `bd`.
    pub fn added(self) -> [Edge; 2] {
        [Edge::new(self.a, self.c), Edge::new(self.b, self.d)]
    }

    fn distinct(self) -> bool {
        let (a, b, c, d) = self.tuple();
        a != b && a != c && a != d && b != c && b != d && c != d
    }

    pub fn is_interchangeable(self, g: &Graph) -> bool {
        let (a, b, c, d) = self.tuple();
        self.distinct()
            && g.has_edge(a, b)
            && g.has_edge(c, d)
            && !g.has_edge(a, c)
            && !g.has_edge(b, d)
    }

    pub fn is_trivial(self, g: &Graph) -> bool {
        !self.is_interchangeable(g)
    }

    /// `τ_A(G)`.
    pub fn apply(self, g: &Graph) -> Graph {
        if self.is_interchangeable(g) {
            g.rewired(self.removed(), self.added())
        } else {
            g.clone()
        }
    }

    /// `(a c; b d)`, which undoes `self` on the image.
    pub fn inverse(self) -> SwitchMatrix {
        SwitchMatrix::new(self.a, self.c, self.b, self.d)
    }

    /// The other way of reconnecting the same two edges: `(a b; d c)`.
    pub fn reversed(self) -> SwitchMatrix {
        SwitchMatrix::new(self.a, self.b, self.d, self.c)
    }

    /// The four matrices acting identically to `self`.
    pub fn equivalents(self) -> [SwitchMatrix; 4] {
        let (a, b, c, d) = self.tuple();
        [
            SwitchMatrix::new(a, b, c, d),
            SwitchMatrix::new(c, d, a, b),
            SwitchMatrix::new(b, a, d, c),
            SwitchMatrix::new(d, c, b, a),
        ]
    }

    /// Lexicographically least of [`equivalents`](Self::equivalents).
    pub fn canonical(self) -> SwitchMatrix {
        self.equivalents().into_iter().min().unwrap()
    }

    pub fn is_breaker(self, g: &Graph) -> bool {
        self.is_interchangeable(g) && self.apply(g).kappa() > g.kappa()
    }
}

impl fmt::Display for SwitchMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} / {} {}", self.a, self.b, self.c, self.d)
    }
}

/// Parses `"a b / c d"`.
impl FromStr for SwitchMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse { line: 1, msg };
        let (top, bottom) = s
            .split_once('/')
            .ok_or_else(|| bad(format!("expected \"a b / c d\", got {s:?}")))?;
        let row = |part: &str| -> Result<(Vertex, Vertex)> {
            let xs: Vec<&str> = part.split_whitespace().collect();
            if xs.len() != 2 {
                return Err(bad(format!("matrix row {part:?} needs two vertices")));
            }
            let p = |t: &str| {
                t.parse::<Vertex>()
                    .map_err(|e| bad(format!("bad vertex {t:?}: {e}")))
            };
            Ok((p(xs[0])?, p(xs[1])?))
        };
        let (a, b) = row(top)?;
        let (c, d) = row(bottom)?;
        Ok(SwitchMatrix::new(a, b, c, d))
    }
}

/// JSON form `{"remove": [[a,b],[c,d]], "add": [[a,c],[b,d]]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub remove: [[Vertex; 2]; 2],
    pub add: [[Vertex; 2]; 2],
}

impl From<SwitchMatrix> for MatrixJson {
    fn from(m: SwitchMatrix) -> Self {
        MatrixJson {
            remove: [[m.a, m.b], [m.c, m.d]],
            add: [[m.a, m.c], [m.b, m.d]],
        }
    }
}

impl TryFrom<MatrixJson> for SwitchMatrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<Self> {
        let [[a, b], [c, d]] = j.remove;
        let m = SwitchMatrix::new(a, b, c, d);
        if j.add != [[a, c], [b, d]] {
            return Err(Error::Json(format!(
                "\"add\" {:?} does not match \"remove\" {:?}",
                j.add, j.remove
            )));
        }
        Ok(m)
    }
}

/// Both canonical orientations for every pair of vertex-disjoint edges, in
/// increasing order. Contains each switch class on `G` exactly once.
pub fn canonical_matrices(g: &Graph) -> Vec<SwitchMatrix> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[i + 1..] {
            if e1.shares_vertex(e2) {
                continue;
            }
            let (a, b) = e1.endpoints();
            let (c, d) = e2.endpoints();
            out.push(SwitchMatrix::new(a, b, c, d).canonical());
            out.push(SwitchMatrix::new(a, b, d, c).canonical());
        }
    }
    out.sort_unstable();
    out
}

/// [`canonical_matrices`] filtered to the interchangeable ones.
pub fn interchangeable_matrices(g: &Graph) -> Vec<SwitchMatrix> {
    canonical_matrices(g)
        .into_iter()
        .filter(|m| m.is_interchangeable(g))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SwitchTag {
    Trivial,
    /// Nontrivial, no family preserved, components unchanged or merged.
    Plain,
    T,
    F,
    U,
    P,
    /// Nontrivial, no family preserved, and a breaker.
    BreakerComposite,
}

/// Everything the definitions say about one switch on one graph. The flags
/// overlap: a t-switch is also an f-switch and a p-switch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchClass {
    pub tag: SwitchTag,
    pub source: FamilyLabel,
    pub image: FamilyLabel,
    pub is_breaker: bool,
    /// The image lies in the most specific family the source lies in.
    pub preserves_family: bool,
    pub t_switch: bool,
    pub f_switch: bool,
    pub u_switch: bool,
    pub p_switch: bool,
}

fn is_forest_label(l: FamilyLabel) -> bool {
    matches!(l, FamilyLabel::Tree | FamilyLabel::Forest)
}

fn is_unicyclic_label(l: FamilyLabel) -> bool {
    matches!(l, FamilyLabel::Cycle | FamilyLabel::Unicyclic)
}

fn is_pseudoforest_label(l: FamilyLabel) -> bool {
    l != FamilyLabel::Other
}

/// Ground-truth classification: apply the switch and label the image.
pub fn classify_switch_direct(m: SwitchMatrix, g: &Graph) -> SwitchClass {
    let source = classify_family(g);
    if m.is_trivial(g) {
        return SwitchClass {
            tag: SwitchTag::Trivial,
            source,
            image: source,
            is_breaker: false,
            preserves_family: true,
            t_switch: false,
            f_switch: false,
            u_switch: false,
            p_switch: false,
        };
    }
    let img = m.apply(g);
    let image = classify_family(&img);
    let is_breaker = img.kappa() > g.kappa();
    let t_switch = source == FamilyLabel::Tree && image == FamilyLabel::Tree;
    let f_switch = is_forest_label(source) && is_forest_label(image);
    let u_switch = is_unicyclic_label(source) && is_unicyclic_label(image);
    let p_switch = is_pseudoforest_label(source) && is_pseudoforest_label(image);
    let preserves_family = match source {
        FamilyLabel::Tree => t_switch,
        FamilyLabel::Forest => f_switch,
        FamilyLabel::Cycle | FamilyLabel::Unicyclic => u_switch,
        FamilyLabel::Pseudoforest => p_switch,
        FamilyLabel::Other => true,
    };
    let tag = if t_switch {
        SwitchTag::T
    } else if f_switch {
        SwitchTag::F
    } else if u_switch {
        SwitchTag::U
    } else if p_switch {
        SwitchTag::P
    } else if is_breaker {
        SwitchTag::BreakerComposite
    } else {
        SwitchTag::Plain
    };
    SwitchClass {
        tag,
        source,
        image,
        is_breaker,
        preserves_family,
        t_switch,
        f_switch,
        u_switch,
        p_switch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(Vertex, Vertex)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    fn c4() -> Graph {
        g(4, &[(1, 2), (2, 3), (3, 4), (4, 1)])
    }

    fn c6() -> Graph {
        g(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)])
    }

    const M: SwitchMatrix = SwitchMatrix::new(1, 2, 3, 4);

    #[test]
    fn interchangeability() {
        let path = g(4, &[(1, 2), (2, 3), (3, 4)]);
        assert!(M.is_interchangeable(&path));
        assert!(!SwitchMatrix::new(1, 2, 2, 3).is_interchangeable(&path));
        assert!(M.is_interchangeable(&c4()));
        // vertex 9 is absent
        assert!(SwitchMatrix::new(1, 2, 3, 9).is_trivial(&path));
    }

    #[test]
    fn apply_on_c4_and_path() {
        let img = M.apply(&c4());
        assert_eq!(img, g(4, &[(2, 3), (4, 1), (1, 3), (2, 4)]));
        let path = g(4, &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(M.apply(&path), g(4, &[(2, 3), (1, 3), (2, 4)]));
        let t = SwitchMatrix::new(1, 3, 2, 4);
        assert_eq!(t.apply(&path), path);
    }

    #[test]
    fn inverse_round_trip() {
        assert_eq!(M.inverse(), SwitchMatrix::new(1, 3, 2, 4));
        let img = M.apply(&c4());
        assert!(M.inverse().is_interchangeable(&img));
        assert_eq!(M.inverse().apply(&img), c4());
        assert_eq!(M.inverse().inverse(), M);
    }

    #[test]
    fn breakers_on_c6() {
        let breaker = SwitchMatrix::new(1, 2, 5, 4);
        assert!(breaker.is_breaker(&c6()));
        assert_eq!(
            breaker.apply(&c6()),
            g(6, &[(1, 5), (5, 6), (6, 1), (2, 3), (3, 4), (2, 4)])
        );
        let keep = SwitchMatrix::new(1, 2, 4, 5);
        assert!(!keep.is_breaker(&c6()));
        assert_eq!(
            keep.apply(&c6()),
            g(6, &[(1, 4), (4, 3), (3, 2), (2, 5), (5, 6), (6, 1)])
        );
        assert!(!SwitchMatrix::new(1, 2, 2, 3).is_breaker(&c6()));
    }

    #[test]
    fn equivalent_forms_act_identically() {
        let path = g(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]);
        let m = SwitchMatrix::new(4, 5, 2, 1);
        for e in m.equivalents() {
            assert_eq!(e.apply(&path), m.apply(&path));
            assert_eq!(e.canonical(), m.canonical());
        }
        assert_eq!(m.canonical(), SwitchMatrix::new(1, 2, 5, 4));
    }

    #[test]
    fn canonical_enumeration_counts() {
        // C4 has 2 disjoint edge pairs, 2 orientations each
        let ms = canonical_matrices(&c4());
        assert_eq!(ms.len(), 4);
        // (1 2; 4 3) adds 14 and 23 which already exist
        assert_eq!(interchangeable_matrices(&c4()).len(), 2);
    }

    #[test]
    fn direct_classification() {
        let tadpole = g(5, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5)]);
        let c = classify_switch_direct(SwitchMatrix::new(1, 2, 4, 5), &tadpole);
        assert_eq!(c.image, FamilyLabel::Unicyclic);
        assert!(c.u_switch && c.p_switch && !c.f_switch);
        assert_eq!(c.tag, SwitchTag::U);

        let c = classify_switch_direct(SwitchMatrix::new(1, 2, 5, 4), &c6());
        assert!(!c.u_switch && c.p_switch && c.is_breaker);
        assert_eq!(c.tag, SwitchTag::P);
        assert_eq!(c.image, FamilyLabel::Pseudoforest);

        let c = classify_switch_direct(SwitchMatrix::new(1, 2, 2, 3), &c6());
        assert_eq!(c.tag, SwitchTag::Trivial);
        assert!(c.preserves_family && !c.is_breaker);

        let path = g(4, &[(1, 2), (2, 3), (3, 4)]);
        let c = classify_switch_direct(M, &path);
        assert!(c.t_switch && c.f_switch && c.p_switch);
        assert_eq!(c.tag, SwitchTag::T);
    }

    #[test]
    fn text_and_json_forms() {
        let m: SwitchMatrix = " 1 2 / 3 4 ".parse().unwrap();
        assert_eq!(m, M);
        assert_eq!(m.to_string(), "1 2 / 3 4");
        assert!("1 2 3 4".parse::<SwitchMatrix>().is_err());
        assert!("1 2 / 3".parse::<SwitchMatrix>().is_err());
        let j = serde_json::to_string(&MatrixJson::from(M)).unwrap();
        assert_eq!(j, r#"{"remove":[[1,2],[3,4]],"add":[[1,3],[2,4]]}"#);
        let back: MatrixJson = serde_json::from_str(&j).unwrap();
        assert_eq!(SwitchMatrix::try_from(back), Ok(M));
        let bad = MatrixJson {
            remove: [[1, 2], [3, 4]],
            add: [[1, 4], [2, 3]],
        };
        assert!(SwitchMatrix::try_from(bad).is_err());
    }
}
