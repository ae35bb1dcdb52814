//! Deterministic generators for every named graph family used by the
//! characterization: the thirteen forbidden subgraphs, the chained-triangle
//! family T(s,t;h1..h5) and its skeletons T1/T2, the pendant-edge families
//! T3^k and T4^t, the three sporadic graphs T5/T6/T7, and the block graphs
//! BG(p,q,3,2,2) and BGA.
//!
//! Identical specs always produce identical labelings, so graph6 output is
//! byte-for-byte reproducible.

use crate::graph::{Graph, GraphBuilder};
use crate::spectra::Partition;
use crate::subgraph::canonical_form;
use crate::{Error, Result};

pub const FORBIDDEN_COUNT: usize = 13;

/// Reference second largest distance eigenvalues of F1..F13, in order.
pub const FORBIDDEN_LAMBDA2: [f64; FORBIDDEN_COUNT] = [
    -0.4727, -0.4384, -0.4754, -0.4943, -0.4931, -0.4917, -0.4934, -0.4931, -0.4521, -0.4807, -0.3820, -0.3723,
    -0.2679,
];

/// Adjacency tables of F1..F13 under their fixed labelings; the golden
/// lambda_2 test guards the transcription.
const FORBIDDEN_EDGES: [(usize, &[(usize, usize)]); FORBIDDEN_COUNT] = [
    (6, &[(0, 1), (1, 2), (0, 3), (0, 4), (0, 5)]),
    (6, &[(0, 1), (1, 2), (0, 3), (0, 4), (1, 5)]),
    (6, &[(0, 1), (0, 2), (0, 5), (1, 3), (2, 4)]),
    (7, &[(0, 1), (0, 2), (1, 3), (2, 4), (2, 6), (3, 5)]),
    (6, &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 3), (4, 5)]),
    (7, &[(0, 1), (0, 2), (0, 3), (0, 4), (3, 4), (3, 5), (4, 6)]),
    (7, &[(0, 1), (0, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 5), (4, 6)]),
    (7, &[(0, 1), (0, 2), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4), (5, 6)]),
    (5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3)]),
    (6, &[(0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (3, 5), (4, 5)]),
    (5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3), (3, 4)]),
    (5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 3), (3, 4)]),
    (6, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (3, 4)]),
];

pub fn forbidden_subgraph(i: usize) -> Graph {
    assert!((1..=FORBIDDEN_COUNT).contains(&i), "forbidden subgraph index {i} outside 1..=13");
    let (n, edges) = FORBIDDEN_EDGES[i - 1];
    Graph::from_edges(n, edges)
}

const T5_EDGES: [(usize, usize); 11] =
    [(0, 1), (0, 4), (0, 7), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (4, 7), (4, 8), (5, 6)];
const T6_EDGES: [(usize, usize); 10] =
    [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (3, 4), (4, 5), (4, 7)];
const T7_EDGES: [(usize, usize); 9] = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (3, 4), (4, 5), (4, 6)];
const BGA_EDGES: [(usize, usize); 10] =
    [(0, 1), (0, 2), (1, 4), (1, 5), (1, 8), (2, 3), (2, 6), (2, 7), (5, 8), (6, 7)];

/// A named family member: the family tag plus its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// T(s,t;h1..h5): chain of three triangles joined by paths of lengths s
    /// and t, with a pendant path of length h_i at each of the five
    /// degree-two triangle vertices.
    TGeneral { s: usize, t: usize, h: [usize; 5] },
    /// Three triangles sharing one vertex, plus k pendant edges there.
    T3 { k: usize },
    /// Two triangles sharing an edge plus a third triangle at the hinge,
    /// with t pendant edges at the maximum-degree vertex.
    T4 { t: usize },
    T5,
    T6,
    T7,
    /// T1(s,t): the pendant-free skeleton of TGeneral.
    T1Base { s: usize, t: usize },
    /// T2(p,q): central triangle with paths of lengths p and q from one of
    /// its vertices to two further triangles.
    T2Base { p: usize, q: usize },
    /// F_i for i in 1..=13.
    Forbidden { i: usize },
    /// Block graph BG(p,q,3,2,2) with p,q >= 2.
    Bg { p: usize, q: usize },
    Bga,
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::TGeneral { s, t, h } => {
                write!(f, "t-general s={s} t={t} h={},{},{},{},{}", h[0], h[1], h[2], h[3], h[4])
            }
            FamilySpec::T3 { k } => write!(f, "t3 k={k}"),
            FamilySpec::T4 { t } => write!(f, "t4 t={t}"),
            FamilySpec::T5 => write!(f, "t5"),
            FamilySpec::T6 => write!(f, "t6"),
            FamilySpec::T7 => write!(f, "t7"),
            FamilySpec::T1Base { s, t } => write!(f, "t1 s={s} t={t}"),
            FamilySpec::T2Base { p, q } => write!(f, "t2 p={p} q={q}"),
            FamilySpec::Forbidden { i } => write!(f, "f{i}"),
            FamilySpec::Bg { p, q } => write!(f, "bg p={p} q={q}"),
            FamilySpec::Bga => write!(f, "bga"),
        }
    }
}

/// Builds T1(s,t) and reports the five degree-two triangle vertices
/// (u1, u2 on the left triangle, u3 the middle apex, u4, u5 on the right).
fn build_t1(s: usize, t: usize) -> (GraphBuilder, [usize; 5]) {
    let mut b = GraphBuilder::new();
    let mid_left = b.add_vertex();
    let mid_right = b.add_vertex();
    let apex = b.add_vertex();
    b.add_edge(mid_left, mid_right);
    b.add_edge(mid_left, apex);
    b.add_edge(mid_right, apex);
    let left_anchor = b.path_from(mid_left, s);
    let lu = b.add_vertex();
    let lv = b.add_vertex();
    b.add_edge(left_anchor, lu);
    b.add_edge(left_anchor, lv);
    b.add_edge(lu, lv);
    let right_anchor = b.path_from(mid_right, t);
    let ru = b.add_vertex();
    let rv = b.add_vertex();
    b.add_edge(right_anchor, ru);
    b.add_edge(right_anchor, rv);
    b.add_edge(ru, rv);
    (b, [lu, lv, apex, ru, rv])
}

fn build_t2(p: usize, q: usize) -> Graph {
    let mut b = GraphBuilder::new();
    let hub = b.add_vertex();
    let m1 = b.add_vertex();
    let m2 = b.add_vertex();
    b.add_edge(hub, m1);
    b.add_edge(hub, m2);
    b.add_edge(m1, m2);
    for len in [p, q] {
        let anchor = b.path_from(hub, len);
        let a = b.add_vertex();
        let c = b.add_vertex();
        b.add_edge(anchor, a);
        b.add_edge(anchor, c);
        b.add_edge(a, c);
    }
    b.build()
}

/// Instantiates a family spec. Vertex labelings are fixed, so equal specs
/// yield byte-identical graph6 strings.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::TGeneral { s, t, h } => {
            let (mut b, attach) = build_t1(s, t);
            for (i, &u) in attach.iter().enumerate() {
                b.path_from(u, h[i]);
            }
            Ok(b.build())
        }
        FamilySpec::T1Base { s, t } => Ok(build_t1(s, t).0.build()),
        FamilySpec::T2Base { p, q } => Ok(build_t2(p, q)),
        FamilySpec::T3 { k } => {
            let mut b = GraphBuilder::new();
            let hub = b.add_vertex();
            for _ in 0..3 {
                let x = b.add_vertex();
                let y = b.add_vertex();
                b.add_edge(hub, x);
                b.add_edge(hub, y);
                b.add_edge(x, y);
            }
            for _ in 0..k {
                let p = b.add_vertex();
                b.add_edge(hub, p);
            }
            Ok(b.build())
        }
        FamilySpec::T4 { t } => {
            let mut b = GraphBuilder::new();
            let hub = b.add_vertex();
            let v1 = b.add_vertex();
            let v2 = b.add_vertex();
            b.add_edge(hub, v1);
            b.add_edge(hub, v2);
            b.add_edge(v1, v2);
            let u1 = b.add_vertex();
            let u2 = b.add_vertex();
            let u3 = b.add_vertex();
            b.add_edge(hub, u1);
            b.add_edge(hub, u2);
            b.add_edge(hub, u3);
            b.add_edge(u1, u2);
            b.add_edge(u2, u3);
            for _ in 0..t {
                let p = b.add_vertex();
                b.add_edge(hub, p);
            }
            Ok(b.build())
        }
        FamilySpec::T5 => Ok(Graph::from_edges(9, &T5_EDGES)),
        FamilySpec::T6 => Ok(Graph::from_edges(8, &T6_EDGES)),
        FamilySpec::T7 => Ok(Graph::from_edges(7, &T7_EDGES)),
        FamilySpec::Forbidden { i } => {
            if !(1..=FORBIDDEN_COUNT).contains(&i) {
                return Err(Error::BadFamilyParams { reason: format!("forbidden index {i} outside 1..=13") });
            }
            Ok(forbidden_subgraph(i))
        }
        FamilySpec::Bg { p, q } => {
            if p < 2 || q < 2 {
                return Err(Error::BadFamilyParams { reason: format!("BG needs p,q >= 2, got p={p} q={q}") });
            }
            let n = p + q + 3;
            let mut edges = Vec::new();
            for u in 0..p {
                for v in u + 1..p {
                    edges.push((u, v));
                }
            }
            for u in p..p + q {
                for v in u + 1..p + q {
                    edges.push((u, v));
                }
            }
            edges.push((p - 1, p)); // bridge between the cliques
            let (t1, t2, pend) = (p + q, p + q + 1, p + q + 2);
            edges.extend([(0, t1), (0, t2), (t1, t2), (0, pend)]);
            Ok(Graph::from_edges(n, &edges))
        }
        FamilySpec::Bga => Ok(Graph::from_edges(9, &BGA_EDGES)),
    }
}

/// Partition of V(T3^k) used for its equitable quotient: the hub, one vertex
/// from each triangle, the other vertex from each triangle, then the k
/// pendants. Requires k >= 1 so no cell is empty.
pub fn t3_quotient_partition(k: usize) -> Partition {
    assert!(k >= 1, "T3 quotient partition needs k >= 1");
    let n = k + 7;
    Partition::new(n, vec![vec![0], vec![1, 3, 5], vec![2, 4, 6], (7..n).collect()]).expect("fixed cells are valid")
}

/// Partition of V(T4^t): hub, outer-triangle pair, the two diamond tips, the
/// hinge vertex, then the t pendants. Requires t >= 1.
pub fn t4_quotient_partition(t: usize) -> Partition {
    assert!(t >= 1, "T4 quotient partition needs t >= 1");
    let n = t + 6;
    Partition::new(n, vec![vec![0], vec![1, 2], vec![3, 5], vec![4], (6..n).collect()])
        .expect("fixed cells are valid")
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every member of the four characterized families with exactly `n`
/// vertices, deduplicated up to isomorphism. Members keep the first spec
/// that produced them (specs are enumerated in a fixed order, so output is
/// deterministic).
pub fn enumerate_family_members(n: usize) -> Vec<(FamilySpec, Graph)> {
    let mut specs: Vec<FamilySpec> = Vec::new();
    if n >= 7 {
        for c in compositions(n - 7, 7) {
            specs.push(FamilySpec::TGeneral { s: c[0], t: c[1], h: [c[2], c[3], c[4], c[5], c[6]] });
        }
        specs.push(FamilySpec::T3 { k: n - 7 });
    }
    if n >= 6 {
        specs.push(FamilySpec::T4 { t: n - 6 });
    }
    match n {
        9 => specs.push(FamilySpec::T5),
        8 => specs.push(FamilySpec::T6),
        7 => specs.push(FamilySpec::T7),
        _ => {}
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for spec in specs {
        let g = generate(&spec).expect("enumerated specs are in range");
        debug_assert_eq!(g.n(), n);
        if seen.insert(canonical_form(&g)) {
            out.push((spec, g));
        }
    }
    out
}
