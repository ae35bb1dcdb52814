//! Chordality, block decomposition, tricyclic base extraction and typing,
//! and the block-graph tests behind the lambda_2 < -1/2 block-graph
//! characterization.

use crate::families::{generate, FamilySpec};
use crate::graph::{Graph, GraphBuilder};
use crate::subgraph::{canonical_form, has_induced_subgraph};
use crate::{Error, Result};

/// Lex-BFS followed by perfect-elimination-order verification: chordal iff
/// every cycle of length >= 4 has a chord.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    if n <= 3 {
        return true;
    }
    // Lex-BFS: repeatedly visit the unvisited vertex with the largest label,
    // appending the visit timestamp to each unvisited neighbor's label.
    let mut labels: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]))
            .expect("unvisited vertex exists");
        visited[v] = true;
        order.push(v);
        let stamp = (n - step) as u32;
        for u in g.neighbors(v) {
            if !visited[u] {
                labels[u].push(stamp);
            }
        }
    }
    // G is chordal iff the reverse of the Lex-BFS order is a perfect
    // elimination order.
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().rev().enumerate() {
        pos[v] = i;
    }
    for &v in order.iter().rev() {
        let later: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) {
            for &u in &later {
                if u != parent && !g.has_edge(parent, u) {
                    return false;
                }
            }
        }
    }
    true
}

/// Blocks (maximal 2-connected subgraphs or bridge edges) of a connected
/// graph, plus its cut vertices.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// block_membership[v] lists the indices of the blocks containing v.
    pub block_membership: Vec<Vec<usize>>,
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut is_cut = vec![false; n];

    // Iterative DFS, one frame per vertex with its neighbor cursor.
    struct Frame {
        v: usize,
        parent: usize,
        nbrs: Vec<usize>,
        idx: usize,
        children: usize,
    }
    let root = 0usize;
    let mut stack = vec![Frame { v: root, parent: usize::MAX, nbrs: g.neighbors(root).collect(), idx: 0, children: 0 }];
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    while let Some(frame) = stack.last_mut() {
        if frame.idx < frame.nbrs.len() {
            let u = frame.nbrs[frame.idx];
            frame.idx += 1;
            let v = frame.v;
            if disc[u] == usize::MAX {
                frame.children += 1;
                edge_stack.push((v, u));
                disc[u] = timer;
                low[u] = timer;
                timer += 1;
                stack.push(Frame { v: u, parent: v, nbrs: g.neighbors(u).collect(), idx: 0, children: 0 });
            } else if u != frame.parent && disc[u] < disc[v] {
                edge_stack.push((v, u));
                low[v] = low[v].min(disc[u]);
            }
        } else {
            let done = stack.pop().expect("frame present");
            if let Some(parent_frame) = stack.last_mut() {
                let v = parent_frame.v;
                let u = done.v;
                low[v] = low[v].min(low[u]);
                if low[u] >= disc[v] {
                    // v separates u's subtree: pop one block.
                    let mut verts = std::collections::BTreeSet::new();
                    while let Some(&(a, b)) = edge_stack.last() {
                        if disc[a] >= disc[u] || (a, b) == (v, u) {
                            edge_stack.pop();
                            verts.insert(a);
                            verts.insert(b);
                            if (a, b) == (v, u) {
                                break;
                            }
                        } else {
                            break;
                        }
                    }
                    blocks.push(verts.into_iter().collect());
                    if parent_frame.parent != usize::MAX || parent_frame.children > 1 {
                        is_cut[v] = true;
                    }
                }
            }
        }
    }
    if n == 1 {
        blocks.push(vec![0]);
    }
    let mut block_membership = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            block_membership[v].push(i);
        }
    }
    let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
    Ok(BlockDecomposition { blocks, cut_vertices, block_membership })
}

/// The base B(G): what remains after repeatedly deleting degree-1 vertices.
/// Only defined for tricyclic input; the result keeps cyclomatic number 3
/// and has minimum degree >= 2.
pub fn base_of(g: &Graph) -> Result<Graph> {
    let c = g.cyclomatic_number()?;
    if c != 3 {
        return Err(Error::NotTricyclic { found: c });
    }
    Ok(g.induced(&base_vertices(g)))
}

fn base_vertices(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut alive = vec![true; n];
    loop {
        let mut removed = false;
        for v in 0..n {
            if alive[v] {
                let deg = g.neighbors(v).filter(|&u| alive[u]).count();
                if deg <= 1 {
                    alive[v] = false;
                    removed = true;
                }
            }
        }
        if !removed {
            return (0..n).filter(|&v| alive[v]).collect();
        }
    }
}

/// The fifteen tricyclic base templates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[allow(non_camel_case_types)]
pub enum BaseLabel {
    G3_1,
    G3_2,
    G3_3,
    G3_4,
    G3_5,
    G3_6,
    G3_7,
    G4_1,
    G4_2,
    G4_3,
    G4_4,
    G6_1,
    G6_2,
    G6_3,
    G7_1,
}

impl std::fmt::Display for BaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// A typed base: the template label plus the cycle lengths and path lengths
/// that realize it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseType {
    pub label: BaseLabel,
    pub params: Vec<usize>,
}

fn cycle_through(b: &mut GraphBuilder, at: usize, len: usize) {
    let before_end = b.path_from(at, len - 1);
    b.add_edge(before_end, at);
}

fn cycle_with_anchor(b: &mut GraphBuilder, len: usize) -> usize {
    let anchor = b.add_vertex();
    cycle_through(b, anchor, len);
    anchor
}

/// Path of `len >= 1` edges between two existing vertices.
fn path_between(b: &mut GraphBuilder, u: usize, v: usize, len: usize) {
    let end = b.path_from(u, len - 1);
    b.add_edge(end, v);
}

/// Theta graph: `lens` internally disjoint paths between two new vertices;
/// returns (x, y, path interior vertex lists).
fn theta(b: &mut GraphBuilder, lens: &[usize]) -> (usize, usize, Vec<Vec<usize>>) {
    let x = b.add_vertex();
    let y = b.add_vertex();
    let mut interiors = Vec::new();
    for &len in lens {
        let start = b.peek_n();
        path_between(b, x, y, len);
        interiors.push((start..b.peek_n()).collect());
    }
    (x, y, interiors)
}

/// All instantiations of `label` with exactly `n` vertices, with their
/// parameter vectors. Path parameters are >= 1 (degenerate zero-length
/// parameters collapse to a different template), so the fifteen templates
/// are mutually exclusive.
fn instances(label: BaseLabel, n: usize) -> Vec<(Vec<usize>, Graph)> {
    let mut out: Vec<(Vec<usize>, Graph)> = Vec::new();
    let mut push = |params: Vec<usize>, g: Graph| {
        debug_assert_eq!(g.n(), n, "{label} {params:?}");
        debug_assert_eq!(g.edge_count(), n + 2);
        out.push((params, g));
    };
    match label {
        BaseLabel::G7_1 => {
            // Subdivision of K4: six path lengths, sum n + 2.
            for lens in compositions_at_least(n + 2, 6, 1) {
                let mut b = GraphBuilder::new();
                let vs: Vec<usize> = (0..4).map(|_| b.add_vertex()).collect();
                let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    path_between(&mut b, vs[i], vs[j], lens[k]);
                }
                push(lens, b.build());
            }
        }
        BaseLabel::G6_1 => {
            // Four internally disjoint paths between two vertices; at most
            // one path of length 1 keeps the graph simple.
            for lens in partitions_desc(n + 2, 4, 1) {
                if lens[2] < 2 {
                    continue;
                }
                let mut b = GraphBuilder::new();
                theta(&mut b, &lens);
                push(lens, b.build());
            }
        }
        BaseLabel::G6_2 => {
            // Cycle with two chord-paths sharing one endpoint.
            for (arcs, chords) in arcs_and_chords(n, 3, 2) {
                if (chords[0] == 1 && arcs[0] == 1) || (chords[1] == 1 && arcs[1] == 1) {
                    continue;
                }
                let mut b = GraphBuilder::new();
                let cyc = b.cycle(arcs.iter().sum());
                let (av, bv, cv) = (cyc[0], cyc[arcs[0]], cyc[arcs[0] + arcs[1]]);
                path_between(&mut b, av, bv, chords[0]);
                path_between(&mut b, bv, cv, chords[1]);
                push([arcs.as_slice(), chords.as_slice()].concat(), b.build());
            }
        }
        BaseLabel::G6_3 => {
            // Cycle with two disjoint non-crossing chord-paths.
            for (arcs, chords) in arcs_and_chords(n, 4, 2) {
                if (chords[0] == 1 && arcs[1] == 1) || (chords[1] == 1 && arcs[3] == 1) {
                    continue;
                }
                let mut b = GraphBuilder::new();
                let cyc = b.cycle(arcs.iter().sum());
                let (av, bv, cv, dv) =
                    (cyc[0], cyc[arcs[0]], cyc[arcs[0] + arcs[1]], cyc[arcs[0] + arcs[1] + arcs[2]]);
                path_between(&mut b, bv, cv, chords[0]);
                path_between(&mut b, av, dv, chords[1]);
                push([arcs.as_slice(), chords.as_slice()].concat(), b.build());
            }
        }
        BaseLabel::G4_1 | BaseLabel::G4_2 => {
            // Theta plus a cycle sharing exactly one vertex: at a path
            // interior (G4_1) or at a branch vertex (G4_2).
            for cyc in 3..=n {
                let rest = n + 2 - cyc;
                for lens in partitions_desc(rest, 3, 1) {
                    if lens[1] < 2 {
                        continue;
                    }
                    if label == BaseLabel::G4_2 {
                        let mut b = GraphBuilder::new();
                        let (x, _, _) = theta(&mut b, &lens);
                        cycle_through(&mut b, x, cyc);
                        push(vec![lens[0], lens[1], lens[2], cyc], b.build());
                    } else {
                        for (i, &len) in lens.iter().enumerate() {
                            for delta in 1..len {
                                let mut b = GraphBuilder::new();
                                let (_, _, ints) = theta(&mut b, &lens);
                                cycle_through(&mut b, ints[i][delta - 1], cyc);
                                push(vec![lens[0], lens[1], lens[2], cyc, i, delta], b.build());
                            }
                        }
                    }
                }
            }
        }
        BaseLabel::G4_3 | BaseLabel::G4_4 => {
            // Theta plus a connecting path to a disjoint cycle.
            for cyc in 3..=n {
                for link in 1..=n {
                    if cyc + link + 1 > n + 2 {
                        continue;
                    }
                    let rest = n + 2 - cyc - link;
                    for lens in partitions_desc(rest, 3, 1) {
                        if lens[1] < 2 {
                            continue;
                        }
                        if label == BaseLabel::G4_4 {
                            let mut b = GraphBuilder::new();
                            let (x, _, _) = theta(&mut b, &lens);
                            let far = b.path_from(x, link);
                            cycle_through(&mut b, far, cyc);
                            push(vec![lens[0], lens[1], lens[2], cyc, link], b.build());
                        } else {
                            for (i, &len) in lens.iter().enumerate() {
                                for delta in 1..len {
                                    let mut b = GraphBuilder::new();
                                    let (_, _, ints) = theta(&mut b, &lens);
                                    let far = b.path_from(ints[i][delta - 1], link);
                                    cycle_through(&mut b, far, cyc);
                                    push(vec![lens[0], lens[1], lens[2], cyc, link, i, delta], b.build());
                                }
                            }
                        }
                    }
                }
            }
        }
        BaseLabel::G3_1 => {
            // Chain of three cycles, middle one carrying two cut vertices.
            for (a, b_len, c) in cycle_triples(n + 2, false) {
                if a > c {
                    continue;
                }
                for delta in 1..=b_len / 2 {
                    let mut bl = GraphBuilder::new();
                    let mid = bl.cycle(b_len);
                    cycle_through(&mut bl, mid[0], a);
                    cycle_through(&mut bl, mid[delta], c);
                    push(vec![a, b_len, c, delta], bl.build());
                }
            }
        }
        BaseLabel::G3_2 => {
            // Cycles a and b share a vertex; a path from another vertex of b
            // reaches cycle c.
            for a in 3..n {
                for b_len in 3..n {
                    for c in 3..n {
                        for link in 1..=n {
                            if a + b_len + c + link != n + 2 {
                                continue;
                            }
                            for delta in 1..=b_len / 2 {
                                let mut bl = GraphBuilder::new();
                                let mid = bl.cycle(b_len);
                                cycle_through(&mut bl, mid[0], a);
                                let far = bl.path_from(mid[delta], link);
                                cycle_through(&mut bl, far, c);
                                push(vec![a, b_len, c, link, delta], bl.build());
                            }
                        }
                    }
                }
            }
        }
        BaseLabel::G3_3 => {
            // Three disjoint cycles chained by two paths.
            for b_len in 3..n {
                for a in 3..n {
                    for c in 3..n {
                        for l1 in 1..n {
                            for l2 in 1..n {
                                if a + b_len + c + l1 + l2 != n + 2 || (a, l1) > (c, l2) {
                                    continue;
                                }
                                for delta in 1..=b_len / 2 {
                                    let mut bl = GraphBuilder::new();
                                    let mid = bl.cycle(b_len);
                                    let fa = bl.path_from(mid[0], l1);
                                    cycle_through(&mut bl, fa, a);
                                    let fc = bl.path_from(mid[delta], l2);
                                    cycle_through(&mut bl, fc, c);
                                    push(vec![a, b_len, c, l1, l2, delta], bl.build());
                                }
                            }
                        }
                    }
                }
            }
        }
        BaseLabel::G3_4 => {
            // Three cycles through one vertex.
            for (a, b_len, c) in cycle_triples(n + 2, true) {
                let mut bl = GraphBuilder::new();
                let hub = cycle_with_anchor(&mut bl, a);
                cycle_through(&mut bl, hub, b_len);
                cycle_through(&mut bl, hub, c);
                push(vec![a, b_len, c], bl.build());
            }
        }
        BaseLabel::G3_5 => {
            // Two cycles share a vertex; a path from it reaches the third.
            for a in 3..n {
                for b_len in a..n {
                    for c in 3..n {
                        for link in 1..n {
                            if a + b_len + c + link != n + 2 {
                                continue;
                            }
                            let mut bl = GraphBuilder::new();
                            let hub = cycle_with_anchor(&mut bl, a);
                            cycle_through(&mut bl, hub, b_len);
                            let far = bl.path_from(hub, link);
                            cycle_through(&mut bl, far, c);
                            push(vec![a, b_len, c, link], bl.build());
                        }
                    }
                }
            }
        }
        BaseLabel::G3_6 => {
            // A center vertex with three paths to three disjoint cycles.
            for a in 3..n {
                for b_len in 3..n {
                    for c in 3..n {
                        for l1 in 1..n {
                            for l2 in 1..n {
                                for l3 in 1..n {
                                    if a + b_len + c + l1 + l2 + l3 != n + 2 {
                                        continue;
                                    }
                                    let mut pairs = [(a, l1), (b_len, l2), (c, l3)];
                                    let sorted = {
                                        let mut s = pairs;
                                        s.sort_unstable();
                                        s
                                    };
                                    if pairs != sorted {
                                        continue;
                                    }
                                    pairs.sort_unstable();
                                    let mut bl = GraphBuilder::new();
                                    let center = bl.add_vertex();
                                    for (cyc, link) in pairs {
                                        let far = bl.path_from(center, link);
                                        cycle_through(&mut bl, far, cyc);
                                    }
                                    push(vec![a, b_len, c, l1, l2, l3], bl.build());
                                }
                            }
                        }
                    }
                }
            }
        }
        BaseLabel::G3_7 => {
            // Central cycle with one vertex sending paths to two cycles.
            for b_len in 3..n {
                for a in 3..n {
                    for c in 3..n {
                        for l1 in 1..n {
                            for l2 in 1..n {
                                if a + b_len + c + l1 + l2 != n + 2 || (a, l1) > (c, l2) {
                                    continue;
                                }
                                let mut bl = GraphBuilder::new();
                                let hub = cycle_with_anchor(&mut bl, b_len);
                                let fa = bl.path_from(hub, l1);
                                cycle_through(&mut bl, fa, a);
                                let fc = bl.path_from(hub, l2);
                                cycle_through(&mut bl, fc, c);
                                push(vec![a, b_len, c, l1, l2], bl.build());
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn compositions_at_least(total: usize, parts: usize, min: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if total < min * parts {
            return;
        }
        for v in min..=total.saturating_sub(min * (parts - 1)) {
            cur.push(v);
            go(total - v, parts - 1, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, min, &mut Vec::new(), &mut out);
    out
}

/// Non-increasing tuples with the given sum.
fn partitions_desc(total: usize, parts: usize, min: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = compositions_at_least(total, parts, min)
        .into_iter()
        .filter(|v| v.windows(2).all(|w| w[0] >= w[1]))
        .collect();
    out.sort();
    out
}

/// (arc lengths, chord lengths) with arcs >= 1 summing to a cycle of length
/// >= 3 and chords >= 1, total vertex count n.
fn arcs_and_chords(n: usize, num_arcs: usize, num_chords: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for arcs in compositions_at_least(n + 2, num_arcs + num_chords, 1) {
        let (a, q) = arcs.split_at(num_arcs);
        if a.iter().sum::<usize>() < 3 {
            continue;
        }
        out.push((a.to_vec(), q.to_vec()));
    }
    out
}

/// Ordered cycle length triples (a, b, c) summing to `total`; when `sorted`
/// demands a <= b <= c the symmetric copies are skipped.
fn cycle_triples(total: usize, sorted: bool) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 3..=total {
        for b in 3..=total {
            for c in 3..=total {
                if a + b + c == total && (!sorted || (a <= b && b <= c)) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// Template order fixed for determinism: most-collapsed families first.
const LABEL_ORDER: [BaseLabel; 15] = [
    BaseLabel::G7_1,
    BaseLabel::G6_1,
    BaseLabel::G6_2,
    BaseLabel::G6_3,
    BaseLabel::G4_1,
    BaseLabel::G4_2,
    BaseLabel::G4_3,
    BaseLabel::G4_4,
    BaseLabel::G3_1,
    BaseLabel::G3_2,
    BaseLabel::G3_3,
    BaseLabel::G3_4,
    BaseLabel::G3_5,
    BaseLabel::G3_6,
    BaseLabel::G3_7,
];

/// Types a tricyclic base by enumerating template instantiations of the same
/// order and testing isomorphism, in the fixed label order.
pub fn base_type(g: &Graph) -> Result<BaseType> {
    let c = g.cyclomatic_number()?;
    if c != 3 {
        return Err(Error::NotTricyclic { found: c });
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) < 2) {
        return Err(Error::NotABase { vertex: v });
    }
    let n = g.n();
    let target = canonical_form(g);
    let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    for label in LABEL_ORDER {
        for (params, h) in instances(label, n) {
            let mut hd: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
            hd.sort_unstable();
            if hd != degrees {
                continue;
            }
            if canonical_form(&h) == target {
                return Ok(BaseType { label, params });
            }
        }
    }
    Err(Error::UnclassifiableBase)
}

/// How many templates match; the classification is deterministic because
/// non-degenerate templates are mutually exclusive (used by tests).
pub fn matching_template_count(g: &Graph) -> usize {
    let n = g.n();
    let target = canonical_form(g);
    LABEL_ORDER
        .iter()
        .filter(|&&label| instances(label, n).iter().any(|(_, h)| canonical_form(h) == target))
        .count()
}

pub fn is_block_graph(g: &Graph) -> Result<bool> {
    let bd = block_decomposition(g)?;
    Ok(bd.blocks.iter().all(|b| is_clique(g, b)))
}

fn is_clique(g: &Graph, verts: &[usize]) -> bool {
    verts.iter().enumerate().all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Block graph whose blocks all share one common vertex.
pub fn is_block_star(g: &Graph) -> Result<bool> {
    if !is_block_graph(g)? {
        return Ok(false);
    }
    let bd = block_decomposition(g)?;
    if bd.blocks.len() <= 1 {
        return Ok(true);
    }
    Ok(g.vertices().any(|v| bd.block_membership[v].len() == bd.blocks.len()))
}

/// Block graph in which every vertex lies in at most two blocks.
pub fn is_loose_block_graph(g: &Graph) -> Result<bool> {
    if !is_block_graph(g)? {
        return Ok(false);
    }
    let bd = block_decomposition(g)?;
    Ok(bd.block_membership.iter().all(|m| m.len() <= 2))
}

/// Embedding targets of the block-graph characterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbedTarget {
    /// BG(p,q,3,2,2) for some p,q >= 2. Induced containment is monotone in
    /// p and q and an n-vertex graph can use at most n+1 vertices of either
    /// clique, so testing the single host BG(n+1, n+1, 3, 2, 2) suffices.
    BgFamily,
    Bga,
}

/// Is `g` isomorphic to an induced subgraph of the target? `g` must be
/// connected and nontrivial (n >= 2).
pub fn embeds_as_induced(g: &Graph, target: EmbedTarget) -> Result<bool> {
    g.require_connected()?;
    if g.n() < 2 {
        return Err(Error::TooSmall { min: 2, n: g.n() });
    }
    let host = match target {
        EmbedTarget::Bga => generate(&FamilySpec::Bga).expect("BGA has no parameters"),
        EmbedTarget::BgFamily => {
            let bound = g.n() + 1;
            generate(&FamilySpec::Bg { p: bound.max(2), q: bound.max(2) }).expect("valid BG parameters")
        }
    };
    Ok(has_induced_subgraph(&host, g))
}

/// The block-graph characterization: lambda_2(G) < -1/2 iff G is a block
/// star, or loose, or a nontrivial connected induced subgraph of some
/// BG(p,q,3,2,2) or of BGA.
pub fn blockgraph_lambda2_below(g: &Graph) -> Result<bool> {
    let bd = block_decomposition(g)?;
    if let Some(b) = bd.blocks.iter().find(|b| !is_clique(g, b)) {
        return Err(Error::NotBlockGraph { block: b.clone() });
    }
    if is_block_star(g)? || is_loose_block_graph(g)? {
        return Ok(true);
    }
    Ok(embeds_as_induced(g, EmbedTarget::BgFamily)? || embeds_as_induced(g, EmbedTarget::Bga)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::lambda2;
    use crate::subgraph::is_isomorphic;

    /// Brute-force chordality oracle: some vertex subset induces a cycle of
    /// length >= 4.
    fn chordal_oracle(g: &Graph) -> bool {
        let n = g.n();
        for mask in 0u32..1 << n {
            if (mask.count_ones() as usize) < 4 {
                continue;
            }
            let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let h = g.induced(&subset);
            let is_cycle = h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2);
            if is_cycle {
                return false;
            }
        }
        true
    }

    #[test]
    fn chordality_basics() {
        assert!(!is_chordal(&Graph::cycle(4)));
        assert!(is_chordal(&Graph::complete(4)));
        assert!(is_chordal(&generate(&FamilySpec::T7).unwrap()));
        assert!(is_chordal(&Graph::path(6)));
        assert!(!is_chordal(&Graph::cycle(6)));
    }

    #[test]
    fn chordality_matches_brute_force_oracle() {
        // All labeled graphs on 6 vertices with a sampled stride, plus every
        // graph on 5 vertices.
        for n in [5usize, 6] {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let step = if n == 6 { 7 } else { 1 };
            let mut mask = 0u64;
            while mask < 1 << pairs.len() {
                let edges: Vec<_> =
                    pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::from_edges(n, &edges);
                assert_eq!(is_chordal(&g), chordal_oracle(&g), "n={n} mask={mask}");
                mask += step;
            }
        }
    }

    #[test]
    fn block_decompositions() {
        let bd = block_decomposition(&Graph::path(4)).unwrap();
        assert_eq!(bd.blocks.len(), 3);
        assert!(bd.blocks.iter().all(|b| b.len() == 2));
        assert_eq!(bd.cut_vertices, vec![1, 2]);

        let bd = block_decomposition(&Graph::complete(4)).unwrap();
        assert_eq!(bd.blocks.len(), 1);
        assert_eq!(bd.blocks[0], vec![0, 1, 2, 3]);
        assert!(bd.cut_vertices.is_empty());

        let t1 = generate(&FamilySpec::T1Base { s: 0, t: 0 }).unwrap();
        let bd = block_decomposition(&t1).unwrap();
        assert_eq!(bd.blocks.len(), 3);
        assert!(bd.blocks.iter().all(|b| b.len() == 3));
        assert_eq!(bd.cut_vertices.len(), 2);

        // Every edge lies in exactly one block.
        for g in [Graph::cycle(5), generate(&FamilySpec::T5).unwrap()] {
            let bd = block_decomposition(&g).unwrap();
            for (u, v) in g.edges() {
                let count = bd.blocks.iter().filter(|b| b.contains(&u) && b.contains(&v)).count();
                assert_eq!(count, 1, "edge ({u},{v})");
            }
            for v in g.vertices() {
                assert_eq!(bd.cut_vertices.contains(&v), bd.block_membership[v].len() >= 2);
            }
        }
    }

    #[test]
    fn base_extraction() {
        let t3 = generate(&FamilySpec::T3 { k: 4 }).unwrap();
        let base = base_of(&t3).unwrap();
        let t20 = generate(&FamilySpec::T2Base { p: 0, q: 0 }).unwrap();
        assert!(is_isomorphic(&base, &t20));

        let own = generate(&FamilySpec::T1Base { s: 2, t: 1 }).unwrap();
        assert_eq!(base_of(&own).unwrap(), own);
        // Idempotent.
        assert_eq!(base_of(&base).unwrap(), base);
        assert_eq!(base.cyclomatic_number().unwrap(), 3);
        assert!(base.vertices().all(|v| base.degree(v) >= 2));

        let tg = generate(&FamilySpec::TGeneral { s: 1, t: 0, h: [1, 0, 0, 0, 0] }).unwrap();
        let t11 = generate(&FamilySpec::T1Base { s: 1, t: 0 }).unwrap();
        assert!(is_isomorphic(&base_of(&tg).unwrap(), &t11));

        assert!(matches!(base_of(&Graph::cycle(5)), Err(Error::NotTricyclic { found: 1 })));
    }

    #[test]
    fn base_types_of_known_graphs() {
        let t11 = generate(&FamilySpec::T1Base { s: 1, t: 1 }).unwrap();
        assert_eq!(base_type(&t11).unwrap().label, BaseLabel::G3_3);

        assert_eq!(base_type(&Graph::complete(4)).unwrap().label, BaseLabel::G7_1);

        let t20 = generate(&FamilySpec::T2Base { p: 0, q: 0 }).unwrap();
        assert_eq!(base_type(&t20).unwrap().label, BaseLabel::G3_4);

        let t10 = generate(&FamilySpec::T1Base { s: 0, t: 0 }).unwrap();
        assert_eq!(base_type(&t10).unwrap().label, BaseLabel::G3_1);

        let t40 = generate(&FamilySpec::T4 { t: 0 }).unwrap();
        assert_eq!(base_type(&t40).unwrap().label, BaseLabel::G4_2);

        let f12 = generate(&FamilySpec::Forbidden { i: 12 }).unwrap();
        assert_eq!(base_type(&f12).unwrap().label, BaseLabel::G6_1);

        let f11 = generate(&FamilySpec::Forbidden { i: 11 }).unwrap();
        assert_eq!(base_type(&f11).unwrap().label, BaseLabel::G6_2);

        let pendant = generate(&FamilySpec::T3 { k: 1 }).unwrap();
        assert!(matches!(base_type(&pendant), Err(Error::NotABase { .. })));
    }

    #[test]
    fn every_small_base_gets_exactly_one_label() {
        // All template instantiations on up to 9 vertices must classify as
        // themselves and match exactly one template.
        for n in 4..=9 {
            let mut seen = std::collections::HashSet::new();
            for label in LABEL_ORDER {
                for (params, g) in instances(label, n) {
                    if !seen.insert(canonical_form(&g)) {
                        continue;
                    }
                    assert_eq!(matching_template_count(&g), 1, "{label} {params:?}");
                    assert_eq!(base_type(&g).unwrap().label, label, "{label} {params:?}");
                }
            }
        }
    }

    #[test]
    fn block_graph_predicates() {
        let star = Graph::star(3);
        assert!(is_block_graph(&star).unwrap());
        assert!(is_block_star(&star).unwrap());
        assert!(!is_loose_block_graph(&star).unwrap());

        let path = Graph::path(6);
        assert!(is_block_graph(&path).unwrap());
        assert!(is_loose_block_graph(&path).unwrap());
        assert!(!is_block_star(&path).unwrap());

        assert!(!is_block_graph(&Graph::cycle(4)).unwrap());
        assert!(matches!(blockgraph_lambda2_below(&Graph::cycle(4)), Err(Error::NotBlockGraph { .. })));
    }

    #[test]
    fn embedding_examples() {
        let bga = generate(&FamilySpec::Bga).unwrap();
        assert!(embeds_as_induced(&bga, EmbedTarget::Bga).unwrap());

        let bg22 = generate(&FamilySpec::Bg { p: 2, q: 2 }).unwrap();
        assert!(embeds_as_induced(&bg22, EmbedTarget::BgFamily).unwrap());

        let k14 = Graph::star(4);
        assert!(!embeds_as_induced(&k14, EmbedTarget::Bga).unwrap());
    }

    #[test]
    fn blockgraph_verdicts() {
        assert!(blockgraph_lambda2_below(&Graph::star(3)).unwrap());
        assert!(blockgraph_lambda2_below(&Graph::path(10)).unwrap());

        // Spider with three legs of length 2: ground truth is the direct
        // spectral comparison.
        let spider = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let verdict = blockgraph_lambda2_below(&spider).unwrap();
        let spectral = lambda2(&spider).unwrap() < -0.5 - 1e-9;
        assert_eq!(verdict, spectral);
        assert!(!verdict);
    }
}
