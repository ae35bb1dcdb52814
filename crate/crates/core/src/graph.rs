//! Immutable simple undirected graphs, graph6 I/O and all-pairs distances.
//!
//! Vertices are 0-based contiguous integers. Adjacency is stored as one
//! 128-bit row per vertex, which keeps induced-subgraph extraction and
//! canonical labeling cheap at the orders this crate works with (n <= 126).

use crate::{Error, Result};

pub const MAX_ORDER: usize = 126;

/// Simple undirected graph on `n` vertices, immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u128>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics outside 1..=126; the graph6
    /// parser performs the checked equivalent.
    pub fn empty(n: usize) -> Self {
        assert!(
            (1..=MAX_ORDER).contains(&n),
            "vertex count {n} outside supported range 1..={MAX_ORDER}"
        );
        Graph { n, rows: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut rows = vec![0u128; n];
        for &(u, v) in edges {
            assert!(u < n && v < n && u != v, "bad edge ({u},{v}) for n={n}");
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        let _ = Self::empty(n);
        Graph { n, rows }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let all = mask_all(n);
        for v in 0..n {
            g.rows[v] = all & !(1u128 << v);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// Star K_{1,k} with the center at vertex 0.
    pub fn star(k: usize) -> Self {
        let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
        Graph::from_edges(k + 1, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn neighbors_mask(&self, v: usize) -> u128 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.rows[v];
        (0..self.n).filter(move |&u| row >> u & 1 == 1)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter_map(move |v| self.has_edge(u, v).then_some((u, v))))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Subgraph induced by `verts`; vertex i of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.rows[i] |= 1 << j;
                    g.rows[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// Relabels vertices, sending old vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.rows[perm[u]] |= 1 << perm[v];
            g.rows[perm[v]] |= 1 << perm[u];
        }
        g
    }

    /// Mask of vertices reachable from `start`.
    pub fn reachable_mask(&self, start: usize) -> u128 {
        let mut seen = 1u128 << start;
        loop {
            let mut next = seen;
            let mut frontier = seen;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= self.rows[v];
            }
            if next == seen {
                return seen;
            }
            seen = next;
        }
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_mask(0) == mask_all(self.n)
    }

    /// Ok when connected, otherwise an error naming one unreachable pair.
    pub fn require_connected(&self) -> Result<()> {
        let seen = self.reachable_mask(0);
        if seen == mask_all(self.n) {
            return Ok(());
        }
        let v = (!seen & mask_all(self.n)).trailing_zeros() as usize;
        Err(Error::Disconnected { u: 0, v })
    }

    /// Cyclomatic number c = m - n + 1 of a connected graph; c = 3 marks the
    /// tricyclic graphs this crate is about.
    pub fn cyclomatic_number(&self) -> Result<usize> {
        self.require_connected()?;
        Ok(self.edge_count() + 1 - self.n)
    }

    /// DOT text with vertex ids as labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn mask_all(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Incremental edge-list builder used by the family generators.
#[derive(Default)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        GraphBuilder::default()
    }

    /// Number of vertices allocated so far.
    pub fn peek_n(&self) -> usize {
        self.n
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.edges.push((u, v));
    }

    /// New triangle on three fresh vertices.
    pub fn triangle(&mut self) -> (usize, usize, usize) {
        let a = self.add_vertex();
        let b = self.add_vertex();
        let c = self.add_vertex();
        self.add_edge(a, b);
        self.add_edge(a, c);
        self.add_edge(b, c);
        (a, b, c)
    }

    /// Path of `len` edges starting at `from`; returns the far endpoint
    /// (`from` itself when `len` is 0).
    pub fn path_from(&mut self, from: usize, len: usize) -> usize {
        let mut cur = from;
        for _ in 0..len {
            let next = self.add_vertex();
            self.add_edge(cur, next);
            cur = next;
        }
        cur
    }

    /// Cycle of length `len >= 3` on fresh vertices; returns its vertices.
    pub fn cycle(&mut self, len: usize) -> Vec<usize> {
        debug_assert!(len >= 3);
        let verts: Vec<_> = (0..len).map(|_| self.add_vertex()).collect();
        for i in 0..len {
            self.add_edge(verts[i], verts[(i + 1) % len]);
        }
        verts
    }

    pub fn build(self) -> Graph {
        Graph::from_edges(self.n, &self.edges)
    }
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

/// Decodes one graph6 record (n <= 126, so the size field is either a single
/// byte 63+n or the byte 126 followed by three bytes carrying an 18-bit n).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 { offset: 0, reason: "empty record".into() });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6 {
                offset: i,
                reason: format!("byte 0x{b:02x} outside printable graph6 range 63..=126"),
            });
        }
    }
    let (n, mut off) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6 { offset: 1, reason: "8-byte size field exceeds the supported order".into() });
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6 { offset: bytes.len(), reason: "truncated 3-byte size field".into() });
        }
        let n = ((bytes[1] as usize - 63) << 12) | ((bytes[2] as usize - 63) << 6) | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(Error::Graph6 { offset: 0, reason: format!("vertex count {n} outside 1..=126") });
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != off + nbytes {
        return Err(Error::Graph6 {
            offset: bytes.len().min(off + nbytes),
            reason: format!("expected {} data bytes for n={n}, record has {}", nbytes, bytes.len() - off),
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    // Upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[off + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.rows[i] |= 1 << j;
                g.rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    // Padding bits must be zero.
    while bit < nbytes * 6 {
        let byte = bytes[off + bit / 6] - 63;
        if byte >> (5 - bit % 6) & 1 == 1 {
            return Err(Error::Graph6 { offset: off + bit / 6, reason: "nonzero padding bit".into() });
        }
        bit += 1;
    }
    off += nbytes;
    debug_assert_eq!(off, bytes.len());
    Ok(g)
}

/// Byte-exact graph6 encoding of `g` under its current labeling.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // Orders above 62 use the 3-byte size form; Graph caps n at 126.
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let nbits = n * (n - 1) / 2;
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if !nbits.is_multiple_of(6) {
        acc <<= 6 - nbits % 6;
        out.push(63 + acc);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    /// Principal submatrix on `subset` (order taken from the slice).
    pub fn principal(&self, subset: &[usize]) -> DistanceMatrix {
        let k = subset.len();
        let mut d = vec![0u32; k * k];
        for (a, &i) in subset.iter().enumerate() {
            for (b, &j) in subset.iter().enumerate() {
                d[a * k + b] = self.get(i, j);
            }
        }
        DistanceMatrix { n: k, d }
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }
}

/// All-pairs hop distances via BFS from every vertex. Errors on disconnected
/// input, naming an unreachable pair.
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let full = mask_all(n);
    let mut d = vec![0u32; n * n];
    for s in 0..n {
        let mut seen = 1u128 << s;
        let mut frontier = seen;
        let mut dist = 0u32;
        while seen != full {
            let mut next = 0u128;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= g.neighbors_mask(v);
            }
            next &= !seen;
            if next == 0 {
                let v = (!seen & full).trailing_zeros() as usize;
                return Err(Error::Disconnected { u: s, v });
            }
            dist += 1;
            let mut f = next;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                d[s * n + v] = dist;
            }
            seen |= next;
            frontier = next;
        }
    }
    Ok(DistanceMatrix { n, d })
}
