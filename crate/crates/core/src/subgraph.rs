//! Canonical labeling, isomorphism testing, and distance-preserving induced
//! subgraph search.
//!
//! Canonical forms come from color refinement plus individualization
//! backtracking: refine until stable, individualize every vertex of the
//! first non-singleton cell in turn, and keep the lexicographically smallest
//! adjacency code over all discrete leaves. No automorphism pruning is done;
//! at the orders this crate handles (n <= 12 in the hot paths) the leaf
//! counts stay tiny.

use crate::families::{forbidden_subgraph, FORBIDDEN_COUNT};
use crate::graph::{distance_matrix, write_graph6, DistanceMatrix, Graph};
use crate::parallel;
use crate::Result;

/// Canonical graph6 string: two graphs have equal canonical forms iff they
/// are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

fn refine(g: &Graph, colors: &mut Vec<u32>) {
    let n = g.n();
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nbr: Vec<u32> = g.neighbors(v).map(|u| colors[u]).collect();
            nbr.sort_unstable();
            sigs.push((colors[v], nbr));
        }
        let mut sorted: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = sigs.iter().map(|s| sorted.binary_search(&s).unwrap() as u32).collect();
        if next == *colors {
            return;
        }
        *colors = next;
    }
}

fn first_non_singleton_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let mut best: Option<u32> = None;
    for &c in colors {
        if colors.iter().filter(|&&x| x == c).count() > 1 && best.is_none_or(|b| c < b) {
            best = Some(c);
        }
    }
    best.map(|c| (0..colors.len()).filter(|&v| colors[v] == c).collect())
}

/// Packed upper-triangle adjacency code under the labeling where vertex v
/// goes to position perm[v]; row-major pair order.
fn code_under(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.n();
    let nbits = n * (n - 1) / 2;
    let mut code = vec![0u64; nbits.div_ceil(64)];
    for (u, v) in g.edges() {
        let (a, b) = {
            let (pa, pb) = (perm[u], perm[v]);
            if pa < pb {
                (pa, pb)
            } else {
                (pb, pa)
            }
        };
        let idx = a * (2 * n - a - 1) / 2 + (b - a - 1);
        code[idx / 64] |= 1 << (idx % 64);
    }
    code
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let mut colors = colors;
    refine(g, &mut colors);
    match first_non_singleton_cell(&colors) {
        None => {
            // Discrete: colors are a permutation.
            let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let code = code_under(g, &perm);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, perm));
            }
        }
        Some(cell) => {
            // Two cell members with equal neighborhoods (apart from each
            // other) are swapped by an automorphism that fixes everything
            // else, so their branches produce identical leaf codes: it is
            // enough to individualize one representative per twin class.
            // This keeps cliques and pendant bundles from branching
            // factorially.
            let mut reps: Vec<usize> = Vec::new();
            'members: for &v in &cell {
                for &r in &reps {
                    let nv = g.neighbors_mask(v) & !(1u128 << r);
                    let nr = g.neighbors_mask(r) & !(1u128 << v);
                    if nv == nr {
                        continue 'members;
                    }
                }
                reps.push(v);
            }
            let fresh = g.n() as u32;
            for v in reps {
                let mut branch = colors.clone();
                branch[v] = fresh;
                search(g, branch, best);
            }
        }
    }
}

/// Label-invariant canonical relabeling: old vertex v goes to position
/// perm[v] in the canonical graph.
pub fn canonical_permutation(g: &Graph) -> Vec<usize> {
    let mut best = None;
    search(g, vec![0; g.n()], &mut best);
    best.expect("search always reaches a discrete leaf").1
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.permuted(&canonical_permutation(g))
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(write_graph6(&canonical_graph(g)))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

/// One induced occurrence of a pattern inside a host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    /// Host vertices used, sorted ascending.
    pub subset: Vec<usize>,
    /// mapping[p] = host vertex that pattern vertex p lands on.
    pub mapping: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Induced,
    DistancePreserving,
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    host_dist: Option<&'a DistanceMatrix>,
    pattern_dist: Option<&'a DistanceMatrix>,
    mode: Mode,
    order: Vec<usize>,
    limit: usize,
    found: Vec<Occurrence>,
}

impl Matcher<'_> {
    /// Pattern vertices ordered so each one after the first touches an
    /// earlier one (the pattern is connected), highest degree first.
    fn connectivity_order(pattern: &Graph) -> Vec<usize> {
        let n = pattern.n();
        let mut order = Vec::with_capacity(n);
        let start = (0..n).max_by_key(|&v| pattern.degree(v)).unwrap();
        order.push(start);
        let mut placed = 1u128 << start;
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| ((pattern.neighbors_mask(v) & placed).count_ones(), pattern.degree(v)))
                .unwrap();
            order.push(next);
            placed |= 1 << next;
        }
        order
    }

    fn extend(&mut self, map: &mut Vec<usize>, used: u128) {
        if self.found.len() >= self.limit {
            return;
        }
        if map.len() == self.order.len() {
            let mut mapping = vec![usize::MAX; self.pattern.n()];
            for (k, &p) in self.order.iter().enumerate() {
                mapping[p] = map[k];
            }
            let mut subset = mapping.clone();
            subset.sort_unstable();
            self.found.push(Occurrence { subset, mapping });
            return;
        }
        let p = self.order[map.len()];
        'candidates: for w in 0..self.host.n() {
            if used >> w & 1 == 1 || self.host.degree(w) < self.pattern.degree(p) {
                continue;
            }
            for (k, &q) in self.order.iter().take(map.len()).enumerate() {
                let hw = map[k];
                match self.mode {
                    Mode::Induced => {
                        if self.pattern.has_edge(p, q) != self.host.has_edge(w, hw) {
                            continue 'candidates;
                        }
                    }
                    Mode::DistancePreserving => {
                        // Exact distance match subsumes the adjacency check.
                        let pd = self.pattern_dist.unwrap().get(p, q);
                        let hd = self.host_dist.unwrap().get(w, hw);
                        if pd != hd {
                            continue 'candidates;
                        }
                    }
                }
            }
            map.push(w);
            self.extend(map, used | 1 << w);
            map.pop();
        }
    }
}

fn find_embeddings(host: &Graph, pattern: &Graph, mode: Mode, limit: usize) -> Result<Vec<Occurrence>> {
    if pattern.n() > host.n() {
        return Ok(Vec::new());
    }
    let (hd, pd);
    let (host_dist, pattern_dist) = if mode == Mode::DistancePreserving {
        hd = distance_matrix(host)?;
        pd = distance_matrix(pattern)?;
        (Some(&hd), Some(&pd))
    } else {
        (None, None)
    };
    let mut m = Matcher {
        host,
        pattern,
        host_dist,
        pattern_dist,
        mode,
        order: Matcher::connectivity_order(pattern),
        limit,
        found: Vec::new(),
    };
    m.extend(&mut Vec::with_capacity(pattern.n()), 0);
    // Deduplicate by subset, keeping the first mapping seen; order results
    // by subset in colex for determinism.
    let mut occ = m.found;
    occ.sort_by(|a, b| colex(&a.subset, &b.subset));
    occ.dedup_by(|a, b| a.subset == b.subset);
    Ok(occ)
}

fn colex(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// True when `pattern` appears as an induced subgraph of `host` (no distance
/// condition).
pub fn has_induced_subgraph(host: &Graph, pattern: &Graph) -> bool {
    find_embeddings(host, pattern, Mode::Induced, 1).map(|v| !v.is_empty()).unwrap_or(false)
}

/// All vertex subsets of the host that induce a copy of `pattern` whose
/// pairwise host distances equal the pattern distances (one occurrence per
/// subset, colex order).
pub fn find_distance_preserving_induced(host: &Graph, pattern: &Graph) -> Result<Vec<Occurrence>> {
    host.require_connected()?;
    pattern.require_connected()?;
    find_embeddings(host, pattern, Mode::DistancePreserving, usize::MAX)
}

/// Scans for the thirteen forbidden subgraphs; reports each pattern index
/// (1-based) found as a distance-preserving induced subgraph, with one
/// witness occurrence.
pub fn scan_forbidden(g: &Graph) -> Result<Vec<(usize, Occurrence)>> {
    g.require_connected()?;
    let hits = parallel::map_collect(
        (1..=FORBIDDEN_COUNT).collect(),
        |&i| -> Result<Option<(usize, Occurrence)>> {
            let pattern = forbidden_subgraph(i);
            let occ = find_embeddings(g, &pattern, Mode::DistancePreserving, 1)?;
            Ok(occ.into_iter().next().map(|o| (i, o)))
        },
    );
    let mut out = Vec::new();
    for h in hits {
        if let Some(hit) = h? {
            out.push(hit);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        // Tiny deterministic xorshift permutation generator.
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state as usize) % (i + 1));
        }
        g.permuted(&perm)
    }

    /// Applies every permutation of the vertex set; ground truth for the
    /// label-invariance contract at small n.
    fn for_all_permutations(g: &Graph, mut visit: impl FnMut(&Graph)) {
        fn go(g: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>, visit: &mut impl FnMut(&Graph)) {
            if perm.len() == g.n() {
                visit(&g.permuted(perm));
                return;
            }
            for p in 0..g.n() {
                if !used[p] {
                    used[p] = true;
                    perm.push(p);
                    go(g, perm, used, visit);
                    perm.pop();
                    used[p] = false;
                }
            }
        }
        go(g, &mut Vec::new(), &mut vec![false; g.n()], &mut visit);
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let k4 = Graph::complete(4);
        for seed in 0..10 {
            assert_eq!(canonical_form(&shuffled(&k4, seed)), canonical_form(&k4));
        }
        assert_ne!(canonical_form(&Graph::complete(3)), canonical_form(&Graph::path(3)));

        let f5 = generate(&FamilySpec::Forbidden { i: 5 }).unwrap();
        let want = canonical_form(&f5);
        for seed in 0..100 {
            assert_eq!(canonical_form(&shuffled(&f5, seed)), want);
        }
    }

    #[test]
    fn canonical_form_invariant_under_all_permutations() {
        let samples = [
            Graph::path(4),
            Graph::cycle(5),
            Graph::star(3),
            Graph::complete(5),
            generate(&FamilySpec::Forbidden { i: 9 }).unwrap(),
            generate(&FamilySpec::Forbidden { i: 11 }).unwrap(),
            generate(&FamilySpec::Forbidden { i: 5 }).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]),
        ];
        let forms: Vec<CanonicalForm> = samples.iter().map(canonical_form).collect();
        for (g, want) in samples.iter().zip(&forms) {
            for_all_permutations(g, |h| assert_eq!(&canonical_form(h), want));
        }
        // The samples are pairwise non-isomorphic, so the forms must be too.
        let mut dedup = forms.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), forms.len());
    }

    #[test]
    fn isomorphism_examples() {
        let k4 = Graph::complete(4);
        assert!(is_isomorphic(&k4, &shuffled(&k4, 7)));
        let t30 = generate(&FamilySpec::T3 { k: 0 }).unwrap();
        let t40 = generate(&FamilySpec::T4 { t: 0 }).unwrap();
        assert!(!is_isomorphic(&t30, &t40));
        assert!(!is_isomorphic(&Graph::cycle(4), &Graph::path(4)));
    }

    #[test]
    fn distance_preserving_self_occurrence() {
        let f11 = generate(&FamilySpec::Forbidden { i: 11 }).unwrap();
        let occ = find_distance_preserving_induced(&f11, &f11).unwrap();
        assert_eq!(occ.len(), 1);
        assert_eq!(occ[0].subset, (0..5).collect::<Vec<_>>());
    }

    #[test]
    fn accepted_family_member_contains_no_forbidden() {
        let host = generate(&FamilySpec::TGeneral { s: 2, t: 2, h: [1, 1, 1, 1, 1] }).unwrap();
        for i in 1..=FORBIDDEN_COUNT {
            let pattern = forbidden_subgraph(i);
            assert!(find_distance_preserving_induced(&host, &pattern).unwrap().is_empty(), "F{i} found");
        }
        assert!(scan_forbidden(&host).unwrap().is_empty());
    }

    #[test]
    fn t2_skeletons_with_paths_contain_f7_or_f3() {
        // A single connecting path already embeds F7 (two triangles at the
        // hub plus a path of length two); F3 needs paths on both sides.
        let host = generate(&FamilySpec::T2Base { p: 1, q: 0 }).unwrap();
        let f7 = forbidden_subgraph(7);
        assert!(!find_distance_preserving_induced(&host, &f7).unwrap().is_empty());

        let host = generate(&FamilySpec::T2Base { p: 1, q: 1 }).unwrap();
        let f3 = forbidden_subgraph(3);
        assert!(!find_distance_preserving_induced(&host, &f3).unwrap().is_empty());
    }

    #[test]
    fn scan_reports_self_and_leaves_t7_clean() {
        let f5 = forbidden_subgraph(5);
        let hits = scan_forbidden(&f5).unwrap();
        assert!(hits.iter().any(|(i, _)| *i == 5));

        let t7 = generate(&FamilySpec::T7).unwrap();
        assert!(scan_forbidden(&t7).unwrap().is_empty());
    }

    #[test]
    fn forbidden_hit_forces_lambda2_up() {
        // Interlacing consequence over every tricyclic class on 6 vertices:
        // a distance-preserving forbidden subgraph pins lambda_2 >= -1/2.
        for g in crate::enumerate::enumerate_connected(6, Some(8), false).unwrap() {
            if !scan_forbidden(&g).unwrap().is_empty() {
                assert!(crate::spectra::lambda2(&g).unwrap() >= -0.5 - 1e-7);
            }
        }
    }

    #[test]
    fn occurrences_verified_post_hoc_and_match_naive_scan() {
        // Naive all-subsets scan as the oracle on hosts with n <= 8.
        let hosts = vec![
            generate(&FamilySpec::Forbidden { i: 13 }).unwrap(),
            generate(&FamilySpec::T3 { k: 1 }).unwrap(),
            generate(&FamilySpec::T2Base { p: 1, q: 0 }).unwrap(),
        ];
        for host in hosts {
            let hd = distance_matrix(&host).unwrap();
            for i in 1..=FORBIDDEN_COUNT {
                let pattern = forbidden_subgraph(i);
                if pattern.n() > host.n() {
                    continue;
                }
                let got = find_distance_preserving_induced(&host, &pattern).unwrap();
                for occ in &got {
                    // Re-verify: induced distances equal host restriction.
                    let induced = host.induced(&occ.subset);
                    let id = distance_matrix(&induced).unwrap();
                    for a in 0..occ.subset.len() {
                        for b in 0..occ.subset.len() {
                            assert_eq!(id.get(a, b), hd.get(occ.subset[a], occ.subset[b]));
                        }
                    }
                    assert!(is_isomorphic(&induced, &pattern));
                }
                let naive = naive_subsets(&host, &pattern, &hd);
                let got_subsets: Vec<Vec<usize>> = got.iter().map(|o| o.subset.clone()).collect();
                assert_eq!(got_subsets, naive, "host vs F{i}");
            }
        }
    }

    fn naive_subsets(host: &Graph, pattern: &Graph, hd: &DistanceMatrix) -> Vec<Vec<usize>> {
        let n = host.n();
        let k = pattern.n();
        let mut out = Vec::new();
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize != k {
                continue;
            }
            let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let induced = host.induced(&subset);
            if !induced.is_connected() || !is_isomorphic(&induced, pattern) {
                continue;
            }
            let id = distance_matrix(&induced).unwrap();
            let preserved = (0..k).all(|a| (0..k).all(|b| id.get(a, b) == hd.get(subset[a], subset[b])));
            if preserved {
                out.push(subset);
            }
        }
        out.sort_by(|a, b| super::colex(a, b));
        out
    }
}
