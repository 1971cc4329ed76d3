//! Slow, obviously-correct reference implementations. They share no code
//! with the matching, coloring or canonical-labeling algorithms and are used
//! to cross-check them on small inputs.

use crate::graph::Graph;

/// Bitmask of edges (by index into `g.edges()`) that form matchings.
fn is_matching_mask(g: &Graph, mask: u64) -> bool {
    let mut used = 0u128;
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if mask >> i & 1 == 1 {
            let bits = 1u128 << u | 1u128 << v;
            if used & bits != 0 {
                return false;
            }
            used |= bits;
        }
    }
    true
}

fn check_size(g: &Graph, max_edges: usize) {
    assert!(
        g.edge_count() <= max_edges && g.n() <= 128,
        "oracle limited to {max_edges} edges and 128 vertices"
    );
}

/// Matching number by trying every edge subset. At most 24 edges.
pub fn brute_nu(g: &Graph) -> usize {
    check_size(g, 24);
    let m = g.edge_count();
    (0u64..1 << m)
        .filter(|&mask| is_matching_mask(g, mask))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Chromatic index as the fewest matchings covering the edge set, by
/// dynamic programming over edge subsets. At most 16 edges.
pub fn brute_chromatic_index(g: &Graph) -> usize {
    check_size(g, 16);
    let m = g.edge_count();
    let full = (1u64 << m) - 1;
    let matching: Vec<bool> = (0..=full).map(|mask| is_matching_mask(g, mask)).collect();
    let mut best = vec![usize::MAX; 1 << m];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // Submasks of `rest`, each joined with the lowest edge.
        let mut sub = rest;
        loop {
            let part = sub | low;
            if matching[part as usize] && best[(mask ^ part) as usize] != usize::MAX {
                best[mask as usize] = best[mask as usize].min(best[(mask ^ part) as usize] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full as usize]
}

/// Whether the edge set splits into maximum matchings, by exact cover over
/// all maximum matchings. At most 20 edges.
pub fn brute_friendly(g: &Graph) -> bool {
    check_size(g, 20);
    let m = g.edge_count();
    let full = (1u64 << m) - 1;
    let nu = brute_nu(g);
    let maximum: Vec<u64> = (1..=full)
        .filter(|&mask| mask.count_ones() as usize == nu && is_matching_mask(g, mask))
        .collect();
    fn cover(remaining: u64, maximum: &[u64]) -> bool {
        if remaining == 0 {
            return true;
        }
        let low = remaining & remaining.wrapping_neg();
        maximum
            .iter()
            .filter(|&&p| p & low != 0 && p & !remaining == 0)
            .any(|&p| cover(remaining ^ p, maximum))
    }
    m > 0 && cover(full, &maximum)
}

/// Calls `f` with every permutation of `0..n`.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    fn rec(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(p, k + 1, f);
            p.swap(k, i);
        }
    }
    let mut p: Vec<usize> = (0..n).collect();
    rec(&mut p, 0, &mut f);
}

/// Isomorphism by trying every vertex bijection.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut found = false;
    for_each_permutation(a.n(), |p| {
        if !found && a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v])) {
            found = true;
        }
    });
    found
}

/// Number of unlabeled graphs on `n` vertices by Burnside's lemma: the
/// average over vertex permutations of `2^(cycles on unordered pairs)`.
pub fn burnside_graph_count(n: usize) -> u128 {
    let mut total = 0u128;
    let mut perms = 0u128;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let index = |i: usize, j: usize| -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        pairs.iter().position(|&p| p == (i, j)).unwrap()
    };
    for_each_permutation(n, |p| {
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0;
        for start in 0..pairs.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                let (i, j) = pairs[k];
                k = index(p[i], p[j]);
            }
        }
        total += 1u128 << cycles;
        perms += 1;
    });
    total / perms
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_values() {
        assert_eq!(brute_nu(&Graph::petersen()), 5);
        assert_eq!(brute_chromatic_index(&Graph::complete(4)), 3);
        assert_eq!(brute_chromatic_index(&Graph::complete(5)), 5);
        assert_eq!(brute_chromatic_index(&Graph::petersen()), 4);
        assert!(brute_friendly(&Graph::cycle(4)));
        assert!(!brute_friendly(&Graph::path(4)));
        assert!(brute_friendly(&Graph::complete(3)));
    }

    #[test]
    fn burnside_counts() {
        let counts: Vec<u128> = (1..=6).map(burnside_graph_count).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn brute_isomorphism() {
        assert!(brute_isomorphic(&Graph::cycle(3), &Graph::complete(3)));
        assert!(!brute_isomorphic(&Graph::star(3), &Graph::path(4)));
    }
}
