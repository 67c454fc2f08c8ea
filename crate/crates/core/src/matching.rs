//! Maximum bipartite matching (augmenting paths) and König's minimum vertex cover.
//!
//! Neighbors are scanned in increasing index order, so results are deterministic.

pub(crate) struct KonigCover {
    pub matching_size: usize,
    pub left: Vec<bool>,
    pub right: Vec<bool>,
}

fn augment(v: usize, adj: &[Vec<usize>], seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
    for &r in &adj[v] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if match_right[r].is_none_or(|l| augment(l, adj, seen, match_right)) {
            match_right[r] = Some(v);
            return true;
        }
    }
    false
}

/// `adj[l]` lists the right neighbors of left vertex `l`, sorted ascending.
pub(crate) fn konig_cover(right_count: usize, adj: &[Vec<usize>]) -> KonigCover {
    let left_count = adj.len();
    let mut match_right: Vec<Option<usize>> = vec![None; right_count];
    let mut matching_size = 0;
    for l in 0..left_count {
        let mut seen = vec![false; right_count];
        if augment(l, adj, &mut seen, &mut match_right) {
            matching_size += 1;
        }
    }
    let mut match_left = vec![None; left_count];
    for (r, l) in match_right.iter().enumerate() {
        if let Some(l) = l {
            match_left[*l] = Some(r);
        }
    }

    // alternating reachability from unmatched left vertices
    let mut reach_left = vec![false; left_count];
    let mut reach_right = vec![false; right_count];
    let mut stack: Vec<usize> = (0..left_count).filter(|&l| match_left[l].is_none()).collect();
    for &l in &stack {
        reach_left[l] = true;
    }
    while let Some(l) = stack.pop() {
        for &r in &adj[l] {
            if reach_right[r] || match_left[l] == Some(r) {
                continue;
            }
            reach_right[r] = true;
            if let Some(next) = match_right[r] {
                if !reach_left[next] {
                    reach_left[next] = true;
                    stack.push(next);
                }
            }
        }
    }

    KonigCover {
        matching_size,
        left: reach_left.iter().map(|&r| !r).collect(),
        right: reach_right,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(right_count: usize, adj: &[Vec<usize>], expected_matching: usize) {
        let cover = konig_cover(right_count, adj);
        assert_eq!(cover.matching_size, expected_matching);
        let size = cover.left.iter().filter(|&&b| b).count() + cover.right.iter().filter(|&&b| b).count();
        assert_eq!(size, expected_matching);
        for (l, rs) in adj.iter().enumerate() {
            for &r in rs {
                assert!(cover.left[l] || cover.right[r], "edge ({l},{r}) uncovered");
            }
        }
    }

    #[test]
    fn small_cases() {
        check(0, &[], 0);
        check(3, &[vec![0, 1, 2]], 1);
        check(2, &[vec![0], vec![0], vec![0, 1]], 2);
        check(3, &[vec![0, 1], vec![0], vec![1, 2]], 3);
        check(4, &[vec![], vec![3], vec![]], 1);
    }

    #[test]
    fn needs_augmenting_path() {
        // greedy picks (0,0) first; maximum needs 0->1, 1->0
        check(2, &[vec![0, 1], vec![0]], 2);
    }
}
