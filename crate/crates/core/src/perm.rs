//! Cached permutations of the point set {0..6}.
//!
//! Several brute-force searches (plane isomorphism, tournament isomorphism,
//! canonical forms) iterate over all 5040 permutations of seven labels.
//! The table is built once and shared.

use std::sync::OnceLock;

static PERMS7: OnceLock<Vec<[u8; 7]>> = OnceLock::new();

/// All 5040 permutations of `[0, 6]` in lexicographic order.
///
/// `perm[i]` is the image of point `i`.
pub fn permutations7() -> &'static [[u8; 7]] {
    PERMS7.get_or_init(|| {
        let mut out = Vec::with_capacity(5040);
        let mut items: [u8; 7] = [0, 1, 2, 3, 4, 5, 6];
        lex_permutations(&mut items, &mut out);
        out
    })
}

// Generates permutations in lexicographic order by repeated next-permutation.
fn lex_permutations(items: &mut [u8; 7], out: &mut Vec<[u8; 7]>) {
    loop {
        out.push(*items);
        // Find the longest non-increasing suffix.
        let mut i = items.len() - 1;
        while i > 0 && items[i - 1] >= items[i] {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        // Pivot is items[i-1]; swap with rightmost element above it.
        let mut j = items.len() - 1;
        while items[j] <= items[i - 1] {
            j -= 1;
        }
        items.swap(i - 1, j);
        items[i..].reverse();
    }
}

/// Inverse of a permutation of {0..6}.
pub fn invert(perm: &[u8; 7]) -> [u8; 7] {
    let mut inv = [0u8; 7];
    for (i, &p) in perm.iter().enumerate() {
        inv[p as usize] = i as u8;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn table_has_5040_distinct_entries_in_lex_order() {
        let perms = permutations7();
        assert_eq!(perms.len(), 5040);
        let set: HashSet<_> = perms.iter().collect();
        assert_eq!(set.len(), 5040);
        for w in perms.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_eq!(perms[0], [0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(perms[5039], [6, 5, 4, 3, 2, 1, 0]);
    }

    #[test]
    fn invert_round_trips() {
        for perm in permutations7().iter().step_by(97) {
            let inv = invert(perm);
            for p in 0..7u8 {
                assert_eq!(inv[perm[p as usize] as usize], p);
            }
        }
    }
}
