use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::Symbol;

/// Bit-parallel LCS length, `O(ceil(min/64) * max)` word operations.
pub fn lcs_length(x: &[Symbol], y: &[Symbol]) -> usize {
    let (x, y) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    if x.is_empty() {
        return 0;
    }
    let words = x.len().div_ceil(64);
    let mut masks: BTreeMap<Symbol, Vec<u64>> = BTreeMap::new();
    for (i, &c) in x.iter().enumerate() {
        masks.entry(c).or_insert_with(|| vec![0; words])[i / 64] |= 1 << (i % 64);
    }
    // a zero bit in v marks a position of x used by the current LCS
    let mut v = vec![!0u64; words];
    for c in y {
        let Some(m) = masks.get(c) else { continue };
        let mut carry = false;
        for (vk, &mk) in v.iter_mut().zip(m) {
            let u = *vk & mk;
            let (s1, c1) = vk.overflowing_add(u);
            let (s2, c2) = s1.overflowing_add(carry as u64);
            carry = c1 | c2;
            *vk = s2 | (*vk & !mk);
        }
    }
    v.iter().map(|w| w.count_zeros() as usize).sum()
}

/// Number of unmatched symbols, `|x| + |y| - 2|LCS(x,y)|`.
pub fn delta_lcs(x: &[Symbol], y: &[Symbol]) -> usize {
    x.len() + y.len() - 2 * lcs_length(x, y)
}

/// Longest palindromic subsequence by the interval DP.
pub fn lps_length(x: &[Symbol]) -> usize {
    let n = x.len();
    if n == 0 {
        return 0;
    }
    // row[j] holds LPS(x[i..=j]) for the current i; prev for i+1.
    let mut prev = vec![0usize; n];
    let mut row = vec![0usize; n];
    for i in (0..n).rev() {
        row[i] = 1;
        for j in i + 1..n {
            row[j] = if x[i] == x[j] {
                if j == i + 1 { 2 } else { prev[j - 1] + 2 }
            } else {
                prev[j].max(row[j - 1])
            };
        }
        core::mem::swap(&mut prev, &mut row);
    }
    prev[n - 1]
}

/// Longest tandem subsequence `ww`, by splitting into two LCS problems.
pub fn lts_length(x: &[Symbol]) -> usize {
    (1..x.len())
        .map(|i| 2 * lcs_length(&x[..i], &x[i..]))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn bits(s: &str) -> Vec<Symbol> {
        s.bytes().map(|b| (b - b'0') as Symbol).collect()
    }

    fn lcs_dp(x: &[Symbol], y: &[Symbol]) -> usize {
        let mut prev = vec![0usize; y.len() + 1];
        for &a in x {
            let mut cur = vec![0usize; y.len() + 1];
            for j in 0..y.len() {
                cur[j + 1] = if a == y[j] { prev[j] + 1 } else { prev[j + 1].max(cur[j]) };
            }
            prev = cur;
        }
        prev[y.len()]
    }

    #[test]
    fn bit_parallel_matches_dp_across_word_boundaries() {
        let mut state = 12345u64;
        let mut next = |k: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % k) as Symbol
        };
        for &(n, m, sigma) in &[(63, 70, 2), (64, 64, 2), (65, 200, 3), (130, 129, 4), (1, 300, 2), (200, 7, 26)] {
            let x: Vec<Symbol> = (0..n).map(|_| next(sigma)).collect();
            let y: Vec<Symbol> = (0..m).map(|_| next(sigma)).collect();
            assert_eq!(lcs_length(&x, &y), lcs_dp(&x, &y), "n={n} m={m}");
            assert_eq!(lcs_length(&y, &x), lcs_dp(&x, &y));
        }
    }

    fn reversed(x: &[Symbol]) -> Vec<Symbol> {
        x.iter().rev().copied().collect()
    }

    fn is_subsequence(sub: &[Symbol], s: &[Symbol]) -> bool {
        let mut it = s.iter();
        sub.iter().all(|c| it.any(|d| d == c))
    }

    fn subsequences(x: &[Symbol]) -> impl Iterator<Item = Vec<Symbol>> + '_ {
        (0u32..1 << x.len()).map(move |mask| {
            (0..x.len()).filter(|&i| mask >> i & 1 == 1).map(|i| x[i]).collect()
        })
    }

    fn lps_brute(x: &[Symbol]) -> usize {
        subsequences(x).filter(|s| s.iter().eq(s.iter().rev())).map(|s| s.len()).max().unwrap()
    }

    fn lts_brute(x: &[Symbol]) -> usize {
        subsequences(x)
            .filter(|s| s.len() % 2 == 0 && s[..s.len() / 2] == s[s.len() / 2..])
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    fn lcs_brute(x: &[Symbol], y: &[Symbol]) -> usize {
        subsequences(x).filter(|s| is_subsequence(s, y)).map(|s| s.len()).max().unwrap()
    }

    #[test]
    fn coordinate_lcs() {
        assert_eq!(lcs_length(&bits("11100"), &bits("00111")), 3);
        assert_eq!(delta_lcs(&bits("11100"), &bits("00111")), 4);
        assert_eq!(delta_lcs(&bits("1100"), &bits("0011")), 4);
        assert_eq!(lcs_brute(&bits("1100"), &bits("0011")), 2);
    }

    #[test]
    fn identity() {
        let x = bits("0110101");
        assert_eq!(lcs_length(&x, &x), x.len());
        assert_eq!(delta_lcs(&x, &x), 0);
    }

    #[test]
    fn lps_small() {
        assert_eq!(lps_length(&[]), 0);
        assert_eq!(lps_length(&bits("10101")), 5);
        assert_eq!(lps_brute(&bits("110100")), 3);
        assert_eq!(lps_length(&bits("110100")), 3);
        assert_eq!(lps_length(&bits("110100")), lcs_length(&bits("110100"), &reversed(&bits("110100"))));
    }

    #[test]
    fn lts_small() {
        assert_eq!(lts_length(&bits("0101")), 4);
        assert_eq!(lts_length(&bits("1")), 0);
        assert_eq!(lts_length(&[]), 0);
        assert_eq!(lts_brute(&bits("110010")), 4);
        assert_eq!(lts_length(&bits("110010")), 4);
    }

    #[test]
    fn against_enumeration() {
        for mask in 0u32..1 << 8 {
            let len = 3 + (mask % 6) as usize;
            let x: Vec<Symbol> = (0..len).map(|i| (mask.rotate_left(i as u32 * 3) >> 2) & 1).collect();
            assert_eq!(lps_length(&x), lps_brute(&x), "{x:?}");
            assert_eq!(lts_length(&x), lts_brute(&x), "{x:?}");
            let (a, b) = x.split_at(len / 2);
            assert_eq!(lcs_length(a, b), lcs_brute(a, b));
        }
    }
}
