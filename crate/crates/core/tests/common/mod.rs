//! Test-side oracles, deliberately independent of the engine's builders:
//! a naive memoized Sprague-Grundy computation with its own follower
//! enumeration, and a brute-force losing-position scan.

#![allow(dead_code)]

use wythoff::rules::RuleId;

/// Naive Sprague-Grundy table, indexed `[a][b]` for `a <= b <= bound`,
/// computed by ascending position total with per-cell follower enumeration
/// written from the game prose (no sharing with the engine's move code).
pub fn naive_table(kind: RuleId, bound: u64) -> Vec<Vec<u32>> {
    let n = bound as usize;
    let mut g: Vec<Vec<u32>> = (0..=n).map(|a| vec![0; n + 1 - a]).collect();
    let val = |g: &Vec<Vec<u32>>, x: usize, y: usize| -> u32 {
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        g[lo][hi - lo]
    };
    for s in 0..=2 * n {
        for a in s.saturating_sub(n)..=s / 2 {
            let b = s - a;
            let mut f: Vec<u32> = Vec::new();
            // any amount from the larger pile
            for t in 1..=b {
                f.push(val(&g, a, b - t));
            }
            // any amount from the smaller pile (not in the restriction
            // unless the piles are equal, where it is the same move)
            if kind != RuleId::RWythoff {
                for t in 1..=a {
                    f.push(val(&g, a - t, b));
                }
            }
            // the same amount from both
            for t in 1..=a {
                f.push(val(&g, a - t, b - t));
            }
            // the extension: k from the smaller pile, l < k from the other
            if kind == RuleId::EWythoff {
                for k in 1..=a {
                    for l in 0..k {
                        f.push(val(&g, a - k, b - l));
                    }
                }
            }
            let mut m = 0u32;
            let mut seen = vec![false; f.len() + 1];
            for v in f {
                if (v as usize) < seen.len() {
                    seen[v as usize] = true;
                }
            }
            while seen[m as usize] {
                m += 1;
            }
            g[a][b - a] = m;
        }
    }
    g
}

pub fn naive_value(table: &[Vec<u32>], a: u64, b: u64) -> u32 {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    table[lo as usize][(hi - lo) as usize]
}

/// Losing positions of the base game up to a bound, found by direct search
/// over the game tree structure (a position loses iff every move wins).
pub fn brute_force_wythoff_p_positions(bound: u64) -> Vec<(u64, u64)> {
    let table = naive_table(RuleId::Wythoff, bound);
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in a..=bound {
            if naive_value(&table, a, b) == 0 {
                out.push((a, b));
            }
        }
    }
    out
}
