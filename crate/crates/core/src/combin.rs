//! Small combinatorial enumerators: k-subsets, permutations, signs.

use alloc::vec::Vec;

/// All k-subsets of `{1, ..., n}` in lexicographic order, each sorted
/// ascending.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for v in start..=n.saturating_sub(needed - 1) {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    if k <= n {
        rec(1, n, k, &mut current, &mut out);
    }
    out
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    let mut current = Vec::with_capacity(k);
    fn rec(items: &mut Vec<usize>, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if items.is_empty() {
            out.push(current.clone());
            return;
        }
        for idx in 0..items.len() {
            let v = items.remove(idx);
            current.push(v);
            rec(items, current, out);
            current.pop();
            items.insert(idx, v);
        }
    }
    rec(&mut items, &mut current, &mut out);
    out
}

/// Sign of a permutation of `0..k`, computed from the inversion count.
pub fn perm_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Number of ways to write `total` as an ordered sum of `parts` nonnegative
/// integers.
pub fn composition_count(total: u64, parts: usize) -> u128 {
    if parts == 0 {
        return if total == 0 { 1 } else { 0 };
    }
    // C(total + parts - 1, parts - 1)
    let n = total as u128 + parts as u128 - 1;
    let k = (parts - 1) as u128;
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}
