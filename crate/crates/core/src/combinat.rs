//! Small enumeration helpers shared by the combinatorial modules.

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All `k`-subsets of the given items, preserving their order.
pub fn subsets_of<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    subsets(items.len(), k)
        .into_iter()
        .map(|s| s.into_iter().map(|i| items[i].clone()).collect())
        .collect()
}

/// All non-decreasing sequences of length `s` over `0..m`, lexicographically.
pub fn multisets(m: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s);
    fn rec(start: usize, m: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i, m, s, cur, out);
            cur.pop();
        }
    }
    rec(0, m, s, &mut cur, &mut out);
    out
}
