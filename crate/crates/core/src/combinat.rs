/// Partitions of `n` into parts in `1..=max_part`, each in nonincreasing order.
/// Emitted in reverse lexicographic order, so `[n]` comes first when allowed.
pub fn partitions(n: u32, max_part: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec(n, max_part.min(n), &mut cur, &mut out);
    out
}

fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=max.min(n)).rev() {
        cur.push(p);
        rec(n - p, p, cur, out);
        cur.pop();
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(partitions(4, 4)[0], vec![4]);
        assert_eq!(partitions(5, 2), vec![vec![2, 2, 1], vec![2, 1, 1, 1], vec![1; 5]]);
        assert!(partitions(3, 0).is_empty());
    }
}
