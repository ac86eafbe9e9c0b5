use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Stirling number of the second kind via `S(n,i) = i S(n-1,i) + S(n-1,i-1)`.
pub fn stirling2(n: usize, i: usize) -> BigInt {
    if i > n {
        return BigInt::zero();
    }
    stirling2_row(n).swap_remove(i)
}

/// Row `S(n, 0..=n)` of the Stirling triangle.
pub fn stirling2_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for i in 1..=m {
            let carry = if i < m {
                &row[i] * BigInt::from(i)
            } else {
                BigInt::zero()
            };
            next[i] = carry + &row[i - 1];
        }
        row = next;
    }
    row
}

/// Number of integer partitions `p(n)`.
pub fn partition_count(n: usize) -> BigInt {
    partition_counts_upto(n).swap_remove(n)
}

/// `p(0), ..., p(n)` by the coin-change recurrence over part sizes.
pub fn partition_counts_upto(n: usize) -> Vec<BigInt> {
    let mut table = vec![BigInt::zero(); n + 1];
    table[0] = BigInt::one();
    for part in 1..=n {
        for total in part..=n {
            let add = table[total - part].clone();
            table[total] += add;
        }
    }
    table
}

/// Partitions of `m` into at most `k` positive parts, each weakly
/// decreasing, in reverse lexicographic order (largest first part first).
pub fn partitions_at_most_k_parts(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(
        rest: usize,
        max_part: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=max_part.min(rest)).rev() {
            cur.push(part);
            rec(rest - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(stirling2(0, 0), int(1));
        assert_eq!(stirling2(5, 5), int(1));
        assert_eq!(stirling2(5, 0), int(0));
        assert_eq!(stirling2(3, 4), int(0));
        assert_eq!(stirling2(6, 3), int(90));
    }

    #[test]
    fn stirling_counts_set_partitions_of_four() {
        // Brute force: label each element of {0,1,2,3} with a block id in
        // restricted-growth form and count forms using exactly two blocks.
        let mut count = 0;
        for code in 0..4u32.pow(4) {
            let digits: Vec<u32> = (0..4).map(|i| (code / 4u32.pow(i)) % 4).collect();
            let mut max_seen = 0;
            let ok = digits.iter().enumerate().all(|(i, &d)| {
                let fine = if i == 0 { d == 0 } else { d <= max_seen + 1 };
                max_seen = max_seen.max(d);
                fine
            });
            if ok && max_seen == 1 {
                count += 1;
            }
        }
        assert_eq!(stirling2(4, 2), int(count));
    }

    #[test]
    fn stirling_rows_sum_to_bell_numbers() {
        // B_{n+1} = sum_j C(n, j) B_j
        let mut bell = vec![int(1)];
        for n in 0..10u64 {
            let next = (0..=n).map(|j| binomial(n, j) * &bell[j as usize]).sum();
            bell.push(next);
        }
        for n in 0..=10 {
            let total: BigInt = stirling2_row(n).into_iter().sum();
            assert_eq!(total, bell[n], "n = {n}");
        }
    }

    #[test]
    fn partition_values() {
        let p: Vec<BigInt> = partition_counts_upto(10);
        assert_eq!(&p[..5], &[int(1), int(1), int(2), int(3), int(5)]);
        assert_eq!(p[10], int(42));
        assert_eq!(partition_count(0), int(1));
    }

    #[test]
    fn bounded_partitions() {
        assert_eq!(
            partitions_at_most_k_parts(4, 2),
            vec![vec![4], vec![3, 1], vec![2, 2]]
        );
        assert_eq!(partitions_at_most_k_parts(0, 3), vec![Vec::<usize>::new()]);
        assert_eq!(
            partitions_at_most_k_parts(3, 3),
            vec![vec![3], vec![2, 1], vec![1, 1, 1]]
        );
    }

    #[test]
    fn unbounded_parts_match_partition_count() {
        let p = partition_counts_upto(20);
        for m in 0..=20 {
            assert_eq!(
                BigInt::from(partitions_at_most_k_parts(m, m.max(1)).len()),
                p[m]
            );
        }
    }

    #[test]
    fn binomial_symmetry() {
        for n in 0..15 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
            }
        }
        assert_eq!(binomial(6, 3), int(20));
        assert_eq!(binomial(3, 5), int(0));
    }
}
