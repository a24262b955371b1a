use super::{Partition, PartitionError};
use crate::qt_ring::{qbinom_poly, QTPoly};
use num_bigint::BigInt;
use std::collections::{HashSet, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripDirection {
    Remove,
    Add,
}

/// `lambda / mu` is a horizontal strip (at most one cell per column).
pub fn is_horizontal_strip(mu: &Partition, lambda: &Partition) -> bool {
    if !lambda.contains_partition(mu) {
        return false;
    }
    (1..=lambda.len()).all(|i| mu.part(i) >= lambda.part(i + 1))
}

/// All `mu` with `lambda / mu` a horizontal `k`-strip (`Remove`), or all `nu`
/// with `nu / lambda` a horizontal `k`-strip (`Add`).
pub fn horizontal_strips(lambda: &Partition, k: u32, direction: StripDirection) -> Vec<Partition> {
    let n = lambda.len();
    let mut out = Vec::new();
    match direction {
        StripDirection::Remove => {
            // lambda_{i+1} <= mu_i <= lambda_i
            let ranges: Vec<(u32, u32)> = (1..=n).map(|i| (lambda.part(i + 1), lambda.part(i))).collect();
            fill(&ranges, lambda.size().checked_sub(k), &mut Vec::new(), &mut out);
        }
        StripDirection::Add => {
            // lambda_i <= nu_i <= lambda_{i-1}, nu_1 unbounded, one extra row.
            let ranges: Vec<(u32, u32)> = (1..=n + 1)
                .map(|i| (lambda.part(i), if i == 1 { lambda.part(1) + k } else { lambda.part(i - 1) }))
                .collect();
            fill(&ranges, Some(lambda.size() + k), &mut Vec::new(), &mut out);
        }
    }
    out.sort();
    out
}

fn fill(ranges: &[(u32, u32)], target: Option<u32>, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    let Some(target) = target else { return };
    let used: u32 = cur.iter().sum();
    if cur.len() == ranges.len() {
        if used == target {
            out.push(Partition::from_unsorted(cur.clone()));
        }
        return;
    }
    let (lo, hi) = ranges[cur.len()];
    let rest_max: u32 = ranges[cur.len() + 1..].iter().map(|r| r.1).sum();
    for v in lo..=hi {
        if used + v > target {
            break;
        }
        if used + v + rest_max < target {
            continue;
        }
        cur.push(v);
        fill(ranges, Some(target), cur, out);
        cur.pop();
    }
}

/// Closed form `c_{mu lambda}(q) = prod_{i>=1} [sigma_lambda(i) choose lambda_i - mu_i]_q`.
pub fn c_coefficient(mu: &Partition, lambda: &Partition) -> QTPoly {
    if !is_horizontal_strip(mu, lambda) {
        return QTPoly::zero();
    }
    (1..=lambda.len())
        .map(|i| {
            let s = (lambda.part(i) - lambda.part(i + 1)) as i64;
            qbinom_poly(s, (lambda.part(i) - mu.part(i)) as i64)
        })
        .product()
}

/// Slide enumeration: starting from the shifted diagram `mu -> lambda`, explore
/// every configuration reachable by unit left slides without overlap, and
/// return `sum_d q^{slide(d)}`.
pub fn slide_polynomial(mu: &Partition, lambda: &Partition) -> Result<QTPoly, PartitionError> {
    if !is_horizontal_strip(mu, lambda) {
        return Err(PartitionError::NotHorizontalStrip(format!("{lambda}/{mu}")));
    }
    // Each row: fixed cells 0..lambda_{i+1}, then the movable cells pushed to the right end of lambda_i.
    let start: Vec<Vec<u32>> = (1..=lambda.len())
        .map(|i| {
            let (li, next, mi) = (lambda.part(i), lambda.part(i + 1), mu.part(i));
            let moving = mi - next;
            let mut row: Vec<u32> = (0..next).collect();
            row.extend(li - moving..li);
            row
        })
        .collect();
    let mut seen: HashSet<Vec<Vec<u32>>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut counts: Vec<u64> = Vec::new();
    seen.insert(start.clone());
    queue.push_back((start, 0usize));
    while let Some((state, d)) = queue.pop_front() {
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
        for (r, row) in state.iter().enumerate() {
            for (k, &x) in row.iter().enumerate() {
                if x == 0 || (k > 0 && row[k - 1] == x - 1) {
                    continue;
                }
                let mut next = state.clone();
                next[r][k] = x - 1;
                if seen.insert(next.clone()) {
                    queue.push_back((next, d + 1));
                }
            }
        }
    }
    Ok(QTPoly::from_terms(counts.iter().enumerate().map(|(d, &c)| ((d as u32, 0), BigInt::from(c)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{p, partitions_of};

    #[test]
    fn strips() {
        assert_eq!(horizontal_strips(&p(&[5, 2]), 1, StripDirection::Remove), vec![p(&[5, 1]), p(&[4, 2])]);
        assert_eq!(horizontal_strips(&p(&[5, 2]), 0, StripDirection::Remove), vec![p(&[5, 2])]);
        assert_eq!(horizontal_strips(&p(&[2]), 2, StripDirection::Add), vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(horizontal_strips(&Partition::empty(), 3, StripDirection::Add), vec![p(&[3])]);
        assert!(horizontal_strips(&p(&[1]), 3, StripDirection::Remove).is_empty());
    }

    #[test]
    fn strips_match_brute_force() {
        for n in 0..=6u32 {
            for lam in partitions_of(n) {
                for k in 0..=n {
                    let brute: Vec<Partition> =
                        partitions_of(n - k).into_iter().filter(|m| is_horizontal_strip(m, &lam)).collect();
                    let mut got = horizontal_strips(&lam, k, StripDirection::Remove);
                    got.sort();
                    let mut brute = brute;
                    brute.sort();
                    assert_eq!(got, brute);
                    let up: Vec<Partition> =
                        partitions_of(n + k).into_iter().filter(|m| is_horizontal_strip(&lam, m)).collect();
                    assert_eq!(horizontal_strips(&lam, k, StripDirection::Add), up);
                }
            }
        }
    }

    #[test]
    fn slide_examples() {
        assert!(slide_polynomial(&p(&[3, 1]), &p(&[3, 1])).unwrap().is_one());
        assert_eq!(slide_polynomial(&p(&[1]), &p(&[2])).unwrap(), crate::qt_ring::qint_poly(2));
        let (mu, lam) = (p(&[10, 7, 5, 2]), p(&[13, 7, 7, 3]));
        assert_eq!(slide_polynomial(&mu, &lam).unwrap(), c_coefficient(&mu, &lam));
        assert!(slide_polynomial(&p(&[2]), &p(&[1, 1])).is_err());
    }
}
