//! Integer partitions, cells and shape statistics (French convention).

mod cells;
mod strips;

pub use cells::{arm, contains, corners, leftmost_rel, leg, rightmost_rel, Cell, Coord, CornerKind, Diagram};
pub use strips::{c_coefficient, horizontal_strips, is_horizontal_strip, slide_polynomial, StripDirection};

use crate::qt_ring::{ExtNat, QTPoly};
use num_bigint::BigInt;
use num_traits::One;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("invalid partition: {0}")]
    Invalid(String),
    #[error("{0} is not a horizontal strip")]
    NotHorizontalStrip(String),
}

/// A weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition; zero parts are dropped, order is checked.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Invalid(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(n: u32) -> Self {
        Partition::from_unsorted(vec![n])
    }

    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `mu_i` with 1-based index; `mu_0 = inf` is not representable here, use [`Partition::part_ext`].
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            panic!("part 0 is infinite");
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `mu_i` including `mu_0 = inf`.
    pub fn part_ext(&self, i: usize) -> ExtNat {
        if i == 0 {
            ExtNat::Inf
        } else {
            ExtNat::Fin(self.part(i) as u64)
        }
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32).collect())
    }

    /// `mu` dominates `other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u32, 0u32);
        let n = self.len().max(other.len());
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `eta(mu) = sum (i-1) mu_i`.
    pub fn eta(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    /// Cell enumerator `B_mu = sum q^i t^j`.
    pub fn cell_enumerator(&self) -> QTPoly {
        QTPoly::from_terms(self.cells().map(|(i, j)| ((i, j), BigInt::one())))
    }

    /// `T_mu = q^{eta(mu')} t^{eta(mu)}`.
    pub fn t_mu(&self) -> QTPoly {
        QTPoly::monomial(1, self.conjugate().eta() as u32, self.eta() as u32)
    }

    /// Step size `sigma_mu(i) = mu_i - mu_{i+1}`, infinite at 0.
    pub fn step(&self, i: usize) -> ExtNat {
        if i == 0 {
            ExtNat::Inf
        } else {
            ExtNat::Fin((self.part(i) - self.part(i + 1)) as u64)
        }
    }

    /// `(sigma(0), sigma(1), ..., sigma(k))`.
    pub fn step_sequence(&self) -> Vec<ExtNat> {
        (0..=self.len()).map(|i| self.step(i)).collect()
    }

    /// Finite cells `(i,j)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().enumerate().flat_map(|(j, &p)| (0..p).map(move |i| (i, j as u32)))
    }

    /// Classical arm and leg of an inside cell.
    pub fn arm_leg(&self, i: u32, j: u32) -> (u32, u32) {
        let a = self.part(j as usize + 1) - i - 1;
        let l = self.0.iter().filter(|&&p| p > i).count() as u32 - j - 1;
        (a, l)
    }

    /// `z_mu = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut k = 0;
        while k < self.0.len() {
            let p = self.0[k];
            let mut m = 0u32;
            while k < self.0.len() && self.0[k] == p {
                m += 1;
                k += 1;
                z *= BigInt::from(p) * BigInt::from(m);
            }
        }
        z
    }

    /// Multiplicities `m_i`, indexed from 1.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.0.first().copied().unwrap_or(0) as usize + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// `v_mu(q) = prod_{c in mu, leg 0} (1 - q^{a(c)+1})`.
    pub fn v_mu(&self) -> QTPoly {
        let mut out = QTPoly::one();
        for (i, j) in self.cells() {
            let (a, l) = self.arm_leg(i, j);
            if l == 0 {
                out = &out * &crate::qt_ring::one_minus_q_pow(a + 1);
            }
        }
        out
    }

    /// Adds one cell to row `j` (0-based); `None` if the result is not a partition.
    pub fn add_cell(&self, j: usize) -> Option<Partition> {
        let mut v = self.0.clone();
        if j == v.len() {
            v.push(1);
        } else if j < v.len() {
            v[j] += 1;
        } else {
            return None;
        }
        if j > 0 && v[j] > v[j - 1] {
            return None;
        }
        Some(Partition(v))
    }

    /// Removes the last cell of row `j` (0-based); `None` if the result is not a partition.
    pub fn remove_cell(&self, j: usize) -> Option<Partition> {
        let mut v = self.0.clone();
        if j >= v.len() {
            return None;
        }
        v[j] -= 1;
        if j + 1 < v.len() && v[j] < v[j + 1] {
            return None;
        }
        if v[j] == 0 {
            v.pop();
        }
        Some(Partition(v))
    }

    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Compact label: `31`, or `[10,2]` when a part has two digits.
    pub fn label(&self) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        if self.0.iter().all(|&p| p < 10) {
            self.0.iter().map(|p| p.to_string()).collect()
        } else {
            self.to_string()
        }
    }

    /// `[sigma_mu(i)]_q`, with `[inf]_q = 1/(1-q)`.
    pub fn step_qint(&self, i: usize) -> crate::qt_ring::QTRational {
        crate::qt_ring::q_analog(self.step(i))
    }
}

impl Ord for Partition {
    /// By size, then reverse lexicographic (so `4 < 31 < 22 < 211 < 1111`).
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `[5,2]`, `5,2`, `5 2`, or the compact `52`; `[]`, `0` and `()` are empty.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']).trim();
        if inner.is_empty() || inner == "0" {
            return Ok(Partition::empty());
        }
        let bad = || PartitionError::Invalid(s.to_string());
        let parts: Vec<u32> = if inner.contains(',') || inner.contains(' ') {
            inner.split([',', ' ']).filter(|x| !x.is_empty()).map(|x| x.parse::<u32>().map_err(|_| bad())).collect::<Result<_, _>>()?
        } else {
            inner.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<_, _>>()?
        };
        Partition::new(parts)
    }
}

impl From<&[u32]> for Partition {
    fn from(v: &[u32]) -> Self {
        Partition::from_unsorted(v.to_vec())
    }
}

/// Shorthand constructor used throughout tests and examples: `p(&[3,1])`.
pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("weakly decreasing parts")
}

/// All partitions of `n`, in the order of [`Partition`]'s `Ord` (dominance-compatible).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with at most `k` parts.
pub fn partitions_with_length(n: u32, k: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| p.len() <= k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt_ring::parse_qt;

    #[test]
    fn basics() {
        let mu = p(&[5, 2]);
        assert_eq!(mu.conjugate(), p(&[2, 2, 1, 1, 1]));
        assert_eq!(mu.cell_enumerator(), parse_qt("1+q+q^2+q^3+q^4+t+q t").unwrap().num().clone());
        assert_eq!(p(&[1, 1, 1, 1]).eta(), 6);
        assert_eq!(p(&[3, 1]).t_mu(), QTPoly::monomial(1, 3, 1));
        let fig = p(&[14, 9, 9, 9, 8, 6, 6]);
        let f = ExtNat::Fin;
        assert_eq!(fig.step_sequence(), vec![ExtNat::Inf, f(5), f(0), f(0), f(1), f(2), f(0), f(6)]);
        assert_eq!(p(&[1, 1, 1]).step_sequence(), vec![ExtNat::Inf, f(0), f(0), f(1)]);
        assert_eq!(p(&[3, 2, 2, 1]).z(), BigInt::from(3 * 2 * 2 * 2));
    }

    #[test]
    fn ordering_and_parsing() {
        let ps = partitions_of(4);
        let labels: Vec<String> = ps.iter().map(|p| p.label()).collect();
        assert_eq!(labels, ["4", "31", "22", "211", "1111"]);
        let mut sorted = ps.clone();
        sorted.sort();
        assert_eq!(sorted, ps);
        assert_eq!("[5,2]".parse::<Partition>().unwrap(), p(&[5, 2]));
        assert_eq!("52".parse::<Partition>().unwrap(), p(&[5, 2]));
        assert_eq!("[10, 7,5]".parse::<Partition>().unwrap(), p(&[10, 7, 5]));
        assert!("[2,5]".parse::<Partition>().is_err());
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn v_mu_matches_step_factorials() {
        for n in 1..=7 {
            for mu in partitions_of(n) {
                let mut rhs = crate::qt_ring::one_minus_q_pow(1).pow(mu.part(1));
                for i in 1..=mu.len() {
                    rhs = &rhs * &crate::qt_ring::qfactorial(mu.step(i).fin().unwrap());
                }
                let lhs = mu.v_mu();
                assert_eq!(lhs, rhs, "{mu}");
            }
        }
    }
}
