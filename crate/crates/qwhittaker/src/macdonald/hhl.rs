//! Combinatorial formula for the modified Macdonald polynomials: a sum over
//! fillings of `q^inv t^maj`, read off in the monomial basis.

use crate::partitions::{partitions_of, Partition};
use crate::qt_ring::{QTPoly, QTRational};
use crate::symfunc::{Basis, SymFunc};
use num_bigint::BigInt;
use std::collections::HashMap;

struct Shape {
    below: Vec<Option<usize>>,
    leg1: Vec<u32>,
    arm: Vec<u32>,
    attacks: Vec<(usize, usize)>,
}

fn shape(mu: &Partition) -> Shape {
    // Reading order: rows top to bottom, each left to right.
    let mut cells: Vec<(u32, u32)> = Vec::new();
    for j in (0..mu.len() as u32).rev() {
        for i in 0..mu.part(j as usize + 1) {
            cells.push((i, j));
        }
    }
    let pos: HashMap<(u32, u32), usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let below = cells.iter().map(|&(i, j)| if j == 0 { None } else { Some(pos[&(i, j - 1)]) }).collect();
    let leg1 = cells.iter().map(|&(i, j)| mu.arm_leg(i, j).1 + 1).collect();
    let arm = cells.iter().map(|&(i, j)| mu.arm_leg(i, j).0).collect();
    let mut attacks = Vec::new();
    for (a, &(ia, ja)) in cells.iter().enumerate() {
        for (b, &(ib, jb)) in cells.iter().enumerate().skip(a + 1) {
            if ja == jb || (ja == jb + 1 && ia > ib) {
                attacks.push((a, b));
            }
        }
    }
    Shape { below, leg1, arm, attacks }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Coefficient of `x^content` in `H~_mu`, i.e. of `m_content`.
pub fn monomial_coefficient(mu: &Partition, content: &Partition) -> QTPoly {
    let sh = shape(mu);
    let mut word: Vec<u8> = Vec::new();
    for (k, &m) in content.parts().iter().enumerate() {
        word.extend(std::iter::repeat_n(k as u8 + 1, m as usize));
    }
    let mut acc: HashMap<(u32, u32), i64> = HashMap::new();
    loop {
        let mut maj = 0u32;
        let mut arm_des = 0u32;
        for (u, b) in sh.below.iter().enumerate() {
            if let Some(b) = b {
                if word[u] > word[*b] {
                    maj += sh.leg1[u];
                    arm_des += sh.arm[u];
                }
            }
        }
        let inv = sh.attacks.iter().filter(|&&(a, b)| word[a] > word[b]).count() as u32 - arm_des;
        *acc.entry((inv, maj)).or_default() += 1;
        if !next_permutation(&mut word) {
            break;
        }
    }
    QTPoly::from_terms(acc.into_iter().map(|(m, c)| (m, BigInt::from(c))))
}

/// `H~_mu` in the Schur basis.
pub fn htilde_hhl(mu: &Partition) -> SymFunc {
    let n = mu.size();
    let m = SymFunc::from_terms(
        Basis::M,
        partitions_of(n).into_iter().map(|lam| {
            let c = monomial_coefficient(mu, &lam);
            (lam, QTRational::from(c))
        }),
    );
    m.to_basis(Basis::S)
}
