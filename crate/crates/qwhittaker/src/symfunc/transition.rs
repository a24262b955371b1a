//! Transition matrices between the classical bases, cached per degree.
//!
//! Every matrix is stored with the row convention: row `i` holds the
//! expansion of the `i`-th basis element (partitions in `Partition` order).

use super::Basis;
use crate::linalg::Matrix;
use crate::partitions::{horizontal_strips, partitions_of, Partition, StripDirection};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub type QMatrix = Matrix<BigRational>;

/// Partitions of `n` and their positions.
pub struct Index {
    pub parts: Vec<Partition>,
    pub pos: HashMap<Partition, usize>,
}

pub fn index(n: u32) -> Arc<Index> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Index>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut g = cache.lock().unwrap();
    g.entry(n)
        .or_insert_with(|| {
            let parts = partitions_of(n);
            let pos = parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
            Arc::new(Index { parts, pos })
        })
        .clone()
}

/// Irreducible character `chi^lambda` at cycle type `mu`, by Murnaghan-Nakayama on beta-sets.
pub fn character(lambda: &Partition, mu: &Partition) -> BigInt {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(lambda.clone(), mu.clone())) {
        return v.clone();
    }
    let v = character_raw(lambda, mu);
    cache.lock().unwrap().insert((lambda.clone(), mu.clone()), v.clone());
    v
}

fn character_raw(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    if mu.is_empty() {
        return BigInt::one();
    }
    let r = mu.parts()[0] as i64;
    let rest = Partition::new(mu.parts()[1..].to_vec()).unwrap();
    let l = lambda.len() as i64;
    let beta: Vec<i64> = lambda.parts().iter().enumerate().map(|(i, &p)| p as i64 + l - 1 - i as i64).collect();
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        let nb = b - r;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut nbeta = beta.clone();
        nbeta[idx] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nbeta.iter().enumerate().map(|(i, &x)| (x - (l - 1 - i as i64)) as u32).collect();
        let nl = Partition::new(parts).unwrap();
        let c = character(&nl, &rest);
        if between % 2 == 0 {
            total += c;
        } else {
            total -= c;
        }
    }
    total
}

/// Kostka numbers `K_{lambda mu}` for all `lambda`, given content `mu`.
pub fn kostka_column(mu: &Partition) -> HashMap<Partition, BigInt> {
    let mut cur: HashMap<Partition, BigInt> = HashMap::from([(Partition::empty(), BigInt::one())]);
    for &k in mu.parts() {
        let mut next: HashMap<Partition, BigInt> = HashMap::new();
        for (p, c) in &cur {
            for q in horizontal_strips(p, k, StripDirection::Add) {
                *next.entry(q).or_default() += c;
            }
        }
        cur = next;
    }
    cur
}

fn rat(c: &BigInt) -> BigRational {
    BigRational::from_integer(c.clone())
}

fn build_to_s(n: u32, basis: Basis) -> QMatrix {
    let idx = index(n);
    let len = idx.parts.len();
    match basis {
        Basis::S => QMatrix::identity(len),
        Basis::P => QMatrix::from_fn(len, len, |i, j| rat(&character(&idx.parts[j], &idx.parts[i]))),
        Basis::H => {
            let mut m = QMatrix::zeros(len, len);
            for (i, mu) in idx.parts.iter().enumerate() {
                for (lam, c) in kostka_column(mu) {
                    m.set(i, idx.pos[&lam], rat(&c));
                }
            }
            m
        }
        Basis::E => {
            let mut m = QMatrix::zeros(len, len);
            for (i, mu) in idx.parts.iter().enumerate() {
                for (lam, c) in kostka_column(mu) {
                    m.set(i, idx.pos[&lam.conjugate()], rat(&c));
                }
            }
            m
        }
        Basis::M => {
            // s_lambda = sum_mu K_{lambda mu} m_mu, so m = K^{-1} s.
            let mut k = QMatrix::zeros(len, len);
            for (j, mu) in idx.parts.iter().enumerate() {
                for (lam, c) in kostka_column(mu) {
                    k.set(idx.pos[&lam], j, rat(&c));
                }
            }
            k.inverse().expect("Kostka matrix is unitriangular")
        }
    }
}

/// Matrix sending coefficient rows in `from` to coefficient rows in `to`.
pub fn transition(n: u32, from: Basis, to: Basis) -> Arc<QMatrix> {
    type Key = (u32, Basis, Basis);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<QMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&(n, from, to)) {
        return m.clone();
    }
    let m = if from == to {
        QMatrix::identity(index(n).parts.len())
    } else if to == Basis::S {
        build_to_s(n, from)
    } else if from == Basis::S {
        transition(n, to, Basis::S).inverse().expect("bases are invertible")
    } else {
        transition(n, from, Basis::S).mul(&transition(n, Basis::S, to))
    };
    let m = Arc::new(m);
    cache.lock().unwrap().insert((n, from, to), m.clone());
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::p;

    #[test]
    fn character_table_s3() {
        let chi = |l: &[u32], m: &[u32]| character(&p(l), &p(m));
        assert_eq!(chi(&[2, 1], &[1, 1, 1]), BigInt::from(2));
        assert_eq!(chi(&[2, 1], &[2, 1]), BigInt::from(0));
        assert_eq!(chi(&[2, 1], &[3]), BigInt::from(-1));
        assert_eq!(chi(&[1, 1, 1], &[2, 1]), BigInt::from(-1));
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let idx = index(n);
            for a in &idx.parts {
                for b in &idx.parts {
                    let s: BigInt = idx.parts.iter().map(|l| character(l, a) * character(l, b)).sum();
                    let expect = if a == b { a.z() } else { BigInt::zero() };
                    assert_eq!(s, expect);
                }
            }
        }
    }
}
