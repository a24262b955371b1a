//! Semistandard tableaux and the charge statistic.

use crate::partitions::{horizontal_strips, Partition, StripDirection};
use crate::qt_ring::QTPoly;
use num_bigint::BigInt;
use std::collections::HashMap;

/// A semistandard tableau in French convention: `rows[0]` is the bottom row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeTableau {
    pub rows: Vec<Vec<u32>>,
}

impl ChargeTableau {
    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    /// Reading word: rows from top to bottom, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn charge(&self) -> u32 {
        charge(&self.reading_word())
    }
}

/// All semistandard tableaux of shape `lambda` and content `mu`.
pub fn ssyt(lambda: &Partition, mu: &Partition) -> Vec<ChargeTableau> {
    fn rec(k: usize, cur: &Partition, rows: &mut Vec<Vec<u32>>, lambda: &Partition, mu: &Partition, out: &mut Vec<ChargeTableau>) {
        if k == mu.len() {
            if cur == lambda {
                out.push(ChargeTableau { rows: rows.clone() });
            }
            return;
        }
        for next in horizontal_strips(cur, mu.parts()[k], StripDirection::Add) {
            if !lambda.contains_partition(&next) {
                continue;
            }
            let saved = rows.clone();
            for j in 0..next.len() {
                if rows.len() <= j {
                    rows.push(Vec::new());
                }
                let add = next.part(j + 1) - cur.part(j + 1);
                rows[j].extend(std::iter::repeat_n(k as u32 + 1, add as usize));
            }
            rec(k + 1, &next, rows, lambda, mu, out);
            *rows = saved;
        }
    }
    if lambda.size() != mu.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(0, &Partition::empty(), &mut Vec::new(), lambda, mu, &mut out);
    out
}

/// Charge of a word with partition content, by standard subword extraction.
pub fn charge(word: &[u32]) -> u32 {
    let mut used = vec![false; word.len()];
    let mut total = 0;
    let max = word.iter().copied().max().unwrap_or(0);
    loop {
        if used.iter().all(|&u| u) {
            break;
        }
        // Extract one standard subword: letters 1, 2, ..., r read leftwards cyclically.
        let mut index = 0;
        let mut pos = word.len();
        for letter in 1..=max {
            // Leftwards from pos, wrapping around to the right end once.
            let left = (0..pos).rev().find(|&i| !used[i] && word[i] == letter);
            let found = left.or_else(|| (pos..word.len()).rev().find(|&i| !used[i] && word[i] == letter));
            let Some(f) = found else { break };
            if letter > 1 && left.is_none() {
                index += 1;
            }
            total += index;
            used[f] = true;
            pos = f;
        }
    }
    total
}

/// Kostka-Foulkes polynomial `K_{lambda mu}(q) = sum_T q^{charge(T)}`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> QTPoly {
    let mut acc: HashMap<u32, i64> = HashMap::new();
    for t in ssyt(lambda, mu) {
        *acc.entry(t.charge()).or_default() += 1;
    }
    QTPoly::from_terms(acc.into_iter().map(|(c, k)| ((c, 0), BigInt::from(k))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{p, partitions_of};
    use crate::qt_ring::parse_qt;

    fn poly(s: &str) -> QTPoly {
        parse_qt(s).unwrap().num().clone()
    }

    #[test]
    fn small_values() {
        assert_eq!(kostka_foulkes(&p(&[4]), &p(&[3, 1])), poly("q"));
        assert_eq!(kostka_foulkes(&p(&[3, 1]), &p(&[2, 1, 1])), poly("q+q^2"));
        assert_eq!(kostka_foulkes(&p(&[4]), &p(&[2, 1, 1])), poly("q^3"));
        assert_eq!(kostka_foulkes(&p(&[2, 2]), &p(&[2, 1, 1])), poly("q"));
        for n in 1..=6 {
            for mu in partitions_of(n) {
                assert!(kostka_foulkes(&mu, &mu).is_one());
                // K_{(n), mu} = q^{eta(mu)}
                assert_eq!(kostka_foulkes(&Partition::row(n), &mu), QTPoly::q_pow(mu.eta() as u32));
            }
        }
    }

    #[test]
    fn charge_of_words() {
        assert_eq!(charge(&[1, 1, 1, 2]), 1);
        assert_eq!(charge(&[3, 1, 1, 2]), 2);
        assert_eq!(charge(&[2, 1, 1, 3]), 1);
        // standard words: charge of 1 2 ... n (reading) is maximal
        assert_eq!(charge(&[1, 2, 3]), 3);
        assert_eq!(charge(&[3, 2, 1]), 0);
    }
}
