//! Symmetric functions with coefficients in `Q(q,t)`.

mod plethysm;
pub mod transition;

pub use plethysm::{e_skew_series, p_k, plethysm, plethysm_scalar, plethysm_single, z, Alphabet, PMono, PlethysmError, Tensor};

use crate::partitions::Partition;
use crate::qt_ring::{parse_qt, QTRational, QtError, Subst};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Classical bases of the ring of symmetric functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub fn letter(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        }
    }
}

impl FromStr for Basis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "m" => Basis::M,
            "e" => Basis::E,
            "h" => Basis::H,
            "p" => Basis::P,
            "s" => Basis::S,
            _ => return Err(format!("unknown basis {s}")),
        })
    }
}

/// Finite linear combination of basis elements of a single basis.
#[derive(Clone)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, QTRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(Basis::S, Partition::empty(), QTRational::one())
    }

    pub fn term(basis: Basis, mu: Partition, c: QTRational) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(mu, c);
        f
    }

    /// A single basis element with coefficient 1.
    pub fn basis_elt(basis: Basis, mu: Partition) -> Self {
        Self::term(basis, mu, QTRational::one())
    }

    pub fn s(mu: &Partition) -> Self {
        Self::basis_elt(Basis::S, mu.clone())
    }

    pub fn p(mu: &Partition) -> Self {
        Self::basis_elt(Basis::P, mu.clone())
    }

    pub fn h(n: u32) -> Self {
        Self::basis_elt(Basis::H, Partition::row(n))
    }

    pub fn e(n: u32) -> Self {
        Self::basis_elt(Basis::E, Partition::row(n))
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, QTRational)>>(basis: Basis, it: I) -> Self {
        let mut f = Self::zero(basis);
        for (mu, c) in it {
            f.add_term(mu, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QTRational> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Partition) -> QTRational {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: Partition, c: QTRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Degrees occurring in the support.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|p| p.size()).collect();
        d.dedup();
        d
    }

    /// The degree, if homogeneous and non-zero.
    pub fn degree(&self) -> Option<u32> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn homogeneous_part(&self, n: u32) -> SymFunc {
        SymFunc { basis: self.basis, terms: self.terms.iter().filter(|(p, _)| p.size() == n).map(|(p, c)| (p.clone(), c.clone())).collect() }
    }

    pub fn scale(&self, c: &QTRational) -> SymFunc {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect() }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&QTRational) -> QTRational) -> SymFunc {
        Self::from_terms(self.basis, self.terms.iter().map(|(p, c)| (p.clone(), f(c))))
    }

    /// Substitution in the coefficients.
    pub fn specialize(&self, rule: &Subst) -> Result<SymFunc, QtError> {
        let mut out = Self::zero(self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.specialize(rule)?);
        }
        Ok(out)
    }

    pub fn to_basis(&self, target: Basis) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        let mut out = Self::zero(target);
        for n in self.degrees() {
            let idx = transition::index(n);
            let m = transition::transition(n, self.basis, target);
            let mut acc: Vec<QTRational> = vec![QTRational::zero(); idx.parts.len()];
            for (mu, c) in self.terms.iter().filter(|(p, _)| p.size() == n) {
                let i = idx.pos[mu];
                for (j, a) in acc.iter_mut().enumerate() {
                    let e = m.get(i, j);
                    if !num_traits::Zero::is_zero(e) {
                        *a += &c.scale_rat(e);
                    }
                }
            }
            for (j, c) in acc.into_iter().enumerate() {
                out.add_term(idx.parts[j].clone(), c);
            }
        }
        out
    }

    /// Dense coefficient vector in `basis` for degree `n`, in `Partition` order.
    pub fn to_vec(&self, basis: Basis, n: u32) -> Vec<QTRational> {
        let f = self.to_basis(basis);
        transition::index(n).parts.iter().map(|p| f.coeff(p)).collect()
    }

    pub fn from_vec(basis: Basis, n: u32, v: &[QTRational]) -> SymFunc {
        let idx = transition::index(n);
        Self::from_terms(basis, idx.parts.iter().cloned().zip(v.iter().cloned()))
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (p, c) in &other.to_basis(self.basis).terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect() }
    }

    /// Product, computed in the power-sum basis and returned in the basis of `self`.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let a = self.to_basis(Basis::P);
        let b = other.to_basis(Basis::P);
        let mut out = Self::zero(Basis::P);
        for (pa, ca) in &a.terms {
            for (pb, cb) in &b.terms {
                let mut parts = pa.parts().to_vec();
                parts.extend_from_slice(pb.parts());
                out.add_term(Partition::from_unsorted(parts), ca * cb);
            }
        }
        out.to_basis(self.basis)
    }

    pub fn pow(&self, k: u32) -> SymFunc {
        let mut out = SymFunc::one().to_basis(self.basis);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// The involution `omega`.
    pub fn omega(&self) -> SymFunc {
        match self.basis {
            Basis::S => Self::from_terms(Basis::S, self.terms.iter().map(|(p, c)| (p.conjugate(), c.clone()))),
            Basis::P => Self::from_terms(
                Basis::P,
                self.terms.iter().map(|(p, c)| (p.clone(), if (p.size() as usize - p.len()).is_multiple_of(2) { c.clone() } else { -c })),
            ),
            Basis::E => SymFunc { basis: Basis::H, terms: self.terms.clone() },
            Basis::H => SymFunc { basis: Basis::E, terms: self.terms.clone() },
            Basis::M => self.to_basis(Basis::S).omega().to_basis(Basis::M),
        }
    }

    /// `g^perp f`, the Hall adjoint of multiplication by `g`; result in the basis of `f`.
    pub fn perp(g: &SymFunc, f: &SymFunc) -> SymFunc {
        let gp = g.to_basis(Basis::P);
        let fp = f.to_basis(Basis::P);
        let mut out = Self::zero(Basis::P);
        for (lam, cg) in &gp.terms {
            for (mu, cf) in &fp.terms {
                if let Some((nu, k)) = p_perp(lam, mu) {
                    out.add_term(nu, (cg * cf).scale_int(&k));
                }
            }
        }
        out.to_basis(f.basis)
    }

    /// Hall scalar product.
    pub fn hall(&self, other: &SymFunc) -> QTRational {
        let a = self.to_basis(Basis::S);
        let b = other.to_basis(Basis::S);
        a.terms.iter().filter_map(|(p, c)| b.terms.get(p).map(|d| c * d)).sum()
    }

    fn diagonal_form(&self, other: &SymFunc, weight: impl Fn(&Partition) -> QTRational) -> QTRational {
        let a = self.to_basis(Basis::P);
        let b = other.to_basis(Basis::P);
        a.terms.iter().filter_map(|(p, c)| b.terms.get(p).map(|d| &(c * d) * &weight(p))).sum()
    }

    /// `<p_l, p_m>_{q,t} = delta z_l prod (1-q^{l_i})/(1-t^{l_i})`.
    pub fn scalar_qt(&self, other: &SymFunc) -> QTRational {
        self.diagonal_form(other, |p| {
            let mut w = QTRational::int(p.z());
            for &k in p.parts() {
                w = &w * &QTRational::new(crate::qt_ring::one_minus_q_pow(k), crate::qt_ring::one_minus_t_pow(k));
            }
            w
        })
    }

    /// `<p_l, p_m>_q = delta z_m prod (1-q^{m_i})`.
    pub fn scalar_q(&self, other: &SymFunc) -> QTRational {
        self.diagonal_form(other, |p| {
            let w: crate::qt_ring::QTPoly = p.parts().iter().map(|&k| crate::qt_ring::one_minus_q_pow(k)).product();
            QTRational::from(w).scale_int(&p.z())
        })
    }

    /// `<p_l, p_m>_* = delta (-1)^{n - l(m)} z_m prod (1-q^{m_i})(1-t^{m_i})`.
    pub fn scalar_star(&self, other: &SymFunc) -> QTRational {
        self.diagonal_form(other, |p| {
            let w: crate::qt_ring::QTPoly =
                p.parts().iter().map(|&k| &crate::qt_ring::one_minus_q_pow(k) * &crate::qt_ring::one_minus_t_pow(k)).product();
            let sign = if (p.size() as usize - p.len()).is_multiple_of(2) { 1 } else { -1 };
            QTRational::from(w).scale_int(&(p.z() * sign))
        })
    }

    /// Structural equality after conversion to the Schur basis.
    pub fn equals(&self, other: &SymFunc) -> bool {
        if self.basis == other.basis {
            return self.terms == other.terms;
        }
        self.to_basis(Basis::S).terms == other.to_basis(Basis::S).terms
    }

    /// Text form such as `s4 + (q^2 + q + t)*s31`.
    pub fn display_with(&self, name: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let label = format!("{name}{}", p.label());
            let mut cs = c.to_string();
            let neg = cs.starts_with('-') && (c.num().len() == 1) && c.den().is_one();
            if neg {
                cs = cs[1..].to_string();
            }
            let body = if cs == "1" {
                label
            } else if c.num().len() > 1 || !c.den().is_one() {
                format!("({cs})*{label}")
            } else {
                format!("{cs}*{label}")
            };
            match (i, neg) {
                (0, true) => out.push_str(&format!("-{body}")),
                (0, false) => out.push_str(&body),
                (_, true) => out.push_str(&format!(" - {body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
            }
        }
        out
    }

    pub fn to_json(&self) -> JsonSym {
        JsonSym {
            basis: self.basis.letter().to_string(),
            n: self.degree(),
            terms: self.terms.iter().map(|(p, c)| JsonTerm { mu: p.parts().to_vec(), c: c.to_string() }).collect(),
        }
    }

    pub fn from_json(j: &JsonSym) -> Result<SymFunc, String> {
        let basis: Basis = j.basis.parse()?;
        let mut f = SymFunc::zero(basis);
        for t in &j.terms {
            let mu = Partition::new(t.mu.clone()).map_err(|e| e.to_string())?;
            let c = parse_qt(&t.c).map_err(|e| e.to_string())?;
            f.add_term(mu, c);
        }
        Ok(f)
    }
}

/// `p_lam^perp p_mu = (prod k m_k ...) p_{mu - lam}` when `lam` is a sub-multiset of `mu`.
fn p_perp(lam: &Partition, mu: &Partition) -> Option<(Partition, BigInt)> {
    let mut rest: Vec<u32> = mu.parts().to_vec();
    let mut coef = BigInt::from(1);
    for &k in lam.parts() {
        let mult = rest.iter().filter(|&&x| x == k).count();
        if mult == 0 {
            return None;
        }
        coef *= BigInt::from(k) * BigInt::from(mult);
        let pos = rest.iter().position(|&x| x == k).unwrap();
        rest.remove(pos);
    }
    Some((Partition::from_unsorted(rest), coef))
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(self.basis.letter()))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub mu: Vec<u32>,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonSym {
    pub basis: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u32>,
    pub terms: Vec<JsonTerm>,
}

/// Parses `s4 + (q^2+q)*s31 - q*s211` style expressions in one basis.
pub fn parse_symfunc(text: &str) -> Result<SymFunc, String> {
    let text = text.trim();
    if text == "0" {
        return Ok(SymFunc::zero(Basis::S));
    }
    // Split on top-level + and -.
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    for ch in text.chars() {
        match ch {
            '(' | '{' | '[' => depth += 1,
            ')' | '}' | ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && !cur.trim().is_empty() && !cur.trim_end().ends_with(['^', '*']) {
            pieces.push((neg, cur.trim().to_string()));
            cur.clear();
            neg = ch == '-';
            continue;
        }
        if depth == 0 && ch == '-' && cur.trim().is_empty() {
            neg = !neg;
            continue;
        }
        cur.push(ch);
    }
    pieces.push((neg, cur.trim().to_string()));
    let mut basis: Option<Basis> = None;
    let mut out: Vec<(Partition, QTRational)> = Vec::new();
    for (neg, piece) in pieces {
        let (coef, elt) = match piece.rfind('*') {
            Some(k) if piece[k + 1..].trim().starts_with(['m', 'e', 'h', 'p', 's']) => (piece[..k].trim().to_string(), piece[k + 1..].trim().to_string()),
            _ => (String::from("1"), piece.clone()),
        };
        let b: Basis = elt[..1].parse()?;
        if basis.is_some_and(|x| x != b) {
            return Err("mixed bases".into());
        }
        basis = Some(b);
        let mu: Partition = elt[1..].trim_start_matches('_').parse().map_err(|e: crate::partitions::PartitionError| e.to_string())?;
        let mut c = parse_qt(&coef).map_err(|e| e.to_string())?;
        if neg {
            c = -c;
        }
        out.push((mu, c));
    }
    Ok(SymFunc::from_terms(basis.unwrap_or(Basis::S), out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{p, partitions_of};
    use crate::qt_ring::QTRational as R;

    #[test]
    fn conversions() {
        let s21 = SymFunc::s(&p(&[2, 1])).to_basis(Basis::P);
        assert_eq!(s21.coeff(&p(&[1, 1, 1])), R::ratio(1, 3));
        assert_eq!(s21.coeff(&p(&[3])), R::ratio(-1, 3));
        assert_eq!(s21.terms().len(), 2);
        let e2 = SymFunc::e(2).to_basis(Basis::M);
        assert_eq!(e2.to_string(), "m11");
        assert_eq!(SymFunc::h(2).to_basis(Basis::S).to_string(), "s2");
        for n in 1..=5 {
            for mu in partitions_of(n) {
                for b in [Basis::M, Basis::E, Basis::H, Basis::P] {
                    let f = SymFunc::s(&mu);
                    assert_eq!(f.to_basis(b).to_basis(Basis::S).terms, f.terms);
                }
            }
        }
    }

    #[test]
    fn omega_perp_products() {
        assert_eq!(SymFunc::s(&p(&[3, 1])).omega().to_string(), "s211");
        assert!(SymFunc::e(4).omega().equals(&SymFunc::h(4)));
        assert!(SymFunc::e(3).to_basis(Basis::P).omega().equals(&SymFunc::h(3)));
        let r = SymFunc::perp(&SymFunc::h(1), &SymFunc::s(&p(&[2, 1])));
        assert_eq!(r.to_string(), "s2 + s11");
        // (h1^perp)^n s_mu = number of standard tableaux.
        let f = SymFunc::perp(&SymFunc::h(1).pow(4), &SymFunc::s(&p(&[3, 1])));
        assert_eq!(f.coeff(&Partition::empty()), R::int(3));
        let prod = SymFunc::s(&p(&[1])).mul(&SymFunc::s(&p(&[1])));
        assert_eq!(prod.to_string(), "s2 + s11");
    }

    #[test]
    fn scalar_products() {
        for mu in partitions_of(4) {
            for nu in partitions_of(4) {
                let v = SymFunc::s(&mu).hall(&SymFunc::s(&nu).to_basis(Basis::P));
                assert_eq!(v.is_one(), mu == nu);
                assert_eq!(v.is_zero(), mu != nu);
            }
        }
        let a = SymFunc::p(&p(&[2, 1]));
        assert_eq!(a.scalar_q(&a), parse_qt("2*(1-q)(1-q^2)").unwrap());
    }

    #[test]
    fn text_and_json_forms() {
        let f = parse_symfunc("s4 + (q^2 + q + t)*s31 - q*s211 + s[10,2]").unwrap();
        assert_eq!(f.coeff(&p(&[2, 1, 1])), R::q().scale_int(&BigInt::from(-1)));
        assert_eq!(parse_symfunc(&f.to_string()).unwrap().terms, f.terms);
        let j = serde_json::to_string(&f.homogeneous_part(4).to_json()).unwrap();
        assert!(j.starts_with(r#"{"basis":"s","n":4,"terms":[{"mu":[4],"c":"1"}"#), "{j}");
        let back: JsonSym = serde_json::from_str(&j).unwrap();
        assert!(SymFunc::from_json(&back).unwrap().equals(&f.homogeneous_part(4)));
    }
}
