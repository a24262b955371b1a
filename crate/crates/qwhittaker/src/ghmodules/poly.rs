use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Exponent vector `(x_1..x_n, y_1..y_n)`.
pub type Exps = Vec<u8>;

/// Sparse polynomial in `x_1..x_n, y_1..y_n` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Exps, BigRational>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly { n, terms: BTreeMap::new() }
    }

    pub fn monomial(n: usize, exps: Exps, c: BigRational) -> Self {
        assert_eq!(exps.len(), 2 * n, "exponent vector has length 2n");
        let mut p = MultiPoly::zero(n);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Exps, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u8]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, e: Exps, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &BigRational, other: &MultiPoly) {
        for (e, x) in &other.terms {
            self.add_term(e.clone(), c * x);
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.axpy(&BigRational::one(), other);
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.axpy(&-BigRational::one(), other);
        out
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.n);
        }
        MultiPoly { n: self.n, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// `(x-degree, y-degree)` of the leading term; `None` for zero.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let (e, _) = self.terms.iter().next_back()?;
        let dx = e[..self.n].iter().map(|&a| a as u32).sum();
        let dy = e[self.n..].iter().map(|&a| a as u32).sum();
        Some((dx, dy))
    }

    pub fn is_bihomogeneous(&self) -> bool {
        let Some(d) = self.bidegree() else { return true };
        self.terms.keys().all(|e| {
            let dx: u32 = e[..self.n].iter().map(|&a| a as u32).sum();
            let dy: u32 = e[self.n..].iter().map(|&a| a as u32).sum();
            (dx, dy) == d
        })
    }

    /// `d^k/dv^k` for variable index `v` (`0..n` are `x`, `n..2n` are `y`).
    pub fn derivative(&self, v: usize, k: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (e, c) in &self.terms {
            let a = e[v] as u32;
            if a < k {
                continue;
            }
            let mut f = c.clone();
            for r in 0..k {
                f *= BigRational::from_integer(BigInt::from(a - r));
            }
            let mut e2 = e.clone();
            e2[v] -= k as u8;
            out.add_term(e2, f);
        }
        out
    }

    pub fn dx(&self, i: usize, k: u32) -> MultiPoly {
        self.derivative(i, k)
    }

    pub fn dy(&self, i: usize, k: u32) -> MultiPoly {
        self.derivative(self.n + i, k)
    }

    /// Multiply by `y_i`.
    pub fn mul_y(&self, i: usize) -> MultiPoly {
        let v = self.n + i;
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2[v] += 1;
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Diagonal action `x_i -> x_{sigma(i)}`, `y_i -> y_{sigma(i)}`.
    pub fn permute(&self, sigma: &[usize]) -> MultiPoly {
        let n = self.n;
        MultiPoly {
            n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = vec![0u8; 2 * n];
                    for i in 0..n {
                        e2[sigma[i]] = e[i];
                        e2[n + sigma[i]] = e[n + i];
                    }
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    pub fn to_string_xy(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut m = String::new();
            for (v, &a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let name = if v < self.n { format!("x{}", v + 1) } else { format!("y{}", v - self.n + 1) };
                if !m.is_empty() {
                    m.push('*');
                }
                m.push_str(&name);
                if a > 1 {
                    m.push_str(&format!("^{a}"));
                }
            }
            parts.push(match (m.is_empty(), c.is_one()) {
                (true, _) => c.to_string(),
                (false, true) => m,
                (false, false) if *c == -BigRational::one() => format!("-{m}"),
                (false, false) => format!("{c}*{m}"),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Row-reduced basis of a subspace, kept in reduced echelon form keyed by pivot.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<(Exps, MultiPoly)>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &MultiPoly> {
        self.rows.iter().map(|(_, p)| p)
    }

    pub fn pivots(&self) -> impl Iterator<Item = (&Exps, &MultiPoly)> {
        self.rows.iter().map(|(e, p)| (e, p))
    }

    /// Remainder of `p` modulo the span.
    pub fn reduce(&self, p: &MultiPoly) -> MultiPoly {
        let mut p = p.clone();
        for (e, r) in &self.rows {
            let c = p.coeff(e);
            if !c.is_zero() {
                p.axpy(&-c, r);
            }
        }
        p
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Adds `p` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, p: &MultiPoly) -> bool {
        let p = self.reduce(p);
        let Some((e, c)) = p.terms.iter().next_back() else { return false };
        let e = e.clone();
        let p = p.scale(&c.recip());
        for (_, r) in self.rows.iter_mut() {
            let c = r.coeff(&e);
            if !c.is_zero() {
                r.axpy(&-c, &p);
            }
        }
        self.rows.push((e, p));
        true
    }

    /// Trace of a linear map that preserves the span, given its action on rows.
    pub fn trace_of(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> BigRational {
        self.rows.iter().map(|(e, r)| f(r).coeff(e)).fold(BigRational::zero(), |a, b| a + b)
    }

    /// Trace of the diagonal permutation action.
    pub fn permutation_trace(&self, sigma: &[usize]) -> BigRational {
        let n = sigma.len();
        let mut inv = vec![0; n];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s] = i;
        }
        // sigma(r)[e] = r[sigma^{-1} e]
        self.rows
            .iter()
            .map(|(e, r)| {
                let mut e2 = vec![0u8; 2 * n];
                for i in 0..n {
                    e2[inv[i]] = e[i];
                    e2[n + inv[i]] = e[n + i];
                }
                r.coeff(&e2)
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64) -> BigRational {
        BigRational::from_integer(a.into())
    }

    #[test]
    fn derivative_and_permute() {
        // x1^2 y2
        let p = MultiPoly::monomial(2, vec![2, 0, 0, 1], r(3));
        assert_eq!(p.dx(0, 1), MultiPoly::monomial(2, vec![1, 0, 0, 1], r(6)));
        assert_eq!(p.dx(0, 3), MultiPoly::zero(2));
        assert_eq!(p.permute(&[1, 0]), MultiPoly::monomial(2, vec![0, 2, 1, 0], r(3)));
        assert_eq!(p.bidegree(), Some((2, 1)));
    }

    #[test]
    fn echelon_traces() {
        let n = 2;
        let x1 = MultiPoly::monomial(n, vec![1, 0, 0, 0], r(1));
        let x2 = MultiPoly::monomial(n, vec![0, 1, 0, 0], r(1));
        let mut ech = Echelon::new();
        assert!(ech.insert(&x1.sub(&x2)));
        assert!(!ech.insert(&x2.sub(&x1).scale(&r(5))));
        assert_eq!(ech.permutation_trace(&[1, 0]), r(-1));
        assert!(ech.insert(&x1));
        assert_eq!(ech.permutation_trace(&[1, 0]), r(0));
        assert_eq!(ech.permutation_trace(&[0, 1]), r(2));
    }
}
