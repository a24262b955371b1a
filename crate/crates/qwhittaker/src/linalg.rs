//! Dense matrices over exact fields.

use crate::qt_ring::QTRational;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

pub trait Field: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Rough size, used to pick pivots.
    fn weight(&self) -> usize;
    /// `sum a_i b_i`.
    fn sum_products(pairs: &[(&Self, &Self)]) -> Self {
        pairs.iter().fold(Self::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
    }
}

impl Field for QTRational {
    fn zero() -> Self {
        QTRational::zero()
    }
    fn one() -> Self {
        QTRational::one()
    }
    fn is_zero(&self) -> bool {
        QTRational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn weight(&self) -> usize {
        self.num().len() + self.den().len()
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data: Vec<F> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged rows");
        Matrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        Self::from_fn(self.rows, o.cols, |i, j| {
            let pairs: Vec<(&F, &F)> =
                (0..self.cols).map(|k| (self.get(i, k), o.get(k, j))).filter(|(a, b)| !a.is_zero() && !b.is_zero()).collect();
            F::sum_products(&pairs)
        })
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                let pairs: Vec<(&F, &F)> =
                    v.iter().enumerate().map(|(i, a)| (a, self.get(i, j))).filter(|(a, b)| !a.is_zero() && !b.is_zero()).collect();
                F::sum_products(&pairs)
            })
            .collect()
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let pairs: Vec<(&F, &F)> =
                    v.iter().enumerate().map(|(j, x)| (self.get(i, j), x)).filter(|(a, b)| !a.is_zero() && !b.is_zero()).collect();
                F::sum_products(&pairs)
            })
            .collect()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.transpose().is_upper_triangular()
    }

    /// Inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols, "square matrix required");
        let n = self.rows;
        if self.is_upper_triangular() {
            return self.inverse_upper();
        }
        if self.is_lower_triangular() {
            return self.transpose().inverse_upper().map(|m| m.transpose());
        }
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).filter(|&r| !a.get(r, col).is_zero()).min_by_key(|&r| a.get(r, col).weight())?;
            a.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.get(col, j).div(&p));
                inv.set(col, j, inv.get(col, j).div(&p));
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let av = a.get(col, j);
                    if !av.is_zero() {
                        a.set(r, j, a.get(r, j).sub(&f.mul(av)));
                    }
                    let iv = inv.get(col, j);
                    if !iv.is_zero() {
                        inv.set(r, j, inv.get(r, j).sub(&f.mul(iv)));
                    }
                }
            }
        }
        Some(inv)
    }

    fn inverse_upper(&self) -> Option<Matrix<F>> {
        let n = self.rows;
        let mut inv = Self::zeros(n, n);
        for j in 0..n {
            // Solve U x = e_j by back substitution.
            for i in (0..=j).rev() {
                let mut s = if i == j { F::one() } else { F::zero() };
                for k in i + 1..=j {
                    let u = self.get(i, k);
                    if !u.is_zero() {
                        let x = inv.get(k, j);
                        if !x.is_zero() {
                            s = s.sub(&u.mul(x));
                        }
                    }
                }
                let d = self.get(i, i);
                if d.is_zero() {
                    return None;
                }
                inv.set(i, j, s.div(d));
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Unique solution of an overdetermined but consistent system `self * x = b`;
    /// `None` if the system is inconsistent or under-determined.
    pub fn solve_unique(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let (r, c) = (self.rows, self.cols);
        let mut a: Vec<Vec<F>> = (0..r).map(|i| {
            let mut row = self.row(i).to_vec();
            row.push(b[i].clone());
            row
        }).collect();
        let mut pivot_row = 0;
        for col in 0..c {
            let Some(p) = (pivot_row..r).filter(|&i| !a[i][col].is_zero()).min_by_key(|&i| a[i][col].weight()) else {
                return None;
            };
            a.swap(p, pivot_row);
            let pv = a[pivot_row][col].clone();
            for x in a[pivot_row].iter_mut() {
                *x = x.div(&pv);
            }
            let prow = a[pivot_row].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == pivot_row || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
            pivot_row += 1;
        }
        if a[pivot_row..].iter().any(|row| !row[c].is_zero()) {
            return None;
        }
        Some((0..c).map(|k| a[k][c].clone()).collect())
    }

    /// Solves `self * x = b` for square non-singular `self`.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        Some(self.inverse()?.mul_vec(b))
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", r.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt_ring::parse_qt;

    #[test]
    fn inverse_round_trip() {
        let e = |s: &str| parse_qt(s).unwrap();
        let m = Matrix::from_rows(vec![vec![e("q"), e("1"), e("t")], vec![e("1-t"), e("0"), e("2")], vec![e("q t"), e("3"), e("1/(1-q)")]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        let u = Matrix::from_rows(vec![vec![e("1"), e("q")], vec![e("0"), e("t")]]);
        assert_eq!(u.inverse().unwrap().mul(&u), Matrix::identity(2));
    }
}
