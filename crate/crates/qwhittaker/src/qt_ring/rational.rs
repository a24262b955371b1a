use super::gcd::poly_gcd;
use super::poly::QTPoly;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Element of `Q(q,t)` kept as a reduced fraction of polynomials.
///
/// The denominator is non-zero, numerator and denominator are coprime in
/// `Z[q,t]` (content included) and the lex-leading coefficient of the
/// denominator is positive. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QTRational {
    num: QTPoly,
    den: QTPoly,
}

impl Default for QTRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl QTRational {
    pub fn zero() -> Self {
        QTRational { num: QTPoly::zero(), den: QTPoly::one() }
    }

    pub fn one() -> Self {
        QTRational { num: QTPoly::one(), den: QTPoly::one() }
    }

    pub fn q() -> Self {
        QTPoly::q().into()
    }

    pub fn t() -> Self {
        QTPoly::t().into()
    }

    pub fn int<T: Into<BigInt>>(c: T) -> Self {
        QTPoly::constant(c).into()
    }

    /// `a / b` for integers.
    pub fn ratio<T: Into<BigInt>, S: Into<BigInt>>(a: T, b: S) -> Self {
        Self::new(QTPoly::constant(a), QTPoly::constant(b))
    }

    /// `q^a t^b` with signed exponents.
    pub fn monomial(a: i64, b: i64) -> Self {
        let num = QTPoly::monomial(1, a.max(0) as u32, b.max(0) as u32);
        let den = QTPoly::monomial(1, (-a).max(0) as u32, (-b).max(0) as u32);
        QTRational { num, den }
    }

    /// Reduced fraction `num / den`. Panics if `den` is zero.
    pub fn new(num: QTPoly, den: QTPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return QTRational { num, den };
        }
        let g = poly_gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if d.leading().unwrap().1.is_negative() {
            n = -n;
            d = -d;
        }
        QTRational { num: n, den: d }
    }

    /// Trusted constructor: caller guarantees the invariants up to sign.
    fn from_coprime(mut num: QTPoly, mut den: QTPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.leading().unwrap().1.is_negative() {
            num = -num;
            den = -den;
        }
        QTRational { num, den }
    }

    pub fn num(&self) -> &QTPoly {
        &self.num
    }

    pub fn den(&self) -> &QTPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial value, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&QTPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Whether the value is a polynomial with non-negative coefficients.
    pub fn is_positive_poly(&self) -> bool {
        self.den.is_one() && self.num.is_nonnegative()
    }

    /// Whether `t` does not occur.
    pub fn is_q_only(&self) -> bool {
        self.num.is_q_only() && self.den.is_q_only()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::from_coprime(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().pow(-e);
        }
        Self::from_coprime(self.num.pow(e as u32), self.den.pow(e as u32))
    }

    pub fn mul_poly(&self, p: &QTPoly) -> Self {
        self * &QTRational::from(p.clone())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self * &QTRational::int(c.clone())
    }

    /// Multiplication by a rational number, with cheap content reduction.
    pub fn scale_rat(&self, r: &num_rational::BigRational) -> Self {
        use num_integer::Integer;
        if r.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let (a, b) = (r.numer(), r.denom());
        let g1 = self.num.content().gcd(b);
        let g2 = a.gcd(&self.den.content());
        let num = self.num.div_int(&g1).scale(&(a / &g2));
        let den = self.den.div_int(&g2).scale(&(b / &g1));
        Self::from_coprime(num, den)
    }

    pub fn from_rat(r: &num_rational::BigRational) -> Self {
        Self::from_coprime(QTPoly::constant(r.numer().clone()), QTPoly::constant(r.denom().clone()))
    }

    /// The rational number, if the value is constant.
    pub fn as_rat(&self) -> Option<num_rational::BigRational> {
        Some(num_rational::BigRational::new(self.num.as_constant()?, self.den.as_constant()?))
    }

    pub fn div_poly(&self, p: &QTPoly) -> Self {
        self / &QTRational::from(p.clone())
    }

    /// Multiplication by `q^a t^b` for signed exponents.
    pub fn mul_monomial(&self, a: i64, b: i64) -> Self {
        self * &QTRational::monomial(a, b)
    }

    pub fn to_string_with(&self, x: &str, y: &str) -> String {
        let n = self.num.to_string_with(x, y);
        if self.den.is_one() {
            return n;
        }
        let d = self.den.to_string_with(x, y);
        let n = if self.num.len() > 1 { format!("({n})") } else { n };
        // `1 / q*t` would read back as `t / q`.
        let d = if self.den.len() > 1 || d.contains('*') { format!("({d})") } else { d };
        format!("{n} / {d}")
    }
}

impl From<QTPoly> for QTRational {
    fn from(p: QTPoly) -> Self {
        QTRational { num: p, den: QTPoly::one() }
    }
}

impl From<i64> for QTRational {
    fn from(c: i64) -> Self {
        QTRational::int(c)
    }
}

impl fmt::Display for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("q", "t"))
    }
}

impl fmt::Debug for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTRational({self})")
    }
}

fn add_impl(a: &QTRational, b: &QTRational, neg: bool) -> QTRational {
    let bn = if neg { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return QTRational { num: bn, den: b.den.clone() };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den.is_one() && b.den.is_one() {
        return QTRational { num: &a.num + &bn, den: QTPoly::one() };
    }
    if b.den.is_one() {
        // gcd(a.num + bn * a.den, a.den) = gcd(a.num, a.den) = 1
        return QTRational::from_coprime(&a.num + &(&bn * &a.den), a.den.clone());
    }
    if a.den.is_one() {
        return QTRational::from_coprime(&(&a.num * &b.den) + &bn, b.den.clone());
    }
    if a.den == b.den {
        return QTRational::new(&a.num + &bn, a.den.clone());
    }
    let g = poly_gcd(&a.den, &b.den);
    if g.is_one() {
        let num = &(&a.num * &b.den) + &(&bn * &a.den);
        return QTRational::from_coprime(num, &a.den * &b.den);
    }
    let ad = a.den.div_exact(&g).unwrap();
    let bd = b.den.div_exact(&g).unwrap();
    let num = &(&a.num * &bd) + &(&bn * &ad);
    if num.is_zero() {
        return QTRational::zero();
    }
    // Only factors of g can cancel.
    let h = poly_gcd(&num, &g);
    if h.is_one() {
        QTRational::from_coprime(num, &(&ad * &bd) * &g)
    } else {
        let g2 = g.div_exact(&h).unwrap();
        QTRational::from_coprime(num.div_exact(&h).unwrap(), &(&ad * &bd) * &g2)
    }
}

fn mul_impl(a: &QTRational, b: &QTRational) -> QTRational {
    if a.is_zero() || b.is_zero() {
        return QTRational::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return QTRational { num: &a.num * &b.num, den: QTPoly::one() };
    }
    let g1 = poly_gcd(&a.num, &b.den);
    let g2 = poly_gcd(&b.num, &a.den);
    let (an, bd) = if g1.is_one() { (a.num.clone(), b.den.clone()) } else { (a.num.div_exact(&g1).unwrap(), b.den.div_exact(&g1).unwrap()) };
    let (bn, ad) = if g2.is_one() { (b.num.clone(), a.den.clone()) } else { (b.num.div_exact(&g2).unwrap(), a.den.div_exact(&g2).unwrap()) };
    QTRational::from_coprime(&an * &bn, &ad * &bd)
}

impl<'a> Add<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn add(self, o: &QTRational) -> QTRational {
        add_impl(self, o, false)
    }
}

impl<'a> Sub<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn sub(self, o: &QTRational) -> QTRational {
        add_impl(self, o, true)
    }
}

impl<'a> Mul<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn mul(self, o: &QTRational) -> QTRational {
        mul_impl(self, o)
    }
}

impl<'a> Div<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn div(self, o: &QTRational) -> QTRational {
        mul_impl(self, &o.inv())
    }
}

impl Neg for &QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<QTRational> for QTRational {
            type Output = QTRational;
            fn $m(self, o: QTRational) -> QTRational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a QTRational> for QTRational {
            type Output = QTRational;
            fn $m(self, o: &QTRational) -> QTRational {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<QTRational> for &'a QTRational {
            type Output = QTRational;
            fn $m(self, o: QTRational) -> QTRational {
                self.$m(&o)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&QTRational> for QTRational {
    fn add_assign(&mut self, o: &QTRational) {
        *self = add_impl(self, o, false);
    }
}

impl SubAssign<&QTRational> for QTRational {
    fn sub_assign(&mut self, o: &QTRational) {
        *self = add_impl(self, o, true);
    }
}

impl MulAssign<&QTRational> for QTRational {
    fn mul_assign(&mut self, o: &QTRational) {
        *self = mul_impl(self, o);
    }
}

impl std::iter::Sum for QTRational {
    fn sum<I: Iterator<Item = QTRational>>(iter: I) -> Self {
        let mut s = QTRational::zero();
        for x in iter {
            s += &x;
        }
        s
    }
}

impl std::iter::Product for QTRational {
    fn product<I: Iterator<Item = QTRational>>(iter: I) -> Self {
        let mut s = QTRational::one();
        for x in iter {
            s *= &x;
        }
        s
    }
}

impl num_traits::Zero for QTRational {
    fn zero() -> Self {
        QTRational::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl num_traits::One for QTRational {
    fn one() -> Self {
        QTRational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_sign_and_reduction() {
        let q = QTPoly::q();
        let one = QTPoly::one();
        let r = QTRational::new(&one - &q.pow(2), &q - &one);
        assert_eq!(r, QTRational::from(-(&one + &q)));
        let s = QTRational::new(one.clone(), &one - &q);
        assert!(s.den().leading().unwrap().1.is_positive());
        assert_eq!(s.to_string(), "-1 / (q - 1)");
    }

    #[test]
    fn field_operations() {
        let a = QTRational::new(QTPoly::q(), &QTPoly::one() - &QTPoly::t());
        let b = QTRational::new(QTPoly::t(), &QTPoly::one() - &QTPoly::q());
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert!((&a - &a).is_zero());
    }
}
