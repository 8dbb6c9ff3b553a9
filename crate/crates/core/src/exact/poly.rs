//! Univariate polynomials over the rationals: characteristic polynomials
//! and exact rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::Rational;

/// Polynomial with coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// `x - r`
    pub fn linear(r: &Rational) -> Self {
        Poly::new(vec![-r, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let d = a.rows();
        let mut acc = Matrix::zeros(d, d);
        for c in self.coeffs.iter().rev() {
            acc = a.mul(&acc).add(&Matrix::identity(d).scale(c));
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let t = &c * b;
                    rem[k + j] -= t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i as i64))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Multiplicity of `r` as a root.
    pub fn multiplicity(&self, r: &Rational) -> usize {
        let lin = Poly::linear(r);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() {
            let (q, rem) = p.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            p = q;
            m += 1;
        }
        m
    }

    /// All distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = primitive_integer(&self.squarefree());
        let m = f.len() - 1;
        let a = f[m].clone();
        // g(s) = a^(m-1) f(s/a) is monic with integer coefficients; rational
        // roots of f are s/a for integer roots s of g.
        let mut g = vec![BigInt::zero(); m + 1];
        let mut pow = BigInt::one();
        for i in (0..m).rev() {
            g[i] = &f[i] * &pow;
            pow *= &a;
        }
        g[m] = BigInt::one();
        let bound = g.iter().take(m).map(|c| c.abs()).max().unwrap_or_default() + 1u32;
        let gp = Poly::new(g.iter().cloned().map(Rational::from).collect());
        let sturm = sturm_sequence(&gp);
        let mut roots = Vec::new();
        let a_q = Rational::from(a);
        // Endpoints are stored as integers k standing for k + 1/2.
        let mut stack = vec![(-bound.clone() - 1u32, bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = variations(&sturm, &half(&lo)) - variations(&sturm, &half(&hi));
            if count == 0 {
                continue;
            }
            if &hi - &lo == BigInt::one() {
                let s = Rational::from(hi);
                if gp.eval(&s).is_zero() {
                    roots.push(&s / &a_q);
                }
                continue;
            }
            let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        roots.sort();
        roots
    }
}

fn half(k: &BigInt) -> Rational {
    Rational::from_bigints(k * 2 + 1, BigInt::from(2))
}

/// Integer coefficients with content 1 and positive leading coefficient.
fn primitive_integer(p: &Poly) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|c| c / &content * &sign).collect()
}

fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&Rational::from(-1)));
    }
    seq
}

fn variations(seq: &[Poly], x: &Rational) -> i64 {
    let signs: Vec<i32> = seq
        .iter()
        .map(|p| p.eval(x).signum())
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count() as i64
}

/// `det(x I - A)` by the Faddeev–LeVerrier recurrence.
pub fn charpoly(a: &Matrix) -> Poly {
    assert!(a.is_square());
    let d = a.rows();
    let mut c = vec![Rational::zero(); d + 1];
    c[d] = Rational::one();
    let mut m = Matrix::zeros(d, d);
    for k in 1..=d {
        m = a.mul(&m).add(&Matrix::identity(d).scale(&c[d - k + 1]));
        let am = a.mul(&m);
        c[d - k] = -(am.trace() / Rational::from(k as i64));
    }
    Poly::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn charpoly_of_small_matrices() {
        let a = Matrix::from_i64(&[&[2, 1], &[1, 2]]);
        assert_eq!(charpoly(&a), p(&[3, -4, 1]));
        assert_eq!(charpoly(&Matrix::zeros(0, 0)), p(&[1]));
    }

    #[test]
    fn roots_of_products() {
        let f = Poly::linear(&Rational::new(2, 3))
            .mul(&Poly::linear(&Rational::new(-5, 1)))
            .mul(&Poly::linear(&Rational::new(-5, 1)))
            .mul(&p(&[-2, 0, 1]));
        assert_eq!(f.rational_roots(), vec![Rational::from(-5), Rational::new(2, 3)]);
        assert_eq!(f.multiplicity(&Rational::from(-5)), 2);
        assert!(p(&[1, 0, 1]).rational_roots().is_empty());
    }

    proptest! {
        #[test]
        fn recovers_planted_roots(
            roots in proptest::collection::vec((-30i64..30, 1i64..12), 1..6),
            scale in 1i64..50,
        ) {
            let mut f = p(&[scale]);
            for &(n, d) in &roots {
                f = f.mul(&Poly::linear(&Rational::new(n, d)));
            }
            f = f.mul(&p(&[3, 0, 1]));
            let mut expect: Vec<Rational> = roots.iter().map(|&(n, d)| Rational::new(n, d)).collect();
            expect.sort();
            expect.dedup();
            prop_assert_eq!(f.rational_roots(), expect);
        }

        #[test]
        fn cayley_hamilton(v in proptest::collection::vec(-3i64..=3, 16)) {
            let a = Matrix::from_fn(4, 4, |i, j| Rational::from(v[i * 4 + j]));
            prop_assert!(charpoly(&a).eval_matrix(&a).is_zero());
            prop_assert_eq!(charpoly(&a).eval(&Rational::zero()), a.determinant());
        }
    }
}
