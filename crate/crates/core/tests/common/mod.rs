//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use nlie::algebra::NLieAlgebra;
use nlie::exact::{Rational, SymmetricForm};

pub fn q(x: i64) -> Rational {
    Rational::from(x)
}

pub fn e(d: usize, i: usize) -> Vec<Rational> {
    (0..d).map(|j| if i == j { q(1) } else { q(0) }).collect()
}

/// Increasing `k`-tuples of `0..d`.
pub fn tuples(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            rec(i + 1, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, d, k, &mut Vec::new(), &mut out);
    out
}

/// Bracket of vectors through the public evaluation path.
pub fn br(a: &NLieAlgebra, xs: &[Vec<Rational>]) -> Vec<Rational> {
    let refs: Vec<&[Rational]> = xs.iter().map(Vec::as_slice).collect();
    a.bracket(&refs).expect("arity")
}

/// Bracket of basis vectors given by index.
pub fn brb(a: &NLieAlgebra, idx: &[usize]) -> Vec<Rational> {
    let d = a.dim();
    br(a, &idx.iter().map(|&i| e(d, i)).collect::<Vec<_>>())
}

fn add(a: &mut [Rational], b: &[Rational], sign: i64) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += &(y * &q(sign));
    }
}

/// `[x [y₁ … y_n]] = Σᵢ [y₁ … [x yᵢ] … y_n]` on every pair of basis tuples.
pub fn jacobi_holds(a: &NLieAlgebra) -> bool {
    let d = a.dim();
    let n = a.n();
    for x in tuples(d, n - 1) {
        let xs: Vec<Vec<Rational>> = x.iter().map(|&i| e(d, i)).collect();
        let ad = |v: &Vec<Rational>| {
            let mut args = xs.clone();
            args.push(v.clone());
            br(a, &args)
        };
        for y in tuples(d, n) {
            let ys: Vec<Vec<Rational>> = y.iter().map(|&i| e(d, i)).collect();
            let mut res = ad(&br(a, &ys));
            for k in 0..n {
                let mut zs = ys.clone();
                zs[k] = ad(&ys[k]);
                add(&mut res, &br(a, &zs), -1);
            }
            if res.iter().any(|c| !c.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// `⟨[x y], z⟩ + ⟨y, [x z]⟩ = 0` for basis `x` tuples and basis `y`, `z`.
pub fn invariance_holds(a: &NLieAlgebra, g: &SymmetricForm) -> bool {
    let d = a.dim();
    let n = a.n();
    for x in tuples(d, n - 1) {
        for y in 0..d {
            for z in 0..d {
                let mut xy = x.clone();
                xy.push(y);
                let mut xz = x.clone();
                xz.push(z);
                let s = g.pair(&brb(a, &xy), &e(d, z)) + g.pair(&e(d, y), &brb(a, &xz));
                if !s.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
