//! All complex roots of an integer polynomial by Aberth iteration.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Cx, ZERO};
use crate::poly::IntPoly;

pub const MAX_ITERATIONS: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub z: Cx,
    /// Radius of a disc around `z` containing a root (inclusion bound from
    /// the residual; zero for exact roots at the origin).
    pub error_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub roots: Vec<Root>,
    pub source_poly: IntPoly,
}

impl RootSet {
    pub fn values(&self) -> Vec<Cx> {
        self.roots.iter().map(|r| r.z).collect()
    }

    /// Residual acceptance threshold: `1e-9 · (1 + max|coeff|)`.
    pub fn residual_bound(&self) -> f64 {
        residual_bound(&self.source_poly)
    }
}

fn residual_bound(p: &IntPoly) -> f64 {
    1e-9 * (1.0 + p.max_abs_coeff() as f64)
}

/// Finds every root with multiplicity. Roots come back with real roots first
/// (ascending), then conjugate pairs with the upper half-plane member first.
pub fn solve_roots(poly: &IntPoly) -> Result<RootSet> {
    let deg = poly.degree().unwrap_or(0);
    if poly.is_zero() || deg == 0 {
        return Err(Error::Usage("root finding needs degree ≥ 1".into()));
    }
    let v = poly.valuation();
    let core = poly.strip_valuation();
    let mut found = if core.degree().unwrap_or(0) > 0 { aberth(&core)? } else { Vec::new() };
    pair_conjugates(&mut found);
    for _ in 0..2 {
        polish(&core, &mut found);
    }
    let bound = residual_bound(poly);
    let bad: Vec<Cx> = found.iter().copied().filter(|z| poly.eval(*z).norm() > bound).collect();
    if !bad.is_empty() {
        return Err(Error::NumericFailure { iterations: MAX_ITERATIONS, partial: found });
    }
    let mut roots: Vec<Root> =
        found.iter().enumerate().map(|(j, &z)| Root { z, error_bound: inclusion_radius(&core, &found, j) }).collect();
    roots.extend(std::iter::repeat_n(Root { z: ZERO, error_bound: 0.0 }, v));
    sort_roots(&mut roots);
    Ok(RootSet { roots, source_poly: poly.clone() })
}

fn monic(p: &IntPoly) -> Vec<Cx> {
    let lc = p.leading() as f64;
    p.coeffs().iter().map(|&c| Cx::new(c as f64 / lc, 0.0)).collect()
}

fn horner(c: &[Cx], z: Cx) -> (Cx, Cx) {
    let mut p = ZERO;
    let mut dp = ZERO;
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn aberth(p: &IntPoly) -> Result<Vec<Cx>> {
    let c = monic(p);
    let n = c.len() - 1;
    let radius = 1.0 + c[..n].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let mut z: Vec<Cx> = (0..n).map(|j| Cx::from_polar(radius, 2.0 * PI * j as f64 / n as f64 + 0.4)).collect();
    for _ in 0..MAX_ITERATIONS {
        let mut moved = 0.0f64;
        for j in 0..n {
            let (pv, dv) = horner(&c, z[j]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dv;
            let s: Cx = (0..n).filter(|&k| k != j).map(|k| (z[j] - z[k]).inv()).sum();
            let w = ratio / (Cx::new(1.0, 0.0) - ratio * s);
            if w.re.is_finite() && w.im.is_finite() {
                z[j] -= w;
                moved = moved.max(w.norm() / (1.0 + z[j].norm()));
            }
        }
        if moved <= 4.0 * f64::EPSILON {
            return Ok(z);
        }
    }
    let bound = residual_bound(p);
    if z.iter().all(|r| p.eval(*r).norm() <= bound) {
        Ok(z)
    } else {
        Err(Error::NumericFailure { iterations: MAX_ITERATIONS, partial: z })
    }
}

fn polish(p: &IntPoly, z: &mut [Cx]) {
    let c = monic(p);
    for r in z.iter_mut() {
        let (pv, dv) = horner(&c, *r);
        if dv.norm() > 1e-8 {
            let next = *r - pv / dv;
            if horner(&c, next).0.norm() <= pv.norm() {
                *r = next;
            }
        }
    }
}

/// Snaps near-real roots to the axis and makes non-real roots exact
/// conjugate pairs, as they must be for a real polynomial.
fn pair_conjugates(z: &mut Vec<Cx>) {
    let mut real = Vec::new();
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for &r in z.iter() {
        if r.im.abs() <= 1e-10 * (1.0 + r.norm()) {
            real.push(Cx::new(r.re, 0.0));
        } else if r.im > 0.0 {
            upper.push(r);
        } else {
            lower.push(r);
        }
    }
    if upper.len() != lower.len() {
        return;
    }
    let mut out = real;
    for u in upper {
        let (k, _) = lower
            .iter()
            .enumerate()
            .map(|(k, l)| (k, (l.conj() - u).norm()))
            .fold((0, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
        let l = lower.swap_remove(k);
        let m = (u + l.conj()) / 2.0;
        out.push(m);
        out.push(m.conj());
    }
    *z = out;
}

/// `n·|p(z_j)| / |lc · Π_{k≠j}(z_j − z_k)|`.
fn inclusion_radius(p: &IntPoly, z: &[Cx], j: usize) -> f64 {
    let n = z.len() as f64;
    let prod: Cx = z
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != j)
        .map(|(_, &w)| z[j] - w)
        .fold(Cx::new(p.leading() as f64, 0.0), |a, b| a * b);
    if prod.norm() == 0.0 {
        return f64::INFINITY;
    }
    n * p.eval(z[j]).norm() / prod.norm()
}

fn sort_roots(r: &mut [Root]) {
    r.sort_by(|a, b| {
        let ra = a.z.im == 0.0;
        let rb = b.z.im == 0.0;
        rb.cmp(&ra)
            .then(a.z.re.total_cmp(&b.z.re))
            .then(a.z.im.abs().total_cmp(&b.z.im.abs()))
            .then(b.z.im.total_cmp(&a.z.im))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: Cx, b: Cx, eps: f64) -> bool {
        (a - b).norm() <= eps
    }

    #[test]
    fn quadratic() {
        let rs = solve_roots(&IntPoly::new(vec![1, -1, 1])).unwrap();
        let s = 3f64.sqrt() / 2.0;
        assert!(close(rs.roots[0].z, Cx::new(0.5, s), 1e-12));
        assert!(close(rs.roots[1].z, Cx::new(0.5, -s), 1e-12));
        assert!(rs.roots[0].error_bound < 1e-12);
    }

    #[test]
    fn cubic_of_five_two() {
        let rs = solve_roots(&IntPoly::new(vec![1, 2, 1, 1])).unwrap();
        assert!((rs.roots[0].z.re + 0.569840290998).abs() < 1e-9);
        assert_eq!(rs.roots[0].z.im, 0.0);
        assert!(close(rs.roots[1].z, Cx::new(-0.21507985, 1.307141279), 1e-8));
        assert_eq!(rs.roots[1].z, rs.roots[2].z.conj());
    }

    #[test]
    fn linear_and_zero_roots() {
        let rs = solve_roots(&IntPoly::new(vec![2, 1])).unwrap();
        assert!(close(rs.roots[0].z, Cx::new(-2.0, 0.0), 1e-12));
        let rs = solve_roots(&IntPoly::new(vec![0, 0, 2, 1])).unwrap();
        assert_eq!(rs.roots.len(), 3);
        assert_eq!(rs.roots.iter().filter(|r| r.z == ZERO).count(), 2);
        assert!(solve_roots(&IntPoly::constant(3)).is_err());
    }

    #[test]
    fn repeated_root() {
        let rs = solve_roots(&IntPoly::new(vec![1, 2, 1])).unwrap();
        for r in &rs.roots {
            assert!(close(r.z, Cx::new(-1.0, 0.0), 1e-6));
        }
    }

    proptest! {
        #[test]
        fn residuals_and_count(c in proptest::collection::vec(-9i64..=9, 2..9)) {
            let p = IntPoly::new(c);
            prop_assume!(p.degree().unwrap_or(0) >= 1);
            // Clusters of multiple roots can legitimately defeat the residual
            // test; distinct-root inputs are the contract.
            if let Ok(rs) = solve_roots(&p) {
                prop_assert_eq!(rs.roots.len(), p.degree().unwrap());
                for r in &rs.roots {
                    prop_assert!(p.eval(r.z).norm() <= rs.residual_bound());
                }
                let up = rs.roots.iter().filter(|r| r.z.im > 0.0).count();
                let down = rs.roots.iter().filter(|r| r.z.im < 0.0).count();
                prop_assert_eq!(up, down);
            }
        }

        #[test]
        fn products_of_linear_factors(rs in proptest::collection::vec(-5i64..=5, 1..6)) {
            let mut rs = rs;
            rs.sort();
            rs.dedup();
            let p = rs.iter().fold(IntPoly::constant(1), |acc, r| acc.checked_mul(&IntPoly::new(vec![-r, 1])).unwrap());
            let sol = solve_roots(&p).unwrap();
            for (got, want) in sol.roots.iter().zip(rs.iter()) {
                prop_assert!((got.z.re - *want as f64).abs() < 1e-7);
            }
        }
    }
}
