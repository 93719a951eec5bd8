//! Integer polynomials in one variable and 2×2 matrices over ℤ[z].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Cx, Mat2};

/// A polynomial with `i64` coefficients in ascending degree order. The highest
/// stored coefficient is nonzero; the zero polynomial has no coefficients.
/// Arithmetic is checked and reports [`Error::Overflow`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::new(vec![c])
    }

    /// `c·z^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        IntPoly::new(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Multiplicity of the root 0 (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|&&c| c == 0).count().min(self.coeffs.len())
    }

    /// Divides out `z^valuation`.
    pub fn strip_valuation(&self) -> IntPoly {
        IntPoly::new(self.coeffs[self.valuation()..].to_vec())
    }

    /// Sign flip so the leading coefficient is positive.
    pub fn with_positive_leading(&self) -> IntPoly {
        if self.leading() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn max_abs_coeff(&self) -> i64 {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn checked_add(&self, other: &IntPoly) -> Result<IntPoly> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k).checked_add(other.coeff(k)).ok_or(Error::Overflow)?);
        }
        Ok(IntPoly::new(v))
    }

    pub fn checked_sub(&self, other: &IntPoly) -> Result<IntPoly> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &IntPoly) -> Result<IntPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPoly::zero());
        }
        let mut v = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(Error::Overflow)?;
                v[i + j] = v[i + j].checked_add(t).ok_or(Error::Overflow)?;
            }
        }
        Ok(IntPoly::new(v))
    }

    /// `self / d` when `d` divides `self` exactly over ℤ, else `None`.
    pub fn div_exact(&self, d: &IntPoly) -> Result<Option<IntPoly>> {
        let (Some(dn), Some(dd)) = (self.degree(), d.degree()) else {
            return if d.is_zero() { Err(Error::Division) } else { Ok(Some(IntPoly::zero())) };
        };
        if dd > dn {
            return Ok(None);
        }
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = rem[k + dd];
            if top % lead != 0 {
                return Ok(None);
            }
            let q = top / lead;
            quot[k] = q;
            for (j, &c) in d.coeffs.iter().enumerate() {
                let t = q.checked_mul(c).ok_or(Error::Overflow)?;
                rem[k + j] = rem[k + j].checked_sub(t).ok_or(Error::Overflow)?;
            }
        }
        Ok(rem.iter().all(|&c| c == 0).then(|| IntPoly::new(quot)))
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, z: Cx) -> Cx {
        self.coeffs.iter().rev().fold(Cx::new(0.0, 0.0), |acc, &c| acc * z + c as f64)
    }

    /// Derivative value at a complex point.
    pub fn eval_derivative(&self, z: Cx) -> Cx {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Cx::new(0.0, 0.0), |acc, (k, &c)| acc * z + (k as f64) * c as f64)
    }

    /// Ascending comma-separated coefficients, e.g. `1,2,1,1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Parses the ascending comma-separated format.
    pub fn from_text(s: &str) -> Result<IntPoly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let coeffs = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<i64>().map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IntPoly::from_text(s)
    }
}

impl TryFrom<String> for IntPoly {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        IntPoly::from_text(&s)
    }
}

impl From<IntPoly> for String {
    fn from(p: IntPoly) -> String {
        p.to_text()
    }
}

/// Conventional notation, highest degree first: `z^3 + z^2 + 2z + 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A 2×2 matrix over ℤ[z].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMat2 {
    pub entries: [IntPoly; 4],
}

impl PolyMat2 {
    pub fn identity() -> Self {
        PolyMat2 { entries: [IntPoly::constant(1), IntPoly::zero(), IntPoly::zero(), IntPoly::constant(1)] }
    }

    /// `A^e = [[1, e], [0, 1]]`.
    pub fn a_power(e: i64) -> Self {
        PolyMat2 { entries: [IntPoly::constant(1), IntPoly::constant(e), IntPoly::zero(), IntPoly::constant(1)] }
    }

    /// `B^e = [[1, 0], [e·z, 1]]`.
    pub fn b_power(e: i64) -> Self {
        PolyMat2 { entries: [IntPoly::constant(1), IntPoly::zero(), IntPoly::monomial(e, 1), IntPoly::constant(1)] }
    }

    pub fn checked_mul(&self, r: &PolyMat2) -> Result<PolyMat2> {
        let [a, b, c, d] = &self.entries;
        let [p, q, s, t] = &r.entries;
        let e = |x: &IntPoly, y: &IntPoly, u: &IntPoly, v: &IntPoly| -> Result<IntPoly> {
            x.checked_mul(y)?.checked_add(&u.checked_mul(v)?)
        };
        Ok(PolyMat2 { entries: [e(a, p, b, s)?, e(a, q, b, t)?, e(c, p, d, s)?, e(c, q, d, t)?] })
    }

    pub fn det(&self) -> Result<IntPoly> {
        let [a, b, c, d] = &self.entries;
        a.checked_mul(d)?.checked_sub(&b.checked_mul(c)?)
    }

    pub fn eval(&self, z: Cx) -> Mat2 {
        let [a, b, c, d] = &self.entries;
        Mat2::from_entries_unchecked(a.eval(z), b.eval(z), c.eval(z), d.eval(z))
    }
}
