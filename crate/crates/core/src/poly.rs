//! Univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order and kept trimmed, so two
//! polynomials are equal exactly when their coefficient vectors are equal.
//! `BigRational` always normalizes to lowest terms with a positive denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

/// A real root isolated to the interval `[lo, hi]`, with its multiplicity.
/// `lo == hi` when the root is rational and was hit exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl RealRoot {
    pub fn approx(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        rational_to_f64(&mid)
    }
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_integers<I: Into<BigInt> + Clone>(coeffs: &[I]) -> Self {
        QPoly::new(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone().into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        QPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rational_to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(k.into()))
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => QPoly::zero(),
            Some(lc) => {
                let lc = lc.clone();
                QPoly::new(self.coeffs.iter().map(|c| c / &lc).collect())
            }
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return (QPoly::zero(), self.clone());
        };
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free factorization: returns `(f_i, i)` with
    /// `self = lc * prod f_i^i`, each `f_i` monic, square-free, pairwise coprime.
    /// Factors equal to one are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(QPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...`, each member rescaled by a
    /// positive constant to a primitive integer polynomial.
    pub fn sturm_sequence(&self) -> Vec<QPoly> {
        let mut seq = Vec::new();
        if self.is_zero() {
            return seq;
        }
        seq.push(self.primitive());
        let d = self.derivative();
        if d.is_zero() {
            return seq;
        }
        seq.push(d.primitive());
        loop {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push((-&r).primitive());
        }
        seq
    }

    /// Positive rational multiple with coprime integer coefficients.
    fn primitive(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let nums: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &den).to_integer()).collect();
        let g = nums.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        QPoly::from_integers(&nums.iter().map(|x| x / &g).collect::<Vec<_>>())
    }

    /// Number of real roots, counted with multiplicity.
    pub fn count_real_roots(&self) -> usize {
        self.squarefree_decomposition()
            .iter()
            .map(|(f, mult)| {
                let seq = f.sturm_sequence();
                let b = f.root_bound();
                mult * (sign_changes(&seq, &-&b) - sign_changes(&seq, &b))
            })
            .sum()
    }

    /// Every real root, with multiplicity, isolated to an interval narrower
    /// than `tol` (or hit exactly). Sorted ascending.
    pub fn real_roots(&self, tol: &BigRational) -> Vec<RealRoot> {
        let mut roots = Vec::new();
        for (f, mult) in self.squarefree_decomposition() {
            for (lo, hi) in f.isolate_squarefree(tol) {
                roots.push(RealRoot {
                    lo,
                    hi,
                    multiplicity: mult,
                });
            }
        }
        roots.sort_by(|a, b| a.lo.cmp(&b.lo));
        roots
    }

    /// Real roots as floats, each repeated by multiplicity, ascending.
    pub fn real_roots_f64(&self) -> Vec<f64> {
        let tol = BigRational::new(BigInt::one(), BigInt::one() << 60u32);
        let mut out = Vec::new();
        for r in self.real_roots(&tol) {
            let x = r.approx();
            out.extend(std::iter::repeat_n(x, r.multiplicity));
        }
        out.sort_by(f64::total_cmp);
        out
    }

    /// An integer strictly larger than the modulus of every complex root.
    fn root_bound(&self) -> BigRational {
        let n = self.degree().unwrap_or(0);
        let lc = self.coeffs[n].abs();
        let max = self.coeffs[..n]
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(BigRational::zero);
        // Cauchy: |r| < 1 + max |a_i / a_n|
        BigRational::from_integer((max + BigRational::one()).ceil().to_integer())
    }

    fn isolate_squarefree(&self, tol: &BigRational) -> Vec<(BigRational, BigRational)> {
        let seq = self.sturm_sequence();
        let b = self.root_bound();
        let a = -&b;
        let count = |lo: &BigRational, hi: &BigRational| {
            sign_changes(&seq, lo) - sign_changes(&seq, hi)
        };
        // Endpoints are never roots, so counts are over open intervals.
        let mut stack = vec![(a.clone(), b.clone(), count(&a, &b))];
        let mut out = Vec::new();
        while let Some((lo, hi, n)) = stack.pop() {
            match n {
                0 => {}
                1 => out.push(self.refine(lo, hi, tol)),
                _ => {
                    let mid = self.split_point(&lo, &hi);
                    let left = count(&lo, &mid);
                    stack.push((mid.clone(), hi, n - left));
                    stack.push((lo, mid, left));
                }
            }
        }
        out
    }

    /// A point strictly inside `(lo, hi)` that is not a root.
    fn split_point(&self, lo: &BigRational, hi: &BigRational) -> BigRational {
        let two = BigRational::from_integer(2.into());
        let mut mid = (lo + hi) / &two;
        while self.eval(&mid).is_zero() {
            mid = (mid + hi) / &two;
        }
        mid
    }

    /// Bisects an interval holding exactly one simple root and non-root endpoints.
    fn refine(
        &self,
        mut lo: BigRational,
        mut hi: BigRational,
        tol: &BigRational,
    ) -> (BigRational, BigRational) {
        let two = BigRational::from_integer(2.into());
        let lo_sign = self.eval(&lo).signum();
        while &(&hi - &lo) >= tol {
            let mid = (&lo + &hi) / &two;
            let v = self.eval(&mid);
            if v.is_zero() {
                return (mid.clone(), mid);
            }
            if v.signum() == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo, hi)
    }
}

fn sign_changes(seq: &[QPoly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            if k == 0 || !unit {
                if mag.is_integer() || k == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Serialized as the ascending coefficient list, each as `"p"` or `"p/q"`.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QPoly::new(coeffs))
    }
}
