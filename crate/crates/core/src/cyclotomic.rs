//! Exact arithmetic in Q(ζ₁₂) and the finite Fourier transform on Z_q.
//!
//! Elements are stored in the power basis `{1, ζ, ζ², ζ³}` with the reduction
//! `ζ⁴ = ζ² − 1` (ζ is a root of the 12th cyclotomic polynomial `x⁴ − x² + 1`).
//! Every root of unity of order dividing 12 is a power of ζ.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"-p/q"` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Domain(format!("not a rational number: \"{s}\""));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Domain(format!("zero denominator in \"{s}\"")));
    }
    Ok(BigRational::new(n, d))
}

/// Integer or reduced `p/q`.
pub fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// The minimal ring interface shared by `BigRational` and [`Cyc12`], used by
/// generic polynomial evaluation.
pub trait Scalar: Clone + Zero + One + Sub<Output = Self> + Neg<Output = Self> {
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Powers `x^0 ..= x^n`.
    fn powers(&self, n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(Self::one());
        for i in 0..n {
            let next = out[i].clone() * self.clone();
            out.push(next);
        }
        out
    }
}

impl Scalar for Rational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

/// Element `c0 + c1 ζ + c2 ζ² + c3 ζ³` of Q(ζ₁₂), ζ = e^{2πi/12}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyc12 {
    c: [Rational; 4],
}

impl Cyc12 {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        Cyc12 { c: [c0, c1, c2, c3] }
    }

    pub fn from_rational(x: Rational) -> Self {
        Cyc12::new(x, Zero::zero(), Zero::zero(), Zero::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Cyc12::from_rational(int(n))
    }

    pub fn zeta() -> Self {
        Cyc12::new(Zero::zero(), One::one(), Zero::zero(), Zero::zero())
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(12) as usize;
        // ζ^6 = -1 halves the table
        let (sign, k) = if k >= 6 { (-1, k - 6) } else { (1, k) };
        let base = match k {
            0 => [1, 0, 0, 0],
            1 => [0, 1, 0, 0],
            2 => [0, 0, 1, 0],
            3 => [0, 0, 0, 1],
            4 => [-1, 0, 1, 0],
            5 => [0, -1, 0, 1],
            _ => unreachable!(),
        };
        Cyc12::new(int(sign * base[0]), int(sign * base[1]), int(sign * base[2]), int(sign * base[3]))
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, or `NotRational` if any ζ-coordinate is nonzero.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.c[0].clone())
        } else {
            Err(Error::NotRational)
        }
    }

    /// Galois automorphism `ζ ↦ ζ^j`, `j` a unit mod 12.
    pub fn galois(&self, j: i64) -> Self {
        assert!(matches!(j.rem_euclid(12), 1 | 5 | 7 | 11), "{j} is not a unit mod 12");
        let mut out = Cyc12::zero();
        for (i, ci) in self.c.iter().enumerate() {
            if !ci.is_zero() {
                out += Cyc12::zeta_pow(j * i as i64).scale(ci);
            }
        }
        out
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.c;
        Cyc12::new(a + c, b.clone(), -c, -(b + d))
    }

    /// `|x|² = x · conj(x)`. Real, but not necessarily rational (√3 = ζ + ζ̄).
    pub fn norm_sq(&self) -> Self {
        self.clone() * self.conj()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Cyc12 { c: [&self.c[0] * k, &self.c[1] * k, &self.c[2] * k, &self.c[3] * k] }
    }

    /// Multiplicative inverse via the product of the other Galois conjugates.
    pub fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::Domain("inverse of zero".into()));
        }
        let others = self.galois(5) * self.galois(7) * self.galois(11);
        let norm = (self.clone() * others.clone()).to_rational().map_err(|_| Error::Internal("field norm not rational".into()))?;
        Ok(others.scale(&(Rational::one() / norm)))
    }

    /// Floating-point rendering for human-readable output only.
    pub fn approx(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, ci) in self.c.iter().enumerate() {
            let v = ci.to_f64().unwrap_or(f64::NAN);
            let t = std::f64::consts::PI * i as f64 / 6.0;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }
}

impl Scalar for Cyc12 {
    fn from_bigint(n: &BigInt) -> Self {
        Cyc12::from_rational(BigRational::from_integer(n.clone()))
    }
}

impl Zero for Cyc12 {
    fn zero() -> Self {
        Cyc12::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for Cyc12 {
    fn one() -> Self {
        Cyc12::from_int(1)
    }
}

impl Add for Cyc12 {
    type Output = Cyc12;
    fn add(mut self, rhs: Cyc12) -> Cyc12 {
        self += rhs;
        self
    }
}

impl AddAssign for Cyc12 {
    fn add_assign(&mut self, rhs: Cyc12) {
        for (a, b) in self.c.iter_mut().zip(rhs.c) {
            *a += b;
        }
    }
}

impl Sub for Cyc12 {
    type Output = Cyc12;
    fn sub(mut self, rhs: Cyc12) -> Cyc12 {
        self -= rhs;
        self
    }
}

impl SubAssign for Cyc12 {
    fn sub_assign(&mut self, rhs: Cyc12) {
        for (a, b) in self.c.iter_mut().zip(rhs.c) {
            *a -= b;
        }
    }
}

impl Neg for Cyc12 {
    type Output = Cyc12;
    fn neg(self) -> Cyc12 {
        let [a, b, c, d] = self.c;
        Cyc12::new(-a, -b, -c, -d)
    }
}

impl Mul for Cyc12 {
    type Output = Cyc12;
    fn mul(self, rhs: Cyc12) -> Cyc12 {
        &self * &rhs
    }
}

impl Mul<&Cyc12> for &Cyc12 {
    type Output = Cyc12;
    fn mul(self, rhs: &Cyc12) -> Cyc12 {
        let mut p: [Rational; 7] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    p[i + j] += a * b;
                }
            }
        }
        for d in (4..7).rev() {
            let top = std::mem::take(&mut p[d]);
            if !top.is_zero() {
                p[d - 2] += &top;
                p[d - 4] -= top;
            }
        }
        let [c0, c1, c2, c3, ..] = p;
        Cyc12::new(c0, c1, c2, c3)
    }
}

impl MulAssign for Cyc12 {
    fn mul_assign(&mut self, rhs: Cyc12) {
        *self = &*self * &rhs;
    }
}

impl From<Rational> for Cyc12 {
    fn from(x: Rational) -> Self {
        Cyc12::from_rational(x)
    }
}

impl fmt::Display for Cyc12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", fmt_rational(&self.c[0]));
        }
        let mut parts = Vec::new();
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            let coef = if ci.abs().is_one() && i > 0 {
                if ci.is_negative() { "-".to_string() } else { String::new() }
            } else if i > 0 {
                format!("{}*", fmt_rational(ci))
            } else {
                fmt_rational(ci)
            };
            parts.push(format!("{coef}{mono}"));
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// `e^{2πik/q}` for `q` dividing 12.
pub fn root_of_unity(q: u32, k: i64) -> Result<Cyc12> {
    if q == 0 || 12 % q != 0 {
        return Err(Error::Domain(format!("order {q} does not divide 12")));
    }
    Ok(Cyc12::zeta_pow(k * (12 / q as i64)))
}

/// `cos(2πk/q)` as an exact rational for `q ∈ {1,2,3,4,6}`.
pub fn cos_rational(q: u32, k: i64) -> Result<Rational> {
    let z = root_of_unity(q, k)?;
    let two_cos = z.clone() + z.conj();
    let v = two_cos.to_rational().map_err(|_| Error::Domain(format!("cos(2π·{k}/{q}) is irrational")))?;
    Ok(v / int(2))
}

/// `1̂_S(k) = Σ_{l∈S} ζ_q^{-kl}` for `k = 0..q`.
pub fn fourier_indicator(q: u32, s: &[u32]) -> Result<Vec<Cyc12>> {
    crate::cyclespace::check_modulus(q as usize)?;
    check_residues(q, s)?;
    (0..q as i64)
        .map(|k| {
            let mut acc = Cyc12::zero();
            for &l in s {
                acc += root_of_unity(q, -k * l as i64)?;
            }
            Ok(acc)
        })
        .collect()
}

/// Transform of a rational function on Z_q with the same sign convention.
pub fn fourier(q: u32, h: &[Rational]) -> Result<Vec<Cyc12>> {
    crate::cyclespace::check_modulus(q as usize)?;
    if h.len() != q as usize {
        return Err(Error::Precondition(format!("function has {} values, expected {q}", h.len())));
    }
    (0..q as i64)
        .map(|k| {
            let mut acc = Cyc12::zero();
            for (l, hl) in h.iter().enumerate() {
                acc += root_of_unity(q, -k * l as i64)?.scale(hl);
            }
            Ok(acc)
        })
        .collect()
}

/// `{k : (1̂_S − 1̂_{S'})(k) ≠ 0}`.
pub fn transform_support(q: u32, s: &[u32], s2: &[u32]) -> Result<Vec<u32>> {
    if s.iter().any(|x| s2.contains(x)) {
        return Err(Error::Precondition("residue sets S and S' must be disjoint".into()));
    }
    let a = fourier_indicator(q, s)?;
    let b = fourier_indicator(q, s2)?;
    Ok((0..q).filter(|&k| !Zero::is_zero(&(a[k as usize].clone() - b[k as usize].clone()))).collect())
}

pub(crate) fn check_residues(q: u32, s: &[u32]) -> Result<()> {
    for (i, &x) in s.iter().enumerate() {
        if x >= q {
            return Err(Error::Domain(format!("residue {x} out of range for modulus {q}")));
        }
        if s[..i].contains(&x) {
            return Err(Error::Domain(format!("residue {x} repeated")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity() {
        assert_eq!(root_of_unity(2, 1).unwrap(), Cyc12::from_int(-1));
        let i = root_of_unity(4, 1).unwrap();
        assert_eq!(i, Cyc12::zeta_pow(3));
        assert_eq!(&i * &i, Cyc12::from_int(-1));
        let w = root_of_unity(3, 1).unwrap();
        assert_eq!(w, Cyc12::new(int(-1), int(0), int(1), int(0)));
        assert_eq!(w.pow(3), Cyc12::one());
        assert!(root_of_unity(5, 1).is_err());
    }

    #[test]
    fn zeta_relations() {
        let z = Cyc12::zeta();
        assert_eq!(z.pow(12), Cyc12::one());
        assert_eq!(z.pow(6), Cyc12::from_int(-1));
        for k in -13..25 {
            assert_eq!(Cyc12::zeta_pow(k), z.pow(k.rem_euclid(12) as u32), "k = {k}");
        }
        let minpoly = z.pow(4) - z.pow(2) + Cyc12::one();
        assert!(Zero::is_zero(&minpoly));
        let z2 = Cyc12::zeta_pow(2);
        assert_eq!(z2.clone() + z2.conj(), Cyc12::one());
    }

    #[test]
    fn to_rational_examples() {
        assert_eq!(Cyc12::zeta_pow(6).to_rational().unwrap(), int(-1));
        assert_eq!((Cyc12::one() + Cyc12::zeta_pow(3)).to_rational(), Err(Error::NotRational));
        assert_eq!(Cyc12::from_rational(rat(3, 4)).to_rational().unwrap(), rat(3, 4));
    }

    #[test]
    fn conj_matches_galois_11() {
        let x = Cyc12::new(rat(1, 2), int(-3), int(2), rat(5, 7));
        assert_eq!(x.conj(), x.galois(11));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn inverse() {
        let x = Cyc12::new(rat(1, 2), int(-3), int(2), rat(5, 7));
        assert_eq!(&x * &x.inv().unwrap(), Cyc12::one());
        assert!(Cyc12::zero().inv().is_err());
    }

    #[test]
    fn cosines() {
        assert_eq!(cos_rational(4, 1).unwrap(), int(0));
        assert_eq!(cos_rational(3, 1).unwrap(), rat(-1, 2));
        assert_eq!(cos_rational(6, 1).unwrap(), rat(1, 2));
        assert_eq!(cos_rational(2, 1).unwrap(), int(-1));
    }

    #[test]
    fn indicator_transforms() {
        let f = fourier_indicator(4, &[0, 1]).unwrap();
        assert_eq!(f[1], Cyc12::one() - Cyc12::zeta_pow(3));
        assert_eq!(f[0], Cyc12::from_int(2));

        let f6 = fourier_indicator(6, &[0, 1, 2]).unwrap();
        let w = root_of_unity(3, 1).unwrap();
        let expected = [
            Cyc12::from_int(3),
            w.scale(&int(-2)),
            Cyc12::zero(),
            Cyc12::one(),
            Cyc12::zero(),
            w.conj().scale(&int(-2)),
        ];
        assert_eq!(f6, expected);

        let f2 = fourier_indicator(2, &[0]).unwrap();
        assert_eq!(f2, vec![Cyc12::one(), Cyc12::one()]);
    }

    #[test]
    fn supports() {
        assert_eq!(transform_support(3, &[0], &[1]).unwrap(), vec![1, 2]);
        assert_eq!(transform_support(4, &[0, 1], &[2, 3]).unwrap(), vec![1, 3]);
        assert_eq!(transform_support(2, &[0], &[1]).unwrap(), vec![1]);
        assert!(transform_support(3, &[0], &[0]).is_err());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(fmt_rational(&rat(6, -4)), "-3/2");
        assert_eq!(fmt_rational(&int(0)), "0");
        assert_eq!(Cyc12::zeta_pow(4).to_string(), "-1 + z^2");
    }
}
