//! Exact arithmetic in cyclotomic fields Q(zeta_m).
//!
//! A [`CycNum`] stores its coordinates in the power basis
//! `{1, z, ..., z^(phi(m)-1)}` of Q(zeta_m), reduced modulo the m-th
//! cyclotomic polynomial. The representation is canonical: two values with
//! the same conductor are equal iff their coordinate vectors are equal,
//! which makes hashing and exact dedup of group elements possible.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact scalar type used throughout the crate.
pub type Rational = BigRational;

/// `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `p` as a [`Rational`].
pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Euler's totient phi(m).
pub fn euler_phi(m: u64) -> u64 {
    assert!(m >= 1, "euler_phi: m must be positive");
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result
}

/// Divisors of `m` in ascending order.
pub fn divisors(m: u64) -> Vec<u64> {
    assert!(m >= 1, "divisors: m must be positive");
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= m {
        if m % i == 0 {
            divs.push(i);
            if i != m / i {
                divs.push(m / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

fn cyclo_cache() -> &'static Mutex<HashMap<u64, Arc<[Rational]>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<[Rational]>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The m-th cyclotomic polynomial, coefficients ascending, length phi(m)+1.
///
/// Computed by exact division of `x^m - 1` by the product of Phi_d over the
/// proper divisors d of m, and memoized.
pub fn cyclo_poly(m: u64) -> Vec<Rational> {
    cyclo_poly_arc(m).to_vec()
}

pub(crate) fn cyclo_poly_arc(m: u64) -> Arc<[Rational]> {
    assert!(m >= 1, "cyclo_poly: m must be positive");
    if let Some(p) = cyclo_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let poly = if m == 1 {
        vec![-Rational::one(), Rational::one()]
    } else {
        // x^m - 1
        let mut q = vec![Rational::zero(); (m + 1) as usize];
        q[0] = -Rational::one();
        q[m as usize] = Rational::one();
        for d in divisors(m) {
            if d < m {
                let phi_d = cyclo_poly_arc(d);
                q = poly_div_exact(&q, &phi_d);
            }
        }
        q
    };
    debug_assert_eq!(poly.len() as u64, euler_phi(m) + 1);
    let arc: Arc<[Rational]> = poly.into();
    cyclo_cache()
        .lock()
        .unwrap()
        .entry(m)
        .or_insert(arc)
        .clone()
}

fn poly_deg(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Exact division of polynomials with zero remainder. `den` must be monic.
fn poly_div_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let dn = poly_deg(num).expect("poly_div_exact: zero numerator");
    let dd = poly_deg(den).expect("poly_div_exact: zero divisor");
    assert!(den[dd].is_one(), "poly_div_exact: divisor not monic");
    assert!(dn >= dd);
    let mut rem = num[..=dn].to_vec();
    let mut quot = vec![Rational::zero(); dn - dd + 1];
    for i in (dd..=dn).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut rem[i], Rational::zero());
        for t in 0..dd {
            rem[i - dd + t] = &rem[i - dd + t] - &(&c * &den[t]);
        }
        quot[i - dd] = c;
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "poly_div_exact: nonzero remainder"
    );
    quot
}

/// General polynomial division: returns (quotient, remainder).
fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = poly_deg(den).expect("poly_divmod: zero divisor");
    let lead_inv = den[dd].recip();
    let mut rem = num.to_vec();
    let dn = match poly_deg(&rem) {
        Some(d) if d >= dd => d,
        _ => return (Vec::new(), rem),
    };
    let mut quot = vec![Rational::zero(); dn - dd + 1];
    for i in (dd..=dn).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut rem[i], Rational::zero()) * &lead_inv;
        for t in 0..dd {
            rem[i - dd + t] = &rem[i - dd + t] - &(&c * &den[t]);
        }
        quot[i - dd] = c;
    }
    rem.truncate(dd);
    (quot, rem)
}

fn poly_sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
    // a - q*b
    let mut out = vec![Rational::zero(); a.len().max(q.len() + b.len())];
    out[..a.len()].clone_from_slice(a);
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] - &(qi * bj);
        }
    }
    out
}

/// An element of the cyclotomic field Q(zeta_m), in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl CycNum {
    /// Zero of Q(zeta_m).
    pub fn zero(m: u64) -> Self {
        CycNum {
            conductor: m,
            coeffs: vec![Rational::zero(); euler_phi(m) as usize],
        }
    }

    /// One of Q(zeta_m).
    pub fn one(m: u64) -> Self {
        CycNum::from_rational(m, Rational::one())
    }

    /// A rational number viewed inside Q(zeta_m).
    pub fn from_rational(m: u64, q: Rational) -> Self {
        let mut out = CycNum::zero(m);
        out.coeffs[0] = q;
        out
    }

    /// An integer viewed inside Q(zeta_m).
    pub fn from_integer(m: u64, n: i64) -> Self {
        CycNum::from_rational(m, rat_int(n))
    }

    /// `zeta_m^k` in canonical form (`k` is taken modulo `m`).
    pub fn root_of_unity(m: u64, k: u64) -> Self {
        let k = (k % m) as usize;
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = Rational::one();
        CycNum::from_reduced(m, reduce_mod_phi(v, m))
    }

    /// Builds a value from exact coordinates in the power basis.
    /// The list must have length phi(m).
    pub fn from_coeffs(m: u64, coeffs: Vec<Rational>) -> Result<Self> {
        let phi = euler_phi(m) as usize;
        if coeffs.len() != phi {
            return Err(Error::DimensionMismatch(format!(
                "conductor {m} needs {phi} coordinates, got {}",
                coeffs.len()
            )));
        }
        Ok(CycNum {
            conductor: m,
            coeffs,
        })
    }

    fn from_reduced(m: u64, coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len() as u64, euler_phi(m));
        CycNum {
            conductor: m,
            coeffs,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational number, if it lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// The value as `c * z^k` with a single nonzero coordinate.
    fn as_monomial(&self) -> Option<(usize, &Rational)> {
        let mut found = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((k, c));
            }
        }
        found
    }

    fn scaled(&self, q: &Rational) -> CycNum {
        if q.is_zero() {
            return CycNum::zero(self.conductor);
        }
        CycNum::from_reduced(self.conductor, self.coeffs.iter().map(|c| c * q).collect())
    }

    /// `self * q * x^shift`, reduced.
    fn shift_scaled(&self, shift: usize, q: &Rational) -> CycNum {
        if q.is_zero() {
            return CycNum::zero(self.conductor);
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + shift];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[k + shift] = c * q;
            }
        }
        CycNum::from_reduced(self.conductor, reduce_mod_phi(v, self.conductor))
    }

    fn require_same_conductor(&self, rhs: &CycNum) -> Result<()> {
        if self.conductor != rhs.conductor {
            Err(Error::ConductorMismatch(self.conductor, rhs.conductor))
        } else {
            Ok(())
        }
    }

    /// Exact sum; errors on a conductor mismatch.
    pub fn checked_add(&self, rhs: &CycNum) -> Result<CycNum> {
        self.require_same_conductor(rhs)?;
        Ok(self + rhs)
    }

    /// Exact difference; errors on a conductor mismatch.
    pub fn checked_sub(&self, rhs: &CycNum) -> Result<CycNum> {
        self.require_same_conductor(rhs)?;
        Ok(self - rhs)
    }

    /// Exact product in canonical form; errors on a conductor mismatch.
    pub fn checked_mul(&self, rhs: &CycNum) -> Result<CycNum> {
        self.require_same_conductor(rhs)?;
        Ok(self * rhs)
    }

    /// Multiplicative inverse. Errors on zero.
    ///
    /// Rational and monomial values are inverted directly; the general case
    /// runs the extended Euclidean algorithm against Phi_m.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(CycNum::from_rational(self.conductor, q.recip()));
        }
        if let Some((k, c)) = self.as_monomial() {
            // (c z^k)^-1 = c^-1 z^(m-k)
            let inv_c = c.recip();
            return Ok(
                CycNum::root_of_unity(self.conductor, self.conductor - k as u64).scaled(&inv_c)
            );
        }
        let phi_poly: Vec<Rational> = cyclo_poly_arc(self.conductor).to_vec();
        let mut r0 = phi_poly;
        let mut r1 = self.coeffs.clone();
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1 = vec![Rational::one()];
        loop {
            match poly_deg(&r1) {
                None => {
                    return Err(Error::Internal(format!(
                        "gcd(a, Phi_{}) degenerate for a nonzero element",
                        self.conductor
                    )))
                }
                Some(0) => break,
                Some(_) => {}
            }
            let (q, r2) = poly_divmod(&r0, &r1);
            let s2 = poly_sub_mul(&s0, &q, &s1);
            r0 = std::mem::replace(&mut r1, r2);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let c_inv = r1[0].recip();
        let scaled: Vec<Rational> = s1.iter().map(|c| c * &c_inv).collect();
        Ok(CycNum::from_reduced(
            self.conductor,
            reduce_mod_phi(scaled, self.conductor),
        ))
    }

    /// `self^k` by binary exponentiation.
    pub fn pow(&self, mut k: u64) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one(self.conductor);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Image under zeta_m -> zeta_{m'}^{m'/m}. Errors unless m | m'.
    pub fn embed(&self, target: u64) -> Result<CycNum> {
        if target == self.conductor {
            return Ok(self.clone());
        }
        if target % self.conductor != 0 {
            return Err(Error::BadEmbedding {
                from: self.conductor,
                to: target,
            });
        }
        let t = (target / self.conductor) as usize;
        let mut v = vec![Rational::zero(); (self.coeffs.len() - 1) * t + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[k * t] = c.clone();
            }
        }
        Ok(CycNum::from_reduced(target, reduce_mod_phi(v, target)))
    }

    /// Coordinate restriction to a smaller conductor, when the value lies in
    /// the subfield Q(zeta_target). Returns `None` otherwise.
    pub fn restrict(&self, target: u64) -> Option<CycNum> {
        if target == self.conductor {
            return Some(self.clone());
        }
        if self.conductor % target != 0 {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(CycNum::from_rational(target, q.clone()));
        }
        // Solve for coordinates against the embedded images of the subfield basis.
        let phi_small = euler_phi(target) as usize;
        let phi_big = self.coeffs.len();
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(phi_small);
        for k in 0..phi_small {
            let img = CycNum::root_of_unity(target, k as u64)
                .embed(self.conductor)
                .expect("divisor embedding");
            cols.push(img.coeffs);
        }
        // Augmented system: phi_big rows, phi_small + 1 columns.
        let mut aug: Vec<Vec<Rational>> = (0..phi_big)
            .map(|r| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut solution = vec![Rational::zero(); phi_small];
        let mut pivot_row = 0;
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for col in 0..phi_small {
            let Some(r) = (pivot_row..phi_big).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(pivot_row, r);
            let inv = aug[pivot_row][col].recip();
            for c in col..=phi_small {
                aug[pivot_row][c] = &aug[pivot_row][c] * &inv;
            }
            for r2 in 0..phi_big {
                if r2 != pivot_row && !aug[r2][col].is_zero() {
                    let f = aug[r2][col].clone();
                    for c in col..=phi_small {
                        let d = &aug[pivot_row][c] * &f;
                        aug[r2][c] = &aug[r2][c] - &d;
                    }
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
        }
        for r in pivot_row..phi_big {
            if !aug[r][phi_small].is_zero() {
                return None; // inconsistent: not in the subfield
            }
        }
        for (r, c) in pivots {
            solution[c] = aug[r][phi_small].clone();
        }
        Some(CycNum::from_reduced(target, solution))
    }
}

/// Reduces an ascending coefficient vector modulo Phi_m and pads to
/// exactly phi(m) coordinates.
fn reduce_mod_phi(mut v: Vec<Rational>, m: u64) -> Vec<Rational> {
    let phi = euler_phi(m) as usize;
    if v.len() > phi {
        let poly = cyclo_poly_arc(m);
        for i in (phi..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[i], Rational::zero());
            for t in 0..phi {
                if !poly[t].is_zero() {
                    v[i - phi + t] = &v[i - phi + t] - &(&c * &poly[t]);
                }
            }
        }
        v.truncate(phi);
    }
    v.resize(phi, Rational::zero());
    v
}

impl std::ops::Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch in add");
        CycNum::from_reduced(
            self.conductor,
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl std::ops::Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch in sub");
        CycNum::from_reduced(
            self.conductor,
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl std::ops::Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch in mul");
        if self.is_zero() || rhs.is_zero() {
            return CycNum::zero(self.conductor);
        }
        if let Some(q) = self.as_rational() {
            return rhs.scaled(q);
        }
        if let Some(q) = rhs.as_rational() {
            return self.scaled(q);
        }
        if let Some((k, c)) = self.as_monomial() {
            return rhs.shift_scaled(k, c);
        }
        if let Some((k, c)) = rhs.as_monomial() {
            return self.shift_scaled(k, c);
        }
        let n = self.coeffs.len();
        let mut v = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        CycNum::from_reduced(self.conductor, reduce_mod_phi(v, self.conductor))
    }
}

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::from_reduced(self.conductor, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::ops::Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if k == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum(m={}, {})", self.conductor, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u64, k: u64) -> CycNum {
        CycNum::root_of_unity(m, k)
    }

    #[test]
    fn phi_values() {
        for (m, expected) in [(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (12, 4), (60, 16)] {
            assert_eq!(euler_phi(m), expected, "phi({m})");
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn cyclo_poly_small() {
        assert_eq!(cyclo_poly(1), vec![rat_int(-1), rat_int(1)]);
        assert_eq!(cyclo_poly(2), vec![rat_int(1), rat_int(1)]);
        assert_eq!(cyclo_poly(4), vec![rat_int(1), rat_int(0), rat_int(1)]);
        assert_eq!(cyclo_poly(6), vec![rat_int(1), rat_int(-1), rat_int(1)]);
        assert_eq!(
            cyclo_poly(12),
            vec![rat_int(1), rat_int(0), rat_int(-1), rat_int(0), rat_int(1)]
        );
    }

    #[test]
    fn cyclo_poly_divisor_product() {
        // prod_{d | m} Phi_d = x^m - 1, the defining identity.
        for m in 1..=30u64 {
            let mut product = vec![Rational::one()];
            for d in divisors(m) {
                let phi_d = cyclo_poly(d);
                let mut next = vec![Rational::zero(); product.len() + phi_d.len() - 1];
                for (i, a) in product.iter().enumerate() {
                    for (j, b) in phi_d.iter().enumerate() {
                        next[i + j] = &next[i + j] + &(a * b);
                    }
                }
                product = next;
            }
            let mut expected = vec![Rational::zero(); (m + 1) as usize];
            expected[0] = -Rational::one();
            expected[m as usize] = Rational::one();
            assert_eq!(product, expected, "divisor product for m = {m}");
        }
    }

    #[test]
    fn mul_forced_by_modulus() {
        // zeta_4^2 = -1
        assert_eq!(&z(4, 1) * &z(4, 1), CycNum::from_integer(4, -1));
        // zeta_3 * zeta_3^2 = 1
        assert_eq!(&z(3, 1) * &z(3, 2), CycNum::one(3));
        // (1 + zeta_3)(1 + zeta_3^2) = 1, using 1 + z + z^2 = 0
        let a = &CycNum::one(3) + &z(3, 1);
        let b = &CycNum::one(3) + &z(3, 2);
        assert_eq!(&a * &b, CycNum::one(3));
    }

    #[test]
    fn conductor_mismatch_is_an_error() {
        let err = z(3, 1).checked_mul(&z(4, 1)).unwrap_err();
        assert!(matches!(err, Error::ConductorMismatch(3, 4)));
    }

    #[test]
    fn inverses() {
        // zeta_m^-1 = zeta_m^(m-1)
        for m in [2u64, 3, 4, 5, 6, 8, 12] {
            assert_eq!(z(m, 1).inv().unwrap(), z(m, m - 1), "m = {m}");
        }
        // rational case
        assert_eq!(
            CycNum::from_integer(4, 2).inv().unwrap(),
            CycNum::from_rational(4, rat(1, 2))
        );
        // 1 + zeta_4 inverts to (1 - zeta_4)/2: solved from the 2x2 system over
        // the basis {1, z}, and checked by multiplying back.
        let a = &CycNum::one(4) + &z(4, 1);
        let expected = (&CycNum::one(4) - &z(4, 1)).scaled(&rat(1, 2));
        let inv = a.inv().unwrap();
        assert_eq!(inv, expected);
        assert_eq!(&a * &inv, CycNum::one(4));
        // general (non-monomial) elements at a few conductors
        for m in [5u64, 7, 12] {
            let a = &(&CycNum::from_integer(m, 2) + &z(m, 1)) + &z(m, 2);
            let inv = a.inv().unwrap();
            assert_eq!(&a * &inv, CycNum::one(m), "m = {m}");
        }
        assert!(matches!(
            CycNum::zero(6).inv(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn root_of_unity_has_exact_order() {
        for m in [1u64, 2, 3, 4, 6, 8, 12, 15] {
            for k in 1..m {
                assert!(!z(m, 1).pow(k).is_one(), "zeta_{m}^{k} != 1");
            }
            assert!(z(m, 1).pow(m).is_one(), "zeta_{m}^{m} = 1");
        }
    }

    #[test]
    fn embeddings() {
        // zeta_2 -> conductor 4 is -1
        assert_eq!(z(2, 1).embed(4).unwrap(), CycNum::from_integer(4, -1));
        // zeta_3 -> conductor 6 is zeta_6^2 = zeta_6 - 1
        let img = z(3, 1).embed(6).unwrap();
        let expected = CycNum::from_coeffs(6, vec![rat_int(-1), rat_int(1)]).unwrap();
        assert_eq!(img, expected);
        // rationals embed identically
        assert_eq!(
            CycNum::from_integer(1, 5).embed(12).unwrap(),
            CycNum::from_integer(12, 5)
        );
        // non-divisible target is an error
        assert!(matches!(
            z(4, 1).embed(6),
            Err(Error::BadEmbedding { from: 4, to: 6 })
        ));
    }

    #[test]
    fn embedding_commutes_with_arithmetic() {
        let a = &CycNum::one(4) + &z(4, 1);
        let b = &z(4, 3) - &CycNum::from_rational(4, rat(1, 2));
        let prod_then_embed = (&a * &b).embed(12).unwrap();
        let embed_then_prod = &a.embed(12).unwrap() * &b.embed(12).unwrap();
        assert_eq!(prod_then_embed, embed_then_prod);
    }

    #[test]
    fn restriction_round_trip() {
        let a = &z(6, 1) + &CycNum::from_rational(6, rat(3, 2));
        let up = a.embed(12).unwrap();
        assert_eq!(up.restrict(6).unwrap(), a);
        // zeta_12 itself does not lie in Q(zeta_6)
        assert!(z(12, 1).restrict(6).is_none());
    }

    #[test]
    fn display_is_readable() {
        let a = &z(4, 1).scaled(&rat(-1, 2)) + &CycNum::one(4);
        assert_eq!(a.to_string(), "-1/2*z + 1");
        assert_eq!(CycNum::zero(4).to_string(), "0");
    }
}
