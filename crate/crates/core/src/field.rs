//! Prime field arithmetic over `F_p` with `p < 2^64`, and vectors over `F_p^{k}`.
//!
//! Elements carry their modulus. Mixing elements of different fields is an
//! error, never a silent reduction. Products go through 128-bit intermediates.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// Miller-Rabin witnesses that are deterministic for every 64-bit integer.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for all `u64` inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &MR_WITNESSES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Draws a uniformly random prime with exactly `bits` bits (`2 <= bits <= 64`).
pub fn random_prime<R: Rng + ?Sized>(bits: u32, rng: &mut R) -> Result<PrimeModulus> {
    if !(2..=64).contains(&bits) {
        return Err(Error::Parameter(format!(
            "prime bit length must be in 2..=64, got {bits}"
        )));
    }
    let lo = 1u64 << (bits - 1);
    let hi = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
    loop {
        let candidate = rng.random_range(lo..=hi);
        if is_prime(candidate) {
            return Ok(PrimeModulus(candidate));
        }
    }
}

/// A verified prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeModulus(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn element(self, value: u64) -> FieldElement {
        FieldElement {
            value: value % self.0,
            modulus: self,
        }
    }

    pub fn zero(self) -> FieldElement {
        self.element(0)
    }

    pub fn one(self) -> FieldElement {
        self.element(1)
    }

    // Raw canonical-residue helpers for hot loops. Inputs must already be < p.

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let p = self.0;
        let (s, overflow) = a.overflowing_add(b);
        if overflow || s >= p {
            s.wrapping_sub(p)
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.0 - (b - a)
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.0)
    }

    pub fn pow(self, a: u64, exp: u64) -> u64 {
        pow_mod(a, exp, self.0)
    }

    /// Inverse by Fermat's little theorem.
    pub fn inv(self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.0) {
            return Err(Error::InversionOfZero);
        }
        Ok(pow_mod(a, self.0 - 2, self.0))
    }

    fn check(self, other: PrimeModulus) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                left: self.0,
                right: other.0,
            })
        }
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of `F_p` in canonical form `0 <= value < p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    modulus: PrimeModulus,
}

impl FieldElement {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn add(self, rhs: FieldElement) -> Result<FieldElement> {
        self.modulus.check(rhs.modulus)?;
        Ok(self.with(self.modulus.add(self.value, rhs.value)))
    }

    pub fn sub(self, rhs: FieldElement) -> Result<FieldElement> {
        self.modulus.check(rhs.modulus)?;
        Ok(self.with(self.modulus.sub(self.value, rhs.value)))
    }

    pub fn mul(self, rhs: FieldElement) -> Result<FieldElement> {
        self.modulus.check(rhs.modulus)?;
        Ok(self.with(self.modulus.mul(self.value, rhs.value)))
    }

    pub fn neg(self) -> FieldElement {
        self.with(self.modulus.neg(self.value))
    }

    pub fn pow(self, exp: u64) -> FieldElement {
        self.with(self.modulus.pow(self.value, exp))
    }

    pub fn inv(self) -> Result<FieldElement> {
        Ok(self.with(self.modulus.inv(self.value)?))
    }

    fn with(self, value: u64) -> FieldElement {
        FieldElement {
            value,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// A point of `F_p^k`, stored as canonical residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldVector {
    coords: Vec<u64>,
    modulus: PrimeModulus,
}

impl FieldVector {
    /// Builds a vector, rejecting coordinates that are not canonical residues.
    pub fn new(modulus: PrimeModulus, coords: Vec<u64>) -> Result<Self> {
        if let Some(&c) = coords.iter().find(|&&c| c >= modulus.get()) {
            return Err(Error::Parameter(format!(
                "coordinate {c} out of range for modulus {modulus}"
            )));
        }
        Ok(FieldVector { coords, modulus })
    }

    pub fn zero(modulus: PrimeModulus, dim: usize) -> Self {
        FieldVector {
            coords: vec![0; dim],
            modulus,
        }
    }

    pub fn from_elements(elements: &[FieldElement]) -> Result<Self> {
        let Some(first) = elements.first() else {
            return Err(Error::Parameter("empty vector".into()));
        };
        let modulus = first.modulus;
        let mut coords = Vec::with_capacity(elements.len());
        for e in elements {
            modulus.check(e.modulus)?;
            coords.push(e.value);
        }
        Ok(FieldVector { coords, modulus })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> Option<FieldElement> {
        self.coords.get(i).map(|&value| FieldElement {
            value,
            modulus: self.modulus,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, rhs: &FieldVector) -> Result<FieldVector> {
        self.zip(rhs, |m, a, b| m.add(a, b))
    }

    pub fn sub(&self, rhs: &FieldVector) -> Result<FieldVector> {
        self.zip(rhs, |m, a, b| m.sub(a, b))
    }

    pub fn neg(&self) -> FieldVector {
        FieldVector {
            coords: self.coords.iter().map(|&c| self.modulus.neg(c)).collect(),
            modulus: self.modulus,
        }
    }

    fn zip(&self, rhs: &FieldVector, op: impl Fn(PrimeModulus, u64, u64) -> u64) -> Result<FieldVector> {
        self.modulus.check(rhs.modulus)?;
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: rhs.dim(),
            });
        }
        let m = self.modulus;
        Ok(FieldVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(&a, &b)| op(m, a, b))
                .collect(),
            modulus: m,
        })
    }
}

impl fmt::Display for FieldVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fe(p: u64, v: u64) -> FieldElement {
        PrimeModulus::new(p).unwrap().element(v)
    }

    fn trial_division(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut q = 2;
        while q * q <= n {
            if n % q == 0 {
                return false;
            }
            q += 1;
        }
        true
    }

    #[test]
    fn add_examples() {
        assert_eq!(fe(5, 2).add(fe(5, 3)).unwrap().value(), 0);
        assert_eq!(fe(7, 0).add(fe(7, 4)).unwrap().value(), 4);
        assert_eq!(fe(2, 1).add(fe(2, 1)).unwrap().value(), 0);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(fe(7, 3).mul(fe(7, 5)).unwrap().value(), 1);
        assert_eq!(fe(5, 0).mul(fe(5, 4)).unwrap().value(), 0);
        assert_eq!(fe(11, 6).mul(fe(11, 2)).unwrap().value(), 1);
    }

    #[test]
    fn inv_examples() {
        assert_eq!(fe(7, 3).inv().unwrap().value(), 5);
        assert_eq!(fe(5, 4).inv().unwrap().value(), 4);
        assert_eq!(fe(13, 2).inv().unwrap().value(), 7);
        assert!(matches!(fe(13, 0).inv(), Err(Error::InversionOfZero)));
    }

    #[test]
    fn mixed_moduli_rejected() {
        assert!(matches!(
            fe(5, 1).add(fe(7, 1)),
            Err(Error::ModulusMismatch { left: 5, right: 7 })
        ));
        assert!(fe(5, 1).mul(fe(7, 1)).is_err());
        let u = FieldVector::zero(PrimeModulus::new(5).unwrap(), 3);
        let v = FieldVector::zero(PrimeModulus::new(5).unwrap(), 2);
        assert!(matches!(u.sub(&v), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn prime_examples() {
        assert!(is_prime(97));
        assert!(!is_prime(561));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(is_prime(2));
        // Strong pseudoprimes to several small bases.
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(3_825_123_056_546_413_051));
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(u64::MAX));
    }

    #[test]
    fn is_prime_matches_trial_division_to_a_million() {
        for n in 0..=1_000_000u64 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn not_prime_modulus_rejected() {
        assert!(matches!(PrimeModulus::new(15), Err(Error::NotPrime(15))));
    }

    #[test]
    fn random_prime_has_requested_width() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for bits in [2, 8, 31, 63, 64] {
            let p = random_prime(bits, &mut rng).unwrap().get();
            assert_eq!(64 - p.leading_zeros(), bits);
            if bits <= 31 {
                assert!(trial_division(p));
            }
        }
        assert!(random_prime(1, &mut rng).is_err());
    }

    #[test]
    fn vec_sub_examples() {
        let m5 = PrimeModulus::new(5).unwrap();
        let m3 = PrimeModulus::new(3).unwrap();
        let v = |m, c: &[u64]| FieldVector::new(m, c.to_vec()).unwrap();
        assert_eq!(v(m5, &[1, 2, 4]).sub(&v(m5, &[0, 0, 0])).unwrap().coords(), &[1, 2, 4]);
        assert_eq!(v(m5, &[3, 3, 3]).sub(&v(m5, &[3, 3, 3])).unwrap().coords(), &[0, 0, 0]);
        assert_eq!(v(m3, &[0, 1, 2]).sub(&v(m3, &[2, 2, 2])).unwrap().coords(), &[1, 2, 0]);
        assert!(FieldVector::new(m3, vec![3]).is_err());
    }

    fn moduli() -> impl Strategy<Value = u64> {
        // 2_147_483_647 is the 31-bit Mersenne prime.
        prop::sample::select(vec![2u64, 3, 5, 7, 13, 2_147_483_647])
    }

    proptest! {
        #[test]
        fn field_laws(p in moduli(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let m = PrimeModulus::new(p).unwrap();
            let (a, b, c) = (m.element(a), m.element(b), m.element(c));
            prop_assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
            prop_assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
            prop_assert_eq!(a.add(b).unwrap().add(c).unwrap(), a.add(b.add(c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(b).unwrap().mul(c).unwrap(), a.mul(b.mul(c).unwrap()).unwrap());
            for x in [a.add(b).unwrap(), a.sub(b).unwrap(), a.mul(b).unwrap(), a.neg()] {
                prop_assert!(x.value() < p);
            }
            if !a.is_zero() {
                prop_assert_eq!(a.mul(a.inv().unwrap()).unwrap(), m.one());
            }
        }

        #[test]
        fn random_31_bit_prime_field_inverse(seed in any::<u64>(), a in 1u64..u64::MAX) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = random_prime(31, &mut rng).unwrap();
            let a = m.element(a);
            prop_assume!(!a.is_zero());
            prop_assert_eq!(a.mul(a.inv().unwrap()).unwrap(), m.one());
        }
    }
}
