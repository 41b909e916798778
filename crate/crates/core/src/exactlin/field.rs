use super::LinError;

/// The prime field GF(p). Elements are plain `u32` residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, LinError> {
        if !is_prime(p) || p > (1 << 15) {
            return Err(LinError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in GF({})", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, a: u32, mut e: u32) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    #[inline]
    pub fn from_i64(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    /// Representative in `(-p/2, p/2]`, used for printing.
    pub fn signed(&self, a: u32) -> i64 {
        let a = a as i64;
        let p = self.p as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.p
    }

    // Vector helpers. Callers guarantee equal lengths.

    pub fn add_vec(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn sub_vec(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    pub fn scale_vec(&self, c: u32, a: &[u32]) -> Vec<u32> {
        a.iter().map(|&x| self.mul(c, x)).collect()
    }

    /// `acc += c * a`
    pub fn axpy(&self, acc: &mut [u32], c: u32, a: &[u32]) {
        if c == 0 {
            return;
        }
        for (t, &x) in acc.iter_mut().zip(a) {
            *t = (*t + c * x) % self.p;
        }
    }

    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        let s: u64 = a.iter().zip(b).map(|(&x, &y)| (x * y) as u64).sum();
        (s % self.p as u64) as u32
    }

    pub fn unit_vec(&self, n: usize, k: usize) -> Vec<u32> {
        let mut v = vec![0; n];
        v[k] = 1;
        v
    }

    /// Iterates over all `p^n` vectors of length `n`, lexicographically with
    /// the last coordinate varying fastest.
    pub fn all_vectors(&self, n: usize) -> AllVectors {
        AllVectors {
            p: self.p,
            current: Some(vec![0; n]),
        }
    }
}

pub struct AllVectors {
    p: u32,
    current: Option<Vec<u32>>,
}

impl Iterator for AllVectors {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            next[i] += 1;
            if next[i] < self.p {
                self.current = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(out)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(3).is_ok());
    }

    #[test]
    fn inverses_in_gf7() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn enumerates_every_vector_once() {
        let f = PrimeField::new(3).unwrap();
        let all: Vec<_> = f.all_vectors(3).collect();
        assert_eq!(all.len(), 27);
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), 27);
        assert_eq!(f.all_vectors(0).count(), 1);
    }

    #[test]
    fn signed_representatives() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.signed(2), -1);
        assert_eq!(f.from_i64(-4), 2);
    }
}
