//! Sidon sets: integer sets whose pairwise sums (doubles included) are all
//! distinct. Two explicit constructions are provided, Singer's perfect
//! difference sets and the Erdős–Turán quadratic-residue set.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strictly increasing positive integers with distinct pairwise sums, all in
/// `1..=universe_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidonSet {
    elements: Vec<u64>,
    universe_bound: u64,
}

impl SidonSet {
    pub fn new(elements: Vec<u64>, universe_bound: u64) -> Result<Self> {
        if !is_sidon(&elements)? {
            return Err(Error::NotSidon(format!("{elements:?}")));
        }
        if let Some(&max) = elements.last() {
            if max > universe_bound {
                return Err(Error::InvalidParameters(format!(
                    "element {max} exceeds universe bound {universe_bound}"
                )));
            }
        }
        Ok(SidonSet {
            elements,
            universe_bound,
        })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn universe_bound(&self) -> u64 {
        self.universe_bound
    }

    pub fn max(&self) -> Option<u64> {
        self.elements.last().copied()
    }
}

fn check_increasing(s: &[u64]) -> Result<()> {
    for (i, w) in s.windows(2).enumerate() {
        if w[0] >= w[1] {
            return Err(Error::NotIncreasing { position: i + 1 });
        }
    }
    if s.first() == Some(&0) {
        return Err(Error::NotIncreasing { position: 0 });
    }
    Ok(())
}

fn sums_distinct(s: &[u64], include_doubles: bool) -> Result<bool> {
    check_increasing(s)?;
    let mut sums = HashSet::with_capacity(s.len() * (s.len() + 1) / 2);
    for (i, &a) in s.iter().enumerate() {
        let start = if include_doubles { i } else { i + 1 };
        for &b in &s[start..] {
            if !sums.insert(a + b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff all sums `a + b` with `a <= b` (including `a == b`) are distinct.
pub fn is_sidon(s: &[u64]) -> Result<bool> {
    sums_distinct(s, true)
}

/// True iff all sums `a + b` with `a < b` are distinct.
pub fn is_weak_sidon(s: &[u64]) -> Result<bool> {
    sums_distinct(s, false)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p >= k`. Bertrand's postulate puts it at most `2k`.
pub fn smallest_prime_at_least(k: u64) -> u64 {
    let mut p = k.max(2);
    while !is_prime(p) {
        p += 1;
    }
    p
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Arithmetic in GF(q^3) = GF(q)[x] / (x^3 + c2 x^2 + c1 x + c0).
/// Elements are coefficient triples, constant term first.
struct CubicField {
    q: u64,
    /// Coefficients `[c0, c1, c2]` of the monic modulus.
    modulus: [u64; 3],
}

type Elem = [u64; 3];

impl CubicField {
    /// Finds the lexicographically first monic irreducible cubic over GF(q).
    /// A cubic is irreducible iff it has no root in GF(q).
    fn new(q: u64) -> Self {
        for c2 in 0..q {
            for c1 in 0..q {
                for c0 in 1..q {
                    let has_root = (0..q).any(|x| {
                        let v = (x * x % q * x + c2 * x % q * x + c1 * x + c0) % q;
                        v == 0
                    });
                    if !has_root {
                        return CubicField {
                            q,
                            modulus: [c0, c1, c2],
                        };
                    }
                }
            }
        }
        unreachable!("an irreducible cubic exists over every prime field")
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let q = self.q;
        let mut prod = [0u64; 5];
        for i in 0..3 {
            for j in 0..3 {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
            }
        }
        // x^3 = -(c2 x^2 + c1 x + c0)
        for deg in (3..5).rev() {
            let top = prod[deg];
            if top == 0 {
                continue;
            }
            prod[deg] = 0;
            for (k, &c) in self.modulus.iter().enumerate() {
                let idx = deg - 3 + k;
                prod[idx] = (prod[idx] + (q - c) * top) % q;
            }
        }
        [prod[0], prod[1], prod[2]]
    }

    fn pow(&self, base: &Elem, mut exp: u64) -> Elem {
        let mut result = [1, 0, 0];
        let mut b = *base;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(&result, &b);
            }
            b = self.mul(&b, &b);
            exp >>= 1;
        }
        result
    }

    /// First element, in lexicographic order of `(c2, c1, c0)`, whose
    /// multiplicative order is `q^3 - 1`.
    fn generator(&self) -> Elem {
        let q = self.q;
        let order = q * q * q - 1;
        let factors = distinct_prime_factors(order);
        for c2 in 0..q {
            for c1 in 0..q {
                for c0 in 0..q {
                    let g = [c0, c1, c2];
                    if g == [0, 0, 0] {
                        continue;
                    }
                    if factors.iter().all(|&r| self.pow(&g, order / r) != [1, 0, 0]) {
                        return g;
                    }
                }
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }
}

/// Singer's construction for a prime `q`: the exponents `i` modulo
/// `q^2 + q + 1` for which `g^i` lies in the plane spanned by `1` and `x`.
/// These `q + 1` residues form a perfect difference set; shifted into
/// `1..=q^2+q+1` they are a Sidon set.
pub fn singer_sidon(q: u64) -> Result<SidonSet> {
    if !is_prime(q) {
        return Err(Error::NotPrime { value: q });
    }
    let field = CubicField::new(q);
    let g = field.generator();
    let modulus = q * q + q + 1;
    let mut elements = Vec::with_capacity(q as usize + 1);
    let mut power: Elem = [1, 0, 0];
    for i in 0..modulus {
        if power[2] == 0 {
            elements.push(i + 1);
        }
        power = field.mul(&power, &g);
    }
    debug_assert_eq!(elements.len() as u64, q + 1);
    SidonSet::new(elements, modulus)
}

/// `{1 + 2pi + (i^2 mod p) : 0 <= i < p}` for a prime `p`, a Sidon set of
/// size `p` inside `1..=p(2p-1)`.
pub fn erdos_turan_sidon(p: u64) -> Result<SidonSet> {
    if !is_prime(p) {
        return Err(Error::NotPrime { value: p });
    }
    let elements = (0..p).map(|i| 1 + 2 * p * i + (i * i) % p).collect();
    SidonSet::new(elements, p * (2 * p - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sidon_predicates() {
        assert!(is_sidon(&[1, 2, 5, 7]).unwrap());
        assert!(!is_sidon(&[1, 2, 3, 5]).unwrap());
        assert!(is_sidon(&[1]).unwrap());
        assert!(is_sidon(&[]).unwrap());

        assert!(is_weak_sidon(&[1, 2, 3, 5]).unwrap());
        assert!(!is_weak_sidon(&[1, 2, 3, 4]).unwrap());
        assert!(is_weak_sidon(&[1, 2, 5, 7]).unwrap());

        assert_eq!(is_sidon(&[1, 3, 2]), Err(Error::NotIncreasing { position: 2 }));
        assert_eq!(is_sidon(&[2, 2]), Err(Error::NotIncreasing { position: 1 }));
        assert!(is_weak_sidon(&[0, 1]).is_err());
    }

    #[test]
    fn primes() {
        assert_eq!(smallest_prime_at_least(1), 2);
        assert_eq!(smallest_prime_at_least(8), 11);
        assert_eq!(smallest_prime_at_least(13), 13);
        for k in 1..2000 {
            let p = smallest_prime_at_least(k);
            assert!(is_prime(p) && p >= k && p <= 2 * k);
        }
        assert_eq!(distinct_prime_factors(26), vec![2, 13]);
        assert_eq!(distinct_prime_factors(7 * 7 * 7 - 1), vec![2, 3, 19]);
    }

    #[test]
    fn erdos_turan_examples() {
        assert_eq!(erdos_turan_sidon(3).unwrap().elements(), &[1, 8, 14]);
        assert_eq!(erdos_turan_sidon(2).unwrap().elements(), &[1, 6]);
        let s5 = erdos_turan_sidon(5).unwrap();
        assert_eq!(s5.len(), 5);
        assert!(s5.max().unwrap() <= 45);
        assert_eq!(erdos_turan_sidon(9), Err(Error::NotPrime { value: 9 }));
    }

    fn is_perfect_difference_set(residues: &[u64], modulus: u64) -> bool {
        let mut seen = HashSet::new();
        for &a in residues {
            for &b in residues {
                if a != b && !seen.insert((a + modulus - b) % modulus) {
                    return false;
                }
            }
        }
        seen.len() as u64 == modulus - 1
    }

    #[test]
    fn singer_small_cases() {
        let s2 = singer_sidon(2).unwrap();
        assert_eq!(s2.len(), 3);
        assert_eq!(s2.universe_bound(), 7);
        assert_eq!(s2.elements()[0], 1);
        assert!(is_perfect_difference_set(s2.elements(), 7));

        let s3 = singer_sidon(3).unwrap();
        assert_eq!(s3.len(), 4);
        assert!(s3.max().unwrap() <= 13);
        assert!(is_perfect_difference_set(s3.elements(), 13));

        assert_eq!(singer_sidon(4), Err(Error::NotPrime { value: 4 }));
    }

    #[test]
    fn singer_is_perfect_difference_set() {
        for q in (2..=31).filter(|&q| is_prime(q)) {
            let s = singer_sidon(q).unwrap();
            let m = q * q + q + 1;
            assert_eq!(s.len() as u64, q + 1, "q={q}");
            assert!(is_perfect_difference_set(s.elements(), m), "q={q}");
        }
    }

    #[test]
    fn erdos_turan_is_hereditary() {
        let s = erdos_turan_sidon(13).unwrap();
        for mask in (1u32..(1 << 13)).step_by(37) {
            let subset: Vec<u64> = s
                .elements()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            assert!(is_sidon(&subset).unwrap());
        }
    }

    #[test]
    fn cubic_field_generator_has_full_order() {
        let f = CubicField::new(5);
        let g = f.generator();
        let mut seen = HashSet::new();
        let mut x = [1, 0, 0];
        for _ in 0..124 {
            assert!(seen.insert(x));
            x = f.mul(&x, &g);
        }
        assert_eq!(x, [1, 0, 0]);
    }
}
