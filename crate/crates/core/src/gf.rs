//! Arithmetic tables for the finite fields `GF(p^k)` with `p^k <= 64`.
//!
//! Field elements are indexed `0..p^k`; index `v` encodes the polynomial
//! whose coefficient of `x^j` is the `j`-th base-`p` digit of `v` (little
//! endian). Extension fields are reduced modulo a fixed published
//! irreducible polynomial per `(p, k)` — the Conway polynomial — so the
//! tables are bit-reproducible across runs and platforms.

use thiserror::Error;

use crate::group::FiniteGroup;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("{p} is not prime")]
    NotPrime { p: usize },
    #[error("field order {p}^{k} exceeds the supported bound of {MAX_FIELD_ORDER}")]
    TooLarge { p: usize, k: u32 },
    #[error("field exponent must be at least 1")]
    ZeroExponent,
}

/// Conway polynomials for every `(p, k)` with `k >= 2` and `p^k <= 64`.
/// Coefficients are listed lowest degree first, leading 1 omitted.
const REDUCTION_POLYS: &[(usize, u32, &[usize])] = &[
    (2, 2, &[1, 1]),             // x^2 + x + 1
    (2, 3, &[1, 1, 0]),          // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0]),       // x^4 + x + 1
    (2, 5, &[1, 0, 1, 0, 0]),    // x^5 + x^2 + 1
    (2, 6, &[1, 1, 0, 1, 1, 0]), // x^6 + x^4 + x^3 + x + 1
    (3, 2, &[2, 2]),             // x^2 + 2x + 2
    (3, 3, &[1, 2, 0]),          // x^3 + 2x + 1
    (5, 2, &[2, 4]),             // x^2 + 4x + 2
    (7, 2, &[3, 6]),             // x^2 + 6x + 3
];

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Addition and multiplication tables of `GF(p^k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf {
    p: usize,
    k: u32,
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl Gf {
    pub fn new(p: usize, k: u32) -> Result<Self, GfError> {
        if k == 0 {
            return Err(GfError::ZeroExponent);
        }
        if !is_prime(p) {
            return Err(GfError::NotPrime { p });
        }
        let mut q: usize = 1;
        for _ in 0..k {
            q = q.checked_mul(p).filter(|&q| q <= MAX_FIELD_ORDER).ok_or(GfError::TooLarge { p, k })?;
        }
        let reduction: &[usize] = if k == 1 {
            &[]
        } else {
            REDUCTION_POLYS
                .iter()
                .find(|&&(rp, rk, _)| rp == p && rk == k)
                .map(|&(_, _, coeffs)| coeffs)
                .expect("reduction polynomial table covers every p^k <= 64 with k >= 2")
        };

        let k = k as usize;
        let digits = |mut v: usize| -> Vec<usize> {
            let mut d = vec![0; k];
            for slot in d.iter_mut() {
                *slot = v % p;
                v /= p;
            }
            d
        };
        let undigits = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for i in 0..q {
            let di = digits(i);
            for j in 0..q {
                let dj = digits(j);
                let sum: Vec<usize> = di.iter().zip(&dj).map(|(&a, &b)| (a + b) % p).collect();
                add[i * q + j] = undigits(&sum);

                // Polynomial product, then reduction by x^k = -(low part).
                let mut prod = vec![0; 2 * k - 1];
                for (a, &ca) in di.iter().enumerate() {
                    for (b, &cb) in dj.iter().enumerate() {
                        prod[a + b] = (prod[a + b] + ca * cb) % p;
                    }
                }
                for deg in (k..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (off, &rc) in reduction.iter().enumerate() {
                        let cell = &mut prod[deg - k + off];
                        *cell = (*cell + c * (p - rc)) % p;
                    }
                }
                mul[i * q + j] = undigits(&prod[..k]);
            }
        }

        // Irreducibility safeguard: a reducible modulus would create zero
        // divisors, which would silently corrupt the multiplicative group.
        for i in 1..q {
            for j in 1..q {
                assert_ne!(
                    mul[i * q + j],
                    0,
                    "zero divisor {i} * {j} in GF({p}^{k}); reduction polynomial is not irreducible"
                );
            }
        }

        Ok(Gf { p, k: k as u32, q, add, mul })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field order `p^k`.
    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        self.add[i * self.q + j]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.q + j]
    }

    /// The additive group, elements named by field index.
    pub fn additive_group(&self) -> FiniteGroup {
        let names: Vec<String> = (0..self.q).map(|i| i.to_string()).collect();
        let rows: Vec<Vec<usize>> = (0..self.q)
            .map(|i| (0..self.q).map(|j| self.add(i, j)).collect())
            .collect();
        FiniteGroup::from_table(format!("gf{}-add", self.q), names, rows)
            .expect("field addition is a group")
    }

    /// The multiplicative group on the nonzero elements; its element `u`
    /// is field element `u + 1`, and names keep the field indexing.
    pub fn multiplicative_group(&self) -> FiniteGroup {
        let names: Vec<String> = (1..self.q).map(|i| i.to_string()).collect();
        let rows: Vec<Vec<usize>> = (1..self.q)
            .map(|i| (1..self.q).map(|j| self.mul(i, j) - 1).collect())
            .collect();
        FiniteGroup::from_table(format!("gf{}-units", self.q), names, rows)
            .expect("nonzero field elements form a group under multiplication")
    }
}
