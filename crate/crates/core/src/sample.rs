//! Seeded random rationals for identity checks and interpolation.

use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{monomials_of_degree, Polynomial, VarContext, Vector};
use crate::scalar::{ratio, Scalar};

/// Bounds on sampled rationals: numerator in `[-numerator, numerator]`,
/// denominator in `[1, denominator]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Height {
    pub numerator: i64,
    pub denominator: i64,
}

impl Default for Height {
    fn default() -> Self {
        Self {
            numerator: 20,
            denominator: 10,
        }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    height: Height,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self::with_height(seed, Height::default())
    }

    pub fn with_height(seed: u64, height: Height) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            height,
        }
    }

    pub fn scalar(&mut self) -> Scalar {
        let num = self.rng.random_range(-self.height.numerator..=self.height.numerator);
        let den = self.rng.random_range(1..=self.height.denominator);
        ratio(num, den)
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.random_range(0..bound)
    }

    pub fn vector(&mut self, n: usize) -> Vector {
        Vector((0..n).map(|_| self.scalar()).collect())
    }

    pub fn nonzero_vector(&mut self, n: usize) -> Vector {
        loop {
            let v = self.vector(n);
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// Nonzero vector whose coordinates are each zero with probability 1/2,
    /// so that coordinate subspaces are hit regularly.
    pub fn sparse_vector(&mut self, n: usize) -> Vector {
        loop {
            let v = Vector(
                (0..n)
                    .map(|_| {
                        if self.rng.random_bool(0.5) {
                            Scalar::zero()
                        } else {
                            self.nonzero_scalar()
                        }
                    })
                    .collect(),
            );
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// Nonzero homogeneous form of degree `degree` with at most `terms`
    /// random monomials.
    pub fn form(&mut self, ctx: &Arc<VarContext>, degree: usize, terms: usize) -> Polynomial {
        let monomials = monomials_of_degree(ctx.n(), degree);
        loop {
            let picked: Vec<_> = (0..terms.max(1))
                .map(|_| (monomials[self.index(monomials.len())].clone(), self.scalar()))
                .collect();
            let p = Polynomial::from_terms(ctx, picked);
            if !p.is_zero() {
                return p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_bounded() {
        let mut a = Sampler::new(3);
        let mut b = Sampler::new(3);
        for _ in 0..100 {
            let x = a.scalar();
            assert_eq!(x, b.scalar());
            assert!(x.numer().magnitude() <= &20u32.into());
            assert!(x.denom() <= &10.into());
        }
    }
}
