//! Exact spectral checks for the complete bivariegated graph: two copies of
//! `K_n` joined by a perfect matching, i.e. the line graph of `K_{2,n}`.
//!
//! Multiplicities are certified by exact nullities of `A - λI` and the
//! identity `A³ + (4-n)A² - 2(n-2)A = (n+2)J` is checked entrywise in
//! arbitrary-precision integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::IntMatrix;

/// The 0-1 adjacency matrix.
pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.order(), g.order(), |i, j| {
        if g.has_edge(i, j) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// Dimension minus rank, by fraction-free elimination.
pub fn exact_nullity(m: &IntMatrix) -> usize {
    m.nullity()
}

/// One claimed eigenvalue with its certified multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eigenvalue {
    pub value: i64,
    pub claimed: usize,
    /// `nullity(A - value I)`.
    pub certified: usize,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub eigenvalues: Vec<Eigenvalue>,
    /// Some of `n, n-2, 0, -2` coincide (only for `n <= 2`).
    pub degenerate: bool,
    /// `A u = n u` for the all-ones vector `u`.
    pub all_ones_eigenvector: bool,
    /// The certified multiplicities sum to `2n`.
    pub complete: bool,
}

impl SpectrumReport {
    /// Eigenvalue to certified multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<i64, usize> {
        self.eigenvalues.iter().map(|e| (e.value, e.certified)).collect()
    }

    pub fn verified(&self) -> bool {
        self.complete && self.all_ones_eigenvector && self.eigenvalues.iter().all(|e| e.verified)
    }
}

/// Claimed multiplicities `{n: 1, n-2: 1, 0: n-1, -2: n-1}`, merged where
/// values coincide.
pub fn claimed_spectrum(n: usize) -> BTreeMap<i64, usize> {
    let k = n as i64;
    let mut m = BTreeMap::new();
    for (value, mult) in [(k, 1), (k - 2, 1), (0, n - 1), (-2, n - 1)] {
        if mult > 0 {
            *m.entry(value).or_insert(0) += mult;
        }
    }
    m
}

fn complete_bivariegated_adjacency(n: usize) -> Result<IntMatrix> {
    if n < 1 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    Ok(adjacency_matrix(&Family::CompleteBivariegated(n).build()?))
}

pub fn spectrum_complete_bivariegated(n: usize) -> Result<SpectrumReport> {
    let a = complete_bivariegated_adjacency(n)?;
    let claimed = claimed_spectrum(n);
    let eigenvalues: Vec<Eigenvalue> = claimed
        .iter()
        .rev()
        .map(|(&value, &claimed)| {
            let certified = exact_nullity(&a.shift(&BigInt::from(value)));
            Eigenvalue {
                value,
                claimed,
                certified,
                verified: certified == claimed,
            }
        })
        .collect();
    let ones = vec![BigInt::one(); 2 * n];
    let all_ones_eigenvector = a.apply(&ones) == vec![BigInt::from(n); 2 * n];
    let total: usize = eigenvalues.iter().map(|e| e.certified).sum();
    Ok(SpectrumReport {
        n,
        degenerate: claimed.len() < 4,
        eigenvalues,
        all_ones_eigenvector,
        complete: total == 2 * n,
    })
}

/// Outcome of the polynomial identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialIdentity {
    pub holds: bool,
    /// `A³ + (4-n)A² - 2(n-2)A - (n+2)J`; zero exactly when the identity holds.
    pub residual: IntMatrix,
    /// `(A - nI)(A - (n-2)I) A (A + 2I)` vanishes.
    pub annihilated: bool,
}

/// Checks the identity for an arbitrary adjacency matrix against parameter `n`.
pub fn polynomial_identity_for(a: &IntMatrix, n: usize) -> PolynomialIdentity {
    let dim = a.rows();
    let k = BigInt::from(n);
    let a2 = a * a;
    let a3 = &a2 * a;
    let lhs = &(&a3 + &a2.scale(&(BigInt::from(4) - &k))) - &a.scale(&(BigInt::from(2) * (&k - 2)));
    let rhs = IntMatrix::ones(dim, dim).scale(&(&k + 2));
    let residual = &lhs - &rhs;
    let product = &(&(&a.shift(&k) * &a.shift(&(&k - 2))) * a) * &a.shift(&BigInt::from(-2));
    PolynomialIdentity {
        holds: residual.is_zero(),
        residual,
        annihilated: product.is_zero(),
    }
}

pub fn verify_polynomial_identity(n: usize) -> Result<PolynomialIdentity> {
    Ok(polynomial_identity_for(&complete_bivariegated_adjacency(n)?, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line_graph::line_graph;
    use crate::iso::is_isomorphic;

    /// Characteristic polynomial `det(xI - A)` by the Leibniz formula with
    /// polynomial entries; coefficients in increasing degree.
    fn charpoly(g: &Graph) -> Vec<i64> {
        let n = g.order();
        let entry = |i: usize, j: usize| -> Vec<i64> {
            if i == j {
                vec![0, 1]
            } else if g.has_edge(i, j) {
                vec![-1]
            } else {
                vec![0]
            }
        };
        let mut total = vec![0i64; n + 1];
        let mut perm: Vec<usize> = (0..n).collect();
        permutations(&mut perm, 0, &mut |p| {
            let mut term = vec![sign(p)];
            for (i, &j) in p.iter().enumerate() {
                term = poly_mul(&term, &entry(i, j));
            }
            for (d, c) in term.into_iter().enumerate() {
                total[d] += c;
            }
        });
        total
    }

    fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permutations(p, k + 1, f);
            p.swap(k, i);
        }
    }

    fn sign(p: &[usize]) -> i64 {
        let inversions = (0..p.len())
            .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        if inversions % 2 == 0 { 1 } else { -1 }
    }

    fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    /// Multiplicity of `root` by repeated synthetic division.
    fn root_multiplicity(mut p: Vec<i64>, root: i64) -> usize {
        let mut m = 0;
        while p.len() > 1 {
            let deg = p.len() - 1;
            let mut q = vec![0; deg];
            let mut carry = 0;
            for d in (0..=deg).rev() {
                let v = p[d] + carry * root;
                if d == 0 {
                    if v != 0 {
                        return m;
                    }
                } else {
                    q[d - 1] = v;
                }
                carry = v;
            }
            p = q;
            m += 1;
        }
        m
    }

    fn oracle_spectrum(n: usize) -> BTreeMap<i64, usize> {
        let g = Family::CompleteBivariegated(n).build().unwrap();
        let p = charpoly(&g);
        (-(2 * n as i64)..=(2 * n as i64))
            .map(|r| (r, root_multiplicity(p.clone(), r)))
            .filter(|&(_, m)| m > 0)
            .collect()
    }

    #[test]
    fn charpoly_oracle_on_c4() {
        let c4 = Family::Cycle(4).build().unwrap();
        // x^4 - 4x^2
        assert_eq!(charpoly(&c4), vec![0, 0, -4, 0, 1]);
        assert_eq!(exact_nullity(&adjacency_matrix(&c4)), 2);
    }

    #[test]
    fn oracle_agrees_with_rank_certificates() {
        assert_eq!(oracle_spectrum(3), BTreeMap::from([(3, 1), (1, 1), (0, 2), (-2, 2)]));
        assert_eq!(oracle_spectrum(4), BTreeMap::from([(4, 1), (2, 1), (0, 3), (-2, 3)]));
        for n in [3, 4] {
            let r = spectrum_complete_bivariegated(n).unwrap();
            assert_eq!(r.multiplicities(), oracle_spectrum(n));
            assert!(r.verified() && !r.degenerate);
        }
    }

    #[test]
    fn small_adjacency_matrices() {
        let k2 = adjacency_matrix(&Family::Complete(2).build().unwrap());
        assert_eq!(k2.to_rows(), vec![vec![0.into(), 1.into()], vec![1.into(), 0.into()]]);
        let k1 = adjacency_matrix(&Family::Complete(1).build().unwrap());
        assert_eq!(k1.to_rows(), vec![vec![BigInt::zero()]]);
        let prism = adjacency_matrix(&Family::CompleteBivariegated(3).build().unwrap());
        assert!(prism.is_symmetric());
        assert!(prism.apply(&vec![BigInt::one(); 6]).iter().all(|x| *x == 3.into()));
    }

    #[test]
    fn spectra_for_n_up_to_8() {
        for n in 3..=8 {
            let r = spectrum_complete_bivariegated(n).unwrap();
            assert!(r.verified(), "n = {n}");
            assert_eq!(r.multiplicities(), claimed_spectrum(n));
            let id = verify_polynomial_identity(n).unwrap();
            assert!(id.holds && id.annihilated && id.residual.is_zero());
        }
    }

    #[test]
    fn degenerate_small_n() {
        let r1 = spectrum_complete_bivariegated(1).unwrap();
        assert!(r1.degenerate && r1.verified());
        assert_eq!(r1.multiplicities(), BTreeMap::from([(1, 1), (-1, 1)]));
        let r2 = spectrum_complete_bivariegated(2).unwrap();
        assert!(r2.degenerate && r2.verified());
        assert_eq!(r2.multiplicities(), BTreeMap::from([(2, 1), (0, 2), (-2, 1)]));
        assert!(spectrum_complete_bivariegated(0).is_err());
    }

    #[test]
    fn perturbed_prism_fails_identity() {
        let g = Family::CompleteBivariegated(3).build().unwrap().toggle_edge(0, 4).unwrap();
        let id = polynomial_identity_for(&adjacency_matrix(&g), 3);
        assert!(!id.holds);
        assert!(!id.residual.is_zero());
    }

    #[test]
    fn same_graph_as_line_graph_of_k2n() {
        for n in 3..=6 {
            let lg = line_graph(&Family::CompleteBipartite(2, n).build().unwrap()).line_graph;
            assert!(is_isomorphic(&lg, &Family::CompleteBivariegated(n).build().unwrap()));
        }
    }
}
