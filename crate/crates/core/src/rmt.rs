//! Random-matrix ground truth for the three convolutions.
//!
//! Each convolution is an expected characteristic polynomial over random
//! orthogonal conjugation:
//!
//! * `p ⊞_d q = E_Q χ(A + Q B Qᵀ)`,
//! * `p ⊠_d q = E_Q χ(A Q B Qᵀ)`,
//! * `p ⊞⊞_d q = E_{R,Q} χ((A + R B Q)(A + R B Q)ᵀ)`.
//!
//! Two ways of evaluating the expectations live here. Monte Carlo over Haar
//! samples gives statistical estimates. Exact averages over the finite
//! group of signed permutations give rational polynomials that must equal
//! the convolution formulas.
//!
//! Monte Carlo runs are reproducible: sample `i` draws from ChaCha8 seeded
//! with `seed` on stream `i`, samples are grouped into fixed chunks, and
//! chunk statistics are merged in chunk order. The estimate does not depend
//! on the number of threads.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RootList};
use crate::rational::{self, to_f64};

/// Largest dimension for symmetric quadrature (`2^6 · 6! = 46080` terms).
pub const MAX_SYM_QUADRATURE_DIM: usize = 6;
/// Largest dimension for pair quadrature (`(2^4 · 4!)² = 147456` terms).
pub const MAX_ASYM_QUADRATURE_DIM: usize = 4;
/// Samples per Monte Carlo chunk; the unit of parallel work.
pub const CHUNK: u64 = 1024;

const SYMMETRY_TOLERANCE: f64 = 1e-12;
const JACOBI_TOLERANCE: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 100;

/// A square matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMatrix {
    d: usize,
    entries: Vec<BigRational>,
    symmetric: bool,
}

impl RationalMatrix {
    pub fn new(d: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != d * d {
            return Err(Error::domain(format!(
                "{} entries do not form a {d}×{d} matrix",
                entries.len()
            )));
        }
        let symmetric = (0..d).all(|i| (0..i).all(|j| entries[i * d + j] == entries[j * d + i]));
        Ok(RationalMatrix {
            d,
            entries,
            symmetric,
        })
    }

    pub fn from_i64s(d: usize, entries: &[i64]) -> Result<Self> {
        Self::new(d, entries.iter().map(|&v| rational::int(v)).collect())
    }

    pub fn diagonal(diag: &[BigRational]) -> Self {
        let d = diag.len();
        let mut entries = vec![BigRational::zero(); d * d];
        for (i, v) in diag.iter().enumerate() {
            entries[i * d + i] = v.clone();
        }
        RationalMatrix {
            d,
            entries,
            symmetric: true,
        }
    }

    pub fn from_i64_diagonal(diag: &[i64]) -> Self {
        Self::diagonal(&diag.iter().map(|&v| rational::int(v)).collect::<Vec<_>>())
    }

    pub fn identity(d: usize) -> Self {
        Self::diagonal(&vec![BigRational::one(); d])
    }

    pub fn zero(d: usize) -> Self {
        Self::diagonal(&vec![BigRational::zero(); d])
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.d + j]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn transpose(&self) -> Self {
        let d = self.d;
        let entries = (0..d * d)
            .map(|k| self.entries[(k % d) * d + k / d].clone())
            .collect();
        RationalMatrix {
            d,
            entries,
            symmetric: self.symmetric,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let d = self.d;
        if other.d != d {
            return Err(Error::domain("matrix dimensions differ"));
        }
        let mut entries = vec![BigRational::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    entries[i * d + j] += a * other.get(k, j);
                }
            }
        }
        Self::new(d, entries)
    }

    /// `M Mᵀ`.
    pub fn gram(&self) -> Self {
        self.mul(&self.transpose()).expect("same dimension")
    }

    pub fn to_f64(&self) -> Matrix {
        Matrix::from_vec(self.d, self.entries.iter().map(to_f64).collect())
    }

    /// Entries multiplied by the least common denominator `L`, and `L`.
    fn integer_scaled(&self, others: &[&RationalMatrix]) -> (Vec<Vec<BigInt>>, BigInt) {
        let all = std::iter::once(self).chain(others.iter().copied());
        let l = all
            .clone()
            .flat_map(|m| m.entries.iter())
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        let scaled = all
            .map(|m| m.entries.iter().map(|e| (e * &l).to_integer()).collect())
            .collect();
        (scaled, l)
    }
}

/// A dense square matrix of doubles, row-major.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Matrix {
    d: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn from_vec(d: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), d * d, "matrix data length");
        Matrix { d, data }
    }

    pub fn from_fn(d: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        Matrix {
            d,
            data: (0..d * d).map(|k| f(k / d, k % d)).collect(),
        }
    }

    pub fn zeros(d: usize) -> Self {
        Matrix {
            d,
            data: vec![0.0; d * d],
        }
    }

    pub fn identity(d: usize) -> Self {
        Self::from_fn(d, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn diagonal(diag: &[f64]) -> Self {
        Self::from_fn(diag.len(), |i, j| if i == j { diag[i] } else { 0.0 })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.d + j]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.d, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.d;
        let mut out = vec![0.0; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                for j in 0..d {
                    out[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        Matrix { d, data: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        Matrix {
            d: self.d,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `(M + Mᵀ)/2`, removing rounding asymmetry from products.
    pub fn symmetrized(&self) -> Self {
        Self::from_fn(self.d, |i, j| 0.5 * (self.get(i, j) + self.get(j, i)))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let scale = self.frobenius_norm().max(1.0);
        (0..self.d).all(|i| (0..i).all(|j| (self.get(i, j) - self.get(j, i)).abs() <= tol * scale))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SampleSource {
    Haar,
    SignedPermutation,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrthogonalSample {
    pub matrix: Matrix,
    pub source: SampleSource,
}

/// Haar-distributed orthogonal matrix: Gram–Schmidt (applied twice per
/// column) on a standard Gaussian matrix. The implied `R` has a positive
/// diagonal, which makes `Q` Haar on the full orthogonal group.
pub fn sample_haar<R: Rng + ?Sized>(d: usize, rng: &mut R) -> OrthogonalSample {
    let gauss: Vec<f64> = (0..d * d).map(|_| rng.sample(StandardNormal)).collect();
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(d);
    for j in 0..d {
        let mut v: Vec<f64> = (0..d).map(|i| gauss[i * d + j]).collect();
        for _ in 0..2 {
            for q in &cols {
                let r: f64 = q.iter().zip(&v).map(|(a, b)| a * b).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= r * qi;
                }
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        cols.push(v.into_iter().map(|x| x / norm).collect());
    }
    OrthogonalSample {
        matrix: Matrix::from_fn(d, |i, j| cols[j][i]),
        source: SampleSource::Haar,
    }
}

/// Uniform signed permutation matrix: a shuffled permutation with
/// independent random signs.
pub fn sample_signed_perm<R: Rng + ?Sized>(d: usize, rng: &mut R) -> OrthogonalSample {
    let mut perm: Vec<usize> = (0..d).collect();
    perm.shuffle(rng);
    let signs: Vec<f64> = (0..d)
        .map(|_| if rng.random::<bool>() { 1.0 } else { -1.0 })
        .collect();
    OrthogonalSample {
        matrix: Matrix::from_fn(d, |i, j| if perm[i] == j { signs[i] } else { 0.0 }),
        source: SampleSource::SignedPermutation,
    }
}

trait ExactRing:
    Clone + Zero + One + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv + From<i64> + Send + Sync
{
}

impl<T> ExactRing for T where
    T: Clone
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedDiv
        + From<i64>
        + Send
        + Sync
{
}

fn checked_neg<T: ExactRing>(x: &T) -> Option<T> {
    T::zero().checked_sub(x)
}

/// Characteristic polynomial of an integer matrix by the Faddeev–LeVerrier
/// trace recursion, ascending coefficients. Every division is exact.
/// `None` on overflow.
fn faddeev_leverrier<T: ExactRing>(m: &[T], d: usize) -> Option<Vec<T>> {
    let mut coeffs = vec![T::zero(); d + 1];
    coeffs[d] = T::one();
    let mut mk = vec![T::zero(); d * d];
    for k in 1..=d {
        // M_k = A M_{k−1} + c_{d−k+1} I
        let mut next = vec![T::zero(); d * d];
        for i in 0..d {
            for l in 0..d {
                let a = &m[i * d + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let prod = a.checked_mul(&mk[l * d + j])?;
                    next[i * d + j] = next[i * d + j].checked_add(&prod)?;
                }
            }
        }
        for i in 0..d {
            next[i * d + i] = next[i * d + i].checked_add(&coeffs[d - k + 1])?;
        }
        // c_{d−k} = −tr(A M_k) / k
        let mut trace = T::zero();
        for i in 0..d {
            for j in 0..d {
                trace = trace.checked_add(&m[i * d + j].checked_mul(&next[j * d + i])?)?;
            }
        }
        coeffs[d - k] = checked_neg(&trace)?.checked_div(&T::from(k as i64))?;
        mk = next;
    }
    Some(coeffs)
}

fn to_i128s(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter().map(|x| x.to_i128()).collect()
}

/// `L^{−s·d} χ_N(L^s x)`: undoes an integer scaling `N = L^s M`.
fn unscale(coeffs: Vec<BigInt>, l: &BigInt, s: u32, divisor: &BigInt) -> Polynomial {
    let d = coeffs.len() - 1;
    let ls = BigRational::from_integer(l.pow(s));
    Polynomial::new(
        coeffs
            .into_iter()
            .enumerate()
            .map(|(k, c)| BigRational::new(c, divisor.clone()) / rational::pow(&ls, (d - k) as u32))
            .collect(),
    )
}

/// `det(xI − M)`, exactly.
pub fn charpoly_exact(m: &RationalMatrix) -> Polynomial {
    let (scaled, l) = m.integer_scaled(&[]);
    let d = m.d;
    let coeffs = to_i128s(&scaled[0])
        .and_then(|fast| faddeev_leverrier(&fast, d))
        .map(|c| c.into_iter().map(BigInt::from).collect())
        .unwrap_or_else(|| faddeev_leverrier(&scaled[0], d).expect("big integers do not overflow"));
    unscale(coeffs, &l, 1, &BigInt::one())
}

/// All permutations of `0..d` in lexicographic order.
fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..d).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..d).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..d)
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .expect("exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

fn sign(mask: u32, i: usize) -> bool {
    mask >> i & 1 == 1
}

fn sum_vectors<T: ExactRing>(a: Option<Vec<T>>, b: Option<Vec<T>>) -> Option<Vec<T>> {
    let (a, b) = (a?, b?);
    a.iter().zip(&b).map(|(x, y)| x.checked_add(y)).collect()
}

fn sym_quadrature_sum<T: ExactRing>(a: &[T], b: &[T], d: usize) -> Option<Vec<T>> {
    let perms = permutations(d);
    perms
        .par_iter()
        .map(|pi| {
            let mut acc = Some(vec![T::zero(); d + 1]);
            for mask in 0..1u32 << d {
                let mut n = a.to_vec();
                for i in 0..d {
                    for j in 0..d {
                        let v = &b[pi[i] * d + pi[j]];
                        let v = if sign(mask, i) != sign(mask, j) {
                            checked_neg(v)?
                        } else {
                            v.clone()
                        };
                        n[i * d + j] = n[i * d + j].checked_add(&v)?;
                    }
                }
                acc = sum_vectors(acc, faddeev_leverrier(&n, d));
            }
            acc
        })
        .reduce(|| Some(vec![T::zero(); d + 1]), sum_vectors)
}

fn asym_quadrature_sum<T: ExactRing>(a: &[T], b: &[T], d: usize) -> Option<Vec<T>> {
    let perms = permutations(d);
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> = perms
        .iter()
        .flat_map(|p| perms.iter().map(move |s| (p, s)))
        .collect();
    pairs
        .par_iter()
        .map(|&(pi, sigma)| {
            let mut acc = Some(vec![T::zero(); d + 1]);
            for pmask in 0..1u32 << d {
                for smask in 0..1u32 << d {
                    // C = A + P B Sᵀ, then C Cᵀ
                    let mut c = a.to_vec();
                    for i in 0..d {
                        for j in 0..d {
                            let v = &b[pi[i] * d + sigma[j]];
                            let v = if sign(pmask, i) != sign(smask, j) {
                                checked_neg(v)?
                            } else {
                                v.clone()
                            };
                            c[i * d + j] = c[i * d + j].checked_add(&v)?;
                        }
                    }
                    let mut g = vec![T::zero(); d * d];
                    for i in 0..d {
                        for j in 0..d {
                            let mut s = T::zero();
                            for k in 0..d {
                                s = s.checked_add(&c[i * d + k].checked_mul(&c[j * d + k])?)?;
                            }
                            g[i * d + j] = s;
                        }
                    }
                    acc = sum_vectors(acc, faddeev_leverrier(&g, d));
                }
            }
            acc
        })
        .reduce(|| Some(vec![T::zero(); d + 1]), sum_vectors)
}

fn group_order(d: usize) -> BigInt {
    BigInt::from(2u32).pow(d as u32) * rational::factorial(d)
}

fn same_dim(a: &RationalMatrix, b: &RationalMatrix) -> Result<usize> {
    if a.d != b.d {
        return Err(Error::domain(format!(
            "matrix dimensions differ: {} and {}",
            a.d, b.d
        )));
    }
    if a.d == 0 {
        return Err(Error::domain("matrices must be at least 1×1"));
    }
    Ok(a.d)
}

/// Exact average of `χ(A + P B Pᵀ)` over all signed permutations `P`.
pub fn quad_sym_additive(a: &RationalMatrix, b: &RationalMatrix) -> Result<Polynomial> {
    let d = same_dim(a, b)?;
    if d > MAX_SYM_QUADRATURE_DIM {
        return Err(Error::Budget(format!(
            "symmetric quadrature limited to d ≤ {MAX_SYM_QUADRATURE_DIM}, got {d}"
        )));
    }
    if !a.is_symmetric() || !b.is_symmetric() {
        return Err(Error::domain(
            "symmetric quadrature needs symmetric A and B",
        ));
    }
    let (scaled, l) = a.integer_scaled(&[b]);
    let fast = to_i128s(&scaled[0])
        .zip(to_i128s(&scaled[1]))
        .and_then(|(x, y)| sym_quadrature_sum(&x, &y, d))
        .map(|v| v.into_iter().map(BigInt::from).collect());
    let sum = fast.unwrap_or_else(|| {
        sym_quadrature_sum(&scaled[0], &scaled[1], d).expect("big integers do not overflow")
    });
    Ok(unscale(sum, &l, 1, &group_order(d)))
}

/// Exact average of `χ((A + P B Sᵀ)(A + P B Sᵀ)ᵀ)` over all pairs of signed
/// permutations `P`, `S`.
pub fn quad_asym_additive(a: &RationalMatrix, b: &RationalMatrix) -> Result<Polynomial> {
    let d = same_dim(a, b)?;
    if d > MAX_ASYM_QUADRATURE_DIM {
        return Err(Error::Budget(format!(
            "pair quadrature limited to d ≤ {MAX_ASYM_QUADRATURE_DIM}, got {d}"
        )));
    }
    let (scaled, l) = a.integer_scaled(&[b]);
    let fast = to_i128s(&scaled[0])
        .zip(to_i128s(&scaled[1]))
        .and_then(|(x, y)| asym_quadrature_sum(&x, &y, d))
        .map(|v| v.into_iter().map(BigInt::from).collect());
    let sum = fast.unwrap_or_else(|| {
        asym_quadrature_sum(&scaled[0], &scaled[1], d).expect("big integers do not overflow")
    });
    let order = group_order(d);
    Ok(unscale(sum, &l, 2, &(&order * &order)))
}

/// Cyclic Jacobi sweeps until the off-diagonal norm falls below
/// `1e−13 · max(1, ‖M‖_F)`. Returns the diagonalized matrix and, when
/// requested, the accumulated rotations (columns are eigenvectors).
fn jacobi(m: &Matrix, vectors: bool) -> (Matrix, Option<Matrix>) {
    let d = m.d;
    let mut a = m.clone();
    let mut v = vectors.then(|| Matrix::identity(d));
    let threshold = JACOBI_TOLERANCE * m.frobenius_norm().max(1.0);
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..d)
            .flat_map(|i| (0..d).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a.get(i, j).powi(2))
            .sum::<f64>()
            .sqrt();
        if off < threshold {
            break;
        }
        for p in 0..d {
            for q in p + 1..d {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..d {
                    let (akp, akq) = (a.get(k, p), a.get(k, q));
                    a.data[k * d + p] = c * akp - s * akq;
                    a.data[k * d + q] = s * akp + c * akq;
                }
                for k in 0..d {
                    let (apk, aqk) = (a.get(p, k), a.get(q, k));
                    a.data[p * d + k] = c * apk - s * aqk;
                    a.data[q * d + k] = s * apk + c * aqk;
                }
                if let Some(v) = v.as_mut() {
                    for k in 0..d {
                        let (vkp, vkq) = (v.get(k, p), v.get(k, q));
                        v.data[k * d + p] = c * vkp - s * vkq;
                        v.data[k * d + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    (a, v)
}

fn require_symmetric(m: &Matrix, name: &str) -> Result<()> {
    if m.is_symmetric(SYMMETRY_TOLERANCE) {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} is not symmetric")))
    }
}

/// Eigenvalues of a symmetric matrix, descending.
pub fn eigen_sym(m: &Matrix) -> Result<RootList> {
    require_symmetric(m, "matrix")?;
    let (a, _) = jacobi(m, false);
    Ok(RootList::new((0..m.d).map(|i| a.get(i, i)).collect()))
}

/// `e_0, …, e_d` of the given values.
fn elementary_symmetric(values: &[f64]) -> Vec<f64> {
    let mut e = vec![0.0; values.len() + 1];
    e[0] = 1.0;
    for (j, &x) in values.iter().enumerate() {
        for k in (1..=j + 1).rev() {
            e[k] += x * e[k - 1];
        }
    }
    e
}

/// Per-coefficient sample statistics of an expected characteristic
/// polynomial, in the signed convention `p = Σ (−1)^i a_i x^{d−i}`, so that
/// `a_i` estimates the mean of `e_i` of the eigenvalues.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub coeff_mean: Vec<f64>,
    /// Sample standard deviation over `√n`.
    pub coeff_stderr: Vec<f64>,
    pub n_samples: u64,
    pub seed: u64,
}

impl MonteCarloEstimate {
    /// `(mean − exact)/stderr` per coefficient. Differences within the
    /// rounding floor `1e−9·(1 + |exact|)` count as zero, so coefficients
    /// that are constant across samples (such as `a_0`, or `a_1` for the
    /// additive expectations) never produce spurious large scores.
    pub fn z_scores(&self, exact: &[f64]) -> Vec<f64> {
        self.coeff_mean
            .iter()
            .zip(&self.coeff_stderr)
            .zip(exact)
            .map(|((m, s), e)| {
                let diff = m - e;
                if diff.abs() <= rounding_floor(*e) {
                    0.0
                } else {
                    diff / s
                }
            })
            .collect()
    }

    /// `|mean − exact| ≤ k·stderr + 1e−9·(1 + |exact|)` for every
    /// coefficient. The absolute floor absorbs rounding in coefficients that
    /// are constant across samples.
    pub fn consistent_with(&self, exact: &[f64], k: f64) -> bool {
        self.coeff_mean
            .iter()
            .zip(&self.coeff_stderr)
            .zip(exact)
            .all(|((m, s), e)| (m - e).abs() <= k * s + rounding_floor(*e))
    }
}

fn rounding_floor(exact: f64) -> f64 {
    1e-9 * (1.0 + exact.abs())
}

/// Signed coefficients of `p` at degree `d`, as doubles.
pub fn exact_signed(p: &Polynomial, d: usize) -> Result<Vec<f64>> {
    Ok(p.signed_coeffs(d)?.a.iter().map(to_f64).collect())
}

#[derive(Clone)]
struct Welford {
    n: u64,
    mean: Vec<f64>,
    m2: Vec<f64>,
}

impl Welford {
    fn new(len: usize) -> Self {
        Welford {
            n: 0,
            mean: vec![0.0; len],
            m2: vec![0.0; len],
        }
    }

    fn push(&mut self, x: &[f64]) {
        self.n += 1;
        let n = self.n as f64;
        for ((m, s), &v) in self.mean.iter_mut().zip(self.m2.iter_mut()).zip(x) {
            let delta = v - *m;
            *m += delta / n;
            *s += delta * (v - *m);
        }
    }

    fn merge(self, other: Welford) -> Welford {
        if self.n == 0 {
            return other;
        }
        if other.n == 0 {
            return self;
        }
        let (na, nb) = (self.n as f64, other.n as f64);
        let n = na + nb;
        let mut out = Welford::new(self.mean.len());
        out.n = self.n + other.n;
        for k in 0..self.mean.len() {
            let delta = other.mean[k] - self.mean[k];
            out.mean[k] = self.mean[k] + delta * nb / n;
            out.m2[k] = self.m2[k] + other.m2[k] + delta * delta * na * nb / n;
        }
        out
    }
}

fn monte_carlo(
    d: usize,
    n: u64,
    seed: u64,
    sample: impl Fn(&mut ChaCha8Rng) -> Vec<f64> + Sync,
) -> Result<MonteCarloEstimate> {
    if n == 0 {
        return Err(Error::domain("Monte Carlo needs at least one sample"));
    }
    let chunks = n.div_ceil(CHUNK);
    let partials: Vec<Welford> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut w = Welford::new(d + 1);
            for i in c * CHUNK..((c + 1) * CHUNK).min(n) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(i);
                w.push(&elementary_symmetric(&sample(&mut rng)));
            }
            w
        })
        .collect();
    let total = partials
        .into_iter()
        .fold(Welford::new(d + 1), Welford::merge);
    let nf = n as f64;
    let coeff_stderr = total
        .m2
        .iter()
        .map(|&s| {
            if n > 1 {
                (s / (nf - 1.0)).max(0.0).sqrt() / nf.sqrt()
            } else {
                0.0
            }
        })
        .collect();
    Ok(MonteCarloEstimate {
        coeff_mean: total.mean,
        coeff_stderr,
        n_samples: n,
        seed,
    })
}

fn dims(a: &Matrix, b: &Matrix) -> Result<usize> {
    if a.d != b.d || a.d == 0 {
        return Err(Error::domain(format!(
            "matrix dimensions {} and {} do not match",
            a.d, b.d
        )));
    }
    Ok(a.d)
}

fn eigenvalues(m: &Matrix) -> Vec<f64> {
    let (a, _) = jacobi(&m.symmetrized(), false);
    (0..m.d).map(|i| a.get(i, i)).collect()
}

/// Estimates `E_Q χ(A + Q B Qᵀ)` for symmetric `A`, `B`.
pub fn mc_sym_additive(a: &Matrix, b: &Matrix, n: u64, seed: u64) -> Result<MonteCarloEstimate> {
    let d = dims(a, b)?;
    require_symmetric(a, "A")?;
    require_symmetric(b, "B")?;
    monte_carlo(d, n, seed, |rng| {
        let q = sample_haar(d, rng).matrix;
        eigenvalues(&a.add(&q.mul(b).mul(&q.transpose())))
    })
}

/// `A^{1/2}` of a symmetric positive semidefinite matrix.
fn psd_sqrt(a: &Matrix, name: &str) -> Result<Matrix> {
    require_symmetric(a, name)?;
    let (diag, v) = jacobi(a, true);
    let v = v.expect("vectors requested");
    let scale = a.frobenius_norm().max(1.0);
    let mut roots = Vec::with_capacity(a.d);
    for i in 0..a.d {
        let lambda = diag.get(i, i);
        if lambda < -1e-12 * scale {
            return Err(Error::domain(format!(
                "{name} is not positive semidefinite (eigenvalue {lambda})"
            )));
        }
        roots.push(lambda.max(0.0).sqrt());
    }
    Ok(v.mul(&Matrix::diagonal(&roots))
        .mul(&v.transpose())
        .symmetrized())
}

/// Estimates `E_Q χ(A Q B Qᵀ)` for positive semidefinite `A`, `B`, through
/// the symmetric `A^{1/2} Q B Qᵀ A^{1/2}` with the same spectrum.
pub fn mc_sym_multiplicative(
    a: &Matrix,
    b: &Matrix,
    n: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    let d = dims(a, b)?;
    let root = psd_sqrt(a, "A")?;
    psd_sqrt(b, "B")?;
    monte_carlo(d, n, seed, |rng| {
        let q = sample_haar(d, rng).matrix;
        eigenvalues(&root.mul(&q).mul(b).mul(&q.transpose()).mul(&root))
    })
}

/// Estimates `E_{R,Q} χ((A + R B Q)(A + R B Q)ᵀ)`.
pub fn mc_asym_additive(a: &Matrix, b: &Matrix, n: u64, seed: u64) -> Result<MonteCarloEstimate> {
    let d = dims(a, b)?;
    monte_carlo(d, n, seed, |rng| {
        let r = sample_haar(d, rng).matrix;
        let q = sample_haar(d, rng).matrix;
        let c = a.add(&r.mul(b).mul(&q));
        eigenvalues(&c.mul(&c.transpose()))
    })
}

/// Random integer symmetric matrix with entries in `lo..=hi`.
pub fn random_integer_symmetric<R: Rng + ?Sized>(
    d: usize,
    lo: i64,
    hi: i64,
    rng: &mut R,
) -> RationalMatrix {
    let mut entries = vec![0i64; d * d];
    for i in 0..d {
        for j in i..d {
            let v = rng.random_range(lo..=hi);
            entries[i * d + j] = v;
            entries[j * d + i] = v;
        }
    }
    RationalMatrix::from_i64s(d, &entries).expect("square")
}

/// Random integer diagonal matrix with entries in `lo..=hi`.
pub fn random_integer_diagonal<R: Rng + ?Sized>(
    d: usize,
    lo: i64,
    hi: i64,
    rng: &mut R,
) -> RationalMatrix {
    let diag: Vec<i64> = (0..d).map(|_| rng.random_range(lo..=hi)).collect();
    RationalMatrix::from_i64_diagonal(&diag)
}

/// Random integer square matrix with entries in `lo..=hi`.
pub fn random_integer_square<R: Rng + ?Sized>(
    d: usize,
    lo: i64,
    hi: i64,
    rng: &mut R,
) -> RationalMatrix {
    let entries: Vec<i64> = (0..d * d).map(|_| rng.random_range(lo..=hi)).collect();
    RationalMatrix::from_i64s(d, &entries).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convolve::{asym_additive, sym_additive, sym_multiplicative};
    use crate::rational::{int, ratio};

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(charpoly_exact(&RationalMatrix::identity(2)), p(&[1, -2, 1]));
        assert_eq!(
            charpoly_exact(&RationalMatrix::from_i64_diagonal(&[1, 2])),
            p(&[2, -3, 1])
        );
        assert_eq!(
            charpoly_exact(&RationalMatrix::from_i64s(2, &[0, 1, 1, 0]).unwrap()),
            p(&[-1, 0, 1])
        );
        let half = RationalMatrix::diagonal(&[ratio(1, 2), ratio(-2, 3)]);
        let expected = Polynomial::from_roots(&[ratio(1, 2), ratio(-2, 3)]);
        assert_eq!(charpoly_exact(&half), expected);
    }

    #[test]
    fn charpoly_matches_cofactor_expansion() {
        // det(xI − M) for 3×3 by the rule of Sarrus on polynomial entries
        let mut r = rng(11);
        for _ in 0..50 {
            let m = random_integer_square(3, -5, 5, &mut r);
            let e = |i: usize, j: usize| {
                let v = Polynomial::constant(-m.get(i, j).clone());
                if i == j {
                    &v + &Polynomial::monomial(1)
                } else {
                    v
                }
            };
            let det = &(&(&(&e(0, 0) * &e(1, 1)) * &e(2, 2))
                + &(&(&e(0, 1) * &e(1, 2)) * &e(2, 0)))
                + &(&(&e(0, 2) * &e(1, 0)) * &e(2, 1));
            let det = &(&(&det - &(&(&e(0, 2) * &e(1, 1)) * &e(2, 0)))
                - &(&(&e(0, 0) * &e(1, 2)) * &e(2, 1)))
                - &(&(&e(0, 1) * &e(1, 0)) * &e(2, 2));
            assert_eq!(charpoly_exact(&m), det);
        }
    }

    #[test]
    fn charpoly_falls_back_to_big_integers() {
        let big = int(1_000_000_000_000);
        let m = RationalMatrix::diagonal(&[big.clone(), big.clone(), big.clone(), -big.clone()]);
        let expected = Polynomial::from_roots(&[big.clone(), big.clone(), big.clone(), -big]);
        assert_eq!(charpoly_exact(&m), expected);
    }

    #[test]
    fn symmetric_charpolys_are_real_rooted() {
        let mut r = rng(5);
        for d in 1..=6 {
            for _ in 0..10 {
                let m = random_integer_symmetric(d, -3, 3, &mut r);
                assert!(charpoly_exact(&m).is_real_rooted().unwrap());
            }
        }
    }

    #[test]
    fn permutation_count() {
        for d in 1..=6 {
            let perms = permutations(d);
            assert_eq!(perms.len(), rational::factorial(d).to_usize().unwrap());
            let mut sorted = perms.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), perms.len());
        }
    }

    #[test]
    fn symmetric_quadrature_examples() {
        let pm = RationalMatrix::from_i64_diagonal(&[1, -1]);
        assert_eq!(quad_sym_additive(&pm, &pm).unwrap(), p(&[-2, 0, 1]));
        let a = RationalMatrix::from_i64s(3, &[1, 2, 0, 2, -1, 3, 0, 3, 2]).unwrap();
        assert_eq!(
            quad_sym_additive(&a, &RationalMatrix::zero(3)).unwrap(),
            charpoly_exact(&a)
        );
        let diag = RationalMatrix::from_i64_diagonal(&[1, 2, 3]);
        assert_eq!(
            quad_sym_additive(&diag, &RationalMatrix::identity(3)).unwrap(),
            Polynomial::from_i64_roots(&[2, 3, 4])
        );
        assert!(matches!(
            quad_sym_additive(&RationalMatrix::identity(7), &RationalMatrix::identity(7)),
            Err(Error::Budget(_))
        ));
        let asym = RationalMatrix::from_i64s(2, &[0, 1, 0, 0]).unwrap();
        assert!(quad_sym_additive(&asym, &pm).is_err());
    }

    #[test]
    fn pair_quadrature_examples() {
        let id = RationalMatrix::identity(2);
        assert_eq!(quad_asym_additive(&id, &id).unwrap(), p(&[3, -4, 1]));
        let a = RationalMatrix::from_i64s(2, &[1, 2, -1, 3]).unwrap();
        assert_eq!(
            quad_asym_additive(&a, &RationalMatrix::zero(2)).unwrap(),
            charpoly_exact(&a.gram())
        );
        let a = RationalMatrix::from_i64_diagonal(&[1, 2]);
        let b = RationalMatrix::from_i64_diagonal(&[1, 1]);
        let expected = asym_additive(
            &Polynomial::from_i64_roots(&[1, 4]),
            &Polynomial::from_i64_roots(&[1, 1]),
            2,
        )
        .unwrap();
        assert_eq!(quad_asym_additive(&a, &b).unwrap(), expected);
        assert!(matches!(
            quad_asym_additive(&RationalMatrix::identity(5), &RationalMatrix::identity(5)),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn quadrature_matches_formulas_on_random_inputs() {
        let mut r = rng(2024);
        for d in 2..=4 {
            for _ in 0..5 {
                let a = random_integer_symmetric(d, -3, 3, &mut r);
                let b = random_integer_symmetric(d, -3, 3, &mut r);
                let formula = sym_additive(&charpoly_exact(&a), &charpoly_exact(&b), d).unwrap();
                assert_eq!(quad_sym_additive(&a, &b).unwrap(), formula);
            }
        }
        for d in 2..=3 {
            for _ in 0..3 {
                let a = random_integer_square(d, -3, 3, &mut r);
                let b = random_integer_square(d, -3, 3, &mut r);
                let formula =
                    asym_additive(&charpoly_exact(&a.gram()), &charpoly_exact(&b.gram()), d)
                        .unwrap();
                assert_eq!(quad_asym_additive(&a, &b).unwrap(), formula);
            }
        }
    }

    #[test]
    fn rational_entries_in_quadrature() {
        let a =
            RationalMatrix::new(2, vec![ratio(1, 2), ratio(1, 3), ratio(1, 3), int(2)]).unwrap();
        let b = RationalMatrix::diagonal(&[ratio(-3, 4), int(1)]);
        let formula = sym_additive(&charpoly_exact(&a), &charpoly_exact(&b), 2).unwrap();
        assert_eq!(quad_sym_additive(&a, &b).unwrap(), formula);
    }

    #[test]
    fn haar_samples_are_orthogonal() {
        let mut r = rng(1);
        for d in 1..=8 {
            for _ in 0..20 {
                let q = sample_haar(d, &mut r).matrix;
                let g = q.transpose().mul(&q);
                for i in 0..d {
                    for j in 0..d {
                        let target = if i == j { 1.0 } else { 0.0 };
                        assert!((g.get(i, j) - target).abs() <= 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn haar_in_one_dimension_is_a_fair_sign() {
        let mut r = rng(3);
        let plus = (0..10_000)
            .filter(|_| sample_haar(1, &mut r).matrix.get(0, 0) == 1.0)
            .count();
        let minus_or_plus_only =
            (0..100).all(|_| sample_haar(1, &mut r).matrix.get(0, 0).abs() == 1.0);
        assert!(minus_or_plus_only);
        // 4 standard deviations of a fair binomial(10⁴)
        assert!((plus as f64 - 5000.0).abs() < 200.0, "{plus}");
    }

    #[test]
    fn golden_haar_sample() {
        let q = sample_haar(2, &mut rng(20240601)).matrix;
        let bits: Vec<u64> = q.data().iter().map(|v| v.to_bits()).collect();
        assert_eq!(
            bits,
            [
                0xbfd2d55de7a11eda,
                0x3fee954521f604e9,
                0xbfee954521f604e9,
                0xbfd2d55de7a11eda
            ]
        );
    }

    #[test]
    fn haar_is_reproducible() {
        let a = sample_haar(2, &mut rng(42)).matrix;
        let b = sample_haar(2, &mut rng(42)).matrix;
        assert_eq!(a.data(), b.data());
    }

    #[test]
    fn signed_permutations_are_uniform() {
        let mut r = rng(9);
        let mut counts = std::collections::BTreeMap::new();
        let draws = 10_000;
        for _ in 0..draws {
            let m = sample_signed_perm(2, &mut r).matrix;
            let det = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0);
            assert_eq!(det.abs(), 1.0);
            for i in 0..2 {
                assert_eq!((0..2).filter(|&j| m.get(i, j) != 0.0).count(), 1);
            }
            *counts
                .entry(m.data().iter().map(|&v| v as i8).collect::<Vec<_>>())
                .or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 8);
        let expected = draws as f64 / 8.0;
        let chi2: f64 = counts
            .values()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        // the 0.999 quantile of χ² with 7 degrees of freedom is 24.32
        assert!(chi2 < 24.32, "χ² = {chi2}");
    }

    #[test]
    fn eigen_examples() {
        assert_eq!(
            eigen_sym(&Matrix::diagonal(&[1.0, 3.0]))
                .unwrap()
                .as_slice(),
            &[3.0, 1.0]
        );
        let swap = Matrix::from_vec(2, vec![0.0, 1.0, 1.0, 0.0]);
        let e = eigen_sym(&swap).unwrap();
        assert!((e.as_slice()[0] - 1.0).abs() < 1e-15 && (e.as_slice()[1] + 1.0).abs() < 1e-15);
        let e = eigen_sym(&Matrix::from_vec(2, vec![2.0, 1.0, 1.0, 2.0])).unwrap();
        assert!((e.as_slice()[0] - 3.0).abs() < 1e-14 && (e.as_slice()[1] - 1.0).abs() < 1e-14);
        assert!(eigen_sym(&Matrix::from_vec(2, vec![0.0, 1.0, 0.0, 0.0])).is_err());
    }

    #[test]
    fn eigenvalues_match_exact_roots() {
        let mut r = rng(17);
        for d in 2..=7 {
            for _ in 0..10 {
                let m = random_integer_symmetric(d, -4, 4, &mut r);
                let exact = charpoly_exact(&m).all_roots().unwrap();
                let approx = eigen_sym(&m.to_f64()).unwrap();
                for (x, y) in exact.as_slice().iter().zip(approx.as_slice()) {
                    assert!((x - y).abs() < 1e-10, "{x} vs {y}");
                }
            }
        }
    }

    #[test]
    fn square_root_of_psd() {
        let a = Matrix::from_vec(2, vec![2.0, 1.0, 1.0, 2.0]);
        let s = psd_sqrt(&a, "A").unwrap();
        let back = s.mul(&s);
        for k in 0..4 {
            assert!((back.data()[k] - a.data()[k]).abs() < 1e-14);
        }
        assert!(psd_sqrt(&Matrix::diagonal(&[1.0, -1.0]), "A").is_err());
    }

    #[test]
    fn degenerate_monte_carlo_cases_have_no_variance() {
        let zero = Matrix::zeros(2);
        let est = mc_sym_additive(&zero, &zero, 2000, 1).unwrap();
        assert_eq!(est.coeff_mean, vec![1.0, 0.0, 0.0]);
        assert_eq!(est.coeff_stderr, vec![0.0, 0.0, 0.0]);

        let a = Matrix::from_vec(2, vec![1.0, 2.0, 2.0, -1.0]);
        let est = mc_sym_additive(&a, &zero, 500, 2).unwrap();
        assert!(est.consistent_with(&[1.0, 0.0, -5.0], 0.0), "{est:?}");

        let pd = Matrix::diagonal(&[1.0, 2.0]);
        let est = mc_sym_multiplicative(&pd, &Matrix::identity(2), 500, 3).unwrap();
        assert!(est.consistent_with(&[1.0, 3.0, 2.0], 0.0), "{est:?}");
        let est = mc_sym_multiplicative(&zero, &pd, 500, 3).unwrap();
        assert!(est.consistent_with(&[1.0, 0.0, 0.0], 0.0), "{est:?}");

        let est = mc_asym_additive(&Matrix::identity(3), &Matrix::zeros(3), 500, 4).unwrap();
        assert!(est.consistent_with(&[1.0, 3.0, 3.0, 1.0], 0.0), "{est:?}");
        assert!(mc_sym_multiplicative(&Matrix::diagonal(&[1.0, -1.0]), &pd, 10, 1).is_err());
        assert!(mc_sym_additive(&zero, &zero, 0, 1).is_err());
    }

    #[test]
    fn monte_carlo_matches_formulas() {
        let n = 20_000;
        let pm = RationalMatrix::from_i64_diagonal(&[1, -1]);
        let target = sym_additive(&charpoly_exact(&pm), &charpoly_exact(&pm), 2).unwrap();
        let est = mc_sym_additive(&pm.to_f64(), &pm.to_f64(), n, 7).unwrap();
        assert!(
            est.consistent_with(&exact_signed(&target, 2).unwrap(), 4.0),
            "{est:?}"
        );

        let (a, b) = (
            RationalMatrix::from_i64_diagonal(&[1, 2]),
            RationalMatrix::from_i64_diagonal(&[1, 3]),
        );
        let target = sym_multiplicative(&charpoly_exact(&a), &charpoly_exact(&b), 2).unwrap();
        assert_eq!(target, p(&[6, -6, 1]));
        let est = mc_sym_multiplicative(&a.to_f64(), &b.to_f64(), n, 7).unwrap();
        assert!(
            est.consistent_with(&exact_signed(&target, 2).unwrap(), 4.0),
            "{est:?}"
        );

        let id = RationalMatrix::identity(2);
        let est = mc_asym_additive(&id.to_f64(), &id.to_f64(), n, 7).unwrap();
        assert!(est.consistent_with(&[1.0, 4.0, 3.0], 4.0), "{est:?}");
    }

    #[test]
    fn monte_carlo_is_deterministic_and_thread_independent() {
        let a = Matrix::diagonal(&[1.0, 0.0, -2.0]);
        let b = Matrix::from_vec(3, vec![0.0, 1.0, 0.0, 1.0, 2.0, 1.0, 0.0, 1.0, 0.0]);
        let first = mc_sym_additive(&a, &b, 5000, 99).unwrap();
        let second = mc_sym_additive(&a, &b, 5000, 99).unwrap();
        assert_eq!(first, second);
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| mc_sym_additive(&a, &b, 5000, 99).unwrap());
        assert_eq!(first, single);
        assert_ne!(first, mc_sym_additive(&a, &b, 5000, 100).unwrap());
    }

    #[test]
    fn rotation_invariance() {
        let mut r = rng(8);
        let u = sample_haar(3, &mut r).matrix;
        let v = sample_haar(3, &mut r).matrix;
        let a = Matrix::diagonal(&[2.0, -1.0, 0.5]);
        let b = Matrix::from_vec(3, vec![1.0, 1.0, 0.0, 1.0, 0.0, 2.0, 0.0, 2.0, -1.0]);
        let ra = u.transpose().mul(&a).mul(&u).symmetrized();
        let rb = v.transpose().mul(&b).mul(&v).symmetrized();
        let x = mc_sym_additive(&a, &b, 20_000, 5).unwrap();
        let y = mc_sym_additive(&ra, &rb, 20_000, 6).unwrap();
        for k in 0..=3 {
            let joint = (x.coeff_stderr[k].powi(2) + y.coeff_stderr[k].powi(2)).sqrt();
            assert!(
                (x.coeff_mean[k] - y.coeff_mean[k]).abs() <= 4.0 * joint + 1e-9,
                "coefficient {k}"
            );
        }
    }

    #[test]
    fn welford_merge_matches_direct() {
        let data: Vec<f64> = (0..100).map(|i| ((i * 37) % 17) as f64 - 8.0).collect();
        let mut whole = Welford::new(1);
        for &x in &data {
            whole.push(&[x]);
        }
        let mut left = Welford::new(1);
        let mut right = Welford::new(1);
        for &x in &data[..30] {
            left.push(&[x]);
        }
        for &x in &data[30..] {
            right.push(&[x]);
        }
        let merged = left.merge(right);
        assert!((merged.mean[0] - whole.mean[0]).abs() < 1e-12);
        assert!((merged.m2[0] - whole.m2[0]).abs() < 1e-9);
    }
}
