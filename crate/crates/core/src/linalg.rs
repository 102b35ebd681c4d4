//! Dense complex linear algebra for small quantum systems (d ≤ 8).
//!
//! Matrices are stored row-major. Everything here is a pure function of its
//! inputs; values are plain owned data and can be shared freely between
//! threads.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use num_traits::{Float, Zero};

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Largest Hilbert-space dimension handled by the dense containers.
pub const MAX_DIM: usize = 8;

/// Relative tolerance used to accept a matrix as Hermitian before
/// diagonalising it.
pub const HERMITIAN_INPUT_TOL: f64 = 1e-10;

/// Relative eigenvalue gap below which a spectrum is flagged degenerate.
pub const DEGENERACY_TOL: f64 = 1e-10;

const JACOBI_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 64;

pub const I: C64 = C64::new(0.0, 1.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const ZERO: C64 = C64::new(0.0, 0.0);

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn check_dim(dim: usize) {
    assert!((1..=MAX_DIM).contains(&dim), "dimension {dim} outside 1..={MAX_DIM}");
}

/// Square complex matrix of dimension `dim ≤ MAX_DIM`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        check_dim(dim);
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { ONE } else { ZERO })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        check_dim(dim);
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds a matrix from row-major entries; `entries.len()` must be a
    /// perfect square.
    pub fn from_row_major(entries: &[C64]) -> Result<Self> {
        let dim = (1..=MAX_DIM)
            .find(|d| d * d == entries.len())
            .ok_or(Error::InvalidParameter {
                name: "entries",
                reason: "length is not the square of a dimension in 1..=8",
            })?;
        Ok(Self {
            dim,
            data: entries.to_vec(),
        })
    }

    pub fn from_real(dim: usize, entries: &[f64]) -> Self {
        assert_eq!(entries.len(), dim * dim, "expected {} entries", dim * dim);
        Self::from_fn(dim, |i, j| re(entries[i * dim + j]))
    }

    pub fn diagonal(values: &[f64]) -> Self {
        Self::from_fn(values.len(), |i, j| if i == j { re(values[i]) } else { ZERO })
    }

    /// `|a⟩⟨b|`
    pub fn outer(a: &StateVector, b: &StateVector) -> Self {
        assert_eq!(a.dim(), b.dim());
        Self::from_fn(a.dim(), |i, j| a[i] * b[j].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(re(s))
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, z| m.max(z.norm()))
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }

    /// `max |M − M†|` together with the entry where it occurs.
    pub fn hermiticity_error(&self) -> (f64, usize, usize) {
        let mut worst = (0.0, 0, 0);
        for i in 0..self.dim {
            for j in i..self.dim {
                let dev = (self[(i, j)] - self[(j, i)].conj()).norm();
                if dev > worst.0 {
                    worst = (dev, i, j);
                }
            }
        }
        worst
    }

    /// Hermitian within `tol · max(1, ‖M‖∞)`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_error().0 <= tol * self.norm_inf().max(1.0)
    }

    /// `(M + M†)/2`
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |i, j| (self[(i, j)] + self[(j, i)].conj()) * 0.5)
    }

    /// True iff `max |M†M − I| ≤ tol` entrywise.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let gram = &self.adjoint() * self;
        gram.max_abs_diff(&Self::identity(self.dim)) <= tol
    }

    /// Largest imaginary part of any entry.
    pub fn max_imag(&self) -> f64 {
        self.data.iter().fold(0.0, |m, z| m.max(z.im.abs()))
    }

    pub fn column(&self, k: usize) -> StateVector {
        StateVector::from_amplitudes((0..self.dim).map(|i| self[(i, k)]).collect())
    }

    pub fn set_column(&mut self, k: usize, v: &StateVector) {
        assert_eq!(v.dim(), self.dim);
        for i in 0..self.dim {
            self[(i, k)] = v[i];
        }
    }

    /// Matrix with columns reordered: column `k` of the result is column
    /// `order[k]` of `self`.
    pub fn permute_columns(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.dim);
        Self::from_fn(self.dim, |i, k| self[(i, order[k])])
    }

    /// `P M P^T` for the basis relabelling `order` (new index k ← old index `order[k]`).
    pub fn permute_basis(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.dim);
        Self::from_fn(self.dim, |i, j| self[(order[i], order[j])])
    }

    pub fn apply(&self, v: &StateVector) -> StateVector {
        assert_eq!(v.dim(), self.dim);
        let d = self.dim;
        StateVector::from_amplitudes((0..d).map(|i| (0..d).map(|j| self[(i, j)] * v[j]).sum()).collect())
    }

    /// `⟨a|M|b⟩`
    pub fn matrix_element(&self, a: &StateVector, b: &StateVector) -> C64 {
        a.inner(&self.apply(b))
    }

    /// `[A, B] = AB − BA`
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in product");
        let d = self.dim;
        let mut out = ComplexMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] += a * rhs.data[k * d + j];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in sum");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in difference");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Kronecker product `A ⊗ B`; the first factor is the slowest-varying index.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (da, db) = (a.dim(), b.dim());
    ComplexMatrix::from_fn(da * db, |i, j| a[(i / db, j / db)] * b[(i % db, j % db)])
}

/// Pure-state amplitudes in a fixed orthonormal basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amps: Vec<C64>,
}

impl StateVector {
    pub fn from_amplitudes(amps: Vec<C64>) -> Self {
        check_dim(amps.len());
        Self { amps }
    }

    pub fn from_real(amps: &[f64]) -> Self {
        Self::from_amplitudes(amps.iter().map(|&x| re(x)).collect())
    }

    /// `|k⟩` in a `dim`-dimensional space.
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index {k} out of range for dimension {dim}");
        let mut amps = vec![ZERO; dim];
        amps[k] = ONE;
        Self::from_amplitudes(amps)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm_sqr().sqrt();
        self.scale(re(1.0 / n))
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &Self) -> C64 {
        assert_eq!(self.dim(), other.dim());
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            amps: self.amps.iter().map(|&a| a * s).collect(),
        }
    }

    /// `self + s·other`
    pub fn add_scaled(&self, s: C64, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self {
            amps: self.amps.iter().zip(&other.amps).map(|(a, b)| a + b * s).collect(),
        }
    }

    pub fn populations(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }
}

impl Index<usize> for StateVector {
    type Output = C64;
    #[inline]
    fn index(&self, k: usize) -> &C64 {
        &self.amps[k]
    }
}

impl IndexMut<usize> for StateVector {
    #[inline]
    fn index_mut(&mut self, k: usize) -> &mut C64 {
        &mut self.amps[k]
    }
}

/// Density operator of a (possibly mixed) state.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    rho: ComplexMatrix,
}

impl DensityMatrix {
    /// Wraps a matrix after checking Hermiticity (1e-9) and unit trace (1e-7).
    pub fn new(rho: ComplexMatrix) -> Result<Self> {
        let (dev, row, col) = rho.hermiticity_error();
        if dev > 1e-9 {
            return Err(Error::NotHermitian {
                row,
                col,
                deviation: dev,
            });
        }
        if (rho.trace() - ONE).norm() > 1e-7 {
            return Err(Error::InvalidParameter {
                name: "rho",
                reason: "trace differs from 1",
            });
        }
        Ok(Self { rho })
    }

    pub(crate) fn from_matrix_unchecked(rho: ComplexMatrix) -> Self {
        Self { rho }
    }

    pub fn pure(psi: &StateVector) -> Self {
        Self {
            rho: ComplexMatrix::outer(psi, psi),
        }
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            rho: ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rho.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.rho
    }

    pub fn trace(&self) -> f64 {
        self.rho.trace().re
    }

    /// `Tr(O ρ)`
    pub fn expectation(&self, op: &ComplexMatrix) -> C64 {
        assert_eq!(op.dim(), self.dim());
        let d = self.dim();
        (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .map(|(i, j)| op[(i, j)] * self.rho[(j, i)])
            .sum()
    }

    pub fn populations(&self) -> Vec<f64> {
        (0..self.dim()).map(|k| self.rho[(k, k)].re).collect()
    }
}

/// Eigendecomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct Eigh {
    /// Ascending eigenvalues.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors as columns, in the order of `values`.
    pub vectors: ComplexMatrix,
    /// Set when two eigenvalues are closer than `DEGENERACY_TOL · ‖M‖∞`.
    pub degenerate: bool,
    /// Smallest gap between consecutive eigenvalues.
    pub min_gap: f64,
}

impl Eigh {
    pub fn vector(&self, k: usize) -> StateVector {
        self.vectors.column(k)
    }
}

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// Eigenvalues are returned in ascending order. Each eigenvector's phase is
/// fixed so that its largest-magnitude entry is real and positive (ties go
/// to the lowest index).
pub fn eigh(m: &ComplexMatrix) -> Result<Eigh> {
    let d = m.dim();
    let scale = m.norm_inf();
    let (dev, row, col) = m.hermiticity_error();
    if dev > HERMITIAN_INPUT_TOL * scale.max(1.0) {
        return Err(Error::NotHermitian {
            row,
            col,
            deviation: dev,
        });
    }

    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(d);
    let off_norm = |a: &ComplexMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    s += a[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= JACOBI_TOL * scale {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..d {
            for q in (p + 1)..d {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&x, &y| a[(x, x)].re.total_cmp(&a[(y, y)].re));
    let values: Vec<f64> = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut vectors = v.permute_columns(&order);
    for k in 0..d {
        fix_gauge(&mut vectors, k);
    }

    let min_gap = values.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    let degenerate = d > 1 && min_gap < DEGENERACY_TOL * scale;

    Ok(Eigh {
        values,
        vectors,
        degenerate,
        min_gap,
    })
}

/// One Jacobi rotation annihilating `a[p][q]`: `a ← U†aU`, `v ← vU`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let b = a[(p, q)];
    let r = b.norm();
    if r < f64::MIN_POSITIVE {
        return;
    }
    let d = a.dim();
    let phase = b / r;
    let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    // U restricted to (p, q): [[c, s], [-s·conj(phase), c·conj(phase)]]
    let u_qp = -phase.conj() * s;
    let u_qq = phase.conj() * c;

    for k in 0..d {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * c + akq * u_qp;
        a[(k, q)] = akp * s + akq * u_qq;
    }
    for k in 0..d {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = apk * c + aqk * u_qp.conj();
        a[(q, k)] = apk * s + aqk * u_qq.conj();
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = re(a[(p, p)].re);
    a[(q, q)] = re(a[(q, q)].re);

    for k in 0..d {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * c + vkq * u_qp;
        v[(k, q)] = vkp * s + vkq * u_qq;
    }
}

fn fix_gauge(vectors: &mut ComplexMatrix, k: usize) {
    let d = vectors.dim();
    let largest = (0..d).fold(0.0, |m, i| m.max(vectors[(i, k)].norm()));
    if largest == 0.0 {
        return;
    }
    let pivot = (0..d)
        .find(|&i| vectors[(i, k)].norm() >= largest * (1.0 - 1e-10))
        .unwrap_or(0);
    let z = vectors[(pivot, k)];
    let phase = (z / z.norm()).conj();
    for i in 0..d {
        vectors[(i, k)] *= phase;
    }
    vectors[(pivot, k)] = re(vectors[(pivot, k)].norm());
}

/// Phase factor `e^{iφ}` that makes `⟨reference|v⟩·e^{iφ}` real and positive,
/// and the magnitude of the overlap.
pub(crate) fn alignment_phase(reference: &StateVector, v: &StateVector) -> (C64, f64) {
    let ov = reference.inner(v);
    let mag = ov.norm();
    if mag == 0.0 {
        (ONE, 0.0)
    } else {
        ((ov / mag).conj(), mag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rand_hermitian(d: usize, seed: &mut u64) -> ComplexMatrix {
        let mut next = || {
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((*seed >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let m = ComplexMatrix::from_fn(d, |_, _| C64::new(next(), next()));
        &m + &m.adjoint()
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(ComplexMatrix::identity(3).adjoint(), ComplexMatrix::identity(3));
        let m = ComplexMatrix::from_row_major(&[ZERO, I, ZERO, ZERO]).unwrap();
        let expected = ComplexMatrix::from_row_major(&[ZERO, ZERO, -I, ZERO]).unwrap();
        assert_eq!(m.adjoint(), expected);
        assert_eq!(m.adjoint().adjoint(), m);
    }

    #[test]
    fn unitarity_examples() {
        assert!(ComplexMatrix::identity(3).is_unitary(1e-12));
        assert!(!ComplexMatrix::identity(3).scale_real(2.0).is_unitary(1e-12));
    }

    #[test]
    fn eigh_diagonal() {
        let e = eigh(&ComplexMatrix::diagonal(&[1.0, -1.0, 0.0])).unwrap();
        assert_eq!(e.values, vec![-1.0, 0.0, 1.0]);
        let expected = ComplexMatrix::identity(3).permute_columns(&[1, 2, 0]);
        assert!(e.vectors.max_abs_diff(&expected) < 1e-15);
        assert!(!e.degenerate);
    }

    #[test]
    fn eigh_rejects_non_hermitian_and_names_entry() {
        let mut m = ComplexMatrix::zeros(3);
        m[(0, 2)] = ONE;
        match eigh(&m) {
            Err(Error::NotHermitian { row: 0, col: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn eigh_flags_degeneracy() {
        let e = eigh(&ComplexMatrix::diagonal(&[1.0, 1.0, 2.0])).unwrap();
        assert!(e.degenerate);
        assert_eq!(e.min_gap, 0.0);
    }

    #[test]
    fn eigh_zero_matrix() {
        let e = eigh(&ComplexMatrix::zeros(4)).unwrap();
        assert!(e.values.iter().all(|&x| x == 0.0));
        assert!(e.vectors.is_unitary(1e-15));
    }

    #[test]
    fn eigh_random_residuals_and_gauge() {
        let mut seed = 7;
        for d in 1..=MAX_DIM {
            for _ in 0..20 {
                let m = rand_hermitian(d, &mut seed);
                let e = eigh(&m).unwrap();
                let tol = 1e-10 * m.norm_inf();
                for k in 0..d {
                    let v = e.vector(k);
                    let mv = m.apply(&v);
                    let lv = v.scale(re(e.values[k]));
                    let res = (0..d).map(|i| (mv[i] - lv[i]).norm()).fold(0.0, f64::max);
                    assert!(res <= tol, "residual {res} in dim {d}");
                    let big = (0..d).map(|i| v[i].norm()).fold(0.0, f64::max);
                    let pivot = (0..d).find(|&i| v[i].norm() >= big * (1.0 - 1e-10)).unwrap();
                    assert!(v[pivot].im == 0.0 && v[pivot].re > 0.0);
                }
                assert!(e.vectors.is_unitary(1e-10));
                assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn tensor_examples() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(tensor(&i2, &i2), ComplexMatrix::identity(4));
        let n = ComplexMatrix::diagonal(&[0.0, 1.0]);
        assert_eq!(tensor(&n, &i2), ComplexMatrix::diagonal(&[0.0, 0.0, 1.0, 1.0]));
    }

    #[test]
    fn tensor_index_convention() {
        // σ⁺ = |1⟩⟨0| on the first factor raises index 0·2+b to 1·2+b.
        let mut raise = ComplexMatrix::zeros(2);
        raise[(1, 0)] = ONE;
        let op = tensor(&raise, &ComplexMatrix::identity(2));
        for b in 0..2 {
            let out = op.apply(&StateVector::basis(4, b));
            assert_eq!(out, StateVector::basis(4, 2 + b));
            let killed = op.apply(&StateVector::basis(4, 2 + b));
            assert_eq!(killed.norm_sqr(), 0.0);
        }
    }

    #[test]
    fn density_matrix_validation() {
        let psi = StateVector::basis(3, 1);
        assert!(DensityMatrix::new(DensityMatrix::pure(&psi).into_matrix()).is_ok());
        assert!(DensityMatrix::new(ComplexMatrix::identity(3)).is_err());
        let mut m = ComplexMatrix::diagonal(&[1.0, 0.0]);
        m[(0, 1)] = re(0.1);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NotHermitian { .. })));
        assert!((DensityMatrix::maximally_mixed(8).trace() - 1.0).abs() < 1e-15);
    }
}
