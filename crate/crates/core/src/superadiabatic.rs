//! Numerical transitionless driving and superadiabatic iteration for an
//! arbitrary sampled Hamiltonian.
//!
//! Eigenvector derivatives come from central differences. Phases are kept
//! continuous by aligning each eigenvector with its neighbour (real,
//! positive overlap); across longer spans the basis is carried along a fixed
//! time lattice from a gauge origin, which realises the parallel-transport
//! frame `A_j(t) = Σ|n_j(t)⟩⟨n_j(t0)|` numerically. The closed forms in
//! [`crate::driving`] are checked against this engine, never the other way
//! round.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::driving::{build_h0, BasisLabel, HamiltonianSampler};
use crate::error::{Error, Result};
use crate::linalg::{alignment_phase, eigh, re, ComplexMatrix, Eigh, I, ONE};
use crate::pulse::ControlWaveform;
#[allow(unused_imports)] // needed for f64 math without std
use num_traits::Float;

/// Central-difference step for eigenvector derivatives (µs).
pub const DEFAULT_FD_STEP: f64 = 1e-4;

/// Lattice spacing used to carry the eigenbasis phase from the gauge origin (µs).
pub const DEFAULT_TRANSPORT_STEP: f64 = 1e-3;

/// Minimum `|⟨n(t)|n(t')⟩|` between neighbouring samples.
pub const MIN_CONTINUITY_OVERLAP: f64 = 0.9;

type SharedSampler = Arc<dyn HamiltonianSampler + Send + Sync>;

fn nondegenerate_eigh<S: HamiltonianSampler + ?Sized>(h: &S, t: f64) -> Result<Eigh> {
    let e = eigh(&h.evaluate(t)?)?;
    if e.degenerate {
        return Err(Error::DegenerateSpectrum { t, gap: e.min_gap });
    }
    Ok(e)
}

/// Rephases every column of `vectors` so its overlap with the matching
/// column of `reference` is real and positive.
fn align_columns(reference: &ComplexMatrix, vectors: &mut ComplexMatrix, t: f64) -> Result<()> {
    for k in 0..vectors.dim() {
        let col = vectors.column(k);
        let (phase, overlap) = alignment_phase(&reference.column(k), &col);
        if overlap < MIN_CONTINUITY_OVERLAP {
            return Err(Error::StepTooLarge { t, overlap });
        }
        vectors.set_column(k, &col.scale(phase));
    }
    Ok(())
}

/// Counterdiabatic term `i Σ_n (|ṅ⟩⟨n| − ⟨n|ṅ⟩|n⟩⟨n|)` of `h` at `t`.
pub fn generic_cd<S: HamiltonianSampler + ?Sized>(h: &S, t: f64, dt: f64) -> Result<ComplexMatrix> {
    if !(dt > 0.0) {
        return Err(Error::InvalidParameter {
            name: "dt",
            reason: "finite-difference step must be positive",
        });
    }
    let centre = nondegenerate_eigh(h, t)?;
    let mut before = nondegenerate_eigh(h, t - dt)?.vectors;
    let mut after = nondegenerate_eigh(h, t + dt)?.vectors;
    align_columns(&centre.vectors, &mut before, t - dt)?;
    align_columns(&centre.vectors, &mut after, t + dt)?;

    let d = h.dim();
    let mut cd = ComplexMatrix::zeros(d);
    for k in 0..d {
        let n = centre.vector(k);
        let (m, p) = (before.column(k), after.column(k));
        let span = m.inner(&p).norm();
        if span < MIN_CONTINUITY_OVERLAP {
            return Err(Error::StepTooLarge { t, overlap: span });
        }
        let ndot = p.add_scaled(-ONE, &m).scale(re(0.5 / dt));
        let berry = n.inner(&ndot);
        let term = &ComplexMatrix::outer(&ndot, &n) - &ComplexMatrix::outer(&n, &n).scale(berry);
        cd = &cd + &term;
    }
    Ok(cd.scale(I).hermitian_part())
}

/// Eigenbasis of `h` at `t`, phase-carried from `origin` along the lattice
/// `origin + k·step`. Returns the bases at the origin and at `t`.
pub fn transported_eigenbasis<S: HamiltonianSampler + ?Sized>(
    h: &S,
    origin: f64,
    t: f64,
    step: f64,
) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if !(step > 0.0) {
        return Err(Error::InvalidParameter {
            name: "transport_step",
            reason: "must be positive",
        });
    }
    let start = nondegenerate_eigh(h, origin)?.vectors;
    let span = t - origin;
    let direction = span.signum();
    let full = (span.abs() / step).floor() as usize;
    let mut current = start.clone();
    let mut points: Vec<f64> = (1..=full).map(|k| origin + direction * step * k as f64).collect();
    if points.last().copied().unwrap_or(origin) != t {
        points.push(t);
    }
    for tk in points {
        let mut next = nondegenerate_eigh(h, tk)?.vectors;
        align_columns(&current, &mut next, tk)?;
        current = next;
    }
    Ok((start, current))
}

/// How the unitary of one superadiabatic step is anchored.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FrameAnchor {
    /// `A_j(t) = Σ|n_j(t)⟩⟨n_j(t0)|`.
    At(f64),
    /// `A_j(t) = Σ|n_j(t)⟩⟨e_n|`: columns are the eigenvectors themselves,
    /// as in the closed-form matrices. Phases are carried from `gauge_origin`.
    Bare { gauge_origin: f64 },
}

/// `H_{j+1}(t) = A_j†(t)[H_j(t) − K_j(t)]A_j(t)` with `K_j = iȦ_jA_j†`.
#[derive(Clone)]
pub struct SuperadiabaticIterate<S> {
    inner: S,
    anchor: FrameAnchor,
    fd_step: f64,
    transport_step: f64,
}

/// One superadiabatic iteration anchored at t = 0.
pub fn superadiabatic_iterate<S: HamiltonianSampler>(h: S) -> SuperadiabaticIterate<S> {
    SuperadiabaticIterate::new(h)
}

impl<S: HamiltonianSampler> SuperadiabaticIterate<S> {
    pub fn new(inner: S) -> Self {
        Self {
            inner,
            anchor: FrameAnchor::At(0.0),
            fd_step: DEFAULT_FD_STEP,
            transport_step: DEFAULT_TRANSPORT_STEP,
        }
    }

    pub fn with_anchor(mut self, anchor: FrameAnchor) -> Self {
        self.anchor = anchor;
        self
    }

    pub fn with_fd_step(mut self, dt: f64) -> Self {
        self.fd_step = dt;
        self
    }

    pub fn with_transport_step(mut self, step: f64) -> Self {
        self.transport_step = step;
        self
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }

    /// The frame unitary `A_j(t)`.
    pub fn frame(&self, t: f64) -> Result<ComplexMatrix> {
        match self.anchor {
            FrameAnchor::At(t0) => {
                let (v0, v) = transported_eigenbasis(&self.inner, t0, t, self.transport_step)?;
                Ok(&v * &v0.adjoint())
            }
            FrameAnchor::Bare { gauge_origin } => {
                Ok(transported_eigenbasis(&self.inner, gauge_origin, t, self.transport_step)?.1)
            }
        }
    }

    /// `K_j(t)`, the counterdiabatic term of the inner Hamiltonian.
    pub fn counterdiabatic(&self, t: f64) -> Result<ComplexMatrix> {
        generic_cd(&self.inner, t, self.fd_step)
    }
}

impl<S: HamiltonianSampler> HamiltonianSampler for SuperadiabaticIterate<S> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn basis(&self) -> BasisLabel {
        match self.inner.basis() {
            BasisLabel::Interaction { iteration } => BasisLabel::Interaction {
                iteration: iteration + 1,
            },
            _ => BasisLabel::Interaction { iteration: 1 },
        }
    }

    fn evaluate(&self, t: f64) -> Result<ComplexMatrix> {
        let a = self.frame(t)?;
        let k = self.counterdiabatic(t)?;
        let h = self.inner.evaluate(t)?;
        let moved = &(&a.adjoint() * &(&h - &k)) * &a;
        Ok(moved.hermitian_part())
    }
}

/// `H0(t) + B_j(t) K_j(t) B_j†(t)` with `B_j = A_0 A_1 ⋯ A_{j−1}`: the
/// Schrödinger-picture transitionless Hamiltonian after `j` iterations.
pub struct TransitionlessChain {
    base: SharedSampler,
    levels: Vec<Arc<SuperadiabaticIterate<SharedSampler>>>,
    fd_step: f64,
}

impl TransitionlessChain {
    pub fn new<S>(base: S, order: usize) -> Self
    where
        S: HamiltonianSampler + Send + Sync + 'static,
    {
        Self::with_steps(base, order, DEFAULT_FD_STEP, DEFAULT_TRANSPORT_STEP)
    }

    pub fn with_steps<S>(base: S, order: usize, fd_step: f64, transport_step: f64) -> Self
    where
        S: HamiltonianSampler + Send + Sync + 'static,
    {
        let base: SharedSampler = Arc::new(base);
        let mut levels: Vec<Arc<SuperadiabaticIterate<SharedSampler>>> = Vec::with_capacity(order);
        let mut below = base.clone();
        for _ in 0..order {
            let level = Arc::new(
                SuperadiabaticIterate::new(below)
                    .with_fd_step(fd_step)
                    .with_transport_step(transport_step),
            );
            below = level.clone();
            levels.push(level);
        }
        Self { base, levels, fd_step }
    }

    pub fn order(&self) -> usize {
        self.levels.len()
    }

    /// `H_j(t)`, the Hamiltonian of the deepest interaction picture.
    pub fn deepest(&self) -> SharedSampler {
        match self.levels.last() {
            Some(level) => level.clone(),
            None => self.base.clone(),
        }
    }

    /// `H^cd_j(t) = B_j K_j B_j†` in the original basis.
    pub fn counterdiabatic(&self, t: f64) -> Result<ComplexMatrix> {
        let d = self.base.dim();
        let mut b = ComplexMatrix::identity(d);
        for level in &self.levels {
            b = &b * &level.frame(t)?;
        }
        let k = generic_cd(&*self.deepest(), t, self.fd_step)?;
        Ok(&(&b * &k) * &b.adjoint())
    }
}

impl HamiltonianSampler for TransitionlessChain {
    fn dim(&self) -> usize {
        self.base.dim()
    }

    fn basis(&self) -> BasisLabel {
        self.base.basis()
    }

    fn evaluate(&self, t: f64) -> Result<ComplexMatrix> {
        let total = &self.base.evaluate(t)? + &self.counterdiabatic(t)?;
        Ok(total.hermitian_part())
    }
}

/// Numerical counterpart of the closed-form MSD Hamiltonian: one iteration
/// of the generic engine applied to H0 of `w`.
pub fn superadiabatic_msd_oracle(w: &ControlWaveform) -> TransitionlessChain {
    TransitionlessChain::new(build_h0(w), 1)
}
