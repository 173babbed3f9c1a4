// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

//! Laguerre-Gaussian (LG) modes as two-mode oscillator eigenstates.
//!
//! The crate evaluates the closed forms that describe the common eigenstates
//! `|n, l⟩` of the total photon number `N` and the orbital angular momentum
//! `L` of a two-mode field, and checks each of them against a brute-force
//! truncated Fock-space computation:
//!
//! * [`specialfn`]: associated Laguerre, Hermite and two-variable Hermite
//!   polynomials.
//! * [`fockspace`]: truncated two-mode basis, ladder/quadrature operators,
//!   block-diagonal matrix exponentials, `|n,l⟩` built by ladder operators
//!   and by a 50:50 beam splitter, entangled kets `|η⟩` and `|τ⟩`.
//! * [`modes`]: `⟨η|n,l⟩` (the LG mode), Hermite-Gaussian modes, `⟨τ|m,n⟩`
//!   and `⟨τ|n,l⟩`.
//! * [`phasespace`]: analytic and displaced-parity Wigner functions and the
//!   `σ`-plane marginal distribution.
//! * [`transforms`]: the complex fractional Fourier transform and the
//!   generalized Wigner transform of Hermite-Gaussian modes.
//!
//! Grid sweeps and quadratures run on rayon when the `parallel` feature is
//! enabled (default); see [`par::Execution`].

pub mod error;
pub mod fockspace;
pub mod linalg;
pub mod modes;
pub mod par;
pub mod phasespace;
pub mod quadrature;
pub mod specialfn;
pub mod transforms;

pub use error::{LgError, Result};
pub use fockspace::{BasisSpec, ModeIndex, OperatorMatrix, TwoModeState};
pub use modes::{EtaPoint, TauPoint};
pub use par::Execution;
pub use phasespace::{PhasePoint4, SigmaGamma};
pub use quadrature::{QuadratureRule, QuadratureSpec};
pub use transforms::{FrftOrder, SampledField};

pub use num_complex::Complex64;
