//! Diffeomorphic active-contour segmentation of 2D grayscale images.
//!
//! The pipeline deforms a template polygon under a geodesic flow of the
//! plane (the LDDMM point-particle reduction) so that the varifold
//! representation of the curve — edge midpoints, unit normals and edge
//! lengths — aligns with the thresholded gradient field of the image.
//! The matching term is a Gaussian / Cauchy-Binet kernel metric between
//! those two discrete varifolds, optionally reweighted by a closed-form
//! global mass factor, and the deformation is regularized by the kernel
//! norm of the generating velocity field. Optimization runs Adam on the
//! initial momenta of the control points.
//!
//! Modules follow the pipeline stages:
//!
//! - [`imageio`]: PGM load/save and reproducible noise injection.
//! - [`gradfield`]: smoothing, centered finite differences, threshold
//!   extraction of the image-side varifold.
//! - [`varifold`]: curves as discrete varifolds, kernel inner products,
//!   losses and their analytic vertex gradients.
//! - [`lddmm`]: geodesic shooting of control points, passive-point flow,
//!   and the discrete adjoint of the integrator.
//! - [`segmenter`]: template initialization, total energy, Adam loop and
//!   the end-to-end [`segmenter::segment`] entry point.
//!
//! All numeric results are deterministic: kernel sums reduce in a fixed
//! order regardless of the `parallel` feature or thread count.

pub mod error;
pub(crate) mod exec;
pub mod geom;
pub mod gradfield;
pub mod imageio;
pub mod lddmm;
pub mod rng;
pub mod segmenter;
pub mod varifold;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
