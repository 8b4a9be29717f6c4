//! Command-line frontend and orchestration for the binary-curve gonality
//! toolkit: the parallel census driver with resumable output, the census
//! file formats, and the verification battery that rebuilds the published
//! bounds table.

pub mod formats;
pub mod runner;
pub mod verify;
