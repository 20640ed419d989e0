//! File formats, rendering, the acceptance suite and command
//! implementations behind the `lens` binary.

pub mod commands;
pub mod error;
pub mod formats;
pub mod render;
pub mod verify;
