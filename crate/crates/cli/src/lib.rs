//! Library side of the `cpkin` command: figure emission, the verification
//! battery and the Bobillier report.

pub mod bobillier_cmd;
pub mod circle;
pub mod error;
pub mod inflection;
pub mod output;
pub mod plot;
pub mod verify;

pub use error::{CliError, CliResult};
