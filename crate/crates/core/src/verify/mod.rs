//! End-to-end verification runs producing [`VerificationReport`]s.

pub mod fields;
pub mod g36;
pub mod grassmann_checks;
pub mod p2;
pub mod report;

pub use fields::FieldSpec;
pub use g36::cmd_search_g36;
pub use grassmann_checks::{cmd_verify_richardson, cmd_verify_section, cmd_verify_two_points, cmd_verify_zero_dim};
pub use p2::{cmd_verify_p2, P2Options};
pub use report::{Claim, Source, VerificationReport};
