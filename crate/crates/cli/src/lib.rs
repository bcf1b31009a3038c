//! Command-line front end for `squarefold`: argument parsing, report
//! envelopes and the reference-value self check.

pub mod commands;
pub mod envelope;
pub mod golden;

use squarefold::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_NOT_APPLICABLE: u8 = 3;
pub const EXIT_INCONCLUSIVE: u8 = 4;

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotApplicable(_) | Error::Unsupported(_) => EXIT_NOT_APPLICABLE,
        Error::Inconclusive(_) => EXIT_INCONCLUSIVE,
        _ => EXIT_INVALID,
    }
}
