//! Command-line surface: the tangle language, algebra arguments and fuzz
//! campaigns. The binary lives in `main.rs`.

pub mod app;
pub mod fuzz;
pub mod parse;
pub mod source;

pub use app::{run, CliError, Outcome, EXIT_AXIOM, EXIT_INPUT, EXIT_PASS, EXIT_PROPERTY, SEED_ENV};
pub use fuzz::{campaign_tangle, run_fuzz, run_fuzz_with, FuzzError, FuzzFailure, FuzzReport, SizeCaps};
pub use parse::{parse_braid_word, parse_tangle, ParseError};
pub use source::{load_algebra, read_text, SourceError};
