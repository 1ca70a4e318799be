//! Library side of the command-line tool: the JSON document format and
//! the benchmark harness. The binary in `main.rs` is a thin dispatcher
//! over these pieces and the `absnormal` crate's pipelines.

pub mod bench;
pub mod document;

/// Exit-code contract shared by all subcommands: `0` solved/true, `1`
/// proved negative, `2` usage or precondition failure, `3` indeterminate
/// (limits, ray termination).
pub mod exit_codes {
    pub const SUCCESS: i32 = 0;
    pub const PROVED_NEGATIVE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INDETERMINATE: i32 = 3;
}
