//! Command-line front end for `gcalg`: configuration files, an ASCII
//! expression language and commands wrapping the library.
//!
//! | notation            | syntax      |
//! |---------------------|-------------|
//! | join `a ∨ b`, `ab`  | `ab`, `a b` |
//! | meet `∧`            | `^`         |
//! | geometric product ◇ | `@`         |
//! | tensor `⊗`          | `#`         |
//! | bracket             | `[x]`       |
//! | boundary `∂`        | `d(x)`      |
//! | Hodge star          | `!x`        |
//! | regressive `∘`      | `o(x, y)`   |

pub mod command;
pub mod config;
pub mod error;
pub mod eval;
pub mod expr;

pub use command::{run, run_script, Command};
pub use config::parse_config;
pub use error::CliError;
pub use expr::{parse_expression, Expr};
