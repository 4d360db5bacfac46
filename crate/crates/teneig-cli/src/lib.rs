//! Command-line interface, tensor file format and table rendering for the
//! `teneig` solver.

pub mod cli;
pub mod format;
pub mod render;

pub use cli::{cli_main, EPS_ENV_VAR};
pub use format::{parse_tensor, serialize_tensor, EntryList, FormatError, Layout, TensorDocument};
pub use render::{render_check, render_eig, render_report, render_summary, render_trace};
