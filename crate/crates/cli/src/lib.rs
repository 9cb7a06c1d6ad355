//! Parser, exact numeric checks, report formatting and the batch harness
//! behind the `kovacic` command.

pub mod batch;
pub mod expr;
pub mod numeric;
pub mod report;

pub use batch::{read_corpus, run_batch, stats, CorpusRecord, StatsReport};
pub use expr::{format_ode, parse_expr, parse_ode, Expr};
pub use numeric::{check_solution, NumericCheck};
pub use report::SolveJson;
