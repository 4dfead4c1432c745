//! Corpus IO, the parallel verification runner and the lemma suites behind
//! the `chordlab` command line.

pub mod io;
pub mod lemmas;
pub mod report;

pub use io::{parse_edge_list, parse_graph6, read_graph_file, stream_corpus, write_edge_list, write_graph6, IoError};
pub use lemmas::{run_lemmas, LemmaReport, Which};
pub use report::{run_verify, Mode, RunReport, Status};
