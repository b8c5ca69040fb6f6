//! Library surface of the mmdec CLI: the JSON interchange format and the
//! report generator. The binary in `main.rs` is a thin command dispatcher
//! over these.

pub mod io;
pub mod report;
