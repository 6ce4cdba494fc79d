//! Text formats for the `trilink` command-line tool: the exact linking
//! file format and the lossy OBJ export for external viewers.

pub mod format;
pub mod obj;
