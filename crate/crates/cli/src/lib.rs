//! Library side of the `ehrhart` command-line tool: the polytope document
//! format, the family registry, report rows, and the verification suites.

pub mod document;
pub mod registry;
pub mod report;
pub mod verify;
