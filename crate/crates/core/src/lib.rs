//! Enumeration of group-MUSes and group-MCSes of Horn formulae.
//!
//! The formula is a hard group of Horn clauses plus soft groups `1..=k`.
//! [`enumerate::enumerate`] drives a selector formula over the groups
//! ([`map`]), takes maximal models of it ([`mxm`]), decides each selection
//! with incremental linear-time propagation ([`ltur`]) and shrinks
//! unsatisfiable selections with insertion-based extraction ([`extract`]).
//!
//! ```
//! use hornmus::enumerate::{enumerate, EnumConfig, Found};
//! use hornmus::gcnf::parse_gcnf;
//!
//! let f = parse_gcnf("p gcnf 3 5 2\n{0} -1 3 0\n{0} -2 3 0\n{0} -3 0\n{1} 1 0\n{2} 2 0\n").unwrap();
//! let mut found = Vec::new();
//! let stats = enumerate(&f, &EnumConfig::reporting_all(), |r| found.push(r.clone())).unwrap();
//! assert_eq!(stats.mus_count, 2);
//! assert!(found.contains(&Found::Mcs(vec![1, 2])));
//! ```

pub mod bench;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod extract;
pub mod fixtures;
pub mod gcnf;
pub mod generate;
pub mod ltur;
pub mod map;
pub mod model;
pub mod mxm;
pub mod oracle;
pub mod report;

pub use enumerate::{enumerate, EnumConfig, EnumerationStats, Found};
pub use error::{EnumError, GcnfError};
pub use model::{Clause, GroupId, GroupedFormula, HornClause, Lit};
