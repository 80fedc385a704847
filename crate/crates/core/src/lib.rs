//! Dyck paths, plane trees, parking functions and labelled graphs, with the
//! statistics, bijections and q,t-polynomial identities that connect them.
//!
//! ```
//! use qtcat::{DyckPath, PolynomialFamily};
//!
//! let p: DyckPath = "NNNEENENNEEENNENEE".parse().unwrap();
//! assert_eq!(p.area(), 9);
//! assert_eq!(p.ddinv().unwrap(), 15);
//! assert_eq!(qtcat::omega(&p).to_string(), "NNENNEEENNNENEEENE");
//!
//! let f2 = qtcat::family(PolynomialFamily::F, 2).unwrap();
//! assert_eq!(f2.to_string(), "q + t");
//! ```

pub mod bijections;
pub mod error;
pub mod exec;
pub mod families;
pub mod identities;
pub mod labelled;
pub mod parking;
pub mod path;
pub mod poly;
pub mod tree;

pub use bijections::{
    beta, beta_inv, deutsch, eta, eta_inv, omega, sigma, sigma_inv, tau, tau_inv, tau_inv_fixing_unit_rise, zeta,
    zeta_inv, MapName, Object,
};
pub use error::{Error, Result};
pub use exec::{Config, Limits, Strategy};
pub use families::{
    check_semilength, f_recursive, family, family_with, m_poly, m_poly_with, stump_check, symmetry_report, PolynomialFamily,
    SymmetryReport,
};
pub use identities::{identity_check, lookup, verify_all, Identity, Report, SizeUnit, IDENTITIES};
pub use labelled::{
    check_graph_size, enumerate_connected_graphs, enumerate_labelled_trees, spanning_tree_s, LabelledGraph, LabelledTree,
};
pub use parking::{enumerate_parking_functions, lambda, lambda_inv, ParkingFunction};
pub use path::{catalan, enumerate_paths, AreaSequence, DepthSequence, DyckPath, Step};
pub use poly::{BivariatePolynomial, Variable};
pub use tree::{enumerate_trees, LabelKind, PlaneTree};
