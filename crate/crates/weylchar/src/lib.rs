//! Root system and Weyl group combinatorics for evaluating semisimple
//! permutation characters of parabolic actions: torus order polynomials,
//! relative ranks, parabolic index polynomials from reflection degrees, and
//! the alternating class sum itself.
//!
//! Only split untwisted data is evaluated; twisted type labels are rejected.
//! Everything is exact integer or rational arithmetic.

pub mod charformula;
pub mod degrees;
pub mod parabolic;
pub mod poly;
pub mod query;
pub mod root_system;
pub mod weyl;

pub use charformula::{
    chi_central_equals_index, chi_semisimple, split_centralizer_order_pprime, ChiResult, JNode,
    ParabolicCharQuery,
};
pub use parabolic::{parabolic_index_poly, poincare_poly, poincare_poly_by_lengths};
pub use poly::{IntPolynomial, RatPoly};
pub use query::{parse_query, run_query, QueryAnswer, QueryFile, QueryKind};
pub use root_system::RootSystemData;
pub use weyl::{ClassData, WeylGroupData};
