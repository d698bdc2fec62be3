//! Rigorous fixed-point enclosures for multivalued maps.
//!
//! The toolkit answers three questions about a map `F` from a box to subsets
//! of that box, using only outward-rounded arithmetic so every answer is a
//! mathematical guarantee rather than a numerical estimate:
//!
//! * where can fixed points (`x ∈ F(x)`) live? — [`pave::enclose_fixed_points`]
//!   returns a box cover of the fixed-point set;
//! * can the fixed-point set be empty? — [`pave::certify_empty`] proves
//!   emptiness when the cover dies out;
//! * is there a point that is almost fixed? — [`pave::approx_fixed_point`]
//!   searches candidate boxes for points with small residual.
//!
//! The same machinery specialises to single-valued iteration on metric
//! spaces and Kleene iteration on finite posets ([`iterate`]), and to
//! equilibrium search for two-player and n-player games, where equilibria
//! are exactly the fixed points of best-response maps ([`games`]).

pub mod expr;
pub mod games;
pub mod interval;
pub mod iterate;
pub mod multimap;
pub mod pave;
