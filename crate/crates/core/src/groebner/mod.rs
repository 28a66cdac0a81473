//! Gröbner bases over the rationals and the ideal operations built on them:
//! membership, elimination, kernels and preimages of ring maps,
//! intersections, radical membership, Hilbert series.

mod buchberger;
mod elimination;
mod hilbert;
mod ideal;
mod map;
mod quadratic;
mod reduce;

pub use buchberger::{groebner_basis, BuchbergerOptions, Selection};
pub use elimination::{check_elimination, elimination_ideal};
pub use hilbert::{hilbert_series, HilbertSeries};
pub use ideal::Ideal;
pub use map::RingMap;
pub use quadratic::{gram_matrix, matrix_rank, quadratic_rank};
pub use reduce::normal_form;
