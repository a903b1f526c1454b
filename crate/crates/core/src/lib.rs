//! Exact commutative algebra over `Q` and `F_p`: Gröbner bases, ideal
//! operations, Hilbert series, zero-dimensional schemes, graded Koszul
//! complexes and Plücker ideals of Grassmannians, plus verification reports
//! built on top of them.

pub mod cli;
pub mod complexes;
pub mod error;
pub mod field;
pub mod grassmann;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod univariate;
pub mod verify;
pub mod zerodim;

pub use complexes::{koszul_complex, ChainMap, FreeComplex, FreeModule};
pub use error::{Error, Result};
pub use field::{CoefficientDomain, Field, Fp, Rational};
pub use grassmann::{GrassmannContext, SchubertVariant};
pub use groebner::{buchberger, ideal_member, normal_form, GroebnerBasis};
pub use hilbert::HilbertData;
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{jacobian, PolyRing, Polynomial, Ring, RingExt};
pub use verify::{Claim, Source, VerificationReport};
pub use zerodim::{PointZ, QuotientAlgebra};
