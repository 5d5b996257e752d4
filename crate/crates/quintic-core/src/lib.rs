//! Split any monic quintic into a quadratic and a cubic factor through the
//! degree-10 pair-sum resolvent, then solve both factors in closed form.
//!
//! The resolvent of a depressed quintic x⁵ + Cx³ + Dx² + Ex + F is the monic
//! degree-10 polynomial whose roots are the ten pairwise sums of the
//! quintic's roots. Any root k of it is the sum of two quintic roots; their
//! product n follows rationally from k, and the quintic factors as
//! (x² − kx + n)(x³ + kx² + lx + m) with l and m determined by coefficient
//! matching. The quadratic and cubic formulas then finish the job.
//!
//! The crate is `no_std` (with `alloc`): exact rational resolvent
//! construction, Aberth-Ehrlich root finding, splitting, closed-form
//! solvers, series evaluation, and the brute-force verification harness are
//! all pure computation. IO, the CLI, and report formats live in the
//! companion `quintic-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod closed_form;
pub mod error;
pub mod hypergeom;
pub mod poly;
pub mod resolvent;
pub mod roots;
pub mod split;
pub mod verify;

pub use closed_form::{
    solve_cubic, solve_quadratic, solve_quintic, solve_quintic_with, CubicRoots, QuadraticRoots,
    QuinticSolution, SolveOptions,
};
pub use error::Error;
pub use poly::{DensePolynomial, DepressedQuintic, ExactPolynomial, GeneralQuintic};
pub use resolvent::{
    build_resolvent, build_resolvent_product_form, n_fallback, n_from_k, Resolvent,
    ResolventSource, SplitParameters,
};
pub use roots::{find_all_roots, find_all_roots_default, real_roots, RootSet};
pub use split::{choose_split_root, split, NSource, SplitResult};
pub use verify::{
    full_check, multiset_match, pairwise_sums, sample_quintic, sample_separated_quintic,
    CheckReport, MatchReport, MatchedPair,
};

#[cfg(test)]
mod thread_safety {
    //! Every value type is plain data; nothing holds interior mutability or
    //! thread-bound state, so results can move freely across threads.

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn value_types_are_send_and_sync() {
        assert_send_sync::<crate::DensePolynomial>();
        assert_send_sync::<crate::ExactPolynomial>();
        assert_send_sync::<crate::GeneralQuintic>();
        assert_send_sync::<crate::DepressedQuintic>();
        assert_send_sync::<crate::Resolvent>();
        assert_send_sync::<crate::SplitParameters>();
        assert_send_sync::<crate::RootSet>();
        assert_send_sync::<crate::SplitResult>();
        assert_send_sync::<crate::QuinticSolution>();
        assert_send_sync::<crate::CheckReport>();
        assert_send_sync::<crate::MatchReport>();
        assert_send_sync::<crate::Error>();
    }
}
