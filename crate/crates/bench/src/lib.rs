//! Workloads shared by the criterion benches.

use leibniz_core::catalog::example_5_5;
use leibniz_core::sl2::{simple_ext_algebra, sl2_leibniz_irrep};
use leibniz_core::{LambdaVariant, LeibnizAlgebra, Representation};

/// The extension algebras benchmarked for structure analysis.
pub fn extension_algebras() -> Vec<(usize, LeibnizAlgebra)> {
    (5..=9)
        .map(|n| (n, simple_ext_algebra(n).expect("n >= 5")))
        .collect()
}

/// sl2 irreducibles of increasing dimension.
pub fn irreps(max_m: usize) -> Vec<(usize, Representation)> {
    (1..=max_m)
        .map(|m| (m, sl2_leibniz_irrep(m, LambdaVariant::ZeroLambda)))
        .collect()
}

pub fn reducible_example() -> Representation {
    example_5_5(LambdaVariant::ZeroLambda, LambdaVariant::ZeroLambda)
}
