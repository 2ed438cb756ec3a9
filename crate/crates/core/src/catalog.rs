//! Named algebras and representations used throughout the tests, the
//! benches and the CLI generators.

use crate::algebra::LeibnizAlgebra;
use crate::linalg::int;
use crate::rep::{LambdaVariant, Representation};
use crate::sl2::{classify_extension_irreps, simple_ext_algebra, sl2_algebra, sl2_leibniz_irrep};

/// The five-dimensional simple Leibniz algebra on `(e, f, h, x, y)`:
/// sl2 plus `[x,h] = x`, `[y,e] = -x`, `[x,f] = y`, `[y,h] = -y`.
pub fn example_5_3_algebra() -> LeibnizAlgebra {
    LeibnizAlgebra::from_brackets(
        "example-5-3",
        &["e", "f", "h", "x", "y"],
        &[
            (0, 1, vec![(2, int(1))]),
            (1, 0, vec![(2, int(-1))]),
            (0, 2, vec![(0, int(2))]),
            (2, 0, vec![(0, int(-2))]),
            (1, 2, vec![(1, int(-2))]),
            (2, 1, vec![(1, int(2))]),
            (3, 2, vec![(3, int(1))]),
            (4, 0, vec![(3, int(-1))]),
            (3, 1, vec![(4, int(1))]),
            (4, 2, vec![(4, int(-1))]),
        ],
    )
    .expect("table is well-formed")
}

/// The algebra above together with its adjoint representation.
pub fn example_5_3() -> (LeibnizAlgebra, Representation) {
    let alg = example_5_3_algebra();
    let adj = Representation::adjoint(&alg).expect("adjoint of a Leibniz algebra");
    (alg, adj)
}

/// The five-dimensional sl2 representation made of a 3-dimensional and a
/// 2-dimensional irreducible block, with the chosen `lambda` on each.
pub fn example_5_5(first: LambdaVariant, second: LambdaVariant) -> Representation {
    sl2_leibniz_irrep(2, first)
        .direct_sum(&sl2_leibniz_irrep(1, second))
        .expect("both blocks act on sl2")
}

/// Algebras exercised by the property suites.
pub fn catalog_algebras() -> Vec<LeibnizAlgebra> {
    let mut out = vec![sl2_algebra()];
    out.extend((5..=9).map(|n| simple_ext_algebra(n).expect("n >= 5")));
    out.push(example_5_3_algebra());
    out.extend((1..=3).map(LeibnizAlgebra::abelian));
    out.push(sl2_algebra().direct_sum(&LeibnizAlgebra::abelian(1)));
    out.push(sl2_algebra().direct_sum(&LeibnizAlgebra::abelian(2)));
    out
}

/// Representations exercised by the property suites.
pub fn catalog_representations() -> Vec<Representation> {
    let mut out = Vec::new();
    for m in 0..=4 {
        for v in [LambdaVariant::ZeroLambda, LambdaVariant::AntiSymmetric] {
            out.push(sl2_leibniz_irrep(m, v));
        }
    }
    for v1 in [LambdaVariant::ZeroLambda, LambdaVariant::AntiSymmetric] {
        for v2 in [LambdaVariant::ZeroLambda, LambdaVariant::AntiSymmetric] {
            out.push(example_5_5(v1, v2));
        }
    }
    out.push(example_5_3().1);
    for alg in catalog_algebras() {
        out.push(Representation::adjoint(&alg).expect("adjoint of a catalog algebra"));
        out.push(Representation::zero(&alg, 2).expect("zero representation"));
    }
    for n in 5..=7 {
        for m in 0..=2 {
            out.extend(classify_extension_irreps(n, m).expect("extension family"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Simplicity;
    use crate::linalg::{unit_vector, Matrix, Subspace};

    #[test]
    fn example_5_3_facts() {
        let (alg, adj) = example_5_3();
        assert!(alg.check_leibniz().is_empty());
        assert_eq!(alg.is_simple().unwrap(), Simplicity::Yes);
        let kernel = alg.leibniz_kernel().unwrap();
        assert_eq!(
            kernel,
            Subspace::span(5, &[unit_vector(5, 3), unit_vector(5, 4)])
        );
        assert!(adj.is_invariant(&kernel).unwrap());
        for i in 0..5 {
            let c = alg.ideal_closure(&[unit_vector(5, i)]).unwrap();
            assert!(c == kernel || c.is_full(), "basis vector {i}");
        }
    }

    #[test]
    fn example_5_3_is_the_n5_extension() {
        let ext = simple_ext_algebra(5).unwrap();
        assert!(example_5_3_algebra().same_structure(&ext));
    }

    #[test]
    fn example_5_5_blocks() {
        let r = example_5_5(LambdaVariant::ZeroLambda, LambdaVariant::ZeroLambda);
        assert_eq!(
            r.rho()[2],
            Matrix::diagonal(&[int(2), int(0), int(-2), int(1), int(-1)])
        );
        assert_eq!(
            r.rho()[0],
            Matrix::from_i64(&[
                &[0, 2, 0, 0, 0],
                &[0, 0, 2, 0, 0],
                &[0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 1],
                &[0, 0, 0, 0, 0],
            ])
        );
        assert_eq!(
            r.rho()[1],
            Matrix::from_i64(&[
                &[0, 0, 0, 0, 0],
                &[-1, 0, 0, 0, 0],
                &[0, -1, 0, 0, 0],
                &[0, 0, 0, 0, 0],
                &[0, 0, 0, -1, 0],
            ])
        );
    }

    #[test]
    fn catalog_is_valid() {
        assert!(catalog_algebras().iter().all(LeibnizAlgebra::is_valid));
        assert!(catalog_representations().len() > 20);
    }
}
