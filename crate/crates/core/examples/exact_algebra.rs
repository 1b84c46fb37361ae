//! Smith normal form, cyclotomic arithmetic and Laurent polynomial gcds.

use t3links::algebra::{laurent_gcd, smith_normal_form, Cyclo, IntMatrix, LaurentPoly};

fn main() {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&a);
    println!("A = {a:?}");
    println!("diagonal of U*A*V: {:?}", snf.diagonal());
    assert_eq!(&(&snf.u * &a) * &snf.v, snf.s);

    // ζ_6 satisfies ζ² = ζ - 1.
    let z = Cyclo::root_power(6, 1);
    println!("zeta_6^2 = {}, zeta_6^6 = {}", z.pow(2), z.pow(6));

    let t = |terms: &[(i32, i64)]| LaurentPoly::univariate("t", 1, terms);
    let p = t(&[(0, -1), (2, 1)]); // t^2 - 1
    let q = t(&[(0, 1), (1, -2), (2, 1)]); // (t - 1)^2
    println!("gcd({p}, {q}) = {}", laurent_gcd(&[p.clone(), q.clone()]));

    let shifted = t(&[(-3, -1), (-2, 1)]);
    println!("{shifted} normalizes to {}", shifted.unit_normalize());
}
