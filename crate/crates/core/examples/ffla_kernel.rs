//! Dense linear algebra and polynomials over a prime field.

use brauerbox::ffla::io::write_matrix;
use brauerbox::ffla::{char_poly, factor_poly, min_poly, FpMatrix, FpPoly, PrimeField};

fn main() -> brauerbox::Result<()> {
    let f = PrimeField::new(3)?;
    // companion-like matrix with a repeated eigenvalue
    let a = FpMatrix::from_rows(f, &[[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 1], [0, 0, 0, 0]])?;
    print!("A =\n{}", write_matrix(&a));
    println!("rank {} det {}", a.rank(), a.det()?);
    print!("nullspace basis:\n{}", write_matrix(&a.nullspace()));
    let chi = char_poly(&a)?;
    let m = min_poly(&a)?;
    println!("char poly {chi}");
    println!("min poly  {m}");
    for (q, k) in factor_poly(&chi)? {
        println!("  factor {q} ^ {k}");
    }
    assert!(m.eval_matrix(&a)?.is_zero());

    let g = FpPoly::new(f, vec![1, 0, 0, 0, 0, 0, 0, 0, 1]);
    println!("x^8 + 1 over F_3:");
    for (q, k) in factor_poly(&g)? {
        println!("  {q} ^ {k}");
    }
    Ok(())
}
