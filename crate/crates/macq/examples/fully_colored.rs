//! Fully colored Macdonald polynomials: cumulants of the columns of a
//! shape. They form a basis, and their bottom Schur coefficient counts
//! increasing trees.

use macq::graphs::increasing_tree_poly;
use macq::macdonald::fully_colored;
use macq::poly::Exp;
use macq::shapes::{partitions_of, Partition};
use macq::verify::bareiss_determinant;
use num_bigint::BigInt;

fn main() {
    let mu = Partition::new(vec![2, 2]);
    let f = fully_colored(&mu);
    println!("fully colored polynomial at {mu}:");
    println!("{}", f.to_text());

    // bottom Schur coefficient from increasing trees on the column heights
    let conj = mu.conjugate();
    let weights: Vec<usize> = conj.parts().iter().skip(1).copied().collect();
    let trees = increasing_tree_poly(&weights);
    let shifted = trees.mul_monomial(Exp::new(0, mu.n_stat() as u32, 0), &BigInt::from(1));
    let coeff = f.to_schur().coeff(&Partition::column(mu.size()));
    println!("[s_(1^4)] = {coeff}  (increasing trees give {shifted})");
    assert_eq!(coeff, shifted);
    println!();

    // the family indexed by partitions of n spans: nonzero determinant
    for n in 1..=4 {
        let indices = partitions_of(n);
        let matrix: Vec<Vec<_>> = indices
            .iter()
            .map(|mu| {
                let f = fully_colored(mu);
                indices.iter().map(|nu| f.coeff(nu)).collect()
            })
            .collect();
        let det = bareiss_determinant(matrix);
        println!("degree {n}: transition determinant = {det}");
        assert!(!det.is_zero());
    }
}
