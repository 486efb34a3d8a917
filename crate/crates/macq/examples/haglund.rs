//! Macdonald polynomials from the filling formula, with their Schur
//! expansions and the triangularity axioms that characterize them.

use macq::macdonald::{haglund, verify_axioms};
use macq::shapes::{partitions_of, Partition};

fn main() {
    for parts in [vec![2], vec![1, 1], vec![2, 1], vec![3, 1]] {
        let lambda = Partition::new(parts);
        let h = haglund(&lambda);
        println!("H{lambda} in the monomial basis:");
        println!("{}", h.to_text());
        println!("H{lambda} in the Schur basis:");
        println!("{}", h.to_schur().to_text());
        println!();
    }

    println!("characterizing axioms, all shapes of size <= 5:");
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            let report = verify_axioms(&lambda).unwrap();
            println!(
                "  {lambda}: C1 {} C2 {} C3 {}",
                report.c1(),
                report.c2(),
                report.c3()
            );
            assert!(report.passes());
        }
    }
}
