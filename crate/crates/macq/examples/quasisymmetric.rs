//! Fundamental quasisymmetric expansions: Gessel's formula for Schur
//! functions and the standardized expansion of a Macdonald cumulant.

use macq::macdonald::{cumulant_combinatorial, cumulant_qsym, CumulantProblem};
use macq::shapes::Partition;
use macq::symfunc::{gessel_schur, schur_in_monomial};

fn main() {
    let lambda = Partition::new(vec![2, 1]);
    let expansion = gessel_schur(&lambda);
    println!("s{lambda} in the fundamental basis:");
    println!("{}", expansion.to_text());
    let collapsed = expansion.to_symfunc(lambda.size()).unwrap();
    assert_eq!(collapsed, schur_in_monomial(&lambda));
    println!("collapse agrees with the tableau expansion");
    println!();

    let problem = CumulantProblem::new(vec![
        Partition::new(vec![1, 1]),
        Partition::new(vec![1]),
    ])
    .unwrap();
    let qsym = cumulant_qsym(&problem);
    println!("kappa((1,1),(1)) in the fundamental basis:");
    println!("{}", qsym.to_text());
    let collapsed = qsym.to_symfunc(problem.degree()).unwrap();
    assert_eq!(collapsed, cumulant_combinatorial(&problem));
    println!("collapse agrees with the filling formula");
}
