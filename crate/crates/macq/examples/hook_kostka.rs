//! Hook q,t-Kostka coefficients of Macdonald cumulants: box subsets of the
//! colored diagram with their graph weights, compared against the Schur
//! expansion of the cumulant.

use macq::macdonald::{
    cumulant_by_definition, hook_kostka, hook_kostka_claim, CumulantProblem,
};
use macq::shapes::Partition;
use macq::symfunc::plethysm_one_minus_u;
use num_bigint::BigInt;

fn main() {
    let problem = CumulantProblem::new(vec![
        Partition::new(vec![2]),
        Partition::new(vec![1]),
    ])
    .unwrap();
    let n = problem.degree();
    let schur = cumulant_by_definition(&problem).unwrap().to_schur();

    println!("kappa((2),(1)) in the Schur basis:");
    println!("{}", schur.to_text());
    println!();

    println!("hook coefficients from box subsets:");
    for s in 0..n {
        let hook = hook_kostka(&problem, s);
        let mut parts = vec![n - s];
        parts.extend(std::iter::repeat_n(1, s));
        let index = Partition::new(parts);
        println!("  K[{index}] = {hook}");
        assert_eq!(hook, schur.coeff(&index));
    }

    // the all-subsets variant equals the coefficients of the evaluation at
    // the alphabet 1 - u
    let eval = plethysm_one_minus_u(&cumulant_by_definition(&problem).unwrap()).unwrap();
    println!();
    println!("kappa[1-u] = {eval}");
    for s in 0..=n {
        let sign = if s % 2 == 0 { 1 } else { -1 };
        let from_eval = eval.u_coefficient(s as u32).scale(&BigInt::from(sign));
        assert_eq!(from_eval, hook_kostka_claim(&problem, s));
    }
    println!("coefficients of (-u)^s match the all-subsets sums");
}
