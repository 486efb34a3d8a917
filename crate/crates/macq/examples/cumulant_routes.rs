//! Macdonald cumulants on two independent routes: the alternating
//! set-partition definition and the filling-by-filling graph formula.

use macq::macdonald::{
    cumulant_by_definition, cumulant_combinatorial, cumulant_numerator, CumulantProblem,
};
use macq::shapes::Partition;

fn main() {
    let tuples: Vec<Vec<Vec<usize>>> = vec![
        vec![vec![1], vec![1]],
        vec![vec![1], vec![1], vec![1]],
        vec![vec![2], vec![1, 1]],
        vec![vec![2, 1], vec![1]],
    ];
    for tuple in tuples {
        let partitions: Vec<Partition> = tuple.into_iter().map(Partition::new).collect();
        let names: Vec<String> = partitions.iter().map(|p| p.to_string()).collect();
        let problem = CumulantProblem::new(partitions).unwrap();

        let comb = cumulant_combinatorial(&problem);
        let def = cumulant_by_definition(&problem).unwrap();
        assert_eq!(comb, def, "the two routes must agree");

        println!("kappa({}) on both routes:", names.join(", "));
        println!("{}", comb.to_text());
        println!("Schur expansion:");
        println!("{}", comb.to_schur().to_text());

        // the numerator of the definition carries the (q-1)^(r-1) factor
        let numerator = cumulant_numerator(&problem);
        println!("pre-division numerator (first coefficient):");
        if let Some((idx, c)) = numerator.coeffs().next() {
            println!("m{idx}: {c}");
        }
        println!();
    }
}
