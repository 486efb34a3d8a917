//! Signed fillings and plethysm: the compatible super fillings of a colored
//! diagram compute the cumulant at the alphabet X(t-1), matching the
//! power-sum substitution p_i -> (t^i - 1) p_i.

use macq::macdonald::{cumulant_combinatorial, cumulant_pleth_super, CumulantProblem};
use macq::shapes::{enumerate_superfillings, super_stats, Partition, SuperOrder};
use macq::symfunc::plethysm_x_tminus1;

fn main() {
    let shape = Partition::new(vec![2]);
    println!("super fillings of {shape} with magnitudes <= 2 (default order):");
    for sf in enumerate_superfillings(&shape, 2) {
        let stats = super_stats(&sf, SuperOrder::PositivesFirst);
        let row: Vec<String> = (1..=2)
            .map(|i| sf.entry(macq::shapes::BoxPos::new(i, 1)).to_string())
            .collect();
        println!(
            "  [{}] pairs={} maj={} negatives={}",
            row.join(" "),
            stats.inversion_pairs.len(),
            stats.maj,
            stats.negatives
        );
    }
    println!();

    for tuple in [vec![vec![2]], vec![vec![1], vec![1]], vec![vec![2], vec![1]]] {
        let partitions: Vec<Partition> = tuple.into_iter().map(Partition::new).collect();
        let names: Vec<String> = partitions.iter().map(|p| p.to_string()).collect();
        let problem = CumulantProblem::new(partitions).unwrap();
        let signed = cumulant_pleth_super(&problem);
        let power = plethysm_x_tminus1(&cumulant_combinatorial(&problem)).unwrap();
        assert_eq!(signed, power);
        println!("kappa({})[X(t-1)] via signed fillings:", names.join(", "));
        println!("{}", signed.to_text());
        println!();
    }
}
