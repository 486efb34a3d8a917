//! The G-inversion polynomial of a loop-allowed multigraph computed four
//! ways: spanning trees with the kappa statistic, the Tutte specialization
//! T(1,q), kappa-free trees with descendant counts, and the alternating
//! set-partition sum.

use macq::graphs::{
    inversion_poly, inversion_poly_recursive, spanning_trees, tutte, tutte_at,
    tutte_cumulant_form,
};
use macq::poly::MPoly;
use macq::Multigraph;

fn main() {
    // two parallel edges, a bridge, and a loop
    let g = Multigraph::new(3, &[(1, 2), (1, 2), (2, 3), (3, 3)]).unwrap();
    println!("{g}");
    println!("spanning trees of the simplification: {}", spanning_trees(&g).len());

    let tree_route = inversion_poly(&g);
    let tutte_route = tutte_at(&g, &MPoly::one(), &MPoly::q());
    let recursive_route = inversion_poly_recursive(&g);
    let partition_route = tutte_cumulant_form(&g).unwrap();

    println!("tree route:      {tree_route}");
    println!("tutte route:     {tutte_route}");
    println!("recursive route: {recursive_route}");
    println!("partition route: {partition_route}");
    assert_eq!(tree_route, tutte_route);
    assert_eq!(tree_route, recursive_route);
    assert_eq!(tree_route, partition_route);

    println!("full Tutte polynomial: {}", tutte(&g).to_xy_string());

    // a disconnected graph takes the value zero by convention
    let disconnected = Multigraph::new(3, &[(1, 2)]).unwrap();
    println!(
        "disconnected convention: I = {}",
        inversion_poly(&disconnected)
    );
}
