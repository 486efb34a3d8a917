//! G-parking functions and recurrent sandpile configurations of one graph,
//! their generating functions, and the bijection between them.

use macq::graphs::{
    gparking_enumerate, parking_gen, sandpile_level, sandpile_level_gen, sandpile_recurrent,
    tutte_at,
};
use macq::poly::MPoly;
use macq::Multigraph;

fn main() {
    let g = Multigraph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
    println!("{g}");

    println!("parking functions (weight = #E - #V + 1 - sum f):");
    for f in gparking_enumerate(&g).unwrap() {
        let vals: Vec<String> = f
            .values()
            .iter()
            .map(|(v, x)| format!("f({v})={x}"))
            .collect();
        println!("  {}  wt={}", vals.join(" "), f.weight(&g));
    }
    println!("parking generating function: {}", parking_gen(&g).unwrap());

    println!("recurrent configurations with their levels:");
    for u in sandpile_recurrent(&g).unwrap() {
        let vals: Vec<String> = u
            .chips()
            .iter()
            .map(|(v, x)| format!("u({v})={x}"))
            .collect();
        let f = u.to_parking(&g);
        println!(
            "  {}  level={}  -> parking weight {}",
            vals.join(" "),
            sandpile_level(&g, &u),
            f.weight(&g)
        );
    }
    println!(
        "level generating function:   {}",
        sandpile_level_gen(&g).unwrap()
    );
    println!(
        "Tutte specialization T(1,q): {}",
        tutte_at(&g, &MPoly::one(), &MPoly::q())
    );
    assert_eq!(parking_gen(&g).unwrap(), sandpile_level_gen(&g).unwrap());
    assert_eq!(
        parking_gen(&g).unwrap(),
        tutte_at(&g, &MPoly::one(), &MPoly::q())
    );
}
