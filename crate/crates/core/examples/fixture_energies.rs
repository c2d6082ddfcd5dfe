//! Exhaustive energy landscape of the first fixture: lowest states, the
//! closed-form check and the equivalent Ising model.
//!
//! ```bash
//! cargo run -p pathqubo --example fixture_energies
//! ```

use pathqubo::fixtures::{graph_one, FIXTURE_END, FIXTURE_START};
use pathqubo::qubo::{build_qubo, energy_closed_form, to_ising, CoefficientSet};
use pathqubo::solvers::solve_exact;

fn main() -> pathqubo::Result<()> {
    let g = graph_one();
    let c = CoefficientSet::default();
    let p = build_qubo(&g, &c, FIXTURE_START, FIXTURE_END)?;

    let table = solve_exact(&p)?;
    println!("{} states, lowest ten:", table.total_reads());
    for row in table.rows().iter().take(10) {
        println!(
            "  {:>5}  {}  {:?}",
            row.energy,
            row.state,
            row.state.selected()
        );
    }
    let highest = table.rows().last().expect("non-empty");
    println!("highest: {} at {}", highest.energy, highest.state);

    let worst = table
        .rows()
        .iter()
        .map(|r| {
            let closed =
                energy_closed_form(&g, &c, &r.state.selected(), FIXTURE_START, FIXTURE_END);
            (closed - r.energy).abs()
        })
        .fold(0.0, f64::max);
    println!("max |closed form - matrix| = {worst:e}");

    let ising = to_ising(&p);
    let ground = &table.rows()[0].state;
    let spins: Vec<i8> = ground
        .bits()
        .iter()
        .map(|&b| if b == 1 { 1 } else { -1 })
        .collect();
    println!(
        "ising offset {} energy at ground {}",
        ising.offset,
        ising.energy(&spins)?
    );
    Ok(())
}
