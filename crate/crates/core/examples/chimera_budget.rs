//! Qubit budget of scale-free graphs against a 16x16 Chimera lattice.
//!
//! ```bash
//! cargo run -p pathqubo --example chimera_budget
//! ```

use pathqubo::chimera::{check_feasibility, chimera};
use pathqubo::graph::generate_ba;

fn main() -> pathqubo::Result<()> {
    let topo = chimera(16, 16, 4)?;
    println!(
        "chimera 16x16x4: {} qubits, {} couplers",
        topo.qubit_count(),
        topo.couplers().len()
    );
    for vertices in [100, 500, 682, 683, 1000] {
        let g = generate_ba(2, 2, vertices, 1)?;
        let r = check_feasibility(&g, &topo);
        println!(
            "V={vertices:<5} needs {:>5} qubits  fits={:<5} max degree {:>3} warn={}",
            r.required_qubits, r.fits, r.max_graph_degree, r.degree_warning
        );
    }
    Ok(())
}
