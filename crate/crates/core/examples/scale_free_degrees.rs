//! Degree distributions of Barabási–Albert and Erdős–Rényi graphs, with the
//! fixed-exponent power-law fit compared against a first-power fit.
//!
//! ```bash
//! cargo run --release -p pathqubo --example scale_free_degrees
//! ```

use pathqubo::graph::{
    fit_inverse_power, fit_power_law, fit_power_law_free, generate_ba, generate_er, DegreeHistogram,
};

fn main() -> pathqubo::Result<()> {
    let seeds = 0..20u64;
    let mut cubic_wins = 0;
    let mut pooled = Vec::new();
    for seed in seeds.clone() {
        let g = generate_ba(10, 10, 600, seed)?;
        pooled.extend(g.degrees());
        let hist = DegreeHistogram::of_graph(&g);
        let points: Vec<(f64, f64)> = hist
            .probabilities()
            .into_iter()
            .map(|(k, p)| (k as f64, p))
            .collect();
        let cubic = fit_power_law(&hist)?;
        let linear = fit_inverse_power(&points, 1.0)?;
        if cubic.residual < linear.residual {
            cubic_wins += 1;
        }
    }
    println!(
        "BA(10, 10, 600): cubic fit beats first power on {cubic_wins}/{} seeds",
        seeds.end
    );
    let free = fit_power_law_free(&DegreeHistogram::from_degrees(pooled))?;
    println!("pooled free-exponent fit: m = {:.3}", free.exponent);

    let g = generate_er(600, 0.02, 3)?;
    let hist = DegreeHistogram::of_graph(&g);
    let mean = hist.degree_sum() as f64 / hist.sample_count() as f64;
    println!(
        "ER(600, 0.02): mean degree {mean:.2} (expected {:.2})",
        599.0 * 0.02
    );
    print!("{}", hist.to_csv());
    Ok(())
}
