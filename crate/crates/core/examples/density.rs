// The density of `T*T` on `(0, e)`: a coarse table, its moments against
// `p^p/(p+1)!`, and its behaviour at both ends of the support.

use dtmoment::quasinil::tstt_moment;
use dtmoment::spectral::{density_grid, density_moment, phi_at};
use dtmoment::value::rational_to_f64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in density_grid(9)? {
        println!("phi({:.4}) = {:.6}", p.x, p.phi);
    }
    for p in 0..=6 {
        let integral = density_moment(p)?;
        let exact = tstt_moment(p);
        println!("moment {p}: {integral:.12} vs {exact} (error {:.1e})", (integral - rational_to_f64(&exact)).abs());
    }
    let e = std::f64::consts::E;
    let x = e - 1e-3;
    println!("phi(x)/sqrt(e − x) at e − 1e-3: {:.6}", phi_at(x)? / (e - x).sqrt());
    for x in [1e-3, 1e-6, 1e-12] {
        println!("phi(x)·x·log²x at {x:e}: {:.6}", phi_at(x)? * x * f64::ln(x).powi(2));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
