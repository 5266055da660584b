// Free cumulants and R-transform of the law of `T*T`, and the series
// inversions behind the finite-`N` computation.

use dtmoment::transforms::{
    kn_inverse_check, kn_series, l_limit_inverse_check, ln_inverse_check, r_transform_closed_form, tstt_r_series,
    finite_n_r_relation_check,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let order = 8;
    let r = tstt_r_series(order);
    let closed = r_transform_closed_form(order);
    for (i, (a, b)) in r.coeffs().iter().zip(closed.coeffs()).enumerate() {
        println!("kappa_{} = {a}  (Taylor coefficient {b})", i + 1);
    }
    if r != closed {
        return Err("R-transform mismatch".into());
    }

    let k2: Vec<String> = kn_series(2, 6).coeffs().iter().map(ToString::to_string).collect();
    println!("K_2(t) = [{}]", k2.join(", "));
    for n in 1..=3 {
        println!(
            "N = {n}: K_N inverse ok = {}, L_N inverse ok = {}, R relation ok = {}",
            kn_inverse_check(n, order),
            ln_inverse_check(n, order),
            finite_n_r_relation_check(n, order)
        );
    }
    println!("limit L inverse = z·e^(−z): {}", l_limit_inverse_check(order));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
