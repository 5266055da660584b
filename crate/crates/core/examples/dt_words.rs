// Words in `D, D*, T, T*` and in `Z = D + cT` over several base measures,
// plus the scaling rule `λZ ~ DT(μ∘λ⁻¹, |λ|c)`.

use dtmoment::measures::MeasureModel;
use dtmoment::moments::{dt_word_moment, scaled_dt, z_word_moment, DTWord, DtScale, ZWord};
use dtmoment::MomentValue;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let measures = [
        ("delta:1,1", MeasureModel::parse("delta:1,1")?),
        ("disk:2", MeasureModel::parse("disk:2")?),
        ("ellipse:1,1/2", MeasureModel::parse("ellipse:1,1/2")?),
        (
            "atomic",
            MeasureModel::parse(r#"{"type":"atomic","atoms":[{"re":"1","im":"0","w":"1/3"},{"re":"0","im":"2","w":"2/3"}]}"#)?,
        ),
    ];
    for (name, mu) in &measures {
        for w in ["D* D", "D T D* T*", "T D T* D*", "D D T* T"] {
            let v = dt_word_moment(&w.parse::<DTWord>()?, mu)?;
            println!("{name:>14}  tau({w}) = {v}");
        }
    }

    let mu = MeasureModel::parse("disk:1")?;
    let half = MomentValue::ratio(1, 2);
    for w in ["Z* Z", "Z* Z Z* Z", "Z Z* Z Z* Z Z*"] {
        let eps = dtmoment::moments::parse_z_tokens(w)?;
        let v = z_word_moment(&ZWord::new(eps.clone(), DtScale::new(&half)?), &mu)?;
        println!("disk:1, c = 1/2  tau({w}) = {v}");
    }

    // τ((2Z)*(2Z)) computed directly and through the scaled parameters
    let lambda = MomentValue::from_int(2);
    let eps = dtmoment::moments::parse_z_tokens("Z* Z")?;
    let (mu2, scale2) = scaled_dt(&mu, &DtScale::one(), &lambda)?;
    let scaled = z_word_moment(&ZWord::new(eps.clone(), scale2), &mu2)?;
    let direct = &z_word_moment(&ZWord::new(eps, DtScale::one()), &mu)? * &lambda.norm_sqr();
    println!("tau((2Z)*(2Z)) = {scaled} = 4·tau(Z*Z) = {direct}");
    if scaled != direct {
        return Err("scaling rule mismatch".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
