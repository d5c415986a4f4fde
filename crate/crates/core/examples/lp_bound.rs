//! Exact LP bound for a few small codes.

use qweight::qecclp::{check_code_params, CodeParams, StabilizerParity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        CodeParams::new(4, 1, 3, 2)?,
        CodeParams::new(5, 1, 3, 2)?,
        CodeParams::new(7, 1, 4, 2)?,
        CodeParams::new(5, 2, 3, 2)?,
        CodeParams::new(5, 1, 3, 2)?.with_stabilizer_parity(StabilizerParity::TypeII)?,
        CodeParams::ame(8, 3)?,
    ];
    for p in cases {
        let c = check_code_params(&p)?;
        let w = c
            .witness
            .map(|w| w.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .unwrap_or_else(|| "-".into());
        println!(
            "(({},{},{}))_{} parity={:?}: {:?} after {} pivots, A = {w}",
            p.n, p.k, p.d, p.dim, p.stabilizer_parity, c.verdict, c.iterations
        );
    }
    Ok(())
}
