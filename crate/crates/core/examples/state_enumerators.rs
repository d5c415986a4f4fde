//! Measures enumerators of small states by summing over the error basis,
//! and the distance of the five-qubit code.

use qweight::states::{
    bell, code_distance, five_qubit_code_projector, ghz, ring_graph_state, shor_laflamme_from_operators,
    unitary_enum_from_operators, StateVector,
};

fn report(name: &str, psi: &StateVector) -> Result<(), Box<dyn std::error::Error>> {
    let rho = psi.density()?;
    let e = shor_laflamme_from_operators(&rho, &rho)?;
    let u = unitary_enum_from_operators(&rho, &rho)?;
    let fmt = |v: &[f64]| v.iter().map(|x| format!("{x:.3}")).collect::<Vec<_>>().join(", ");
    println!("{name:<6} A = ({})  A' = ({})", fmt(&e.a), fmt(&u.a_prime));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    report("Bell", &bell())?;
    report("GHZ3", &ghz(3)?)?;
    let ring = ring_graph_state(5)?;
    report("ring5", &ring)?;
    println!("ring5 distance {}", code_distance(&ring.density()?, 1)?);
    println!("[[5,1,3]] distance {}", code_distance(&five_qubit_code_projector()?, 2)?);
    Ok(())
}
