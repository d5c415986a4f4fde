//! Runs every exact transform on the five-qubit code's enumerator.

use qweight::enumerators::{
    a_from_unitary, macwilliams, shadow_from_unitary, shadow_transform, unitary_from_a, EnumeratorKind,
    EnumeratorVector,
};

fn show(label: &str, v: &EnumeratorVector) {
    let c: Vec<String> = v.coeffs().iter().map(ToString::to_string).collect();
    println!("{label:<8} ({})", c.join(", "));
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = EnumeratorVector::from_integers(EnumeratorKind::ShorLaflammeA, 2, &[1, 0, 0, 10, 15, 6])?;
    show("A", &a);
    show("B", &macwilliams(&a)?);
    let ap = unitary_from_a(&a)?;
    show("A'", &ap);
    show("S", &shadow_transform(&a)?);
    show("S (A')", &shadow_from_unitary(&ap)?);
    assert_eq!(a_from_unitary(&ap)?, a);
    println!("{}", serde_json::to_string(&macwilliams(&a)?)?);
    Ok(())
}
