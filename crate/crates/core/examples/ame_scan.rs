//! Scans every (n, D) up to the odd Scott bound for D ≤ 5 and lists the
//! cells excluded by the shadow inequalities alone.

use qweight::ame::{check_ame_uniform, scan_grid, Criterion};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let v = check_ame_uniform(4, 2)?;
    println!("n=4 D=2 excluded={} min shadow {}", v.excluded, v.min_shadow_coeff.unwrap());

    let rows = scan_grid(5, None)?;
    for dim in 2..=5 {
        let ns: Vec<usize> = rows
            .iter()
            .filter(|v| v.profile.dims()[0] == dim && !v.scott_violated)
            .filter(|v| v.excluded_by.contains(&Criterion::Shadow))
            .map(|v| v.profile.n())
            .collect();
        println!("D={dim}: {ns:?}");
    }
    Ok(())
}
