//! Prints the Krawtchouk table K_m(k; n) for small n, then the
//! Krawtchouk-like rows used by the qudit MacWilliams transform.

use num_bigint::BigInt;
use qweight::exactmath::{krawtchouk, krawtchouk_like};

fn main() {
    let n = 6;
    println!("K_m(k; {n}), rows m, columns k");
    for m in 0..=n {
        let row: Vec<String> = (0..=n).map(|k| format!("{:>4}", krawtchouk(m, k, n as u64).unwrap())).collect();
        println!("m={m}: {}", row.join(""));
    }

    // qubit MacWilliams matrix: γ = 1, δ = D² - 1 = 3
    let (gamma, delta) = (BigInt::from(1), BigInt::from(3));
    println!("\nK~_m(k; {n}, 1, 3)");
    for m in 0..=n {
        let row: Vec<String> = (0..=n)
            .map(|k| format!("{:>6}", krawtchouk_like(m, k, n as u64, &gamma, &delta).unwrap()))
            .collect();
        println!("m={m}: {}", row.join(""));
    }
}
