//! Shadow-inequality scan for four parties with mixed local dimensions.

use qweight::ame::{mixed_shadow_scan, DimensionProfile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for dims in [[2, 2, 2, 2], [2, 2, 2, 3], [2, 2, 3, 3], [2, 3, 3, 3], [3, 3, 3, 3]] {
        let scan = mixed_shadow_scan(&DimensionProfile::new(dims.to_vec())?)?;
        let verdict = if scan.excluded { "excluded" } else { "not excluded" };
        println!("{dims:?}: min {} at T={:04b} ({verdict})", scan.min_value, scan.witness_t);
    }
    Ok(())
}
