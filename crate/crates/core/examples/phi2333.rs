//! Builds the AME state on 2x3x3x3, checks its marginals and the local
//! rotation between the two coefficient branches, and prints the JSON.

use qweight::states::{
    branch_overlap, is_ame, lu_angle, lu_branch_map_check, marginal_deviation, phi_2333, phi_2333_coefficients,
    Branch,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (alpha, beta) = phi_2333_coefficients(Branch::Plus);
    println!("alpha = {alpha:.12}, beta = {beta:.12}, 54 alpha beta = {:.12}", 54.0 * alpha * beta);
    let phi = phi_2333();
    println!("max marginal deviation {:.3e}", marginal_deviation(&phi)?);
    println!("AME at 1e-9: {}", is_ame(&phi, 1e-9)?);
    println!("branch overlap at {:.10}: {:.12}", lu_angle(), branch_overlap(lu_angle()));
    println!("branch overlap at 0: {:.12}", branch_overlap(0.0));
    println!("branch map holds: {}", lu_branch_map_check());
    if std::env::args().any(|a| a == "--json") {
        println!("{}", phi.to_json());
    }
    Ok(())
}
