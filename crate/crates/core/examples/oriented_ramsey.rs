//! Chirotopes from integer matrices and monochromatic line minors.

use positroid_lab::oriented::{
    chirotope_from_matrix, monochromatic_line_minor, ramsey_scan, IntMatrix, Polarity,
};

fn main() -> positroid_lab::Result<()> {
    let a = IntMatrix::parse("1,1,1,1,1,1\n0,1,2,3,4,5\n1/2,-1,0,3,1,2\n")?;
    let chi = chirotope_from_matrix(&a)?;
    println!("chirotope: {chi}");
    for polarity in [Polarity::Plus, Polarity::Minus] {
        let w = monochromatic_line_minor(&chi, 3, polarity)?;
        println!("{polarity:?} line of 3: {w:?}");
    }

    let line = IntMatrix::parse("1,1,1,1,1,1\n0,1,2,3,4,5\n")?;
    let report = ramsey_scan(&chirotope_from_matrix(&line)?, 1)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
