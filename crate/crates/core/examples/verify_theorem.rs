//! Check the line-size bound and its equality case, then write a report.

use positroid_lab::verify::{verify_conjecture61_rank3, verify_theorem_main, write_outputs};

fn main() -> positroid_lab::Result<()> {
    let mut reports = Vec::new();
    for (r, l) in [(3, 2), (4, 2), (3, 3), (5, 2)] {
        let rep = verify_theorem_main(r, l)?;
        println!("r={r} l={l}: {:?} {:?}", rep.outcome, rep.counts);
        reports.push(rep);
    }
    for l in [3, 4, 5] {
        let rep = verify_conjecture61_rank3(l)?;
        println!("3-connected, l={l}: {:?} {:?}", rep.outcome, rep.notes);
        reports.push(rep);
    }
    let out = std::env::temp_dir()
        .join("positroid-lab-example")
        .join("report.json");
    write_outputs(&reports, None, &out)?;
    println!("report written to {}", out.display());
    Ok(())
}
