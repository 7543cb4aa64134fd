//! Exhaustive positroid enumeration with filters.

use positroid_lab::io::to_text;
use positroid_lab::positroid::{enumerate_positroids_with_stats, PositroidFilter};

fn main() -> positroid_lab::Result<()> {
    for n in 1..=7 {
        let (all, stats) = enumerate_positroids_with_stats(n, &PositroidFilter::default())?;
        println!(
            "n={n}: {} decorated permutations, {} classes",
            stats.decorated_permutations,
            all.len()
        );
    }

    let filter = PositroidFilter {
        rank: Some(3),
        simple: true,
        no_uniform_line_minor: Some(4),
        ..Default::default()
    };
    let (found, _) = enumerate_positroids_with_stats(5, &filter)?;
    println!("simple rank-3 positroids on 5 elements without U(2,4):");
    for m in &found {
        print!("{}", to_text(m));
    }
    let (none, _) = enumerate_positroids_with_stats(6, &filter)?;
    println!("on 6 elements: {}", none.len());
    Ok(())
}
