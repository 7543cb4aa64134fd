//! Flats, line minors, and catalog-minor search.

use positroid_lab::constructions::{catalog, extremal_family, uniform, CatalogId};
use positroid_lab::flats::{flat_lattice, long_lines};
use positroid_lab::minors::{
    find_catalog_minor, has_minor, has_uniform_line_minor, prop31_hypothesis,
};

fn main() -> positroid_lab::Result<()> {
    let fano = catalog(CatalogId::M4).dual();
    println!(
        "dual of M(K4): rank {}, {} flats",
        fano.rank(),
        flat_lattice(&fano).len()
    );

    let m = catalog(CatalogId::M6);
    println!("{} has {} long lines", CatalogId::M6, long_lines(&m).len());
    for k in 3..=5 {
        println!("  U(2,{k}) minor: {}", has_uniform_line_minor(&m, k));
    }
    if let Some(w) = has_minor(&m, &uniform(2, 4)?) {
        println!("  witness: {w}");
    }
    if let Some(w) = prop31_hypothesis(&m)? {
        println!(
            "  rank-3 configuration: line {} through {:?}",
            w.line, w.points
        );
    }

    let host = catalog(CatalogId::Fig2);
    match find_catalog_minor(&host) {
        Some((id, w)) => println!("{} contains {id}: {w}", CatalogId::Fig2),
        None => println!("{} contains no catalog minor", CatalogId::Fig2),
    }
    let tree = extremal_family(5, 2)?;
    println!(
        "extremal_family(5, 2) catalog minor: {:?}",
        find_catalog_minor(&tree).map(|(id, _)| id)
    );
    Ok(())
}
