//! Build the extremal family, parallel-connection trees, whirl-like
//! matroids and the excluded-minor catalog.

use positroid_lab::constructions::{
    all_parallel_connection_trees, catalog, extremal_family, whirl_like, whirl_like_plus, CatalogId,
};
use positroid_lab::io::to_text;

fn main() -> positroid_lab::Result<()> {
    let m = extremal_family(3, 2)?;
    println!(
        "extremal_family(3, 2): {} elements, rank {}",
        m.n(),
        m.rank()
    );
    print!("{}", to_text(&m));

    for (r, l) in [(4, 2), (5, 2), (4, 3)] {
        let trees = all_parallel_connection_trees(r, l)?;
        println!(
            "trees of U(2,{}) copies with rank {r}: {} classes",
            l + 1,
            trees.len()
        );
    }

    for l in 3..=5 {
        let w = whirl_like(3, l)?;
        println!("whirl_like(3, {l}): {} elements", w.n());
    }
    println!(
        "whirl_like_plus(3, 4): {} elements",
        whirl_like_plus(3, 4)?.n()
    );

    for id in CatalogId::ALL {
        let c = catalog(id);
        println!(
            "{id}: {} elements, rank {}, {} bases",
            c.n(),
            c.rank(),
            c.bases().len()
        );
    }
    Ok(())
}
