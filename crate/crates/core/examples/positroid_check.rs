//! Recognize positroids and move between necklaces, decorated permutations
//! and bases.

use positroid_lab::constructions::{catalog, whirl_like, CatalogId};
use positroid_lab::positroid::{
    bonin_check, decorated_permutation_from_necklace, necklace_of, positroid_from_necklace,
    relevant_flats, DecoratedPermutation, FixedPointKind,
};

fn main() -> positroid_lab::Result<()> {
    let w = whirl_like(3, 5)?;
    println!(
        "whirl_like(3, 5): {} relevant flats",
        relevant_flats(&w)?.len()
    );
    let order = bonin_check(&w)?.expect("whirl-like matroids are positroids");
    println!("  cyclic order: {order}");

    // relabel so the cyclic order becomes 0, 1, ..., n-1
    let mut perm = vec![0; w.n()];
    for (pos, &e) in order.order().iter().enumerate() {
        perm[e] = pos;
    }
    let w = w.relabel(&perm)?;
    let nk = necklace_of(&w)?;
    let dp = decorated_permutation_from_necklace(&nk);
    println!("  decorated permutation: {dp}");
    println!(
        "  rebuilt from necklace equals input: {}",
        positroid_from_necklace(&nk) == w
    );

    let k4 = catalog(CatalogId::M4);
    println!("M(K4) positroid: {}", bonin_check(&k4)?.is_some());

    let dp = DecoratedPermutation::new(vec![2, 3, 0, 1], &[])?;
    let m = positroid_lab::positroid::positroid_from_decorated_permutation(&dp);
    println!("{dp}: rank {}, {} bases", m.rank(), m.bases().len());
    let with_coloop = DecoratedPermutation::new(vec![1, 0, 2], &[FixedPointKind::Coloop])?;
    println!("{with_coloop}: rank {}", with_coloop.rank());
    Ok(())
}
