//! One PASS/FAIL line per acceptance criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use positroid_lab::constructions::{all_parallel_connection_trees, catalog, CatalogId};
use positroid_lab::iso::are_isomorphic;
use positroid_lab::positroid::is_positroid;
use positroid_lab::verify::{
    verify_conjecture61_rank3, verify_excluded_catalog, verify_lemma43,
    verify_minor_test_equivalence, verify_oracle_agreement, verify_prop31, verify_ramsey_l1,
    verify_theorem_main, verify_whirl_family, Outcome, VerificationReport,
};
use positroid_lab::Result;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Result<std::result::Result<String, String>>,
}

fn verified(reps: &[VerificationReport]) -> std::result::Result<(), String> {
    for rep in reps {
        if rep.outcome != Outcome::Verified {
            let labels: Vec<&str> = rep
                .counterexamples
                .iter()
                .map(|w| w.label.as_str())
                .collect();
            return Err(format!(
                "{} {:?}: {:?} {:?}",
                rep.claim_id, rep.outcome, labels, rep.notes
            ));
        }
    }
    Ok(())
}

fn size_bound() -> Result<std::result::Result<String, String>> {
    let mut summary = Vec::new();
    for (r, l) in [(3, 2), (4, 2), (3, 3)] {
        let rep = verify_theorem_main(r, l)?;
        if let Err(e) = verified(std::slice::from_ref(&rep)) {
            return Ok(Err(e));
        }
        if rep.counts.get("qualifying_above_bound") != Some(&0) {
            return Ok(Err(format!(
                "({r},{l}): qualifying positroids above the bound"
            )));
        }
        // every tree is simple, of the right rank and size, and a positroid
        for t in all_parallel_connection_trees(r, l)? {
            if !(t.is_simple() && t.rank() == r && t.n() == l * (r - 1) + 1 && is_positroid(&t)) {
                return Ok(Err(format!("({r},{l}): malformed tree")));
            }
        }
        summary.push(format!(
            "({r},{l}) extremal classes {}",
            rep.counts["extremal_classes"]
        ));
    }
    Ok(Ok(summary.join(", ")))
}

fn excluded() -> Result<std::result::Result<String, String>> {
    let rep = verify_excluded_catalog()?;
    if let Err(e) = verified(std::slice::from_ref(&rep)) {
        return Ok(Err(e));
    }
    let sizes: Vec<usize> = CatalogId::ALL.iter().map(|&id| catalog(id).n()).collect();
    if sizes != [9, 9, 9, 6, 7, 7, 7, 7, 9] {
        return Ok(Err(format!("catalog sizes {sizes:?}")));
    }
    Ok(Ok(format!(
        "{} single-element minors",
        rep.counts["single_element_minors_checked"]
    )))
}

fn rank3_configuration() -> Result<std::result::Result<String, String>> {
    let rep = verify_prop31(8, false)?;
    if let Err(e) = verified(std::slice::from_ref(&rep)) {
        return Ok(Err(e));
    }
    // simple rank-3 matroids on 3..=8 elements, by size
    let known = [1u64, 2, 4, 9, 23, 68];
    for (n, want) in (3..=8).zip(known) {
        if rep.counts.get(&format!("n{n}_scanned")) != Some(&want) {
            return Ok(Err(format!(
                "n={n}: corpus size {:?}, expected {want}",
                rep.counts.get(&format!("n{n}_scanned"))
            )));
        }
    }
    let hyp: u64 = (3..=8)
        .filter_map(|n| rep.counts.get(&format!("n{n}_hypothesis")))
        .sum();
    Ok(Ok(format!("{hyp} hypothesis instances in 107 matroids")))
}

fn trees() -> Result<std::result::Result<String, String>> {
    let rep = verify_lemma43(5, 3)?;
    if let Err(e) = verified(std::slice::from_ref(&rep)) {
        return Ok(Err(e));
    }
    let trees: u64 = rep.counts.values().sum();
    Ok(Ok(format!("{trees} tree classes")))
}

fn whirl() -> Result<std::result::Result<String, String>> {
    let rep = verify_whirl_family(4, 5)?;
    if let Err(e) = verified(std::slice::from_ref(&rep)) {
        return Ok(Err(e));
    }
    for r in 3..=5 {
        let a = positroid_lab::constructions::whirl_like(r, 3)?;
        let b = positroid_lab::constructions::whirl_like(r, 4)?;
        if are_isomorphic(&a, &b).is_none() {
            return Ok(Err(format!("r={r}: l=3 and l=4 differ")));
        }
    }
    Ok(Ok(format!("{:?}", rep.counts)))
}

fn three_connected() -> Result<std::result::Result<String, String>> {
    let reps = vec![verify_conjecture61_rank3(3)?, verify_conjecture61_rank3(4)?];
    if let Err(e) = verified(&reps) {
        return Ok(Err(e));
    }
    let sizes: Vec<String> = reps
        .iter()
        .map(|r| format!("l={} bound {}", r.params["l"], r.params["bound"]))
        .collect();
    Ok(Ok(sizes.join(", ")))
}

fn oracle() -> Result<std::result::Result<String, String>> {
    let rep = verify_oracle_agreement(7)?;
    if let Err(e) = verified(std::slice::from_ref(&rep)) {
        return Ok(Err(e));
    }
    // all matroids on n elements up to isomorphism
    let known = [2u64, 4, 8, 17, 38, 98, 306];
    for (n, want) in (1..=7).zip(known) {
        if rep.counts[&format!("n{n}_matroids")] != want {
            return Ok(Err(format!(
                "n={n}: corpus has {} matroids, expected {want}",
                rep.counts[&format!("n{n}_matroids")]
            )));
        }
    }
    let classes: Vec<u64> = (1..=7)
        .map(|n| rep.counts[&format!("n{n}_positroids")])
        .collect();
    Ok(Ok(format!("positroid classes {classes:?}")))
}

fn minor_equivalence() -> Result<std::result::Result<String, String>> {
    let rep = verify_minor_test_equivalence(8)?;
    if let Err(e) = verified(std::slice::from_ref(&rep)) {
        return Ok(Err(e));
    }
    Ok(Ok(format!("{} comparisons", rep.counts["comparisons"])))
}

fn ramsey() -> Result<std::result::Result<String, String>> {
    let rep = verify_ramsey_l1(200, 0)?;
    if let Err(e) = verified(std::slice::from_ref(&rep)) {
        return Ok(Err(e));
    }
    if rep.counts["chirotopes"] < 200
        || rep.counts["monochromatic_triple"] != rep.counts["chirotopes"]
    {
        return Ok(Err(format!("{:?}", rep.counts)));
    }
    Ok(Ok(format!("{} chirotopes", rep.counts["chirotopes"])))
}

fn main() -> ExitCode {
    let minutes = |m: u64| Duration::from_secs(60 * m);
    let criteria = [
        Criterion {
            id: 1,
            name: "size bound and equality case at (3,2), (4,2), (3,3)",
            budget: minutes(5),
            run: size_bound,
        },
        Criterion {
            id: 2,
            name: "excluded-minor catalog",
            budget: minutes(1),
            run: excluded,
        },
        Criterion {
            id: 3,
            name: "rank-3 configuration, exhaustive n <= 8",
            budget: minutes(10),
            run: rank3_configuration,
        },
        Criterion {
            id: 4,
            name: "parallel-connection trees, r <= 5, l <= 3",
            budget: minutes(2),
            run: trees,
        },
        Criterion {
            id: 5,
            name: "whirl-like constructions",
            budget: minutes(5),
            run: whirl,
        },
        Criterion {
            id: 6,
            name: "3-connected rank-3 bound, l in {3,4}",
            budget: minutes(10),
            run: three_connected,
        },
        Criterion {
            id: 7,
            name: "positroid oracle agreement, n <= 7",
            budget: minutes(10),
            run: oracle,
        },
        Criterion {
            id: 8,
            name: "line-minor test equivalence, n <= 8",
            budget: minutes(10),
            run: minor_equivalence,
        },
        Criterion {
            id: 9,
            name: "monochromatic triples in rank 2",
            budget: minutes(5),
            run: ramsey,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let took = start.elapsed();
        let (ok, detail) = match result {
            Ok(Ok(d)) if took <= c.budget => (true, d),
            Ok(Ok(d)) => (false, format!("{d}; over budget of {:?}", c.budget)),
            Ok(Err(d)) => (false, d),
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {}: {} ({detail}) [{:.2}s]",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            took.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
