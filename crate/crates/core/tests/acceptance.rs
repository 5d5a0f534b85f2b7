//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria 1 to 8 gate the run. Criterion 9 is reported but never fails
//! the suite; set `PMINORS_SKIP_STRETCH=1` to skip it.
//!
//! `cargo test --release --test acceptance -- --nocapture`

use std::time::Instant;

use pminors::cli::checks::{self, Check};
use pminors::exactpoly::IntPoly;
use pminors::lie_action::summand_dimension;
use pminors::relation_miner::{census, CensusMode, Coords, MinerConfig};

fn report(c: &Check, started: Instant) -> bool {
    println!("{}  [{:.1?}]", c.line(), started.elapsed());
    c.passed
}

#[test]
fn acceptance() {
    let cfg = MinerConfig::default();
    let mut results: Vec<(u8, bool)> = Vec::new();
    let run = |results: &mut Vec<(u8, bool)>, f: &dyn Fn() -> Check| {
        let t = Instant::now();
        let c = f();
        results.push((c.id, report(&c, t)));
    };

    run(&mut results, &|| checks::transforms(1000, 1));
    run(&mut results, &|| checks::nanson_vanishing(200, true, 1));
    run(&mut results, &checks::census_fast);

    let t = Instant::now();
    let keys = checks::mine_key_components(&cfg);
    let c4 = checks::mining(&keys);
    let ok4 = report(&c4, t);

    let t = Instant::now();
    let full = census(Coords::CycleSums, 7, CensusMode::Orbit, &cfg).expect("census runs");
    let c5 = checks::full_census(&full);
    let ok5 = report(&c5, t);

    let t = Instant::now();
    let gens: Vec<IntPoly> = full.generators.iter().map(|(_, r)| r.poly.clone()).collect();
    let data = keys
        .as_ref()
        .map_err(|e| e.to_string().into())
        .and_then(|k| checks::module_data([&k.d.poly, &k.e.poly, &k.f.poly], &gens));
    // summand dimensions from the Weyl formula, independent of the closure
    if let Ok(d) = &data {
        for (k, base) in [[4, 5, 5, 5], [4, 4, 6, 6], [3, 6, 6, 6]].iter().enumerate() {
            let expected = summand_dimension(base, 12);
            assert_eq!(d.dims[k], expected * d.summands[k].len(), "module {k}");
        }
    }
    let c6 = checks::modules(&data);
    let ok6 = report(&c6, t);
    results.extend([(4, ok4), (5, ok5), (6, ok6)]);

    run(&mut results, &checks::cycle_decomposition);
    run(&mut results, &|| checks::node_check(20, 3));

    if std::env::var_os("PMINORS_SKIP_STRETCH").is_some() {
        println!("[SKIP] criterion 9 (optional stretch): PMINORS_SKIP_STRETCH is set");
    } else {
        let t = Instant::now();
        let c9 = checks::schlafli(true, 1);
        report(&c9, t);
    }

    results.sort();
    let failed: Vec<u8> = results.iter().filter(|(_, ok)| !ok).map(|(id, _)| *id).collect();
    println!("gating criteria: {} passed, {} failed {:?}", results.len() - failed.len(), failed.len(), failed);
    assert!(failed.is_empty(), "criteria {failed:?} failed");
}
