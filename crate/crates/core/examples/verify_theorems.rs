//! Runs the claim registry and prints a one-line summary per claim.

use std::collections::BTreeMap;

use resolvedim::harness::{claim_listing, verify_claims};
use resolvedim::{Solver, TheoremClaim};

fn main() {
    println!("{}\n", claim_listing());
    let outcomes = verify_claims(&TheoremClaim::ALL, &Solver::default());
    let mut tally: BTreeMap<TheoremClaim, (usize, usize)> = BTreeMap::new();
    for o in &outcomes {
        let t = tally.entry(o.claim).or_default();
        t.0 += o.passed as usize;
        t.1 += 1;
        if !o.passed {
            println!("{o}");
        }
    }
    for (claim, (passed, total)) in tally {
        let status = if passed == total { "PASS" } else { "FAIL" };
        println!("{status} {claim:<10} {passed}/{total} checks");
    }
}
