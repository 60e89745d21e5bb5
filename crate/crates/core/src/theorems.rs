//! Closed forms for jellyfish and cocktail party graphs, the explicit
//! witness sets behind them, and a registry of checkable claims.
//!
//! All vertex indices follow the labeling in [`crate::families`]. For
//! `JFG(n, m)` the leaves of cycle vertex `i` are `n + i*m .. n + (i+1)*m`;
//! "last leaf" means the highest index in that range. For `Cay(Z_n, S_k)`
//! with `k = n/2 - 1` the partner of `x` is `x + n/2 mod n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::{jellyfish_leaf, FamilySpec};
use crate::kernel::{Invariant, VertexSet};

fn jfg_guard(n: usize, m: usize) -> Result<()> {
    if n >= 3 && m >= 2 {
        Ok(())
    } else {
        Err(Error::GuardViolated(format!("JFG(n, m) needs n >= 3 and m >= 2, got n={n}, m={m}")))
    }
}

fn cp_guard(n: usize) -> Result<()> {
    if n >= 8 && n.is_multiple_of(2) {
        Ok(())
    } else {
        Err(Error::GuardViolated(format!("Cay(Z_n, S_(n/2-1)) needs even n >= 8, got n={n}")))
    }
}

pub fn jfg_beta(n: usize, m: usize) -> Result<usize> {
    jfg_guard(n, m)?;
    Ok(n * m - n)
}

pub fn jfg_psi(n: usize, m: usize) -> Result<usize> {
    jfg_guard(n, m)?;
    Ok(n * m)
}

pub fn jfg_sdim(n: usize, m: usize) -> Result<usize> {
    jfg_guard(n, m)?;
    Ok(n * m - 1)
}

pub fn jfg_adjdim(n: usize, m: usize) -> Result<usize> {
    jfg_guard(n, m)?;
    Ok(n * m - 1)
}

/// `floor(n/2) + 2`; valid for every jellyfish graph, including `m = 1`.
pub fn jfg_diameter(n: usize, m: usize) -> Result<usize> {
    if n < 3 || m < 1 {
        return Err(Error::GuardViolated(format!(
            "JFG(n, m) needs n >= 3 and m >= 1, got n={n}, m={m}"
        )));
    }
    Ok(n / 2 + 2)
}

/// β = ψ = sdim = n/2 for `Cay(Z_n, S_(n/2-1))`, `n` even, `n >= 8`.
pub fn cp_dimensions(n: usize) -> Result<usize> {
    cp_guard(n)?;
    Ok(n / 2)
}

fn leaves(n: usize, m: usize, keep: impl Fn(usize, usize) -> bool) -> VertexSet {
    let members = (0..n)
        .flat_map(|i| (1..=m).map(move |j| (i, j)))
        .filter(|&(i, j)| keep(i, j))
        .map(|(i, j)| jellyfish_leaf(n, m, i, j))
        .collect();
    VertexSet::new(members).expect("leaf indices are distinct")
}

/// Every leaf except the last leaf of each cycle vertex; size `nm - n`.
pub fn jfg_beta_witness(n: usize, m: usize) -> Result<VertexSet> {
    jfg_guard(n, m)?;
    Ok(leaves(n, m, |_, j| j != m))
}

/// Every leaf; size `nm`.
pub fn jfg_psi_witness(n: usize, m: usize) -> Result<VertexSet> {
    jfg_guard(n, m)?;
    Ok(leaves(n, m, |_, _| true))
}

/// Every leaf except the very last one; size `nm - 1`. Also adjacency
/// resolving.
pub fn jfg_sdim_witness(n: usize, m: usize) -> Result<VertexSet> {
    jfg_guard(n, m)?;
    Ok(leaves(n, m, |i, j| !(i == n - 1 && j == m)))
}

/// `{0, ..., n/2 - 1}`, one vertex from each partner pair.
pub fn cp_witness(n: usize) -> Result<VertexSet> {
    cp_guard(n)?;
    Ok(VertexSet::all(n / 2))
}

/// A set together with the predicate it must pass or fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessFixture {
    pub set: VertexSet,
    pub invariant: Invariant,
    pub expected: bool,
    pub description: &'static str,
}

impl WitnessFixture {
    fn new(set: VertexSet, invariant: Invariant, expected: bool, description: &'static str) -> Self {
        WitnessFixture { set, invariant, expected, description }
    }
}

/// Sets the jellyfish results assert to be resolving of each kind.
pub fn jfg_positive_witnesses(n: usize, m: usize) -> Result<Vec<WitnessFixture>> {
    use Invariant::*;
    Ok(vec![
        WitnessFixture::new(jfg_beta_witness(n, m)?, MetricDim, true, "all leaves but the last of each support"),
        WitnessFixture::new(jfg_sdim_witness(n, m)?, MetricDim, true, "all leaves but one"),
        WitnessFixture::new(jfg_psi_witness(n, m)?, MetricDim, true, "all leaves"),
        WitnessFixture::new(jfg_psi_witness(n, m)?, DoublyDim, true, "all leaves"),
        WitnessFixture::new(jfg_sdim_witness(n, m)?, StrongDim, true, "all leaves but one"),
        WitnessFixture::new(jfg_sdim_witness(n, m)?, AdjacencyDim, true, "all leaves but one"),
    ])
}

/// Sets the jellyfish proofs construct as counterexamples.
pub fn negative_witnesses(n: usize, m: usize) -> Result<Vec<WitnessFixture>> {
    use Invariant::*;
    jfg_guard(n, m)?;
    let cycle = VertexSet::all(n);
    let without_first_support = leaves(n, m, |i, _| i != 0);
    let without_two_last = leaves(n, m, |i, j| !(i == n - 1 && j <= 2));
    let one_short_each = jfg_beta_witness(n, m)?;
    let one_short = jfg_sdim_witness(n, m)?;
    Ok(vec![
        WitnessFixture::new(cycle, MetricDim, false, "the cycle vertices"),
        WitnessFixture::new(without_first_support, MetricDim, false, "leaves of every support but the first"),
        WitnessFixture::new(without_two_last, MetricDim, false, "all leaves but two sharing a support"),
        WitnessFixture::new(one_short_each.clone(), DoublyDim, false, "all leaves but the last of each support"),
        WitnessFixture::new(one_short, DoublyDim, false, "all leaves but one"),
        WitnessFixture::new(one_short_each.clone(), StrongDim, false, "all leaves but the last of each support"),
        WitnessFixture::new(one_short_each, AdjacencyDim, false, "all leaves but the last of each support"),
    ])
}

pub fn cp_positive_witnesses(n: usize) -> Result<Vec<WitnessFixture>> {
    use Invariant::*;
    let w = cp_witness(n)?;
    Ok([MetricDim, DoublyDim, StrongDim, AdjacencyDim]
        .into_iter()
        .map(|inv| WitnessFixture::new(w.clone(), inv, true, "one vertex from each partner pair"))
        .collect())
}

/// `{0..k-1}` and `{0..k-1} ∪ {k+1}` with `k = n/2 - 1`: both leave a
/// partner pair uncovered.
pub fn cp_negative_witnesses(n: usize) -> Result<Vec<WitnessFixture>> {
    cp_guard(n)?;
    let k = n / 2 - 1;
    let short = VertexSet::all(k);
    let mut with_partner: Vec<usize> = (0..k).collect();
    with_partner.push(k + 1);
    Ok(vec![
        WitnessFixture::new(short, Invariant::MetricDim, false, "a clique of size n/2 - 1"),
        WitnessFixture::new(
            VertexSet::new(with_partner)?,
            Invariant::MetricDim,
            false,
            "a clique of size n/2 - 1 plus the partner of its first vertex",
        ),
    ])
}

/// Closed-form value for a family instance, when a formula covers it.
///
/// Cocktail party instances in any realization (`cp:r`, `cayley-zn:2r,r-1`,
/// `cayley-d2n:r`) use the cyclic result with `n = 2r`; adjacency
/// dimension agrees with metric dimension there since the diameter is 2.
pub fn predicted_value(spec: &FamilySpec, invariant: Invariant) -> Option<usize> {
    let cp_order = match *spec {
        FamilySpec::Jellyfish { n, m } => {
            return match invariant {
                Invariant::MetricDim => jfg_beta(n, m),
                Invariant::DoublyDim => jfg_psi(n, m),
                Invariant::StrongDim => jfg_sdim(n, m),
                Invariant::AdjacencyDim => jfg_adjdim(n, m),
            }
            .ok();
        }
        FamilySpec::CayleyZn { n, k } if n % 2 == 0 && k + 1 == n / 2 => n,
        FamilySpec::CocktailParty { r } | FamilySpec::CayleyDihedral { n: r } => 2 * r,
        _ => return None,
    };
    cp_dimensions(cp_order).ok()
}

/// The checkable claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremClaim {
    JfgBeta,
    JfgPsi,
    JfgSdim,
    JfgAdjdim,
    JfgDiam,
    CpBeta,
    CpPsi,
    CpSdim,
    CpDiam,
    CpIsoZn,
    CpIsoD2n,
}

impl TheoremClaim {
    pub const ALL: [TheoremClaim; 11] = [
        TheoremClaim::JfgBeta,
        TheoremClaim::JfgPsi,
        TheoremClaim::JfgSdim,
        TheoremClaim::JfgAdjdim,
        TheoremClaim::JfgDiam,
        TheoremClaim::CpBeta,
        TheoremClaim::CpPsi,
        TheoremClaim::CpSdim,
        TheoremClaim::CpDiam,
        TheoremClaim::CpIsoZn,
        TheoremClaim::CpIsoD2n,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremClaim::JfgBeta => "JFG-beta",
            TheoremClaim::JfgPsi => "JFG-psi",
            TheoremClaim::JfgSdim => "JFG-sdim",
            TheoremClaim::JfgAdjdim => "JFG-adjdim",
            TheoremClaim::JfgDiam => "JFG-diam",
            TheoremClaim::CpBeta => "CP-beta",
            TheoremClaim::CpPsi => "CP-psi",
            TheoremClaim::CpSdim => "CP-sdim",
            TheoremClaim::CpDiam => "CP-diam",
            TheoremClaim::CpIsoZn => "CP-iso-zn",
            TheoremClaim::CpIsoD2n => "CP-iso-d2n",
        }
    }

    pub fn invariant(self) -> Option<Invariant> {
        match self {
            TheoremClaim::JfgBeta | TheoremClaim::CpBeta => Some(Invariant::MetricDim),
            TheoremClaim::JfgPsi | TheoremClaim::CpPsi => Some(Invariant::DoublyDim),
            TheoremClaim::JfgSdim | TheoremClaim::CpSdim => Some(Invariant::StrongDim),
            TheoremClaim::JfgAdjdim => Some(Invariant::AdjacencyDim),
            _ => None,
        }
    }

    pub fn subject(self) -> &'static str {
        match self {
            TheoremClaim::JfgBeta
            | TheoremClaim::JfgPsi
            | TheoremClaim::JfgSdim
            | TheoremClaim::JfgAdjdim
            | TheoremClaim::JfgDiam => "JFG(n, m)",
            TheoremClaim::CpBeta | TheoremClaim::CpPsi | TheoremClaim::CpSdim => {
                "Cay(Z_n, S_(n/2-1))"
            }
            TheoremClaim::CpDiam => "CP(r)",
            TheoremClaim::CpIsoZn => "Cay(Z_n, S_(n/2-1)) vs CP(n/2)",
            TheoremClaim::CpIsoD2n => "Cay(D_2n, Omega) vs CP(n)",
        }
    }

    pub fn guard_text(self) -> &'static str {
        match self {
            TheoremClaim::JfgBeta
            | TheoremClaim::JfgPsi
            | TheoremClaim::JfgSdim
            | TheoremClaim::JfgAdjdim => "n >= 3, m >= 2",
            TheoremClaim::JfgDiam => "n >= 3, m >= 1",
            TheoremClaim::CpBeta | TheoremClaim::CpPsi | TheoremClaim::CpSdim => {
                "n even, n >= 8"
            }
            TheoremClaim::CpDiam => "r >= 2",
            TheoremClaim::CpIsoZn => "n even, n >= 4",
            TheoremClaim::CpIsoD2n => "n >= 2",
        }
    }

    pub fn formula_text(self) -> &'static str {
        match self {
            TheoremClaim::JfgBeta => "beta = nm - n",
            TheoremClaim::JfgPsi => "psi = nm",
            TheoremClaim::JfgSdim => "sdim = nm - 1",
            TheoremClaim::JfgAdjdim => "adjdim = nm - 1",
            TheoremClaim::JfgDiam => "diameter = floor(n/2) + 2",
            TheoremClaim::CpBeta => "beta = n/2",
            TheoremClaim::CpPsi => "psi = n/2",
            TheoremClaim::CpSdim => "sdim = n/2",
            TheoremClaim::CpDiam => "diameter = 2",
            TheoremClaim::CpIsoZn | TheoremClaim::CpIsoD2n => "isomorphic",
        }
    }

    pub fn guard(self, params: &[usize]) -> bool {
        match (self, params) {
            (
                TheoremClaim::JfgBeta
                | TheoremClaim::JfgPsi
                | TheoremClaim::JfgSdim
                | TheoremClaim::JfgAdjdim,
                &[n, m],
            ) => jfg_guard(n, m).is_ok(),
            (TheoremClaim::JfgDiam, &[n, m]) => n >= 3 && m >= 1,
            (TheoremClaim::CpBeta | TheoremClaim::CpPsi | TheoremClaim::CpSdim, &[n]) => {
                cp_guard(n).is_ok()
            }
            (TheoremClaim::CpDiam, &[r]) => r >= 2,
            (TheoremClaim::CpIsoZn, &[n]) => n >= 4 && n % 2 == 0,
            (TheoremClaim::CpIsoD2n, &[n]) => n >= 2,
            _ => false,
        }
    }

    /// Closed-form value; for isomorphism claims this is 1 (true).
    pub fn formula(self, params: &[usize]) -> Result<usize> {
        if !self.guard(params) {
            return Err(Error::GuardViolated(format!(
                "{} requires {}, got {:?}",
                self.id(),
                self.guard_text(),
                params
            )));
        }
        Ok(match (self, params) {
            (TheoremClaim::JfgBeta, &[n, m]) => jfg_beta(n, m)?,
            (TheoremClaim::JfgPsi, &[n, m]) => jfg_psi(n, m)?,
            (TheoremClaim::JfgSdim, &[n, m]) => jfg_sdim(n, m)?,
            (TheoremClaim::JfgAdjdim, &[n, m]) => jfg_adjdim(n, m)?,
            (TheoremClaim::JfgDiam, &[n, m]) => jfg_diameter(n, m)?,
            (TheoremClaim::CpBeta | TheoremClaim::CpPsi | TheoremClaim::CpSdim, &[n]) => {
                cp_dimensions(n)?
            }
            (TheoremClaim::CpDiam, _) => 2,
            _ => 1,
        })
    }

    /// The instance(s) a parameter tuple refers to. Isomorphism claims
    /// return both sides.
    pub fn instances(self, params: &[usize]) -> Vec<FamilySpec> {
        match (self, params) {
            (_, &[n, m]) => vec![FamilySpec::Jellyfish { n, m }],
            (TheoremClaim::CpDiam, &[r]) => vec![FamilySpec::CocktailParty { r }],
            (TheoremClaim::CpIsoZn, &[n]) => vec![
                FamilySpec::CayleyZn { n, k: n / 2 - 1 },
                FamilySpec::CocktailParty { r: n / 2 },
            ],
            (TheoremClaim::CpIsoD2n, &[n]) => {
                vec![FamilySpec::CayleyDihedral { n }, FamilySpec::CocktailParty { r: n }]
            }
            (_, &[n]) => vec![FamilySpec::CayleyZn { n, k: n / 2 - 1 }],
            _ => Vec::new(),
        }
    }

    /// Parameters checked by a default verification run.
    pub fn default_params(self) -> Vec<Vec<usize>> {
        let grid = |ns: &[usize], ms: &[usize]| -> Vec<Vec<usize>> {
            ns.iter().flat_map(|&n| ms.iter().map(move |&m| vec![n, m])).collect()
        };
        match self {
            TheoremClaim::JfgBeta
            | TheoremClaim::JfgPsi
            | TheoremClaim::JfgSdim
            | TheoremClaim::JfgAdjdim => grid(&[3, 4, 5], &[2, 3]),
            TheoremClaim::JfgDiam => grid(&[3, 4, 5, 6, 7, 8], &[1, 2, 3]),
            TheoremClaim::CpBeta | TheoremClaim::CpPsi | TheoremClaim::CpSdim => {
                vec![vec![8], vec![10], vec![12]]
            }
            TheoremClaim::CpDiam => (2..=8).map(|r| vec![r]).collect(),
            TheoremClaim::CpIsoZn => [8, 10, 12, 14, 16].iter().map(|&n| vec![n]).collect(),
            TheoremClaim::CpIsoD2n => (2..=8).map(|n| vec![n]).collect(),
        }
    }

    /// Positive witnesses attached to this claim.
    pub fn positive_witnesses(self, params: &[usize]) -> Result<Vec<WitnessFixture>> {
        let Some(inv) = self.invariant() else {
            return Ok(Vec::new());
        };
        let all = match params {
            [n, m] => jfg_positive_witnesses(*n, *m)?,
            [n] => cp_positive_witnesses(*n)?,
            _ => Vec::new(),
        };
        Ok(all.into_iter().filter(|w| w.invariant == inv).collect())
    }

    pub fn negative_witnesses(self, params: &[usize]) -> Result<Vec<WitnessFixture>> {
        let Some(inv) = self.invariant() else {
            return Ok(Vec::new());
        };
        let all = match params {
            [n, m] => negative_witnesses(*n, *m)?,
            [n] => cp_negative_witnesses(*n)?,
            _ => Vec::new(),
        };
        Ok(all.into_iter().filter(|w| w.invariant == inv).collect())
    }
}

impl fmt::Display for TheoremClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremClaim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremClaim::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidParam(format!("unknown claim `{s}`")))
    }
}
