//! Generators for the graph families studied here.
//!
//! Labeling conventions are fixed so witness sets can name exact indices:
//!
//! * jellyfish `JFG(n, m)`: cycle vertex `i` is index `i` (`0 <= i < n`);
//!   leaf `j` (`1 <= j <= m`) hanging off cycle vertex `i` is index
//!   `n + i*m + (j - 1)`.
//! * cocktail party `CP(r)`: vertex `2t` is paired with `2t + 1`.
//! * `Cay(Z_n, S_k)`: the group element `x` is index `x`.
//! * `Cay(D_2n, Omega)`: `a^i` is index `i`, `a^i b` is index `n + i`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Cycle,
    Complete,
    Jellyfish,
    CocktailParty,
    CayleyZn,
    CayleyDihedral,
}

impl FamilyKind {
    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::Jellyfish => "jfg",
            FamilyKind::CocktailParty => "cp",
            FamilyKind::CayleyZn => "cayley-zn",
            FamilyKind::CayleyDihedral => "cayley-d2n",
        }
    }

    fn arity(self) -> usize {
        match self {
            FamilyKind::Jellyfish | FamilyKind::CayleyZn => 2,
            _ => 1,
        }
    }
}

/// A parametrized family member, e.g. `jfg:3,2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Cycle { n: usize },
    Complete { n: usize },
    Jellyfish { n: usize, m: usize },
    CocktailParty { r: usize },
    CayleyZn { n: usize, k: usize },
    CayleyDihedral { n: usize },
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Cycle { .. } => FamilyKind::Cycle,
            FamilySpec::Complete { .. } => FamilyKind::Complete,
            FamilySpec::Jellyfish { .. } => FamilyKind::Jellyfish,
            FamilySpec::CocktailParty { .. } => FamilyKind::CocktailParty,
            FamilySpec::CayleyZn { .. } => FamilyKind::CayleyZn,
            FamilySpec::CayleyDihedral { .. } => FamilyKind::CayleyDihedral,
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::CayleyDihedral { n } => vec![n],
            FamilySpec::CocktailParty { r } => vec![r],
            FamilySpec::Jellyfish { n, m } => vec![n, m],
            FamilySpec::CayleyZn { n, k } => vec![n, k],
        }
    }

    /// Checks the parameter constraints of the family.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParam(msg));
        match *self {
            FamilySpec::Cycle { n } if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::Complete { n } if n < 1 => bad("complete graph needs n >= 1".into()),
            FamilySpec::Jellyfish { n, m } if n < 3 || m < 1 => {
                bad(format!("jellyfish needs n >= 3 and m >= 1, got n={n}, m={m}"))
            }
            FamilySpec::CocktailParty { r } if r < 2 => {
                bad(format!("cocktail party needs r >= 2, got {r}"))
            }
            FamilySpec::CayleyZn { n, k } if n < 4 || k < 1 || k + 1 > n / 2 => bad(format!(
                "Cay(Z_n, S_k) needs n >= 4 and 1 <= k <= floor(n/2) - 1, got n={n}, k={k}"
            )),
            FamilySpec::CayleyDihedral { n } if n < 2 => {
                bad(format!("Cay(D_2n, Omega) needs n >= 2, got {n}"))
            }
            _ => Ok(()),
        }
    }

    /// Number of vertices the generated graph will have.
    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Cycle { n } | FamilySpec::Complete { n } | FamilySpec::CayleyZn { n, .. } => n,
            FamilySpec::Jellyfish { n, m } => n * (m + 1),
            FamilySpec::CocktailParty { r } => 2 * r,
            FamilySpec::CayleyDihedral { n } => 2 * n,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Cycle { n } => gen_cycle(n),
            FamilySpec::Complete { n } => gen_complete(n),
            FamilySpec::Jellyfish { n, m } => gen_jellyfish(n, m),
            FamilySpec::CocktailParty { r } => gen_cocktail_party(r),
            FamilySpec::CayleyZn { n, k } => gen_cayley_zn(n, k),
            FamilySpec::CayleyDihedral { n } => gen_cayley_dihedral(n),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(usize::to_string).collect();
        write!(f, "{}:{}", self.kind().tag(), params.join(","))
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "cycle" => FamilyKind::Cycle,
            "complete" => FamilyKind::Complete,
            "jfg" => FamilyKind::Jellyfish,
            "cp" => FamilyKind::CocktailParty,
            "cayley-zn" => FamilyKind::CayleyZn,
            "cayley-d2n" => FamilyKind::CayleyDihedral,
            other => return Err(Error::InvalidSpec(other.to_string())),
        })
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `cycle:n`, `complete:n`, `jfg:n,m`, `cp:r`, `cayley-zn:n,k`
    /// or `cayley-d2n:n`. The parameters are validated.
    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidSpec(s.to_string());
        let (tag, rest) = s.split_once(':').ok_or_else(invalid)?;
        let kind: FamilyKind = tag.parse().map_err(|_| invalid())?;
        let params = rest
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| invalid())?;
        if params.len() != kind.arity() {
            return Err(invalid());
        }
        let spec = match kind {
            FamilyKind::Cycle => FamilySpec::Cycle { n: params[0] },
            FamilyKind::Complete => FamilySpec::Complete { n: params[0] },
            FamilyKind::Jellyfish => FamilySpec::Jellyfish { n: params[0], m: params[1] },
            FamilyKind::CocktailParty => FamilySpec::CocktailParty { r: params[0] },
            FamilyKind::CayleyZn => FamilySpec::CayleyZn { n: params[0], k: params[1] },
            FamilyKind::CayleyDihedral => FamilySpec::CayleyDihedral { n: params[0] },
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    FamilySpec::Cycle { n }.validate()?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    FamilySpec::Complete { n }.validate()?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Index of leaf `j` (1-based) attached to cycle vertex `i` (0-based).
pub fn jellyfish_leaf(n: usize, m: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < n && (1..=m).contains(&j));
    n + i * m + (j - 1)
}

/// `C_n` with `m` pendant leaves on every cycle vertex.
pub fn gen_jellyfish(n: usize, m: usize) -> Result<Graph> {
    FamilySpec::Jellyfish { n, m }.validate()?;
    let cycle = (0..n).map(|i| (i, (i + 1) % n));
    let pendants =
        (0..n).flat_map(|i| (1..=m).map(move |j| (i, jellyfish_leaf(n, m, i, j))));
    let mut labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    for i in 1..=n {
        for j in 1..=m {
            labels.push(format!("v{i},{j}"));
        }
    }
    Graph::new(n * (m + 1), cycle.chain(pendants))?.with_labels(labels)
}

/// Partner of `x` in `CP(r)`.
pub fn cocktail_partner(x: usize) -> usize {
    x ^ 1
}

/// `K_2r` minus the perfect matching `{2t, 2t+1}`.
pub fn gen_cocktail_party(r: usize) -> Result<Graph> {
    FamilySpec::CocktailParty { r }.validate()?;
    let n = 2 * r;
    Graph::new(
        n,
        (0..n).flat_map(|u| (u + 1..n).filter(move |&v| v != cocktail_partner(u)).map(move |v| (u, v))),
    )
}

/// Circulant graph with connection set `{1..k} ∪ {n-k..n-1}`.
pub fn gen_cayley_zn(n: usize, k: usize) -> Result<Graph> {
    FamilySpec::CayleyZn { n, k }.validate()?;
    let in_set = |s: usize| (1..=k).contains(&s) || (n - k..n).contains(&s);
    Graph::new(
        n,
        (0..n).flat_map(|x| (x + 1..n).filter(move |&y| in_set((y + n - x) % n)).map(move |y| (x, y))),
    )
}

/// Element `a^rotation b^reflection` of the dihedral group of order `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dihedral {
    pub rotation: usize,
    pub reflection: bool,
}

impl Dihedral {
    pub fn from_index(n: usize, idx: usize) -> Self {
        Dihedral { rotation: idx % n, reflection: idx >= n }
    }

    pub fn index(self, n: usize) -> usize {
        self.rotation + if self.reflection { n } else { 0 }
    }

    /// Group product using `b a = a^{n-1} b`.
    pub fn mul(self, other: Self, n: usize) -> Self {
        let rotation = if self.reflection {
            (self.rotation + n - other.rotation) % n
        } else {
            (self.rotation + other.rotation) % n
        };
        Dihedral { rotation, reflection: self.reflection ^ other.reflection }
    }

    pub fn inverse(self, n: usize) -> Self {
        if self.reflection {
            self
        } else {
            Dihedral { rotation: (n - self.rotation) % n, reflection: false }
        }
    }

    fn label(self) -> String {
        match (self.rotation, self.reflection) {
            (0, false) => "1".into(),
            (0, true) => "b".into(),
            (1, false) => "a".into(),
            (1, true) => "ab".into(),
            (i, false) => format!("a^{i}"),
            (i, true) => format!("a^{i}b"),
        }
    }
}

/// `Omega = {a, ..., a^{n-1}, ab, ..., a^{n-1}b}`.
pub fn dihedral_connection_set(n: usize) -> Vec<Dihedral> {
    let rotations = (1..n).map(|i| Dihedral { rotation: i, reflection: false });
    let reflections = (1..n).map(|i| Dihedral { rotation: i, reflection: true });
    rotations.chain(reflections).collect()
}

/// `Cay(D_2n, Omega)`: `x ~ y` iff `x^{-1} y` lies in `Omega`.
pub fn gen_cayley_dihedral(n: usize) -> Result<Graph> {
    FamilySpec::CayleyDihedral { n }.validate()?;
    let order = 2 * n;
    let omega = dihedral_connection_set(n);
    let mut edges = Vec::new();
    for i in 0..order {
        let x_inv = Dihedral::from_index(n, i).inverse(n);
        for j in i + 1..order {
            if omega.contains(&x_inv.mul(Dihedral::from_index(n, j), n)) {
                edges.push((i, j));
            }
        }
    }
    let labels = (0..order).map(|i| Dihedral::from_index(n, i).label()).collect();
    Graph::new(order, edges)?.with_labels(labels)
}
