//! Built-in groups: small 2-groups and a few ambient groups with the primes
//! they are usually studied at.

use crate::error::{Error, Result};
use crate::permgroup::{generate_group, Group, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub degree: usize,
    /// Generators in 1-based disjoint-cycle notation.
    pub generators: &'static [&'static str],
    /// Primes of interest; the first is the default.
    pub primes: &'static [u64],
}

impl CatalogEntry {
    pub fn permutations(&self) -> Result<Vec<Permutation>> {
        self.generators
            .iter()
            .map(|g| Permutation::parse_cycles(self.degree, g))
            .collect()
    }

    pub fn build(&self) -> Result<Group> {
        generate_group(self.degree, &self.permutations()?)
    }

    pub fn default_prime(&self) -> u64 {
        self.primes[0]
    }

    pub fn is_p_group(&self) -> bool {
        P_GROUPS.contains(&self.name)
    }
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "C2",
        degree: 2,
        generators: &["(1 2)"],
        primes: &[2],
    },
    CatalogEntry {
        name: "C4",
        degree: 4,
        generators: &["(1 2 3 4)"],
        primes: &[2],
    },
    CatalogEntry {
        name: "C2xC2",
        degree: 4,
        generators: &["(1 2)", "(3 4)"],
        primes: &[2],
    },
    CatalogEntry {
        name: "C8",
        degree: 8,
        generators: &["(1 2 3 4 5 6 7 8)"],
        primes: &[2],
    },
    CatalogEntry {
        name: "D8",
        degree: 4,
        generators: &["(1 2 3 4)", "(1 3)"],
        primes: &[2],
    },
    // regular representation: i and j
    CatalogEntry {
        name: "Q8",
        degree: 8,
        generators: &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"],
        primes: &[2],
    },
    CatalogEntry {
        name: "C2xC4",
        degree: 6,
        generators: &["(1 2)", "(3 4 5 6)"],
        primes: &[2],
    },
    CatalogEntry {
        name: "D16",
        degree: 8,
        generators: &["(1 2 3 4 5 6 7 8)", "(2 8)(3 7)(4 6)"],
        primes: &[2],
    },
    CatalogEntry {
        name: "S3",
        degree: 3,
        generators: &["(1 2)", "(1 2 3)"],
        primes: &[3, 2],
    },
    CatalogEntry {
        name: "S4",
        degree: 4,
        generators: &["(1 2)", "(1 2 3 4)"],
        primes: &[2, 3],
    },
    CatalogEntry {
        name: "S5",
        degree: 5,
        generators: &["(1 2)", "(1 2 3 4 5)"],
        primes: &[2, 3, 5],
    },
    CatalogEntry {
        name: "A4",
        degree: 4,
        generators: &["(1 2 3)", "(1 2)(3 4)"],
        primes: &[2, 3],
    },
];

/// Names of the 2-groups in the catalog.
pub const P_GROUPS: &[&str] = &["C2", "C4", "C2xC2", "C8", "D8", "Q8", "C2xC4", "D16"];

/// The (ambient group, prime) pairs in the catalog.
pub const AMBIENT_PAIRS: &[(&str, u64)] = &[("S4", 2), ("S5", 2), ("S5", 3), ("S3", 3), ("A4", 2)];

pub fn catalog() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn lookup(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownCatalog {
            name: name.to_string(),
            available: ENTRIES
                .iter()
                .map(|e| e.name)
                .collect::<Vec<_>>()
                .join(", "),
        })
}
