//! A small catalog of named sequence specs used by tests, benchmarks and
//! the command line. Names are stable identifiers; the summaries describe
//! the tail behavior in plain words.

use crate::seq::{CoordinateWord, SequenceSpec, Sign};

/// One named spec.
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub spec: SequenceSpec,
}

fn signs(raw: &[i8]) -> Vec<Sign> {
    raw.iter().map(|&v| Sign::from_i8(v).expect("catalog signs are +1/-1")).collect()
}

fn ep(coords: &[(&[i8], &[i8])]) -> SequenceSpec {
    let words = coords
        .iter()
        .map(|(pre, per)| CoordinateWord::new(signs(pre), signs(per)).expect("catalog word"))
        .collect();
    SequenceSpec::eventually_periodic(words).expect("catalog spec")
}

/// All named specs, line examples first, then plane and space examples.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        // --- one-dimensional -------------------------------------------------
        CatalogEntry {
            name: "line-plus",
            summary: "constant +1; one wall, two pools",
            spec: ep(&[(&[], &[1])]),
        },
        CatalogEntry {
            name: "line-minus",
            summary: "constant -1; one wall, two pools",
            spec: ep(&[(&[], &[-1])]),
        },
        CatalogEntry {
            name: "line-alternating",
            summary: "period +1,-1; no walls, a single pool",
            spec: ep(&[(&[], &[1, -1])]),
        },
        CatalogEntry {
            name: "line-four-cycle",
            summary: "period +1,+1,-1,-1; minimal period 4, essential period 2",
            spec: ep(&[(&[], &[1, 1, -1, -1])]),
        },
        CatalogEntry {
            name: "line-three-cycle",
            summary: "period +1,+1,-1 of odd length",
            spec: ep(&[(&[], &[1, 1, -1])]),
        },
        CatalogEntry {
            name: "line-prefixed-plus",
            summary: "preperiod -1,-1 then constant +1; wall away from the origin",
            spec: ep(&[(&[-1, -1], &[1])]),
        },
        CatalogEntry {
            name: "line-prefixed-minus",
            summary: "preperiod +1,+1 then constant -1",
            spec: ep(&[(&[1, 1], &[-1])]),
        },
        CatalogEntry {
            name: "line-mixed-prefix",
            summary: "preperiod -1 then constant +1",
            spec: ep(&[(&[-1], &[1])]),
        },
        CatalogEntry {
            name: "line-five-cycle",
            summary: "period +1,+1,-1,+1,-1 of length five",
            spec: ep(&[(&[], &[1, 1, -1, 1, -1])]),
        },
        CatalogEntry {
            name: "line-four-mix",
            summary: "period +1,-1,-1,+1; palindromic period of length four",
            spec: ep(&[(&[], &[1, -1, -1, 1])]),
        },
        // --- two-dimensional -------------------------------------------------
        CatalogEntry {
            name: "plane-plus",
            summary: "both coordinates constant +1; four pools",
            spec: ep(&[(&[], &[1]), (&[], &[1])]),
        },
        CatalogEntry {
            name: "plane-mixed",
            summary: "coordinates constant +1 and -1; four pools",
            spec: ep(&[(&[], &[1]), (&[], &[-1])]),
        },
        CatalogEntry {
            name: "plane-half",
            summary: "one alternating and one constant coordinate; two pools",
            spec: ep(&[(&[], &[1, -1]), (&[], &[1])]),
        },
        CatalogEntry {
            name: "plane-free",
            summary: "both coordinates alternating; a single pool",
            spec: ep(&[(&[], &[1, -1]), (&[], &[-1, 1])]),
        },
        CatalogEntry {
            name: "plane-prefixed",
            summary: "prefixed constant beside an alternating coordinate",
            spec: ep(&[(&[-1], &[1]), (&[], &[1, -1])]),
        },
        CatalogEntry {
            name: "plane-staggered",
            summary: "three-cycle beside a constant coordinate",
            spec: ep(&[(&[], &[1, 1, -1]), (&[], &[-1])]),
        },
        // --- three-dimensional -----------------------------------------------
        CatalogEntry {
            name: "space-plus",
            summary: "all coordinates constant; eight pools",
            spec: ep(&[(&[], &[1]), (&[], &[-1]), (&[], &[1])]),
        },
        CatalogEntry {
            name: "space-two-walls",
            summary: "two constant coordinates, one alternating; four pools",
            spec: ep(&[(&[], &[1]), (&[], &[-1]), (&[], &[1, -1])]),
        },
        CatalogEntry {
            name: "space-one-wall",
            summary: "one constant coordinate, two alternating; two pools",
            spec: ep(&[(&[], &[1]), (&[], &[1, -1]), (&[], &[-1, 1])]),
        },
        CatalogEntry {
            name: "space-free",
            summary: "all coordinates alternating; a single pool",
            spec: ep(&[(&[], &[1, -1]), (&[], &[-1, 1]), (&[], &[1, -1])]),
        },
        CatalogEntry {
            name: "space-prefixed",
            summary: "a prefixed constant, an alternating and a constant coordinate",
            spec: ep(&[(&[-1], &[1]), (&[], &[1, -1]), (&[], &[-1])]),
        },
    ]
}

/// The one-dimensional entries of the catalog.
pub fn line_catalog() -> Vec<CatalogEntry> {
    catalog().into_iter().filter(|e| e.spec.dim() == 1).collect()
}

/// Looks a spec up by its catalog name.
pub fn by_name(name: &str) -> Option<SequenceSpec> {
    catalog().into_iter().find(|e| e.name == name).map(|e| e.spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn names_are_unique_and_lookup_works() {
        let entries = catalog();
        let names: BTreeSet<&str> = entries.iter().map(|e| e.name).collect();
        assert_eq!(names.len(), entries.len());
        for e in &entries {
            assert_eq!(by_name(e.name).unwrap(), e.spec);
        }
        assert!(by_name("no-such-spec").is_none());
    }

    #[test]
    fn catalog_covers_the_advertised_shapes() {
        let entries = catalog();
        assert_eq!(entries.len(), 21);
        assert_eq!(entries.iter().filter(|e| e.spec.dim() == 1).count(), 10);
        assert_eq!(entries.iter().filter(|e| e.spec.dim() == 2).count(), 6);
        assert_eq!(entries.iter().filter(|e| e.spec.dim() == 3).count(), 5);
        assert_eq!(line_catalog().len(), 10);
    }

    #[test]
    fn every_dimension_reaches_every_pool_exponent() {
        // For each dimension d the catalog realizes every pool count 2^k,
        // 0 <= k <= d.
        use crate::pools::pool_analysis;
        for d in 1..=3usize {
            let mut seen = BTreeSet::new();
            for e in catalog().iter().filter(|e| e.spec.dim() == d) {
                seen.insert(pool_analysis(&e.spec).unwrap().k);
            }
            let want: BTreeSet<usize> = (0..=d).collect();
            assert!(
                seen.is_superset(&want),
                "dimension {d} realizes pool exponents {seen:?}, want {want:?}"
            );
        }
    }
}
