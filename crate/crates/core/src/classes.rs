//! The five triples of 4-letter patterns whose avoiders are counted by the
//! weak sorting sequence, plus the auxiliary pattern sets used in the proofs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::PatternSet;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum PatternClass {
    Pi1,
    Pi2,
    Pi3,
    Pi4,
    Pi5,
}

impl PatternClass {
    pub const ALL: [PatternClass; 5] = [
        PatternClass::Pi1,
        PatternClass::Pi2,
        PatternClass::Pi3,
        PatternClass::Pi4,
        PatternClass::Pi5,
    ];

    pub fn patterns(self) -> PatternSet {
        let triple: [&str; 3] = match self {
            PatternClass::Pi1 => ["1234", "1243", "1342"],
            PatternClass::Pi2 => ["1243", "1324", "1342"],
            PatternClass::Pi3 => ["1324", "1342", "1432"],
            PatternClass::Pi4 => ["2314", "3214", "4213"],
            PatternClass::Pi5 => ["3214", "3241", "4213"],
        };
        PatternSet::from_compact(&triple).expect("static patterns are valid")
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternClass::Pi1 => "pi1",
            PatternClass::Pi2 => "pi2",
            PatternClass::Pi3 => "pi3",
            PatternClass::Pi4 => "pi4",
            PatternClass::Pi5 => "pi5",
        }
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PatternClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse {
                what: "pattern class",
                input: s.to_string(),
                detail: "expected one of pi1, pi2, pi3, pi4, pi5".into(),
            })
    }
}

/// The weak sorting triple {3241, 3421, 4321}.
pub fn weak_sorting() -> PatternSet {
    PatternSet::from_compact(&["3241", "3421", "4321"]).expect("static patterns are valid")
}

/// {3214, 4213}, whose avoiders are in bijection with Schröder paths.
pub fn schroder_pair() -> PatternSet {
    PatternSet::from_compact(&["3214", "4213"]).expect("static patterns are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Symmetry;

    #[test]
    fn weak_sorting_triple_is_in_the_class_of_pi1() {
        assert!(PatternClass::Pi1
            .patterns()
            .orbit()
            .contains(&weak_sorting()));
        assert_eq!(
            Symmetry::INVERSE
                .compose(Symmetry::COMPLEMENT)
                .apply_set(&PatternClass::Pi1.patterns()),
            weak_sorting()
        );
    }

    #[test]
    fn the_five_classes_are_pairwise_inequivalent() {
        let canon: std::collections::BTreeSet<_> = PatternClass::ALL
            .iter()
            .map(|c| c.patterns().canonical())
            .collect();
        assert_eq!(canon.len(), 5);
    }

    #[test]
    fn parse_names() {
        assert_eq!("PI3".parse::<PatternClass>().unwrap(), PatternClass::Pi3);
        assert!("pi6".parse::<PatternClass>().is_err());
    }
}
