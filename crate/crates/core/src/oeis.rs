//! A small OEIS b-file client. Offline lookups read fixtures compiled into
//! the binary; online lookups fetch `b<digits>.txt`, keep a copy in a cache
//! directory and read from there on later calls.
//!
//! `PERMCLASS_OEIS_CACHE` overrides the cache directory and
//! `PERMCLASS_OEIS_URL` the server (default `https://oeis.org`).

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub const CACHE_ENV: &str = "PERMCLASS_OEIS_CACHE";
pub const URL_ENV: &str = "PERMCLASS_OEIS_URL";
pub const DEFAULT_URL: &str = "https://oeis.org";

const FIXTURES: [(&str, &str); 4] = [
    ("A006318", include_str!("../fixtures/oeis/b006318.txt")),
    ("A026671", include_str!("../fixtures/oeis/b026671.txt")),
    ("A060693", include_str!("../fixtures/oeis/b060693.txt")),
    ("A111279", include_str!("../fixtures/oeis/b111279.txt")),
];

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Source {
    #[default]
    Offline,
    Online,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OeisSequence {
    pub id: String,
    /// Index of the first term.
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

impl OeisSequence {
    /// The term with index `n`, if present.
    pub fn term(&self, n: i64) -> Option<&BigInt> {
        usize::try_from(n - self.offset)
            .ok()
            .and_then(|i| self.terms.get(i))
    }
}

pub fn validate_id(id: &str) -> Result<()> {
    let ok = id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(Error::MalformedOeisId(id.to_string()))
    }
}

/// Parses "index value" lines; `#` comments and blank lines are skipped and
/// the indices must run without gaps.
pub fn parse_bfile(id: &str, text: &str) -> Result<OeisSequence> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |detail: String| Error::BFile {
            line: lineno + 1,
            detail,
        };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad(format!("expected \"index value\", got {line:?}")));
        };
        let index: i64 = index
            .parse()
            .map_err(|_| bad(format!("index {index:?} is not an integer")))?;
        let value: BigInt = value
            .parse()
            .map_err(|_| bad(format!("value {value:?} is not an integer")))?;
        let start = *offset.get_or_insert(index);
        let expected = start + terms.len() as i64;
        if index != expected {
            return Err(bad(format!(
                "index {index} breaks the run, expected {expected}"
            )));
        }
        terms.push(value);
    }
    let Some(offset) = offset else {
        return Err(Error::BFile {
            line: text.lines().count(),
            detail: "no terms".into(),
        });
    };
    Ok(OeisSequence {
        id: id.to_string(),
        offset,
        terms,
    })
}

pub fn bundled_ids() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(id, _)| *id)
}

pub fn fixture(id: &str) -> Result<OeisSequence> {
    validate_id(id)?;
    let (_, text) = FIXTURES
        .iter()
        .find(|(fid, _)| *fid == id)
        .ok_or_else(|| Error::UnknownOeisId(id.to_string()))?;
    parse_bfile(id, text)
}

#[derive(Clone, Debug)]
pub struct OeisClient {
    base_url: String,
    cache_dir: PathBuf,
}

impl OeisClient {
    pub fn new(base_url: impl Into<String>, cache_dir: impl Into<PathBuf>) -> Self {
        OeisClient {
            base_url: base_url.into().trim_end_matches('/').to_string(),
            cache_dir: cache_dir.into(),
        }
    }

    pub fn from_env() -> Self {
        let base = std::env::var(URL_ENV).unwrap_or_else(|_| DEFAULT_URL.to_string());
        let cache = std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| std::env::temp_dir().join("permclass-oeis"));
        OeisClient::new(base, cache)
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    pub fn url(&self, id: &str) -> String {
        format!("{}/{}/b{}.txt", self.base_url, id, &id[1..])
    }

    pub fn cache_path(&self, id: &str) -> PathBuf {
        self.cache_dir.join(format!("b{}.txt", &id[1..]))
    }

    pub fn fetch(&self, id: &str) -> Result<OeisSequence> {
        validate_id(id)?;
        let path = self.cache_path(id);
        if let Ok(text) = fs::read_to_string(&path) {
            return parse_bfile(id, &text);
        }
        let url = self.url(id);
        let network = |detail: String| Error::Network {
            url: url.clone(),
            detail,
        };
        let mut response = ureq::get(&url).call().map_err(|e| network(e.to_string()))?;
        let text = response
            .body_mut()
            .read_to_string()
            .map_err(|e| network(e.to_string()))?;
        let seq = parse_bfile(id, &text)?;
        fs::create_dir_all(&self.cache_dir)?;
        fs::write(&path, &text)?;
        Ok(seq)
    }
}

pub fn oeis_get(id: &str, source: Source) -> Result<OeisSequence> {
    match source {
        Source::Offline => fixture(id),
        Source::Online => OeisClient::from_env().fetch(id),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(seq: &OeisSequence, k: usize) -> Vec<u64> {
        seq.terms[..k]
            .iter()
            .map(|t| u64::try_from(t).unwrap())
            .collect()
    }

    #[test]
    fn fixtures_load() {
        let r = fixture("A006318").unwrap();
        assert_eq!(r.offset, 0);
        assert_eq!(small(&r, 7), [1, 2, 6, 22, 90, 394, 1806]);
        let w = fixture("A111279").unwrap();
        assert_eq!(small(&w, 9), [1, 1, 2, 6, 21, 79, 309, 1237, 5026]);
        assert_eq!(w.term(4), Some(&BigInt::from(21)));
        for id in bundled_ids() {
            assert!(fixture(id).is_ok(), "{id}");
        }
    }

    #[test]
    fn ids_are_checked() {
        assert!(matches!(fixture("A000000"), Err(Error::UnknownOeisId(_))));
        for bad in ["A12345", "B123456", "A12345x", "a111279", ""] {
            assert!(
                matches!(validate_id(bad), Err(Error::MalformedOeisId(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn parser_reports_line_numbers() {
        let seq = parse_bfile("A000001", "# head\n\n3 5\n4 -7\n").unwrap();
        assert_eq!(seq.offset, 3);
        assert_eq!(seq.terms, [BigInt::from(5), BigInt::from(-7)]);
        assert!(matches!(
            parse_bfile("A000001", "0 1\n1 x\n"),
            Err(Error::BFile { line: 2, .. })
        ));
        assert!(matches!(
            parse_bfile("A000001", "0 1\n# gap\n2 1\n"),
            Err(Error::BFile { line: 3, .. })
        ));
        assert!(matches!(
            parse_bfile("A000001", "0 1 2\n"),
            Err(Error::BFile { line: 1, .. })
        ));
        assert!(parse_bfile("A000001", "# nothing\n").is_err());
    }

    #[test]
    fn client_paths() {
        let c = OeisClient::new("http://host:1/", "/tmp/x");
        assert_eq!(c.url("A006318"), "http://host:1/A006318/b006318.txt");
        assert_eq!(c.cache_path("A006318"), PathBuf::from("/tmp/x/b006318.txt"));
    }
}
