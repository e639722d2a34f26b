//! Braid words and their closures.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the Artin generators on `strands` strands. Letter `i > 0` is
/// `σ_i`, letter `-i` is `σ_i^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBraid", into = "RawBraid")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawBraid {
    strands: usize,
    word: Vec<i64>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = Error;

    fn try_from(raw: RawBraid) -> Result<Self> {
        BraidWord::new(raw.strands, raw.word)
    }
}

impl From<BraidWord> for RawBraid {
    fn from(b: BraidWord) -> Self {
        RawBraid {
            strands: b.strands,
            word: b.letters,
        }
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::BraidIndex { letter: bad, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Permutation of strand positions: strand starting at `i` ends at `perm[i]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let g = l.unsigned_abs() as usize;
            for p in pos.iter_mut() {
                if *p == g - 1 {
                    *p = g;
                } else if *p == g {
                    *p = g - 1;
                }
            }
        }
        pos
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    /// Conjugate by `σ_g^{±1}`, a Markov move preserving the closure.
    pub fn conjugate(&self, letter: i64) -> Result<Self> {
        let mut w = Vec::with_capacity(self.letters.len() + 2);
        w.push(letter);
        w.extend_from_slice(&self.letters);
        w.push(-letter);
        BraidWord::new(self.strands, w)
    }
}

/// `(σ_1 σ_2 ... σ_{p-1})^q` on `p` strands, whose closure is the torus link `T(p, q)`.
pub fn torus_braid(p: usize, q: usize) -> Result<BraidWord> {
    if p < 2 || q < 2 {
        return Err(Error::TorusParameters(p, q));
    }
    let letters = (0..q).flat_map(|_| 1..p as i64).collect();
    BraidWord::new(p, letters)
}

pub fn closure_components(b: &BraidWord) -> usize {
    b.closure_components()
}

/// Parse `"strands=3; 1 2 -1"`. Letters are integers or `s<k>`, `s<k>^-1`,
/// `s<k>^<e>`; they may be separated by whitespace or commas.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let (head, body) = text
        .split_once(';')
        .ok_or_else(|| Error::Parse("expected \"strands=<n>; <letters>\"".into()))?;
    let (key, value) = head
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("malformed strand count {:?}", head.trim())))?;
    if key.trim() != "strands" {
        return Err(Error::Parse(format!("unknown key {:?}", key.trim())));
    }
    let strands: usize = value
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid strand count {:?}", value.trim())))?;
    let mut letters = Vec::new();
    for tok in body
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
    {
        letters.extend(parse_token(tok)?);
    }
    BraidWord::new(strands, letters)
}

fn parse_token(tok: &str) -> Result<Vec<i64>> {
    let bad = || Error::Parse(format!("malformed braid letter {tok:?}"));
    if let Ok(v) = tok.parse::<i64>() {
        return if v == 0 { Err(bad()) } else { Ok(vec![v]) };
    }
    let rest = tok
        .strip_prefix('s')
        .or_else(|| tok.strip_prefix('S'))
        .ok_or_else(bad)?;
    let (gen, exp) = match rest.split_once('^') {
        Some((g, e)) => (g, e.parse::<i64>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    let gen: i64 = gen.parse().map_err(|_| bad())?;
    if gen <= 0 || exp == 0 {
        return Err(bad());
    }
    let letter = if exp > 0 { gen } else { -gen };
    Ok(vec![letter; exp.unsigned_abs() as usize])
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strands={};", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let b = parse_braid("strands=3; 1 2 1 2 1 2 1 2 1 2").unwrap();
        assert_eq!(b, torus_braid(3, 5).unwrap());
        let b = parse_braid("strands=2; 1 1 1").unwrap();
        assert_eq!(b.letters(), &[1, 1, 1]);
        assert!(matches!(
            parse_braid("strands=3; 5"),
            Err(Error::BraidIndex { letter: 5, strands: 3 })
        ));
        assert!(matches!(parse_braid("strands=0;"), Err(Error::NoStrands)));
    }

    #[test]
    fn parses_generator_tokens() {
        let b = parse_braid("strands = 4; s1 s2^-1, s3^2 -1").unwrap();
        assert_eq!(b.letters(), &[1, -2, 3, 3, -1]);
        assert!(parse_braid("strands=3; x1").is_err());
        assert!(parse_braid("strands=3; 0").is_err());
        assert!(parse_braid("1 2 3").is_err());
    }

    #[test]
    fn display_round_trips() {
        let b = BraidWord::new(4, vec![1, -3, 2, 2]).unwrap();
        assert_eq!(b.to_string(), "strands=4; 1 -3 2 2");
        assert_eq!(b.to_string().parse::<BraidWord>().unwrap(), b);
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, r#"{"strands":4,"word":[1,-3,2,2]}"#);
        assert_eq!(serde_json::from_str::<BraidWord>(&json).unwrap(), b);
        assert!(serde_json::from_str::<BraidWord>(r#"{"strands":2,"word":[2]}"#).is_err());
    }

    #[test]
    fn torus_braids() {
        assert_eq!(torus_braid(2, 3).unwrap().letters(), &[1, 1, 1]);
        assert!(torus_braid(1, 3).is_err());
        assert_eq!(torus_braid(3, 5).unwrap().closure_components(), 1);
        assert_eq!(torus_braid(2, 4).unwrap().closure_components(), 2);
        assert_eq!(torus_braid(3, 3).unwrap().closure_components(), 3);
    }

    #[test]
    fn components() {
        assert_eq!(BraidWord::new(3, vec![]).unwrap().closure_components(), 3);
        assert_eq!(BraidWord::new(2, vec![1, 1, 1]).unwrap().closure_components(), 1);
        assert_eq!(BraidWord::new(1, vec![]).unwrap().closure_components(), 1);
    }
}
