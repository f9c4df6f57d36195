use std::fmt;

use matroid_core::Subset;

use crate::error::OrientError;

/// A map `E -> {-1, 0, +1}` stored as its positive and negative parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedSubset {
    pub pos: Subset,
    pub neg: Subset,
}

impl SignedSubset {
    pub fn new(pos: Subset, neg: Subset) -> SignedSubset {
        debug_assert!((pos & neg).is_empty());
        SignedSubset { pos, neg }
    }

    pub fn from_signs(signs: &[(usize, i8)]) -> SignedSubset {
        let mut s = SignedSubset::default();
        for &(e, v) in signs {
            s.set(e, v);
        }
        s
    }

    pub fn support(self) -> Subset {
        self.pos | self.neg
    }

    pub fn is_empty(self) -> bool {
        self.support().is_empty()
    }

    pub fn sign(self, e: usize) -> i8 {
        if self.pos.contains(e) {
            1
        } else if self.neg.contains(e) {
            -1
        } else {
            0
        }
    }

    pub fn set(&mut self, e: usize, v: i8) {
        self.pos.remove(e);
        self.neg.remove(e);
        match v {
            1 => self.pos.insert(e),
            -1 => self.neg.insert(e),
            _ => {}
        }
    }

    pub fn negate(self) -> SignedSubset {
        SignedSubset { pos: self.neg, neg: self.pos }
    }

    /// Flip the signs on `x`.
    pub fn flip(self, x: Subset) -> SignedSubset {
        SignedSubset { pos: (self.pos - x) | (self.neg & x), neg: (self.neg - x) | (self.pos & x) }
    }

    /// Elements where the two sets have opposite signs.
    pub fn separator(self, other: SignedSubset) -> Subset {
        (self.pos & other.neg) | (self.neg & other.pos)
    }

    pub fn is_orthogonal(self, other: SignedSubset) -> bool {
        let agree = (self.pos & other.pos) | (self.neg & other.neg);
        let disagree = self.separator(other);
        agree.is_empty() == disagree.is_empty()
    }

    /// The representative of `{X, -X}` whose smallest support element is
    /// positive.
    pub fn normalized(self) -> SignedSubset {
        match self.support().min() {
            Some(e) if self.neg.contains(e) => self.negate(),
            _ => self,
        }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplaySigned { s: self, names }
    }
}

struct DisplaySigned<'a> {
    s: &'a SignedSubset,
    names: &'a [String],
}

impl fmt::Display for DisplaySigned<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.s.support().iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let c = if self.s.pos.contains(e) { '+' } else { '-' };
            match self.names.get(e) {
                Some(n) => write!(f, "{c}{n}")?,
                None => write!(f, "{c}{}", e + 1)?,
            }
        }
        Ok(())
    }
}

/// Element names `1..n`.
pub fn numeric_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// One signed set per line, each element written `+x` or `-x`. Elements
/// are looked up in `names`, or read as 1-based indices when `names` is
/// empty. Blank lines and `#` comments are skipped.
pub fn parse_signed_sets(text: &str, names: &[String]) -> Result<Vec<SignedSubset>, OrientError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| OrientError::Parse { line: i + 1, msg };
        let mut s = SignedSubset::default();
        for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let (sign, name) = match tok.as_bytes()[0] {
                b'+' => (1, &tok[1..]),
                b'-' => (-1, &tok[1..]),
                _ => (1, tok),
            };
            let e = if names.is_empty() {
                name.parse::<usize>()
                    .ok()
                    .filter(|&k| k >= 1)
                    .map(|k| k - 1)
                    .ok_or_else(|| err(format!("bad element `{name}`")))?
            } else {
                names.iter().position(|n| n == name).ok_or_else(|| err(format!("unknown element `{name}`")))?
            };
            if s.support().contains(e) {
                return Err(err(format!("element `{name}` repeated")));
            }
            s.set(e, sign);
        }
        out.push(s);
    }
    Ok(out)
}

/// Add `-X` for every `X`.
pub fn with_negations(sets: &[SignedSubset]) -> Vec<SignedSubset> {
    let mut out: Vec<SignedSubset> = sets.iter().flat_map(|&s| [s, s.negate()]).collect();
    out.sort();
    out.dedup();
    out
}

pub fn print_signed_sets(sets: &[SignedSubset], names: &[String]) -> String {
    let mut s = String::new();
    for x in sets {
        s.push_str(&x.display(names).to_string());
        s.push('\n');
    }
    s
}
