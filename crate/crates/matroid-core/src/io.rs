//! The `.mtr` text format:
//!
//! ```text
//! n r
//! <base bits in kth order>
//! names: a b c ...        (optional)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use crate::error::MatroidError;
use crate::matroid::Matroid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidFile {
    pub matroid: Matroid,
    pub names: Option<Vec<String>>,
}

impl MatroidFile {
    pub fn name_of(&self, e: usize) -> String {
        match &self.names {
            Some(n) => n[e].clone(),
            None => (e + 1).to_string(),
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> MatroidError {
    MatroidError::Parse { line, msg: msg.into() }
}

pub fn parse_matroid(text: &str) -> Result<MatroidFile, MatroidError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, header) = lines.next().ok_or_else(|| err(1, "missing header `n r`"))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(err(ln, "header must be `n r`"));
    }
    let n: usize = nums[0].parse().map_err(|_| err(ln, "bad ground set size"))?;
    let r: usize = nums[1].parse().map_err(|_| err(ln, "bad rank"))?;

    let (ln, bits_line) = lines.next().ok_or_else(|| err(ln + 1, "missing base bits"))?;
    let mut bits = Vec::with_capacity(bits_line.len());
    for c in bits_line.chars() {
        match c {
            '0' => bits.push(false),
            '1' => bits.push(true),
            c if c.is_whitespace() => {}
            c => return Err(err(ln, format!("unexpected character {c:?} in base bits"))),
        }
    }
    let matroid = Matroid::from_bits(n, r, &bits)?;

    let mut names = None;
    for (ln, l) in lines {
        if let Some(rest) = l.strip_prefix("names:") {
            let v: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if v.len() != n {
                return Err(err(ln, format!("expected {n} names, got {}", v.len())));
            }
            names = Some(v);
        } else {
            return Err(err(ln, format!("unexpected line {l:?}")));
        }
    }
    Ok(MatroidFile { matroid, names })
}

pub fn print_matroid(file: &MatroidFile) -> String {
    let m = &file.matroid;
    let mut out = format!("{} {}\n{}\n", m.n(), m.rank_total(), m.bit_string());
    if let Some(names) = &file.names {
        out.push_str("names: ");
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}
