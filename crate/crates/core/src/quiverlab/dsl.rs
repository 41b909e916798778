//! Line-oriented presentation formats.
//!
//! Quiver presentations:
//!
//! ```text
//! field 3
//! vertices i j
//! arrow alpha i j
//! relation delta.delta = gamma.gamma.gamma
//! relation gamma.alpha
//! maxlen 6
//! ```
//!
//! Commutative presentations:
//!
//! ```text
//! field 3
//! generators x y
//! relation x^3 - y^2
//! relation x*y
//! bound 4
//! ```
//!
//! `#` starts a comment. A relation is a signed sum of terms, optionally with
//! one `=`; equalities are stored as differences. Paths compose left to
//! right: `a.b` is `a` followed by `b` and needs `target(a) = source(b)`.

use std::collections::HashMap;

use super::QuiverError;

pub const DEFAULT_MAXLEN: usize = 6;
pub const DEFAULT_BOUND: u32 = 4;
pub const MAX_GENERATORS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A path in the quiver; a trivial path has no arrows and equal endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    /// Whether `sub` occurs as a contiguous run of arrows.
    pub fn contains_subpath(&self, sub: &[usize]) -> bool {
        !sub.is_empty() && self.arrows.windows(sub.len()).any(|w| w == sub)
    }
}

/// A relation `Σ c_k p_k = 0`; coefficients are unreduced integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Path)>,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverSpec {
    pub field: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub maxlen: usize,
}

impl QuiverSpec {
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.is_trivial() {
            self.vertices[p.source].clone()
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// Parses `name{.name}*`, where a lone vertex name is the trivial path.
    pub fn parse_path(&self, text: &str, line: usize) -> Result<Path, QuiverError> {
        if let Some(v) = self.vertex_index(text) {
            return Ok(Path::trivial(v));
        }
        let mut path: Option<Path> = None;
        for name in text.split('.') {
            let a = self.arrow_index(name).ok_or_else(|| QuiverError::UnknownLabel {
                line,
                label: name.to_string(),
            })?;
            let step = Path {
                source: self.arrows[a].source,
                target: self.arrows[a].target,
                arrows: vec![a],
            };
            path = Some(match path {
                None => step,
                Some(p) => p.concat(&step).ok_or_else(|| QuiverError::NonComposablePath {
                    line,
                    path: text.to_string(),
                })?,
            });
        }
        path.ok_or_else(|| QuiverError::Parse {
            line,
            message: "empty path".into(),
        })
    }

    /// Relations consisting of a single path, which is set to zero.
    pub fn zero_paths(&self) -> Vec<Vec<usize>> {
        self.relations
            .iter()
            .filter(|r| r.terms.len() == 1 && r.terms[0].0.rem_euclid(self.field as i64) != 0)
            .map(|r| r.terms[0].1.arrows.clone())
            .collect()
    }
}

/// A commutative monomial: one exponent per generator.
pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedCommSpec {
    pub field: u32,
    pub generators: Vec<String>,
    pub relations: Vec<Vec<(i64, Exponents)>>,
    pub bound: u32,
}

impl PresentedCommSpec {
    pub fn monomial_label(&self, e: &[u32]) -> String {
        let parts: Vec<String> = self
            .generators
            .iter()
            .zip(e)
            .filter(|(_, &k)| k > 0)
            .map(|(g, &k)| if k == 1 { g.clone() } else { format!("{g}^{k}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

#[derive(Debug, PartialEq)]
enum Token {
    Plus,
    Minus,
    Equals,
    Word(String),
}

fn tokenize(s: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut Vec<Token>| {
        if !word.is_empty() {
            out.push(Token::Word(std::mem::take(word)));
        }
    };
    for ch in s.chars() {
        match ch {
            '+' | '-' | '=' => {
                flush(&mut word, &mut out);
                out.push(match ch {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    _ => Token::Equals,
                });
            }
            c if c.is_whitespace() => flush(&mut word, &mut out),
            c => word.push(c),
        }
    }
    flush(&mut word, &mut out);
    out
}

/// Splits a relation body into signed words, moving the right-hand side of
/// an `=` across with flipped sign.
pub(crate) fn signed_words(body: &str, line: usize) -> Result<Vec<(i64, String)>, QuiverError> {
    let perr = |m: &str| QuiverError::Parse {
        line,
        message: m.to_string(),
    };
    let mut out = Vec::new();
    let mut side = 1i64;
    let mut sign = 1i64;
    let mut expect_term = true;
    let mut seen_eq = false;
    for tok in tokenize(body) {
        match tok {
            Token::Plus | Token::Minus => {
                if tok == Token::Minus {
                    sign = -sign;
                }
                expect_term = true;
            }
            Token::Equals => {
                if seen_eq {
                    return Err(perr("at most one '=' per relation"));
                }
                if expect_term && !out.is_empty() {
                    return Err(perr("dangling operator before '='"));
                }
                seen_eq = true;
                side = -1;
                sign = 1;
                expect_term = true;
            }
            Token::Word(w) => {
                if !expect_term {
                    return Err(perr("missing operator between terms"));
                }
                out.push((side * sign, w));
                sign = 1;
                expect_term = false;
            }
        }
    }
    if out.is_empty() {
        return Err(perr("empty relation"));
    }
    if expect_term {
        return Err(perr("relation ends with an operator"));
    }
    Ok(out)
}

/// Splits `c*rest` into a coefficient and the remainder; plain words get 1.
pub(crate) fn split_coefficient(word: &str, line: usize) -> Result<(i64, String), QuiverError> {
    let mut coeff = 1i64;
    let mut rest = Vec::new();
    for part in word.split('*') {
        if part.is_empty() {
            return Err(QuiverError::Parse {
                line,
                message: format!("malformed term '{word}'"),
            });
        }
        match part.parse::<i64>() {
            Ok(c) => coeff *= c,
            Err(_) => rest.push(part),
        }
    }
    Ok((coeff, rest.join("*")))
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Iterator for Lines<'a> {
    /// (1-based line number, keyword, remainder)
    type Item = (usize, &'a str, &'a str);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, raw) in self.inner.by_ref() {
            let text = raw.split('#').next().unwrap().trim();
            if text.is_empty() {
                continue;
            }
            let (kw, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
            return Some((i + 1, kw, rest.trim()));
        }
        None
    }
}

fn lines(text: &str) -> Lines<'_> {
    Lines {
        inner: text.lines().enumerate(),
    }
}

fn parse_number<T: std::str::FromStr>(s: &str, line: usize, what: &str) -> Result<T, QuiverError> {
    s.parse().map_err(|_| QuiverError::Parse {
        line,
        message: format!("expected {what}, found '{s}'"),
    })
}

pub fn parse_quiver(text: &str) -> Result<QuiverSpec, QuiverError> {
    let mut spec = QuiverSpec {
        field: 0,
        vertices: Vec::new(),
        arrows: Vec::new(),
        relations: Vec::new(),
        maxlen: DEFAULT_MAXLEN,
    };
    let mut pending: Vec<(usize, String)> = Vec::new();
    let mut labels: HashMap<String, usize> = HashMap::new();
    let mut declare = |name: &str, line: usize| -> Result<(), QuiverError> {
        let ok = !name.is_empty() && name.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !ok || name.chars().all(|c| c.is_ascii_digit()) {
            return Err(QuiverError::Parse {
                line,
                message: format!("invalid label '{name}'"),
            });
        }
        if labels.insert(name.to_string(), line).is_some() {
            return Err(QuiverError::Parse {
                line,
                message: format!("duplicate label '{name}'"),
            });
        }
        Ok(())
    };

    for (line, kw, rest) in lines(text) {
        match kw {
            "field" => spec.field = parse_number(rest, line, "a prime")?,
            "vertices" => {
                for v in rest.split_whitespace() {
                    declare(v, line)?;
                    spec.vertices.push(v.to_string());
                }
            }
            "arrow" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [name, src, dst] = parts[..] else {
                    return Err(QuiverError::Parse {
                        line,
                        message: "expected 'arrow <name> <source> <target>'".into(),
                    });
                };
                declare(name, line)?;
                let lookup = |v: &str| {
                    spec.vertex_index(v).ok_or_else(|| QuiverError::UnknownLabel {
                        line,
                        label: v.to_string(),
                    })
                };
                let (source, target) = (lookup(src)?, lookup(dst)?);
                spec.arrows.push(Arrow {
                    name: name.to_string(),
                    source,
                    target,
                });
            }
            "relation" => pending.push((line, rest.to_string())),
            "maxlen" => spec.maxlen = parse_number(rest, line, "a path length")?,
            other => {
                return Err(QuiverError::Parse {
                    line,
                    message: format!("unknown keyword '{other}'"),
                })
            }
        }
    }
    if spec.field == 0 {
        return Err(QuiverError::Parse {
            line: 0,
            message: "missing 'field' line".into(),
        });
    }
    if spec.vertices.is_empty() {
        return Err(QuiverError::Parse {
            line: 0,
            message: "missing 'vertices' line".into(),
        });
    }

    for (line, body) in pending {
        let mut terms = Vec::new();
        for (sign, word) in signed_words(&body, line)? {
            let (coeff, path_text) = split_coefficient(&word, line)?;
            if path_text.is_empty() {
                if coeff == 0 {
                    continue;
                }
                return Err(QuiverError::Parse {
                    line,
                    message: format!("constant term '{word}' in a path relation"),
                });
            }
            terms.push((sign * coeff, spec.parse_path(&path_text, line)?));
        }
        let single_path = terms.len() == 1 && terms[0].1.len() >= 1;
        if !single_path && terms.iter().any(|(_, p)| p.len() < 2) {
            return Err(QuiverError::Parse {
                line,
                message: "relation terms must have length at least 2 unless the relation is a single path".into(),
            });
        }
        if terms.is_empty() {
            return Err(QuiverError::Parse {
                line,
                message: "relation has no terms".into(),
            });
        }
        spec.relations.push(Relation { terms, line });
    }
    Ok(spec)
}

pub fn parse_comm(text: &str) -> Result<PresentedCommSpec, QuiverError> {
    let mut spec = PresentedCommSpec {
        field: 0,
        generators: Vec::new(),
        relations: Vec::new(),
        bound: DEFAULT_BOUND,
    };
    let mut pending = Vec::new();
    for (line, kw, rest) in lines(text) {
        match kw {
            "field" => spec.field = parse_number(rest, line, "a prime")?,
            "generators" => {
                for g in rest.split_whitespace() {
                    if !g.chars().all(|c| c.is_alphabetic() || c == '_') || spec.generators.iter().any(|x| x == g) {
                        return Err(QuiverError::Parse {
                            line,
                            message: format!("invalid or duplicate generator '{g}'"),
                        });
                    }
                    spec.generators.push(g.to_string());
                }
                if spec.generators.len() > MAX_GENERATORS {
                    return Err(QuiverError::TooManyGenerators(spec.generators.len()));
                }
            }
            "relation" => pending.push((line, rest.to_string())),
            "bound" => spec.bound = parse_number(rest, line, "an exponent bound")?,
            other => {
                return Err(QuiverError::Parse {
                    line,
                    message: format!("unknown keyword '{other}'"),
                })
            }
        }
    }
    if spec.field == 0 {
        return Err(QuiverError::Parse {
            line: 0,
            message: "missing 'field' line".into(),
        });
    }
    for (line, body) in pending {
        let mut poly = Vec::new();
        for (sign, word) in signed_words(&body, line)? {
            let (coeff, mono) = split_coefficient(&word, line)?;
            let mut exps = vec![0u32; spec.generators.len()];
            if !mono.is_empty() {
                for factor in mono.split('*') {
                    let (g, e) = match factor.split_once('^') {
                        Some((g, e)) => (g, parse_number::<u32>(e, line, "an exponent")?),
                        None => (factor, 1),
                    };
                    let gi = spec.generators.iter().position(|x| x == g).ok_or_else(|| QuiverError::UnknownLabel {
                        line,
                        label: g.to_string(),
                    })?;
                    exps[gi] += e;
                }
            }
            if exps.iter().all(|&e| e == 0) && coeff.rem_euclid(spec.field as i64) != 0 {
                return Err(QuiverError::Parse {
                    line,
                    message: "relations with a constant term are not supported".into(),
                });
            }
            poly.push((sign * coeff, exps));
        }
        spec.relations.push(poly);
    }
    Ok(spec)
}
