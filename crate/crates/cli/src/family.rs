//! Inline graph specs.
//!
//! ```text
//! spec   := term ('+' term)*            disjoint union, left to right
//! term   := NAME [INT] | NAME '(' args ')'
//! args   := arg (',' arg)*
//! arg    := NUMBER | 'seed' '=' INT
//! ```
//!
//! Names: `P`/`path`, `C`/`cycle`, `K`/`complete`, `N`/`empty`,
//! `S`/`star` (argument is the number of leaves), `paw`,
//! `K(r1,...,rt)`/`multipartite(r1,...,rt)` with at least two parts,
//! `gnp(n,p,seed=s)`/`random-gnp(n,p,seed=s)`. Enumerations that expand to
//! several graphs: `graphs(n)`, `connected(n)`, `trees(n)`.

use std::fmt;

use edim::generate;
use edim::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad graph spec {spec:?}: {reason}")]
pub struct SpecError {
    pub spec: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Star(usize),
    Paw,
    Multipartite(Vec<usize>),
    Gnp { n: usize, p: f64, seed: u64 },
    AllGraphs(usize),
    Connected(usize),
    Trees(usize),
}

/// A parsed spec: one or more families joined by disjoint union.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub terms: Vec<Family>,
}

impl Family {
    fn is_enumeration(&self) -> bool {
        matches!(
            self,
            Family::AllGraphs(_) | Family::Connected(_) | Family::Trees(_)
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::Empty(n) => write!(f, "N{n}"),
            Family::Star(n) => write!(f, "S{n}"),
            Family::Paw => write!(f, "paw"),
            Family::Multipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "K({})", parts.join(","))
            }
            Family::Gnp { n, p, seed } => write!(f, "gnp({n},{p},seed={seed})"),
            Family::AllGraphs(n) => write!(f, "graphs({n})"),
            Family::Connected(n) => write!(f, "connected({n})"),
            Family::Trees(n) => write!(f, "trees({n})"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Arg {
    Number(String),
    Seed(u64),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, reason: impl Into<String>) -> Result<T, SpecError> {
        Err(SpecError {
            spec: self.src.to_string(),
            reason: reason.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&pred) {
            self.pos += self.peek().unwrap().len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn spec(&mut self) -> Result<FamilySpec, SpecError> {
        let mut terms = vec![self.term()?];
        while self.eat('+') {
            terms.push(self.term()?);
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return self.err(format!("unexpected input at offset {}", self.pos));
        }
        if terms.len() > 1 && terms.iter().any(Family::is_enumeration) {
            return self.err("enumerations cannot be combined with '+'");
        }
        Ok(FamilySpec { terms })
    }

    fn term(&mut self) -> Result<Family, SpecError> {
        self.skip_ws();
        let name = self.take_while(|c| c.is_ascii_alphabetic() || c == '-');
        if name.is_empty() {
            return self.err("expected a family name");
        }
        let args = if self.eat('(') {
            let mut args = vec![self.arg()?];
            while self.eat(',') {
                args.push(self.arg()?);
            }
            if !self.eat(')') {
                return self.err("expected ')'");
            }
            args
        } else {
            let digits = self.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                Vec::new()
            } else {
                vec![Arg::Number(digits.to_string())]
            }
        };
        self.family(name, args)
    }

    fn arg(&mut self) -> Result<Arg, SpecError> {
        self.skip_ws();
        let word = self.take_while(|c| c.is_ascii_alphanumeric() || c == '.');
        if word == "seed" {
            if !self.eat('=') {
                return self.err("expected '=' after seed");
            }
            self.skip_ws();
            let digits = self.take_while(|c| c.is_ascii_digit());
            return match digits.parse() {
                Ok(s) => Ok(Arg::Seed(s)),
                Err(_) => self.err("seed must be a non-negative integer"),
            };
        }
        if word.is_empty() {
            return self.err("expected an argument");
        }
        Ok(Arg::Number(word.to_string()))
    }

    fn int(&self, arg: &Arg) -> Result<usize, SpecError> {
        match arg {
            Arg::Number(s) => match s.parse() {
                Ok(v) => Ok(v),
                Err(_) => self.err(format!("expected a non-negative integer, got {s:?}")),
            },
            Arg::Seed(_) => self.err("unexpected seed argument"),
        }
    }

    fn single(&self, name: &str, args: &[Arg]) -> Result<usize, SpecError> {
        match args {
            [a] => self.int(a),
            _ => self.err(format!("{name} takes exactly one size")),
        }
    }

    fn family(&self, name: &str, args: Vec<Arg>) -> Result<Family, SpecError> {
        let family = match name {
            "P" | "path" => Family::Path(self.single(name, &args)?),
            "C" | "cycle" => Family::Cycle(self.single(name, &args)?),
            "N" | "empty" => Family::Empty(self.single(name, &args)?),
            "S" | "star" => Family::Star(self.single(name, &args)?),
            "paw" if args.is_empty() => Family::Paw,
            "paw" => return self.err("paw takes no arguments"),
            "K" | "complete" if args.len() == 1 => Family::Complete(self.int(&args[0])?),
            "K" | "multipartite" => {
                let parts = args
                    .iter()
                    .map(|a| self.int(a))
                    .collect::<Result<Vec<_>, _>>()?;
                if parts.len() < 2 {
                    return self.err("a multipartite graph needs at least two parts");
                }
                Family::Multipartite(parts)
            }
            "gnp" | "random-gnp" => {
                let (n, p, seed) = match args.as_slice() {
                    [n, Arg::Number(p), Arg::Seed(s)] => (self.int(n)?, p, *s),
                    _ => return self.err("expected gnp(n,p,seed=s)"),
                };
                let Ok(p) = p.parse::<f64>() else {
                    return self.err(format!("bad probability {p:?}"));
                };
                Family::Gnp { n, p, seed }
            }
            "graphs" => Family::AllGraphs(self.single(name, &args)?),
            "connected" => Family::Connected(self.single(name, &args)?),
            "trees" => Family::Trees(self.single(name, &args)?),
            _ => return self.err(format!("unknown family {name:?}")),
        };
        self.validate(&family)?;
        Ok(family)
    }

    fn validate(&self, family: &Family) -> Result<(), SpecError> {
        match family {
            Family::Cycle(n) if *n < 3 => self.err("a cycle needs at least 3 vertices"),
            Family::Multipartite(parts) if parts.contains(&0) => {
                self.err("part sizes must be positive")
            }
            Family::Gnp { p, .. } if !(0.0..=1.0).contains(p) => {
                self.err("probability must lie in [0, 1]")
            }
            Family::AllGraphs(n) if *n > 7 => self.err("graphs(n) supports n <= 7"),
            Family::Connected(n) if *n > 8 => self.err("connected(n) supports n <= 8"),
            Family::Connected(0) | Family::Trees(0) => self.err("order must be at least 1"),
            Family::Trees(n) if *n > 14 => self.err("trees(n) supports n <= 14"),
            _ => Ok(()),
        }
    }
}

pub fn parse_family(src: &str) -> Result<FamilySpec, SpecError> {
    Parser { src, pos: 0 }.spec()
}

fn expand_one(family: &Family) -> Vec<Graph> {
    match family {
        Family::Path(n) => vec![generate::path(*n)],
        Family::Cycle(n) => vec![generate::cycle(*n).expect("validated")],
        Family::Complete(n) => vec![generate::complete(*n)],
        Family::Empty(n) => vec![Graph::empty(*n)],
        Family::Star(n) => vec![generate::star(*n)],
        Family::Paw => vec![generate::paw()],
        Family::Multipartite(parts) => vec![generate::multipartite(parts).expect("validated")],
        Family::Gnp { n, p, seed } => vec![generate::gnp(*n, *p, *seed).expect("validated")],
        Family::AllGraphs(n) => generate::all_graphs(*n),
        Family::Connected(n) => generate::connected_graphs(*n),
        Family::Trees(n) => generate::trees(*n),
    }
}

/// All graphs a spec denotes; a single graph unless it is an enumeration.
pub fn expand_all(spec: &FamilySpec) -> Vec<Graph> {
    if let [only] = spec.terms.as_slice() {
        return expand_one(only);
    }
    let union = spec
        .terms
        .iter()
        .map(|t| expand_one(t).pop().expect("plain families yield one graph"))
        .reduce(|a, b| a.disjoint_union(&b))
        .expect("a spec has at least one term");
    vec![union]
}

/// The single graph a spec denotes.
pub fn expand_family(spec: &FamilySpec) -> Result<Graph, SpecError> {
    let mut graphs = expand_all(spec);
    if graphs.len() != 1 || spec.terms.iter().any(Family::is_enumeration) {
        return Err(SpecError {
            spec: spec.to_string(),
            reason: "expected a single graph, not an enumeration".into(),
        });
    }
    Ok(graphs.pop().unwrap())
}
