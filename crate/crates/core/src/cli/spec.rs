//! Ring and group specification strings.
//!
//! ```text
//! spec  := atom ( "x" atom )*
//! atom  := "Z/" NAT | "GF(" NAT ")" | "GF(" NAT ")[x]/(" poly ")" | "table:" PATH
//! poly  := term ( "+" term )*
//! term  := NAT | NAT? "x" ( "^" NAT )?
//! group := "Z" NAT ( "x" "Z" NAT )*
//! ```
//!
//! Whitespace is insignificant except that a table path runs to the next
//! whitespace character.

use std::fmt;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ring::{prime_power, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    ZMod(usize),
    Gf(usize),
    /// `GF(q)[x]/(f)`; `modulus` holds coefficients reduced modulo the
    /// characteristic, constant term first, monic.
    GfQuotient { q: usize, modulus: Vec<u64> },
    Table(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    pub atoms: Vec<Atom>,
    pub source: String,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Consumes `token`, where whitespace may appear between its characters.
    fn eat(&mut self, token: &str) -> bool {
        let save = self.pos;
        for expected in token.chars() {
            if self.peek() != Some(expected) {
                self.pos = save;
                return false;
            }
            self.pos += expected.len_utf8();
        }
        true
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            let at = self.peek().map_or("end of input".to_string(), |c| format!("`{c}`"));
            Err(Error::parse(self.pos, format!("expected `{token}`, found {at}")))
        }
    }

    fn nat(&mut self) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        let digits: String = self.text[start..].chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            let at = self.peek_raw().map_or("end of input".to_string(), |c| format!("`{c}`"));
            return Err(Error::parse(start, format!("expected a number, found {at}")));
        }
        self.pos += digits.len();
        let value = digits
            .parse()
            .map_err(|_| Error::parse(start, format!("number {digits} is too large")))?;
        Ok((value, start))
    }

    fn nat_usize(&mut self) -> Result<(usize, usize)> {
        let (v, at) = self.nat()?;
        let v = usize::try_from(v).map_err(|_| Error::parse(at, "number is too large"))?;
        Ok((v, at))
    }
}

/// Raw polynomial terms `(coefficient, exponent)` as written.
fn parse_poly_terms(cur: &mut Cursor) -> Result<Vec<(u64, u32)>> {
    let mut terms = Vec::new();
    loop {
        cur.skip_ws();
        let coef = if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            Some(cur.nat()?.0)
        } else {
            None
        };
        let term = if cur.eat("x") {
            let exp = if cur.eat("^") {
                let (e, at) = cur.nat()?;
                u32::try_from(e).map_err(|_| Error::parse(at, "exponent is too large"))?
            } else {
                1
            };
            (coef.unwrap_or(1), exp)
        } else {
            match coef {
                Some(c) => (c, 0),
                None => {
                    let at = cur.peek().map_or("end of input".to_string(), |c| format!("`{c}`"));
                    return Err(Error::parse(cur.pos, format!("expected a polynomial term, found {at}")));
                }
            }
        };
        terms.push(term);
        if !cur.eat("+") {
            return Ok(terms);
        }
    }
}

/// Dense coefficient vector (constant term first) with coefficients reduced
/// modulo `modulus` when given. Trailing zeros are removed.
fn densify(terms: &[(u64, u32)], modulus: Option<u64>) -> Vec<u64> {
    let degree = terms.iter().map(|t| t.1 as usize).max().unwrap_or(0);
    let mut coeffs = vec![0u64; degree + 1];
    for &(c, e) in terms {
        let slot = &mut coeffs[e as usize];
        *slot = match modulus {
            Some(p) => (*slot + c % p) % p,
            None => slot.saturating_add(c),
        };
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs
}

fn parse_atom(cur: &mut Cursor) -> Result<Atom> {
    cur.skip_ws();
    let start = cur.pos;
    if cur.eat("Z/") {
        let (n, at) = cur.nat_usize()?;
        if n < 2 {
            return Err(Error::parse(at, format!("Z/{n} is not a nonzero ring; need n >= 2")));
        }
        return Ok(Atom::ZMod(n));
    }
    if cur.eat("GF(") {
        let (q, at) = cur.nat_usize()?;
        let Some((p, _)) = prime_power(q) else {
            return Err(Error::parse(at, format!("{q} is not a prime power")));
        };
        cur.expect(")")?;
        if !cur.eat("[") {
            return Ok(Atom::Gf(q));
        }
        cur.expect("x")?;
        cur.expect("]")?;
        cur.expect("/")?;
        cur.expect("(")?;
        cur.skip_ws();
        let poly_at = cur.pos;
        let terms = parse_poly_terms(cur)?;
        cur.expect(")")?;
        let modulus = densify(&terms, Some(p as u64));
        if modulus.len() < 2 {
            return Err(Error::parse(poly_at, "modulus must have degree at least 1"));
        }
        if modulus.last() != Some(&1) {
            return Err(Error::parse(poly_at, format!("modulus is not monic over GF({q})")));
        }
        return Ok(Atom::GfQuotient { q, modulus });
    }
    if cur.eat("table:") {
        cur.skip_ws();
        let from = cur.pos;
        let path: String = cur.text[from..].chars().take_while(|c| !c.is_whitespace()).collect();
        if path.is_empty() {
            return Err(Error::parse(from, "expected a table file path"));
        }
        cur.pos += path.len();
        return Ok(Atom::Table(path));
    }
    let at = cur.peek().map_or("end of input".to_string(), |c| format!("`{c}`"));
    Err(Error::parse(start, format!("expected `Z/`, `GF(` or `table:`, found {at}")))
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let mut cur = Cursor::new(text);
    let mut atoms = vec![parse_atom(&mut cur)?];
    while !cur.at_end() {
        cur.expect("x")?;
        atoms.push(parse_atom(&mut cur)?);
    }
    Ok(RingSpec {
        atoms,
        source: text.to_string(),
    })
}

/// Cyclic factor orders of a group such as `Z2 x Z4`. `Z1` factors are
/// accepted and dropped.
pub fn parse_group_spec(text: &str) -> Result<Vec<usize>> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    loop {
        cur.expect("Z")?;
        let (d, at) = cur.nat_usize()?;
        if d == 0 {
            return Err(Error::parse(at, "Z0 is not a finite cyclic group"));
        }
        if d > 1 {
            out.push(d);
        }
        if cur.at_end() {
            return Ok(out);
        }
        cur.expect("x")?;
    }
}

/// A polynomial in `x` with natural-number coefficients, constant term first.
pub fn parse_poly(text: &str) -> Result<Vec<u64>> {
    let mut cur = Cursor::new(text);
    let terms = parse_poly_terms(&mut cur)?;
    if !cur.at_end() {
        return Err(Error::parse(cur.pos, "unexpected trailing input"));
    }
    Ok(densify(&terms, None))
}

fn render_poly(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        terms.push(match (i, c) {
            (0, _) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, _) => format!("{c}x"),
            (_, 1) => format!("x^{i}"),
            _ => format!("{c}x^{i}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::ZMod(n) => write!(f, "Z/{n}"),
            Atom::Gf(q) => write!(f, "GF({q})"),
            Atom::GfQuotient { q, modulus } => write!(f, "GF({q})[x]/({})", render_poly(modulus)),
            Atom::Table(path) => write!(f, "table:{path}"),
        }
    }
}

impl RingSpec {
    /// Canonical text: atoms joined by ` x `, polynomials in descending degree.
    pub fn render(&self) -> String {
        self.atoms.iter().map(Atom::to_string).collect::<Vec<_>>().join(" x ")
    }

    /// Builds the ring; table paths are resolved against `base_dir`.
    pub fn build(&self, base_dir: &Path) -> Result<FiniteRing> {
        let rings = self
            .atoms
            .iter()
            .map(|a| build_atom(a, base_dir))
            .collect::<Result<Vec<_>>>()?;
        if rings.len() == 1 {
            Ok(rings.into_iter().next().unwrap())
        } else {
            FiniteRing::product(&rings)
        }
    }
}

/// Table ring document: `n`, row-major `add` and `mul` with `n * n` entries
/// each, and optional element `names`.
#[derive(Debug, Clone, Deserialize, serde::Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub n: usize,
    pub add: Vec<usize>,
    pub mul: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl TableFile {
    pub fn from_ring(ring: &FiniteRing) -> Self {
        TableFile {
            n: ring.order(),
            add: ring.add_table(),
            mul: ring.mul_table(),
            names: Some((0..ring.order()).map(|i| ring.element_name(i)).collect()),
        }
    }

    pub fn into_ring(self, label: impl Into<String>) -> Result<FiniteRing> {
        FiniteRing::from_tables(self.n, &self.add, &self.mul, self.names, label)
    }
}

fn build_atom(atom: &Atom, base_dir: &Path) -> Result<FiniteRing> {
    match atom {
        Atom::ZMod(n) => FiniteRing::zmod(*n),
        Atom::Gf(q) => FiniteRing::gf(*q),
        Atom::GfQuotient { q, modulus } => {
            let field = FiniteRing::gf(*q)?;
            let coeffs: Vec<usize> = modulus.iter().map(|&c| field.from_integer(c)).collect();
            FiniteRing::poly_quotient(&field, &coeffs)
        }
        Atom::Table(path) => {
            let full = base_dir.join(path);
            let text = std::fs::read_to_string(&full)
                .map_err(|e| Error::Io(format!("{}: {e}", full.display())))?;
            let doc: TableFile = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidSpec(format!("{}: {e}", full.display())))?;
            doc.into_ring(atom.to_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(text: &str) -> FiniteRing {
        parse_ring_spec(text).unwrap().build(Path::new(".")).unwrap()
    }

    #[test]
    fn basic_specs() {
        assert_eq!(parse_ring_spec("Z/12").unwrap().atoms, vec![Atom::ZMod(12)]);
        let r = build("GF(2)[x]/(x^3+x^2)");
        assert_eq!(r.order(), 8);
        let p = build("Z/4 x GF(3)");
        assert_eq!(p.order(), 12);
        assert_eq!(build("Z/4xGF(3)").order(), 12);
        assert_eq!(build(" GF ( 3 ) [ x ] / ( x ^ 2 ) ").order(), 9);
    }

    #[test]
    fn coefficients_are_reduced() {
        let spec = parse_ring_spec("GF(3)[x]/(4x^2+3x+5)").unwrap();
        assert_eq!(spec.atoms, vec![Atom::GfQuotient { q: 3, modulus: vec![2, 0, 1] }]);
        assert_eq!(spec.render(), "GF(3)[x]/(x^2+2)");
        // terms in any order, repeated exponents combine
        let spec = parse_ring_spec("GF(2)[x]/(1+x+x^2+x)").unwrap();
        assert_eq!(spec.render(), "GF(2)[x]/(x^2+1)");
    }

    #[test]
    fn errors_carry_columns() {
        let col = |text: &str| match parse_ring_spec(text) {
            Err(Error::Parse { column, .. }) => column,
            other => panic!("{text}: expected parse error, got {other:?}"),
        };
        assert_eq!(col("Z/"), 3);
        assert_eq!(col("GF(6)"), 4);
        assert_eq!(col("GF(3)[x]/(2x^2+1)"), 11);
        assert_eq!(col("Z/4 y"), 5);
        assert_eq!(col("Q/4"), 1);
        assert_eq!(col("Z/1"), 3);
    }

    #[test]
    fn group_specs() {
        assert_eq!(parse_group_spec("Z2 x Z4").unwrap(), vec![2, 4]);
        assert_eq!(parse_group_spec("Z1").unwrap(), Vec::<usize>::new());
        assert!(parse_group_spec("Z2 x").is_err());
        assert!(parse_group_spec("Z0").is_err());
    }

    #[test]
    fn polynomials() {
        assert_eq!(parse_poly("x^3+x^2").unwrap(), vec![0, 0, 1, 1]);
        assert_eq!(parse_poly("2x+1").unwrap(), vec![1, 2]);
        assert!(parse_poly("x^").is_err());
    }
}
