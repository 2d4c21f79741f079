//! Text syntax for monomial ideals.
//!
//! ```text
//! ideal  ::= term ("," term)*
//! term   ::= factor ("*" factor)*
//! factor ::= var ("^" int)? | "1"
//! ```
//!
//! Without a declared ring the variables are inferred: names drawn from
//! `x, y, z` give the shortest prefix of that list covering them, names of
//! the form `x1, x2, ...` give `x1..xN` up to the largest index used.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exp, Monomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Factor {
    One,
    Var { name: String, pos: usize, exp: Exp },
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<Exp> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            return Err(Error::parse(start, "negative exponent"));
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer exponent"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse::<Exp>()
            .map_err(|_| Error::parse(start, "exponent too large"))
    }

    fn factor(&mut self) -> Result<Factor> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(b'1') => {
                self.pos += 1;
                if self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    return Err(Error::parse(
                        start,
                        "only the constant 1 may appear as a factor",
                    ));
                }
                Ok(Factor::One)
            }
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos])
                    .expect("ascii")
                    .to_string();
                let exp = if self.eat(b'^') { self.int()? } else { 1 };
                Ok(Factor::Var {
                    name,
                    pos: start,
                    exp,
                })
            }
            Some(_) => Err(Error::parse(start, "expected a variable or 1")),
            None => Err(Error::parse(start, "unexpected end of input")),
        }
    }

    fn ideal(&mut self) -> Result<Vec<Vec<Factor>>> {
        let mut terms = Vec::new();
        loop {
            let mut term = vec![self.factor()?];
            while self.eat(b'*') {
                term.push(self.factor()?);
            }
            terms.push(term);
            if !self.eat(b',') {
                break;
            }
        }
        if self.peek().is_some() {
            return Err(Error::parse(self.pos, "unexpected character"));
        }
        Ok(terms)
    }
}

/// Picks a default ring for the variable names used in an input.
pub fn infer_ring<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
    let names: Vec<&str> = names.iter().map(AsRef::as_ref).collect();
    if names.is_empty() {
        return Ring::new(&["x"]);
    }
    const XYZ: [&str; 3] = ["x", "y", "z"];
    if names.iter().all(|n| XYZ.contains(n)) {
        let top = names
            .iter()
            .map(|n| XYZ.iter().position(|v| v == n).unwrap())
            .max()
            .unwrap();
        return Ring::new(&XYZ[..=top]);
    }
    let indexed: Option<Vec<usize>> = names
        .iter()
        .map(|n| {
            n.strip_prefix('x')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&k| k >= 1 && !n.starts_with("x0"))
        })
        .collect();
    match indexed {
        Some(ix) => {
            let top = *ix.iter().max().unwrap();
            let names: Vec<String> = (1..=top).map(|i| format!("x{i}")).collect();
            Ring::new(&names)
        }
        None => {
            let odd = names.iter().find(|n| !XYZ.contains(n)).unwrap();
            Err(Error::UnknownVariable(format!(
                "{odd} (declare the ring's variables explicitly)"
            )))
        }
    }
}

/// Parses an ideal; with `ring = None` the ring is inferred.
pub fn parse_ideal(text: &str, ring: Option<&Ring>) -> Result<MonomialIdeal> {
    let terms = Lexer::new(text).ideal()?;
    let ring = match ring {
        Some(r) => r.clone(),
        None => {
            let mut used: Vec<String> = Vec::new();
            for f in terms.iter().flatten() {
                if let Factor::Var { name, .. } = f {
                    if !used.contains(name) {
                        used.push(name.clone());
                    }
                }
            }
            infer_ring(&used)?
        }
    };
    let n = ring.nvars();
    let mut gens = Vec::with_capacity(terms.len());
    for term in &terms {
        let mut exps = vec![0 as Exp; n];
        for f in term {
            if let Factor::Var { name, pos, exp } = f {
                let i = ring
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                exps[i] = exps[i]
                    .checked_add(*exp)
                    .ok_or_else(|| Error::parse(*pos, "exponent too large"))?;
            }
        }
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::minimalize(&ring, gens)
}

/// Renders generators in the same grammar `parse_ideal` accepts.
pub fn render_ideal_text(ideal: &MonomialIdeal) -> String {
    ideal
        .gens()
        .iter()
        .map(|g| ideal.ring().render(g))
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_background_example() {
        let i = parse_ideal("x^4, y^3, z^2, x*y, y^2*z", None).unwrap();
        assert_eq!(i.ring().names(), &["x", "y", "z"]);
        let exps: Vec<Vec<Exp>> = i.gens().iter().map(|g| g.exps().to_vec()).collect();
        assert_eq!(
            exps,
            vec![
                vec![1, 1, 0],
                vec![0, 0, 2],
                vec![0, 3, 0],
                vec![0, 2, 1],
                vec![4, 0, 0]
            ]
        );
    }

    #[test]
    fn unit_forms() {
        assert!(parse_ideal("1", None).unwrap().is_unit());
        assert!(parse_ideal("x^0", None).unwrap().is_unit());
        assert!(parse_ideal("x^2, 1*1", None).unwrap().is_unit());
    }

    #[test]
    fn inference() {
        assert_eq!(parse_ideal("x, y", None).unwrap().nvars(), 2);
        assert_eq!(parse_ideal("z", None).unwrap().nvars(), 3);
        assert_eq!(parse_ideal("x1*x5", None).unwrap().nvars(), 5);
        assert!(matches!(
            parse_ideal("a*b", None),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_ideal("x^", None).unwrap_err(),
            Error::parse(2, "expected an integer exponent")
        );
        assert!(matches!(
            parse_ideal("x^-1", None),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            parse_ideal("x,,y", None),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            parse_ideal("x y", None),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            parse_ideal("2*x", None),
            Err(Error::Parse { pos: 0, .. })
        ));
        let r = Ring::new(&["x", "y"]).unwrap();
        assert_eq!(
            parse_ideal("x*z", Some(&r)),
            Err(Error::UnknownVariable("z".into()))
        );
    }

    #[test]
    fn render_round_trip() {
        let i = parse_ideal("x^3*y, y^2*z, z^5", None).unwrap();
        assert_eq!(
            parse_ideal(&render_ideal_text(&i), Some(i.ring())).unwrap(),
            i
        );
    }
}
