//! Text format for presentations, words and substitutions.
//!
//! ```text
//! # comment
//! gens: a b;
//! rels: a b A B;
//! ```
//!
//! A word is a whitespace-separated token list. A token is a generator name,
//! optionally followed by `^k` for an integer `k` (so `p1^-1`, `p1^6`). When the
//! alphabet consists of single lowercase letters, a token may also be a run of
//! letters with uppercase meaning inverse (`DfEaBc`). The token `1` is the
//! empty word. Substitutions use a `map:` section of `name -> word;` entries.

use super::{GroupError, Presentation, Word};
use crate::groups::word::Letter;

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Tok {
    Ident(String),
    Colon,
    Semi,
    Arrow,
}

#[derive(Clone, Debug)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub(crate) fn lex(text: &str) -> Vec<Spanned> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<(usize, char)> = line.chars().enumerate().collect();
        let mut k = 0;
        while k < chars.len() {
            let (col, c) = chars[k];
            let pos = (li + 1, col + 1);
            if c.is_whitespace() {
                k += 1;
                continue;
            }
            let tok = match c {
                ':' => Some(Tok::Colon),
                ';' => Some(Tok::Semi),
                '-' if chars.get(k + 1).map(|x| x.1) == Some('>') => {
                    k += 1;
                    Some(Tok::Arrow)
                }
                _ => None,
            };
            if let Some(tok) = tok {
                out.push(Spanned {
                    tok,
                    line: pos.0,
                    col: pos.1,
                });
                k += 1;
                continue;
            }
            let start = k;
            while k < chars.len() && !chars[k].1.is_whitespace() && !matches!(chars[k].1, ':' | ';')
            {
                if chars[k].1 == '-' && chars.get(k + 1).map(|x| x.1) == Some('>') {
                    break;
                }
                k += 1;
            }
            let s: String = chars[start..k].iter().map(|x| x.1).collect();
            out.push(Spanned {
                tok: Tok::Ident(s),
                line: pos.0,
                col: pos.1,
            });
        }
    }
    out
}

fn syntax(s: &Spanned, msg: impl Into<String>) -> GroupError {
    GroupError::Syntax {
        line: s.line,
        col: s.col,
        msg: msg.into(),
    }
}

fn eof(msg: &str) -> GroupError {
    GroupError::Syntax {
        line: 0,
        col: 0,
        msg: format!("unexpected end of input: {msg}"),
    }
}

struct Cursor {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Cursor {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    /// Consumes `keyword :` if present.
    fn section(&mut self, keyword: &str) -> bool {
        let hit = matches!(self.toks.get(self.pos), Some(Spanned { tok: Tok::Ident(s), .. }) if s == keyword)
            && matches!(
                self.toks.get(self.pos + 1),
                Some(Spanned {
                    tok: Tok::Colon,
                    ..
                })
            );
        if hit {
            self.pos += 2;
        }
        hit
    }

    fn expect_section(&mut self, keyword: &str) -> Result<(), GroupError> {
        if self.section(keyword) {
            return Ok(());
        }
        match self.peek() {
            Some(s) => Err(syntax(s, format!("expected `{keyword}:`"))),
            None => Err(eof(&format!("expected `{keyword}:`"))),
        }
    }

    /// Identifier tokens up to the next `;`.
    fn idents_until_semi(&mut self) -> Result<Vec<Spanned>, GroupError> {
        let mut out = Vec::new();
        loop {
            match self.next() {
                Some(
                    s @ Spanned {
                        tok: Tok::Ident(_), ..
                    },
                ) => out.push(s),
                Some(Spanned { tok: Tok::Semi, .. }) => return Ok(out),
                Some(s) => return Err(syntax(&s, "unexpected symbol")),
                None => return Err(eof("missing `;`")),
            }
        }
    }
}

fn ident(s: &Spanned) -> &str {
    match &s.tok {
        Tok::Ident(x) => x,
        _ => unreachable!("identifier expected"),
    }
}

pub(crate) fn word_from_tokens(pres: &Presentation, toks: &[Spanned]) -> Result<Word, GroupError> {
    let mut w = Word::identity();
    for t in toks {
        w = w.mul(&token_word(pres, t)?);
    }
    Ok(w)
}

fn token_word(pres: &Presentation, t: &Spanned) -> Result<Word, GroupError> {
    let text = ident(t);
    if text == "1" {
        return Ok(Word::identity());
    }
    let (base, exp) = match text.split_once('^') {
        Some((b, e)) => {
            let e: i64 = e
                .parse()
                .map_err(|_| syntax(t, format!("bad exponent in `{text}`")))?;
            (b, e)
        }
        None => (text, 1),
    };
    let unknown = || GroupError::UnknownGenerator {
        name: base.to_string(),
        line: t.line,
        col: t.col,
    };
    let w = if let Some(g) = pres.gen_index(base) {
        Word::gen(g)
    } else if pres.single_letter_alphabet() {
        let mut letters = Vec::new();
        for c in base.chars() {
            let lower: String = c.to_lowercase().collect();
            let g = pres.gen_index(&lower).ok_or_else(unknown)?;
            letters.push(Letter::new(g, c.is_uppercase()));
        }
        Word::from_letters(letters)
    } else {
        return Err(unknown());
    };
    Ok(w.pow(exp))
}

pub fn parse_presentation(text: &str) -> Result<Presentation, GroupError> {
    let mut cur = Cursor {
        toks: lex(text),
        pos: 0,
    };
    cur.expect_section("gens")?;
    let gen_toks = cur.idents_until_semi()?;
    let mut names = Vec::new();
    for t in &gen_toks {
        let n = ident(t).to_string();
        if n.contains('^') || n == "1" {
            return Err(syntax(t, format!("`{n}` is not a valid generator name")));
        }
        if names.contains(&n) {
            return Err(GroupError::DuplicateGenerator(n));
        }
        names.push(n);
    }
    let mut pres = Presentation::new(names, Vec::new())?;
    if cur.peek().is_none() {
        return Ok(pres);
    }
    cur.expect_section("rels")?;
    let mut rels = Vec::new();
    while cur.peek().is_some() {
        let toks = cur.idents_until_semi()?;
        rels.push(word_from_tokens(&pres, &toks)?);
    }
    pres = Presentation::new(pres.gens().to_vec(), rels)?;
    Ok(pres)
}

pub fn parse_word(pres: &Presentation, text: &str) -> Result<Word, GroupError> {
    let toks = lex(text);
    if let Some(bad) = toks.iter().find(|s| !matches!(s.tok, Tok::Ident(_))) {
        return Err(syntax(bad, "unexpected symbol in word"));
    }
    word_from_tokens(pres, &toks)
}

/// Parses `map: x -> word; ...` into per-generator images (source order).
pub(crate) fn parse_map(
    text: &str,
    source: &Presentation,
    target: &Presentation,
) -> Result<Vec<Word>, GroupError> {
    let mut cur = Cursor {
        toks: lex(text),
        pos: 0,
    };
    cur.expect_section("map")?;
    let mut images: Vec<Option<Word>> = vec![None; source.n_gens()];
    while let Some(head) = cur.next() {
        let Tok::Ident(name) = &head.tok else {
            return Err(syntax(&head, "expected a generator name"));
        };
        let g = source
            .gen_index(name)
            .ok_or_else(|| GroupError::UnknownGenerator {
                name: name.clone(),
                line: head.line,
                col: head.col,
            })?;
        match cur.next() {
            Some(Spanned {
                tok: Tok::Arrow, ..
            }) => {}
            Some(s) => return Err(syntax(&s, "expected `->`")),
            None => return Err(eof("expected `->`")),
        }
        let toks = cur.idents_until_semi()?;
        if images[g].is_some() {
            return Err(syntax(&head, format!("generator `{name}` mapped twice")));
        }
        images[g] = Some(word_from_tokens(target, &toks)?);
    }
    let missing: Vec<String> = images
        .iter()
        .enumerate()
        .filter(|(_, w)| w.is_none())
        .map(|(g, _)| source.name(g).to_string())
        .collect();
    if !missing.is_empty() {
        return Err(GroupError::PartialMap(missing.join(" ")));
    }
    Ok(images.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_presentation() {
        let p = parse_presentation("gens: a b; rels: a b A B;").unwrap();
        assert_eq!(p.n_gens(), 2);
        assert_eq!(p.relators(), &[Word::from_signed(&[1, 2, -1, -2])]);
    }

    #[test]
    fn unknown_generator_reports_position() {
        let err = parse_presentation("gens: a b;\nrels: a q;").unwrap_err();
        assert_eq!(
            err,
            GroupError::UnknownGenerator {
                name: "q".into(),
                line: 2,
                col: 9
            }
        );
    }

    #[test]
    fn multi_char_names_and_powers() {
        let p = parse_presentation("gens: p1 p2;\nrels: p1^6; p1 p2^-1;").unwrap();
        assert_eq!(p.relators()[0], Word::gen(0).pow(6));
        assert_eq!(p.relators()[1], Word::from_signed(&[1, -2]));
    }

    #[test]
    fn missing_semicolon_is_a_syntax_error() {
        assert!(matches!(
            parse_presentation("gens: a b"),
            Err(GroupError::Syntax { .. })
        ));
    }

    #[test]
    fn concatenated_letters() {
        let p = parse_presentation("gens: a b c d e f;").unwrap();
        assert_eq!(
            parse_word(&p, "DfEaBc").unwrap(),
            parse_word(&p, "d^-1 f e^-1 a b^-1 c").unwrap()
        );
    }
}
