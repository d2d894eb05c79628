//! Token-level pattern language.
//!
//! ```text
//! pattern  := item+
//! item     := '^' | '$' | '{TERM}' | '{NUM}' | '{ANY}' | '{ANY*}'
//!           | '(' seq ('|' seq)* ')' | literal
//! ```
//!
//! Literals compare case-insensitively against tokens. Punctuation tokens
//! are invisible to matching, so `{TERM} is` matches `(XML) is ...`. An
//! empty alternative makes a group optional: `(also|)`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::corpus::Term;
use crate::segmenter::{tokenize, StopWords, Token, TokenKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Node {
    Start,
    End,
    Term,
    Num,
    Any,
    AnyStar,
    Lit(String),
    Group(Vec<Vec<Node>>),
}

/// Parse failure: char offset into the expression and a reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub offset: usize,
    pub reason: String,
}

fn err<T>(offset: usize, reason: &str) -> Result<T, SyntaxError> {
    Err(SyntaxError {
        offset,
        reason: reason.to_string(),
    })
}

const SPECIAL: &[char] = &['^', '$', '{', '}', '(', ')', '|'];

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    /// Parses items until `)` , `|` or end of input.
    fn seq(&mut self, depth: usize) -> Result<Vec<Node>, SyntaxError> {
        let mut nodes = Vec::new();
        loop {
            self.skip_ws();
            let Some(&c) = self.chars.get(self.pos) else {
                return Ok(nodes);
            };
            match c {
                ')' | '|' if depth > 0 => return Ok(nodes),
                ')' => return err(self.pos, "unbalanced ')'"),
                '|' => return err(self.pos, "alternation must be inside parentheses"),
                '}' => return err(self.pos, "unbalanced '}'"),
                '^' => {
                    self.pos += 1;
                    nodes.push(Node::Start);
                }
                '$' => {
                    self.pos += 1;
                    nodes.push(Node::End);
                }
                '{' => nodes.push(self.placeholder()?),
                '(' => nodes.push(self.group(depth)?),
                _ => nodes.extend(self.literal()?),
            }
        }
    }

    fn placeholder(&mut self) -> Result<Node, SyntaxError> {
        let open = self.pos;
        let Some(close) = self.chars[open..].iter().position(|&c| c == '}') else {
            return err(open, "unbalanced '{'");
        };
        let name: String = self.chars[open + 1..open + close].iter().collect();
        self.pos = open + close + 1;
        match name.trim().to_uppercase().as_str() {
            "TERM" => Ok(Node::Term),
            "NUM" => Ok(Node::Num),
            "ANY" => Ok(Node::Any),
            "ANY*" => Ok(Node::AnyStar),
            _ => err(open, "unknown placeholder"),
        }
    }

    fn group(&mut self, depth: usize) -> Result<Node, SyntaxError> {
        let open = self.pos;
        self.pos += 1;
        let mut alternatives = Vec::new();
        loop {
            alternatives.push(self.seq(depth + 1)?);
            match self.chars.get(self.pos) {
                Some('|') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    return Ok(Node::Group(alternatives));
                }
                _ => return err(open, "unbalanced '('"),
            }
        }
    }

    fn literal(&mut self) -> Result<Vec<Node>, SyntaxError> {
        let start = self.pos;
        while self.pos < self.chars.len()
            && !self.chars[self.pos].is_whitespace()
            && !SPECIAL.contains(&self.chars[self.pos])
        {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let nodes: Vec<Node> = tokenize(&text, &StopWords::default())
            .into_iter()
            .filter(|t| t.kind != TokenKind::Punctuation)
            .map(|t| Node::Lit(t.folded()))
            .collect();
        if nodes.is_empty() {
            return err(start, "literal consists only of punctuation");
        }
        Ok(nodes)
    }
}

pub(crate) fn parse(expr: &str) -> Result<Vec<Node>, SyntaxError> {
    let chars: Vec<char> = expr.chars().collect();
    let mut parser = Parser {
        chars: &chars,
        pos: 0,
    };
    let nodes = parser.seq(0)?;
    if nodes.is_empty() {
        return err(0, "empty pattern");
    }
    Ok(nodes)
}

/// Precomputed token forms of a term (surface and aliases).
#[derive(Debug, Clone)]
pub struct TermForms {
    forms: Vec<Vec<String>>,
}

impl TermForms {
    pub fn new(term: &Term) -> Self {
        let forms = term
            .forms()
            .map(|form| {
                visible(&tokenize(form, &StopWords::default()))
                    .map(|t| t.folded())
                    .collect::<Vec<_>>()
            })
            .filter(|f: &Vec<String>| !f.is_empty())
            .collect();
        Self { forms }
    }
}

fn visible(tokens: &[Token]) -> impl Iterator<Item = &Token> {
    tokens.iter().filter(|t| t.kind != TokenKind::Punctuation)
}

/// A sentence's match-visible tokens, case-folded.
pub(crate) struct Stream {
    folded: Vec<String>,
    kinds: Vec<TokenKind>,
}

impl Stream {
    pub(crate) fn new(tokens: &[Token]) -> Self {
        let (folded, kinds) = visible(tokens).map(|t| (t.folded(), t.kind)).unzip();
        Self { folded, kinds }
    }
}

struct Cont<'a> {
    nodes: &'a [Node],
    next: Option<&'a Cont<'a>>,
}

struct Matcher<'a> {
    stream: &'a Stream,
    term: &'a TermForms,
}

impl Matcher<'_> {
    fn go(&self, nodes: &[Node], cont: Option<&Cont<'_>>, pos: usize) -> bool {
        let Some((node, rest)) = nodes.split_first() else {
            return match cont {
                None => true,
                Some(c) => self.go(c.nodes, c.next, pos),
            };
        };
        let len = self.stream.folded.len();
        match node {
            Node::Start => pos == 0 && self.go(rest, cont, pos),
            Node::End => pos == len && self.go(rest, cont, pos),
            Node::Any => pos < len && self.go(rest, cont, pos + 1),
            Node::AnyStar => (pos..=len).any(|p| self.go(rest, cont, p)),
            Node::Num => {
                pos < len
                    && self.stream.kinds[pos] == TokenKind::Number
                    && self.go(rest, cont, pos + 1)
            }
            Node::Lit(word) => {
                pos < len && self.stream.folded[pos] == *word && self.go(rest, cont, pos + 1)
            }
            Node::Term => self.term.forms.iter().any(|form| {
                let end = pos + form.len();
                end <= len && self.stream.folded[pos..end] == form[..] && self.go(rest, cont, end)
            }),
            Node::Group(alternatives) => {
                let next = Cont {
                    nodes: rest,
                    next: cont,
                };
                alternatives
                    .iter()
                    .any(|alt| self.go(alt, Some(&next), pos))
            }
        }
    }
}

/// Unanchored search: true if the pattern matches starting anywhere.
pub(crate) fn search(nodes: &[Node], stream: &Stream, term: &TermForms) -> bool {
    let matcher = Matcher { stream, term };
    (0..=stream.folded.len()).any(|start| matcher.go(nodes, None, start))
}
