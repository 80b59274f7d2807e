//! Line-oriented syntax of the input format: sections, keys and literals.

use std::collections::BTreeSet;

use quivhom_core::exactlin::Rat;
use quivhom_core::quiver::RawQuiver;
use quivhom_core::Field;

use super::FormatError;

pub type RawMatrix = Vec<Vec<Rat>>;

/// One matrix per vertex of the underlying algebra, separated by `|` in the text.
pub type Blocks = Vec<RawMatrix>;

/// A relation term: coefficient and arrow names in traversal order.
pub type RawTerm = (Rat, Vec<String>);

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgebraSection {
    pub quiver: Option<String>,
    pub inline: Option<RawQuiver>,
    pub relations: Vec<Vec<RawTerm>>,
    pub nilpotency: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModuleSection {
    pub algebra: Option<String>,
    pub dims: Vec<(String, usize)>,
    pub maps: Vec<(String, RawMatrix)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RepresentationSection {
    pub quiver: Option<String>,
    pub algebra: Option<String>,
    /// Vertex modules given by reference.
    pub at: Vec<(String, String)>,
    /// Vertex spaces given by dimension; only over the ground field.
    pub dims: Vec<(String, usize)>,
    pub maps: Vec<(String, Blocks)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TrimatSection {
    pub r: Option<String>,
    pub s: Option<String>,
    pub dim: usize,
    pub left: Vec<(String, RawMatrix)>,
    pub right: Vec<(String, RawMatrix)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TripleSection {
    pub trimat: Option<String>,
    pub x: Option<String>,
    pub y: Option<String>,
    pub phi: Option<Blocks>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ComplexSection {
    pub quiver: Option<String>,
    pub algebra: Option<String>,
    pub trimat: Option<String>,
    pub objects: Vec<(i64, String)>,
    pub diffs: Vec<(i64, Blocks)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectionBody {
    Quiver(RawQuiver),
    Algebra(AlgebraSection),
    Module(ModuleSection),
    Representation(RepresentationSection),
    Trimat(TrimatSection),
    Triple(TripleSection),
    Complex(ComplexSection),
}

impl SectionBody {
    pub fn kind(&self) -> &'static str {
        match self {
            SectionBody::Quiver(_) => "quiver",
            SectionBody::Algebra(_) => "algebra",
            SectionBody::Module(_) => "module",
            SectionBody::Representation(_) => "representation",
            SectionBody::Trimat(_) => "trimat",
            SectionBody::Triple(_) => "triple",
            SectionBody::Complex(_) => "complex",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    /// `None` for a header without a name, such as `[quiver]`.
    pub name: Option<String>,
    pub body: SectionBody,
    /// Header line, for diagnostics. Ignored by equality of documents.
    pub line: usize,
}

/// The parsed text, before any reference is resolved.
#[derive(Clone, Debug, Default)]
pub struct Document {
    pub field: Option<Field>,
    pub sections: Vec<Section>,
}

impl PartialEq for Document {
    fn eq(&self, other: &Document) -> bool {
        self.field == other.field
            && self.sections.len() == other.sections.len()
            && self.sections.iter().zip(&other.sections).all(|(a, b)| a.name == b.name && a.body == b.body)
    }
}

/// The name reserved for the ground field viewed as an algebra.
pub const GROUND: &str = "k";

/// A position-tracking reader over one line.
struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '.' | '\'')
}

impl<'a> Cursor<'a> {
    fn new(line: usize, text: &'a str) -> Cursor<'a> {
        Cursor { line, text, pos: 0 }
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn err(&self, msg: impl Into<String>) -> FormatError {
        FormatError::Parse { line: self.line, column: self.column(), msg: msg.into() }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), FormatError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{s}`")))
        }
    }

    fn ident(&mut self) -> Result<String, FormatError> {
        self.skip_ws();
        let len: usize = self.rest().chars().take_while(|&c| is_ident_char(c)).map(char::len_utf8).sum();
        if len == 0 {
            return Err(self.err("expected a name"));
        }
        let s = self.rest()[..len].to_string();
        self.pos += len;
        Ok(s)
    }

    fn finish(&mut self) -> Result<(), FormatError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err(format!("unexpected `{}`", self.rest())))
        }
    }

    fn number_token(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let mut len = 0;
        for (i, c) in rest.char_indices() {
            let ok = c.is_ascii_digit() || c == '/' || (i == 0 && (c == '-' || c == '+'));
            if !ok {
                break;
            }
            len = i + c.len_utf8();
        }
        let tok = &rest[..len];
        self.pos += len;
        tok
    }

    fn rational(&mut self) -> Result<Rat, FormatError> {
        let start = self.pos;
        let tok = self.number_token();
        tok.parse::<Rat>().map_err(|_| {
            self.pos = start;
            self.err("expected a scalar such as `3`, `-1` or `2/5`")
        })
    }

    fn natural(&mut self) -> Result<usize, FormatError> {
        let start = self.pos;
        let tok = self.number_token();
        tok.parse::<usize>().map_err(|_| {
            self.pos = start;
            self.err("expected a non-negative integer")
        })
    }

    fn integer(&mut self) -> Result<i64, FormatError> {
        let start = self.pos;
        let tok = self.number_token();
        tok.parse::<i64>().map_err(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn matrix(&mut self) -> Result<RawMatrix, FormatError> {
        self.expect("[")?;
        let mut rows = Vec::new();
        if self.eat("]") {
            return Ok(rows);
        }
        loop {
            self.expect("[")?;
            let mut row = Vec::new();
            if !self.eat("]") {
                loop {
                    row.push(self.rational()?);
                    if self.eat("]") {
                        break;
                    }
                    self.expect(",")?;
                }
            }
            rows.push(row);
            if self.eat("]") {
                return Ok(rows);
            }
            self.expect(",")?;
        }
    }

    fn blocks(&mut self) -> Result<Blocks, FormatError> {
        let mut out = vec![self.matrix()?];
        while self.eat("|") {
            out.push(self.matrix()?);
        }
        Ok(out)
    }

    /// `[2] a*b - c*d + 1/2 e`: words list arrows in the order they are traversed.
    fn relation(&mut self) -> Result<Vec<RawTerm>, FormatError> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let mut negative = false;
            if self.eat("-") {
                negative = true;
            } else if !self.eat("+") && !first {
                return Err(self.err("expected `+` or `-` between terms"));
            }
            first = false;
            let mut coeff = Rat::from_int(1);
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                coeff = self.rational()?;
                self.eat("*");
            }
            if negative {
                coeff = coeff.neg();
            }
            let mut word = vec![self.ident()?];
            while self.eat("*") {
                word.push(self.ident()?);
            }
            terms.push((coeff, word));
            if self.at_end() {
                return Ok(terms);
            }
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Collects quiver lines shared by `[quiver]` and inline `[algebra]` sections.
fn quiver_line(raw: &mut RawQuiver, key: &str, cur: &mut Cursor) -> Result<bool, FormatError> {
    match key {
        "vertices" => {
            cur.expect("=")?;
            while !cur.at_end() {
                raw.vertices.push(cur.ident()?);
            }
            Ok(true)
        }
        "arrow" => {
            let name = cur.ident()?;
            cur.expect(":")?;
            let s = cur.ident()?;
            cur.expect("->")?;
            let t = cur.ident()?;
            cur.finish()?;
            raw.arrows.push((name, s, t));
            Ok(true)
        }
        _ => Ok(false),
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, key: &str, cur: &Cursor) -> Result<(), FormatError> {
    if slot.is_some() {
        return Err(cur.err(format!("`{key}` given twice")));
    }
    *slot = Some(value);
    Ok(())
}

fn reference(cur: &mut Cursor) -> Result<String, FormatError> {
    cur.expect("=")?;
    let name = cur.ident()?;
    cur.finish()?;
    Ok(name)
}

fn body_line(body: &mut SectionBody, key: &str, cur: &mut Cursor) -> Result<(), FormatError> {
    let unknown = |cur: &Cursor, kind: &str| {
        let mut c = Cursor { line: cur.line, text: cur.text, pos: 0 };
        c.skip_ws();
        c.err(format!("unknown key `{key}` in [{kind}]"))
    };
    let kind = body.kind();
    match body {
        SectionBody::Quiver(raw) => {
            if !quiver_line(raw, key, cur)? {
                return Err(unknown(cur, kind));
            }
        }
        SectionBody::Algebra(a) => match key {
            "vertices" | "arrow" => {
                let raw = a.inline.get_or_insert_with(RawQuiver::default);
                quiver_line(raw, key, cur)?;
            }
            "quiver" => {
                let r = reference(cur)?;
                set_once(&mut a.quiver, r, key, cur)?;
            }
            "relation" => {
                cur.expect("=")?;
                a.relations.push(cur.relation()?);
            }
            "nilpotency" => {
                cur.expect("=")?;
                let n = cur.natural()?;
                cur.finish()?;
                set_once(&mut a.nilpotency, n, key, cur)?;
            }
            _ => return Err(unknown(cur, kind)),
        },
        SectionBody::Module(m) => match key {
            "algebra" => {
                let r = reference(cur)?;
                set_once(&mut m.algebra, r, key, cur)?;
            }
            "dim" => {
                let v = cur.ident()?;
                cur.expect("=")?;
                let d = cur.natural()?;
                cur.finish()?;
                m.dims.push((v, d));
            }
            "map" => {
                let a = cur.ident()?;
                cur.expect("=")?;
                let mat = cur.matrix()?;
                cur.finish()?;
                m.maps.push((a, mat));
            }
            _ => return Err(unknown(cur, kind)),
        },
        SectionBody::Representation(r) => match key {
            "quiver" => {
                let q = reference(cur)?;
                set_once(&mut r.quiver, q, key, cur)?;
            }
            "algebra" => {
                let a = reference(cur)?;
                set_once(&mut r.algebra, a, key, cur)?;
            }
            "at" => {
                let v = cur.ident()?;
                let m = reference(cur)?;
                r.at.push((v, m));
            }
            "dim" => {
                let v = cur.ident()?;
                cur.expect("=")?;
                let d = cur.natural()?;
                cur.finish()?;
                r.dims.push((v, d));
            }
            "map" => {
                let a = cur.ident()?;
                cur.expect("=")?;
                let b = cur.blocks()?;
                cur.finish()?;
                r.maps.push((a, b));
            }
            _ => return Err(unknown(cur, kind)),
        },
        SectionBody::Trimat(t) => match key {
            "r" => {
                let a = reference(cur)?;
                set_once(&mut t.r, a, key, cur)?;
            }
            "s" => {
                let a = reference(cur)?;
                set_once(&mut t.s, a, key, cur)?;
            }
            "dim" => {
                cur.expect("=")?;
                t.dim = cur.natural()?;
                cur.finish()?;
            }
            "left" | "right" => {
                let g = cur.ident()?;
                cur.expect("=")?;
                let mat = cur.matrix()?;
                cur.finish()?;
                if key == "left" { &mut t.left } else { &mut t.right }.push((g, mat));
            }
            _ => return Err(unknown(cur, kind)),
        },
        SectionBody::Triple(t) => match key {
            "trimat" => {
                let a = reference(cur)?;
                set_once(&mut t.trimat, a, key, cur)?;
            }
            "x" => {
                let a = reference(cur)?;
                set_once(&mut t.x, a, key, cur)?;
            }
            "y" => {
                let a = reference(cur)?;
                set_once(&mut t.y, a, key, cur)?;
            }
            "phi" => {
                cur.expect("=")?;
                let b = cur.blocks()?;
                cur.finish()?;
                set_once(&mut t.phi, b, key, cur)?;
            }
            _ => return Err(unknown(cur, kind)),
        },
        SectionBody::Complex(c) => match key {
            "quiver" => {
                let a = reference(cur)?;
                set_once(&mut c.quiver, a, key, cur)?;
            }
            "algebra" => {
                let a = reference(cur)?;
                set_once(&mut c.algebra, a, key, cur)?;
            }
            "trimat" => {
                let a = reference(cur)?;
                set_once(&mut c.trimat, a, key, cur)?;
            }
            "object" => {
                let i = cur.integer()?;
                let name = reference(cur)?;
                if c.objects.iter().any(|(j, _)| *j == i) {
                    return Err(cur.err(format!("object in degree {i} given twice")));
                }
                c.objects.push((i, name));
            }
            "diff" => {
                let i = cur.integer()?;
                cur.expect("=")?;
                let b = cur.blocks()?;
                cur.finish()?;
                if c.diffs.iter().any(|(j, _)| *j == i) {
                    return Err(cur.err(format!("differential in degree {i} given twice")));
                }
                c.diffs.push((i, b));
            }
            _ => return Err(unknown(cur, kind)),
        },
    }
    Ok(())
}

fn header(cur: &mut Cursor) -> Result<(SectionBody, Option<String>), FormatError> {
    cur.expect("[")?;
    let kind_col = cur.pos;
    let kind = cur.ident()?;
    let body = match kind.as_str() {
        "quiver" => SectionBody::Quiver(RawQuiver::default()),
        "algebra" => SectionBody::Algebra(AlgebraSection::default()),
        "module" => SectionBody::Module(ModuleSection::default()),
        "representation" => SectionBody::Representation(RepresentationSection::default()),
        "trimat" => SectionBody::Trimat(TrimatSection::default()),
        "triple" => SectionBody::Triple(TripleSection::default()),
        "complex" => SectionBody::Complex(ComplexSection::default()),
        other => {
            cur.pos = kind_col;
            return Err(cur.err(format!("unknown section kind `{other}`")));
        }
    };
    let name = if cur.eat("]") {
        None
    } else {
        let n = cur.ident()?;
        cur.expect("]")?;
        Some(n)
    };
    cur.finish()?;
    Ok((body, name))
}

pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let mut doc = Document::default();
    let mut names: BTreeSet<String> = BTreeSet::new();
    let mut unnamed: BTreeSet<&'static str> = BTreeSet::new();
    for (idx, full) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(full);
        let mut cur = Cursor::new(line, content);
        if cur.at_end() {
            continue;
        }
        if cur.peek() == Some('[') {
            let start = cur.pos;
            let (body, name) = header(&mut cur)?;
            match &name {
                Some(n) if n == GROUND => {
                    cur.pos = start;
                    return Err(cur.err(format!("`{GROUND}` is reserved for the ground field")));
                }
                Some(n) if !names.insert(n.clone()) => {
                    cur.pos = start;
                    return Err(cur.err(format!("duplicate section name `{n}`")));
                }
                None if !unnamed.insert(body.kind()) => {
                    cur.pos = start;
                    return Err(cur.err(format!("more than one unnamed [{}] section", body.kind())));
                }
                _ => {}
            }
            doc.sections.push(Section { name, body, line });
            continue;
        }
        let key = cur.ident()?;
        match doc.sections.last_mut() {
            None if key == "field" => {
                cur.expect("=")?;
                let col = cur.pos;
                let f: Field = cur.rest().trim().parse().map_err(|e: quivhom_core::Error| {
                    cur.pos = col;
                    cur.err(e.to_string())
                })?;
                set_once(&mut doc.field, f, "field", &cur)?;
            }
            None => {
                cur.pos = 0;
                cur.skip_ws();
                return Err(cur.err(format!("`{key}` outside of any section")));
            }
            Some(section) => body_line(&mut section.body, &key, &mut cur)?,
        }
    }
    Ok(doc)
}
