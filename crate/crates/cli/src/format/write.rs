//! Canonical text rendering of a [`Document`].

use std::fmt::Write;

use quivhom_core::quiver::RawQuiver;

use super::syntax::{Blocks, Document, RawMatrix, RawTerm, SectionBody};

fn matrix(m: &RawMatrix) -> String {
    let rows: Vec<String> =
        m.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

fn blocks(b: &Blocks) -> String {
    b.iter().map(matrix).collect::<Vec<_>>().join(" | ")
}

fn relation(terms: &[RawTerm]) -> String {
    let mut out = String::new();
    for (i, (c, word)) in terms.iter().enumerate() {
        let negative = c.to_string().starts_with('-');
        let abs = if negative { c.neg() } else { c.clone() };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !abs.is_one() {
            let _ = write!(out, "{abs} ");
        }
        out.push_str(&word.join("*"));
    }
    out
}

/// `inline` quivers always get a `vertices` line, which is what marks them as present.
fn quiver_lines(out: &mut String, q: &RawQuiver, inline: bool) {
    if inline && q.vertices.is_empty() {
        out.push_str("vertices =\n");
    } else if !q.vertices.is_empty() {
        let _ = writeln!(out, "vertices = {}", q.vertices.join(" "));
    }
    for (a, s, t) in &q.arrows {
        let _ = writeln!(out, "arrow {a} : {s} -> {t}");
    }
}

fn reference(out: &mut String, key: &str, value: &Option<String>) {
    if let Some(v) = value {
        let _ = writeln!(out, "{key} = {v}");
    }
}

/// Renders a document so that parsing the result gives an equal document.
pub fn write_document(doc: &Document) -> String {
    let mut out = String::new();
    if let Some(f) = doc.field {
        let _ = writeln!(out, "field = {f}");
    }
    for (i, sec) in doc.sections.iter().enumerate() {
        if i > 0 || doc.field.is_some() {
            out.push('\n');
        }
        match &sec.name {
            Some(n) => writeln!(out, "[{} {n}]", sec.body.kind()),
            None => writeln!(out, "[{}]", sec.body.kind()),
        }
        .ok();
        match &sec.body {
            SectionBody::Quiver(q) => quiver_lines(&mut out, q, false),
            SectionBody::Algebra(a) => {
                reference(&mut out, "quiver", &a.quiver);
                if let Some(q) = &a.inline {
                    quiver_lines(&mut out, q, true);
                }
                for r in &a.relations {
                    let _ = writeln!(out, "relation = {}", relation(r));
                }
                if let Some(n) = a.nilpotency {
                    let _ = writeln!(out, "nilpotency = {n}");
                }
            }
            SectionBody::Module(m) => {
                reference(&mut out, "algebra", &m.algebra);
                for (v, d) in &m.dims {
                    let _ = writeln!(out, "dim {v} = {d}");
                }
                for (a, mat) in &m.maps {
                    let _ = writeln!(out, "map {a} = {}", matrix(mat));
                }
            }
            SectionBody::Representation(r) => {
                reference(&mut out, "quiver", &r.quiver);
                reference(&mut out, "algebra", &r.algebra);
                for (v, m) in &r.at {
                    let _ = writeln!(out, "at {v} = {m}");
                }
                for (v, d) in &r.dims {
                    let _ = writeln!(out, "dim {v} = {d}");
                }
                for (a, b) in &r.maps {
                    let _ = writeln!(out, "map {a} = {}", blocks(b));
                }
            }
            SectionBody::Trimat(t) => {
                reference(&mut out, "r", &t.r);
                reference(&mut out, "s", &t.s);
                let _ = writeln!(out, "dim = {}", t.dim);
                for (g, m) in &t.left {
                    let _ = writeln!(out, "left {g} = {}", matrix(m));
                }
                for (g, m) in &t.right {
                    let _ = writeln!(out, "right {g} = {}", matrix(m));
                }
            }
            SectionBody::Triple(t) => {
                reference(&mut out, "trimat", &t.trimat);
                reference(&mut out, "x", &t.x);
                reference(&mut out, "y", &t.y);
                if let Some(b) = &t.phi {
                    let _ = writeln!(out, "phi = {}", blocks(b));
                }
            }
            SectionBody::Complex(c) => {
                reference(&mut out, "quiver", &c.quiver);
                reference(&mut out, "algebra", &c.algebra);
                reference(&mut out, "trimat", &c.trimat);
                for (i, m) in &c.objects {
                    let _ = writeln!(out, "object {i} = {m}");
                }
                for (i, b) in &c.diffs {
                    let _ = writeln!(out, "diff {i} = {}", blocks(b));
                }
            }
        }
    }
    out
}
