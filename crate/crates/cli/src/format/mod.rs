//! The plain-text input format: sections of `key = value` lines describing
//! quivers, algebras, modules, representations, triangular matrix rings,
//! triples and complexes. `docs/format.md` has the grammar.

mod resolve;
mod syntax;
mod write;

use quivhom_core::Field;
use thiserror::Error;

pub use resolve::{ground_algebra, key, ComplexEntry, Over, RepEntry, Symbols};
pub use syntax::{
    parse_document, AlgebraSection, Blocks, ComplexSection, Document, ModuleSection, RawMatrix, RawTerm,
    RepresentationSection, Section, SectionBody, TrimatSection, TripleSection, GROUND,
};
pub use write::write_document;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("line {line}: unresolved reference to {what} `{name}`")]
    UnresolvedReference { line: usize, name: String, what: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: quivhom_core::Error },
}

/// A parsed document together with every object it defines.
#[derive(Debug)]
pub struct InputDocument {
    pub document: Document,
    pub symbols: Symbols,
}

impl PartialEq for InputDocument {
    fn eq(&self, other: &InputDocument) -> bool {
        self.document == other.document
    }
}

impl InputDocument {
    pub fn field(&self) -> Field {
        self.symbols.field
    }

    pub fn to_text(&self) -> String {
        write_document(&self.document)
    }
}

/// Parses and validates a document over its declared field, or `ℚ` if none.
pub fn parse_input(text: &str) -> Result<InputDocument, FormatError> {
    parse_input_with(text, Field::Rationals)
}

/// Like [`parse_input`], with the field to use when the text declares none.
pub fn parse_input_with(text: &str, default_field: Field) -> Result<InputDocument, FormatError> {
    let document = parse_document(text)?;
    let field = document.field.unwrap_or(default_field);
    let symbols = Symbols::build(&document, field)?;
    Ok(InputDocument { document, symbols })
}
