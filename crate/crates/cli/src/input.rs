//! Loading several input files into one document while remembering which
//! file each section came from.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use quivhom_core::Field;

use crate::format::{key, parse_document, Document, FormatError, InputDocument, Symbols};
use crate::CliError;

/// A loaded set of files. `origin[i]` is the file index of section `i`.
pub struct Loaded {
    pub doc: InputDocument,
    pub files: Vec<PathBuf>,
    origin: Vec<usize>,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

pub fn load(paths: &[&Path], field: Field, field_given: bool) -> Result<Loaded, CliError> {
    let mut merged = Document::default();
    let mut origin = Vec::new();
    let mut files: Vec<PathBuf> = Vec::new();
    let mut names = BTreeSet::new();
    let mut unnamed = BTreeSet::new();
    for &path in paths {
        if files.iter().any(|f| f == path) {
            continue;
        }
        let label = path.display().to_string();
        let text = read(path)?;
        let doc = parse_document(&text).map_err(|source| CliError::Format { file: label.clone(), source })?;
        if let Some(f) = doc.field {
            match merged.field {
                Some(g) if g != f => {
                    return Err(CliError::Usage(format!("{label} declares field {f}, another file {g}")))
                }
                _ => merged.field = Some(f),
            }
        }
        for sec in doc.sections {
            let fresh = match &sec.name {
                Some(n) => names.insert(n.clone()),
                None => unnamed.insert(sec.body.kind()),
            };
            if !fresh {
                let source = FormatError::Parse {
                    line: sec.line,
                    column: 1,
                    msg: format!("section [{} {}] is defined in more than one file", sec.body.kind(), key(&sec.name)),
                };
                return Err(CliError::Format { file: label, source });
            }
            origin.push(files.len());
            merged.sections.push(sec);
        }
        files.push(path.to_path_buf());
    }
    let field = match merged.field {
        Some(f) if field_given && f != field => {
            return Err(CliError::Usage(format!("--field {field} contradicts the field {f} declared in the input")))
        }
        Some(f) => f,
        None => field,
    };
    let label = files.iter().map(|f| f.display().to_string()).collect::<Vec<_>>().join(", ");
    let symbols = Symbols::build(&merged, field).map_err(|source| CliError::Format { file: label, source })?;
    Ok(Loaded { doc: InputDocument { document: merged, symbols }, files, origin })
}

impl Loaded {
    /// Names of the `kind` sections defined in `path`, in file order.
    pub fn names_in(&self, path: &Path, kind: &str) -> Vec<String> {
        let Some(idx) = self.files.iter().position(|f| f == path) else { return Vec::new() };
        self.doc
            .document
            .sections
            .iter()
            .zip(&self.origin)
            .filter(|(s, &o)| o == idx && s.body.kind() == kind)
            .map(|(s, _)| key(&s.name))
            .collect()
    }

    /// Names of all `kind` sections, in document order.
    pub fn names(&self, kind: &str) -> Vec<String> {
        self.doc.document.sections.iter().filter(|s| s.body.kind() == kind).map(|s| key(&s.name)).collect()
    }

    /// The section of `kind` named `name`, or the only one defined in `path`.
    pub fn choose(&self, path: &Path, kind: &str, name: &Option<String>) -> Result<String, CliError> {
        let found = self.names_in(path, kind);
        match name {
            Some(n) if found.contains(n) => Ok(n.clone()),
            Some(n) => Err(CliError::Usage(format!("{} has no [{kind} {n}]", path.display()))),
            None if found.len() == 1 => Ok(found[0].clone()),
            None if found.is_empty() => Err(CliError::Usage(format!("{} defines no [{kind}] section", path.display()))),
            None => {
                Err(CliError::Usage(format!("{} defines several [{kind}] sections; pick one by name", path.display())))
            }
        }
    }
}
