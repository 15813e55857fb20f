use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::from_permutations;
use crate::error::{Error, Result};
use crate::group::{make_group, FiniteGroup};

/// On-disk group description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "format", rename_all = "lowercase")]
pub enum GroupFile {
    Cayley {
        name: String,
        order: usize,
        table: Vec<Vec<usize>>,
    },
    Perm {
        name: String,
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl GroupFile {
    pub fn from_group(g: &FiniteGroup) -> GroupFile {
        GroupFile::Cayley {
            name: g.name().to_string(),
            order: g.order(),
            table: g.table_rows(),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupFile::Cayley { name, order, table } => {
                if table.len() != *order {
                    return Err(Error::Parse(format!(
                        "declared order {order} but table has {} rows",
                        table.len()
                    )));
                }
                make_group(table, name.clone())
            }
            GroupFile::Perm {
                name,
                degree,
                generators,
            } => from_permutations(*degree, generators, name.clone()),
        }
    }
}

pub fn parse_group(document: &str) -> Result<FiniteGroup> {
    let file: GroupFile = serde_json::from_str(document).map_err(|e| Error::Parse(e.to_string()))?;
    file.build()
}

/// Catalog directory manifest. Without one, every `*.json` file in the
/// directory is loaded in file-name order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogManifest {
    pub id: String,
    #[serde(default)]
    pub tags: Vec<String>,
    pub files: Vec<String>,
}

pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Clone, Debug)]
pub struct Catalog {
    pub id: String,
    pub tags: Vec<String>,
    pub groups: Vec<FiniteGroup>,
}

impl Catalog {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn load_catalog(dir: &Path) -> Result<Catalog> {
    let manifest_path = dir.join(MANIFEST_FILE);
    let manifest = if manifest_path.exists() {
        serde_json::from_str(&read(&manifest_path)?)
            .map_err(|e| Error::Parse(format!("{}: {e}", manifest_path.display())))?
    } else {
        let entries = fs::read_dir(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
        let mut files: Vec<String> = entries
            .filter_map(|e| e.ok())
            .map(|e| e.file_name().to_string_lossy().into_owned())
            .filter(|f| f.ends_with(".json"))
            .collect();
        files.sort();
        CatalogManifest {
            id: dir.display().to_string(),
            tags: Vec::new(),
            files,
        }
    };
    let mut groups = Vec::with_capacity(manifest.files.len());
    for f in &manifest.files {
        let path = dir.join(f);
        let g = parse_group(&read(&path)?).map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })?;
        groups.push(g);
    }
    Ok(Catalog {
        id: manifest.id,
        tags: manifest.tags,
        groups,
    })
}

/// Writes one Cayley file per group plus a manifest.
pub fn write_catalog(dir: &Path, id: &str, tags: &[String], groups: &[FiniteGroup]) -> Result<()> {
    let io = |e: std::io::Error| Error::Parse(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let mut files = Vec::new();
    for (i, g) in groups.iter().enumerate() {
        let file = format!("{:03}.json", i + 1);
        let body = serde_json::to_string(&GroupFile::from_group(g)).expect("serializable");
        fs::write(dir.join(&file), body).map_err(io)?;
        files.push(file);
    }
    let manifest = CatalogManifest {
        id: id.to_string(),
        tags: tags.to_vec(),
        files,
    };
    let body = serde_json::to_string_pretty(&manifest).expect("serializable");
    fs::write(dir.join(MANIFEST_FILE), body).map_err(io)
}
