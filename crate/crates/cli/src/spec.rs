//! Compact group specifications.
//!
//! ```text
//! spec    := product | atom
//! product := atom ('+' atom)+          direct product, left to right
//! atom    := family ':' args | name | 'file:' path | 'semidirect@' path
//! ```
//!
//! Families with arguments: `cyclic:n`, `abelian:n1,n2,..`, `dihedral:n`,
//! `semidihedral:n`, `quaternion:n`, `holomorph:n`, `heisenberg:p`,
//! `symmetric:n`, `wreath:p`, `metacyclic:m,e,k,t`. Fixed names: `a4`,
//! `sl23`, `extraspecial27`, `smallgroup-216-86`, and `holomorph-cN` as a
//! shorthand for `holomorph:N`.
//!
//! A `semidirect@` file is JSON with keys `normal` and `complement` (specs)
//! and `action` (`{"generators": [..], "images": [[..], ..]}`), plus an
//! optional `name`.

use std::fs;
use std::path::Path;

use serde::Deserialize;
use socle_core::constructors::*;
use socle_core::group::FiniteGroup;
use socle_core::{Error, Result};

#[derive(Deserialize)]
struct SemidirectFile {
    #[serde(default)]
    name: Option<String>,
    normal: String,
    complement: String,
    action: ActionTable,
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn numbers(args: &str, spec: &str) -> Result<Vec<usize>> {
    args.split(',')
        .map(|a| {
            a.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad number {a:?} in {spec:?}")))
        })
        .collect()
}

fn one(args: &str, spec: &str) -> Result<usize> {
    match numbers(args, spec)?.as_slice() {
        [n] => Ok(*n),
        _ => Err(Error::Parse(format!("{spec:?} takes exactly one argument"))),
    }
}

pub fn parse_spec(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix("file:") {
        return parse_group(&read(path)?);
    }
    if let Some(path) = spec.strip_prefix("semidirect@") {
        return semidirect_file(Path::new(path));
    }
    if spec.contains('+') {
        let mut parts = spec.split('+');
        let mut g = parse_atom(parts.next().unwrap_or_default())?;
        for part in parts {
            g = direct_product(&g, &parse_atom(part)?)?;
        }
        return Ok(g);
    }
    parse_atom(spec)
}

fn semidirect_file(path: &Path) -> Result<FiniteGroup> {
    let display = path.display().to_string();
    let doc: SemidirectFile =
        serde_json::from_str(&read(&display)?).map_err(|e| Error::Parse(format!("{display}: {e}")))?;
    let n = parse_spec(&doc.normal)?;
    let h = parse_spec(&doc.complement)?;
    let g = semidirect(&n, &h, &doc.action)?;
    Ok(match doc.name {
        Some(name) => g.renamed(name),
        None => g,
    })
}

fn parse_atom(atom: &str) -> Result<FiniteGroup> {
    let atom = atom.trim();
    if let Some(n) = atom.strip_prefix("holomorph-c") {
        return holomorph_cyclic(one(n, atom)?);
    }
    let (head, args) = match atom.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (atom, None),
    };
    let need = || args.ok_or_else(|| Error::Parse(format!("{atom:?} needs arguments")));
    match head.to_ascii_lowercase().as_str() {
        "cyclic" => cyclic(one(need()?, atom)?),
        "abelian" => abelian(&numbers(need()?, atom)?),
        "dihedral" => dihedral(one(need()?, atom)?),
        "semidihedral" => family(Family::SemiDihedral, one(need()?, atom)?),
        "quaternion" => quaternion(one(need()?, atom)?),
        "holomorph" => holomorph_cyclic(one(need()?, atom)?),
        "heisenberg" => heisenberg(one(need()?, atom)?),
        "symmetric" => symmetric(one(need()?, atom)?),
        "wreath" => wreath_cyclic(one(need()?, atom)?),
        "metacyclic" => match numbers(need()?, atom)?.as_slice() {
            &[m, e, k, t] => metacyclic(m, e, k, t, format!("M({m},{e},{k},{t})")),
            _ => Err(Error::Parse(format!("{atom:?} takes m,e,k,t"))),
        },
        "a4" if args.is_none() => Ok(alternating4()),
        "sl23" if args.is_none() => Ok(sl23()),
        "extraspecial27" if args.is_none() => Ok(extraspecial_27_exp3()),
        "smallgroup-216-86" if args.is_none() => smallgroup_216_86(),
        _ => Err(Error::Parse(format!("unknown group spec {atom:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_spec("dihedral:16").unwrap().order(), 16);
        assert_eq!(parse_spec("holomorph-c8").unwrap().order(), 32);
        assert_eq!(parse_spec("abelian:4,2").unwrap().order(), 8);
        assert_eq!(parse_spec("dihedral:8+cyclic:3").unwrap().order(), 24);
        assert_eq!(parse_spec("metacyclic:8,2,5,0").unwrap().order(), 16);
        assert_eq!(parse_spec("A4").unwrap().order(), 12);
    }

    #[test]
    fn bad_specs() {
        for s in ["", "dihedral", "dihedral:x", "cyclic:2,3", "nonsense:4", "a4:2", "file:/no/such/file"] {
            assert!(matches!(parse_spec(s), Err(Error::Parse(_))), "{s}");
        }
    }

    #[test]
    fn semidirect_from_file() {
        let dir = std::env::temp_dir().join(format!("socle-spec-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("s3.json");
        // C3 by C2 acting as inversion.
        fs::write(
            &path,
            r#"{"name":"S3","normal":"cyclic:3","complement":"cyclic:2","action":{"generators":[1],"images":[[0,2,1]]}}"#,
        )
        .unwrap();
        let g = parse_spec(&format!("semidirect@{}", path.display())).unwrap();
        assert_eq!((g.order(), g.name(), g.is_abelian()), (6, "S3", false));
        fs::remove_dir_all(&dir).unwrap();
    }
}
