//! Freezing: a gadget is written to disk only after its contract has been
//! re-verified and each forbidden pattern has been refuted twice, once by the
//! solver and once by the enumeration oracle. The stored digest binds the
//! canonical key to the contract so later edits are detected.

use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use thiserror::Error;

use super::gadget_key;
use crate::coloring::{
    brute_force_3coloring, solve_3coloring, ColorAssignment, ColoringError, Pattern, Verdict,
    BRUTE_FORCE_MAX_FREE,
};
use crate::formats::json::GadgetFile;
use crate::gadget::{verify_contract, GadgetError, InterfaceContract, TerminalGadget};

#[derive(Debug, Error)]
pub enum FreezeError {
    #[error("contract check `{0}` failed: {1}")]
    Contract(String, String),
    #[error("solver and oracle disagree on pattern {pattern}: solver {solver:?}, oracle {oracle:?}")]
    OracleDisagreement {
        pattern: Pattern,
        solver: Verdict,
        oracle: Verdict,
    },
    #[error("{path}: stored digest {stored} does not match recomputed {actual}")]
    DigestMismatch {
        path: PathBuf,
        stored: String,
        actual: String,
    },
    #[error("{0}: gadget is not marked verified")]
    NotVerified(PathBuf),
    #[error("{0}: no digest recorded")]
    MissingDigest(PathBuf),
    #[error("more than one frozen `{0}` gadget in the directory")]
    Ambiguous(String),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Digest over the canonical key and the contract (with `verified` cleared).
pub fn frozen_digest(g: &TerminalGadget) -> String {
    let contract = InterfaceContract {
        verified: false,
        ..g.contract().clone()
    };
    let key = gadget_key(g, &contract);
    let mut h = Sha256::new();
    h.update(key.as_str().as_bytes());
    h.update(b"\n");
    h.update(serde_json::to_string(&contract).expect("contract serializes").as_bytes());
    hex::encode(h.finalize())
}

/// Verify `g` against its own contract, cross-check forbidden patterns with
/// the oracle when it is small enough, and write `{stem}-{digest12}.json`.
pub fn certify_and_freeze(g: &TerminalGadget, dir: &Path, stem: &str) -> Result<PathBuf, FreezeError> {
    let report = verify_contract(g);
    if let Some(c) = report.failed().next() {
        return Err(FreezeError::Contract(c.name.clone(), c.detail.clone()));
    }
    let n = g.graph().n();
    for p in &g.contract().forbidden_patterns {
        let fixed: Vec<_> = g.terminals().iter().copied().zip(p.colors().iter().copied()).collect();
        if fixed.iter().any(|&(u, cu)| fixed.iter().any(|&(v, cv)| cu == cv && g.graph().has_edge(u, v))) {
            // Adjacent terminals share a color: infeasible without search.
            continue;
        }
        let fixed = ColorAssignment::with_fixed(n, &fixed);
        let solver = solve_3coloring(g.graph(), &fixed)?;
        if n - fixed.fixed_count() > BRUTE_FORCE_MAX_FREE {
            continue;
        }
        let oracle = brute_force_3coloring(g.graph(), &fixed)?;
        if solver.is_sat() != oracle.is_sat() || solver.is_sat() {
            return Err(FreezeError::OracleDisagreement {
                pattern: p.clone(),
                solver,
                oracle,
            });
        }
    }
    let mut frozen = g.clone();
    frozen.contract_mut().verified = true;
    let digest = frozen_digest(&frozen);
    let mut file = frozen.to_file();
    file.digest = Some(digest.clone());
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("{stem}-{}.json", &digest[..12]));
    std::fs::write(&path, file.to_json())?;
    Ok(path)
}

/// Path of the unique `{stem}-*.json` in `dir`, if any.
pub fn locate_frozen(dir: &Path, stem: &str) -> Result<Option<PathBuf>, FreezeError> {
    let prefix = format!("{stem}-");
    let mut hits = Vec::new();
    let entries = match std::fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    for entry in entries {
        let path = entry?.path();
        let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("");
        if name.starts_with(&prefix) && name.ends_with(".json") {
            hits.push(path);
        }
    }
    match hits.len() {
        0 | 1 => Ok(hits.pop()),
        _ => Err(FreezeError::Ambiguous(stem.to_owned())),
    }
}

/// Load the unique `{stem}-*.json` in `dir`, rejecting it if unverified or if
/// its digest no longer matches. `Ok(None)` when there is no such file.
pub fn find_frozen(dir: &Path, stem: &str) -> Result<Option<(PathBuf, TerminalGadget)>, FreezeError> {
    let Some(path) = locate_frozen(dir, stem)? else {
        return Ok(None);
    };
    let bytes = std::fs::read(&path)?;
    let file = GadgetFile::from_json(&bytes).map_err(GadgetError::from)?;
    let g = TerminalGadget::from_file(&file)?;
    let stored = file.digest.clone().ok_or_else(|| FreezeError::MissingDigest(path.clone()))?;
    let actual = frozen_digest(&g);
    if stored != actual {
        return Err(FreezeError::DigestMismatch { path, stored, actual });
    }
    if !g.contract().verified {
        return Err(FreezeError::NotVerified(path));
    }
    Ok(Some((path, g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn triangle() -> TerminalGadget {
        TerminalGadget::new(Graph::cycle(3), vec![0, 1, 2])
            .unwrap()
            .with_contract(InterfaceContract::forcing_unequal(3))
    }

    #[test]
    fn freeze_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = certify_and_freeze(&triangle(), dir.path(), "tri").unwrap();
        let (found, g) = find_frozen(dir.path(), "tri").unwrap().unwrap();
        assert_eq!(found, path);
        assert!(g.contract().verified);
        assert!(find_frozen(dir.path(), "other").unwrap().is_none());
    }

    #[test]
    fn tampering_is_detected() {
        let dir = tempfile::tempdir().unwrap();
        let path = certify_and_freeze(&triangle(), dir.path(), "tri").unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let mut file = GadgetFile::from_json(text.as_bytes()).unwrap();
        file.edges.pop();
        std::fs::write(&path, file.to_json()).unwrap();
        assert!(matches!(
            find_frozen(dir.path(), "tri"),
            Err(FreezeError::DigestMismatch { .. })
        ));
    }

    #[test]
    fn refuses_a_gadget_breaking_its_contract() {
        let bad = TerminalGadget::new(Graph::empty(3), vec![0, 1, 2])
            .unwrap()
            .with_contract(InterfaceContract::forcing_unequal(3));
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(
            certify_and_freeze(&bad, dir.path(), "p"),
            Err(FreezeError::Contract(..))
        ));
    }
}
