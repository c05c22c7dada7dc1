//! Ext and Tor computed from minimal free resolutions of the first argument.

use std::collections::BTreeMap;
use std::fmt;

use crate::complexes::ChainComplex;
use crate::error::{Error, Result};
use crate::invariants::depth_module;
use crate::presentation::{require_nonzero, ModulePresentation};
use crate::resolutions::{minimal_resolution, Resolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum DerivedKind {
    Ext,
    Tor,
}

impl fmt::Display for DerivedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DerivedKind::Ext => "Ext",
            DerivedKind::Tor => "Tor",
        })
    }
}

/// `Ext^i(M, N)` or `Tor_i(M, N)` for `0 ≤ i ≤ pd M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedTable {
    kind: DerivedKind,
    m: ModulePresentation,
    n: ModulePresentation,
    entries: BTreeMap<usize, ModulePresentation>,
}

impl DerivedTable {
    pub fn kind(&self) -> DerivedKind {
        self.kind
    }

    pub fn source(&self) -> (&ModulePresentation, &ModulePresentation) {
        (&self.m, &self.n)
    }

    pub fn entries(&self) -> &BTreeMap<usize, ModulePresentation> {
        &self.entries
    }

    /// Entry `i`; zero beyond the resolution length.
    pub fn entry(&self, i: usize) -> ModulePresentation {
        self.entries.get(&i).cloned().unwrap_or_else(|| ModulePresentation::zero(self.m.ring()))
    }

    /// Degrees with a nonzero entry.
    pub fn nonvanishing(&self) -> Vec<usize> {
        self.entries.iter().filter(|(_, e)| !e.is_zero()).map(|(&i, _)| i).collect()
    }

    /// Vector space dimension of entry `i` when it has finite length.
    pub fn length(&self, i: usize) -> Option<usize> {
        module_length(&self.entry(i))
    }
}

/// Dimension over the coefficient field, for modules of finite length.
pub fn module_length(m: &ModulePresentation) -> Option<usize> {
    m.vector_space_dimension()
}

fn resolve(m: &ModulePresentation) -> Result<Resolution> {
    let res = minimal_resolution(m);
    if !res.is_complete() {
        return Err(Error::unsupported("derived", "the resolution did not terminate; input is likely inhomogeneous"));
    }
    Ok(res)
}

fn tensor_complex(res: &Resolution, n: &ModulePresentation) -> Result<ChainComplex> {
    res.complex().tensor_with_module(n)
}

fn hom_complex(res: &Resolution, n: &ModulePresentation) -> Result<ChainComplex> {
    res.complex().hom_into_module(n)
}

fn check_degree(i: i64) -> Result<usize> {
    usize::try_from(i).map_err(|_| Error::domain("derived", format!("negative degree {i}")))
}

/// `H_i(F ⊗ N)` for the minimal resolution `F` of `M`.
pub fn tor_module(m: &ModulePresentation, n: &ModulePresentation, i: i64) -> Result<ModulePresentation> {
    let i = check_degree(i)?;
    Ok(tensor_complex(&resolve(m)?, n)?.homology(i as i64))
}

/// `H^i(Hom(F, N))` for the minimal resolution `F` of `M`.
pub fn ext_module(m: &ModulePresentation, n: &ModulePresentation, i: i64) -> Result<ModulePresentation> {
    let i = check_degree(i)?;
    Ok(hom_complex(&resolve(m)?, n)?.homology(-(i as i64)))
}

/// All entries for `0 ≤ i ≤ pd M`.
pub fn derived_table(m: &ModulePresentation, n: &ModulePresentation, kind: DerivedKind) -> Result<DerivedTable> {
    let res = resolve(m)?;
    let top = res.length();
    let entries = match kind {
        DerivedKind::Tor => {
            let c = tensor_complex(&res, n)?;
            (0..=top).map(|i| (i, c.homology(i as i64))).collect()
        }
        DerivedKind::Ext => {
            let c = hom_complex(&res, n)?;
            (0..=top).map(|i| (i, c.homology(-(i as i64)))).collect()
        }
    };
    Ok(DerivedTable { kind, m: m.clone(), n: n.clone(), entries })
}

/// Vanishing pattern `Ext^i(M, N) = 0` (or `Tor_i`) for `0 ≤ i ≤ pd M`,
/// decided without building presentations.
pub fn vanishing(m: &ModulePresentation, n: &ModulePresentation, kind: DerivedKind) -> Result<Vec<bool>> {
    let res = resolve(m)?;
    let top = res.length() as i64;
    Ok(match kind {
        DerivedKind::Tor => {
            let c = tensor_complex(&res, n)?;
            (0..=top).map(|i| c.homology_vanishes(i)).collect()
        }
        DerivedKind::Ext => {
            let c = hom_complex(&res, n)?;
            (0..=top).map(|i| c.homology_vanishes(-i)).collect()
        }
    })
}

/// The least `i` with `Ext^i(M, N) ≠ 0`, checked against `i ≤ depth N`.
pub fn lemma1_witness(m: &ModulePresentation, n: &ModulePresentation) -> Result<i64> {
    require_nonzero(m, "derived", "Ext witness")?;
    require_nonzero(n, "derived", "Ext witness")?;
    let depth = depth_module(n)?;
    let pattern = vanishing(m, n, DerivedKind::Ext)?;
    let i = pattern
        .iter()
        .position(|&zero| !zero)
        .ok_or_else(|| Error::Verification("every Ext^i(M, N) vanished for nonzero M, N".into()))? as i64;
    if i > depth {
        return Err(Error::Verification(format!("least nonvanishing Ext degree {i} exceeds depth N = {depth}")));
    }
    Ok(i)
}
