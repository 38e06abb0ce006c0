//! Exhaustive enumeration of the two-dimensional dialgebras over GF(2) and
//! GF(3), partitioned into isomorphism classes.

use std::collections::{BTreeMap, HashSet};

use crate::algebra::{BilinearProduct, Dialgebra};
use crate::classify::dim2::{classify_dim2, ClassLabel};
use crate::error::{Error, Result};
use crate::exactlin::{general_linear_group, matrix::increment, FieldSpec, Scalar};
use crate::identities::{is_associative, is_dialgebra};

#[derive(Clone, Debug)]
pub struct CensusClass {
    /// Least member in [`Dialgebra::tensor_key`] order.
    pub representative: Dialgebra,
    /// The whole orbit under `GL₂(GF(p))`, sorted by tensor key.
    pub members: Vec<Dialgebra>,
    pub label: ClassLabel,
}

impl CensusClass {
    pub fn orbit_size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug)]
pub struct Census {
    pub field: FieldSpec,
    /// Number of tensor pairs examined.
    pub candidates: u64,
    /// Classes sorted by representative.
    pub classes: Vec<CensusClass>,
}

impl Census {
    pub fn valid_count(&self) -> usize {
        self.classes.iter().map(CensusClass::orbit_size).sum()
    }

    /// Every valid dialgebra, class by class.
    pub fn dialgebras(&self) -> impl Iterator<Item = &Dialgebra> {
        self.classes.iter().flat_map(|c| c.members.iter())
    }
}

/// All associative products on `GF(p)^dim`, in lexicographic tensor order.
pub fn associative_products(field: FieldSpec, dim: usize) -> Result<Vec<BilinearProduct>> {
    let p = field
        .modulus()
        .ok_or_else(|| Error::Unsupported("enumeration over Q".into()))?;
    let len = dim * dim * dim;
    if (p as u128).checked_pow(len as u32).is_none_or(|n| n > 1 << 24) {
        return Err(Error::Unsupported(format!(
            "{p}^{len} structure tensors is too many to enumerate"
        )));
    }
    let elements: Vec<Scalar> = field.elements().expect("prime field").collect();
    let mut digits = vec![0usize; len];
    let mut out = Vec::new();
    loop {
        let gamma = digits.iter().map(|&d| elements[d].clone()).collect();
        let prod = BilinearProduct::from_flat(field, dim, gamma)?;
        if is_associative(&prod) {
            out.push(prod);
        }
        if !increment(&mut digits, p as usize) {
            break;
        }
    }
    Ok(out)
}

/// Enumerates all pairs of structure tensors on `GF(p)²` for `p ∈ {2, 3}`,
/// keeps the dialgebras and splits them into `GL₂` orbits. Both products
/// of a dialgebra are associative, so pairs are drawn from the associative
/// products only; the remaining pairs are counted as examined.
pub fn census(p: u64, dim: usize) -> Result<Census> {
    if dim != 2 {
        return Err(Error::Unsupported(format!("census in dimension {dim}")));
    }
    if p != 2 && p != 3 {
        return Err(Error::Unsupported(format!("census over GF({p})")));
    }
    let field = FieldSpec::prime(p)?;
    let assoc = associative_products(field, dim)?;
    let mut valid = Vec::new();
    for l in &assoc {
        for r in &assoc {
            let d = Dialgebra::new(l.clone(), r.clone())?;
            if is_dialgebra(&d) {
                valid.push(d);
            }
        }
    }
    // already sorted: both lists are in lexicographic order
    let group = general_linear_group(field, dim)?;
    let group: Vec<_> = group
        .into_iter()
        .map(|t| {
            let inv = t.inverse().expect("invertible");
            (t, inv)
        })
        .collect();
    let known: HashSet<Vec<Scalar>> = valid.iter().map(Dialgebra::tensor_key).collect();
    let mut assigned: HashSet<Vec<Scalar>> = HashSet::new();
    let mut classes = Vec::new();
    for d in &valid {
        let key = d.tensor_key();
        if assigned.contains(&key) {
            continue;
        }
        let mut orbit: BTreeMap<Vec<Scalar>, Dialgebra> = BTreeMap::new();
        for (t, inv) in &group {
            let img = d.transport_with_inverse(t, inv);
            orbit.entry(img.tensor_key()).or_insert(img);
        }
        if orbit.keys().next() != Some(&key) || orbit.keys().any(|k| !known.contains(k)) {
            return Err(Error::Internal("census orbit leaves the valid set".into()));
        }
        assigned.extend(orbit.keys().cloned());
        let label = classify_dim2(d)?;
        classes.push(CensusClass {
            representative: d.clone(),
            members: orbit.into_values().collect(),
            label,
        });
    }
    Ok(Census {
        field,
        candidates: p.pow(16),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::dim2::ClassKind;

    #[test]
    fn gf2_named_classes_once_each() {
        let c = census(2, 2).unwrap();
        let count = |k: &ClassKind| c.classes.iter().filter(|cl| &cl.label.kind == k).count();
        let one = FieldSpec::prime(2).unwrap().one();
        for k in [ClassKind::I, ClassKind::II(one), ClassKind::III, ClassKind::IV] {
            assert_eq!(count(&k), 1, "{k}");
        }
        let zero = &c.classes[0];
        assert!(zero.representative.left().is_zero() && zero.representative.right().is_zero());
        assert_eq!(zero.orbit_size(), 1);
    }

    #[test]
    fn unsupported_parameters() {
        assert!(census(5, 2).is_err());
        assert!(census(2, 3).is_err());
    }
}
