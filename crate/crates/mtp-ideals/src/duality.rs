use mtp_core::{Error, Ext, Result};
use mtp_facets::principal_apices;

use crate::ideal::{polyhedron_from_ideal, Exponent, MonomialIdeal};

/// Exponents a of the irredundant components m^a = <x_i^{a_i} : a_i > 0>,
/// read off the principal apices of V_I with +inf mapped to 0.
pub fn irreducible_decomposition(i: &MonomialIdeal) -> Result<Vec<Exponent>> {
    let v = polyhedron_from_ideal(i);
    let mut out: Vec<Exponent> = principal_apices(&v)?
        .iter()
        .map(|a| {
            a.iter()
                .map(|x| match x {
                    Ext::PosInf => 0,
                    Ext::Finite(r) => u32::try_from(r.to_integer()).expect("apex coordinates are exponents"),
                    Ext::NegInf => unreachable!("principal apices have no -inf entries"),
                })
                .collect()
        })
        .collect();
    out.sort();
    Ok(out)
}

/// m is in the irreducible ideal m^a.
pub fn in_component(a: &[u32], m: &[u32]) -> bool {
    a.iter().zip(m).any(|(&x, &y)| x > 0 && y >= x)
}

/// c ∖ a: c_i - a_i where a_i >= 1, else 0.
pub fn setminus(c: &[u32], a: &[u32]) -> Exponent {
    c.iter().zip(a).map(|(&x, &y)| if y >= 1 { x - y } else { 0 }).collect()
}

/// I^[c], generated by x^{c ∖ a} over the irreducible components m^a.
pub fn alexander_dual(i: &MonomialIdeal, c: &[u32]) -> Result<MonomialIdeal> {
    if c.len() != i.nvars {
        return Err(Error::DimMismatch { expected: i.nvars, found: c.len() });
    }
    for (k, g) in i.generators.iter().enumerate() {
        if let Some(t) = (0..i.nvars).find(|&t| !(g[t] < c[t] || (g[t] == 0 && c[t] == 0))) {
            return Err(Error::NotStrictlyDividing { generator: k, coordinate: t });
        }
    }
    let comps = irreducible_decomposition(i)?;
    MonomialIdeal::new(i.nvars, comps.iter().map(|a| setminus(c, a)).collect())
}
