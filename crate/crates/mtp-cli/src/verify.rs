//! The invariant suite behind `mtp verify`. One report per property.

use serde::{Deserialize, Serialize};

use mtp_complexes::{
    bounded_complex, crosscut_complex, facet_complex, reduced_homology, scarf_complex, Field,
};
use mtp_core::{Error, GeneratorSet, Result};
use mtp_facets::double_complement;
use mtp_posets::{
    affine_part, completion_matches, cp_order, max_lattice, max_min_poset, poset_compare, pseudovertex_poset,
    scarf_poset, vertex_facet_lattice, CompareOpts, GridOptions, Poset,
};
use mtp_transform::{decomposition_check, deformation_subcomplex_check, sample_grid, strong_generification, TropicalPolyhedron};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub property: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub field: Field,
    pub seed: u64,
    /// Grid budget for the pseudovertex scan.
    pub budget: u128,
    /// Largest dimension for which the pseudovertex scan is attempted.
    pub pseudovertex_max_dim: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { field: Field::Rational, seed: 0, budget: GridOptions::default().budget, pseudovertex_max_dim: 3 }
    }
}

fn embeds(p: &Poset, q: &Poset, cover: bool) -> Result<bool> {
    let c = poset_compare(p, q, CompareOpts::default())?;
    Ok(c.subposet && (!cover || c.cover_preserving))
}

struct Suite {
    reports: Vec<Report>,
}

impl Suite {
    fn run(&mut self, property: &str, check: impl FnOnce() -> Result<(bool, String)>) {
        let (status, detail) = match check() {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e) if e.is_budget() => (Status::Skip, e.to_string()),
            Err(e) => (Status::Fail, format!("{}: {e}", e.code())),
        };
        self.reports.push(Report { property: property.into(), status, detail });
    }
}

/// Runs every property on the minimal generators of `input`.
pub fn verify(input: &GeneratorSet, opts: &VerifyOptions) -> Vec<Report> {
    let mut suite = Suite { reports: Vec::new() };
    let v = match input.minimal_generators() {
        Ok(v) => v,
        Err(e) => {
            suite.run("minimal-generators", || Err(e));
            return suite.reports;
        }
    };
    suite.run("minimal-generators", || {
        let dropped: Vec<&str> = input.labels().iter().filter(|l| !v.labels().contains(l)).map(String::as_str).collect();
        Ok((true, if dropped.is_empty() { "all generators are minimal".into() } else { format!("dropped {}", dropped.join(" ")) }))
    });
    let n = v.len();
    let d = v.dim();

    suite.run("vf-lattice", || {
        let l = vertex_facet_lattice(&v)?;
        Ok((l.is_lattice(), format!("{} elements", l.len())))
    });

    suite.run("facet-complex-sphere", || {
        let h = reduced_homology(&facet_complex(&v)?, opts.field)?;
        Ok((h.is_sphere(d as i64 - 1), format!("{h}")))
    });

    suite.run("double-complement", || {
        let mut want = v.points().to_vec();
        want.sort();
        let got = double_complement(&v)?;
        Ok((got == want, format!("recovered {}", got.len())))
    });

    suite.run("poset-tower", || {
        let ml = max_lattice(&v)?;
        let mm = max_min_poset(&v)?;
        let cp = cp_order(&v)?;
        let sc = scarf_poset(&v)?;
        let aff = affine_part(&vertex_facet_lattice(&v)?, n);
        let steps = [
            ("scarf <=cover cp", embeds(&sc, &cp, true)?),
            ("cp <= max-min", embeds(&cp, &mm, false)?),
            ("max-min <= affine-vf", embeds(&mm, &aff, false)?),
            ("affine-vf <= max-lattice", embeds(&aff, &ml, false)?),
        ];
        let bad: Vec<&str> = steps.iter().filter(|s| !s.1).map(|s| s.0).collect();
        let sizes = format!("sizes {} <= {} <= {} <= {} <= {}", sc.len(), cp.len(), mm.len(), aff.len(), ml.len());
        Ok((bad.is_empty(), if bad.is_empty() { sizes } else { format!("failed: {}", bad.join(", ")) }))
    });

    suite.run("pseudovertex-inclusion", || {
        if d > opts.pseudovertex_max_dim {
            return Err(Error::TooLarge(format!("dimension {d} above {}", opts.pseudovertex_max_dim)));
        }
        let ml = max_lattice(&v)?;
        let pv = match pseudovertex_poset(&v, &GridOptions { budget: opts.budget, pad: None }) {
            Err(Error::NonIntegerInput(m)) => return Err(Error::TooLarge(format!("grid scan needs integer data: {m}"))),
            r => r?,
        };
        Ok((embeds(&ml, &pv, false)?, format!("{} <= {}", ml.len(), pv.len())))
    });

    suite.run("completion", || {
        let cp = cp_order(&v)?;
        let aff = affine_part(&vertex_facet_lattice(&v)?, n);
        Ok((completion_matches(&cp, &aff), format!("cp {} elements, affine vf {} elements", cp.len(), aff.len())))
    });

    suite.run("crosscut-bounded", || {
        let aff = affine_part(&vertex_facet_lattice(&v)?, n);
        let cc = crosscut_complex(&aff, None)?;
        let b = bounded_complex(&v)?;
        Ok((cc.same_faces(&b), format!("bounded complex {b}")))
    });

    suite.run("scarf-in-facet-complex", || {
        let s = scarf_complex(&v)?;
        let k = facet_complex(&v)?;
        let missing: Vec<String> =
            s.maximal_faces.iter().filter(|f| !k.contains(f)).map(|f| f.iter().map(|&x| v.extended_labels()[x].clone()).collect()).collect();
        Ok((missing.is_empty(), if missing.is_empty() { format!("{} maximal scarf faces", s.maximal_faces.len()) } else { format!("missing {}", missing.join(" ")) }))
    });

    suite.run("decomposition", || {
        let p = TropicalPolyhedron::monomial(&v);
        let samples = sample_grid(&p);
        Ok((decomposition_check(&p, &samples)?, format!("{} samples", samples.len())))
    });

    suite.run("deformation-subcomplex", || {
        let (_, eps) = strong_generification(&v, opts.seed)?;
        Ok((deformation_subcomplex_check(&v, &eps)?, format!("seed {}", opts.seed)))
    });

    suite.reports
}

pub fn report_lines(reports: &[Report]) -> String {
    reports.iter().map(|r| serde_json::to_string(r).expect("report serialises") + "\n").collect()
}
