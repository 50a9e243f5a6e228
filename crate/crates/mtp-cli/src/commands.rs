//! Command-line surface and dispatch.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use mtp_complexes::{bounded_complex, facet_complex, reduced_homology, sphere_check, Field};
use mtp_core::{Error, GeneratorSet, Result};
use mtp_facets::{build_incidence, ApexSet};
use mtp_ideals::{
    alexander_dual, betti_numbers, ideal_genericity, irreducible_decomposition, is_generic, is_strongly_generic,
    is_tropically_generic, monomial_string, polyhedron_from_ideal, BettiMethod, Genericity, MonomialIdeal,
};
use mtp_posets::{
    affine_part, cp_order, max_lattice, max_min_poset, min_lattice, pseudovertex_poset, scarf_poset,
    vertex_facet_lattice, GridOptions, Poset,
};
use mtp_transform::{
    decomposition_check, deformation_subcomplex_check, is_valid_deformation, ith_monomial_polyhedron,
    sample_grid, strong_generification,
};

use crate::dot::{bipartite_dot, poset_dot};
use crate::io::{from_point, parse_ideal, read, InstanceFile};
use crate::json::{point_strings, pretty, BettiJson, ComplexJson, HomologyJson, PosetJson};
use crate::verify::{report_lines, verify, VerifyOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Lcm,
    Koszul,
    Top,
    All,
}

#[derive(Debug, Parser)]
#[command(name = "mtp", version, about = "Face posets, complexes and resolutions of monomial tropical polyhedra")]
pub struct Cli {
    /// Input file; standard input when absent.
    #[arg(long = "in", global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Coefficient field: q or p:PRIME.
    #[arg(long, global = true, default_value = "q")]
    pub field: Field,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Facet-apices and the vertex-facet incidence graph.
    Facets,
    /// Vertex-facet lattice.
    Vif {
        /// Keep only faces meeting the generators.
        #[arg(long)]
        affine: bool,
    },
    MaxLattice,
    MinLattice,
    Maxmin,
    /// Poset of characteristic points.
    Cp,
    Scarf,
    /// Pseudovertex poset by an integer grid scan.
    Pseudovertices {
        #[arg(long, default_value_t = GridOptions::default().budget)]
        budget: u128,
        #[arg(long)]
        pad: Option<i64>,
    },
    FacetComplex {
        /// Drop faces containing rays.
        #[arg(long)]
        bounded: bool,
    },
    /// Reduced homology of the facet complex.
    Homology {
        #[arg(long)]
        bounded: bool,
    },
    /// Multigraded Betti numbers of a monomial ideal.
    Betti {
        #[arg(long, value_enum, default_value = "lcm")]
        method: Method,
    },
    /// Converts between ideals and generator sets, with decomposition and genericity.
    Ideal,
    /// Alexander dual with respect to c.
    Dual {
        /// Comma-separated exponent; defaults to one above the lcm on every used variable.
        #[arg(long, value_delimiter = ',')]
        c: Option<Vec<u32>>,
    },
    /// Splits a tropical polyhedron into its monomial pieces.
    Decompose,
    /// Seeded strong generification.
    Deform,
    /// Minimality and genericity checks.
    Check,
    /// Runs the invariant suite, one JSON line per property.
    Verify {
        #[arg(long, default_value_t = GridOptions::default().budget)]
        budget: u128,
    },
}

fn read_input(cli: &Cli) -> Result<String> {
    match &cli.input {
        Some(p) => read(p),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

struct Instance {
    file: InstanceFile,
    v: GeneratorSet,
}

impl Instance {
    fn load(cli: &Cli) -> Result<Instance> {
        let file = InstanceFile::parse(&read_input(cli)?)?;
        let v = file.generator_set()?;
        Ok(Instance { file, v })
    }

    fn apices(&self) -> Result<ApexSet> {
        let mut aps = mtp_facets::apex_set(&self.v)?;
        aps.relabel(&self.file.apex_names()?)?;
        Ok(aps)
    }

    /// Replaces default apex names in a poset built on the facet-apices.
    fn named(&self, mut p: Poset) -> Result<Poset> {
        let labels = self.apices()?.all_labels();
        if p.right_labels.len() == labels.len() {
            p.right_labels = labels;
        }
        Ok(p)
    }
}

fn emit_poset(cli: &Cli, p: &Poset, name: &str) -> String {
    match cli.format {
        Format::Json => pretty(&PosetJson::from_poset(p)),
        Format::Dot => poset_dot(p, name),
    }
}

fn json_only(cli: &Cli, what: &str) -> Result<()> {
    match cli.format {
        Format::Json => Ok(()),
        Format::Dot => Err(Error::Parse(format!("{what} has no DOT form"))),
    }
}

#[derive(Serialize)]
struct NamedPointOut {
    label: String,
    point: Vec<String>,
}

fn method_of(m: Method) -> Vec<(&'static str, BettiMethod)> {
    let all = [
        ("lcm", BettiMethod::LcmInterval),
        ("koszul", BettiMethod::Koszul),
        ("top", BettiMethod::FacetCrosscutTop),
    ];
    match m {
        Method::Lcm => vec![all[0]],
        Method::Koszul => vec![all[1]],
        Method::Top => vec![all[2]],
        Method::All => all.to_vec(),
    }
}

fn genericity_json(v: &GeneratorSet) -> Result<serde_json::Value> {
    Ok(json!({
        "strongly_generic": is_strongly_generic(v),
        "generic": is_generic(v),
        "tropically_generic": is_tropically_generic(v)?,
    }))
}

fn component_string(a: &[u32]) -> String {
    let gens: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(t, &x)| {
            let mut e = vec![0; a.len()];
            e[t] = x;
            monomial_string(&e)
        })
        .collect();
    format!("<{}>", gens.join(", "))
}

fn ideal_json(i: &MonomialIdeal) -> serde_json::Value {
    json!({ "nvars": i.nvars, "generators": i.generators, "ideal": i.to_string() })
}

/// Runs one command and returns its output text.
pub fn run(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Facets => {
            let inst = Instance::load(cli)?;
            let aps = inst.apices()?;
            let ig = build_incidence(&inst.v, aps.clone());
            if cli.format == Format::Dot {
                return Ok(bipartite_dot(&ig.graph, "incidence"));
            }
            let principal: Vec<NamedPointOut> = aps
                .principal
                .iter()
                .zip(&aps.labels)
                .map(|(p, l)| NamedPointOut { label: l.clone(), point: point_strings(p) })
                .collect();
            let boundary: Vec<serde_json::Value> = aps
                .boundary
                .iter()
                .enumerate()
                .map(|(k, &i)| {
                    json!({
                        "label": aps.boundary_labels[k],
                        "axis": i + 1,
                        "point": point_strings(&aps.point(aps.principal.len() + k).expect("boundary apex")),
                    })
                })
                .collect();
            let incidence: Vec<serde_json::Value> =
                ig.listing().into_iter().map(|(e, a)| json!({ "element": e, "apices": a })).collect();
            Ok(pretty(&json!({
                "principal": principal,
                "boundary": boundary,
                "far": aps.far_label,
                "incidence": incidence,
                "edges": ig.graph.edges().len(),
            })))
        }
        Command::Vif { affine } => {
            let inst = Instance::load(cli)?;
            let mut l = inst.named(vertex_facet_lattice(&inst.v)?)?;
            if *affine {
                l = affine_part(&l, inst.v.len());
            }
            Ok(emit_poset(cli, &l, "vertex_facet_lattice"))
        }
        Command::MaxLattice => {
            let inst = Instance::load(cli)?;
            Ok(emit_poset(cli, &inst.named(max_lattice(&inst.v)?)?, "max_lattice"))
        }
        Command::MinLattice => {
            let inst = Instance::load(cli)?;
            Ok(emit_poset(cli, &inst.named(min_lattice(&inst.v)?)?, "min_lattice"))
        }
        Command::Maxmin => {
            let inst = Instance::load(cli)?;
            Ok(emit_poset(cli, &inst.named(max_min_poset(&inst.v)?)?, "max_min_poset"))
        }
        Command::Cp => {
            let inst = Instance::load(cli)?;
            Ok(emit_poset(cli, &inst.named(cp_order(&inst.v)?)?, "cp_order"))
        }
        Command::Scarf => {
            let inst = Instance::load(cli)?;
            Ok(emit_poset(cli, &inst.named(scarf_poset(&inst.v)?)?, "scarf_poset"))
        }
        Command::Pseudovertices { budget, pad } => {
            let inst = Instance::load(cli)?;
            let p = pseudovertex_poset(&inst.v, &GridOptions { budget: *budget, pad: *pad })?;
            Ok(emit_poset(cli, &p, "pseudovertex_poset"))
        }
        Command::FacetComplex { bounded } => {
            json_only(cli, "facet-complex")?;
            let inst = Instance::load(cli)?;
            let k = if *bounded { bounded_complex(&inst.v)? } else { facet_complex(&inst.v)? };
            Ok(pretty(&ComplexJson::from_complex(&k)))
        }
        Command::Homology { bounded } => {
            json_only(cli, "homology")?;
            let inst = Instance::load(cli)?;
            let k = if *bounded { bounded_complex(&inst.v)? } else { facet_complex(&inst.v)? };
            let h = reduced_homology(&k, cli.field)?;
            let mut out = serde_json::to_value(HomologyJson::from_profile(&h)).expect("serialisable");
            out["complex"] = json!(if *bounded { "bounded" } else { "facet" });
            if !*bounded {
                out["sphere"] = json!(h.is_sphere(inst.v.dim() as i64 - 1));
            }
            Ok(pretty(&out))
        }
        Command::Betti { method } => {
            json_only(cli, "betti")?;
            let i = parse_ideal(&read_input(cli)?)?;
            let mut tables = serde_json::Map::new();
            let mut computed = Vec::new();
            for (name, m) in method_of(*method) {
                let t = betti_numbers(&i, m, cli.field)?;
                tables.insert(name.into(), serde_json::to_value(BettiJson::from_table(&t)).expect("serialisable"));
                computed.push((m, t));
            }
            let mut out = json!({ "ideal": ideal_json(&i), "tables": tables });
            if *method == Method::All {
                let top = i.lcm_all();
                let full: Vec<_> = computed.iter().filter(|(m, _)| *m != BettiMethod::FacetCrosscutTop).collect();
                let agree = full.windows(2).all(|w| w[0].1.entries == w[1].1.entries)
                    && computed.iter().all(|(_, t)| t.column(&top) == computed[0].1.column(&top));
                out["agree"] = json!(agree);
            }
            Ok(pretty(&out))
        }
        Command::Ideal => {
            json_only(cli, "ideal")?;
            let i = parse_ideal(&read_input(cli)?)?;
            let v = polyhedron_from_ideal(&i);
            let comps = irreducible_decomposition(&i)?;
            Ok(pretty(&json!({
                "ideal": ideal_json(&i),
                "instance": InstanceFile::from_generator_set(&v),
                "irreducible_components": comps.iter().map(|a| json!({ "exponent": a, "ideal": component_string(a) })).collect::<Vec<_>>(),
                "genericity": {
                    "strongly_generic": ideal_genericity(&i, Genericity::StronglyGeneric)?,
                    "generic": ideal_genericity(&i, Genericity::Generic)?,
                    "tropically_generic": ideal_genericity(&i, Genericity::TropicallyGeneric)?,
                },
            })))
        }
        Command::Dual { c } => {
            json_only(cli, "dual")?;
            let i = parse_ideal(&read_input(cli)?)?;
            let c = match c {
                Some(c) => c.clone(),
                None => i.lcm_all().iter().map(|&x| if x > 0 { x + 1 } else { 0 }).collect(),
            };
            let dual = alexander_dual(&i, &c)?;
            Ok(pretty(&json!({ "ideal": ideal_json(&i), "c": c, "dual": ideal_json(&dual) })))
        }
        Command::Decompose => {
            json_only(cli, "decompose")?;
            let file = InstanceFile::parse(&read_input(cli)?)?;
            let p = file.polyhedron()?;
            let pieces = (0..=p.dim)
                .map(|i| {
                    let q = ith_monomial_polyhedron(&p, i)?;
                    Ok(json!({
                        "i": i,
                        "generators": q.points.iter().map(from_point).collect::<Vec<_>>(),
                        "rays": q.rays.iter().map(from_point).collect::<Vec<_>>(),
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            let samples = sample_grid(&p);
            let ok = decomposition_check(&p, &samples)?;
            Ok(pretty(&json!({ "pieces": pieces, "samples": samples.len(), "decomposition_holds": ok })))
        }
        Command::Deform => {
            json_only(cli, "deform")?;
            let inst = Instance::load(cli)?;
            let (w, eps) = strong_generification(&inst.v, cli.seed)?;
            Ok(pretty(&json!({
                "seed": cli.seed,
                "instance": InstanceFile::from_generator_set(&w),
                "epsilon": eps.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "valid": is_valid_deformation(&inst.v, &eps)?,
                "strongly_generic": is_strongly_generic(&w),
                "subcomplex": deformation_subcomplex_check(&inst.v, &eps)?,
            })))
        }
        Command::Check => {
            json_only(cli, "check")?;
            let inst = Instance::load(cli)?;
            let m = inst.v.minimal_generators()?;
            let redundant: Vec<&String> = inst.v.labels().iter().filter(|l| !m.labels().contains(l)).collect();
            Ok(pretty(&json!({
                "minimal": redundant.is_empty(),
                "redundant": redundant,
                "genericity": genericity_json(&m)?,
                "sphere": sphere_check(&m, cli.field)?,
            })))
        }
        Command::Verify { budget } => {
            json_only(cli, "verify")?;
            let inst = Instance::load(cli)?;
            let opts = VerifyOptions { field: cli.field, seed: cli.seed, budget: *budget, ..VerifyOptions::default() };
            Ok(report_lines(&verify(&inst.v, &opts)))
        }
    }
}

/// Exit status for an error: 3 for exceeded budgets, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_budget() {
        3
    } else {
        2
    }
}

pub fn error_envelope(e: &Error) -> String {
    serde_json::to_string(&json!({ "error": { "code": e.code(), "message": e.to_string() } })).expect("serialisable") + "\n"
}
