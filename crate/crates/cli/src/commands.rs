use std::fmt::Write as _;

use serde_json::{json, Value};

use realgr_core::characters::{irreducible_character, weyl_dimension, Decomposition};
use realgr_core::dualgroup::{associated_subgroup, classify_table1, l1_equals_l0};
use realgr_core::grcomb::{
    branch, components, orbit_poset, real_orbit_poset, specialization_character, StratumPoset,
};
use realgr_core::realform::{restricted_type_of, Catalog, RealForm, RestrictedRootSystem};
use realgr_core::{BasedRootDatum, CartanType, Error, Result};

use crate::output::Outcome;
use crate::{selftest, Command, SatakeAction};

const BASIS_NOTE: &str =
    "coweights in the basis of fundamental coweights of the adjoint group, Bourbaki node order";

pub fn run(cmd: &Command, cat: &Catalog) -> Result<Outcome> {
    match cmd {
        Command::Table1 { max_rank } => table1(cat, *max_rank),
        Command::Classify { label } => classify(cat, label),
        Command::Restricted { label } => restricted(cat, label),
        Command::Components { label } => components_cmd(cat, label),
        Command::Poset {
            target,
            height,
            real,
        } => poset(cat, target, *height, *real),
        Command::Character { cartan, weight } => character(cartan, weight),
        Command::Specialize { label, weight } => specialize(cat, label, weight),
        Command::Branch { label, weight } => branch_cmd(cat, label, weight),
        Command::Satake {
            action: SatakeAction::Validate { file },
        } => {
            let c = Catalog::from_path(file)?;
            validate(&c, &file.display().to_string())
        }
        Command::Selftest { deep } => selftest::run(cat, *deep),
    }
}

pub fn parse_weight(s: &str, rank: usize) -> Result<Vec<i64>> {
    let w: Vec<i64> = if s.trim().is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate `{x}`")))
            })
            .collect::<Result<_>>()?
    };
    if w.len() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            found: w.len(),
        });
    }
    Ok(w)
}

fn parse_type(s: &str) -> Result<CartanType> {
    s.parse::<CartanType>()
        .map_err(|_| Error::Parse(format!("bad Cartan type `{s}`")))
}

fn fmt_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn table1(cat: &Catalog, max_rank: usize) -> Result<Outcome> {
    let report = classify_table1(cat, max_rank)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{:<14} {:<8} {:<6} {:<6} {:<6} {:<8} {:>4} {:>10} {:<5} {:<5} {:<7} result",
        "form", "family", "G", "dual", "H", "expected", "rank", "|W_small|", "qs", "split", "reduced"
    );
    for r in &report.rows {
        let _ = writeln!(
            text,
            "{:<14} {:<8} {:<6} {:<6} {:<6} {:<8} {:>4} {:>10} {:<5} {:<5} {:<7} {}",
            r.label,
            r.family,
            r.g_type,
            r.dual_type,
            r.h_type,
            r.expected_h,
            r.real_rank,
            r.small_weyl_order,
            r.quasi_split,
            r.split,
            r.reduced,
            if r.matches { "ok" } else { "MISMATCH" }
        );
    }
    let bad = report.mismatches().len();
    let _ = writeln!(text, "{} rows, {} mismatches", report.rows.len(), bad);
    Ok(Outcome {
        inputs: json!({ "max_rank": max_rank }),
        results: json!({ "rows": report.rows, "mismatches": bad }),
        text,
        success: bad == 0,
    })
}

fn classify(cat: &Catalog, label: &str) -> Result<Outcome> {
    let rf = cat.lookup(label)?;
    let entry = cat.entry(label);
    let h = associated_subgroup(&rf)?;
    let d = rf.datum();
    let restricted = rf.restricted_type()?;
    let res = json!({
        "label": rf.label(),
        "family": entry.map(|e| e.record.family.clone()),
        "group_type": d.cartan_type().to_string(),
        "dual_type": d.cartan_type().dual().to_string(),
        "h_type": h.cartan_type.to_string(),
        "real_rank": rf.real_rank(),
        "restricted_type": restricted.to_string(),
        "small_weyl_order": rf.small_weyl_order()?.to_string(),
        "quasi_split": rf.is_quasi_split(),
        "split": rf.is_split(),
        "l1_equals_l0": l1_equals_l0(&rf)?,
        "theta": rf.theta_matrix(),
        "painted": rf.satake().painted().iter().map(|i| i + 1).collect::<Vec<_>>(),
        "weight_basis": BASIS_NOTE,
    });
    let mut text = String::new();
    let rows: [(&str, String); 13] = [
        ("label", rf.label().unwrap_or("").to_string()),
        ("family", entry.map(|e| e.record.family.clone()).unwrap_or_default()),
        ("group", format!("{} (adjoint)", d.cartan_type())),
        ("dual group", d.cartan_type().dual().to_string()),
        ("associated H", h.cartan_type.to_string()),
        ("real rank", rf.real_rank().to_string()),
        ("restricted type", restricted.to_string()),
        ("small Weyl order", rf.small_weyl_order()?.to_string()),
        ("quasi-split", rf.is_quasi_split().to_string()),
        ("split", rf.is_split().to_string()),
        ("L1 = L0", l1_equals_l0(&rf)?.to_string()),
        (
            "theta",
            rf.theta_matrix()
                .iter()
                .map(|r| fmt_vec(r))
                .collect::<Vec<_>>()
                .join(" "),
        ),
        ("weight basis", BASIS_NOTE.to_string()),
    ];
    for (k, v) in rows {
        let _ = writeln!(text, "{k:<18}{v}");
    }
    Ok(Outcome {
        inputs: json!({ "label": label }),
        results: res,
        text,
        success: true,
    })
}

fn restricted_json(rr: &RestrictedRootSystem) -> Value {
    let roots: Vec<Value> = rr
        .roots()
        .iter()
        .map(|(v, k)| json!({ "root": v, "preimages": k }))
        .collect();
    json!({ "roots": roots, "reduced": rr.is_reduced() })
}

fn restricted(cat: &Catalog, label: &str) -> Result<Outcome> {
    let rf = cat.lookup(label)?;
    let all = rf.restricted_roots();
    let levi = rf.levi_restricted_roots();
    let h = associated_subgroup(&rf)?;
    let t_all = restricted_type_of(&rf, &all)?;
    let t_levi = restricted_type_of(&rf, &levi)?;
    let mut text = String::new();
    let _ = writeln!(text, "real lattice basis: {}", join(&rf.real_lattice().basis_i64()));
    for (name, rr, t) in [("sigma(R)", &all, &t_all), ("sigma(R0)", &levi, &t_levi)] {
        let _ = writeln!(
            text,
            "{name}: type {t}, {} roots, reduced {}",
            rr.roots().len(),
            rr.is_reduced()
        );
        for (v, k) in rr.roots() {
            let _ = writeln!(text, "  {} x{k}", fmt_vec(v));
        }
    }
    let _ = writeln!(text, "Xi: type {}, simple {}", h.cartan_type, join(&h.simple_xi));
    Ok(Outcome {
        inputs: json!({ "label": label }),
        results: json!({
            "real_lattice": rf.real_lattice().basis_i64(),
            "sigma_r": restricted_json(&all),
            "sigma_r_type": t_all.to_string(),
            "sigma_r0": restricted_json(&levi),
            "sigma_r0_type": t_levi.to_string(),
            "xi": h.xi,
            "simple_xi": h.simple_xi,
            "h_type": h.cartan_type.to_string(),
        }),
        text,
        success: true,
    })
}

fn join(vs: &[Vec<i64>]) -> String {
    if vs.is_empty() {
        return "none".into();
    }
    vs.iter().map(|v| fmt_vec(v)).collect::<Vec<_>>().join(" ")
}

fn components_cmd(cat: &Catalog, label: &str) -> Result<Outcome> {
    let rf = cat.lookup(label)?;
    let c = components(&rf)?;
    let index = c.gr0_index.as_ref().map(|i| i.to_string());
    let mut text = String::new();
    let _ = writeln!(text, "pi0           {}", c.pi0);
    let _ = writeln!(text, "Gr0 image     {}", c.gr0);
    let _ = writeln!(text, "Gr0 index     {}", index.clone().unwrap_or_else(|| "infinite".into()));
    let _ = writeln!(text, "Gr+ index     {}", c.plus_index);
    let _ = writeln!(text, "Gr0 in Gr+    {}", c.gr0_in_plus);
    Ok(Outcome {
        inputs: json!({ "label": label }),
        results: json!({
            "pi0": c.pi0.to_string(),
            "gr0": c.gr0.to_string(),
            "gr0_cokernel": c.gr0_cokernel.to_string(),
            "gr0_index": index,
            "parity": c.parity,
            "plus_index": c.plus_index,
            "gr0_in_plus": c.gr0_in_plus,
        }),
        text,
        success: true,
    })
}

fn poset(cat: &Catalog, target: &str, height: usize, real: bool) -> Result<Outcome> {
    let resolved: std::result::Result<RealForm, BasedRootDatum> = match cat.lookup(target) {
        Ok(rf) => Ok(rf),
        Err(Error::UnknownLabel(_)) => Err(BasedRootDatum::adjoint(&parse_type(target)?)?),
        Err(e) => return Err(e),
    };
    let p: StratumPoset = match (resolved, real) {
        (Ok(rf), true) => real_orbit_poset(&rf, height)?,
        (Ok(rf), false) => orbit_poset(rf.datum(), height)?,
        (Err(d), true) => real_orbit_poset(&RealForm::split(d)?, height)?,
        (Err(d), false) => orbit_poset(&d, height)?,
    };
    Ok(Outcome {
        inputs: json!({ "target": target, "height": height, "real": real }),
        results: serde_json::to_value(&p).expect("posets serialize"),
        text: p.to_dot(),
        success: true,
    })
}

fn character(cartan: &str, weight: &str) -> Result<Outcome> {
    let d = BasedRootDatum::adjoint(&parse_type(cartan)?)?;
    let w = parse_weight(weight, d.rank())?;
    let ch = irreducible_character(&d, &w)?;
    let dim = weyl_dimension(&d, &w)?;
    let mut text = String::new();
    let _ = writeln!(text, "dimension {dim}");
    let _ = writeln!(text, "dominant weights (multiplicity):");
    let mut doms = Vec::new();
    for (mu, m) in ch.dominant_weights() {
        let _ = writeln!(text, "  {} {m}", fmt_vec(mu));
        doms.push(json!({ "weight": mu, "multiplicity": m }));
    }
    Ok(Outcome {
        inputs: json!({ "cartan": cartan, "weight": w }),
        results: json!({ "dimension": dim.to_string(), "dominant": doms }),
        text,
        success: true,
    })
}

fn specialize(cat: &Catalog, label: &str, weight: &str) -> Result<Outcome> {
    let rf = cat.lookup(label)?;
    let w = parse_weight(weight, rf.datum().rank())?;
    let g = specialization_character(&rf, &w)?;
    let mut text = String::new();
    let _ = writeln!(text, "total mass {}", g.total_mass());
    let mut rows = Vec::new();
    for ((nu, z), m) in g.weights() {
        let _ = writeln!(text, "  {} deg {z}: {m}", fmt_vec(nu));
        rows.push(json!({ "weight": nu, "degree": z, "multiplicity": m }));
    }
    Ok(Outcome {
        inputs: json!({ "label": label, "weight": w }),
        results: json!({
            "total_mass": g.total_mass().to_string(),
            "degrees": g.degrees(),
            "weights": rows,
        }),
        text,
        success: true,
    })
}

fn branch_cmd(cat: &Catalog, label: &str, weight: &str) -> Result<Outcome> {
    let rf = cat.lookup(label)?;
    let w = parse_weight(weight, rf.datum().rank())?;
    let h = associated_subgroup(&rf)?;
    let mut text = String::new();
    let _ = writeln!(text, "H = {}", h.cartan_type);
    let inputs = json!({ "label": label, "weight": w });
    match branch(&rf, &w)? {
        Decomposition::Multiset(ms) => {
            let mut rows = Vec::new();
            for ((nu, z), k) in &ms {
                let _ = writeln!(text, "  highest weight {} deg {z}: {k}", fmt_vec(nu));
                rows.push(json!({ "highest_weight": nu, "degree": z, "multiplicity": k }));
            }
            Ok(Outcome {
                inputs,
                results: json!({ "h_type": h.cartan_type.to_string(), "constituents": rows }),
                text,
                success: true,
            })
        }
        Decomposition::NegativeWitness {
            weight: (nu, z),
            value,
        } => {
            let _ = writeln!(text, "negative multiplicity {value} at {} deg {z}", fmt_vec(&nu));
            Ok(Outcome {
                inputs,
                results: json!({
                    "h_type": h.cartan_type.to_string(),
                    "negative_witness": { "weight": nu, "degree": z, "value": value },
                }),
                text,
                success: false,
            })
        }
    }
}

fn validate(c: &Catalog, file: &str) -> Result<Outcome> {
    let disc: Vec<Value> = c
        .discrepancies()
        .iter()
        .map(|(l, d)| json!({ "label": l, "detail": d }))
        .collect();
    let mut text = format!(
        "{file}: {} forms, version {}, {} recipe discrepancies\n",
        c.len(),
        c.version(),
        disc.len()
    );
    for (l, d) in c.discrepancies() {
        let _ = writeln!(text, "  {l}: {d}");
    }
    Ok(Outcome {
        inputs: json!({ "file": file }),
        results: json!({
            "forms": c.len(),
            "version": c.version(),
            "discrepancies": disc,
        }),
        text,
        success: true,
    })
}
