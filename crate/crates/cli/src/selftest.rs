use std::fmt::Write as _;

use serde_json::json;

use realgr_core::characters::{irreducible_character, kostant_multiplicity, weyl_dimension};
use realgr_core::dualgroup::{
    associated_subgroup, classify_table1, l1_equals_l0, levi_data, verify_fixed_point_shadow,
};
use realgr_core::grcomb::{branch_with, components, specialization_character};
use realgr_core::realform::Catalog;
use realgr_core::{BasedRootDatum, CartanType, Result};

use crate::output::Outcome;

type Check = (&'static str, Box<dyn Fn(&Catalog, usize) -> Result<Option<String>>>);

fn checks() -> Vec<Check> {
    vec![
        ("catalog recipe agreement", Box::new(|c, _| {
            Ok(c.discrepancies().first().map(|(l, d)| format!("{l}: {d}")))
        })),
        ("associated subgroup table", Box::new(|c, _| {
            let r = classify_table1(c, 15)?;
            Ok(r.mismatches().first().map(|m| format!("{}: {} vs {}", m.label, m.h_type, m.expected_h)))
        })),
        ("rank and Weyl identities", Box::new(|c, _| {
            for e in c.entries() {
                // the constructor checks both identities
                associated_subgroup(&e.form)?;
            }
            Ok(None)
        })),
        ("split and compact extremes", Box::new(|c, _| {
            for e in c.entries() {
                let h = associated_subgroup(&e.form)?;
                let d = e.form.datum();
                if e.form.is_split() && !h.cartan_type.is_isomorphic(&d.cartan_type().dual()) {
                    return Ok(Some(e.label().to_string()));
                }
                if e.form.is_compact() && !h.xi.is_empty() {
                    return Ok(Some(e.label().to_string()));
                }
            }
            Ok(None)
        })),
        ("non-reduced restricted roots", Box::new(|c, _| {
            for e in c.entries() {
                let p = &e.record.params;
                let expected = e.record.family == "AIII" && p.len() == 2 && (p[0] + p[1]) % 2 == 1;
                if e.form.levi_restricted_roots().is_reduced() == expected {
                    return Ok(Some(e.label().to_string()));
                }
            }
            Ok(None)
        })),
        ("Levi data and fixed-point shadow", Box::new(|c, _| {
            for e in c.entries() {
                let ld = levi_data(&e.form)?;
                let zero = ld.tau.iter().all(|(_, t)| t.iter().all(|&x| x == 0));
                if l1_equals_l0(&e.form)? != zero || !verify_fixed_point_shadow(&e.form)? {
                    return Ok(Some(e.label().to_string()));
                }
            }
            Ok(None)
        })),
        ("component inclusion", Box::new(|c, _| {
            for e in c.entries() {
                if !components(&e.form)?.gr0_in_plus {
                    return Ok(Some(e.label().to_string()));
                }
            }
            Ok(None)
        })),
        ("specialization and branching", Box::new(|c, height| {
            for e in c.entries() {
                let f = &e.form;
                if !f.datum().is_semisimple() || f.datum().rank() > 4 {
                    continue;
                }
                let h = associated_subgroup(f)?;
                let mut graded = false;
                for l in f.datum().dominant_coweights(height)? {
                    let g = specialization_character(f, &l)?;
                    graded |= g.degrees().iter().any(|&z| z != 0);
                    if g.total_mass() != weyl_dimension(f.datum(), &l)? {
                        return Ok(Some(format!("{} mass at {l:?}", e.label())));
                    }
                    if branch_with(f, &h, &l)?.multiset().is_none() {
                        return Ok(Some(format!("{} negative at {l:?}", e.label())));
                    }
                }
                if graded == f.is_quasi_split() {
                    return Ok(Some(format!("{} grading", e.label())));
                }
            }
            Ok(None)
        })),
        ("Freudenthal against Kostant", Box::new(|_, height| {
            for t in ["A1", "A2", "B2", "G2"] {
                let d = BasedRootDatum::adjoint(&t.parse::<CartanType>()?)?;
                for l in d.dominant_coweights(height)? {
                    let ch = irreducible_character(&d, &l)?;
                    for (mu, &m) in ch.dominant_weights() {
                        if kostant_multiplicity(&d, &l, mu)? != m {
                            return Ok(Some(format!("{t} {l:?} at {mu:?}")));
                        }
                    }
                }
            }
            Ok(None)
        })),
    ]
}

pub fn run(cat: &Catalog, deep: bool) -> Result<Outcome> {
    let height = if deep { 4 } else { 2 };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for (name, check) in checks() {
        let failure = match check(cat, height) {
            Ok(f) => f,
            Err(e) => Some(e.to_string()),
        };
        ok &= failure.is_none();
        match &failure {
            None => {
                let _ = writeln!(text, "PASS {name}");
            }
            Some(why) => {
                let _ = writeln!(text, "FAIL {name}: {why}");
            }
        }
        rows.push(json!({ "check": name, "pass": failure.is_none(), "detail": failure }));
    }
    Ok(Outcome {
        inputs: json!({ "deep": deep }),
        results: json!({ "checks": rows }),
        text,
        success: ok,
    })
}
