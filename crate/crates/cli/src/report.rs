//! Text and machine renderings of the core report structures.
//!
//! The machine format is one self-describing JSON tree per invocation;
//! subspaces appear as named basis lists with exact scalar strings, and
//! every mode/provenance flag is carried through.

use serde_json::{json, Value};

use leibniz_core::algebra::{InvariantsReport, SeriesReport};
use leibniz_core::engel::CartanResult;
use leibniz_core::field::Scalar;
use leibniz_core::frattini::{
    describe_subspace, FrattiniReport, GenFratMethod, GenFratVerdict, NilMode, NonGeneratorSets,
    PrimitiveVerdict, ReportMode,
};
use leibniz_core::lattice::LatticeReport;
use leibniz_core::verify::{SuiteResult, Verdict};
use leibniz_core::{LeibnizAlgebra, Subspace};

pub fn scalar_str(s: &Scalar) -> String {
    s.to_string()
}

pub fn vector_json(a: &LeibnizAlgebra, v: &[Scalar]) -> Value {
    json!({
        "coords": v.iter().map(scalar_str).collect::<Vec<_>>(),
        "pretty": a.format_element(v),
    })
}

pub fn subspace_json(a: &LeibnizAlgebra, s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s
            .basis_vectors()
            .iter()
            .map(|v| v.iter().map(scalar_str).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "pretty": describe_subspace(a, s),
    })
}

fn optional_subspace_json(a: &LeibnizAlgebra, s: &Option<Subspace>) -> Value {
    match s {
        Some(s) => subspace_json(a, s),
        None => Value::Null,
    }
}

fn subspace_list_json(a: &LeibnizAlgebra, list: &[Subspace]) -> Value {
    Value::Array(list.iter().map(|s| subspace_json(a, s)).collect())
}

pub fn mode_str(mode: ReportMode) -> &'static str {
    match mode {
        ReportMode::ExhaustiveLattice => "exhaustive",
        ReportMode::SmallDimExact => "small-dim-exact",
        ReportMode::NilpotentExact => "nilpotent-exact",
        ReportMode::SimpleExact => "simple-exact",
    }
}

pub fn nil_mode_str(mode: NilMode) -> &'static str {
    match mode {
        NilMode::Exhaustive => "exhaustive",
        NilMode::Asserted => "asserted",
        NilMode::Heuristic => "heuristic",
    }
}

pub fn method_str(method: GenFratMethod) -> &'static str {
    match method {
        GenFratMethod::NilPullback => "nil_pullback",
        GenFratMethod::Theorem7Exhaustive => "theorem7_exhaustive",
        GenFratMethod::DefinitionCartan => "definition_cartan",
        GenFratMethod::Theorem16Engel => "theorem16_engel",
    }
}

pub fn invariants_json(a: &LeibnizAlgebra, r: &InvariantsReport) -> Value {
    json!({
        "center": subspace_json(a, &r.center),
        "left_center": subspace_json(a, &r.left_center),
        "leib": subspace_json(a, &r.leib),
        "square": subspace_json(a, &r.square),
        "is_lie": r.is_lie,
    })
}

pub fn invariants_text(a: &LeibnizAlgebra, r: &InvariantsReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("Z(A)        = {}\n", describe_subspace(a, &r.center)));
    out.push_str(&format!(
        "left center = {}\n",
        describe_subspace(a, &r.left_center)
    ));
    out.push_str(&format!("Leib(A)     = {}\n", describe_subspace(a, &r.leib)));
    out.push_str(&format!("A^2         = {}\n", describe_subspace(a, &r.square)));
    out.push_str(&format!("is_lie      = {}\n", r.is_lie));
    out
}

pub fn series_json(a: &LeibnizAlgebra, s: &SeriesReport) -> Value {
    json!({
        "lower_central": subspace_list_json(a, &s.lower_central),
        "omega": subspace_json(a, &s.omega),
        "derived": subspace_list_json(a, &s.derived),
        "upper_central": subspace_list_json(a, &s.upper_central),
        "z_star": subspace_json(a, &s.z_star),
        "nilpotent": s.nilpotent,
        "solvable": s.solvable,
        "nilpotency_class": s.nilpotency_class,
    })
}

pub fn series_text(a: &LeibnizAlgebra, s: &SeriesReport) -> String {
    let fmt_chain = |chain: &[Subspace]| {
        chain
            .iter()
            .map(|t| describe_subspace(a, t))
            .collect::<Vec<_>>()
            .join(" ⊇ ")
    };
    let mut out = String::new();
    out.push_str(&format!("lower central: {}\n", fmt_chain(&s.lower_central)));
    out.push_str(&format!("A^ω          : {}\n", describe_subspace(a, &s.omega)));
    out.push_str(&format!("derived      : {}\n", fmt_chain(&s.derived)));
    out.push_str(&format!(
        "upper central: {}\n",
        s.upper_central
            .iter()
            .map(|t| describe_subspace(a, t))
            .collect::<Vec<_>>()
            .join(" ⊆ ")
    ));
    out.push_str(&format!("Z*(A)        : {}\n", describe_subspace(a, &s.z_star)));
    out.push_str(&format!(
        "nilpotent = {}{}, solvable = {}\n",
        s.nilpotent,
        s.nilpotency_class
            .map(|c| format!(" (class {c})"))
            .unwrap_or_default(),
        s.solvable
    ));
    out
}

pub fn lattice_json(a: &LeibnizAlgebra, r: &LatticeReport) -> Value {
    json!({
        "subspace_count": r.subspace_count,
        "element_count": r.element_count.to_string(),
        "subalgebras": subspace_list_json(a, &r.subalgebras),
        "ideals": subspace_list_json(a, &r.ideals),
        "maximal_subalgebras": subspace_list_json(a, &r.maximal_subalgebras),
        "maximal_ideals": subspace_list_json(a, &r.maximal_ideals),
        "minimal_ideals": subspace_list_json(a, &r.minimal_ideals),
    })
}

pub fn lattice_text(a: &LeibnizAlgebra, r: &LatticeReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "subspaces: {}, subalgebras: {}, ideals: {}\n",
        r.subspace_count,
        r.subalgebras.len(),
        r.ideals.len()
    ));
    let section = |title: &str, list: &[Subspace]| {
        let mut s = format!("{title} ({}):\n", list.len());
        for m in list {
            s.push_str(&format!("  {}\n", describe_subspace(a, m)));
        }
        s
    };
    out.push_str(&section("maximal subalgebras", &r.maximal_subalgebras));
    out.push_str(&section("maximal ideals", &r.maximal_ideals));
    out.push_str(&section("minimal ideals", &r.minimal_ideals));
    out
}

pub fn frattini_json(a: &LeibnizAlgebra, r: &FrattiniReport) -> Value {
    json!({
        "mode": mode_str(r.mode),
        "f": optional_subspace_json(a, &r.f),
        "phi": subspace_json(a, &r.phi),
        "r": subspace_json(a, &r.r),
        "t": optional_subspace_json(a, &r.t),
        "tau": subspace_json(a, &r.tau),
        "nfrat": subspace_json(a, &r.nfrat),
        "nil": subspace_json(a, &r.nil),
        "nil_mode": nil_mode_str(r.nil_mode),
        "rad": subspace_json(a, &r.rad),
        "rad_mode": nil_mode_str(r.rad_mode),
        "maximal_subalgebras": r.maximal_subalgebras.as_ref().map(|l| subspace_list_json(a, l)).unwrap_or(Value::Null),
        "maximal_ideals": r.maximal_ideals.as_ref().map(|l| subspace_list_json(a, l)).unwrap_or(Value::Null),
        "minimal_ideals": r.minimal_ideals.as_ref().map(|l| subspace_list_json(a, l)).unwrap_or(Value::Null),
    })
}

pub fn frattini_text(a: &LeibnizAlgebra, r: &FrattiniReport) -> String {
    let opt = |s: &Option<Subspace>| match s {
        Some(s) => describe_subspace(a, s),
        None => String::from("(not computed in this mode)"),
    };
    let mut out = String::new();
    out.push_str(&format!("mode    : {}\n", mode_str(r.mode)));
    out.push_str(&format!("F(A)    = {}\n", opt(&r.f)));
    out.push_str(&format!("Φ(A)    = {}\n", describe_subspace(a, &r.phi)));
    out.push_str(&format!("R(A)    = {}\n", describe_subspace(a, &r.r)));
    out.push_str(&format!("T(A)    = {}\n", opt(&r.t)));
    out.push_str(&format!("τ(A)    = {}\n", describe_subspace(a, &r.tau)));
    out.push_str(&format!("nFrat(A)= {}\n", describe_subspace(a, &r.nfrat)));
    out.push_str(&format!(
        "Nil(A)  = {} [{}]\n",
        describe_subspace(a, &r.nil),
        nil_mode_str(r.nil_mode)
    ));
    out.push_str(&format!(
        "Rad(A)  = {} [{}]\n",
        describe_subspace(a, &r.rad),
        nil_mode_str(r.rad_mode)
    ));
    if let Some(list) = &r.maximal_subalgebras {
        out.push_str(&format!("maximal subalgebras: {}\n", list.len()));
    }
    if let Some(list) = &r.maximal_ideals {
        out.push_str(&format!("maximal ideals: {}\n", list.len()));
    }
    out
}

pub fn genfrat_json(a: &LeibnizAlgebra, v: &GenFratVerdict) -> Value {
    json!({
        "holds": v.holds,
        "method": method_str(v.method),
        "partial": v.partial,
        "witness": v.witness.as_ref().map(|w| leibniz_core::frattini::format_genfrat_witness(a, w)),
        "notes": v.notes,
    })
}

pub fn genfrat_text(a: &LeibnizAlgebra, v: &GenFratVerdict) -> String {
    let mut out = format!(
        "generalized Frattini: {} (method {}{})\n",
        if v.holds { "holds" } else { "fails" },
        method_str(v.method),
        if v.partial { ", partial evidence" } else { "" }
    );
    if let Some(w) = &v.witness {
        out.push_str(&format!(
            "witness: {}\n",
            leibniz_core::frattini::format_genfrat_witness(a, w)
        ));
    }
    for n in &v.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out
}

pub fn cartan_json(a: &LeibnizAlgebra, r: &CartanResult) -> Value {
    json!({
        "cartan": subspace_json(a, &r.cartan),
        "witness_chain": r.witness_chain.iter().map(|v| vector_json(a, v)).collect::<Vec<_>>(),
        "verified": r.verified,
    })
}

pub fn cartan_text(a: &LeibnizAlgebra, r: &CartanResult) -> String {
    let mut out = format!(
        "Cartan subalgebra: {} (verified: {})\n",
        describe_subspace(a, &r.cartan),
        r.verified
    );
    if !r.witness_chain.is_empty() {
        out.push_str("descent chain:\n");
        for v in &r.witness_chain {
            out.push_str(&format!("  E_A({})\n", a.format_element(v)));
        }
    }
    out
}

pub fn primitive_json(a: &LeibnizAlgebra, v: &PrimitiveVerdict) -> Value {
    json!({
        "is_primitive": v.is_primitive,
        "phi_quotient_zero": v.phi_quotient_zero,
        "unique_minimal": v.unique_minimal,
        "dim_ok": v.dim_ok,
        "minimal_ideal_preimage": v.minimal_ideal_preimage.as_ref().map(|b| subspace_json(a, b)).unwrap_or(Value::Null),
    })
}

pub fn primitive_text(a: &LeibnizAlgebra, v: &PrimitiveVerdict) -> String {
    let mut out = format!(
        "primitive: {} (Φ(A/K) = 0: {}, unique minimal ideal: {}, dim(A/K) > 1: {})\n",
        v.is_primitive, v.phi_quotient_zero, v.unique_minimal, v.dim_ok
    );
    if let Some(b) = &v.minimal_ideal_preimage {
        out.push_str(&format!("B (preimage of the minimal ideal) = {}\n", describe_subspace(a, b)));
    }
    out
}

pub fn nongen_json(a: &LeibnizAlgebra, sets: &NonGeneratorSets) -> Value {
    let fmt = |list: &[Vec<Scalar>]| -> Vec<Value> {
        list.iter().map(|v| vector_json(a, v)).collect()
    };
    json!({
        "non_generators": fmt(&sets.non_generators),
        "normal_non_generators": fmt(&sets.normal_non_generators),
        "n_non_generators": fmt(&sets.n_non_generators),
    })
}

pub fn nongen_text(a: &LeibnizAlgebra, sets: &NonGeneratorSets) -> String {
    let fmt = |label: &str, list: &[Vec<Scalar>]| {
        let mut s = format!("{label} ({} elements):\n", list.len());
        for v in list {
            s.push_str(&format!("  {}\n", a.format_element(v)));
        }
        s
    };
    let mut out = fmt("non-generators", &sets.non_generators);
    out.push_str(&fmt("normal non-generators", &sets.normal_non_generators));
    out.push_str(&fmt("n-nongenerators", &sets.n_non_generators));
    out
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Skipped => "skipped",
    }
}

pub fn suite_json(suite: &SuiteResult) -> Value {
    json!({
        "results": suite.items.iter().map(|item| json!({
            "statement": item.result.statement.name(),
            "algebra": item.algebra,
            "verdict": verdict_str(item.result.verdict),
            "instances": item.result.instances,
            "detail": item.result.detail,
            "skip_reason": item.result.skip_reason,
            "micros": item.result.micros,
        })).collect::<Vec<_>>(),
        "summary": suite.summary.iter().map(|s| json!({
            "statement": s.statement.name(),
            "passes": s.passes,
            "fails": s.fails,
            "skips": s.skips,
        })).collect::<Vec<_>>(),
        "totals": {
            "passes": suite.pass_count(),
            "fails": suite.fail_count(),
            "skips": suite.skip_count(),
        },
    })
}

pub fn suite_text(suite: &SuiteResult, verbose: bool) -> String {
    let mut out = String::new();
    for item in &suite.items {
        let r = &item.result;
        if verbose || r.verdict != Verdict::Pass {
            out.push_str(&format!(
                "{:<8} {:<8} {}{}{}\n",
                r.statement.name(),
                verdict_str(r.verdict),
                item.algebra,
                r.skip_reason
                    .as_ref()
                    .map(|s| format!(" — {s}"))
                    .unwrap_or_default(),
                if r.detail.is_empty() {
                    String::new()
                } else {
                    format!(" — {}", r.detail)
                },
            ));
        }
    }
    out.push_str("summary per statement (pass/fail/skip):\n");
    for s in &suite.summary {
        out.push_str(&format!(
            "  {:<8} {}/{}/{}\n",
            s.statement.name(),
            s.passes,
            s.fails,
            s.skips
        ));
    }
    out.push_str(&format!(
        "totals: {} pass, {} fail, {} skipped\n",
        suite.pass_count(),
        suite.fail_count(),
        suite.skip_count()
    ));
    out
}
