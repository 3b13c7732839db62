use std::fmt::Write as _;

use milnor_core::bounds::{BoundReport, NonreducedReport};
use milnor_core::critlocus::CriticalLocusReport;
use milnor_core::localalg::{MilnorNumber, OracleOutcome};
use milnor_core::monolab::{CyclotomicFactorization, PowerIdentity};
use milnor_core::polyring::ProblemInstance;
use milnor_core::{IntPolynomial, QPolynomial};
use serde_json::{json, Value};

use crate::{BoundArgs, CharcheckArgs, MuArgs, NonreducedArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentStatus {
    /// Monomial Jacobian ideal: coordinate subspaces are all the components.
    Complete,
    /// Some power of every product of component coordinates lies in the Jacobian ideal.
    Certified,
    UserConfirmed,
    Assumed,
}

impl ComponentStatus {
    fn name(self) -> &'static str {
        match self {
            ComponentStatus::Complete => "complete",
            ComponentStatus::Certified => "certified",
            ComponentStatus::UserConfirmed => "user-confirmed",
            ComponentStatus::Assumed => "assumed",
        }
    }

    fn caveat(self) -> Option<&'static str> {
        match self {
            ComponentStatus::Complete | ComponentStatus::Certified => None,
            ComponentStatus::UserConfirmed => Some("bounds are conditional on the user-confirmed component list"),
            ComponentStatus::Assumed => {
                Some("bounds are conditional on the enumerated component list being complete (--assume-complete)")
            }
        }
    }
}

const SAMPLED_CAVEAT: &str =
    "generic Milnor numbers come from two agreeing random slices; genericity is sampled, not certified";

pub struct BoundOutcome<'a> {
    pub args: &'a BoundArgs,
    pub instance: &'a ProblemInstance,
    pub report: &'a CriticalLocusReport,
    pub status: ComponentStatus,
    pub bounds: &'a BoundReport,
}

impl BoundOutcome<'_> {
    fn caveats(&self) -> Vec<String> {
        let mut out: Vec<String> = self.status.caveat().into_iter().map(String::from).collect();
        if self.report.s > 0 {
            out.push(SAMPLED_CAVEAT.to_string());
        }
        out.extend(self.bounds.caveats.iter().cloned());
        out
    }
}

fn opt_str<T: ToString>(v: &Option<T>) -> Value {
    v.as_ref()
        .map_or(Value::Null, |x| Value::String(x.to_string()))
}

fn opt_text<T: ToString>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

pub fn bound_text(o: &BoundOutcome) -> String {
    let (inst, b) = (o.instance, o.bounds);
    let vars = inst.f.vars();
    let mut s = String::new();
    let _ = writeln!(s, "f = {}", inst.f);
    let _ = writeln!(s, "variables: {} (n = {})", vars.join(", "), inst.n);
    let _ = match inst.prime_power {
        Some(pp) => writeln!(s, "degree: {} = {}^{}", inst.d, pp.p, pp.m),
        None => writeln!(s, "degree: {} (not a prime power)", inst.d),
    };
    let _ = writeln!(s, "critical locus: s = {}", o.report.s);
    let _ = writeln!(s, "components ({}):", o.status.name());
    for (k, c) in o.report.components.iter().enumerate() {
        let _ = writeln!(
            s,
            "  {}  [{}]  generic mu = {}",
            c.label(vars),
            c.provenance,
            opt_text(&c.mu_generic)
        );
        if let Some(t) = b.terms.get(k) {
            let _ = writeln!(
                s,
                "      mu - ({}) = {}*{} + {}, term {}",
                t.epsilon, t.p, t.quotient, t.r, t.value
            );
        }
    }
    let _ = writeln!(s, "naive bound: {}", b.naive);
    let _ = match (inst.prime_power, b.main) {
        (Some(pp), Some(m)) => writeln!(s, "main bound (p = {}): {m}", pp.p),
        _ => writeln!(s, "main bound: n/a"),
    };
    let _ = writeln!(s, "special-case bound: {}", opt_text(&b.special));
    let _ = writeln!(s, "Le attaching bound: {}", opt_text(&b.le));
    let _ = match (o.args.multiple_of, b.refined) {
        (Some(q), Some(r)) => writeln!(s, "refined bound (multiple of {q}): {r}"),
        _ => writeln!(s, "refined bound: n/a"),
    };
    let _ = writeln!(s, "best bound: {}", b.best);
    let caveats = o.caveats();
    if !caveats.is_empty() {
        let _ = writeln!(s, "caveats:");
        for c in caveats {
            let _ = writeln!(s, "  - {c}");
        }
    }
    s
}

pub fn bound_json(o: &BoundOutcome) -> String {
    let (inst, b, a) = (o.instance, o.bounds, o.args);
    let vars = inst.f.vars();
    let components: Vec<Value> = o
        .report
        .components
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let term = b.terms.get(k).map_or(Value::Null, |t| {
                json!({
                    "epsilon": t.epsilon.to_string(),
                    "quotient": t.quotient.to_string(),
                    "r": t.r.to_string(),
                    "value": t.value.to_string(),
                })
            });
            json!({
                "label": c.label(vars),
                "zero_vars": c.zero_vars.iter().map(|&i| vars[i].clone()).collect::<Vec<_>>(),
                "dim": c.dim.to_string(),
                "mu_generic": opt_str(&c.mu_generic),
                "provenance": c.provenance.name(),
                "generic_confidence": if c.dim == 0 { "exact" } else { "sampled" },
                "main_term": term,
                "special_case": opt_str(&b.specials.get(k).copied().flatten()),
            })
        })
        .collect();
    let doc = json!({
        "instance": {
            "polynomial": inst.f.to_string(),
            "variables": vars.to_vec(),
            "n": inst.n.to_string(),
            "d": inst.d.to_string(),
            "prime_power": inst.prime_power.map_or(Value::Null, |pp| json!({"p": pp.p.to_string(), "m": pp.m.to_string()})),
            "s": o.report.s.to_string(),
            "component_list": o.status.name(),
        },
        "components": components,
        "bounds": {
            "naive": b.naive.to_string(),
            "main": opt_str(&b.main),
            "special": opt_str(&b.special),
            "le": opt_str(&b.le),
            "refined": opt_str(&b.refined),
            "best": b.best.to_string(),
        },
        "caveats": o.caveats(),
        "config": {
            "subcommand": "bound",
            "poly": a.poly.poly,
            "vars": a.poly.vars,
            "components": a.components,
            "assume_complete": a.assume_complete,
            "seed": a.seed.to_string(),
            "prime_power": a.prime_power,
            "multiple_of": opt_str(&a.multiple_of),
            "budget": a.poly.budget.to_string(),
            "format": a.poly.format.name(),
        },
    });
    pretty(&doc)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

pub struct MuOutcome<'a> {
    pub args: &'a MuArgs,
    pub f: &'a QPolynomial,
    pub mu: MilnorNumber,
    pub oracle: Option<OracleOutcome>,
}

fn oracle_text(o: &OracleOutcome) -> String {
    match o {
        OracleOutcome::Stable(v) => format!("stable at {v}"),
        OracleOutcome::Unstable { at_cap, at_next } => {
            format!("unstable ({at_cap} then {at_next})")
        }
    }
}

pub fn mu_text(o: &MuOutcome) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "f = {}", o.f);
    let _ = match o.mu {
        MilnorNumber::Finite(v) => writeln!(s, "mu = {v}"),
        MilnorNumber::Infinite => writeln!(s, "mu = infinite (non-isolated critical point)"),
    };
    if let (Some(cap), Some(or)) = (o.args.oracle_cap, &o.oracle) {
        let _ = writeln!(s, "truncation oracle (cap {cap}): {}", oracle_text(or));
    }
    s
}

pub fn mu_json(o: &MuOutcome) -> String {
    let a = o.args;
    let oracle = o.oracle.map_or(Value::Null, |or| match or {
        OracleOutcome::Stable(v) => json!({"stable": true, "value": v.to_string()}),
        OracleOutcome::Unstable { at_cap, at_next } => {
            json!({"stable": false, "at_cap": at_cap.to_string(), "at_next": at_next.to_string()})
        }
    });
    pretty(&json!({
        "polynomial": o.f.to_string(),
        "variables": o.f.vars().to_vec(),
        "mu": o.mu.to_string(),
        "isolated": o.mu != MilnorNumber::Infinite,
        "oracle": oracle,
        "config": {
            "subcommand": "mu",
            "poly": a.poly.poly,
            "vars": a.poly.vars,
            "oracle_cap": opt_str(&a.oracle_cap),
            "budget": a.poly.budget.to_string(),
            "format": a.poly.format.name(),
        },
    }))
}

pub struct FullCheck {
    pub charpoly: IntPolynomial,
    pub factorization: CyclotomicFactorization,
    /// Verdict, or why the check does not apply.
    pub inverse: Result<bool, String>,
}

pub struct CharcheckOutcome<'a> {
    pub args: &'a CharcheckArgs,
    pub identity: PowerIdentity,
    pub full: Option<FullCheck>,
}

fn factors_text(f: &CyclotomicFactorization) -> String {
    let names: Vec<String> = f.factors.iter().map(|k| format!("Phi_{k}")).collect();
    if names.is_empty() {
        "none".into()
    } else {
        names.join(" * ")
    }
}

pub fn charcheck_text(o: &CharcheckOutcome) -> String {
    let (p, m) = (o.args.p, o.args.m);
    let mut s = String::new();
    let _ = writeln!(s, "char(A) mod {p}: {}", o.identity.char_a);
    let _ = writeln!(s, "char(A^({p}^{m})) mod {p}: {}", o.identity.char_power);
    let _ = writeln!(
        s,
        "verdict: {}",
        if o.identity.holds() {
            "equal"
        } else {
            "different"
        }
    );
    if let Some(full) = &o.full {
        let _ = writeln!(s, "char(A): {}", full.charpoly);
        let _ = writeln!(
            s,
            "quasi-unipotent: {} (cyclotomic factors: {})",
            if full.factorization.quasi_unipotent {
                "yes"
            } else {
                "no"
            },
            factors_text(&full.factorization)
        );
        let _ = match &full.inverse {
            Ok(v) => writeln!(
                s,
                "invariant under inversion: {}",
                if *v { "yes" } else { "no" }
            ),
            Err(why) => writeln!(s, "invariant under inversion: n/a ({why})"),
        };
    }
    s
}

pub fn charcheck_json(o: &CharcheckOutcome) -> String {
    let a = o.args;
    let full = o.full.as_ref().map_or(Value::Null, |f| {
        json!({
            "charpoly": f.charpoly.to_string(),
            "quasi_unipotent": f.factorization.quasi_unipotent,
            "cyclotomic_factors": f.factorization.factors.iter().map(u64::to_string).collect::<Vec<_>>(),
            "inverse_invariance": match &f.inverse {
                Ok(v) => json!(v),
                Err(_) => Value::Null,
            },
        })
    });
    pretty(&json!({
        "char_a_mod_p": o.identity.char_a.to_string(),
        "char_power_mod_p": o.identity.char_power.to_string(),
        "equal": o.identity.holds(),
        "full": full,
        "config": {
            "subcommand": "charcheck",
            "matrix": a.matrix.display().to_string(),
            "p": a.p.to_string(),
            "m": a.m.to_string(),
            "full": a.full,
            "format": a.format.name(),
        },
    }))
}

pub fn nonreduced_text(a: &NonreducedArgs, r: &NonreducedReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "connected components of the fiber: {}",
        r.components_count
    );
    let _ = writeln!(s, "rank H^0 (reduced): {}", r.rank_h0);
    let _ = writeln!(s, "naive bound: {}", r.naive);
    let _ = writeln!(s, "coprime-multiplicity bound: {}", r.item3_bound);
    if a.coprime_set.is_none() {
        let _ = writeln!(
            s,
            "(no --coprime-set given; the last bound equals the naive one)"
        );
    }
    s
}

pub fn nonreduced_json(a: &NonreducedArgs, r: &NonreducedReport) -> String {
    let list = |v: &Option<Vec<u64>>| {
        v.as_ref()
            .map(|v| v.iter().map(u64::to_string).collect::<Vec<_>>())
    };
    pretty(&json!({
        "components": r.components_count.to_string(),
        "rank_h0": r.rank_h0.to_string(),
        "naive": r.naive.to_string(),
        "coprime_bound": r.item3_bound.to_string(),
        "config": {
            "subcommand": "nonreduced",
            "mults": a.mults.iter().map(u64::to_string).collect::<Vec<_>>(),
            "degree": a.degree.to_string(),
            "coprime_set": list(&a.coprime_set),
            "factor_degrees": list(&a.factor_degrees),
            "format": a.format.name(),
        },
    }))
}
