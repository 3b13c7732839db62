use std::fs;

use milnor_core::bounds::{bound_report, nonreduced_analysis};
use milnor_core::critlocus::{
    annotate_generic_milnor_numbers, certify_coverage, critical_locus,
    enumerate_coordinate_components, verify_user_component, ComponentDescriptor,
};
use milnor_core::localalg::{
    milnor_number_at_origin, milnor_truncation_oracle, Budget, MilnorNumber,
};
use milnor_core::monolab::{charpoly_inverse_invariance, charpoly_mod_p_power, is_quasiunipotent};
use milnor_core::polyring::{parse_polynomial, PrimePower, ProblemInstance};
use milnor_core::{Error, IntMatrix, Result};

use crate::render::{self, BoundOutcome, CharcheckOutcome, ComponentStatus, FullCheck, MuOutcome};
use crate::{BoundArgs, CharcheckArgs, MuArgs, NonreducedArgs, EXIT_DEGENERATE, EXIT_OK};

/// Rendered report and the exit code it should end the process with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: EXIT_OK,
        }
    }
}

fn parse_prime_power(text: &str) -> Result<PrimePower> {
    let bad = || Error::InvalidArgument(format!("prime power must look like P^M, got `{text}`"));
    let (p, m) = text.split_once('^').ok_or_else(bad)?;
    Ok(PrimePower {
        p: p.trim().parse().map_err(|_| bad())?,
        m: m.trim().parse().map_err(|_| bad())?,
    })
}

pub fn cmd_bound(args: &BoundArgs) -> Result<Output> {
    let budget = Budget {
        s_pairs: args.poly.budget,
    };
    let f = parse_polynomial(&args.poly.poly, args.poly.vars.as_deref())?;
    let mut instance = ProblemInstance::new(f)?;
    if let Some(pp) = &args.prime_power {
        instance = instance.with_prime_power(parse_prime_power(pp)?)?;
    }
    let j = critical_locus(&mut instance, &budget)?;
    let s = instance.s.expect("set by critical_locus");
    let mut report = enumerate_coordinate_components(&j, s);

    let vars = instance.f.vars().to_vec();
    let mut user_supplied = false;
    for spec in &args.components {
        let names: Vec<&str> = spec.split(',').filter(|t| !t.trim().is_empty()).collect();
        let comp = ComponentDescriptor::from_names(&names, &vars)?;
        if !verify_user_component(&j, &comp, s) {
            return Err(Error::InvalidArgument(format!(
                "{} is not a {s}-dimensional component of the critical locus",
                comp.label(&vars)
            )));
        }
        user_supplied = true;
        if !report
            .components
            .iter()
            .any(|c| c.zero_vars == comp.zero_vars)
        {
            report.components.push(comp);
        }
    }
    report
        .components
        .sort_by(|a, b| a.zero_vars.cmp(&b.zero_vars));

    let status = if report.complete {
        ComponentStatus::Complete
    } else if certify_coverage(&j, &report.components) {
        ComponentStatus::Certified
    } else if user_supplied {
        ComponentStatus::UserConfirmed
    } else if args.assume_complete {
        ComponentStatus::Assumed
    } else {
        return Err(Error::Degenerate(format!(
            "could not prove that the {} enumerated coordinate component(s) cover the critical locus; \
             confirm with --component or --assume-complete",
            report.components.len()
        )));
    };
    if report.components.is_empty() {
        return Err(Error::Degenerate(format!(
            "no coordinate subspace of dimension {s} lies in the critical locus; change coordinates and pass --component"
        )));
    }

    annotate_generic_milnor_numbers(&instance, &mut report, args.seed, &budget)?;
    let mus: Vec<u64> = report
        .components
        .iter()
        .map(|c| c.mu_generic.expect("annotated"))
        .collect();
    let bounds = bound_report(
        instance.n,
        s,
        instance.d,
        instance.prime_power,
        &mus,
        args.multiple_of,
    )?;

    let outcome = BoundOutcome {
        args,
        instance: &instance,
        report: &report,
        status,
        bounds: &bounds,
    };
    Ok(Output::ok(match args.poly.format {
        crate::Format::Text => render::bound_text(&outcome),
        crate::Format::Json => render::bound_json(&outcome),
    }))
}

pub fn cmd_mu(args: &MuArgs) -> Result<Output> {
    let budget = Budget {
        s_pairs: args.poly.budget,
    };
    let f = parse_polynomial(&args.poly.poly, args.poly.vars.as_deref())?;
    let mu = milnor_number_at_origin(&f, &budget)?;
    let oracle = args
        .oracle_cap
        .map(|cap| milnor_truncation_oracle(&f, cap))
        .transpose()?;
    if let (Some(o), MilnorNumber::Finite(_)) = (oracle, mu) {
        if o.value().is_some() && !o.agrees_with(mu) {
            return Err(Error::Degenerate(format!(
                "standard basis gives {mu} but the truncation oracle is stable at {}",
                o.value().unwrap()
            )));
        }
    }
    let outcome = MuOutcome {
        args,
        f: &f,
        mu,
        oracle,
    };
    let text = match args.poly.format {
        crate::Format::Text => render::mu_text(&outcome),
        crate::Format::Json => render::mu_json(&outcome),
    };
    // A non-isolated point is a reportable result, but not a success.
    let code = if mu == MilnorNumber::Infinite {
        EXIT_DEGENERATE
    } else {
        EXIT_OK
    };
    Ok(Output { text, code })
}

pub fn cmd_charcheck(args: &CharcheckArgs) -> Result<Output> {
    let text = fs::read_to_string(&args.matrix).map_err(|e| {
        Error::InvalidArgument(format!("cannot read {}: {e}", args.matrix.display()))
    })?;
    let a = IntMatrix::parse_text(&text)?;
    let identity = charpoly_mod_p_power(&a, args.p, args.m)?;
    let full = if args.full {
        let q = a.charpoly_exact();
        let factorization = is_quasiunipotent(&q)?;
        let inverse = charpoly_inverse_invariance(&q).map_err(|e| e.to_string());
        Some(FullCheck {
            charpoly: q,
            factorization,
            inverse,
        })
    } else {
        None
    };
    let outcome = CharcheckOutcome {
        args,
        identity,
        full,
    };
    Ok(Output::ok(match args.format {
        crate::Format::Text => render::charcheck_text(&outcome),
        crate::Format::Json => render::charcheck_json(&outcome),
    }))
}

pub fn cmd_nonreduced(args: &NonreducedArgs) -> Result<Output> {
    let report = nonreduced_analysis(
        &args.mults,
        args.degree,
        args.coprime_set.as_deref(),
        args.factor_degrees.as_deref(),
    )?;
    Ok(Output::ok(match args.format {
        crate::Format::Text => render::nonreduced_text(args, &report),
        crate::Format::Json => render::nonreduced_json(args, &report),
    }))
}
