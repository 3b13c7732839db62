//! Critical locus of a homogeneous polynomial: its dimension, the
//! coordinate-subspace components of top dimension, and the generic Milnor
//! number of a transversal slice along each component.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::localalg::{
    groebner_basis, ideal_dimension, milnor_number_at_origin, normal_form, Budget, IdealBasis,
    MilnorNumber,
};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, ProblemInstance, Substitution};
use crate::scalar::Field;
use crate::Rational;

/// Generic slice values are drawn from `GENERIC_LOW..=GENERIC_HIGH`.
pub const GENERIC_LOW: i64 = 2;
pub const GENERIC_HIGH: i64 = 97;
/// Sample pairs tried before a component is declared degenerate.
pub const GENERIC_ATTEMPTS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Enumerated,
    UserSupplied,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Enumerated => "enumerated",
            Provenance::UserSupplied => "user-supplied",
        }
    }
}

/// Coordinate subspace `V(z_i : i in zero_vars)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDescriptor {
    pub zero_vars: BTreeSet<usize>,
    pub dim: usize,
    pub mu_generic: Option<u64>,
    pub provenance: Provenance,
}

impl ComponentDescriptor {
    pub fn new(zero_vars: BTreeSet<usize>, nvars: usize, provenance: Provenance) -> Self {
        let dim = nvars - zero_vars.len();
        ComponentDescriptor {
            zero_vars,
            dim,
            mu_generic: None,
            provenance,
        }
    }

    /// Component from variable names, as typed on the command line.
    pub fn from_names<S: AsRef<str>>(names: &[S], vars: &[String]) -> Result<Self> {
        let mut zero_vars = BTreeSet::new();
        for name in names {
            let name = name.as_ref().trim();
            let idx = vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            if !zero_vars.insert(idx) {
                return Err(Error::InvalidArgument(format!(
                    "variable {name} repeated in component"
                )));
            }
        }
        Ok(Self::new(zero_vars, vars.len(), Provenance::UserSupplied))
    }

    pub fn free_vars(&self, nvars: usize) -> Vec<usize> {
        (0..nvars).filter(|i| !self.zero_vars.contains(i)).collect()
    }

    /// `V(x,y)` style name.
    pub fn label(&self, vars: &[String]) -> String {
        let names: Vec<&str> = self.zero_vars.iter().map(|&i| vars[i].as_str()).collect();
        format!("V({})", names.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalLocusReport {
    pub s: usize,
    pub components: Vec<ComponentDescriptor>,
    /// Whether the listed components are known to be all of the top-dimensional ones.
    pub complete: bool,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Gröbner basis of the Jacobian ideal and the dimension `s` of its zero set.
/// Records `s` on the instance.
pub fn critical_locus(
    instance: &mut ProblemInstance,
    budget: &Budget,
) -> Result<IdealBasis<Rational>> {
    let f = &instance.f;
    let basis = groebner_basis(f.nvars(), &f.gradient(), MonomialOrder::DegRevLex, budget)?;
    let s = ideal_dimension(&basis)
        .ok_or_else(|| Error::Degenerate("the critical locus is empty".into()))?;
    instance.s = Some(s);
    Ok(basis)
}

fn vanishes_on<C: Field>(j: &IdealBasis<C>, zero_vars: &BTreeSet<usize>) -> bool {
    let zv: Vec<usize> = zero_vars.iter().copied().collect();
    j.generators
        .iter()
        .all(|g| g.restrict_to_zero(&zv).is_zero())
}

/// Every coordinate subspace of dimension `s` on which all generators vanish
/// identically. The list is exhaustive when the ideal is monomial.
pub fn enumerate_coordinate_components<C: Field>(
    j: &IdealBasis<C>,
    s: usize,
) -> CriticalLocusReport {
    let n = j.nvars;
    let mut components = Vec::new();
    if s <= n {
        for subset in subsets_of_size(n, n - s) {
            let zero_vars: BTreeSet<usize> = subset.into_iter().collect();
            if vanishes_on(j, &zero_vars) {
                components.push(ComponentDescriptor::new(
                    zero_vars,
                    n,
                    Provenance::Enumerated,
                ));
            }
        }
    }
    CriticalLocusReport {
        s,
        components,
        complete: j.is_monomial(),
    }
}

/// Highest power tried when testing radical membership.
pub const COVERAGE_MAX_POWER: u32 = 512;
const COVERAGE_MAX_GENERATORS: usize = 4096;

/// Proves that the critical locus lies inside the union of `components` by
/// showing that some power of every generator of their product ideal lies in
/// `J`. `j` must be a Gröbner basis. `false` means "not proved", not "incomplete".
pub fn certify_coverage<C: Field>(j: &IdealBasis<C>, components: &[ComponentDescriptor]) -> bool {
    if !j.reduced || components.is_empty() || j.generators.is_empty() {
        return false;
    }
    let n = j.nvars;
    // Generators of the product ideal: one zero variable from each component.
    let mut products: Vec<Monomial> = vec![Monomial::one(n)];
    for c in components {
        let mut next: Vec<Monomial> = Vec::new();
        for m in &products {
            for &i in &c.zero_vars {
                let t = m.mul(&Monomial::var(n, i, 1));
                if !next.iter().any(|q| q.divides(&t)) {
                    next.retain(|q| !t.divides(q));
                    next.push(t);
                }
            }
        }
        if next.len() > COVERAGE_MAX_GENERATORS {
            return false;
        }
        products = next;
    }
    let template = &j.generators[0];
    let one = Polynomial::constant(template.vars().clone(), template.order(), C::one());
    products.iter().all(|m| {
        let mut power = one.clone();
        (0..COVERAGE_MAX_POWER).any(|_| {
            power = normal_form(&power.mul_term(m, &C::one()), &j.generators);
            power.is_zero()
        })
    })
}

/// Index subsets of `0..n` of size `k`, in lexicographic order.
fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for t in i + 1..k {
            cur[t] = cur[t - 1] + 1;
        }
    }
}

/// Whether a supplied component lies in the critical locus and has dimension `s`.
pub fn verify_user_component<C: Field>(
    j: &IdealBasis<C>,
    component: &ComponentDescriptor,
    s: usize,
) -> bool {
    component.zero_vars.iter().all(|&i| i < j.nvars)
        && component.dim == s
        && j.nvars - component.zero_vars.len() == s
        && vanishes_on(j, &component.zero_vars)
}

fn component_seed(seed: u64, component: &ComponentDescriptor) -> u64 {
    let mask = component
        .zero_vars
        .iter()
        .fold(0u64, |acc, &i| acc | (1u64 << (i % 64)));
    seed ^ mask.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn slice_milnor_number(
    instance: &ProblemInstance,
    free: &[usize],
    values: &[i64],
    budget: &Budget,
) -> Result<MilnorNumber> {
    let vars = instance.f.vars();
    let assignments: BTreeMap<String, Substitution<Rational>> = free
        .iter()
        .zip(values)
        .map(|(&i, &v)| (vars[i].clone(), Substitution::Value(Rational::from_i64(v))))
        .collect();
    let slice = instance.f.substitute(&assignments)?;
    if slice.is_zero() {
        return Ok(MilnorNumber::Infinite);
    }
    milnor_number_at_origin(&slice, budget)
}

/// Milnor number of the slice of `f` through a random point of the
/// component, confirmed by a second independent point. Deterministic in `seed`.
pub fn generic_milnor_number(
    instance: &ProblemInstance,
    component: &ComponentDescriptor,
    seed: u64,
    budget: &Budget,
) -> Result<u64> {
    let nvars = instance.f.nvars();
    let free = component.free_vars(nvars);
    if free.is_empty() {
        return milnor_number_at_origin(&instance.f, budget)?
            .finite()
            .ok_or_else(|| {
                Error::Degenerate("the origin is not an isolated critical point".into())
            });
    }
    let range = (GENERIC_HIGH - GENERIC_LOW + 1) as usize;
    if free.len() > range {
        return Err(Error::InvalidArgument(format!(
            "{} free variables exceed the {range} distinct generic values",
            free.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(component_seed(seed, component));
    let mut draw = || -> Vec<i64> {
        sample(&mut rng, range, free.len())
            .into_iter()
            .map(|k| GENERIC_LOW + k as i64)
            .collect()
    };
    for _ in 0..GENERIC_ATTEMPTS {
        let (a, b) = (draw(), draw());
        let mu_a = slice_milnor_number(instance, &free, &a, budget)?;
        let mu_b = slice_milnor_number(instance, &free, &b, budget)?;
        if let (MilnorNumber::Finite(x), MilnorNumber::Finite(y)) = (mu_a, mu_b) {
            if x == y && x > 0 {
                return Ok(x);
            }
        }
    }
    Err(Error::Degenerate(format!(
        "no two generic slices agreed on a finite Milnor number after {GENERIC_ATTEMPTS} attempts"
    )))
}

/// Fills `mu_generic` for every component, in parallel.
pub fn annotate_generic_milnor_numbers(
    instance: &ProblemInstance,
    report: &mut CriticalLocusReport,
    seed: u64,
    budget: &Budget,
) -> Result<()> {
    let mus: Vec<Result<u64>> = report
        .components
        .par_iter()
        .map(|c| generic_milnor_number(instance, c, seed, budget))
        .collect();
    for (c, mu) in report.components.iter_mut().zip(mus) {
        c.mu_generic = Some(mu?);
    }
    Ok(())
}
