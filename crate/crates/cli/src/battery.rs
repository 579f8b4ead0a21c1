//! `check-all`: every applicable check on one input plus seeded random instances.

use homleib::actions::MutualActions;
use homleib::homology::CoRepresentation;
use homleib::random::{random_corep, random_ideal_pair, random_trivial_pair, rng};
use homleib::tensor::build_tensor;
use homleib::{FieldSpec, Subspace};

use crate::commands::{self, homology_report, tensor_report};
use crate::document::{AlgebraDocument, Document};
use crate::{CliError, Command, Options, Report};

/// Homology degree used by the battery when `--max-n` is absent.
const BATTERY_MAX_N: usize = 2;

/// Runs a subcommand and folds its outcome into `r`; hypothesis failures
/// become failed checks.
fn fold(r: &mut Report, prefix: &str, outcome: Result<Report, CliError>) -> Result<(), CliError> {
    match outcome {
        Ok(sub) => r.absorb(prefix, sub),
        Err(CliError::Math { kind, message }) => {
            r.check(format!("{prefix}: {kind}"), false);
            r.note(format!("{prefix}: {message}"));
        }
        Err(e @ CliError::Usage(_)) => return Err(e),
    }
    Ok(())
}

fn sub(command: Command, doc: &Document, opts: Options) -> Result<Report, CliError> {
    commands::dispatch(&command, std::slice::from_ref(doc), opts)
}

fn input_battery(r: &mut Report, doc: &Document, opts: Options) -> Result<(), CliError> {
    let input = String::new();
    let validation = commands::validate(doc);
    let valid = validation.status == crate::Status::Ok;
    r.absorb("validate", validation);
    if !valid {
        return Ok(());
    }
    match doc {
        Document::Algebra(AlgebraDocument::Leibniz(l)) => {
            let max_n = opts.max_n.unwrap_or(BATTERY_MAX_N);
            for (name, c) in [("homology (trivial)", CoRepresentation::ground_field(l)), ("homology (adjoint)", CoRepresentation::adjoint(l))] {
                r.absorb(name, homology_report(&c, max_n));
            }
            fold(r, "lieize", sub(Command::Lieize { input: input.clone() }, doc, opts))?;
            fold(r, "tensor square", sub(Command::Tensor { input: input.clone(), second: None, properties: true }, doc, opts))?;
            let p = l.predicates();
            if p.perfect {
                fold(r, "uce", commands::uce(l))?;
                let f = l.field();
                fold(r, "six-term (ideal 0)", commands::six_term_report(l, &Subspace::zero(f, l.dim())))?;
                fold(r, "six-term (ideal L)", commands::six_term_report(l, &Subspace::full(f, l.dim())))?;
            } else {
                r.note("not perfect: universal central extension and six-term checks skipped");
            }
            if p.alpha_perfect {
                fold(r, "uce-alpha", commands::uce_alpha(l))?;
            } else {
                r.note("not alpha-perfect: alpha-uce checks skipped");
            }
        }
        Document::Algebra(AlgebraDocument::Associative(a)) => {
            fold(r, "hochschild", commands::hochschild(a))?;
            fold(r, "hh1", commands::hh1(a))?;
            if a.alpha_identity_holds() {
                fold(r, "sequence-check", commands::sequence(a))?;
            } else {
                r.note("alpha-identity condition fails: sequence check skipped");
            }
        }
        Document::Action(_) => {
            fold(r, "semidirect", sub(Command::Semidirect { input }, doc, opts))?;
        }
    }
    Ok(())
}

fn random_battery(r: &mut Report, trials: usize, opts: Options) -> Result<(), CliError> {
    let f = FieldSpec::Rationals;
    let mut g = rng(opts.seed);
    let max_n = opts.max_n.unwrap_or(BATTERY_MAX_N);
    for k in 0..trials {
        let c = random_corep(f, &mut g, 3);
        r.absorb(&format!("random co-representation {k}"), homology_report(&c, max_n));
    }
    for k in 0..trials {
        let ma = random_trivial_pair(f, &mut g, 3);
        let t = build_tensor(&ma)?;
        let (m, n) = (ma.m(), ma.n());
        let mut sub = tensor_report(&t, false)?;
        let expected = 2 * (m.dim() - m.derived_subspace().dim()) * (n.dim() - n.derived_subspace().dim());
        sub.check("dim = 2 dim(M/[M,M]) dim(N/[N,N])", t.dim() == expected);
        sub.check("tensor algebra is abelian", t.algebra().is_abelian());
        r.absorb(&format!("random trivial pair {k}"), sub);
    }
    for k in 0..trials {
        let (l, m, n) = random_ideal_pair(f, &mut g, 3);
        let t = build_tensor(&MutualActions::ideals(&l, &m, &n)?)?;
        r.absorb(&format!("random ideal pair {k}"), tensor_report(&t, true)?);
    }
    Ok(())
}

pub(crate) fn check_all(doc: Option<&Document>, trials: usize, opts: Options) -> Result<Report, CliError> {
    let mut r = Report::new("");
    if let Some(doc) = doc {
        input_battery(&mut r, doc, opts)?;
    }
    random_battery(&mut r, trials, opts)?;
    r.detail("seed", opts.seed);
    r.detail("trials", trials);
    let failed = r.checks.iter().filter(|c| !c.holds).count();
    r.summary = format!("{} checks, {} failed", r.checks.len(), failed);
    Ok(r)
}
