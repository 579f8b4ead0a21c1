//! One function per subcommand. Each returns a [`Report`]; hypotheses that
//! fail before anything can be computed surface as [`CliError::Math`].

use homleib::actions::{semidirect, HomAction, MutualActions};
use homleib::extensions::{universal_alpha_central_extension, universal_central_extension, ExtensionKind};
use homleib::homassoc::{first_homologies, hochschild_module, sequence_check, HomAssociativeAlgebra};
use homleib::homology::{chain_dim, hl0_closed_form, hl1_trivial_closed_form, homology_range, trivial_homology_dim, CoRepresentation};
use homleib::report::ValidationReport;
use homleib::tensor::{build_tensor, psi_maps, psi_properties, TensorProduct};
use homleib::{AlgebraHom, ExactnessReport, HomLeibnizAlgebra, Subspace};
use serde_json::Value;

use crate::document::{associative_to_document, leibniz_to_document, parse_matrix, AlgebraDocument, Document};
use crate::{CliError, Coeffs, Command, Options, Report};

/// Homology degree used when `--max-n` is absent.
pub const DEFAULT_MAX_N: usize = 3;

pub(crate) fn dispatch(command: &Command, docs: &[Document], opts: Options) -> Result<Report, CliError> {
    let first = docs.first().ok_or_else(|| CliError::Usage("missing input".into()))?;
    match command {
        Command::Validate { .. } => Ok(validate(first)),
        Command::Info { .. } => info(first),
        Command::Lieize { .. } => lieize(leibniz(first)?),
        Command::Twist { endo, .. } => twist(first, endo),
        Command::Semidirect { .. } => semidirect_cmd(action(first)?),
        Command::Tensor { properties, .. } => match docs.get(1) {
            None => tensor_adjoint(leibniz(first)?, *properties),
            Some(second) => tensor_trivial(leibniz(first)?, leibniz(second)?, *properties),
        },
        Command::Homology { coeffs, .. } => homology_cmd(leibniz(first)?, *coeffs, opts.max_n.unwrap_or(DEFAULT_MAX_N)),
        Command::Uce { .. } => uce(leibniz(first)?),
        Command::UceAlpha { .. } => uce_alpha(leibniz(first)?),
        Command::SixTerm { ideal, .. } => six_term(leibniz(first)?, ideal),
        Command::Hochschild { .. } => hochschild(associative(first)?),
        Command::Hh1 { .. } => hh1(associative(first)?),
        Command::SequenceCheck { .. } => sequence(associative(first)?),
        Command::CheckAll { .. } => unreachable!("handled by the battery"),
    }
}

pub(crate) fn leibniz(doc: &Document) -> Result<&HomLeibnizAlgebra, CliError> {
    match doc {
        Document::Algebra(AlgebraDocument::Leibniz(l)) => Ok(l),
        _ => Err(CliError::Usage("expected a hom-leibniz or leibniz algebra document".into())),
    }
}

pub(crate) fn associative(doc: &Document) -> Result<&HomAssociativeAlgebra, CliError> {
    match doc {
        Document::Algebra(AlgebraDocument::Associative(a)) => Ok(a),
        _ => Err(CliError::Usage("expected a hom-associative algebra document".into())),
    }
}

fn action(doc: &Document) -> Result<&HomAction, CliError> {
    match doc {
        Document::Action(a) => Ok(&a.action),
        _ => Err(CliError::Usage("expected an action document".into())),
    }
}

fn invalid(kind: &str, v: &ValidationReport) -> CliError {
    CliError::Math { kind: kind.into(), message: v.summary() }
}

pub(crate) fn require_leibniz(l: &HomLeibnizAlgebra) -> Result<(), CliError> {
    let v = l.validate();
    if v.is_valid() {
        Ok(())
    } else {
        Err(invalid("InvalidAlgebra", &v))
    }
}

fn require_associative(a: &HomAssociativeAlgebra) -> Result<(), CliError> {
    let v = a.validate();
    if v.is_valid() {
        Ok(())
    } else {
        Err(invalid("InvalidAlgebra", &v))
    }
}

fn document_value(text: &str) -> Value {
    serde_json::from_str(text).expect("documents are valid JSON")
}

fn basis_strings(l: &HomLeibnizAlgebra, s: &Subspace) -> Vec<String> {
    s.basis().iter().map(|v| l.format(v)).collect()
}

/// One check per declared axiom plus a note per violation.
fn record_validation(r: &mut Report, v: &ValidationReport) {
    for axiom in &v.axioms {
        r.check(axiom.clone(), v.holds(axiom));
    }
    for x in &v.violations {
        let defect: Vec<String> = x.defect.iter().map(ToString::to_string).collect();
        r.note(format!("{} fails at ({}), defect [{}]", x.axiom, x.witness.join(", "), defect.join(", ")));
    }
    r.detail("validation", v);
}

pub(crate) fn record_exactness(r: &mut Report, e: &ExactnessReport) {
    for t in &e.terms {
        r.dim(&t.name, t.dim);
    }
    for j in &e.joints {
        r.check(format!("exact at {}", j.name), j.holds);
    }
    for c in &e.checks {
        r.check(c.name.clone(), c.value);
    }
    for f in e.failures() {
        r.note(f);
    }
    r.detail("certificate", e);
}

pub(crate) fn validate(doc: &Document) -> Report {
    let mut r = Report::new("");
    match doc {
        Document::Algebra(AlgebraDocument::Leibniz(l)) => {
            let v = l.validate();
            r.dim("dim", l.dim());
            record_validation(&mut r, &v);
            r.summary = if v.is_valid() {
                let lie = l.is_hom_lie();
                r.detail("hom_lie", lie);
                format!("valid hom-leibniz, {}hom-lie", if lie { "" } else { "not " })
            } else {
                format!("invalid hom-leibniz: {}", v.summary())
            };
        }
        Document::Algebra(AlgebraDocument::Associative(a)) => {
            let v = a.validate();
            r.dim("dim", a.dim());
            record_validation(&mut r, &v);
            r.summary = if v.is_valid() {
                format!("valid hom-associative, {}commutative", if a.is_commutative() { "" } else { "not " })
            } else {
                format!("invalid hom-associative: {}", v.summary())
            };
        }
        Document::Action(d) => {
            let v = d.action.validate();
            r.dim("actor", d.action.actor().dim());
            r.dim("target", d.action.target().dim());
            record_validation(&mut r, &v);
            r.summary = if v.is_valid() {
                format!("valid action, {}trivial", if d.action.is_trivial() { "" } else { "not " })
            } else {
                format!("invalid action: {}", v.summary())
            };
        }
    }
    r
}

fn info(doc: &Document) -> Result<Report, CliError> {
    match doc {
        Document::Algebra(AlgebraDocument::Leibniz(l)) => {
            require_leibniz(l)?;
            let mut r = Report::new("");
            let (center, derived) = (l.center(), l.derived_subspace());
            r.dim("dim", l.dim());
            r.dim("center", center.dim());
            r.dim("derived", derived.dim());
            r.dim("alpha_image", l.alpha_image().dim());
            r.dim("alpha_derived", l.alpha_derived_subspace().dim());
            r.detail("predicates", l.predicates());
            r.detail("hom_lie", l.is_hom_lie());
            r.detail("center_basis", basis_strings(l, center));
            r.detail("derived_basis", basis_strings(l, derived));
            r.summary = format!("dim {}, center dim {}, derived algebra dim {}", l.dim(), center.dim(), derived.dim());
            Ok(r)
        }
        Document::Algebra(AlgebraDocument::Associative(a)) => {
            require_associative(a)?;
            let mut r = Report::new("");
            let comm = a.commutator_subspace();
            r.dim("dim", a.dim());
            r.dim("commutators", comm.dim());
            r.detail("commutative", a.is_commutative());
            r.detail("alpha_identity_holds", a.alpha_identity_holds());
            if let Some((x, y)) = a.alpha_identity_witness() {
                r.note(format!("alpha-identity condition fails at ({x}, {y})"));
            }
            r.summary = format!("dim {}, commutator space dim {}", a.dim(), comm.dim());
            Ok(r)
        }
        Document::Action(_) => Err(CliError::Usage("info expects an algebra document".into())),
    }
}

fn lieize(l: &HomLeibnizAlgebra) -> Result<Report, CliError> {
    require_leibniz(l)?;
    let (lie, hom) = l.lieization()?;
    let mut r = Report::new(format!("Lie-ization has dim {}", lie.dim()));
    r.dim("dim", l.dim());
    r.dim("lieization", lie.dim());
    r.dim("kernel", hom.kernel().dim());
    r.check("quotient satisfies the axioms", lie.validate().is_valid());
    r.check("quotient is hom-lie", lie.is_hom_lie());
    r.check("projection is a surjective homomorphism", hom.map().is_surjective());
    r.detail("algebra", document_value(&leibniz_to_document(&lie)));
    Ok(r)
}

fn twist(doc: &Document, endo: &str) -> Result<Report, CliError> {
    let Document::Algebra(alg) = doc else {
        return Err(CliError::Usage("twist expects an algebra document".into()));
    };
    let (field, dim) = match alg {
        AlgebraDocument::Leibniz(l) => (l.field(), l.dim()),
        AlgebraDocument::Associative(a) => (a.field(), a.dim()),
    };
    let map = parse_matrix(endo, field, dim, "--endo")?;
    let mut r = Report::new("");
    r.dim("dim", dim);
    match alg {
        AlgebraDocument::Leibniz(l) => {
            require_leibniz(l)?;
            let t = l.yau_twist(&map)?;
            let v = t.validate();
            record_validation(&mut r, &v);
            r.detail("algebra", document_value(&leibniz_to_document(&t)));
            r.summary = format!("twisted algebra is {}", if v.is_valid() { "a valid hom-leibniz algebra" } else { "invalid" });
        }
        AlgebraDocument::Associative(a) => {
            require_associative(a)?;
            let t = a.yau_twist(&map)?;
            let v = t.validate();
            record_validation(&mut r, &v);
            r.detail("algebra", document_value(&associative_to_document(&t)));
            r.summary = format!("twisted algebra is {}", if v.is_valid() { "a valid hom-associative algebra" } else { "invalid" });
        }
    }
    Ok(r)
}

fn semidirect_cmd(a: &HomAction) -> Result<Report, CliError> {
    let v = a.validate();
    if !v.is_valid() {
        return Err(invalid("InvalidAction", &v));
    }
    let (m, l) = (a.target(), a.actor());
    let s = semidirect(a)?;
    let mut r = Report::new(format!("semidirect product of dim {}", s.algebra.dim()));
    r.dim("total", s.algebra.dim());
    r.dim("target", m.dim());
    r.dim("actor", l.dim());
    r.check("total algebra satisfies the axioms", s.algebra.validate().is_valid());
    r.check("injection has rank dim M", s.injection.rank() == m.dim());
    r.check("projection has rank dim L", s.projection.rank() == l.dim());
    r.check("Ker(projection) = Im(injection)", s.projection.kernel() == s.injection.image());
    r.check("projection after section is the identity", s.projection.compose(&s.section) == homleib::LinearMap::identity(l.field(), l.dim()));
    r.check("injection is a homomorphism", AlgebraHom::check(m, &s.algebra, &s.injection).is_ok());
    r.check("projection is a homomorphism", AlgebraHom::check(&s.algebra, l, &s.projection).is_ok());
    r.check("section is a homomorphism", AlgebraHom::check(l, &s.algebra, &s.section).is_ok());
    r.detail("algebra", document_value(&leibniz_to_document(&s.algebra)));
    Ok(r)
}

/// Dimensions and central-kernel checks shared by both tensor forms.
pub fn tensor_report(t: &TensorProduct, properties: bool) -> Result<Report, CliError> {
    let (p1, p2) = psi_maps(t)?;
    let center = t.algebra().center();
    let mut r = Report::new(format!("tensor product of dim {}", t.dim()));
    r.dim("tensor", t.dim());
    r.dim("ambient", t.ambient_dim());
    r.dim("relations", t.relation_dim());
    r.dim("ker_psi1", p1.kernel().dim());
    r.dim("ker_psi2", p2.kernel().dim());
    r.dim("center", center.dim());
    r.check("tensor algebra satisfies the axioms", t.algebra().validate().is_valid());
    r.check("Ker(psi1) is central", p1.kernel().is_subspace_of(center));
    r.check("Ker(psi2) is central", p2.kernel().is_subspace_of(center));
    if properties {
        let v = psi_properties(t)?;
        record_validation(&mut r, &v);
    }
    Ok(r)
}

fn tensor_adjoint(l: &HomLeibnizAlgebra, properties: bool) -> Result<Report, CliError> {
    require_leibniz(l)?;
    let t = build_tensor(&MutualActions::adjoint(l))?;
    let mut r = tensor_report(&t, properties)?;
    r.detail("algebra", document_value(&leibniz_to_document(t.algebra())));
    Ok(r)
}

/// `dim M / [M, M]`.
fn abelianization_dim(l: &HomLeibnizAlgebra) -> usize {
    l.dim() - l.derived_subspace().dim()
}

fn tensor_trivial(m: &HomLeibnizAlgebra, n: &HomLeibnizAlgebra, properties: bool) -> Result<Report, CliError> {
    require_leibniz(m)?;
    require_leibniz(n)?;
    if m.field() != n.field() {
        return Err(CliError::Usage("the two algebras are over different fields".into()));
    }
    let t = build_tensor(&MutualActions::trivial(m, n)?)?;
    let mut r = tensor_report(&t, properties)?;
    if m.alpha().is_surjective() && n.alpha().is_surjective() {
        let expected = 2 * abelianization_dim(m) * abelianization_dim(n);
        r.dim("expected", expected);
        r.check("dim = 2 dim(M/[M,M]) dim(N/[N,N])", t.dim() == expected);
        r.check("tensor algebra is abelian", t.algebra().is_abelian());
    } else {
        r.note("twists are not both surjective: the abelian decomposition is not asserted");
    }
    r.detail("algebra", document_value(&leibniz_to_document(t.algebra())));
    Ok(r)
}

pub fn homology_report(c: &CoRepresentation, max_n: usize) -> Report {
    let (complex, hs) = homology_range(c, max_n);
    let dims: Vec<String> = hs.iter().map(|h| format!("HL{}={}", h.degree, h.dim)).collect();
    let mut r = Report::new(dims.join(", "));
    r.check("coefficients satisfy the co-representation axioms", c.validate().is_valid());
    for n in 0..=complex.top() {
        r.dim(&format!("C{n}"), chain_dim(c, n));
    }
    for h in &hs {
        r.dim(&format!("HL{}", h.degree), h.dim);
    }
    let defects = complex.square_defects();
    for n in 2..=complex.top() {
        r.check(format!("d{} d{} = 0", n - 1, n), !defects.contains(&n));
    }
    r.check("HL0 = dim M/M^L", hs[0].dim == hl0_closed_form(c));
    if let (Some(h1), Some(closed)) = (hs.get(1), hl1_trivial_closed_form(c)) {
        r.check("HL1 matches the trivial-coefficient closed form", h1.dim == closed);
    }
    r
}

fn homology_cmd(l: &HomLeibnizAlgebra, coeffs: Coeffs, max_n: usize) -> Result<Report, CliError> {
    require_leibniz(l)?;
    let c = match coeffs {
        Coeffs::Trivial => CoRepresentation::ground_field(l),
        Coeffs::Adjoint => CoRepresentation::adjoint(l),
    };
    Ok(homology_report(&c, max_n))
}

fn kind_name(k: ExtensionKind) -> &'static str {
    match k {
        ExtensionKind::Central => "central",
        ExtensionKind::AlphaCentralOnly => "alpha-central only",
        ExtensionKind::Neither => "neither central nor alpha-central",
    }
}

pub(crate) fn uce(l: &HomLeibnizAlgebra) -> Result<Report, CliError> {
    require_leibniz(l)?;
    let u = universal_central_extension(l)?;
    let kind = u.extension.classify();
    let hl2 = trivial_homology_dim(l, 2);
    let mut r = Report::new(format!("universal central extension of dim {}, kernel dim {}", u.tensor.dim(), u.kernel_dim()));
    r.dim("base", l.dim());
    r.dim("total", u.tensor.dim());
    r.dim("kernel", u.kernel_dim());
    r.dim("HL2", hl2);
    r.detail("classification", kind);
    r.check(format!("extension is central (found: {})", kind_name(kind)), kind == ExtensionKind::Central);
    r.check("total algebra is perfect", u.extension.total().predicates().perfect);
    r.check("dim Ker = dim HL2", u.kernel_dim() == hl2);
    Ok(r)
}

pub(crate) fn uce_alpha(l: &HomLeibnizAlgebra) -> Result<Report, CliError> {
    require_leibniz(l)?;
    let u = universal_alpha_central_extension(l)?;
    let kind = u.extension.classify();
    let mut r = Report::new(format!(
        "universal alpha-central extension of dim {}, presentation dim {}",
        u.tensor.dim(),
        u.presented.dim()
    ));
    r.dim("base", l.dim());
    r.dim("alpha_image", u.image.dim());
    r.dim("tensor", u.tensor.dim());
    r.dim("presented", u.presented.dim());
    r.dim("kernel", u.extension.kernel().dim());
    r.detail("classification", kind);
    r.check("presented algebra and tensor square have equal dimension", u.presented.dim() == u.tensor.dim());
    r.check("generator map is an isomorphism", u.is_isomorphism());
    r.check("extension is alpha-central", kind != ExtensionKind::Neither);
    Ok(r)
}

/// `0`, `all`, or comma-separated labels whose generated ideal is taken.
fn parse_ideal(l: &HomLeibnizAlgebra, spec: &str) -> Result<Subspace, CliError> {
    let f = l.field();
    match spec.trim() {
        "0" => Ok(Subspace::zero(f, l.dim())),
        "all" => Ok(Subspace::full(f, l.dim())),
        list => {
            let mut gens = Vec::new();
            for label in list.split(',').map(str::trim) {
                let i = l
                    .labels()
                    .iter()
                    .position(|x| x == label)
                    .ok_or_else(|| CliError::Usage(format!("unknown label {label:?} in --ideal")))?;
                gens.push(l.basis_vector(i));
            }
            Ok(l.generated_ideal(gens))
        }
    }
}

pub(crate) fn six_term_report(l: &HomLeibnizAlgebra, m: &Subspace) -> Result<Report, CliError> {
    let e = homleib::extensions::six_term_check(l, m)?;
    let mut r = Report::new(if e.holds() { "six-term sequence is exact" } else { "six-term sequence fails" });
    r.dim("ideal", m.dim());
    record_exactness(&mut r, &e);
    Ok(r)
}

fn six_term(l: &HomLeibnizAlgebra, spec: &str) -> Result<Report, CliError> {
    require_leibniz(l)?;
    let m = parse_ideal(l, spec)?;
    six_term_report(l, &m)
}

pub(crate) fn hochschild(a: &HomAssociativeAlgebra) -> Result<Report, CliError> {
    require_associative(a)?;
    let h = hochschild_module(a)?;
    let ts = h.tensor_square_check()?;
    let mut r = Report::new(format!("L(A) has dim {}, HH1 dim {}", h.dim(), h.hh1().dim()));
    r.dim("A", a.dim());
    r.dim("L(A)", h.dim());
    r.dim("[A,A]", h.commutators().dim());
    r.dim("HH1", h.hh1().dim());
    r.dim("A*A", ts.tensor_dim);
    r.dim("Ker(A*A -> L(A))", ts.kernel_dim);
    r.check("L(A) satisfies the hom-leibniz axioms", h.algebra().validate().is_valid());
    r.check("phi maps onto [A,A]", h.phi_onto_commutators().is_surjective());
    r.check("[a,b] x alpha(c) - alpha(a) x [b,c] + [c,a] x alpha(b) vanishes in L(A)", h.cyclic_identity_holds());
    r.check("A*A -> L(A) is well defined", ts.descends);
    r.check("A*A -> L(A) is onto", ts.surjective);
    r.check("b3-shaped elements lie in the kernel", ts.ideal_in_kernel);
    r.detail("algebra", document_value(&leibniz_to_document(h.algebra())));
    Ok(r)
}

pub(crate) fn hh1(a: &HomAssociativeAlgebra) -> Result<Report, CliError> {
    require_associative(a)?;
    let fh = first_homologies(a)?;
    let mut r = Report::new(format!("HH1 dim {}, Milnor-type HH1 dim {}", fh.hh1_alpha_dim, fh.hh1_milnor_dim));
    r.dim("L(A)", fh.l_alpha_dim);
    r.dim("[A,A]", fh.commutator_dim);
    r.dim("HH1", fh.hh1_alpha_dim);
    r.dim("HH1^M", fh.hh1_milnor_dim);
    r.detail("alpha_identity_holds", fh.alpha_identity_holds);
    r.detail("commutative", a.is_commutative());
    if a.is_commutative() {
        r.check("HH1 = HH1^M for commutative A", fh.hh1_alpha_dim == fh.hh1_milnor_dim);
    }
    Ok(r)
}

pub(crate) fn sequence(a: &HomAssociativeAlgebra) -> Result<Report, CliError> {
    require_associative(a)?;
    let (e, _) = sequence_check(a)?;
    let mut r = Report::new(if e.holds() { "comparison sequence is exact" } else { "comparison sequence fails" });
    record_exactness(&mut r, &e);
    Ok(r)
}
