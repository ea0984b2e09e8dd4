use rayon::prelude::*;
use serde_json::{json, Value};

use swdual::diagrams::{
    enumerate_composition_with, enumerate_is_with, enumerate_istar_with, enumerate_pistar_with,
};
use swdual::dualities::{default_grid, run_grid, square_grid, DualityReport, GridCell, Theorem};
use swdual::exact_linalg::commutant_basis_with;
use swdual::morphisms::{verify_prop3_with, verify_prop4_with, MorphismReport};
use swdual::notation::{parse_element, parse_injection};
use swdual::semigroups::{
    bullet_multiply, compose_partial_injection, is_generators, multiply_composition,
    multiply_istar, multiply_pistar, star_multiply,
};
use swdual::tensor_actions::{
    action_matrix_u, action_matrix_v, rook_action_matrix, ActionSpace, SpaceKind, Variant,
};
use swdual::{Element, ExactMatrix, Family, HatElement, Limits, PartialInjection};

use crate::render::{matrix_json, morphism_line, report_line};
use crate::{
    ActArgs, Cli, Command, CommutantArgs, EnumerateArgs, MultiplyArgs, SemigroupArg, SideArg,
    SpaceArg, VariantArg, VerifyArgs,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] swdual::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

pub struct Output {
    pub text: String,
    pub json: Value,
}

pub struct Outcome {
    pub output: Output,
    /// `false` only when `verify` finds a mismatch.
    pub ok: bool,
}

impl Outcome {
    fn done(text: String, json: Value) -> Self {
        Self {
            output: Output { text, json },
            ok: true,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let limits = if cli.unsafe_no_guards {
        Limits::unbounded()
    } else {
        Limits::default()
    };
    match &cli.command {
        Command::Enumerate(a) => enumerate(a, &limits),
        Command::Multiply(a) => multiply(a),
        Command::Act(a) => act(a, &limits),
        Command::Commutant(a) => commutant(a, &limits),
        Command::Verify(a) => verify(a, &limits),
    }
}

fn family(s: SemigroupArg) -> Family {
    match s {
        SemigroupArg::Is => Family::Is,
        SemigroupArg::Istar => Family::Istar,
        SemigroupArg::Pistar => Family::Pistar,
        SemigroupArg::Hat => Family::Hat,
        SemigroupArg::Tilde => Family::Tilde,
        SemigroupArg::Composition => Family::Composition,
    }
}

fn space_kind(s: SpaceArg) -> SpaceKind {
    match s {
        SpaceArg::V => SpaceKind::V,
        SpaceArg::U => SpaceKind::U,
    }
}

/// `--n` for `IS_n`, `--k` for everything else.
fn size_for(family: Family, n: Option<usize>, k: Option<usize>) -> Result<usize, CliError> {
    let (value, flag) = match family {
        Family::Is => (n, "--n"),
        _ => (k, "--k"),
    };
    value.ok_or_else(|| CliError::Usage(format!("`{family}` needs {flag}")))
}

fn enumerate(a: &EnumerateArgs, limits: &Limits) -> Result<Outcome, CliError> {
    let family = family(a.semigroup);
    let size = size_for(family, a.n, a.k)?;
    let elements: Vec<String> = match family {
        Family::Is => enumerate_is_with(size, limits)?
            .iter()
            .map(ToString::to_string)
            .collect(),
        Family::Istar => enumerate_istar_with(size, limits)?
            .iter()
            .map(ToString::to_string)
            .collect(),
        Family::Pistar | Family::Tilde => enumerate_pistar_with(size, limits)?
            .iter()
            .map(ToString::to_string)
            .collect(),
        Family::Hat => std::iter::once(HatElement::Zero.to_string())
            .chain(
                enumerate_pistar_with(size, limits)?
                    .iter()
                    .map(ToString::to_string),
            )
            .collect(),
        Family::Composition => enumerate_composition_with(size, limits)?
            .iter()
            .map(ToString::to_string)
            .collect(),
    };
    let text = elements.iter().map(|e| format!("{e}\n")).collect();
    let json = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "enumerate",
        "semigroup": family.name(),
        "size": size,
        "count": elements.len(),
        "elements": elements,
    });
    Ok(Outcome::done(text, json))
}

fn multiply(a: &MultiplyArgs) -> Result<Outcome, CliError> {
    let family = family(a.semigroup);
    let size = size_for(family, a.n, a.k)?;
    let lhs = parse_element(&a.lhs, family, size)?;
    let rhs = parse_element(&a.rhs, family, size)?;
    let mut garbage = None;
    let product = match (&lhs, &rhs) {
        (Element::Injection(x), Element::Injection(y)) => {
            compose_partial_injection(x, y)?.to_string()
        }
        (Element::Hat(x), Element::Hat(y)) => star_multiply(x, y)?.to_string(),
        (Element::Partition(x), Element::Partition(y)) => match family {
            Family::Istar => multiply_istar(x, y)?.to_string(),
            Family::Pistar => multiply_pistar(x, y)?.to_string(),
            Family::Tilde => bullet_multiply(x, y)?.to_string(),
            Family::Composition => {
                let r = multiply_composition(x, y)?;
                garbage = Some(r.garbage_count);
                r.diagram.to_string()
            }
            _ => unreachable!("partition families only"),
        },
        _ => unreachable!("both operands parse in the same family"),
    };
    let text = match garbage {
        Some(m) => format!("{product} garbage={m}\n"),
        None => format!("{product}\n"),
    };
    let mut json = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "multiply",
        "semigroup": family.name(),
        "size": size,
        "lhs": lhs.to_string(),
        "rhs": rhs.to_string(),
        "product": product,
    });
    if let Some(m) = garbage {
        json["garbage_count"] = json!(m);
    }
    Ok(Outcome::done(text, json))
}

fn act(a: &ActArgs, limits: &Limits) -> Result<Outcome, CliError> {
    let kind = space_kind(a.space);
    let space = ActionSpace::new_with(kind, a.n, a.k, limits)?;
    let semigroup = match a.semigroup {
        Some(s) => s,
        None if a.element.trim_start().starts_with('[') => SemigroupArg::Is,
        None => match (kind, a.variant) {
            (SpaceKind::V, _) => SemigroupArg::Composition,
            (SpaceKind::U, Some(VariantArg::Hat)) => SemigroupArg::Hat,
            (SpaceKind::U, Some(VariantArg::Tilde)) => SemigroupArg::Tilde,
            (SpaceKind::U, _) => SemigroupArg::Pistar,
        },
    };
    let variant = match (semigroup, a.variant) {
        (SemigroupArg::Hat, None | Some(VariantArg::Hat)) => Some(Variant::Hat),
        (SemigroupArg::Tilde, None | Some(VariantArg::Tilde)) => Some(Variant::Tilde),
        (SemigroupArg::Pistar, v) => Some(match v {
            None | Some(VariantArg::Plain) => Variant::Plain,
            Some(VariantArg::Hat) => Variant::Hat,
            Some(VariantArg::Tilde) => Variant::Tilde,
        }),
        (SemigroupArg::Hat | SemigroupArg::Tilde, Some(_)) => {
            return Err(CliError::Usage(format!(
                "--variant conflicts with --semigroup {}",
                family(semigroup)
            )))
        }
        (_, None | Some(VariantArg::Plain)) => None,
        (_, Some(_)) => {
            return Err(CliError::Usage(
                "--variant hat/tilde applies only to PI*_k elements on U".into(),
            ))
        }
    };
    let allowed = match kind {
        SpaceKind::V => matches!(
            semigroup,
            SemigroupArg::Is | SemigroupArg::Istar | SemigroupArg::Composition
        ),
        SpaceKind::U => !matches!(semigroup, SemigroupArg::Istar | SemigroupArg::Composition),
    };
    if !allowed {
        return Err(CliError::Usage(format!(
            "--space {kind} forbids --semigroup {}",
            family(semigroup)
        )));
    }

    let fam = family(semigroup);
    let (element, matrix) = match fam {
        Family::Is => {
            let x = parse_injection(&a.element, a.n)?;
            let m = rook_action_matrix(&x, &space)?;
            (x.to_string(), m)
        }
        Family::Hat => {
            let Element::Hat(h) = parse_element(&a.element, fam, a.k)? else {
                unreachable!()
            };
            let m = match &h {
                HatElement::Zero => ExactMatrix::zeros(space.dimension(), space.dimension()),
                HatElement::Diagram(p) => action_matrix_u(p, &space, Variant::Hat)?,
            };
            (h.to_string(), m)
        }
        _ => {
            let Element::Partition(p) = parse_element(&a.element, fam, a.k)? else {
                unreachable!()
            };
            let m = match (kind, variant) {
                (SpaceKind::V, _) => action_matrix_v(&p, &space)?,
                (SpaceKind::U, Some(v)) => action_matrix_u(&p, &space, v)?,
                (SpaceKind::U, None) => unreachable!("U partitions carry a variant"),
            };
            (p.to_string(), m)
        }
    };
    let variant_name = variant.map(|v| match v {
        Variant::Plain => "plain",
        Variant::Hat => "hat",
        Variant::Tilde => "tilde",
    });
    let json = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "act",
        "space": kind,
        "n": a.n,
        "k": a.k,
        "semigroup": fam.name(),
        "variant": variant_name,
        "element": element,
        "matrix": matrix_json(&matrix),
    });
    Ok(Outcome::done(matrix.to_string(), json))
}

fn commutant(a: &CommutantArgs, limits: &Limits) -> Result<Outcome, CliError> {
    let kind = space_kind(a.space);
    let space = ActionSpace::new_with(kind, a.n, a.k, limits)?;
    let generators: Vec<ExactMatrix> = match (a.side, kind) {
        (SideArg::LeftIs, _) => {
            let mut gens = vec![rook_action_matrix(
                &PartialInjection::identity(a.n),
                &space,
            )?];
            for g in is_generators(a.n)? {
                gens.push(rook_action_matrix(&g, &space)?);
            }
            gens
        }
        (SideArg::RightIstar, SpaceKind::V) => enumerate_istar_with(a.k, limits)?
            .iter()
            .map(|p| action_matrix_v(p, &space))
            .collect::<Result<_, _>>()?,
        (SideArg::RightPistar, SpaceKind::U) => enumerate_pistar_with(a.k, limits)?
            .iter()
            .map(|p| action_matrix_u(p, &space, Variant::Plain))
            .collect::<Result<_, _>>()?,
        (SideArg::RightIstar, SpaceKind::U) => {
            return Err(CliError::Usage("--side right-istar needs --space V".into()))
        }
        (SideArg::RightPistar, SpaceKind::V) => {
            return Err(CliError::Usage(
                "--side right-pistar needs --space U".into(),
            ))
        }
    };
    let basis = commutant_basis_with(&generators, space.dimension(), limits)?;
    let side = match a.side {
        SideArg::LeftIs => "left-is",
        SideArg::RightIstar => "right-istar",
        SideArg::RightPistar => "right-pistar",
    };
    let mut text = format!("dimension {}\n", basis.len());
    let mut json = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "commutant",
        "space": kind,
        "n": a.n,
        "k": a.k,
        "side": side,
        "dimension": basis.len(),
    });
    if a.basis {
        for (i, m) in basis.iter().enumerate() {
            text.push_str(&format!("# basis {i}\n{m}"));
        }
        json["basis"] = Value::Array(basis.iter().map(matrix_json).collect());
    }
    Ok(Outcome::done(text, json))
}

const PROPS_CELLS: [(usize, usize); 5] = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)];

fn verify(a: &VerifyArgs, limits: &Limits) -> Result<Outcome, CliError> {
    if !(a.thm1 || a.thm2 || a.props || a.all) {
        return Err(CliError::Usage(
            "choose at least one of --thm1, --thm2, --props, --all".into(),
        ));
    }
    let grid = |theorem: Theorem| -> Vec<GridCell> {
        match (a.n, a.k, a.max_n, a.max_k) {
            (Some(n), Some(k), _, _) => square_grid(theorem, n, k)
                .into_iter()
                .filter(|c| c.n == n && c.k == k)
                .collect(),
            (_, _, None, None) => default_grid(theorem),
            (_, _, max_n, max_k) => {
                square_grid(theorem, max_n.or(max_k).unwrap(), max_k.or(max_n).unwrap())
            }
        }
    };
    let mut cells = Vec::new();
    if a.thm1 || a.all {
        cells.extend(grid(Theorem::V));
    }
    if a.thm2 || a.all {
        cells.extend(grid(Theorem::U));
    }
    let reports: Vec<DualityReport> = cells
        .par_iter()
        .map(|c| run_grid(std::slice::from_ref(c), limits).map(|mut r| r.remove(0)))
        .collect::<Result<_, _>>()?;

    let mut prop_cells: Vec<(usize, usize)> = Vec::new();
    if a.props || a.all {
        prop_cells = match (a.n, a.k, a.max_n, a.max_k) {
            (Some(n), Some(k), _, _) => vec![(n, k)],
            (_, _, None, None) => PROPS_CELLS.to_vec(),
            (_, _, max_n, max_k) => {
                let (mn, mk) = (max_n.or(max_k).unwrap(), max_k.or(max_n).unwrap());
                (1..=mn)
                    .flat_map(|n| (1..=mk).map(move |k| (n, k)))
                    .collect()
            }
        };
    }
    let morphisms: Vec<MorphismReport> = prop_cells
        .par_iter()
        .map(|&(n, k)| -> Result<Vec<MorphismReport>, swdual::Error> {
            Ok(vec![
                verify_prop3_with(n, k, limits)?,
                verify_prop4_with(n, k, limits)?,
            ])
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();

    let all_match =
        reports.iter().all(|r| r.matches) && morphisms.iter().all(MorphismReport::holds);
    let mut text = String::new();
    for r in &reports {
        text.push_str(&report_line(r));
        text.push('\n');
    }
    for m in &morphisms {
        text.push_str(&morphism_line(m));
        text.push('\n');
    }
    text.push_str(if all_match {
        "all checks match\n"
    } else {
        "MISMATCH\n"
    });
    let json = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "reports": reports,
        "morphisms": morphisms,
        "all_match": all_match,
    });
    Ok(Outcome {
        output: Output { text, json },
        ok: all_match,
    })
}
