//! Python bindings: diagram elements, products, actions, commutants and the
//! verification reports. Elements cross the boundary in their text notation.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use swdual::diagrams::{
    enumerate_composition_with, enumerate_is_with, enumerate_istar_with, enumerate_pistar_with,
    is_dual_element, is_partial_dual_element,
};
use swdual::dualities::run_full_report_with;
use swdual::exact_linalg::{commutant_basis_with, ExactMatrix};
use swdual::morphisms::{
    phi, phi_inverse_with, psi, psi_inverse, verify_prop3_with, verify_prop4_with,
};
use swdual::notation::{parse_element, parse_injection, parse_partition};
use swdual::semigroups::{
    bullet_multiply, compose_partial_injection, is_generators, multiply_composition,
    multiply_istar, multiply_pistar, star_multiply,
};
use swdual::tensor_actions::{
    action_matrix_u, action_matrix_v, hat_action_matrix, rook_action_matrix, ActionSpace,
    SpaceKind, Variant,
};
use swdual::{Element, Family, Limits};

fn err(e: swdual::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn limits(unsafe_no_guards: bool) -> Limits {
    if unsafe_no_guards {
        Limits::unbounded()
    } else {
        Limits::default()
    }
}

fn family(name: &str) -> PyResult<Family> {
    name.parse().map_err(PyValueError::new_err)
}

fn space_kind(name: &str) -> PyResult<SpaceKind> {
    match name {
        "V" | "v" => Ok(SpaceKind::V),
        "U" | "u" => Ok(SpaceKind::U),
        other => Err(PyValueError::new_err(format!("unknown space `{other}`"))),
    }
}

fn variant(name: &str) -> PyResult<Variant> {
    match name {
        "plain" => Ok(Variant::Plain),
        "hat" => Ok(Variant::Hat),
        "tilde" => Ok(Variant::Tilde),
        other => Err(PyValueError::new_err(format!("unknown variant `{other}`"))),
    }
}

type Triplets = Vec<(usize, usize, String)>;

fn triplets(m: &ExactMatrix) -> Triplets {
    m.entries().map(|(r, c, v)| (r, c, v.to_string())).collect()
}

/// A partial injection of `{1..n}`.
#[pyclass(name = "PartialInjection", eq, hash, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartialInjection(swdual::PartialInjection);

#[pymethods]
impl PyPartialInjection {
    /// `images[d-1]` is the image of `d`, `None` where undefined.
    #[new]
    fn new(images: Vec<Option<usize>>) -> PyResult<Self> {
        swdual::PartialInjection::new(images).map(Self).map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str, n: usize) -> PyResult<Self> {
        parse_injection(text, n).map(Self).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn apply(&self, d: usize) -> Option<usize> {
        self.0.apply(d)
    }

    /// `self ∘ other`: `other` is applied first.
    fn compose(&self, other: &Self) -> PyResult<Self> {
        compose_partial_injection(&self.0, &other.0)
            .map(Self)
            .map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.compose(other)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PartialInjection('{}')", self.0)
    }
}

/// A partition of some of the boundary points `{1..k, 1'..k'}`.
#[pyclass(name = "SetPartition", eq, hash, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySetPartition(swdual::SetPartition);

#[pymethods]
impl PySetPartition {
    #[staticmethod]
    fn parse(text: &str, k: usize) -> PyResult<Self> {
        parse_partition(text, k).map(Self).map_err(err)
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    /// Blocks as lists of point labels such as `"2'"`.
    #[getter]
    fn blocks(&self) -> Vec<Vec<String>> {
        self.0
            .blocks()
            .iter()
            .map(|b| b.iter().map(ToString::to_string).collect())
            .collect()
    }

    fn in_istar(&self) -> bool {
        is_dual_element(&self.0)
    }

    fn in_pistar(&self) -> bool {
        is_partial_dual_element(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SetPartition('{}')", self.0)
    }
}

/// Every element of a semigroup, in text notation.
#[pyfunction]
#[pyo3(signature = (semigroup, size, unsafe_no_guards = false))]
pub fn enumerate(semigroup: &str, size: usize, unsafe_no_guards: bool) -> PyResult<Vec<String>> {
    let l = limits(unsafe_no_guards);
    let strings = |v: Vec<swdual::SetPartition>| v.iter().map(ToString::to_string).collect();
    Ok(match family(semigroup)? {
        Family::Is => enumerate_is_with(size, &l)
            .map_err(err)?
            .iter()
            .map(ToString::to_string)
            .collect(),
        Family::Istar => strings(enumerate_istar_with(size, &l).map_err(err)?),
        Family::Pistar | Family::Tilde => strings(enumerate_pistar_with(size, &l).map_err(err)?),
        Family::Hat => {
            let mut out = vec!["0".to_string()];
            out.extend(strings(enumerate_pistar_with(size, &l).map_err(err)?));
            out
        }
        Family::Composition => strings(enumerate_composition_with(size, &l).map_err(err)?),
    })
}

/// Product of two elements given in text notation. For the composition
/// semigroup the number of deleted middle components is returned as well.
#[pyfunction]
pub fn multiply(
    semigroup: &str,
    size: usize,
    lhs: &str,
    rhs: &str,
) -> PyResult<(String, Option<usize>)> {
    let fam = family(semigroup)?;
    let a = parse_element(lhs, fam, size).map_err(err)?;
    let b = parse_element(rhs, fam, size).map_err(err)?;
    let r = match (a, b) {
        (Element::Injection(x), Element::Injection(y)) => (
            compose_partial_injection(&x, &y).map_err(err)?.to_string(),
            None,
        ),
        (Element::Hat(x), Element::Hat(y)) => {
            (star_multiply(&x, &y).map_err(err)?.to_string(), None)
        }
        (Element::Partition(x), Element::Partition(y)) => match fam {
            Family::Istar => (multiply_istar(&x, &y).map_err(err)?.to_string(), None),
            Family::Pistar => (multiply_pistar(&x, &y).map_err(err)?.to_string(), None),
            Family::Tilde => (bullet_multiply(&x, &y).map_err(err)?.to_string(), None),
            _ => {
                let c = multiply_composition(&x, &y).map_err(err)?;
                (c.diagram.to_string(), Some(c.garbage_count))
            }
        },
        _ => unreachable!("operands share a family"),
    };
    Ok(r)
}

/// Matrix of an element on `V^{⊗k}` or `U^{⊗k}` as `(row, col, value)`
/// triplets. Partial injections (`[...]`) act diagonally; partitions act by
/// the composition rule on `V` and by `variant` on `U`.
#[pyfunction]
#[pyo3(signature = (space, n, k, element, variant = "plain", unsafe_no_guards = false))]
pub fn action_matrix(
    space: &str,
    n: usize,
    k: usize,
    element: &str,
    variant: &str,
    unsafe_no_guards: bool,
) -> PyResult<Triplets> {
    let kind = space_kind(space)?;
    let s = ActionSpace::new_with(kind, n, k, &limits(unsafe_no_guards)).map_err(err)?;
    let m = if element.trim_start().starts_with('[') {
        rook_action_matrix(&parse_injection(element, n).map_err(err)?, &s)
    } else {
        match (kind, self::variant(variant)?) {
            (SpaceKind::V, Variant::Plain) => {
                action_matrix_v(&parse_partition(element, k).map_err(err)?.completed(), &s)
            }
            (SpaceKind::V, _) => {
                return Err(PyValueError::new_err("hat/tilde act on U only"));
            }
            (SpaceKind::U, Variant::Hat) => {
                let Element::Hat(h) = parse_element(element, Family::Hat, k).map_err(err)? else {
                    unreachable!()
                };
                hat_action_matrix(&h, &s)
            }
            (SpaceKind::U, v) => action_matrix_u(&parse_partition(element, k).map_err(err)?, &s, v),
        }
    }
    .map_err(err)?;
    Ok(triplets(&m))
}

/// Dimension of the commutant of `IS_n` (`side="left"`) or of the right
/// semigroup (`side="right"`).
#[pyfunction]
#[pyo3(signature = (space, n, k, side = "left", unsafe_no_guards = false))]
pub fn commutant_dimension(
    space: &str,
    n: usize,
    k: usize,
    side: &str,
    unsafe_no_guards: bool,
) -> PyResult<usize> {
    let l = limits(unsafe_no_guards);
    let kind = space_kind(space)?;
    let s = ActionSpace::new_with(kind, n, k, &l).map_err(err)?;
    let generators: Vec<ExactMatrix> = match (side, kind) {
        ("left", _) => {
            let mut g =
                vec![rook_action_matrix(&swdual::PartialInjection::identity(n), &s).map_err(err)?];
            for x in is_generators(n).map_err(err)? {
                g.push(rook_action_matrix(&x, &s).map_err(err)?);
            }
            g
        }
        ("right", SpaceKind::V) => enumerate_istar_with(k, &l)
            .map_err(err)?
            .iter()
            .map(|a| action_matrix_v(a, &s))
            .collect::<Result<_, _>>()
            .map_err(err)?,
        ("right", SpaceKind::U) => enumerate_pistar_with(k, &l)
            .map_err(err)?
            .iter()
            .map(|a| action_matrix_u(a, &s, Variant::Plain))
            .collect::<Result<_, _>>()
            .map_err(err)?,
        (other, _) => return Err(PyValueError::new_err(format!("unknown side `{other}`"))),
    };
    Ok(commutant_basis_with(&generators, s.dimension(), &l)
        .map_err(err)?
        .len())
}

type Terms = Vec<(String, String)>;

fn terms(x: &swdual::algebra::AlgebraElement) -> Terms {
    x.terms()
        .map(|(p, c)| (p.to_string(), c.to_string()))
        .collect()
}

/// `φ`, `φ⁻¹`, `ψ` or `ψ⁻¹` of a `PI*_k` element, as `(element, coefficient)` pairs.
#[pyfunction]
pub fn change_basis(map: &str, element: &str, k: usize) -> PyResult<Terms> {
    let alpha = parse_partition(element, k).map_err(err)?;
    if !is_partial_dual_element(&alpha) {
        return Err(PyValueError::new_err(format!("{alpha} is not in PI*_k")));
    }
    Ok(match map {
        "phi" => terms(&phi(&alpha)),
        "phi_inverse" => terms(&phi_inverse_with(&alpha, &Limits::default()).map_err(err)?),
        "psi" => terms(&psi(&alpha)),
        "psi_inverse" => terms(&psi_inverse(&alpha)),
        other => return Err(PyValueError::new_err(format!("unknown map `{other}`"))),
    })
}

/// Duality reports for both spaces at `(n, k)`, as a JSON string.
#[pyfunction]
#[pyo3(signature = (n, k, unsafe_no_guards = false))]
pub fn duality_report(n: usize, k: usize, unsafe_no_guards: bool) -> PyResult<String> {
    let reports = run_full_report_with(n, k, &limits(unsafe_no_guards)).map_err(err)?;
    Ok(serde_json::to_string(&reports).expect("reports serialize"))
}

/// Morphism reports (`φ` then `ψ`) at `(n, k)`, as a JSON string.
#[pyfunction]
#[pyo3(signature = (n, k, unsafe_no_guards = false))]
pub fn morphism_report(n: usize, k: usize, unsafe_no_guards: bool) -> PyResult<String> {
    let l = limits(unsafe_no_guards);
    let reports = vec![
        verify_prop3_with(n, k, &l).map_err(err)?,
        verify_prop4_with(n, k, &l).map_err(err)?,
    ];
    Ok(serde_json::to_string(&reports).expect("reports serialize"))
}

#[pymodule]
#[pyo3(name = "swdual")]
fn swdual_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartialInjection>()?;
    m.add_class::<PySetPartition>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(multiply, m)?)?;
    m.add_function(wrap_pyfunction!(action_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(commutant_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(change_basis, m)?)?;
    m.add_function(wrap_pyfunction!(duality_report, m)?)?;
    m.add_function(wrap_pyfunction!(morphism_report, m)?)?;
    Ok(())
}
