//! Python bindings: the `matroid_py` extension module.
//!
//! Element sets cross the boundary as sorted lists of ids, matroids as a
//! `Matroid` class wrapping the core rank oracle. Checks return
//! `(passed, report_text)` pairs with the report in REPORT v1 form.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use matroid_core::connectivity;
use matroid_core::families;
use matroid_core::format;
use matroid_core::iso;
use matroid_core::verifier::{self, CheckKind, LemmaId};
use matroid_core::ElementSet;

fn to_py_err(e: matroid_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn set_of(m: &matroid_core::Matroid, elements: Vec<usize>) -> PyResult<ElementSet> {
    let mut out = ElementSet::EMPTY;
    for e in elements {
        if e >= m.size() {
            return Err(PyValueError::new_err(format!(
                "element {e} out of range for {} elements",
                m.size()
            )));
        }
        out = out.with(e);
    }
    Ok(out)
}

fn lists(sets: Vec<ElementSet>) -> Vec<Vec<usize>> {
    sets.into_iter().map(|s| s.to_vec()).collect()
}

/// (x1, x, x2, rank_x1, rank_x2)
type PyVerticalPartition = (Vec<usize>, usize, Vec<usize>, usize, usize);

/// A matroid on elements 0..size-1.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct Matroid {
    inner: matroid_core::Matroid,
}

#[pymethods]
impl Matroid {
    /// Build from an explicit bases family (validated by basis exchange).
    #[staticmethod]
    fn from_bases(size: usize, bases: Vec<Vec<usize>>) -> PyResult<Matroid> {
        let masks: Vec<ElementSet> = bases.into_iter().map(ElementSet::from_elements).collect();
        matroid_core::Matroid::from_bases(size, &masks)
            .map(|inner| Matroid { inner })
            .map_err(to_py_err)
    }

    /// The uniform matroid U_{r,m}.
    #[staticmethod]
    fn uniform(r: usize, m: usize) -> PyResult<Matroid> {
        if m == 0 || m > 31 || r > m {
            return Err(PyValueError::new_err("need 1 <= m <= 31 and r <= m"));
        }
        Ok(Matroid {
            inner: matroid_core::Matroid::uniform(r, m),
        })
    }

    /// The cycle matroid of a multigraph given as (vertex_count, edge list).
    #[staticmethod]
    fn cycle(vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<Matroid> {
        let g = matroid_core::Multigraph::new(vertices, edges).map_err(to_py_err)?;
        matroid_core::Matroid::cycle_matroid(g)
            .map(|inner| Matroid { inner })
            .map_err(to_py_err)
    }

    /// The bond matroid (dual of the cycle matroid) of a multigraph.
    #[staticmethod]
    fn bond(vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<Matroid> {
        let g = matroid_core::Multigraph::new(vertices, edges).map_err(to_py_err)?;
        matroid_core::Matroid::bond_matroid(g)
            .map(|inner| Matroid { inner })
            .map_err(to_py_err)
    }

    /// Parse a MATROID v1 or GRAPH v1 document.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Matroid> {
        format::parse_any(text)
            .map(|inner| Matroid { inner })
            .map_err(to_py_err)
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn full_rank(&self) -> usize {
        self.inner.full_rank()
    }

    fn rank(&self, elements: Vec<usize>) -> PyResult<usize> {
        Ok(self.inner.rank(set_of(&self.inner, elements)?))
    }

    fn closure(&self, elements: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(self.inner.closure(set_of(&self.inner, elements)?).to_vec())
    }

    fn coclosure(&self, elements: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(self
            .inner
            .coclosure(set_of(&self.inner, elements)?)
            .to_vec())
    }

    fn circuits(&self) -> Vec<Vec<usize>> {
        lists(self.inner.circuits())
    }

    fn cocircuits(&self) -> Vec<Vec<usize>> {
        lists(self.inner.cocircuits())
    }

    fn hyperplanes(&self) -> Vec<Vec<usize>> {
        lists(self.inner.hyperplanes())
    }

    fn dual(&self) -> Matroid {
        Matroid {
            inner: self.inner.dual(),
        }
    }

    /// Delete elements; returns (minor, kept_old_ids).
    fn delete(&self, elements: Vec<usize>) -> PyResult<(Matroid, Vec<usize>)> {
        let (minor, map) = self
            .inner
            .delete(set_of(&self.inner, elements)?)
            .map_err(to_py_err)?;
        let kept = (0..map.len()).map(|new| map.old_id(new)).collect();
        Ok((Matroid { inner: minor }, kept))
    }

    /// Contract elements; returns (minor, kept_old_ids).
    fn contract(&self, elements: Vec<usize>) -> PyResult<(Matroid, Vec<usize>)> {
        let (minor, map) = self
            .inner
            .contract(set_of(&self.inner, elements)?)
            .map_err(to_py_err)?;
        let kept = (0..map.len()).map(|new| map.old_id(new)).collect();
        Ok((Matroid { inner: minor }, kept))
    }

    /// Simplification; returns (matroid, kept_old_ids).
    fn simplify(&self) -> PyResult<(Matroid, Vec<usize>)> {
        let (s, map) = self.inner.simplify().map_err(to_py_err)?;
        let kept = (0..map.len()).map(|new| map.old_id(new)).collect();
        Ok((Matroid { inner: s }, kept))
    }

    /// Cosimplification; returns (matroid, kept_old_ids).
    fn cosimplify(&self) -> PyResult<(Matroid, Vec<usize>)> {
        let (s, map) = self.inner.cosimplify().map_err(to_py_err)?;
        let kept = (0..map.len()).map(|new| map.old_id(new)).collect();
        Ok((Matroid { inner: s }, kept))
    }

    /// λ(A) = r(A) + r(E−A) − r(M).
    fn connectivity(&self, elements: Vec<usize>) -> PyResult<usize> {
        Ok(connectivity::lambda(
            &self.inner,
            set_of(&self.inner, elements)?,
        ))
    }

    /// ⊓(A,B) = r(A) + r(B) − r(A∪B).
    fn local_connectivity(&self, a: Vec<usize>, b: Vec<usize>) -> PyResult<usize> {
        Ok(connectivity::local_connectivity(
            &self.inner,
            set_of(&self.inner, a)?,
            set_of(&self.inner, b)?,
        ))
    }

    fn is_k_connected(&self, k: usize) -> PyResult<bool> {
        if !(2..=3).contains(&k) {
            return Err(PyValueError::new_err("k must be 2 or 3"));
        }
        Ok(connectivity::is_k_connected(&self.inner, k))
    }

    /// k-separating sides (both sides >= 2) as (side, order, exact) triples.
    fn separations(&self, k: usize) -> PyResult<Vec<(Vec<usize>, usize, bool)>> {
        if !(2..=4).contains(&k) {
            return Err(PyValueError::new_err("k must be 2, 3 or 4"));
        }
        Ok(connectivity::enumerate_separations(&self.inner, k)
            .into_iter()
            .map(|r| (r.side.to_vec(), r.order, r.exact))
            .collect())
    }

    /// Vertical 3-partitions as (x1, x, x2, rank_x1, rank_x2) tuples.
    fn vertical_partitions(&self) -> PyResult<Vec<PyVerticalPartition>> {
        let ps = connectivity::vertical_3_partitions(&self.inner).map_err(to_py_err)?;
        Ok(ps
            .into_iter()
            .map(|p| (p.x1.to_vec(), p.x, p.x2.to_vec(), p.rank_x1, p.rank_x2))
            .collect())
    }

    /// Bixby's dichotomy for one element: "delete", "contract" or "both".
    fn bixby(&self, x: usize) -> PyResult<&'static str> {
        if x >= self.inner.size() {
            return Err(PyValueError::new_err("element out of range"));
        }
        match connectivity::bixby_verdict(&self.inner, x).map_err(to_py_err)? {
            connectivity::BixbyVerdict::DeleteOk => Ok("delete"),
            connectivity::BixbyVerdict::ContractOk => Ok("contract"),
            connectivity::BixbyVerdict::Both => Ok("both"),
        }
    }

    /// Maximal segments (or cosegments with dualize=True).
    #[pyo3(signature = (dualize = false))]
    fn segments(&self, dualize: bool) -> Vec<Vec<usize>> {
        lists(connectivity::maximal_segments(&self.inner, dualize))
    }

    fn fans(&self) -> Vec<Vec<usize>> {
        connectivity::fans(&self.inner)
    }

    /// Serialize as MATROID v1.
    fn to_text(&self) -> String {
        format::write_matroid(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Matroid(size={}, rank={})",
            self.inner.size(),
            self.inner.full_rank()
        )
    }
}

/// The edge list of K~3,n (K_{3,n} plus a triangle on the size-3 part).
#[pyfunction]
fn ktilde_edges(n: usize) -> PyResult<(usize, Vec<(usize, usize)>)> {
    let g = families::build_ktilde_graph(n).map_err(to_py_err)?;
    Ok((g.vertex_count(), g.edges().to_vec()))
}

/// The bond matroid M*(K~3,n).
#[pyfunction]
fn family_member(n: usize) -> PyResult<Matroid> {
    families::family_member(n)
        .map(|inner| Matroid { inner })
        .map_err(to_py_err)
}

/// Membership test; returns (n, bijection, hyperplane) or None.
#[pyfunction]
fn is_in_p_star(m: &Matroid) -> Option<(usize, Vec<usize>, Vec<usize>)> {
    families::is_in_p_star(&m.inner).map(|w| (w.n, w.element_bijection, w.hyperplane.to_vec()))
}

/// The dual family description: triangle plus triads forming K4 blocks.
#[pyfunction]
fn p_description_check(m: &Matroid) -> bool {
    families::p_description_check(&m.inner)
}

/// Rank-preserving bijection from a to b, or None.
#[pyfunction]
fn is_isomorphic(a: &Matroid, b: &Matroid) -> Option<Vec<usize>> {
    iso::is_isomorphic(&a.inner, &b.inner)
}

/// Whether some minor of m is isomorphic to target (target at most 10 elements).
#[pyfunction]
fn has_minor(m: &Matroid, target: &Matroid) -> PyResult<bool> {
    iso::has_minor(&m.inner, &target.inner).map_err(to_py_err)
}

/// Catalog entry names, in catalog order.
#[pyfunction]
fn catalog_names() -> Vec<String> {
    matroid_core::catalog::full_catalog()
        .into_iter()
        .map(|e| e.name)
        .collect()
}

/// Fetch one catalog entry by name.
#[pyfunction]
fn catalog_entry(name: &str) -> PyResult<Matroid> {
    matroid_core::catalog::full_catalog()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| Matroid { inner: e.matroid })
        .ok_or_else(|| PyValueError::new_err(format!("no catalog entry named `{name}`")))
}

/// Hyperplanes whose every contraction breaks si 3-connectivity.
#[pyfunction]
fn property_hyperplanes(m: &Matroid) -> PyResult<Vec<Vec<usize>>> {
    verifier::property_hyperplanes(&m.inner)
        .map(lists)
        .map_err(to_py_err)
}

/// Main dichotomy check; returns (passed, report_text).
#[pyfunction]
#[pyo3(signature = (m, subject = "matroid"))]
fn check_main(m: &Matroid, subject: &str) -> PyResult<(bool, String)> {
    let r = verifier::check_main_theorem(&m.inner, subject).map_err(to_py_err)?;
    Ok((r.passed, r.to_text()))
}

/// Vertical-partition witness check; returns (passed, report_text).
#[pyfunction]
#[pyo3(signature = (m, subject = "matroid"))]
fn check_vertical(m: &Matroid, subject: &str) -> PyResult<(bool, String)> {
    let r = verifier::check_vertical_theorem(&m.inner, subject).map_err(to_py_err)?;
    Ok((r.passed, r.to_text()))
}

/// Run one lemma suite (id like "2.3"); returns (passed, report_text).
#[pyfunction]
#[pyo3(signature = (m, which, subject = "matroid", seed = 0))]
fn run_lemma(m: &Matroid, which: &str, subject: &str, seed: u64) -> PyResult<(bool, String)> {
    let id = LemmaId::parse(which).map_err(to_py_err)?;
    let r = verifier::run_lemma_suite(&m.inner, subject, id, seed);
    Ok((r.passed, r.to_text()))
}

/// Every lemma suite at once; returns list of (id, passed) pairs.
#[pyfunction]
#[pyo3(signature = (m, subject = "matroid", seed = 0))]
fn run_all_lemmas(m: &Matroid, subject: &str, seed: u64) -> Vec<(String, bool)> {
    verifier::reports_for(&m.inner, subject, CheckKind::Lemmas(None), seed)
        .into_iter()
        .map(|r| (r.check.to_string(), r.passed))
        .collect()
}

#[pymodule]
fn matroid_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Matroid>()?;
    m.add_function(wrap_pyfunction!(ktilde_edges, m)?)?;
    m.add_function(wrap_pyfunction!(family_member, m)?)?;
    m.add_function(wrap_pyfunction!(is_in_p_star, m)?)?;
    m.add_function(wrap_pyfunction!(p_description_check, m)?)?;
    m.add_function(wrap_pyfunction!(is_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(has_minor, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_entry, m)?)?;
    m.add_function(wrap_pyfunction!(property_hyperplanes, m)?)?;
    m.add_function(wrap_pyfunction!(check_main, m)?)?;
    m.add_function(wrap_pyfunction!(check_vertical, m)?)?;
    m.add_function(wrap_pyfunction!(run_lemma, m)?)?;
    m.add_function(wrap_pyfunction!(run_all_lemmas, m)?)?;
    Ok(())
}
