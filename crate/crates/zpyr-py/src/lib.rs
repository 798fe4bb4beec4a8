//! Python bindings for zpyr-core.
//!
//! Exact values cross the boundary as canonical text (`"1/4"`, `"1/2 i"`,
//! `"1/4-3/4 i"`) or as Python ints where the values are integers; nothing
//! is ever rounded.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use zpyr_core::eulerian;
use zpyr_core::exact::{GaussRat, ZPoly};
use zpyr_core::families::{
    classical_pyramid, family_poly, ordering_row, OrderingFamily, PolyFamily,
};
use zpyr_core::ortho;
use zpyr_core::transforms;
use zpyr_core::weyl;
use zpyr_core::PyramidRow;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_entries(entries: Vec<String>) -> PyResult<Vec<GaussRat>> {
    entries
        .iter()
        .map(|s| s.parse::<GaussRat>().map_err(value_error))
        .collect()
}

fn poly_from_strings(coeffs: Vec<String>) -> PyResult<ZPoly> {
    ZPoly::from_coeff_strings(&coeffs).map_err(value_error)
}

/// Reduce a balanced operator expression to its polynomial in z
/// (ascending coefficient strings).
#[pyfunction]
fn reduce(expr: &str) -> PyResult<Vec<String>> {
    let e = weyl::parse_expr(expr).map_err(value_error)?;
    let p = weyl::reduce_balanced(&e).map_err(value_error)?;
    Ok(p.coeff_strings())
}

/// Reduce and pretty-print, e.g. "z^2 + 1/4".
#[pyfunction]
fn reduce_str(expr: &str) -> PyResult<String> {
    let e = weyl::parse_expr(expr).map_err(value_error)?;
    let p = weyl::reduce_balanced(&e).map_err(value_error)?;
    Ok(p.to_string())
}

/// Normal order an expression; returns {(j, k): coeff} for monomials
/// q^j p^k.
#[pyfunction]
fn normal_order(expr: &str) -> PyResult<BTreeMap<(usize, usize), String>> {
    let e = weyl::parse_expr(expr).map_err(value_error)?;
    Ok(weyl::normal_order(&e)
        .terms()
        .map(|(&jk, c)| (jk, c.to_string()))
        .collect())
}

/// Is the expression Hermitian in the quotient algebra?
#[pyfunction]
fn is_hermitian(expr: &str) -> PyResult<bool> {
    let e = weyl::parse_expr(expr).map_err(value_error)?;
    Ok(weyl::is_hermitian(&e))
}

/// Pyramid row -> polynomial coefficients (both as text entries).
#[pyfunction]
fn pyramid_to_poly(entries: Vec<String>) -> PyResult<Vec<String>> {
    let parsed = parse_entries(entries)?;
    let n = parsed.len().saturating_sub(1);
    let row = PyramidRow::new(n, parsed).map_err(value_error)?;
    Ok(transforms::pyramid_to_poly(&row).coeff_strings())
}

/// Polynomial coefficients -> pyramid row at index n.
#[pyfunction]
fn poly_to_pyramid(coeffs: Vec<String>, n: usize) -> PyResult<Vec<String>> {
    let p = poly_from_strings(coeffs)?;
    let row = transforms::poly_to_pyramid(&p, n).map_err(value_error)?;
    Ok(row.entry_strings())
}

/// Row of a named family (ordering or classical).
#[pyfunction]
fn family_row(name: &str, n: usize) -> PyResult<Vec<String>> {
    if let Ok(f) = OrderingFamily::parse(name) {
        return Ok(ordering_row(&f, n).map_err(value_error)?.entry_strings());
    }
    let f = PolyFamily::parse(name).map_err(value_error)?;
    Ok(classical_pyramid(f, n).entry_strings())
}

/// Polynomial of a named family (ordering or classical).
#[pyfunction]
fn family_polynomial(name: &str, n: usize) -> PyResult<Vec<String>> {
    if let Ok(f) = OrderingFamily::parse(name) {
        let row = ordering_row(&f, n).map_err(value_error)?;
        return Ok(transforms::pyramid_to_poly(&row).coeff_strings());
    }
    let f = PolyFamily::parse(name).map_err(value_error)?;
    Ok(family_poly(f, n).coeff_strings())
}

/// Type-B Eulerian row B_{n,0..n} as Python ints.
#[pyfunction]
fn b_row(n: usize) -> PyResult<Vec<BigInt>> {
    Ok(eulerian::b_row(n).map_err(value_error)?.entries)
}

/// Euler numbers E_0..E_n as Python ints.
#[pyfunction]
fn euler_numbers(n: usize) -> Vec<BigInt> {
    zpyr_core::comb::euler_numbers(n)
}

/// First orthogonality condition of a named ordering family.
#[pyfunction]
fn condition1(name: &str) -> PyResult<String> {
    let f = OrderingFamily::parse(name).map_err(value_error)?;
    let poly = |n: usize| -> PyResult<ZPoly> {
        Ok(transforms::pyramid_to_poly(
            &ordering_row(&f, n).map_err(value_error)?,
        ))
    };
    let v = ortho::condition1(&poly(2)?, &poly(3)?, &poly(4)?).map_err(value_error)?;
    Ok(v.to_string())
}

/// Exponents r <= max_r whose normalized C(n,k)^r family passes the
/// screening conditions at the given depth.
#[pyfunction]
#[pyo3(signature = (max_r, depth = 6))]
fn binom_power_scan(max_r: u32, depth: usize) -> Vec<u32> {
    ortho::binom_power_scan(max_r, depth).passing()
}

/// Hermitian non-palindromic words up to the given length (run-length
/// text form).
#[pyfunction]
fn hermitian_non_palindromes(max_len: usize) -> Vec<String> {
    weyl::hermitian_palindrome_scan(max_len)
        .iter()
        .map(|w| w.to_string())
        .collect()
}

#[pymodule]
fn zpyr(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_str, m)?)?;
    m.add_function(wrap_pyfunction!(normal_order, m)?)?;
    m.add_function(wrap_pyfunction!(is_hermitian, m)?)?;
    m.add_function(wrap_pyfunction!(pyramid_to_poly, m)?)?;
    m.add_function(wrap_pyfunction!(poly_to_pyramid, m)?)?;
    m.add_function(wrap_pyfunction!(family_row, m)?)?;
    m.add_function(wrap_pyfunction!(family_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(b_row, m)?)?;
    m.add_function(wrap_pyfunction!(euler_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(condition1, m)?)?;
    m.add_function(wrap_pyfunction!(binom_power_scan, m)?)?;
    m.add_function(wrap_pyfunction!(hermitian_non_palindromes, m)?)?;
    Ok(())
}
