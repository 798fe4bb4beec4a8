//! Exact Lagrange interpolation over the Gaussian rationals.

use super::{ExactError, GaussRat, ZPoly};

/// Returns the unique polynomial of degree `< nodes.len()` through the given
/// points, via Newton's divided differences. Nodes must be pairwise
/// distinct.
pub fn lagrange_interpolate(nodes: &[GaussRat], values: &[GaussRat]) -> Result<ZPoly, ExactError> {
    if nodes.len() != values.len() {
        return Err(ExactError::LengthMismatch(nodes.len(), values.len()));
    }
    for (a, x) in nodes.iter().enumerate() {
        for y in &nodes[a + 1..] {
            if x == y {
                return Err(ExactError::DuplicateNodes);
            }
        }
    }
    // divided differences: table[j] holds f[x_{j-k}, ..., x_j] at stage k
    let mut table: Vec<GaussRat> = values.to_vec();
    let mut poly = ZPoly::zero();
    let mut basis = ZPoly::one();
    for k in 0..nodes.len() {
        if k > 0 {
            for j in (k..nodes.len()).rev() {
                let num = &table[j] - &table[j - 1];
                let den = &nodes[j] - &nodes[j - k];
                table[j] = num.checked_div(&den)?;
            }
        }
        poly = &poly + &basis.scale(&table[k]);
        let factor = ZPoly::from_coeffs(vec![-&nodes[k], GaussRat::one()]);
        basis = &basis * &factor;
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_data_gives_z() {
        let nodes = vec![GaussRat::frac_i(1, 2), GaussRat::frac_i(3, 2)];
        let p = lagrange_interpolate(&nodes, &nodes).unwrap();
        assert_eq!(p, ZPoly::z());
    }

    #[test]
    fn quadratic_through_three_points() {
        // values -(m+1)(m+2) at i(m+1/2) for m = 0,1,2 give z^2 + 2iz - 3/4
        let nodes = vec![
            GaussRat::frac_i(1, 2),
            GaussRat::frac_i(3, 2),
            GaussRat::frac_i(5, 2),
        ];
        let values = vec![
            GaussRat::from_int(-2),
            GaussRat::from_int(-6),
            GaussRat::from_int(-12),
        ];
        let p = lagrange_interpolate(&nodes, &values).unwrap();
        let expect = ZPoly::from_coeffs(vec![
            GaussRat::frac(-3, 4),
            GaussRat::frac_i(2, 1),
            GaussRat::one(),
        ]);
        assert_eq!(p, expect);
    }

    #[test]
    fn single_node_is_constant() {
        let p = lagrange_interpolate(&[GaussRat::zero()], &[GaussRat::from_int(5)]).unwrap();
        assert_eq!(p, ZPoly::constant(GaussRat::from_int(5)));
    }

    #[test]
    fn duplicate_nodes_rejected() {
        let nodes = vec![GaussRat::one(), GaussRat::one()];
        let values = vec![GaussRat::zero(), GaussRat::zero()];
        assert_eq!(
            lagrange_interpolate(&nodes, &values),
            Err(ExactError::DuplicateNodes)
        );
    }

    #[test]
    fn reproduces_values_at_nodes() {
        let nodes: Vec<GaussRat> = (0..5).map(GaussRat::from_int).collect();
        let values: Vec<GaussRat> = (0..5)
            .map(|m| {
                GaussRat::new(
                    crate::exact::big_rat(m * m - 3, 7),
                    crate::exact::big_rat(m, 3),
                )
            })
            .collect();
        let p = lagrange_interpolate(&nodes, &values).unwrap();
        for (x, v) in nodes.iter().zip(&values) {
            assert_eq!(&p.eval(x), v);
        }
    }
}
