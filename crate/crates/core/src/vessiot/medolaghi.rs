//! Medolaghi systems L(xi)omega = 0 of geometric objects.

use super::geometry::christoffel;
use super::object::{GeometricObject, ObjectData};
use crate::error::Result;
use crate::foundation::{frac, RatFun};
use crate::jet::{one_form_rows, two_tensor_rows, weighted_one_form_rows, LinearJetSystem, MultiIndex, Row};

/// First-order Medolaghi system: n^2 rows for a coframe, n(n+1)/2 for a
/// metric, 3 for a contact density and 6 for a unimodular contact structure.
pub fn medolaghi_system(obj: &GeometricObject) -> Result<LinearJetSystem> {
    let n = obj.n;
    let rows = match &obj.data {
        ObjectData::Coframe(w) => w.iter().flat_map(|wt| one_form_rows(wt)).collect(),
        ObjectData::Metric(g) => two_tensor_rows(g, true),
        ObjectData::ContactDensity(w) => weighted_one_form_rows(w, &frac(-1, 2)),
        ObjectData::UnimodularContact { alpha, beta } => {
            let mut rows = one_form_rows(alpha);
            rows.extend(two_tensor_rows(beta, false));
            rows
        }
    };
    LinearJetSystem::new(n, n, 1, rows)
}

/// Second-order Medolaghi system of a metric: the Killing rows together with
/// L(xi)gamma = 0, i.e.
/// xi^k_ij + gamma^k_rj xi^r_i + gamma^k_ir xi^r_j - gamma^r_ij xi^k_r + xi^r d_r gamma^k_ij = 0.
pub fn metric_second_order_system(g: &[Vec<RatFun>]) -> Result<LinearJetSystem> {
    let n = g.len();
    let gamma = christoffel(g)?.gamma;
    let mut rows = two_tensor_rows(g, true);
    let zero = MultiIndex::zero(n);
    for k in 0..n {
        for i in 0..n {
            for j in i..n {
                let mut row = Row::new();
                row.add_term(n, k, &MultiIndex::unit(n, i).plus(j), RatFun::one());
                for r in 0..n {
                    row.add_term(n, r, &MultiIndex::unit(n, i), gamma[k][r][j].clone());
                    row.add_term(n, r, &MultiIndex::unit(n, j), gamma[k][i][r].clone());
                    row.add_term(n, k, &MultiIndex::unit(n, r), -&gamma[r][i][j]);
                    row.add_term(n, r, &zero, gamma[k][i][j].derivative(r));
                }
                rows.push(row);
            }
        }
    }
    LinearJetSystem::new(n, n, 2, rows)
}
