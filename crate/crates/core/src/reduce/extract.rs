use super::completion::{unimodular_completion, zlp_annihilator};
use super::ReduceError;
use crate::error::{internal, usage};
use crate::polymat::PolyMatrix;
use crate::polyring::Polynomial;

type Outcome<T> = std::result::Result<T, ReduceError>;

/// For a factor `c * v - f` with `c` a nonzero constant and `f` free of
/// `v`, the substitution `v -> f / c` that makes it vanish. The first
/// variable with that property is used.
pub fn factor_substitution(p: &Polynomial) -> Option<(usize, Polynomial)> {
    (0..p.nvars()).find_map(|v| {
        if p.degree_in(v) != Some(1) {
            return None;
        }
        let coeffs = p.univar_view(v);
        let c = coeffs[1].constant_value()?;
        Some((v, (-&coeffs[0]).scale(&c.recip())))
    })
}

/// `U * F = diag(I_k, p I_{l-k}) * G` with `U` unimodular.
///
/// The last `l - k` rows of `U` annihilate `F` with `p = 0` substituted,
/// so the corresponding rows of `U * F` are divisible by `p`.
pub fn extract_factor(
    f: &PolyMatrix,
    factor: &Polynomial,
    k: usize,
    degree_bound: u32,
) -> Outcome<(PolyMatrix, PolyMatrix)> {
    let l = f.rows();
    if !f.is_square() || k >= l {
        return Err(usage(format!("extraction at order {k} from a {}x{} matrix", l, f.cols())).into());
    }
    let sub = factor_substitution(factor)
        .ok_or_else(|| usage(format!("`{factor}` is not linear in any single variable")))?;
    let w = zlp_annihilator(f, &[sub], degree_bound)?;
    if w.rows() != l - k {
        return Err(usage(format!(
            "the matrix with `{factor}` = 0 has rank {}, expected {k}",
            l - w.rows()
        ))
        .into());
    }
    let u = unimodular_completion(&w, degree_bound)?;
    let mut rows = (&u * f).to_rows();
    for row in rows.iter_mut().skip(k) {
        for p in row.iter_mut() {
            *p = p
                .exact_div(factor)
                .map_err(|e| internal(format!("extracted row is not divisible by `{factor}`: {e}")))?;
        }
    }
    let g = PolyMatrix::from_rows(f.vars(), rows)?;
    Ok((u, g))
}
