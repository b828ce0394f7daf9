use super::{ExactConfig, OracleError};
use crate::instance::HomInstance;

/// Every homomorphism respecting the domains, in lexicographic order, by
/// depth-first search that checks arcs to already coloured vertices.
///
/// Fails with `SizeLimitExceeded` once more than `cap` homomorphisms have
/// been found; the product-size limit of `cfg` is not applied.
pub fn enumerate_homomorphisms(
    inst: &HomInstance,
    cap: usize,
    cfg: &ExactConfig,
) -> Result<Vec<Vec<usize>>, OracleError> {
    let n = inst.d().len();
    let mut out = Vec::new();
    let mut f = vec![usize::MAX; n];
    extend(inst, 0, &mut f, &mut out, cap, cfg)?;
    Ok(out)
}

fn extend(
    inst: &HomInstance,
    u: usize,
    f: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
    cfg: &ExactConfig,
) -> Result<(), OracleError> {
    if u == f.len() {
        if out.len() == cap {
            return Err(OracleError::SizeLimitExceeded {
                size: cap + 1,
                limit: cap,
            });
        }
        out.push(f.clone());
        return Ok(());
    }
    cfg.check_cancel()?;
    let (d, h) = (inst.d(), inst.h());
    for i in inst.domain(u) {
        let fits = d.out_neighbors(u).all(|v| v > u || h.has_arc(i, f[v]))
            && d.in_neighbors(u).all(|v| v > u || h.has_arc(f[v], i));
        if fits {
            f[u] = i;
            extend(inst, u + 1, f, out, cap, cfg)?;
        }
    }
    f[u] = usize::MAX;
    Ok(())
}
