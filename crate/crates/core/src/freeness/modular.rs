use super::{pad, Certificate, FreenessResult, FreenessSearch, FreenessStatus, SearchConfig};
use crate::arrangement::{Arrangement, Flat};
use crate::error::{Error, Result};

/// Freeness through a modular coatom `X`: if `A_X` is inductively free with
/// coexponents `0, m_1, ..., m_{l-1}`, then `A` is inductively free with
/// coexponents `m_1, ..., m_{l-1}, |A| - |A_X|`.
///
/// The certificate peels the hyperplanes outside `A_X` in sorted order; the
/// restrictions along the way and the final `A_X` are certified by the
/// search. Falls back to the full search when `A_X` is not inductively free.
pub fn modular_coatom_freeness(a: &Arrangement, x: &Flat, config: &SearchConfig) -> Result<FreenessResult> {
    if !a.is_modular_coatom(x)? {
        return Err(Error::NotModular);
    }
    let search = FreenessSearch::new(config.clone());
    let local = a.localization(x)?;
    let lr = search.run(&local);
    let Some(local_exps) = lr.coexponents() else {
        return Ok(search.run(a));
    };
    let mut exps: Vec<usize> = local_exps.iter().copied().filter(|&e| e > 0).collect();
    exps.push(a.len() - local.len());
    let coexponents = pad(exps, a.dim());

    let canon = a.canonical();
    let inside: Vec<Vec<i64>> = local.normals().iter().map(|n| a.quotient_image(n)).collect();
    let outside: Vec<Vec<i64>> = canon.normals().iter().filter(|n| !inside.contains(n)).cloned().collect();
    let certificate = peel(&canon, &outside, &search);
    let poincare = a.poincare_polynomial();
    let splits = poincare.linear_factor_roots().is_some();
    Ok(FreenessResult { status: FreenessStatus::Free { coexponents, certificate }, poincare, splits })
}

fn peel(cur: &Arrangement, outside: &[Vec<i64>], search: &FreenessSearch) -> Certificate {
    if cur.dim() <= 2 {
        return Certificate::Leaf;
    }
    let Some((h, rest)) = outside.split_first() else {
        return search.run(cur).certificate().cloned().expect("localization is free");
    };
    let i = cur.index_of(h).expect("outside hyperplane present");
    let del = cur.delete_index(i);
    // While hyperplanes outside A_X remain, the deletion keeps full rank and
    // its coordinates.
    let del_cert = if rest.is_empty() {
        search.run(&del).certificate().cloned().expect("localization is free")
    } else {
        peel(&del, rest, search)
    };
    let res = cur.restrict_index(i);
    let res_cert = search.run(&res).certificate().cloned().expect("restriction is isomorphic to A_X / X");
    Certificate::Node { pivot: h.clone(), del: Box::new(del_cert), res: Box::new(res_cert) }
}
