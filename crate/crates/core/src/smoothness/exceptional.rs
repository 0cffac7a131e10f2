use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::rootsys::{CartanType, Family};
use crate::weyl::{WeylElement, WeylGroup};

/// The element `w_kl = v~_l u~_k` of `E_k` and its building blocks.
///
/// Generators follow the `E_8` labelling with node 1 attached to node 4 and
/// the chain 2-3-4-5-6-7-8; `S_k` is the first `k` nodes and `J_k = S_k \ {s_2}`.
#[derive(Clone, Debug)]
pub struct ExceptionalElement {
    pub k: usize,
    pub l: usize,
    pub group: WeylGroup,
    pub element: WeylElement,
    /// Longest element of `W_{J_k}`.
    pub u_k: WeylElement,
    /// Longest element of `W_{S_l}`.
    pub w_l: WeylElement,
    /// Longest element of `W_{J_l}`.
    pub u_l: WeylElement,
    /// Longest element of `W_{S_l}^{J_l}`.
    pub v_l: WeylElement,
}

fn j_set(k: usize) -> Vec<usize> {
    (0..k).filter(|&s| s != 1).collect()
}

pub fn exceptional_element(k: usize, l: usize) -> Result<ExceptionalElement> {
    if !(5 <= l && l < k && k <= 8) {
        return Err(Error::ExceptionalOutOfRange { k, l });
    }
    let group = WeylGroup::from_type(CartanType::irreducible(Family::E, k)?);
    let s_l: Vec<usize> = (0..l).collect();
    let u_k = group.longest_element(&j_set(k))?;
    let w_l = group.longest_element(&s_l)?;
    let u_l = group.longest_element(&j_set(l))?;
    // Longest of the quotient: w~_l = v~_l u~_l with lengths adding.
    let v_l = group.mul(&w_l, &group.inverse(&u_l));
    let element = group.mul(&v_l, &u_k);
    Ok(ExceptionalElement { k, l, group, element, u_k, w_l, u_l, v_l })
}

impl ExceptionalElement {
    pub fn length(&self) -> usize {
        self.group.length(&self.element)
    }

    /// `P_{w~_l} P_{u~_k} / P_{u~_l}`, from length generating functions of
    /// parabolic subgroups only.
    pub fn poincare_from_parabolics(&self) -> Result<IntPolynomial> {
        let g = &self.group;
        let num = g
            .parabolic_poincare(&(0..self.l).collect::<Vec<_>>())?
            .mul(&g.parabolic_poincare(&j_set(self.k))?);
        let den = g.parabolic_poincare(&j_set(self.l))?;
        num.div_exact(&den).ok_or(Error::Overflow("exceptional Poincare quotient"))
    }

    /// Exponents read off [`Self::poincare_from_parabolics`], padded to rank `k`.
    pub fn exponents_from_parabolics(&self) -> Result<Option<Vec<usize>>> {
        Ok(super::exponents_of(&self.poincare_from_parabolics()?, self.k))
    }
}
