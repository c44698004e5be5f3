//! Chain-level string-topology operators on the cobar complex: the
//! loop product, the star insertion and its bracket, the loop
//! coproduct, the letter-swap homotopy and cobracket, the rotation
//! homotopies, iterated coproducts and shuffles.
//!
//! Every Koszul sign is an explicit exponent in word and block degrees;
//! the constants from [`Conventions`] resolve the choices the usual
//! presentations leave implicit. The chain-identity suite in `verify`
//! holds exactly under the default constants and breaks under any
//! single flip, which is what pins them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::{One, Zero};
use thiserror::Error;

use crate::barcomplex::{
    block_degree, connes_for, cyclic_degree, letter_degree, render_word, word_degree, BarWord,
    Chain, ComplexKind, CyclicWord,
};
use crate::conventions::{is_odd, Conventions};
use crate::exactlin::{render_rat, Rat};
use crate::frobenius::FrobeniusModel;

#[derive(Debug, Error)]
pub enum OpsError {
    #[error("operands must be homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("operand must be a cycle: {0}")]
    NotACycle(String),
}

/// Finite rational combination of tensor words of a fixed arity. Each
/// factor carries a power of the degree-2 parameter, zero outside the
/// cyclic complexes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorChain {
    pub arity: usize,
    terms: BTreeMap<Vec<CyclicWord>, Rat>,
}

impl TensorChain {
    pub fn zero(arity: usize) -> Self {
        TensorChain { arity, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, factors: Vec<CyclicWord>, c: Rat) {
        assert_eq!(factors.len(), self.arity, "tensor arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(factors) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorChain, scale: &Rat) {
        assert_eq!(self.arity, other.arity);
        for (f, c) in &other.terms {
            self.add(f.clone(), c * scale);
        }
    }

    pub fn sub(&self, other: &TensorChain) -> TensorChain {
        let mut out = self.clone();
        out.add_scaled(other, &-Rat::one());
        out
    }

    pub fn scaled(&self, scale: &Rat) -> TensorChain {
        let mut out = TensorChain::zero(self.arity);
        out.add_scaled(self, scale);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<CyclicWord>, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_chain(c: &Chain) -> TensorChain {
        let mut out = TensorChain::zero(1);
        for (w, r) in c.iter() {
            out.add(vec![(w.clone(), 0)], r.clone());
        }
        out
    }

    pub fn pair(a: &Chain, b: &Chain) -> TensorChain {
        let mut out = TensorChain::zero(2);
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                out.add(vec![(wa.clone(), 0), (wb.clone(), 0)], ca * cb);
            }
        }
        out
    }

    /// Drops every term in which some factor has no letters.
    pub fn project_reduced(&self) -> TensorChain {
        let mut out = TensorChain::zero(self.arity);
        for (f, c) in &self.terms {
            if f.iter().all(|(w, _)| !w.is_empty()) {
                out.add(f.clone(), c.clone());
            }
        }
        out
    }

    /// The map into the tensor power of the cyclic complex at `u^0` on
    /// every factor is the identity on terms here; raising a factor's
    /// u-power is only used by the cyclic-side operators.
    pub fn total_degree(&self, model: &FrobeniusModel) -> Option<i64> {
        let mut deg = None;
        for (f, _) in &self.terms {
            let d: i64 = f.iter().map(|cw| cyclic_degree(model, cw)).sum();
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }
}

/// Renders tensor terms as `w1 (x) w2`, with `u^p` annotations.
pub fn render_tensor_chain(model: &FrobeniusModel, t: &TensorChain) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (f, c) in t.iter() {
        let mut body = String::new();
        for (i, (w, p)) in f.iter().enumerate() {
            if i > 0 {
                body.push_str(" (x) ");
            }
            body.push_str(&render_word(model, w));
            if *p > 0 {
                let _ = write!(body, " u^{p}");
            }
        }
        let neg = c < &Rat::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if first {
            if neg {
                out.push_str("- ");
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !abs.is_one() {
            let _ = write!(out, "{} ", render_rat(&abs));
        }
        out.push_str(&body);
        first = false;
    }
    out
}

fn sign(exp: i64) -> Rat {
    if is_odd(exp) {
        -Rat::one()
    } else {
        Rat::one()
    }
}

/// The operator suite over a fixed model and sign convention.
pub struct StringOps<'a> {
    pub model: &'a FrobeniusModel,
    pub conv: &'a Conventions,
}

impl<'a> StringOps<'a> {
    pub fn new(model: &'a FrobeniusModel, conv: &'a Conventions) -> Self {
        StringOps { model, conv }
    }

    fn m(&self) -> i64 {
        self.model.m
    }

    /// Loop product: concatenates letters and multiplies heads; the
    /// incoming head passes the first word's letters.
    pub fn bullet(&self, a: &Chain, b: &Chain) -> Chain {
        let mut out = Chain::zero();
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                let s = sign(self.model.degree(wb.head) * block_degree(self.model, &wa.letters));
                let coeff = ca * cb * &s;
                for (k, c) in self.model.mul(wa.head, wb.head) {
                    let mut letters = wa.letters.clone();
                    letters.extend_from_slice(&wb.letters);
                    out.add(BarWord::new(*k, letters), &coeff * c);
                }
            }
        }
        if self.conv.flip_bullet {
            out = out.scaled(&-Rat::one());
        }
        out
    }

    /// Star insertion: replaces each letter of the first word by the
    /// second word's letters, weighted by the counit of the letter
    /// times the second head.
    pub fn star(&self, a: &Chain, b: &Chain) -> Chain {
        let mut out = Chain::zero();
        for (wb, cb) in b.iter() {
            let db = word_degree(self.model, wb);
            for (wa, ca) in a.iter() {
                let n = wa.len();
                for i in 0..n {
                    let eps = self.model.eps_mul(wa.letters[i], wb.head);
                    if eps.is_zero() {
                        continue;
                    }
                    let s = sign(
                        self.model.degree(wb.head)
                            + (db - 1) * block_degree(self.model, &wa.letters[i + 1..]),
                    );
                    let mut letters = Vec::with_capacity(n - 1 + wb.len());
                    letters.extend_from_slice(&wa.letters[..i]);
                    letters.extend_from_slice(&wb.letters);
                    letters.extend_from_slice(&wa.letters[i + 1..]);
                    out.add(BarWord::new(wa.head, letters), ca * cb * &eps * &s);
                }
            }
        }
        if self.conv.flip_star {
            out = out.scaled(&-Rat::one());
        }
        out
    }

    fn homogeneous_degree(&self, c: &Chain, what: &str) -> Result<Option<i64>, OpsError> {
        if c.is_zero() {
            return Ok(None);
        }
        c.degree(self.model)
            .map(Some)
            .ok_or_else(|| OpsError::NotHomogeneous(what.to_string()))
    }

    /// The commutator of the star insertion in the bracket grading.
    pub fn lie_bracket(&self, a: &Chain, b: &Chain) -> Result<Chain, OpsError> {
        let (Some(da), Some(db)) = (
            self.homogeneous_degree(a, "bracket left operand")?,
            self.homogeneous_degree(b, "bracket right operand")?,
        ) else {
            return Ok(Chain::zero());
        };
        let shift = self.conv.bracket_shift.eval(self.m());
        let mut out = self.star(a, b);
        let s = sign((da + 1 + shift) * (db + 1 + shift));
        out.add_chain(&self.star(b, a), &-s);
        Ok(out)
    }

    /// Loop coproduct: splits at an interior letter, multiplying it
    /// into the head and passing the result through the model
    /// coproduct. Both output factors keep at least one letter.
    pub fn vee(&self, a: &Chain) -> TensorChain {
        let mut out = TensorChain::zero(2);
        for (w, r) in a.iter() {
            let n = w.len();
            if n < 3 {
                continue;
            }
            let d0 = self.model.degree(w.head);
            for i in 1..n - 1 {
                let pre = block_degree(self.model, &w.letters[..i]);
                let prod = self.model.mul(w.head, w.letters[i]);
                for (k, ck) in prod {
                    for (p, q, cd) in self.model.delta(*k) {
                        let s = sign(
                            d0 + (1 + self.model.degree(w.letters[i]) + self.model.degree(*q))
                                * pre,
                        );
                        let f1 = BarWord::new(*p, w.letters[..i].to_vec());
                        let f2 = BarWord::new(*q, w.letters[i + 1..].to_vec());
                        out.add(vec![(f1, 0), (f2, 0)], r * ck * cd * &s);
                    }
                }
            }
        }
        if self.conv.flip_vee {
            out = out.scaled(&-Rat::one());
        }
        out
    }

    /// Left-iterated coproduct; coassociativity makes the bracketing
    /// immaterial.
    pub fn vee_iterate(&self, a: &Chain, k: usize) -> TensorChain {
        assert!(k >= 2);
        let mut t = self.vee(a);
        for _ in 2..k {
            t = self.vee_first_factor(&t);
        }
        t
    }

    /// Applies the coproduct to the first tensor factor (no Koszul pass).
    pub fn vee_first_factor(&self, t: &TensorChain) -> TensorChain {
        let mut out = TensorChain::zero(t.arity + 1);
        for (f, c) in t.iter() {
            debug_assert_eq!(f[0].1, 0, "coproduct acts on plain word factors");
            let inner = self.vee(&Chain::word(f[0].0.clone()));
            for (g, cg) in inner.iter() {
                let mut factors = Vec::with_capacity(t.arity + 1);
                factors.push(g[0].clone());
                factors.push(g[1].clone());
                factors.extend_from_slice(&f[1..]);
                out.add(factors, c * cg);
            }
        }
        out
    }

    /// Exponent of the letter-swap homotopy for blocks
    /// `[P | x | M | y | Q]`: the base comes from moving `Q` across
    /// `x M y` and `y` across `M`, plus the configured extras.
    fn h_exponent(&self, x: i64, y: i64, mid: i64, suf: i64) -> i64 {
        let m = self.m();
        suf * (x + y + mid)
            + y * mid
            + self.conv.h_extra_x.eval(m) * x
            + self.conv.h_extra_y.eval(m) * y
            + self.conv.h_extra_const.eval(m)
    }

    /// Letter-swap homotopy before the reduced projection.
    pub fn h_swap_raw(&self, a: &Chain) -> TensorChain {
        let mut out = TensorChain::zero(2);
        for (w, r) in a.iter() {
            let n = w.len();
            for i in 0..n {
                for j in i + 1..n {
                    let x = letter_degree(self.model, w.letters[i]);
                    let y = letter_degree(self.model, w.letters[j]);
                    let mid = block_degree(self.model, &w.letters[i + 1..j]);
                    let suf = block_degree(self.model, &w.letters[j + 1..]);
                    let s = sign(self.h_exponent(x, y, mid, suf));
                    for (k, ck) in self.model.mul(w.letters[i], w.letters[j]) {
                        let mut outer = Vec::with_capacity(n - 2 - (j - i - 1));
                        outer.extend_from_slice(&w.letters[..i]);
                        outer.extend_from_slice(&w.letters[j + 1..]);
                        let f1 = BarWord::new(w.head, outer);
                        let f2 = BarWord::new(*k, w.letters[i + 1..j].to_vec());
                        out.add(vec![(f1, 0), (f2, 0)], r * ck * &s);
                    }
                }
            }
        }
        if self.conv.flip_h {
            out = out.scaled(&-Rat::one());
        }
        out
    }

    /// Letter-swap homotopy in the reduced tensor square.
    pub fn h_swap(&self, a: &Chain) -> TensorChain {
        self.h_swap_raw(a).project_reduced()
    }

    fn tau_exponent(&self, d1: i64, d2: i64) -> i64 {
        let m = self.m();
        let s = self.conv.tau_shift.eval(m);
        (d1 + s) * (d2 + s)
            + self.conv.tau_const.eval(m)
            + if self.conv.flip_tau { 1 } else { 0 }
    }

    /// Swaps the factors at `pos` and `pos + 1`.
    pub fn tau_at(&self, t: &TensorChain, pos: usize) -> TensorChain {
        let mut out = TensorChain::zero(t.arity);
        for (f, c) in t.iter() {
            let d1 = cyclic_degree(self.model, &f[pos]);
            let d2 = cyclic_degree(self.model, &f[pos + 1]);
            let s = sign(self.tau_exponent(d1, d2));
            let mut g = f.clone();
            g.swap(pos, pos + 1);
            out.add(g, c * &s);
        }
        out
    }

    /// The two-factor swap.
    pub fn tau(&self, t: &TensorChain) -> TensorChain {
        assert_eq!(t.arity, 2);
        self.tau_at(t, 0)
    }

    /// Cyclic rotation `x1 (x) x2 (x) x3 -> x2 (x) x3 (x) x1`.
    pub fn sigma(&self, t: &TensorChain) -> TensorChain {
        assert_eq!(t.arity, 3);
        let m = self.m();
        let mut out = TensorChain::zero(3);
        for (f, c) in t.iter() {
            let d1 = cyclic_degree(self.model, &f[0]);
            let d2 = cyclic_degree(self.model, &f[1]);
            let d3 = cyclic_degree(self.model, &f[2]);
            let exp = (d1 + self.conv.sigma_shift.eval(m)) * (d2 + d3)
                + self.conv.sigma_const.eval(m);
            out.add(vec![f[1].clone(), f[2].clone(), f[0].clone()], c * &sign(exp));
        }
        out
    }

    /// Cobracket: the skew-symmetrization of the letter-swap homotopy,
    /// with its own symmetrization sign.
    pub fn cobracket_s(&self, a: &Chain) -> TensorChain {
        let h = self.h_swap(a);
        let s = sign(self.conv.cobracket_sym.eval(self.m()));
        let mut out = h.clone();
        out.add_scaled(&self.tau(&h), &-s);
        out
    }

    /// The swap under which the cobracket is skew: the plain swap
    /// twisted by the symmetrization sign.
    pub fn tau_sym(&self, t: &TensorChain) -> TensorChain {
        self.tau(t).scaled(&sign(self.conv.cobracket_sym.eval(self.m())))
    }

    /// Rotation-insertion homotopy for the bracket-versus-B identity:
    /// the first summand rotates the first word and inserts the second,
    /// the mirrored summand swaps the roles with a Koszul factor.
    pub fn homotopy_bv(&self, a: &Chain, b: &Chain) -> Result<Chain, OpsError> {
        let (da, db) = (
            self.homogeneous_degree(a, "homotopy operand")?,
            self.homogeneous_degree(b, "homotopy operand")?,
        );
        let (Some(da), Some(db)) = (da, db) else {
            return Ok(Chain::zero());
        };
        let m = self.m();
        let mut out = Chain::zero();
        let phi_extra = self.conv.bv_phi[0].eval(m)
            + self.conv.bv_phi[1].eval(m) * da
            + self.conv.bv_phi[2].eval(m) * db
            + self.conv.bv_phi[3].eval(m) * da * db;
        self.bv_summand(a, b, phi_extra, &mut out);
        let psi_extra = self.conv.bv_psi[0].eval(m)
            + self.conv.bv_psi[1].eval(m) * da
            + self.conv.bv_psi[2].eval(m) * db
            + self.conv.bv_psi[3].eval(m) * da * db;
        self.bv_summand(b, a, psi_extra, &mut out);
        Ok(out)
    }

    /// One summand: rotate `a` to start after letter `i`, consume the
    /// head by the counit, and insert `b`'s letters in place of letter
    /// `j`, weighted by `eps(a_j . head(b))`. The sign counts the
    /// letters that end up after the inserted block.
    fn bv_summand(&self, a: &Chain, b: &Chain, extra: i64, out: &mut Chain) {
        for (wa, ca) in a.iter() {
            let eps_head = self.model.eps(wa.head).clone();
            if eps_head.is_zero() {
                continue;
            }
            let n = wa.len();
            for (wb, cb) in b.iter() {
                for i in 0..n {
                    for j in i + 1..n {
                        let eps_j = self.model.eps_mul(wa.letters[j], wb.head);
                        if eps_j.is_zero() {
                            continue;
                        }
                        let tail = block_degree(self.model, &wa.letters[j + 1..])
                            + block_degree(self.model, &wa.letters[..i]);
                        let s = sign(tail + extra);
                        let mut letters = Vec::with_capacity(n - 2 + wb.len());
                        letters.extend_from_slice(&wa.letters[i + 1..j]);
                        letters.extend_from_slice(&wb.letters);
                        letters.extend_from_slice(&wa.letters[j + 1..]);
                        letters.extend_from_slice(&wa.letters[..i]);
                        out.add(
                            BarWord::new(wa.letters[i], letters),
                            ca * cb * &eps_head * &eps_j * &s,
                        );
                    }
                }
            }
        }
    }

    /// Double-insertion homotopy for the star-over-product identity:
    /// inserts both words into the third at a pair of letters.
    pub fn homotopy_assoc3(
        &self,
        a: &Chain,
        b: &Chain,
        g: &Chain,
    ) -> Result<Chain, OpsError> {
        let (da, db) = (
            self.homogeneous_degree(a, "homotopy operand")?,
            self.homogeneous_degree(b, "homotopy operand")?,
        );
        let (Some(da), Some(db)) = (da, db) else {
            return Ok(Chain::zero());
        };
        let m = self.m();
        let extra_const = self.conv.assoc3_extra[0].eval(m)
            + self.conv.assoc3_extra[1].eval(m) * da
            + self.conv.assoc3_extra[2].eval(m) * db;
        let mut out = Chain::zero();
        for (wg, cg) in g.iter() {
            let l = wg.len();
            for (wa, ca) in a.iter() {
                for (wb, cb) in b.iter() {
                    for i in 0..l {
                        let eps_i = self.model.eps_mul(wg.letters[i], wa.head);
                        if eps_i.is_zero() {
                            continue;
                        }
                        for j in i + 1..l {
                            let eps_j = self.model.eps_mul(wg.letters[j], wb.head);
                            if eps_j.is_zero() {
                                continue;
                            }
                            // the sign counts the third word's letters
                            // between the two slots and after the second
                            let suf = block_degree(self.model, &wg.letters[j + 1..]);
                            let mid = block_degree(self.model, &wg.letters[i + 1..j]);
                            let exp = 1 + mid + (db + 1) * suf + extra_const;
                            let s = sign(exp);
                            let mut letters = Vec::with_capacity(
                                l - 2 + wa.len() + wb.len(),
                            );
                            letters.extend_from_slice(&wg.letters[..i]);
                            letters.extend_from_slice(&wa.letters);
                            letters.extend_from_slice(&wg.letters[i + 1..j]);
                            letters.extend_from_slice(&wb.letters);
                            letters.extend_from_slice(&wg.letters[j + 1..]);
                            out.add(
                                BarWord::new(wg.head, letters),
                                ca * cb * cg * &eps_i * &eps_j * &s,
                            );
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// First summand of the rotation homotopy for the coproduct-vs-B
    /// identity: rotate to letter `i`, then swap-split the rotated word
    /// at the pair `(j, k)` lying after the rotation point.
    fn theta_phi(&self, a: &Chain) -> TensorChain {
        let m = self.m();
        let mut out = TensorChain::zero(2);
        for (w, r) in a.iter() {
            let eps0 = self.model.eps(w.head).clone();
            if eps0.is_zero() {
                continue;
            }
            let n = w.len();
            let da = word_degree(self.model, w);
            for i in 0..n {
                let rot = block_degree(self.model, &w.letters[i..])
                    * block_degree(self.model, &w.letters[..i]);
                for j in i + 1..n {
                    for k in j + 1..n {
                        let x = letter_degree(self.model, w.letters[j]);
                        let y = letter_degree(self.model, w.letters[k]);
                        let mid = block_degree(self.model, &w.letters[j + 1..k]);
                        let suf = block_degree(self.model, &w.letters[k + 1..])
                            + block_degree(self.model, &w.letters[..i]);
                        let extra = self.conv.theta_phi[0].eval(m)
                            + self.conv.theta_phi[1].eval(m) * da
                            + self.conv.theta_phi[2].eval(m)
                                * letter_degree(self.model, w.letters[i]);
                        let s = sign(rot + self.h_exponent(x, y, mid, suf) + extra);
                        for (p, cp) in self.model.mul(w.letters[j], w.letters[k]) {
                            let mut outer = Vec::new();
                            outer.extend_from_slice(&w.letters[i + 1..j]);
                            outer.extend_from_slice(&w.letters[k + 1..]);
                            outer.extend_from_slice(&w.letters[..i]);
                            let f1 = BarWord::new(w.letters[i], outer);
                            let f2 = BarWord::new(*p, w.letters[j + 1..k].to_vec());
                            out.add(vec![(f1, 0), (f2, 0)], r * cp * &eps0 * &s);
                        }
                    }
                }
            }
        }
        out
    }

    /// Second summand: the swapped pair lies before the rotation point;
    /// the two output factors come out transposed.
    fn theta_psi(&self, a: &Chain) -> TensorChain {
        let m = self.m();
        let mut out = TensorChain::zero(2);
        for (w, r) in a.iter() {
            let eps0 = self.model.eps(w.head).clone();
            if eps0.is_zero() {
                continue;
            }
            let n = w.len();
            let da = word_degree(self.model, w);
            for j in 0..n {
                for k in j + 1..n {
                    for i in k + 1..n {
                        let rot = block_degree(self.model, &w.letters[i..])
                            * block_degree(self.model, &w.letters[..i]);
                        let x = letter_degree(self.model, w.letters[j]);
                        let y = letter_degree(self.model, w.letters[k]);
                        let mid = block_degree(self.model, &w.letters[j + 1..k]);
                        let suf = block_degree(self.model, &w.letters[k + 1..i]);
                        let h_exp = self.h_exponent(x, y, mid, suf);
                        // factor degrees after the split, for the transposition
                        let d_outer = self.model.degree(w.letters[i])
                            + block_degree(self.model, &w.letters[i + 1..])
                            + block_degree(self.model, &w.letters[..j])
                            + block_degree(self.model, &w.letters[k + 1..i]);
                        let d_inner = self.model.degree(w.letters[j])
                            + self.model.degree(w.letters[k])
                            - self.m()
                            + mid;
                        let extra = self.conv.theta_psi[0].eval(m)
                            + self.conv.theta_psi[1].eval(m) * da
                            + self.conv.theta_psi[2].eval(m)
                                * letter_degree(self.model, w.letters[i]);
                        let s =
                            sign(rot + h_exp + self.tau_exponent(d_outer, d_inner) + extra);
                        for (p, cp) in self.model.mul(w.letters[j], w.letters[k]) {
                            let f1 = BarWord::new(*p, w.letters[j + 1..k].to_vec());
                            let mut tail = Vec::new();
                            tail.extend_from_slice(&w.letters[i + 1..]);
                            tail.extend_from_slice(&w.letters[..j]);
                            tail.extend_from_slice(&w.letters[k + 1..i]);
                            let f2 = BarWord::new(w.letters[i], tail);
                            out.add(vec![(f1, 0), (f2, 0)], r * cp * &eps0 * &s);
                        }
                    }
                }
            }
        }
        out
    }

    /// Rotation homotopy before projection.
    pub fn homotopy_theta_raw(&self, a: &Chain) -> TensorChain {
        let mut out = self.theta_phi(a);
        let psi = self.theta_psi(a);
        out.add_scaled(&psi, &Rat::one());
        out
    }

    /// Rotation homotopy in the reduced tensor square.
    pub fn homotopy_theta(&self, a: &Chain) -> TensorChain {
        self.homotopy_theta_raw(a).project_reduced()
    }

    /// Double letter-swap homotopy before projection: splits off two
    /// product pairs, leaving three factors.
    pub fn homotopy_cogerst_raw(&self, a: &Chain) -> TensorChain {
        let m = self.m();
        let mut out = TensorChain::zero(3);
        for (w, r) in a.iter() {
            let n = w.len();
            let da = word_degree(self.model, w);
            for i in 0..n {
                for j in i + 1..n {
                    let x1 = letter_degree(self.model, w.letters[i]);
                    let y1 = letter_degree(self.model, w.letters[j]);
                    let mid1 = block_degree(self.model, &w.letters[i + 1..j]);
                    let suf1 = block_degree(self.model, &w.letters[j + 1..]);
                    let first = self.h_exponent(x1, y1, mid1, suf1);
                    for k in j + 1..n {
                        for l in k + 1..n {
                            let x2 = letter_degree(self.model, w.letters[k]);
                            let y2 = letter_degree(self.model, w.letters[l]);
                            let mid2 = block_degree(self.model, &w.letters[k + 1..l]);
                            let suf2 = block_degree(self.model, &w.letters[l + 1..]);
                            let second = self.h_exponent(x2, y2, mid2, suf2);
                            let d_mid1 = self.model.degree(w.letters[i])
                                + self.model.degree(w.letters[j])
                                - m
                                + mid1;
                            let d_mid2 = self.model.degree(w.letters[k])
                                + self.model.degree(w.letters[l])
                                - m
                                + mid2;
                            let extra = self.conv.cogerst_extra[0].eval(m)
                                + self.conv.cogerst_extra[1].eval(m) * da
                                + self.conv.cogerst_extra[2].eval(m) * d_mid1;
                            let s = sign(
                                first + second + self.tau_exponent(d_mid2, d_mid1) + extra,
                            );
                            for (p1, c1) in self.model.mul(w.letters[i], w.letters[j]) {
                                for (p2, c2) in self.model.mul(w.letters[k], w.letters[l]) {
                                    let mut outer = Vec::new();
                                    outer.extend_from_slice(&w.letters[..i]);
                                    outer.extend_from_slice(&w.letters[j + 1..k]);
                                    outer.extend_from_slice(&w.letters[l + 1..]);
                                    let f1 = BarWord::new(w.head, outer);
                                    let f2 =
                                        BarWord::new(*p1, w.letters[i + 1..j].to_vec());
                                    let f3 =
                                        BarWord::new(*p2, w.letters[k + 1..l].to_vec());
                                    out.add(
                                        vec![(f1, 0), (f2, 0), (f3, 0)],
                                        r * c1 * c2 * &s,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Double letter-swap homotopy in the reduced tensor cube.
    pub fn homotopy_cogerst(&self, a: &Chain) -> TensorChain {
        self.homotopy_cogerst_raw(a).project_reduced()
    }

    /// Applies an arity-preserving chain operator of the given degree
    /// to one tensor factor, passing the preceding factors with the
    /// plain Koszul rule. (Splitting operators use the shifted rule of
    /// [`Self::apply_split_to_factor`].)
    pub fn apply_to_factor(
        &self,
        t: &TensorChain,
        pos: usize,
        op_degree: i64,
        op: &dyn Fn(&Chain) -> Chain,
    ) -> TensorChain {
        let mut out = TensorChain::zero(t.arity);
        for (f, c) in t.iter() {
            let prefix: i64 = f[..pos].iter().map(|cw| cyclic_degree(self.model, cw)).sum();
            let s = sign(op_degree * prefix);
            debug_assert_eq!(f[pos].1, 0, "chain operators act on plain word factors");
            let applied = op(&Chain::word(f[pos].0.clone()));
            for (w2, c2) in applied.iter() {
                let mut g = f.clone();
                g[pos] = (w2.clone(), 0);
                out.add(g, c * c2 * &s);
            }
        }
        out
    }

    /// Applies a splitting operator (one factor in, two out) to one
    /// tensor factor, passing the preceding factors with the Koszul
    /// rule.
    pub fn apply_split_to_factor(
        &self,
        t: &TensorChain,
        pos: usize,
        op_degree: i64,
        op: &dyn Fn(&Chain) -> TensorChain,
    ) -> TensorChain {
        let m = self.m();
        let mut out = TensorChain::zero(t.arity + 1);
        for (f, c) in t.iter() {
            let prefix: i64 = f[..pos].iter().map(|cw| cyclic_degree(self.model, cw)).sum();
            let s = sign(
                (op_degree + self.conv.oppass.eval(m)) * prefix
                    + self.conv.oppass_const.eval(m) * pos as i64,
            );
            debug_assert_eq!(f[pos].1, 0, "splitting operators act on plain word factors");
            let applied = op(&Chain::word(f[pos].0.clone()));
            for (g, c2) in applied.iter() {
                debug_assert_eq!(g.len(), 2);
                let mut factors = Vec::with_capacity(t.arity + 1);
                factors.extend_from_slice(&f[..pos]);
                factors.push(g[0].clone());
                factors.push(g[1].clone());
                factors.extend_from_slice(&f[pos + 1..]);
                out.add(factors, c * c2 * &s);
            }
        }
        out
    }

    /// Connes operator applied factorwise with Koszul passes.
    pub fn connes_tensor(&self, t: &TensorChain, kind: ComplexKind) -> TensorChain {
        let mut out = TensorChain::zero(t.arity);
        for pos in 0..t.arity {
            let applied =
                self.apply_to_factor(t, pos, 1, &|c| connes_for(self.model, kind, c));
            out.add_scaled(&applied, &Rat::one());
        }
        out
    }

    /// Signed sum over all interleavings of the first two factors into
    /// the following `rest` factors; trailing factors stay fixed.
    pub fn shuffle_2_into(&self, t: &TensorChain, rest: usize) -> TensorChain {
        assert!(t.arity >= 2 + rest);
        let m = self.m();
        let shift = self.conv.shuffle_shift.eval(m);
        let mut out = TensorChain::zero(t.arity);
        let window = 2 + rest;
        for (f, c) in t.iter() {
            let degs: Vec<i64> =
                f[..window].iter().map(|cw| cyclic_degree(self.model, cw)).collect();
            for p1 in 0..window {
                for p2 in p1 + 1..window {
                    // permuted sequence: pair items at p1, p2, rest in order
                    let mut perm = vec![usize::MAX; window];
                    perm[p1] = 0;
                    perm[p2] = 1;
                    let mut next = 2;
                    for slot in perm.iter_mut() {
                        if *slot == usize::MAX {
                            *slot = next;
                            next += 1;
                        }
                    }
                    let mut exp = 0i64;
                    for a in 0..window {
                        for b in a + 1..window {
                            if perm[a] > perm[b] {
                                exp += (degs[perm[a]] + shift) * (degs[perm[b]] + shift);
                            }
                        }
                    }
                    let mut g: Vec<CyclicWord> =
                        perm.iter().map(|&src| f[src].clone()).collect();
                    g.extend_from_slice(&f[window..]);
                    out.add(g, c * &sign(exp));
                }
            }
        }
        out
    }

    /// Shifted word degree in the grading where the loop product has
    /// degree zero.
    pub fn shifted_degree(&self, d: i64) -> i64 {
        d - self.m()
    }

    /// The iterated bracket of the second-order identity: evaluated on
    /// cycles with the Connes operator and the loop product, in the
    /// shifted grading.
    pub fn derived_bracket(
        &self,
        kind: ComplexKind,
        args: &[Chain],
    ) -> Result<Chain, OpsError> {
        assert!(args.len() >= 2);
        let k = args.len();
        let mut sdegs = Vec::with_capacity(k);
        for (idx, a) in args.iter().enumerate() {
            let d = self
                .homogeneous_degree(a, "bracket argument")?
                .unwrap_or(0);
            if !crate::barcomplex::differential_for(self.model, kind, a).is_zero() {
                return Err(OpsError::NotACycle(format!("argument {idx}")));
            }
            sdegs.push(self.shifted_degree(d));
        }
        let product = |items: &[Chain]| -> Chain {
            let mut acc = items[0].clone();
            for it in &items[1..] {
                acc = self.bullet(&acc, it);
            }
            acc
        };
        let b_of = |c: &Chain| connes_for(self.model, kind, c);

        let mut total = b_of(&product(args));
        let mut prefix = 0i64;
        for i in 0..k {
            let mut items: Vec<Chain> = args.to_vec();
            items[i] = b_of(&args[i]);
            total.add_chain(&product(&items), &-sign(prefix));
            prefix += sdegs[i];
        }
        let mut eps = 0i64;
        for (i, s) in sdegs.iter().enumerate().take(k - 1) {
            eps += (k - 1 - i) as i64 * s;
        }
        Ok(total.scaled(&sign(eps)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barcomplex::parse_word;
    use crate::frobenius::builtin_sphere;

    fn sphere2() -> FrobeniusModel {
        builtin_sphere(2).unwrap()
    }

    fn chain(model: &FrobeniusModel, s: &str) -> Chain {
        Chain::word(parse_word(model, s).unwrap())
    }

    #[test]
    fn bullet_examples() {
        let s = sphere2();
        let conv = Conventions::default();
        let ops = StringOps::new(&s, &conv);
        let tt = chain(&s, "t[t]");
        let out = ops.bullet(&tt, &tt);
        assert_eq!(crate::barcomplex::render_chain(&s, &out), "t[t|t]");
        // t[] is the unit of the loop product
        let unit = chain(&s, "t[]");
        for a in ["g[t]", "t[t|t]", "g[t|t|t]"] {
            let c = chain(&s, a);
            assert_eq!(ops.bullet(&c, &unit), c);
            assert_eq!(ops.bullet(&unit, &c), c);
        }
        assert!(ops.bullet(&chain(&s, "g[t]"), &chain(&s, "g[t]")).is_zero());
    }

    #[test]
    fn bullet_associativity_sweep() {
        let s = sphere2();
        let conv = Conventions::default();
        let ops = StringOps::new(&s, &conv);
        let words: Vec<Chain> = (0..=4)
            .flat_map(|d| {
                crate::barcomplex::enumerate_basis(&s, ComplexKind::FullHochschild, d)
            })
            .map(Chain::word)
            .collect();
        for a in &words {
            for b in &words {
                for c in &words {
                    let left = ops.bullet(&ops.bullet(a, b), c);
                    let right = ops.bullet(a, &ops.bullet(b, c));
                    assert_eq!(left, right, "loop product must associate exactly");
                }
            }
        }
    }

    #[test]
    fn star_examples() {
        let s = sphere2();
        let conv = Conventions::default();
        let ops = StringOps::new(&s, &conv);
        let gt = chain(&s, "g[t]");
        assert_eq!(ops.star(&gt, &gt), gt);
        assert!(ops.star(&gt, &chain(&s, "t[t]")).is_zero());
        assert!(ops.star(&chain(&s, "t[]"), &gt).is_zero());
    }

    #[test]
    fn bracket_examples() {
        let s = sphere2();
        let conv = Conventions::default();
        let ops = StringOps::new(&s, &conv);
        let gt = chain(&s, "g[t]");
        let tt = chain(&s, "t[t]");
        let br = ops.lie_bracket(&gt, &tt).unwrap();
        assert_eq!(crate::barcomplex::render_chain(&s, &br), "- t[t]");
        assert!(ops.lie_bracket(&gt, &gt).unwrap().is_zero());
        assert!(ops.lie_bracket(&Chain::zero(), &tt).unwrap().is_zero());
    }

    #[test]
    fn vee_examples() {
        let s = sphere2();
        let conv = Conventions::default();
        let ops = StringOps::new(&s, &conv);
        assert!(ops.vee(&chain(&s, "t[t|t]")).is_zero());
        assert!(ops.vee(&chain(&s, "g[t]")).is_zero());
        let v = ops.vee(&chain(&s, "t[t|t|t]"));
        assert_eq!(
            render_tensor_chain(&s, &v),
            "- g[t] (x) t[t] - t[t] (x) g[t]"
        );
        let v2 = ops.vee(&chain(&s, "g[t|t|t]"));
        assert_eq!(render_tensor_chain(&s, &v2), "- g[t] (x) g[t]");
    }

    #[test]
    fn vee_iterate_letter_counting() {
        let s = sphere2();
        let conv = Conventions::default();
        let ops = StringOps::new(&s, &conv);
        let a = chain(&s, "t[t|t|t]");
        assert_eq!(ops.vee_iterate(&a, 2), ops.vee(&a));
        assert!(ops.vee_iterate(&a, 3).is_zero());
        // fewer than 2k-1 letters forces zero
        let b = chain(&s, "g[t|t|t|t]");
        assert!(ops.vee_iterate(&b, 3).is_zero());
        let c = chain(&s, "g[t|t|t|t|t]");
        assert!(!ops.vee_iterate(&c, 3).is_zero());
    }

    #[test]
    fn h_swap_examples() {
        let s = sphere2();
        let conv = Conventions::default();
        let ops = StringOps::new(&s, &conv);
        assert!(ops.h_swap(&chain(&s, "t[t|t|t]")).is_zero());
        assert!(ops.h_swap(&chain(&s, "g[t]")).is_zero());
        // the two surviving pairs carry opposite signs and cancel
        assert!(ops.h_swap(&chain(&s, "g[t|t|t|t]")).is_zero());
        // unprojected, the pairs survive individually
        let raw = ops.h_swap_raw(&chain(&s, "g[t|t|t|t]"));
        assert!(!raw.is_zero());
    }

    #[test]
    fn cobracket_skew() {
        let s = sphere2();
        let conv = Conventions::default();
        let ops = StringOps::new(&s, &conv);
        for sdeg in 4..=8 {
            for w in crate::barcomplex::enumerate_basis(&s, ComplexKind::ReducedHochschild, sdeg)
            {
                let c = Chain::word(w);
                let sv = ops.cobracket_s(&c);
                let swapped = ops.tau_sym(&sv);
                let sum = sv.sub(&swapped.scaled(&-Rat::one()));
                assert!(sum.is_zero(), "cobracket must be skew under its swap");
            }
        }
        assert!(ops.cobracket_s(&chain(&s, "t[t|t|t]")).is_zero());
    }

    #[test]
    fn homotopy_gates() {
        let s = sphere2();
        let conv = Conventions::default();
        let ops = StringOps::new(&s, &conv);
        let tt = chain(&s, "t[t]");
        assert!(ops.homotopy_bv(&tt, &tt).unwrap().is_zero());
        // both arguments under two letters kill both summands
        let gt = chain(&s, "g[t]");
        assert!(ops.homotopy_bv(&gt, &gt).unwrap().is_zero());
        assert!(ops
            .homotopy_assoc3(&gt, &gt, &chain(&s, "g[t]"))
            .unwrap()
            .is_zero());
        assert!(ops.homotopy_theta(&chain(&s, "t[t|t|t]")).is_zero());
        assert!(ops.homotopy_theta(&chain(&s, "g[t|t]")).is_zero());
        assert!(ops.homotopy_cogerst(&chain(&s, "g[t|t|t|t]")).is_zero());
        assert!(ops.homotopy_cogerst(&chain(&s, "g[t|t|t]")).is_zero());
    }

    #[test]
    fn shuffle_counts() {
        let s = sphere2();
        let conv = Conventions::default();
        let ops = StringOps::new(&s, &conv);
        let gt = chain(&s, "g[t]");
        let t3 = TensorChain::pair(&gt, &gt);
        // rest = 0: identity
        let same = ops.shuffle_2_into(&t3, 0);
        assert_eq!(same, t3);
        // one extra factor: three interleavings
        let mut t = TensorChain::zero(3);
        let w = parse_word(&s, "g[t]").unwrap();
        let v = parse_word(&s, "t[t]").unwrap();
        let u = parse_word(&s, "g[t|t]").unwrap();
        t.add(vec![(w, 0), (v, 0), (u, 0)], Rat::one());
        let sh = ops.shuffle_2_into(&t, 1);
        assert_eq!(sh.len(), 3);
    }

    #[test]
    fn derived_bracket_matches_binary_form() {
        let s = sphere2();
        let conv = Conventions::default();
        let ops = StringOps::new(&s, &conv);
        let kind = ComplexKind::FullHochschild;
        // cycles: g[t] (degree 1) and t[] (degree 2)
        let a = chain(&s, "g[t]");
        let b = chain(&s, "t[]");
        let lhs = ops.derived_bracket(kind, &[a.clone(), b.clone()]).unwrap();
        // (-1)^{s(a)} B(ab) - (-1)^{s(a)} B(a).b - a.B(b), shifted degrees
        let sa = ops.shifted_degree(1);
        let ss = sign(sa);
        let mut rhs = connes_for(&s, kind, &ops.bullet(&a, &b)).scaled(&ss);
        rhs.add_chain(
            &ops.bullet(&connes_for(&s, kind, &a), &b),
            &-ss.clone(),
        );
        rhs.add_chain(&ops.bullet(&a, &connes_for(&s, kind, &b)), &-Rat::one());
        assert_eq!(lhs, rhs);
        // non-cycle input is rejected
        assert!(ops
            .derived_bracket(kind, &[chain(&s, "t[t]"), b.clone()])
            .is_err());
    }
}
