//! Degree-window homology of the four complexes and their tensor
//! powers, the two maps of the Connes exact sequence, induced maps of
//! chain operators and exact boundary-membership tests.
//!
//! Matrices are assembled blockwise per degree; an output term landing
//! outside the expected degree slice is rejected, which catches sign
//! and degree bugs in the operators early.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::barcomplex::{
    cyclic_degree, cyclic_differential, differential_for, enumerate_basis, Chain, ComplexKind,
    CyclicChain, CyclicWord,
};
use crate::conventions::{is_odd, Conventions};
use crate::exactlin::{
    express_in, image_basis, kernel_basis, quotient_dimension, solve_linear, LinAlgError, Rat,
    SparseMatrix, SubspaceBasis,
};
use crate::frobenius::FrobeniusModel;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("linear algebra failure: {0}")]
    LinAlg(#[from] LinAlgError),
    #[error("differential output `{term}` escapes the degree-{degree} slice")]
    CrossDegree { term: String, degree: i64 },
    #[error("chain is not homogeneous of degree {0}")]
    NotHomogeneous(i64),
    #[error("input is not a cycle (witness term `{0}`)")]
    NotACycle(String),
    #[error("operator fails the chain-map spot check at representative {0}")]
    ChainMapFailed(String),
    #[error("broken chain complex: boundaries are not cycles at degree {0}")]
    BrokenComplex(i64),
}

/// Inclusive degree window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeWindow {
    pub min: i64,
    pub max: i64,
}

impl DegreeWindow {
    pub fn new(min: i64, max: i64) -> Self {
        assert!(min <= max, "window min must not exceed max");
        DegreeWindow { min, max }
    }

    pub fn upto(max: i64) -> Self {
        DegreeWindow { min: 0, max }
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.min..=self.max
    }
}

/// A complex the engine can decompose: one of the four kinds, possibly
/// a tensor power of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpaceId {
    pub kind: ComplexKind,
    pub arity: usize,
}

impl SpaceId {
    pub fn single(kind: ComplexKind) -> Self {
        SpaceId { kind, arity: 1 }
    }

    pub fn tensor(kind: ComplexKind, arity: usize) -> Self {
        assert!(arity >= 1);
        SpaceId { kind, arity }
    }
}

/// Basis element of a (tensor power of a) complex: one
/// (word, u-power) per factor; the u-power is zero in the
/// non-cyclic kinds.
pub type TElem = Vec<CyclicWord>;

pub fn telem_degree(model: &FrobeniusModel, e: &TElem) -> i64 {
    e.iter().map(|cw| cyclic_degree(model, cw)).sum()
}

/// Sparse chain at the tensor level.
pub type TChain = BTreeMap<TElem, Rat>;

pub fn tchain_add(target: &mut TChain, e: TElem, c: Rat) {
    if c.is_zero() {
        return;
    }
    match target.entry(e) {
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

pub fn chain_to_tchain(c: &Chain) -> TChain {
    let mut out = TChain::new();
    for (w, r) in c.iter() {
        tchain_add(&mut out, vec![(w.clone(), 0)], r.clone());
    }
    out
}

pub fn cyclic_to_tchain(c: &CyclicChain) -> TChain {
    let mut out = TChain::new();
    for (cw, r) in c.iter() {
        tchain_add(&mut out, vec![cw.clone()], r.clone());
    }
    out
}

fn factor_differential(
    model: &FrobeniusModel,
    kind: ComplexKind,
    cw: &CyclicWord,
) -> Vec<(CyclicWord, Rat)> {
    if kind.is_cyclic() {
        let mut c = CyclicChain::zero();
        c.add(cw.clone(), Rat::one());
        cyclic_differential(model, kind, &c)
            .iter()
            .map(|(w, r)| (w.clone(), r.clone()))
            .collect()
    } else {
        let chain = differential_for(model, kind, &Chain::word(cw.0.clone()));
        chain.iter().map(|(w, r)| ((w.clone(), 0), r.clone())).collect()
    }
}

/// Total differential of a tensor power: factorwise with Koszul passes
/// over the preceding factors.
pub fn tensor_differential(
    model: &FrobeniusModel,
    conv: &Conventions,
    id: SpaceId,
    e: &TElem,
) -> Vec<(TElem, Rat)> {
    let mut out: TChain = TChain::new();
    let mut prefix = 0i64;
    for i in 0..id.arity {
        let pass = prefix + (i as i64) * conv.dpass.eval(model.m);
        let s = if is_odd(pass) { -Rat::one() } else { Rat::one() };
        for (cw, r) in factor_differential(model, id.kind, &e[i]) {
            let mut term = e.clone();
            term[i] = cw;
            tchain_add(&mut out, term, r * &s);
        }
        prefix += cyclic_degree(model, &e[i]);
    }
    out.into_iter().collect()
}

fn factor_basis(model: &FrobeniusModel, kind: ComplexKind, d: i64) -> Vec<CyclicWord> {
    if kind.is_cyclic() {
        crate::barcomplex::enumerate_cyclic_basis(model, kind, d)
    } else {
        enumerate_basis(model, kind, d).into_iter().map(|w| (w, 0)).collect()
    }
}

/// Basis of the degree slice of a tensor power: compositions of the
/// degree over factors, each factor at least the minimal word degree.
pub fn enumerate_telem(model: &FrobeniusModel, id: SpaceId, degree: i64) -> Vec<TElem> {
    fn rec(
        model: &FrobeniusModel,
        id: SpaceId,
        min: i64,
        remaining: i64,
        factor: usize,
        current: &mut Vec<CyclicWord>,
        out: &mut Vec<TElem>,
    ) {
        if factor == id.arity {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let tail_min = min * (id.arity - factor - 1) as i64;
        let mut d = min;
        while d <= remaining - tail_min {
            for cw in factor_basis(model, id.kind, d) {
                current.push(cw);
                rec(model, id, min, remaining - d, factor + 1, current, out);
                current.pop();
            }
            d += 1;
        }
    }
    let min = if id.kind.is_reduced() { 1 } else { 0 };
    let mut out = Vec::new();
    let mut current: Vec<CyclicWord> = Vec::new();
    if degree < 0 {
        return out;
    }
    rec(model, id, min, degree, 0, &mut current, &mut out);
    out.sort();
    out
}

/// Cycle/boundary decomposition of one degree slice, with deterministic
/// representatives for the quotient.
#[derive(Debug)]
pub struct Decomposition {
    pub id: SpaceId,
    pub degree: i64,
    pub basis: Vec<TElem>,
    index: BTreeMap<TElem, usize>,
    pub cycles: SubspaceBasis,
    pub boundaries: SubspaceBasis,
    /// Representative cycle vectors spanning the quotient, reduced
    /// against the boundary basis.
    pub reps: Vec<Vec<Rat>>,
    /// The incoming differential, for boundary witnesses.
    pub incoming: SparseMatrix,
    pub incoming_basis: Vec<TElem>,
}

impl Decomposition {
    pub fn betti(&self) -> usize {
        self.reps.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, e: &TElem) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Coordinates of a tensor chain in this slice; terms outside the
    /// slice are degree errors.
    pub fn vector_of(
        &self,
        model: &FrobeniusModel,
        chain: &TChain,
    ) -> Result<Vec<Rat>, HomologyError> {
        let mut v = vec![Rat::zero(); self.basis.len()];
        for (e, c) in chain {
            let Some(i) = self.index_of(e) else {
                return Err(HomologyError::CrossDegree {
                    term: format!("{e:?} (degree {})", telem_degree(model, e)),
                    degree: self.degree,
                });
            };
            v[i] += c;
        }
        Ok(v)
    }

    pub fn is_cycle(&self, v: &[Rat]) -> Result<bool, HomologyError> {
        Ok(self.cycles.contains(v)?)
    }

    /// Expresses a cycle vector as boundary + combination of the chosen
    /// representatives; returns the representative coordinates.
    pub fn class_coordinates(&self, v: &[Rat]) -> Result<Option<Vec<Rat>>, HomologyError> {
        if !self.cycles.contains(v)? {
            return Ok(None);
        }
        let mut spanning: Vec<Vec<Rat>> = self.boundaries.vectors().to_vec();
        spanning.extend(self.reps.iter().cloned());
        let coeffs = express_in(v, &spanning)?
            .expect("cycles decompose as boundaries plus representatives");
        Ok(Some(coeffs[self.boundaries.dimension()..].to_vec()))
    }

    pub fn rep_vector(&self, class_index: usize) -> &[Rat] {
        &self.reps[class_index]
    }
}

/// One homology class: a degree, an index into the window decomposition
/// and the representing cycle vector.
#[derive(Debug, Clone)]
pub struct HomologyClass {
    pub kind: ComplexKind,
    pub degree: i64,
    pub index: usize,
}

/// Betti numbers per (kind, degree).
#[derive(Debug, Clone, Serialize)]
pub struct BettiTable {
    pub model: String,
    pub rows: Vec<BettiRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiRow {
    pub degree: i64,
    pub kind: &'static str,
    pub dimension: usize,
}

impl BettiTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&format!("{},{},{}\n", r.degree, r.kind, r.dimension));
        }
        out
    }
}

/// Homology engine with a per-(space, degree) decomposition cache.
pub struct HomologyEngine<'a> {
    pub model: &'a FrobeniusModel,
    pub conv: Conventions,
    cache: Mutex<BTreeMap<(SpaceId, i64), Arc<Decomposition>>>,
}

impl<'a> HomologyEngine<'a> {
    pub fn new(model: &'a FrobeniusModel, conv: Conventions) -> Self {
        HomologyEngine { model, conv, cache: Mutex::new(BTreeMap::new()) }
    }

    fn assemble(
        &self,
        id: SpaceId,
        src: &[TElem],
        dst: &[TElem],
        dst_degree: i64,
    ) -> Result<SparseMatrix, HomologyError> {
        let index: BTreeMap<&TElem, usize> = dst.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut m = SparseMatrix::new(dst.len(), src.len());
        for (j, e) in src.iter().enumerate() {
            for (term, c) in tensor_differential(self.model, &self.conv, id, e) {
                let Some(&i) = index.get(&term) else {
                    return Err(HomologyError::CrossDegree {
                        term: format!("{term:?} (degree {})", telem_degree(self.model, &term)),
                        degree: dst_degree,
                    });
                };
                m.add(i, j, c)?;
            }
        }
        Ok(m)
    }

    /// Full cycle/boundary decomposition of one degree slice.
    pub fn decomposition(
        &self,
        id: SpaceId,
        degree: i64,
    ) -> Result<Arc<Decomposition>, HomologyError> {
        if let Some(d) = self.cache.lock().unwrap().get(&(id, degree)) {
            return Ok(d.clone());
        }
        let basis = enumerate_telem(self.model, id, degree);
        let below = enumerate_telem(self.model, id, degree - 1);
        let above = enumerate_telem(self.model, id, degree + 1);
        let outgoing = self.assemble(id, &basis, &below, degree - 1)?;
        let incoming = self.assemble(id, &above, &basis, degree)?;
        let cycles = kernel_basis(&outgoing);
        let boundaries = image_basis(&incoming);
        // boundaries must be cycles; a failure means the complex is broken
        quotient_dimension(&cycles, &boundaries)
            .map_err(|_| HomologyError::BrokenComplex(degree))?;
        let mut reps = Vec::new();
        let mut reducer = boundaries.clone();
        for v in cycles.vectors() {
            let reduced = reducer.reduce(v)?;
            if reduced.iter().any(|x| !x.is_zero()) {
                reducer.insert(reduced.clone())?;
                reps.push(reduced);
            }
        }
        let index = basis.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let decomp = Arc::new(Decomposition {
            id,
            degree,
            basis,
            index,
            cycles,
            boundaries,
            reps,
            incoming,
            incoming_basis: above,
        });
        self.cache.lock().unwrap().insert((id, degree), decomp.clone());
        Ok(decomp)
    }

    /// Betti table plus class handles over a window.
    pub fn homology(
        &self,
        kind: ComplexKind,
        window: DegreeWindow,
    ) -> Result<(BettiTable, Vec<HomologyClass>), HomologyError> {
        let mut rows = Vec::new();
        let mut classes = Vec::new();
        for degree in window.iter() {
            if degree < 0 {
                rows.push(BettiRow { degree, kind: kind.name(), dimension: 0 });
                continue;
            }
            let d = self.decomposition(SpaceId::single(kind), degree)?;
            rows.push(BettiRow { degree, kind: kind.name(), dimension: d.betti() });
            for index in 0..d.betti() {
                classes.push(HomologyClass { kind, degree, index });
            }
        }
        Ok((BettiTable { model: self.model.name.clone(), rows }, classes))
    }

    /// The representative of a class in its natural container type.
    pub fn rep_chain(&self, class: &HomologyClass) -> Result<Chain, HomologyError> {
        assert!(!class.kind.is_cyclic());
        let d = self.decomposition(SpaceId::single(class.kind), class.degree)?;
        let v = d.rep_vector(class.index);
        let mut out = Chain::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add(d.basis[i][0].0.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn rep_cyclic(&self, class: &HomologyClass) -> Result<CyclicChain, HomologyError> {
        assert!(class.kind.is_cyclic());
        let d = self.decomposition(SpaceId::single(class.kind), class.degree)?;
        let v = d.rep_vector(class.index);
        let mut out = CyclicChain::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add(d.basis[i][0].clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Class coordinates of a Hochschild cycle; `None` when not a cycle.
    pub fn chain_class(
        &self,
        kind: ComplexKind,
        degree: i64,
        c: &Chain,
    ) -> Result<Option<Vec<Rat>>, HomologyError> {
        let d = self.decomposition(SpaceId::single(kind), degree)?;
        let v = d.vector_of(self.model, &chain_to_tchain(c))?;
        d.class_coordinates(&v)
    }

    pub fn cyclic_class(
        &self,
        kind: ComplexKind,
        degree: i64,
        c: &CyclicChain,
    ) -> Result<Option<Vec<Rat>>, HomologyError> {
        let d = self.decomposition(SpaceId::single(kind), degree)?;
        let v = d.vector_of(self.model, &cyclic_to_tchain(c))?;
        d.class_coordinates(&v)
    }

    /// Exact boundary decision with witness: some `w` with `d(w) = c`.
    pub fn is_boundary(
        &self,
        kind: ComplexKind,
        c: &Chain,
    ) -> Result<Option<Chain>, HomologyError> {
        if c.is_zero() {
            return Ok(Some(Chain::zero()));
        }
        let Some(degree) = c.degree(self.model) else {
            return Err(HomologyError::NotHomogeneous(0));
        };
        let d = self.decomposition(SpaceId::single(kind), degree)?;
        let v = d.vector_of(self.model, &chain_to_tchain(c))?;
        if !d.is_cycle(&v)? {
            let witness = c.iter().next().map(|(w, _)| format!("{w:?}")).unwrap_or_default();
            return Err(HomologyError::NotACycle(witness));
        }
        let Some(x) = solve_linear(&d.incoming, &v)? else {
            return Ok(None);
        };
        let mut out = Chain::zero();
        for (i, coeff) in x.iter().enumerate() {
            if !coeff.is_zero() {
                out.add(d.incoming_basis[i][0].0.clone(), coeff.clone());
            }
        }
        Ok(Some(out))
    }

    /// Boundary decision in any tensor space.
    pub fn tchain_is_boundary(
        &self,
        id: SpaceId,
        degree: i64,
        chain: &TChain,
    ) -> Result<bool, HomologyError> {
        if chain.is_empty() {
            return Ok(true);
        }
        let d = self.decomposition(id, degree)?;
        let v = d.vector_of(self.model, chain)?;
        Ok(d.boundaries.contains(&v)?)
    }

    /// Inclusion-induced map at `u^0`: a Hochschild representative
    /// becomes a cyclic cycle.
    pub fn map_e(&self, c: &Chain) -> CyclicChain {
        CyclicChain::from_chain(c, 0)
    }

    /// Connecting map of the cyclic short exact sequence, computed by
    /// the diagram chase: lift by u, differentiate, read off the
    /// Hochschild component. On a cycle this is the Connes operator
    /// applied to the u^0 coefficient.
    pub fn map_m(&self, kind: ComplexKind, z: &CyclicChain) -> Chain {
        let lifted = z.shift_up();
        let dlift = cyclic_differential(self.model, kind, &lifted);
        // every positive u-power cancels for a cycle; the u^0 part is B(z_0)
        dlift.coefficient_of(0)
    }

    /// The degree -2 periodicity map `u^{-1}` on cyclic chains.
    pub fn periodicity(&self, z: &CyclicChain) -> CyclicChain {
        let mut out = CyclicChain::zero();
        for ((w, p), c) in z.iter() {
            if *p > 0 {
                out.add((w.clone(), p - 1), c.clone());
            }
        }
        out
    }

    /// Matrix of a chain operator on homology: evaluates on class
    /// representatives, spot-checks that the output is a cycle, and
    /// re-expresses in the target class basis. Entry `(i, j)` is the
    /// coefficient of target class `i` in the image of source class `j`.
    pub fn induced_map(
        &self,
        src: (ComplexKind, i64),
        dst: (ComplexKind, i64),
        op: &dyn Fn(&Chain) -> Chain,
    ) -> Result<Vec<Vec<Rat>>, HomologyError> {
        let sdec = self.decomposition(SpaceId::single(src.0), src.1)?;
        let ddec = self.decomposition(SpaceId::single(dst.0), dst.1)?;
        let mut cols = Vec::new();
        for j in 0..sdec.betti() {
            let class = HomologyClass { kind: src.0, degree: src.1, index: j };
            let rep = self.rep_chain(&class)?;
            let out = op(&rep);
            if !out.is_zero() {
                let db = differential_for(self.model, dst.0, &out);
                if !db.is_zero() {
                    let witness = crate::barcomplex::render_chain(self.model, &rep);
                    return Err(HomologyError::ChainMapFailed(witness));
                }
            }
            let v = ddec.vector_of(self.model, &chain_to_tchain(&out))?;
            let coords = ddec
                .class_coordinates(&v)?
                .expect("cycle output has class coordinates");
            cols.push(coords);
        }
        let mut matrix = vec![vec![Rat::zero(); sdec.betti()]; ddec.betti()];
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col.iter().enumerate() {
                matrix[i][j] = c.clone();
            }
        }
        Ok(matrix)
    }

    /// Euler bookkeeping over `[0, max]`: the alternating sum of slice
    /// dimensions equals the alternating sum of Betti numbers plus the
    /// boundary-rank correction at the window edge.
    pub fn euler_consistent(
        &self,
        kind: ComplexKind,
        max: i64,
    ) -> Result<bool, HomologyError> {
        let mut chi_slice = 0i64;
        let mut chi_betti = 0i64;
        for degree in 0..=max {
            let d = self.decomposition(SpaceId::single(kind), degree)?;
            let sgn = if degree % 2 == 0 { 1 } else { -1 };
            chi_slice += sgn * d.dim() as i64;
            chi_betti += sgn * d.betti() as i64;
        }
        let edge = self.decomposition(SpaceId::single(kind), max)?;
        let correction = edge.boundaries.dimension() as i64 * if max % 2 == 0 { 1 } else { -1 };
        Ok(chi_slice == chi_betti + correction)
    }
}

/// dim H_k of the coefficient complex (C, d) itself.
pub fn model_homology_dimension(model: &FrobeniusModel, k: i64) -> usize {
    let slice: Vec<usize> = (0..model.dim()).filter(|&i| model.degree(i) == k).collect();
    let below: Vec<usize> = (0..model.dim()).filter(|&i| model.degree(i) == k - 1).collect();
    let above: Vec<usize> = (0..model.dim()).filter(|&i| model.degree(i) == k + 1).collect();
    let bindex: BTreeMap<usize, usize> = below.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let sindex: BTreeMap<usize, usize> = slice.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let mut out = SparseMatrix::new(below.len(), slice.len());
    for (j, &e) in slice.iter().enumerate() {
        for (t, c) in model.d(e) {
            out.add(bindex[t], j, c.clone()).expect("homogeneous differential");
        }
    }
    let mut inc = SparseMatrix::new(slice.len(), above.len());
    for (j, &e) in above.iter().enumerate() {
        for (t, c) in model.d(e) {
            inc.add(sindex[t], j, c.clone()).expect("homogeneous differential");
        }
    }
    kernel_basis(&out).dimension() - image_basis(&inc).dimension()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barcomplex::{connes_for, parse_word};
    use crate::frobenius::{acyclic_pair_model, builtin_sphere, builtin_trivial};

    fn engine(model: &FrobeniusModel) -> HomologyEngine<'_> {
        HomologyEngine::new(model, Conventions::default())
    }

    #[test]
    fn sphere2_full_hochschild_table() {
        let model = builtin_sphere(2).unwrap();
        let eng = engine(&model);
        let (table, _) = eng.homology(ComplexKind::FullHochschild, DegreeWindow::upto(10)).unwrap();
        let dims: Vec<usize> = table.rows.iter().map(|r| r.dimension).collect();
        assert_eq!(dims, vec![1; 11], "free loop space of the 2-sphere has one class per degree");
    }

    #[test]
    fn sphere2_reduced_hochschild_table() {
        let model = builtin_sphere(2).unwrap();
        let eng = engine(&model);
        let (table, _) =
            eng.homology(ComplexKind::ReducedHochschild, DegreeWindow::upto(8)).unwrap();
        let dims: Vec<usize> = table.rows.iter().map(|r| r.dimension).collect();
        assert_eq!(dims, vec![0, 1, 0, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn sphere3_tables() {
        let model = builtin_sphere(3).unwrap();
        let eng = engine(&model);
        let (table, _) = eng.homology(ComplexKind::FullHochschild, DegreeWindow::upto(10)).unwrap();
        let dims: Vec<usize> = table.rows.iter().map(|r| r.dimension).collect();
        assert_eq!(dims, vec![1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn trivial_model_collapses() {
        let model = builtin_trivial();
        let eng = engine(&model);
        let (full, _) = eng.homology(ComplexKind::FullHochschild, DegreeWindow::upto(5)).unwrap();
        assert_eq!(
            full.rows.iter().map(|r| r.dimension).collect::<Vec<_>>(),
            vec![1, 0, 0, 0, 0, 0]
        );
        let (red, _) = eng.homology(ComplexKind::ReducedHochschild, DegreeWindow::upto(5)).unwrap();
        assert!(red.rows.iter().all(|r| r.dimension == 0));
    }

    #[test]
    fn reduced_full_difference_is_model_homology() {
        for model in [
            builtin_sphere(2).unwrap(),
            builtin_sphere(3).unwrap(),
            acyclic_pair_model(),
        ] {
            let eng = engine(&model);
            for k in 0..=8i64 {
                let full = eng
                    .decomposition(SpaceId::single(ComplexKind::FullHochschild), k)
                    .unwrap()
                    .betti();
                let red = eng
                    .decomposition(SpaceId::single(ComplexKind::ReducedHochschild), k)
                    .unwrap()
                    .betti();
                assert_eq!(
                    full - red,
                    model_homology_dimension(&model, k),
                    "degree {k} of {}",
                    model.name
                );
            }
        }
    }

    #[test]
    fn boundary_witness() {
        let model = builtin_sphere(2).unwrap();
        let eng = engine(&model);
        let g_tt = Chain::word(parse_word(&model, "g[t|t]").unwrap());
        let doubled = g_tt.scaled(&(Rat::one() + Rat::one()));
        let w = eng
            .is_boundary(ComplexKind::FullHochschild, &doubled)
            .unwrap()
            .expect("2 g[t|t] is a boundary");
        let check = differential_for(&model, ComplexKind::FullHochschild, &w);
        assert_eq!(check, doubled);
        // 0 has witness 0
        assert_eq!(
            eng.is_boundary(ComplexKind::FullHochschild, &Chain::zero()).unwrap(),
            Some(Chain::zero())
        );
        // a representative of a nonzero class is not a boundary
        let t = Chain::word(parse_word(&model, "t[]").unwrap());
        assert!(eng.is_boundary(ComplexKind::FullHochschild, &t).unwrap().is_none());
        // non-cycle input is an error
        let tt = Chain::word(parse_word(&model, "t[t]").unwrap());
        assert!(matches!(
            eng.is_boundary(ComplexKind::FullHochschild, &tt),
            Err(HomologyError::NotACycle(_))
        ));
    }

    #[test]
    fn connecting_map_is_connes_after_inclusion() {
        let model = builtin_sphere(2).unwrap();
        let eng = engine(&model);
        for degree in 0..=8 {
            let (_, classes) = eng
                .homology(ComplexKind::FullHochschild, DegreeWindow::new(degree, degree))
                .unwrap();
            for class in classes {
                let rep = eng.rep_chain(&class).unwrap();
                let e = eng.map_e(&rep);
                let me = eng.map_m(ComplexKind::FullCyclic, &e);
                let b = connes_for(&model, ComplexKind::FullHochschild, &rep);
                assert_eq!(me, b, "M(E(x)) = B(x) at chain level");
            }
        }
    }

    #[test]
    fn euler_bookkeeping() {
        for model in [builtin_sphere(2).unwrap(), acyclic_pair_model()] {
            let eng = engine(&model);
            for kind in [ComplexKind::FullHochschild, ComplexKind::ReducedHochschild] {
                assert!(eng.euler_consistent(kind, 8).unwrap());
            }
        }
    }

    #[test]
    fn tensor_slices_and_differential() {
        let model = builtin_sphere(2).unwrap();
        let eng = engine(&model);
        let id = SpaceId::tensor(ComplexKind::ReducedHochschild, 2);
        let basis4 = enumerate_telem(&model, id, 4);
        // degrees (1,3),(2,2),(3,1): t-words and g-words
        assert!(!basis4.is_empty());
        for e in &basis4 {
            assert_eq!(telem_degree(&model, e), 4);
            for (term, _) in tensor_differential(&model, &eng.conv, id, e) {
                assert_eq!(telem_degree(&model, &term), 3);
            }
        }
        // D^2 = 0 on the tensor square
        for e in basis4 {
            let mut dd: TChain = TChain::new();
            for (t1, c1) in tensor_differential(&model, &eng.conv, id, &e) {
                for (t2, c2) in tensor_differential(&model, &eng.conv, id, &t1) {
                    tchain_add(&mut dd, t2, &c1 * &c2);
                }
            }
            assert!(dd.is_empty(), "tensor differential squares to zero");
        }
    }

    #[test]
    fn induced_connes_squares_to_zero() {
        let model = builtin_sphere(2).unwrap();
        let eng = engine(&model);
        for degree in 1..=6 {
            let kind = ComplexKind::FullHochschild;
            let b1 = eng
                .induced_map((kind, degree), (kind, degree + 1), &|c| {
                    connes_for(&model, kind, c)
                })
                .unwrap();
            let b2 = eng
                .induced_map((kind, degree + 1), (kind, degree + 2), &|c| {
                    connes_for(&model, kind, c)
                })
                .unwrap();
            // compose: rows of b2 x columns of b1
            for i in 0..b2.len() {
                for j in 0..b1.first().map(|r| r.len()).unwrap_or(0) {
                    let mut sum = Rat::zero();
                    for k in 0..b1.len() {
                        sum += &b2[i][k] * &b1[k][j];
                    }
                    assert!(sum.is_zero(), "induced B^2 = 0");
                }
            }
        }
    }

    #[test]
    fn representative_perturbation_invariance() {
        let model = builtin_sphere(2).unwrap();
        let eng = engine(&model);
        // class of t[] at degree 2; perturb by the boundary b(t[t]) = 2 g[t|t]
        let t = Chain::word(parse_word(&model, "t[]").unwrap());
        let boundary = differential_for(
            &model,
            ComplexKind::FullHochschild,
            &Chain::word(parse_word(&model, "t[t]").unwrap()),
        );
        let mut perturbed = t.clone();
        perturbed.add_chain(&boundary, &Rat::one());
        let c1 = eng.chain_class(ComplexKind::FullHochschild, 2, &t).unwrap().unwrap();
        let c2 = eng.chain_class(ComplexKind::FullHochschild, 2, &perturbed).unwrap().unwrap();
        assert_eq!(c1, c2);
    }
}
