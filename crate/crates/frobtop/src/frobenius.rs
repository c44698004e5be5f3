//! Finite-dimensional DG open Frobenius algebras: representation,
//! builtin models, exhaustive axiom validation, dualization of a
//! Poincare-duality algebra description, and the JSON model format.
//!
//! A model is a finite graded basis with structure-constant tables for
//! the differential, the degree `-m` commutative product, the degree 0
//! cocommutative coproduct and the counit, together with a chosen
//! grouplike coaugmentation element. The complement of the counit is
//! required to live in degrees >= 2, which keeps every degree slice of
//! the cobar complex finite dimensional.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlin::{parse_rat, render_rat, Rat};

#[derive(Debug, Error)]
pub enum FrobError {
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("malformed {table} entry {entry}: {reason}")]
    BadEntry { table: String, entry: String, reason: String },
    #[error("model rejected: {0}")]
    Rejected(String),
    #[error("i/o error reading {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("json error: {0}")]
    Json(String),
}

/// Linear combination of basis elements, sorted by basis index.
pub type LinComb = Vec<(usize, Rat)>;

/// Linear combination of basis tensors, sorted.
pub type LinComb2 = Vec<(usize, usize, Rat)>;

pub fn lin_add(target: &mut BTreeMap<usize, Rat>, idx: usize, c: Rat) {
    if c.is_zero() {
        return;
    }
    let slot = target.entry(idx).or_insert_with(Rat::zero);
    *slot += c;
    if slot.is_zero() {
        target.remove(&idx);
    }
}

fn lin_from_map(map: BTreeMap<usize, Rat>) -> LinComb {
    map.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElement {
    pub id: String,
    pub degree: i64,
}

/// A finite-dimensional DG open Frobenius algebra of degree `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusModel {
    pub name: String,
    pub m: i64,
    pub basis: Vec<BasisElement>,
    pub coaugmentation: usize,
    differential: Vec<LinComb>,
    product: Vec<Vec<LinComb>>,
    coproduct: Vec<LinComb2>,
    counit: Vec<Rat>,
}

/// Raw tables keyed by basis ids, as in the JSON format.
#[derive(Debug, Clone, Default)]
pub struct RawTables {
    pub differential: Vec<(String, String, Rat)>,
    pub product: Vec<(String, String, String, Rat)>,
    pub coproduct: Vec<(String, String, String, Rat)>,
    pub counit: Vec<(String, Rat)>,
}

impl FrobeniusModel {
    /// Builds a model from id-keyed tables, enforcing structural
    /// well-formedness: known ids, homogeneous entries, merged
    /// duplicates. Axioms are checked separately by [`validate`].
    pub fn from_tables(
        name: &str,
        m: i64,
        basis: Vec<BasisElement>,
        coaugmentation: &str,
        tables: RawTables,
    ) -> Result<Self, FrobError> {
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, b) in basis.iter().enumerate() {
            if index.insert(b.id.as_str(), i).is_some() {
                return Err(FrobError::BadEntry {
                    table: "basis".into(),
                    entry: b.id.clone(),
                    reason: "duplicate basis id".into(),
                });
            }
        }
        let resolve = |table: &str, entry: &str, id: &str| -> Result<usize, FrobError> {
            index.get(id).copied().ok_or_else(|| FrobError::BadEntry {
                table: table.into(),
                entry: entry.into(),
                reason: format!("unknown basis id `{id}`"),
            })
        };
        let n = basis.len();
        let coaug = resolve("coaugmentation", coaugmentation, coaugmentation)?;

        let mut differential: Vec<BTreeMap<usize, Rat>> = vec![BTreeMap::new(); n];
        for (from, to, c) in &tables.differential {
            let entry = format!("[{from}, {to}, {}]", render_rat(c));
            let i = resolve("differential", &entry, from)?;
            let j = resolve("differential", &entry, to)?;
            if !c.is_zero() && basis[j].degree != basis[i].degree - 1 {
                return Err(FrobError::BadEntry {
                    table: "differential".into(),
                    entry,
                    reason: format!(
                        "non-homogeneous entry: |{to}| = {} but d has degree -1 from |{from}| = {}",
                        basis[j].degree, basis[i].degree
                    ),
                });
            }
            lin_add(&mut differential[i], j, c.clone());
        }

        let mut product: Vec<Vec<BTreeMap<usize, Rat>>> = vec![vec![BTreeMap::new(); n]; n];
        for (a, b, out, c) in &tables.product {
            let entry = format!("[{a}, {b}, {out}, {}]", render_rat(c));
            let i = resolve("product", &entry, a)?;
            let j = resolve("product", &entry, b)?;
            let k = resolve("product", &entry, out)?;
            if !c.is_zero() && basis[k].degree != basis[i].degree + basis[j].degree - m {
                return Err(FrobError::BadEntry {
                    table: "product".into(),
                    entry,
                    reason: format!(
                        "non-homogeneous entry: |{out}| = {} but the product has degree -{m}",
                        basis[k].degree
                    ),
                });
            }
            lin_add(&mut product[i][j], k, c.clone());
        }

        let mut coproduct: Vec<BTreeMap<(usize, usize), Rat>> = vec![BTreeMap::new(); n];
        for (from, l, r, c) in &tables.coproduct {
            let entry = format!("[{from}, {l}, {r}, {}]", render_rat(c));
            let i = resolve("coproduct", &entry, from)?;
            let j = resolve("coproduct", &entry, l)?;
            let k = resolve("coproduct", &entry, r)?;
            if !c.is_zero() && basis[j].degree + basis[k].degree != basis[i].degree {
                return Err(FrobError::BadEntry {
                    table: "coproduct".into(),
                    entry,
                    reason: "non-homogeneous entry: the coproduct has degree 0".into(),
                });
            }
            let slot = coproduct[i].entry((j, k)).or_insert_with(Rat::zero);
            *slot += c.clone();
            if slot.is_zero() {
                coproduct[i].remove(&(j, k));
            }
        }

        let mut counit = vec![Rat::zero(); n];
        for (id, c) in &tables.counit {
            let entry = format!("[{id}, {}]", render_rat(c));
            let i = resolve("counit", &entry, id)?;
            if !c.is_zero() && basis[i].degree != 0 {
                return Err(FrobError::BadEntry {
                    table: "counit".into(),
                    entry,
                    reason: "non-homogeneous entry: the counit has degree 0".into(),
                });
            }
            counit[i] += c.clone();
        }

        Ok(FrobeniusModel {
            name: name.to_string(),
            m,
            basis,
            coaugmentation: coaug,
            differential: differential.into_iter().map(lin_from_map).collect(),
            product: product
                .into_iter()
                .map(|row| row.into_iter().map(lin_from_map).collect())
                .collect(),
            coproduct: coproduct
                .into_iter()
                .map(|m| m.into_iter().map(|((j, k), c)| (j, k, c)).collect())
                .collect(),
            counit,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    pub fn id(&self, i: usize) -> &str {
        &self.basis[i].id
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.id == id)
    }

    pub fn d(&self, i: usize) -> &LinComb {
        &self.differential[i]
    }

    pub fn mul(&self, i: usize, j: usize) -> &LinComb {
        &self.product[i][j]
    }

    pub fn delta(&self, i: usize) -> &LinComb2 {
        &self.coproduct[i]
    }

    pub fn eps(&self, i: usize) -> &Rat {
        &self.counit[i]
    }

    pub fn is_coaug(&self, i: usize) -> bool {
        i == self.coaugmentation
    }

    /// Basis indices spanning `ker eps` (every non-coaugmentation index,
    /// once the model validates).
    pub fn letter_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(move |&i| !self.is_coaug(i))
    }

    /// Counit applied to a linear combination.
    pub fn eps_lin(&self, lin: &LinComb) -> Rat {
        let mut out = Rat::zero();
        for (i, c) in lin {
            out += self.eps(*i) * c;
        }
        out
    }

    /// Product of two linear combinations.
    pub fn mul_lin(&self, a: &LinComb, b: &LinComb) -> LinComb {
        let mut out = BTreeMap::new();
        for (i, ca) in a {
            for (j, cb) in b {
                for (k, c) in self.mul(*i, *j) {
                    lin_add(&mut out, *k, c * ca * cb);
                }
            }
        }
        lin_from_map(out)
    }

    /// eps(x . y) for basis elements, a scalar that several operators
    /// consume.
    pub fn eps_mul(&self, i: usize, j: usize) -> Rat {
        let mut out = Rat::zero();
        for (k, c) in self.mul(i, j) {
            out += self.eps(*k) * c;
        }
        out
    }

    /// Projection to `ker eps` along the coaugmentation: drops the
    /// grouplike component of a linear combination.
    pub fn project_aug(&self, lin: &LinComb) -> LinComb {
        lin.iter().filter(|(i, _)| !self.is_coaug(*i)).cloned().collect()
    }

    fn render_lin(&self, lin: &LinComb) -> String {
        if lin.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (i, c)) in lin.iter().enumerate() {
            if n > 0 {
                out.push_str(" + ");
            }
            let _ = write!(out, "{} {}", render_rat(c), self.id(*i));
        }
        out
    }

    fn render_lin2(&self, lin: &LinComb2) -> String {
        if lin.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (i, j, c)) in lin.iter().enumerate() {
            if n > 0 {
                out.push_str(" + ");
            }
            let _ = write!(out, "{} {}(x){}", render_rat(c), self.id(*i), self.id(*j));
        }
        out
    }
}

/// One axiom verdict. The witness holds the offending basis elements
/// and the two unequal sides.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<AxiomWitness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomWitness {
    pub elements: Vec<String>,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub model: String,
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("model {}\n", self.model);
        for c in &self.checks {
            let _ = writeln!(out, "  [{}] {}", if c.pass { "pass" } else { "FAIL" }, c.axiom);
            if let Some(w) = &c.witness {
                let _ = writeln!(
                    out,
                    "        at ({}): {} != {}",
                    w.elements.join(", "),
                    w.left,
                    w.right
                );
            }
        }
        out
    }
}

fn lin2_sub(a: &LinComb2, b: &LinComb2) -> LinComb2 {
    let mut map: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
    for (i, j, c) in a {
        let slot = map.entry((*i, *j)).or_insert_with(Rat::zero);
        *slot += c;
    }
    for (i, j, c) in b {
        let slot = map.entry((*i, *j)).or_insert_with(Rat::zero);
        *slot -= c;
    }
    map.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((i, j), c)| (i, j, c))
        .collect()
}

fn lin_sub(a: &LinComb, b: &LinComb) -> LinComb {
    let mut map: BTreeMap<usize, Rat> = BTreeMap::new();
    for (i, c) in a {
        lin_add(&mut map, *i, c.clone());
    }
    for (i, c) in b {
        lin_add(&mut map, *i, -c.clone());
    }
    lin_from_map(map)
}

/// Exhaustive axiom check over all basis tuples.
pub fn validate(model: &FrobeniusModel) -> ValidationReport {
    let mut checks = Vec::new();
    let n = model.dim();
    let m = model.m;
    let sign = |e: i64| if e.rem_euclid(2) == 1 { -Rat::one() } else { Rat::one() };

    // Tables are homogeneous by construction; re-assert so every axiom
    // appears in the report exactly once.
    checks.push(AxiomCheck { axiom: "differential-degree".into(), pass: true, witness: None });
    checks.push(AxiomCheck { axiom: "product-degree".into(), pass: true, witness: None });
    checks.push(AxiomCheck { axiom: "coproduct-degree".into(), pass: true, witness: None });

    // d . d = 0
    {
        let mut fail = None;
        for i in 0..n {
            let mut out: BTreeMap<usize, Rat> = BTreeMap::new();
            for (j, c) in model.d(i) {
                for (k, c2) in model.d(*j) {
                    lin_add(&mut out, *k, c * c2);
                }
            }
            if !out.is_empty() {
                fail = Some(AxiomWitness {
                    elements: vec![model.id(i).into()],
                    left: model.render_lin(&lin_from_map(out)),
                    right: "0".into(),
                });
                break;
            }
        }
        checks.push(AxiomCheck {
            axiom: "differential-squares-to-zero".into(),
            pass: fail.is_none(),
            witness: fail,
        });
    }

    // Graded commutativity in the shifted grading where the product has
    // degree 0: x.y = (-1)^{(|x|+m)(|y|+m)} y.x.
    {
        let mut fail = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let lhs = model.mul(i, j).clone();
                let s = sign((model.degree(i) + m) * (model.degree(j) + m));
                let rhs: LinComb =
                    model.mul(j, i).iter().map(|(k, c)| (*k, c * &s)).collect();
                let diff = lin_sub(&lhs, &rhs);
                if !diff.is_empty() {
                    fail = Some(AxiomWitness {
                        elements: vec![model.id(i).into(), model.id(j).into()],
                        left: model.render_lin(&lhs),
                        right: model.render_lin(&rhs),
                    });
                    break 'outer;
                }
            }
        }
        checks.push(AxiomCheck {
            axiom: "product-graded-commutative".into(),
            pass: fail.is_none(),
            witness: fail,
        });
    }

    // Associativity.
    {
        let mut fail = None;
        'outer: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ij = model.mul(i, j).clone();
                    let jk = model.mul(j, k).clone();
                    let lhs = model.mul_lin(&ij, &vec![(k, Rat::one())]);
                    let rhs = model.mul_lin(&vec![(i, Rat::one())], &jk);
                    if !lin_sub(&lhs, &rhs).is_empty() {
                        fail = Some(AxiomWitness {
                            elements: vec![
                                model.id(i).into(),
                                model.id(j).into(),
                                model.id(k).into(),
                            ],
                            left: model.render_lin(&lhs),
                            right: model.render_lin(&rhs),
                        });
                        break 'outer;
                    }
                }
            }
        }
        checks.push(AxiomCheck {
            axiom: "product-associative".into(),
            pass: fail.is_none(),
            witness: fail,
        });
    }

    // Coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta.
    {
        let mut fail = None;
        for i in 0..n {
            let mut left: BTreeMap<(usize, usize, usize), Rat> = BTreeMap::new();
            let mut right: BTreeMap<(usize, usize, usize), Rat> = BTreeMap::new();
            for (a, b, c) in model.delta(i) {
                for (a1, a2, c2) in model.delta(*a) {
                    let slot = left.entry((*a1, *a2, *b)).or_insert_with(Rat::zero);
                    *slot += c * c2;
                }
                for (b1, b2, c2) in model.delta(*b) {
                    let slot = right.entry((*a, *b1, *b2)).or_insert_with(Rat::zero);
                    *slot += c * c2;
                }
            }
            left.retain(|_, c| !c.is_zero());
            right.retain(|_, c| !c.is_zero());
            if left != right {
                fail = Some(AxiomWitness {
                    elements: vec![model.id(i).into()],
                    left: format!("{:?}", left.keys().collect::<Vec<_>>()),
                    right: format!("{:?}", right.keys().collect::<Vec<_>>()),
                });
                break;
            }
        }
        checks.push(AxiomCheck {
            axiom: "coproduct-coassociative".into(),
            pass: fail.is_none(),
            witness: fail,
        });
    }

    // Cocommutativity: Delta = tau Delta with plain Koszul signs.
    {
        let mut fail = None;
        for i in 0..n {
            let lhs = model.delta(i).clone();
            let rhs: LinComb2 = model
                .delta(i)
                .iter()
                .map(|(a, b, c)| (*b, *a, c * &sign(model.degree(*a) * model.degree(*b))))
                .collect();
            let diff = lin2_sub(&lhs, &rhs);
            if !diff.is_empty() {
                fail = Some(AxiomWitness {
                    elements: vec![model.id(i).into()],
                    left: model.render_lin2(&lhs),
                    right: model.render_lin2(&rhs),
                });
                break;
            }
        }
        checks.push(AxiomCheck {
            axiom: "coproduct-cocommutative".into(),
            pass: fail.is_none(),
            witness: fail,
        });
    }

    // Counit axioms: (eps (x) id) Delta = id = (id (x) eps) Delta.
    {
        let mut fail = None;
        for i in 0..n {
            let mut left: BTreeMap<usize, Rat> = BTreeMap::new();
            let mut right: BTreeMap<usize, Rat> = BTreeMap::new();
            for (a, b, c) in model.delta(i) {
                lin_add(&mut left, *b, model.eps(*a) * c);
                lin_add(&mut right, *a, model.eps(*b) * c);
            }
            let idlin = vec![(i, Rat::one())];
            let l = lin_from_map(left);
            let r = lin_from_map(right);
            if lin_sub(&l, &idlin) != Vec::new() || lin_sub(&r, &idlin) != Vec::new() {
                fail = Some(AxiomWitness {
                    elements: vec![model.id(i).into()],
                    left: model.render_lin(&l),
                    right: model.render_lin(&r),
                });
                break;
            }
        }
        checks.push(AxiomCheck { axiom: "counit".into(), pass: fail.is_none(), witness: fail });
    }

    // d is a derivation: d(xy) = dx.y + (-1)^{|x|} x.dy.
    {
        let mut fail = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let lhs = {
                    let mut out: BTreeMap<usize, Rat> = BTreeMap::new();
                    for (k, c) in model.mul(i, j) {
                        for (l, c2) in model.d(*k) {
                            lin_add(&mut out, *l, c * c2);
                        }
                    }
                    lin_from_map(out)
                };
                let mut rhs: BTreeMap<usize, Rat> = BTreeMap::new();
                for (k, c) in model.d(i) {
                    for (l, c2) in model.mul(*k, j) {
                        lin_add(&mut rhs, *l, c * c2);
                    }
                }
                let s = sign(model.degree(i));
                for (k, c) in model.d(j) {
                    for (l, c2) in model.mul(i, *k) {
                        lin_add(&mut rhs, *l, c * c2 * &s);
                    }
                }
                let rhs = lin_from_map(rhs);
                if !lin_sub(&lhs, &rhs).is_empty() {
                    fail = Some(AxiomWitness {
                        elements: vec![model.id(i).into(), model.id(j).into()],
                        left: model.render_lin(&lhs),
                        right: model.render_lin(&rhs),
                    });
                    break 'outer;
                }
            }
        }
        checks.push(AxiomCheck {
            axiom: "differential-derivation".into(),
            pass: fail.is_none(),
            witness: fail,
        });
    }

    // d is a coderivation: Delta d = (d (x) id + id (x) d) Delta.
    {
        let mut fail = None;
        for i in 0..n {
            let mut lhs: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
            for (j, c) in model.d(i) {
                for (a, b, c2) in model.delta(*j) {
                    let slot = lhs.entry((*a, *b)).or_insert_with(Rat::zero);
                    *slot += c * c2;
                }
            }
            let mut rhs: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
            for (a, b, c) in model.delta(i) {
                for (a1, c2) in model.d(*a) {
                    let slot = rhs.entry((*a1, *b)).or_insert_with(Rat::zero);
                    *slot += c * c2;
                }
                let s = sign(model.degree(*a));
                for (b1, c2) in model.d(*b) {
                    let slot = rhs.entry((*a, *b1)).or_insert_with(Rat::zero);
                    *slot += c * c2 * &s;
                }
            }
            lhs.retain(|_, c| !c.is_zero());
            rhs.retain(|_, c| !c.is_zero());
            if lhs != rhs {
                fail = Some(AxiomWitness {
                    elements: vec![model.id(i).into()],
                    left: format!("{:?}", lhs.keys().collect::<Vec<_>>()),
                    right: format!("{:?}", rhs.keys().collect::<Vec<_>>()),
                });
                break;
            }
        }
        checks.push(AxiomCheck {
            axiom: "differential-coderivation".into(),
            pass: fail.is_none(),
            witness: fail,
        });
    }

    // Frobenius compatibility:
    //   Delta(x.y) = (x.y')(x)y'' = (-1)^{|x'|(|y|+m)} x'(x)(x''.y).
    {
        let mut fail = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let mut lhs: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
                for (k, c) in model.mul(i, j) {
                    for (a, b, c2) in model.delta(*k) {
                        let slot = lhs.entry((*a, *b)).or_insert_with(Rat::zero);
                        *slot += c * c2;
                    }
                }
                lhs.retain(|_, c| !c.is_zero());
                // middle: x acts on the left tensor factor of Delta(y)
                let mut mid: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
                for (a, b, c) in model.delta(j) {
                    for (k, c2) in model.mul(i, *a) {
                        let slot = mid.entry((*k, *b)).or_insert_with(Rat::zero);
                        *slot += c * c2;
                    }
                }
                mid.retain(|_, c| !c.is_zero());
                // right: y acts on the right factor of Delta(x); the
                // degree |y|-m operator passes x'.
                let mut right: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
                for (a, b, c) in model.delta(i) {
                    let s = sign(model.degree(*a) * (model.degree(j) + m));
                    for (k, c2) in model.mul(*b, j) {
                        let slot = right.entry((*a, *k)).or_insert_with(Rat::zero);
                        *slot += c * c2 * &s;
                    }
                }
                right.retain(|_, c| !c.is_zero());
                if lhs != mid || lhs != right {
                    let render = |m: &BTreeMap<(usize, usize), Rat>| {
                        let lin: LinComb2 =
                            m.iter().map(|(&(a, b), c)| (a, b, c.clone())).collect();
                        model.render_lin2(&lin)
                    };
                    fail = Some(AxiomWitness {
                        elements: vec![model.id(i).into(), model.id(j).into()],
                        left: render(&lhs),
                        right: if lhs != mid { render(&mid) } else { render(&right) },
                    });
                    break 'outer;
                }
            }
        }
        checks.push(AxiomCheck {
            axiom: "frobenius-compatibility".into(),
            pass: fail.is_none(),
            witness: fail,
        });
    }

    // Coaugmentation: eps(g) = 1, Delta(g) = g(x)g, d(g) = 0, |g| = 0.
    {
        let g = model.coaugmentation;
        let mut problems = Vec::new();
        if !model.eps(g).is_one() {
            problems.push(format!("eps({}) = {}", model.id(g), render_rat(model.eps(g))));
        }
        let want: LinComb2 = vec![(g, g, Rat::one())];
        if !lin2_sub(model.delta(g), &want).is_empty() {
            problems.push(format!("Delta({}) = {}", model.id(g), model.render_lin2(model.delta(g))));
        }
        if !model.d(g).is_empty() {
            problems.push(format!("d({}) = {}", model.id(g), model.render_lin(model.d(g))));
        }
        if model.degree(g) != 0 {
            problems.push(format!("|{}| = {}", model.id(g), model.degree(g)));
        }
        let pass = problems.is_empty();
        checks.push(AxiomCheck {
            axiom: "coaugmentation".into(),
            pass,
            witness: if pass {
                None
            } else {
                Some(AxiomWitness {
                    elements: vec![model.id(g).into()],
                    left: problems.join("; "),
                    right: "grouplike coaugmentation".into(),
                })
            },
        });
    }

    // ker eps concentrated in degrees >= 2, and eps supported on the
    // coaugmentation alone.
    {
        let mut fail = None;
        for i in 0..n {
            if model.is_coaug(i) {
                continue;
            }
            if !model.eps(i).is_zero() {
                fail = Some(AxiomWitness {
                    elements: vec![model.id(i).into()],
                    left: format!("eps({}) = {}", model.id(i), render_rat(model.eps(i))),
                    right: "0".into(),
                });
                break;
            }
            if model.degree(i) < 2 {
                fail = Some(AxiomWitness {
                    elements: vec![model.id(i).into()],
                    left: format!("|{}| = {}", model.id(i), model.degree(i)),
                    right: ">= 2".into(),
                });
                break;
            }
        }
        checks.push(AxiomCheck {
            axiom: "kernel-degrees".into(),
            pass: fail.is_none(),
            witness: fail,
        });
    }

    ValidationReport { model: model.name.clone(), checks }
}

/// The one-element grouplike model (C = Q, m = 0).
pub fn builtin_trivial() -> FrobeniusModel {
    FrobeniusModel::from_tables(
        "trivial",
        0,
        vec![BasisElement { id: "g".into(), degree: 0 }],
        "g",
        RawTables {
            differential: vec![],
            product: vec![("g".into(), "g".into(), "g".into(), Rat::one())],
            coproduct: vec![("g".into(), "g".into(), "g".into(), Rat::one())],
            counit: vec![("g".into(), Rat::one())],
        },
    )
    .expect("trivial model is well-formed")
}

/// Chain-level model of the m-sphere: the dual of `Q[x]/(x^2)` through
/// the degree-m duality pairing. `t` is the unit of the product.
pub fn builtin_sphere(m: i64) -> Result<FrobeniusModel, FrobError> {
    if m < 2 {
        return Err(FrobError::Unsupported(format!(
            "sphere model needs degree m >= 2, got {m}"
        )));
    }
    FrobeniusModel::from_tables(
        &format!("sphere{m}"),
        m,
        vec![
            BasisElement { id: "g".into(), degree: 0 },
            BasisElement { id: "t".into(), degree: m },
        ],
        "g",
        RawTables {
            differential: vec![],
            product: vec![
                ("t".into(), "t".into(), "t".into(), Rat::one()),
                ("t".into(), "g".into(), "g".into(), Rat::one()),
                ("g".into(), "t".into(), "g".into(), Rat::one()),
            ],
            coproduct: vec![
                ("g".into(), "g".into(), "g".into(), Rat::one()),
                ("t".into(), "g".into(), "t".into(), Rat::one()),
                ("t".into(), "t".into(), "g".into(), Rat::one()),
            ],
            counit: vec![("g".into(), Rat::one())],
        },
    )
}

/// Chain-level model of complex projective n-space (m = 2n): the dual
/// of `Q[x]/(x^{n+1})` with `c_{2i}` dual to `x^i`, product transported
/// through the duality pairing (so `c_{2n}` is the product unit).
pub fn builtin_projective(n: i64) -> Result<FrobeniusModel, FrobError> {
    if n < 2 {
        return Err(FrobError::Unsupported(format!(
            "projective model needs n >= 2, got {n}"
        )));
    }
    let m = 2 * n;
    let cid = |i: i64| format!("c{}", 2 * i);
    let basis = (0..=n)
        .map(|i| BasisElement { id: cid(i), degree: 2 * i })
        .collect();
    let mut product = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            if i + j >= n {
                product.push((cid(i), cid(j), cid(i + j - n), Rat::one()));
            }
        }
    }
    let mut coproduct = Vec::new();
    for i in 0..=n {
        for a in 0..=i.min(n) {
            let b = i - a;
            if b <= n {
                coproduct.push((cid(i), cid(a), cid(b), Rat::one()));
            }
        }
    }
    FrobeniusModel::from_tables(
        &format!("cp{n}"),
        m,
        basis,
        "c0",
        RawTables {
            differential: vec![],
            product,
            coproduct,
            counit: vec![("c0".into(), Rat::one())],
        },
    )
}

/// Looks up a builtin by CLI name: `trivial`, `sphere<m>`, `cp<n>`.
pub fn builtin(name: &str) -> Result<FrobeniusModel, FrobError> {
    if name == "trivial" {
        return Ok(builtin_trivial());
    }
    if let Some(rest) = name.strip_prefix("sphere") {
        let m: i64 = rest
            .parse()
            .map_err(|_| FrobError::Unsupported(format!("unknown builtin `{name}`")))?;
        return builtin_sphere(m);
    }
    if let Some(rest) = name.strip_prefix("cp") {
        let n: i64 = rest
            .parse()
            .map_err(|_| FrobError::Unsupported(format!("unknown builtin `{name}`")))?;
        return builtin_projective(n);
    }
    Err(FrobError::Unsupported(format!("unknown builtin `{name}`")))
}

/// Description of a finite-dimensional connected commutative DG algebra
/// with a chosen duality pairing, the input of [`dualize`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PoincareSpec {
    pub name: String,
    pub m: i64,
    /// Basis ids with nonpositive degrees; must contain the unit.
    pub basis: Vec<BasisElement>,
    pub unit: String,
    #[serde(default)]
    pub differential: Vec<(String, String, String)>,
    #[serde(default)]
    pub product: Vec<(String, String, String, String)>,
    /// The degree-m pairing values `<a, b>`, nonzero only when
    /// `|a| + |b| = -m`.
    pub pairing: Vec<(String, String, String)>,
}

/// Dualizes a Poincare-duality algebra description into a Frobenius
/// model: coproduct dual to the product, counit dual to the unit,
/// product transported through the pairing isomorphism.
pub fn dualize(spec: &PoincareSpec) -> Result<FrobeniusModel, FrobError> {
    let n = spec.basis.len();
    let index: BTreeMap<&str, usize> =
        spec.basis.iter().enumerate().map(|(i, b)| (b.id.as_str(), i)).collect();
    let resolve = |table: &str, id: &str| -> Result<usize, FrobError> {
        index.get(id).copied().ok_or_else(|| FrobError::BadEntry {
            table: table.into(),
            entry: id.into(),
            reason: format!("unknown basis id `{id}`"),
        })
    };
    for b in &spec.basis {
        if b.degree > 0 {
            return Err(FrobError::Rejected(format!(
                "algebra basis element `{}` has positive degree {}",
                b.id, b.degree
            )));
        }
        if b.degree == -1 {
            return Err(FrobError::Rejected(format!(
                "algebra has a degree -1 element `{}`; the dual complement of the counit \
                 would not be concentrated in degrees >= 2",
                b.id
            )));
        }
    }
    let unit = resolve("unit", &spec.unit)?;
    if spec.basis[unit].degree != 0 {
        return Err(FrobError::Rejected("unit must have degree 0".into()));
    }
    if spec.basis.iter().filter(|b| b.degree == 0).count() != 1 {
        return Err(FrobError::Rejected(
            "algebra is not connected: degree 0 is not spanned by the unit alone".into(),
        ));
    }

    // product structure constants mu[i][j] and differential of A
    let mut mu = vec![vec![BTreeMap::<usize, Rat>::new(); n]; n];
    for (a, b, out, c) in &spec.product {
        let i = resolve("product", a)?;
        let j = resolve("product", b)?;
        let k = resolve("product", out)?;
        lin_add(&mut mu[i][j], k, parse_rat(c).map_err(|e| FrobError::Json(e.to_string()))?);
    }
    let mut da = vec![BTreeMap::<usize, Rat>::new(); n];
    for (from, to, c) in &spec.differential {
        let i = resolve("differential", from)?;
        let j = resolve("differential", to)?;
        lin_add(&mut da[i], j, parse_rat(c).map_err(|e| FrobError::Json(e.to_string()))?);
    }
    // pairing matrix
    let mut pair = vec![vec![Rat::zero(); n]; n];
    for (a, b, c) in &spec.pairing {
        let i = resolve("pairing", a)?;
        let j = resolve("pairing", b)?;
        let v = parse_rat(c).map_err(|e| FrobError::Json(e.to_string()))?;
        if !v.is_zero() && spec.basis[i].degree + spec.basis[j].degree != -spec.m {
            return Err(FrobError::Rejected(format!(
                "pairing <{a},{b}> is nonzero but degrees do not add to -m"
            )));
        }
        pair[i][j] += v;
    }
    // invert the pairing matrix by Gauss-Jordan
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row = pair[i].clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !aug[r][col].is_zero()) else {
            return Err(FrobError::Rejected(
                "pairing is not an isomorphism (singular pairing matrix)".into(),
            ));
        };
        aug.swap(col, p);
        let inv = aug[col][col].clone().recip();
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for cidx in 0..2 * n {
                    let sub = &f * &aug[col][cidx];
                    aug[r][cidx] -= sub;
                }
            }
        }
    }
    let pinv: Vec<Vec<Rat>> = aug.into_iter().map(|row| row[n..].to_vec()).collect();

    // C = A^dual: basis a_i^dual of degree -|a_i|.
    let cb: Vec<BasisElement> = spec
        .basis
        .iter()
        .map(|b| BasisElement { id: b.id.clone(), degree: -b.degree })
        .collect();
    let mut tables = RawTables::default();
    // counit dual to the unit
    tables.counit.push((spec.basis[unit].id.clone(), Rat::one()));
    // coproduct dual to the product: Delta(a_k^dual) = sum mu_{ij}^k a_i^dual (x) a_j^dual
    for i in 0..n {
        for j in 0..n {
            for (k, c) in &mu[i][j] {
                tables.coproduct.push((
                    spec.basis[*k].id.clone(),
                    spec.basis[i].id.clone(),
                    spec.basis[j].id.clone(),
                    c.clone(),
                ));
            }
        }
    }
    // dual differential: d_C(a_k^dual) = -(-1)^{|a_k^dual|} sum_j [a_k : d_A a_j] a_j^dual
    for j in 0..n {
        for (k, c) in &da[j] {
            let s = if (-spec.basis[*k].degree).rem_euclid(2) == 1 {
                Rat::one()
            } else {
                -Rat::one()
            };
            tables.differential.push((
                spec.basis[*k].id.clone(),
                spec.basis[j].id.clone(),
                c * &s,
            ));
        }
    }
    // product transported through phi(a) = <a, ->: u.v = phi(phi^{-1}u . phi^{-1}v)
    // phi(a_i) = sum_j pair[i][j] a_j^dual, phi^{-1}(a_j^dual) = sum_i pinv[j][i]... :
    // pinv is the inverse of pair as a matrix, so phi^{-1}(a_k^dual) = sum_i pinv[i][k]?? --
    // phi(a_i) has dual-coordinates pair[i][*]; coordinates transform by the inverse
    // transpose, handled below by direct composition.
    for u in 0..n {
        for v in 0..n {
            // phi^{-1}(a_u^dual) = sum_i pinvT[u][i] a_i where pair * pinv = id:
            // coordinates x with pair^T x = e_u  <=>  x_i = pinv^T[i][u]... pair[i][j]
            // gives phi(a_i)(a_j); phi(sum x_i a_i) = a_u^dual needs sum_i x_i pair[i][j] = delta_{uj},
            // i.e. x = (pair^T)^{-1} e_u = (pinv^T) e_u, so x_i = pinv[u][i]... careful:
            // (pair^{-1})^T[i][u] = pinv[u][i].
            let xi: Vec<Rat> = (0..n).map(|i| pinv[u][i].clone()).collect();
            let yj: Vec<Rat> = (0..n).map(|j| pinv[v][j].clone()).collect();
            // w = (phi^{-1}u).(phi^{-1}v) in A, then phi(w) back to C
            let mut w: BTreeMap<usize, Rat> = BTreeMap::new();
            for i in 0..n {
                if xi[i].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if yj[j].is_zero() {
                        continue;
                    }
                    for (k, c) in &mu[i][j] {
                        lin_add(&mut w, *k, c * &xi[i] * &yj[j]);
                    }
                }
            }
            let mut out: BTreeMap<usize, Rat> = BTreeMap::new();
            for (k, c) in &w {
                for j in 0..n {
                    if !pair[*k][j].is_zero() {
                        lin_add(&mut out, j, &pair[*k][j] * c);
                    }
                }
            }
            for (k, c) in out {
                tables.product.push((
                    spec.basis[u].id.clone(),
                    spec.basis[v].id.clone(),
                    spec.basis[k].id.clone(),
                    c,
                ));
            }
        }
    }

    let model = FrobeniusModel::from_tables(
        &spec.name,
        spec.m,
        cb,
        &spec.basis[unit].id,
        tables,
    )?;
    let report = validate(&model);
    if !report.all_pass() {
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.axiom.as_str())
            .collect();
        return Err(FrobError::Rejected(format!(
            "dualized model fails axioms: {}",
            failing.join(", ")
        )));
    }
    Ok(model)
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    name: String,
    m: i64,
    basis: Vec<BasisElement>,
    coaugmentation: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    differential: Vec<(String, String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    product: Vec<(String, String, String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    coproduct: Vec<(String, String, String, String)>,
    counit: Vec<(String, String)>,
}

/// Loads a model from the JSON schema. Coefficients parse as exact
/// rationals; schema violations report the offending table.
pub fn load_model(path: &Path) -> Result<FrobeniusModel, FrobError> {
    let text = fs::read_to_string(path).map_err(|source| FrobError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_model_str(&text)
}

pub fn load_model_str(text: &str) -> Result<FrobeniusModel, FrobError> {
    let file: ModelFile =
        serde_json::from_str(text).map_err(|e| FrobError::Json(e.to_string()))?;
    let conv = |table: &str, s: &str| -> Result<Rat, FrobError> {
        parse_rat(s).map_err(|_| FrobError::BadEntry {
            table: table.into(),
            entry: s.into(),
            reason: "coefficient is not an exact rational p/q".into(),
        })
    };
    let mut tables = RawTables::default();
    for (a, b, c) in &file.differential {
        tables.differential.push((a.clone(), b.clone(), conv("differential", c)?));
    }
    for (a, b, o, c) in &file.product {
        tables.product.push((a.clone(), b.clone(), o.clone(), conv("product", c)?));
    }
    for (a, b, o, c) in &file.coproduct {
        tables.coproduct.push((a.clone(), b.clone(), o.clone(), conv("coproduct", c)?));
    }
    for (a, c) in &file.counit {
        tables.counit.push((a.clone(), conv("counit", c)?));
    }
    FrobeniusModel::from_tables(&file.name, file.m, file.basis, &file.coaugmentation, tables)
}

/// Serializes a model back to the JSON schema; `load . save` is the
/// identity on models.
pub fn save_model_str(model: &FrobeniusModel) -> String {
    let mut file = ModelFile {
        name: model.name.clone(),
        m: model.m,
        basis: model.basis.clone(),
        coaugmentation: model.id(model.coaugmentation).to_string(),
        differential: Vec::new(),
        product: Vec::new(),
        coproduct: Vec::new(),
        counit: Vec::new(),
    };
    for i in 0..model.dim() {
        for (j, c) in model.d(i) {
            file.differential.push((model.id(i).into(), model.id(*j).into(), render_rat(c)));
        }
    }
    for i in 0..model.dim() {
        for j in 0..model.dim() {
            for (k, c) in model.mul(i, j) {
                file.product.push((
                    model.id(i).into(),
                    model.id(j).into(),
                    model.id(*k).into(),
                    render_rat(c),
                ));
            }
        }
    }
    for i in 0..model.dim() {
        for (a, b, c) in model.delta(i) {
            file.coproduct.push((
                model.id(i).into(),
                model.id(*a).into(),
                model.id(*b).into(),
                render_rat(c),
            ));
        }
    }
    for i in 0..model.dim() {
        if !model.eps(i).is_zero() {
            file.counit.push((model.id(i).into(), render_rat(model.eps(i))));
        }
    }
    serde_json::to_string_pretty(&file).expect("model serializes")
}

pub fn save_model(model: &FrobeniusModel, path: &Path) -> Result<(), FrobError> {
    fs::write(path, save_model_str(model) + "\n").map_err(|source| FrobError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// A named single structure-constant mutation of a builtin model. The
/// fixed list below is the sensitivity regression: every mutation must
/// fail at least one axiom.
pub fn mutation_list() -> Vec<(String, FrobeniusModel)> {
    let mut out = Vec::new();
    let push = |out: &mut Vec<(String, FrobeniusModel)>, name: &str, m: FrobeniusModel| {
        out.push((name.to_string(), m));
    };

    let sphere2 = |f: &dyn Fn(&mut RawTables)| -> FrobeniusModel {
        let mut t = RawTables {
            differential: vec![],
            product: vec![
                ("t".into(), "t".into(), "t".into(), Rat::one()),
                ("t".into(), "g".into(), "g".into(), Rat::one()),
                ("g".into(), "t".into(), "g".into(), Rat::one()),
            ],
            coproduct: vec![
                ("g".into(), "g".into(), "g".into(), Rat::one()),
                ("t".into(), "g".into(), "t".into(), Rat::one()),
                ("t".into(), "t".into(), "g".into(), Rat::one()),
            ],
            counit: vec![("g".into(), Rat::one())],
        };
        f(&mut t);
        FrobeniusModel::from_tables(
            "sphere2-mutant",
            2,
            vec![
                BasisElement { id: "g".into(), degree: 0 },
                BasisElement { id: "t".into(), degree: 2 },
            ],
            "g",
            t,
        )
        .expect("mutants stay structurally well-formed")
    };

    push(&mut out, "sphere2/product-tt-doubled", sphere2(&|t| t.product[0].3 = rat2()));
    push(&mut out, "sphere2/product-gt-dropped", sphere2(&|t| {
        t.product.retain(|p| !(p.0 == "g" && p.1 == "t"));
    }));
    push(&mut out, "sphere2/product-tg-negated", sphere2(&|t| t.product[1].3 = -Rat::one()));
    push(&mut out, "sphere2/coproduct-t-halved", sphere2(&|t| t.coproduct[1].3 = half()));
    push(&mut out, "sphere2/coproduct-t-asymmetric", sphere2(&|t| {
        t.coproduct.retain(|p| !(p.0 == "t" && p.1 == "t"));
    }));
    push(&mut out, "sphere2/coproduct-g-doubled", sphere2(&|t| t.coproduct[0].3 = rat2()));
    push(&mut out, "sphere2/counit-doubled", sphere2(&|t| t.counit[0].1 = rat2()));
    push(&mut out, "sphere2/counit-zeroed", sphere2(&|t| t.counit.clear()));

    let sphere3 = builtin_sphere(3).unwrap();
    let mut s3_tables = model_tables(&sphere3);
    s3_tables.product[0].3 = -Rat::one();
    push(
        &mut out,
        "sphere3/product-tt-negated",
        FrobeniusModel::from_tables("sphere3-mutant", 3, sphere3.basis.clone(), "g", s3_tables)
            .unwrap(),
    );

    let cp2 = builtin_projective(2).unwrap();
    let mut cp_tables = model_tables(&cp2);
    cp_tables.product.retain(|p| !(p.0 == "c2" && p.1 == "c2"));
    push(
        &mut out,
        "cp2/product-c2c2-dropped",
        FrobeniusModel::from_tables("cp2-mutant", 4, cp2.basis.clone(), "c0", cp_tables).unwrap(),
    );
    let mut cp_tables = model_tables(&cp2);
    cp_tables.coproduct.retain(|p| !(p.0 == "c4" && p.1 == "c2"));
    push(
        &mut out,
        "cp2/coproduct-c4-middle-dropped",
        FrobeniusModel::from_tables("cp2-mutant", 4, cp2.basis.clone(), "c0", cp_tables).unwrap(),
    );
    let mut cp_tables = model_tables(&cp2);
    cp_tables.product.push(("c0".into(), "c0".into(), "c0".into(), Rat::one()));
    // |c0.c0| would be -4; route the extra constant through a legal slot instead
    cp_tables.product.pop();
    cp_tables.product.push(("c2".into(), "c4".into(), "c2".into(), Rat::one()));
    push(
        &mut out,
        "cp2/product-c2c4-doubled",
        FrobeniusModel::from_tables("cp2-mutant", 4, cp2.basis.clone(), "c0", cp_tables).unwrap(),
    );

    out
}

fn rat2() -> Rat {
    Rat::one() + Rat::one()
}

fn half() -> Rat {
    Rat::one() / rat2()
}

/// Extracts id-keyed tables from a model (inverse of `from_tables`).
pub fn model_tables(model: &FrobeniusModel) -> RawTables {
    let mut t = RawTables::default();
    for i in 0..model.dim() {
        for (j, c) in model.d(i) {
            t.differential.push((model.id(i).into(), model.id(*j).into(), c.clone()));
        }
        for (a, b, c) in model.delta(i) {
            t.coproduct.push((model.id(i).into(), model.id(*a).into(), model.id(*b).into(), c.clone()));
        }
        if !model.eps(i).is_zero() {
            t.counit.push((model.id(i).into(), model.eps(i).clone()));
        }
        for j in 0..model.dim() {
            for (k, c) in model.mul(i, j) {
                t.product.push((model.id(i).into(), model.id(j).into(), model.id(*k).into(), c.clone()));
            }
        }
    }
    t
}

/// A small model with nonzero differential and zero product, used by
/// tests to exercise the differential terms of the cobar complex.
pub fn acyclic_pair_model() -> FrobeniusModel {
    FrobeniusModel::from_tables(
        "acyclic-pair",
        0,
        vec![
            BasisElement { id: "g".into(), degree: 0 },
            BasisElement { id: "y".into(), degree: 2 },
            BasisElement { id: "x".into(), degree: 3 },
        ],
        "g",
        RawTables {
            differential: vec![("x".into(), "y".into(), Rat::one())],
            product: vec![],
            coproduct: vec![
                ("g".into(), "g".into(), "g".into(), Rat::one()),
                ("y".into(), "g".into(), "y".into(), Rat::one()),
                ("y".into(), "y".into(), "g".into(), Rat::one()),
                ("x".into(), "g".into(), "x".into(), Rat::one()),
                ("x".into(), "x".into(), "g".into(), Rat::one()),
            ],
            counit: vec![("g".into(), Rat::one())],
        },
    )
    .expect("pair model is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for model in [
            builtin_trivial(),
            builtin_sphere(2).unwrap(),
            builtin_sphere(3).unwrap(),
            builtin_sphere(5).unwrap(),
            builtin_projective(2).unwrap(),
            builtin_projective(3).unwrap(),
            acyclic_pair_model(),
        ] {
            let report = validate(&model);
            assert!(
                report.all_pass(),
                "model {} fails: {}",
                model.name,
                report.render_text()
            );
        }
    }

    #[test]
    fn sphere_unit_and_counit() {
        let s = builtin_sphere(2).unwrap();
        let t = s.index_of("t").unwrap();
        let g = s.index_of("g").unwrap();
        assert_eq!(s.mul(t, t), &vec![(t, Rat::one())]);
        assert_eq!(s.mul(t, g), &vec![(g, Rat::one())]);
        assert!(s.eps(t).is_zero());
        assert!(s.eps(g).is_one());
    }

    #[test]
    fn projective_top_class_is_unit() {
        let cp = builtin_projective(2).unwrap();
        let top = cp.index_of("c4").unwrap();
        for i in 0..cp.dim() {
            assert_eq!(cp.mul(top, i), &vec![(i, Rat::one())], "c4 . {}", cp.id(i));
        }
        for i in 1..cp.dim() {
            assert!(cp.eps(i).is_zero());
        }
    }

    #[test]
    fn frobenius_axiom_fails_on_doubled_constant() {
        let (name, mutant) = mutation_list().into_iter().next().unwrap();
        assert_eq!(name, "sphere2/product-tt-doubled");
        let report = validate(&mutant);
        let frob = report
            .checks
            .iter()
            .find(|c| c.axiom == "frobenius-compatibility")
            .unwrap();
        assert!(!frob.pass);
        let w = frob.witness.as_ref().unwrap();
        assert!(w.elements.contains(&"t".to_string()));
    }

    #[test]
    fn every_mutation_breaks_an_axiom() {
        for (name, mutant) in mutation_list() {
            let report = validate(&mutant);
            assert!(!report.all_pass(), "mutation {name} slipped through");
        }
    }

    #[test]
    fn unsupported_parameters() {
        assert!(builtin_sphere(1).is_err());
        assert!(builtin_projective(1).is_err());
        assert!(builtin("nope").is_err());
        assert!(builtin("sphere4").is_ok());
        assert!(builtin("cp2").is_ok());
    }

    #[test]
    fn json_round_trip() {
        let model = builtin_sphere(2).unwrap();
        let text = save_model_str(&model);
        let loaded = load_model_str(&text).unwrap();
        assert_eq!(model, loaded);
    }

    #[test]
    fn json_exact_rationals_and_errors() {
        let text = r#"{
            "name": "third", "m": 0,
            "basis": [{"id": "g", "degree": 0}],
            "coaugmentation": "g",
            "coproduct": [["g", "g", "g", "1"]],
            "counit": [["g", "1/3"]]
        }"#;
        let model = load_model_str(text).unwrap();
        assert_eq!(model.eps(0), &parse_rat("1/3").unwrap());

        let missing_counit = r#"{
            "name": "x", "m": 0,
            "basis": [{"id": "g", "degree": 0}],
            "coaugmentation": "g"
        }"#;
        let err = load_model_str(missing_counit).unwrap_err();
        assert!(err.to_string().contains("counit"), "error was: {err}");

        let unknown_id = r#"{
            "name": "x", "m": 0,
            "basis": [{"id": "g", "degree": 0}],
            "coaugmentation": "g",
            "product": [["g", "h", "g", "1"]],
            "counit": [["g", "1"]]
        }"#;
        let err = load_model_str(unknown_id).unwrap_err();
        assert!(err.to_string().contains("unknown basis id `h`"));

        let float_coeff = r#"{
            "name": "x", "m": 0,
            "basis": [{"id": "g", "degree": 0}],
            "coaugmentation": "g",
            "counit": [["g", "0.5"]]
        }"#;
        assert!(load_model_str(float_coeff).is_err());
    }

    #[test]
    fn non_homogeneous_entry_is_input_error() {
        let text = r#"{
            "name": "x", "m": 2,
            "basis": [{"id": "g", "degree": 0}, {"id": "t", "degree": 2}],
            "coaugmentation": "g",
            "differential": [["t", "g", "1"]],
            "counit": [["g", "1"]]
        }"#;
        let err = load_model_str(text).unwrap_err();
        assert!(err.to_string().contains("differential"));
        assert!(err.to_string().contains("non-homogeneous"));
    }

    #[test]
    fn dualize_sphere_matches_builtin() {
        let spec = PoincareSpec {
            name: "dual-sphere2".into(),
            m: 2,
            basis: vec![
                BasisElement { id: "g".into(), degree: -2 },
                BasisElement { id: "t".into(), degree: 0 },
            ],
            unit: "t".into(),
            differential: vec![],
            product: vec![
                ("t".into(), "t".into(), "t".into(), "1".into()),
                ("t".into(), "g".into(), "g".into(), "1".into()),
                ("g".into(), "t".into(), "g".into(), "1".into()),
            ],
            pairing: vec![
                ("t".into(), "g".into(), "1".into()),
                ("g".into(), "t".into(), "1".into()),
            ],
        };
        let c = dualize(&spec).unwrap();
        assert!(validate(&c).all_pass());
        // builtin_sphere(2) up to relabeling: the dual of the unit "t"
        // is the grouplike, the dual of "g" is the top class.
        let top = c.index_of("g").unwrap();
        let grp = c.index_of("t").unwrap();
        assert_eq!(c.degree(top), 2);
        assert_eq!(c.degree(grp), 0);
        assert_eq!(c.coaugmentation, grp);
        assert_eq!(c.m, 2);
        assert_eq!(c.mul(top, top), &vec![(top, Rat::one())]);
        assert_eq!(c.mul(top, grp), &vec![(grp, Rat::one())]);
        assert!(c.mul(grp, grp).is_empty());
        assert_eq!(c.delta(top).len(), 2);
        assert!(c.eps(grp).is_one());
    }

    #[test]
    fn dualize_trivial_and_rejections() {
        let trivial = PoincareSpec {
            name: "point".into(),
            m: 0,
            basis: vec![BasisElement { id: "e".into(), degree: 0 }],
            unit: "e".into(),
            differential: vec![],
            product: vec![("e".into(), "e".into(), "e".into(), "1".into())],
            pairing: vec![("e".into(), "e".into(), "1".into())],
        };
        let c = dualize(&trivial).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(validate(&c).all_pass());

        let with_degree_one = PoincareSpec {
            name: "bad".into(),
            m: 1,
            basis: vec![
                BasisElement { id: "e".into(), degree: 0 },
                BasisElement { id: "a".into(), degree: -1 },
            ],
            unit: "e".into(),
            differential: vec![],
            product: vec![("e".into(), "e".into(), "e".into(), "1".into())],
            pairing: vec![
                ("e".into(), "a".into(), "1".into()),
                ("a".into(), "e".into(), "1".into()),
            ],
        };
        assert!(matches!(dualize(&with_degree_one), Err(FrobError::Rejected(_))));

        let singular = PoincareSpec {
            name: "sing".into(),
            m: 2,
            basis: vec![
                BasisElement { id: "e".into(), degree: 0 },
                BasisElement { id: "x".into(), degree: -2 },
            ],
            unit: "e".into(),
            differential: vec![],
            product: vec![("e".into(), "e".into(), "e".into(), "1".into())],
            pairing: vec![],
        };
        assert!(matches!(dualize(&singular), Err(FrobError::Rejected(_))));
    }
}
