//! Sparse multivariate polynomials over the rings of [`crate::ring`].
//!
//! Terms live in a hash map keyed by exponent vectors; the canonical term
//! order (graded reverse lexicographic over the variable-table order) is
//! applied on demand, when serializing or comparing artifacts. The text
//! format (`ukt-poly v1`) is bit-exact: two writers produce identical files
//! for equal polynomials.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use crate::error::UktError;
use crate::ring::{rational_mod_p, Fp, Gauss, Ring, QI, QQ};

/// Exponent vector; one entry per variable of the table.
pub type Monomial = Box<[u8]>;

/// An ordered, immutable set of variable names.
#[derive(Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VarTable {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<VarTable> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            let prev = index.insert(n.clone(), i);
            assert!(prev.is_none(), "duplicate variable name {n}");
        }
        Arc::new(VarTable { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize, UktError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| UktError::Name(format!("unknown variable `{name}`")))
    }
}

/// Graded reverse lexicographic comparison (`Greater` = later variable-power
/// weight, i.e. the leading term of a file is the grevlex-largest).
pub fn grevlex_cmp(a: &[u8], b: &[u8]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // Equal degree: the grevlex-larger vector has the *smaller* exponent at
    // the rightmost position where they differ.
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// FNV-1a 64-bit checksum used by the artifact format.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// A sparse polynomial over ring `R`.
#[derive(Clone, Debug)]
pub struct SparsePoly<R: Ring> {
    ring: R,
    vars: Arc<VarTable>,
    terms: HashMap<Monomial, R::Elem>,
}

impl<R: Ring> PartialEq for SparsePoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl<R: Ring> SparsePoly<R> {
    pub fn zero(ring: R, vars: Arc<VarTable>) -> Self {
        SparsePoly {
            ring,
            vars,
            terms: HashMap::new(),
        }
    }

    pub fn constant(ring: R, vars: Arc<VarTable>, c: R::Elem) -> Self {
        let mut p = SparsePoly::zero(ring, vars);
        p.add_term(vec![0; p.vars.len()].into_boxed_slice(), c);
        p
    }

    /// The monomial `c · Π vars[i]^exps[i]`.
    pub fn monomial(ring: R, vars: Arc<VarTable>, exps: &[u8], c: R::Elem) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = SparsePoly::zero(ring, vars);
        p.add_term(exps.to_vec().into_boxed_slice(), c);
        p
    }

    /// Single variable with exponent 1.
    pub fn var(ring: R, vars: Arc<VarTable>, i: usize) -> Self {
        let mut e = vec![0u8; vars.len()];
        e[i] = 1;
        let c = ring.one();
        SparsePoly::monomial(ring, vars, &e, c)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u8]) -> R::Elem {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// True if every term has the same total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms
            .keys()
            .all(|m| m.iter().map(|&e| e as u32).sum::<u32>() == d)
    }

    /// Accumulate one term, dropping the entry if the sum cancels.
    pub fn add_term(&mut self, m: Monomial, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = self.ring.add(o.get(), &c);
                if self.ring.is_zero(&s) {
                    o.remove();
                } else {
                    o.insert(s);
                }
            }
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "operands use different variable tables"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let n = self.ring.neg(c);
            out.add_term(m.clone(), n);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.ring.neg(c);
        }
        out
    }

    pub fn scale(&self, k: &R::Elem) -> Self {
        if self.ring.is_zero(k) {
            return SparsePoly::zero(self.ring.clone(), self.vars.clone());
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.ring.mul(c, k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = SparsePoly::zero(self.ring.clone(), self.vars.clone());
        // Hash-map accumulation of pairwise products.
        out.terms.reserve(self.terms.len().max(other.terms.len()));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma
                    .iter()
                    .zip(mb.iter())
                    .map(|(&x, &y)| {
                        x.checked_add(y).expect("exponent overflow (u8 exponents)")
                    })
                    .collect();
                out.add_term(m, self.ring.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = SparsePoly::constant(self.ring.clone(), self.vars.clone(), self.ring.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at a point (one ring element per variable).
    pub fn eval(&self, point: &[R::Elem]) -> Result<R::Elem, UktError> {
        if point.len() != self.vars.len() {
            return Err(UktError::Dimension(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut acc = self.ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = self.ring.mul(&t, &point[i]);
                }
            }
            acc = self.ring.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = SparsePoly::zero(self.ring.clone(), self.vars.clone());
        for (m, c) in &self.terms {
            let e = m[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[i] = e - 1;
            let k = self.ring.from_i64(e as i64);
            out.add_term(m2, self.ring.mul(c, &k));
        }
        out
    }

    /// Substitute every variable by the given polynomial image
    /// (`images[i]` replaces variable `i`; images share one table).
    pub fn substitute(&self, images: &[SparsePoly<R>]) -> Result<SparsePoly<R>, UktError> {
        if images.len() != self.vars.len() {
            return Err(UktError::Dimension(
                "one image polynomial required per variable".into(),
            ));
        }
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let mut out = SparsePoly::zero(self.ring.clone(), target.clone());
        for (m, c) in &self.terms {
            let mut t = SparsePoly::constant(self.ring.clone(), target.clone(), c.clone());
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&images[i]);
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Apply a scaled variable permutation: variable `i` ↦ `scale[i] ·
    /// var(perm[i])`. Fast path for group actions that do not mix variables.
    pub fn apply_scaled_permutation(&self, perm: &[usize], scale: &[R::Elem]) -> Self {
        assert_eq!(perm.len(), self.vars.len());
        let mut out = SparsePoly::zero(self.ring.clone(), self.vars.clone());
        for (m, c) in &self.terms {
            let mut m2 = vec![0u8; m.len()];
            let mut c2 = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                m2[perm[i]] += e;
                for _ in 0..e {
                    c2 = self.ring.mul(&c2, &scale[i]);
                }
            }
            out.add_term(m2.into_boxed_slice(), c2);
        }
        out
    }

    /// Terms in descending canonical (grevlex) order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &R::Elem)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| grevlex_cmp(b, a));
        v
    }

    /// Serialize in the `ukt-poly v1` format.
    pub fn serialize(&self) -> String {
        let mut body = String::new();
        body.push_str("# ukt-poly v1\n");
        body.push_str("vars");
        for n in self.vars.names() {
            body.push(' ');
            body.push_str(n);
        }
        body.push('\n');
        for (m, c) in self.sorted_terms() {
            body.push_str(&self.ring.elem_string(c));
            for &e in m.iter() {
                body.push(' ');
                body.push_str(&e.to_string());
            }
            body.push('\n');
        }
        let sum = fnv1a64(body.as_bytes());
        body.push_str(&format!("# fnv1a64 {sum:016x}\n"));
        body
    }

    /// Parse the `ukt-poly v1` format over the given ring and table.
    pub fn parse(text: &str, ring: R, vars: Arc<VarTable>) -> Result<Self, UktError> {
        let mut lines = text.lines().enumerate();
        let (_, first) = lines
            .next()
            .ok_or_else(|| UktError::Parse("empty input".into()))?;
        if first.trim() != "# ukt-poly v1" {
            return Err(UktError::Parse("line 1: missing `# ukt-poly v1` header".into()));
        }
        let (_, var_line) = lines
            .next()
            .ok_or_else(|| UktError::Parse("missing vars line".into()))?;
        let mut it = var_line.split_whitespace();
        if it.next() != Some("vars") {
            return Err(UktError::Parse("line 2: expected `vars …`".into()));
        }
        let names: Vec<&str> = it.collect();
        if names.len() != vars.len() || names.iter().zip(vars.names()).any(|(a, b)| a != b) {
            return Err(UktError::Name("variable table mismatch".into()));
        }
        let mut poly = SparsePoly::zero(ring, vars);
        for (ln, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if line.starts_with('#') {
                // checksum trailer (validated by the artifact cache, not here)
                continue;
            }
            let mut parts = line.split_whitespace();
            let coeff_s = parts
                .next()
                .ok_or_else(|| UktError::Parse(format!("line {}: empty term", ln + 1)))?;
            let c = poly
                .ring
                .parse_elem(coeff_s)
                .map_err(|e| UktError::Parse(format!("line {}: {e}", ln + 1)))?;
            let exps: Result<Vec<u8>, _> = parts.map(|t| t.parse::<u8>()).collect();
            let exps =
                exps.map_err(|_| UktError::Parse(format!("line {}: bad exponent", ln + 1)))?;
            if exps.len() != poly.vars.len() {
                return Err(UktError::Parse(format!(
                    "line {}: expected {} exponents, got {}",
                    ln + 1,
                    poly.vars.len(),
                    exps.len()
                )));
            }
            poly.add_term(exps.into_boxed_slice(), c);
        }
        Ok(poly)
    }
}

impl SparsePoly<QQ> {
    /// Reduce all coefficients modulo `fp.p`.
    pub fn to_fp(&self, fp: &Fp) -> Result<SparsePoly<Fp>, UktError> {
        let mut out = SparsePoly::zero(fp.clone(), self.vars.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), rational_mod_p(c, fp)?);
        }
        Ok(out)
    }

    /// View over ℚ(i) with zero imaginary parts.
    pub fn to_qi(&self) -> SparsePoly<QI> {
        let mut out = SparsePoly::zero(QI, self.vars.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), Gauss::from_re(c.clone()));
        }
        out
    }
}

impl SparsePoly<QI> {
    /// Reduce to ℤ/p sending i to the field's `i_root`.
    pub fn to_fp(&self, fp: &Fp) -> Result<SparsePoly<Fp>, UktError> {
        let i = fp
            .i_root
            .ok_or_else(|| UktError::Config("field has no adjoined i".into()))?;
        let mut out = SparsePoly::zero(fp.clone(), self.vars.clone());
        for (m, c) in &self.terms {
            let re = rational_mod_p(&c.re, fp)?;
            let im = rational_mod_p(&c.im, fp)?;
            out.add_term(m.clone(), fp.add(&re, &fp.mul(&im, &i)));
        }
        Ok(out)
    }

    /// The real part, failing if any coefficient has nonzero imaginary part.
    pub fn real_part_exact(&self) -> Result<SparsePoly<QQ>, UktError> {
        let mut out = SparsePoly::zero(QQ, self.vars.clone());
        for (m, c) in &self.terms {
            if !c.is_real() {
                return Err(UktError::Consistency(
                    "polynomial has a genuinely complex coefficient".into(),
                ));
            }
            out.add_term(m.clone(), c.re.clone());
        }
        Ok(out)
    }
}

/// Sum over the orbit of a monomial under a permutation group given by
/// generator permutations of the variables. Returns the orbit sum (all
/// coefficients 1) and the orbit size.
pub fn orbit_sum<R: Ring>(
    ring: R,
    vars: Arc<VarTable>,
    generators: &[Vec<usize>],
    seed: &[u8],
) -> Result<(SparsePoly<R>, usize), UktError> {
    let n = vars.len();
    if seed.len() != n {
        return Err(UktError::Dimension("seed monomial length mismatch".into()));
    }
    for g in generators {
        let mut seen = vec![false; n];
        if g.len() != n || g.iter().any(|&i| i >= n) {
            return Err(UktError::Input("generator is not a permutation".into()));
        }
        for &i in g {
            if seen[i] {
                return Err(UktError::Input("generator is not a permutation".into()));
            }
            seen[i] = true;
        }
    }
    let apply = |m: &[u8], g: &[usize]| -> Monomial {
        let mut out = vec![0u8; n];
        for (i, &e) in m.iter().enumerate() {
            out[g[i]] = e;
        }
        out.into_boxed_slice()
    };
    let mut orbit: std::collections::HashSet<Monomial> = std::collections::HashSet::new();
    let mut frontier = vec![seed.to_vec().into_boxed_slice()];
    orbit.insert(frontier[0].clone());
    while let Some(m) = frontier.pop() {
        for g in generators {
            let im = apply(&m, g);
            if orbit.insert(im.clone()) {
                frontier.push(im);
            }
        }
    }
    let size = orbit.len();
    let mut poly = SparsePoly::zero(ring.clone(), vars);
    for m in orbit {
        poly.add_term(m, ring.one());
    }
    Ok((poly, size))
}

/// A polynomial graded by powers of a single truncation parameter `q`.
#[derive(Clone, Debug)]
pub struct QSeriesPoly<R: Ring> {
    parts: std::collections::BTreeMap<u32, SparsePoly<R>>,
    trunc: u32,
}

impl<R: Ring> QSeriesPoly<R> {
    pub fn new(trunc: u32) -> Self {
        QSeriesPoly {
            parts: Default::default(),
            trunc,
        }
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn add_part(&mut self, q_deg: u32, poly: SparsePoly<R>) {
        if q_deg >= self.trunc || poly.is_zero() {
            return;
        }
        match self.parts.remove(&q_deg) {
            None => {
                self.parts.insert(q_deg, poly);
            }
            Some(old) => {
                let s = old.add(&poly);
                if !s.is_zero() {
                    self.parts.insert(q_deg, s);
                }
            }
        }
    }

    /// The coefficient polynomial of `q^k` (zero polynomial if absent).
    pub fn q_component(
        &self,
        k: u32,
        ring: R,
        vars: Arc<VarTable>,
    ) -> Result<SparsePoly<R>, UktError> {
        if k >= self.trunc {
            return Err(UktError::Truncation(format!(
                "q^{k} requested but series truncated at order {}",
                self.trunc
            )));
        }
        Ok(self
            .parts
            .get(&k)
            .cloned()
            .unwrap_or_else(|| SparsePoly::zero(ring, vars)))
    }

    pub fn nonzero_degrees(&self) -> Vec<u32> {
        self.parts.keys().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::QQ;
    use proptest::prelude::*;

    fn xy() -> Arc<VarTable> {
        VarTable::new(["x", "y"])
    }

    fn qp(terms: &[(i64, [u8; 2])]) -> SparsePoly<QQ> {
        let vars = xy();
        let mut p = SparsePoly::zero(QQ, vars);
        for &(c, e) in terms {
            p.add_term(Box::new(e), QQ.from_i64(c));
        }
        p
    }

    #[test]
    fn grevlex_total_degree_first() {
        assert_eq!(grevlex_cmp(&[2, 0], &[0, 1]), Ordering::Greater);
        // equal degree: rightmost difference smaller ⇒ greater
        assert_eq!(grevlex_cmp(&[2, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(grevlex_cmp(&[1, 1], &[0, 2]), Ordering::Greater);
    }

    #[test]
    fn mul_and_eval_agree() {
        let a = qp(&[(1, [1, 0]), (2, [0, 1])]); // x + 2y
        let b = qp(&[(1, [1, 0]), (-1, [0, 1])]); // x - y
        let prod = a.mul(&b); // x² + xy - 2y²
        assert_eq!(prod.num_terms(), 3);
        let pt = [QQ.from_i64(3), QQ.from_i64(5)];
        let lhs = prod.eval(&pt).unwrap();
        let rhs = QQ.mul(&a.eval(&pt).unwrap(), &b.eval(&pt).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn serialize_round_trip() {
        let p = qp(&[(1, [2, 0]), (-3, [1, 1]), (7, [0, 0])]);
        let text = p.serialize();
        let q = SparsePoly::parse(&text, QQ, xy()).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.serialize(), text);
        // checksum trailer present and well-formed
        let last = text.lines().last().unwrap();
        assert!(last.starts_with("# fnv1a64 "));
        assert_eq!(last.len(), "# fnv1a64 ".len() + 16);
    }

    #[test]
    fn zero_poly_serializes_to_header_only() {
        let p = SparsePoly::zero(QQ, xy());
        let text = p.serialize();
        assert_eq!(text.lines().count(), 3); // header, vars, checksum
        let q = SparsePoly::parse(&text, QQ, xy()).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn derivative_product_rule() {
        let a = qp(&[(1, [1, 0]), (2, [0, 1])]);
        let b = qp(&[(5, [1, 1]), (-1, [0, 0])]);
        let lhs = a.mul(&b).derivative(0);
        let rhs = a.derivative(0).mul(&b).add(&a.mul(&b.derivative(0)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn orbit_sum_swap() {
        let vars = xy();
        // swap x,y; orbit of x²y is {x²y, xy²}
        let (p, size) = orbit_sum(QQ, vars, &[vec![1, 0]], &[2, 1]).unwrap();
        assert_eq!(size, 2);
        assert_eq!(p.num_terms(), 2);
        // invariance under the generator
        let one = QQ.one();
        let swapped = p.apply_scaled_permutation(&[1, 0], &[one.clone(), one]);
        assert_eq!(p, swapped);
    }

    #[test]
    fn q_component_bounds() {
        let mut s: QSeriesPoly<QQ> = QSeriesPoly::new(4);
        s.add_part(2, qp(&[(1, [1, 0])]));
        assert!(s.q_component(4, QQ, xy()).is_err());
        assert!(s.q_component(0, QQ, xy()).unwrap().is_zero());
        assert_eq!(s.q_component(2, QQ, xy()).unwrap().num_terms(), 1);
    }

    proptest! {
        #[test]
        fn ring_laws_distributive(
            a in proptest::collection::vec((-5i64..5, 0u8..3, 0u8..3), 0..6),
            b in proptest::collection::vec((-5i64..5, 0u8..3, 0u8..3), 0..6),
            c in proptest::collection::vec((-5i64..5, 0u8..3, 0u8..3), 0..6),
        ) {
            let mk = |v: &Vec<(i64, u8, u8)>| {
                let mut p = SparsePoly::zero(QQ, xy());
                for &(k, e0, e1) in v {
                    p.add_term(Box::new([e0, e1]), QQ.from_i64(k));
                }
                p
            };
            let (a, b, c) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!(a.mul(&b).total_degree(), a.total_degree() + b.total_degree());
            }
        }
    }
}
