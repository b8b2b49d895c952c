//! Permutations on a finite point set and group order via Schreier–Sims.
//!
//! The stabilizer chain stores, per level, a base point, the level's
//! generators and a transversal (one witness permutation per orbit point);
//! the group order is the product of the orbit sizes.

use std::collections::HashMap;

/// A permutation of {0, …, n−1}; `map[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    pub map: Vec<u16>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            map: (0..n as u16).collect(),
        }
    }

    pub fn from_map(map: Vec<usize>) -> Perm {
        let n = map.len();
        let mut seen = vec![false; n];
        for &i in &map {
            assert!(i < n && !seen[i], "not a permutation");
            seen[i] = true;
        }
        Perm {
            map: map.into_iter().map(|x| x as u16).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.map[p] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` then `other`: (other ∘ self)(p) = other(self(p)).
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            map: self.map.iter().map(|&x| other.map[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0u16; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            map[x as usize] = i as u16;
        }
        Perm { map }
    }

    pub fn order(&self) -> u64 {
        let mut k = 1u64;
        let mut g = self.clone();
        while !g.is_identity() {
            g = g.then(self);
            k += 1;
        }
        k
    }
}

struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// orbit point → permutation u with u(base) = point
    transversal: HashMap<usize, Perm>,
}

/// A base and strong generating set built by the Schreier–Sims procedure.
pub struct StabChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(n: usize, generators: &[Perm]) -> StabChain {
        let mut chain = StabChain { n, levels: Vec::new() };
        let gens: Vec<Perm> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return chain;
        }
        let base = (0..n)
            .find(|&p| gens.iter().any(|g| g.apply(p) != p))
            .expect("non-identity generator");
        chain.levels.push(Level {
            base,
            gens,
            transversal: HashMap::new(),
        });
        chain.build();
        chain
    }

    pub fn order(&self) -> u64 {
        self.levels
            .iter()
            .map(|l| l.transversal.len() as u64)
            .product()
    }

    /// Membership test: sift and check the residue is trivial.
    pub fn contains(&self, g: &Perm) -> bool {
        let (h, _) = self.strip(g.clone(), 0);
        h.is_identity()
    }

    fn strip(&self, mut h: Perm, start: usize) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let image = h.apply(level.base);
            match level.transversal.get(&image) {
                None => return (h, i),
                Some(u) => {
                    // replace h by u⁻¹ ∘ h so it fixes the base
                    h = h.then(&u.inverse());
                }
            }
        }
        let n = self.levels.len();
        (h, n)
    }

    /// Generators of the stabilizer of the first `level` base points: every
    /// generator stored at a level ≥ `level` fixes all earlier base points.
    fn gens_at(&self, level: usize) -> Vec<Perm> {
        self.levels[level..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    /// Recompute the orbit/transversal of the base point at `level`.
    fn compute_orbit(&mut self, level: usize) {
        let base = self.levels[level].base;
        let gens = self.gens_at(level);
        let mut transversal: HashMap<usize, Perm> = HashMap::new();
        transversal.insert(base, Perm::identity(self.n));
        let mut queue = vec![base];
        while let Some(p) = queue.pop() {
            let u_p = transversal[&p].clone();
            for g in &gens {
                let q = g.apply(p);
                if !transversal.contains_key(&q) {
                    transversal.insert(q, u_p.then(g));
                    queue.push(q);
                }
            }
        }
        self.levels[level].transversal = transversal;
    }

    /// Bottom-up verification: a level is done once all of its Schreier
    /// generators sift to the identity through the deeper levels; a
    /// nontrivial residue is installed at the level it reaches and
    /// verification resumes there.
    fn build(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'verify: while i >= 0 {
            let iu = i as usize;
            self.compute_orbit(iu);
            let gens = self.gens_at(iu);
            let mut orbit: Vec<usize> =
                self.levels[iu].transversal.keys().copied().collect();
            orbit.sort_unstable();
            for &p in &orbit {
                let u_p = self.levels[iu].transversal[&p].clone();
                for g in &gens {
                    let q = g.apply(p);
                    let u_q = self.levels[iu].transversal[&q].clone();
                    let s = u_p.then(g).then(&u_q.inverse());
                    let (h, reached) = self.strip(s, iu + 1);
                    if h.is_identity() {
                        continue;
                    }
                    if reached == self.levels.len() {
                        let base = (0..self.n)
                            .find(|&b| h.apply(b) != b)
                            .expect("non-identity");
                        self.levels.push(Level {
                            base,
                            gens: Vec::new(),
                            transversal: HashMap::new(),
                        });
                    }
                    self.levels[reached].gens.push(h);
                    i = reached as isize;
                    continue 'verify;
                }
            }
            i -= 1;
        }
    }
}

/// Full BFS enumeration of a permutation group (slow cross-check).
pub fn enumerate_group(generators: &[Perm], cap: usize) -> Option<usize> {
    let n = generators.first()?.degree();
    let mut seen = std::collections::HashSet::new();
    let mut queue = vec![Perm::identity(n)];
    seen.insert(queue[0].clone());
    while let Some(g) = queue.pop() {
        for h in generators {
            let gh = g.then(h);
            if seen.len() > cap {
                return None;
            }
            if seen.insert(gh.clone()) {
                queue.push(gh);
            }
        }
    }
    Some(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_order() {
        // S5 generated by a transposition and a 5-cycle
        let t = Perm::from_map(vec![1, 0, 2, 3, 4]);
        let c = Perm::from_map(vec![1, 2, 3, 4, 0]);
        let chain = StabChain::new(5, &[t.clone(), c.clone()]);
        assert_eq!(chain.order(), 120);
        assert_eq!(enumerate_group(&[t, c], 1000), Some(120));
    }

    #[test]
    fn identity_only() {
        let chain = StabChain::new(6, &[Perm::identity(6)]);
        assert_eq!(chain.order(), 1);
    }

    #[test]
    fn membership() {
        let t = Perm::from_map(vec![1, 0, 2, 3]);
        let c = Perm::from_map(vec![1, 2, 3, 0]);
        // A4 vs S4: 3-cycles generate A4
        let r = Perm::from_map(vec![1, 2, 0, 3]);
        let s = Perm::from_map(vec![0, 2, 3, 1]);
        let a4 = StabChain::new(4, &[r, s]);
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&t));
        assert!(a4.contains(&c.then(&c))); // double transposition is even
    }
}
