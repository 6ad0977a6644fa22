//! Subgroups, right coset systems and double cosets.

use std::sync::Arc;

use super::Group;
use crate::error::{Error, Result};

/// A subgroup `H ≤ G`, stored as sorted parent indices together with the
/// standalone group `H` (local index `i` ↔ parent element `members[i]`).
/// Because members are sorted and the identity is `0`, the local identity
/// is again `0`.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<Group>,
    members: Vec<usize>,
    local: Arc<Group>,
    to_local: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// Validates closure under multiplication (finite, so inverses follow).
    pub fn new(parent: Arc<Group>, mut members: Vec<usize>) -> Result<Subgroup> {
        members.sort_unstable();
        members.dedup();
        let n = parent.order();
        if members.first() != Some(&0) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        if let Some(&bad) = members.iter().find(|&&g| g >= n) {
            return Err(Error::NotSubgroup(format!("element {bad} out of range")));
        }
        let mut to_local = vec![usize::MAX; n];
        for (i, &g) in members.iter().enumerate() {
            to_local[g] = i;
        }
        let m = members.len();
        let mut table = vec![vec![0; m]; m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                let ab = parent.mul(a, b);
                if to_local[ab] == usize::MAX {
                    return Err(Error::NotSubgroup(format!("{a}*{b} = {ab} not a member")));
                }
                table[i][j] = to_local[ab];
            }
        }
        let labels = parent.labels().map(|l| members.iter().map(|&g| l[g].clone()).collect());
        let local = Arc::new(Group::from_mult_table_labeled(&table, labels)?);
        Ok(Subgroup { parent, members, local, to_local })
    }

    /// The subgroup generated by `gens`.
    pub fn generated(parent: Arc<Group>, gens: &[usize]) -> Subgroup {
        let mut members = vec![0usize];
        let mut in_set = vec![false; parent.order()];
        in_set[0] = true;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in gens {
                let y = parent.mul(x, g);
                if !in_set[y] {
                    in_set[y] = true;
                    members.push(y);
                }
            }
        }
        Subgroup::new(parent, members).expect("generated set is closed")
    }

    pub fn whole(parent: Arc<Group>) -> Subgroup {
        let members = parent.elements().collect();
        Subgroup::new(parent, members).expect("whole group")
    }

    pub fn trivial(parent: Arc<Group>) -> Subgroup {
        Subgroup::new(parent, vec![0]).expect("trivial group")
    }

    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    /// The subgroup as a group in its own right.
    pub fn local(&self) -> &Arc<Group> {
        &self.local
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.to_local[g] != usize::MAX
    }

    /// Local index of a parent element (panics if not a member).
    #[inline]
    pub fn local_index(&self, g: usize) -> usize {
        let l = self.to_local[g];
        assert!(l != usize::MAX, "element {g} is not in the subgroup");
        l
    }

    #[inline]
    pub fn try_local_index(&self, g: usize) -> Option<usize> {
        let l = self.to_local[g];
        (l != usize::MAX).then_some(l)
    }

    /// Parent element of a local index.
    #[inline]
    pub fn parent_index(&self, local: usize) -> usize {
        self.members[local]
    }

    /// `ᵍH = g H g⁻¹`.
    pub fn conjugate(&self, g: usize) -> Subgroup {
        let members = self.members.iter().map(|&h| self.parent.conj(g, h)).collect();
        Subgroup::new(self.parent.clone(), members).expect("conjugate of a subgroup")
    }

    /// `H ∩ K` by a sorted merge.
    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let (a, b) = (&self.members, &other.members);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Subgroup::new(self.parent.clone(), out).expect("intersection of subgroups")
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }

    /// A Sylow `p`-subgroup: greedily adjoin `p`-elements (in index order)
    /// while the generated subgroup stays a `p`-group. Every `p`-subgroup lies
    /// in a Sylow subgroup, so the resulting maximal `p`-subgroup is Sylow.
    pub fn sylow(&self, p: usize) -> Subgroup {
        let is_p_power = |mut n: usize| {
            while n % p == 0 {
                n /= p;
            }
            n == 1
        };
        let mut gens: Vec<usize> = Vec::new();
        let mut current = Subgroup::trivial(self.parent.clone());
        for &g in &self.members {
            if current.contains(g) || !is_p_power(self.parent.element_order(g)) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(g);
            let cand = Subgroup::generated(self.parent.clone(), &trial);
            if is_p_power(cand.order()) {
                gens = trial;
                current = cand;
            }
        }
        current
    }
}

/// Right cosets `K = ⊔ H·γ_i` of `H` inside `K` (usually `K = G`), with
/// `γ_0` the identity and further representatives chosen as the minimal
/// unassigned element.
#[derive(Debug, Clone)]
pub struct CosetSystem {
    subgroup: Subgroup,
    gamma: Vec<usize>,
    coset_of: Vec<usize>,
}

impl CosetSystem {
    /// Right cosets of `h` in the whole parent group.
    pub fn new(h: &Subgroup) -> CosetSystem {
        Self::within(h, &Subgroup::whole(h.parent().clone())).expect("H ≤ G")
    }

    /// Right cosets of `h` in `k`.
    pub fn within(h: &Subgroup, k: &Subgroup) -> Result<CosetSystem> {
        if !h.is_subgroup_of(k) {
            return Err(Error::NotSubgroup("H is not contained in K".into()));
        }
        let g = h.parent();
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut gamma = Vec::new();
        for &x in k.members() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let idx = gamma.len();
            gamma.push(x);
            for &hh in h.members() {
                coset_of[g.mul(hh, x)] = idx;
            }
        }
        Ok(CosetSystem { subgroup: h.clone(), gamma, coset_of })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// Coset representatives `γ_0 = e, γ_1, …`.
    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    /// Index of the coset containing `g`.
    #[inline]
    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    /// `g = h·γ_i`; returns `(h, i)` with `h` a parent index.
    #[inline]
    pub fn decompose(&self, g: usize) -> (usize, usize) {
        let i = self.coset_of[g];
        let grp = self.subgroup.parent();
        (grp.mul(g, grp.inv(self.gamma[i])), i)
    }

    /// One threading step: `γ_i·g = h·γ_s`; returns `(h, s)`.
    #[inline]
    pub fn thread(&self, i: usize, g: usize) -> (usize, usize) {
        let grp = self.subgroup.parent();
        self.decompose(grp.mul(self.gamma[i], g))
    }
}

/// Double cosets `H \ G / K`, representatives by a minimal-index sweep.
#[derive(Debug, Clone)]
pub struct DoubleCosetSystem {
    left: Subgroup,
    right: Subgroup,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
    sizes: Vec<usize>,
}

impl DoubleCosetSystem {
    pub fn new(left: &Subgroup, right: &Subgroup) -> DoubleCosetSystem {
        let g = left.parent();
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for x in g.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            let mut size = 0;
            for &h in left.members() {
                for &k in right.members() {
                    let y = g.mul(g.mul(h, x), k);
                    if coset_of[y] == usize::MAX {
                        coset_of[y] = idx;
                        size += 1;
                    }
                }
            }
            sizes.push(size);
        }
        DoubleCosetSystem { left: left.clone(), right: right.clone(), reps, coset_of, sizes }
    }

    pub fn left(&self) -> &Subgroup {
        &self.left
    }

    pub fn right(&self) -> &Subgroup {
        &self.right
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }
}
