//! Conjugacy classes, centralizers and conjugacy witnesses.

use std::sync::Arc;

use super::{Group, Subgroup};

/// Conjugacy classes of a group. Class `0` is `{e}`; every other class is
/// represented by its minimal element and classes are ordered by that
/// representative.
#[derive(Debug, Clone)]
pub struct ConjugacyData {
    group: Arc<Group>,
    reps: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    centralizers: Vec<Subgroup>,
}

impl ConjugacyData {
    pub fn new(group: Arc<Group>) -> ConjugacyData {
        let n = group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            let mut members: Vec<usize> = (0..n).map(|g| group.conj(g, x)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = idx;
            }
            classes.push(members);
        }
        let centralizers = reps
            .iter()
            .map(|&x| {
                let members = (0..n).filter(|&g| group.conj(g, x) == x).collect();
                Subgroup::new(group.clone(), members).expect("centralizers are subgroups")
            })
            .collect();
        ConjugacyData { group, reps, class_of, classes, centralizers }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, k: usize) -> usize {
        self.reps[k]
    }

    #[inline]
    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn centralizer(&self, k: usize) -> &Subgroup {
        &self.centralizers[k]
    }

    pub fn centralizers(&self) -> &[Subgroup] {
        &self.centralizers
    }

    /// The class index `k` of `g` and the minimal `y` with `y g y⁻¹ = reps[k]`.
    pub fn rep_and_witness(&self, g: usize) -> (usize, usize) {
        let k = self.class_of[g];
        let target = self.reps[k];
        let y = (0..self.group.order())
            .find(|&y| self.group.conj(y, g) == target)
            .expect("g is conjugate to its class representative");
        (k, y)
    }

    /// Class index of the inverse class `x⁻¹`.
    pub fn inverse_class(&self, k: usize) -> usize {
        self.class_of[self.group.inv(self.reps[k])]
    }
}
