use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use super::PolyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Projective,
    Affine,
    Parameter,
    Auxiliary,
}

impl GroupKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::Projective => "projective",
            GroupKind::Affine => "affine",
            GroupKind::Parameter => "parameter",
            GroupKind::Auxiliary => "auxiliary",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "projective" => Some(GroupKind::Projective),
            "affine" => Some(GroupKind::Affine),
            "parameter" => Some(GroupKind::Parameter),
            "auxiliary" => Some(GroupKind::Auxiliary),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarGroup {
    pub name: String,
    pub size: usize,
    pub kind: GroupKind,
}

impl VarGroup {
    pub fn new(name: impl Into<String>, size: usize, kind: GroupKind) -> Self {
        VarGroup { name: name.into(), size, kind }
    }
}

/// Ordered variable groups. Variables are numbered consecutively in group
/// declaration order; variable `j` of group `x` prints as `x_j`, or `x` when
/// the group has a single variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSpec {
    groups: Vec<VarGroup>,
    offsets: Vec<usize>,
    nvars: usize,
}

impl VarSpec {
    pub fn new(groups: Vec<VarGroup>) -> Result<Arc<VarSpec>, PolyError> {
        if groups.is_empty() {
            return Err(PolyError::InvalidSpec("at least one group is required".into()));
        }
        let mut offsets = Vec::with_capacity(groups.len());
        let mut nvars = 0;
        for (i, g) in groups.iter().enumerate() {
            if g.size == 0 {
                return Err(PolyError::InvalidSpec(format!("group `{}` has size 0", g.name)));
            }
            if g.name.is_empty() || !g.name.chars().next().unwrap().is_alphabetic() {
                return Err(PolyError::InvalidSpec(format!("invalid group name `{}`", g.name)));
            }
            if !g.name.chars().all(|c| c.is_alphanumeric()) {
                return Err(PolyError::InvalidSpec(format!(
                    "group name `{}` must be alphanumeric",
                    g.name
                )));
            }
            if groups[..i].iter().any(|h| h.name == g.name) {
                return Err(PolyError::InvalidSpec(format!("duplicate group `{}`", g.name)));
            }
            offsets.push(nvars);
            nvars += g.size;
        }
        Ok(Arc::new(VarSpec { groups, offsets, nvars }))
    }

    /// Shorthand for specs built in code: `(name, size, kind)` triples.
    pub fn build(groups: &[(&str, usize, GroupKind)]) -> Result<Arc<VarSpec>, PolyError> {
        VarSpec::new(groups.iter().map(|&(n, s, k)| VarGroup::new(n, s, k)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn groups(&self) -> &[VarGroup] {
        &self.groups
    }

    pub fn ngroups(&self) -> usize {
        self.groups.len()
    }

    pub fn group(&self, gi: usize) -> &VarGroup {
        &self.groups[gi]
    }

    pub fn group_index(&self, name: &str) -> Result<usize, PolyError> {
        self.groups
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| PolyError::UnknownGroup(name.to_string()))
    }

    pub fn group_range(&self, gi: usize) -> Range<usize> {
        self.offsets[gi]..self.offsets[gi] + self.groups[gi].size
    }

    pub fn group_of_var(&self, v: usize) -> usize {
        match self.offsets.binary_search(&v) {
            Ok(i) => {
                // several groups cannot share an offset because sizes are positive
                i
            }
            Err(i) => i - 1,
        }
    }

    pub fn groups_of_kind(&self, kind: GroupKind) -> Vec<usize> {
        (0..self.groups.len()).filter(|&i| self.groups[i].kind == kind).collect()
    }

    /// Projective dimensions `n_i = size_i - 1` of the projective groups.
    pub fn projective_dims(&self) -> Vec<usize> {
        self.groups
            .iter()
            .filter(|g| g.kind == GroupKind::Projective)
            .map(|g| g.size - 1)
            .collect()
    }

    pub fn var_name(&self, v: usize) -> String {
        let gi = self.group_of_var(v);
        let g = &self.groups[gi];
        if g.size == 1 {
            g.name.clone()
        } else {
            format!("{}_{}", g.name, v - self.offsets[gi])
        }
    }

    /// Resolves `x`, `x_3` or `x3` style names. The underscore form is
    /// tried first so that `x1_0` and `x10` stay unambiguous.
    pub fn find_var(&self, name: &str) -> Option<usize> {
        for (gi, g) in self.groups.iter().enumerate() {
            if g.size == 1 && g.name == name {
                return Some(self.offsets[gi]);
            }
        }
        for underscore in [true, false] {
            for (gi, g) in self.groups.iter().enumerate() {
                if g.size == 1 {
                    continue;
                }
                let Some(rest) = name.strip_prefix(g.name.as_str()) else { continue };
                let rest = if underscore {
                    match rest.strip_prefix('_') {
                        Some(r) => r,
                        None => continue,
                    }
                } else {
                    rest
                };
                if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
                    continue;
                }
                if let Ok(j) = rest.parse::<usize>() {
                    if j < g.size {
                        return Some(self.offsets[gi] + j);
                    }
                }
            }
        }
        None
    }

    /// New spec with extra groups appended.
    pub fn extend(&self, extra: &[VarGroup]) -> Result<Arc<VarSpec>, PolyError> {
        let mut groups = self.groups.clone();
        groups.extend_from_slice(extra);
        VarSpec::new(groups)
    }

    /// New spec without the named groups, and for every old variable its new index.
    pub fn remove_groups(&self, drop: &[usize]) -> Result<(Arc<VarSpec>, Vec<Option<usize>>), PolyError> {
        let groups: Vec<VarGroup> = self
            .groups
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, g)| g.clone())
            .collect();
        let spec = VarSpec::new(groups)?;
        let mut map = vec![None; self.nvars];
        let mut next = 0;
        for (gi, _) in self.groups.iter().enumerate() {
            for v in self.group_range(gi) {
                if !drop.contains(&gi) {
                    map[v] = Some(next);
                    next += 1;
                }
            }
        }
        Ok((spec, map))
    }

    /// A group name not used by this spec, starting from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.group_index(base).is_err() {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}{i}"))
            .find(|n| self.group_index(n).is_err())
            .unwrap()
    }
}

impl fmt::Display for VarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|g| format!("{}[{}]:{}", g.name, g.size, g.kind.as_str()))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}
