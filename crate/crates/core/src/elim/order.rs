use crate::poly::{PolyError, VarSpec};

/// Monomial orders. Blocks are compared in sequence; inside a block the
/// order is graded-lex with the variable spec's variable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GradedLex,
    /// The named groups form the highest block, everything else the second.
    Block(Vec<String>),
    /// Explicit blocks of variable indices, highest first; unlisted
    /// variables form a final block.
    Blocks(Vec<Vec<usize>>),
}

/// Resolved order: monomials are mapped to keys whose lexicographic order is
/// the monomial order. A key lists, per block, the block degree (when graded)
/// followed by the block's exponents.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub nvars: usize,
    pub key_len: usize,
    /// key position of each variable
    pub var_pos: Vec<usize>,
    /// key positions holding block degrees, with the positions they sum
    pub deg_slots: Vec<(usize, Vec<usize>)>,
}

impl Layout {
    pub fn new(spec: &VarSpec, order: &MonomialOrder) -> Result<Layout, PolyError> {
        let n = spec.nvars();
        let blocks: Vec<(bool, Vec<usize>)> = match order {
            MonomialOrder::Lex => vec![(false, (0..n).collect())],
            MonomialOrder::GradedLex => vec![(true, (0..n).collect())],
            MonomialOrder::Block(names) => {
                let mut first = Vec::new();
                for name in names {
                    let gi = spec.group_index(name)?;
                    first.extend(spec.group_range(gi));
                }
                first.sort_unstable();
                let rest: Vec<usize> = (0..n).filter(|v| !first.contains(v)).collect();
                vec![(true, first), (true, rest)]
            }
            MonomialOrder::Blocks(bs) => {
                let mut out: Vec<(bool, Vec<usize>)> = Vec::new();
                let mut seen = vec![false; n];
                for b in bs {
                    for &v in b {
                        if v >= n || seen[v] {
                            return Err(PolyError::InvalidSpec("bad block order".into()));
                        }
                        seen[v] = true;
                    }
                    out.push((true, b.clone()));
                }
                let rest: Vec<usize> = (0..n).filter(|&v| !seen[v]).collect();
                out.push((true, rest));
                out
            }
        };
        let blocks: Vec<(bool, Vec<usize>)> = blocks.into_iter().filter(|(_, b)| !b.is_empty()).collect();
        let mut var_pos = vec![0; n];
        let mut deg_slots = Vec::new();
        let mut pos = 0;
        for (graded, vars) in &blocks {
            let slot = if *graded {
                pos += 1;
                Some(pos - 1)
            } else {
                None
            };
            let start = pos;
            for &v in vars {
                var_pos[v] = pos;
                pos += 1;
            }
            if let Some(s) = slot {
                deg_slots.push((s, (start..pos).collect()));
            }
        }
        Ok(Layout { nvars: n, key_len: pos, var_pos, deg_slots })
    }

    pub fn key(&self, exps: &[u32]) -> Vec<u32> {
        let mut k = vec![0; self.key_len];
        for (v, &e) in exps.iter().enumerate() {
            k[self.var_pos[v]] = e;
        }
        for (s, ps) in &self.deg_slots {
            k[*s] = ps.iter().map(|&p| k[p]).sum();
        }
        k
    }

    pub fn exps(&self, key: &[u32]) -> Vec<u32> {
        (0..self.nvars).map(|v| key[self.var_pos[v]]).collect()
    }

    pub fn lcm(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut k: Vec<u32> = a.iter().zip(b).map(|(x, y)| *x.max(y)).collect();
        for (s, ps) in &self.deg_slots {
            k[*s] = ps.iter().map(|&p| k[p]).sum();
        }
        k
    }

    /// Total degree (over all variables) of a key.
    pub fn total_degree(&self, key: &[u32]) -> u32 {
        self.var_pos.iter().map(|&p| key[p]).sum()
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}
