use num_complex::Complex64;

use super::{check_mask, strides, DenseOperator, LocalErrorBasis};
use crate::ame::DimensionProfile;
use crate::error::{Error, Result};

/// Splits every full index into its (kept, traced) sub-indices.
pub(crate) fn split_indices(dims: &[u32], keep: u64) -> (Vec<usize>, Vec<usize>, usize, usize) {
    let st = strides(dims);
    let side = st.first().map_or(1, |s| s * dims[0] as usize);
    let (mut ks, mut ts) = (1usize, 1usize);
    let mut kidx = vec![0usize; side];
    let mut tidx = vec![0usize; side];
    for i in (0..dims.len()).rev() {
        let d = dims[i] as usize;
        let kept = keep >> i & 1 == 1;
        for idx in 0..side {
            let digit = idx / st[i] % d;
            if kept {
                kidx[idx] += digit * ks;
            } else {
                tidx[idx] += digit * ts;
            }
        }
        if kept {
            ks *= d;
        } else {
            ts *= d;
        }
    }
    (kidx, tidx, ks, ts)
}

/// Partial trace keeping the sites of `keep`; a `1×1` result when nothing
/// is kept.
pub(crate) fn reduce(m: &DenseOperator, keep: u64) -> (Vec<Complex64>, usize) {
    let (kidx, tidx, ks, ts) = split_indices(m.profile().dims(), keep);
    let mut groups: Vec<Vec<(usize, usize)>> = vec![Vec::with_capacity(ks); ts];
    for (full, (&k, &t)) in kidx.iter().zip(&tidx).enumerate() {
        groups[t].push((k, full));
    }
    let side = m.side();
    let mut out = vec![Complex64::new(0.0, 0.0); ks * ks];
    for g in &groups {
        for &(kr, fr) in g {
            let row = &m.matrix()[fr * side..(fr + 1) * side];
            for &(kc, fc) in g {
                out[kr * ks + kc] += row[fc];
            }
        }
    }
    (out, ks)
}

/// `Tr_S(M)`, an operator on the remaining sites in their original order.
pub fn partial_trace(m: &DenseOperator, subset: u64) -> Result<DenseOperator> {
    let profile = m.profile();
    check_mask(profile, subset)?;
    let keep = profile.full_mask() & !subset;
    if keep == 0 {
        return Err(Error::Domain(
            "tracing out every site leaves a scalar; use DenseOperator::trace".into(),
        ));
    }
    let dims = profile
        .dims()
        .iter()
        .enumerate()
        .filter(|(i, _)| keep >> i & 1 == 1)
        .map(|(_, &d)| d)
        .collect();
    let (out, _) = reduce(m, keep);
    DenseOperator::new(DimensionProfile::new(dims)?, out)
}

/// `Tr_S(M) ⊗ 1_S` laid out on the full system, by direct index
/// contraction.
pub fn partial_trace_with_identity(m: &DenseOperator, subset: u64) -> Result<DenseOperator> {
    let profile = m.profile();
    check_mask(profile, subset)?;
    let keep = profile.full_mask() & !subset;
    let (red, ks) = reduce(m, keep);
    let (kidx, tidx, _, _) = split_indices(profile.dims(), keep);
    let side = m.side();
    let mut out = vec![Complex64::new(0.0, 0.0); side * side];
    for r in 0..side {
        for c in 0..side {
            if tidx[r] == tidx[c] {
                out[r * side + c] = red[kidx[r] * ks + kidx[c]];
            }
        }
    }
    DenseOperator::new(profile.clone(), out)
}

/// `Π_{i∈S} d_i^{-1} Σ_{supp(E) ⊆ S} E M E†`, summed over the local
/// Heisenberg-Weyl basis one site at a time.
///
/// Equals `Tr_S(M) ⊗ 1_S`. Sites in `S` may have different dimensions;
/// each uses its own local basis.
pub fn channel_partial_trace(m: &DenseOperator, subset: u64) -> Result<DenseOperator> {
    let profile = m.profile();
    check_mask(profile, subset)?;
    let dims = profile.dims();
    let st = strides(dims);
    let side = m.side();
    let mut cur = m.matrix().to_vec();
    for i in (0..dims.len()).filter(|i| subset >> i & 1 == 1) {
        let d = dims[i] as usize;
        let basis = LocalErrorBasis::new(dims[i])?;
        let digit: Vec<usize> = (0..side).map(|x| x / st[i] % d).collect();
        let mut next = vec![Complex64::new(0.0, 0.0); side * side];
        for (a, b) in basis.labels() {
            let shift: Vec<usize> = (0..side)
                .map(|x| x + ((digit[x] + a as usize) % d) * st[i] - digit[x] * st[i])
                .collect();
            // (E M E†)[x+a, y+a] = ω^{b(x_i - y_i)} M[x, y]
            for r in 0..side {
                let sr = shift[r];
                for c in 0..side {
                    let v = cur[r * side + c];
                    if v == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    let k = (digit[r] + d - digit[c]) as u64 * b as u64;
                    next[sr * side + shift[c]] += basis.root(k) * v;
                }
            }
        }
        let inv = 1.0 / d as f64;
        next.iter_mut().for_each(|v| *v *= inv);
        cur = next;
    }
    DenseOperator::new(profile.clone(), cur)
}
