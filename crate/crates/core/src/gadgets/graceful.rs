use super::paths::Path;
use crate::design::Vertex;
use crate::error::{Error, Result};

/// `true` when `labels` is a permutation of `0..h` whose consecutive
/// differences are exactly `1..h`.
pub fn is_graceful(labels: &[u32]) -> bool {
    let h = labels.len();
    let mut seen_label = vec![false; h];
    let mut seen_diff = vec![false; h];
    for &x in labels {
        match seen_label.get_mut(x as usize) {
            Some(s) if !*s => *s = true,
            _ => return false,
        }
    }
    for w in labels.windows(2) {
        let d = w[0].abs_diff(w[1]) as usize;
        if d == 0 || seen_diff[d] {
            return false;
        }
        seen_diff[d] = true;
    }
    true
}

/// 0, h-1, 1, h-2, ...
fn zigzag(h: u32) -> Vec<u32> {
    let (mut lo, mut hi) = (0, h - 1);
    let mut out = Vec::with_capacity(h as usize);
    while out.len() < h as usize {
        out.push(lo);
        lo += 1;
        if out.len() < h as usize {
            out.push(hi);
            hi -= 1;
        }
    }
    out
}

/// A graceful labelling starting at label 1.
///
/// `1, h-1, 0` followed by the complement of the labelling for `h - 3`,
/// shifted by 2. The complement of a sequence starting at 1 starts at
/// `h - 5`, so the junction edge has difference `h - 3`.
fn starting_at_one(h: u32) -> Vec<u32> {
    match h {
        2 => vec![1, 0],
        3 => vec![1, 0, 2],
        4 => vec![1, 2, 0, 3],
        _ => {
            let inner = starting_at_one(h - 3);
            let top = h - 4;
            let mut out = vec![1, h - 1, 0];
            out.extend(inner.into_iter().map(|x| top - x + 2));
            out
        }
    }
}

/// A graceful labelling of the path on `h` vertices with one end labelled
/// `leaf` (0 or 1). The labelled end comes first.
pub fn graceful_path(h: u32, leaf: u32) -> Result<Path> {
    if h < 2 {
        return Err(Error::InvalidParameter(format!(
            "graceful path needs h >= 2, got {h}"
        )));
    }
    let labels = match leaf {
        0 => zigzag(h),
        1 => starting_at_one(h),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "leaf label must be 0 or 1, got {leaf}"
            )))
        }
    };
    debug_assert!(is_graceful(&labels));
    Path::new(labels.into_iter().map(Vertex::Plain).collect())
}
