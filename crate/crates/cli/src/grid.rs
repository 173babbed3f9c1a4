// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use lgkit::Complex64;

use crate::args::GridArgs;

/// `res` nodes `-extent + 2·extent·i/res`: the right edge is left out, so
/// for even `res` node `res/2` sits exactly on 0.
pub fn axis(extent: f64, res: usize) -> Vec<f64> {
    let step = 2.0 * extent / res as f64;
    (0..res).map(|i| -extent + step * i as f64).collect()
}

/// Grid points, row-major with the second coordinate fastest.
pub fn plane(g: GridArgs) -> Vec<Complex64> {
    let ax = axis(g.extent, g.res as usize);
    ax.iter().flat_map(|&x| ax.iter().map(move |&y| Complex64::new(x, y))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centre_node_is_zero() {
        let a = axis(3.0, 8);
        assert_eq!(a.len(), 8);
        assert_eq!(a[0], -3.0);
        assert_eq!(a[4], 0.0);
        let p = plane(GridArgs { extent: 1.0, res: 8 });
        assert_eq!(p.len(), 64);
        assert_eq!(p[1], Complex64::new(-1.0, -0.75));
    }
}
