//! Radix-p Fourier transform over the additive group (F_p)^m.
//!
//! Functions on F_{p^m} are indexed by the radix-p integer of their
//! coordinate vector, so the group transform decomposes into m rounds of
//! p-point transforms along each digit.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

/// zeta_p^j for j in 0..p.
pub(crate) fn roots_of_unity(p: usize) -> Vec<Complex64> {
    let step = 2.0 * core::f64::consts::PI / p as f64;
    (0..p)
        .map(|j| {
            let t = step * j as f64;
            Complex64::new(libm::cos(t), libm::sin(t))
        })
        .collect()
}

/// In-place transform: on return `data[c] = sum_x data_in[x] * zeta^(c.x)`,
/// where `c.x` is the digit-wise dot product mod p.
pub(crate) fn dft_radix_p(data: &mut [Complex64], p: usize, m: u32, zetas: &[Complex64]) {
    debug_assert_eq!(data.len(), p.pow(m));
    let q = data.len();
    let mut tmp = vec![Complex64::new(0.0, 0.0); p];
    let mut stride = 1usize;
    for _ in 0..m {
        let block = stride * p;
        let mut start = 0;
        while start < q {
            for off in 0..stride {
                let base = start + off;
                for (j, slot) in tmp.iter_mut().enumerate() {
                    *slot = data[base + j * stride];
                }
                for l in 0..p {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (j, &v) in tmp.iter().enumerate() {
                        acc += v * zetas[(j * l) % p];
                    }
                    data[base + l * stride] = acc;
                }
            }
            start += block;
        }
        stride = block;
    }
}
