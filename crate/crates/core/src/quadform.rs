//! The quadratic form Q_a(x) = Tr(a x^(p^k+1)) as a symmetric matrix over
//! F_p: rank, congruence diagonalization, and the sign class that drives
//! the weight formulas. Every classification is derived twice (matrix
//! route and point-count route) and the two must agree.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{quad_char, FieldCtx, FieldElement};
use crate::poly;
use crate::spectrum;

/// Symmetric m x m matrix over F_p, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<u64>,
}

impl SymmetricMatrix {
    pub fn zero(order: usize) -> Self {
        SymmetricMatrix {
            order,
            entries: vec![0; order * order],
        }
    }

    pub fn from_entries(order: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::OutOfRange("matrix entry count"));
        }
        let m = SymmetricMatrix { order, entries };
        for u in 0..order {
            for v in 0..u {
                if m.get(u, v) != m.get(v, u) {
                    return Err(Error::OutOfRange("matrix not symmetric"));
                }
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u64 {
        self.entries[u * self.order + v]
    }

    fn set(&mut self, u: usize, v: usize, val: u64) {
        self.entries[u * self.order + v] = val;
        self.entries[v * self.order + u] = val;
    }

    /// Entrywise scaling mod p.
    pub fn scaled(&self, c: u64, p: u64) -> SymmetricMatrix {
        SymmetricMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .map(|&e| poly::mod_mul(p, c, e))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }
}

/// General square matrix over F_p (the congruence transform output).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    order: usize,
    entries: Vec<u64>,
}

impl Matrix {
    pub fn identity(order: usize) -> Self {
        let mut entries = vec![0; order * order];
        for u in 0..order {
            entries[u * order + u] = 1;
        }
        Matrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u64 {
        self.entries[u * self.order + v]
    }

    pub fn mul(&self, other: &Matrix, p: u64) -> Matrix {
        let o = self.order;
        let mut entries = vec![0u64; o * o];
        for u in 0..o {
            for w in 0..o {
                let c = self.get(u, w);
                if c == 0 {
                    continue;
                }
                for v in 0..o {
                    entries[u * o + v] =
                        (entries[u * o + v] + poly::mod_mul(p, c, other.get(w, v))) % p;
                }
            }
        }
        Matrix { order: o, entries }
    }

    pub fn mul_sym(&self, other: &SymmetricMatrix, p: u64) -> Matrix {
        self.mul(
            &Matrix {
                order: other.order,
                entries: other.entries.clone(),
            },
            p,
        )
    }

    pub fn transpose(&self) -> Matrix {
        let o = self.order;
        let mut entries = vec![0u64; o * o];
        for u in 0..o {
            for v in 0..o {
                entries[v * o + u] = self.get(u, v);
            }
        }
        Matrix { order: o, entries }
    }

    pub fn is_nonsingular(&self, p: u64) -> bool {
        rank_of(p, self.order, self.entries.clone()) == self.order as u32
    }
}

/// Classification of Q_a: rank, the sign class
/// eps = eta((-1)^floor(r/2) * Delta) with Delta the product of the
/// diagonal coefficients of the diagonalized form, and the radical index
/// i defined by rank = m - 2*d*i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadFormProfile {
    pub a: FieldElement,
    pub k: u32,
    pub rank: u32,
    pub eps: i8,
    pub i: u8,
}

fn check_exponent(ctx: &FieldCtx, k: u32) -> Result<()> {
    if k < 1 || k >= ctx.m() {
        return Err(Error::BadExponent { k, m: ctx.m() });
    }
    Ok(())
}

/// Polarization matrix of Q_a over the polynomial basis:
/// B[u][v] = Tr(a * (b_u * b_v^(p^k) + b_u^(p^k) * b_v)), so that
/// Q_a(x) = 2^(-1) * X B X^T for the coordinate vector X.
pub fn gram_matrix(ctx: &FieldCtx, k: u32, a: &FieldElement) -> Result<SymmetricMatrix> {
    check_exponent(ctx, k)?;
    if a.is_zero() {
        return Err(Error::ZeroOperand("gram matrix of the zero form"));
    }
    let m = ctx.m() as usize;
    let pk = poly::checked_pow_u64(ctx.p(), k).ok_or(Error::ArithmeticOverflow)?;
    let basis: Vec<FieldElement> = (0..m)
        .map(|u| {
            let mut coeffs = vec![0u64; m];
            coeffs[u] = 1;
            ctx.element(&coeffs).expect("basis element")
        })
        .collect();
    let frob: Vec<FieldElement> = basis.iter().map(|b| ctx.pow(b, pk as u128)).collect();
    let mut out = SymmetricMatrix::zero(m);
    for u in 0..m {
        for v in u..m {
            let s = ctx.add(&ctx.mul(&basis[u], &frob[v]), &ctx.mul(&frob[u], &basis[v]));
            out.set(u, v, ctx.trace(&ctx.mul(a, &s)));
        }
    }
    Ok(out)
}

fn rank_of(p: u64, order: usize, mut a: Vec<u64>) -> u32 {
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..order {
        let pivot = (row..order).find(|&r| a[r * order + col] != 0);
        let Some(pr) = pivot else { continue };
        a.swap(row * order + col, pr * order + col);
        for c in col + 1..order {
            a.swap(row * order + c, pr * order + c);
        }
        let inv = poly::mod_inv(p, a[row * order + col]);
        for r in row + 1..order {
            let f = poly::mod_mul(p, a[r * order + col], inv);
            if f != 0 {
                for c in col..order {
                    let sub = poly::mod_mul(p, f, a[row * order + c]);
                    a[r * order + c] = poly::mod_sub(p, a[r * order + c], sub);
                }
            }
        }
        rank += 1;
        row += 1;
        if row == order {
            break;
        }
    }
    rank as u32
}

/// Rank of a symmetric matrix by elimination over F_p.
pub fn form_rank(p: u64, b: &SymmetricMatrix) -> u32 {
    rank_of(p, b.order, b.entries.clone())
}

/// Congruence diagonalization: returns (M, diag) with M nonsingular,
/// M B M^T = diag(diag), and the rank(B) nonzero entries listed first.
///
/// Pivot repair for p odd: if the whole active diagonal vanishes but some
/// off-diagonal entry b_uv is nonzero, adding row/column v to u creates the
/// pivot 2*b_uv.
pub fn diagonalize(p: u64, b: &SymmetricMatrix) -> (Matrix, Vec<u64>) {
    let o = b.order;
    let mut a = b.clone();
    let mut t = Matrix::identity(o);

    let row_op =
        |a: &mut SymmetricMatrix, t: &mut Matrix, dst: usize, src: usize, f: u64, sub: bool| {
            // row dst +-= f * row src, then the same column op, mirrored into t
            for v in 0..o {
                let delta = poly::mod_mul(p, f, a.entries[src * o + v]);
                let e = &mut a.entries[dst * o + v];
                *e = if sub {
                    poly::mod_sub(p, *e, delta)
                } else {
                    poly::mod_add(p, *e, delta)
                };
            }
            for u in 0..o {
                let delta = poly::mod_mul(p, f, a.entries[u * o + src]);
                let e = &mut a.entries[u * o + dst];
                *e = if sub {
                    poly::mod_sub(p, *e, delta)
                } else {
                    poly::mod_add(p, *e, delta)
                };
            }
            for v in 0..o {
                let delta = poly::mod_mul(p, f, t.entries[src * o + v]);
                let e = &mut t.entries[dst * o + v];
                *e = if sub {
                    poly::mod_sub(p, *e, delta)
                } else {
                    poly::mod_add(p, *e, delta)
                };
            }
        };
    let swap_rows = |a: &mut SymmetricMatrix, t: &mut Matrix, u: usize, v: usize| {
        for c in 0..o {
            a.entries.swap(u * o + c, v * o + c);
        }
        for r in 0..o {
            a.entries.swap(r * o + u, r * o + v);
        }
        for c in 0..o {
            t.entries.swap(u * o + c, v * o + c);
        }
    };

    for piv in 0..o {
        let mut pr = (piv..o).find(|&u| a.get(u, u) != 0);
        if pr.is_none() {
            'repair: for u in piv..o {
                for v in u + 1..o {
                    if a.get(u, v) != 0 {
                        row_op(&mut a, &mut t, u, v, 1, false);
                        debug_assert_ne!(a.get(u, u), 0);
                        pr = Some(u);
                        break 'repair;
                    }
                }
            }
        }
        let Some(u) = pr else { break };
        if u != piv {
            swap_rows(&mut a, &mut t, u, piv);
        }
        let dinv = poly::mod_inv(p, a.get(piv, piv));
        for w in piv + 1..o {
            let f = poly::mod_mul(p, a.get(w, piv), dinv);
            if f != 0 {
                row_op(&mut a, &mut t, w, piv, f, true);
            }
        }
    }
    let diag: Vec<u64> = (0..o).map(|u| a.get(u, u)).collect();
    debug_assert!(diag.iter().skip_while(|&&d| d != 0).all(|&d| d == 0));
    (t, diag)
}

/// Number of solutions of a nondegenerate quadratic form in `l` variables
/// over F_q equaling b, from the classical point-count formulas.
///
/// `eta_target` must be eta((-1)^(l/2) * det) for even l, and
/// eta((-1)^((l-1)/2) * b * det) for odd l (so 0 when b = 0).
pub fn quadric_count(q: u128, l: u32, b_is_zero: bool, eta_target: i8) -> u128 {
    if l == 0 {
        return u128::from(b_is_zero);
    }
    let ql1 = q.pow(l - 1);
    let signed = if l % 2 == 0 {
        let upsilon: i128 = if b_is_zero { q as i128 - 1 } else { -1 };
        ql1 as i128 + upsilon * q.pow((l - 2) / 2) as i128 * eta_target as i128
    } else {
        ql1 as i128 + q.pow((l - 1) / 2) as i128 * eta_target as i128
    };
    debug_assert!(signed >= 0);
    signed as u128
}

/// Predicted trace-value histogram (N_a(beta)) for a form of the given rank
/// and sign class, with the p^(m-rank) radical directions scaled in.
pub fn predicted_histogram(p: u64, m: u32, rank: u32, eps: i8) -> Vec<u64> {
    let scale = poly::checked_pow_u64(p, m - rank).expect("in-range field");
    (0..p)
        .map(|beta| {
            let eta_target = if rank % 2 == 0 {
                eps
            } else {
                eps * quad_char(p, beta)
            };
            let c = quadric_count(p as u128, rank, beta == 0, eta_target);
            scale * c as u64
        })
        .collect()
}

/// Brute-force N_a(beta) = #{x : Tr(a x^(p^k+1)) = beta}, by direct
/// evaluation over every field element.
pub fn count_quadric_points(ctx: &FieldCtx, k: u32, a: &FieldElement, beta: u64) -> Result<u64> {
    check_exponent(ctx, k)?;
    if beta >= ctx.p() {
        return Err(Error::OutOfRange("beta"));
    }
    let pk1 = poly::checked_pow_u64(ctx.p(), k).ok_or(Error::ArithmeticOverflow)? as u128 + 1;
    let mut count = 0u64;
    for xi in 0..ctx.size() {
        let x = ctx.element_from_index(xi);
        let u = ctx.pow(&x, pk1);
        if ctx.trace(&ctx.mul(a, &u)) == beta {
            count += 1;
        }
    }
    Ok(count)
}

/// Classify a nonzero form: rank and sign class from the diagonalization,
/// cross-checked against the point-count histogram. A disagreement is an
/// arithmetic fault, not a data error.
pub fn classify(ctx: &FieldCtx, k: u32, a: &FieldElement) -> Result<QuadFormProfile> {
    check_exponent(ctx, k)?;
    if a.is_zero() {
        return Err(Error::ZeroOperand("classify of the zero form"));
    }
    let p = ctx.p();
    let m = ctx.m();
    let d = poly::gcd_u64(k as u64, m as u64) as u32;

    let b = gram_matrix(ctx, k, a)?;
    // Q_a(x) = X A X^T for the form matrix A = 2^(-1) B; the diagonal
    // coefficients of the form (whose product is Delta) come from A, not B.
    let a_mat = b.scaled(poly::mod_inv(p, 2), p);
    let rank = form_rank(p, &a_mat);
    let i = if rank == m {
        0u8
    } else if rank + 2 * d == m {
        1u8
    } else {
        return Err(Error::Inconsistency("rank outside {m, m-2d}"));
    };
    let (_, diag) = diagonalize(p, &a_mat);
    let nonzero = diag.iter().take_while(|&&x| x != 0).count() as u32;
    if nonzero != rank {
        return Err(Error::Inconsistency("diagonal support != rank"));
    }
    let delta = diag[..rank as usize]
        .iter()
        .fold(1u64, |acc, &x| poly::mod_mul(p, acc, x));
    let arg = if (rank / 2) % 2 == 1 {
        p - delta
    } else {
        delta
    };
    let eps = quad_char(p, arg);
    debug_assert_ne!(eps, 0);

    let hist = spectrum::trace_histogram(ctx, k, a)?;
    if hist != predicted_histogram(p, m, rank, eps) {
        return Err(if hist == predicted_histogram(p, m, rank, -eps) {
            Error::Inconsistency("sign class: diagonalization vs point counts")
        } else {
            Error::Inconsistency("histogram does not match rank/sign prediction")
        });
    }

    Ok(QuadFormProfile {
        a: a.clone(),
        k,
        rank,
        eps,
        i,
    })
}
