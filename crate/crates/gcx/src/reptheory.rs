//! Representation-theoretic arithmetic: Littlewood-Richardson coefficients,
//! symmetric-group characters via Murnaghan-Nakayama, the stable branching
//! rule from GL(2g) to Sp(2g), and Weyl dimension formulas.
//!
//! All memo tables are idempotent write-once caches behind locks, so every
//! function here is safe to call from arbitrary threads.

use crate::partitions::{partitions_of, CycleType, MultiplicityVector, Partition};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::Mutex;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RepError {
    #[error("cycle type of size {got} does not match partition of size {want}")]
    SizeMismatch { want: u32, got: u32 },
    #[error("partition {0:?} has more rows than the rank allows ({1})")]
    RowBound(Partition, usize),
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson coefficients
// ---------------------------------------------------------------------------

/// Counts Littlewood-Richardson skew tableaux of shape `lambda/mu` and
/// content `nu`: semistandard fillings whose reverse reading word is a
/// lattice word.
///
/// Cells are filled in reading-word order (rows top to bottom, each row
/// right to left) so the lattice prefix condition can be checked
/// incrementally during the backtracking.
fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let mut cells: Vec<(usize, usize)> = Vec::new();
    let rows = lambda.rows();
    for r in 0..rows {
        let lo = mu.part(r) as usize;
        let hi = lambda.part(r) as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    if cells.is_empty() {
        return u64::from(nu.is_empty());
    }
    let mut filling: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0; lambda.part(r) as usize])
        .collect();
    let mut counts = vec![0u32; nu.rows() + 1];
    let mut total = 0u64;

    fn go(
        i: usize,
        cells: &[(usize, usize)],
        mu: &Partition,
        nu: &Partition,
        filling: &mut [Vec<u32>],
        counts: &mut [u32],
        total: &mut u64,
    ) {
        if i == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[i];
        // Semistandardness: weakly increasing along rows (we fill right to
        // left, so the cell to the right is already filled and must be >=),
        // strictly increasing down columns (the cell above is filled).
        let right_bound = if (c + 1) < filling[r].len() && (c + 1) >= mu.part(r) as usize {
            filling[r][c + 1]
        } else {
            u32::MAX
        };
        let above = if r > 0 && c < filling[r - 1].len() && c >= mu.part(r - 1) as usize {
            Some(filling[r - 1][c])
        } else if r > 0 && c < mu.part(r - 1) as usize {
            // Cell above belongs to mu: no constraint from it.
            None
        } else if r > 0 {
            // Cell above is outside lambda: cannot happen for a valid skew
            // shape cell, but guard anyway.
            None
        } else {
            None
        };
        let lower = above.map(|a| a + 1).unwrap_or(1);
        for val in lower..=nu.rows() as u32 {
            if val > right_bound {
                break;
            }
            let v = val as usize;
            if counts[v] + 1 > nu.part(v - 1) {
                continue;
            }
            // Lattice condition on the reverse reading word prefix.
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            counts[v] += 1;
            filling[r][c] = val;
            go(i + 1, cells, mu, nu, filling, counts, total);
            counts[v] -= 1;
        }
    }

    go(0, &cells, mu, nu, &mut filling, &mut counts, &mut total);
    total
}

static LR_MEMO: Mutex<Option<HashMap<(Partition, Partition, Partition), u64>>> = Mutex::new(None);

/// The Littlewood-Richardson coefficient `c^lambda_{mu nu}`.
///
/// Zero whenever `|mu| + |nu| != |lambda|` or `mu` is not contained in
/// `lambda`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) {
        return 0;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    {
        let memo = LR_MEMO.lock().unwrap();
        if let Some(map) = memo.as_ref() {
            if let Some(&v) = map.get(&key) {
                return v;
            }
        }
    }
    let v = lr_count(lambda, mu, nu);
    let mut memo = LR_MEMO.lock().unwrap();
    memo.get_or_insert_with(HashMap::new).insert(key, v);
    v
}

// ---------------------------------------------------------------------------
// Stable GL(2g) -> Sp(2g) branching
// ---------------------------------------------------------------------------

static BRANCH_MEMO: Mutex<Option<HashMap<Partition, MultiplicityVector>>> = Mutex::new(None);

/// Stable branching of the GL(2g) irreducible labelled by `lambda` to
/// Sp(2g): returns the multiplicity `N_{mu lambda}` of each symplectic
/// irreducible `[mu]`.
///
/// Uses Littlewood's stable rule: `N_{mu lambda} = sum_beta c^lambda_{mu
/// beta}` over partitions `beta` all of whose column lengths are even.  Only
/// valid in the stable range (all output partitions must have at most g
/// rows for the target group of interest); the caller is responsible for g
/// being large enough.
pub fn branch_gl_to_sp(lambda: &Partition) -> MultiplicityVector {
    {
        let memo = BRANCH_MEMO.lock().unwrap();
        if let Some(map) = memo.as_ref() {
            if let Some(v) = map.get(lambda) {
                return v.clone();
            }
        }
    }
    let n = lambda.size();
    let mut out = MultiplicityVector::new();
    for beta_size in (0..=n).step_by(2) {
        for beta in partitions_of(beta_size) {
            if !beta.has_even_columns() || !lambda.contains(&beta) {
                continue;
            }
            for mu in partitions_of(n - beta_size) {
                let c = lr_coefficient(lambda, &mu, &beta);
                if c > 0 {
                    out.add(&mu, c as i64);
                }
            }
        }
    }
    let mut memo = BRANCH_MEMO.lock().unwrap();
    memo.get_or_insert_with(HashMap::new)
        .insert(lambda.clone(), out.clone());
    out
}

// ---------------------------------------------------------------------------
// Symmetric group characters (Murnaghan-Nakayama)
// ---------------------------------------------------------------------------

static SN_MEMO: Mutex<Option<HashMap<(Partition, Partition), i64>>> = Mutex::new(None);

/// Character value of the `S_r` irreducible `[lambda]` on the conjugacy
/// class `rho`, by the Murnaghan-Nakayama border-strip recursion.
pub fn sn_character(lambda: &Partition, rho: &CycleType) -> Result<i64, RepError> {
    if lambda.size() != rho.degree() {
        return Err(RepError::SizeMismatch {
            want: lambda.size(),
            got: rho.degree(),
        });
    }
    Ok(mn_rec(lambda, rho.0.parts()))
}

fn mn_rec(lambda: &Partition, cycles: &[u32]) -> i64 {
    if cycles.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), Partition::new(cycles));
    {
        let memo = SN_MEMO.lock().unwrap();
        if let Some(map) = memo.as_ref() {
            if let Some(&v) = map.get(&key) {
                return v;
            }
        }
    }
    // Remove a border strip of length cycles[0] in all possible ways.
    let strip = cycles[0];
    let rest = &cycles[1..];
    let mut acc = 0i64;
    let rows = lambda.rows();
    // A border strip removal leaving a partition shape: for each starting
    // row i, determine the unique strip of length `strip` whose lowest row
    // is i; iterate over all (start,end) row windows instead.
    // Standard formulation: for rows i..=j, removing the rim hook that spans
    // exactly those rows removes lambda_i - lambda'_{j+1-ish}... We use the
    // beta-number (first-column hook) encoding which is simplest to get
    // right: strips of length s correspond to pairs of beta numbers b, b-s.
    let mut beta: Vec<i64> = (0..rows)
        .map(|i| lambda.part(i) as i64 + (rows as i64 - 1 - i as i64))
        .collect();
    // beta is strictly decreasing.
    for i in 0..rows {
        let target = beta[i] - strip as i64;
        if target < 0 {
            continue;
        }
        if beta.iter().any(|&b| b == target) {
            continue;
        }
        // Height of the strip = number of beta entries strictly between
        // target and beta[i].
        let ht = beta
            .iter()
            .filter(|&&b| b < beta[i] && b > target)
            .count();
        let sign = if ht % 2 == 0 { 1 } else { -1 };
        let old = beta[i];
        beta[i] = target;
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let new_parts: Vec<u32> = beta
            .iter()
            .enumerate()
            .map(|(k, &b)| (b - (rows as i64 - 1 - k as i64)) as u32)
            .collect();
        acc += sign * mn_rec(&Partition::new(&new_parts), rest);
        // restore
        let pos = beta.iter().position(|&b| b == target).unwrap();
        beta.remove(pos);
        beta.push(old);
        beta.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut memo = SN_MEMO.lock().unwrap();
    memo.get_or_insert_with(HashMap::new).insert(key, acc);
    acc
}

/// Dimension of the `S_r` irreducible `[lambda]` (character at the identity).
pub fn sn_dim(lambda: &Partition) -> i64 {
    sn_character(lambda, &CycleType::identity(lambda.size())).unwrap()
}

/// Dimension of `[lambda]` by the hook length formula; independent oracle
/// for `sn_dim`.
pub fn sn_dim_hook(lambda: &Partition) -> BigInt {
    let r = lambda.size() as u64;
    let mut num: BigInt = One::one();
    for k in 1..=r {
        num *= BigInt::from(k);
    }
    let mut den: BigInt = One::one();
    for row in 0..lambda.rows() {
        for col in 0..lambda.part(row) as usize {
            den *= BigInt::from(lambda.hook(row, col));
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// All partitions of `r`, the Schur-Weyl index set for the decomposition of
/// the r-th tensor power of the standard representation.
pub fn schur_weyl_partitions(r: u32) -> Vec<Partition> {
    partitions_of(r)
}

// ---------------------------------------------------------------------------
// Weyl dimension formulas
// ---------------------------------------------------------------------------

/// Dimension of the irreducible GL(n) representation with highest weight
/// `lambda`, by the hook content formula.
pub fn dim_gl(lambda: &Partition, n: u32) -> Result<BigInt, RepError> {
    if lambda.rows() > n as usize {
        return Err(RepError::RowBound(lambda.clone(), n as usize));
    }
    let mut num: BigInt = One::one();
    let mut den: BigInt = One::one();
    for row in 0..lambda.rows() {
        for col in 0..lambda.part(row) as usize {
            num *= BigInt::from(n as i64 + col as i64 - row as i64);
            den *= BigInt::from(lambda.hook(row, col));
        }
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// Dimension of the irreducible Sp(2g) representation with highest weight
/// `mu`, by the Weyl dimension formula for the C_g root system.
pub fn dim_sp(mu: &Partition, g: u32) -> Result<BigInt, RepError> {
    if mu.rows() > g as usize {
        return Err(RepError::RowBound(mu.clone(), g as usize));
    }
    let g = g as usize;
    let l: Vec<i64> = (0..g)
        .map(|i| mu.part(i) as i64 + (g - i) as i64)
        .collect();
    let m: Vec<i64> = (0..g).map(|i| (g - i) as i64).collect();
    let mut num: BigInt = One::one();
    let mut den: BigInt = One::one();
    for i in 0..g {
        num *= BigInt::from(l[i]);
        den *= BigInt::from(m[i]);
        for j in (i + 1)..g {
            num *= BigInt::from(l[i] - l[j]);
            num *= BigInt::from(l[i] + l[j]);
            den *= BigInt::from(m[i] - m[j]);
            den *= BigInt::from(m[i] + m[j]);
        }
    }
    debug_assert!((&num % &den).is_zero());
    let d = num / den;
    debug_assert!(d.is_positive());
    Ok(d)
}

/// Total dimension of a multiplicity vector of symplectic irreducibles at a
/// concrete genus.  Entries whose partition exceeds g rows are rejected.
pub fn dim_sp_total(mv: &MultiplicityVector, g: u32) -> Result<BigInt, RepError> {
    let mut total: BigInt = Zero::zero();
    for (p, m) in mv.iter() {
        total += dim_sp(p, g)? * BigInt::from(m);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts)
    }

    #[test]
    fn lr_identity_and_small_cases() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1, 1]), &p(&[1])), 1);
        // Size mismatch and non-containment vanish.
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2])), 0);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[1, 1, 1]), &p(&[1])), 0);
    }

    #[test]
    fn lr_symmetry_small() {
        // c^lambda_{mu nu} = c^lambda_{nu mu} for all |lambda| <= 6.
        for n in 0..=6u32 {
            for lambda in partitions_of(n) {
                for k in 0..=n {
                    for mu in partitions_of(k) {
                        for nu in partitions_of(n - k) {
                            assert_eq!(
                                lr_coefficient(&lambda, &mu, &nu),
                                lr_coefficient(&lambda, &nu, &mu),
                                "lambda={lambda:?} mu={mu:?} nu={nu:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_pieri_row() {
        // s_mu * s_(k) expands with unit coefficients into partitions
        // obtained by adding a horizontal strip.
        let mu = p(&[2, 1]);
        for lambda in partitions_of(5) {
            let c = lr_coefficient(&lambda, &mu, &p(&[2]));
            // lambda/mu must be a horizontal 2-strip
            let strip_ok = lambda.contains(&mu)
                && (1..lambda.rows()).all(|i| lambda.part(i) <= mu.part(i - 1));
            assert_eq!(c, u64::from(strip_ok), "lambda={lambda:?}");
        }
    }

    #[test]
    fn product_dimension_identity() {
        // dim_gl(mu,n) * dim_gl(nu,n) = sum_lambda c^lambda_{mu nu} dim_gl(lambda,n)
        for n in [4u32, 5] {
            for (mu, nu) in [
                (p(&[2, 1]), p(&[1, 1])),
                (p(&[2]), p(&[2, 2])),
                (p(&[1, 1, 1]), p(&[3])),
            ] {
                let total = mu.size() + nu.size();
                let lhs = dim_gl(&mu, n).unwrap() * dim_gl(&nu, n).unwrap();
                let mut rhs = BigInt::from(0);
                for lambda in partitions_of(total) {
                    if lambda.rows() <= n as usize {
                        rhs += BigInt::from(lr_coefficient(&lambda, &mu, &nu))
                            * dim_gl(&lambda, n).unwrap();
                    }
                }
                assert_eq!(lhs, rhs, "mu={mu:?} nu={nu:?} n={n}");
            }
        }
    }

    #[test]
    fn branching_examples() {
        assert_eq!(
            branch_gl_to_sp(&p(&[1])),
            MultiplicityVector::from_pairs([(p(&[1]), 1)])
        );
        assert_eq!(
            branch_gl_to_sp(&p(&[1, 1])),
            MultiplicityVector::from_pairs([(p(&[1, 1]), 1), (p(&[]), 1)])
        );
        assert_eq!(
            branch_gl_to_sp(&p(&[2])),
            MultiplicityVector::from_pairs([(p(&[2]), 1)])
        );
    }

    #[test]
    fn branching_dimension_identity() {
        // dim_gl(lambda, 2g) = sum_mu N_{mu lambda} dim_sp(mu, g) for
        // g >= rows(lambda); this also discriminates the even-column rule
        // from the even-row variant.
        for n in 0..=6u32 {
            for lambda in partitions_of(n) {
                let branched = branch_gl_to_sp(&lambda);
                let r = lambda.rows() as u32;
                for g in r.max(1)..=(r + 2) {
                    if branched.iter().any(|(mu, _)| mu.rows() > g as usize) {
                        continue; // below the stable range for this g
                    }
                    let lhs = dim_gl(&lambda, 2 * g).unwrap();
                    let rhs = dim_sp_total(&branched, g).unwrap();
                    assert_eq!(lhs, rhs, "lambda={lambda:?} g={g}");
                }
            }
        }
    }

    #[test]
    fn characters_trivial_sign_standard() {
        for r in 1..=7u32 {
            for rho in partitions_of(r) {
                let rho = CycleType(rho);
                assert_eq!(sn_character(&p(&[r]), &rho).unwrap(), 1);
                let ones = vec![1u32; r as usize];
                assert_eq!(sn_character(&Partition::new(&ones), &rho).unwrap(), rho.sign());
            }
        }
        // chi_{(2,1)} on a 3-cycle is -1; matches the brute-force character
        // of the permutation representation minus the trivial one
        // (fixed points - 1).
        assert_eq!(
            sn_character(&p(&[2, 1]), &CycleType(p(&[3]))).unwrap(),
            -1
        );
        for rho in partitions_of(3) {
            let fixed = rho.parts().iter().filter(|&&c| c == 1).count() as i64;
            assert_eq!(
                sn_character(&p(&[2, 1]), &CycleType(rho.clone())).unwrap(),
                fixed - 1,
                "rho={rho:?}"
            );
        }
    }

    #[test]
    fn character_orthogonality() {
        for r in 1..=7u32 {
            let classes: Vec<CycleType> =
                partitions_of(r).into_iter().map(CycleType).collect();
            let irreps = partitions_of(r);
            let order: i64 = (1..=r as i64).product();
            for li in &irreps {
                for lj in &irreps {
                    let mut acc = 0i64;
                    for rho in &classes {
                        acc += rho.class_size() as i64
                            * sn_character(li, rho).unwrap()
                            * sn_character(lj, rho).unwrap();
                    }
                    let expect = if li == lj { order } else { 0 };
                    assert_eq!(acc, expect, "r={r} li={li:?} lj={lj:?}");
                }
            }
        }
    }

    #[test]
    fn dimension_vs_hook_length() {
        for r in 0..=8u32 {
            for lambda in partitions_of(r) {
                assert_eq!(
                    BigInt::from(sn_dim(&lambda)),
                    sn_dim_hook(&lambda),
                    "lambda={lambda:?}"
                );
            }
        }
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(dim_sp(&p(&[]), 3).unwrap(), BigInt::from(1));
        assert_eq!(dim_sp(&p(&[1]), 3).unwrap(), BigInt::from(6));
        assert_eq!(dim_sp(&p(&[1, 1]), 2).unwrap(), BigInt::from(5));
        assert_eq!(dim_sp(&p(&[1, 1, 1]), 3).unwrap(), BigInt::from(14));
        assert_eq!(dim_gl(&p(&[1]), 6).unwrap(), BigInt::from(6));
        assert_eq!(dim_gl(&p(&[1, 1, 1]), 6).unwrap(), BigInt::from(20));
        assert!(dim_sp(&p(&[1, 1, 1]), 2).is_err());
    }
}
