use num_rational::BigRational;

use super::RationalPoint;
use crate::combinatorics::Permutation;

/// Nearest point of the closed braid region `x_{σ₁} ≥ … ≥ x_{σₙ}` to `v`,
/// by pooling adjacent violators with exact averages.
pub fn pava_chain_projection(v: &RationalPoint, sigma: &Permutation) -> RationalPoint {
    assert_eq!(v.len(), sigma.len(), "point and permutation sizes differ");
    // pooled blocks along σ: (sum, size)
    let mut pools: Vec<(BigRational, usize)> = Vec::with_capacity(sigma.len());
    for &i in sigma.word() {
        pools.push((v.at(i).clone(), 1));
        while pools.len() > 1 {
            let (sum_b, size_b) = &pools[pools.len() - 1];
            let (sum_a, size_a) = &pools[pools.len() - 2];
            // violation: later mean exceeds earlier mean; compare cross-multiplied
            if sum_b * BigRational::from_integer((*size_a).into()) <= sum_a * BigRational::from_integer((*size_b).into()) {
                break;
            }
            let (sum_b, size_b) = pools.pop().expect("two pools");
            let last = pools.last_mut().expect("two pools");
            last.0 += sum_b;
            last.1 += size_b;
        }
    }
    let mut coords = vec![BigRational::default(); sigma.len()];
    let mut word = sigma.word().iter();
    for (sum, size) in pools {
        let mean = sum / BigRational::from_integer(size.into());
        for &i in word.by_ref().take(size) {
            coords[i - 1] = mean.clone();
        }
    }
    RationalPoint::new(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(word: &[usize]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let v = RationalPoint::from_integers(&[16, 4, 1]);
        assert_eq!(pava_chain_projection(&v, &perm(&[1, 2, 3])), v);
        assert_eq!(pava_chain_projection(&v, &perm(&[3, 2, 1])), RationalPoint::from_integers(&[7, 7, 7]));
        assert_eq!(pava_chain_projection(&v, &perm(&[2, 1, 3])), RationalPoint::from_integers(&[10, 10, 1]));
    }

    #[test]
    fn fractional_pool() {
        let v = RationalPoint::from_integers(&[0, 1, 0]);
        // chain x1 ≥ x2 ≥ x3 pools (0, 1) to 1/2
        let p = pava_chain_projection(&v, &perm(&[1, 2, 3]));
        assert_eq!(p, "1/2,1/2,0".parse().unwrap());
    }
}
