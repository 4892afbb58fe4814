//! Sturm-sequence root counting, used as an independent oracle for the
//! isolators. Shares only the integer polynomial arithmetic with them.

use num_bigint::Sign;

use crate::arith::{BigIntPoly, Dyadic, OpenInterval};
use crate::error::{Error, Result};
use crate::isolate::{Isolation, RootDescriptor};

/// Signed remainder chain `p0 = f`, `p1 = f'`, `p_i = -rem(p_{i-2}, p_{i-1})`,
/// each element rescaled by a positive constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<BigIntPoly>,
}

impl SturmChain {
    pub fn new(f: &BigIntPoly) -> Result<Self> {
        match f.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            _ => {}
        }
        let mut polys = vec![f.clone(), f.derivative()];
        loop {
            let n = polys.len();
            let r = polys[n - 2].positive_pseudo_rem(&polys[n - 1]);
            if r.is_zero() {
                break;
            }
            // primitive_part may flip the sign; strip only the positive content
            let c = r.content();
            let r = BigIntPoly::new(r.coeffs().iter().map(|a| -(a / &c)).collect());
            polys.push(r);
        }
        Ok(SturmChain { polys })
    }

    pub fn polys(&self) -> &[BigIntPoly] {
        &self.polys
    }

    /// Sign changes of the chain evaluated at `x`.
    pub fn variations_at(&self, x: &Dyadic) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for s in self.polys.iter().map(|p| p.sign_at(x)) {
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots of `f` in the open interval.
    pub fn count(&self, interval: &OpenInterval) -> Result<usize> {
        let f = &self.polys[0];
        for end in [interval.lower(), interval.upper()] {
            if f.sign_at(end) == Sign::NoSign {
                return Err(Error::EndpointIsRoot(end.to_string()));
            }
        }
        let lo = self.variations_at(interval.lower());
        let hi = self.variations_at(interval.upper());
        Ok(lo - hi)
    }
}

pub fn sturm_chain(f: &BigIntPoly) -> Result<SturmChain> {
    SturmChain::new(f)
}

/// Number of distinct real roots of `f` strictly inside `interval`.
pub fn sturm_count(f: &BigIntPoly, interval: &OpenInterval) -> Result<usize> {
    SturmChain::new(f)?.count(interval)
}

/// Checks an isolation result against the Sturm oracle: the descriptor
/// count equals the number of real roots in `initial`, every interval holds
/// exactly one root with nonzero endpoints, every point is an exact root,
/// and descriptors are sorted and pairwise disjoint.
pub fn check_isolation(
    f: &BigIntPoly,
    initial: &OpenInterval,
    isolation: &Isolation,
) -> std::result::Result<(), String> {
    let chain = SturmChain::new(f).map_err(|e| e.to_string())?;
    let expected = chain.count(initial).map_err(|e| e.to_string())?;
    let roots = &isolation.roots;
    if roots.len() != expected {
        return Err(format!(
            "{} descriptors but {expected} real roots in {initial}",
            roots.len()
        ));
    }
    for root in roots {
        match root {
            RootDescriptor::Interval(i) => {
                let n = chain.count(i).map_err(|e| format!("{i}: {e}"))?;
                if n != 1 {
                    return Err(format!("{i} contains {n} roots"));
                }
                if !initial.encloses(i) {
                    return Err(format!("{i} leaves {initial}"));
                }
            }
            RootDescriptor::Point(p) => {
                if !f.eval(p).is_zero() {
                    return Err(format!("{p} is not a root"));
                }
                if !initial.contains(p) {
                    return Err(format!("{p} lies outside {initial}"));
                }
            }
        }
    }
    for pair in roots.windows(2) {
        let disjoint = match (&pair[0], &pair[1]) {
            (RootDescriptor::Point(p), RootDescriptor::Point(q)) => p < q,
            (a, b) => a.right() <= b.left(),
        };
        if !disjoint {
            return Err(format!(
                "{:?} and {:?} overlap or are unsorted",
                pair[0], pair[1]
            ));
        }
    }
    Ok(())
}
