//! Bounded enumeration of SL-instances grouped into equivalence classes by
//! their `P`-polynomial.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::plethysm::{PolySource, SLInstance};
use crate::qpoly::QPolynomial;
use crate::twist::{nu2_obstruction, solve_twist, TwistSolution};

pub const DEFAULT_INSTANCE_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub key: QPolynomial,
    /// Sorted by `d`, then `λ`.
    pub members: Vec<SLInstance>,
}

/// Normalized instances `(λ, d)` with `1 ≤ |λ| ≤ max_weight`, `1 ≤ d ≤ max_d`
/// and `ℓ(λ) ≤ d`, ordered by `d` then `λ`.
pub fn enumerate_instances(max_weight: usize, max_d: usize, cap: usize) -> Result<Vec<SLInstance>> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for n in 1..=max_weight {
            for lambda in Partition::bounded(n, d, n) {
                if out.len() == cap {
                    return Err(Error::BudgetExceeded(cap));
                }
                out.push(SLInstance::new(lambda, d)?);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Groups keyed instances into classes of size at least two. Classes are
/// ordered by key degree, then key coefficients.
pub fn group_classes<I>(keyed: I) -> Vec<EquivalenceClass>
where
    I: IntoIterator<Item = (SLInstance, Arc<QPolynomial>)>,
{
    let mut groups: BTreeMap<(Option<usize>, Arc<QPolynomial>), Vec<SLInstance>> = BTreeMap::new();
    for (inst, key) in keyed {
        groups.entry((key.degree(), key)).or_default().push(inst);
    }
    groups
        .into_iter()
        .filter(|(_, members)| members.len() >= 2)
        .map(|((_, key), mut members)| {
            members.sort();
            EquivalenceClass {
                key: (*key).clone(),
                members,
            }
        })
        .collect()
}

pub fn enumerate_classes<S: PolySource>(
    src: &S,
    max_weight: usize,
    max_d: usize,
    cap: usize,
) -> Result<Vec<EquivalenceClass>> {
    let instances = enumerate_instances(max_weight, max_d, cap)?;
    let mut keyed = Vec::with_capacity(instances.len());
    for inst in instances {
        let key = src.p_poly(inst.lambda(), inst.d())?;
        keyed.push((inst, key));
    }
    Ok(group_classes(keyed))
}

/// Labels for the unordered member pairs `(i, j)`, `i < j`, of one class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GlClassification {
    pub direct: Vec<(usize, usize)>,
    pub twistable: Vec<(usize, usize, TwistSolution)>,
    pub obstructed: Vec<(usize, usize)>,
    pub unresolved: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlLabel {
    Direct,
    Twistable(TwistSolution),
    Obstructed,
    Unresolved,
}

/// Direct when `|λ| d = |μ| e`; otherwise the first twist within `bound`;
/// otherwise obstructed or unresolved according to the 2-adic predicate.
pub fn classify_pair<S: PolySource>(
    src: &S,
    a: &SLInstance,
    b: &SLInstance,
    bound: usize,
) -> Result<GlLabel> {
    if a.lambda().weight() * a.d() == b.lambda().weight() * b.d() {
        return Ok(GlLabel::Direct);
    }
    if let Some(t) = solve_twist(src, a, b, bound)? {
        return Ok(GlLabel::Twistable(t));
    }
    if nu2_obstruction(a, b)? {
        Ok(GlLabel::Obstructed)
    } else {
        Ok(GlLabel::Unresolved)
    }
}

pub fn classify_gl<S: PolySource>(
    src: &S,
    class: &EquivalenceClass,
    bound: usize,
) -> Result<GlClassification> {
    let mut out = GlClassification::default();
    let members = &class.members;
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            match classify_pair(src, &members[i], &members[j], bound)? {
                GlLabel::Direct => out.direct.push((i, j)),
                GlLabel::Twistable(t) => out.twistable.push((i, j, t)),
                GlLabel::Obstructed => out.obstructed.push((i, j)),
                GlLabel::Unresolved => out.unresolved.push((i, j)),
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plethysm::{LocalCache, Uncached};
    use crate::twist::DEFAULT_BOUND;

    fn sl(parts: &[usize], d: usize) -> SLInstance {
        SLInstance::new(Partition::new(parts).unwrap(), d).unwrap()
    }

    fn class_of<'a>(
        classes: &'a [EquivalenceClass],
        inst: &SLInstance,
    ) -> Option<&'a EquivalenceClass> {
        classes.iter().find(|c| c.members.contains(inst))
    }

    #[test]
    fn enumeration_counts() {
        // d = 1: (n); d = 2: partitions with at most two parts
        let all = enumerate_instances(3, 2, DEFAULT_INSTANCE_CAP).unwrap();
        assert_eq!(all.len(), 3 + 5);
        assert!(all.iter().all(SLInstance::is_normalized));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_instances(3, 2, 7), Err(Error::BudgetExceeded(7)));
    }

    #[test]
    fn hermite_class() {
        let classes = enumerate_classes(&Uncached, 3, 3, DEFAULT_INSTANCE_CAP).unwrap();
        let c = class_of(&classes, &sl(&[2], 3)).unwrap();
        assert!(c.members.contains(&sl(&[3], 2)));
        let gl = classify_gl(&Uncached, c, DEFAULT_BOUND).unwrap();
        let i = c.members.iter().position(|m| *m == sl(&[3], 2)).unwrap();
        let j = c.members.iter().position(|m| *m == sl(&[2], 3)).unwrap();
        assert!(gl.direct.contains(&(i.min(j), i.max(j))));
    }

    #[test]
    fn manivel_class() {
        let cache = LocalCache::new();
        let classes = enumerate_classes(&cache, 2, 3, DEFAULT_INSTANCE_CAP).unwrap();
        let c = class_of(&classes, &sl(&[2], 2)).unwrap();
        assert!(c.members.contains(&sl(&[1, 1], 3)));
        assert_eq!(
            classify_pair(&cache, &sl(&[2], 2), &sl(&[1, 1], 3), DEFAULT_BOUND).unwrap(),
            GlLabel::Twistable(TwistSolution {
                l: 1,
                m: 0,
                x: 0,
                y: 1
            })
        );
    }

    #[test]
    fn single_box_never_merges() {
        let classes = enumerate_classes(&Uncached, 1, 6, DEFAULT_INSTANCE_CAP).unwrap();
        assert!(classes.is_empty());
    }

    #[test]
    fn class_order() {
        let classes = enumerate_classes(&LocalCache::new(), 4, 4, DEFAULT_INSTANCE_CAP).unwrap();
        assert!(classes
            .windows(2)
            .all(|w| (w[0].key.degree(), &w[0].key) < (w[1].key.degree(), &w[1].key)));
        for c in &classes {
            assert!(c.members.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
