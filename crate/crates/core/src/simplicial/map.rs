use super::model::Realized;
use super::sset::SSet;
use super::word::{Nd, SimplexWord};
use crate::algebra::FiniteGroup;
use crate::error::{Error, Result};

/// A simplicial map, stored by the image of each nondegenerate simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    images: Vec<Vec<SimplexWord>>,
}

impl SimplicialMap {
    pub fn new(images: Vec<Vec<SimplexWord>>) -> Self {
        Self { images }
    }

    pub fn from_fn(source: &SSet, mut f: impl FnMut(Nd) -> Result<SimplexWord>) -> Result<Self> {
        let images = (0..=source.truncation())
            .map(|n| source.nd_ids(n).map(&mut f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { images })
    }

    pub fn identity(x: &SSet) -> Self {
        Self::from_fn(x, |n| Ok(SimplexWord::nd(n))).expect("identity")
    }

    pub fn image(&self, x: Nd) -> &SimplexWord {
        &self.images[x.dim][x.idx]
    }

    pub fn apply(&self, w: &SimplexWord) -> SimplexWord {
        w.substitute(self.image(w.base()))
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &SimplicialMap) -> SimplicialMap {
        Self { images: self.images.iter().map(|lvl| lvl.iter().map(|w| then.apply(w)).collect()).collect() }
    }

    /// Checks that images are well formed and commute with every face map on
    /// every simplex up to the truncation. Degeneracies commute by
    /// construction of the extension to degenerate simplices.
    pub fn validate(&self, source: &SSet, target: &SSet) -> Result<()> {
        if self.images.len() != source.truncation() + 1 {
            return Err(Error::InvalidMap("map truncation differs from its source".into()));
        }
        for n in 0..=source.truncation() {
            if self.images[n].len() != source.nd_count(n) {
                return Err(Error::InvalidMap(format!("wrong number of images in dimension {n}")));
            }
            for (x, img) in source.nd_ids(n).zip(&self.images[n]) {
                let b = img.base();
                if img.dim() != n || b.dim > target.truncation() || b.idx >= target.nd_count(b.dim) {
                    return Err(Error::InvalidMap(format!(
                        "image of {} is not a simplex of the target",
                        source.name(x)
                    )));
                }
            }
        }
        for n in 1..=source.truncation().min(target.truncation()) {
            for w in source.words(n) {
                let fw = self.apply(&w);
                for i in 0..=n {
                    if self.apply(&source.face(i, &w)) != target.face(i, &fw) {
                        return Err(Error::InvalidMap(format!(
                            "map does not commute with d{i} on {}",
                            source.describe(&w)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, source: &SSet, target: &SSet) -> bool {
        self.validate(source, target).is_ok()
    }
}

/// Group element carried by an edge under an edge labeling (identity on
/// degenerate edges).
pub fn edge_label(group: &FiniteGroup, labels: &[usize], edge: &SimplexWord) -> usize {
    if edge.is_degenerate() {
        group.identity()
    } else {
        labels[edge.base().idx]
    }
}

/// The map into a (sub)nerve determined by labels on nondegenerate edges:
/// each simplex goes to the tuple read off its spine.
pub fn map_from_edge_labels(
    x: &SSet,
    group: &FiniteGroup,
    target: &Realized<Vec<usize>>,
    labels: &[usize],
) -> Result<SimplicialMap> {
    if labels.len() != x.nd_count(1) {
        return Err(Error::InvalidMap(format!("{} labels for {} edges", labels.len(), x.nd_count(1))));
    }
    SimplicialMap::from_fn(x, |nd| {
        let w = SimplexWord::nd(nd);
        let tuple: Vec<usize> = (1..=nd.dim).map(|k| edge_label(group, labels, &x.spine_edge(&w, k))).collect();
        target.try_word_of(&tuple)
    })
}

/// `f(d_1 σ) = f(d_2 σ) · f(d_0 σ)` on every nondegenerate triangle.
pub fn edge_relation_holds(x: &SSet, group: &FiniteGroup, labels: &[usize]) -> bool {
    x.nd_ids(2).all(|t| {
        let f = x.faces(t);
        let l = |i: usize| edge_label(group, labels, &f[i]);
        l(1) == group.mul(l(2), l(0))
    })
}
