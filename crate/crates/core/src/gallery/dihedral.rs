use crate::algebra::FiniteGroup;
use crate::error::Result;
use crate::pgext::{ExtensionAction, ExtensionScenario, GroupExtension, PseudoSection};

/// `N Z_2 -> N(Z_2 × Z_2) -> N Z_2` with fiber the diagonal, the swap
/// action, and `η(a) = (0, a)`.
#[derive(Clone, Debug)]
pub struct Dihedral {
    pub scenario: ExtensionScenario,
    pub eta: PseudoSection,
    pub action: ExtensionAction,
}

impl Dihedral {
    /// Element `(a, b)` of `Z_2 × Z_2` has index `2a + b`.
    pub fn new(truncation: usize) -> Result<Self> {
        let z2 = FiniteGroup::cyclic(2);
        let k = FiniteGroup::direct_product(&z2, &z2);
        let ext = GroupExtension::with_modulus(k, 3, 2)?;
        let g = ext.project(1);
        let mut lift = vec![0; 2];
        lift[g] = 1;
        let eta = PseudoSection::new(&ext, lift)?;
        let action = ExtensionAction::from_generators(&ext, &[vec![0, 2, 1, 3]])?;
        let scenario = ExtensionScenario::full(ext, truncation)?;
        Ok(Self { scenario, eta, action })
    }

    /// The quotient element `1 ∈ Z_2`.
    pub fn generator(&self) -> usize {
        self.scenario.ext.project(1)
    }
}
