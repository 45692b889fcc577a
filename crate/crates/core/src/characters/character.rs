use crate::arith::{factorize, legendre};
use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharacterKind {
    Principal,
    /// The real character induced by the Legendre symbol modulo the odd prime `p`.
    RealInducedByLegendre { p: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DirichletCharacter {
    modulus: u64,
    kind: CharacterKind,
}

impl DirichletCharacter {
    pub fn principal(modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return domain("character modulus must be positive");
        }
        Ok(Self {
            modulus,
            kind: CharacterKind::Principal,
        })
    }

    /// The character modulo `modulus` induced by `(·/p)`; requires `p` an odd
    /// prime dividing `modulus`.
    pub fn real_induced(modulus: u64, p: u64) -> Result<Self> {
        if p < 3 || p % 2 == 0 || !factorize(p)?.is_prime() {
            return domain(format!("{p} is not an odd prime"));
        }
        if modulus == 0 || modulus % p != 0 {
            return domain(format!("{p} does not divide the modulus {modulus}"));
        }
        Ok(Self {
            modulus,
            kind: CharacterKind::RealInducedByLegendre { p },
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn kind(&self) -> CharacterKind {
        self.kind
    }

    pub fn conductor(&self) -> u64 {
        match self.kind {
            CharacterKind::Principal => 1,
            CharacterKind::RealInducedByLegendre { p } => p,
        }
    }

    pub fn is_principal(&self) -> bool {
        matches!(self.kind, CharacterKind::Principal)
    }

    /// `χ(m)`; zero whenever `m` shares a factor with the modulus.
    pub fn eval(&self, m: i64) -> i8 {
        let r = m.rem_euclid(self.modulus as i64) as u64;
        if num_integer::gcd(r, self.modulus) != 1 {
            return 0;
        }
        match self.kind {
            CharacterKind::Principal => 1,
            CharacterKind::RealInducedByLegendre { p } => legendre(r as i64, p),
        }
    }
}
