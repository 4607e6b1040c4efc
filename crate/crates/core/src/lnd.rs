//! Derivations of `Q[x,y,z]`, exponentials of locally nilpotent ones, and
//! the Nagata maps `N_k = exp(σ^k D)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::autos::{Generator, PolyMap};
use crate::polyalg::{sigma, Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LndError {
    #[error("iterates of {generator} did not vanish within {budget} applications")]
    NotNilpotentWithinBudget { generator: Var, budget: u32 },
    #[error("exponential budget must be at least 1")]
    InvalidBudget,
}

/// Maximum number of derivation applications allowed per generator when
/// summing an exponential series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpBudget {
    max_iterations: u32,
}

impl ExpBudget {
    pub fn new(max_iterations: u32) -> Result<Self, LndError> {
        if max_iterations == 0 {
            return Err(LndError::InvalidBudget);
        }
        Ok(ExpBudget { max_iterations })
    }

    pub fn max_iterations(&self) -> u32 {
        self.max_iterations
    }
}

impl Default for ExpBudget {
    fn default() -> Self {
        ExpBudget { max_iterations: 16 }
    }
}

/// A derivation, determined by its values on `x`, `y`, `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    images: [Polynomial; 3],
}

impl Derivation {
    pub fn new(image_x: Polynomial, image_y: Polynomial, image_z: Polynomial) -> Self {
        Derivation {
            images: [image_x, image_y, image_z],
        }
    }

    pub fn zero() -> Self {
        Derivation::new(Polynomial::zero(), Polynomial::zero(), Polynomial::zero())
    }

    /// `-2y ∂/∂x + z ∂/∂y`. It kills `z` and `y^2 + xz`.
    pub fn nagata() -> Self {
        Derivation::new(
            &Polynomial::integer(-2) * &Polynomial::y(),
            Polynomial::z(),
            Polynomial::zero(),
        )
    }

    pub fn image(&self, v: Var) -> &Polynomial {
        &self.images[v.index()]
    }

    /// `factor · self`.
    pub fn scaled(&self, factor: &Polynomial) -> Derivation {
        Derivation {
            images: self.images.clone().map(|p| &p * factor),
        }
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for v in Var::ALL {
            let img = self.image(v);
            if img.is_zero() {
                continue;
            }
            let partial = f.partial_derivative(v);
            if !partial.is_zero() {
                out += &(img * &partial);
            }
        }
        out
    }

    /// `exp(D)` on the generators: `Σ D^i(v) / i!`, which must terminate
    /// within `budget` applications for each of `x`, `y`, `z`.
    pub fn exp(&self, budget: ExpBudget) -> Result<PolyMap, LndError> {
        let mut coords = [Polynomial::zero(), Polynomial::zero(), Polynomial::zero()];
        for v in Var::ALL {
            coords[v.index()] = self.exp_series(&Polynomial::var(v), budget).ok_or(
                LndError::NotNilpotentWithinBudget {
                    generator: v,
                    budget: budget.max_iterations,
                },
            )?;
        }
        Ok(PolyMap::from_coords(coords))
    }

    fn exp_series(&self, start: &Polynomial, budget: ExpBudget) -> Option<Polynomial> {
        let mut sum = start.clone();
        let mut term = start.clone();
        for i in 1..=budget.max_iterations {
            term = self.apply(&term);
            if term.is_zero() {
                return Some(sum);
            }
            term = term.scale(&BigRational::new(BigInt::from(1), BigInt::from(i)));
            sum += &term;
        }
        None
    }
}

/// `N_k = (x - 2yσ^k - zσ^{2k}, y + zσ^k, z)`.
pub fn nagata_n(k: u32) -> PolyMap {
    PolyMap::from_generator(Generator::NagataPower { k, inverse: false })
}

/// Evaluates `N_k` (or `N_k⁻¹`) at the triple `(a, b, c)`, given
/// `s = b^2 + a*c`.
pub(crate) fn nagata_on(
    a: &Polynomial,
    b: &Polynomial,
    c: &Polynomial,
    s: &Polynomial,
    k: u32,
    inverse: bool,
) -> [Polynomial; 3] {
    let sk = s.pow(k);
    // Multiplying up from s^k by a sparse s is far cheaper than squaring a
    // dense s^k.
    let s2k = if (k as usize).saturating_mul(s.num_terms()) < sk.num_terms() {
        (0..k).fold(sk.clone(), |acc, _| &acc * s)
    } else {
        &sk * &sk
    };
    let two_b_sk = &(b * &sk).scale(&BigRational::from_integer(BigInt::from(2)));
    let c_s2k = c * &s2k;
    let c_sk = c * &sk;
    if inverse {
        [&(a + two_b_sk) - &c_s2k, b - &c_sk, c.clone()]
    } else {
        [&(a - two_b_sk) - &c_s2k, b + &c_sk, c.clone()]
    }
}

/// `exp(σ^k D)` computed from the series rather than the closed form.
pub fn nagata_exp(k: u32, budget: ExpBudget) -> Result<PolyMap, LndError> {
    Derivation::nagata().scaled(&sigma().pow(k)).exp(budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn nagata_derivation_values() {
        let d = Derivation::nagata();
        assert!(d.apply(&sigma()).is_zero());
        assert_eq!(d.apply(&p("y")), p("z"));
        assert!(d.apply(&p("z")).is_zero());
        assert!(d.apply(&Polynomial::one()).is_zero());
        assert!(Derivation::new(p("x^3"), p("y*z"), p("1"))
            .apply(&p("7"))
            .is_zero());
    }

    #[test]
    fn printed_derivation_does_not_kill_sigma() {
        // d/dz + z d/dy - 2y d/dx: moves z and sends sigma to x.
        let printed = Derivation::new(p("-2*y"), p("z"), p("1"));
        assert_eq!(printed.apply(&sigma()), p("x"));
        assert_eq!(printed.apply(&p("z")), p("1"));
    }

    #[test]
    fn exp_of_sigma_d_is_nagata() {
        let n = nagata_exp(1, ExpBudget::default()).unwrap();
        assert_eq!(
            n.coords(),
            &[
                p("x - 2*y*(y^2+z*x) - z*(y^2+z*x)^2"),
                p("y + z*(y^2+z*x)"),
                p("z")
            ]
        );
        assert_eq!(n, nagata_n(1));
        assert!(n.coords().iter().all(Polynomial::has_integer_coefficients));
        assert_eq!(n.multidegree().unwrap().as_array(), [5, 3, 1]);
    }

    #[test]
    fn nagata_two_multidegree() {
        assert_eq!(nagata_n(2).multidegree().unwrap().as_array(), [9, 5, 1]);
    }

    #[test]
    fn trivial_exponentials() {
        assert!(Derivation::zero()
            .exp(ExpBudget::default())
            .unwrap()
            .is_identity());
        let shift = Derivation::new(p("1"), p("0"), p("0"))
            .exp(ExpBudget::default())
            .unwrap();
        assert_eq!(shift.coords(), &[p("x + 1"), p("y"), p("z")]);
    }

    #[test]
    fn budget_is_enforced() {
        let euler = Derivation::new(p("x"), p("0"), p("0"));
        assert_eq!(
            euler.exp(ExpBudget::default()),
            Err(LndError::NotNilpotentWithinBudget {
                generator: Var::X,
                budget: 16
            })
        );
        // x needs three applications under the Nagata derivation
        let tight = ExpBudget::new(2).unwrap();
        assert!(matches!(
            nagata_exp(1, tight),
            Err(LndError::NotNilpotentWithinBudget { .. })
        ));
        assert!(nagata_exp(1, ExpBudget::new(3).unwrap()).is_ok());
        assert_eq!(ExpBudget::new(0), Err(LndError::InvalidBudget));
    }

    #[test]
    fn negated_exponential_inverts() {
        for k in 1..=3 {
            let d = Derivation::nagata().scaled(&sigma().pow(k));
            let fwd = d.exp(ExpBudget::default()).unwrap();
            let back = d
                .scaled(&Polynomial::integer(-1))
                .exp(ExpBudget::default())
                .unwrap();
            assert!(fwd.compose(&back).is_identity());
            assert_eq!(back, nagata_n(k).inverse().unwrap());
        }
    }
}
