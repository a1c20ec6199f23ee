//! Scenario files: algebra, form, named subjects and a command list.
//!
//! Rationals are `[num, den]` pairs of JSON integers of any size; Gaussian
//! rationals are `[re_num, re_den, im_num, im_den]`. Subspace literals list
//! basis rows over the realified basis `(e_1, i·e_1, e_2, i·e_2, …)`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer};

use crate::involution::{BlockSpec, Linearity, RealFormKind, Tau};
use crate::linalg::{GaussianRational, Matrix, Rational};
use crate::roots::{Side, SimpleSet};

fn big(n: &serde_json::Number) -> Result<BigInt, String> {
    BigInt::from_str(&n.to_string()).map_err(|_| format!("expected an integer, got {n}"))
}

/// A rational literal `[num, den]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatLit(pub Rational);

impl<'de> Deserialize<'de> for RatLit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [n, m] = <[serde_json::Number; 2]>::deserialize(d)?;
        let (n, m) = (big(&n).map_err(D::Error::custom)?, big(&m).map_err(D::Error::custom)?);
        if m.is_zero() {
            return Err(D::Error::custom("rational with zero denominator"));
        }
        Ok(RatLit(Rational::new(n, m)))
    }
}

/// A Gaussian rational literal `[re_num, re_den, im_num, im_den]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussLit(pub GaussianRational);

impl<'de> Deserialize<'de> for GaussLit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let q = <[serde_json::Number; 4]>::deserialize(d)?;
        let v: Vec<BigInt> = q.iter().map(big).collect::<Result<_, _>>().map_err(D::Error::custom)?;
        if v[1].is_zero() || v[3].is_zero() {
            return Err(D::Error::custom("rational with zero denominator"));
        }
        let re = Rational::new(v[0].clone(), v[1].clone());
        let im = Rational::new(v[2].clone(), v[3].clone());
        Ok(GaussLit(GaussianRational::new(re, im)))
    }
}

pub type RowLit = Vec<RatLit>;

pub fn rows(basis: &[RowLit]) -> Vec<Vec<Rational>> {
    basis.iter().map(|r| r.iter().map(|q| q.0.clone()).collect()).collect()
}

pub fn gaussians(v: &[GaussLit]) -> Vec<GaussianRational> {
    v.iter().map(|z| z.0.clone()).collect()
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub algebra: AlgebraSpec,
    pub form: FormSpec,
    #[serde(default)]
    pub subjects: BTreeMap<String, Subject>,
    pub commands: Vec<Command>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub simple_types: Vec<String>,
    #[serde(default)]
    pub center_rank: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    pub lambda: Vec<GaussLit>,
    #[serde(default)]
    pub center_gram: Vec<RowLit>,
}

impl FormSpec {
    pub fn center_matrix(&self, size: usize) -> Matrix {
        Matrix::from_rows(&rows(&self.center_gram), size)
    }
}

/// One block of an af-involution, indexing the components of `m` in order.
#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum BlockLit {
    Compact {
        component: usize,
        #[serde(default)]
        torus: Vec<GaussLit>,
    },
    Split {
        component: usize,
        #[serde(default)]
        torus: Vec<GaussLit>,
    },
    Flip {
        first: usize,
        second: usize,
        linearity: Linearity,
        #[serde(default)]
        weyl: Vec<usize>,
        #[serde(default)]
        diagram: bool,
        #[serde(default)]
        torus: Vec<GaussLit>,
    },
}

impl BlockLit {
    pub fn to_spec(&self) -> BlockSpec {
        match self {
            BlockLit::Compact { component, torus } => {
                BlockSpec::RealForm { component: *component, kind: RealFormKind::Compact, torus: gaussians(torus) }
            }
            BlockLit::Split { component, torus } => {
                BlockSpec::RealForm { component: *component, kind: RealFormKind::Split, torus: gaussians(torus) }
            }
            BlockLit::Flip { first, second, linearity, weyl, diagram, torus } => BlockSpec::Flip {
                first: *first,
                second: *second,
                linearity: *linearity,
                tau: Tau { weyl: weyl.clone(), diagram: *diagram, torus: gaussians(torus) },
            },
        }
    }
}

/// Named inputs. A missing `frame` means all simple roots.
#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Subject {
    Subspace {
        basis: Vec<RowLit>,
    },
    Lagrangian {
        frame: Option<SimpleSet>,
        side: Side,
        subset: SimpleSet,
        sigma: Vec<BlockLit>,
        #[serde(default)]
        i_a: Vec<RowLit>,
    },
    Triple {
        frame: Option<SimpleSet>,
        i: String,
        i_prime: String,
    },
    Link {
        frame: Option<SimpleSet>,
        side: Side,
        subset: SimpleSet,
        sigma: Vec<BlockLit>,
        f_tilde: String,
    },
    Involution {
        subset: Option<SimpleSet>,
        blocks: Vec<BlockLit>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verb {
    VerifyForm,
    IsSpecial,
    BuildLagrangian,
    VerifyTriple,
    Descend,
    CheckLink,
    Lift,
    Tower,
    Socle,
    CommonFixedVector,
}

impl Verb {
    pub fn name(self) -> &'static str {
        match self {
            Verb::VerifyForm => "verify_form",
            Verb::IsSpecial => "is_special",
            Verb::BuildLagrangian => "build_lagrangian",
            Verb::VerifyTriple => "verify_triple",
            Verb::Descend => "descend",
            Verb::CheckLink => "check_link",
            Verb::Lift => "lift",
            Verb::Tower => "tower",
            Verb::Socle => "socle",
            Verb::CommonFixedVector => "common_fixed_vector",
        }
    }
}

/// `expect: false` turns a command into a negative check: it passes when its
/// certificate fails.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Command {
    pub verb: Verb,
    #[serde(default)]
    pub args: Vec<String>,
    pub bind: Option<String>,
    #[serde(default = "yes")]
    pub expect: bool,
}

fn yes() -> bool {
    true
}

pub fn parse(text: &str) -> Result<Scenario, serde_json::Error> {
    serde_json::from_str(text)
}
