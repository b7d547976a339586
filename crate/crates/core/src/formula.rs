//! Closed-form modular labelings of L(T₃).
//!
//! A scheme assigns each axis vertex `offset + t(first) + t(second) mod m`,
//! where every axis term has the shape `c·⌈a/2⌉ + f·⌊a/2⌋`. Plain linear
//! terms `c·a` are the special case `c = f`.

use serde::{Deserialize, Serialize};

pub use crate::grid::{AxisClass, AxisVertex};
use crate::error::{Error, Result};
use crate::grid::{GraphPatch, GridKind, PatchKind};
use crate::verify::Labeling;

/// `ceil·⌈a/2⌉ + floor·⌊a/2⌋`, with mathematical rounding for negative `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisTerm {
    pub ceil: i64,
    pub floor: i64,
}

impl AxisTerm {
    pub const fn linear(c: i64) -> Self {
        AxisTerm { ceil: c, floor: c }
    }

    pub fn eval(&self, a: i64) -> i64 {
        self.ceil * a.div_euclid(2) + self.ceil * a.rem_euclid(2) + self.floor * a.div_euclid(2)
    }

    /// Smallest even shift `2t` of the argument that leaves the term unchanged mod `m`.
    fn period(&self, m: i64) -> i64 {
        let step = (self.ceil + self.floor).rem_euclid(m);
        let t = (1..=m).find(|t| (step * t) % m == 0).unwrap_or(m);
        2 * t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRule {
    pub offset: i64,
    pub first: AxisTerm,
    pub second: AxisTerm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularScheme {
    pub modulus: u32,
    pub u: ClassRule,
    pub v: ClassRule,
    pub w: ClassRule,
}

impl ModularScheme {
    /// The span-7 scheme:
    /// `f(U xy) = 4⌈x/2⌉ + 2⌊x/2⌋ + 5y`, `g(V yz) = 2 + 3z + 2y`, `h(W zx) = 1 + 5z + 2x`, all mod 8.
    pub const fn span7() -> Self {
        ModularScheme {
            modulus: 8,
            u: ClassRule { offset: 0, first: AxisTerm { ceil: 4, floor: 2 }, second: AxisTerm::linear(5) },
            v: ClassRule { offset: 2, first: AxisTerm::linear(2), second: AxisTerm::linear(3) },
            w: ClassRule { offset: 1, first: AxisTerm::linear(5), second: AxisTerm::linear(2) },
        }
    }

    /// A scheme giving every vertex the same label.
    pub const fn constant(label: i64, modulus: u32) -> Self {
        let rule = ClassRule { offset: label, first: AxisTerm::linear(0), second: AxisTerm::linear(0) };
        ModularScheme { modulus, u: rule, v: rule, w: rule }
    }

    fn rule(&self, class: AxisClass) -> &ClassRule {
        match class {
            AxisClass::U => &self.u,
            AxisClass::V => &self.v,
            AxisClass::W => &self.w,
        }
    }

    pub fn label(&self, v: AxisVertex) -> u32 {
        let r = self.rule(v.class);
        let m = i64::from(self.modulus.max(1));
        (r.offset + r.first.eval(v.first) + r.second.eval(v.second)).rem_euclid(m) as u32
    }

    /// Common translation period of the labeling along both cell generators,
    /// or `None` for a zero modulus.
    pub fn period(&self) -> Option<i64> {
        if self.modulus == 0 {
            return None;
        }
        let m = i64::from(self.modulus);
        let mut p = 1;
        for r in [&self.u, &self.v, &self.w] {
            for t in [r.first, r.second] {
                p = lcm(p, t.period(m));
            }
        }
        Some(p)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Label of `v` under the span-7 scheme.
pub fn label_vertex(v: AxisVertex) -> u32 {
    ModularScheme::span7().label(v)
}

/// Vertex labeling of an L(T₃) patch under the span-7 scheme.
pub fn emit_labeling(patch: &GraphPatch) -> Result<Labeling> {
    emit_with(&ModularScheme::span7(), patch)
}

pub fn emit_with(scheme: &ModularScheme, patch: &GraphPatch) -> Result<Labeling> {
    let expected = PatchKind::Line(GridKind::Hex3);
    if patch.kind() != expected {
        return Err(Error::Kind { expected: expected.to_string(), found: patch.kind().to_string() });
    }
    let labels = patch
        .vertices()
        .iter()
        .map(|v| v.coord.axis().map(|a| scheme.label(a)).ok_or_else(|| Error::Malformed(format!("{} is not an axis vertex", v.coord))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Labeling::complete(labels))
}
