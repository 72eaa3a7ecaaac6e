//! Shared data for the integration tests: the two worked 3x3 examples
//! over Q[x, y, z] and the transformation matrices that accompany them.

#![allow(dead_code)]

pub mod random;

use polysmith::{PolyMatrix, Polynomial, VarSet};

pub fn xyz() -> VarSet {
    VarSet::new(["x", "y", "z"]).unwrap()
}

pub fn poly(s: &str) -> Polynomial {
    polysmith::polyring::parse_polynomial(s, &xyz()).unwrap()
}

pub fn mat<R: AsRef<[&'static str]>>(rows: &[R]) -> PolyMatrix {
    PolyMatrix::from_strs(&xyz(), rows).unwrap()
}

/// Determinant (x - y*z)*(y + z^2)*(z^3 + z^2 - z - 1).
pub const CHAIN_F: [[&str; 3]; 3] = [
    [
        "y*z^4+z^5+y^2*z^2+y*z^3-y*z^2-z^3-y^2-y*z",
        "-x*y*z^4-x*z^5+y*z^5-x*y^2*z^2-x*y*z^3-x*z^4+y^2*z^3+x*z^3-y*z^3+x*y^2+x*y*z+x*z^2-y^2*z+x*y",
        "y*z^6-x*z^5+y^2*z^4-x*y*z^3-y*z^4+x*z^3-y^2*z^2+x*y*z+z^3+x*z+x-z",
    ],
    [
        "-x*y*z^4-x*z^5-x*y^2*z^2-x*y*z^3+x*y*z^2+x*z^3+x*y^2+x*y*z-z-1",
        "x^2*y*z^4+x^2*z^5-x*y*z^5+x^2*y^2*z^2+x^2*y*z^3+x^2*z^4-x*y^2*z^3-x^2*z^3+x*y*z^3-x^2*y^2-x^2*y*z-x^2*z^2+x*y^2*z-x^2*y+x*z+x",
        "-x*y*z^6+x^2*z^5-x*y^2*z^4+x^2*y*z^3+x*y*z^4-x^2*z^3+x*y^2*z^2-x^2*y*z-x*z^3-x^2*z-x^2-2*y*z-x-2*y",
    ],
    [
        "-y^2*z^4-2*y*z^5-z^6-y^3*z^2-2*y^2*z^3-y*z^4+y^2*z^2+2*y*z^3+z^4+y^3+2*y^2*z+y*z^2-z-1",
        "x*y^2*z^4+2*x*y*z^5+x*z^6-y^2*z^5-y*z^6+x*y^3*z^2+2*x*y^2*z^3+2*x*y*z^4+x*z^5-y^3*z^3-y^2*z^4-x*y*z^3-x*z^4+y^2*z^3+y*z^4-x*y^3-2*x*y^2*z-2*x*y*z^2-x*z^3+y^3*z+y^2*z^2-x*y^2-x*y*z+x*z+x",
        "-y^2*z^6-y*z^7+x*y*z^5+x*z^6-y^3*z^4-y^2*z^5+x*y^2*z^3+x*y*z^4+y^2*z^4+y*z^5-x*y*z^3-x*z^4+y^3*z^2+y^2*z^3-x*y^2*z-x*y*z^2-y*z^3-z^4-x*y*z-x*z^2-x*y-2*x*z-y*z+z^2-x-2*y-1",
    ],
];

/// Determinant (z + 1)^2*(x - y)*(x + y).
pub const LINEAR_F: [[&str; 3]; 3] = [
    [
        "z+1",
        "x+y",
        "x^3+x^2*y-x*y^2-y^3-1",
    ],
    [
        "x^3*z-x^2*y*z-x^2*z^2-x*y^2*z+y^3*z+y^2*z^2+x^3-x^2*y-2*x^2*z-x*y^2+x*z^2+y^3+2*y^2*z-y*z^2-x^2+2*x*z+y^2-2*y*z+z^2+x-y+z",
        "-x^3*z-x^2*y*z+x*y^2*z+y^3*z-x^3-x^2*y+x^2*z+x*y^2+y^3-y^2*z+x^2-y^2+z+1",
        "-x^5*z-x^4*y*z+2*x^3*y^2*z+2*x^2*y^3*z-x*y^4*z-y^5*z-x^5-x^4*y+x^4*z+2*x^3*y^2+2*x^2*y^3-2*x^2*y^2*z-x*y^4-y^5+y^4*z+x^4-2*x^2*y^2+y^4+2*x^2*z-2*y^2*z+2*x^2-x*z-2*y^2+y*z-x+y",
    ],
    [
        "x^2*z-x*z^2-y^2*z-y*z^2+x^2-3*x*z-y^2-3*y*z-2*x-2*y",
        "-x^2*z-2*x*y*z-y^2*z-2*x^2-4*x*y-2*y^2",
        "-x^4*z-2*x^3*y*z+2*x*y^3*z+y^4*z-2*x^4-4*x^3*y+4*x*y^3+2*y^4+x*z+y*z+2*x+2*y",
    ],
];

pub fn chain_f() -> PolyMatrix {
    mat(&CHAIN_F)
}

pub fn linear_f() -> PolyMatrix {
    mat(&LINEAR_F)
}

/// Reference transforms of the chain example. `U1 * F = diag(1, z+1, z+1) * G1`
/// and so on down to `G4`.
pub const U1: [[&str; 3]; 3] = [["y + z - x", "-1", "1"], ["x", "1", "0"], ["-1", "0", "0"]];
pub const U2: [[&str; 3]; 3] = [["1", "0", "0"], ["-y", "1", "0"], ["-x", "0", "1"]];
pub const U3: [[&str; 3]; 3] = [["1", "0", "0"], ["-x", "1", "0"], ["-z", "0", "1"]];
pub const U4: [[&str; 3]; 3] = [["1", "0", "0"], ["-y", "1", "0"], ["y*(y + z)", "-y - z", "1"]];

pub const G2: [[&str; 3]; 3] = [
    ["0", "0", "-1"],
    ["-1", "x", "-x - y"],
    [
        "-y*z^2 - z^3 - y^2 - y*z",
        "x*y*z^2 + x*z^3 - y*z^3 + x*y^2 + x*y*z + x*z^2 - y^2*z + x*y",
        "-y*z^4 + x*z^3 - y^2*z^2 + x*y*z - z",
    ],
];
pub const G3: [[&str; 3]; 3] = [
    ["0", "0", "-1"],
    ["-1", "x", "-y"],
    ["-y - z", "(y + z)*x - y*z + x", "(-y*z + x)*z"],
];
pub const G4: [[&str; 3]; 3] = [["0", "0", "-1"], ["-1", "x", "0"], ["0", "1", "z"]];

/// Fold factors as printed alongside the chain example.
pub const U_PRIME_PRINTED: [[&str; 3]; 3] = [["1", "0", "0"], ["-y*z - 1", "1", "0"], ["-x*z - 1", "0", "1"]];
pub const P_PRINTED: [[&str; 3]; 3] = [["1", "0", "0"], ["x*z + 1", "1", "0"], ["z^3 - z", "0", "1"]];
pub const Q_PRINTED: [[&str; 3]; 3] = [
    ["1", "0", "0"],
    ["y*z + 1", "z + 1", "0"],
    ["0", "(y + z)*(z^2 - 1)*(y + z^2)", "(y + z)*(z^2 - 1)*(y + z^2)*(x - y*z)"],
];

/// Fold factors that make the displayed identities hold:
/// `U' * A = diag(1, z+1, z^2-1)` and `L = P * C`, `L' = Q * C'`.
pub const U_PRIME: [[&str; 3]; 3] = [["1", "0", "0"], ["-y*(z + 1)", "1", "0"], ["-x*(z + 1)", "0", "1"]];
pub const P: [[&str; 3]; 3] = [["1", "0", "0"], ["x*(z + 1)", "1", "0"], ["z^3 - z", "0", "1"]];
pub const Q: [[&str; 3]; 3] = [["1", "0", "0"], ["y*(z + 1)", "1", "0"], ["0", "(y + z)*(y + z^2)*(z - 1)", "1"]];

/// Witnesses for the linear example in the conjugated coordinates:
/// `phi^-1(F) = M * diag(1, z+1, x*y*(z+1)) * N`.
pub const M: [[&str; 3]; 3] = [
    ["1", "0", "0"],
    ["-x*y*z - x*y + x*z + x", "1", "x"],
    ["-y*z - 2*y", "0", "1"],
];
pub const N: [[&str; 3]; 3] = [["z + 1", "y", "x*y^2 - 1"], ["z", "1", "x*y"], ["1", "0", "0"]];

pub fn d(entries: &[&str]) -> PolyMatrix {
    let polys: Vec<Polynomial> = entries.iter().map(|s| poly(s)).collect();
    PolyMatrix::diag(&xyz(), &polys)
}

/// Row `i` of `m` divided exactly by `by[i]`.
pub fn divide_rows(m: &PolyMatrix, by: &[&str]) -> PolyMatrix {
    let rows = m
        .to_rows()
        .into_iter()
        .zip(by)
        .map(|(row, b)| {
            let b = poly(b);
            row.iter().map(|p| p.exact_div(&b).unwrap()).collect()
        })
        .collect();
    PolyMatrix::from_rows(&xyz(), rows).unwrap()
}
