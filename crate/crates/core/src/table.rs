//! Reference data for the Chiang Lagrangian computation.
//!
//! One table of parallel-transport elements drives everything: the pearl
//! module derives its differential terms from it, and the verification
//! suite checks the geometric oracle against it entry by entry. The two
//! 16x16 differential matrices for the rank-2 irreducible system and the
//! closed-form rank predictions live here as well.

use crate::gamma::GammaElement;
use crate::reps::{M0Class, Multiplicities};

/// Parallel-transport elements for every named path: the 18 flowlines, the
/// 12 trajectory boundary pairs, the 3 Maslov-2 disc boundaries through the
/// minimum, and the 4 Maslov-4 half-boundaries.
pub const TRANSPORT_TABLE: &[(&str, &str)] = &[
    ("gamma'_1", "e"),
    ("gamma~'_1", "b"),
    ("gamma'_2", "e"),
    ("gamma~'_2", "a^1 b"),
    ("gamma'_3", "e"),
    ("gamma~'_3", "a^2 b"),
    ("delta_11", "e"),
    ("delta_21", "a^2 b"),
    ("delta_31", "a^2 b"),
    ("delta~_31", "a^3 b"),
    ("delta_12", "e"),
    ("delta~_12", "a^1"),
    ("delta_22", "e"),
    ("delta_32", "a^3 b"),
    ("delta_13", "a^1"),
    ("delta_23", "e"),
    ("delta~_23", "a^1"),
    ("delta_33", "e"),
    ("gamma_1", "e"),
    ("gamma~_1", "a^3 b"),
    ("gamma_2", "e"),
    ("gamma~_2", "a^4 b"),
    ("gamma_3", "e"),
    ("gamma~_3", "a^5 b"),
    ("sigma", "e"),
    ("sigma~", "a^1"),
    ("F_11.gamma0", "e"),
    ("F_11.gamma1", "a^2 b"),
    ("B_11.gamma0", "a^4 b"),
    ("B_11.gamma1", "e"),
    ("F_12.gamma0", "e"),
    ("F_12.gamma1", "a^2 b"),
    ("B_12.gamma0", "a^5 b"),
    ("B_12.gamma1", "a^5"),
    ("F_22.gamma0", "e"),
    ("F_22.gamma1", "a^2 b"),
    ("B_22.gamma0", "b"),
    ("B_22.gamma1", "e"),
    ("F_23.gamma0", "a^1"),
    ("F_23.gamma1", "a^3 b"),
    ("B_23.gamma0", "b"),
    ("B_23.gamma1", "e"),
    ("F_33.gamma0", "e"),
    ("F_33.gamma1", "a^4 b"),
    ("B_33.gamma0", "b"),
    ("B_33.gamma1", "e"),
    ("F_31.gamma0", "a^3 b"),
    ("F_31.gamma1", "a^1"),
    ("B_31.gamma0", "a^5"),
    ("B_31.gamma1", "a^5 b"),
    ("du'_1", "b"),
    ("du'_2", "a^4 b"),
    ("du'_3", "a^2 b"),
    ("w1.gamma0", "e"),
    ("w1.gamma1", "a^1"),
    ("w-1.gamma0", "a^5"),
    ("w-1.gamma1", "e"),
];

/// Looks up a transport element by path name; panics on an unknown name
/// (the table is internal, fixed data).
pub fn transport(name: &str) -> GammaElement {
    let (_, elt) = TRANSPORT_TABLE
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no transport entry named {name:?}"));
    GammaElement::parse(elt).expect("table entries are valid element names")
}

/// The even-to-odd differential of the rank-2 irreducible system in the
/// reference basis, entry `(i, j)` being the coefficient of the i-th basis
/// vector in the image of the j-th.
pub const PRINTED_D0: [&str; 16] = [
    "1001011000000000",
    "0110000110100000",
    "0110000110100000",
    "1001000011010000",
    "0100000011100101",
    "0000000011011011",
    "1101000000110101",
    "0100000000111110",
    "0010111000001100",
    "1011100000001100",
    "0000011000001011",
    "0010100000000111",
    "0000100101000010",
    "0000011000001011",
    "0000011011010000",
    "0000100101000010",
];

/// The odd-to-even differential, same conventions.
pub const PRINTED_D1: [&str; 16] = [
    "0010110010101110",
    "0001010001011001",
    "1000001100101001",
    "0100000100010111",
    "1000110101010100",
    "0100101111111000",
    "0010011001000001",
    "0001110111000010",
    "1010100011011000",
    "1111010010110100",
    "0010001001101010",
    "0011000111010101",
    "1011000110001000",
    "1101001001001100",
    "0110010000100010",
    "1011100000010011",
];

pub fn printed_d0() -> crate::gf2::BitMatrix {
    crate::gf2::BitMatrix::from_rows(&PRINTED_D0).expect("fixed literal")
}

pub fn printed_d1() -> crate::gf2::BitMatrix {
    crate::gf2::BitMatrix::from_rows(&PRINTED_D1).expect("fixed literal")
}

/// Predicted class of the obstruction endomorphism from the multiplicities:
/// zero exactly when no cyclic-group summand occurs, the identity exactly
/// for sums of trivials.
pub fn predicted_m0_class(m: &Multiplicities) -> M0Class {
    if m.k1 + m.k2 + m.k3 + m.k4 == 0 {
        M0Class::Zero
    } else if m.k2 + m.k3 + m.k4 == 0 && m.m + m.n == 0 {
        M0Class::Identity
    } else {
        M0Class::Other
    }
}

/// A self-Floer complex is obstructed exactly when the obstruction
/// endomorphism is neither zero nor the identity.
pub fn predicted_obstructed(m: &Multiplicities) -> bool {
    predicted_m0_class(m) == M0Class::Other
}

/// Central Floer cohomology ranks `(2m^2, 2m^2)`.
pub fn predicted_central_floer(m: &Multiplicities) -> (usize, usize) {
    let r = 2 * m.m * m.m;
    (r, r)
}

/// Monodromy Floer cohomology ranks by the trichotomy on the faithful part.
pub fn predicted_monodromy_floer(m: &Multiplicities) -> (usize, usize) {
    let r = if m.n > 0 {
        4
    } else if m.m > 0 {
        2
    } else {
        0
    };
    (r, r)
}

/// Monodromy Morse cohomology ranks: `max { i : k_i != 0 }` from the
/// cyclic part plus 0, 1 or 2 from the faithful part, in every degree.
pub fn predicted_monodromy_morse(m: &Multiplicities) -> [usize; 4] {
    let kmax = [(4, m.k4), (3, m.k3), (2, m.k2), (1, m.k1)]
        .into_iter()
        .find(|&(_, k)| k > 0)
        .map_or(0, |(i, _)| i);
    let moving = if m.n > 0 {
        2
    } else if m.m > 0 {
        1
    } else {
        0
    };
    [kmax + moving; 4]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_names_are_unique_and_parse() {
        let mut seen = std::collections::BTreeSet::new();
        for (name, elt) in TRANSPORT_TABLE {
            assert!(seen.insert(*name), "duplicate name {name}");
            assert!(GammaElement::parse(elt).is_ok(), "bad element for {name}");
        }
        assert_eq!(TRANSPORT_TABLE.len(), 26 + 24 + 3 + 4);
    }

    #[test]
    fn printed_matrices_have_documented_ranks() {
        assert_eq!(printed_d0().rank(), 6);
        assert_eq!(printed_d1().rank(), 8);
    }

    #[test]
    fn predictions_on_basic_sums() {
        let d = Multiplicities::new(0, 0, 0, 0, 1, 0);
        assert_eq!(predicted_m0_class(&d), M0Class::Zero);
        assert_eq!(predicted_central_floer(&d), (2, 2));
        assert_eq!(predicted_monodromy_floer(&d), (2, 2));
        assert_eq!(predicted_monodromy_morse(&d), [1; 4]);
        let reg = Multiplicities::new(0, 0, 0, 1, 0, 2);
        assert_eq!(predicted_monodromy_morse(&reg), [6; 4]);
        assert_eq!(predicted_monodromy_floer(&reg), (4, 4));
        assert!(predicted_obstructed(&reg));
    }
}
