//! Small preset groups with documented element orderings.
//!
//! * `cyclic n`: element `i` is `r^i`.
//! * `dihedral n` (order `2n`): element `i + n*j` is `r^i s^j`, with
//!   `s r s = r⁻¹`.
//! * `symmetric 3`: `⟨a, b | a³ = b² = 1, bab = a⁻¹⟩` ordered
//!   `e, a, a², b, ab, a²b` (the dihedral ordering with `a = r`, `b = s`);
//!   `symmetric n` for `n ≠ 3` is the closure of `(0 1 … n-1)` and `(0 1)`.
//! * `klein_four`: element `i` is the bit vector `i` in `C2 × C2`.
//! * `quaternion8`: ordered `1, -1, i, -i, j, -j, k, -k`.

use super::{Group, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};

/// The preset families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Cyclic,
    Dihedral,
    Symmetric,
    KleinFour,
    Quaternion8,
}

impl std::str::FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic" | "C" => Ok(Preset::Cyclic),
            "dihedral" | "D" => Ok(Preset::Dihedral),
            "symmetric" | "S" => Ok(Preset::Symmetric),
            "klein_four" | "klein" | "V4" => Ok(Preset::KleinFour),
            "quaternion8" | "Q8" => Ok(Preset::Quaternion8),
            other => Err(Error::UnsupportedPreset(other.to_string())),
        }
    }
}

fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
}

fn labeled(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Group> {
    Group::from_mult_table_labeled(&table, Some(labels))
}

fn dihedral(n: usize, r: &str, s: &str) -> Result<Group> {
    let order = 2 * n;
    let t = table(order, |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        let k = if j == 1 { (n - k) % n } else { k };
        (i + k) % n + n * ((j + l) % 2)
    });
    let power = |i: usize| match i {
        0 => String::new(),
        1 => r.to_string(),
        _ => format!("{r}^{i}"),
    };
    let labels = (0..order)
        .map(|g| {
            let (i, j) = (g % n, g / n);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (_, 0) => power(i),
                (_, _) => format!("{}{s}", power(i)),
            }
        })
        .collect();
    labeled(t, labels)
}

/// Builds a preset group.
pub fn preset_group(preset: Preset, param: usize) -> Result<Group> {
    match preset {
        Preset::Cyclic => {
            if param < 1 {
                return Err(Error::UnsupportedPreset(format!("cyclic:{param} (need n >= 1)")));
            }
            let labels = (0..param)
                .map(|i| match i {
                    0 => "e".to_string(),
                    1 => "r".to_string(),
                    _ => format!("r^{i}"),
                })
                .collect();
            labeled(table(param, |a, b| (a + b) % param), labels)
        }
        Preset::Dihedral => {
            if param < 2 {
                return Err(Error::UnsupportedPreset(format!("dihedral:{param} (need n >= 2)")));
            }
            dihedral(param, "r", "s")
        }
        Preset::Symmetric => match param {
            1 => preset_group(Preset::Cyclic, 1),
            2 => labeled(table(2, |a, b| a ^ b), vec!["e".into(), "(0 1)".into()]),
            3 => dihedral(3, "a", "b"),
            4 | 5 => {
                let cycle: Vec<usize> = (0..param).map(|i| (i + 1) % param).collect();
                let mut swap: Vec<usize> = (0..param).collect();
                swap.swap(0, 1);
                Group::from_permutations(&[cycle, swap], DEFAULT_SIZE_CAP)
            }
            _ => Err(Error::UnsupportedPreset(format!("symmetric:{param} (need 1 <= n <= 5)"))),
        },
        Preset::KleinFour => {
            labeled(table(4, |a, b| a ^ b), vec!["e".into(), "u".into(), "v".into(), "uv".into()])
        }
        Preset::Quaternion8 => {
            // index = 2*unit + sign, unit ∈ {1, i, j, k}, sign ∈ {+, -}
            // unit products: (unit_a, unit_b) -> (unit, sign)
            let unit_mul = |a: usize, b: usize| -> (usize, usize) {
                match (a, b) {
                    (0, x) | (x, 0) => (x, 0),
                    (x, y) if x == y => (0, 1),
                    (1, 2) => (3, 0),
                    (2, 3) => (1, 0),
                    (3, 1) => (2, 0),
                    (2, 1) => (3, 1),
                    (3, 2) => (1, 1),
                    (1, 3) => (2, 1),
                    _ => unreachable!(),
                }
            };
            let t = table(8, |a, b| {
                let (u, s) = unit_mul(a / 2, b / 2);
                2 * u + ((a % 2 + b % 2 + s) % 2)
            });
            let names = ["1", "i", "j", "k"];
            let labels = (0..8).map(|g| format!("{}{}", if g % 2 == 1 { "-" } else { "" }, names[g / 2])).collect();
            labeled(t, labels)
        }
    }
}

/// Parses permutations in cycle notation, e.g. `"(0 1 2),(0 1)"`. The domain
/// is `{0..d-1}` where `d` is one more than the largest point mentioned.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut perms_cycles: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut degree = 0;
    for part in text.split("),") {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let mut cycles = Vec::new();
        for cyc in part.split(')') {
            let cyc = cyc.trim().trim_start_matches(',').trim();
            if cyc.is_empty() {
                continue;
            }
            let inner = cyc
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {cyc:?}")))?;
            let points = inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {s:?}"))))
                .collect::<Result<Vec<usize>>>()?;
            if let Some(&m) = points.iter().max() {
                degree = degree.max(m + 1);
            }
            cycles.push(points);
        }
        perms_cycles.push(cycles);
    }
    if perms_cycles.is_empty() {
        return Err(Error::Parse("no permutations given".into()));
    }
    perms_cycles
        .into_iter()
        .map(|cycles| {
            let mut perm: Vec<usize> = (0..degree).collect();
            let mut touched = vec![false; degree];
            for cyc in cycles {
                for (i, &x) in cyc.iter().enumerate() {
                    if touched[x] {
                        return Err(Error::InvalidPermutation(format!("point {x} repeated")));
                    }
                    touched[x] = true;
                    perm[x] = cyc[(i + 1) % cyc.len()];
                }
            }
            Ok(perm)
        })
        .collect()
}
