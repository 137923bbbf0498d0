use core::fmt;
use core::str::FromStr;

use crate::num::{common_denominator, int, scale, Rational};
use crate::Error;

/// The four edit-operation costs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CostScheme {
    pub del_x: Rational,
    pub del_y: Rational,
    pub matching: Rational,
    pub subst: Rational,
}

impl CostScheme {
    pub fn new(del_x: Rational, del_y: Rational, matching: Rational, subst: Rational) -> Self {
        Self { del_x, del_y, matching, subst }
    }

    pub fn from_ints(del_x: i128, del_y: i128, matching: i128, subst: i128) -> Self {
        Self::new(int(del_x), int(del_y), int(matching), int(subst))
    }

    /// `(1,1,0,2)`, whose distance is the unmatched-symbol count of LCS.
    pub fn lcs() -> Self {
        Self::from_ints(1, 1, 0, 2)
    }

    pub fn levenshtein() -> Self {
        Self::from_ints(1, 1, 0, 1)
    }

    /// `Edit(c)`: unit deletions, free matches, substitutions at `c`.
    pub fn canonical(c_subst: Rational) -> Self {
        Self::new(int(1), int(1), int(0), c_subst)
    }

    /// The scheme for the swapped pair `(y, x)`.
    pub fn swapped(&self) -> Self {
        Self::new(self.del_y, self.del_x, self.matching, self.subst)
    }

    pub fn as_array(&self) -> [Rational; 4] {
        [self.del_x, self.del_y, self.matching, self.subst]
    }

    /// Integer costs scaled by the common denominator `D`, and `D` itself.
    pub fn scaled(&self) -> (IntCosts, i128) {
        let d = common_denominator(&self.as_array());
        let s = |v| scale(v, d) as i64;
        (
            IntCosts {
                del_x: s(self.del_x),
                del_y: s(self.del_y),
                matching: s(self.matching),
                subst: s(self.subst),
            },
            d,
        )
    }
}

impl fmt::Display for CostScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.del_x, self.del_y, self.matching, self.subst)
    }
}

impl FromStr for CostScheme {
    type Err = Error;

    /// Four comma-separated rationals such as `1,1,0,3/2`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut vals = [int(0); 4];
        let mut count = 0;
        for part in s.split(',') {
            if count == 4 {
                return Err(Error::InvalidInput("cost scheme needs exactly four values"));
            }
            vals[count] = part
                .trim()
                .parse::<Rational>()
                .map_err(|_| Error::InvalidInput("malformed rational in cost scheme"))?;
            count += 1;
        }
        if count != 4 {
            return Err(Error::InvalidInput("cost scheme needs exactly four values"));
        }
        Ok(Self::new(vals[0], vals[1], vals[2], vals[3]))
    }
}

/// Integer operation costs used by the DP kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntCosts {
    pub del_x: i64,
    pub del_y: i64,
    pub matching: i64,
    pub subst: i64,
}

impl IntCosts {
    pub fn new(del_x: i64, del_y: i64, matching: i64, subst: i64) -> Self {
        Self { del_x, del_y, matching, subst }
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.del_y, self.del_x, self.matching, self.subst)
    }

    pub fn to_scheme(&self) -> CostScheme {
        CostScheme::from_ints(
            self.del_x as i128,
            self.del_y as i128,
            self.matching as i128,
            self.subst as i128,
        )
    }
}
