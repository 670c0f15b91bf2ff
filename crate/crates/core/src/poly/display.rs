use std::fmt;

use num_traits::{One, Signed};

use super::mpoly::MPoly;

impl fmt::Display for MPoly {
    /// Canonical form: graded-lex descending, explicit `*` and `^`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let spec = self.spec();
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            let constant = e.iter().all(|&k| k == 0);
            if !a.is_one() || constant {
                factors.push(a.to_string());
            }
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(spec.var_name(v)),
                    _ => factors.push(format!("{}^{}", spec.var_name(v), k)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
