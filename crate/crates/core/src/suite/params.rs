//! Typed access to JSON check parameters.

use num_complex::Complex64;
use serde_json::{Map, Value};

use crate::bergman::TruncatedSeries;
use crate::error::{Error, Result};
use crate::operators::{BiPolySymbol, BiPolyTerm};

pub(crate) struct Params<'a> {
    map: &'a Map<String, Value>,
}

fn bad(key: &str, expected: &str) -> Error {
    Error::usage(format!("parameter `{key}`: expected {expected}"))
}

fn complex_of(v: &Value) -> Option<Complex64> {
    match v {
        Value::Number(n) => n.as_f64().map(|x| Complex64::new(x, 0.0)),
        Value::Array(a) if a.len() == 2 => Some(Complex64::new(a[0].as_f64()?, a[1].as_f64()?)),
        _ => None,
    }
}

fn coeffs_of(v: &Value) -> Option<Vec<Complex64>> {
    v.as_array()?.iter().map(complex_of).collect()
}

impl<'a> Params<'a> {
    pub fn new(map: &'a Map<String, Value>) -> Self {
        Params { map }
    }

    fn get(&self, key: &str) -> Result<&'a Value> {
        self.map
            .get(key)
            .ok_or_else(|| Error::usage(format!("missing parameter `{key}`")))
    }

    pub fn f64(&self, key: &str) -> Result<f64> {
        self.get(key)?
            .as_f64()
            .filter(|x| x.is_finite())
            .ok_or_else(|| bad(key, "a finite number"))
    }

    pub fn positive_f64(&self, key: &str) -> Result<f64> {
        let x = self.f64(key)?;
        if x > 0.0 {
            Ok(x)
        } else {
            Err(bad(key, "a positive number"))
        }
    }

    /// The weight parameter, validated to `α > −1`.
    pub fn alpha(&self) -> Result<f64> {
        let a = self.f64("alpha")?;
        if a > -1.0 {
            Ok(a)
        } else {
            Err(bad("alpha", "a number greater than -1"))
        }
    }

    pub fn usize(&self, key: &str) -> Result<usize> {
        self.get(key)?
            .as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| bad(key, "a non-negative integer"))
    }

    /// Integer parameter with an inclusive lower bound.
    pub fn usize_min(&self, key: &str, min: usize) -> Result<usize> {
        let v = self.usize(key)?;
        if v < min {
            return Err(bad(key, &format!("an integer >= {min}")));
        }
        Ok(v)
    }

    pub fn seed(&self) -> Result<u64> {
        self.get("seed")?
            .as_u64()
            .ok_or_else(|| bad("seed", "a non-negative integer"))
    }

    pub fn usize_list(&self, key: &str, min: usize) -> Result<Vec<usize>> {
        let expected = format!("a non-empty list of integers >= {min}");
        let list = self.get(key)?.as_array().ok_or_else(|| bad(key, &expected))?;
        let out: Option<Vec<usize>> = list.iter().map(|v| v.as_u64().map(|x| x as usize)).collect();
        match out {
            Some(v) if !v.is_empty() && v.iter().all(|&x| x >= min) => Ok(v),
            _ => Err(bad(key, &expected)),
        }
    }

    pub fn f64_list(&self, key: &str) -> Result<Vec<f64>> {
        let expected = "a non-empty list of finite numbers";
        let list = self.get(key)?.as_array().ok_or_else(|| bad(key, expected))?;
        let out: Option<Vec<f64>> = list.iter().map(|v| v.as_f64().filter(|x| x.is_finite())).collect();
        out.filter(|v| !v.is_empty()).ok_or_else(|| bad(key, expected))
    }

    pub fn complex(&self, key: &str) -> Result<Complex64> {
        complex_of(self.get(key)?).ok_or_else(|| bad(key, "a number or a [re, im] pair"))
    }

    pub fn complex_list(&self, key: &str) -> Result<Vec<Complex64>> {
        coeffs_of(self.get(key)?)
            .filter(|v| !v.is_empty())
            .ok_or_else(|| bad(key, "a non-empty list of numbers or [re, im] pairs"))
    }

    /// Taylor coefficients, padded to at least `truncation`.
    pub fn series(&self, key: &str, truncation: usize) -> Result<TruncatedSeries> {
        let c = self.complex_list(key)?;
        Ok(TruncatedSeries::from_poly(&c, truncation.max(c.len() - 1)))
    }

    /// Symbol terms as `[[p, q, re, im], …]`.
    pub fn symbol(&self, key: &str) -> Result<BiPolySymbol> {
        let expected = "a non-empty list of [p, q, re, im] terms";
        let list = self.get(key)?.as_array().ok_or_else(|| bad(key, expected))?;
        if list.is_empty() {
            return Err(bad(key, expected));
        }
        let mut terms = Vec::with_capacity(list.len());
        for t in list {
            let t = t
                .as_array()
                .filter(|t| t.len() == 4)
                .ok_or_else(|| bad(key, expected))?;
            let (p, q) = (t[0].as_u64(), t[1].as_u64());
            let (re, im) = (t[2].as_f64(), t[3].as_f64());
            match (p, q, re, im) {
                (Some(p), Some(q), Some(re), Some(im)) => terms.push(BiPolyTerm {
                    p: p as usize,
                    q: q as usize,
                    c: Complex64::new(re, im),
                }),
                _ => return Err(bad(key, expected)),
            }
        }
        BiPolySymbol::new(terms)
    }

    /// List of `[psi, phi]` coefficient pairs.
    pub fn series_pairs(&self, key: &str) -> Result<Vec<(Vec<Complex64>, Vec<Complex64>)>> {
        let expected = "a non-empty list of [psi_coeffs, phi_coeffs] pairs";
        let list = self.get(key)?.as_array().ok_or_else(|| bad(key, expected))?;
        if list.is_empty() {
            return Err(bad(key, expected));
        }
        list.iter()
            .map(|pair| {
                let pair = pair
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| bad(key, expected))?;
                match (coeffs_of(&pair[0]), coeffs_of(&pair[1])) {
                    (Some(a), Some(b)) if !a.is_empty() && !b.is_empty() => Ok((a, b)),
                    _ => Err(bad(key, expected)),
                }
            })
            .collect()
    }
}
