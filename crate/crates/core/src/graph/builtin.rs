use super::Graph;
use crate::error::{Error, Result};

/// Constructs a named graph with a frozen vertex labeling.
///
/// | name       | param | labeling                                                      |
/// |------------|-------|---------------------------------------------------------------|
/// | `complete` | n ≥ 1 | vertices `0..n`, all pairs                                    |
/// | `cycle`    | n ≥ 3 | edges `(i, i+1 mod n)`                                        |
/// | `path`     | n ≥ 1 | edges `(i, i+1)` for `i < n-1`                                |
/// | `petersen` |   –   | outer 5-cycle on `0..5`, pentagram `(5+i, 5+(i+2)%5)`, spokes `(i, i+5)` |
/// | `heawood`  |   –   | 14-cycle `(i, i+1 mod 14)` plus chords `(i, i+5 mod 14)` for even `i` |
pub fn builtin_graph(name: &str, param: Option<usize>) -> Result<Graph> {
    let need = |min: usize| match param {
        Some(n) if n >= min => Ok(n),
        Some(n) => Err(Error::InvalidParam(format!(
            "{name} needs n >= {min}, got {n}"
        ))),
        None => Err(Error::InvalidParam(format!(
            "{name} needs a size parameter"
        ))),
    };
    let fixed = || match param {
        None => Ok(()),
        Some(_) => Err(Error::InvalidParam(format!("{name} takes no parameter"))),
    };
    match name {
        "complete" => Graph::complete(need(1)?),
        "cycle" => {
            let n = need(3)?;
            let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &pairs)
        }
        "path" => {
            let n = need(1)?;
            let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &pairs)
        }
        "petersen" => {
            fixed()?;
            let mut pairs = Vec::with_capacity(15);
            for i in 0..5 {
                pairs.push((i, (i + 1) % 5));
                pairs.push((5 + i, 5 + (i + 2) % 5));
                pairs.push((i, i + 5));
            }
            Graph::new(10, &pairs)
        }
        "heawood" => {
            fixed()?;
            let mut pairs: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
            pairs.extend((0..14).step_by(2).map(|i| (i, (i + 5) % 14)));
            Graph::new(14, &pairs)
        }
        _ => Err(Error::UnknownGraph(name.to_string())),
    }
}
