//! Groups named on the command line: built-in names or table files.

use std::fs;

use handlegraph::group_theory::FiniteGroup;
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(untagged)]
enum TableDoc {
    Bare(Vec<Vec<usize>>),
    Wrapped { table: Vec<Vec<usize>> },
}

/// `Zn`, `Dk` (dihedral of order `k`), `A4`, `S4`, `A5`, `Q8`, `V4`, or a
/// path to a JSON multiplication table (`[[..],..]` or `{"table": ..}`).
pub fn load(arg: &str) -> Result<FiniteGroup, String> {
    if let Some(g) = builtin(arg)? {
        return Ok(g);
    }
    let text = fs::read_to_string(arg)
        .map_err(|e| format!("group {arg:?}: not a built-in name and unreadable: {e}"))?;
    let doc: TableDoc = serde_json::from_str(&text).map_err(|e| format!("{arg}: {e}"))?;
    let rows = match doc {
        TableDoc::Bare(rows) | TableDoc::Wrapped { table: rows } => rows,
    };
    FiniteGroup::from_table(rows).map_err(|e| format!("{arg}: {e}"))
}

fn builtin(arg: &str) -> Result<Option<FiniteGroup>, String> {
    let group = match arg {
        "A4" => FiniteGroup::alternating(4),
        "S4" => FiniteGroup::symmetric(4),
        "A5" => FiniteGroup::alternating(5),
        "Q8" => FiniteGroup::quaternion(),
        "V4" => FiniteGroup::klein_four(),
        _ => {
            let parse = |rest: &str| rest.parse::<usize>().ok();
            if let Some(n) = arg.strip_prefix('Z').and_then(parse) {
                if n == 0 || n > 1000 {
                    return Err(format!("{arg}: cyclic order must be in 1..=1000"));
                }
                FiniteGroup::cyclic(n)
            } else if let Some(k) = arg.strip_prefix('D').and_then(parse) {
                if k < 2 || k % 2 != 0 || k > 1000 {
                    return Err(format!(
                        "{arg}: dihedral order must be even and in 2..=1000"
                    ));
                }
                FiniteGroup::dihedral(k)
            } else {
                return Ok(None);
            }
        }
    };
    Ok(Some(group))
}
