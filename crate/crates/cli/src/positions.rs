//! The `positions` text format: a header line `n m d` followed by the moved
//! positions, separated by any whitespace.

use std::io::{self, Write};

use checkers_core::{Direction, GameSpec, Solution};

pub fn write_header(out: &mut impl Write, spec: GameSpec, dir: Direction) -> io::Result<()> {
    writeln!(out, "{} {} {}", spec.n(), spec.m(), dir.d())
}

pub fn write_steps(out: &mut impl Write, steps: impl IntoIterator<Item = usize>) -> io::Result<()> {
    let mut first = true;
    for x in steps {
        if !first {
            out.write_all(b" ")?;
        }
        write!(out, "{x}")?;
        first = false;
    }
    out.write_all(b"\n")
}

pub fn parse(text: &str) -> Result<Solution, String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or("empty input: expected header `n m d`")?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m, d] = fields[..] else {
        return Err(format!("header {header:?} should be `n m d`"));
    };
    let n: usize = n.parse().map_err(|_| format!("bad n in header: {n:?}"))?;
    let m: usize = m.parse().map_err(|_| format!("bad m in header: {m:?}"))?;
    let spec = GameSpec::new(n, m).map_err(|e| e.to_string())?;
    let dir = match d {
        "1" | "+1" => Direction::Right,
        "-1" => Direction::Left,
        _ => return Err(format!("bad d in header: {d:?} (expected 1 or -1)")),
    };
    let steps = lines
        .flat_map(str::split_whitespace)
        .enumerate()
        .map(|(k, tok)| {
            tok.parse()
                .map_err(|_| format!("step {}: not a position: {tok:?}", k + 1))
        })
        .collect::<Result<Vec<usize>, String>>()?;
    Ok(Solution::new(spec, dir, steps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let spec = GameSpec::new(1, 1).unwrap();
        let mut buf = Vec::new();
        write_header(&mut buf, spec, Direction::Right).unwrap();
        write_steps(&mut buf, [1, 3, 2]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "1 1 1\n1 3 2\n");
        let sol = parse(&text).unwrap();
        assert_eq!(sol, Solution::new(spec, Direction::Right, vec![1, 3, 2]));
    }

    #[test]
    fn accepts_signed_d_and_split_lines() {
        let sol = parse("2 1 -1\n4 2\n\n3 5 4\n").unwrap();
        assert_eq!(sol.direction, Direction::Left);
        assert_eq!(sol.steps, [4, 2, 3, 5, 4]);
        assert_eq!(parse("1 1 +1\n").unwrap().direction, Direction::Right);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse("").is_err());
        assert!(parse("1 1\n1 3 2").is_err());
        assert!(parse("0 1 1\n").is_err());
        assert!(parse("1 1 2\n1").is_err());
        assert!(parse("1 1 r\n1").is_err());
        assert!(parse("1 1 1\n1 x 2").unwrap_err().contains("step 2"));
    }
}
