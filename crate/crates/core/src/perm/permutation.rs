use std::fmt;

use super::PermError;

/// Largest degree accepted anywhere in the crate.
pub const MAX_DEGREE: usize = 16;

/// A permutation of `{0, …, n−1}`.
///
/// Points are 0-based internally. The textual form is 1-based cycle notation,
/// e.g. `(1 2 3)(4 5)`, with `()` for the identity.
///
/// Composition follows `(p∘q)(i) = p(q(i))`: the right factor acts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from its (0-based) image list.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        check_degree(n)?;
        let mut seen = [false; MAX_DEGREE];
        for &i in images {
            if i >= n {
                return Err(PermError::PointOutOfRange { point: i + 1, degree: n });
            }
            if seen[i] {
                return Err(PermError::NotBijective);
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&i| i as u8).collect(),
        })
    }

    /// The transposition exchanging the 0-based points `i` and `j`.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Self {
        assert!(i < degree && j < degree && i != j);
        let mut p = Self::identity(degree);
        p.images.swap(i, j);
        p
    }

    /// The cycle `(0 1 … n−1)`.
    pub fn long_cycle(degree: usize) -> Self {
        let images: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
        Self::from_images(&images).expect("long cycle is a bijection")
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self∘other`, checking degrees.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then_unchecked(other))
    }

    /// `self∘other` without the degree check.
    #[inline]
    pub(crate) fn then_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `g∘self∘g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.then_unchecked(self).then_unchecked(&g.inverse())
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then_unchecked(&base);
            }
            base = base.then_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Smallest point moved, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &j)| *i != j as usize)
            .map(|(i, _)| i)
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// The transposition's two points, if this is one.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        match self.cycles().as_slice() {
            [c] if c.len() == 2 => Some((c[0], c[1])),
            _ => None,
        }
    }

    /// Parses 1-based disjoint-cycle notation for a permutation of `degree` points.
    ///
    /// Points inside a cycle may be separated by spaces or commas. A point may
    /// appear only once in the whole expression.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::Parse("degree must be at least 1".into()));
        }
        check_degree(degree)?;
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(PermError::Parse("empty permutation text".into()));
        }
        while !rest.is_empty() {
            let body_start = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Parse(format!("expected '(' at {rest:?}")))?;
            let close = body_start
                .find(')')
                .ok_or_else(|| PermError::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &body_start[..close];
            if body.contains('(') {
                return Err(PermError::Parse(format!("nested '(' in {text:?}")));
            }
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let point: usize = tok
                    .parse()
                    .map_err(|_| PermError::Parse(format!("bad point {tok:?}")))?;
                if point == 0 || point > degree {
                    return Err(PermError::PointOutOfRange { point, degree });
                }
                let p = point - 1;
                if used[p] {
                    return Err(PermError::RepeatedPoint(point));
                }
                used[p] = true;
                cycle.push(p);
            }
            if cycle.len() == 1 {
                return Err(PermError::Parse(format!(
                    "one-point cycle ({}) in {text:?}",
                    cycle[0] + 1
                )));
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()];
            }
            rest = body_start[close + 1..].trim_start();
        }
        Self::from_images(&images)
    }
}

fn check_degree(n: usize) -> Result<(), PermError> {
    if n > MAX_DEGREE {
        Err(PermError::DegreeTooLarge(n))
    } else {
        Ok(())
    }
}

/// Splits a comma-separated generator list such as `"(1 2 3 4),(1 3)"` and parses
/// each entry. Commas inside parentheses separate points, not generators.
pub fn parse_generator_list(text: &str, degree: usize) -> Result<Vec<Permutation>, PermError> {
    let mut pieces = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' | ';' if depth == 0 => {
                pieces.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(PermError::Parse(format!("unbalanced ')' in {text:?}")));
        }
    }
    pieces.push(&text[start..]);
    pieces
        .into_iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| Permutation::parse(s, degree))
        .collect()
}

/// Largest point (1-based) mentioned in cycle-notation text, used to infer a degree.
pub fn max_point_mentioned(text: &str) -> Option<usize> {
    text.split(|c: char| !c.is_ascii_digit())
        .filter_map(|t| t.parse().ok())
        .max()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.degree())
    }
}
