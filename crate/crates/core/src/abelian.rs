//! Abelianization of presented groups.
//!
//! `H₁` of a presentation is the cokernel of its exponent-sum relation
//! matrix. All arithmetic is over [`BigInt`], so intermediate entry growth in
//! the Smith normal form never wraps.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::presentations::Presentation;
use crate::words::Word;

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(cols: usize, rows: &[R]) -> Self {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "row {i} has the wrong length");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    /// Fraction-free Bareiss elimination. Panics on non-square input.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for c in 0..self.cols {
            let v = &self[(source, c)] * factor;
            self[(target, c)] += v;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for r in 0..self.rows {
            let v = &self[(r, source)] * factor;
            self[(r, target)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -&self[(i, c)];
            self[(i, c)] = v;
        }
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, vector: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(vector.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                vector
                    .iter()
                    .enumerate()
                    .map(|(i, x)| x * &self[(i, j)])
                    .sum()
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = &self[(i, k)];
                if x.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += x * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        write!(f, "IntMatrix{rows:?}")
    }
}

/// `d = u · m · v` with `u`, `v` unimodular and `d` diagonal with each
/// diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Number of non-zero diagonal entries.
    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest non-zero entry of the trailing block becomes the pivot
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !d[(i, j)].is_zero())
                .min_by(|&p, &q| d[p].abs().cmp(&d[q].abs()));
            let Some((pi, pj)) = pivot else {
                return SmithForm { d, u, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &d[(t, t)]);
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &d[(t, t)]);
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)]))
            });
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => {
                    if d[(t, t)].is_negative() {
                        d.negate_row(t);
                        u.negate_row(t);
                    }
                    break;
                }
            }
        }
    }
    SmithForm { d, u, v }
}

/// A finitely generated abelian group `Zʳ ⊕ Z/d₁ ⊕ … ⊕ Z/dₖ` with
/// `2 ≤ d₁ | d₂ | … | dₖ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Checks the canonical-form invariants.
    pub fn is_canonical(&self) -> bool {
        let two = BigInt::from(2);
        self.torsion.iter().all(|d| d >= &two)
            && self.torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = std::iter::repeat_n("Z".to_string(), self.free_rank)
            .chain(self.torsion.iter().map(|d| format!("Z/{d}")))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Coordinates of an element in the decomposition of an [`AbelianGroup`];
/// torsion coordinates are reduced into `0..dᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianImage {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

impl AbelianImage {
    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(Zero::is_zero)
    }

    pub fn fits(&self, group: &AbelianGroup) -> bool {
        self.free.len() == group.free_rank
            && self.torsion.len() == group.torsion.len()
            && self
                .torsion
                .iter()
                .zip(&group.torsion)
                .all(|(x, d)| !x.is_negative() && x < d)
    }
}

/// Exponent sums, relators × generators.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let gens = p.generators();
    let mut m = IntMatrix::zeros(p.relators().len(), gens.len());
    for (i, r) in p.relators().iter().enumerate() {
        for (j, g) in gens.iter().enumerate() {
            m[(i, j)] = BigInt::from(r.exponent_sum(g));
        }
    }
    m
}

/// The abelianization map of a presentation.
///
/// Row vectors of exponent sums are carried to Smith coordinates by the
/// column transform `v`; relators land in the row space of `d`.
#[derive(Clone, Debug)]
pub struct Abelianization {
    presentation: Presentation,
    smith: SmithForm,
    group: AbelianGroup,
}

impl Abelianization {
    pub fn new(p: &Presentation) -> Self {
        let smith = smith_normal_form(&relation_matrix(p));
        let cols = p.generators().len();
        let rank = smith.rank();
        let diag = smith.d.diagonal();
        let group = AbelianGroup {
            free_rank: cols - rank,
            torsion: diag[..rank].iter().filter(|d| !d.is_one()).cloned().collect(),
        };
        Abelianization {
            presentation: p.clone(),
            smith,
            group,
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn smith(&self) -> &SmithForm {
        &self.smith
    }

    pub fn image(&self, w: &Word) -> Result<AbelianImage> {
        self.presentation.check_word(w)?;
        let exponents: Vec<BigInt> = self
            .presentation
            .generators()
            .iter()
            .map(|g| BigInt::from(w.exponent_sum(g)))
            .collect();
        let coords = self.smith.v.left_apply(&exponents);
        let rank = self.smith.rank();
        let diag = self.smith.d.diagonal();
        let torsion = (0..rank)
            .filter(|&i| !diag[i].is_one())
            .map(|i| coords[i].mod_floor(&diag[i]))
            .collect();
        let free = coords[rank..].to_vec();
        Ok(AbelianImage { free, torsion })
    }
}

pub fn homology(p: &Presentation) -> AbelianGroup {
    Abelianization::new(p).group
}

pub fn abelian_image(w: &Word, p: &Presentation) -> Result<AbelianImage> {
    Abelianization::new(p).image(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{double_filled, pretzel, whitehead_exterior, whitehead_filled, Slope};
    use crate::words::commutator;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn slope(m: i64, n: i64) -> Slope {
        Slope::new(m, n).unwrap()
    }

    fn check_smith(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert!(s.d.is_diagonal());
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        s
    }

    #[test]
    fn relation_matrix_examples() {
        let m = relation_matrix(&whitehead_exterior());
        assert_eq!(m, IntMatrix::zeros(1, 2));
        let m = relation_matrix(&whitehead_filled(slope(5, 1)).unwrap());
        assert_eq!(m, IntMatrix::from_rows(2, &[[0, 0], [5, 0]]));
        let free = Presentation::new(whitehead_exterior().generators().to_vec(), vec![]).unwrap();
        let m = relation_matrix(&free);
        assert_eq!((m.rows(), m.cols()), (0, 2));
    }

    #[test]
    fn smith_examples() {
        let s = check_smith(&IntMatrix::from_rows(2, &[[2, 0], [0, 3]]));
        assert_eq!(s.d.diagonal(), big(&[1, 6]));

        let z = IntMatrix::zeros(2, 3);
        let s = check_smith(&z);
        assert_eq!(s.d, z);
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(3));

        let s = check_smith(&IntMatrix::from_rows(1, &[[5]]));
        assert_eq!(s.d.diagonal(), big(&[5]));

        let s = check_smith(&IntMatrix::from_rows(2, &[[-4, 6], [6, -9]]));
        assert_eq!(s.d.diagonal(), big(&[1, 0]));
    }

    #[test]
    fn determinant_small() {
        assert_eq!(IntMatrix::from_rows(2, &[[2, 4], [6, 8]]).determinant(), BigInt::from(-8));
        assert_eq!(
            IntMatrix::from_rows(3, &[[0, 1, 2], [1, 0, 3], [4, -3, 8]]).determinant(),
            BigInt::from(-2)
        );
        assert_eq!(IntMatrix::zeros(0, 0).determinant(), BigInt::one());
    }

    #[test]
    fn homology_examples() {
        let five = slope(5, 1);
        assert_eq!(homology(&whitehead_filled(five).unwrap()).to_string(), "Z + Z/5");
        assert_eq!(
            homology(&double_filled(five, slope(5, 2)).unwrap()).to_string(),
            "Z/5 + Z/5"
        );
        assert_eq!(homology(&pretzel(4).unwrap()).to_string(), "Z + Z");
        assert_eq!(homology(&double_filled(five, slope(1, 0)).unwrap()).to_string(), "Z/5");
        assert_eq!(homology(&double_filled(five, slope(1, 1)).unwrap()).to_string(), "Z/5");
        assert_eq!(homology(&whitehead_filled(slope(0, 1)).unwrap()).to_string(), "Z + Z");
    }

    #[test]
    fn homology_of_whitehead_fillings() {
        for n in 1..=4i64 {
            for m in (-12..=12i64).filter(|&m| m != 0) {
                let Ok(s) = Slope::new(m, n) else { continue };
                let g = homology(&whitehead_filled(s).unwrap());
                let expected = if m.abs() == 1 {
                    AbelianGroup { free_rank: 1, torsion: vec![] }
                } else {
                    AbelianGroup { free_rank: 1, torsion: big(&[m.abs()]) }
                };
                assert_eq!(g, expected, "slope {m}/{n}");
            }
        }
    }

    #[test]
    fn image_of_meridian_generates_torsion() {
        let p = whitehead_filled(slope(5, 1)).unwrap();
        let ab = Abelianization::new(&p);
        let a = Word::parse("a").unwrap();
        let img = ab.image(&a).unwrap();
        assert!(img.fits(ab.group()));
        assert_eq!(img.torsion.len(), 1);
        assert!(img.torsion[0].gcd(&BigInt::from(5)).is_one());
        assert!(img.free.iter().all(Zero::is_zero));
    }

    #[test]
    fn commutators_and_identity_vanish() {
        let a = Word::parse("a").unwrap();
        let b = Word::parse("b").unwrap();
        for p in [whitehead_filled(slope(5, 1)).unwrap(), pretzel(3).unwrap()] {
            assert!(abelian_image(&commutator(&a, &b), &p).unwrap().is_zero());
            assert!(abelian_image(&Word::identity(), &p).unwrap().is_zero());
        }
    }

    #[test]
    fn unknown_generator_is_rejected() {
        let p = pretzel(2).unwrap();
        assert!(abelian_image(&Word::parse("ac").unwrap(), &p).is_err());
    }

    #[test]
    fn trivial_group_renders_as_zero() {
        let g = AbelianGroup { free_rank: 0, torsion: vec![] };
        assert_eq!(g.to_string(), "0");
        assert!(g.is_trivial());
    }
}
