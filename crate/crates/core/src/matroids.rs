//! Configurations read as represented matroids.
//!
//! Each circuit carries its dependency coefficients, normalized to a
//! primitive integer vector whose first nonzero entry is positive. The rows
//! of those vectors form the derived configuration, which can be derived
//! again.

use crate::error::{Error, Result};
use crate::exalg::{meet_sweedler, merge_sign, Extensor, PlaceSet};
use crate::linalg;
use crate::scalar::{primitive_integer, sign, Scalar};
use crate::whitney::{Configuration, Letter, RankOracle};

use num::Zero;

/// Largest ground set accepted by [`Matroid::circuits`].
pub const MAX_GROUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    config: Configuration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    letters: Vec<Letter>,
    coefficients: Vec<Scalar>,
}

impl Circuit {
    /// Members in declaration order.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// One entry per ground-set letter, zero off the circuit.
    pub fn coefficients(&self) -> &[Scalar] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenated member names, e.g. `abcd`.
    pub fn name(&self) -> String {
        self.letters.iter().map(|l| l.to_string()).collect()
    }
}

/// Circuit coefficient rows, one per circuit, as points of a configuration
/// whose rank is the size of the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedConfiguration {
    pub circuits: Vec<Circuit>,
    pub configuration: Configuration,
}

impl DerivedConfiguration {
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Scalar>> = self.configuration.rows().map(|(_, r)| r.clone()).collect();
        linalg::rank(&rows, self.configuration.ambient())
    }
}

impl Matroid {
    pub fn new(config: Configuration) -> Self {
        Matroid { config }
    }

    pub fn configuration(&self) -> &Configuration {
        &self.config
    }

    /// Ground set in declaration order.
    pub fn ground(&self) -> Vec<Letter> {
        self.config.letters().cloned().collect()
    }

    pub fn rank_of(&self, letters: &[Letter]) -> Result<usize> {
        self.config.rank(letters)
    }

    fn index(&self, letter: &Letter) -> Result<usize> {
        self.config
            .index_of(letter)
            .ok_or_else(|| Error::UnboundLetter(letter.name().to_string()))
    }

    fn rows(&self, idx: &[usize]) -> Vec<Vec<Scalar>> {
        let all: Vec<&Vec<Scalar>> = self.config.rows().map(|(_, r)| r).collect();
        idx.iter().map(|&i| all[i].clone()).collect()
    }

    fn is_circuit_idx(&self, idx: &[usize]) -> bool {
        let n = self.config.ambient();
        let k = idx.len();
        if k == 0 || linalg::rank(&self.rows(idx), n) != k - 1 {
            return false;
        }
        (0..k).all(|skip| {
            let rest: Vec<usize> = idx
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .map(|(_, &i)| i)
                .collect();
            linalg::rank(&self.rows(&rest), n) == k - 1
        })
    }

    /// Cramer coefficients of a circuit, before normalization: entry `i` is
    /// `(-1)^i` times the bracket of the other members on a set of columns
    /// where they have full rank. For a circuit spanning the whole space this
    /// is the classical alternating bracket relation.
    pub fn circuit_brackets(&self, letters: &[Letter]) -> Result<Vec<Scalar>> {
        let mut idx: Vec<usize> = letters.iter().map(|l| self.index(l)).collect::<Result<_>>()?;
        idx.sort_unstable();
        idx.dedup();
        if idx.len() != letters.len() || !self.is_circuit_idx(&idx) {
            let name: String = letters.iter().map(|l| l.to_string()).collect();
            return Err(Error::NotACircuit(name));
        }
        let rows = self.rows(&idx);
        let n = self.config.ambient();
        let pivots = linalg::rref(&rows, n).pivots;
        let mut out = vec![Scalar::zero(); self.config.len()];
        for (i, &g) in idx.iter().enumerate() {
            let minor: Vec<Vec<Scalar>> = rows
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, r)| pivots.iter().map(|&p| r[p].clone()).collect())
                .collect();
            let s = if i % 2 == 0 { 1 } else { -1 };
            out[g] = sign(s) * linalg::determinant(&minor);
        }
        Ok(out)
    }

    /// Canonical coefficient vector of a circuit over the whole ground set.
    pub fn circuit_coefficients(&self, letters: &[Letter]) -> Result<Vec<Scalar>> {
        Ok(primitive_integer(&self.circuit_brackets(letters)?))
    }

    pub fn circuit(&self, letters: &[Letter]) -> Result<Circuit> {
        let coefficients = self.circuit_coefficients(letters)?;
        let mut idx: Vec<usize> = letters.iter().map(|l| self.index(l)).collect::<Result<_>>()?;
        idx.sort_unstable();
        let ground = self.ground();
        Ok(Circuit {
            letters: idx.into_iter().map(|i| ground[i].clone()).collect(),
            coefficients,
        })
    }

    /// All circuits, by increasing size and then lexicographically by
    /// declaration index.
    pub fn circuits(&self) -> Result<Vec<Circuit>> {
        let size = self.config.len();
        if size > MAX_GROUND {
            return Err(Error::GroundSetTooLarge {
                size,
                max: MAX_GROUND,
            });
        }
        let n = self.config.ambient();
        let ground = self.ground();
        let mut found: Vec<PlaceSet> = Vec::new();
        let mut out = Vec::new();
        for k in 1..=size.min(n + 1) {
            let mut layer: Vec<Vec<usize>> = PlaceSet::subsets(size, k)
                .filter(|s| !found.iter().any(|c| c.is_subset(*s)))
                .map(|s| s.places().map(|p| p - 1).collect())
                .collect();
            layer.sort();
            for idx in layer {
                if linalg::rank(&self.rows(&idx), n) < k {
                    let letters: Vec<Letter> = idx.iter().map(|&i| ground[i].clone()).collect();
                    let places: Vec<usize> = idx.iter().map(|i| i + 1).collect();
                    found.push(PlaceSet::new(&places, size)?);
                    out.push(Circuit {
                        coefficients: self.circuit_coefficients(&letters)?,
                        letters,
                    });
                }
            }
        }
        Ok(out)
    }

    /// The circuit rows as a configuration of rank `|ground|`.
    pub fn derived_configuration(&self) -> Result<DerivedConfiguration> {
        let circuits = self.circuits()?;
        let mut configuration = Configuration::new(self.config.len());
        for c in &circuits {
            configuration.insert(Letter::new(c.name()), c.coefficients.clone())?;
        }
        Ok(DerivedConfiguration {
            circuits,
            configuration,
        })
    }

    /// Derives `k` times. A matroid without circuits derives to the empty
    /// matroid, after which iteration stops.
    pub fn derive_iterate(&self, k: usize) -> Result<Matroid> {
        let mut m = self.clone();
        for _ in 0..k {
            if m.config.is_empty() {
                break;
            }
            m = Matroid::new(m.derived_configuration()?.configuration);
        }
        Ok(m)
    }

    /// Dimension of the space of height vectors orthogonal to every given
    /// circuit: the liftings preserving those dependencies. Liftings by a
    /// linear function of the coordinates always qualify, so the count is at
    /// least the rank of the configuration.
    pub fn lifting_dimension(&self, circuits: &[Circuit]) -> usize {
        let rows: Vec<Vec<Scalar>> = circuits.iter().map(|c| c.coefficients.clone()).collect();
        self.config.len() - linalg::rank(&rows, self.config.len())
    }

    /// Liftings beyond those given by linear functions.
    pub fn nontrivial_liftings(&self, circuits: &[Circuit]) -> Result<usize> {
        let r = self.rank_of(&self.ground())?;
        Ok(self.lifting_dimension(circuits) - r)
    }
}

impl RankOracle for Matroid {
    fn rank(&self, letters: &[Letter]) -> Result<usize> {
        self.rank_of(letters)
    }
}

/// `det(S_X) / (σ(X', X) [T_{X'}])` with `X'` the complementary columns.
/// `s` holds one row per syzygy over the letters of `t`, in declaration order.
/// Dependent rows give zero for every admissible `x`.
pub fn resolving_bracket(s: &[Vec<Scalar>], t: &Configuration, x: &[Letter]) -> Result<Scalar> {
    let n = t.len();
    let k = s.len();
    let ground: Vec<Letter> = t.letters().cloned().collect();
    let r = t.rank(&ground)?;
    if r != t.ambient() {
        return Err(Error::DegenerateColumns);
    }
    if k + r != n {
        return Err(Error::Cardinality(format!(
            "{k} syzygy rows for {n} points of rank {r}"
        )));
    }
    if x.len() != k {
        return Err(Error::Cardinality(format!("{} columns for {k} rows", x.len())));
    }
    if s.iter().any(|row| row.len() != n) {
        return Err(Error::Cardinality(format!("syzygy rows must have {n} entries")));
    }
    let mut cols: Vec<usize> = Vec::with_capacity(k);
    for l in x {
        let i = t
            .index_of(l)
            .ok_or_else(|| Error::UnboundLetter(l.name().to_string()))?;
        if cols.contains(&i) {
            return Err(Error::Cardinality(format!("column `{l}` repeated")));
        }
        cols.push(i);
    }
    cols.sort_unstable();
    let comp: Vec<usize> = (0..n).filter(|i| !cols.contains(i)).collect();
    let comp_rows: Vec<Vec<Scalar>> = comp
        .iter()
        .map(|&i| t.get(&ground[i]).cloned())
        .collect::<Result<_>>()?;
    let br = linalg::determinant(&comp_rows);
    if br.is_zero() {
        return Err(Error::DegenerateColumns);
    }
    let minor: Vec<Vec<Scalar>> = s
        .iter()
        .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
        .collect();
    let sg = sign(merge_sign(&comp, &cols));
    Ok(linalg::determinant(&minor) / (sg * br))
}

fn line_rows(t: &Configuration, line: &(Letter, Letter)) -> Result<Vec<Vec<Scalar>>> {
    let rows = t.rows_of(&[line.0.clone(), line.1.clone()])?;
    if Extensor::from_points(&rows, t.ambient())?.is_zero() {
        return Err(Error::DegenerateLine(format!("{}{}", line.0, line.1)));
    }
    Ok(rows)
}

/// Whether the lines `pq`, `rs`, `uv` of a rank-3 configuration pass through
/// one point: the meet of the first two joined with the third has zero
/// bracket.
pub fn three_lines_concurrent(t: &Configuration, lines: &[(Letter, Letter); 3]) -> Result<bool> {
    if t.ambient() != 3 {
        return Err(Error::WrongAmbient {
            expected: 3,
            found: t.ambient(),
        });
    }
    let mut all: Vec<&Letter> = lines.iter().flat_map(|(a, b)| [a, b]).collect();
    all.sort();
    all.dedup();
    if all.len() != 6 {
        return Err(Error::Cardinality("concurrency needs six distinct letters".into()));
    }
    let l1 = line_rows(t, &lines[0])?;
    let l2 = line_rows(t, &lines[1])?;
    let l3 = Extensor::from_points(&line_rows(t, &lines[2])?, 3)?;
    let p = meet_sweedler(&l1, &l2, 3)?;
    Ok(p.join(&l3)?.bracket()?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ints};
    use crate::testutil::{rng, row};
    use crate::whitney::Word;

    fn letters(s: &str) -> Vec<Letter> {
        Word::parse(s).letters().to_vec()
    }

    fn sample() -> Matroid {
        Matroid::new(
            Configuration::from_rows(
                4,
                &[
                    ("a", ints(&[-2, 3, 0, 1])),
                    ("b", ints(&[2, 2, 1, 1])),
                    ("c", ints(&[8, 5, 0, 1])),
                    ("d", ints(&[9, 7, -1, 1])),
                ],
            )
            .unwrap(),
        )
    }

    fn l_matroid() -> Matroid {
        Matroid::new(
            Configuration::from_rows(
                3,
                &[
                    ("a", ints(&[0, 0, 1])),
                    ("b", ints(&[1, 0, 1])),
                    ("c", ints(&[3, 0, 1])),
                    ("d", ints(&[0, 1, 1])),
                    ("e", ints(&[0, 2, 1])),
                ],
            )
            .unwrap(),
        )
    }

    fn random_matroid(g: &mut rand_chacha::ChaCha8Rng, n: usize, names: &str) -> Matroid {
        let mut c = Configuration::new(n);
        for ch in names.chars() {
            c.insert(Letter::new(ch.to_string()), row(g, n)).unwrap();
        }
        Matroid::new(c)
    }

    /// All minimal dependent subsets, by brute force over bitmasks.
    fn brute_circuits(m: &Matroid) -> Vec<Vec<Letter>> {
        let g = m.ground();
        let subsets: Vec<Vec<Letter>> = (1u32..1 << g.len())
            .map(|mask| (0..g.len()).filter(|i| mask >> i & 1 == 1).map(|i| g[i].clone()).collect())
            .collect();
        let dependent = |s: &[Letter]| m.rank_of(s).unwrap() < s.len();
        let mut out: Vec<Vec<Letter>> = subsets
            .iter()
            .filter(|s| {
                dependent(s)
                    && (0..s.len()).all(|i| {
                        let mut t = s.to_vec();
                        t.remove(i);
                        !dependent(&t)
                    })
            })
            .cloned()
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    #[test]
    fn ranks() {
        let m = sample();
        assert_eq!(m.rank_of(&letters("abcd")).unwrap(), 3);
        assert_eq!(m.rank_of(&[]).unwrap(), 0);
        assert_eq!(l_matroid().rank_of(&letters("abcde")).unwrap(), 3);
        assert_eq!(m.rank_of(&letters("az")), Err(Error::UnboundLetter("z".into())));
    }

    #[test]
    fn rank_is_submodular() {
        let mut g = rng(50);
        use rand::Rng;
        let mut m = random_matroid(&mut g, 3, "abcdef");
        // force some dependencies
        let mut c = m.configuration().clone();
        let a = c.get(&Letter::new("a")).unwrap().clone();
        let b = c.get(&Letter::new("b")).unwrap().clone();
        c.insert(Letter::new("g"), linalg::combine(&[int(2), int(3)], &[a, b], 3)).unwrap();
        m = Matroid::new(c);
        let ground = m.ground();
        for _ in 0..200 {
            let pick = |g: &mut rand_chacha::ChaCha8Rng| -> Vec<Letter> {
                ground.iter().filter(|_| g.gen_bool(0.5)).cloned().collect()
            };
            let (x, y) = (pick(&mut g), pick(&mut g));
            let union: Vec<Letter> = ground.iter().filter(|l| x.contains(l) || y.contains(l)).cloned().collect();
            let inter: Vec<Letter> = x.iter().filter(|l| y.contains(l)).cloned().collect();
            let r = |s: &[Letter]| m.rank_of(s).unwrap();
            assert!(r(&x) + r(&y) >= r(&union) + r(&inter));
            assert!(r(&inter) <= r(&x) && r(&x) <= r(&union));
        }
    }

    #[test]
    fn sample_circuit() {
        let m = sample();
        let c = m.circuits().unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].name(), "abcd");
        assert_eq!(c[0].coefficients(), &ints(&[1, -2, 3, -2])[..]);
        assert!(matches!(
            m.circuit_coefficients(&letters("abc")),
            Err(Error::NotACircuit(_))
        ));
    }

    #[test]
    fn doubled_point() {
        let m = Matroid::new(
            Configuration::from_rows(2, &[("p", ints(&[1, 3])), ("q", ints(&[2, 6]))]).unwrap(),
        );
        assert_eq!(m.circuit_coefficients(&letters("pq")).unwrap(), ints(&[2, -1]));
    }

    #[test]
    fn l_configuration_circuits() {
        let m = l_matroid();
        let names: Vec<String> = m.circuits().unwrap().iter().map(Circuit::name).collect();
        assert_eq!(names, ["abc", "ade", "bcde"]);
        let brute: Vec<String> = brute_circuits(&m)
            .iter()
            .map(|s| s.iter().map(|l| l.to_string()).collect())
            .collect();
        assert_eq!(names, brute);
    }

    #[test]
    fn basis_has_no_circuits() {
        let m = Matroid::new(
            Configuration::from_rows(
                3,
                &[("a", ints(&[1, 0, 0])), ("b", ints(&[0, 1, 0])), ("c", ints(&[0, 0, 1]))],
            )
            .unwrap(),
        );
        assert!(m.circuits().unwrap().is_empty());
        let d = m.derive_iterate(2).unwrap();
        assert!(d.configuration().is_empty());
    }

    #[test]
    fn random_circuits_match_brute_force() {
        let mut g = rng(51);
        for _ in 0..20 {
            let mut m = random_matroid(&mut g, 3, "abcde");
            let mut c = m.configuration().clone();
            let a = c.get(&Letter::new("a")).unwrap().clone();
            let b = c.get(&Letter::new("b")).unwrap().clone();
            c.insert(Letter::new("f"), linalg::combine(&[int(1), int(-2)], &[a, b], 3)).unwrap();
            m = Matroid::new(c);
            let circuits = m.circuits().unwrap();
            let got: Vec<Vec<Letter>> = circuits.iter().map(|c| c.letters().to_vec()).collect();
            assert_eq!(got, brute_circuits(&m));
            let rows: Vec<Vec<Scalar>> = m.configuration().rows().map(|(_, r)| r.clone()).collect();
            for c in &circuits {
                let combo = linalg::combine(c.coefficients(), &rows, 3);
                assert!(combo.iter().all(Zero::is_zero));
                assert_eq!(primitive_integer(c.coefficients()), c.coefficients());
                let first = c.coefficients().iter().find(|x| !x.is_zero()).unwrap();
                assert!(*first > Scalar::zero());
            }
        }
    }

    #[test]
    fn circuit_exchange() {
        let mut g = rng(52);
        for _ in 0..10 {
            let mut m = random_matroid(&mut g, 3, "abcdef");
            let mut c = m.configuration().clone();
            let a = c.get(&Letter::new("a")).unwrap().clone();
            let b = c.get(&Letter::new("b")).unwrap().clone();
            let d = c.get(&Letter::new("d")).unwrap().clone();
            c.insert(Letter::new("g"), linalg::combine(&[int(1), int(1)], &[a, b.clone()], 3)).unwrap();
            c.insert(Letter::new("h"), linalg::combine(&[int(1), int(1)], &[b.clone(), d], 3)).unwrap();
            m = Matroid::new(c);
            let circuits = m.circuits().unwrap();
            let sets: Vec<Vec<Letter>> = circuits.iter().map(|c| c.letters().to_vec()).collect();
            for (i, x) in sets.iter().enumerate() {
                for y in &sets[i + 1..] {
                    for e in x.iter().filter(|e| y.contains(e)) {
                        let mut u: Vec<Letter> = x.iter().chain(y).filter(|l| *l != e).cloned().collect();
                        u.sort();
                        u.dedup();
                        assert!(sets.iter().any(|s| s.iter().all(|l| u.contains(l))));
                    }
                }
            }
        }
    }

    #[test]
    fn ground_set_cap() {
        let mut c = Configuration::new(2);
        for i in 0..13 {
            c.insert(Letter::new(format!("p{i}")), ints(&[1, i])).unwrap();
        }
        let m = Matroid::new(c);
        assert_eq!(m.circuits(), Err(Error::GroundSetTooLarge { size: 13, max: 12 }));
    }
}
