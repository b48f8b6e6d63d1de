use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::dense::DensePoly;
use crate::bigmath::{Dyadic, DyadicInterval, Round};
use crate::{Error, Result};

pub const DEFAULT_COMPLEX_DEGREE_CAP: usize = 100;

/// Tuning for [`complex_roots_with`].
#[derive(Clone, Debug)]
pub struct ComplexConfig {
    pub degree_cap: usize,
    /// Working precision of the polishing stage, in bits.
    pub precision: u64,
    /// Every isolated root must be certified within `2^-radius_bits`.
    pub radius_bits: i64,
}

impl Default for ComplexConfig {
    fn default() -> Self {
        ComplexConfig {
            degree_cap: DEFAULT_COMPLEX_DEGREE_CAP,
            precision: 256,
            radius_bits: 100,
        }
    }
}

/// Closed disk `|z − (re + i·im)| ≤ radius`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDisk {
    pub re: Dyadic,
    pub im: Dyadic,
    pub radius: Dyadic,
    /// Upper bound on `|q(center)|`, where `q` is `p` with its zero roots
    /// divided out; `0` for the exact zero disks.
    pub residual: Dyadic,
}

/// Disks whose union holds every root; each connected group of `k` disks
/// holds exactly `k` roots counted with multiplicity.
#[derive(Clone, Debug)]
pub struct ComplexRoots {
    pub disks: Vec<RootDisk>,
    /// Connected groups of overlapping disks, by index.
    pub clusters: Vec<Vec<usize>>,
}

impl ComplexRoots {
    /// True when every root sits alone in its own disk.
    pub fn all_isolated(&self) -> bool {
        self.clusters.iter().all(|c| c.len() == 1)
    }

    /// `[lower, upper]` on the smallest distance between points of two
    /// different clusters.
    pub fn min_separation(&self) -> Option<(Dyadic, Dyadic)> {
        let mut best: Option<(Dyadic, Dyadic)> = None;
        for (ci, a) in self.clusters.iter().enumerate() {
            for b in &self.clusters[ci + 1..] {
                for &i in a {
                    for &j in b {
                        let (lo, hi) = disk_gap(&self.disks[i], &self.disks[j]);
                        best = Some(match best {
                            None => (lo, hi),
                            Some((l, h)) => (l.min(lo), h.min(hi)),
                        });
                    }
                }
            }
        }
        best
    }
}

/// Bounds on the smallest distance between a point of each disk.
fn disk_gap(a: &RootDisk, b: &RootDisk) -> (Dyadic, Dyadic) {
    let dr = a.re.sub_exact(&b.re);
    let di = a.im.sub_exact(&b.im);
    let sq = dr.mul_exact(&dr).add_exact(&di.mul_exact(&di));
    let radii = a.radius.add_exact(&b.radius);
    let lo = sqrt_dir(&sq, 128, Round::Down).sub_exact(&radii).max(Dyadic::zero());
    let hi = sqrt_dir(&sq, 128, Round::Up).add_exact(&radii);
    (lo, hi)
}

/// `√x` for `x ≥ 0` rounded in direction `dir` to about `prec` bits.
pub(crate) fn sqrt_dir(x: &Dyadic, prec: u64, dir: Round) -> Dyadic {
    if x.is_zero() {
        return Dyadic::zero();
    }
    let m = x.mantissa().magnitude();
    let e = x.exponent();
    let mut s = (2 * prec + 2).saturating_sub(m.bits());
    if (e - s as i64).rem_euclid(2) == 1 {
        s += 1;
    }
    let big = m << s;
    let mut r = big.sqrt();
    if dir == Round::Up && &r * &r != big {
        r += 1u8;
    }
    Dyadic::new(BigInt::from(r), (e - s as i64) / 2)
}

/// All roots of `p` with certified enclosing disks.
pub fn complex_roots(p: &DensePoly) -> Result<ComplexRoots> {
    complex_roots_with(p, &ComplexConfig::default())
}

pub fn complex_roots_with(p: &DensePoly, cfg: &ComplexConfig) -> Result<ComplexRoots> {
    if p.degree() > cfg.degree_cap {
        return Err(Error::budget(format!(
            "degree {} exceeds the complex oracle cap {}",
            p.degree(),
            cfg.degree_cap
        )));
    }
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let reduced = DensePoly::new(p.coeffs()[zeros..].to_vec())?;
    let mut disks: Vec<RootDisk> = (0..zeros)
        .map(|_| RootDisk {
            re: Dyadic::zero(),
            im: Dyadic::zero(),
            radius: Dyadic::zero(),
            residual: Dyadic::zero(),
        })
        .collect();
    if reduced.degree() > 0 {
        disks.extend(nonzero_roots(&reduced, cfg)?);
    }
    let clusters = components(&disks);
    Ok(ComplexRoots { disks, clusters })
}

fn nonzero_roots(p: &DensePoly, cfg: &ComplexConfig) -> Result<Vec<RootDisk>> {
    let approx = aberth_f64(&p.to_f64_coeffs())?;
    let mut z: Vec<(Dyadic, Dyadic)> = approx.iter().map(|c| (from_f64(c.re), from_f64(c.im))).collect();
    let target = Dyadic::pow2(-cfg.radius_bits);
    let mut prec = cfg.precision;
    for _ in 0..3 {
        for _ in 0..6 {
            if !polish(p, &mut z, prec) {
                break;
            }
        }
        let disks = certify(p, &z, prec);
        let clusters = components(&disks);
        let ok = clusters.iter().all(|c| c.len() > 1 || disks[c[0]].radius <= target);
        if ok {
            return Ok(disks);
        }
        prec *= 2;
    }
    Err(Error::budget(format!(
        "complex roots not certified within 2^-{} at {} bits",
        cfg.radius_bits, prec
    )))
}

/// Exact dyadic value of a finite `f64`.
fn from_f64(v: f64) -> Dyadic {
    if v == 0.0 || !v.is_finite() {
        return Dyadic::zero();
    }
    let bits = v.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = (bits & ((1u64 << 52) - 1)) as i64;
    let (m, e) = if exp == 0 { (frac, -1074) } else { (frac | (1 << 52), exp - 1075) };
    let m = if v < 0.0 { -m } else { m };
    Dyadic::new(BigInt::from(m), e)
}

/// `p′(z)/p(z)`, evaluated through the reversed polynomial when `|z| > 1`.
fn log_derivative(c: &[f64], z: Complex64) -> Complex64 {
    let n = c.len() - 1;
    if z.norm() <= 1.0 {
        let (mut v, mut d) = (Complex64::new(c[n], 0.0), Complex64::new(0.0, 0.0));
        for k in (0..n).rev() {
            d = d * z + v;
            v = v * z + c[k];
        }
        d / v
    } else {
        let w = z.inv();
        let (mut v, mut d) = (Complex64::new(c[0], 0.0), Complex64::new(0.0, 0.0));
        for &ck in &c[1..] {
            d = d * w + v;
            v = v * w + ck;
        }
        w * (n as f64 - w * d / v)
    }
}

/// Initial points on circles read off the Newton polygon of `ln|c_i|`.
fn initial_guesses(c: &[f64]) -> Vec<Complex64> {
    let pts: Vec<(usize, f64)> = c
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != 0.0)
        .map(|(i, v)| (i, v.abs().ln()))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 as f64 - a.0 as f64) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let n = c.len() - 1;
    let mut out = Vec::with_capacity(n);
    for (edge, w) in hull.windows(2).enumerate() {
        let k = w[1].0 - w[0].0;
        let r = ((w[0].1 - w[1].1) / k as f64).exp();
        let offset = 0.7 + 2.0 * std::f64::consts::PI * edge as f64 / n as f64;
        for j in 0..k {
            let theta = offset + 2.0 * std::f64::consts::PI * j as f64 / k as f64;
            out.push(Complex64::from_polar(r, theta));
        }
    }
    out
}

fn aberth_f64(c: &[f64]) -> Result<Vec<Complex64>> {
    if c.iter().any(|v| !v.is_finite()) {
        return Err(Error::budget("coefficients outside the f64 range"));
    }
    let mut z = initial_guesses(c);
    for _ in 0..2000 {
        let mut worst: f64 = 0.0;
        for i in 0..z.len() {
            let ld = log_derivative(c, z[i]);
            if !ld.is_finite() {
                continue;
            }
            let s: Complex64 = (0..z.len()).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = (ld - s).inv();
            if step.is_finite() {
                z[i] -= step;
                worst = worst.max(step.norm() / z[i].norm().max(1e-300));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    if z.iter().any(|v| !v.is_finite()) {
        return Err(Error::budget("root iteration diverged"));
    }
    Ok(z)
}

/// Complex arithmetic on dyadic pairs rounded to `prec` bits.
#[derive(Clone, Debug)]
struct Cx {
    re: Dyadic,
    im: Dyadic,
}

impl Cx {
    fn add(&self, o: &Cx, p: u64) -> Cx {
        Cx {
            re: self.re.add_round(&o.re, p, Round::Down),
            im: self.im.add_round(&o.im, p, Round::Down),
        }
    }

    fn mul(&self, o: &Cx, p: u64) -> Cx {
        let rr = self.re.mul_round(&o.re, p, Round::Down);
        let ii = self.im.mul_round(&o.im, p, Round::Down);
        let ri = self.re.mul_round(&o.im, p, Round::Down);
        let ir = self.im.mul_round(&o.re, p, Round::Down);
        Cx {
            re: rr.add_round(&ii.neg(), p, Round::Down),
            im: ri.add_round(&ir, p, Round::Down),
        }
    }

    fn div(&self, o: &Cx, p: u64) -> Option<Cx> {
        let den = o.re.mul_round(&o.re, p, Round::Down).add_round(&o.im.mul_round(&o.im, p, Round::Down), p, Round::Down);
        if den.is_zero() {
            return None;
        }
        let conj = Cx { re: o.re.clone(), im: o.im.neg() };
        let num = self.mul(&conj, p);
        Some(Cx {
            re: num.re.div_round(&den, p, Round::Down),
            im: num.im.div_round(&den, p, Round::Down),
        })
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// One Aberth sweep in high precision. The pairwise sum is only needed to
/// low relative accuracy and is taken in `f64`. Returns whether any root
/// moved by more than `2^(20 − prec)` relative to its size.
fn polish(p: &DensePoly, z: &mut [(Dyadic, Dyadic)], prec: u64) -> bool {
    let coeffs: Vec<Dyadic> = p
        .coeffs()
        .iter()
        .map(|c| Dyadic::from_rational(c, prec, Round::Down))
        .collect();
    let n = coeffs.len() - 1;
    let mut moved = false;
    for i in 0..z.len() {
        let zi = Cx { re: z[i].0.clone(), im: z[i].1.clone() };
        let mut v = Cx { re: coeffs[n].clone(), im: Dyadic::zero() };
        let mut d = Cx { re: Dyadic::zero(), im: Dyadic::zero() };
        for k in (0..n).rev() {
            d = d.mul(&zi, prec).add(&v, prec);
            v = v.mul(&zi, prec).add(&Cx { re: coeffs[k].clone(), im: Dyadic::zero() }, prec);
        }
        let Some(newton) = v.div(&d, prec) else { continue };
        let zf = zi.to_c64();
        let s: Complex64 = (0..z.len())
            .filter(|&j| j != i)
            .map(|j| (zf - Complex64::new(z[j].0.to_f64(), z[j].1.to_f64())).inv())
            .sum();
        let corr = Complex64::new(1.0, 0.0) - newton.to_c64() * s;
        let step = if corr.is_finite() && corr.norm() > 0.0 {
            let inv = corr.inv();
            newton.mul(&Cx { re: from_f64(inv.re), im: from_f64(inv.im) }, prec)
        } else {
            newton
        };
        let size = zi.re.abs().max(zi.im.abs()).max(Dyadic::pow2(-(prec as i64)));
        let step_size = step.re.abs().max(step.im.abs());
        if step_size > size.shl(20 - prec as i64) {
            moved = true;
        }
        z[i] = (
            zi.re.add_round(&step.re.neg(), prec, Round::Down),
            zi.im.add_round(&step.im.neg(), prec, Round::Down),
        );
    }
    moved
}

/// `|x + iy|` bounded above from interval parts.
fn norm_up(re: &DyadicInterval, im: &DyadicInterval, prec: u64) -> Dyadic {
    let a = re.abs_max();
    let b = im.abs_max();
    sqrt_dir(&a.mul_exact(&a).add_exact(&b.mul_exact(&b)), prec, Round::Up)
}

/// Gerschgorin disks of the Weierstrass matrix, enlarged to centers `z_i`
/// with radii `n·|W_i|`, where `W_i = p(z_i) / (a_n·Π_{j≠i} (z_i − z_j))`.
fn certify(p: &DensePoly, z: &[(Dyadic, Dyadic)], prec: u64) -> Vec<RootDisk> {
    let n = z.len();
    let coeffs: Vec<DyadicInterval> = p.coeffs().iter().map(|c| DyadicInterval::from_rational(c, prec)).collect();
    let lead = p.leading().abs();
    let lead_lo = Dyadic::from_rational(&lead, prec, Round::Down);
    let nn = Dyadic::from(n as i64);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let zr = DyadicInterval::point(z[i].0.clone(), prec);
        let zi = DyadicInterval::point(z[i].1.clone(), prec);
        let mut vr = coeffs[n].clone();
        let mut vi = DyadicInterval::zero(prec);
        for k in (0..n).rev() {
            let nr = vr.mul(&zr).sub(&vi.mul(&zi));
            let ni = vr.mul(&zi).add(&vi.mul(&zr));
            vr = nr.add(&coeffs[k]);
            vi = ni;
        }
        let residual = norm_up(&vr, &vi, prec);
        let mut prod = lead_lo.clone();
        let mut degenerate = false;
        for (j, w) in z.iter().enumerate() {
            if j == i {
                continue;
            }
            let dr = z[i].0.sub_exact(&w.0);
            let di = z[i].1.sub_exact(&w.1);
            let d = sqrt_dir(&dr.mul_exact(&dr).add_exact(&di.mul_exact(&di)), prec, Round::Down);
            if d.is_zero() {
                degenerate = true;
                break;
            }
            prod = prod.mul_round(&d, prec, Round::Down);
        }
        let radius = if degenerate || prod.sign() != Sign::Plus {
            Dyadic::pow2(1 << 20)
        } else {
            residual.div_round(&prod, prec, Round::Up).mul_round(&nn, prec, Round::Up)
        };
        out.push(RootDisk {
            re: z[i].0.clone(),
            im: z[i].1.clone(),
            radius,
            residual,
        });
    }
    out
}

/// Connected components of the overlap graph.
fn components(disks: &[RootDisk]) -> Vec<Vec<usize>> {
    let n = disks.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let dr = disks[i].re.sub_exact(&disks[j].re);
            let di = disks[i].im.sub_exact(&disks[j].im);
            let sq = dr.mul_exact(&dr).add_exact(&di.mul_exact(&di));
            let r = disks[i].radius.add_exact(&disks[j].radius);
            if sq <= r.mul_exact(&r) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

/// Nearest `f64` pair of a disk center.
pub fn center_f64(d: &RootDisk) -> (f64, f64) {
    (d.re.to_f64(), d.im.to_f64())
}

/// `|center|` interval of a disk, widened by its radius.
pub fn modulus_bounds(d: &RootDisk) -> (BigRational, BigRational) {
    let sq = d.re.mul_exact(&d.re).add_exact(&d.im.mul_exact(&d.im));
    let lo = sqrt_dir(&sq, 128, Round::Down).sub_exact(&d.radius);
    let hi = sqrt_dir(&sq, 128, Round::Up).add_exact(&d.radius);
    let lo = if lo.sign() == Sign::Minus { Dyadic::zero() } else { lo };
    (lo.to_rational(), hi.to_rational())
}
