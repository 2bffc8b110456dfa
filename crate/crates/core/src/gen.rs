//! Deterministic input generators.
//!
//! Random content comes from SplitMix64 (Steele, Lea & Flood's mixing
//! function, as published in Vigna's `splitmix64.c`), chosen so that ports
//! in other languages can reproduce the byte streams exactly; reference
//! outputs are frozen in the tests and in the project README.
//!
//! Families:
//! * `Random` — i.i.d. uniform letters over `a..` of the given alphabet size;
//! * `Fibonacci` — `s1 = a`, `s2 = ab`, `s_k = s_{k-1} s_{k-2}`, truncated;
//! * `ThueMorse` — bit-parity word over `{a, b}`, truncated;
//! * `RunRich` — concatenated `a^k b` blocks, `k` cycling 1..=4;
//! * `BorderHeavy` — `b · m · b` with a planted border `b` of length
//!   `floor(beta * n)` and random filler `m`.
//!
//! The Fibonacci/Thue-Morse/run-rich trio is this project's concrete pick
//! for "structured" inputs; the benchmark tables declare the family next
//! to every row, so results stay reproducible.

use std::fmt;

use crate::error::{Error, Result};

/// SplitMix64 stream.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform letter among the first `sigma` lowercase letters.
    fn next_letter(&mut self, sigma: u32) -> u8 {
        b'a' + (self.next_u64() % sigma as u64) as u8
    }
}

/// Exact rational in (0, 1), used for border fractions so that
/// `floor(beta * n)` is integer arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    /// Builds the canonical (fully reduced) form, so `25/100` and `1/4`
    /// describe an input identically.
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num == 0 || num >= den {
            return Err(Error::InvalidInput(format!(
                "fraction {}/{} is not in (0, 1)",
                num, den
            )));
        }
        let g = gcd(num, den);
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    /// Parses `"1/4"` or a plain decimal like `"0.25"`.
    pub fn parse(s: &str) -> Result<Self> {
        if let Some((a, b)) = s.split_once('/') {
            let num = a
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidInput(format!("bad fraction {:?}", s)))?;
            let den = b
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidInput(format!("bad fraction {:?}", s)))?;
            return Fraction::new(num, den);
        }
        if let Some(frac) = s.strip_prefix("0.").or_else(|| s.strip_prefix(".")) {
            if frac.is_empty() || frac.len() > 9 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::InvalidInput(format!("bad fraction {:?}", s)));
            }
            let num = frac.parse::<u64>().unwrap();
            let den = 10u64.pow(frac.len() as u32);
            return Fraction::new(num, den);
        }
        Err(Error::InvalidInput(format!("bad fraction {:?}", s)))
    }

    pub fn floor_of(&self, n: usize) -> usize {
        ((n as u128 * self.num as u128) / self.den as u128) as usize
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Random,
    Fibonacci,
    ThueMorse,
    RunRich,
    BorderHeavy,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::Fibonacci => "fibonacci",
            Family::ThueMorse => "thue_morse",
            Family::RunRich => "run_rich",
            Family::BorderHeavy => "border_heavy",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(Family::Random),
            "fibonacci" => Ok(Family::Fibonacci),
            "thue-morse" | "thue_morse" => Ok(Family::ThueMorse),
            "run-rich" | "run_rich" => Ok(Family::RunRich),
            "border" | "border-heavy" | "border_heavy" => Ok(Family::BorderHeavy),
            other => Err(Error::InvalidInput(format!("unknown family {:?}", other))),
        }
    }
}

/// Full description of one generated input.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub sigma: u32,
    pub seed: u64,
    pub border_fraction: Option<Fraction>,
}

impl FamilySpec {
    pub fn random(n: usize, sigma: u32, seed: u64) -> Self {
        FamilySpec {
            family: Family::Random,
            n,
            sigma,
            seed,
            border_fraction: None,
        }
    }

    pub fn border_heavy(n: usize, sigma: u32, seed: u64, beta: Fraction) -> Self {
        FamilySpec {
            family: Family::BorderHeavy,
            n,
            sigma,
            seed,
            border_fraction: Some(beta),
        }
    }

    pub fn structured(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            sigma: 2,
            seed: 0,
            border_fraction: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidInput("target length must be >= 1".into()));
        }
        if matches!(self.family, Family::Random | Family::BorderHeavy)
            && !(2..=26).contains(&self.sigma)
        {
            return Err(Error::InvalidInput(format!(
                "alphabet size {} outside 2..=26",
                self.sigma
            )));
        }
        if self.family == Family::BorderHeavy {
            let beta = self
                .border_fraction
                .ok_or_else(|| Error::InvalidInput("border family needs a fraction".into()))?;
            let b = beta.floor_of(self.n);
            if b == 0 || 2 * b > self.n {
                return Err(Error::InvalidInput(format!(
                    "border fraction {} leaves no room in length {}",
                    beta, self.n
                )));
            }
        } else if self.border_fraction.is_some() {
            return Err(Error::InvalidInput(
                "border fraction only applies to the border-heavy family".into(),
            ));
        }
        Ok(())
    }

    /// Short identifier used in benchmark rows and file names.
    pub fn id(&self) -> String {
        match self.family {
            Family::Random => format!("random-s{}-n{}-seed{}", self.sigma, self.n, self.seed),
            Family::BorderHeavy => {
                let beta = self.border_fraction.expect("validated");
                format!(
                    "border{}of{}-s{}-n{}-seed{}",
                    beta.num, beta.den, self.sigma, self.n, self.seed
                )
            }
            f => format!("{}-n{}", f.name(), self.n),
        }
    }

    /// Sidecar descriptor, one `key=value` per line.
    pub fn descriptor(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("family={}\n", self.family.name()));
        out.push_str(&format!("n={}\n", self.n));
        out.push_str(&format!("sigma={}\n", self.sigma));
        out.push_str(&format!("seed={}\n", self.seed));
        if let Some(beta) = self.border_fraction {
            out.push_str(&format!("border_fraction={}\n", beta));
        }
        out
    }
}

/// Generates the byte word described by `spec`. Identical specs yield
/// identical bytes.
pub fn generate(spec: &FamilySpec) -> Result<Vec<u8>> {
    spec.validate()?;
    let n = spec.n;
    Ok(match spec.family {
        Family::Random => {
            let mut rng = SplitMix64::new(spec.seed);
            (0..n).map(|_| rng.next_letter(spec.sigma)).collect()
        }
        Family::Fibonacci => {
            let mut prev: Vec<u8> = b"a".to_vec();
            let mut cur: Vec<u8> = b"ab".to_vec();
            while cur.len() < n {
                let next = [cur.as_slice(), prev.as_slice()].concat();
                prev = cur;
                cur = next;
            }
            cur.truncate(n);
            cur
        }
        Family::ThueMorse => (0..n).map(|i| b'a' + (i.count_ones() & 1) as u8).collect(),
        Family::RunRich => {
            let mut out = Vec::with_capacity(n);
            let mut k = 1usize;
            while out.len() < n {
                out.resize(out.len() + k, b'a');
                out.push(b'b');
                k = if k == 4 { 1 } else { k + 1 };
            }
            out.truncate(n);
            out
        }
        Family::BorderHeavy => {
            let beta = spec.border_fraction.expect("validated");
            let blen = beta.floor_of(n);
            let mut rng = SplitMix64::new(spec.seed);
            let border: Vec<u8> = (0..blen).map(|_| rng.next_letter(spec.sigma)).collect();
            let mut out = Vec::with_capacity(n);
            out.extend_from_slice(&border);
            for _ in 0..n - 2 * blen {
                out.push(rng.next_letter(spec.sigma));
            }
            out.extend_from_slice(&border);
            out
        }
    })
}
