//! Actions, observations, rewards, histories, and their self-delimiting
//! bit encodings.
//!
//! Each alphabet fixes one block codeword per symbol (equal lengths within
//! a set, so no codeword is a proper prefix of another). The table is
//! frozen per suite under a version tag and serialized into every run log;
//! the stopping-complexity machinery depends on these exact bits.

use crate::bits::BitString;
use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

pub const CODEWORDS_VERSION: &str = "codewords-v1";

/// Index into the finite action set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Action(pub u8);

/// Index into the finite observation set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Observation(pub u8);

/// An exact reward value. Suite rewards are rationals with denominator 16;
/// the pessimistic floor `-L` may additionally be any power of two, which
/// keeps every representable value exact in an f64.
#[derive(Clone, Copy, PartialEq, PartialOrd)]
pub struct Reward(f64);

impl Reward {
    pub const ZERO: Reward = Reward(0.0);
    pub const ONE: Reward = Reward(1.0);

    pub fn from_sixteenths(n: i64) -> Reward {
        Reward(n as f64 / 16.0)
    }

    /// Constructs a reward from an exact f64 (a multiple of 1/16 or a
    /// signed power of two). Panics otherwise: reward sets are small and
    /// static, so a bad constant is a programming error.
    pub fn exact(v: f64) -> Reward {
        let sixteenths = v * 16.0;
        let dyadic = v != 0.0 && v.abs().log2().fract() == 0.0;
        assert!(
            sixteenths.fract() == 0.0 || dyadic,
            "reward {v} is not an exact sixteenth or power of two"
        );
        Reward(v)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0.0
    }
}

impl Eq for Reward {}

impl std::hash::Hash for Reward {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.to_bits().hash(state);
    }
}

impl Ord for Reward {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.partial_cmp(&other.0).expect("rewards are never NaN")
    }
}

impl fmt::Debug for Reward {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Reward {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One interaction step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub action: Action,
    pub observation: Observation,
    pub reward: Reward,
}

/// A finite interaction history.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct History {
    steps: Vec<Step>,
}

impl History {
    pub fn new() -> Self {
        History { steps: Vec::new() }
    }

    pub fn from_steps(steps: Vec<Step>) -> Self {
        History { steps }
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn extended(&self, step: Step) -> History {
        let mut h = self.clone();
        h.push(step);
        h
    }
}

/// The per-suite alphabets and their frozen codeword tables.
#[derive(Clone, Debug)]
pub struct Alphabet {
    pub suite: String,
    action_codes: Vec<BitString>,
    obs_codes: Vec<BitString>,
    /// Model-side reward set with its codewords, sorted ascending.
    reward_values: Vec<Reward>,
    reward_codes: Vec<BitString>,
    /// Rewards the true environment may emit.
    true_rewards: Vec<Reward>,
}

fn block_codes(count: usize, width: usize) -> Vec<BitString> {
    assert!(count >= 1 && (count == 1 || width >= usize::BITS as usize - (count - 1).leading_zeros() as usize));
    (0..count)
        .map(|i| {
            let mut b = BitString::with_capacity(width);
            for k in (0..width).rev() {
                b.push(i >> k & 1 == 1);
            }
            b
        })
        .collect()
}

impl Alphabet {
    /// Plain binary block codes of minimal width for every set.
    pub fn binary(
        suite: &str,
        action_count: usize,
        obs_count: usize,
        model_rewards: Vec<Reward>,
        true_rewards: Vec<Reward>,
    ) -> Result<Arc<Alphabet>> {
        let width = |n: usize| if n <= 1 { 1 } else { (n - 1).ilog2() as usize + 1 };
        Self::with_codes(
            suite,
            block_codes(action_count, width(action_count)),
            block_codes(obs_count, width(obs_count)),
            model_rewards,
            None,
            true_rewards,
        )
    }

    /// Custom codeword assignment (still fixed-width within each set).
    pub fn with_codes(
        suite: &str,
        action_codes: Vec<BitString>,
        obs_codes: Vec<BitString>,
        model_rewards: Vec<Reward>,
        reward_codes: Option<Vec<BitString>>,
        true_rewards: Vec<Reward>,
    ) -> Result<Arc<Alphabet>> {
        let mut reward_values = model_rewards;
        reward_values.sort();
        reward_values.dedup();
        let reward_codes = match reward_codes {
            Some(c) => c,
            None => {
                let n = reward_values.len();
                let width = if n <= 1 { 1 } else { (n - 1).ilog2() as usize + 1 };
                block_codes(n, width)
            }
        };
        let a = Alphabet {
            suite: suite.to_string(),
            action_codes,
            obs_codes,
            reward_values,
            reward_codes,
            true_rewards,
        };
        a.validate()?;
        Ok(Arc::new(a))
    }

    fn validate(&self) -> Result<()> {
        for (name, codes) in [
            ("action", &self.action_codes),
            ("observation", &self.obs_codes),
            ("reward", &self.reward_codes),
        ] {
            if codes.is_empty() {
                return Err(Error::Config(format!("{name} set is empty")));
            }
            let w = codes[0].len();
            for (i, a) in codes.iter().enumerate() {
                if a.len() != w {
                    return Err(Error::Config(format!("{name} codes have mixed widths")));
                }
                for b in codes.iter().skip(i + 1) {
                    if a == b {
                        return Err(Error::Config(format!("{name} codes collide")));
                    }
                }
            }
        }
        if self.reward_codes.len() != self.reward_values.len() {
            return Err(Error::Config("reward code count mismatch".into()));
        }
        // True rewards must sit inside the model set and inside [0, 1];
        // the model set must contain its minimum element -L <= 0.
        for r in &self.true_rewards {
            if !(0.0..=1.0).contains(&r.value()) {
                return Err(Error::Config(format!("true reward {r} outside [0,1]")));
            }
            if !self.reward_values.contains(r) {
                return Err(Error::Config(format!("true reward {r} not in model set")));
            }
        }
        let floor = self.reward_values.first().expect("nonempty");
        if floor.value() > 0.0 {
            return Err(Error::Config("model reward set must include a floor <= 0".into()));
        }
        Ok(())
    }

    pub fn action_count(&self) -> usize {
        self.action_codes.len()
    }

    pub fn obs_count(&self) -> usize {
        self.obs_codes.len()
    }

    pub fn actions(&self) -> impl Iterator<Item = Action> {
        (0..self.action_codes.len() as u8).map(Action)
    }

    pub fn observations(&self) -> impl Iterator<Item = Observation> {
        (0..self.obs_codes.len() as u8).map(Observation)
    }

    pub fn model_rewards(&self) -> &[Reward] {
        &self.reward_values
    }

    pub fn true_rewards(&self) -> &[Reward] {
        &self.true_rewards
    }

    /// The pessimistic floor -L (minimum of the model reward set).
    pub fn reward_floor(&self) -> Reward {
        self.reward_values[0]
    }

    pub fn step_bits(&self) -> usize {
        self.action_codes[0].len() + self.obs_codes[0].len() + self.reward_codes[0].len()
    }

    pub fn action_bits(&self) -> usize {
        self.action_codes[0].len()
    }

    pub fn encode_action(&self, a: Action) -> Result<&BitString> {
        self.action_codes
            .get(a.0 as usize)
            .ok_or_else(|| Error::Domain(format!("action {} outside set of {}", a.0, self.action_codes.len())))
    }

    pub fn encode_observation(&self, o: Observation) -> Result<&BitString> {
        self.obs_codes
            .get(o.0 as usize)
            .ok_or_else(|| Error::Domain(format!("observation {} outside set of {}", o.0, self.obs_codes.len())))
    }

    pub fn encode_reward(&self, r: Reward) -> Result<&BitString> {
        let i = self
            .reward_values
            .iter()
            .position(|v| *v == r)
            .ok_or_else(|| Error::Domain(format!("reward {r} not in model set")))?;
        Ok(&self.reward_codes[i])
    }

    pub fn encode_step(&self, step: &Step) -> Result<BitString> {
        let mut out = BitString::with_capacity(self.step_bits());
        out.extend(self.encode_action(step.action)?);
        out.extend(self.encode_observation(step.observation)?);
        out.extend(self.encode_reward(step.reward)?);
        Ok(out)
    }

    /// Appends the encoding of `step` to an existing encoded prefix.
    pub fn push_step(&self, bits: &mut BitString, step: &Step) -> Result<()> {
        bits.extend(&self.encode_step(step)?);
        Ok(())
    }

    pub fn encode_history(&self, h: &History) -> Result<BitString> {
        let mut out = BitString::with_capacity(h.len() * self.step_bits());
        for step in h.steps() {
            self.push_step(&mut out, step)?;
        }
        Ok(out)
    }

    /// Encoding of a history followed by a dangling action.
    pub fn encode_history_action(&self, h: &History, a: Action) -> Result<BitString> {
        let mut out = self.encode_history(h)?;
        out.extend(self.encode_action(a)?);
        Ok(out)
    }

    fn decode_symbol<'t>(&self, bits: &BitString, at: usize, table: &'t [BitString]) -> Result<(usize, &'t BitString)> {
        let w = table[0].len();
        if at + w > bits.len() {
            return Err(Error::Domain("truncated encoding".into()));
        }
        for (i, code) in table.iter().enumerate() {
            if (0..w).all(|k| bits.bit(at + k) == code.bit(k)) {
                return Ok((i, code));
            }
        }
        Err(Error::Domain(format!("invalid codeword at bit {at}")))
    }

    pub fn decode_history(&self, bits: &BitString) -> Result<History> {
        let mut h = History::new();
        let mut at = 0;
        while at < bits.len() {
            let (a, c) = self.decode_symbol(bits, at, &self.action_codes)?;
            at += c.len();
            let (o, c) = self.decode_symbol(bits, at, &self.obs_codes)?;
            at += c.len();
            let (r, c) = self.decode_symbol(bits, at, &self.reward_codes)?;
            at += c.len();
            h.push(Step {
                action: Action(a as u8),
                observation: Observation(o as u8),
                reward: self.reward_values[r],
            });
        }
        Ok(h)
    }

    /// The codeword table as text: one `set index bitstring` line per
    /// symbol, preceded by the version tag. Serialized with every run log.
    pub fn codeword_table(&self) -> String {
        let mut s = format!("codewords {CODEWORDS_VERSION} suite={}\n", self.suite);
        for (i, c) in self.action_codes.iter().enumerate() {
            s.push_str(&format!("action {i} {c}\n"));
        }
        for (i, c) in self.obs_codes.iter().enumerate() {
            s.push_str(&format!("observation {i} {c}\n"));
        }
        for (i, c) in self.reward_codes.iter().enumerate() {
            s.push_str(&format!("reward {i} {c} value={}\n", self.reward_values[i]));
        }
        s
    }
}
