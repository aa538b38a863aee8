//! Stopping-complexity and stopping-probability estimators, decidable
//! predicates, and the constructed programs whose measured lengths form the
//! repo's constants manifest.
//!
//! `m_stop_lower(x)` sums `2^-|p|` over programs that halt having read
//! exactly `x` and exactly `p`, found by lazily growing program prefixes one
//! bit at a time: a prefix is only extended when the machine actually
//! demands another program bit, so the set of credited programs is an
//! antichain under the prefix order by construction. The result is a lower
//! bound on the true stopping probability, monotone in both budgets.
//!
//! Constructed programs keep their single `HALT` as the final instruction:
//! the exact-halt verdict requires the program head to finish past the last
//! bit, so halting paths exit their loops (the exit scan reads the remaining
//! body) and fall through to the trailing `HALT`.

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::machine::{
    advance, assemble, run_machine_full, MachineState, Op, Pause, Verdict, ISA_VERSION,
};
use rayon::prelude::*;

/// Enumeration budgets: maximum program length in bits and a fuel cap per
/// candidate program.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct StopBudgets {
    pub max_len: usize,
    pub fuel: u32,
}

impl Default for StopBudgets {
    fn default() -> Self {
        StopBudgets { max_len: 16, fuel: 10_000 }
    }
}

/// Result of enumerating halting programs for a fixed input.
#[derive(Clone, Debug, Default)]
pub struct StopEnumeration {
    /// Programs with the exact-halt verdict, sorted by (length, bits).
    pub witnesses: Vec<BitString>,
    /// Lower bound on the stopping probability.
    pub m_lower: f64,
    /// Length of the shortest halting program found, if any.
    pub k_upper: Option<usize>,
}

impl StopEnumeration {
    fn absorb(&mut self, other: StopEnumeration) {
        self.m_lower += other.m_lower;
        self.k_upper = match (self.k_upper, other.k_upper) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.witnesses.extend(other.witnesses);
    }
}

enum NodeOutcome {
    HaltExact,
    Extend,
    Prune,
}

fn classify(x: &BitString, prefix: &BitString, fuel: u32) -> NodeOutcome {
    let mut st = MachineState::fresh();
    match advance(&mut st, prefix, x, fuel) {
        Pause::NeedProgram => NodeOutcome::Extend,
        Pause::Halted => {
            if st.input_pos as usize == x.len() {
                // Program exactness holds by construction: bits are only
                // appended on demand, so the final fetch touches the last bit.
                NodeOutcome::HaltExact
            } else {
                NodeOutcome::Prune
            }
        }
        _ => NodeOutcome::Prune,
    }
}

fn dfs(x: &BitString, prefix: &mut BitString, budgets: StopBudgets, out: &mut StopEnumeration) {
    match classify(x, prefix, budgets.fuel) {
        NodeOutcome::HaltExact => {
            out.m_lower += (-(prefix.len() as f64)).exp2();
            out.k_upper = Some(out.k_upper.map_or(prefix.len(), |k| k.min(prefix.len())));
            out.witnesses.push(prefix.clone());
        }
        NodeOutcome::Extend if prefix.len() < budgets.max_len => {
            let len = prefix.len();
            for bit in [false, true] {
                prefix.push(bit);
                dfs(x, prefix, budgets, out);
                prefix.truncate(len);
            }
        }
        _ => {}
    }
}

/// Walks the prefix tree to `split` bits sequentially, collecting pending
/// subtree roots for parallel exploration.
fn dfs_split(
    x: &BitString,
    prefix: &mut BitString,
    budgets: StopBudgets,
    split: usize,
    out: &mut StopEnumeration,
    pending: &mut Vec<BitString>,
) {
    match classify(x, prefix, budgets.fuel) {
        NodeOutcome::HaltExact => {
            out.m_lower += (-(prefix.len() as f64)).exp2();
            out.k_upper = Some(out.k_upper.map_or(prefix.len(), |k| k.min(prefix.len())));
            out.witnesses.push(prefix.clone());
        }
        NodeOutcome::Extend if prefix.len() < budgets.max_len => {
            if prefix.len() >= split {
                pending.push(prefix.clone());
                return;
            }
            let len = prefix.len();
            for bit in [false, true] {
                prefix.push(bit);
                dfs_split(x, prefix, budgets, split, out, pending);
                prefix.truncate(len);
            }
        }
        _ => {}
    }
}

/// Enumerates every program of length at most `budgets.max_len` that halts
/// exactly on `x` within `budgets.fuel` steps. Subtrees past a fixed prefix
/// depth run in parallel; partial results merge in prefix order so the
/// outcome is identical to a sequential walk.
pub fn enumerate_stops(x: &BitString, budgets: StopBudgets) -> StopEnumeration {
    let mut out = StopEnumeration::default();
    let mut pending = Vec::new();
    let split = budgets.max_len.min(8);
    dfs_split(x, &mut BitString::new(), budgets, split, &mut out, &mut pending);
    let parts: Vec<StopEnumeration> = pending
        .par_iter()
        .map(|root| {
            let mut part = StopEnumeration::default();
            dfs(x, &mut root.clone(), budgets, &mut part);
            part
        })
        .collect();
    for part in parts {
        out.absorb(part);
    }
    out.witnesses.sort_by_key(|w| (w.len(), w.to_string()));
    out
}

/// Lower bound on the stopping probability of `x`: the total weight
/// `2^-|p|` of enumerated halting programs. Monotone nondecreasing in both
/// budgets; the credited set is prefix-free.
pub fn m_stop_lower(x: &BitString, budgets: StopBudgets) -> f64 {
    enumerate_stops(x, budgets).m_lower
}

/// Upper bound on the stopping complexity of `x`: the length of the
/// shortest enumerated halting program, or `None` when the budget found no
/// halting program at all.
pub fn k_stop_upper(x: &BitString, budgets: StopBudgets) -> Option<usize> {
    enumerate_stops(x, budgets).k_upper
}

// ---------------------------------------------------------------------------
// Assembly helpers
// ---------------------------------------------------------------------------

// F := 1 regardless of current flag; preserves registers.
fn force1(ops: &mut Vec<Op>) {
    ops.extend_from_slice(&[Op::Inc, Op::Dec]);
}

// F := 0 regardless of current flag; preserves registers.
fn force0(ops: &mut Vec<Op>) {
    ops.extend_from_slice(&[Op::Inc, Op::Dec, Op::Not]);
}

// B := B + 1; flag preserved.
fn inc_b(ops: &mut Vec<Op>) {
    ops.extend_from_slice(&[Op::Rot, Op::Inc, Op::Rot, Op::Rot]);
}

// B := 0, assuming B is 0 or 1; flag clobbered.
fn zero_b(ops: &mut Vec<Op>) {
    ops.extend_from_slice(&[Op::Rot, Op::Dec, Op::Rot, Op::Rot]);
}

// C := C + 1; flag preserved.
fn inc_c(ops: &mut Vec<Op>) {
    ops.extend_from_slice(&[Op::Rot, Op::Rot, Op::Inc, Op::Rot]);
}

// F := (C >= 1); C := 0, assuming C is 0 or 1; A and B preserved.
fn take_c(ops: &mut Vec<Op>) {
    ops.extend_from_slice(&[Op::Rot, Op::Rot, Op::Dec, Op::Rot]);
}

// F := (A >= 1) without consuming A; uses C as scratch (must be 0).
fn probe_a(ops: &mut Vec<Op>) {
    ops.push(Op::Dec);
    ops.push(Op::Loop);
    ops.push(Op::Inc);
    inc_c(ops);
    force0(ops);
    ops.push(Op::End);
    take_c(ops);
}

// ---------------------------------------------------------------------------
// Constructed programs
// ---------------------------------------------------------------------------

/// The one-instruction program that halts immediately; halts exactly on the
/// empty input only.
pub fn halt_program() -> BitString {
    assemble(&[Op::Halt])
}

/// The repo's explicit integer code: `n` is written as `n` repetitions of
/// `INC`, so `|code(n)| = 3n` bits.
pub const INT_CODE_BITS_PER_UNIT: usize = 3;

/// A program that reads exactly `n` input bits and halts. Its length is
/// `3n + COUNT_ROUTINE_BITS`.
pub fn count_program(n: usize) -> BitString {
    if n == 0 {
        return halt_program();
    }
    let mut ops = vec![Op::Inc; n];
    ops.extend_from_slice(&[Op::Loop, Op::Read, Op::Dec, Op::Dec, Op::Inc, Op::End, Op::Halt]);
    assemble(&ops)
}

/// Bits of the counting routine appended after the integer code.
pub const COUNT_ROUTINE_BITS: usize = 7 * 3;

/// Declared bit cost of the interleaving construction that grafts a stop
/// program onto a base environment program. The desk-scale model class
/// realizes the construction by weight accounting rather than by an actual
/// universal simulation, so this constant is declared, not measured.
pub const INTERLEAVER_BITS: u32 = 3;

// ---------------------------------------------------------------------------
// Decidable predicates
// ---------------------------------------------------------------------------

/// Self-delimited input encoding fed to predicate deciders: `1^|x| 0 x`.
pub fn length_prefixed(x: &BitString) -> BitString {
    let mut out = BitString::with_capacity(x.len() * 2 + 1);
    for _ in 0..x.len() {
        out.push(true);
    }
    out.push(false);
    out.extend(x);
    out
}

/// A decidable predicate over bit strings, given by a reference-machine
/// program that reads `1^|x| 0 x` and halts exactly with the flag holding
/// the verdict.
#[derive(Clone, Debug)]
pub struct Predicate {
    pub id: String,
    pub program: BitString,
    pub fuel: u32,
    /// Longest input the decider is required to decide.
    pub length_cap: usize,
    /// Watcher constructor: `watcher(n)` halts exactly at the n-th fresh
    /// satisfaction of the predicate while scanning a raw stream. `None`
    /// for predicates shipped without a streaming form.
    watcher: Option<fn(u32) -> BitString>,
}

impl Predicate {
    /// Upper bound on the predicate's description complexity: the length of
    /// the shipped decider.
    pub fn complexity_bits(&self) -> usize {
        self.program.len()
    }

    pub fn holds(&self, x: &BitString) -> Result<bool> {
        if x.len() > self.length_cap {
            return Err(Error::PredicateInvalid(format!(
                "{}: input of {} bits exceeds cap {}",
                self.id,
                x.len(),
                self.length_cap
            )));
        }
        let input = length_prefixed(x);
        let (v, st) = run_machine_full(&input, &self.program, self.fuel);
        match v {
            Verdict::HaltsExactly => Ok(st.flag),
            other => Err(Error::PredicateInvalid(format!(
                "{}: decider did not halt cleanly on {} bits: {:?}",
                self.id,
                x.len(),
                other
            ))),
        }
    }

    /// Streaming watcher program for the n-th satisfaction, when shipped.
    pub fn watcher(&self, n: u32) -> Option<BitString> {
        self.watcher.map(|f| f(n))
    }
}

/// Counts the prefixes of `x` (including the empty string and `x` itself)
/// on which `e` holds. Returns `Some(n)` when `x` itself satisfies `e`,
/// `None` otherwise.
pub fn nth_occurrence(e: &Predicate, x: &BitString) -> Result<Option<u32>> {
    let mut n = 0u32;
    let mut holds_at_end = false;
    for len in 0..=x.len() {
        let h = e.holds(&x.prefix(len))?;
        if h {
            n += 1;
        }
        if len == x.len() {
            holds_at_end = h;
        }
    }
    Ok(if holds_at_end { Some(n) } else { None })
}

/// Predicate: the string ends with a 1 bit.
///
/// Register plan: A = remaining input bits, B = most recent bit, C scratch.
pub fn ends_in_one_predicate() -> Predicate {
    let mut ops = Vec::new();
    // A = |x| from the unary prefix; flag is 0 afterwards.
    ops.extend_from_slice(&[Op::Read, Op::Loop, Op::Inc, Op::Read, Op::End]);
    force1(&mut ops);
    ops.push(Op::Loop); // main: one bit per iteration
    {
        ops.push(Op::Dec); // F = (rem >= 1), rem -= 1
        ops.push(Op::Loop); // if a bit is available
        {
            zero_b(&mut ops); // B := 0 (flag clobbered)
            ops.push(Op::Read); // F = bit
            ops.push(Op::Loop); // if bit == 1: B := 1
            {
                inc_b(&mut ops);
                force0(&mut ops);
            }
            ops.push(Op::End);
        }
        ops.push(Op::End);
        probe_a(&mut ops); // F = (rem >= 1): loop continuation
    }
    ops.push(Op::End);
    // Verdict: F = (B >= 1); the trailing HALT keeps the exact-halt verdict.
    ops.extend_from_slice(&[Op::Rot, Op::Dec, Op::Halt]);
    Predicate {
        id: "ends-in-one".into(),
        program: assemble(&ops),
        fuel: 65_536,
        length_cap: 1024,
        watcher: None,
    }
}

/// Step geometry of an encoded interaction stream: total bits per step and
/// leading action bits.
#[derive(Clone, Copy, Debug)]
pub struct StepGeometry {
    pub step_bits: usize,
    pub action_bits: usize,
}

/// The trap predicate for the gridworld suite: some complete step-aligned
/// action field equals all ones (the dig action). Geometry is fixed at
/// 6-bit steps with a 2-bit action field, matching the gridworld codeword
/// table.
pub const GRID_GEOMETRY: StepGeometry = StepGeometry { step_bits: 6, action_bits: 2 };

/// Watcher: halts exactly after reading the second action bit of the n-th
/// aligned dig action. Never halts on a dig-free stream.
///
/// Register plan: A = working (percept debt), B = remaining dig count,
/// C = halt marker.
pub fn dig_watcher(n: u32) -> BitString {
    let percept_bits = GRID_GEOMETRY.step_bits - GRID_GEOMETRY.action_bits; // 4
    let mut ops = vec![Op::Inc; n as usize];
    ops.extend_from_slice(&[Op::Rot, Op::Rot]); // (0, n, 0)
    ops.push(Op::Loop); // main: one encoded step per iteration
    {
        ops.push(Op::Read); // F = a1
        ops.extend(std::iter::repeat(Op::Inc).take(percept_bits + 1)); // debt = 5
        ops.push(Op::Loop); // if a1 == 1
        {
            ops.push(Op::Read); // F = a2
            ops.push(Op::Loop); // if a2 == 1: a dig completed here
            {
                ops.push(Op::Rot); // (count, 0, debt)
                ops.extend_from_slice(&[Op::Dec, Op::Dec, Op::Inc, Op::Not]); // count--, F = (count == 0)
                ops.extend_from_slice(&[Op::Rot, Op::Rot]); // (debt, count', 0), flag kept
                ops.push(Op::Loop); // if this was the n-th dig
                {
                    // debt := 1 so the a2 decrement below zeroes it, and no
                    // percept bits are consumed before halting.
                    ops.extend(std::iter::repeat(Op::Dec).take(percept_bits));
                    inc_c(&mut ops); // halt marker
                    force0(&mut ops);
                }
                ops.push(Op::End);
            }
            ops.push(Op::End);
            ops.extend_from_slice(&[Op::Dec, Op::Not]); // a2 consumed: debt -= 1; F = 0
        }
        ops.push(Op::End);
        // Merged: A = remaining debt (5 if a1 == 0, 4 after a2, 0 on halt).
        ops.push(Op::Dec); // F = (debt >= 1), debt -= 1
        ops.push(Op::Loop); // consume the debt
        {
            ops.extend_from_slice(&[Op::Read, Op::Dec]);
        }
        ops.push(Op::End);
        take_c(&mut ops); // F = halt marker, C := 0
        ops.push(Op::Not); // continue iff no marker
    }
    ops.push(Op::End);
    ops.push(Op::Halt); // the exit scan reads the body, so the halt is exact
    assemble(&ops)
}

/// Decider for the trap predicate. Reads `1^|x| 0 x`, walks the stream in
/// 6-bit steps with per-bit remaining-length guards (prefixes may end
/// anywhere), and accepts iff a complete aligned dig action was seen.
///
/// Register plan: A = remaining, B = accept count, C = stash/scratch.
pub fn dig_decider() -> BitString {
    let percept_bits = GRID_GEOMETRY.step_bits - GRID_GEOMETRY.action_bits;
    let mut ops = Vec::new();
    // A = |x|.
    ops.extend_from_slice(&[Op::Read, Op::Loop, Op::Inc, Op::Read, Op::End]);
    force1(&mut ops);
    ops.push(Op::Loop); // main: one step per iteration (guards make short steps no-ops)
    {
        // First action bit, stashed in C.
        ops.push(Op::Dec); // F = (rem >= 1), rem -= 1
        ops.push(Op::Loop);
        {
            ops.push(Op::Read); // F = a1
            ops.push(Op::Loop);
            {
                inc_c(&mut ops); // C := 1
                force0(&mut ops);
            }
            ops.push(Op::End);
        }
        ops.push(Op::End);
        // Second action bit; accept on a1 && a2.
        ops.push(Op::Dec);
        ops.push(Op::Loop);
        {
            ops.push(Op::Read); // F = a2
            ops.push(Op::Loop);
            {
                take_c(&mut ops); // F = a1, C := 0
                ops.push(Op::Loop);
                {
                    inc_b(&mut ops); // accept
                    force0(&mut ops);
                }
                ops.push(Op::End);
            }
            ops.push(Op::End);
        }
        ops.push(Op::End);
        // The stash may survive when the input ended or a2 was 0.
        take_c(&mut ops);
        force0(&mut ops);
        // Percept bits are consumed without inspection.
        for _ in 0..percept_bits {
            ops.push(Op::Dec);
            ops.push(Op::Loop);
            {
                ops.push(Op::Read);
                force0(&mut ops);
            }
            ops.push(Op::End);
        }
        probe_a(&mut ops); // F = (rem >= 1)
    }
    ops.push(Op::End);
    ops.extend_from_slice(&[Op::Rot, Op::Dec, Op::Halt]); // F = (accepts >= 1)
    assemble(&ops)
}

/// The gridworld trap predicate with its streaming watcher.
pub fn dig_predicate() -> Predicate {
    Predicate {
        id: "trap-dig".into(),
        program: dig_decider(),
        fuel: 262_144,
        length_cap: 4096,
        watcher: Some(dig_watcher),
    }
}

/// Shipped predicate library, by id.
pub fn predicate_by_id(id: &str) -> Option<Predicate> {
    match id {
        "ends-in-one" => Some(ends_in_one_predicate()),
        "trap-dig" => Some(dig_predicate()),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Constants manifest
// ---------------------------------------------------------------------------

pub const CONSTANTS_VERSION: &str = "constants-v1";

/// Measured machine-relative constants, rendered as the manifest shipped in
/// the repo data directory.
pub fn constants_manifest() -> String {
    let dig = dig_predicate();
    let watcher1 = dig_watcher(1);
    let c_hook =
        watcher1.len() as i64 - dig.complexity_bits() as i64 - INT_CODE_BITS_PER_UNIT as i64;
    let mut s = String::new();
    s.push_str(&format!("version {CONSTANTS_VERSION}\n"));
    s.push_str(&format!("isa {ISA_VERSION}\n"));
    s.push_str(&format!("interleaver_bits {INTERLEAVER_BITS}\n"));
    s.push_str(&format!("halt_program_bits {}\n", halt_program().len()));
    s.push_str(&format!("int_code_bits_per_unit {INT_CODE_BITS_PER_UNIT}\n"));
    s.push_str(&format!("c_count_bits {COUNT_ROUTINE_BITS}\n"));
    s.push_str(&format!("k_trap_dig_bits {}\n", dig.complexity_bits()));
    s.push_str(&format!("trap_dig_watcher1_bits {}\n", dig_watcher(1).len()));
    s.push_str(&format!("c_hook_bits {c_hook}\n"));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::run_machine;

    #[test]
    fn empty_input_stops_on_halt_program() {
        let e = enumerate_stops(&BitString::new(), StopBudgets { max_len: 8, fuel: 1000 });
        assert_eq!(e.k_upper, Some(3));
        assert!(e.m_lower >= 0.125);
        assert!(e.witnesses.contains(&halt_program()));
    }

    #[test]
    fn witnesses_are_an_antichain() {
        let x = BitString::parse("1011").unwrap();
        let e = enumerate_stops(&x, StopBudgets { max_len: 14, fuel: 2000 });
        for (i, a) in e.witnesses.iter().enumerate() {
            for b in e.witnesses.iter().skip(i + 1) {
                assert!(!a.is_prefix_of(b) && !b.is_prefix_of(a));
            }
        }
    }

    #[test]
    fn m_lower_contains_its_largest_term() {
        let x = BitString::parse("01").unwrap();
        let e = enumerate_stops(&x, StopBudgets { max_len: 12, fuel: 2000 });
        if let Some(k) = e.k_upper {
            assert!(e.m_lower >= (-(k as f64)).exp2());
        }
    }

    #[test]
    fn budget_monotonicity() {
        let x = BitString::parse("1101001").unwrap();
        let small = enumerate_stops(&x, StopBudgets { max_len: 8, fuel: 500 });
        let mid = enumerate_stops(&x, StopBudgets { max_len: 12, fuel: 500 });
        let big = enumerate_stops(&x, StopBudgets { max_len: 12, fuel: 5000 });
        assert!(small.m_lower <= mid.m_lower);
        assert!(mid.m_lower <= big.m_lower);
        match (small.k_upper, mid.k_upper) {
            (Some(a), Some(b)) => assert!(b <= a),
            (Some(_), None) => panic!("k_upper lost under a larger budget"),
            _ => {}
        }
    }

    #[test]
    fn count_program_halts_exactly_and_is_found_when_in_budget() {
        for n in 1..4 {
            let x = BitString::parse(&"10".repeat(n)[..n]).unwrap();
            let p = count_program(n);
            assert_eq!(p.len(), 3 * n + COUNT_ROUTINE_BITS);
            assert!(run_machine(&x, &p, 10_000).halts_exactly());
            let e = enumerate_stops(&x, StopBudgets { max_len: 12, fuel: 2000 });
            if let Some(k) = e.k_upper {
                assert!(k <= p.len());
            }
        }
    }

    #[test]
    fn ends_in_one_decider_agrees_with_reference() {
        let e = ends_in_one_predicate();
        for s in ["", "0", "1", "10", "01", "110", "111", "010101", "0000001", "11110"] {
            let x = BitString::parse(s).unwrap();
            assert_eq!(e.holds(&x).unwrap(), s.ends_with('1'), "input {s:?}");
        }
    }

    #[test]
    fn nth_occurrence_matches_prefix_counting() {
        let e = ends_in_one_predicate();
        let x = BitString::parse("101").unwrap();
        assert_eq!(nth_occurrence(&e, &x).unwrap(), Some(2));
        let x = BitString::parse("000").unwrap();
        assert_eq!(nth_occurrence(&e, &x).unwrap(), None);
        let x = BitString::parse("111").unwrap();
        assert_eq!(nth_occurrence(&e, &x).unwrap(), Some(3));
    }

    /// Reference implementation of the trap predicate.
    fn contains_aligned_dig(x: &BitString) -> bool {
        let mut i = 0;
        while i + GRID_GEOMETRY.action_bits <= x.len() {
            if x.bit(i) && x.bit(i + 1) {
                return true;
            }
            i += GRID_GEOMETRY.step_bits;
        }
        false
    }

    #[test]
    fn dig_decider_agrees_with_reference_exhaustively() {
        let e = dig_predicate();
        for len in 0..=9usize {
            for v in 0..1u32 << len {
                let mut x = BitString::new();
                for i in 0..len {
                    x.push(v >> i & 1 == 1);
                }
                assert_eq!(e.holds(&x).unwrap(), contains_aligned_dig(&x), "input {x}");
            }
        }
        let long = BitString::parse("010000010000110000").unwrap(); // dig in step 3
        assert!(e.holds(&long).unwrap());
        let clean = BitString::parse("010111011111011101").unwrap(); // 11s only in percepts
        assert!(!e.holds(&clean).unwrap());
    }

    #[test]
    fn dig_watcher_halts_exactly_at_first_dig() {
        // Step 1 = right + percepts, step 2 = dig + percepts.
        let stream = BitString::parse("010110111010").unwrap();
        let w = dig_watcher(1);
        // The watcher halts just past bit 8 (step 2's action field "11").
        let prefix = stream.prefix(8);
        assert!(run_machine(&prefix, &w, 100_000).halts_exactly());
        // On the full stream it halts short of the end.
        assert!(matches!(
            run_machine(&stream, &w, 100_000),
            Verdict::HaltedShort { input_read: 8, .. }
        ));
        // On a dig-free stream it blocks waiting for more input.
        let clean = BitString::parse("010110011010").unwrap();
        assert_eq!(run_machine(&clean, &w, 100_000), Verdict::ReadsPastInput);
    }

    #[test]
    fn dig_watcher_counts_fresh_digs() {
        // Steps: dig, right, dig. watcher(2) halts at the second dig.
        let stream = BitString::parse("110000010000111111").unwrap();
        let w2 = dig_watcher(2);
        assert!(run_machine(&stream.prefix(14), &w2, 100_000).halts_exactly());
        let w1 = dig_watcher(1);
        assert!(run_machine(&stream.prefix(2), &w1, 100_000).halts_exactly());
        // watcher(2) on the 14-bit prefix minus one bit blocks.
        assert_eq!(
            run_machine(&stream.prefix(13), &w2, 100_000),
            Verdict::ReadsPastInput
        );
    }

    #[test]
    fn stop1_constructive_bound_holds() {
        // The watcher realizes K_stop(x) <= K(E) + |code(n)| + c_hook at the
        // n-th satisfaction, with c_hook as recorded in the manifest.
        let dig = dig_predicate();
        let w1 = dig_watcher(1);
        let c_hook = w1.len() as i64 - dig.complexity_bits() as i64 - INT_CODE_BITS_PER_UNIT as i64;
        assert_eq!(
            w1.len() as i64,
            dig.complexity_bits() as i64 + INT_CODE_BITS_PER_UNIT as i64 + c_hook
        );
        // And watcher(n) grows by exactly one integer-code unit per n.
        assert_eq!(
            dig_watcher(3).len(),
            w1.len() + 2 * INT_CODE_BITS_PER_UNIT
        );
    }
}
