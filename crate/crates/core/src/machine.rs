//! The reference machine for stopping-complexity estimation.
//!
//! A deterministic bit-oriented interpreter with a one-way input tape, a
//! program tape read in 3-bit instructions, three unbounded counters and a
//! one-bit flag. The instruction table is frozen as ISA version `isa-v1`;
//! the stopping-complexity constants shipped in the constants manifest are
//! measured against exactly this table.
//!
//! Semantics (frozen):
//! - Registers start at `A = B = C = 0`, `FLAG = 1`.
//! - `HALT` stops the machine.
//! - `READ` consumes the next input bit into `FLAG`.
//! - `LOOP` enters its body if `FLAG = 1`, otherwise scans forward past the
//!   matching `END`. `END` unconditionally scans back to its matching `LOOP`,
//!   which re-tests `FLAG`. An `END` with no matching `LOOP` crashes.
//! - `INC` adds one to `A` (flag untouched). `DEC` subtracts one from `A` if
//!   positive and sets `FLAG = 1`, otherwise leaves `A = 0` and sets
//!   `FLAG = 0` (the flag records whether a decrement happened).
//! - `ROT` rotates the counters: `(A, B, C) := (B, C, A)`.
//! - `NOT` flips the flag.
//!
//! Every executed or scanned instruction costs one unit of fuel. The input
//! head never moves left. A halting verdict `U(x, p) halts exactly` requires
//! the machine to halt having read all of `x` and all of `p` and nothing
//! beyond either.

use crate::bits::BitString;

pub const OPCODE_BITS: usize = 3;
pub const ISA_VERSION: &str = "isa-v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Halt = 0,
    Read = 1,
    Loop = 2,
    End = 3,
    Inc = 4,
    Dec = 5,
    Rot = 6,
    Not = 7,
}

impl Op {
    pub const ALL: [Op; 8] = [
        Op::Halt,
        Op::Read,
        Op::Loop,
        Op::End,
        Op::Inc,
        Op::Dec,
        Op::Rot,
        Op::Not,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Op::Halt => "HALT",
            Op::Read => "READ",
            Op::Loop => "LOOP",
            Op::End => "END",
            Op::Inc => "INC",
            Op::Dec => "DEC",
            Op::Rot => "ROT",
            Op::Not => "NOT",
        }
    }

    fn from_code(code: u8) -> Op {
        Op::ALL[code as usize & 7]
    }
}

/// Assembles opcodes into a program bit string (big-endian within each
/// 3-bit instruction).
pub fn assemble(ops: &[Op]) -> BitString {
    let mut p = BitString::with_capacity(ops.len() * OPCODE_BITS);
    for &op in ops {
        let code = op as u8;
        p.push(code & 4 != 0);
        p.push(code & 2 != 0);
        p.push(code & 1 != 0);
    }
    p
}

/// Best-effort listing of a program as instruction names. Dangling bits
/// that do not fill an instruction are printed raw.
pub fn disassemble(p: &BitString) -> String {
    let mut out = Vec::new();
    let mut i = 0;
    while i + OPCODE_BITS <= p.len() {
        let code = (p.bit(i) as u8) << 2 | (p.bit(i + 1) as u8) << 1 | p.bit(i + 2) as u8;
        out.push(Op::from_code(code).name().to_string());
        i += OPCODE_BITS;
    }
    if i < p.len() {
        let mut tail = String::from("+");
        for j in i..p.len() {
            tail.push(if p.bit(j) { '1' } else { '0' });
        }
        out.push(tail);
    }
    out.join(" ")
}

/// Interpreter state. Public fields so that callers can inspect head
/// positions and registers after a run.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MachineState {
    pub pc: u32,
    /// One past the highest program bit read so far.
    pub prog_high: u32,
    /// Number of input bits consumed.
    pub input_pos: u32,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub flag: bool,
    pub fuel_spent: u32,
}

impl MachineState {
    pub fn fresh() -> Self {
        MachineState {
            pc: 0,
            prog_high: 0,
            input_pos: 0,
            a: 0,
            b: 0,
            c: 0,
            flag: true,
            fuel_spent: 0,
        }
    }
}

/// Why `advance` stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pause {
    /// Executed a `HALT`.
    Halted,
    /// The next `READ` needs an input bit that is not available. The state
    /// is left exactly at the `READ`, so execution can resume once more
    /// input exists.
    NeedInput,
    /// A fetch or scan needs a program bit past the end of the program.
    /// Not resumable; enumeration restarts with a longer program.
    NeedProgram,
    /// Unmatched `END`.
    Crashed,
    OutOfFuel,
}

/// Runs until the machine halts, blocks, crashes, or exhausts `fuel`
/// (a cumulative budget checked against `state.fuel_spent`).
pub fn advance(st: &mut MachineState, program: &BitString, input: &BitString, fuel: u32) -> Pause {
    loop {
        if st.fuel_spent >= fuel {
            return Pause::OutOfFuel;
        }
        let pc = st.pc as usize;
        if pc + OPCODE_BITS > program.len() {
            return Pause::NeedProgram;
        }
        let op = fetch(program, pc);
        // READ checks availability before charging fuel so the state stays
        // resumable at the READ itself.
        if op == Op::Read && st.input_pos as usize >= input.len() {
            st.prog_high = st.prog_high.max((pc + OPCODE_BITS) as u32);
            return Pause::NeedInput;
        }
        st.fuel_spent += 1;
        st.prog_high = st.prog_high.max((pc + OPCODE_BITS) as u32);
        match op {
            Op::Halt => {
                st.pc += OPCODE_BITS as u32;
                return Pause::Halted;
            }
            Op::Read => {
                st.flag = input.bit(st.input_pos as usize);
                st.input_pos += 1;
                st.pc += OPCODE_BITS as u32;
            }
            Op::Loop => {
                if st.flag {
                    st.pc += OPCODE_BITS as u32;
                } else {
                    // Scan forward past the matching END.
                    let mut depth = 1u32;
                    let mut spc = pc + OPCODE_BITS;
                    loop {
                        if st.fuel_spent >= fuel {
                            return Pause::OutOfFuel;
                        }
                        if spc + OPCODE_BITS > program.len() {
                            return Pause::NeedProgram;
                        }
                        st.fuel_spent += 1;
                        st.prog_high = st.prog_high.max((spc + OPCODE_BITS) as u32);
                        match fetch(program, spc) {
                            Op::Loop => depth += 1,
                            Op::End => {
                                depth -= 1;
                                if depth == 0 {
                                    break;
                                }
                            }
                            _ => {}
                        }
                        spc += OPCODE_BITS;
                    }
                    st.pc = (spc + OPCODE_BITS) as u32;
                }
            }
            Op::End => {
                // Scan back to the matching LOOP and re-test there.
                let mut depth = 1u32;
                let mut spc = pc as isize - OPCODE_BITS as isize;
                loop {
                    if spc < 0 {
                        return Pause::Crashed;
                    }
                    if st.fuel_spent >= fuel {
                        return Pause::OutOfFuel;
                    }
                    st.fuel_spent += 1;
                    match fetch(program, spc as usize) {
                        Op::End => depth += 1,
                        Op::Loop => {
                            depth -= 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        _ => {}
                    }
                    spc -= OPCODE_BITS as isize;
                }
                st.pc = spc as u32;
            }
            Op::Inc => {
                st.a += 1;
                st.pc += OPCODE_BITS as u32;
            }
            Op::Dec => {
                if st.a > 0 {
                    st.a -= 1;
                    st.flag = true;
                } else {
                    st.flag = false;
                }
                st.pc += OPCODE_BITS as u32;
            }
            Op::Rot => {
                let (a, b, c) = (st.a, st.b, st.c);
                st.a = b;
                st.b = c;
                st.c = a;
                st.pc += OPCODE_BITS as u32;
            }
            Op::Not => {
                st.flag = !st.flag;
                st.pc += OPCODE_BITS as u32;
            }
        }
    }
}

#[inline]
fn fetch(program: &BitString, pc: usize) -> Op {
    let code = (program.bit(pc) as u8) << 2 | (program.bit(pc + 1) as u8) << 1
        | program.bit(pc + 2) as u8;
    Op::from_code(code)
}

/// Classification of a complete run of `program` on `input`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Halted with the input head exactly past the input and the program
    /// head exactly past the program.
    HaltsExactly,
    /// Halted without reading all of the input or the program.
    HaltedShort { input_read: u32, program_read: u32 },
    /// Demanded an input bit beyond the input.
    ReadsPastInput,
    /// Demanded a program bit beyond the program.
    ReadsPastProgram,
    /// Executed an instruction with no defined continuation.
    Crashed,
    /// Exceeded the fuel budget.
    Diverged,
}

impl Verdict {
    pub fn halts_exactly(self) -> bool {
        self == Verdict::HaltsExactly
    }
}

/// Runs `program` on `input` from a fresh state and classifies the result.
pub fn run_machine(input: &BitString, program: &BitString, fuel: u32) -> Verdict {
    run_machine_full(input, program, fuel).0
}

/// As `run_machine`, but also returns the final state so callers can read
/// the flag (predicate verdict convention) and head positions.
pub fn run_machine_full(input: &BitString, program: &BitString, fuel: u32) -> (Verdict, MachineState) {
    let mut st = MachineState::fresh();
    let pause = advance(&mut st, program, input, fuel);
    let v = match pause {
        Pause::Halted => {
            if st.input_pos as usize == input.len() && st.prog_high as usize == program.len() {
                Verdict::HaltsExactly
            } else {
                Verdict::HaltedShort {
                    input_read: st.input_pos,
                    program_read: st.prog_high,
                }
            }
        }
        Pause::NeedInput => Verdict::ReadsPastInput,
        Pause::NeedProgram => Verdict::ReadsPastProgram,
        Pause::Crashed => Verdict::Crashed,
        Pause::OutOfFuel => Verdict::Diverged,
    };
    (v, st)
}

/// The instruction table as text, for the constants manifest.
pub fn instruction_table() -> String {
    let mut s = format!("isa {ISA_VERSION}\n");
    for op in Op::ALL {
        s.push_str(&format!("op {} {}{}{}\n", op.name(), (op as u8) >> 2 & 1, (op as u8) >> 1 & 1, (op as u8) & 1));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use Op::*;

    fn run(ops: &[Op], input: &str, fuel: u32) -> (Verdict, MachineState) {
        run_machine_full(&BitString::parse(input).unwrap(), &assemble(ops), fuel)
    }

    #[test]
    fn immediate_halt_is_exact_on_empty_input() {
        let (v, st) = run(&[Halt], "", 100);
        assert_eq!(v, Verdict::HaltsExactly);
        assert_eq!(st.fuel_spent, 1);
    }

    #[test]
    fn immediate_halt_is_short_on_nonempty_input() {
        let (v, _) = run(&[Halt], "1", 100);
        assert_eq!(v, Verdict::HaltedShort { input_read: 0, program_read: 3 });
    }

    #[test]
    fn read_then_halt_consumes_one_bit() {
        let (v, st) = run(&[Read, Halt], "0", 100);
        assert_eq!(v, Verdict::HaltsExactly);
        assert!(!st.flag);
        let (v, _) = run(&[Read, Halt], "", 100);
        assert_eq!(v, Verdict::ReadsPastInput);
        let (v, _) = run(&[Read, Halt], "01", 100);
        assert_eq!(v, Verdict::HaltedShort { input_read: 1, program_read: 6 });
    }

    #[test]
    fn tight_loop_diverges() {
        // FLAG starts 1, so LOOP..END spins forever.
        let (v, _) = run(&[Loop, End], "", 10_000);
        assert_eq!(v, Verdict::Diverged);
    }

    #[test]
    fn skipped_loop_body_is_scanned_not_executed() {
        // NOT makes FLAG 0; the LOOP scans past READ without consuming input.
        let (v, st) = run(&[Not, Loop, Read, End, Halt], "", 100);
        assert_eq!(v, Verdict::HaltsExactly);
        assert_eq!(st.input_pos, 0);
    }

    #[test]
    fn nested_loops_match_correctly() {
        // Outer skipped entirely; inner LOOP/END counted during the scan.
        let (v, _) = run(&[Not, Loop, Loop, End, Read, End, Halt], "", 100);
        assert_eq!(v, Verdict::HaltsExactly);
    }

    #[test]
    fn unmatched_end_crashes() {
        let (v, _) = run(&[Read, End, Halt], "1", 100);
        assert_eq!(v, Verdict::Crashed);
    }

    #[test]
    fn dec_flag_records_whether_decrement_happened() {
        // DEC on zero: flag false. INC; DEC: flag true, A back to zero.
        let (_, st) = run(&[Dec, Halt], "", 100);
        assert!(!st.flag);
        let (_, st) = run(&[Inc, Dec, Halt], "", 100);
        assert!(st.flag);
        assert_eq!(st.a, 0);
    }

    #[test]
    fn rot_cycles_counters() {
        // A=2, rotate twice: value ends in B.
        let (_, st) = run(&[Inc, Inc, Rot, Rot, Halt], "", 100);
        assert_eq!((st.a, st.b, st.c), (0, 2, 0));
    }

    #[test]
    fn dangling_bits_never_execute() {
        let mut p = assemble(&[Read, Halt]);
        p.push(true); // 7th bit: HALT fetch already done before it is reached
        let (v, _) = run_machine_full(&BitString::parse("1").unwrap(), &p, 100);
        // Halted with prog_high = 6 < 7.
        assert_eq!(v, Verdict::HaltedShort { input_read: 1, program_read: 6 });
    }

    #[test]
    fn count_program_reads_exactly_n_bits() {
        // INC^n LOOP READ DEC DEC INC END HALT reads exactly n bits.
        for n in 1..6 {
            let mut ops = vec![Inc; n];
            ops.extend_from_slice(&[Loop, Read, Dec, Dec, Inc, End, Halt]);
            let input: String = "10".repeat(n)[..n].to_string();
            let (v, st) = run(&ops, &input, 10_000);
            assert_eq!(v, Verdict::HaltsExactly, "n={n}");
            assert_eq!(st.input_pos as usize, n);
            // One extra input bit makes it short; one fewer blocks.
            let (v, _) = run(&ops, &format!("{input}0"), 10_000);
            assert!(matches!(v, Verdict::HaltedShort { .. }));
            let (v, _) = run(&ops, &input[..n - 1], 10_000);
            assert_eq!(v, Verdict::ReadsPastInput);
        }
    }
}
