#!/usr/bin/env python3
"""Smoke test for the issforge Python bindings.

Builds nothing itself: run `cargo build -p issforge-py` first, then
`python3 python/smoke_test.py`. The script locates the compiled extension
in target/, stages it under an importable name, and exercises the main
operations end to end.
"""

import shutil
import sys
import sysconfig
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def stage_extension() -> Path:
    candidates = [
        REPO / "target" / profile / name
        for profile in ("debug", "release")
        for name in ("libissforge.so", "issforge.dll", "libissforge.dylib")
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("extension not built; run `cargo build -p issforge-py` first")
    stage = Path(tempfile.mkdtemp(prefix="issforge-py-"))
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy2(built, stage / f"issforge{suffix}")
    return stage


sys.path.insert(0, str(stage_extension()))

import issforge  # noqa: E402

print(f"issforge {issforge.version()}")

tc = issforge.Toolchain()

# The corpus parsed and linked.
names = tc.instruction_names()
assert "ADC" in names and "LDM" in names and "HALT" in names, names
assert len(tc.flat_names()) == 51, len(tc.flat_names())
assert tc.candidate_count() > len(tc.flat_names())
print(f"corpus: {len(names)} instructions, {len(tc.flat_names())} flat, "
      f"{tc.candidate_count()} decoder candidates")

# Decode and print: ADCS R1,R2,R3,LSL #4 (cond=AL).
word = (14 << 28) | (0b0101 << 21) | (1 << 20) | (2 << 16) | (1 << 12) | (4 << 7) | 3
d = tc.decode(word)
assert d["kind"] == "instr", d
assert d["base"] == "ADC_lsl_imm", d
assert d["asm"] == "ADCS R1,R2,R3,LSL #4", d
assert d["params"]["d"] == 1 and d["params"]["n"] == 2
assert tc.disasm(0xFFFFFFFF) == "<undefined>"
print(f"decode: {d['name']} -> {d['asm']}")

# May-branch conditions drive the block cache.
assert tc.may_branch("LDR_pre_reg") == "d == 15"
assert tc.may_branch("B") == "1"
assert tc.may_branch("STR_off_imm") == "0"

# The decode/print round-trip diffs clean.
words, mismatches = tc.roundtrip(budget=128)
assert mismatches == 0, f"{mismatches} round-trip mismatches"
print(f"roundtrip: {words} words, 0 mismatches")

# Both back-ends run the loop benchmark to the same result.
entry, program = tc.benchmark("loop")
fast = tc.run(program, entry=entry, engine="fast")
interp = tc.run(program, entry=entry, engine="interp")
assert fast["stop"] == "halted" and interp["stop"] == "halted"
assert fast["executed"] == interp["executed"]
assert fast["regs"] == interp["regs"]
assert fast["profile"] == interp["profile"]
assert fast["regs"][0] == 250 * 250, fast["regs"][0]
print(f"loop benchmark: {fast['executed']} instructions on both engines, "
      f"R0 = {fast['regs'][0]}")

# The block cache removes decode work on re-execution.
assert fast["decodes"] < fast["executed"]

print("smoke test passed")
