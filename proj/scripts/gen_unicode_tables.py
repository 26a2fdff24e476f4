#!/usr/bin/env python3
"""Regenerates include/cxrval/detail/unicode_tables.hpp.

Covers the Latin repertoire used by Vietnamese clinical text: Latin-1
Supplement, Latin Extended-A/B and Latin Extended Additional, plus the
combining diacritical marks block. Tables: full canonical decomposition,
primary composition pairs, combining classes, and simple lowercase map.
"""

import sys
import unicodedata

LETTER_RANGES = [
    (0x00C0, 0x024F),  # Latin-1 Supplement letters, Extended-A, Extended-B
    (0x1E00, 0x1EFF),  # Latin Extended Additional (incl. Vietnamese)
]
MARK_RANGE = (0x0300, 0x036F)


def letters():
    for lo, hi in LETTER_RANGES:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            if unicodedata.category(ch).startswith("L"):
                yield cp


def full_decomposition(cp):
    nfd = unicodedata.normalize("NFD", chr(cp))
    return [ord(c) for c in nfd]


def main(out_path):
    decomp = {}
    for cp in letters():
        d = full_decomposition(cp)
        if d != [cp]:
            if len(d) > 3:
                raise SystemExit(f"decomposition of U+{cp:04X} longer than 3")
            decomp[cp] = d

    comp = {}
    for cp in decomp:
        # Primary composites only: NFC of the two-codepoint NFD prefix must
        # recompose. Build pairs for every adjacent (starter, mark) step so
        # that incremental composition reaches the full character.
        seq = decomp[cp]
        acc = seq[0]
        for mark in seq[1:]:
            fused = unicodedata.normalize("NFC", chr(acc) + chr(mark))
            if len(fused) == 1:
                comp[(acc, mark)] = ord(fused)
                acc = ord(fused)
            else:
                break

    ccc = {}
    for cp in range(MARK_RANGE[0], MARK_RANGE[1] + 1):
        c = unicodedata.combining(chr(cp))
        if c:
            ccc[cp] = c

    lower = {}
    for cp in list(letters()) + [c for c in range(0x41, 0x5B)]:
        lo = chr(cp).lower()
        if len(lo) == 1 and ord(lo) != cp:
            lower[cp] = ord(lo)

    with open(out_path, "w", encoding="utf-8") as f:
        w = f.write
        w("// Generated by scripts/gen_unicode_tables.py -- do not edit.\n")
        w("// Canonical decomposition/composition data for Latin text with\n")
        w("// combining diacritics (Vietnamese repertoire and Western Latin).\n")
        w("#pragma once\n\n")
        w("#include <cstdint>\n\n")
        w("namespace cxrval::detail {\n\n")

        w("struct decomp_entry { char32_t cp; char32_t seq[3]; std::uint8_t len; };\n")
        w("inline constexpr decomp_entry decomposition_table[] = {\n")
        for cp in sorted(decomp):
            seq = decomp[cp] + [0] * (3 - len(decomp[cp]))
            w(f"    {{0x{cp:04X}, {{0x{seq[0]:04X}, 0x{seq[1]:04X}, 0x{seq[2]:04X}}}, {len(decomp[cp])}}},\n")
        w("};\n\n")

        w("struct comp_entry { std::uint64_t key; char32_t composed; };\n")
        w("inline constexpr comp_entry composition_table[] = {\n")
        for (a, b) in sorted(comp):
            key = (a << 21) | b
            w(f"    {{0x{key:011X}, 0x{comp[(a, b)]:04X}}},  // U+{a:04X} + U+{b:04X}\n")
        w("};\n\n")

        w("struct ccc_entry { char32_t cp; std::uint8_t ccc; };\n")
        w("inline constexpr ccc_entry combining_class_table[] = {\n")
        for cp in sorted(ccc):
            w(f"    {{0x{cp:04X}, {ccc[cp]}}},\n")
        w("};\n\n")

        w("struct lower_entry { char32_t cp; char32_t lower; };\n")
        w("inline constexpr lower_entry lowercase_table[] = {\n")
        for cp in sorted(lower):
            w(f"    {{0x{cp:04X}, 0x{lower[cp]:04X}}},\n")
        w("};\n\n")
        w("}  // namespace cxrval::detail\n")

    print(f"wrote {out_path}: {len(decomp)} decompositions, {len(comp)} pairs, "
          f"{len(ccc)} combining classes, {len(lower)} lowercase mappings")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/cxrval/detail/unicode_tables.hpp")
