#!/usr/bin/env python3
"""Generates core/src/unicode_tables.inc from Python's unicodedata.

Covers canonical decompositions (excluding Hangul syllables, which the
toolkit does not need), canonical composition pairs, nonzero combining
classes and simple lowercase mappings.
"""
import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_BASE, HANGUL_END = 0xAC00, 0xD7A4


def main(out_path):
    decomp = []     # (cp, d1, d2) d2 == 0 for singleton decompositions
    ccc = []        # (cp, class)
    compose = []    # (d1, d2, cp)
    lower = []      # (cp, lower_cp)
    for cp in range(MAX_CP):
        if HANGUL_BASE <= cp < HANGUL_END:
            continue
        ch = chr(cp)
        cc = unicodedata.combining(ch)
        if cc:
            ccc.append((cp, cc))
        d = unicodedata.decomposition(ch)
        if d and not d.startswith('<'):
            parts = [int(p, 16) for p in d.split()]
            if len(parts) == 1:
                decomp.append((cp, parts[0], 0))
            elif len(parts) == 2:
                decomp.append((cp, parts[0], parts[1]))
                # pair is primary-composable iff NFC maps the sequence back
                if unicodedata.combining(chr(parts[0])) == 0:
                    seq = chr(parts[0]) + chr(parts[1])
                    if unicodedata.normalize('NFC', seq) == ch:
                        compose.append((parts[0], parts[1], cp))
        lo = ch.lower()
        if len(lo) == 1 and lo != ch:
            lower.append((cp, ord(lo)))

    compose.sort()
    with open(out_path, 'w') as f:
        f.write('// Generated by scripts/gen_unicode_tables.py. Do not edit.\n\n')
        f.write('static const DecompEntry kDecompTable[] = {\n')
        for cp, d1, d2 in decomp:
            f.write('  {0x%X, 0x%X, 0x%X},\n' % (cp, d1, d2))
        f.write('};\n\n')
        f.write('static const CccEntry kCccTable[] = {\n')
        for cp, cc in ccc:
            f.write('  {0x%X, %d},\n' % (cp, cc))
        f.write('};\n\n')
        f.write('static const ComposeEntry kComposeTable[] = {\n')
        for d1, d2, cp in compose:
            f.write('  {0x%X, 0x%X, 0x%X},\n' % (d1, d2, cp))
        f.write('};\n\n')
        f.write('static const LowerEntry kLowerTable[] = {\n')
        for cp, lo in lower:
            f.write('  {0x%X, 0x%X},\n' % (cp, lo))
        f.write('};\n')
    print('decomp=%d ccc=%d compose=%d lower=%d' %
          (len(decomp), len(ccc), len(compose), len(lower)))


if __name__ == '__main__':
    main(sys.argv[1] if len(sys.argv) > 1 else 'core/src/unicode_tables.inc')
