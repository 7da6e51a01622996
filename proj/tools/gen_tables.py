#!/usr/bin/env python3
# Copyright 2026 The Forge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates data/translit_am.tsv.

With --folds, prints the homophone rows of data/norm_am.tsv instead.
"""

import os
import sys
import unicodedata

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")

# Homophone series folded into their canonical series, all seven vowel
# orders. The eighth column is folded only where both sides carry the same
# kind of syllable.
HOMOPHONE_SERIES = [
    (0x1210, 0x1200, "HHA -> HA"),
    (0x1280, 0x1200, "XA -> HA"),
    (0x1220, 0x1230, "SZA -> SA"),
    (0x12D0, 0x12A0, "PHARYNGEAL A -> GLOTTAL A"),
    (0x1340, 0x1338, "TZA -> TSA"),
]

EXTRA_FOLDS = [
    (0x1217, 0x128B),  # HHWA -> XWAA
    (0x1287, 0x1207),  # XOA -> HOA
    (0x1227, 0x1237),  # SZWA -> SWA
    # Sixth-order labiovelars written interchangeably with the second order.
    (0x124D, 0x1241),  # QWE -> QU
    (0x128D, 0x1201),  # XWE -> HU
    (0x12B5, 0x12A9),  # KWE -> KU
    (0x1315, 0x1309),  # GWE -> GU
]

# Canonical consonant series for romanization: base codepoint, consonant
# letters. Consonant parts never contain a vowel letter, so every image
# splits uniquely into consonant part + vowel part; the vowel codes are
# prefix-free, hence so is the whole code.
SERIES = [
    (0x1200, "h"), (0x1208, "l"), (0x1218, "m"), (0x1228, "r"),
    (0x1230, "s"), (0x1238, "sh"), (0x1240, "q"), (0x1260, "b"),
    (0x1268, "v"), (0x1270, "t"), (0x1278, "ch"), (0x1290, "n"),
    (0x1298, "ny"), (0x12A0, ""), (0x12A8, "k"), (0x12B8, "kh"),
    (0x12C8, "w"), (0x12D8, "z"), (0x12E0, "zh"), (0x12E8, "y"),
    (0x12F0, "d"), (0x1300, "j"), (0x1308, "g"), (0x1320, "tx"),
    (0x1328, "cx"), (0x1330, "px"), (0x1338, "ts"), (0x1348, "f"),
    (0x1350, "p"),
]

# Vowel orders 1..8. Every vowel code is a single vowel letter except the
# labialized eighth order, which carries the modifier letter U+02B7.
VOWELS = ["a", "u", "i", "\u0101", "\u0113", "e", "o", "\u02b7\u0101"]

# Labiovelar blocks: base codepoint, consonant letters. Offsets 0,2,3,4 are
# the canonical members (offset 5 is folded to the second order).
LABIOVELARS = [(0x1248, "q\u02b7"), (0x1288, "h\u02b7"), (0x12B0, "k\u02b7"),
               (0x1310, "g\u02b7")]
LABIOVELAR_ORDERS = {0: "a", 2: "i", 3: "\u0101", 4: "\u0113"}

PUNCTUATION = [(0x1362, "."), (0x1363, ","), (0x1364, ";"), (0x1365, ":")]


def is_assigned(cp):
    return unicodedata.name(chr(cp), None) is not None


def homophone_rows():
    rows = []
    for src, dst, label in HOMOPHONE_SERIES:
        rows.append(("# " + label, None))
        for order in range(7):
            rows.append((chr(src + order), chr(dst + order)))
    rows.append(("# eighth-column and labiovelar folds", None))
    for src, dst in EXTRA_FOLDS:
        rows.append((chr(src), chr(dst)))
    return rows


def translit_rows():
    rows = []
    for base, consonant in SERIES:
        for order, vowel in enumerate(VOWELS):
            cp = base + order
            if not is_assigned(cp):
                continue
            name = unicodedata.name(chr(cp))
            if order == 7 and not (name.endswith("WA") and "OA" not in name):
                continue
            rows.append((chr(cp), consonant + vowel))
    for base, consonant in LABIOVELARS:
        for offset, vowel in LABIOVELAR_ORDERS.items():
            rows.append((chr(base + offset), consonant + vowel))
    for cp, image in PUNCTUATION:
        rows.append((chr(cp), image))
    return rows


def write(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        out.write(header)
        for left, right in rows:
            if right is None:
                out.write(left + "\n")
            else:
                out.write(left + "\t" + right + "\n")


def main():
    if len(sys.argv) > 1 and sys.argv[1] == "--folds":
        for left, right in homophone_rows():
            print(left if right is None else left + "\t" + right)
        return 0
    write(os.path.join(DATA, "translit_am.tsv"),
          "# Ethiopic -> Latin romanization (generated by tools/gen_tables.py)\n"
          "# ethiopic<TAB>latin; images form a prefix-free code.\n",
          translit_rows())
    return 0


if __name__ == "__main__":
    sys.exit(main())
