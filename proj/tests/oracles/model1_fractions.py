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

"""Exact Model 1 EM on the two-sentence toy corpus, in rationals.

Prints the translation table after each iteration. The values frozen in
align_test.cc and the acceptance binary were produced by this script.
"""

from fractions import Fraction

CORPUS = [(["das", "haus"], ["the", "house"]), (["das", "buch"], ["the", "book"])]
NULL = "<NULL>"


def initial_table():
    cooc = {}
    for src, tgt in CORPUS:
        for t in tgt:
            for s in [NULL] + src:
                cooc.setdefault(s, set()).add(t)
    return {s: {t: Fraction(1, len(ts)) for t in ts} for s, ts in cooc.items()}


def em_step(table):
    counts = {}
    for src, tgt in CORPUS:
        for t in tgt:
            denom = sum(table[s][t] for s in [NULL] + src)
            for s in [NULL] + src:
                counts.setdefault(s, {}).setdefault(t, Fraction(0))
                counts[s][t] += table[s][t] / denom
    return {s: {t: c / sum(row.values()) for t, c in row.items()}
            for s, row in counts.items()}


def main():
    table = initial_table()
    for iteration in (1, 2):
        table = em_step(table)
        print(f"# after iteration {iteration}")
        for s in sorted(table):
            for t in sorted(table[s]):
                v = table[s][t]
                print(f"{s}\t{t}\t{v}\t{float(v):.17g}")


if __name__ == "__main__":
    main()
