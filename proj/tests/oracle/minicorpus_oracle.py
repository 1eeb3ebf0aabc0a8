#!/usr/bin/env python3
# Copyright 2026 The lexvar Authors
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
"""Independent re-derivation of the mini-corpus golden reports.

Shares no code with the C++ library: own CSV handling (csv module), own
sound-class lookup, alignment scores by memoized recursion over all global
alignments, exact rational arithmetic throughout. Prints every slot so the
values can be checked by hand, then writes the expected report tables.

usage: minicorpus_oracle.py <model.tsv> <minicorpus dir> <out dir>
"""
import csv
import math
import os
import sys
from fractions import Fraction
from functools import lru_cache

TONE = set("˥˦˧˨˩¹²³⁴⁵12345")


def read_model(path):
    prefixes, header, rows, gap, section = {}, None, {}, None, None
    for line in open(path, encoding="utf-8").read().split("\n"):
        s = line.strip()
        if s in ("#classes", "#scores", "#gap"):
            section = s
            continue
        if not s or s.startswith("#"):
            continue
        if section == "#classes":
            p, c = line.split("\t")
            prefixes[p] = c
        elif section == "#scores":
            cells = line.split("\t")
            if header is None:
                header = cells[1:]
            else:
                rows[cells[0]] = dict(zip(header, map(Fraction, cells[1:])))
        else:
            gap = Fraction(s)
    return prefixes, rows, gap


PREFIXES, SCORES, GAP = read_model(sys.argv[1])


def klass(token):
    for n in range(len(token), 0, -1):
        if token[:n] in PREFIXES:
            return PREFIXES[token[:n]]
    return "?"


def score(a, b):
    if a == "?" or b == "?":
        return Fraction(0)
    return SCORES[a][b]


def best_alignment(x, y):
    @lru_cache(maxsize=None)
    def go(i, j):
        if i == len(x) and j == len(y):
            return Fraction(0)
        options = []
        if i < len(x) and j < len(y):
            options.append(score(x[i], y[j]) + go(i + 1, j + 1))
        if i < len(x):
            options.append(GAP + go(i + 1, j))
        if j < len(y):
            options.append(GAP + go(i, j + 1))
        return max(options)
    return go(0, 0)


def sca(a, b):
    if a == b:
        return Fraction(0)
    x = tuple(klass(t) for t in a)
    y = tuple(klass(t) for t in b)
    self_ = best_alignment(x, x) + best_alignment(y, y)
    d = 1 - 2 * best_alignment(x, y) / self_
    return min(max(d, Fraction(0)), Fraction(1))


def lev(a, b):
    @lru_cache(maxsize=None)
    def go(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        return min(go(i - 1, j) + 1, go(i, j - 1) + 1,
                   go(i - 1, j - 1) + (a[i - 1] != b[j - 1]))
    return go(len(a), len(b))


def parse(seg):
    toks = [t for t in seg.split() if t != "+" and not set(t) <= TONE]
    return tuple(toks)


def load(d):
    langs = list(csv.DictReader(open(os.path.join(d, "languages.csv"), encoding="utf-8")))
    params = {r["ID"]: r["Concepticon_ID"] for r in
              csv.DictReader(open(os.path.join(d, "parameters.csv"), encoding="utf-8"))}
    slots = {}
    for r in csv.DictReader(open(os.path.join(d, "forms.csv"), encoding="utf-8")):
        cid = params[r["Parameter_ID"]]
        toks = parse(r["Segments"])
        if not cid or not toks:
            continue
        slots.setdefault(r["Language_ID"], {}).setdefault(cid, []).append(toks)
    return langs, slots


def compare(sa, sb, label):
    shared = sorted(set(sa) & set(sb))
    totals = [Fraction(0)] * 5
    for c in shared:
        pairs = [(a, b) for a in sa[c] for b in sb[c]]
        n = len(pairs)
        ident = Fraction(sum(a == b for a, b in pairs), n)
        d = [sca(a, b) for a, b in pairs]
        sim = Fraction(sum(a == b or x < Fraction(1, 2) for (a, b), x in zip(pairs, d)), n)
        s = sum(d) / n
        ned = sum(Fraction(lev(a, b), max(len(a), len(b))) for a, b in pairs) / n
        ed = Fraction(sum(lev(a, b) for a, b in pairs), n)
        vals = [ident, sim, s, ned, ed]
        print(f"  {label} {c}: " + " ".join(f"{v}" for v in vals))
        totals = [t + v for t, v in zip(totals, vals)]
    return len(shared), [t / len(shared) for t in totals]


def fmt(v):
    f = float(v)
    # Refuse values whose rounding depends on the last bits.
    third = abs(f * 100 - math.floor(f * 100) - 0.5)
    assert third > 1e-6, f"rounding tie at {v}"
    return "%.2f" % f


def summary(name, means):
    n = len(means)
    cells = [name, str(n)]
    for k in range(5):
        xs = [m[k] for m in means]
        mu = sum(xs) / n
        var = sum((x - mu) ** 2 for x in xs) / n
        cells += [fmt(mu), fmt(math.sqrt(var))]
    return "\t".join(cells)


def run(root, mode, out):
    groups = [("Koreanic", "koreanic_a", "koreanic_b", "koreanic.pairs"),
              ("Romance", "romance_a", "romance_b", "romance.pairs")]
    group_rows, pair_rows, pooled = [], [], []
    for name, da, db, pf in groups:
        la, sa = load(os.path.join(root, da))
        lb, sb = load(os.path.join(root, db))
        if mode == "glottocode":
            pairs = [(a["ID"], b["ID"]) for a in la for b in lb
                     if a["Glottocode"] and a["Glottocode"] == b["Glottocode"]]
        else:
            pairs = [tuple(l.split("\t")) for l in open(os.path.join(root, pf)).read().split("\n")
                     if l.strip() and not l.startswith("#")]
        pairs.sort()
        means = []
        for a, b in pairs:
            n, m = compare(sa[a], sb[b], f"{a}/{b}")
            means.append(m)
            pair_rows.append("\t".join([name, f"{a}/{b}", a, b, mode, str(n)] + [fmt(v) for v in m]))
        group_rows.append(summary(name, means))
        pooled += means
    group_rows.append(summary("TOTAL", pooled))
    header = "Group\tPairs\tIdentical\tSTD\tSimilar\tSTD\tSCA\tSTD\tNED\tSTD\tED\tSTD"
    with open(os.path.join(out, f"groups_{mode}.rows.tsv"), "w") as f:
        f.write(header + "\n" + "\n".join(group_rows) + "\n")
    with open(os.path.join(out, f"pairs_{mode}.tsv"), "w") as f:
        f.write("Group\tPair\tVariety_A\tVariety_B\tOrigin\tConcepts\tIdentical\tSimilar\tSCA\tNED\tED\n")
        f.write("\n".join(pair_rows) + "\n")


if __name__ == "__main__":
    os.makedirs(sys.argv[3], exist_ok=True)
    for mode in ("glottocode", "manual"):
        print(mode)
        run(sys.argv[2], mode, sys.argv[3])
