#!/usr/bin/env python3
# Copyright 2026 The r2c Authors
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
"""Trains byte-level BPE merges and counts tokens with them.

  train_bpe.py train --merges 2000 --out data/bpe/merges.txt CORPUS...
  train_bpe.py count --merges-file data/bpe/merges.txt FILE

The pre-tokenizer and merge loop mirror the C++ BpeCounter; `count` is kept
separate from the library so golden values are checked independently.
"""

import argparse
import collections
import sys

SPACE = b" \t\n\v\f\r"


def classify(b):
    if b in SPACE:
        return "space"
    if b >= 0x80 or (0x41 <= b <= 0x5A) or (0x61 <= b <= 0x7A):
        return "letter"
    if 0x30 <= b <= 0x39:
        return "digit"
    return "other"


def pretokenize(data):
    pieces = []
    i, n = 0, len(data)
    while i < n:
        cls = classify(data[i])
        j = i
        while j < n and classify(data[j]) == cls:
            j += 1
        if cls == "space" and j < n and data[j - 1] == 0x20:
            if j - 1 > i:
                pieces.append(data[i:j - 1])
            nxt = classify(data[j])
            k = j
            while k < n and classify(data[k]) == nxt:
                k += 1
            pieces.append(data[j - 1:k])
            i = k
        else:
            pieces.append(data[i:j])
            i = j
    return pieces


def escape(token):
    out = []
    for b in token:
        if b == 0x20:
            out.append("\\s")
        elif b == 0x0A:
            out.append("\\n")
        elif b == 0x09:
            out.append("\\t")
        elif b == 0x0D:
            out.append("\\r")
        elif b == 0x5C:
            out.append("\\\\")
        elif 0x20 < b < 0x7F:
            out.append(chr(b))
        else:
            out.append("\\x%02x" % b)
    return "".join(out)


def unescape(text):
    out = bytearray()
    i = 0
    simple = {"s": 0x20, "n": 0x0A, "t": 0x09, "r": 0x0D, "\\": 0x5C}
    while i < len(text):
        c = text[i]
        if c != "\\":
            out += c.encode("latin-1")
            i += 1
            continue
        e = text[i + 1]
        if e == "x":
            out.append(int(text[i + 2:i + 4], 16))
            i += 4
        else:
            out.append(simple[e])
            i += 2
    return bytes(out)


def merge_word(word, pair, merged):
    out = []
    k = 0
    while k < len(word):
        if k + 1 < len(word) and word[k] == pair[0] and word[k + 1] == pair[1]:
            out.append(merged)
            k += 2
        else:
            out.append(word[k])
            k += 1
    return tuple(out)


def train(data, n_merges):
    words = collections.Counter(
        tuple(bytes([b]) for b in p) for p in pretokenize(data))
    merges = []
    for _ in range(n_merges):
        pairs = collections.Counter()
        for word, freq in words.items():
            for a, b in zip(word, word[1:]):
                pairs[(a, b)] += freq
        if not pairs:
            break
        # Highest frequency; ties broken by byte order for reproducibility.
        best = min(pairs, key=lambda p: (-pairs[p], p))
        merged = best[0] + best[1]
        merges.append(best)
        words = collections.Counter(
            {merge_word(w, best, merged): f for w, f in words.items()})
    return merges


def load_merges(path):
    merges = []
    with open(path, encoding="latin-1") as f:
        for line in f:
            line = line.rstrip("\r\n")
            if not line or line.startswith("#"):
                continue
            left, right = line.split(" ")
            merges.append((unescape(left), unescape(right)))
    return merges


def encode_piece(piece, ranks):
    word = [bytes([b]) for b in piece]
    while len(word) > 1:
        best = None
        for a, b in zip(word, word[1:]):
            r = ranks.get((a, b))
            if r is not None and (best is None or r < best[0]):
                best = (r, (a, b))
        if best is None:
            break
        word = list(merge_word(word, best[1], best[1][0] + best[1][1]))
    return word


def count(data, merges):
    ranks = {}
    for rank, pair in enumerate(merges):
        ranks.setdefault(pair, rank)
    return sum(len(encode_piece(p, ranks)) for p in pretokenize(data))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    sub = parser.add_subparsers(dest="cmd", required=True)
    t = sub.add_parser("train")
    t.add_argument("--merges", type=int, default=2000)
    t.add_argument("--out", required=True)
    t.add_argument("corpus", nargs="+")
    c = sub.add_parser("count")
    c.add_argument("--merges-file", required=True)
    c.add_argument("file")
    args = parser.parse_args()

    if args.cmd == "train":
        data = b"".join(open(p, "rb").read() for p in args.corpus)
        merges = train(data, args.merges)
        with open(args.out, "w", encoding="latin-1", newline="\n") as f:
            f.write("#version: r2c-bpe/1\n")
            for a, b in merges:
                f.write("%s %s\n" % (escape(a), escape(b)))
        print("wrote %d merges to %s" % (len(merges), args.out))
    else:
        merges = load_merges(args.merges_file)
        print(count(open(args.file, "rb").read(), merges))


if __name__ == "__main__":
    sys.exit(main())
