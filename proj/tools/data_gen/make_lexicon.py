#!/usr/bin/env python3
# Copyright 2026 The kurdtk Authors.
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
"""Builds the Latin round-trip lexicon from native Kurmanji sentences.

A word qualifies when it is written only with letters whose Perso-Arabic
spelling is unambiguous: no i (unwritten), u/w/û and î/y pairs (shared
letters), h (shares ه with e) and no rr/ll digraph.

Usage: make_lexicon.py tests/data/lid/kmr-latn.jsonl data/translit/roundtrip-lexicon.txt
"""

import json
import re
import sys

ALPHABET = set("abcçdeêfgjklmnopqrsştûvxz") - {"u", "w", "î", "y", "h", "i"}


def main():
    src, dst = sys.argv[1], sys.argv[2]
    words = set()
    for line in open(src, encoding="utf-8"):
        if line.strip():
            words.update(re.findall(r"\w+", json.loads(line)["text"].lower()))
    keep = sorted(w for w in words
                  if len(w) >= 2 and set(w) <= ALPHABET
                  and "rr" not in w and "ll" not in w)
    with open(dst, "w", encoding="utf-8") as f:
        f.write("# Latin words with an unambiguous Perso-Arabic spelling.\n")
        f.write("# Generated by tools/data_gen/make_lexicon.py.\n")
        f.writelines(w + "\n" for w in keep)
    print(len(keep))


if __name__ == "__main__":
    main()
