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
"""Derives the transliterated labels of the LID benchmark.

ckb-latn and kmr-arab have no native source among the catalogues.  The
native ckb-arab and kmr-latn files are split by line parity: even lines stay
in place, odd lines are transliterated with the toolkit CLI and written under
the other script label, so the two labels of a language share no sentence.

Usage: derive_scripts.py --cli build/tools/kurdtk --dir tests/data/lid
"""

import argparse
import os
import subprocess
import tempfile

PAIRS = [("ckb-arab", "ckb-latn", "latn"), ("kmr-latn", "kmr-arab", "arab")]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--dir", required=True)
    args = ap.parse_args()
    for native, derived, script in PAIRS:
        path = os.path.join(args.dir, native + ".jsonl")
        lines = [l for l in open(path, encoding="utf-8") if l.strip()]
        keep, move = lines[0::2], lines[1::2]
        with tempfile.NamedTemporaryFile("w", encoding="utf-8", suffix=".jsonl",
                                         delete=False) as tmp:
            tmp.writelines(move)
        out = os.path.join(args.dir, derived + ".jsonl")
        subprocess.run([args.cli, "-q", "translit", "--dataset", "--to", script,
                        "--label", derived, tmp.name, "-o", out], check=True)
        os.unlink(tmp.name)
        with open(path, "w", encoding="utf-8") as f:
            f.writelines(keep)
        print(f"{native}\t{len(keep)}\n{derived}\t{len(move)}")


if __name__ == "__main__":
    main()
